//! Canonical keys, isomorphism testing and automorphism counting by
//! brute-force permutation search.
//!
//! The search is restricted to bijections that respect an
//! isomorphism-invariant vertex colouring obtained by iterated refinement of
//! the degree profile. The colouring only prunes; the key itself is the
//! lexicographically smallest sorted edge-mask list over all admissible
//! relabellings, so two hypergraphs get the same key exactly when they are
//! isomorphic.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::{all_labelled, Hypergraph, VertexSet};

/// Default vertex cap for canonicalisation and automorphism counting.
pub const CANON_CAP: usize = 10;

/// Byte string identifying an isomorphism class: vertex count followed by the
/// minimal sorted edge-mask list, each mask big-endian.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    fn from_edges(n: usize, edges: &[u64]) -> CanonicalKey {
        let mut bytes = Vec::with_capacity(1 + 8 * edges.len());
        bytes.push(n as u8);
        for e in edges {
            bytes.extend_from_slice(&e.to_be_bytes());
        }
        CanonicalKey(bytes)
    }
}

impl core::fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str("CanonicalKey(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        f.write_str(")")
    }
}

fn check_cap(h: &Hypergraph, cap: usize) -> Result<()> {
    if h.vertex_count() > cap {
        Err(Error::SizeCap { what: "canonicalisation", size: h.vertex_count(), cap })
    } else {
        Ok(())
    }
}

/// Stable vertex colouring: rank of each vertex's refined signature.
fn refined_colours(h: &Hypergraph) -> Vec<usize> {
    let n = h.vertex_count();
    let mut colour = ranks(
        (0..n)
            .map(|v| {
                let mut sizes: Vec<usize> =
                    h.edges().iter().filter(|e| e.contains(v)).map(|e| e.len()).collect();
                sizes.sort_unstable();
                sizes
            })
            .collect(),
    );
    let mut classes = count_classes(&colour);
    loop {
        let edge_sigs: Vec<Vec<usize>> = h
            .edges()
            .iter()
            .map(|e| {
                let mut s: Vec<usize> = e.iter().map(|v| colour[v]).collect();
                s.sort_unstable();
                s
            })
            .collect();
        let sigs: Vec<(usize, Vec<Vec<usize>>)> = (0..n)
            .map(|v| {
                let mut inc: Vec<Vec<usize>> = h
                    .edges()
                    .iter()
                    .zip(&edge_sigs)
                    .filter(|(e, _)| e.contains(v))
                    .map(|(_, s)| s.clone())
                    .collect();
                inc.sort();
                (colour[v], inc)
            })
            .collect();
        let next = ranks(sigs);
        let next_classes = count_classes(&next);
        colour = next;
        if next_classes == classes {
            return colour;
        }
        classes = next_classes;
    }
}

fn ranks<T: Ord + Clone>(sigs: Vec<T>) -> Vec<usize> {
    let mut sorted = sigs.clone();
    sorted.sort();
    sorted.dedup();
    sigs.iter().map(|s| sorted.binary_search(s).unwrap()).collect()
}

fn count_classes(colour: &[usize]) -> usize {
    colour.iter().max().map_or(0, |m| m + 1)
}

/// Canonical key with the default cap of [`CANON_CAP`] vertices.
pub fn canonical_key(h: &Hypergraph) -> Result<CanonicalKey> {
    canonical_key_with_cap(h, CANON_CAP)
}

pub fn canonical_key_with_cap(h: &Hypergraph, cap: usize) -> Result<CanonicalKey> {
    check_cap(h, cap)?;
    let n = h.vertex_count();
    let colour = refined_colours(h);
    // positions are handed out cell by cell in colour order
    let mut position_colour: Vec<usize> = colour.clone();
    position_colour.sort_unstable();

    let mut best: Option<Vec<u64>> = None;
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut scratch = Vec::with_capacity(h.edge_count());
    search_bijections(0, &position_colour, &colour, &mut perm, &mut used, &mut |perm| {
        scratch.clear();
        scratch.extend(h.edges().iter().map(|e| e.map(perm).bits()));
        scratch.sort_unstable();
        if best.as_ref().map_or(true, |b| scratch < *b) {
            best = Some(scratch.clone());
        }
    });
    Ok(CanonicalKey::from_edges(n, &best.unwrap_or_default()))
}

/// Visit every bijection `perm: vertex -> position` with
/// `colour[v] == position_colour[perm[v]]`.
fn search_bijections(
    position: usize,
    position_colour: &[usize],
    colour: &[usize],
    perm: &mut [usize],
    used: &mut [bool],
    visit: &mut dyn FnMut(&[usize]),
) {
    if position == position_colour.len() {
        visit(perm);
        return;
    }
    for v in 0..colour.len() {
        if !used[v] && colour[v] == position_colour[position] {
            used[v] = true;
            perm[v] = position;
            search_bijections(position + 1, position_colour, colour, perm, used, visit);
            used[v] = false;
        }
    }
}

/// The relabelling of `h` realising its canonical key.
pub fn canonical_form(h: &Hypergraph) -> Result<Hypergraph> {
    let key = canonical_key(h)?;
    let edges = key.0[1..]
        .chunks(8)
        .map(|c| VertexSet(u64::from_be_bytes(c.try_into().unwrap())));
    Hypergraph::new(h.vertex_count(), edges)
}

/// Number of permutations of `V(H)` mapping `E(H)` onto itself.
pub fn count_automorphisms(h: &Hypergraph) -> Result<u64> {
    check_cap(h, CANON_CAP)?;
    let n = h.vertex_count();
    let colour = refined_colours(h);
    // edges grouped by their largest vertex, checked as soon as it is mapped
    let mut closing: Vec<Vec<VertexSet>> = vec![Vec::new(); n];
    for &e in h.edges() {
        closing[e.max().unwrap()].push(e);
    }
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(count_automorphisms_from(0, h, &colour, &closing, &mut image, &mut used))
}

fn count_automorphisms_from(
    v: usize,
    h: &Hypergraph,
    colour: &[usize],
    closing: &[Vec<VertexSet>],
    image: &mut [usize],
    used: &mut [bool],
) -> u64 {
    if v == colour.len() {
        return 1;
    }
    let mut total = 0;
    for w in 0..colour.len() {
        if used[w] || colour[w] != colour[v] {
            continue;
        }
        image[v] = w;
        if closing[v].iter().all(|e| h.has_edge(e.map(image))) {
            used[w] = true;
            total += count_automorphisms_from(v + 1, h, colour, closing, image, used);
            used[w] = false;
        }
    }
    image[v] = usize::MAX;
    total
}

/// Isomorphism test via canonical keys.
pub fn is_isomorphic(a: &Hypergraph, b: &Hypergraph) -> Result<bool> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let sizes = |h: &Hypergraph| h.edges().iter().map(|e| e.len()).collect::<Vec<_>>();
    if sizes(a) != sizes(b) {
        return Ok(false);
    }
    Ok(canonical_key(a)? == canonical_key(b)?)
}

/// Plain permutation scan with no pruning at all. Kept as an independent
/// reference for the key-based test.
pub fn brute_force_isomorphic(a: &Hypergraph, b: &Hypergraph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    // Heap's algorithm
    let mut c = vec![0usize; n];
    if a.relabel(&perm) == *b {
        return true;
    }
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            if a.relabel(&perm) == *b {
                return true;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    false
}

/// Representatives of every isomorphism class of hypergraphs on exactly `n`
/// vertices (`n <= 4`), in first-seen order of the labelled enumeration.
pub fn classes_on(n: usize) -> Vec<Hypergraph> {
    let mut seen: BTreeMap<CanonicalKey, ()> = BTreeMap::new();
    let mut out = Vec::new();
    for h in all_labelled(n) {
        let key = canonical_key(&h).expect("n <= 4 is below the cap");
        if seen.insert(key, ()).is_none() {
            out.push(h);
        }
    }
    out
}

/// Representatives of every isomorphism class on `1..=n` vertices, ordered by
/// vertex count and then edge count.
pub fn classes_up_to(n: usize) -> Vec<Hypergraph> {
    let mut out = Vec::new();
    for k in 1..=n {
        let mut layer = classes_on(k);
        layer.sort_by_key(|h| h.edge_count());
        out.extend(layer);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::all_labelled;

    fn b(k: usize) -> Hypergraph {
        Hypergraph::new(k, [VertexSet::full(k)]).unwrap()
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn key_invariant_under_relabelling() {
        let h = Hypergraph::from_lists(4, &[&[0, 1], &[1, 2, 3], &[3]]).unwrap();
        let key = canonical_key(&h).unwrap();
        for p in permutations(4) {
            assert_eq!(canonical_key(&h.relabel(&p)).unwrap(), key);
        }
        assert_ne!(canonical_key(&b(2)).unwrap(), canonical_key(&Hypergraph::edgeless(2)).unwrap());
    }

    #[test]
    fn key_classes_match_pairwise_isomorphism() {
        let all: Vec<Hypergraph> = all_labelled(3).collect();
        let mut keys: Vec<CanonicalKey> = all.iter().map(|h| canonical_key(h).unwrap()).collect();
        // greedy class count by the unpruned permutation scan
        let mut reps: Vec<&Hypergraph> = Vec::new();
        for h in &all {
            if !reps.iter().any(|r| brute_force_isomorphic(r, h)) {
                reps.push(h);
            }
        }
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), reps.len());
        for (i, a) in all.iter().enumerate().step_by(5) {
            for c in all.iter().skip(i % 7).step_by(9) {
                assert_eq!(is_isomorphic(a, c).unwrap(), brute_force_isomorphic(a, c));
            }
        }
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(count_automorphisms(&b(3)).unwrap(), 6);
        assert_eq!(count_automorphisms(&b(5)).unwrap(), 120);
        assert_eq!(count_automorphisms(&Hypergraph::edgeless(1)).unwrap(), 1);
        let h = Hypergraph::from_lists(4, &[&[0, 1], &[1, 2], &[2, 3]]).unwrap();
        assert_eq!(count_automorphisms(&h).unwrap(), 2);
        assert!(count_automorphisms(&Hypergraph::edgeless(11)).is_err());
    }

    #[test]
    fn automorphisms_match_full_scan() {
        for h in all_labelled(3).step_by(3) {
            let scan = permutations(3).iter().filter(|p| h.relabel(p) == h).count() as u64;
            assert_eq!(count_automorphisms(&h).unwrap(), scan, "{h:?}");
        }
    }

    #[test]
    fn canonical_form_has_same_key() {
        let h = Hypergraph::from_lists(4, &[&[0, 3], &[1, 2, 3]]).unwrap();
        let c = canonical_form(&h).unwrap();
        assert!(brute_force_isomorphic(&h, &c));
    }
}
