//! The hypergraph data model.
//!
//! Vertices are the integers `0..n` and every edge is a non-empty [`VertexSet`]
//! (one machine word, so at most 64 vertices). Edges form a set: they are kept
//! deduplicated and sorted by `(size, bitmask)`, which makes equality of two
//! [`Hypergraph`] values mean "same labelled hypergraph" and gives a
//! deterministic serialization order.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{BitAnd, BitOr, Not, Sub};

use crate::error::{Error, Result};

/// Maximum number of vertices of any hypergraph.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices stored as a 64-bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> VertexSet {
        vertices.into_iter().fold(VertexSet::EMPTY, |s, v| s.with(v))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> VertexSet {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Largest vertex in the set.
    pub fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    /// Image of the set under a vertex map.
    pub fn map(self, f: &[usize]) -> VertexSet {
        let mut out = 0u64;
        for v in self.iter() {
            out |= 1u64 << f[v];
        }
        VertexSet(out)
    }

    /// All subsets of `self`, starting with the empty set.
    pub fn subsets(self) -> SubsetIter {
        SubsetIter { set: self.0, next: Some(0) }
    }

    /// Relabel the members of `self` by their rank inside `within`.
    pub fn compress(self, within: VertexSet) -> VertexSet {
        let mut out = 0u64;
        for (i, v) in within.iter().enumerate() {
            if self.contains(v) {
                out |= 1 << i;
            }
        }
        VertexSet(out)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Carry-rippler enumeration of the subsets of a mask.
pub struct SubsetIter {
    set: u64,
    next: Option<u64>,
}

impl Iterator for SubsetIter {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        let succ = cur.wrapping_sub(self.set) & self.set;
        self.next = if succ == 0 { None } else { Some(succ) };
        Some(VertexSet(cur))
    }
}

/// Canonical edge order: by size, then by mask value.
pub fn edge_order(a: &VertexSet, b: &VertexSet) -> Ordering {
    a.len().cmp(&b.len()).then(a.0.cmp(&b.0))
}

/// Ways of deriving a hypergraph from a vertex subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeriveMode {
    /// `H[X]`: keep the edges contained in `X`.
    Induced,
    /// `H|X`: intersect every edge with `X`, dropping empty intersections.
    Trim,
    /// Delete `X` together with every edge meeting it.
    DeleteKeep,
    /// Delete `X` and trim the remaining edges to the complement.
    DeleteTrim,
}

/// A finite hypergraph on the vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e:?}")?;
        }
        f.write_str("])")
    }
}

impl Hypergraph {
    /// Build a hypergraph, validating and deduplicating the edges.
    pub fn new<I: IntoIterator<Item = VertexSet>>(n: usize, edges: I) -> Result<Hypergraph> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity { n });
        }
        let full = VertexSet::full(n);
        let mut list = Vec::new();
        for e in edges {
            if e.is_empty() {
                return Err(Error::EmptyEdge);
            }
            if !e.is_subset(full) {
                let vertex = (e - full).min().unwrap_or(n);
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            list.push(e);
        }
        Ok(Hypergraph::from_sorted(n, list))
    }

    /// Convenience constructor from vertex lists.
    pub fn from_lists(n: usize, edges: &[&[usize]]) -> Result<Hypergraph> {
        for e in edges {
            for &v in e.iter() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
        }
        Hypergraph::new(n, edges.iter().map(|e| e.iter().copied().collect()))
    }

    /// Caller guarantees all edges are non-empty and inside `0..n`.
    pub(crate) fn from_sorted(n: usize, mut edges: Vec<VertexSet>) -> Hypergraph {
        edges.sort_by(edge_order);
        edges.dedup();
        Hypergraph { n, edges }
    }

    /// `n` isolated vertices.
    pub fn edgeless(n: usize) -> Hypergraph {
        Hypergraph { n, edges: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// `‖H‖ = |V| + Σ|e|`.
    pub fn size(&self) -> usize {
        self.n + self.edges.iter().map(|e| e.len()).sum::<usize>()
    }

    /// Largest edge size; 0 for an edgeless hypergraph.
    pub fn rank(&self) -> usize {
        self.edges.last().map_or(0, |e| e.len())
    }

    pub fn has_edge(&self, e: VertexSet) -> bool {
        self.edges.binary_search_by(|x| edge_order(x, &e)).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// Vertices that lie in no edge.
    pub fn isolated(&self) -> VertexSet {
        let covered = self.edges.iter().fold(VertexSet::EMPTY, |a, &e| a | e);
        self.vertices() - covered
    }

    /// Non-empty vertex subsets that are not edges, in canonical edge order.
    pub fn non_edges(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = self
            .vertices()
            .subsets()
            .filter(|s| !s.is_empty() && !self.has_edge(*s))
            .collect();
        out.sort_by(edge_order);
        out
    }

    /// Adjacency masks of the Gaifman graph (no self loops).
    pub fn gaifman_adjacency(&self) -> Vec<VertexSet> {
        let mut adj = alloc::vec![VertexSet::EMPTY; self.n];
        for &e in &self.edges {
            for v in e.iter() {
                adj[v] = adj[v] | e.without(v);
            }
        }
        adj
    }

    /// The Gaifman graph as a rank-2 hypergraph.
    pub fn gaifman(&self) -> Hypergraph {
        let adj = self.gaifman_adjacency();
        let mut edges = Vec::new();
        for (u, a) in adj.iter().enumerate() {
            for v in a.iter().filter(|&v| v > u) {
                edges.push(VertexSet::singleton(u).with(v));
            }
        }
        Hypergraph::from_sorted(self.n, edges)
    }

    /// `X` is independent when no edge meets it in two or more vertices.
    pub fn is_independent(&self, x: VertexSet) -> bool {
        self.edges.iter().all(|&e| (e & x).len() <= 1)
    }

    /// Relabel vertices: vertex `v` becomes `perm[v]`. `perm` must be a
    /// bijection onto `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Hypergraph {
        debug_assert_eq!(perm.len(), self.n);
        let edges = self.edges.iter().map(|e| e.map(perm)).collect();
        Hypergraph::from_sorted(self.n, edges)
    }

    /// Add edges (already validated against this vertex set).
    pub fn with_edges<I: IntoIterator<Item = VertexSet>>(&self, extra: I) -> Result<Hypergraph> {
        Hypergraph::new(self.n, self.edges.iter().copied().chain(extra))
    }

    /// Keep the edges of size at most `r`. `r = 0` removes every edge.
    pub fn rank_truncate(&self, r: usize) -> Hypergraph {
        Hypergraph {
            n: self.n,
            edges: self.edges.iter().copied().filter(|e| e.len() <= r).collect(),
        }
    }

    /// Edges of `H|X` as masks over the original labels.
    pub fn trimmed_edges(&self, x: VertexSet) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> =
            self.edges.iter().map(|&e| e & x).filter(|e| !e.is_empty()).collect();
        out.sort_by(edge_order);
        out.dedup();
        out
    }

    /// Derived sub-hypergraph; the surviving vertices are relabelled
    /// `0..k` in increasing order.
    pub fn derive(&self, x: VertexSet, mode: DeriveMode) -> Result<Hypergraph> {
        if !x.is_subset(self.vertices()) {
            let vertex = (x - self.vertices()).min().unwrap_or(self.n);
            return Err(Error::VertexOutOfRange { vertex, n: self.n });
        }
        if matches!(mode, DeriveMode::Induced | DeriveMode::Trim) && x.is_empty() {
            return Err(Error::InvalidParameter(
                "induced and trimmed sub-hypergraphs need a non-empty vertex set".into(),
            ));
        }
        let (keep, edges): (VertexSet, Vec<VertexSet>) = match mode {
            DeriveMode::Induced => {
                (x, self.edges.iter().copied().filter(|e| e.is_subset(x)).collect())
            }
            DeriveMode::Trim => (x, self.trimmed_edges(x)),
            DeriveMode::DeleteKeep => {
                let keep = self.vertices() - x;
                (keep, self.edges.iter().copied().filter(|e| !e.intersects(x)).collect())
            }
            DeriveMode::DeleteTrim => {
                let keep = self.vertices() - x;
                (keep, self.trimmed_edges(keep))
            }
        };
        let edges = edges.into_iter().map(|e| e.compress(keep)).collect();
        Ok(Hypergraph::from_sorted(keep.len(), edges))
    }

    /// The sub-hypergraph `(X, edges)` relabelled to `0..|X|`; edges must lie
    /// inside `X`.
    pub fn restrict_to(x: VertexSet, edges: &[VertexSet]) -> Hypergraph {
        let edges = edges.iter().map(|e| e.compress(x)).collect();
        Hypergraph::from_sorted(x.len(), edges)
    }

    /// Every edge-super-hypergraph `(V, E ∪ A)` for `A` ranging over subsets
    /// of the non-edges. There are `2^(2^n - 1 - |E|)` of them.
    pub fn edge_supergraphs(&self, cap: usize) -> Result<EdgeSupergraphs<'_>> {
        let non_edges = self.non_edges();
        if non_edges.len() > cap || non_edges.len() >= 64 {
            return Err(Error::SizeCap {
                what: "edge-supergraph enumeration (non-edges)",
                size: non_edges.len(),
                cap,
            });
        }
        Ok(EdgeSupergraphs { base: self, non_edges, next: 0 })
    }

    /// `H` plus the edge containing every vertex.
    pub fn with_full_edge(&self) -> Result<Hypergraph> {
        if self.n == 0 {
            return Err(Error::InvalidParameter("cannot add a full edge to the empty hypergraph".into()));
        }
        self.with_edges([self.vertices()])
    }

    /// True when all edges have exactly two vertices.
    pub fn is_graph(&self) -> bool {
        self.edges.iter().all(|e| e.len() == 2)
    }
}

/// Iterator returned by [`Hypergraph::edge_supergraphs`]. Yields the subset
/// `A` of added non-edges together with `H^A`.
pub struct EdgeSupergraphs<'a> {
    base: &'a Hypergraph,
    non_edges: Vec<VertexSet>,
    next: u64,
}

impl EdgeSupergraphs<'_> {
    pub fn non_edges(&self) -> &[VertexSet] {
        &self.non_edges
    }
}

impl Iterator for EdgeSupergraphs<'_> {
    type Item = (Vec<VertexSet>, Hypergraph);

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >> self.non_edges.len() != 0 {
            return None;
        }
        let pick = self.next;
        self.next += 1;
        let added: Vec<VertexSet> = self
            .non_edges
            .iter()
            .enumerate()
            .filter(|(i, _)| pick >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let mut edges = self.base.edges.clone();
        edges.extend_from_slice(&added);
        Some((added, Hypergraph::from_sorted(self.base.n, edges)))
    }
}

/// Every labelled hypergraph on `n` vertices (`2^(2^n - 1)` of them).
pub fn all_labelled(n: usize) -> impl Iterator<Item = Hypergraph> {
    assert!(n <= 4, "labelled enumeration is limited to 4 vertices");
    let candidates: Vec<VertexSet> =
        VertexSet::full(n).subsets().filter(|s| !s.is_empty()).collect();
    let total: u64 = 1 << candidates.len();
    (0..total).map(move |pick| {
        let edges = candidates
            .iter()
            .enumerate()
            .filter(|(i, _)| pick >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Hypergraph::from_sorted(n, edges)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(k: usize) -> Hypergraph {
        Hypergraph::new(k, [VertexSet::full(k)]).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Hypergraph::from_lists(3, &[&[0, 5]]), Err(Error::VertexOutOfRange { vertex: 5, n: 3 }));
        assert_eq!(Hypergraph::from_lists(3, &[&[]]), Err(Error::EmptyEdge));
        assert_eq!(Hypergraph::new(65, []), Err(Error::Capacity { n: 65 }));
    }

    #[test]
    fn dedups_and_sorts() {
        let h = Hypergraph::from_lists(3, &[&[0, 1, 2], &[1], &[2, 1, 0], &[0, 2]]).unwrap();
        assert_eq!(h.edge_count(), 3);
        assert_eq!(h.edges()[0], VertexSet::singleton(1));
        assert_eq!(h.rank(), 3);
        assert_eq!(h.size(), 3 + 1 + 2 + 3);
    }

    #[test]
    fn derive_modes() {
        let b3 = b(3);
        let x = VertexSet::from_vertices([0, 1]);
        assert_eq!(b3.derive(x, DeriveMode::Trim).unwrap(), b(2));
        assert_eq!(b3.derive(x, DeriveMode::Induced).unwrap(), Hypergraph::edgeless(2));
        assert_eq!(b3.derive(x, DeriveMode::DeleteKeep).unwrap(), Hypergraph::edgeless(1));
        assert_eq!(
            b3.derive(x, DeriveMode::DeleteTrim).unwrap(),
            Hypergraph::from_lists(1, &[&[0]]).unwrap()
        );
        assert!(b3.derive(VertexSet::singleton(3), DeriveMode::Trim).is_err());
        assert!(b3.derive(VertexSet::EMPTY, DeriveMode::Induced).is_err());
    }

    #[test]
    fn trim_equals_delete_trim_of_complement() {
        for n in 1..=3 {
            for h in all_labelled(n) {
                for x in h.vertices().subsets().filter(|x| !x.is_empty()) {
                    let comp = h.vertices() - x;
                    assert_eq!(
                        h.derive(x, DeriveMode::Trim).unwrap(),
                        h.derive(comp, DeriveMode::DeleteTrim).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn edge_supergraph_counts() {
        let single = Hypergraph::edgeless(1);
        assert_eq!(single.edge_supergraphs(20).unwrap().count(), 2);
        assert_eq!(b(2).edge_supergraphs(20).unwrap().count(), 4);
        let one_edge = Hypergraph::from_lists(3, &[&[0, 1]]).unwrap();
        // 2^3 - 1 - 1 = 6 non-edges
        assert_eq!(one_edge.non_edges().len(), 6);
        assert_eq!(one_edge.edge_supergraphs(20).unwrap().count(), 64);
        let mut seen: Vec<Hypergraph> = one_edge.edge_supergraphs(20).unwrap().map(|(_, g)| g).collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 64);
        assert!(one_edge.edge_supergraphs(5).is_err());
    }

    #[test]
    fn subset_iteration_counts() {
        assert_eq!(VertexSet(0b1011).subsets().count(), 8);
        assert_eq!(VertexSet::EMPTY.subsets().count(), 1);
        assert_eq!(all_labelled(3).count(), 128);
    }

    #[test]
    fn gaifman_of_single_edge_is_clique() {
        let g = b(4).gaifman();
        assert_eq!(g.edge_count(), 6);
        assert!(g.is_graph());
    }
}
