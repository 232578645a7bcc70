//! The explicit algorithms and reduction gadgets: quasi-polynomial induced
//! counting via edge covers, type counting for `B_k`, un-trimming a coloured
//! host, the clique, isomorphism and common-neighbour gadgets, and the
//! witness that trimmed counts are not finite combinations of homomorphism
//! counts.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::canon::{canonical_key, classes_up_to};
use crate::counting::{
    count_colored, count_morphisms, count_patterns, Budget, ColourMode, ColoredHost, MorphismKind, PatternKind,
};
use crate::error::{Error, Result};
use crate::family::{generate, FamilySpec};
use crate::hypergraph::{DeriveMode, Hypergraph, VertexSet, MAX_VERTICES};
use crate::invariants::cover_edges;

/// Greedy set cover of `V(H)` by edges (singleton edges stand in for
/// isolated vertices). Ties go to the earliest edge in edge order.
pub fn greedy_edge_cover(h: &Hypergraph) -> Vec<VertexSet> {
    let mut edges = cover_edges(h);
    edges.sort_by(crate::hypergraph::edge_order);
    let mut uncovered = h.vertices();
    let mut cover = Vec::new();
    while !uncovered.is_empty() {
        let best = edges
            .iter()
            .copied()
            .max_by(|a, b| (*a & uncovered).len().cmp(&(*b & uncovered).len()).then(crate::hypergraph::edge_order(b, a)))
            .expect("every vertex lies in a cover edge");
        uncovered = uncovered - best;
        cover.push(best);
    }
    cover
}

/// Induced copies of `H` in `G` found by mapping a small edge cover of `H`
/// onto edges of `G` in every possible way and testing the distinct vertex
/// sets covered.
///
/// Real cover edges go to edges of `G`; a singleton edge that stands in for
/// an isolated vertex of `H` goes to a single vertex of `G`.
pub fn indsub_quasipoly(h: &Hypergraph, g: &Hypergraph, budget: &Budget) -> Result<u64> {
    let cover = greedy_edge_cover(h);
    let choices: Vec<Vec<VertexSet>> = cover
        .iter()
        .map(|e| {
            if h.has_edge(*e) {
                g.edges().to_vec()
            } else {
                g.vertices().iter().map(VertexSet::singleton).collect()
            }
        })
        .collect();
    let total = choices.iter().fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128));
    if total > budget.map_evaluations {
        return Err(Error::Budget { what: "edge-cover assignments", needed: total, budget: budget.map_evaluations });
    }
    let k = h.vertex_count();
    let mut candidates: BTreeSet<u64> = BTreeSet::new();
    if choices.iter().all(|c| !c.is_empty()) {
        let mut idx = vec![0usize; choices.len()];
        'outer: loop {
            let x = idx.iter().zip(&choices).fold(VertexSet::EMPTY, |acc, (&i, c)| acc | c[i]);
            if x.len() == k {
                candidates.insert(x.bits());
            }
            for p in 0..idx.len() {
                idx[p] += 1;
                if idx[p] < choices[p].len() {
                    continue 'outer;
                }
                idx[p] = 0;
            }
            break;
        }
    }
    let target = canonical_key(h)?;
    let mut count = 0;
    for bits in candidates {
        let x = VertexSet(bits);
        let induced = if x.is_empty() { Hypergraph::edgeless(0) } else { g.derive(x, DeriveMode::Induced)? };
        if canonical_key(&induced)? == target {
            count += 1;
        }
    }
    Ok(count)
}

/// The set of (edge-order) indices of the edges containing a vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct VertexType(pub Vec<usize>);

pub fn vertex_types(g: &Hypergraph) -> Vec<VertexType> {
    (0..g.vertex_count())
        .map(|v| VertexType(g.edges().iter().enumerate().filter(|(_, e)| e.contains(v)).map(|(i, _)| i).collect()))
        .collect()
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `#IndTrimSub(B_k, G)`: a `k`-set trims to `B_k` exactly when all its
/// vertices have the same non-empty type.
pub fn indtrimsub_bk(k: usize, g: &Hypergraph) -> Result<u64> {
    if k == 0 {
        return Err(Error::InvalidParameter("indtrimsub_bk needs k >= 1".into()));
    }
    let mut types = vertex_types(g);
    types.retain(|t| !t.0.is_empty());
    types.sort();
    let mut total = 0;
    let mut i = 0;
    while i < types.len() {
        let j = (i..types.len()).find(|&j| types[j] != types[i]).unwrap_or(types.len());
        total += binomial((j - i) as u64, k as u64);
        i = j;
    }
    Ok(total)
}

/// Given a host coloured by `H = H0|X`, build a host coloured by `H0` with
/// the same number of colour-prescribed homomorphisms, re-adding the trimmed
/// vertices one at a time.
///
/// Colours of `host` refer to `H0|X` as produced by
/// [`Hypergraph::derive`], i.e. colour `j` is the `j`-th smallest vertex of
/// `X`. When `{v}` is an edge of the intermediate pattern, the fresh host
/// vertex also gets a singleton edge.
pub fn untrim_colored_host(h0: &Hypergraph, x: VertexSet, host: &ColoredHost) -> Result<ColoredHost> {
    let trimmed = h0.derive(x, DeriveMode::Trim)?;
    // validates the colouring against H0|X
    let host = ColoredHost::new(host.host().clone(), host.colouring().to_vec(), &trimmed)?;
    let x_vertices: Vec<usize> = x.iter().collect();
    let mut colouring: Vec<usize> = host.colouring().iter().map(|&c| x_vertices[c]).collect();
    let mut edges: Vec<VertexSet> = host.host().edges().to_vec();
    let mut n = host.host().vertex_count();
    let removed: Vec<usize> = (h0.vertices() - x).iter().collect();
    // H_i = H0 | (V ∖ {v_1..v_i}); walk i = ℓ-1 down to 0
    for i in (0..removed.len()).rev() {
        let v = removed[i];
        let kept = removed[..i].iter().fold(h0.vertices(), |s, &r| s.without(r));
        let h_i: Vec<VertexSet> = h0.trimmed_edges(kept);
        let lowered: BTreeSet<VertexSet> =
            h_i.iter().filter(|e| e.contains(v)).map(|e| e.without(v)).collect();
        if n + 1 > MAX_VERTICES {
            return Err(Error::Capacity { n: n + 1 });
        }
        let w = n;
        n += 1;
        let colour_of = |e: VertexSet, colouring: &[usize]| e.iter().map(|u| colouring[u]).collect::<VertexSet>();
        let mut next = Vec::new();
        for &e in &edges {
            let c = colour_of(e, &colouring);
            if h_i.contains(&c) {
                next.push(e);
            }
            if lowered.contains(&c) {
                next.push(e.with(w));
            }
        }
        if lowered.contains(&VertexSet::EMPTY) {
            next.push(VertexSet::singleton(w));
        }
        colouring.push(v);
        edges = next;
    }
    ColoredHost::new(Hypergraph::new(n, edges)?, colouring, h0)
}

/// `k`-cliques of a graph by brute force.
pub fn count_cliques(g: &Hypergraph, k: usize) -> u64 {
    let adjacency = g.gaifman_adjacency();
    g.vertices()
        .subsets()
        .filter(|s| s.len() == k && s.iter().all(|v| (s.without(v)).is_subset(adjacency[v])))
        .count() as u64
}

fn check_graph(g: &Hypergraph) -> Result<()> {
    if !g.is_graph() {
        return Err(Error::InvalidParameter(format!("{g:?} is not a simple graph")));
    }
    Ok(())
}

/// `(H_{n,k}, Ĝ)` with `Ĝ = G + V(G)`: copies of the pattern in the host are
/// the `k`-cliques of `G`. Needs `k >= 2` and `n >= 3`, so that the full edge
/// cannot be confused with a graph edge.
pub fn clique_gadget(g: &Hypergraph, k: usize) -> Result<(Hypergraph, Hypergraph)> {
    check_graph(g)?;
    let n = g.vertex_count();
    if k > n {
        return Err(Error::InvalidParameter(format!("k = {k} exceeds the {n} vertices of the graph")));
    }
    if k < 2 || n < 3 {
        return Err(Error::InvalidParameter(format!("clique gadget needs k >= 2 and n >= 3, got k = {k}, n = {n}")));
    }
    let pattern = generate(&FamilySpec::Hnk { n, k })?;
    Ok((pattern, g.with_full_edge()?))
}

/// `F ≅ G` decided as `F̂ ≅ Ĝ`. Graphs on two vertices are rejected: their
/// full edge is indistinguishable from a graph edge.
pub fn gi_gadget(f: &Hypergraph, g: &Hypergraph) -> Result<bool> {
    check_graph(f)?;
    check_graph(g)?;
    for x in [f, g] {
        if x.vertex_count() == 2 || x.vertex_count() == 0 {
            return Err(Error::InvalidParameter(format!(
                "isomorphism gadget needs a vertex count other than 0 and 2, got {}",
                x.vertex_count()
            )));
        }
    }
    Ok(canonical_key(&f.with_full_edge()?)? == canonical_key(&g.with_full_edge()?)?)
}

/// A bipartite graph between `Y` and `X` with `X` split into `k` parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteCNInstance {
    y: usize,
    part_of: Vec<usize>,
    k: usize,
    adjacency: Vec<(usize, usize)>,
}

impl BipartiteCNInstance {
    /// `part_of[x]` is the part of `x ∈ X`; `adjacency` lists pairs `(y, x)`.
    pub fn new(y: usize, part_of: Vec<usize>, k: usize, adjacency: Vec<(usize, usize)>) -> Result<Self> {
        if part_of.len() > MAX_VERTICES {
            return Err(Error::Capacity { n: part_of.len() });
        }
        if let Some(&p) = part_of.iter().find(|&&p| p >= k) {
            return Err(Error::InvalidParameter(format!("part {p} out of range for k = {k}")));
        }
        if let Some(p) = (0..k).find(|p| !part_of.contains(p)) {
            return Err(Error::InvalidParameter(format!("part {p} is empty")));
        }
        if let Some(&(a, b)) = adjacency.iter().find(|&&(a, b)| a >= y || b >= part_of.len()) {
            return Err(Error::InvalidParameter(format!("edge ({a}, {b}) out of range")));
        }
        Ok(BipartiteCNInstance { y, part_of, k, adjacency })
    }

    pub fn y_count(&self) -> usize {
        self.y
    }

    pub fn x_count(&self) -> usize {
        self.part_of.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn part_of(&self) -> &[usize] {
        &self.part_of
    }

    pub fn adjacency(&self) -> &[(usize, usize)] {
        &self.adjacency
    }

    /// `N(y) ⊆ X` for every `y`.
    pub fn neighbourhoods(&self) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::EMPTY; self.y];
        for &(a, b) in &self.adjacency {
            out[a] = out[a].with(b);
        }
        out
    }

    /// Sets with one vertex from each part lying in a common neighbourhood,
    /// by direct enumeration.
    pub fn colourful_neighbourhoods(&self) -> u64 {
        let all_parts = VertexSet::full(self.k);
        let neighbourhoods = self.neighbourhoods();
        VertexSet::full(self.x_count())
            .subsets()
            .filter(|s| {
                s.len() == self.k
                    && s.iter().map(|x| self.part_of[x]).collect::<VertexSet>() == all_parts
                    && neighbourhoods.iter().any(|n| s.is_subset(*n))
            })
            .count() as u64
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnGadget {
    pub pattern: Hypergraph,
    /// Host on `X` with one edge per non-empty neighbourhood, coloured by part.
    /// The colouring is not a homomorphism in general.
    pub host: ColoredHost,
    pub count: u64,
}

pub fn cn_gadget(instance: &BipartiteCNInstance, budget: &Budget) -> Result<CnGadget> {
    let pattern = generate(&FamilySpec::Bk { k: instance.k })?;
    let edges = instance.neighbourhoods().into_iter().filter(|n| !n.is_empty());
    let host = ColoredHost::relaxed(
        Hypergraph::new(instance.x_count(), edges)?,
        instance.part_of.clone(),
        instance.k,
    )?;
    let count = count_colored(ColourMode::Prescribed, true, &pattern, &host, budget)?;
    let direct = instance.colourful_neighbourhoods();
    if count != direct {
        return Err(Error::Mismatch(format!(
            "colour-prescribed trimmed count {count} differs from {direct} colourful neighbourhoods"
        )));
    }
    Ok(CnGadget { pattern, host, count })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefutationReport {
    pub trimhom: u64,
    pub trimsub: u64,
    pub indtrimsub: u64,
    /// Smallest edge of the witness; every `F` with an edge and at most this
    /// many minus one vertices has no homomorphism into it.
    pub min_edge_size: usize,
    /// Classes with at least one edge (up to `min(N, 3)` vertices) checked to
    /// have `Hom(F, G) = 0`.
    pub hom_zero_checked: usize,
}

/// Inflate every edge of `H` with `N` fresh vertices.
pub fn refute_hom_basis_witness(h: &Hypergraph, n_fresh: usize, budget: &Budget) -> Result<(Hypergraph, RefutationReport)> {
    if h.edge_count() == 0 {
        return Err(Error::EdgelessPattern);
    }
    if n_fresh == 0 {
        return Err(Error::InvalidParameter("N must be at least 1".into()));
    }
    let total = h.vertex_count() + n_fresh * h.edge_count();
    if total > MAX_VERTICES {
        return Err(Error::Capacity { n: total });
    }
    let edges = h.edges().iter().enumerate().map(|(i, &e)| {
        let start = h.vertex_count() + i * n_fresh;
        e | VertexSet::from_vertices(start..start + n_fresh)
    });
    let witness = Hypergraph::new(total, edges)?;
    let mut hom_zero_checked = 0;
    for f in classes_up_to(n_fresh.min(3)).into_iter().filter(|f| f.edge_count() > 0) {
        let homs = count_morphisms(MorphismKind::Hom, &f, &witness, budget)?;
        if homs != 0 {
            return Err(Error::Mismatch(format!("Hom({f:?}, witness) = {homs}, expected 0")));
        }
        hom_zero_checked += 1;
    }
    let report = RefutationReport {
        trimhom: count_morphisms(MorphismKind::TrimHom, h, &witness, budget)?,
        trimsub: count_patterns(PatternKind::TrimSub, h, &witness, budget)?,
        indtrimsub: count_patterns(PatternKind::IndTrimSub, h, &witness, budget)?,
        min_edge_size: witness.edges().iter().map(|e| e.len()).min().unwrap_or(0),
        hom_zero_checked,
    };
    Ok((witness, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    const BUDGET: Budget = Budget { map_evaluations: 100_000_000 };

    fn b(k: usize) -> Hypergraph {
        Hypergraph::new(k, [VertexSet::full(k)]).unwrap()
    }

    #[test]
    fn quasipoly_examples() {
        let g = Hypergraph::from_lists(4, &[&[0, 1, 2], &[1, 2, 3], &[0, 1]]).unwrap();
        assert_eq!(indsub_quasipoly(&b(3), &g, &BUDGET).unwrap(), 1);
        assert_eq!(indsub_quasipoly(&b(1), &b(1), &BUDGET).unwrap(), 1);
        // isolated pattern vertices are matched to single host vertices
        let two_isolated = Hypergraph::edgeless(2);
        let expected = count_patterns(PatternKind::IndSub, &two_isolated, &g, &BUDGET).unwrap();
        assert_eq!(expected, 5);
        assert_eq!(indsub_quasipoly(&two_isolated, &g, &BUDGET).unwrap(), expected);
    }

    #[test]
    fn greedy_cover_shapes() {
        assert_eq!(greedy_edge_cover(&b(4)), [VertexSet::full(4)]);
        let d = generate(&FamilySpec::DisjointEdges { m: 3, r: 2 }).unwrap();
        assert_eq!(greedy_edge_cover(&d).len(), 3);
    }

    #[test]
    fn type_counting() {
        assert_eq!(indtrimsub_bk(2, &b(3)).unwrap(), 3);
        assert_eq!(indtrimsub_bk(4, &b(3)).unwrap(), 0);
        let two = Hypergraph::from_lists(4, &[&[0, 1], &[2, 3]]).unwrap();
        assert_eq!(indtrimsub_bk(2, &two).unwrap(), 2);
        // isolated vertices share the empty type but do not form copies
        assert_eq!(indtrimsub_bk(2, &Hypergraph::edgeless(3)).unwrap(), 0);
    }

    #[test]
    fn untrim_b3() {
        let host = ColoredHost::new(b(2), vec![0, 1], &b(2)).unwrap();
        let lifted = untrim_colored_host(&b(3), VertexSet::from_vertices([0, 1]), &host).unwrap();
        assert_eq!(lifted.host().vertex_count(), 3);
        assert_eq!(count_colored(ColourMode::Prescribed, false, &b(3), &lifted, &BUDGET).unwrap(), 1);
    }

    #[test]
    fn untrim_singleton_edge() {
        // H0 has the edge {0}; trimming to {1} leaves an edgeless vertex
        let h0 = Hypergraph::from_lists(2, &[&[0]]).unwrap();
        let host = ColoredHost::new(Hypergraph::edgeless(2), vec![0, 0], &Hypergraph::edgeless(1)).unwrap();
        let lifted = untrim_colored_host(&h0, VertexSet::singleton(1), &host).unwrap();
        assert_eq!(count_colored(ColourMode::Prescribed, false, &h0, &lifted, &BUDGET).unwrap(), 2);
    }

    #[test]
    fn clique_and_gi_gadgets() {
        let k3 = Hypergraph::from_lists(3, &[&[0, 1], &[1, 2], &[0, 2]]).unwrap();
        let (p, host) = clique_gadget(&k3, 3).unwrap();
        assert_eq!(count_patterns(PatternKind::Sub, &p, &host, &BUDGET).unwrap(), 1);
        let p4 = Hypergraph::from_lists(4, &[&[0, 1], &[1, 2], &[2, 3]]).unwrap();
        let (p, host) = clique_gadget(&p4, 3).unwrap();
        assert_eq!(count_patterns(PatternKind::Sub, &p, &host, &BUDGET).unwrap(), 0);
        assert!(clique_gadget(&k3, 4).is_err());
        let p3 = Hypergraph::from_lists(3, &[&[0, 1], &[1, 2]]).unwrap();
        assert!(gi_gadget(&p3, &p3).unwrap());
        assert!(!gi_gadget(&p3, &k3).unwrap());
    }

    #[test]
    fn common_neighbours() {
        // X = {a, b, b'} = {0, 1, 2}; parts {a}, {b, b'}
        let inst = BipartiteCNInstance::new(2, vec![0, 1, 1], 2, vec![(0, 0), (0, 1), (1, 0), (1, 2)]).unwrap();
        let gadget = cn_gadget(&inst, &BUDGET).unwrap();
        assert_eq!(gadget.count, 2);
        assert!(!gadget.host.is_homomorphic());
        let cf = count_colored(ColourMode::Colourful, true, &gadget.pattern, &gadget.host, &BUDGET).unwrap();
        assert_eq!(cf, 2 * gadget.count);
        let full = BipartiteCNInstance::new(1, vec![0, 1, 2], 3, vec![(0, 0), (0, 1), (0, 2)]).unwrap();
        assert_eq!(cn_gadget(&full, &BUDGET).unwrap().count, 1);
        assert!(BipartiteCNInstance::new(1, vec![0, 0], 2, vec![]).is_err());
    }

    #[test]
    fn refutation_witness() {
        let (g, report) = refute_hom_basis_witness(&b(2), 3, &BUDGET).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edges(), [VertexSet::full(5)]);
        assert!(report.indtrimsub >= 1 && report.trimsub >= 1 && report.trimhom >= 1);
        assert!(report.hom_zero_checked > 0);
        let (g1, _) = refute_hom_basis_witness(&b(2), 1, &BUDGET).unwrap();
        assert_eq!(count_morphisms(MorphismKind::Hom, &b(2), &g1, &BUDGET).unwrap(), 0);
        assert_eq!(refute_hom_basis_witness(&Hypergraph::edgeless(2), 1, &BUDGET), Err(Error::EdgelessPattern));
    }
}
