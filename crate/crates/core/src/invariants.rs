//! Edge-cover and independence numbers (integral and fractional), the
//! co-independent cover number, exact treewidth of small graphs and widths of
//! tree decompositions.
//!
//! Isolated vertices get a singleton edge while an invariant is computed, so
//! that every cover LP is feasible. The stored hypergraph is never changed.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::counting::Budget;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexSet};
use crate::lp::{solve_lp, Direction, LpInstance, Relation};
use crate::Rational;

/// Largest graph handled by [`treewidth_exact`].
pub const TREEWIDTH_CAP: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FractionalKind {
    RhoStar,
    AlphaStar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegralKind {
    Rho,
    Alpha,
}

/// Edges of `h` plus a singleton edge for each isolated vertex.
pub fn cover_edges(h: &Hypergraph) -> Vec<VertexSet> {
    let mut edges = h.edges().to_vec();
    edges.extend(h.isolated().iter().map(VertexSet::singleton));
    edges
}

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn indicator(flag: bool) -> Rational {
    if flag {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// `min Σ ξ_e` subject to `Σ_{e ∋ v} ξ_e >= 1` for every `v ∈ x`.
pub fn rho_star_lp(h: &Hypergraph, x: VertexSet) -> LpInstance {
    let edges = cover_edges(h);
    let mut lp = LpInstance::new(Direction::Minimize, vec![Rational::one(); edges.len()]);
    for v in x.iter() {
        lp.add(edges.iter().map(|e| indicator(e.contains(v))).collect(), Relation::GreaterEq, int(1));
    }
    lp
}

/// `max Σ_{v ∈ x} η_v` subject to `Σ_{v ∈ e ∩ x} η_v <= 1` for every edge.
pub fn alpha_star_lp(h: &Hypergraph, x: VertexSet) -> LpInstance {
    let vertices: Vec<usize> = x.iter().collect();
    let mut lp = LpInstance::new(Direction::Maximize, vec![Rational::one(); vertices.len()]);
    for e in cover_edges(h) {
        if e.intersects(x) {
            lp.add(vertices.iter().map(|&v| indicator(e.contains(v))).collect(), Relation::LessEq, int(1));
        }
    }
    lp
}

/// `ρ*_H(X)` or `α*_H(X)`; `x = None` means all of `V(H)`.
pub fn fractional_invariant(kind: FractionalKind, h: &Hypergraph, x: Option<VertexSet>) -> Result<Rational> {
    let x = x.unwrap_or_else(|| h.vertices());
    if !x.is_subset(h.vertices()) {
        let vertex = (x - h.vertices()).min().unwrap_or(0);
        return Err(Error::VertexOutOfRange { vertex, n: h.vertex_count() });
    }
    let lp = match kind {
        FractionalKind::RhoStar => rho_star_lp(h, x),
        FractionalKind::AlphaStar => alpha_star_lp(h, x),
    };
    Ok(solve_lp(&lp)?.value)
}

pub fn rho_star(h: &Hypergraph, x: VertexSet) -> Result<Rational> {
    fractional_invariant(FractionalKind::RhoStar, h, Some(x))
}

struct Search<'a> {
    budget: &'a Budget,
    nodes: u128,
}

impl Search<'_> {
    fn tick(&mut self, what: &'static str) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget.map_evaluations {
            return Err(Error::Budget { what, needed: self.nodes, budget: self.budget.map_evaluations });
        }
        Ok(())
    }
}

fn min_cover(
    edges: &[VertexSet],
    uncovered: VertexSet,
    used: usize,
    best: &mut usize,
    search: &mut Search<'_>,
) -> Result<()> {
    search.tick("edge-cover search")?;
    let Some(v) = uncovered.min() else {
        *best = (*best).min(used);
        return Ok(());
    };
    if used + 1 >= *best {
        return Ok(());
    }
    for &e in edges.iter().filter(|e| e.contains(v)) {
        min_cover(edges, uncovered - e, used + 1, best, search)?;
    }
    Ok(())
}

fn max_independent(
    adjacency: &[VertexSet],
    candidates: VertexSet,
    size: usize,
    best: &mut usize,
    search: &mut Search<'_>,
) -> Result<()> {
    search.tick("independent-set search")?;
    let Some(v) = candidates.min() else {
        *best = (*best).max(size);
        return Ok(());
    };
    if size + candidates.len() <= *best {
        return Ok(());
    }
    max_independent(adjacency, candidates.without(v) - adjacency[v], size + 1, best, search)?;
    max_independent(adjacency, candidates.without(v), size, best, search)
}

/// `ρ(H)` or `α(H)` by branch and bound.
pub fn integral_invariant(kind: IntegralKind, h: &Hypergraph, budget: &Budget) -> Result<usize> {
    let mut search = Search { budget, nodes: 0 };
    match kind {
        IntegralKind::Rho => {
            let edges = cover_edges(h);
            let mut best = h.vertex_count() + 1;
            min_cover(&edges, h.vertices(), 0, &mut best, &mut search)?;
            Ok(best)
        }
        IntegralKind::Alpha => {
            let adjacency = h.gaifman_adjacency();
            let mut best = 0;
            max_independent(&adjacency, h.vertices(), 0, &mut best, &mut search)?;
            Ok(best)
        }
    }
}

fn bron_kerbosch(
    adjacency: &[VertexSet],
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<VertexSet>,
    search: &mut Search<'_>,
) -> Result<()> {
    search.tick("maximal independent set enumeration")?;
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return Ok(());
    }
    let pivot = (p | x).iter().max_by_key(|&u| (p & adjacency[u]).len()).unwrap();
    for v in (p - adjacency[pivot]).iter() {
        bron_kerbosch(adjacency, r.with(v), p & adjacency[v], x & adjacency[v], out, search)?;
        p = p.without(v);
        x = x.with(v);
    }
    Ok(())
}

/// Co-independent sets of `h`: `X` such that `V ∖ X` is independent. With
/// `minimal` only the inclusion-minimal ones (complements of maximal
/// independent sets) are produced.
pub fn coindependent_sets(h: &Hypergraph, minimal: bool, budget: &Budget) -> Result<Vec<VertexSet>> {
    let all = h.vertices();
    let gaifman = h.gaifman_adjacency();
    let mut search = Search { budget, nodes: 0 };
    let mut independent = Vec::new();
    if minimal {
        // maximal independent sets are maximal cliques of the complement
        let complement: Vec<VertexSet> =
            (0..h.vertex_count()).map(|v| (all - gaifman[v]).without(v)).collect();
        bron_kerbosch(&complement, VertexSet::EMPTY, all, VertexSet::EMPTY, &mut independent, &mut search)?;
    } else {
        fn grow(
            adjacency: &[VertexSet],
            chosen: VertexSet,
            candidates: VertexSet,
            out: &mut Vec<VertexSet>,
            search: &mut Search<'_>,
        ) -> Result<()> {
            search.tick("independent set enumeration")?;
            out.push(chosen);
            for v in candidates.iter() {
                let rest = VertexSet(candidates.bits() & !((2u64 << v) - 1));
                grow(adjacency, chosen.with(v), rest - adjacency[v], out, search)?;
            }
            Ok(())
        }
        grow(&gaifman, VertexSet::EMPTY, all, &mut independent, &mut search)?;
    }
    let mut out: Vec<VertexSet> = independent.into_iter().map(|i| all - i).collect();
    out.sort();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaStar {
    pub value: Rational,
    /// A co-independent set attaining the minimum.
    pub set: VertexSet,
}

/// `σ*(H) = min ρ*_H(X)` over co-independent `X`.
pub fn sigma_star(h: &Hypergraph, budget: &Budget) -> Result<SigmaStar> {
    let mut best: Option<SigmaStar> = None;
    for x in coindependent_sets(h, true, budget)? {
        let value = rho_star(h, x)?;
        if best.as_ref().map_or(true, |b| value < b.value) {
            best = Some(SigmaStar { value, set: x });
        }
    }
    Ok(best.expect("the empty set is independent, so V is co-independent"))
}

/// Vertices outside `s ∪ {v}` reachable from `v` through vertices of `s`.
fn eliminated_degree(adjacency: &[VertexSet], s: VertexSet, v: usize) -> usize {
    let mut seen = VertexSet::singleton(v);
    let mut frontier = VecDeque::from([v]);
    let mut boundary = VertexSet::EMPTY;
    while let Some(u) = frontier.pop_front() {
        for w in (adjacency[u] - seen).iter() {
            seen = seen.with(w);
            if s.contains(w) {
                frontier.push_back(w);
            } else {
                boundary = boundary.with(w);
            }
        }
    }
    boundary.len()
}

/// Exact treewidth of the Gaifman graph of `h` by dynamic programming over
/// elimination prefixes: `TW(S) = min_{v ∈ S} max(TW(S ∖ v), |Q(S ∖ v, v)|)`.
pub fn treewidth_exact(h: &Hypergraph) -> Result<usize> {
    let n = h.vertex_count();
    if n > TREEWIDTH_CAP {
        return Err(Error::SizeCap { what: "exact treewidth", size: n, cap: TREEWIDTH_CAP });
    }
    let adjacency = h.gaifman_adjacency();
    let mut tw = vec![0u8; 1 << n];
    for mask in 1usize..1 << n {
        let s = VertexSet(mask as u64);
        tw[mask] = s
            .iter()
            .map(|v| {
                let rest = s.without(v);
                tw[rest.bits() as usize].max(eliminated_degree(&adjacency, rest, v) as u8)
            })
            .min()
            .unwrap();
    }
    Ok(tw[(1usize << n) - 1] as usize)
}

/// A tree decomposition: bags indexed by node, tree given by its edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    pub tree: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WidthMeasure {
    CardinalityMinusOne,
    RhoStarOfBag,
}

impl TreeDecomposition {
    /// Check the tree shape and the three decomposition conditions.
    pub fn validate(&self, h: &Hypergraph) -> Result<()> {
        let nodes = self.bags.len();
        let bad = |msg: alloc::string::String| Err(Error::InvalidDecomposition(msg));
        if nodes == 0 {
            return bad("no bags".into());
        }
        if self.tree.len() != nodes - 1 {
            return bad(format!("{} tree edges for {nodes} nodes", self.tree.len()));
        }
        let mut adjacency = vec![Vec::new(); nodes];
        for &(a, b) in &self.tree {
            if a >= nodes || b >= nodes || a == b {
                return bad(format!("tree edge ({a}, {b}) is not between two distinct nodes"));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        if reachable(&adjacency, |_| true).len() != nodes {
            return bad("tree is not connected".into());
        }
        let union = self.bags.iter().fold(VertexSet::EMPTY, |u, &b| u | b);
        if let Some(v) = (union - h.vertices()).min() {
            return bad(format!("bag vertex {v} is not a vertex of the hypergraph"));
        }
        if let Some(v) = (h.vertices() - union).min() {
            return bad(format!("vertex {v} is in no bag"));
        }
        for &e in h.edges() {
            if !self.bags.iter().any(|b| e.is_subset(*b)) {
                return bad(format!("edge {e:?} is in no bag"));
            }
        }
        for v in h.vertices().iter() {
            let holding = self.bags.iter().filter(|b| b.contains(v)).count();
            if reachable(&adjacency, |t| self.bags[t].contains(v)).len() != holding {
                return bad(format!("nodes containing vertex {v} are not connected"));
            }
        }
        Ok(())
    }

    /// `max_t f(B_t)` after validation.
    pub fn width(&self, h: &Hypergraph, f: WidthMeasure) -> Result<Rational> {
        self.validate(h)?;
        let mut best: Option<Rational> = None;
        for &bag in &self.bags {
            let value = match f {
                WidthMeasure::CardinalityMinusOne => int(bag.len() as i64 - 1),
                WidthMeasure::RhoStarOfBag => rho_star(h, bag)?,
            };
            if best.as_ref().map_or(true, |b| value > *b) {
                best = Some(value);
            }
        }
        Ok(best.unwrap())
    }
}

/// Nodes reachable from the first node satisfying `keep`, moving only
/// through nodes satisfying `keep`.
fn reachable(adjacency: &[Vec<usize>], keep: impl Fn(usize) -> bool) -> Vec<usize> {
    let Some(start) = (0..adjacency.len()).find(|&t| keep(t)) else {
        return Vec::new();
    };
    let mut seen = vec![false; adjacency.len()];
    seen[start] = true;
    let mut stack = vec![start];
    let mut out = Vec::new();
    while let Some(t) = stack.pop() {
        out.push(t);
        for &u in &adjacency[t] {
            if !seen[u] && keep(u) {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    out
}

pub fn decomposition_width(d: &TreeDecomposition, h: &Hypergraph, f: WidthMeasure) -> Result<Rational> {
    d.width(h, f)
}

/// Path decomposition with bags `S ∪ {v}` for `v ∉ S`, where `S` attains
/// `σ*(H)`. Its `ρ*`-width is at most `σ*(H) + 1`.
pub fn coindependent_decomposition(h: &Hypergraph, budget: &Budget) -> Result<TreeDecomposition> {
    let s = sigma_star(h, budget)?.set;
    let mut bags: Vec<VertexSet> = (h.vertices() - s).iter().map(|v| s.with(v)).collect();
    if bags.is_empty() {
        bags.push(s);
    }
    let tree = (1..bags.len()).map(|i| (i - 1, i)).collect();
    Ok(TreeDecomposition { bags, tree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};

    const BUDGET: Budget = Budget { map_evaluations: 1_000_000 };

    fn g(spec: FamilySpec) -> Hypergraph {
        generate(&spec).unwrap()
    }

    #[test]
    fn spec_values() {
        let b3 = g(FamilySpec::Bk { k: 3 });
        assert_eq!(fractional_invariant(FractionalKind::RhoStar, &b3, None).unwrap(), int(1));
        let gm = g(FamilySpec::GroheMarx { n: 2 });
        assert_eq!(fractional_invariant(FractionalKind::RhoStar, &gm, None).unwrap(), int(2));
        assert_eq!(fractional_invariant(FractionalKind::AlphaStar, &gm, None).unwrap(), int(2));
        let d = g(FamilySpec::DisjointEdges { m: 3, r: 2 });
        assert_eq!(fractional_invariant(FractionalKind::RhoStar, &d, None).unwrap(), int(3));
        assert_eq!(integral_invariant(IntegralKind::Alpha, &d, &BUDGET).unwrap(), 3);
        assert_eq!(integral_invariant(IntegralKind::Alpha, &g(FamilySpec::Bk { k: 4 }), &BUDGET).unwrap(), 1);
        assert!(integral_invariant(IntegralKind::Rho, &gm, &BUDGET).unwrap() >= 2);
    }

    #[test]
    fn isolated_vertices_get_singleton_edges() {
        let h = Hypergraph::from_lists(3, &[&[0, 1]]).unwrap();
        assert_eq!(fractional_invariant(FractionalKind::RhoStar, &h, None).unwrap(), int(2));
        assert_eq!(integral_invariant(IntegralKind::Rho, &h, &BUDGET).unwrap(), 2);
        assert_eq!(h.edge_count(), 1);
    }

    #[test]
    fn coindependent_of_bk() {
        for k in 1..=5 {
            let b = g(FamilySpec::Bk { k });
            let all = coindependent_sets(&b, false, &BUDGET).unwrap();
            let oracle: Vec<VertexSet> = b
                .vertices()
                .subsets()
                .filter(|x| b.is_independent(b.vertices() - *x))
                .collect::<alloc::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            assert_eq!(all, oracle);
            assert_eq!(all.len(), k + 1);
            assert!(all.contains(&b.vertices()));
        }
        let sf = g(FamilySpec::Sunflower { uniformity: 4, core: 3, petals: 2 });
        let tips = VertexSet::from_vertices([3, 4]);
        assert!(coindependent_sets(&sf, false, &BUDGET).unwrap().contains(&(sf.vertices() - tips)));
    }

    #[test]
    fn sigma_star_values() {
        for (n, k) in [(3, 2), (4, 3), (5, 3), (5, 5)] {
            assert_eq!(sigma_star(&g(FamilySpec::Hnk { n, k }), &BUDGET).unwrap().value, int(1));
        }
        for m in 1..=4 {
            let core3 = g(FamilySpec::Sunflower { uniformity: 4, core: 3, petals: m });
            assert_eq!(sigma_star(&core3, &BUDGET).unwrap().value, int(1));
            let core1 = g(FamilySpec::Sunflower { uniformity: 4, core: 1, petals: m });
            assert_eq!(sigma_star(&core1, &BUDGET).unwrap().value, int(m as i64));
        }
    }

    #[test]
    fn treewidth_values() {
        let path = Hypergraph::from_lists(4, &[&[0, 1], &[1, 2], &[2, 3]]).unwrap();
        assert_eq!(treewidth_exact(&path).unwrap(), 1);
        let k5 = Hypergraph::new(
            5,
            VertexSet::full(5).subsets().filter(|s| s.len() == 2),
        )
        .unwrap();
        assert_eq!(treewidth_exact(&k5).unwrap(), 4);
        assert_eq!(treewidth_exact(&g(FamilySpec::Bk { k: 4 })).unwrap(), 3);
        let cycle = Hypergraph::from_lists(5, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[0, 4]]).unwrap();
        assert_eq!(treewidth_exact(&cycle).unwrap(), 2);
        assert!(treewidth_exact(&Hypergraph::edgeless(16)).is_err());
    }

    #[test]
    fn decomposition_checks() {
        let b4 = g(FamilySpec::Bk { k: 4 });
        let trivial = TreeDecomposition { bags: vec![b4.vertices()], tree: vec![] };
        assert_eq!(trivial.width(&b4, WidthMeasure::RhoStarOfBag).unwrap(), int(1));
        let path = Hypergraph::from_lists(4, &[&[0, 1], &[1, 2], &[2, 3]]).unwrap();
        let pd = TreeDecomposition {
            bags: vec![
                VertexSet::from_vertices([0, 1]),
                VertexSet::from_vertices([1, 2]),
                VertexSet::from_vertices([2, 3]),
            ],
            tree: vec![(0, 1), (1, 2)],
        };
        assert_eq!(pd.width(&path, WidthMeasure::CardinalityMinusOne).unwrap(), int(1));
        let broken = TreeDecomposition { bags: pd.bags.clone(), tree: vec![(0, 2), (1, 2)] };
        assert!(matches!(broken.validate(&path), Err(Error::InvalidDecomposition(_))));
        let missing = TreeDecomposition { bags: pd.bags[..2].to_vec(), tree: vec![(0, 1)] };
        assert!(missing.validate(&path).is_err());
    }

    #[test]
    fn coindependent_decomposition_width() {
        for spec in [
            FamilySpec::Bk { k: 4 },
            FamilySpec::Sunflower { uniformity: 4, core: 3, petals: 3 },
            FamilySpec::Sunflower { uniformity: 4, core: 1, petals: 2 },
            FamilySpec::Hnk { n: 5, k: 3 },
        ] {
            let h = g(spec);
            let sigma = sigma_star(&h, &BUDGET).unwrap().value;
            let d = coindependent_decomposition(&h, &BUDGET).unwrap();
            let width = d.width(&h, WidthMeasure::RhoStarOfBag).unwrap();
            assert!(width <= sigma + int(1));
        }
    }
}
