//! Tensor product of hypergraphs and the colour-coding host built from it.
//!
//! Vertex `(g, h)` of `G ⊗ H` has index `g·|H| + h`. An edge of the product is
//! a set of pairs whose two projections are edges of `G` and `H`.

use alloc::vec;
use alloc::vec::Vec;

use crate::counting::ColoredHost;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexSet, MAX_VERTICES};

/// Default bound on the rank of the factors.
pub const DEFAULT_RANK_BUDGET: usize = 5;

/// Row-major indexing of `V(G) × V(H)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexPairIndex {
    pub left: usize,
    pub right: usize,
}

impl VertexPairIndex {
    pub fn new(left: usize, right: usize) -> VertexPairIndex {
        VertexPairIndex { left, right }
    }

    pub fn len(&self) -> usize {
        self.left * self.right
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index(&self, g: usize, h: usize) -> usize {
        debug_assert!(g < self.left && h < self.right);
        g * self.right + h
    }

    pub fn pair(&self, i: usize) -> (usize, usize) {
        (i / self.right, i % self.right)
    }

    /// Split a map into the product into its two coordinate maps.
    pub fn proj(&self, phi: &[usize]) -> (Vec<usize>, Vec<usize>) {
        phi.iter().map(|&i| self.pair(i)).unzip()
    }

    /// Inverse of [`proj`](Self::proj).
    pub fn join(&self, left: &[usize], right: &[usize]) -> Vec<usize> {
        left.iter().zip(right).map(|(&g, &h)| self.index(g, h)).collect()
    }

    /// `π_G(e)` and `π_H(e)` of a vertex set of the product.
    pub fn projections(&self, e: VertexSet) -> (VertexSet, VertexSet) {
        e.iter().fold((VertexSet::EMPTY, VertexSet::EMPTY), |(a, b), i| {
            let (g, h) = self.pair(i);
            (a.with(g), b.with(h))
        })
    }
}

/// `G ⊗ H`. Both factors must have rank at most `rank_budget`.
pub fn tensor_with_budget(g: &Hypergraph, h: &Hypergraph, rank_budget: usize) -> Result<Hypergraph> {
    let rank = g.rank().max(h.rank());
    if rank > rank_budget {
        return Err(Error::SizeCap { what: "tensor product (factor rank)", size: rank, cap: rank_budget });
    }
    let index = VertexPairIndex::new(g.vertex_count(), h.vertex_count());
    if index.len() > MAX_VERTICES {
        return Err(Error::Capacity { n: index.len() });
    }
    let mut edges = Vec::new();
    for &eg in g.edges() {
        for &eh in h.edges() {
            let cells: Vec<(usize, usize)> =
                eg.iter().flat_map(|a| eh.iter().map(move |b| (a, b))).collect();
            // projections still reachable from cell i onwards
            let mut reach = vec![(VertexSet::EMPTY, VertexSet::EMPTY); cells.len() + 1];
            for i in (0..cells.len()).rev() {
                let (a, b) = cells[i];
                reach[i] = (reach[i + 1].0.with(a), reach[i + 1].1.with(b));
            }
            extend(&index, &cells, &reach, 0, VertexSet::EMPTY, (VertexSet::EMPTY, VertexSet::EMPTY), (eg, eh), &mut edges);
        }
    }
    Hypergraph::new(index.len(), edges)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    index: &VertexPairIndex,
    cells: &[(usize, usize)],
    reach: &[(VertexSet, VertexSet)],
    i: usize,
    chosen: VertexSet,
    covered: (VertexSet, VertexSet),
    target: (VertexSet, VertexSet),
    out: &mut Vec<VertexSet>,
) {
    if covered.0 | reach[i].0 != target.0 || covered.1 | reach[i].1 != target.1 {
        return;
    }
    if i == cells.len() {
        out.push(chosen);
        return;
    }
    let (a, b) = cells[i];
    extend(index, cells, reach, i + 1, chosen, covered, target, out);
    extend(
        index,
        cells,
        reach,
        i + 1,
        chosen.with(index.index(a, b)),
        (covered.0.with(a), covered.1.with(b)),
        target,
        out,
    );
}

pub fn tensor(g: &Hypergraph, h: &Hypergraph) -> Result<Hypergraph> {
    tensor_with_budget(g, h, DEFAULT_RANK_BUDGET)
}

/// `(F, c)` with `F = trunc(G, rank H) ⊗ H` and `c` the projection onto `H`;
/// colour-prescribed homomorphisms from `H` into it are in bijection with
/// `Hom(H, G)`.
pub fn color_host_via_tensor(h: &Hypergraph, g: &Hypergraph) -> Result<ColoredHost> {
    let truncated = g.rank_truncate(h.rank());
    let product = tensor(&truncated, h)?;
    let index = VertexPairIndex::new(g.vertex_count(), h.vertex_count());
    let colouring = (0..product.vertex_count()).map(|i| index.pair(i).1).collect();
    ColoredHost::new(product, colouring, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::counting::{count_colored, count_morphisms, Budget, ColourMode, MorphismKind};

    fn b(k: usize) -> Hypergraph {
        Hypergraph::new(k, [VertexSet::full(k)]).unwrap()
    }

    #[test]
    fn b2_squared() {
        let t = tensor(&b(2), &b(2)).unwrap();
        assert_eq!(t.vertex_count(), 4);
        assert_eq!(t.edge_count(), 7);
        let sizes: Vec<usize> = t.edges().iter().map(|e| e.len()).collect();
        assert_eq!(sizes, [2, 2, 3, 3, 3, 3, 4]);
        let budget = Budget::default();
        assert_eq!(count_morphisms(MorphismKind::Hom, &b(2), &t, &budget).unwrap(), 4);
    }

    #[test]
    fn unit_is_neutral() {
        let unit = b(1);
        let g = Hypergraph::from_lists(4, &[&[0, 1], &[1, 2, 3], &[3]]).unwrap();
        assert!(is_isomorphic(&tensor(&g, &unit).unwrap(), &g).unwrap());
        assert!(is_isomorphic(&tensor(&unit, &g).unwrap(), &g).unwrap());
    }

    #[test]
    fn rank_budget_enforced() {
        let err = tensor_with_budget(&b(3), &b(2), 2).unwrap_err();
        assert!(err.is_budget());
    }

    #[test]
    fn proj_join_round_trip() {
        let index = VertexPairIndex::new(3, 4);
        let phi = vec![0, 5, 11, 7];
        let (l, r) = index.proj(&phi);
        assert_eq!(index.join(&l, &r), phi);
    }

    #[test]
    fn colour_host_counts() {
        let budget = Budget::default();
        let single = Hypergraph::edgeless(1);
        let g = b(3);
        let host = color_host_via_tensor(&single, &g).unwrap();
        assert_eq!(count_colored(ColourMode::Prescribed, false, &single, &host, &budget).unwrap(), 3);
        let host = color_host_via_tensor(&b(2), &g).unwrap();
        assert_eq!(count_colored(ColourMode::Prescribed, false, &b(2), &host, &budget).unwrap(), 0);
    }
}
