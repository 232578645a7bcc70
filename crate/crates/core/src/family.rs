//! Generators for the named hypergraph families.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// One vertex, no edges.
    SingleVertex,
    /// `B_k`: `k` vertices and the single edge containing all of them.
    Bk { k: usize },
    /// `petals` edges of size `uniformity`, pairwise intersecting exactly in a
    /// core of `core` vertices. Core vertices are `0..core`, then each petal's
    /// private vertices in turn.
    Sunflower { uniformity: usize, core: usize, petals: usize },
    /// `H_{n,k}`: vertices `0..n`, every 2-subset of `0..k`, plus the full edge.
    Hnk { n: usize, k: usize },
    /// Vertices are the `n`-subsets of `0..2n` in increasing bitmask order;
    /// edge `i` holds every subset containing `i`, for each `i < 2n`.
    GroheMarx { n: usize },
    /// `m` pairwise disjoint edges of size `r`.
    DisjointEdges { m: usize, r: usize },
    /// The given hypergraph plus the edge containing every vertex.
    HatOfGraph(Hypergraph),
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::SingleVertex => "single_vertex",
            FamilySpec::Bk { .. } => "b_k",
            FamilySpec::Sunflower { .. } => "sunflower",
            FamilySpec::Hnk { .. } => "h_nk",
            FamilySpec::GroheMarx { .. } => "grohe_marx",
            FamilySpec::DisjointEdges { .. } => "disjoint_edges",
            FamilySpec::HatOfGraph(_) => "hat_of_graph",
        }
    }
}

fn invalid<T>(msg: alloc::string::String) -> Result<T> {
    Err(Error::InvalidParameter(msg))
}

fn capacity(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Capacity { n })
    } else {
        Ok(())
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Hypergraph> {
    match *spec {
        FamilySpec::SingleVertex => Ok(Hypergraph::edgeless(1)),
        FamilySpec::Bk { k } => {
            if k == 0 {
                return invalid(format!("b_k needs k >= 1, got {k}"));
            }
            capacity(k)?;
            Hypergraph::new(k, [VertexSet::full(k)])
        }
        FamilySpec::Sunflower { uniformity, core, petals } => {
            if uniformity < core + 1 {
                return invalid(format!(
                    "sunflower needs uniformity >= core + 1, got uniformity {uniformity}, core {core}"
                ));
            }
            if petals == 0 {
                return invalid("sunflower needs at least one petal".into());
            }
            let private = uniformity - core;
            let n = core + petals * private;
            capacity(n)?;
            let core_set = VertexSet::full(core);
            let edges = (0..petals).map(|p| {
                let start = core + p * private;
                core_set | VertexSet::from_vertices(start..start + private)
            });
            Hypergraph::new(n, edges)
        }
        FamilySpec::Hnk { n, k } => {
            if k == 0 || n < k {
                return invalid(format!("h_nk needs n >= k >= 1, got n {n}, k {k}"));
            }
            capacity(n)?;
            let mut edges = Vec::new();
            for a in 0..k {
                for b in a + 1..k {
                    edges.push(VertexSet::from_vertices([a, b]));
                }
            }
            edges.push(VertexSet::full(n));
            Hypergraph::new(n, edges)
        }
        FamilySpec::GroheMarx { n } => {
            if n == 0 {
                return invalid("grohe_marx needs n >= 1".into());
            }
            // C(2n, n), saturating once it is far beyond the capacity
            let vertices = (0..n).try_fold(1usize, |acc, i| {
                acc.checked_mul(2 * n - i).map(|x| x / (i + 1)).filter(|&x| x <= MAX_VERTICES * 64)
            });
            capacity(vertices.unwrap_or(usize::MAX))?;
            let mut subsets: Vec<VertexSet> =
                VertexSet::full(2 * n).subsets().filter(|s| s.len() == n).collect();
            subsets.sort();
            let edges = (0..2 * n).map(|i| {
                subsets
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| s.contains(i))
                    .map(|(idx, _)| idx)
                    .collect::<VertexSet>()
            });
            Hypergraph::new(subsets.len(), edges)
        }
        FamilySpec::DisjointEdges { m, r } => {
            if m == 0 || r == 0 {
                return invalid(format!("disjoint_edges needs m, r >= 1, got m {m}, r {r}"));
            }
            capacity(m * r)?;
            Hypergraph::new(m * r, (0..m).map(|i| VertexSet::from_vertices(i * r..(i + 1) * r)))
        }
        FamilySpec::HatOfGraph(ref g) => g.with_full_edge(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b3() {
        let h = generate(&FamilySpec::Bk { k: 3 }).unwrap();
        assert_eq!(h, Hypergraph::from_lists(3, &[&[0, 1, 2]]).unwrap());
    }

    #[test]
    fn grohe_marx_two() {
        let h = generate(&FamilySpec::GroheMarx { n: 2 }).unwrap();
        assert_eq!(h.vertex_count(), 6);
        assert_eq!(h.edge_count(), 4);
        assert!(h.edges().iter().all(|e| e.len() == 3));
        // vertex count C(6,3) for n = 3
        assert_eq!(generate(&FamilySpec::GroheMarx { n: 3 }).unwrap().vertex_count(), 20);
        assert!(generate(&FamilySpec::GroheMarx { n: 4 }).is_err());
    }

    #[test]
    fn sunflower_shape() {
        let h = generate(&FamilySpec::Sunflower { uniformity: 4, core: 3, petals: 2 }).unwrap();
        assert_eq!(h.vertex_count(), 5);
        assert_eq!(h.edge_count(), 2);
        assert_eq!((h.edges()[0] & h.edges()[1]).len(), 3);
        assert!(generate(&FamilySpec::Sunflower { uniformity: 3, core: 3, petals: 2 }).is_err());
    }

    #[test]
    fn hnk_and_others() {
        let h = generate(&FamilySpec::Hnk { n: 5, k: 3 }).unwrap();
        assert_eq!(h.edge_count(), 4);
        assert_eq!(h.rank(), 5);
        assert!(generate(&FamilySpec::Hnk { n: 2, k: 3 }).is_err());
        let d = generate(&FamilySpec::DisjointEdges { m: 3, r: 2 }).unwrap();
        assert_eq!((d.vertex_count(), d.edge_count()), (6, 3));
        assert_eq!(generate(&FamilySpec::SingleVertex).unwrap(), Hypergraph::edgeless(1));
        let p3 = Hypergraph::from_lists(3, &[&[0, 1], &[1, 2]]).unwrap();
        assert_eq!(generate(&FamilySpec::HatOfGraph(p3)).unwrap().edge_count(), 3);
    }
}
