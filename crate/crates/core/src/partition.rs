//! Set partitions of `{0, .., n-1}`, quotients and the Möbius function of the
//! partition lattice.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexSet};

/// Largest ground set for which partitions are enumerated (Bell(12) = 4213597).
pub const PARTITION_CAP: usize = 12;

/// A partition stored as a restricted growth string: `block_of[v]` is the
/// block of `v`, and blocks are numbered in order of their smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    block_of: Vec<usize>,
    blocks: usize,
}

impl Partition {
    /// Normalise an arbitrary block assignment to canonical labelling.
    pub fn from_assignment(assignment: &[usize]) -> Partition {
        let mut relabel: Vec<(usize, usize)> = Vec::new();
        let mut block_of = Vec::with_capacity(assignment.len());
        for &a in assignment {
            let id = match relabel.iter().find(|(old, _)| *old == a) {
                Some(&(_, new)) => new,
                None => {
                    let new = relabel.len();
                    relabel.push((a, new));
                    new
                }
            };
            block_of.push(id);
        }
        Partition { blocks: relabel.len(), block_of }
    }

    /// Validate a restricted growth string.
    pub fn from_rgs(block_of: Vec<usize>) -> Result<Partition> {
        let mut next = 0;
        for (v, &b) in block_of.iter().enumerate() {
            if b > next {
                return Err(Error::InvalidPartition(alloc::format!(
                    "vertex {v} opens block {b} before block {next}"
                )));
            }
            if b == next {
                next += 1;
            }
        }
        Ok(Partition { blocks: next, block_of })
    }

    /// Every vertex in its own block.
    pub fn discrete(n: usize) -> Partition {
        Partition { block_of: (0..n).collect(), blocks: n }
    }

    /// One block containing everything (for `n >= 1`).
    pub fn single_block(n: usize) -> Partition {
        Partition { block_of: vec![0; n], blocks: usize::from(n > 0) }
    }

    pub fn ground_size(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_count(&self) -> usize {
        self.blocks
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.block_of
    }

    pub fn blocks(&self) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::EMPTY; self.blocks];
        for (v, &b) in self.block_of.iter().enumerate() {
            out[b] = out[b].with(v);
        }
        out
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.blocks];
        for &b in &self.block_of {
            out[b] += 1;
        }
        out
    }

    /// `X/τ`: the set of blocks meeting `X`.
    pub fn quotient_set(&self, x: VertexSet) -> VertexSet {
        x.map(&self.block_of)
    }

    /// Merge blocks of `self` according to `outer`, a partition of the
    /// blocks of `self`.
    pub fn coarsen(&self, outer: &Partition) -> Partition {
        debug_assert_eq!(outer.ground_size(), self.blocks);
        let assignment: Vec<usize> = self.block_of.iter().map(|&b| outer.block_of(b)).collect();
        Partition::from_assignment(&assignment)
    }

    /// True when every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        let mut image = vec![usize::MAX; self.blocks];
        for (v, &b) in self.block_of.iter().enumerate() {
            let target = other.block_of[v];
            if image[b] == usize::MAX {
                image[b] = target;
            } else if image[b] != target {
                return false;
            }
        }
        true
    }

    /// `μ(0̂, τ) = Π_B (-1)^{|B|-1} (|B|-1)!`.
    pub fn mobius(&self) -> i64 {
        self.block_sizes().into_iter().fold(1i64, |acc, size| {
            let fact: i64 = (1..size as i64).product();
            if size % 2 == 0 {
                -acc * fact
            } else {
                acc * fact
            }
        })
    }
}

/// Quotient `H/τ`: vertex `i` is block `i`, each edge becomes the set of
/// blocks it meets.
pub fn quotient(h: &Hypergraph, tau: &Partition) -> Result<Hypergraph> {
    if tau.ground_size() != h.vertex_count() {
        return Err(Error::InvalidPartition(alloc::format!(
            "partition of {} elements applied to {} vertices",
            tau.ground_size(),
            h.vertex_count()
        )));
    }
    let edges = h.edges().iter().map(|&e| tau.quotient_set(e)).collect();
    Ok(Hypergraph::from_sorted(tau.block_count(), edges))
}

/// Enumerate all partitions of `{0..n-1}` in restricted-growth order.
pub fn partitions(n: usize) -> Result<Partitions> {
    if n > PARTITION_CAP {
        return Err(Error::SizeCap { what: "partition enumeration", size: n, cap: PARTITION_CAP });
    }
    Ok(Partitions { rgs: vec![0; n], maxes: vec![0; n], done: false })
}

pub struct Partitions {
    rgs: Vec<usize>,
    // maxes[i] = max(rgs[0..i]) (blocks opened before position i, minus one)
    maxes: Vec<usize>,
    done: bool,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let n = self.rgs.len();
        let blocks = if n == 0 { 0 } else { self.rgs.iter().max().unwrap() + 1 };
        let current = Partition { block_of: self.rgs.clone(), blocks };
        // advance: find rightmost position that can be incremented
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.rgs[i] <= self.maxes[i] {
                self.rgs[i] += 1;
                for j in i + 1..n {
                    self.maxes[j] = self.maxes[j - 1].max(self.rgs[j - 1]);
                    self.rgs[j] = 0;
                }
                break;
            }
        }
        Some(current)
    }
}

/// Bell numbers by the triangle recurrence.
pub fn bell(n: usize) -> u128 {
    let mut row: Vec<u128> = vec![1];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for x in &row {
            let last = *next.last().unwrap();
            next.push(last + x);
        }
        row = next;
    }
    row[0]
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    /// Recursive oracle: `μ(0̂,τ) = -Σ_{σ < τ} μ(0̂,σ)`, with σ ranging over
    /// the partitions strictly refining τ.
    fn mobius_recursive(tau: &Partition) -> i64 {
        let n = tau.ground_size();
        if tau.block_count() == n {
            return 1;
        }
        -partitions(n)
            .unwrap()
            .filter(|s| s != tau && s.refines(tau))
            .map(|s| mobius_recursive(&s))
            .sum::<i64>()
    }

    #[test]
    fn bell_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions(n).unwrap().count()).collect();
        assert_eq!(counts, [1, 1, 2, 5, 15, 52, 203, 877, 4140]);
        for n in 0..=8 {
            assert_eq!(counts[n] as u128, bell(n));
            let distinct: BTreeSet<Partition> = partitions(n).unwrap().collect();
            assert_eq!(distinct.len(), counts[n]);
        }
        assert!(partitions(13).is_err());
    }

    #[test]
    fn mobius_values() {
        assert_eq!(Partition::discrete(4).mobius(), 1);
        assert_eq!(Partition::single_block(2).mobius(), -1);
        assert_eq!(Partition::single_block(3).mobius(), 2);
        for n in 1..=5 {
            for tau in partitions(n).unwrap() {
                assert_eq!(tau.mobius(), mobius_recursive(&tau), "{tau:?}");
            }
        }
    }

    #[test]
    fn mobius_column_sums_vanish() {
        for n in 2..=6 {
            let sum: i64 = partitions(n).unwrap().map(|t| t.mobius()).sum();
            assert_eq!(sum, 0);
        }
    }

    #[test]
    fn rgs_validation() {
        assert!(Partition::from_rgs(vec![0, 2]).is_err());
        let p = Partition::from_rgs(vec![0, 1, 0]).unwrap();
        assert_eq!(p.block_count(), 2);
        assert_eq!(Partition::from_assignment(&[7, 3, 7]), p);
    }

    #[test]
    fn quotients_of_small_edge() {
        let b2 = Hypergraph::from_lists(2, &[&[0, 1]]).unwrap();
        let q = quotient(&b2, &Partition::single_block(2)).unwrap();
        assert_eq!(q, Hypergraph::from_lists(1, &[&[0]]).unwrap());
        assert_eq!(quotient(&b2, &Partition::discrete(2)).unwrap(), b2);
    }
}
