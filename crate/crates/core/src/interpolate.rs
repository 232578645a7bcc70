//! Recovering the coefficients of a linear combination of homomorphism
//! counts from evaluations of the combination, and through it the
//! homomorphism counts hidden inside a pattern-count oracle.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::basis::{expansion, ExpansionKind};
use crate::canon::{canonical_key, classes_up_to, count_automorphisms, CanonicalKey};
use crate::counting::{count_morphisms, Budget, MorphismKind};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::linalg::{determinant, rank, solve};
use crate::tensor::tensor_with_budget;
use crate::Rational;

/// Oracle for `F ↦ Σ_i a_i · Hom(H_i, F)` with declared support `H_i`.
pub struct MotifOracle<'a> {
    pub support: Vec<Hypergraph>,
    oracle: Box<dyn FnMut(&Hypergraph) -> Result<Rational> + 'a>,
}

impl<'a> MotifOracle<'a> {
    pub fn new(support: Vec<Hypergraph>, oracle: impl FnMut(&Hypergraph) -> Result<Rational> + 'a) -> Self {
        MotifOracle { support, oracle: Box::new(oracle) }
    }

    pub fn query(&mut self, f: &Hypergraph) -> Result<Rational> {
        (self.oracle)(f)
    }
}

/// Limits for the probe search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProbeOptions {
    /// Largest vertex count of the enumerated (non-tensor) probe candidates.
    pub enumerated_vertices: usize,
    /// Rank bound handed to the tensor product.
    pub rank_budget: usize,
    pub budget: Budget,
}

impl Default for ProbeOptions {
    fn default() -> Self {
        ProbeOptions {
            enumerated_vertices: 4,
            rank_budget: crate::tensor::DEFAULT_RANK_BUDGET,
            budget: Budget::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interpolation {
    /// `a_i` for each support element, in support order.
    pub coefficients: Vec<Rational>,
    pub probes: Vec<Hypergraph>,
    /// `matrix[j][i] = Hom(H_i, F_j)`.
    pub matrix: Vec<Vec<Rational>>,
    pub oracle_calls: usize,
}

fn int(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Probes `F_1..F_k` with `(Hom(H_i, F_j))` non-singular, chosen in a fixed
/// order that depends only on the support: the support itself, pairwise
/// tensor products, then every small hypergraph truncated to the support's
/// maximum rank.
pub fn select_probes(support: &[Hypergraph], options: &ProbeOptions) -> Result<(Vec<Hypergraph>, Vec<Vec<Rational>>)> {
    let k = support.len();
    let mut keys = BTreeSet::new();
    for h in support {
        if !keys.insert(canonical_key(h)?) {
            return Err(Error::InvalidParameter(format!("support contains {h:?} twice up to isomorphism")));
        }
    }
    let max_rank = support.iter().map(|h| h.rank()).max().unwrap_or(0);
    let mut probes = Vec::new();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut tried: BTreeSet<CanonicalKey> = BTreeSet::new();

    let mut consider = |f: Hypergraph, probes: &mut Vec<Hypergraph>, rows: &mut Vec<Vec<Rational>>| -> Result<bool> {
        if rows.len() == k || !tried.insert(canonical_key(&f)?) {
            return Ok(rows.len() == k);
        }
        let row = support
            .iter()
            .map(|h| count_morphisms(MorphismKind::Hom, h, &f, &options.budget).map(int))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
        if rank(rows) == rows.len() {
            probes.push(f);
        } else {
            rows.pop();
        }
        Ok(rows.len() == k)
    };

    for h in support {
        if consider(h.clone(), &mut probes, &mut rows)? {
            break;
        }
    }
    'pairs: for i in 0..k {
        for j in i..k {
            if rows.len() == k {
                break 'pairs;
            }
            match tensor_with_budget(&support[i], &support[j], options.rank_budget) {
                Ok(t) if t.vertex_count() <= crate::canon::CANON_CAP => {
                    consider(t, &mut probes, &mut rows)?;
                }
                // products too large to canonicalise or build are skipped
                Ok(_) | Err(Error::Capacity { .. }) | Err(Error::SizeCap { .. }) => {}
                Err(e) => return Err(e),
            }
        }
    }
    if rows.len() < k {
        for f in classes_up_to(options.enumerated_vertices) {
            if consider(f.rank_truncate(max_rank), &mut probes, &mut rows)? {
                break;
            }
        }
    }
    if rows.len() < k {
        return Err(Error::ProbeSearchExhausted { support: k, rank: rows.len() });
    }
    Ok((probes, rows))
}

/// Coefficients `a_i` of `F ↦ Σ a_i Hom(H_i, F)` from `k` oracle calls.
pub fn dedekind_interpolate(oracle: &mut MotifOracle<'_>, options: &ProbeOptions) -> Result<Interpolation> {
    let (probes, matrix) = select_probes(&oracle.support, options)?;
    let mut values = Vec::with_capacity(probes.len());
    for f in &probes {
        values.push(oracle.query(f)?);
    }
    debug_assert!(!determinant(&matrix).is_zero());
    let coefficients = solve(&matrix, &values)?;
    Ok(Interpolation { coefficients, oracle_calls: probes.len(), probes, matrix })
}

/// Everything recovered from one interpolation against a pattern oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternInterpolation {
    /// Support of the embedding expansion of `H`.
    pub support: Vec<Hypergraph>,
    /// `Hom(F, G)` for each support element, in support order.
    pub homs: Vec<u64>,
    pub probes: Vec<Hypergraph>,
    pub oracle_calls: usize,
}

/// Recover `Hom(F, G)` for every `F` in the support of the expansion of
/// `kind` at `H`, using only calls to a pattern-count oracle for `H`.
///
/// The motif oracle is `F' ↦ Aut(H) · oracle(trunc(F') ⊗ trunc(G))`, whose
/// coefficient on `F` is `γ(F) · Hom(F, G)`.
pub fn interpolate_pattern_oracle(
    kind: ExpansionKind,
    h: &Hypergraph,
    pattern_oracle: &mut dyn FnMut(&Hypergraph) -> Result<u64>,
    g: &Hypergraph,
    options: &ProbeOptions,
) -> Result<PatternInterpolation> {
    let embedding_kind = match kind {
        ExpansionKind::Sub => ExpansionKind::Emb,
        ExpansionKind::IndSub => ExpansionKind::StrEmb,
        other => {
            return Err(Error::InvalidParameter(format!(
                "pattern oracles are supported for sub and indsub, not {}",
                other.name()
            )))
        }
    };
    let gamma = expansion(embedding_kind, h)?;
    let support = gamma.support();
    let ell = gamma.max_rank();
    let aut = int(count_automorphisms(h)?);
    let truncated_g = g.rank_truncate(ell);
    let rank_budget = options.rank_budget;
    let mut oracle = MotifOracle::new(support.clone(), |f: &Hypergraph| {
        let host = tensor_with_budget(&f.rank_truncate(ell), &truncated_g, rank_budget)?;
        Ok(&aut * int(pattern_oracle(&host)?))
    });
    let result = dedekind_interpolate(&mut oracle, options)?;
    let mut homs = Vec::with_capacity(support.len());
    for (f, a) in support.iter().zip(&result.coefficients) {
        let value = a / gamma.coefficient(f)?;
        if !value.is_integer() || value < Rational::zero() {
            return Err(Error::Inconsistent(format!(
                "recovered Hom({f:?}, G) = {value} is not a non-negative integer"
            )));
        }
        let value = u64::try_from(value.to_integer())
            .map_err(|_| Error::Inconsistent(format!("recovered Hom({f:?}, G) = {value} overflows")))?;
        homs.push(value);
    }
    Ok(PatternInterpolation { support, homs, probes: result.probes, oracle_calls: result.oracle_calls })
}

/// `Hom(F, G)` for a single `F` in the support; see
/// [`interpolate_pattern_oracle`].
pub fn homs_from_pattern_oracle(
    kind: ExpansionKind,
    h: &Hypergraph,
    target: &Hypergraph,
    pattern_oracle: &mut dyn FnMut(&Hypergraph) -> Result<u64>,
    g: &Hypergraph,
    options: &ProbeOptions,
) -> Result<u64> {
    let target_key = canonical_key(target)?;
    let result = interpolate_pattern_oracle(kind, h, pattern_oracle, g, options)?;
    for (f, homs) in result.support.iter().zip(&result.homs) {
        if canonical_key(f)? == target_key {
            return Ok(*homs);
        }
    }
    Err(Error::ZeroCoefficient(format!("{target:?} has coefficient zero in the expansion")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::evaluate;
    use crate::counting::{count_patterns_by_morphisms, PatternKind};
    use crate::hypergraph::VertexSet;
    use crate::tensor::tensor;

    fn b(k: usize) -> Hypergraph {
        Hypergraph::new(k, [VertexSet::full(k)]).unwrap()
    }

    #[test]
    fn recovers_known_combination() {
        let budget = Budget::default();
        let single = Hypergraph::edgeless(1);
        let support = alloc::vec![single.clone(), b(2)];
        let mut oracle = MotifOracle::new(support, |f: &Hypergraph| {
            let a = count_morphisms(MorphismKind::Hom, &single, f, &budget)?;
            let c = count_morphisms(MorphismKind::Hom, &b(2), f, &budget)?;
            Ok(int(3 * a + 5 * c))
        });
        let result = dedekind_interpolate(&mut oracle, &ProbeOptions::default()).unwrap();
        assert_eq!(result.coefficients, [int(3), int(5)]);
        assert!(!determinant(&result.matrix).is_zero());
    }

    #[test]
    fn single_element_uses_itself() {
        let budget = Budget::default();
        let h = Hypergraph::from_lists(3, &[&[0, 1], &[1, 2]]).unwrap();
        let mut oracle = MotifOracle::new(alloc::vec![h.clone()], |f: &Hypergraph| {
            Ok(int(count_morphisms(MorphismKind::Hom, &h, f, &budget)?))
        });
        let result = dedekind_interpolate(&mut oracle, &ProbeOptions::default()).unwrap();
        assert_eq!(result.probes, [h.clone()]);
        assert_eq!(result.coefficients, [int(1)]);
    }

    #[test]
    fn motif_oracle_on_tensor_hosts() {
        let budget = Budget::default();
        let gamma = expansion(ExpansionKind::Sub, &b(2)).unwrap();
        let g = b(3);
        let mut oracle = MotifOracle::new(gamma.support(), |f: &Hypergraph| {
            evaluate(&gamma, &tensor(f, &g)?, MorphismKind::Hom, &budget)
        });
        let result = dedekind_interpolate(&mut oracle, &ProbeOptions::default()).unwrap();
        for (f, a) in gamma.support().iter().zip(&result.coefficients) {
            let expected = gamma.coefficient(f).unwrap() * int(count_morphisms(MorphismKind::Hom, f, &g, &budget).unwrap());
            assert_eq!(*a, expected);
        }
    }

    #[test]
    fn pattern_oracle_round_trip() {
        let budget = Budget::default();
        let options = ProbeOptions::default();
        let mut sub = |host: &Hypergraph| count_patterns_by_morphisms(PatternKind::Sub, &b(2), host, &budget);
        assert_eq!(homs_from_pattern_oracle(ExpansionKind::Sub, &b(2), &b(2), &mut sub, &b(2), &options).unwrap(), 2);
        assert_eq!(homs_from_pattern_oracle(ExpansionKind::Sub, &b(2), &b(1), &mut sub, &b(3), &options).unwrap(), 0);
        let single = Hypergraph::edgeless(1);
        let g = Hypergraph::from_lists(4, &[&[0, 1, 2]]).unwrap();
        let mut ind = |host: &Hypergraph| count_patterns_by_morphisms(PatternKind::IndSub, &single, host, &budget);
        assert_eq!(homs_from_pattern_oracle(ExpansionKind::IndSub, &single, &single, &mut ind, &g, &options).unwrap(), 4);
    }
}
