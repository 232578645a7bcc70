//! Expansions of embedding and pattern counts in the homomorphism (or
//! trimmed homomorphism) basis, and evaluation of motif parameters.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::canon::{canonical_form, canonical_key, classes_up_to, count_automorphisms, CanonicalKey};
use crate::counting::{count_morphisms, count_patterns, Budget, MorphismKind, PatternKind};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::partition::{partitions, quotient};
use crate::Rational;

/// Default vertex cap for closed-form expansions.
pub const EXPANSION_CAP: usize = 5;
/// Default cap on the number of non-edges summed over by strong expansions.
pub const NON_EDGE_CAP: usize = 15;

/// A finitely supported rational function on isomorphism classes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MotifParameter {
    terms: BTreeMap<CanonicalKey, (Hypergraph, Rational)>,
}

impl MotifParameter {
    pub fn new() -> MotifParameter {
        MotifParameter::default()
    }

    /// Add `coefficient` to the class of `h`, dropping the term if it cancels.
    pub fn add(&mut self, h: &Hypergraph, coefficient: Rational) -> Result<()> {
        if coefficient.is_zero() {
            return Ok(());
        }
        let key = canonical_key(h)?;
        match self.terms.get_mut(&key) {
            Some((_, c)) => {
                *c += coefficient;
                if c.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, (canonical_form(h)?, coefficient));
            }
        }
        Ok(())
    }

    pub fn coefficient(&self, h: &Hypergraph) -> Result<Rational> {
        Ok(self.terms.get(&canonical_key(h)?).map_or_else(Rational::zero, |(_, c)| c.clone()))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical-key order.
    pub fn iter(&self) -> impl Iterator<Item = (&Hypergraph, &Rational)> {
        self.terms.values().map(|(h, c)| (h, c))
    }

    pub fn support(&self) -> Vec<Hypergraph> {
        self.terms.values().map(|(h, _)| h.clone()).collect()
    }

    pub fn scaled(&self, factor: &Rational) -> MotifParameter {
        let mut out = MotifParameter::new();
        if factor.is_zero() {
            return out;
        }
        for (key, (h, c)) in &self.terms {
            out.terms.insert(key.clone(), (h.clone(), c * factor));
        }
        out
    }

    /// Largest edge size over the support.
    pub fn max_rank(&self) -> usize {
        self.terms.values().map(|(h, _)| h.rank()).max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExpansionKind {
    Emb,
    StrEmb,
    Sub,
    IndSub,
    TrimEmb,
    TrimStrEmb,
    TrimSub,
    TrimIndSub,
}

impl ExpansionKind {
    pub const ALL: [ExpansionKind; 8] = [
        ExpansionKind::Emb,
        ExpansionKind::StrEmb,
        ExpansionKind::Sub,
        ExpansionKind::IndSub,
        ExpansionKind::TrimEmb,
        ExpansionKind::TrimStrEmb,
        ExpansionKind::TrimSub,
        ExpansionKind::TrimIndSub,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExpansionKind::Emb => "emb",
            ExpansionKind::StrEmb => "stremb",
            ExpansionKind::Sub => "sub",
            ExpansionKind::IndSub => "indsub",
            ExpansionKind::TrimEmb => "trimemb",
            ExpansionKind::TrimStrEmb => "trimstremb",
            ExpansionKind::TrimSub => "trimsub",
            ExpansionKind::TrimIndSub => "trimindsub",
        }
    }

    pub fn parse(name: &str) -> Option<ExpansionKind> {
        ExpansionKind::ALL.into_iter().find(|k| k.name() == name)
    }

    pub fn is_trimmed(self) -> bool {
        matches!(
            self,
            ExpansionKind::TrimEmb | ExpansionKind::TrimStrEmb | ExpansionKind::TrimSub | ExpansionKind::TrimIndSub
        )
    }

    /// Whether the expansion sums over edge-supergraphs.
    pub fn is_strong(self) -> bool {
        matches!(
            self,
            ExpansionKind::StrEmb | ExpansionKind::IndSub | ExpansionKind::TrimStrEmb | ExpansionKind::TrimIndSub
        )
    }

    /// Whether the target is a pattern count (embeddings over `Aut(H)`).
    pub fn is_pattern(self) -> bool {
        matches!(
            self,
            ExpansionKind::Sub | ExpansionKind::IndSub | ExpansionKind::TrimSub | ExpansionKind::TrimIndSub
        )
    }

    /// The basis the expansion is written in.
    pub fn basis(self) -> MorphismKind {
        if self.is_trimmed() {
            MorphismKind::TrimHom
        } else {
            MorphismKind::Hom
        }
    }

    /// Exact value `f_kind(H, G)` from the counting module.
    pub fn count(self, h: &Hypergraph, g: &Hypergraph, budget: &Budget) -> Result<u64> {
        match self {
            ExpansionKind::Emb => count_morphisms(MorphismKind::Emb, h, g, budget),
            ExpansionKind::StrEmb => count_morphisms(MorphismKind::StrEmb, h, g, budget),
            ExpansionKind::TrimEmb => count_morphisms(MorphismKind::TrimEmb, h, g, budget),
            ExpansionKind::TrimStrEmb => count_morphisms(MorphismKind::StrTrimEmb, h, g, budget),
            ExpansionKind::Sub => count_patterns(PatternKind::Sub, h, g, budget),
            ExpansionKind::IndSub => count_patterns(PatternKind::IndSub, h, g, budget),
            ExpansionKind::TrimSub => count_patterns(PatternKind::TrimSub, h, g, budget),
            ExpansionKind::TrimIndSub => count_patterns(PatternKind::IndTrimSub, h, g, budget),
        }
    }
}

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Caps for closed-form expansions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpansionCaps {
    pub vertices: usize,
    pub non_edges: usize,
}

impl Default for ExpansionCaps {
    fn default() -> Self {
        ExpansionCaps { vertices: EXPANSION_CAP, non_edges: NON_EDGE_CAP }
    }
}

/// `Σ_τ μ(τ)·[H/τ]`.
fn mobius_sum(h: &Hypergraph, sign: i64, out: &mut MotifParameter) -> Result<()> {
    for tau in partitions(h.vertex_count())? {
        out.add(&quotient(h, &tau)?, int(sign * tau.mobius()))?;
    }
    Ok(())
}

/// Closed-form expansion: Möbius inversion over the partition lattice, with
/// inclusion–exclusion over added non-edges for the strong kinds, divided
/// by `Aut(H)` for pattern kinds. The same formula is used for the plain and
/// the trimmed basis.
pub fn expansion_with_caps(kind: ExpansionKind, h: &Hypergraph, caps: &ExpansionCaps) -> Result<MotifParameter> {
    if h.vertex_count() > caps.vertices {
        return Err(Error::SizeCap { what: "expansion (pattern vertices)", size: h.vertex_count(), cap: caps.vertices });
    }
    let mut out = MotifParameter::new();
    if kind.is_strong() {
        for (added, supergraph) in h.edge_supergraphs(caps.non_edges)? {
            let sign = if added.len() % 2 == 0 { 1 } else { -1 };
            mobius_sum(&supergraph, sign, &mut out)?;
        }
    } else {
        mobius_sum(h, 1, &mut out)?;
    }
    if kind.is_pattern() {
        let aut = count_automorphisms(h)?;
        out = out.scaled(&Rational::new(BigInt::one(), BigInt::from(aut)));
    }
    Ok(out)
}

pub fn expansion(kind: ExpansionKind, h: &Hypergraph) -> Result<MotifParameter> {
    expansion_with_caps(kind, h, &ExpansionCaps::default())
}

/// `Σ_F γ(F)·Kind(F, G)` with `Kind` the homomorphism or trimmed
/// homomorphism count.
pub fn evaluate(gamma: &MotifParameter, g: &Hypergraph, basis: MorphismKind, budget: &Budget) -> Result<Rational> {
    if !matches!(basis, MorphismKind::Hom | MorphismKind::TrimHom) {
        return Err(Error::InvalidParameter(format!("evaluation basis must be hom or trimhom, not {}", basis.name())));
    }
    let mut total = Rational::zero();
    for (f, c) in gamma.iter() {
        let count = count_morphisms(basis, f, g, budget)?;
        total += c * Rational::from_integer(BigInt::from(count));
    }
    Ok(total)
}

/// The quotients of `h` (and of its edge-supergraphs, for strong kinds),
/// one representative per class.
pub fn candidate_support(kind: ExpansionKind, h: &Hypergraph, caps: &ExpansionCaps) -> Result<Vec<Hypergraph>> {
    let mut seen: BTreeMap<CanonicalKey, Hypergraph> = BTreeMap::new();
    let mut visit = |x: &Hypergraph| -> Result<()> {
        for tau in partitions(x.vertex_count())? {
            let q = quotient(x, &tau)?;
            seen.entry(canonical_key(&q)?).or_insert(q);
        }
        Ok(())
    };
    if kind.is_strong() {
        for (_, supergraph) in h.edge_supergraphs(caps.non_edges)? {
            visit(&supergraph)?;
        }
    } else {
        visit(h)?;
    }
    Ok(seen.into_values().collect())
}

/// Largest probe host used by [`fit_expansion`].
pub const FIT_PROBE_VERTICES: usize = 4;

/// Solve `Σ_F γ(F)·Kind(F, G_j) = f_kind(H, G_j)` exactly over every probe
/// host `G_j` on at most four vertices, with `F` ranging over `candidates`.
pub fn fit_expansion(
    kind: ExpansionKind,
    h: &Hypergraph,
    candidates: &[Hypergraph],
    budget: &Budget,
) -> Result<MotifParameter> {
    fit_expansion_over(kind, h, candidates, &classes_up_to(FIT_PROBE_VERTICES), budget)
}

/// [`fit_expansion`] with an explicit probe family. Every probe is used:
/// once the system has full rank the remaining probes only check
/// consistency.
pub fn fit_expansion_over(
    kind: ExpansionKind,
    h: &Hypergraph,
    candidates: &[Hypergraph],
    probes: &[Hypergraph],
    budget: &Budget,
) -> Result<MotifParameter> {
    let mut unique: BTreeMap<CanonicalKey, Hypergraph> = BTreeMap::new();
    for c in candidates {
        unique.entry(canonical_key(c)?).or_insert_with(|| c.clone());
    }
    let support: Vec<Hypergraph> = unique.into_values().collect();
    let m = support.len();
    let basis = kind.basis();
    // reduced rows with their pivot columns
    let mut reduced: Vec<(usize, Vec<Rational>)> = Vec::new();
    let mut solution: Option<Vec<Rational>> = if m == 0 { Some(Vec::new()) } else { None };
    let inconsistent = |g: &Hypergraph| {
        Error::Inconsistent(format!(
            "{} of {h:?} is not a combination of the {m} candidate hypergraphs (probe {g:?})",
            kind.name()
        ))
    };
    for g in probes {
        let mut row = Vec::with_capacity(m + 1);
        for f in &support {
            row.push(int(count_morphisms(basis, f, g, budget)? as i64));
        }
        let value = int(kind.count(h, g, budget)? as i64);
        if let Some(x) = &solution {
            let predicted: Rational = row.iter().zip(x).map(|(a, b)| a * b).sum();
            if predicted != value {
                return Err(inconsistent(g));
            }
            continue;
        }
        row.push(value);
        for (p, r) in &reduced {
            if !row[*p].is_zero() {
                let factor = row[*p].clone();
                for (x, y) in row.iter_mut().zip(r) {
                    *x -= &factor * y;
                }
            }
        }
        let Some(p) = (0..m).find(|&j| !row[j].is_zero()) else {
            if !row[m].is_zero() {
                return Err(inconsistent(g));
            }
            continue;
        };
        let inv = Rational::one() / &row[p];
        for x in row.iter_mut() {
            *x *= &inv;
        }
        for (_, r) in reduced.iter_mut() {
            if !r[p].is_zero() {
                let factor = r[p].clone();
                for (x, y) in r.iter_mut().zip(&row) {
                    *x -= &factor * y;
                }
            }
        }
        reduced.push((p, row));
        if reduced.len() == m {
            let mut x = alloc::vec![Rational::zero(); m];
            for (p, r) in &reduced {
                x[*p] = r[m].clone();
            }
            solution = Some(x);
        }
    }
    let Some(x) = solution else {
        return Err(Error::Underdetermined { unknowns: m, rank: reduced.len() });
    };
    let mut out = MotifParameter::new();
    for (f, c) in support.iter().zip(x) {
        out.add(f, c)?;
    }
    Ok(out)
}

/// A closed-form expansion checked against a fitted one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidatedExpansion {
    pub parameter: MotifParameter,
    /// Set when the closed form disagreed with the fit; the fitted
    /// coefficients are then returned in `parameter`.
    pub discrepancy: Option<String>,
}

/// For trimmed kinds, fit the expansion over the candidate support and
/// prefer the fitted coefficients on disagreement. Plain kinds are returned
/// as computed.
pub fn validated_expansion(kind: ExpansionKind, h: &Hypergraph, budget: &Budget) -> Result<ValidatedExpansion> {
    let closed = expansion(kind, h)?;
    if !kind.is_trimmed() || h.vertex_count() > FIT_PROBE_VERTICES {
        return Ok(ValidatedExpansion { parameter: closed, discrepancy: None });
    }
    let candidates = candidate_support(kind, h, &ExpansionCaps::default())?;
    let fitted = fit_expansion(kind, h, &candidates, budget)?;
    if fitted == closed {
        Ok(ValidatedExpansion { parameter: closed, discrepancy: None })
    } else {
        let discrepancy = Some(format!(
            "{} expansion of {h:?}: closed form has {} terms, fit has {} terms",
            kind.name(),
            closed.len(),
            fitted.len()
        ));
        Ok(ValidatedExpansion { parameter: fitted, discrepancy })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::VertexSet;

    fn b(k: usize) -> Hypergraph {
        Hypergraph::new(k, [VertexSet::full(k)]).unwrap()
    }

    #[test]
    fn emb_of_b2() {
        let gamma = expansion(ExpansionKind::Emb, &b(2)).unwrap();
        assert_eq!(gamma.len(), 2);
        assert_eq!(gamma.coefficient(&b(2)).unwrap(), int(1));
        assert_eq!(gamma.coefficient(&b(1)).unwrap(), int(-1));
        let single = expansion(ExpansionKind::Emb, &Hypergraph::edgeless(1)).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single.coefficient(&Hypergraph::edgeless(1)).unwrap(), int(1));
    }

    #[test]
    fn stremb_self_coefficient() {
        let gamma = expansion(ExpansionKind::StrEmb, &b(2)).unwrap();
        assert_eq!(gamma.coefficient(&b(2)).unwrap(), int(1));
    }

    #[test]
    fn evaluation() {
        let budget = Budget::default();
        assert_eq!(evaluate(&MotifParameter::new(), &b(3), MorphismKind::Hom, &budget).unwrap(), int(0));
        let gamma = expansion(ExpansionKind::TrimIndSub, &b(2)).unwrap();
        assert_eq!(evaluate(&gamma, &b(3), MorphismKind::TrimHom, &budget).unwrap(), int(3));
    }

    #[test]
    fn fit_reproduces_closed_form() {
        let budget = Budget::default();
        let candidates = candidate_support(ExpansionKind::Emb, &b(2), &ExpansionCaps::default()).unwrap();
        let fitted = fit_expansion(ExpansionKind::Emb, &b(2), &candidates, &budget).unwrap();
        assert_eq!(fitted, expansion(ExpansionKind::Emb, &b(2)).unwrap());
    }

    #[test]
    fn fit_detects_missing_term() {
        let budget = Budget::default();
        let err = fit_expansion(ExpansionKind::Emb, &b(2), &[b(2)], &budget).unwrap_err();
        assert!(matches!(err, Error::Inconsistent(_)), "{err:?}");
    }

    #[test]
    fn trimmed_fit_nonzero_on_pattern() {
        let budget = Budget::default();
        let candidates = candidate_support(ExpansionKind::TrimIndSub, &b(2), &ExpansionCaps::default()).unwrap();
        let fitted = fit_expansion(ExpansionKind::TrimIndSub, &b(2), &candidates, &budget).unwrap();
        assert!(!fitted.coefficient(&b(2)).unwrap().is_zero());
        let checked = validated_expansion(ExpansionKind::TrimIndSub, &b(2), &budget).unwrap();
        assert_eq!(checked.discrepancy, None);
    }
}
