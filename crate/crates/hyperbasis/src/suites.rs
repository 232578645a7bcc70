//! Verification suites shared by `hyperbasis selftest` and the acceptance
//! test target.
//!
//! Every suite compares a transformation against an independent brute-force
//! route and stops recording at the first counterexample, which is reported
//! in the single-line hypergraph format.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::time::{Duration, Instant};

use hyperbasis_core::algorithms::{
    clique_gadget, cn_gadget, count_cliques, gi_gadget, indsub_quasipoly, indtrimsub_bk, refute_hom_basis_witness,
    untrim_colored_host, BipartiteCNInstance,
};
use hyperbasis_core::basis::{
    candidate_support, evaluate, expansion, fit_expansion_over, ExpansionCaps, ExpansionKind, MotifParameter,
};
use hyperbasis_core::canon::{brute_force_isomorphic, canonical_key, classes_up_to, count_automorphisms, CanonicalKey};
use hyperbasis_core::counting::{
    cf_via_inclusion_exclusion, count_colored, count_morphisms, count_patterns, count_patterns_by_morphisms,
    count_patterns_direct, count_surjective, list_morphisms, Budget, ColourMode, ColoredHost, MorphismKind, PatternKind,
};
use hyperbasis_core::family::{generate, FamilySpec};
use hyperbasis_core::interpolate::{dedekind_interpolate, interpolate_pattern_oracle, MotifOracle, ProbeOptions};
use hyperbasis_core::invariants::{
    coindependent_decomposition, fractional_invariant, integral_invariant, rho_star, sigma_star, FractionalKind,
    IntegralKind, WidthMeasure,
};
use hyperbasis_core::partition::{bell, partitions, quotient, Partition};
use hyperbasis_core::tensor::{color_host_via_tensor, tensor, VertexPairIndex};
use hyperbasis_core::{DeriveMode, Hypergraph, Rational, Result, VertexSet};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::format::{inline_hg, Ratio};

/// Seed for every sampled corpus.
pub const SEED: u64 = 0x4859_5045_5242;
/// Sampled (pattern, 4-vertex host) pairs added to the exhaustive grid.
pub const SAMPLED_PAIRS: usize = 600;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: u64,
    pub failure: Option<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

pub struct Suite {
    report: SuiteReport,
}

impl Suite {
    fn check(&mut self, ok: bool, counterexample: impl FnOnce() -> String) -> bool {
        self.report.checks += 1;
        if !ok && self.report.failure.is_none() {
            self.report.failure = Some(counterexample());
        }
        ok
    }

    fn note(&mut self, note: String) {
        self.report.notes.push(note);
    }
}

fn run_suite(name: &'static str, body: impl FnOnce(&mut Suite) -> Result<()>) -> SuiteReport {
    let mut suite = Suite { report: SuiteReport { name, checks: 0, failure: None, notes: Vec::new() } };
    if let Err(e) = body(&mut suite) {
        if suite.report.failure.is_none() {
            suite.report.failure = Some(format!("error: {e}"));
        }
    }
    suite.report
}

fn int(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn hg(h: &Hypergraph) -> String {
    inline_hg(h)
}

fn budget() -> Budget {
    Budget::default()
}

/// Patterns and hosts for the identity and basis suites.
pub struct Corpus {
    /// One representative per class on at most three vertices.
    pub patterns: Vec<Hypergraph>,
    /// The pattern classes followed by sampled four-vertex hosts.
    pub hosts: Vec<Hypergraph>,
    /// `(pattern index, host index)`.
    pub pairs: Vec<(usize, usize)>,
}

/// A uniformly random labelled hypergraph on `n` vertices (`n <= 5`).
pub fn random_hypergraph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Hypergraph {
    let edges = VertexSet::full(n).subsets().filter(|s| !s.is_empty()).filter(|_| rng.gen_bool(density));
    Hypergraph::new(n, edges.collect::<Vec<_>>()).expect("subsets of the vertex set")
}

impl Corpus {
    /// The exhaustive grid of classes on at most three vertices, optionally
    /// extended by `sampled` random pairs with a four-vertex host.
    pub fn new(sampled: usize) -> Corpus {
        let patterns = classes_up_to(3);
        let mut hosts = patterns.clone();
        let mut pairs = Vec::new();
        for p in 0..patterns.len() {
            for h in 0..patterns.len() {
                pairs.push((p, h));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        for _ in 0..sampled {
            let p = rng.gen_range(0..patterns.len());
            hosts.push(random_hypergraph(&mut rng, 4, 0.5));
            pairs.push((p, hosts.len() - 1));
        }
        Corpus { patterns, hosts, pairs }
    }
}

fn describe_partition(tau: &Partition) -> String {
    tau.blocks()
        .iter()
        .map(|b| format!("{{{}}}", b.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
        .collect()
}

/// `μ(0̂, τ) = -Σ_{σ < τ} μ(0̂, σ)`, memoised.
fn mobius_recursive(tau: &Partition, memo: &mut BTreeMap<Partition, i64>) -> Result<i64> {
    if let Some(&m) = memo.get(tau) {
        return Ok(m);
    }
    let n = tau.ground_size();
    let value = if tau.block_count() == n {
        1
    } else {
        let mut sum = 0;
        for sigma in partitions(n)? {
            if sigma != *tau && sigma.refines(tau) {
                sum += mobius_recursive(&sigma, memo)?;
            }
        }
        -sum
    };
    memo.insert(tau.clone(), value);
    Ok(value)
}

/// Möbius coefficients from `mobius` against the recursive definition on
/// ground sets up to `max_n`, plus partition counts and column sums.
pub fn mobius_suite(mobius: &dyn Fn(&Partition) -> i64, max_n: usize) -> SuiteReport {
    run_suite("mobius", |s| {
        let mut memo = BTreeMap::new();
        for n in 0..=max_n {
            let all: Vec<Partition> = partitions(n)?.collect();
            let distinct: BTreeSet<&Partition> = all.iter().collect();
            s.check(all.len() as u128 == bell(n) && distinct.len() == all.len(), || {
                format!("{} partitions of {n} elements, expected Bell({n}) = {}", all.len(), bell(n))
            });
            for tau in &all {
                let got = mobius(tau);
                let expected = mobius_recursive(tau, &mut memo)?;
                if !s.check(got == expected, || {
                    format!("partition {} has coefficient {got}, expected {expected}", describe_partition(tau))
                }) {
                    return Ok(());
                }
            }
            if n >= 2 {
                let sum: i64 = all.iter().map(mobius).sum();
                s.check(sum == 0, || format!("coefficients on {n} elements sum to {sum}"));
            }
        }
        Ok(())
    })
}

/// `Emb = Aut·Sub`, `StrEmb = Aut·IndSub` and the trimmed analogues.
pub fn identity_suite(corpus: &Corpus) -> SuiteReport {
    run_suite("automorphism identities", |s| {
        let b = budget();
        let auts: Vec<u64> = corpus.patterns.iter().map(count_automorphisms).collect::<Result<_>>()?;
        for &(p, g) in &corpus.pairs {
            let (h, host) = (&corpus.patterns[p], &corpus.hosts[g]);
            for kind in PatternKind::ALL {
                let emb = count_morphisms(kind.embedding_kind(), h, host, &b)?;
                let copies = count_patterns_direct(kind, h, host, &b)?;
                if !s.check(emb == auts[p] * copies, || {
                    format!(
                        "{} = {emb} but Aut·{} = {}·{copies} for pattern {} in host {}",
                        kind.embedding_kind().name(),
                        kind.name(),
                        auts[p],
                        hg(h),
                        hg(host)
                    )
                }) {
                    return Ok(());
                }
            }
        }
        Ok(())
    })
}

/// `emb <= hom`, `stremb <= emb`, `trimemb <= trimhom`, `strtrimemb <= trimemb`.
pub fn containment_suite(corpus: &Corpus) -> SuiteReport {
    run_suite("morphism containment", |s| {
        let b = budget();
        let chains = [
            (MorphismKind::Emb, MorphismKind::Hom),
            (MorphismKind::StrEmb, MorphismKind::Emb),
            (MorphismKind::TrimEmb, MorphismKind::TrimHom),
            (MorphismKind::StrTrimEmb, MorphismKind::TrimEmb),
        ];
        for &(p, g) in &corpus.pairs {
            let (h, host) = (&corpus.patterns[p], &corpus.hosts[g]);
            for (small, large) in chains {
                let a = count_morphisms(small, h, host, &b)?;
                let c = count_morphisms(large, h, host, &b)?;
                if !s.check(a <= c, || {
                    format!("{} = {a} > {} = {c} for {} in {}", small.name(), large.name(), hg(h), hg(host))
                }) {
                    return Ok(());
                }
            }
        }
        Ok(())
    })
}

/// Every colouring of every host on at most `host_vertices` vertices that is
/// a homomorphism into `pattern`.
fn homomorphic_colourings(pattern: &Hypergraph, hosts: &[Hypergraph]) -> Vec<ColoredHost> {
    let k = pattern.vertex_count();
    let mut out = Vec::new();
    for g in hosts {
        let n = g.vertex_count();
        let total = k.pow(n as u32);
        for code in 0..total {
            let mut c = Vec::with_capacity(n);
            let mut x = code;
            for _ in 0..n {
                c.push(x % k);
                x /= k;
            }
            if let Ok(host) = ColoredHost::new(g.clone(), c, pattern) {
                out.push(host);
            }
        }
    }
    out
}

/// Every labelled hypergraph on `1..=n` vertices (`n <= 3`).
fn labelled_up_to(n: usize) -> Vec<Hypergraph> {
    (1..=n).flat_map(hyperbasis_core::hypergraph::all_labelled).collect()
}

/// `cf = Aut·cp` for homomorphisms under homomorphic colourings, and
/// `cf = k!·cp` for trimmed homomorphisms from `B_k` under arbitrary
/// colourings. For other patterns the trimmed identity can fail, since the
/// colouring composed with a trimmed homomorphism need not be an
/// automorphism; such instances are only counted.
pub fn colour_orientation_suite() -> SuiteReport {
    run_suite("colourful vs colour-prescribed", |s| {
        let b = budget();
        let hosts = labelled_up_to(3);
        let (mut reversed, mut distinguishing, mut trimmed_exceptions) = (true, 0u64, 0u64);
        for h in classes_up_to(3) {
            let aut = count_automorphisms(&h)?;
            for host in homomorphic_colourings(&h, &hosts) {
                let cp = count_colored(ColourMode::Prescribed, false, &h, &host, &b)?;
                let cf = count_colored(ColourMode::Colourful, false, &h, &host, &b)?;
                reversed &= cp == aut * cf;
                if aut > 1 && cp != cf {
                    distinguishing += 1;
                }
                if !s.check(cf == aut * cp, || {
                    format!(
                        "cf = {cf}, cp = {cp}, Aut = {aut} for pattern {} and host {} coloured {:?}",
                        hg(&h),
                        hg(host.host()),
                        host.colouring()
                    )
                }) {
                    return Ok(());
                }
                let cp = count_colored(ColourMode::Prescribed, true, &h, &host, &b)?;
                let cf = count_colored(ColourMode::Colourful, true, &h, &host, &b)?;
                if cf != aut * cp {
                    trimmed_exceptions += 1;
                }
            }
        }
        for k in 1..=3 {
            let bk = generate(&FamilySpec::Bk { k })?;
            let factorial: u64 = (1..=k as u64).product();
            for g in &hosts {
                let n = g.vertex_count();
                for code in 0..k.pow(n as u32) {
                    let c: Vec<usize> = (0..n).map(|i| code / k.pow(i as u32) % k).collect();
                    let host = ColoredHost::relaxed(g.clone(), c, k)?;
                    let cp = count_colored(ColourMode::Prescribed, true, &bk, &host, &b)?;
                    let cf = count_colored(ColourMode::Colourful, true, &bk, &host, &b)?;
                    if !s.check(cf == factorial * cp, || {
                        format!("trimmed cf = {cf}, cp = {cp} for B_{k} in {} coloured {:?}", hg(g), host.colouring())
                    }) {
                        return Ok(());
                    }
                }
            }
        }
        s.note(format!(
            "cp = Aut·cf holds everywhere: {reversed} ({distinguishing} instances separate the orientations); \
             trimmed cf ≠ Aut·cp on {trimmed_exceptions} instances with patterns other than B_k"
        ));
        Ok(())
    })
}

/// The inclusion–exclusion formula for colourful counts, for arbitrary
/// colourings of every labelled host on at most three vertices.
pub fn colourful_inclusion_exclusion_suite() -> SuiteReport {
    run_suite("colourful inclusion-exclusion", |s| {
        let b = budget();
        let hosts = labelled_up_to(3);
        for h in classes_up_to(3) {
            let k = h.vertex_count();
            for g in &hosts {
                let n = g.vertex_count();
                for code in 0..k.pow(n as u32) {
                    let c: Vec<usize> = (0..n).map(|i| code / k.pow(i as u32) % k).collect();
                    let host = ColoredHost::relaxed(g.clone(), c, k)?;
                    for trimmed in [false, true] {
                        let direct = count_colored(ColourMode::Colourful, trimmed, &h, &host, &b)?;
                        let ie = cf_via_inclusion_exclusion(trimmed, &h, &host, &b)?;
                        if !s.check(direct == ie, || {
                            format!(
                                "colourful count {direct}, inclusion-exclusion {ie} (trimmed: {trimmed}) for {} in {} coloured {:?}",
                                hg(&h),
                                hg(g),
                                host.colouring()
                            )
                        }) {
                            return Ok(());
                        }
                    }
                }
            }
        }
        Ok(())
    })
}

/// Surjective counts by both routes, and the trimmed Lovász property:
/// non-isomorphic hypergraphs on at most three vertices have different
/// trimmed homomorphism vectors over hosts on at most three vertices.
pub fn surjective_and_lovasz_suite() -> SuiteReport {
    run_suite("surjective counts and trimmed Lovász vectors", |s| {
        let b = budget();
        let classes = classes_up_to(3);
        for h in &classes {
            for g in &classes {
                for kind in [MorphismKind::Hom, MorphismKind::TrimHom] {
                    // agreement of both routes is checked inside
                    count_surjective(kind, h, g, &b)?;
                    s.check(true, String::new);
                }
            }
            let own = count_surjective(MorphismKind::TrimHom, h, h, &b)?;
            s.check(own > 0, || format!("no surjective trimmed endomorphism of {}", hg(h)));
        }
        let mut vectors: BTreeMap<Vec<u64>, &Hypergraph> = BTreeMap::new();
        for h in &classes {
            let v = classes
                .iter()
                .map(|g| count_morphisms(MorphismKind::TrimHom, h, g, &b))
                .collect::<Result<Vec<_>>>()?;
            let clash = vectors.insert(v, h);
            if !s.check(clash.is_none(), || {
                format!("{} and {} have equal trimhom vectors", hg(clash.unwrap()), hg(h))
            }) {
                return Ok(());
            }
        }
        Ok(())
    })
}

/// Hom / TrimHom counts keyed by (class, host index, trimmed).
struct HomCache<'a> {
    hosts: &'a [Hypergraph],
    counts: HashMap<(CanonicalKey, usize, bool), u64>,
}

impl HomCache<'_> {
    fn evaluate(&mut self, gamma: &MotifParameter, host: usize, trimmed: bool) -> Result<Rational> {
        let kind = if trimmed { MorphismKind::TrimHom } else { MorphismKind::Hom };
        let mut total = Rational::zero();
        for (f, c) in gamma.iter() {
            let key = (canonical_key(f)?, host, trimmed);
            let count = match self.counts.get(&key) {
                Some(&n) => n,
                None => {
                    let n = count_morphisms(kind, f, &self.hosts[host], &budget())?;
                    self.counts.insert(key, n);
                    n
                }
            };
            total += c * int(count);
        }
        Ok(total)
    }
}

/// Closed-form expansions against direct counts for all eight kinds, the
/// non-zero support claims, and (with `fit_probes`) the trimmed expansions
/// against exact fits.
pub fn expansion_suite(corpus: &Corpus, fit_probes: Option<&[Hypergraph]>) -> SuiteReport {
    run_suite("basis expansions", |s| {
        let b = budget();
        let caps = ExpansionCaps::default();
        let mut expansions: Vec<Vec<MotifParameter>> = Vec::new();
        for h in &corpus.patterns {
            let aut = count_automorphisms(h)?;
            let mut row = Vec::new();
            for kind in ExpansionKind::ALL {
                let gamma = expansion(kind, h)?;
                let own = gamma.coefficient(h)?;
                let expected = if kind.is_pattern() {
                    Rational::new(BigInt::one(), BigInt::from(aut))
                } else {
                    Rational::one()
                };
                s.check(own == expected, || {
                    format!("{} expansion of {} has self-coefficient {}", kind.name(), hg(h), Ratio(&own))
                });
                row.push(gamma);
            }
            // every quotient of H has a non-zero coefficient in the emb expansion
            let emb = &row[0];
            let support: BTreeSet<CanonicalKey> =
                emb.support().iter().map(canonical_key).collect::<Result<_>>()?;
            let quotients: BTreeSet<CanonicalKey> = candidate_support(ExpansionKind::Emb, h, &caps)?
                .iter()
                .map(canonical_key)
                .collect::<Result<_>>()?;
            s.check(support == quotients, || format!("emb expansion of {} misses a quotient", hg(h)));
            // every edge-supergraph has a non-zero coefficient in the stremb expansion
            for (_, supergraph) in h.edge_supergraphs(caps.non_edges)? {
                let c = row[1].coefficient(&supergraph)?;
                s.check(!c.is_zero(), || {
                    format!("stremb expansion of {} vanishes on supergraph {}", hg(h), hg(&supergraph))
                });
            }
            if let Some(probes) = fit_probes {
                for (i, kind) in ExpansionKind::ALL.into_iter().enumerate().filter(|(_, k)| k.is_trimmed()) {
                    let candidates = candidate_support(kind, h, &caps)?;
                    let fitted = fit_expansion_over(kind, h, &candidates, probes, &b)?;
                    if !s.check(fitted == row[i], || {
                        format!("fitted {} expansion of {} differs from the closed form", kind.name(), hg(h))
                    }) {
                        return Ok(());
                    }
                }
            }
            expansions.push(row);
        }
        if fit_probes.is_some() {
            s.note("trimmed closed-form expansions equal the exact fits for every pattern".into());
        }
        let mut cache = HomCache { hosts: &corpus.hosts, counts: HashMap::new() };
        for &(p, g) in &corpus.pairs {
            let (h, host) = (&corpus.patterns[p], &corpus.hosts[g]);
            for (i, kind) in ExpansionKind::ALL.into_iter().enumerate() {
                let value = cache.evaluate(&expansions[p][i], g, kind.is_trimmed())?;
                let direct = kind.count(h, host, &b)?;
                if !s.check(value == int(direct), || {
                    format!(
                        "{} expansion of {} evaluates to {} on {}, direct count {direct}",
                        kind.name(),
                        hg(h),
                        Ratio(&value),
                        hg(host)
                    )
                }) {
                    return Ok(());
                }
            }
        }
        Ok(())
    })
}

fn generator_corpus() -> Result<Vec<Hypergraph>> {
    let mut specs = Vec::new();
    for k in 1..=6 {
        specs.push(FamilySpec::Bk { k });
    }
    for uniformity in 2..=4 {
        for core in 0..uniformity {
            for petals in 1..=3 {
                if core + petals * (uniformity - core) <= 12 {
                    specs.push(FamilySpec::Sunflower { uniformity, core, petals });
                }
            }
        }
    }
    for n in 2..=6 {
        for k in 1..=n {
            specs.push(FamilySpec::Hnk { n, k });
        }
    }
    specs.push(FamilySpec::GroheMarx { n: 2 });
    for m in 1..=4 {
        for r in 1..=3 {
            specs.push(FamilySpec::DisjointEdges { m, r });
        }
    }
    let p4 = Hypergraph::from_lists(4, &[&[0, 1], &[1, 2], &[2, 3]])?;
    let c5 = Hypergraph::from_lists(5, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[0, 4]])?;
    specs.push(FamilySpec::HatOfGraph(p4));
    specs.push(FamilySpec::HatOfGraph(c5));
    specs.push(FamilySpec::SingleVertex);
    specs.iter().map(generate).collect()
}

fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// LP duality, the integral sandwich, quotient monotonicity of `σ*`, the
/// co-independent decomposition bound and the anchored values.
pub fn lp_suite(monotonicity_vertices: usize) -> SuiteReport {
    run_suite("fractional invariants", |s| {
        let b = budget();
        let mut corpus = classes_up_to(3);
        corpus.extend(generator_corpus()?);
        for h in &corpus {
            let rho_star = fractional_invariant(FractionalKind::RhoStar, h, None)?;
            let alpha_star = fractional_invariant(FractionalKind::AlphaStar, h, None)?;
            let rho = q(integral_invariant(IntegralKind::Rho, h, &b)? as i64);
            let alpha = q(integral_invariant(IntegralKind::Alpha, h, &b)? as i64);
            s.check(rho_star == alpha_star, || {
                format!("ρ* = {} but α* = {} for {}", Ratio(&rho_star), Ratio(&alpha_star), hg(h))
            });
            s.check(alpha <= alpha_star && rho_star <= rho, || {
                format!(
                    "sandwich α ≤ α* = ρ* ≤ ρ fails: {} {} {} for {}",
                    Ratio(&alpha),
                    Ratio(&alpha_star),
                    Ratio(&rho),
                    hg(h)
                )
            });
            let sigma = sigma_star(h, &b)?.value;
            let d = coindependent_decomposition(h, &b)?;
            let width = d.width(h, WidthMeasure::RhoStarOfBag)?;
            s.check(width <= &sigma + q(1), || {
                format!("decomposition width {} exceeds σ* + 1 = {} + 1 for {}", Ratio(&width), Ratio(&sigma), hg(h))
            });
        }
        // ρ* can only drop when edges are added
        for h in classes_up_to(3) {
            let base = fractional_invariant(FractionalKind::RhoStar, &h, None)?;
            for (_, sup) in h.edge_supergraphs(16)? {
                let value = fractional_invariant(FractionalKind::RhoStar, &sup, None)?;
                s.check(value <= base, || format!("ρ* grows from {} to {}", hg(&h), hg(&sup)));
            }
        }
        // σ* of a quotient never exceeds σ* of the hypergraph
        let mut sigma_cache: HashMap<CanonicalKey, Rational> = HashMap::new();
        let mut sigma_of = |x: &Hypergraph| -> Result<Rational> {
            let key = canonical_key(x)?;
            if let Some(v) = sigma_cache.get(&key) {
                return Ok(v.clone());
            }
            let v = sigma_star(x, &b)?.value;
            sigma_cache.insert(key, v.clone());
            Ok(v)
        };
        for h in classes_up_to(monotonicity_vertices) {
            let base = sigma_of(&h)?;
            for tau in partitions(h.vertex_count())? {
                let qh = quotient(&h, &tau)?;
                let value = sigma_of(&qh)?;
                if !s.check(value <= base, || {
                    format!(
                        "σ* of quotient {} by {} is {} > σ* = {} of {}",
                        hg(&qh),
                        describe_partition(&tau),
                        Ratio(&value),
                        Ratio(&base),
                        hg(&h)
                    )
                }) {
                    return Ok(());
                }
            }
        }
        // anchored values
        for n in [2, 3] {
            let gm = generate(&FamilySpec::GroheMarx { n })?;
            let r = fractional_invariant(FractionalKind::RhoStar, &gm, None)?;
            s.check(r == q(2), || format!("ρ*(grohe_marx({n})) = {}", Ratio(&r)));
            let a = fractional_invariant(FractionalKind::AlphaStar, &gm, None)?;
            s.check(a == q(2), || format!("α*(grohe_marx({n})) = {}", Ratio(&a)));
        }
        for n in 2..=6 {
            for k in 1..=n {
                let v = sigma_star(&generate(&FamilySpec::Hnk { n, k })?, &b)?.value;
                s.check(v == q(1), || format!("σ*(H_{{{n},{k}}}) = {}", Ratio(&v)));
            }
        }
        let mut factorial = 1u64;
        for k in 1..=7u64 {
            factorial *= k;
            let aut = count_automorphisms(&generate(&FamilySpec::Bk { k: k as usize })?)?;
            s.check(aut == factorial, || format!("Aut(B_{k}) = {aut}, expected {factorial}"));
        }
        Ok(())
    })
}

/// Multiplicativity, the edge-count bound, associativity, projection/join,
/// the colour host and rank truncation.
pub fn tensor_suite() -> SuiteReport {
    run_suite("tensor products", |s| {
        let b = budget();
        let classes = classes_up_to(3);
        let mut homs: HashMap<(usize, usize), u64> = HashMap::new();
        for (i, f) in classes.iter().enumerate() {
            for (j, g) in classes.iter().enumerate() {
                homs.insert((i, j), count_morphisms(MorphismKind::Hom, f, g, &b)?);
            }
        }
        for (gi, g) in classes.iter().enumerate() {
            for (hi, h) in classes.iter().enumerate() {
                let t = tensor(g, h)?;
                let r = g.rank().max(h.rank()) as u32;
                let bound = (1u128 << (r * r)) * g.edge_count() as u128 * h.edge_count() as u128;
                s.check(t.edge_count() as u128 <= bound, || {
                    format!("{} ⊗ {} has {} edges, bound {bound}", hg(g), hg(h), t.edge_count())
                });
                for (fi, f) in classes.iter().enumerate() {
                    let direct = count_morphisms(MorphismKind::Hom, f, &t, &b)?;
                    let product = homs[&(fi, gi)] * homs[&(fi, hi)];
                    if !s.check(direct == product, || {
                        format!("Hom({}, {} ⊗ {}) = {direct}, product {product}", hg(f), hg(g), hg(h))
                    }) {
                        return Ok(());
                    }
                }
            }
        }
        let small = classes_up_to(2);
        for a in &small {
            for bb in &small {
                let ab = tensor(a, bb)?;
                for c in &small {
                    let left = canonical_key(&tensor(&ab, c)?)?;
                    let right = canonical_key(&tensor(a, &tensor(bb, c)?)?)?;
                    s.check(left == right, || format!("({} ⊗ {}) ⊗ {} is not associative", hg(a), hg(bb), hg(c)));
                }
                let index = VertexPairIndex::new(a.vertex_count(), bb.vertex_count());
                for f in &small {
                    for phi in list_morphisms(MorphismKind::Hom, f, &ab, &b)? {
                        let (left, right) = index.proj(&phi);
                        let ok = index.join(&left, &right) == phi
                            && f.edges().iter().all(|e| a.has_edge(e.map(&left)) && bb.has_edge(e.map(&right)));
                        s.check(ok, || format!("projection of {phi:?} into {} ⊗ {} fails", hg(a), hg(bb)));
                    }
                }
            }
        }
        for h in &small {
            for g in &classes {
                let host = color_host_via_tensor(h, g)?;
                let cp = count_colored(ColourMode::Prescribed, false, h, &host, &b)?;
                let direct = count_morphisms(MorphismKind::Hom, h, g, &b)?;
                s.check(cp == direct, || format!("cpHom via tensor {cp} ≠ Hom {direct} for {} in {}", hg(h), hg(g)));
            }
        }
        let b2 = generate(&FamilySpec::Bk { k: 2 })?;
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
        for _ in 0..100 {
            let n = rng.gen_range(1..=5);
            let g = random_hypergraph(&mut rng, n, 0.3);
            let full = count_morphisms(MorphismKind::Hom, &b2, &g, &b)?;
            let truncated = count_morphisms(MorphismKind::Hom, &b2, &g.rank_truncate(2), &b)?;
            s.check(full == truncated, || format!("rank truncation changes Hom(B_2, {})", hg(&g)));
        }
        Ok(())
    })
}

/// Round trip of `Hom(F, G)` through a Sub oracle, and G-independence of
/// the probes.
pub fn interpolation_suite() -> SuiteReport {
    run_suite("interpolation", |s| {
        let b = budget();
        let options = ProbeOptions::default();
        let classes = classes_up_to(3);
        // direct combination with known coefficients
        let single = Hypergraph::edgeless(1);
        let b2 = generate(&FamilySpec::Bk { k: 2 })?;
        let mut oracle = MotifOracle::new(vec![single.clone(), b2.clone()], |f: &Hypergraph| {
            Ok(int(3 * count_morphisms(MorphismKind::Hom, &single, f, &b)?
                + 5 * count_morphisms(MorphismKind::Hom, &b2, f, &b)?))
        });
        let r = dedekind_interpolate(&mut oracle, &options)?;
        s.check(r.coefficients == [q(3), q(5)], || format!("recovered {:?}, expected [3, 5]", r.coefficients));
        for h in &classes {
            let mut first_probes: Option<Vec<Hypergraph>> = None;
            for g in &classes {
                let mut sub = |host: &Hypergraph| count_patterns_by_morphisms(PatternKind::Sub, h, host, &b);
                let result = interpolate_pattern_oracle(ExpansionKind::Sub, h, &mut sub, g, &options)?;
                for (f, homs) in result.support.iter().zip(&result.homs) {
                    let direct = count_morphisms(MorphismKind::Hom, f, g, &b)?;
                    if !s.check(*homs == direct, || {
                        format!("recovered Hom({}, {}) = {homs}, direct {direct} (pattern {})", hg(f), hg(g), hg(h))
                    }) {
                        return Ok(());
                    }
                }
                match &first_probes {
                    None => first_probes = Some(result.probes),
                    Some(p) => {
                        s.check(*p == result.probes, || format!("probes for {} change with the host {}", hg(h), hg(g)));
                    }
                }
            }
        }
        Ok(())
    })
}

/// Every labelled simple graph on `n` vertices.
fn labelled_graphs(n: usize) -> Vec<Hypergraph> {
    let pairs: Vec<VertexSet> = VertexSet::full(n).subsets().filter(|s| s.len() == 2).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            Hypergraph::new(n, edges.collect::<Vec<_>>()).expect("pairs of vertices")
        })
        .collect()
}

fn random_cn_instance(rng: &mut ChaCha8Rng) -> Result<BipartiteCNInstance> {
    let k = rng.gen_range(1..=3);
    let x = rng.gen_range(k..=7);
    let y = rng.gen_range(1..=4);
    // first k vertices seed the parts so none is empty
    let part_of: Vec<usize> = (0..x).map(|v| if v < k { v } else { rng.gen_range(0..k) }).collect();
    let mut adjacency = Vec::new();
    for a in 0..y {
        for v in 0..x {
            if rng.gen_bool(0.5) {
                adjacency.push((a, v));
            }
        }
    }
    BipartiteCNInstance::new(y, part_of, k, adjacency)
}

/// The explicit algorithms and gadgets against brute force.
pub fn algorithms_suite(host_vertices: usize) -> SuiteReport {
    run_suite("algorithms and gadgets", |s| {
        let b = budget();
        let patterns = classes_up_to(3);
        let hosts = classes_up_to(host_vertices);
        for h in &patterns {
            for g in &hosts {
                let fast = indsub_quasipoly(h, g, &b)?;
                let direct = count_patterns(PatternKind::IndSub, h, g, &b)?;
                if !s.check(fast == direct, || format!("quasipoly {fast} ≠ {direct} for {} in {}", hg(h), hg(g))) {
                    return Ok(());
                }
            }
        }
        for spec in [
            FamilySpec::Sunflower { uniformity: 3, core: 1, petals: 2 },
            FamilySpec::Hnk { n: 4, k: 3 },
            FamilySpec::DisjointEdges { m: 2, r: 2 },
        ] {
            let h = generate(&spec)?;
            let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
            for _ in 0..10 {
                let g = random_hypergraph(&mut rng, 5, 0.15);
                let fast = indsub_quasipoly(&h, &g, &b)?;
                let direct = count_patterns(PatternKind::IndSub, &h, &g, &b)?;
                s.check(fast == direct, || format!("quasipoly {fast} ≠ {direct} for {} in {}", hg(&h), hg(&g)));
            }
        }
        // type counting for B_k
        let mut type_hosts = classes_up_to(4.min(host_vertices));
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 3);
        for _ in 0..200 {
            let n = rng.gen_range(5..=6);
            let edges: Vec<VertexSet> = (0..rng.gen_range(0..=6))
                .map(|_| VertexSet(rng.gen_range(1u64..1 << n)))
                .collect();
            type_hosts.push(Hypergraph::new(n, edges)?);
        }
        for g in &type_hosts {
            for k in 1..=4 {
                let bk = generate(&FamilySpec::Bk { k })?;
                let fast = indtrimsub_bk(k, g)?;
                let direct = count_patterns(PatternKind::IndTrimSub, &bk, g, &b)?;
                if !s.check(fast == direct, || format!("type count {fast} ≠ {direct} for B_{k} in {}", hg(g))) {
                    return Ok(());
                }
            }
        }
        // clique gadget
        for n in 3..=5 {
            for g in labelled_graphs(n) {
                for k in 2..=n.min(4) {
                    let (pattern, host) = clique_gadget(&g, k)?;
                    let copies = count_patterns(PatternKind::Sub, &pattern, &host, &b)?;
                    let cliques = count_cliques(&g, k);
                    if !s.check(copies == cliques, || {
                        format!("{copies} copies of H_{{{n},{k}}} but {cliques} cliques in {}", hg(&g))
                    }) {
                        return Ok(());
                    }
                }
            }
        }
        let k3 = Hypergraph::from_lists(3, &[&[0, 1], &[1, 2], &[0, 2]])?;
        s.check(clique_gadget(&k3, 1).is_err(), || "clique gadget accepted k = 1".into());
        // isomorphism gadget
        let graphs: Vec<Hypergraph> = [1, 3, 4].into_iter().flat_map(labelled_graphs).collect();
        for f in &graphs {
            for g in &graphs {
                let gadget = gi_gadget(f, g)?;
                let direct = brute_force_isomorphic(f, g);
                if !s.check(gadget == direct, || format!("gadget says {gadget} for {} vs {}", hg(f), hg(g))) {
                    return Ok(());
                }
            }
        }
        for g in labelled_graphs(2) {
            s.check(gi_gadget(&g, &g).is_err(), || format!("isomorphism gadget accepted {}", hg(&g)));
        }
        // common-neighbour gadget
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 4);
        for _ in 0..150 {
            let inst = random_cn_instance(&mut rng)?;
            let gadget = cn_gadget(&inst, &b)?;
            let direct = inst.colourful_neighbourhoods();
            let factorial: u64 = (1..=inst.k() as u64).product();
            let cf = count_colored(ColourMode::Colourful, true, &gadget.pattern, &gadget.host, &b)?;
            s.check(gadget.count == direct && cf == factorial * gadget.count, || {
                format!(
                    "cn gadget count {} / cf {cf}, direct {direct}, for host {} parts {:?}",
                    gadget.count,
                    hg(gadget.host.host()),
                    inst.part_of()
                )
            });
        }
        s.report.checks += untrim_checks(s)?;
        Ok(())
    })
}

/// `cpHom(H0, untrim(host)) = cpHom(H0|X, host)` over every pattern on at
/// most three vertices, every `X`, and every homomorphic colouring of every
/// labelled host on at most three vertices.
fn untrim_checks(s: &mut Suite) -> Result<u64> {
    let b = budget();
    let hosts = labelled_up_to(3);
    let mut triggered = 0;
    for h0 in classes_up_to(3) {
        for x in h0.vertices().subsets().filter(|x| !x.is_empty()) {
            let trimmed = h0.derive(x, DeriveMode::Trim)?;
            let steps = h0.vertex_count() - x.len();
            for host in homomorphic_colourings(&trimmed, &hosts) {
                let lifted = untrim_colored_host(&h0, x, &host)?;
                let before = count_colored(ColourMode::Prescribed, false, &trimmed, &host, &b)?;
                let after = count_colored(ColourMode::Prescribed, false, &h0, &lifted, &b)?;
                let growth = (1usize << steps) * host.host().edge_count();
                if lifted.host().edge_count() > growth {
                    triggered += 1;
                }
                let bound = (1usize << steps) * (host.host().edge_count() + 1) - 1;
                let ok = before == after && lifted.host().edge_count() <= bound;
                if !s.check(ok, || {
                    format!(
                        "untrim of {} at {x:?}: cpHom {before} before, {after} after, {} edges from {}",
                        hg(&h0),
                        lifted.host().edge_count(),
                        host.host().edge_count()
                    )
                }) {
                    return Ok(0);
                }
            }
        }
    }
    s.note(format!("{triggered} untrim instances needed the singleton edge beyond the doubling bound"));
    Ok(0)
}

/// Trimmed pattern counts are not finite combinations of homomorphism
/// counts: non-zero self-coefficients in the trimmed basis, type counting,
/// and the inflated witness.
pub fn trimmed_counterexample_suite() -> SuiteReport {
    run_suite("trimmed counterexamples", |s| {
        let b = budget();
        let probes = classes_up_to(4);
        for k in 1..=3 {
            let bk = generate(&FamilySpec::Bk { k })?;
            let candidates = candidate_support(ExpansionKind::TrimIndSub, &bk, &ExpansionCaps::default())?;
            let fitted = fit_expansion_over(ExpansionKind::TrimIndSub, &bk, &candidates, &probes, &b)?;
            let c = fitted.coefficient(&bk)?;
            s.check(!c.is_zero(), || format!("fitted trimindsub expansion of B_{k} vanishes on B_{k}"));
            s.note(format!("trimindsub coefficient of B_{k} on itself: {}", Ratio(&c)));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
        for _ in 0..100 {
            let g = random_hypergraph(&mut rng, 5, 0.2);
            for k in 1..=4 {
                let fast = indtrimsub_bk(k, &g)?;
                let direct = count_patterns(PatternKind::IndTrimSub, &generate(&FamilySpec::Bk { k })?, &g, &b)?;
                s.check(fast == direct, || format!("type count {fast} ≠ {direct} for B_{k} in {}", hg(&g)));
            }
        }
        // a 64-vertex host is far beyond brute force but immediate for type counting
        let large = Hypergraph::new(64, (0..6).map(|_| VertexSet(rng.gen::<u64>() | 1)).collect::<Vec<_>>())?;
        let started = Instant::now();
        let value = indtrimsub_bk(3, &large)?;
        s.note(format!("type count on a 64-vertex host: {value} in {:?}", started.elapsed()));
        let b2 = generate(&FamilySpec::Bk { k: 2 })?;
        let (witness, report) = refute_hom_basis_witness(&b2, 3, &b)?;
        let edged = classes_up_to(3).into_iter().filter(|f| f.edge_count() > 0).count();
        s.check(report.hom_zero_checked == edged, || {
            format!("only {} of {edged} edged patterns checked", report.hom_zero_checked)
        });
        s.check(report.indtrimsub >= 1 && report.trimsub >= 1 && report.trimhom >= 1, || {
            format!("witness {} has a zero trimmed count: {report:?}", hg(&witness))
        });
        for h in classes_up_to(3).into_iter().filter(|h| h.edge_count() > 0) {
            let gamma = expansion(ExpansionKind::Sub, &h)?;
            let value = evaluate(&gamma, &witness, MorphismKind::Hom, &b)?;
            s.check(value.is_zero(), || format!("sub expansion of {} is {} on the witness", hg(&h), Ratio(&value)));
        }
        Ok(())
    })
}

/// `σ*` on the two sunflower families and `ρ*` on disjoint edges.
pub fn classification_suite() -> SuiteReport {
    run_suite("classification values", |s| {
        let b = budget();
        for m in 1..=4 {
            let easy = sigma_star(&generate(&FamilySpec::Sunflower { uniformity: 4, core: 3, petals: m })?, &b)?.value;
            s.check(easy == q(1), || format!("σ*(sunflower(4,3,{m})) = {}", Ratio(&easy)));
            let hard = sigma_star(&generate(&FamilySpec::Sunflower { uniformity: 4, core: 1, petals: m })?, &b)?.value;
            s.check(hard == q(m as i64), || format!("σ*(sunflower(4,1,{m})) = {}", Ratio(&hard)));
            for r in 1..=4 {
                let d = generate(&FamilySpec::DisjointEdges { m, r })?;
                let v = rho_star(&d, d.vertices())?;
                s.check(v == q(m as i64), || format!("ρ*(disjoint_edges({m},{r})) = {}", Ratio(&v)));
            }
        }
        Ok(())
    })
}

#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: usize,
    pub title: &'static str,
    pub suites: Vec<SuiteReport>,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed) && self.elapsed <= self.limit
    }

    pub fn checks(&self) -> u64 {
        self.suites.iter().map(|s| s.checks).sum()
    }

    /// One line: `criterion <id> <title>: PASS|FAIL (...)`.
    pub fn summary(&self) -> String {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let mut line = format!(
            "criterion {} {}: {verdict} ({} checks, {:.1}s of {}s)",
            self.id,
            self.title,
            self.checks(),
            self.elapsed.as_secs_f64(),
            self.limit.as_secs()
        );
        for suite in &self.suites {
            if let Some(f) = &suite.failure {
                line.push_str(&format!("; {}: {f}", suite.name));
            }
        }
        line
    }
}

pub const CRITERIA: usize = 8;

pub fn criterion(id: usize) -> CriterionReport {
    let started = Instant::now();
    let (title, limit, suites): (&'static str, u64, Vec<SuiteReport>) = match id {
        1 => {
            let corpus = Corpus::new(SAMPLED_PAIRS);
            ("identity suite", 120, vec![identity_suite(&corpus), containment_suite(&corpus)])
        }
        2 => {
            let corpus = Corpus::new(SAMPLED_PAIRS);
            let probes = classes_up_to(4);
            ("basis suite", 300, vec![expansion_suite(&corpus, Some(&probes))])
        }
        3 => ("LP suite", 60, vec![lp_suite(4)]),
        4 => ("tensor suite", 180, vec![tensor_suite()]),
        5 => ("interpolation suite", 180, vec![interpolation_suite()]),
        6 => ("algorithms suite", 300, vec![algorithms_suite(4)]),
        7 => ("trimmed-counterexample suite", 120, vec![trimmed_counterexample_suite()]),
        8 => ("classification sanity", 60, vec![classification_suite()]),
        _ => panic!("criteria are numbered 1 to {CRITERIA}"),
    };
    CriterionReport { id, title, suites, elapsed: started.elapsed(), limit: Duration::from_secs(limit) }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Fast,
    Full,
}

/// The exhaustive three-vertex suites.
pub fn fast_suites() -> Vec<SuiteReport> {
    let grid = Corpus::new(0);
    vec![
        mobius_suite(&Partition::mobius, 6),
        identity_suite(&grid),
        containment_suite(&grid),
        colour_orientation_suite(),
        colourful_inclusion_exclusion_suite(),
        surjective_and_lovasz_suite(),
        expansion_suite(&grid, None),
        lp_suite(3),
    ]
}

/// Failing suites are listed with their counterexample.
pub fn selftest(level: Level) -> (Vec<SuiteReport>, Vec<CriterionReport>) {
    let suites = fast_suites();
    let criteria = match level {
        Level::Fast => Vec::new(),
        Level::Full => (1..=CRITERIA).map(criterion).collect(),
    };
    (suites, criteria)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hyperbasis_core::Error;

    #[test]
    fn corrupted_mobius_table_is_named() {
        let corrupted = |tau: &Partition| {
            if tau.block_sizes() == [3] {
                -2
            } else {
                tau.mobius()
            }
        };
        let report = mobius_suite(&corrupted, 4);
        let failure = report.failure.expect("corruption must be detected");
        assert!(failure.starts_with("partition {0,1,2} has coefficient -2, expected 2"), "{failure}");
        assert!(mobius_suite(&Partition::mobius, 5).passed());
    }

    #[test]
    fn error_becomes_failure() {
        let report = run_suite("x", |_| Err(Error::Infeasible));
        assert_eq!(report.failure.as_deref(), Some("error: linear program is infeasible"));
    }
}
