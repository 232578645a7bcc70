//! Brute-force reference counters.
//!
//! Every count here comes from exhaustive enumeration of vertex maps (or of
//! vertex and edge subsets for pattern counts). These are the ground truth
//! the rest of the crate is checked against, so they never approximate:
//! anything larger than the configured [`Budget`] is an error.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::canon::{canonical_key, count_automorphisms, CanonicalKey};
use crate::error::{Error, Result};
use crate::hypergraph::{DeriveMode, Hypergraph, VertexSet};

/// Enumeration limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of candidate maps (or candidate sub-structures) a
    /// single count may examine.
    pub map_evaluations: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { map_evaluations: 1_000_000_000 }
    }
}

impl Budget {
    fn check(&self, what: &'static str, needed: u128) -> Result<()> {
        if needed > self.map_evaluations {
            Err(Error::Budget { what, needed, budget: self.map_evaluations })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum MorphismKind {
    Hom,
    Emb,
    StrEmb,
    TrimHom,
    TrimEmb,
    StrTrimEmb,
}

impl MorphismKind {
    pub const ALL: [MorphismKind; 6] = [
        MorphismKind::Hom,
        MorphismKind::Emb,
        MorphismKind::StrEmb,
        MorphismKind::TrimHom,
        MorphismKind::TrimEmb,
        MorphismKind::StrTrimEmb,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MorphismKind::Hom => "hom",
            MorphismKind::Emb => "emb",
            MorphismKind::StrEmb => "stremb",
            MorphismKind::TrimHom => "trimhom",
            MorphismKind::TrimEmb => "trimemb",
            MorphismKind::StrTrimEmb => "strtrimemb",
        }
    }

    pub fn is_trimmed(self) -> bool {
        matches!(self, MorphismKind::TrimHom | MorphismKind::TrimEmb | MorphismKind::StrTrimEmb)
    }

    fn injective(self) -> bool {
        !matches!(self, MorphismKind::Hom | MorphismKind::TrimHom)
    }

    fn strong(self) -> bool {
        matches!(self, MorphismKind::StrEmb | MorphismKind::StrTrimEmb)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PatternKind {
    Sub,
    IndSub,
    TrimSub,
    IndTrimSub,
}

impl PatternKind {
    pub const ALL: [PatternKind; 4] =
        [PatternKind::Sub, PatternKind::IndSub, PatternKind::TrimSub, PatternKind::IndTrimSub];

    pub fn name(self) -> &'static str {
        match self {
            PatternKind::Sub => "sub",
            PatternKind::IndSub => "indsub",
            PatternKind::TrimSub => "trimsub",
            PatternKind::IndTrimSub => "indtrimsub",
        }
    }

    /// The embedding kind whose count is `Aut(H)` times this pattern count.
    pub fn embedding_kind(self) -> MorphismKind {
        match self {
            PatternKind::Sub => MorphismKind::Emb,
            PatternKind::IndSub => MorphismKind::StrEmb,
            PatternKind::TrimSub => MorphismKind::TrimEmb,
            PatternKind::IndTrimSub => MorphismKind::StrTrimEmb,
        }
    }

    fn trimmed(self) -> bool {
        matches!(self, PatternKind::TrimSub | PatternKind::IndTrimSub)
    }

    fn induced(self) -> bool {
        matches!(self, PatternKind::IndSub | PatternKind::IndTrimSub)
    }
}

fn power(base: usize, exp: usize) -> u128 {
    (base as u128).checked_pow(exp as u32).unwrap_or(u128::MAX)
}

/// Visit every map `0..k -> 0..n` in mixed-radix order (position 0 fastest).
fn for_each_map(k: usize, n: usize, mut visit: impl FnMut(&[usize])) {
    if k > 0 && n == 0 {
        return;
    }
    let mut map = vec![0usize; k];
    loop {
        visit(&map);
        let mut i = 0;
        loop {
            if i == k {
                return;
            }
            map[i] += 1;
            if map[i] < n {
                break;
            }
            map[i] = 0;
            i += 1;
        }
    }
}

/// Visit every map choosing `map[i]` from `choices[i]`.
fn for_each_choice(choices: &[Vec<usize>], mut visit: impl FnMut(&[usize])) {
    if choices.iter().any(|c| c.is_empty()) {
        return;
    }
    let k = choices.len();
    let mut idx = vec![0usize; k];
    let mut map: Vec<usize> = choices.iter().map(|c| c[0]).collect();
    loop {
        visit(&map);
        let mut i = 0;
        loop {
            if i == k {
                return;
            }
            idx[i] += 1;
            if idx[i] < choices[i].len() {
                map[i] = choices[i][idx[i]];
                break;
            }
            idx[i] = 0;
            map[i] = choices[i][0];
            i += 1;
        }
    }
}

fn image_of(map: &[usize]) -> VertexSet {
    map.iter().fold(VertexSet::EMPTY, |s, &v| s.with(v))
}

/// Membership test for the edges of `G|img`, cached per image.
struct TrimCache<'a> {
    host: &'a Hypergraph,
    cache: BTreeMap<u64, Vec<VertexSet>>,
}

impl<'a> TrimCache<'a> {
    fn new(host: &'a Hypergraph) -> Self {
        TrimCache { host, cache: BTreeMap::new() }
    }

    fn contains(&mut self, img: VertexSet, e: VertexSet) -> bool {
        let host = self.host;
        let edges = self.cache.entry(img.bits()).or_insert_with(|| host.trimmed_edges(img));
        edges.binary_search_by(|x| crate::hypergraph::edge_order(x, &e)).is_ok()
    }
}

/// Predicate evaluator for one `(kind, H, G)` triple.
struct MorphismTest<'a> {
    kind: MorphismKind,
    pattern: &'a Hypergraph,
    host: &'a Hypergraph,
    non_edges: Vec<VertexSet>,
    trims: TrimCache<'a>,
}

impl<'a> MorphismTest<'a> {
    fn new(kind: MorphismKind, pattern: &'a Hypergraph, host: &'a Hypergraph) -> Self {
        let non_edges = if kind.strong() { pattern.non_edges() } else { Vec::new() };
        MorphismTest { kind, pattern, host, non_edges, trims: TrimCache::new(host) }
    }

    fn accepts(&mut self, map: &[usize]) -> bool {
        let img = image_of(map);
        if self.kind.injective() && img.len() != map.len() {
            return false;
        }
        if self.kind.is_trimmed() {
            for &e in self.pattern.edges() {
                if !self.trims.contains(img, e.map(map)) {
                    return false;
                }
            }
            if self.kind.strong() {
                for &s in &self.non_edges {
                    if self.trims.contains(img, s.map(map)) {
                        return false;
                    }
                }
            }
        } else {
            for &e in self.pattern.edges() {
                if !self.host.has_edge(e.map(map)) {
                    return false;
                }
            }
            if self.kind.strong() {
                for &s in &self.non_edges {
                    if self.host.has_edge(s.map(map)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Exact number of `kind`-morphisms from `pattern` to `host`.
pub fn count_morphisms(
    kind: MorphismKind,
    pattern: &Hypergraph,
    host: &Hypergraph,
    budget: &Budget,
) -> Result<u64> {
    let k = pattern.vertex_count();
    let n = host.vertex_count();
    budget.check("morphism enumeration", power(n, k))?;
    let mut test = MorphismTest::new(kind, pattern, host);
    let mut count = 0u64;
    for_each_map(k, n, |map| {
        if test.accepts(map) {
            count += 1;
        }
    });
    Ok(count)
}

/// Collect the accepted maps themselves (used by projection/join checks).
pub fn list_morphisms(
    kind: MorphismKind,
    pattern: &Hypergraph,
    host: &Hypergraph,
    budget: &Budget,
) -> Result<Vec<Vec<usize>>> {
    let k = pattern.vertex_count();
    let n = host.vertex_count();
    budget.check("morphism enumeration", power(n, k))?;
    let mut test = MorphismTest::new(kind, pattern, host);
    let mut out = Vec::new();
    for_each_map(k, n, |map| {
        if test.accepts(map) {
            out.push(map.to_vec());
        }
    });
    Ok(out)
}

fn combinations(items: &[VertexSet], r: usize, visit: &mut dyn FnMut(&[VertexSet])) {
    fn go(
        items: &[VertexSet],
        r: usize,
        start: usize,
        acc: &mut Vec<VertexSet>,
        visit: &mut dyn FnMut(&[VertexSet]),
    ) {
        if acc.len() == r {
            visit(acc);
            return;
        }
        let need = r - acc.len();
        for i in start..items.len() {
            if items.len() - i < need {
                break;
            }
            acc.push(items[i]);
            go(items, r, i + 1, acc, visit);
            acc.pop();
        }
    }
    go(items, r, 0, &mut Vec::with_capacity(r), visit);
}

/// Pattern count by direct enumeration of vertex subsets and, for the
/// non-induced kinds, of edge subsets, each compared to `pattern` by
/// canonical key.
pub fn count_patterns_direct(
    kind: PatternKind,
    pattern: &Hypergraph,
    host: &Hypergraph,
    budget: &Budget,
) -> Result<u64> {
    let k = pattern.vertex_count();
    let n = host.vertex_count();
    if k > n {
        return Ok(0);
    }
    let target = canonical_key(pattern)?;
    // edge counts per size, used to prune edge-subset enumeration
    let rank = pattern.rank().max(host.rank());
    let mut need = vec![0usize; rank + 1];
    for e in pattern.edges() {
        need[e.len()] += 1;
    }

    let mut examined: u128 = 0;
    let mut count = 0u64;
    let mut failure: Option<Error> = None;
    for x in host.vertices().subsets().filter(|x| x.len() == k) {
        let candidates: Vec<VertexSet> = if kind.trimmed() {
            host.trimmed_edges(x)
        } else {
            host.edges().iter().copied().filter(|e| e.is_subset(x)).collect()
        };
        if kind.induced() {
            examined += 1;
            budget.check("pattern enumeration", examined)?;
            if canonical_key(&Hypergraph::restrict_to(x, &candidates))? == target {
                count += 1;
            }
            continue;
        }
        let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new(); rank + 1];
        for e in &candidates {
            if e.len() <= rank {
                by_size[e.len()].push(*e);
            }
        }
        if (0..=rank).any(|s| by_size[s].len() < need[s]) {
            continue;
        }
        let mut chosen: Vec<VertexSet> = Vec::with_capacity(pattern.edge_count());
        choose_by_size(&by_size, &need, 0, &mut chosen, &mut |edges| {
            if failure.is_some() {
                return;
            }
            examined += 1;
            if let Err(e) = budget.check("pattern enumeration", examined) {
                failure = Some(e);
                return;
            }
            match canonical_key(&Hypergraph::restrict_to(x, edges)) {
                Ok(key) if key == target => count += 1,
                Ok(_) => {}
                Err(e) => failure = Some(e),
            }
        });
        if let Some(e) = failure.take() {
            return Err(e);
        }
    }
    Ok(count)
}

fn choose_by_size(
    by_size: &[Vec<VertexSet>],
    need: &[usize],
    size: usize,
    chosen: &mut Vec<VertexSet>,
    visit: &mut dyn FnMut(&[VertexSet]),
) {
    if size == need.len() {
        visit(chosen);
        return;
    }
    if need[size] == 0 {
        choose_by_size(by_size, need, size + 1, chosen, visit);
        return;
    }
    combinations(&by_size[size], need[size], &mut |pick| {
        let mark = chosen.len();
        chosen.extend_from_slice(pick);
        choose_by_size(by_size, need, size + 1, chosen, visit);
        chosen.truncate(mark);
    });
}

/// Pattern count as `#kind-embeddings / Aut(H)`.
pub fn count_patterns_by_morphisms(
    kind: PatternKind,
    pattern: &Hypergraph,
    host: &Hypergraph,
    budget: &Budget,
) -> Result<u64> {
    let emb = count_morphisms(kind.embedding_kind(), pattern, host, budget)?;
    let aut = count_automorphisms(pattern)?;
    if emb % aut != 0 {
        return Err(Error::Mismatch(format!(
            "{} count {emb} is not divisible by Aut = {aut}",
            kind.embedding_kind().name()
        )));
    }
    Ok(emb / aut)
}

/// Exact pattern count. Both the direct enumeration and the
/// embedding-over-automorphism route are computed; disagreement is an error.
pub fn count_patterns(
    kind: PatternKind,
    pattern: &Hypergraph,
    host: &Hypergraph,
    budget: &Budget,
) -> Result<u64> {
    let direct = count_patterns_direct(kind, pattern, host, budget)?;
    let via = count_patterns_by_morphisms(kind, pattern, host, budget)?;
    if direct != via {
        return Err(Error::Mismatch(format!(
            "{}: direct enumeration gives {direct}, {}/Aut gives {via} for pattern {pattern:?} in host {host:?}",
            kind.name(),
            kind.embedding_kind().name()
        )));
    }
    Ok(direct)
}

/// A host hypergraph with a colouring of its vertices by pattern vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredHost {
    host: Hypergraph,
    colouring: Vec<usize>,
    colours: usize,
    homomorphic: bool,
}

impl ColoredHost {
    /// Colouring that must be a homomorphism from the host to `pattern`.
    pub fn new(host: Hypergraph, colouring: Vec<usize>, pattern: &Hypergraph) -> Result<ColoredHost> {
        let coloured = ColoredHost::relaxed(host, colouring, pattern.vertex_count())?;
        for &e in coloured.host.edges() {
            let image = e.map(&coloured.colouring);
            if !pattern.has_edge(image) {
                return Err(Error::InvalidColouring(format!(
                    "host edge {e:?} is coloured {image:?}, which is not a pattern edge"
                )));
            }
        }
        Ok(ColoredHost { homomorphic: true, ..coloured })
    }

    /// Colouring into `0..colours` with no homomorphism requirement.
    pub fn relaxed(host: Hypergraph, colouring: Vec<usize>, colours: usize) -> Result<ColoredHost> {
        if colouring.len() != host.vertex_count() {
            return Err(Error::InvalidColouring(format!(
                "colouring has {} entries for {} host vertices",
                colouring.len(),
                host.vertex_count()
            )));
        }
        if let Some((v, &c)) = colouring.iter().enumerate().find(|(_, &c)| c >= colours) {
            return Err(Error::InvalidColouring(format!(
                "host vertex {v} has colour {c}, pattern has {colours} vertices"
            )));
        }
        if colours > crate::hypergraph::MAX_VERTICES {
            return Err(Error::Capacity { n: colours });
        }
        Ok(ColoredHost { host, colouring, colours, homomorphic: false })
    }

    pub fn host(&self) -> &Hypergraph {
        &self.host
    }

    pub fn colouring(&self) -> &[usize] {
        &self.colouring
    }

    pub fn colour_count(&self) -> usize {
        self.colours
    }

    /// Whether the colouring was verified to be a homomorphism.
    pub fn is_homomorphic(&self) -> bool {
        self.homomorphic
    }

    /// Host vertices carrying any colour in `colours`.
    pub fn with_colours(&self, colours: VertexSet) -> VertexSet {
        self.colouring
            .iter()
            .enumerate()
            .filter(|(_, &c)| colours.contains(c))
            .map(|(v, _)| v)
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColourMode {
    /// `c(φ(v)) = v` for every pattern vertex.
    Prescribed,
    /// `c(φ(V(H))) = V(H)`.
    Colourful,
}

pub fn count_colored(
    mode: ColourMode,
    trimmed: bool,
    pattern: &Hypergraph,
    host: &ColoredHost,
    budget: &Budget,
) -> Result<u64> {
    let k = pattern.vertex_count();
    if host.colours != k {
        return Err(Error::InvalidColouring(format!(
            "host coloured by {} colours, pattern has {k} vertices",
            host.colours
        )));
    }
    let kind = if trimmed { MorphismKind::TrimHom } else { MorphismKind::Hom };
    let mut test = MorphismTest::new(kind, pattern, &host.host);
    let mut count = 0u64;
    match mode {
        ColourMode::Prescribed => {
            let choices: Vec<Vec<usize>> = (0..k)
                .map(|v| (0..host.host.vertex_count()).filter(|&u| host.colouring[u] == v).collect())
                .collect();
            let total = choices.iter().fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128));
            budget.check("colour-prescribed enumeration", total)?;
            for_each_choice(&choices, |map| {
                if test.accepts(map) {
                    count += 1;
                }
            });
        }
        ColourMode::Colourful => {
            let n = host.host.vertex_count();
            budget.check("colourful enumeration", power(n, k))?;
            let all = VertexSet::full(k);
            for_each_map(k, n, |map| {
                let colours: VertexSet = map.iter().map(|&u| host.colouring[u]).collect();
                if colours == all && test.accepts(map) {
                    count += 1;
                }
            });
        }
    }
    Ok(count)
}

/// `Σ_{I ⊆ V(H)} (-1)^{|I|} · Kind(H, G - c⁻¹(I))` where `Kind` is `Hom`
/// with edge-deleting vertex removal, or `TrimHom` with trimming removal.
/// Equals the colourful count.
pub fn cf_via_inclusion_exclusion(
    trimmed: bool,
    pattern: &Hypergraph,
    host: &ColoredHost,
    budget: &Budget,
) -> Result<u64> {
    let k = pattern.vertex_count();
    let (kind, mode) = if trimmed {
        (MorphismKind::TrimHom, DeriveMode::DeleteTrim)
    } else {
        (MorphismKind::Hom, DeriveMode::DeleteKeep)
    };
    let mut total: i128 = 0;
    for colours in VertexSet::full(k).subsets() {
        let removed = host.with_colours(colours);
        let reduced = host.host.derive(removed, mode)?;
        let term = count_morphisms(kind, pattern, &reduced, budget)? as i128;
        if colours.len() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    u64::try_from(total)
        .map_err(|_| Error::Mismatch(format!("inclusion-exclusion produced negative total {total}")))
}

/// Surjective morphisms by direct enumeration.
pub fn count_surjective_direct(
    kind: MorphismKind,
    pattern: &Hypergraph,
    host: &Hypergraph,
    budget: &Budget,
) -> Result<u64> {
    let k = pattern.vertex_count();
    let n = host.vertex_count();
    budget.check("morphism enumeration", power(n, k))?;
    let all = host.vertices();
    let mut test = MorphismTest::new(kind, pattern, host);
    let mut count = 0u64;
    for_each_map(k, n, |map| {
        if image_of(map) == all && test.accepts(map) {
            count += 1;
        }
    });
    Ok(count)
}

/// Surjective morphisms as `Σ_{A ⊆ V(G)} (-1)^{|A|} · Kind(H, G ∖ A)`.
pub fn count_surjective_by_inclusion_exclusion(
    kind: MorphismKind,
    pattern: &Hypergraph,
    host: &Hypergraph,
    budget: &Budget,
) -> Result<u64> {
    let mode = match kind {
        MorphismKind::Hom => DeriveMode::DeleteKeep,
        MorphismKind::TrimHom => DeriveMode::DeleteTrim,
        other => {
            return Err(Error::InvalidParameter(format!(
                "surjective counting is defined for hom and trimhom, not {}",
                other.name()
            )))
        }
    };
    let mut total: i128 = 0;
    for removed in host.vertices().subsets() {
        let reduced = host.derive(removed, mode)?;
        let term = count_morphisms(kind, pattern, &reduced, budget)? as i128;
        if removed.len() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    u64::try_from(total)
        .map_err(|_| Error::Mismatch(format!("inclusion-exclusion produced negative total {total}")))
}

/// Surjective `hom`/`trimhom` count; both routes are evaluated and must agree.
pub fn count_surjective(
    kind: MorphismKind,
    pattern: &Hypergraph,
    host: &Hypergraph,
    budget: &Budget,
) -> Result<u64> {
    let via = count_surjective_by_inclusion_exclusion(kind, pattern, host, budget)?;
    let direct = count_surjective_direct(kind, pattern, host, budget)?;
    if direct != via {
        return Err(Error::Mismatch(format!(
            "surjective {}: direct {direct}, inclusion-exclusion {via}",
            kind.name()
        )));
    }
    Ok(direct)
}

/// Count vector `(Kind(H, G))_G` over a list of hosts.
pub fn count_vector(
    kind: MorphismKind,
    pattern: &Hypergraph,
    hosts: &[Hypergraph],
    budget: &Budget,
) -> Result<Vec<u64>> {
    hosts.iter().map(|g| count_morphisms(kind, pattern, g, budget)).collect()
}

/// Group hypergraphs by isomorphism class.
pub fn group_by_class(list: &[Hypergraph]) -> Result<BTreeMap<CanonicalKey, Vec<usize>>> {
    let mut out: BTreeMap<CanonicalKey, Vec<usize>> = BTreeMap::new();
    for (i, h) in list.iter().enumerate() {
        out.entry(canonical_key(h)?).or_default().push(i);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::classes_up_to;

    fn b(k: usize) -> Hypergraph {
        Hypergraph::new(k, [VertexSet::full(k)]).unwrap()
    }

    const BUDGET: Budget = Budget { map_evaluations: 1_000_000_000 };

    #[test]
    fn spec_examples() {
        let g = Hypergraph::from_lists(4, &[&[0, 1], &[2]]).unwrap();
        assert_eq!(count_morphisms(MorphismKind::Hom, &Hypergraph::edgeless(1), &g, &BUDGET).unwrap(), 4);
        assert_eq!(count_morphisms(MorphismKind::Hom, &b(2), &b(2), &BUDGET).unwrap(), 2);
        assert_eq!(count_morphisms(MorphismKind::TrimHom, &b(2), &b(3), &BUDGET).unwrap(), 9);
        assert_eq!(count_patterns(PatternKind::IndTrimSub, &b(2), &b(3), &BUDGET).unwrap(), 3);
        assert_eq!(count_patterns(PatternKind::IndSub, &b(2), &b(3), &BUDGET).unwrap(), 0);
        assert_eq!(count_surjective(MorphismKind::Hom, &b(2), &b(2), &BUDGET).unwrap(), 2);
    }

    #[test]
    fn self_copy_counts_once() {
        for h in classes_up_to(3) {
            assert_eq!(count_patterns(PatternKind::Sub, &h, &h, &BUDGET).unwrap(), 1, "{h:?}");
        }
    }

    #[test]
    fn budget_is_enforced() {
        let tiny = Budget { map_evaluations: 10 };
        let err = count_morphisms(MorphismKind::Hom, &b(3), &b(3), &tiny).unwrap_err();
        assert!(err.is_budget());
    }

    #[test]
    fn prescribed_single_vertex() {
        let host = Hypergraph::from_lists(3, &[&[0, 1]]).unwrap();
        let coloured = ColoredHost::relaxed(host, vec![0, 0, 0], 1).unwrap();
        let single = Hypergraph::edgeless(1);
        assert_eq!(count_colored(ColourMode::Prescribed, false, &single, &coloured, &BUDGET).unwrap(), 3);
        assert_eq!(cf_via_inclusion_exclusion(false, &single, &coloured, &BUDGET).unwrap(), 3);
    }

    #[test]
    fn colourful_b2_identity() {
        let host = ColoredHost::new(b(2), vec![0, 1], &b(2)).unwrap();
        assert!(host.is_homomorphic());
        assert_eq!(count_colored(ColourMode::Colourful, false, &b(2), &host, &BUDGET).unwrap(), 2);
        assert_eq!(cf_via_inclusion_exclusion(false, &b(2), &host, &BUDGET).unwrap(), 2);
        assert_eq!(count_colored(ColourMode::Prescribed, false, &b(2), &host, &BUDGET).unwrap(), 1);
    }

    #[test]
    fn non_homomorphic_colouring_rejected() {
        // host edge {0,1} coloured {0}, which is not an edge of B_2
        let err = ColoredHost::new(b(2), vec![0, 0], &b(2)).unwrap_err();
        assert!(matches!(err, Error::InvalidColouring(_)));
    }
}
