use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperbasis::format::{
    inline_hg, parse_any, parse_cn, parse_colouring, parse_decomposition, parse_motif, serialize_colouring,
    serialize_decomposition, serialize_hg, serialize_motif, to_json, FormatError, Ratio,
};
use hyperbasis::suites::{selftest, Level};
use hyperbasis_core::algorithms::{
    clique_gadget, cn_gadget, count_cliques, gi_gadget, indsub_quasipoly, indtrimsub_bk, refute_hom_basis_witness,
    untrim_colored_host,
};
use hyperbasis_core::basis::{evaluate, expansion, validated_expansion, ExpansionKind, MotifParameter};
use hyperbasis_core::counting::{
    cf_via_inclusion_exclusion, count_colored, count_morphisms, count_patterns, count_patterns_by_morphisms,
    count_surjective, Budget, ColourMode, ColoredHost, MorphismKind, PatternKind,
};
use hyperbasis_core::family::{generate, FamilySpec};
use hyperbasis_core::interpolate::{interpolate_pattern_oracle, ProbeOptions};
use hyperbasis_core::invariants::{
    coindependent_decomposition, fractional_invariant, integral_invariant, sigma_star, treewidth_exact,
    FractionalKind, IntegralKind, WidthMeasure,
};
use hyperbasis_core::tensor::tensor_with_budget;
use hyperbasis_core::{Hypergraph, Rational, VertexSet};
use serde_json::{json, Map, Value};

const EXIT_DOMAIN: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "hyperbasis", version, about = "Exact hypergraph pattern counting, basis expansions and invariants")]
struct Cli {
    /// Print the report as a single JSON object.
    #[arg(long, global = true)]
    json: bool,
    /// Largest number of vertex maps a single enumeration may examine.
    #[arg(long, global = true, default_value_t = 1_000_000_000)]
    map_budget: u128,
    /// Largest factor rank accepted by tensor products.
    #[arg(long, global = true, default_value_t = 5)]
    rank_budget: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count morphisms, patterns, coloured or surjective maps.
    Count(CountArgs),
    /// Expand a pattern count in the hom or trimmed-hom basis.
    Expand(ExpandArgs),
    /// Evaluate a motif parameter on a host.
    Evaluate(EvaluateArgs),
    /// Fractional and integral cover/independence numbers, σ* and treewidth.
    Invariants(InputArgs),
    /// Tensor product; vertex i of the output is the pair (i / |H|, i % |H|).
    Tensor(TensorArgs),
    /// Recover hom counts from a pattern-count oracle.
    Interpolate(InterpolateArgs),
    /// Induced-subgraph count via the edge-cover enumeration.
    Quasipoly(PairArgs),
    /// Induced trimmed copies of B_k via vertex types.
    Trimcount(TrimcountArgs),
    /// Reduction gadgets.
    #[command(subcommand)]
    Gadget(GadgetCommand),
    /// Print a member of a named family in hg format.
    Generate(GenerateArgs),
    /// Co-independent tree decomposition, or the width of a given one.
    Decompose(DecomposeArgs),
    /// Run the verification suites.
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct CountArgs {
    /// hom, emb, stremb, trimhom, trimemb, strtrimemb, sub, indsub, trimsub,
    /// indtrimsub, cp, cf, cp-trim, cf-trim, cf-ie, cf-ie-trim, surj-hom,
    /// surj-trimhom
    #[arg(long)]
    kind: String,
    #[arg(long)]
    pattern: String,
    #[arg(long)]
    host: String,
    /// Colouring file; required by the coloured kinds.
    #[arg(long)]
    coloring: Option<String>,
}

#[derive(Args)]
struct ExpandArgs {
    /// emb, stremb, sub, indsub, trimemb, trimstremb, trimsub, trimindsub
    #[arg(long)]
    kind: String,
    #[arg(long)]
    pattern: String,
    /// Cross-check trimmed kinds against an exact fit.
    #[arg(long)]
    validate: bool,
}

#[derive(Args)]
struct EvaluateArgs {
    #[arg(long)]
    motif: String,
    #[arg(long)]
    host: String,
    #[arg(long, value_enum, default_value_t = BasisArg::Hom)]
    basis: BasisArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Hom,
    Trimhom,
}

#[derive(Args)]
struct InputArgs {
    #[arg(long)]
    input: String,
}

#[derive(Args)]
struct TensorArgs {
    #[arg(long)]
    left: String,
    #[arg(long)]
    right: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum PatternOracleKind {
    Sub,
    Indsub,
}

#[derive(Args)]
struct InterpolateArgs {
    #[arg(long, value_enum)]
    kind: PatternOracleKind,
    #[arg(long)]
    pattern: String,
    #[arg(long)]
    host: String,
}

#[derive(Args)]
struct PairArgs {
    #[arg(long)]
    pattern: String,
    #[arg(long)]
    host: String,
}

#[derive(Args)]
struct TrimcountArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    host: String,
}

#[derive(Subcommand)]
enum GadgetCommand {
    /// Copies of H_{n,k} in the graph with the full edge added, against k-cliques.
    Clique {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        k: usize,
    },
    /// Graph isomorphism through embedding counts.
    Gi {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Colourful k-neighbourhoods as colour-prescribed trimmed homomorphisms.
    Cn {
        #[arg(long)]
        input: String,
    },
    /// Inflate every edge of the pattern with fresh vertices.
    Refute {
        #[arg(long)]
        pattern: String,
        #[arg(long, default_value_t = 3)]
        fresh: usize,
    },
    /// Lift a host coloured by H0 restricted to X to a host coloured by H0.
    Untrim {
        #[arg(long)]
        pattern: String,
        /// Vertices of X, space or comma separated.
        #[arg(long)]
        keep: String,
        #[arg(long)]
        host: String,
        #[arg(long)]
        coloring: String,
    },
}

#[derive(Args)]
struct GenerateArgs {
    /// single_vertex, b_k, sunflower, h_nk, grohe_marx, disjoint_edges, hat_of_graph
    #[arg(long)]
    family: String,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    uniformity: Option<usize>,
    #[arg(long)]
    core: Option<usize>,
    #[arg(long)]
    petals: Option<usize>,
    /// Graph file for hat_of_graph.
    #[arg(long)]
    graph: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MeasureArg {
    /// Bag size minus one.
    Card,
    /// Fractional edge cover of the bag.
    RhoStar,
}

#[derive(Args)]
struct DecomposeArgs {
    #[arg(long)]
    input: String,
    /// Decomposition to validate instead of computing one.
    #[arg(long)]
    decomposition: Option<String>,
    #[arg(long, value_enum, default_value_t = MeasureArg::RhoStar)]
    measure: MeasureArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Fast,
    Full,
}

#[derive(Args)]
struct SelftestArgs {
    #[arg(long, value_enum, default_value_t = LevelArg::Fast)]
    level: LevelArg,
}

enum Failure {
    Domain(String),
    Budget(String),
}

impl From<hyperbasis_core::Error> for Failure {
    fn from(e: hyperbasis_core::Error) -> Self {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

type CliResult<T> = Result<T, Failure>;

/// Ordered `name = value` lines plus an optional verbatim body.
#[derive(Default)]
struct Report {
    entries: Vec<(String, Value)>,
    body: Option<(String, String, Value)>,
    /// Set when the command ran but found a failure (selftest).
    failed: bool,
}

impl Report {
    fn int(&mut self, name: impl Into<String>, value: u64) {
        self.entries.push((name.into(), json!(value)));
    }

    fn ratio(&mut self, name: impl Into<String>, value: &Rational) {
        self.entries.push((name.into(), json!(Ratio(value).to_string())));
    }

    fn text(&mut self, name: impl Into<String>, value: impl Into<String>) {
        self.entries.push((name.into(), Value::String(value.into())));
    }

    fn flag(&mut self, name: impl Into<String>, value: bool) {
        self.entries.push((name.into(), Value::Bool(value)));
    }

    /// `text` goes to stdout verbatim; `json` is its mirror under `key`.
    fn body(&mut self, key: &str, text: String, json: Value) {
        self.body = Some((key.to_string(), text, json));
    }

    fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut map = Map::new();
            for (name, value) in &self.entries {
                map.insert(name.clone(), value.clone());
            }
            if let Some((key, _, value)) = &self.body {
                map.insert(key.clone(), value.clone());
            }
            return format!("{}\n", Value::Object(map));
        }
        let mut out = String::new();
        if let Some((_, text, _)) = &self.body {
            out.push_str(text);
        }
        for (name, value) in &self.entries {
            match value {
                Value::String(s) => out.push_str(&format!("{name} = {s}\n")),
                other => out.push_str(&format!("{name} = {other}\n")),
            }
        }
        out
    }
}

fn read(path: &str) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Domain(format!("cannot read {path}: {e}")))
}

fn format_failure(path: &str, e: FormatError) -> Failure {
    Failure::Domain(format!("{path}: {e}"))
}

fn load_hg(path: &str) -> CliResult<Hypergraph> {
    let parsed = parse_any(&read(path)?).map_err(|e| format_failure(path, e))?;
    for w in &parsed.warnings {
        eprintln!("warning: {path}: {w}");
    }
    Ok(parsed.value)
}

fn load_colouring(path: &str, host: &Hypergraph) -> CliResult<Vec<usize>> {
    parse_colouring(&read(path)?, host.vertex_count()).map_err(|e| format_failure(path, e))
}

fn hg_json(h: &Hypergraph) -> Value {
    serde_json::from_str(&to_json(h)).expect("serialized hypergraph is valid JSON")
}

fn motif_json(gamma: &MotifParameter) -> Value {
    Value::Array(
        gamma
            .iter()
            .map(|(h, c)| json!({ "coefficient": Ratio(c).to_string(), "hypergraph": hg_json(h) }))
            .collect(),
    )
}

fn morphism_kind(name: &str) -> Option<MorphismKind> {
    MorphismKind::ALL.into_iter().find(|k| k.name() == name)
}

fn pattern_kind(name: &str) -> Option<PatternKind> {
    PatternKind::ALL.into_iter().find(|k| k.name() == name)
}

fn count(args: &CountArgs, budget: &Budget) -> CliResult<Report> {
    let kind = args.kind.as_str();
    let known_coloured = ["cp", "cf", "cp-trim", "cf-trim", "cf-ie", "cf-ie-trim"];
    let known_surjective = ["surj-hom", "surj-trimhom"];
    if morphism_kind(kind).is_none()
        && pattern_kind(kind).is_none()
        && !known_coloured.contains(&kind)
        && !known_surjective.contains(&kind)
    {
        return Err(Failure::Domain(format!("unknown count kind {kind:?}")));
    }
    if known_coloured.contains(&kind) && args.coloring.is_none() {
        return Err(Failure::Domain(format!("kind {kind} needs --coloring")));
    }
    let pattern = load_hg(&args.pattern)?;
    let host = load_hg(&args.host)?;
    let value = if let Some(k) = morphism_kind(kind) {
        count_morphisms(k, &pattern, &host, budget)?
    } else if let Some(k) = pattern_kind(kind) {
        count_patterns(k, &pattern, &host, budget)?
    } else if let Some(rest) = kind.strip_prefix("surj-") {
        count_surjective(morphism_kind(rest).expect("checked above"), &pattern, &host, budget)?
    } else {
        let path = args.coloring.as_deref().expect("checked above");
        let colouring = load_colouring(path, &host)?;
        let coloured = ColoredHost::relaxed(host, colouring, pattern.vertex_count())?;
        let trimmed = kind.ends_with("-trim");
        match kind {
            "cf-ie" | "cf-ie-trim" => cf_via_inclusion_exclusion(trimmed, &pattern, &coloured, budget)?,
            _ => {
                let mode = if kind.starts_with("cp") { ColourMode::Prescribed } else { ColourMode::Colourful };
                count_colored(mode, trimmed, &pattern, &coloured, budget)?
            }
        }
    };
    let mut report = Report::default();
    report.int(kind, value);
    Ok(report)
}

fn expansion_kind(name: &str) -> CliResult<ExpansionKind> {
    ExpansionKind::parse(name).ok_or_else(|| Failure::Domain(format!("unknown expansion kind {name:?}")))
}

fn expand(args: &ExpandArgs, budget: &Budget) -> CliResult<Report> {
    let kind = expansion_kind(&args.kind)?;
    let h = load_hg(&args.pattern)?;
    let mut report = Report::default();
    let gamma = if args.validate {
        let v = validated_expansion(kind, &h, budget)?;
        report.text("discrepancy", v.discrepancy.unwrap_or_else(|| "none".into()));
        v.parameter
    } else {
        expansion(kind, &h)?
    };
    report.int("terms", gamma.len() as u64);
    report.text("basis", kind.basis().name());
    report.body("motif", serialize_motif(&gamma), motif_json(&gamma));
    Ok(report)
}

fn evaluate_cmd(args: &EvaluateArgs, budget: &Budget) -> CliResult<Report> {
    let gamma = parse_motif(&read(&args.motif)?).map_err(|e| format_failure(&args.motif, e))?;
    let host = load_hg(&args.host)?;
    let basis = match args.basis {
        BasisArg::Hom => MorphismKind::Hom,
        BasisArg::Trimhom => MorphismKind::TrimHom,
    };
    let mut report = Report::default();
    report.ratio("value", &evaluate(&gamma, &host, basis, budget)?);
    Ok(report)
}

fn invariants(args: &InputArgs, budget: &Budget) -> CliResult<Report> {
    let h = load_hg(&args.input)?;
    let mut report = Report::default();
    report.int("vertices", h.vertex_count() as u64);
    report.int("edges", h.edge_count() as u64);
    report.int("rank", h.rank() as u64);
    report.ratio("rho_star", &fractional_invariant(FractionalKind::RhoStar, &h, None)?);
    report.ratio("alpha_star", &fractional_invariant(FractionalKind::AlphaStar, &h, None)?);
    report.int("rho", integral_invariant(IntegralKind::Rho, &h, budget)? as u64);
    report.int("alpha", integral_invariant(IntegralKind::Alpha, &h, budget)? as u64);
    let sigma = sigma_star(&h, budget)?;
    report.ratio("sigma_star", &sigma.value);
    report.text("sigma_star_set", vertex_list(sigma.set));
    report.int("treewidth", treewidth_exact(&h)? as u64);
    Ok(report)
}

fn vertex_list(s: VertexSet) -> String {
    s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn tensor_cmd(args: &TensorArgs, rank_budget: usize) -> CliResult<Report> {
    let g = load_hg(&args.left)?;
    let h = load_hg(&args.right)?;
    let t = tensor_with_budget(&g, &h, rank_budget)?;
    let mut report = Report::default();
    let text = format!("# vertex i is the pair (i / {0}, i % {0})\n{1}", h.vertex_count(), serialize_hg(&t));
    report.body("tensor", text, hg_json(&t));
    Ok(report)
}

fn interpolate(args: &InterpolateArgs, options: &ProbeOptions) -> CliResult<Report> {
    let (kind, pattern_kind) = match args.kind {
        PatternOracleKind::Sub => (ExpansionKind::Sub, PatternKind::Sub),
        PatternOracleKind::Indsub => (ExpansionKind::IndSub, PatternKind::IndSub),
    };
    let h = load_hg(&args.pattern)?;
    let g = load_hg(&args.host)?;
    let budget = options.budget;
    let mut oracle = |host: &Hypergraph| count_patterns_by_morphisms(pattern_kind, &h, host, &budget);
    let result = interpolate_pattern_oracle(kind, &h, &mut oracle, &g, options)?;
    let mut report = Report::default();
    for (f, homs) in result.support.iter().zip(&result.homs) {
        report.int(format!("hom[{}]", inline_hg(f)), *homs);
    }
    report.int("probes", result.probes.len() as u64);
    report.int("oracle_calls", result.oracle_calls as u64);
    Ok(report)
}

fn gadget(cmd: &GadgetCommand, budget: &Budget) -> CliResult<Report> {
    let mut report = Report::default();
    match cmd {
        GadgetCommand::Clique { graph, k } => {
            let g = load_hg(graph)?;
            let (pattern, host) = clique_gadget(&g, *k)?;
            report.int("sub", count_patterns(PatternKind::Sub, &pattern, &host, budget)?);
            report.int("cliques", count_cliques(&g, *k));
        }
        GadgetCommand::Gi { left, right } => {
            let f = load_hg(left)?;
            let g = load_hg(right)?;
            report.flag("isomorphic", gi_gadget(&f, &g)?);
        }
        GadgetCommand::Cn { input } => {
            let instance = parse_cn(&read(input)?).map_err(|e| format_failure(input, e))?;
            let gadget = cn_gadget(&instance, budget)?;
            report.int("cp_trimhom", gadget.count);
            report.int("colourful_neighbourhoods", instance.colourful_neighbourhoods());
        }
        GadgetCommand::Refute { pattern, fresh } => {
            let h = load_hg(pattern)?;
            let (witness, r) = refute_hom_basis_witness(&h, *fresh, budget)?;
            report.int("trimhom", r.trimhom);
            report.int("trimsub", r.trimsub);
            report.int("indtrimsub", r.indtrimsub);
            report.int("min_edge_size", r.min_edge_size as u64);
            report.int("hom_zero_checked", r.hom_zero_checked as u64);
            report.body("witness", serialize_hg(&witness), hg_json(&witness));
        }
        GadgetCommand::Untrim { pattern, keep, host, coloring } => {
            let h0 = load_hg(pattern)?;
            let mut x = VertexSet::EMPTY;
            for token in keep.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
                let v: usize =
                    token.parse().map_err(|_| Failure::Domain(format!("--keep: expected a vertex, found {token:?}")))?;
                if v >= h0.vertex_count() {
                    return Err(Failure::Domain(format!(
                        "--keep: vertex index out of range: {v} (vertex count {})",
                        h0.vertex_count()
                    )));
                }
                x = x.with(v);
            }
            let g = load_hg(host)?;
            let colouring = load_colouring(coloring, &g)?;
            let trimmed = h0.derive(x, hyperbasis_core::DeriveMode::Trim)?;
            let coloured = ColoredHost::new(g, colouring, &trimmed)?;
            let lifted = untrim_colored_host(&h0, x, &coloured)?;
            report.int("cp_before", count_colored(ColourMode::Prescribed, false, &trimmed, &coloured, budget)?);
            report.int("cp_after", count_colored(ColourMode::Prescribed, false, &h0, &lifted, budget)?);
            let text = format!("{}{}", serialize_hg(lifted.host()), serialize_colouring(lifted.colouring()));
            let json = json!({ "host": hg_json(lifted.host()), "coloring": lifted.colouring() });
            report.body("lifted", text, json);
        }
    }
    Ok(report)
}

fn required(value: Option<usize>, flag: &str, family: &str) -> CliResult<usize> {
    value.ok_or_else(|| Failure::Domain(format!("family {family} needs --{flag}")))
}

fn generate_cmd(args: &GenerateArgs) -> CliResult<Report> {
    let f = args.family.as_str();
    let spec = match f {
        "single_vertex" => FamilySpec::SingleVertex,
        "b_k" => FamilySpec::Bk { k: required(args.k, "k", f)? },
        "sunflower" => FamilySpec::Sunflower {
            uniformity: required(args.uniformity, "uniformity", f)?,
            core: required(args.core, "core", f)?,
            petals: required(args.petals, "petals", f)?,
        },
        "h_nk" => FamilySpec::Hnk { n: required(args.n, "n", f)?, k: required(args.k, "k", f)? },
        "grohe_marx" => FamilySpec::GroheMarx { n: required(args.n, "n", f)? },
        "disjoint_edges" => FamilySpec::DisjointEdges { m: required(args.m, "m", f)?, r: required(args.r, "r", f)? },
        "hat_of_graph" => {
            let path = args.graph.as_deref().ok_or_else(|| Failure::Domain("family hat_of_graph needs --graph".into()))?;
            FamilySpec::HatOfGraph(load_hg(path)?)
        }
        other => return Err(Failure::Domain(format!("unknown family {other:?}"))),
    };
    let h = generate(&spec)?;
    let mut report = Report::default();
    report.body("hypergraph", serialize_hg(&h), hg_json(&h));
    Ok(report)
}

fn decompose(args: &DecomposeArgs, budget: &Budget) -> CliResult<Report> {
    let h = load_hg(&args.input)?;
    let measure = match args.measure {
        MeasureArg::Card => WidthMeasure::CardinalityMinusOne,
        MeasureArg::RhoStar => WidthMeasure::RhoStarOfBag,
    };
    let mut report = Report::default();
    let d = match &args.decomposition {
        Some(path) => {
            let d = parse_decomposition(&read(path)?).map_err(|e| format_failure(path, e))?;
            d.validate(&h)?;
            report.flag("valid", true);
            d
        }
        None => {
            report.ratio("sigma_star", &sigma_star(&h, budget)?.value);
            coindependent_decomposition(&h, budget)?
        }
    };
    report.ratio("width", &d.width(&h, measure)?);
    let bags: Vec<Vec<usize>> = d.bags.iter().map(|b| b.iter().collect()).collect();
    report.body("decomposition", serialize_decomposition(&d), json!({ "bags": bags, "tree": d.tree }));
    Ok(report)
}

fn selftest_cmd(args: &SelftestArgs) -> Report {
    let level = match args.level {
        LevelArg::Fast => Level::Fast,
        LevelArg::Full => Level::Full,
    };
    let (suites, criteria) = selftest(level);
    let mut report = Report::default();
    for suite in &suites {
        let name = suite.name.replace([' ', '-'], "_");
        report.int(format!("{name}.checks"), suite.checks);
        match &suite.failure {
            None => report.text(format!("{name}.result"), "pass"),
            Some(f) => {
                report.text(format!("{name}.result"), format!("FAIL: {f}"));
                report.failed = true;
            }
        }
        for (i, note) in suite.notes.iter().enumerate() {
            report.text(format!("{name}.note{}", i + 1), note.clone());
        }
    }
    for c in &criteria {
        report.text(format!("criterion_{}", c.id), c.summary());
        report.failed |= !c.passed();
    }
    report
}

fn run(cli: &Cli) -> CliResult<Report> {
    let budget = Budget { map_evaluations: cli.map_budget };
    let options = ProbeOptions { rank_budget: cli.rank_budget, budget, ..ProbeOptions::default() };
    match &cli.command {
        Command::Count(a) => count(a, &budget),
        Command::Expand(a) => expand(a, &budget),
        Command::Evaluate(a) => evaluate_cmd(a, &budget),
        Command::Invariants(a) => invariants(a, &budget),
        Command::Tensor(a) => tensor_cmd(a, cli.rank_budget),
        Command::Interpolate(a) => interpolate(a, &options),
        Command::Quasipoly(a) => {
            let h = load_hg(&a.pattern)?;
            let g = load_hg(&a.host)?;
            let mut report = Report::default();
            report.int("indsub", indsub_quasipoly(&h, &g, &budget)?);
            Ok(report)
        }
        Command::Trimcount(a) => {
            let g = load_hg(&a.host)?;
            let mut report = Report::default();
            report.int("indtrimsub", indtrimsub_bk(a.k, &g)?);
            Ok(report)
        }
        Command::Gadget(g) => gadget(g, &budget),
        Command::Generate(a) => generate_cmd(a),
        Command::Decompose(a) => decompose(a, &budget),
        Command::Selftest(a) => Ok(selftest_cmd(a)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(report) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(report.render(cli.json).as_bytes());
            if report.failed {
                ExitCode::from(EXIT_DOMAIN)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_DOMAIN)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg} (raise --map-budget or --rank-budget)");
            ExitCode::from(EXIT_BUDGET)
        }
    }
}
