mod input;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use starcrit::bounds::{audit_bounds, audit_complement_conditions, BoundKind, BoundsReport};
use starcrit::coloring::{
    chromatic_number, find_bicolored_p4, is_proper, is_star_coloring, star_chromatic_number,
    star_chromatic_number_oracle, ORACLE_MAX_VERTICES,
};
use starcrit::criticality::{
    classify_critical, is_k_critical_direct, CharacterizationVerdict, CriticalityError,
    CriticalityReport, VerdictStatus,
};
use starcrit::enumerate::{enumerate_all, enumerate_connected};
use starcrit::families::Family;
use starcrit::patterns::{find_induced, format_roles};
use starcrit::verify::{verify_claim, verify_claim_on, Claim, VerificationRun};
use starcrit::{edgelist, graph6, Coloring, Graph, PatternKind};

use input::GraphArgs;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Input(String),
    /// A printed certificate failed re-validation.
    SelfCheck(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Input(_) => 2,
            CliError::SelfCheck(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Input(m) => f.write_str(m),
            CliError::SelfCheck(m) => write!(f, "self-check failed: {m}"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "starcrit",
    version,
    about = "Exact star coloring and star-criticality for small graphs"
)]
struct Cli {
    /// Machine-readable output
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: all cores)
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    /// Print vertices 1-based
    #[arg(long, global = true)]
    one_based: bool,
    /// Re-validate every printed certificate
    #[arg(long, global = true)]
    self_check: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Star chromatic number with a certificate coloring
    Chis(GraphArgs),
    /// Chromatic number with a certificate coloring
    Chi(GraphArgs),
    /// Check a coloring for properness and bicolored P4s
    CheckColoring(CheckColoringArgs),
    /// Find induced forbidden patterns
    Detect(DetectArgs),
    /// Direct k-criticality test with per-edge values
    Critical(CriticalArgs),
    /// Criticality label, cross-checked against the pattern characterizations
    Classify(GraphArgs),
    /// Build a named family member
    Gen(GenArgs),
    /// List non-isomorphic graphs of one order
    Enumerate(EnumerateArgs),
    /// Check a claim over every connected graph of an order
    Verify(VerifyArgs),
    /// Edge-count bounds and complement conditions
    Audit(AuditArgs),
    /// Convert between graph6 and edge lists
    Convert(ConvertArgs),
}

#[derive(Debug, Args)]
struct CheckColoringArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Colors in vertex order, 1-based, separated by spaces or commas
    #[arg(long, value_name = "COLORS")]
    coloring: Option<String>,
    #[arg(long, value_name = "FILE")]
    coloring_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct DetectArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// i3, 2k2, i4, 2k2+k1 or p3+p2 (repeatable; default all)
    #[arg(long, value_name = "NAME")]
    pattern: Vec<String>,
}

#[derive(Debug, Args)]
struct CriticalArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Claimed value of chi_s (default: computed)
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_name = "NAME")]
    family: String,
    #[arg(long, value_name = "K")]
    n: usize,
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    connected: bool,
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
    /// Print only the number of graphs
    #[arg(long)]
    count: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Claim id, or `all`
    #[arg(long)]
    claim: String,
    #[arg(long, required_unless_present = "input", conflicts_with = "input")]
    n: Option<usize>,
    /// graph6 file to check instead of the built-in enumeration
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AuditKind {
    N1,
    N2,
}

#[derive(Debug, Args)]
struct AuditArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Bounds to check; a violation exits 1
    #[arg(long, value_enum)]
    kind: Option<AuditKind>,
}

#[derive(Debug, Args)]
struct ConvertArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long, value_enum, default_value = "graph6")]
    to: Format,
}

struct Ctx {
    json: bool,
    offset: usize,
    self_check: bool,
}

/// Exit status plus the text written to stdout.
struct Output {
    code: u8,
    text: String,
}

impl Ctx {
    fn emit(&self, command: &str, mut body: Value, human: String, code: u8) -> Output {
        if !self.json {
            return Output { code, text: human };
        }
        let obj = body.as_object_mut().expect("json object");
        obj.insert("schema".into(), json!(1));
        obj.insert("command".into(), json!(command));
        Output {
            code,
            text: format!("{body}\n"),
        }
    }

    fn vertex(&self, v: usize) -> usize {
        v + self.offset
    }

    fn coloring_pairs(&self, c: &Coloring) -> String {
        c.colors()
            .iter()
            .enumerate()
            .map(|(v, c)| format!("{}:{c}", self.vertex(v)))
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn check(&self, ok: bool, what: impl FnOnce() -> String) -> Result<(), CliError> {
        if self.self_check && !ok {
            return Err(CliError::SelfCheck(what()));
        }
        Ok(())
    }
}

fn encode(g: &Graph) -> Result<String, CliError> {
    graph6::encode(g).map_err(|e| CliError::Input(e.to_string()))
}

fn edge_pairs(g: &Graph, offset: usize) -> Value {
    json!(g
        .edges()
        .iter()
        .map(|e| [e.u + offset, e.v + offset])
        .collect::<Vec<_>>())
}

fn render(g: &Graph, format: Format) -> Result<String, CliError> {
    Ok(match format {
        Format::Graph6 => encode(g)? + "\n",
        Format::Edgelist => edgelist::write(g),
    })
}

fn cmd_chis(ctx: &Ctx, args: &GraphArgs, star: bool) -> Result<Output, CliError> {
    let g = args.load()?;
    let (value, coloring) = if star {
        star_chromatic_number(&g)
    } else {
        chromatic_number(&g)
    };
    let valid = if star {
        is_star_coloring(&g, &coloring)
    } else {
        is_proper(&g, &coloring)
    };
    ctx.check(
        valid == Ok(true) && coloring.distinct_colors() == value,
        || "certificate rejected".into(),
    )?;
    if star && ctx.self_check && g.n() <= ORACLE_MAX_VERTICES {
        let oracle =
            star_chromatic_number_oracle(&g).map_err(|e| CliError::SelfCheck(e.to_string()))?;
        ctx.check(oracle == value, || {
            format!("exhaustive search gives {oracle}")
        })?;
    }
    let human = format!("{value}\ncoloring: {}\n", ctx.coloring_pairs(&coloring));
    let key = if star { "chi_s" } else { "chi" };
    let body = json!({ "n": g.n(), "m": g.m(), key: value, "coloring": coloring.colors(), "vertex_base": ctx.offset });
    Ok(ctx.emit(if star { "chis" } else { "chi" }, body, human, 0))
}

fn cmd_check_coloring(ctx: &Ctx, args: &CheckColoringArgs) -> Result<Output, CliError> {
    let g = args.graph.load()?;
    let text = input::coloring_text(args.coloring.as_deref(), args.coloring_file.as_deref())?;
    let coloring =
        Coloring::new(input::parse_coloring(&text)?).map_err(|e| CliError::Input(e.to_string()))?;
    let bad = |e: starcrit::coloring::ColoringError| CliError::Input(e.to_string());
    let proper = is_proper(&g, &coloring).map_err(bad)?;
    let witness = if proper {
        find_bicolored_p4(&g, &coloring).map_err(bad)?
    } else {
        None
    };
    let star = proper && witness.is_none();
    let mut human = format!("proper: {}\nstar: {}\n", yes(proper), yes(star));
    if let Some(w) = &witness {
        let [a, b, c, d] = w.path.map(|v| ctx.vertex(v));
        writeln!(
            human,
            "bicolored P4: {a}-{b}-{c}-{d} colored {}/{}",
            w.colors.0, w.colors.1
        )
        .unwrap();
    }
    let body = json!({
        "proper": proper,
        "star": star,
        "colors_used": coloring.distinct_colors(),
        "bicolored_p4": witness.map(|w| json!({ "path": w.path.map(|v| ctx.vertex(v)), "colors": [w.colors.0, w.colors.1] })),
    });
    Ok(ctx.emit("check-coloring", body, human, if star { 0 } else { 1 }))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_detect(ctx: &Ctx, args: &DetectArgs) -> Result<Output, CliError> {
    let g = args.graph.load()?;
    let kinds: Vec<PatternKind> = if args.pattern.is_empty() {
        PatternKind::ALL.to_vec()
    } else {
        args.pattern
            .iter()
            .map(|p| p.parse().map_err(CliError::Usage))
            .collect::<Result<_, _>>()?
    };
    let mut human = String::new();
    let mut records = Vec::new();
    for kind in kinds {
        let w = find_induced(&g, kind);
        if let Some(w) = &w {
            ctx.check(w.is_valid_in(&g), || format!("{kind} witness {w}"))?;
        }
        let roles = w.as_ref().map(|w| format_roles(w, ctx.offset));
        writeln!(human, "{kind}: {}", roles.as_deref().unwrap_or("free")).unwrap();
        records.push(json!({
            "pattern": kind.name(),
            "found": w.is_some(),
            "vertices": w.as_ref().map(|w| w.vertices.iter().map(|&v| ctx.vertex(v)).collect::<Vec<_>>()),
            "roles": roles,
        }));
    }
    Ok(ctx.emit("detect", json!({ "results": records }), human, 0))
}

fn report_json(ctx: &Ctx, r: &CriticalityReport) -> Value {
    json!({
        "k": r.k,
        "chi_s": r.chi_s,
        "premise_holds": r.premise_holds,
        "critical": r.is_critical,
        "failing_edge": r.failing_edge.map(|e| [ctx.vertex(e.u), ctx.vertex(e.v)]),
        "per_edge": r.per_edge.iter().map(|ev| json!({ "edge": [ctx.vertex(ev.edge.u), ctx.vertex(ev.edge.v)], "chi_s": ev.chi_s })).collect::<Vec<_>>(),
        "certificate": r.certificate.colors(),
    })
}

fn report_human(ctx: &Ctx, r: &CriticalityReport, out: &mut String) {
    writeln!(out, "chi_s: {}", r.chi_s).unwrap();
    writeln!(out, "coloring: {}", ctx.coloring_pairs(&r.certificate)).unwrap();
    for ev in &r.per_edge {
        writeln!(
            out,
            "  G-({},{}): {}",
            ctx.vertex(ev.edge.u),
            ctx.vertex(ev.edge.v),
            ev.chi_s
        )
        .unwrap();
    }
}

fn check_report(ctx: &Ctx, g: &Graph, r: &CriticalityReport) -> Result<(), CliError> {
    let ok = is_star_coloring(g, &r.certificate) == Ok(true)
        && r.certificate.distinct_colors() == r.chi_s;
    ctx.check(ok, || "criticality certificate rejected".into())
}

fn cmd_critical(ctx: &Ctx, args: &CriticalArgs) -> Result<Output, CliError> {
    let g = args.graph.load()?;
    let (r, k) = match args.k {
        Some(k) => (is_k_critical_direct(&g, k), k),
        None => {
            let k = star_chromatic_number(&g).0;
            (is_k_critical_direct(&g, k), k)
        }
    };
    let r = r.map_err(|e: CriticalityError| CliError::Input(e.to_string()))?;
    check_report(ctx, &g, &r)?;
    let mut human = format!("{k}-critical: {}\n", yes(r.is_critical));
    if !r.premise_holds {
        writeln!(human, "premise fails: chi_s = {}, not {k}", r.chi_s).unwrap();
    } else if let Some(e) = r.failing_edge {
        writeln!(
            human,
            "deleting ({},{}) keeps chi_s = {}",
            ctx.vertex(e.u),
            ctx.vertex(e.v),
            r.chi_s
        )
        .unwrap();
    }
    report_human(ctx, &r, &mut human);
    let code = if r.is_critical { 0 } else { 1 };
    Ok(ctx.emit("critical", report_json(ctx, &r), human, code))
}

fn status_name(v: &CharacterizationVerdict) -> String {
    match &v.status {
        VerdictStatus::Holds => "holds".into(),
        VerdictStatus::Fails => "fails".into(),
        VerdictStatus::Inapplicable(why) => format!("inapplicable ({why})"),
    }
}

fn verdict_json(ctx: &Ctx, v: &CharacterizationVerdict) -> Value {
    json!({
        "claim": v.claim.to_string(),
        "status": status_name(v),
        "graph_witness": v.graph_witness.as_ref().map(|w| format!("{} {}", w.kind, format_roles(w, ctx.offset))),
        "edge_witnesses": v.edge_witnesses.iter().map(|ew| json!({
            "edge": [ctx.vertex(ew.edge.u), ctx.vertex(ew.edge.v)],
            "witness": ew.witness.as_ref().map(|w| format!("{} {}", w.kind, format_roles(w, ctx.offset))),
        })).collect::<Vec<_>>(),
    })
}

fn verdict_human(ctx: &Ctx, v: &CharacterizationVerdict, out: &mut String) {
    writeln!(out, "{}: {}", v.claim, status_name(v)).unwrap();
    if let Some(w) = &v.graph_witness {
        writeln!(out, "  in G: {} {}", w.kind, format_roles(w, ctx.offset)).unwrap();
    }
    for ew in &v.edge_witnesses {
        let shown = ew
            .witness
            .as_ref()
            .map(|w| format!("{} {}", w.kind, format_roles(w, ctx.offset)));
        writeln!(
            out,
            "  G-({},{}): {}",
            ctx.vertex(ew.edge.u),
            ctx.vertex(ew.edge.v),
            shown.as_deref().unwrap_or("none")
        )
        .unwrap();
    }
}

fn cmd_classify(ctx: &Ctx, args: &GraphArgs) -> Result<Output, CliError> {
    let g = args.load()?;
    match classify_critical(&g) {
        Ok(c) => {
            check_report(ctx, &g, &c.report)?;
            for v in &c.fast_paths {
                ctx.check(v.revalidate(&g), || format!("{} witnesses", v.claim))?;
            }
            let mut human = format!("{}\n", c.label);
            report_human(ctx, &c.report, &mut human);
            for v in &c.fast_paths {
                verdict_human(ctx, v, &mut human);
            }
            let body = json!({
                "label": c.label.to_string(),
                "report": report_json(ctx, &c.report),
                "fast_paths": c.fast_paths.iter().map(|v| verdict_json(ctx, v)).collect::<Vec<_>>(),
                "disagreement": Value::Null,
            });
            Ok(ctx.emit("classify", body, human, 0))
        }
        Err(CriticalityError::Disagreement(d)) => {
            let mut human = format!("{}\n", d.label);
            writeln!(
                human,
                "disagreement: {} says {} but the direct method says {}",
                d.verdict.claim,
                d.verdict.holds(),
                d.direct_holds
            )
            .unwrap();
            report_human(ctx, &d.report, &mut human);
            verdict_human(ctx, &d.verdict, &mut human);
            let body = json!({
                "label": d.label.to_string(),
                "report": report_json(ctx, &d.report),
                "fast_paths": Vec::<Value>::new(),
                "disagreement": {
                    "verdict": verdict_json(ctx, &d.verdict),
                    "direct_holds": d.direct_holds,
                },
            });
            Ok(ctx.emit("classify", body, human, 1))
        }
        Err(e) => Err(CliError::Input(e.to_string())),
    }
}

fn graph_body(ctx: &Ctx, g: &Graph) -> Result<Value, CliError> {
    Ok(json!({ "n": g.n(), "m": g.m(), "graph6": encode(g)?, "edges": edge_pairs(g, ctx.offset) }))
}

fn cmd_gen(ctx: &Ctx, args: &GenArgs) -> Result<Output, CliError> {
    let family: Family = args
        .family
        .parse()
        .map_err(|e| CliError::Usage(format!("{e}")))?;
    let g = family
        .build(args.n)
        .map_err(|e| CliError::Usage(format!("{e}")))?;
    let mut body = graph_body(ctx, &g)?;
    body["family"] = json!(family.to_string());
    Ok(ctx.emit("gen", body, render(&g, args.format)?, 0))
}

fn cmd_convert(ctx: &Ctx, args: &ConvertArgs) -> Result<Output, CliError> {
    let g = args.graph.load()?;
    Ok(ctx.emit("convert", graph_body(ctx, &g)?, render(&g, args.to)?, 0))
}

fn cmd_enumerate(ctx: &Ctx, args: &EnumerateArgs) -> Result<Output, CliError> {
    let graphs = if args.connected {
        enumerate_connected(args.n)
    } else {
        enumerate_all(args.n)
    }
    .map_err(|e| CliError::Usage(e.to_string()))?;
    let mut human = String::new();
    if args.count {
        writeln!(human, "{}", graphs.len()).unwrap();
    } else {
        for (i, g) in graphs.iter().enumerate() {
            if i > 0 && matches!(args.format, Format::Edgelist) {
                human.push('\n');
            }
            human.push_str(&render(g, args.format)?);
        }
    }
    let codes: Vec<String> = if args.count {
        Vec::new()
    } else {
        graphs.iter().map(encode).collect::<Result<_, _>>()?
    };
    let body =
        json!({ "n": args.n, "connected": args.connected, "count": graphs.len(), "graphs": codes });
    Ok(ctx.emit("enumerate", body, human, 0))
}

fn run_json(run: &VerificationRun) -> Value {
    json!({
        "claim": run.claim.id(),
        "n": run.n,
        "examined": run.examined,
        "applicable": run.applicable,
        "counterexamples": run.counterexamples,
        "holds": run.holds(),
    })
}

fn run_human(run: &VerificationRun, scope: &str, out: &mut String) {
    writeln!(
        out,
        "{}: {} counterexamples / {} {scope} examined ({} applicable)",
        run.claim,
        run.counterexamples.len(),
        run.examined,
        run.applicable
    )
    .unwrap();
    for c in &run.counterexamples {
        writeln!(out, "  {c}").unwrap();
    }
}

fn cmd_verify(ctx: &Ctx, args: &VerifyArgs) -> Result<Output, CliError> {
    let claims: Vec<Claim> = if args.claim == "all" {
        Claim::ALL.to_vec()
    } else {
        vec![args
            .claim
            .parse()
            .map_err(|e| CliError::Usage(format!("{e}")))?]
    };
    let graphs = args
        .input
        .as_deref()
        .map(input::read_graph6_file)
        .transpose()?;
    let mut runs = Vec::new();
    let mut human = String::new();
    for claim in claims {
        let (run, scope) = match (&graphs, args.n) {
            (Some(gs), _) => {
                let n = gs.iter().map(Graph::n).max().unwrap_or(0);
                (
                    verify_claim_on(claim, n, gs),
                    format!("graphs from {}", args.input.as_ref().unwrap().display()),
                )
            }
            (None, Some(n)) => {
                let run = verify_claim(claim, n).map_err(|e| CliError::Usage(e.to_string()))?;
                let scope = if claim.cumulative() {
                    format!("connected graphs of order ≤ {n}")
                } else {
                    format!("connected graphs of order {n}")
                };
                (run, scope)
            }
            (None, None) => return Err(CliError::Usage("verify needs --n or --input".into())),
        };
        run_human(&run, &scope, &mut human);
        runs.push(run);
    }
    let code = if runs.iter().all(VerificationRun::holds) {
        0
    } else {
        1
    };
    let body = if runs.len() == 1 {
        run_json(&runs[0])
    } else {
        json!({ "runs": runs.iter().map(run_json).collect::<Vec<_>>() })
    };
    Ok(ctx.emit("verify", body, human, code))
}

fn bounds_json(r: &BoundsReport) -> Value {
    json!({
        "kind": r.kind.to_string(),
        "satisfied": r.satisfied(),
        "checks": r.checks.iter().map(|c| json!({ "name": c.name, "relation": c.relation, "bound": c.bound, "satisfied": c.satisfied })).collect::<Vec<_>>(),
    })
}

fn cmd_audit(ctx: &Ctx, args: &AuditArgs) -> Result<Output, CliError> {
    let g = args.graph.load()?;
    let kinds = match args.kind {
        Some(AuditKind::N1) => vec![BoundKind::N1Critical],
        Some(AuditKind::N2) => vec![BoundKind::N2Critical],
        None => vec![BoundKind::N1Critical, BoundKind::N2Critical],
    };
    let reports: Vec<BoundsReport> = kinds.iter().map(|&k| audit_bounds(&g, k)).collect();
    let comp = audit_complement_conditions(&g);
    let mut human = format!("n = {}, m = {}\n", g.n(), g.m());
    for r in &reports {
        writeln!(human, "{} bounds:", r.kind).unwrap();
        for c in &r.checks {
            writeln!(
                human,
                "  {:<5} {}  [{}]: {}",
                c.name,
                c.relation,
                c.bound,
                if c.satisfied { "ok" } else { "violated" }
            )
            .unwrap();
        }
    }
    writeln!(human, "complement: m = {}", comp.complement_m).unwrap();
    writeln!(human, "  (C3,C4)-free: {}", yes(comp.complement_c3c4_free)).unwrap();
    writeln!(human, "  4c^2 <= n^2(n-1): {}", yes(comp.c3c4_edge_bound)).unwrap();
    writeln!(human, "  K4-free: {}", yes(comp.complement_k4_free)).unwrap();
    writeln!(human, "  3c <= n^2: {}", yes(comp.turan_bound)).unwrap();
    let code = if args.kind.is_some() && !reports.iter().all(BoundsReport::satisfied) {
        1
    } else {
        0
    };
    let body = json!({
        "n": g.n(),
        "m": g.m(),
        "bounds": reports.iter().map(bounds_json).collect::<Vec<_>>(),
        "complement": {
            "m": comp.complement_m,
            "c3c4_free": comp.complement_c3c4_free,
            "c3c4_edge_bound": comp.c3c4_edge_bound,
            "k4_free": comp.complement_k4_free,
            "turan_bound": comp.turan_bound,
        },
    });
    Ok(ctx.emit("audit", body, human, code))
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let ctx = Ctx {
        json: cli.json,
        offset: usize::from(cli.one_based),
        self_check: cli.self_check,
    };
    match &cli.command {
        Command::Chis(a) => cmd_chis(&ctx, a, true),
        Command::Chi(a) => cmd_chis(&ctx, a, false),
        Command::CheckColoring(a) => cmd_check_coloring(&ctx, a),
        Command::Detect(a) => cmd_detect(&ctx, a),
        Command::Critical(a) => cmd_critical(&ctx, a),
        Command::Classify(a) => cmd_classify(&ctx, a),
        Command::Gen(a) => cmd_gen(&ctx, a),
        Command::Enumerate(a) => cmd_enumerate(&ctx, a),
        Command::Verify(a) => cmd_verify(&ctx, a),
        Command::Audit(a) => cmd_audit(&ctx, a),
        Command::Convert(a) => cmd_convert(&ctx, a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
