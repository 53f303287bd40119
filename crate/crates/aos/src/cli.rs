//! The `aos` command line.
//!
//! Exit codes:
//!
//! | code | meaning                                                      |
//! |------|--------------------------------------------------------------|
//! | 0    | success                                                      |
//! | 1    | verification failed (containment violated, oracle mismatch)  |
//! | 2    | model infeasible                                             |
//! | 3    | model unbounded                                              |
//! | 4    | enumeration stopped at `--limit`; report marked incomplete   |
//! | 64   | usage error or invalid input file                            |
//! | 66   | input file cannot be read                                    |
//! | 70   | numeric failure or iteration limit in the solver             |
//! | 74   | report cannot be written                                     |
//!
//! Reports go to `--output` (written atomically) or stdout. Exit codes 64,
//! 66, 70 and 74 never leave a report behind.

use std::fs;
use std::path::{Path, PathBuf};

use aos_core::analysis::{check_hierarchy, HierarchyCheck};
use aos_core::{
    apply_box_bounds, brute_force_vertices, build_copper_plate, build_dcopf, build_network_flow,
    enumerate_vertices_with, project_set, rank_alternatives, rank_by_scores, solve, to_standard_form,
    EnumerateOptions, Error, LpModel, Network, ProjectionSpec, Role, SolveStatus, SublevelSpec, VertexSet,
    DEDUP_TOL, DEFAULT_BOX_BOUND, DEFAULT_VERTEX_LIMIT,
};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use log::{debug, info, warn};
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::format;
use crate::generate;
use crate::report::{
    Level, ModelInfo, NetworkRow, OracleReport, RandomVerifyReport, RankReport, SolveReport, VerifyReport,
    VertexReport,
};
use crate::schema::{self, InputError, LP_SCHEMA, NET_SCHEMA, REPORT_SCHEMA};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;
pub const EXIT_UNBOUNDED: i32 = 3;
pub const EXIT_TRUNCATED: i32 = 4;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_NO_INPUT: i32 = 66;
pub const EXIT_NUMERIC: i32 = 70;
pub const EXIT_IO: i32 = 74;

/// Gaps checked by `verify --random-networks` when `--gap` is not given.
pub const RANDOM_VERIFY_GAPS: [f64; 3] = [0.0, 0.01, 0.1];

#[derive(Debug, Parser)]
#[command(name = "aos", version, about = "Alternative optimal solutions of linear programs and DC power flow models")]
pub struct Cli {
    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve a model and report status, z* and x*.
    Solve(SolveArgs),
    /// Enumerate the vertices of a sublevel set.
    Enumerate(EnumerateArgs),
    /// Check containment of projected sublevel sets across DC-OPF, Network Flow and Copper Plate.
    Verify(VerifyArgs),
    /// Rank alternatives by a secondary objective or external scores.
    Rank(RankArgs),
    /// Cross-check enumeration against the hyperplane-intersection oracle.
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelKind {
    Dcopf,
    Nf,
    Cp,
    RawLp,
}

impl ModelKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ModelKind::Dcopf => "dcopf",
            ModelKind::Nf => "nf",
            ModelKind::Cp => "cp",
            ModelKind::RawLp => "raw-lp",
        }
    }
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Network (aos-net/1) or LP (aos-lp/1) file.
    pub input: PathBuf,
    /// Model to build from a network; LP files are always raw-lp. [default: dcopf]
    #[arg(long, value_enum)]
    pub model: Option<ModelKind>,
}

#[derive(Debug, Args)]
pub struct LevelArgs {
    /// Relative gap ε: τ = z* ± ε·max(1, |z*|). [default: 0]
    #[arg(long, conflicts_with = "tau")]
    pub gap: Option<f64>,
    /// Absolute level τ.
    #[arg(long)]
    pub tau: Option<f64>,
    /// Half-width M replacing infinite variable bounds before enumeration.
    #[arg(long, default_value_t = DEFAULT_BOX_BOUND)]
    pub box_bound: f64,
    /// Maximum number of distinct vertices.
    #[arg(long, default_value_t = DEFAULT_VERTEX_LIMIT)]
    pub limit: usize,
    /// Per-coordinate tolerance under which two points coincide.
    #[arg(long, default_value_t = DEDUP_TOL)]
    pub dedup_tol: f64,
}

impl LevelArgs {
    fn spec(&self) -> SublevelSpec {
        match (self.gap, self.tau) {
            (_, Some(t)) => SublevelSpec::Absolute(t),
            (g, None) => SublevelSpec::RelativeGap(g.unwrap_or(0.0)),
        }
    }

    fn options(&self) -> Result<EnumerateOptions, Failure> {
        if !(self.dedup_tol >= 0.0 && self.dedup_tol.is_finite()) {
            return Err(Failure::usage(format!("--dedup-tol must be a finite value >= 0, got {}", self.dedup_tol)));
        }
        if self.limit == 0 {
            return Err(Failure::usage("--limit must be at least 1"));
        }
        Ok(EnumerateOptions { limit: self.limit, dedup_tol: self.dedup_tol, ..Default::default() })
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub input: InputArgs,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub level: LevelArgs,
    /// Keep only some coordinates: a count k of leading variables, role names
    /// (generation, flow, angle, generic) or variable names, comma separated.
    #[arg(long)]
    pub project: Option<String>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["input", "random_networks"])))]
pub struct VerifyArgs {
    /// Network file (aos-net/1).
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub level: LevelArgs,
    /// Check this many random networks with a feasible DC-OPF instead of a file.
    #[arg(long)]
    pub random_networks: Option<usize>,
    /// Seed for --random-networks.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Test hook: add a DC point whose first generator exceeds its capacity.
    #[arg(long, hide = true)]
    pub inject_bad_point: bool,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("criterion").required(true).args(["secondary", "scores"])))]
pub struct RankArgs {
    /// Enumeration report (aos-report/1) or a model file, enumerated first.
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub model: Option<ModelKind>,
    /// Linear secondary objective (aos-secondary/1).
    #[arg(long)]
    pub secondary: Option<PathBuf>,
    /// Per-point scores (aos-scores/1), in the order of the vertex report.
    #[arg(long)]
    pub scores: Option<PathBuf>,
    #[command(flatten)]
    pub level: LevelArgs,
    /// As for `enumerate`; only used when INPUT is a model.
    #[arg(long)]
    pub project: Option<String>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub level: LevelArgs,
}

/// A finished command: exit code plus the report text.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub report: String,
}

/// A command that produced no report.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }

    fn status(s: SolveStatus) -> Self {
        let code = match s {
            SolveStatus::Infeasible => EXIT_INFEASIBLE,
            SolveStatus::Unbounded => EXIT_UNBOUNDED,
            SolveStatus::Optimal | SolveStatus::NumericFailure | SolveStatus::IterationLimit => EXIT_NUMERIC,
        };
        Failure { code, message: format!("model is {}", s.as_str().replace('_', " ")) }
    }
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Solver(s) => Failure::status(s),
            Error::Unbounded(_) => Failure { code: EXIT_UNBOUNDED, message: e.to_string() },
            e => Failure::usage(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure { code: EXIT_NO_INPUT, message: format!("cannot read {}: {e}", path.display()) })
}

fn render<T: Serialize>(report: &T) -> Result<String, Failure> {
    format::to_text(report).map_err(|e| Failure { code: EXIT_NUMERIC, message: format!("cannot serialize report: {e}") })
}

/// What a model file turned into.
struct Loaded {
    kind: ModelKind,
    model: LpModel,
}

impl Loaded {
    fn info(&self) -> ModelInfo {
        ModelInfo { kind: self.kind.as_str().into(), fingerprint: self.model.fingerprint(), variables: self.model.var_names() }
    }
}

fn build(kind: ModelKind, net: &Network) -> LpModel {
    match kind {
        ModelKind::Dcopf => build_dcopf(net),
        ModelKind::Nf => build_network_flow(net),
        ModelKind::Cp => build_copper_plate(net),
        ModelKind::RawLp => unreachable!("raw-lp is rejected for networks"),
    }
}

fn load_model(path: &Path, kind: Option<ModelKind>) -> Result<Loaded, Failure> {
    let text = read(path)?;
    let (version, _) = schema::schema_of(&text)?;
    match version.as_str() {
        NET_SCHEMA => {
            let kind = kind.unwrap_or(ModelKind::Dcopf);
            if kind == ModelKind::RawLp {
                return Err(Failure::usage("--model raw-lp needs an aos-lp/1 file, got a network"));
            }
            let net = schema::parse_network(&text)?;
            info!("network: {} buses, {} lines", net.buses().len(), net.lines().len());
            Ok(Loaded { kind, model: build(kind, &net) })
        }
        LP_SCHEMA => {
            if kind.is_some_and(|k| k != ModelKind::RawLp) {
                return Err(Failure::usage(format!("--model {} needs an aos-net/1 file, got an LP", kind.unwrap().as_str())));
            }
            Ok(Loaded { kind: ModelKind::RawLp, model: schema::parse_lp(&text)? })
        }
        other => Err(Failure::usage(format!("E_SCHEMA: expected {NET_SCHEMA} or {LP_SCHEMA}, found {other}"))),
    }
}

fn optimum(model: &LpModel) -> Result<f64, Failure> {
    let r = solve(&to_standard_form(model)?);
    debug!("solve: {} after {} iterations", r.status.as_str(), r.iterations);
    if r.is_optimal() { Ok(r.z_star) } else { Err(Failure::status(r.status)) }
}

/// Parses `--project`: an integer, role names, or variable names.
pub fn parse_projection(text: &str, model: &LpModel) -> Result<ProjectionSpec, Failure> {
    let spec = match text.trim().parse::<usize>() {
        Ok(k) => ProjectionSpec::Leading(k),
        Err(_) => named_projection(text, model)?,
    };
    spec.indices(&model.var_names())?;
    Ok(spec)
}

fn named_projection(text: &str, model: &LpModel) -> Result<ProjectionSpec, Failure> {
    let items: Vec<&str> = text.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if items.is_empty() {
        return Err(Failure::usage("--project is empty"));
    }
    let roles: Option<Vec<Role>> = items.iter().map(|s| Role::parse(s)).collect();
    let spec = match roles {
        Some(r) => ProjectionSpec::by_roles(model, &r),
        None => ProjectionSpec::Named(items.into_iter().map(String::from).collect()),
    };
    Ok(spec)
}

fn level_of(spec: SublevelSpec) -> Level {
    match spec {
        SublevelSpec::RelativeGap(gap) => Level::RelativeGap { gap },
        SublevelSpec::Absolute(tau) => Level::Absolute { tau },
    }
}

fn enumerate_loaded(loaded: &Loaded, level: &LevelArgs, project: Option<&str>) -> Result<VertexReport, Failure> {
    let opts = level.options()?;
    let projection = project.map(|p| parse_projection(p, &loaded.model)).transpose()?;
    let z = optimum(&loaded.model)?;
    let boxed = apply_box_bounds(&loaded.model, level.box_bound)?;
    if !boxed.modified.is_empty() {
        info!("boxed {} variables at ±{}", boxed.modified.len(), level.box_bound);
    }
    let spec = level.spec();
    let mut vs = enumerate_vertices_with(&boxed.model, z, spec, &opts)?;
    info!("enumerated {} vertices at tau = {}", vs.len(), vs.tau);
    if !vs.complete {
        warn!("vertex limit {} reached; the set is incomplete", opts.limit);
    }
    if let Some(p) = &projection {
        vs = project_set(&vs, p, opts.dedup_tol)?;
    }
    Ok(VertexReport {
        schema_version: REPORT_SCHEMA.into(),
        command: "enumerate".into(),
        model: loaded.info(),
        sense: loaded.model.objective().sense.into(),
        z_star: z,
        level: level_of(spec),
        tau: vs.tau,
        box_bound: level.box_bound,
        boxed_variables: boxed.modified,
        projection: projection.as_ref().map(|_| vs.variables.clone()),
        variables: vs.variables.clone(),
        count: vs.len(),
        points: vs.points,
        objectives: vs.objectives,
        complete: vs.complete,
        provably_empty: vs.provably_empty,
    })
}

/// Serializes and reads back a report so later stages see exactly the
/// numbers a file would carry.
fn through_text<T: Serialize + DeserializeOwned>(report: &T) -> Result<T, Failure> {
    serde_json::from_str(&render(report)?).map_err(|e| Failure::usage(format!("report does not read back: {e}")))
}

fn cmd_solve(args: &SolveArgs) -> Result<Outcome, Failure> {
    let loaded = load_model(&args.input.input, args.input.model)?;
    let r = solve(&to_standard_form(&loaded.model)?);
    info!("{} after {} iterations", r.status.as_str(), r.iterations);
    let code = match r.status {
        SolveStatus::Optimal => EXIT_OK,
        SolveStatus::Infeasible => EXIT_INFEASIBLE,
        SolveStatus::Unbounded => EXIT_UNBOUNDED,
        s => return Err(Failure::status(s)),
    };
    Ok(Outcome { code, report: render(&SolveReport::new(loaded.info(), &r))? })
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<Outcome, Failure> {
    let loaded = load_model(&args.input.input, args.input.model)?;
    let report = enumerate_loaded(&loaded, &args.level, args.project.as_deref())?;
    let code = if report.complete { EXIT_OK } else { EXIT_TRUNCATED };
    Ok(Outcome { code, report: render(&report)? })
}

// Copy of the first DC vertex with its first generator pushed one unit past
// capacity.
fn inject_bad_point(net: &Network) -> impl Fn(&mut VertexSet) + '_ {
    move |vs: &mut VertexSet| {
        let Some(first) = vs.points.first() else { return };
        let mut bad = first.clone();
        bad[0] = net.generators()[0].capacity + 1.0;
        let obj = vs.objectives[0];
        vs.points.push(bad);
        vs.objectives.push(obj);
    }
}

fn hierarchy(net: &Network, level: &LevelArgs, spec: SublevelSpec, inject: bool) -> Result<HierarchyCheck, Failure> {
    let opts = level.options()?;
    let tamper = inject_bad_point(net);
    let hook: Option<&dyn Fn(&mut VertexSet)> = if inject { Some(&tamper) } else { None };
    Ok(check_hierarchy(net, spec, level.box_bound, &opts, hook)?)
}

fn cmd_verify(args: &VerifyArgs) -> Result<Outcome, Failure> {
    if let Some(n) = args.random_networks {
        return verify_random(args, n);
    }
    let path = args.input.as_ref().expect("clap requires a source");
    let text = read(path)?;
    let net = schema::parse_network(&text)?;
    let spec = args.level.spec();
    let check = hierarchy(&net, &args.level, spec, args.inject_bad_point)?;
    for p in &check.report.pairs {
        info!("{}: {} (max violation {:e})", p.label, if p.pass { "pass" } else { "FAIL" }, p.max_violation);
    }
    let report = VerifyReport {
        schema_version: REPORT_SCHEMA.into(),
        command: "verify".into(),
        fingerprint: build_dcopf(&net).fingerprint(),
        z_star: check.z_star,
        level: level_of(spec),
        tau: check.tau,
        box_bound: args.level.box_bound,
        dc_vertices: check.dc.len(),
        nf_vertices: check.nf.len(),
        pass: check.report.pass,
        max_violation: check.report.max_violation(),
        pairs: VerifyReport::pairs(&check.report),
    };
    let code = if report.pass { EXIT_OK } else { EXIT_VERIFY_FAILED };
    Ok(Outcome { code, report: render(&report)? })
}

fn verify_random(args: &VerifyArgs, wanted: usize) -> Result<Outcome, Failure> {
    if args.level.tau.is_some() {
        return Err(Failure::usage("--tau cannot be shared by random networks; use --gap"));
    }
    let gaps: Vec<f64> = args.level.gap.map_or_else(|| RANDOM_VERIFY_GAPS.to_vec(), |g| vec![g]);
    let mut rng = generate::rng(args.seed);
    let (mut drawn, mut checked) = (0, 0);
    let mut rows = Vec::new();
    while checked < wanted {
        if drawn >= wanted.saturating_mul(100).max(100) {
            return Err(Failure { code: EXIT_NUMERIC, message: format!("only {checked} of {drawn} random networks are feasible") });
        }
        let net = generate::random_network(&mut rng, 3..=6);
        drawn += 1;
        if !solve(&to_standard_form(&build_dcopf(&net))?).is_optimal() {
            debug!("network {drawn}: DC-OPF infeasible, skipped");
            continue;
        }
        for &gap in &gaps {
            let check = hierarchy(&net, &args.level, SublevelSpec::RelativeGap(gap), args.inject_bad_point)?;
            rows.push(NetworkRow {
                index: checked,
                buses: net.buses().len(),
                lines: net.lines().len(),
                gap,
                z_star: check.z_star,
                tau: check.tau,
                dc_vertices: check.dc.len(),
                nf_vertices: check.nf.len(),
                pass: check.report.pass,
                max_violation: check.report.max_violation(),
            });
        }
        checked += 1;
    }
    let pass = rows.iter().all(|r| r.pass);
    info!("{checked} networks x {} gaps: {}", gaps.len(), if pass { "pass" } else { "FAIL" });
    let report = RandomVerifyReport {
        schema_version: REPORT_SCHEMA.into(),
        command: "verify".into(),
        seed: args.seed,
        drawn,
        checked,
        gaps,
        pass,
        max_violation: rows.iter().map(|r| r.max_violation).fold(0.0, f64::max),
        rows,
    };
    Ok(Outcome { code: if pass { EXIT_OK } else { EXIT_VERIFY_FAILED }, report: render(&report)? })
}

fn load_vertex_report(text: &str) -> Result<VertexReport, Failure> {
    let v: serde_json::Value = serde_json::from_str(text).map_err(|e| Failure::usage(format!("E_SCHEMA: {e}")))?;
    if v.get("command").and_then(|c| c.as_str()) != Some("enumerate") {
        return Err(Failure::usage("E_SCHEMA: rank needs an enumerate report"));
    }
    serde_json::from_value(v).map_err(|e| Failure::usage(format!("E_SCHEMA: {e}")))
}

fn cmd_rank(args: &RankArgs) -> Result<Outcome, Failure> {
    let text = read(&args.input)?;
    let (version, _) = schema::schema_of(&text)?;
    let vertices = if version == REPORT_SCHEMA {
        load_vertex_report(&text)?
    } else {
        let loaded = load_model(&args.input, args.model)?;
        through_text(&enumerate_loaded(&loaded, &args.level, args.project.as_deref())?)?
    };
    let vs = vertices.vertex_set();
    let (ranked, criterion) = match (&args.secondary, &args.scores) {
        (Some(path), _) => (rank_alternatives(&vs, &schema::parse_secondary(&read(path)?)?)?, "secondary"),
        (None, Some(path)) => {
            let (sense, scores) = schema::parse_scores(&read(path)?)?;
            (rank_by_scores(&vs, &scores, sense)?, "scores")
        }
        (None, None) => unreachable!("clap requires a criterion"),
    };
    Ok(Outcome { code: EXIT_OK, report: render(&RankReport::new(&vs, &ranked, criterion))? })
}

fn cmd_oracle(args: &OracleArgs) -> Result<Outcome, Failure> {
    let loaded = load_model(&args.input.input, args.input.model)?;
    let opts = args.level.options()?;
    let z = optimum(&loaded.model)?;
    let boxed = apply_box_bounds(&loaded.model, args.level.box_bound)?.model;
    let spec = args.level.spec();
    let fast = enumerate_vertices_with(&boxed, z, spec, &opts)?;
    let slow = brute_force_vertices(&boxed, z, spec)?;
    let tol = opts.dedup_tol;
    let only_enumerated: Vec<_> = fast.points.iter().filter(|p| !slow.contains(p, tol)).cloned().collect();
    let only_brute_force: Vec<_> = slow.points.iter().filter(|p| !fast.contains(p, tol)).cloned().collect();
    let agree = fast.complete && only_enumerated.is_empty() && only_brute_force.is_empty();
    info!("enumerated {}, brute force {}: {}", fast.len(), slow.len(), if agree { "agree" } else { "DISAGREE" });
    let report = OracleReport {
        schema_version: REPORT_SCHEMA.into(),
        command: "oracle".into(),
        model: loaded.info(),
        z_star: z,
        tau: fast.tau,
        enumerated: fast.len(),
        brute_force: slow.len(),
        agree,
        only_enumerated,
        only_brute_force,
    };
    Ok(Outcome { code: if agree { EXIT_OK } else { EXIT_VERIFY_FAILED }, report: render(&report)? })
}

/// Runs one parsed command line without touching stdout or the output file.
pub fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Rank(a) => cmd_rank(a),
        Command::Oracle(a) => cmd_oracle(a),
    }
}

/// Writes `text` to `path` through a sibling temporary file, so a failed
/// write never leaves a truncated report.
pub fn write_atomically(path: &Path, text: &str) -> std::io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(format!(".tmp{}", std::process::id()));
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path).inspect_err(|_| {
        let _ = fs::remove_file(&tmp);
    })
}

/// Parses `args`, runs the command and delivers the report. Returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => write_atomically(path, &out.report)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => {
                    use std::io::Write;
                    std::io::stdout().write_all(out.report.as_bytes()).map_err(|e| format!("cannot write stdout: {e}"))
                }
            };
            match written {
                Ok(()) => out.code,
                Err(msg) => {
                    eprintln!("aos: error: {msg}");
                    EXIT_IO
                }
            }
        }
        Err(f) => {
            eprintln!("aos: error: {}", f.message);
            f.code
        }
    }
}
