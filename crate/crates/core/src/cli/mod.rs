//! The `lkrep` command line: argument types, the resolved [`RunConfig`],
//! and one `cmd_*` function per subcommand. The binary only calls [`run`].
//!
//! Exit codes: 0 success, 1 usage, 2 cap exceeded, 3 verification failure.

mod commands;

use std::ffi::OsString;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};
use thiserror::Error;

pub use commands::{
    cmd_faithful, cmd_family, cmd_rep, cmd_roots, cmd_selftest, cmd_twisted, cmd_typeb, Construction, GroupSpec,
};

use crate::coxeter::{CoxeterError, CoxeterGraph, DEFAULT_CAP};
use crate::faithcheck::FaithError;
use crate::families::FamilyError;
use crate::laurent::{make_params, LaurentError, LaurentPoly, LkParams, Regime};
use crate::lkcore::LkError;
use crate::rootsys::RootError;
use crate::twisted::TwistedError;

/// Dense CSV is only written for matrices up to this many columns.
pub const CSV_MAX_COLUMNS: usize = 200;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Cap(String),
    /// A check failed; the report, if any, is still written out.
    #[error("{message}")]
    Verification { message: String, report: Option<Value> },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Cap(_) => 2,
            CliError::Verification { .. } => 3,
        }
    }

    pub fn verification(message: impl Into<String>, report: Option<Value>) -> Self {
        CliError::Verification { message: message.into(), report }
    }
}

impl From<CoxeterError> for CliError {
    fn from(e: CoxeterError) -> Self {
        match e {
            CoxeterError::CapExceeded(_) => CliError::Cap(e.to_string()),
            e => CliError::Usage(e.to_string()),
        }
    }
}

impl From<RootError> for CliError {
    fn from(e: RootError) -> Self {
        match e {
            RootError::NonTerminating(_) => CliError::Cap(e.to_string()),
            e => CliError::Usage(e.to_string()),
        }
    }
}

impl From<LaurentError> for CliError {
    fn from(e: LaurentError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<LkError> for CliError {
    fn from(e: LkError) -> Self {
        match e {
            LkError::Root(e) => e.into(),
            e => CliError::Usage(e.to_string()),
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::Root(e) => e.into(),
            FamilyError::InconsistentRelations { .. } => CliError::verification(e.to_string(), None),
            e => CliError::Usage(e.to_string()),
        }
    }
}

impl From<TwistedError> for CliError {
    fn from(e: TwistedError) -> Self {
        match e {
            TwistedError::Coxeter(e) => e.into(),
            TwistedError::Root(e) => e.into(),
            TwistedError::Family(e) => e.into(),
            TwistedError::NotEquivariant { .. }
            | TwistedError::StabilizationFailure { .. }
            | TwistedError::BraidFailure(..) => CliError::verification(e.to_string(), None),
            e => CliError::Usage(e.to_string()),
        }
    }
}

impl From<FaithError> for CliError {
    fn from(e: FaithError) -> Self {
        match e {
            FaithError::CapExceeded(_) => CliError::Cap(e.to_string()),
            FaithError::CriterionFailed(ref r) => {
                let report = json!({ "refused": true, "criterion": **r });
                CliError::verification(format!("{e}: {}", r.failed_checks().join(", ")), Some(report))
            }
            FaithError::FaithfulnessViolation(ref r) => {
                let report = serde_json::to_value(&**r).expect("report serialises");
                CliError::verification(e.to_string(), Some(report))
            }
            FaithError::NegativeEntry { .. } => CliError::verification(e.to_string(), None),
            FaithError::Coxeter(e) => e.into(),
            FaithError::Twisted(e) => e.into(),
            e => CliError::Usage(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// A command's result: a JSON (or CSV) document and a few summary lines.
#[derive(Debug, Clone)]
pub struct Output {
    pub summary: Vec<String>,
    pub json: Value,
    pub csv: Option<String>,
}

impl Output {
    fn json(summary: Vec<String>, json: Value) -> Self {
        Output { summary, json, csv: None }
    }

    /// The document in the requested format.
    pub fn document(&self, format: Format) -> String {
        match (format, &self.csv) {
            (Format::Csv, Some(c)) => c.clone(),
            _ => serde_json::to_string_pretty(&self.json).expect("JSON serialises") + "\n",
        }
    }
}

/// Everything a subcommand needs, resolved and validated.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub graph: Option<CoxeterGraph>,
    pub params: LkParams,
    /// How the parameters were given, for the report header.
    pub params_source: String,
    pub f: LaurentPoly,
    pub seed: Option<Vec<LaurentPoly>>,
    pub depth_bound: Option<usize>,
    pub max_len: usize,
    pub regime: Regime,
    pub cap: usize,
    pub output: Option<PathBuf>,
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            graph: None,
            params: make_params(1, 0, 0),
            params_source: "pqr 1,0,0".into(),
            f: "x*y^2".parse().expect("valid polynomial"),
            seed: None,
            depth_bound: None,
            max_len: 4,
            regime: Regime::SmallY,
            cap: DEFAULT_CAP,
            output: None,
            format: Format::Json,
        }
    }
}

impl RunConfig {
    pub fn graph(&self) -> Result<&CoxeterGraph, CliError> {
        self.graph.as_ref().ok_or_else(|| CliError::Usage("a graph is required (--type/--rank or --graph)".into()))
    }

    /// Echoed at the top of every report.
    pub fn header(&self) -> Value {
        let graph = self.graph.as_ref().map(|g| match g.label() {
            Some(l) => json!(l),
            None => json!({ "n": g.rank(), "m": g.matrix() }),
        });
        json!({
            "graph": graph,
            "params": self.params,
            "params_source": self.params_source,
            "f": self.f.to_string(),
            "seed_terms": self.seed.as_ref().map(Vec::len),
            "depth_bound": self.depth_bound,
            "max_len": self.max_len,
            "regime": self.regime,
            "cap": self.cap,
        })
    }
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum GraphFile {
    Matrix {
        n: usize,
        m: Vec<Vec<i64>>,
    },
    Named {
        #[serde(rename = "type")]
        ty: String,
        rank: usize,
    },
}

/// Parses `{"n": 3, "m": [[...]]}` or `{"type": "A", "rank": 3}`.
pub fn parse_graph_json(text: &str) -> Result<CoxeterGraph, CliError> {
    let spec: GraphFile = serde_json::from_str(text).map_err(|e| CliError::Usage(format!("graph JSON: {e}")))?;
    match spec {
        GraphFile::Matrix { n, m } => {
            if m.len() != n {
                return Err(CliError::Usage(format!("graph JSON: n = {n} but m has {} rows", m.len())));
            }
            Ok(CoxeterGraph::new(&m)?)
        }
        GraphFile::Named { ty, rank } => Ok(CoxeterGraph::named(&ty, rank)?),
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn parse_triple(s: &str) -> Result<(i64, i64, i64), String> {
    let v: Vec<i64> = s.split(',').map(|t| t.trim().parse::<i64>().map_err(|e| e.to_string())).collect::<Result<_, _>>()?;
    match v[..] {
        [p, q, r] => Ok((p, q, r)),
        _ => Err(format!("expected p,q,r, got {s:?}")),
    }
}

#[derive(Debug, Parser)]
#[command(name = "lkrep", version, about = "Lawrence-Krammer representations of small-type Artin-Tits monoids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Cap on enumerated roots, word classes and class sizes.
    #[arg(long, global = true, env = "LKREP_CAP")]
    pub cap: Option<usize>,
    /// Write the document here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    /// Graph type: A, D, E, Atilde, Dtilde, Etilde.
    #[arg(long = "type", visible_alias = "ambient")]
    pub ty: Option<String>,
    #[arg(long)]
    pub rank: Option<usize>,
    /// JSON file with {"n", "m"} or {"type", "rank"}.
    #[arg(long, conflicts_with_all = ["ty", "rank"])]
    pub graph: Option<PathBuf>,
    /// Depth bound for non-spherical graphs.
    #[arg(long)]
    pub depth: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    /// Exponents with (b, c, d) = (y^p, y^q, y^r).
    #[arg(long, value_parser = parse_triple, default_value = "1,0,0")]
    pub pqr: (i64, i64, i64),
    /// Explicit units "b,c,d" as polynomials; overrides --pqr.
    #[arg(long)]
    pub bcd: Option<String>,
    /// The value f_{i,α_i}.
    #[arg(long, default_value = "x*y^2")]
    pub f: String,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_enum)]
    pub construction: Option<Construction>,
    /// JSON list of polynomial strings (affine construction).
    #[arg(long)]
    pub seed: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate positive roots and count meshes.
    Roots {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Build an LK-family and check it against Table 1.
    Family {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// The matrix of ψ_w (or its inverse).
    Rep {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        family: FamilyArgs,
        /// "010" or "0.1.0"; empty for the identity.
        #[arg(long, default_value = "")]
        word: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Orbit basis and twisted generators ψ^G_{Δ_J}.
    Twisted {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        family: FamilyArgs,
        /// "full", "flip", "trivial" or generators "1,0,2;0,2,1".
        #[arg(long, default_value = "full")]
        group: String,
    },
    /// Type-B twisted representations and their determinants.
    Typeb {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        k: Vec<usize>,
        #[command(flatten)]
        params: ParamArgs,
        /// Report the non-equivalence condition for k = 1 against k = 3.
        #[arg(long)]
        nonequiv: bool,
    },
    /// Bounded-length faithfulness experiment.
    Faithful {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        family: FamilyArgs,
        /// Maximum word length.
        #[arg(long = "L", default_value_t = 4)]
        max_len: usize,
        #[arg(long, default_value = "0<y<1")]
        regime: Regime,
        /// Check ψ^G on the G-fixed elements instead of ψ.
        #[arg(long)]
        twisted: bool,
        #[arg(long, default_value = "full")]
        group: String,
    },
    /// A quick battery of end-to-end checks.
    Selftest,
}

fn base_config(cli: &Cli) -> RunConfig {
    RunConfig { cap: cli.cap.unwrap_or(DEFAULT_CAP), output: cli.output.clone(), format: cli.format, ..Default::default() }
}

fn apply_graph(cfg: &mut RunConfig, g: &GraphArgs) -> Result<(), CliError> {
    cfg.graph = match (&g.graph, &g.ty, g.rank) {
        (Some(p), _, _) => Some(parse_graph_json(&read(p)?)?),
        (None, Some(t), Some(r)) => Some(CoxeterGraph::named(t, r)?),
        (None, Some(t), None) => Some(CoxeterGraph::from_label(t)?),
        (None, None, Some(_)) => return Err(CliError::Usage("--rank needs --type".into())),
        (None, None, None) => None,
    };
    cfg.depth_bound = g.depth;
    Ok(())
}

fn apply_params(cfg: &mut RunConfig, p: &ParamArgs) -> Result<(), CliError> {
    cfg.f = p.f.parse()?;
    match &p.bcd {
        Some(s) => {
            let v: Vec<LaurentPoly> = s.split(',').map(str::parse).collect::<Result<_, _>>()?;
            let [b, c, d] = <[LaurentPoly; 3]>::try_from(v)
                .map_err(|_| CliError::Usage(format!("--bcd needs three polynomials, got {s:?}")))?;
            cfg.params = LkParams::new(b, c, d)?;
            cfg.params_source = format!("bcd {s}");
        }
        None => {
            let (a, b, c) = p.pqr;
            cfg.params = make_params(a, b, c);
            cfg.params_source = format!("pqr {a},{b},{c}");
        }
    }
    Ok(())
}

fn apply_family(cfg: &mut RunConfig, f: &FamilyArgs) -> Result<Option<Construction>, CliError> {
    apply_params(cfg, &f.params)?;
    if let Some(path) = &f.seed {
        let terms: Vec<String> =
            serde_json::from_str(&read(path)?).map_err(|e| CliError::Usage(format!("seed JSON: {e}")))?;
        cfg.seed = Some(terms.iter().map(|t| t.parse()).collect::<Result<_, _>>()?);
    }
    if cfg.seed.is_some() && !matches!(f.construction, None | Some(Construction::Affine)) {
        return Err(CliError::Usage("--seed only applies to the affine construction".into()));
    }
    Ok(f.construction.or(cfg.seed.as_ref().map(|_| Construction::Affine)))
}

/// Runs a parsed command line.
pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    let mut cfg = base_config(cli);
    match &cli.command {
        Command::Roots { graph } => {
            apply_graph(&mut cfg, graph)?;
            cmd_roots(&cfg)
        }
        Command::Family { graph, family } => {
            apply_graph(&mut cfg, graph)?;
            let c = apply_family(&mut cfg, family)?;
            cmd_family(&cfg, c)
        }
        Command::Rep { graph, family, word, inverse } => {
            apply_graph(&mut cfg, graph)?;
            let c = apply_family(&mut cfg, family)?;
            cmd_rep(&cfg, c, &word.parse()?, *inverse)
        }
        Command::Twisted { graph, family, group } => {
            apply_graph(&mut cfg, graph)?;
            let c = apply_family(&mut cfg, family)?;
            cmd_twisted(&cfg, c, &group.parse()?)
        }
        Command::Typeb { n, k, params, nonequiv } => {
            apply_params(&mut cfg, params)?;
            cmd_typeb(&cfg, *n, k, *nonequiv)
        }
        Command::Faithful { graph, family, max_len, regime, twisted, group } => {
            apply_graph(&mut cfg, graph)?;
            let c = apply_family(&mut cfg, family)?;
            cfg.max_len = *max_len;
            cfg.regime = *regime;
            let group: Option<GroupSpec> = if *twisted { Some(group.parse()?) } else { None };
            cmd_faithful(&cfg, c, group.as_ref())
        }
        Command::Selftest => cmd_selftest(&cfg),
    }
}

fn emit(out: &Output, cli: &Cli) -> Result<(), CliError> {
    let doc = out.document(cli.format);
    let mut info: Box<dyn std::io::Write> = match &cli.output {
        Some(path) => {
            std::fs::write(path, doc).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            Box::new(std::io::stdout())
        }
        None => {
            print!("{doc}");
            Box::new(std::io::stderr())
        }
    };
    for line in &out.summary {
        // A closed pipe is not worth an error exit.
        let _ = writeln!(info, "{line}");
    }
    Ok(())
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let result = execute(&cli).and_then(|out| emit(&out, &cli));
    match result {
        Ok(()) => 0,
        Err(e) => {
            if let CliError::Verification { report: Some(r), message } = &e {
                let out = Output::json(vec![format!("error: {message}")], r.clone());
                if emit(&out, &cli).is_ok() {
                    return e.exit_code();
                }
            }
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
