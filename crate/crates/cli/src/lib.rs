//! `astopo` command-line front end: `generate`, `analyze`, `compare`.
//!
//! Exit codes: 0 success, 2 usage/config/parse error, 3 runtime failure.

use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use astopo::datasets::{self, ParseOptions, SIX_MONTHS_SECS};
use astopo::generators::{BaConfig, GlpConfig, InetConfig, PfpConfig, WaxmanConfig};
use astopo::harness::{
    analyze, emit_metric_report, emit_report, run_comparison, AnalyzeOptions, CompareRequest, Metric, ReportFormat,
    RunStatus,
};
use astopo::metrics::SpectrumMode;
use astopo::{ConfigError, DatasetError, Graph, HarnessError, ModelConfig, ModelKind, Seed};
use clap::{Args, Parser, Subcommand};

pub const EXIT_USAGE: u8 = 2;
pub const EXIT_RUNTIME: u8 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn runtime(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_RUNTIME,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    /// Always a single line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flat: Vec<&str> = self.message.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        write!(f, "error: {}", flat.join("; "))
    }
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::usage(e.to_string())
    }
}

impl From<HarnessError> for CliError {
    fn from(e: HarnessError) -> Self {
        match e {
            HarnessError::Config(c) => c.into(),
            other => CliError::runtime(other.to_string()),
        }
    }
}

fn dataset_error(path: &Path, e: DatasetError) -> CliError {
    let message = format!("{}: {e}", path.display());
    match e {
        DatasetError::Io(_) => CliError::runtime(message),
        _ => CliError::usage(message),
    }
}

fn io_error(path: &Path, e: io::Error) -> CliError {
    CliError::runtime(format!("{}: {e}", path.display()))
}

#[derive(Debug, Parser)]
#[command(name = "astopo", version, about = "Generate, analyze and compare AS-level topologies")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a synthetic topology and write it as an edge list.
    Generate(GenerateArgs),
    /// Compute metrics for an edge-list file.
    Analyze(AnalyzeArgs),
    /// Compare a measured topology against size-matched synthetic ones.
    Compare(CompareArgs),
}

/// Model parameters. Unset flags keep the model defaults.
#[derive(Debug, Default, Clone, Args)]
struct ModelFlags {
    /// Links added per step (ba, glp).
    #[arg(long, visible_aliases = ["ba-m", "glp-m"])]
    m: Option<usize>,
    /// Seed-ring size (ba, glp).
    #[arg(long, visible_aliases = ["ba-m0", "glp-m0"])]
    m0: Option<usize>,
    /// Link probability scale, in (0, 1]
    #[arg(long)]
    waxman_alpha: Option<f64>,
    /// Distance decay, in (0, 1]
    #[arg(long)]
    waxman_beta: Option<f64>,
    /// Target average degree.
    #[arg(long)]
    waxman_degree: Option<f64>,
    /// Side of the square node plane.
    #[arg(long)]
    waxman_plane: Option<f64>,
    /// Probability that a step adds a node rather than links.
    #[arg(long)]
    glp_p: Option<f64>,
    /// Preference shift; must be below 1.
    #[arg(long, allow_hyphen_values = true)]
    glp_beta: Option<f64>,
    /// Fraction of degree-1 nodes.
    #[arg(long)]
    inet_frac_one: Option<f64>,
    /// Power-law exponent of the degree frequencies
    #[arg(long)]
    inet_exponent: Option<f64>,
    /// Size of the full-mesh core.
    #[arg(long)]
    inet_core: Option<usize>,
    /// Probability of the one-host, two-peer step
    #[arg(long)]
    pfp_p: Option<f64>,
    /// Probability of the two-host step
    #[arg(long)]
    pfp_q: Option<f64>,
    /// Nonlinearity of the attachment kernel
    #[arg(long)]
    pfp_delta: Option<f64>,
}

impl ModelFlags {
    /// Flags that were given, with the models they belong to.
    fn given(&self) -> Vec<(&'static str, &'static [ModelKind])> {
        use ModelKind::*;
        let table: [(&'static str, bool, &'static [ModelKind]); 14] = [
            ("--m", self.m.is_some(), &[Ba, Glp]),
            ("--m0", self.m0.is_some(), &[Ba, Glp]),
            ("--waxman-alpha", self.waxman_alpha.is_some(), &[Waxman]),
            ("--waxman-beta", self.waxman_beta.is_some(), &[Waxman]),
            ("--waxman-degree", self.waxman_degree.is_some(), &[Waxman]),
            ("--waxman-plane", self.waxman_plane.is_some(), &[Waxman]),
            ("--glp-p", self.glp_p.is_some(), &[Glp]),
            ("--glp-beta", self.glp_beta.is_some(), &[Glp]),
            ("--inet-frac-one", self.inet_frac_one.is_some(), &[Inet]),
            ("--inet-exponent", self.inet_exponent.is_some(), &[Inet]),
            ("--inet-core", self.inet_core.is_some(), &[Inet]),
            ("--pfp-p", self.pfp_p.is_some(), &[Pfp]),
            ("--pfp-q", self.pfp_q.is_some(), &[Pfp]),
            ("--pfp-delta", self.pfp_delta.is_some(), &[Pfp]),
        ];
        table.into_iter().filter(|(_, set, _)| *set).map(|(f, _, k)| (f, k)).collect()
    }

    /// Rejects flags that belong to none of `kinds`.
    fn check_applicable(&self, kinds: &[ModelKind]) -> Result<(), CliError> {
        for (flag, owners) in self.given() {
            if !owners.iter().any(|k| kinds.contains(k)) {
                let owners: Vec<&str> = owners.iter().map(|k| k.name()).collect();
                return Err(CliError::usage(format!(
                    "{flag} applies to {} only, not to the selected model(s)",
                    owners.join("/")
                )));
            }
        }
        Ok(())
    }

    fn config(&self, kind: ModelKind, n: usize) -> ModelConfig {
        fn set<T: Copy>(slot: &mut T, v: Option<T>) {
            if let Some(v) = v {
                *slot = v;
            }
        }
        match kind {
            ModelKind::Waxman => {
                let mut c = WaxmanConfig::new(n);
                set(&mut c.alpha, self.waxman_alpha);
                set(&mut c.beta, self.waxman_beta);
                set(&mut c.target_degree, self.waxman_degree);
                set(&mut c.plane_size, self.waxman_plane);
                ModelConfig::Waxman(c)
            }
            ModelKind::Ba => {
                let mut c = BaConfig::new(n);
                set(&mut c.m, self.m);
                set(&mut c.m0, self.m0);
                ModelConfig::Ba(c)
            }
            ModelKind::Glp => {
                let mut c = GlpConfig::new(n);
                set(&mut c.m, self.m);
                set(&mut c.m0, self.m0);
                set(&mut c.p_add, self.glp_p);
                set(&mut c.beta_pref, self.glp_beta);
                ModelConfig::Glp(c)
            }
            ModelKind::Inet => {
                let mut c = InetConfig::new(n);
                set(&mut c.frac_degree_one, self.inet_frac_one);
                set(&mut c.exponent, self.inet_exponent);
                set(&mut c.core_size, self.inet_core);
                ModelConfig::Inet(c)
            }
            ModelKind::Pfp => {
                let mut c = PfpConfig::new(n);
                set(&mut c.p_new, self.pfp_p);
                set(&mut c.q_new, self.pfp_q);
                set(&mut c.delta, self.pfp_delta);
                ModelConfig::Pfp(c)
            }
        }
    }
}

#[derive(Debug, Args)]
struct GenerateArgs {
    /// waxman, ba, glp, inet or pfp.
    model: String,
    /// Node count
    #[arg(long)]
    n: usize,
    /// Random seed; a fresh one is drawn and printed when omitted.
    #[arg(long)]
    seed: Option<u64>,
    /// Output edge-list path.
    #[arg(long)]
    out: PathBuf,
    #[command(flatten)]
    params: ModelFlags,
}

/// Input selection shared by `analyze` and `compare`.
#[derive(Debug, Args)]
struct InputFlags {
    /// Treat the input as a timestamped edge list and keep edges last seen
    /// within the window before this epoch second.
    #[arg(long, allow_hyphen_values = true)]
    snapshot: Option<i64>,
    /// Last-seen window in seconds (with --snapshot).
    #[arg(long, default_value_t = SIX_MONTHS_SECS, allow_hyphen_values = true)]
    window_secs: i64,
    /// Drop edges touching AS-set or private-range labels.
    #[arg(long)]
    public_only: bool,
}

/// Metric selection shared by `analyze` and `compare`.
#[derive(Debug, Args)]
struct MetricFlags {
    /// `all` or a comma list of: degree, assortativity, clustering,
    /// rich_club, paths, centrality, coreness, clique, spectrum.
    #[arg(long, default_value = "all")]
    metrics: String,
    /// Clique search time budget in seconds; 0 disables the limit.
    #[arg(long, default_value_t = 60.0)]
    clique_budget: f64,
    /// Compute only the k smallest and k largest eigenvalues.
    #[arg(long)]
    spectrum_extremes: Option<usize>,
}

impl MetricFlags {
    fn options(&self) -> Result<AnalyzeOptions, CliError> {
        let metrics = Metric::parse_list(&self.metrics)?;
        if metrics.is_empty() {
            return Err(CliError::usage("--metrics selects nothing"));
        }
        if !(self.clique_budget >= 0.0) || !self.clique_budget.is_finite() {
            return Err(CliError::usage("--clique-budget must be a non-negative number of seconds"));
        }
        if self.spectrum_extremes == Some(0) {
            return Err(CliError::usage("--spectrum-extremes must be at least 1"));
        }
        Ok(AnalyzeOptions {
            metrics,
            clique_budget: (self.clique_budget > 0.0).then(|| Duration::from_secs_f64(self.clique_budget)),
            spectrum_mode: self.spectrum_extremes.map(SpectrumMode::Extremes),
            ..AnalyzeOptions::default()
        })
    }
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    /// Edge-list file
    #[arg(long = "in")]
    input: PathBuf,
    #[command(flatten)]
    metrics: MetricFlags,
    /// Report path; a directory for plotdata.
    #[arg(long)]
    out: PathBuf,
    /// json, csv or plotdata.
    #[arg(long, default_value = "json")]
    format: String,
    #[command(flatten)]
    input_flags: InputFlags,
}

#[derive(Debug, Args)]
struct CompareArgs {
    /// Measured edge-list file
    #[arg(long)]
    target: PathBuf,
    /// Comma list of models, or `all`.
    #[arg(long, default_value = "all")]
    models: String,
    /// Synthetic graphs per model.
    #[arg(long, default_value_t = 10)]
    runs: usize,
    /// Master seed; a fresh one is drawn and printed when omitted.
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory; receives comparison.json, scalars.csv and plotdata/.
    #[arg(long)]
    out: PathBuf,
    /// Worker threads; defaults to every core. Output does not depend on it.
    #[arg(long)]
    jobs: Option<usize>,
    #[command(flatten)]
    metrics: MetricFlags,
    #[command(flatten)]
    input_flags: InputFlags,
    #[command(flatten)]
    params: ModelFlags,
}

/// Parses `args` (including the program name) and runs the command,
/// writing human-readable progress to `stdout`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write) -> Result<(), CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                write!(stdout, "{e}").map_err(|e| CliError::runtime(e.to_string()))?;
                return Ok(());
            }
            // First paragraph of clap's message, without the usage block.
            let text = e.to_string();
            let lead: Vec<&str> = text.lines().map(str::trim).take_while(|l| !l.is_empty()).collect();
            let lead = lead.join(" ");
            return Err(CliError::usage(lead.trim_start_matches("error: ").to_owned()));
        }
    };
    match cli.command {
        Command::Generate(a) => cmd_generate(&a, stdout),
        Command::Analyze(a) => cmd_analyze(&a, stdout),
        Command::Compare(a) => cmd_compare(&a, stdout),
    }
}

fn say(stdout: &mut dyn Write, line: std::fmt::Arguments<'_>) -> Result<(), CliError> {
    writeln!(stdout, "{line}").map_err(|e| CliError::runtime(e.to_string()))
}

fn resolve_seed(seed: Option<u64>, stdout: &mut dyn Write) -> Result<Seed, CliError> {
    match seed {
        Some(s) => Ok(Seed(s)),
        None => {
            let s: u64 = rand::random();
            say(stdout, format_args!("seed {s}"))?;
            Ok(Seed(s))
        }
    }
}

fn cmd_generate(a: &GenerateArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let kind: ModelKind = a.model.parse()?;
    a.params.check_applicable(&[kind])?;
    let cfg = a.params.config(kind, a.n);
    cfg.validate()?;
    let seed = resolve_seed(a.seed, stdout)?;
    let g = cfg.generate(seed)?;

    let mut buf = Vec::new();
    let params = serde_json::to_string(&cfg).map_err(|e| CliError::runtime(e.to_string()))?;
    writeln!(buf, "# seed={} {params}", seed.0).expect("write to memory");
    datasets::write_edge_list(&g, &mut buf).expect("write to memory");
    write_file(&a.out, &buf)?;
    say(stdout, format_args!("N={} M={}", g.node_count(), g.edge_count()))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent).map_err(|e| io_error(parent, e))?;
    }
    fs::write(path, bytes).map_err(|e| io_error(path, e))
}

fn load_graph(path: &Path, flags: &InputFlags) -> Result<Graph, CliError> {
    let file = fs::File::open(path).map_err(|e| io_error(path, e))?;
    let reader = BufReader::new(file);
    match flags.snapshot {
        Some(snapshot) => {
            if flags.public_only {
                return Err(CliError::usage("--public-only is not supported with --snapshot"));
            }
            let topo = datasets::parse_timestamped(reader).map_err(|e| dataset_error(path, e))?;
            datasets::filter_last_seen(&topo, snapshot, flags.window_secs).map_err(|e| dataset_error(path, e))
        }
        None => {
            let opts = ParseOptions {
                public_asns_only: flags.public_only,
            };
            datasets::parse_edge_list_with(reader, opts)
                .map(|p| p.graph)
                .map_err(|e| dataset_error(path, e))
        }
    }
}

fn graph_id(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "target".to_owned())
}

fn cmd_analyze(a: &AnalyzeArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let format: ReportFormat = a.format.parse()?;
    let options = a.metrics.options()?;
    let g = load_graph(&a.input, &a.input_flags)?;
    let report = analyze(&g, graph_id(&a.input), &options);
    let files = emit_metric_report(&report, format, &a.out)?;
    say(stdout, format_args!("N={} M={}", report.n, report.m))?;
    for (metric, note) in &report.notes {
        say(stdout, format_args!("note {metric}: {note}"))?;
    }
    say(stdout, format_args!("wrote {} file(s) to {}", files.len(), a.out.display()))
}

fn parse_models(list: &str) -> Result<Vec<ModelKind>, CliError> {
    if list.trim().eq_ignore_ascii_case("all") {
        return Ok(ModelKind::ALL.to_vec());
    }
    let kinds: Vec<ModelKind> = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect::<Result<_, _>>()?;
    if kinds.is_empty() {
        return Err(CliError::usage("--models selects nothing"));
    }
    Ok(kinds)
}

fn cmd_compare(a: &CompareArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let kinds = parse_models(&a.models)?;
    a.params.check_applicable(&kinds)?;
    if a.runs == 0 {
        return Err(CliError::usage("--runs must be at least 1"));
    }
    if a.jobs == Some(0) {
        return Err(CliError::usage("--jobs must be at least 1"));
    }
    let analyze = a.metrics.options()?;
    let target = load_graph(&a.target, &a.input_flags)?;
    let master_seed = resolve_seed(a.seed, stdout)?;
    let request = CompareRequest {
        models: kinds.iter().map(|&k| a.params.config(k, target.node_count())).collect(),
        seeds_per_model: a.runs,
        master_seed,
        analyze,
        jobs: a.jobs,
    };
    let run = run_comparison(&target, &graph_id(&a.target), &request)?;
    let mut files = 0;
    for format in ReportFormat::ALL {
        files += emit_report(&run, format, &a.out)?.len();
    }
    say(stdout, format_args!("target N={} M={}", run.target.n, run.target.m))?;
    for model in &run.models {
        match &model.status {
            RunStatus::Applicable => {
                say(stdout, format_args!("{}: {} run(s)", model.model, model.runs.len()))?
            }
            RunStatus::Inapplicable { reason } => {
                say(stdout, format_args!("{}: inapplicable ({reason})", model.model))?
            }
        }
    }
    say(stdout, format_args!("wrote {files} file(s) to {}", a.out.display()))
}
