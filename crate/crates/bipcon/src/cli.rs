//! Command-line front door: one subcommand per capability, JSON for scalars,
//! CSV for anything tabular.
//!
//! Exit codes: 0 success, 2 argument/domain errors, 3 capacity errors. All
//! randomness requires an explicit --seed; outputs are byte-identical across
//! runs and worker counts for fixed arguments.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::asymptotics::{asym_estimate, classify_regime_with, Regime, RegimeThresholds};
use crate::brute::brute_connectivity;
use crate::error::Error;
use crate::explore::exact_connectivity_dp;
use crate::params::{degenerate_connectivity, GraphParams};
use crate::report::{
    to_json, AsymRecord, ClassifyRecord, MethodResult, RunRecord, SweepRow, WalkRecord,
    SWEEP_HEADER,
};
use crate::simulate::{curve_data_par, mc_connectivity_par, ConnectivityEstimate, Method};
use crate::walk::connectivity_via_walk;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CAPACITY: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "bipcon",
    version,
    about = "Connectivity probability of the random bipartite graph G(n,m,p)"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact connectivity probability by one or more routes, with agreement
    Exact {
        #[command(flatten)]
        params: ParamArgs,
        /// Route: brute, exploration-dp, walk-dp, or all
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
        /// Attach a unix-seconds timestamp (off by default: outputs stay byte-stable)
        #[arg(long)]
        timestamp: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monte Carlo connectivity estimate over seeded replicas
    Mc {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        samples: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        timestamp: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Walk-representation decomposition: conditional, prefactor, endpoints
    Walk {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate one asymptotic regime formula
    Asym {
        #[command(flatten)]
        params: ParamArgs,
        /// Regime: r1 (dense), r2 (constant c), r3 (small c), r4 (tiny c)
        #[arg(long, value_enum)]
        regime: RegimeArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify a parameter triple into a regime (or uncovered)
    Classify {
        #[command(flatten)]
        params: ParamArgs,
        /// Asserted limit ratio m/n (bookkeeping; coverage depends on c and n only)
        #[arg(long)]
        aspect_ratio: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a parameter grid, one CSV row per point per method
    Sweep {
        /// Comma list of n values (omit for an empty grid)
        #[arg(long, value_delimiter = ',')]
        grid_n: Option<Vec<usize>>,
        /// Comma list of m values; defaults to m = n per point
        #[arg(long, value_delimiter = ',')]
        grid_m: Option<Vec<usize>>,
        /// Comma list of p values (exactly one of --grid-p/--grid-c)
        #[arg(long, value_delimiter = ',', conflicts_with = "grid_c")]
        grid_p: Option<Vec<f64>>,
        /// Comma list of c values (exactly one of --grid-p/--grid-c)
        #[arg(long, value_delimiter = ',')]
        grid_c: Option<Vec<f64>>,
        /// Comma list of methods: brute,exploration-dp,walk-dp,mc,asym-r1..r4,all
        #[arg(long, value_enum, value_delimiter = ',', required = true)]
        method: Vec<MethodArg>,
        /// Monte Carlo samples per row (required when methods include mc)
        #[arg(long)]
        samples: Option<u64>,
        /// Monte Carlo seed (required when methods include mc)
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the trajectory curve tables as CSV
    Curves {
        #[command(flatten)]
        params: ParamArgs,
        /// Number of sampled realization columns in the S table
        #[arg(long, default_value_t = 0)]
        realizations: u32,
        #[arg(long)]
        seed: u64,
        /// Which table: s (k,ES,S_r*) or bv (k,B,V,ref_line)
        #[arg(long, value_enum, default_value_t = TableArg::S)]
        table: TableArg,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct ParamArgs {
    /// Left part size
    #[arg(long)]
    n: usize,
    /// Right part size
    #[arg(long)]
    m: usize,
    #[command(flatten)]
    prob: ProbArg,
}

/// Exactly one of --p / --c.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct ProbArg {
    /// Edge probability p
    #[arg(long)]
    p: Option<f64>,
    /// Regime parameter c = p·(n+m)
    #[arg(long)]
    c: Option<f64>,
}

impl ParamArgs {
    fn to_params(&self) -> Result<GraphParams, Error> {
        match (self.prob.p, self.prob.c) {
            (Some(p), None) => GraphParams::new(self.n, self.m, p),
            (None, Some(c)) => GraphParams::from_c(self.n, self.m, c),
            _ => unreachable!("clap group enforces exactly one of --p/--c"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Brute,
    ExplorationDp,
    WalkDp,
    Mc,
    AsymR1,
    AsymR2,
    AsymR3,
    AsymR4,
    All,
}

impl MethodArg {
    fn as_str(&self) -> &'static str {
        match self {
            MethodArg::Brute => "brute",
            MethodArg::ExplorationDp => "exploration-dp",
            MethodArg::WalkDp => "walk-dp",
            MethodArg::Mc => "mc",
            MethodArg::AsymR1 => "asym-r1",
            MethodArg::AsymR2 => "asym-r2",
            MethodArg::AsymR3 => "asym-r3",
            MethodArg::AsymR4 => "asym-r4",
            MethodArg::All => "all",
        }
    }

    fn regime(&self) -> Option<Regime> {
        match self {
            MethodArg::AsymR1 => Some(Regime::R1Dense),
            MethodArg::AsymR2 => Some(Regime::R2ConstantC),
            MethodArg::AsymR3 => Some(Regime::R3SmallC),
            MethodArg::AsymR4 => Some(Regime::R4TinyC),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RegimeArg {
    R1,
    R2,
    R3,
    R4,
}

impl From<RegimeArg> for Regime {
    fn from(r: RegimeArg) -> Self {
        match r {
            RegimeArg::R1 => Regime::R1Dense,
            RegimeArg::R2 => Regime::R2ConstantC,
            RegimeArg::R3 => Regime::R3SmallC,
            RegimeArg::R4 => Regime::R4TinyC,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableArg {
    S,
    Bv,
}

/// Entry point for the binary: parse `std::env::args`, run, map to exit code.
pub fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    std::process::ExitCode::from(run(cli))
}

/// Parses and runs the given argument vector (`argv[0]` included); used by
/// tests to drive the CLI in-process.
pub fn run_from<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            // clap prints help/version to stdout with success; report the rest
            // on stderr as usage errors.
            let _ = e.print();
            if e.exit_code() == 0 {
                EXIT_OK
            } else {
                EXIT_USAGE
            }
        }
    }
}

fn run(cli: Cli) -> u8 {
    match dispatch(cli) {
        Ok(()) => EXIT_OK,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Capacity(_) => EXIT_CAPACITY,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn unix_timestamp() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

fn dispatch(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Exact {
            params,
            method,
            timestamp,
            out,
        } => {
            let gp = params.to_params()?;
            let methods: Vec<MethodArg> = match method {
                MethodArg::All => {
                    vec![
                        MethodArg::Brute,
                        MethodArg::ExplorationDp,
                        MethodArg::WalkDp,
                    ]
                }
                MethodArg::Brute | MethodArg::ExplorationDp | MethodArg::WalkDp => vec![method],
                other => {
                    return Err(Error::InvalidParams(format!(
                        "`exact` accepts brute, exploration-dp, walk-dp, or all; got {}",
                        other.as_str()
                    )))
                }
            };
            let mut estimates = Vec::new();
            for m in methods {
                estimates.push(exact_estimate(&gp, m)?);
            }
            let mut record = RunRecord::new(&gp, &estimates);
            if timestamp {
                record.timestamp = Some(unix_timestamp());
            }
            emit(&out, &to_json(&record))
        }
        Command::Mc {
            params,
            samples,
            seed,
            workers,
            timestamp,
            out,
        } => {
            let gp = params.to_params()?;
            if samples == 0 {
                return Err(Error::InvalidParams("--samples must be at least 1".into()));
            }
            let est = mc_connectivity_par(&gp, samples, seed, workers);
            let mut record = RunRecord::new(&gp, &[est]);
            record.seed = Some(seed);
            if timestamp {
                record.timestamp = Some(unix_timestamp());
            }
            emit(&out, &to_json(&record))
        }
        Command::Walk { params, out } => {
            let gp = params.to_params()?;
            let res = connectivity_via_walk(&gp)?;
            emit(&out, &to_json(&WalkRecord::new(&gp, &res)))
        }
        Command::Asym {
            params,
            regime,
            out,
        } => {
            let gp = params.to_params()?;
            let res = asym_estimate(&gp, regime.into())?;
            let record = AsymRecord {
                params: (&gp).into(),
                regime: res.regime,
                value: res.value,
                prefactor_core: res.prefactor_core,
                correction: res.correction,
                alpha_n: res.alpha_n,
                beta_m: res.beta_m,
                intermediate: res.intermediate,
            };
            emit(&out, &to_json(&record))
        }
        Command::Classify {
            params,
            aspect_ratio,
            out,
        } => {
            let gp = params.to_params()?;
            let thresholds = RegimeThresholds::default();
            let record = ClassifyRecord {
                params: (&gp).into(),
                aspect_ratio: aspect_ratio.unwrap_or(gp.m() as f64 / gp.n() as f64),
                regime: classify_regime_with(&gp, aspect_ratio, &thresholds),
                thresholds: (&thresholds).into(),
            };
            emit(&out, &to_json(&record))
        }
        Command::Sweep {
            grid_n,
            grid_m,
            grid_p,
            grid_c,
            method,
            samples,
            seed,
            out,
        } => {
            let methods = expand_methods(&method);
            if methods.contains(&MethodArg::Mc) && (samples.is_none() || seed.is_none()) {
                return Err(Error::InvalidParams(
                    "sweeping the mc method requires --samples and --seed".into(),
                ));
            }
            let ns = grid_n.unwrap_or_default();
            let probs: Vec<(f64, bool)> = match (grid_p, grid_c) {
                (Some(ps), None) => ps.into_iter().map(|p| (p, false)).collect(),
                (None, Some(cs)) => cs.into_iter().map(|c| (c, true)).collect(),
                (None, None) if ns.is_empty() => Vec::new(),
                _ => {
                    return Err(Error::InvalidParams(
                        "provide exactly one of --grid-p/--grid-c".into(),
                    ))
                }
            };
            let mut csv = String::from(SWEEP_HEADER);
            csv.push('\n');
            for &n in &ns {
                let ms = grid_m.clone().unwrap_or_else(|| vec![n]);
                for &m in &ms {
                    for &(value, is_c) in &probs {
                        let gp = if is_c {
                            GraphParams::from_c(n, m, value)
                        } else {
                            GraphParams::new(n, m, value)
                        }?;
                        for &ma in &methods {
                            csv.push_str(&sweep_row(&gp, ma, samples, seed).csv_line());
                            csv.push('\n');
                        }
                    }
                }
            }
            emit(&out, &csv)
        }
        Command::Curves {
            params,
            realizations,
            seed,
            table,
            workers,
            out,
        } => {
            let gp = params.to_params()?;
            let data = curve_data_par(&gp, realizations, seed, workers)?;
            let csv = match table {
                TableArg::S => data.s_table_csv(),
                TableArg::Bv => data.bv_table_csv(),
            };
            emit(&out, &csv)
        }
    }
}

fn expand_methods(methods: &[MethodArg]) -> Vec<MethodArg> {
    let mut expanded = Vec::new();
    for &m in methods {
        if m == MethodArg::All {
            for x in [
                MethodArg::Brute,
                MethodArg::ExplorationDp,
                MethodArg::WalkDp,
            ] {
                if !expanded.contains(&x) {
                    expanded.push(x);
                }
            }
        } else if !expanded.contains(&m) {
            expanded.push(m);
        }
    }
    expanded
}

fn exact_estimate(gp: &GraphParams, method: MethodArg) -> Result<ConnectivityEstimate, Error> {
    let value = match method {
        MethodArg::Brute => brute_connectivity(gp)?,
        MethodArg::ExplorationDp => exact_connectivity_dp(gp)?,
        MethodArg::WalkDp => match degenerate_connectivity(gp) {
            Some(v) => v,
            None => connectivity_via_walk(gp)?.total,
        },
        _ => unreachable!("exact_estimate called with a non-exact method"),
    };
    let kind = match method {
        MethodArg::Brute => Method::Brute,
        MethodArg::ExplorationDp => Method::ExplorationDp,
        _ => Method::WalkDp,
    };
    Ok(ConnectivityEstimate::exact(kind, value))
}

fn sweep_row(
    gp: &GraphParams,
    method: MethodArg,
    samples: Option<u64>,
    seed: Option<u64>,
) -> SweepRow {
    let started = Instant::now();
    let outcome: Result<MethodResult, Error> = match method {
        MethodArg::Brute | MethodArg::ExplorationDp | MethodArg::WalkDp => {
            exact_estimate(gp, method).map(|e| MethodResult::from(&e))
        }
        MethodArg::Mc => {
            let est =
                mc_connectivity_par(gp, samples.expect("validated"), seed.expect("validated"), 1);
            Ok(MethodResult::from(&est))
        }
        _ => {
            let regime = method.regime().expect("asym method");
            asym_estimate(gp, regime).map(|r| MethodResult {
                method: Method::Asymptotic,
                value: r.value,
                stderr: 0.0,
                samples: None,
                seed: None,
            })
        }
    };
    let seconds = started.elapsed().as_secs_f64();
    match outcome {
        Ok(res) => SweepRow {
            n: gp.n(),
            m: gp.m(),
            p: gp.p(),
            c: gp.c(),
            method: method.as_str().into(),
            value: Some(res.value),
            stderr: if res.method == Method::MonteCarlo {
                Some(res.stderr)
            } else {
                None
            },
            seconds,
            error: None,
        },
        Err(err) => SweepRow {
            n: gp.n(),
            m: gp.m(),
            p: gp.p(),
            c: gp.c(),
            method: method.as_str().into(),
            value: None,
            stderr: None,
            seconds,
            error: Some(error_slug(&err).into()),
        },
    }
}

fn error_slug(err: &Error) -> &'static str {
    match err {
        Error::Capacity(_) => "capacity",
        Error::DegenerateP(_) => "degenerate-p",
        Error::InvalidParams(_) => "invalid-params",
        Error::Domain(_) => "domain",
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| Error::InvalidParams(format!("cannot write {}: {e}", path.display()))),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(content.as_bytes())
                .and_then(|()| lock.flush())
                .map_err(|e| Error::InvalidParams(format!("cannot write stdout: {e}")))
        }
    }
}
