//! Command-line front end: exact t-hook count distributions over
//! self-conjugate partitions, their statistics, saddle-point asymptotics,
//! and the verification suites.
//!
//! Contracts the subcommands share:
//!
//! * data goes to stdout (or atomically to --output); progress and
//!   human-readable summaries go to stderr only;
//! * identical invocations produce byte-identical output regardless of
//!   --threads;
//! * exit codes: 0 success, 1 failed verification checks, 2 usage or
//!   validation errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use hookdist::asymptotics;
use hookdist::genfun;
use hookdist::partitions::{enumerate_partitions, enumerate_self_conjugate};
use hookdist::series::Rational;
use hookdist::stats::{self, HookDistribution};
use hookdist_cli::output::{csv_table, write_output};
use hookdist_cli::verify::{self, Suite};

#[derive(Parser)]
#[command(
    name = "hookdist",
    version,
    about = "Exact distributions of t-hook counts over self-conjugate partitions"
)]
struct RunConfig {
    /// Output format for the data on stdout or --output.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Write the output atomically to PATH instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    /// Worker threads (falls back to HOOKDIST_THREADS, then to all logical
    /// processors).
    #[arg(long, global = true, value_name = "K")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List the partitions of n, one per line as comma-separated parts.
    ///
    /// Enumeration is exhaustive and meant for small n. The empty
    /// partition prints as "()".
    Enumerate {
        /// Size being partitioned.
        n: usize,
        /// Restrict to self-conjugate partitions.
        #[arg(long)]
        self_conjugate: bool,
    },

    /// Exact t-hook count distribution over self-conjugate partitions of n.
    ///
    /// Emits one row per coefficient (CSV columns m,count). A summary with
    /// sc(n) and the exact mean/variance goes to stderr; the json format
    /// embeds it instead.
    Dist {
        /// Hook length t >= 1.
        #[arg(short = 't', long = "hook-length")]
        t: usize,
        /// Partition size.
        #[arg(short = 'n', long = "size")]
        n: usize,
    },

    /// Convergence table of the measured 2-hook mean to sqrt(6n)/pi.
    Table1 {
        /// Comma-separated list of sizes.
        #[arg(long, value_delimiter = ',', default_value = "100,500,1000,5000")]
        nvals: Vec<usize>,
    },

    /// Renormalized density points of the t-hook count distribution.
    ///
    /// Emits CSV columns m,x,y with x the standardized count and y the
    /// density estimate; y approaches the standard normal density.
    Figure2 {
        /// Hook length t >= 1.
        #[arg(short = 't', long = "hook-length")]
        t: usize,
        /// Partition size.
        #[arg(short = 'n', long = "size")]
        n: usize,
    },

    /// Asymptotic constants: mean, variance, growth rate b_t, saddle radius.
    Asymptotics {
        /// Hook length t >= 1.
        #[arg(short = 't', long = "hook-length")]
        t: usize,
        /// Partition size.
        #[arg(short = 'n', long = "size")]
        n: usize,
        /// Evaluation point T0 > 0 (integer, fraction like 3/2, or decimal).
        #[arg(long = "T0", value_name = "T0", default_value = "1")]
        t0: String,
    },

    /// Saddle-point quadrature estimate of a coefficient, cross-checked
    /// against the exact series.
    Cauchy {
        /// Hook length t >= 1.
        #[arg(short = 't', long = "hook-length")]
        t: usize,
        /// Coefficient index.
        #[arg(short = 'n', long = "size")]
        n: usize,
        /// Evaluation point T0 > 0 (integer, fraction like 3/2, or decimal).
        #[arg(long = "T0", value_name = "T0", default_value = "1")]
        t0: String,
        /// Quadrature sample count M (at least 8n; default max(4096, 8n)).
        #[arg(long)]
        samples: Option<usize>,
        /// Working precision in decimal digits.
        #[arg(long, default_value_t = 40)]
        precision: usize,
    },

    /// Run the verification suites and report per-check status.
    Verify {
        /// Which suite to run.
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

fn main() -> ExitCode {
    let cfg = RunConfig::parse();
    match run(cfg) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cfg: RunConfig) -> Result<ExitCode, String> {
    if let Some(k) = resolve_threads(cfg.threads)? {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .map_err(|e| format!("cannot configure {k} worker threads: {e}"))?;
    }

    let content = match &cfg.command {
        Command::Enumerate { n, self_conjugate } => cmd_enumerate(&cfg, *n, *self_conjugate),
        Command::Dist { t, n } => cmd_dist(&cfg, *t, *n)?,
        Command::Table1 { nvals } => cmd_table1(&cfg, nvals)?,
        Command::Figure2 { t, n } => cmd_figure2(&cfg, *t, *n)?,
        Command::Asymptotics { t, n, t0 } => cmd_asymptotics(&cfg, *t, *n, t0)?,
        Command::Cauchy { t, n, t0, samples, precision } => {
            cmd_cauchy(&cfg, *t, *n, t0, *samples, *precision)?
        }
        Command::Verify { suite } => {
            let (content, failed) = cmd_verify(&cfg, *suite);
            emit(&cfg, &content)?;
            return Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
    };
    emit(&cfg, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn emit(cfg: &RunConfig, content: &str) -> Result<(), String> {
    write_output(cfg.output.as_deref(), content).map_err(|e| format!("cannot write output: {e}"))
}

fn resolve_threads(flag: Option<usize>) -> Result<Option<usize>, String> {
    let requested = match flag {
        Some(k) => Some(k),
        None => match std::env::var("HOOKDIST_THREADS") {
            Ok(v) => Some(
                v.trim()
                    .parse::<usize>()
                    .map_err(|_| format!("HOOKDIST_THREADS must be a positive integer, got {v:?}"))?,
            ),
            Err(_) => None,
        },
    };
    if requested == Some(0) {
        return Err("--threads must be at least 1".into());
    }
    Ok(requested)
}

fn validate_t(t: usize) -> Result<(), String> {
    if t == 0 {
        Err("hook length -t must be at least 1".into())
    } else {
        Ok(())
    }
}

/// Accepts "2", "3/2", or "1.5"; decimals are converted exactly from
/// their binary value. Returns the f64 image and the exact rational.
fn parse_t0(s: &str) -> Result<(f64, Rational), String> {
    let rat: Rational = if s.contains('/') || s.parse::<i64>().is_ok() {
        s.parse().map_err(|e| format!("invalid T0 {s:?}: {e}"))?
    } else {
        let v: f64 = s.parse().map_err(|_| format!("invalid T0 {s:?}"))?;
        Rational::from_f64(v).ok_or_else(|| format!("T0 must be finite, got {s:?}"))?
    };
    if rat.is_zero() || rat.is_negative() {
        return Err(format!("T0 must be positive, got {s:?}"));
    }
    Ok((rat.to_f64(), rat))
}

fn progress(n: usize, msg: &str) {
    if n >= 500 {
        eprintln!("{msg}");
    }
}

fn core_err(e: hookdist::Error) -> String {
    e.to_string()
}

fn json_line(v: serde_json::Value) -> String {
    format!("{v}\n")
}

fn cmd_enumerate(cfg: &RunConfig, n: usize, self_conjugate: bool) -> String {
    let list = if self_conjugate { enumerate_self_conjugate(n) } else { enumerate_partitions(n) };
    match cfg.format {
        Format::Csv => {
            let mut out = String::new();
            for p in &list {
                if p.parts().is_empty() {
                    out.push_str("()");
                } else {
                    let parts: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
                    out.push_str(&parts.join(","));
                }
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let arr: Vec<&[usize]> = list.iter().map(|p| p.parts()).collect();
            json_line(json!(arr))
        }
    }
}

fn cmd_dist(cfg: &RunConfig, t: usize, n: usize) -> Result<String, String> {
    validate_t(t)?;
    progress(n, &format!("building the exact hook-count polynomial (t = {t}, n = {n})"));
    let gf = genfun::build_genfun(t, n).map_err(core_err)?;
    let dist = HookDistribution::from_genfun(&gf, n).map_err(core_err)?;
    let moments = dist.exact_mean_variance().ok();
    match &moments {
        Some((mean, var)) => eprintln!(
            "sc({n}) = {}; mean = {} (~{:.6}); variance = {} (~{:.6})",
            dist.total(),
            mean,
            mean.to_f64(),
            var,
            var.to_f64()
        ),
        None => eprintln!("sc({n}) = 0; mean/variance undefined (empty sample space)"),
    }
    Ok(match cfg.format {
        Format::Csv => {
            let rows: Vec<Vec<String>> = dist
                .counts()
                .iter()
                .enumerate()
                .map(|(m, c)| vec![m.to_string(), c.to_string()])
                .collect();
            csv_table(&["m", "count"], &rows)
        }
        Format::Json => {
            let counts: Vec<String> = dist.counts().iter().map(|c| c.to_string()).collect();
            let (mean, variance) = match &moments {
                Some((m, v)) => (json!(m.to_string()), json!(v.to_string())),
                None => (json!(null), json!(null)),
            };
            let (mean_f64, variance_f64) = match &moments {
                Some((m, v)) => (json!(m.to_f64()), json!(v.to_f64())),
                None => (json!(null), json!(null)),
            };
            json_line(json!({
                "t": t,
                "n": n,
                "total": dist.total().to_string(),
                "counts": counts,
                "mean": mean,
                "variance": variance,
                "mean_f64": mean_f64,
                "variance_f64": variance_f64,
            }))
        }
    })
}

fn cmd_table1(cfg: &RunConfig, nvals: &[usize]) -> Result<String, String> {
    if nvals.is_empty() {
        return Err("--nvals needs at least one size".into());
    }
    if nvals.iter().any(|&n| n == 0) {
        return Err("--nvals entries must be positive; the ratio is undefined at n = 0".into());
    }
    let max = nvals.iter().copied().max().unwrap_or(0);
    progress(max, &format!("building the jet generating function up to n = {max}"));
    let rows = stats::table1(nvals).map_err(core_err)?;
    Ok(match cfg.format {
        Format::Csv => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![r.n.to_string(), r.measured.clone(), r.asymptotic.clone(), r.ratio.clone()]
                })
                .collect();
            csv_table(&["n", "mu_measured", "mu_asymptotic", "ratio"], &body)
        }
        Format::Json => {
            let arr: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "mu_measured": r.measured,
                        "mu_asymptotic": r.asymptotic,
                        "ratio": r.ratio,
                    })
                })
                .collect();
            json_line(json!(arr))
        }
    })
}

fn cmd_figure2(cfg: &RunConfig, t: usize, n: usize) -> Result<String, String> {
    validate_t(t)?;
    progress(n, &format!("building the exact hook-count polynomial (t = {t}, n = {n})"));
    let rows = stats::figure2_data(t, n).map_err(core_err)?;
    Ok(match cfg.format {
        Format::Csv => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|&(m, x, y)| vec![m.to_string(), x.to_string(), y.to_string()])
                .collect();
            csv_table(&["m", "x", "y"], &body)
        }
        Format::Json => json_line(json!({ "t": t, "n": n, "rows": rows })),
    })
}

fn cmd_asymptotics(cfg: &RunConfig, t: usize, n: usize, t0: &str) -> Result<String, String> {
    validate_t(t)?;
    let (t0f, _) = parse_t0(t0)?;
    let (mu, sigma2) = asymptotics::mean_variance(t, n).map_err(core_err)?;
    let b = asymptotics::b_t(t, t0f);
    let alpha = asymptotics::saddle_alpha(t, t0f, n);
    Ok(match cfg.format {
        Format::Csv => {
            let body: Vec<Vec<String>> = [
                ("mu", mu),
                ("sigma2", sigma2),
                ("b_t", b),
                ("alpha", alpha),
            ]
            .iter()
            .map(|(k, v)| vec![k.to_string(), v.to_string()])
            .collect();
            csv_table(&["quantity", "value"], &body)
        }
        Format::Json => json_line(json!({
            "t": t,
            "n": n,
            "T0": t0f,
            "mu": mu,
            "sigma2": sigma2,
            "b_t": b,
            "alpha": alpha,
        })),
    })
}

fn cmd_cauchy(
    cfg: &RunConfig,
    t: usize,
    n: usize,
    t0: &str,
    samples: Option<usize>,
    precision: usize,
) -> Result<String, String> {
    validate_t(t)?;
    if precision == 0 {
        return Err("--precision must be at least 1".into());
    }
    let (t0f, t0r) = parse_t0(t0)?;
    let m = samples.unwrap_or_else(|| 4096.max(8 * n));
    progress(n, &format!("quadrature with M = {m} samples at {precision} decimal digits"));
    let estimate = asymptotics::cauchy_estimate_prec(t, t0f, n, m, precision).map_err(core_err)?;
    progress(n, "building the exact coefficient for comparison");
    let exact = genfun::build_genfun_scalar(t, n, &t0r)
        .map_err(core_err)?
        .coeff(n)
        .map_err(core_err)?
        .to_f64();
    let rel_error = (estimate - exact).abs() / exact.abs().max(f64::MIN_POSITIVE);
    Ok(match cfg.format {
        Format::Csv => {
            let body: Vec<Vec<String>> = [
                ("estimate", estimate),
                ("exact", exact),
                ("rel_error", rel_error),
            ]
            .iter()
            .map(|(k, v)| vec![k.to_string(), v.to_string()])
            .collect();
            csv_table(&["quantity", "value"], &body)
        }
        Format::Json => json_line(json!({
            "t": t,
            "n": n,
            "T0": t0f,
            "samples": m,
            "precision": precision,
            "estimate": estimate,
            "exact": exact,
            "rel_error": rel_error,
        })),
    })
}

fn cmd_verify(cfg: &RunConfig, suite: Suite) -> (String, usize) {
    let checks = verify::run(suite);
    let failed = checks.iter().filter(|c| !c.passed).count();
    eprintln!("{} checks, {} failed", checks.len(), failed);
    let content = match cfg.format {
        Format::Csv => {
            let body: Vec<Vec<String>> = checks
                .iter()
                .map(|c| {
                    vec![
                        if c.passed { "ok" } else { "FAIL" }.to_string(),
                        c.name.clone(),
                        c.detail.clone(),
                    ]
                })
                .collect();
            csv_table(&["status", "check", "detail"], &body)
        }
        Format::Json => {
            let arr: Vec<serde_json::Value> = checks
                .iter()
                .map(|c| json!({ "check": c.name, "passed": c.passed, "detail": c.detail }))
                .collect();
            json_line(json!(arr))
        }
    };
    (content, failed)
}
