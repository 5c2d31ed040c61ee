//! The `vortex` command line: coefficient tables, entropies, moments,
//! purity, correlation samples, figure data and identity sweeps.
//!
//! Exit codes: 0 success, 1 failed identities or unwritable output,
//! 2 usage errors. Output files are written to a temporary sibling and
//! renamed into place, so a failed run never leaves a partial file.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::beamfield::{gamma_direct, gamma_mercer, purity_integral, WaistFrame};
use crate::error::Error;
use crate::exactnum::Rat;
use crate::identities::{run_suite, Selection};
use crate::modecoeff::{coefficients, distribution, ModeIndex};
use crate::report::csv_table;
use crate::statistics::{moments_direct, purity, renyi_entropy, shannon_entropy, skewness, variance, MAX_MOMENT};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CorrMethod {
    Direct,
    Mercer,
    Both,
}

#[derive(Debug, Parser)]
#[command(name = "vortex", version, about = "Exact LG/HG mode coefficients, coherence measures and identity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output format
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    /// Write to this file instead of standard output
    #[arg(long, value_name = "PATH", global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ModeArgs {
    /// First LG mode index
    pub n: u64,
    /// Second LG mode index
    pub m: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of k, b(n,m,k) and b^2(n,m,k)
    Coeffs {
        #[command(flatten)]
        mode: ModeArgs,
        /// Print b^2 as an exact "num/den" rational
        #[arg(long)]
        exact: bool,
    },
    /// Shannon entropy, or Renyi entropy with --alpha
    Entropy {
        #[command(flatten)]
        mode: ModeArgs,
        /// Renyi order (positive, not 1)
        #[arg(long)]
        alpha: Option<f64>,
    },
    /// Raw and central moments up to order 6, variance and skewness
    Moments {
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Purity sum b^4, optionally also by double integral of |Gamma|^2
    Purity {
        #[command(flatten)]
        mode: ModeArgs,
        /// Also evaluate the double integral at this beam waist
        #[arg(long, value_name = "W")]
        integral: Option<f64>,
    },
    /// Two-point correlation Gamma(x, x') at the waist
    Corr {
        #[command(flatten)]
        mode: ModeArgs,
        /// Sample positions x (comma separated)
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        x: Vec<f64>,
        /// Sample positions x' (comma separated)
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        xprime: Vec<f64>,
        /// Beam waist
        #[arg(long, default_value_t = 1.0)]
        w: f64,
        #[arg(long, value_enum, default_value_t = CorrMethod::Both)]
        method: CorrMethod,
    },
    /// Data behind figures 1-5
    Figure {
        /// Figure number, 1-5
        #[arg(value_parser = clap::value_parser!(u8).range(1..=5))]
        id: u8,
        /// Total order N for figures 1, 4 and 5
        #[arg(long = "total")]
        total: Option<u64>,
        /// First index for figures 2 and 3
        #[arg(long)]
        n: Option<u64>,
        /// Second index for figures 2 and 3
        #[arg(long)]
        m: Option<u64>,
        /// Renyi order for figure 5
        #[arg(long)]
        alpha: Option<f64>,
    },
    /// Run identity checks and write a JSON report
    Verify {
        /// Identity ids, comma lists allowed, or `all`
        #[arg(default_value = "all")]
        ids: Vec<String>,
        /// Sweep 0 <= n, m <= N
        #[arg(long, default_value_t = 10)]
        max_nm: u64,
        /// Worker threads, 0 for all cores
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

#[derive(Debug, Parser)]
#[command(name = "vortex")]
struct Invocation {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    output: Output,
}

/// Why a command did not finish normally.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) | Error::Parse(_) => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

/// A rendered command result and whether it represents success.
struct Rendered {
    body: String,
    ok: bool,
}

fn json_body(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn exact(r: &Rat) -> Value {
    Value::String(r.to_string())
}

fn check_format(format: Format, allowed: &[Format], verb: &str) -> Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Failure::Usage(format!("{verb} does not support --format {format:?}").to_lowercase()))
    }
}

fn cmd_coeffs(index: ModeIndex, exact_b2: bool, format: Format) -> Rendered {
    let rows: Vec<(usize, f64, Rat)> =
        coefficients(index).into_iter().enumerate().map(|(k, b)| (k, b.to_f64(), b.squared().clone())).collect();
    let body = match format {
        Format::Csv => csv_table(
            &["k", "b", "b2"],
            rows.iter().map(|(k, b, b2)| {
                let b2 = if exact_b2 { b2.to_string() } else { b2.to_f64().to_string() };
                vec![k.to_string(), b.to_string(), b2]
            }),
        ),
        Format::Json => {
            let list: Vec<Value> = rows
                .iter()
                .map(|(k, b, b2)| {
                    let b2 = if exact_b2 { exact(b2) } else { json!(b2.to_f64()) };
                    json!({ "k": k, "b": b, "b2": b2 })
                })
                .collect();
            json_body(&json!({ "n": index.n, "m": index.m, "coefficients": list }))
        }
    };
    Rendered { body, ok: true }
}

fn cmd_entropy(index: ModeIndex, alpha: Option<f64>, format: Format) -> Result<Rendered, Failure> {
    let dist = distribution(index);
    let (kind, nats) = match alpha {
        None => ("shannon", shannon_entropy(&dist).nats),
        Some(a) => ("renyi", renyi_entropy(&dist, a)?.nats),
    };
    let body = match format {
        Format::Csv => csv_table(
            &["n", "m", "kind", "alpha", "entropy_nats"],
            [vec![index.n.to_string(), index.m.to_string(), kind.into(), alpha.unwrap_or(1.0).to_string(), nats.to_string()]],
        ),
        Format::Json => {
            let mut v = json!({ "n": index.n, "m": index.m, "kind": kind, "entropy_nats": nats });
            if let Some(a) = alpha {
                v["alpha"] = json!(a);
            }
            json_body(&v)
        }
    };
    Ok(Rendered { body, ok: true })
}

fn cmd_moments(index: ModeIndex, format: Format) -> Result<Rendered, Failure> {
    let table = moments_direct(&distribution(index), MAX_MOMENT)?;
    let var = variance(index)?;
    let skew = skewness(index);
    let body = match format {
        Format::Csv => csv_table(
            &["j", "raw", "central"],
            (0..=MAX_MOMENT).map(|j| vec![j.to_string(), table.raw[j].to_string(), table.central[j].to_string()]),
        ),
        Format::Json => json_body(&json!({
            "n": index.n,
            "m": index.m,
            "raw": table.raw.iter().map(exact).collect::<Vec<_>>(),
            "central": table.central.iter().map(exact).collect::<Vec<_>>(),
            "variance": exact(&var),
            "skewness": exact(&skew),
        })),
    };
    Ok(Rendered { body, ok: true })
}

fn cmd_purity(index: ModeIndex, waist: Option<f64>, format: Format) -> Result<Rendered, Failure> {
    let mu = purity(&distribution(index));
    let integral = waist.map(|w| WaistFrame::new(w).map(|f| purity_integral(index, f))).transpose()?;
    let body = match format {
        Format::Csv => {
            let mut header = vec!["n", "m", "purity_exact", "purity_float"];
            let mut row = vec![index.n.to_string(), index.m.to_string(), mu.to_string(), mu.to_f64().to_string()];
            if let Some(v) = integral {
                header.push("purity_integral");
                row.push(v.to_string());
            }
            csv_table(&header, [row])
        }
        Format::Json => {
            let mut v = json!({ "n": index.n, "m": index.m, "purity": exact(&mu), "purity_float": mu.to_f64() });
            if let Some(i) = integral {
                v["purity_integral"] = json!(i);
            }
            json_body(&v)
        }
    };
    Ok(Rendered { body, ok: true })
}

fn cmd_corr(index: ModeIndex, xs: &[f64], xps: &[f64], w: f64, method: CorrMethod, format: Format) -> Result<Rendered, Failure> {
    let frame = WaistFrame::new(w)?;
    if xs.iter().chain(xps).any(|v| !v.is_finite()) {
        return Err(Failure::Usage("sample positions must be finite".into()));
    }
    let mut header = vec!["x", "xprime", "gamma_re", "gamma_im"];
    if method == CorrMethod::Both {
        header.extend(["gamma_mercer", "abs_diff"]);
    }
    let mut rows = Vec::new();
    let mut records = Vec::new();
    for &x in xs {
        for &xp in xps {
            let mercer = gamma_mercer(index, x, xp, frame);
            let (re, im, extra) = match method {
                CorrMethod::Mercer => (mercer, 0.0, None),
                CorrMethod::Direct => {
                    let d = gamma_direct(index, x, xp, frame);
                    (d.re, d.im, None)
                }
                CorrMethod::Both => {
                    let d = gamma_direct(index, x, xp, frame);
                    (d.re, d.im, Some((mercer, (d - mercer).norm())))
                }
            };
            let mut row = vec![x.to_string(), xp.to_string(), re.to_string(), im.to_string()];
            let mut rec = json!({ "x": x, "xprime": xp, "gamma_re": re, "gamma_im": im });
            if let Some((mv, diff)) = extra {
                row.extend([mv.to_string(), diff.to_string()]);
                rec["gamma_mercer"] = json!(mv);
                rec["abs_diff"] = json!(diff);
            }
            rows.push(row);
            records.push(rec);
        }
    }
    let body = match format {
        Format::Csv => csv_table(&header, rows),
        Format::Json => json_body(&json!({ "n": index.n, "m": index.m, "w": w, "samples": records })),
    };
    Ok(Rendered { body, ok: true })
}

/// Figure defaults and the overrides actually applied.
struct FigureParams {
    total: u64,
    n: u64,
    m: u64,
    alpha: f64,
    overrides: Vec<String>,
}

fn figure_params(id: u8, total: Option<u64>, n: Option<u64>, m: Option<u64>, alpha: Option<f64>) -> Result<FigureParams, Failure> {
    let (default_total, default_n, default_m) = match id {
        1 | 5 => (20, 0, 0),
        2 => (0, 25, 25),
        3 => (0, 7, 25),
        _ => (25, 0, 0),
    };
    let applies = |name: &str| match name {
        "total" => matches!(id, 1 | 4 | 5),
        "n" | "m" => matches!(id, 2 | 3),
        _ => id == 5,
    };
    let mut overrides = Vec::new();
    for (name, given) in [("total", total.map(|v| v.to_string())), ("n", n.map(|v| v.to_string())), ("m", m.map(|v| v.to_string())), ("alpha", alpha.map(|v| v.to_string()))] {
        if let Some(v) = given {
            if !applies(name) {
                return Err(Failure::Usage(format!("--{name} does not apply to figure {id}")));
            }
            overrides.push(format!("{name}={v}"));
        }
    }
    Ok(FigureParams {
        total: total.unwrap_or(default_total),
        n: n.unwrap_or(default_n),
        m: m.unwrap_or(default_m),
        alpha: alpha.unwrap_or(2.0),
        overrides,
    })
}

fn cmd_figure(id: u8, p: FigureParams, format: Format) -> Result<Rendered, Failure> {
    let (header, rows): (Vec<&str>, Vec<Vec<Value>>) = match id {
        1 | 5 => {
            let rows = (0..=p.total)
                .map(|n| {
                    let dist = distribution(ModeIndex::new(n, p.total - n));
                    let nats = if id == 1 { shannon_entropy(&dist).nats } else { renyi_entropy(&dist, p.alpha)?.nats };
                    Ok(vec![json!(n), json!(nats)])
                })
                .collect::<Result<_, Failure>>()?;
            (vec!["n", "entropy_nats"], rows)
        }
        2 | 3 => {
            let dist = distribution(ModeIndex::new(p.n, p.m));
            let rows = dist.probs().iter().enumerate().map(|(k, q)| vec![json!(k), exact(q), json!(q.to_f64())]).collect();
            (vec!["k", "prob_exact", "prob_float"], rows)
        }
        _ => {
            let rows = (0..=p.total)
                .map(|n| {
                    let v = variance(ModeIndex::new(n, p.total - n))?;
                    Ok(vec![json!(n), exact(&v), json!(v.to_f64())])
                })
                .collect::<Result<_, Failure>>()?;
            (vec!["n", "variance_exact", "variance_float"], rows)
        }
    };
    let body = match format {
        Format::Csv => {
            let text_rows = rows.iter().map(|r| {
                r.iter()
                    .map(|v| match v {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    })
                    .collect()
            });
            let table = csv_table(&header, text_rows);
            if p.overrides.is_empty() {
                table
            } else {
                format!("# overrides: {}\n{table}", p.overrides.join(" "))
            }
        }
        Format::Json => {
            let records: Vec<Value> = rows
                .into_iter()
                .map(|r| Value::Object(header.iter().map(|h| h.to_string()).zip(r).collect()))
                .collect();
            let mut v = json!({ "figure": id, "rows": records });
            if !p.overrides.is_empty() {
                v["overrides"] = json!(p.overrides);
            }
            json_body(&v)
        }
    };
    Ok(Rendered { body, ok: true })
}

fn cmd_verify(ids: &[String], max_nm: u64, jobs: usize) -> Result<Rendered, Failure> {
    let selection = Selection::parse(ids)?;
    let result = run_suite(max_nm, &selection, jobs)?;
    Ok(Rendered { body: result.to_json(), ok: result.all_passed() })
}

fn dispatch(command: &Command, format: Option<Format>) -> Result<Rendered, Failure> {
    match command {
        Command::Coeffs { mode, exact } => Ok(cmd_coeffs(ModeIndex::new(mode.n, mode.m), *exact, format.unwrap_or(Format::Csv))),
        Command::Entropy { mode, alpha } => cmd_entropy(ModeIndex::new(mode.n, mode.m), *alpha, format.unwrap_or(Format::Json)),
        Command::Moments { mode } => cmd_moments(ModeIndex::new(mode.n, mode.m), format.unwrap_or(Format::Json)),
        Command::Purity { mode, integral } => cmd_purity(ModeIndex::new(mode.n, mode.m), *integral, format.unwrap_or(Format::Json)),
        Command::Corr { mode, x, xprime, w, method } => {
            cmd_corr(ModeIndex::new(mode.n, mode.m), x, xprime, *w, *method, format.unwrap_or(Format::Csv))
        }
        Command::Figure { id, total, n, m, alpha } => {
            let params = figure_params(*id, *total, *n, *m, *alpha)?;
            cmd_figure(*id, params, format.unwrap_or(Format::Csv))
        }
        Command::Verify { ids, max_nm, jobs } => {
            check_format(format.unwrap_or(Format::Json), &[Format::Json], "verify")?;
            cmd_verify(ids, *max_nm, *jobs)
        }
    }
}

/// Writes `body` to `path` via a temporary file in the same directory.
fn write_atomic(path: &Path, body: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(body.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `stdout` or `--out` and diagnostics to `stderr`.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let inv = match Invocation::try_parse_from(args) {
        Ok(inv) => inv,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let rendered = match dispatch(&inv.command, inv.output.format) {
        Ok(r) => r,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
        Err(Failure::Runtime(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_FAILURE;
        }
    };
    let written = match &inv.output.out {
        Some(path) => write_atomic(path, &rendered.body).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => stdout.write_all(rendered.body.as_bytes()).map_err(|e| format!("cannot write output: {e}")),
    };
    if let Err(msg) = written {
        let _ = writeln!(stderr, "error: {msg}");
        return EXIT_FAILURE;
    }
    if rendered.ok {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}

/// Entry point for the binary.
pub fn main() -> std::process::ExitCode {
    let code = run(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::ExitCode::from(code as u8)
}
