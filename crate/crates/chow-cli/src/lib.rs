//! The `chow` command line: argument parsing, dispatch and report rendering.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use chow_core::checks::{check_theorem, Status};
use chow_core::config::ProlongRoute;
use chow_core::foulkes_howe::chow_ideal_component;
use chow_core::glaction::hwv_space;
use chow_core::plethysm::{decompose, decompose_at, Space};
use chow_core::prolongation::{complement_obstructions, prolong_isotypic, secant_first_nonzero, split_diagnostic};
use chow_core::{Config, Decomposition, Error, Partition, SymPoly};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "chow", version, about = "Plethysms, Foulkes-Howe kernels and prolongations, computed exactly")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest weight space that may be materialized (overrides CHOW_WEIGHT_CAP).
    #[arg(long, global = true)]
    pub weight_cap: Option<usize>,
    /// Minimum number of primes for modular rank computations.
    #[arg(long, global = true)]
    pub primes: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub route: Option<RouteArg>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Auto,
    Derivative,
    Polarization,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Isotypic decomposition of S^k(S^d), S^k(Λ^d) or Λ^k(Λ^d).
    Decompose {
        #[arg(long, default_value = "sym-sym", value_parser = parse_space)]
        space: Space,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: u32,
        /// Number of variables; defaults to enough for every module.
        #[arg(long)]
        n: Option<usize>,
        /// Only the multiplicity of this partition.
        #[arg(long, value_parser = parse_partition)]
        at: Option<Partition>,
    },
    /// Basis of highest weight vectors of weight λ in S^k(S^d).
    Hwv {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: u32,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Kernel of the Foulkes-Howe map, i.e. a graded piece of the Chow ideal.
    FhKernel {
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Prolongation of an ideal component, e.g. `--ideal ch3-deg4`.
    Prolong {
        #[arg(long, value_parser = parse_ideal)]
        ideal: (u32, usize),
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 6)]
        n: usize,
    },
    /// First nonzero piece of a secant ideal, or the complement test for one candidate.
    Secant {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, value_parser = parse_partition)]
        candidate: Option<Partition>,
        /// Size of the first factor of the split; defaults to half the degree.
        #[arg(long)]
        split: Option<usize>,
        /// Compare the balanced split against all splits at --degree (informational only).
        #[arg(long, conflicts_with = "candidate")]
        check_conjecture: bool,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Run one of the built-in verification suites.
    Check {
        #[arg(long)]
        theorem: String,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let parts = s
        .split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|e| format!("bad part {x:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}

fn parse_space(s: &str) -> Result<Space, String> {
    s.parse::<Space>().map_err(|e| e.to_string())
}

/// `ch<d>-deg<δ>`.
fn parse_ideal(s: &str) -> Result<(u32, usize), String> {
    let bad = || format!("expected ch<d>-deg<delta>, got {s:?}");
    let rest = s.strip_prefix("ch").ok_or_else(bad)?;
    let (d, delta) = rest.split_once("-deg").ok_or_else(bad)?;
    Ok((d.parse().map_err(|_| bad())?, delta.parse().map_err(|_| bad())?))
}

#[derive(Serialize)]
struct Envelope {
    command: &'static str,
    version: &'static str,
    config: Config,
    elapsed_ms: u128,
    result: Value,
}

struct Outcome {
    command: &'static str,
    text: String,
    json: Value,
    code: i32,
}

fn decomposition_json(dec: &Decomposition) -> Value {
    Value::Array(dec.iter().map(|(p, m)| json!({ "partition": p.parts(), "multiplicity": m })).collect())
}

fn polys_json(fs: &[SymPoly]) -> Value {
    Value::Array(fs.iter().map(|f| json!({ "text": f.to_text(), "terms": f.to_json_terms() })).collect())
}

fn config_from(cli: &Cli) -> Result<Config, Error> {
    let mut cfg = Config::from_env()?;
    if let Some(c) = cli.weight_cap {
        cfg.weight_cap = c;
    }
    if let Some(p) = cli.primes {
        cfg.primes = p;
    }
    if let Some(r) = cli.route {
        cfg.route = match r {
            RouteArg::Auto => ProlongRoute::Auto,
            RouteArg::Derivative => ProlongRoute::Derivative,
            RouteArg::Polarization => ProlongRoute::Polarization,
        };
    }
    cfg.validate()?;
    Ok(cfg)
}

fn execute(cmd: &Command, cfg: &Config) -> Result<Outcome, Error> {
    Ok(match cmd {
        Command::Decompose { space, k, d, n, at } => {
            let n = n.unwrap_or(match space {
                Space::SymSym => *k,
                _ => *k * *d as usize,
            });
            if let Some(lam) = at {
                let m = decompose_at(*space, *k, *d, n, lam, cfg)?;
                Outcome {
                    command: "decompose",
                    text: format!("multiplicity of {lam} in {space}(k={k}, d={d}, n={n}): {m}\n"),
                    json: json!({ "space": space, "k": k, "d": d, "n": n, "partition": lam.parts(), "multiplicity": m }),
                    code: EXIT_OK,
                }
            } else {
                let dec = decompose(*space, *k, *d, n, cfg)?;
                Outcome {
                    command: "decompose",
                    text: format!("{dec}\n{} modules, {} with multiplicity\n", dec.len(), dec.total_mult()),
                    json: json!({ "space": space, "k": k, "d": d, "n": n, "modules": decomposition_json(&dec) }),
                    code: EXIT_OK,
                }
            }
        }
        Command::Hwv { k, d, lambda, n } => {
            let n = n.unwrap_or(lambda.len().max(1));
            let basis = hwv_space(*k, *d, n, lambda, cfg)?;
            let mut text = format!("{} highest weight vector(s) of weight {lambda} in S^{k}(S^{d} C^{n})\n", basis.len());
            for f in &basis {
                text.push_str(&format!("{}  [{} terms]\n", f.to_text(), f.len()));
            }
            Outcome { command: "hwv", text, json: json!({ "k": k, "d": d, "n": n, "lambda": lambda.parts(), "vectors": polys_json(&basis) }), code: EXIT_OK }
        }
        Command::FhKernel { delta, d, n } => {
            let n = n.unwrap_or(*delta);
            let ideal = chow_ideal_component(*delta, *d, n, cfg)?;
            let mut text = format!("kernel of FH_{{{delta},{d}}} on S^{delta}(S^{d} C^{n}): {}\n", ideal.content);
            let mut certs = serde_json::Map::new();
            for (lam, fs) in &ideal.certificates {
                for f in fs {
                    text.push_str(&format!("  {lam}: {}\n", f.to_text()));
                }
                certs.insert(lam.to_string(), polys_json(fs));
            }
            Outcome {
                command: "fh-kernel",
                text,
                json: json!({ "delta": delta, "d": d, "n": n, "modules": decomposition_json(&ideal.content), "certificates": certs }),
                code: EXIT_OK,
            }
        }
        Command::Prolong { ideal: (d, delta), p, n } => {
            let base = chow_ideal_component(*delta, *d, *n, cfg)?;
            let out = prolong_isotypic(&base, *p, cfg)?;
            Outcome {
                command: "prolong",
                text: format!("I_{delta}(Ch_{d}) = {}\nprolongation {p}, degree {}: {}\n", base.content, out.degree, out.content),
                json: json!({ "ideal": { "d": d, "delta": delta, "modules": decomposition_json(&base.content) }, "p": p, "n": n, "degree": out.degree, "modules": decomposition_json(&out.content) }),
                code: EXIT_OK,
            }
        }
        Command::Secant { d, r, n, degree, check_conjecture: true, seed, .. } => {
            let degree = degree.ok_or_else(|| Error::Invalid("--degree is required with --check-conjecture".into()))?;
            let diag = split_diagnostic(*d, *r, degree, n.unwrap_or(4), *seed, cfg)?;
            let mut text = format!("balanced split {:?} against {} splits\n", diag.balanced_split, diag.splits.len());
            for m in &diag.modules {
                text += &format!("{}  mult {}  balanced {}  all splits {}\n", m.partition, m.mult, m.balanced, m.all_splits);
            }
            text += if diag.agrees { "balanced split agrees on every module\n" } else { "balanced split is strictly larger on some module\n" };
            Outcome { command: "secant", text, json: serde_json::to_value(&diag).expect("diagnostic"), code: EXIT_OK }
        }
        Command::Secant { d, r, n, degree, candidate, split, .. } => match candidate {
            None => {
                let n = n.unwrap_or(6);
                let (deg, comp) = secant_first_nonzero(*d, *r, n, cfg)?;
                if degree.is_some_and(|x| x != deg) {
                    return Err(Error::Invalid(format!("without --candidate only degree {deg} is computed")));
                }
                Outcome {
                    command: "secant",
                    text: format!("first possible degree {deg}: {}\n", comp.content),
                    json: json!({ "d": d, "r": r, "n": n, "degree": deg, "modules": decomposition_json(&comp.content) }),
                    code: EXIT_OK,
                }
            }
            Some(nu) => {
                if *r != 2 {
                    return Err(Error::Invalid("the complement test splits into two factors; use --r 2".into()));
                }
                let degree = degree.ok_or_else(|| Error::Invalid("--degree is required with --candidate".into()))?;
                if nu.size() as usize != degree * *d as usize {
                    return Err(Error::Invalid(format!("{nu} has size {}, expected {}", nu.size(), degree * *d as usize)));
                }
                let a = split.unwrap_or(degree / 2);
                if a == 0 || a >= degree {
                    return Err(Error::Invalid(format!("split {a} must lie strictly between 0 and {degree}")));
                }
                let n = n.unwrap_or(nu.len());
                let complement = |delta: usize| -> Result<Decomposition, Error> {
                    let m = n.min(delta);
                    decompose(Space::SymSym, delta, *d, m, cfg)?.minus(&chow_ideal_component(delta, *d, m, cfg)?.content)
                };
                let (c1, c2) = (complement(a)?, complement(degree - a)?);
                let mult = decompose_at(Space::SymSym, degree, *d, n, nu, cfg)?;
                let obs = complement_obstructions(nu, &c1, &c2);
                let member = mult > 0 && obs.is_empty();
                Outcome {
                    command: "secant",
                    text: format!(
                        "{nu} in S^{degree}(S^{d}): multiplicity {mult}\ncomplements: {c1} | {c2}\nobstructions: {}\n{}\n",
                        obs.len(),
                        if member { "isotypic component lies in the secant ideal" } else { "not certified" }
                    ),
                    json: json!({ "candidate": nu.parts(), "degree": degree, "split": [a, degree - a], "multiplicity": mult, "complements": [decomposition_json(&c1), decomposition_json(&c2)], "obstructions": obs, "certified": member }),
                    code: EXIT_OK,
                }
            }
        },
        Command::Check { theorem } => {
            let report = check_theorem(theorem, cfg)?;
            let mut text = format!("{} {}  ({} ms)\n", report.status, report.theorem, report.elapsed_ms);
            for w in &report.witnesses {
                text.push_str(&format!("  [{}] {}\n", if w.holds { "ok" } else { "FAIL" }, w.claim));
            }
            let code = if report.status == Status::Pass { EXIT_OK } else { EXIT_FAIL };
            Outcome { command: "check", text, json: serde_json::to_value(&report).expect("report"), code }
        }
    })
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Budget { .. } => EXIT_BUDGET,
        Error::Invalid(_) | Error::Parse(_) => EXIT_USAGE,
        Error::Linalg(_) => EXIT_FAIL,
    }
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{}", e.render()) } else { write!(out, "{}", e.render()) };
            return code;
        }
    };
    let cfg = match config_from(&cli) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let start = Instant::now();
    let outcome = match execute(&cli.command, &cfg) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code(&e);
        }
    };
    let rendered = match cli.format {
        Format::Text => outcome.text,
        Format::Json if outcome.command == "check" => serde_json::to_string_pretty(&outcome.json).expect("json") + "\n",
        Format::Json => {
            let env = Envelope { command: outcome.command, version: chow_core::VERSION, config: cfg, elapsed_ms: start.elapsed().as_millis(), result: outcome.json };
            serde_json::to_string_pretty(&env).expect("json") + "\n"
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, rendered.as_bytes()),
        None => out.write_all(rendered.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write report: {e}");
        return EXIT_FAIL;
    }
    outcome.code
}
