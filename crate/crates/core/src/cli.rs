//! Command-line front end.
//!
//! [`run`] parses arguments into a [`RunConfig`], executes it and returns the
//! process exit status: `0` when every check passes, `1` on a verification
//! failure and `2` on a usage or configuration error. Output depends only on
//! the configuration, so equal configurations give byte-identical output.

use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::identities::{run_suite, IdentityCheck, Suite};
use crate::algebra::{parse_rational, CoefficientMode, MultiplicationTable, Rational, Signature};
use crate::dynamics::{integrate, HamiltonianSpec, IntegratorConfig, PairRef, PhaseState, Scheme, Trajectory};
use crate::error::{Error, Result};
use crate::phase_space::{audit_parity_rule, decompose, MiddleSplitRule};
use crate::spha::{build_generators, render_json, render_text, verify_spha, SphaScale, SphaScaling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
        })
    }
}

#[derive(Debug, Parser)]
#[command(name = "hodge-phase", version, about = "Clifford algebra phase-space toolkit")]
pub struct Args {
    #[command(subcommand)]
    pub command: CommandArgs,

    /// Signature `p,q` (or `n` for Euclidean).
    #[arg(long, global = true, default_value = "3,0")]
    pub sig: String,

    /// Coefficient comparison: `exact`, `float` or `float:<eps>`.
    #[arg(long, global = true, default_value = "exact")]
    pub mode: String,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write to a file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Seed for randomised suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum CommandArgs {
    /// Basis-blade multiplication table (n <= 6).
    Table,
    /// Run identity suites.
    Verify {
        /// Comma-separated subset of hodge,dual,norm,clifford,assoc.
        #[arg(long, value_delimiter = ',')]
        suites: Vec<String>,
    },
    /// Split the algebra into position/momentum pairs.
    Decompose {
        /// Middle-grade X side: blades containing this one-based index.
        #[arg(long, default_value_t = 1)]
        middle_index: usize,
    },
    /// Compare computed commutation classes with the parity rule.
    Audit {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
    /// SPHA commutator table in Cl(4) or Cl(3,1).
    Spha {
        #[arg(long, default_value = "1")]
        ell: String,
        #[arg(long, default_value = "1")]
        r: String,
        #[arg(long, default_value = "1")]
        hbar: String,
        /// Use X = ell·γ and P = ⋆γ/R instead of pure blades.
        #[arg(long)]
        rescale: bool,
    },
    /// Integrate a polynomial Hamiltonian on one phase pair.
    Dynamics {
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Position blade such as `e13`; overrides `--k`.
        #[arg(long)]
        blade: Option<String>,
        /// Hamiltonian file; defaults to the harmonic oscillator.
        #[arg(long = "h")]
        h: Option<PathBuf>,
        #[arg(long, default_value_t = 1e-3)]
        dt: f64,
        #[arg(long, default_value_t = 10_000)]
        steps: usize,
        #[arg(long, default_value = "leapfrog")]
        scheme: String,
        #[arg(long, default_value_t = 1)]
        stride: usize,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        x0: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        p0: f64,
        /// Fail (exit 1) when the final |H(t) - H(0)| exceeds this.
        #[arg(long)]
        energy_tol: Option<f64>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Table,
    Verify { suites: Vec<Suite> },
    Decompose { middle: MiddleSplitRule },
    Audit { n_max: usize },
    Spha { scale: SphaScale, scaling: SphaScaling },
    Dynamics(DynamicsConfig),
}

#[derive(Debug, Clone, PartialEq)]
pub struct DynamicsConfig {
    pub pair: PairRef,
    pub hamiltonian: Option<PathBuf>,
    pub initial: PhaseState,
    pub integrator: IntegratorConfig,
    pub energy_tol: Option<f64>,
}

/// Validated run configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub sig: Signature,
    pub mode: CoefficientMode,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub seed: u64,
}

/// Rendered output plus the pass/fail verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub body: String,
    pub passed: bool,
}

fn parse_positive(name: &str, text: &str) -> Result<Rational> {
    let v = parse_rational(text)?;
    if v <= Rational::from_integer(0.into()) {
        return Err(Error::InvalidArgument(format!("--{name} must be positive")));
    }
    Ok(v)
}

impl RunConfig {
    pub fn from_args(args: Args) -> Result<Self> {
        let sig = Signature::from_str(&args.sig)?;
        let mode = CoefficientMode::from_str(&args.mode)?;
        let (command, default_format, allowed): (Command, Format, &[Format]) = match args.command {
            CommandArgs::Table => (Command::Table, Format::Text, &[Format::Text, Format::Json, Format::Csv]),
            CommandArgs::Verify { suites } => {
                let suites: Vec<Suite> = if suites.is_empty() {
                    Suite::ALL.into_iter().filter(|s| sig.is_euclidean() || !s.requires_euclidean()).collect()
                } else {
                    let mut parsed = suites.iter().map(|s| Suite::from_str(s.trim())).collect::<Result<Vec<_>>>()?;
                    parsed.sort();
                    parsed.dedup();
                    parsed
                };
                if suites.iter().any(|s| s.requires_euclidean()) {
                    sig.require_euclidean()?;
                }
                (Command::Verify { suites }, Format::Text, &[Format::Text, Format::Json])
            }
            CommandArgs::Decompose { middle_index } => {
                sig.require_euclidean()?;
                let middle = MiddleSplitRule::ContainsIndex(middle_index);
                (Command::Decompose { middle }, Format::Text, &[Format::Text, Format::Json])
            }
            CommandArgs::Audit { n_max } => (Command::Audit { n_max }, Format::Text, &[Format::Text, Format::Json]),
            CommandArgs::Spha { ell, r, hbar, rescale } => {
                let scale = SphaScale {
                    ell: parse_positive("ell", &ell)?,
                    r: parse_positive("r", &r)?,
                    h: parse_rational(&hbar)?,
                };
                let scaling = if rescale { SphaScaling::Rescaled } else { SphaScaling::Unscaled };
                (Command::Spha { scale, scaling }, Format::Text, &[Format::Text, Format::Json])
            }
            CommandArgs::Dynamics { k, blade, h, dt, steps, scheme, stride, x0, p0, energy_tol } => {
                let pair = match blade {
                    Some(text) => {
                        let mv = crate::algebra::Multivector::parse(sig, &text)?;
                        let (b, _) = mv
                            .as_single_term()
                            .ok_or_else(|| Error::InvalidArgument(format!("`{text}` is not a single basis blade")))?;
                        PairRef::new(sig, b)?
                    }
                    None => PairRef::for_grade(sig, k)?,
                };
                let integrator = IntegratorConfig::new(dt, steps, Scheme::from_str(&scheme)?).with_stride(stride);
                integrator.validate()?;
                let config = DynamicsConfig {
                    pair,
                    hamiltonian: h,
                    initial: PhaseState::new(x0, p0),
                    integrator,
                    energy_tol,
                };
                (Command::Dynamics(config), Format::Csv, &[Format::Csv, Format::Json, Format::Text])
            }
        };
        let format = args.format.unwrap_or(default_format);
        if !allowed.contains(&format) {
            return Err(Error::InvalidArgument(format!("format `{format}` is not available for this command")));
        }
        Ok(RunConfig { command, sig, mode, output: args.out, format, seed: args.seed })
    }

    pub fn execute(&self) -> Result<Report> {
        match &self.command {
            Command::Table => self.table(),
            Command::Verify { suites } => self.verify(suites),
            Command::Decompose { middle } => self.decompose(middle),
            Command::Audit { n_max } => self.audit(*n_max),
            Command::Spha { scale, scaling } => self.spha(scale, *scaling),
            Command::Dynamics(config) => self.dynamics(config),
        }
    }

    fn json<T: Serialize>(value: &T) -> Result<String> {
        let mut s = serde_json::to_string_pretty(value)?;
        s.push('\n');
        Ok(s)
    }

    fn table(&self) -> Result<Report> {
        let table = MultiplicationTable::new(self.sig)?;
        let body = match self.format {
            Format::Text => table.render_text(),
            Format::Csv => table.render_csv(),
            Format::Json => table.render_json()? + "\n",
        };
        Ok(Report { body, passed: true })
    }

    fn verify(&self, suites: &[Suite]) -> Result<Report> {
        let mut checks: Vec<IdentityCheck> = Vec::new();
        for &suite in suites {
            checks.extend(match self.mode {
                CoefficientMode::Exact => run_suite::<Rational>(self.sig, suite, self.seed, self.mode)?,
                CoefficientMode::Float { .. } => run_suite::<f64>(self.sig, suite, self.seed, self.mode)?,
            });
        }
        let passed = checks.iter().all(IdentityCheck::passed);
        let body = match self.format {
            Format::Json => {
                #[derive(Serialize)]
                struct VerifyJson<'a> {
                    signature: Signature,
                    mode: CoefficientMode,
                    seed: u64,
                    suites: &'a [Suite],
                    checks: &'a [IdentityCheck],
                    passed: bool,
                }
                Self::json(&VerifyJson { signature: self.sig, mode: self.mode, seed: self.seed, suites, checks: &checks, passed })?
            }
            _ => {
                let mut out = format!("verify {} (seed {})\n", self.sig, self.seed);
                for c in &checks {
                    out.push_str(&format!(
                        "{} {:<9} {} [{} checked, {} failed]\n",
                        if c.passed() { "PASS" } else { "FAIL" },
                        c.suite.name(),
                        c.identity,
                        c.checked,
                        c.failures
                    ));
                    if let Some(example) = &c.counterexample {
                        out.push_str(&format!("     counterexample: {example}\n"));
                    }
                }
                out.push_str(if passed { "result: pass\n" } else { "result: FAIL\n" });
                out
            }
        };
        Ok(Report { body, passed })
    }

    fn decompose(&self, middle: &MiddleSplitRule) -> Result<Report> {
        let d = decompose(self.sig, middle.clone())?;
        let body = match self.format {
            Format::Json => Self::json(&d)?,
            _ => d.render_text(),
        };
        Ok(Report { body, passed: d.is_partition() })
    }

    fn audit(&self, n_max: usize) -> Result<Report> {
        let report = audit_parity_rule(n_max)?;
        let body = match self.format {
            Format::Json => Self::json(&report)?,
            _ => report.render_text(),
        };
        Ok(Report { body, passed: true })
    }

    fn spha(&self, scale: &SphaScale, scaling: SphaScaling) -> Result<Report> {
        let gens = build_generators(self.sig, scale.clone(), scaling)?;
        let (table, summary) = verify_spha(&gens)?;
        let body = match self.format {
            Format::Json => render_json(&table, &summary)? + "\n",
            _ => render_text(&table, &summary),
        };
        Ok(Report { body, passed: summary.structure_verified() })
    }

    fn dynamics(&self, config: &DynamicsConfig) -> Result<Report> {
        let h = match &config.hamiltonian {
            Some(path) => HamiltonianSpec::from_file(path, config.pair)?,
            None => HamiltonianSpec::oscillator(config.pair),
        };
        let traj = integrate(&h, config.initial, config.integrator)?;
        let passed = config.energy_tol.is_none_or(|tol| traj.final_energy_error() <= tol);
        let body = match self.format {
            Format::Csv => traj.to_csv(),
            Format::Json => {
                #[derive(Serialize)]
                struct DynamicsJson<'a> {
                    pair: PairRef,
                    hamiltonian: String,
                    final_energy_error: f64,
                    max_energy_error: f64,
                    trajectory: &'a Trajectory,
                }
                Self::json(&DynamicsJson {
                    pair: config.pair,
                    hamiltonian: h.poly.render_lines(),
                    final_energy_error: traj.final_energy_error(),
                    max_energy_error: traj.max_energy_error(),
                    trajectory: &traj,
                })?
            }
            Format::Text => {
                let last = traj.last();
                format!(
                    "{} pair on {} in {} ({}), {} steps of {} with {}\nfinal t = {}, x = {}, p = {}, H = {}\n|dH| final {:e}, max {:e}\n",
                    traj.meta.comm_class,
                    config.pair.blade,
                    self.sig,
                    if traj.meta.bracket_sign < 0 { "antisymmetric bracket" } else { "symmetric bracket" },
                    traj.meta.steps,
                    traj.meta.dt,
                    traj.meta.scheme,
                    last.t,
                    last.x,
                    last.p,
                    last.h,
                    traj.final_energy_error(),
                    traj.max_energy_error()
                )
            }
        };
        Ok(Report { body, passed })
    }
}

/// Exit status for an error: runtime instability counts as a failed run,
/// everything else as a usage or configuration problem.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NonFiniteState { .. } | Error::NoConvergence { .. } => 1,
        _ => 2,
    }
}

/// Parses `argv`, runs the command and returns the exit status.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(args) => args,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(rendered.as_bytes()) } else { stderr.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let outcome = RunConfig::from_args(args).and_then(|config| {
        let report = config.execute()?;
        match &config.output {
            Some(path) => std::fs::write(path, &report.body)?,
            None => stdout.write_all(report.body.as_bytes())?,
        }
        Ok(report.passed)
    });
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}
