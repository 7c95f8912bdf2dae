//! Command-line front end. [`run`] parses arguments, executes one command
//! and returns the process exit code: 0 on success, 1 when a verification
//! fails or a minimal dimension stays unresolved, 2 on usage or input
//! errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::{build_w, canonicalize, check_unit_rep_capped, normalize_w, UnitRepSpec};
use crate::error::{Error, Result};
use crate::mindim::{min_bond_dimension, MinDimOptions};
use crate::mps::{conjugate_rep, verify_with, AnyRep, Matrix, RepFile, VerifyOptions, DEFAULT_CONDITION_CAP};
use crate::polynomials::{GroebnerConfig, MonomialOrder, DEFAULT_BUDGET};
use crate::scalars::ComplexF;
use crate::states::{enumerate_necklaces_capped, polya_count, w_state, TIState, DEFAULT_NECKLACE_CAP};

/// Settings shared by every command.
#[derive(Clone, Debug, PartialEq)]
pub struct Config {
    pub tolerance: f64,
    pub necklace_cap: usize,
    pub groebner_budget: u64,
    pub order: MonomialOrder,
    pub gauge_fix: bool,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            tolerance: 1e-9,
            necklace_cap: DEFAULT_NECKLACE_CAP,
            groebner_budget: DEFAULT_BUDGET,
            order: MonomialOrder::Grevlex,
            gauge_fix: false,
            seed: 0,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "ti-mps", version, about = "Translation-invariant MPS representations of qubit states")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Absolute tolerance for floating comparisons.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    /// Monomial order for Gröbner bases (grevlex or lex).
    #[arg(long, global = true, default_value = "grevlex")]
    order: MonomialOrder,
    /// Gröbner budget in monomial operations.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Restrict A1 to upper-triangular form in mindim systems.
    #[arg(long, global = true)]
    gauge_fix: bool,
    /// Seed for randomized gauge matrices.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest chain length whose necklaces are enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_NECKLACE_CAP)]
    necklace_cap: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the W-state representation of bond dimension n/2+1.
    WBuild {
        n: usize,
        /// Scale to represent the normalized W-state.
        #[arg(long)]
        normalized: bool,
        /// Write the rep file here instead of stdout.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Compare a rep against a state on every necklace class.
    Verify {
        rep: PathBuf,
        state: PathBuf,
        /// Use |error| / max(1, |c|) instead of the absolute error.
        #[arg(long)]
        relative: bool,
        /// Conjugate the rep by a seeded random gauge matrix first.
        #[arg(long)]
        random_gauge: bool,
    },
    /// Search for the minimal bond dimension by Gröbner bases.
    Mindim {
        state: PathBuf,
        /// Largest bond dimension tried (default n/2+1).
        #[arg(long)]
        max_d: Option<usize>,
        /// Include each reduced basis in the report.
        #[arg(long)]
        dump_basis: bool,
        /// Skip the restricted-system fallback.
        #[arg(long)]
        no_fallback: bool,
    },
    /// Convert a scaled-matrix-unit rep to the canonical n×n form.
    Canonicalize {
        rep: PathBuf,
        /// Chain length (default: the n stored in the rep file).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Check a scaled-matrix-unit rep against a state exactly.
    CheckUnit { rep: PathBuf, state: PathBuf },
    /// List the necklace classes of length n.
    Necklaces {
        n: usize,
        /// Print only the class count.
        #[arg(long)]
        count: bool,
    },
    /// Write the W-state of order n as a state file.
    GenWState {
        n: usize,
        /// Coefficients 1/sqrt(n); exact only for square n.
        #[arg(long)]
        normalized: bool,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

fn write_or_print(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => writeln!(out, "{text}")?,
    }
    Ok(())
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::Io(_)
        | Error::InvalidArgument(_)
        | Error::Shape(_)
        | Error::ArityMismatch { .. }
        | Error::NecklaceCap { .. }
        | Error::Range(_) => 2,
        _ => 1,
    }
}

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 2 { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let g = cli.global;
    let cfg = Config {
        tolerance: g.tol,
        necklace_cap: g.necklace_cap,
        groebner_budget: g.budget,
        order: g.order,
        gauge_fix: g.gauge_fix,
        seed: g.seed,
    };
    match execute(cli.command, &cfg, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}

fn execute(cmd: Command, cfg: &Config, out: &mut dyn Write) -> Result<bool> {
    match cmd {
        Command::WBuild { n, normalized, out: path } => {
            let text = cmd_w_build(n, normalized)?;
            write_or_print(&text, path.as_deref(), out)?;
            Ok(true)
        }
        Command::Verify { rep, state, relative, random_gauge } => {
            let report = cmd_verify(&rep, &state, relative, random_gauge, cfg)?;
            writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            Ok(report.passed)
        }
        Command::Mindim { state, max_d, dump_basis, no_fallback } => {
            let report = cmd_mindim(&state, max_d, dump_basis, !no_fallback, cfg)?;
            writeln!(out, "{}", report.to_json())?;
            Ok(report.resolved.is_some())
        }
        Command::Canonicalize { rep, n, out: path } => {
            let text = cmd_canonicalize(&rep, n)?;
            write_or_print(&text, path.as_deref(), out)?;
            Ok(true)
        }
        Command::CheckUnit { rep, state } => {
            let report = cmd_check_unit(&rep, &state, cfg)?;
            writeln!(out, "{report}")?;
            Ok(report.passed)
        }
        Command::Necklaces { n, count } => {
            if count {
                writeln!(out, "{}", polya_count(n))?;
            } else {
                for k in enumerate_necklaces_capped(n, cfg.necklace_cap)? {
                    writeln!(out, "{k}")?;
                }
            }
            Ok(true)
        }
        Command::GenWState { n, normalized, out: path } => {
            write_or_print(&w_state(n, normalized)?.to_json(), path.as_deref(), out)?;
            Ok(true)
        }
    }
}

/// Rep file of the W construction, unnormalized or normalized.
pub fn cmd_w_build(n: usize, normalized: bool) -> Result<String> {
    let w = build_w(n)?;
    let rep = if normalized { normalize_w(&w) } else { w.rep };
    Ok(RepFile { n, rep: AnyRep::Floating(rep) }.to_json())
}

/// Random matrix with entries uniform in the unit square plus `d·I`, which
/// keeps it diagonally dominant and therefore well conditioned.
pub fn random_gauge(d: usize, seed: u64) -> Matrix<ComplexF> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Matrix::from_fn(d, |i, j| {
        let z = ComplexF::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        if i == j {
            z + ComplexF::new(2.0 * d as f64, 0.0)
        } else {
            z
        }
    })
}

pub fn cmd_verify(
    rep: &Path,
    state: &Path,
    relative: bool,
    gauge: bool,
    cfg: &Config,
) -> Result<crate::mps::VerifyReport> {
    let file = RepFile::load(rep)?;
    let s = TIState::load(state)?;
    if file.n != s.n() {
        return Err(Error::InvalidArgument(format!("rep was built for n = {} but the state has n = {}", file.n, s.n())));
    }
    let mut rep = file.rep.to_floating()?;
    if gauge {
        rep = conjugate_rep(&rep, &random_gauge(rep.d(), cfg.seed), DEFAULT_CONDITION_CAP)?;
    }
    verify_with(&rep, &s, &VerifyOptions { tol: cfg.tolerance, relative, necklace_cap: cfg.necklace_cap })
}

pub fn cmd_mindim(
    state: &Path,
    max_d: Option<usize>,
    dump_basis: bool,
    fallback: bool,
    cfg: &Config,
) -> Result<crate::mindim::MinDimReport> {
    let s = TIState::load(state)?;
    let opts = MinDimOptions {
        gauge_fix: cfg.gauge_fix,
        groebner: GroebnerConfig { order: cfg.order, budget: Some(cfg.groebner_budget) },
        necklace_cap: cfg.necklace_cap,
        keep_basis: dump_basis,
        restricted_fallback: fallback,
    };
    min_bond_dimension(&s, max_d.unwrap_or(s.n() / 2 + 1), &opts)
}

/// Canonical rep file for an exact rep whose `A_1` is a scaled matrix unit.
pub fn cmd_canonicalize(rep: &Path, n: Option<usize>) -> Result<String> {
    let file = RepFile::load(rep)?;
    let AnyRep::Exact(exact) = &file.rep else {
        return Err(Error::InvalidArgument("canonicalize needs an exact rep".into()));
    };
    let spec = UnitRepSpec::from_rep(exact)?;
    let n = n.unwrap_or(file.n);
    let c = canonicalize(&spec, n)?;
    Ok(RepFile { n, rep: c.rep }.to_json())
}

pub fn cmd_check_unit(rep: &Path, state: &Path, cfg: &Config) -> Result<crate::constructions::UnitCheckReport> {
    let file = RepFile::load(rep)?;
    let AnyRep::Exact(exact) = &file.rep else {
        return Err(Error::InvalidArgument("check-unit needs an exact rep".into()));
    };
    let spec = UnitRepSpec::from_rep(exact)?;
    check_unit_rep_capped(&spec, &TIState::load(state)?, cfg.necklace_cap)
}
