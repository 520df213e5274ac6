//! Command-line front end: verification runs and CSV/JSON curve output for
//! the deformed coherent-state toolkit.
//!
//! Exit codes: 0 when the run's invariant held, 1 on usage or configuration
//! errors, 2 when a verification failed or a quadrature did not converge.

// Validation uses negated comparisons so that NaN inputs fall into the
// rejecting branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod output;
mod parse;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use commands::RunError;
use output::{emit, OutputFormat, Payload};
use qcoherent::moments::QuadratureConfig;

/// Environment variable overriding the default quadrature tolerance.
const REL_TOL_ENV: &str = "QCOHERENT_REL_TOL";

#[derive(Parser)]
#[command(
    name = "qcoherent",
    version,
    about = "Moment-problem weights and coherent-state quantization for a charged particle in a magnetic field",
    long_about = None
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integrate the weight's power moments and compare with n! q^{n(n+1)/2}
    VerifyMoments {
        /// Deformation parameter: a float >= 1, or the token e2
        #[arg(long, value_parser = parse::parse_q)]
        q: f64,
        /// Highest moment order to verify
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Tabulate the weight along a grid through both evaluation paths
    Weight {
        #[arg(long, value_parser = parse::parse_q)]
        q: f64,
        /// Grid spec t_min:t_max:points (linear spacing)
        #[arg(long, value_parser = parse::parse_grid)]
        grid: (f64, f64, usize),
        #[command(flatten)]
        common: Common,
    },
    /// Check that the constant observable quantizes to the identity
    Resolution {
        #[arg(long, value_parser = parse::parse_q)]
        q: f64,
        /// Highest retained Fock level
        #[arg(long, default_value_t = 8)]
        n_trunc: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Quantize the monomial zeta^a conj(zeta)^b and export the band matrix
    Quantize {
        #[arg(long, value_parser = parse::parse_q)]
        q: f64,
        /// Power of zeta
        #[arg(long)]
        a: u32,
        /// Power of conj(zeta)
        #[arg(long)]
        b: u32,
        /// Highest retained Fock level
        #[arg(long, default_value_t = 16)]
        n_trunc: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Time-evolved lower symbol of the quantized coordinate, both routes
    SymbolEvolution {
        #[arg(long, value_parser = parse::parse_q)]
        q: f64,
        /// Coherent-state label, e.g. 1+0i
        #[arg(long, value_parser = parse::parse_complex)]
        zeta: Complex64,
        /// End of the time window
        #[arg(long)]
        t_max: f64,
        /// Number of time intervals (rows = steps + 1)
        #[arg(long, default_value_t = 64)]
        steps: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Uncertainty product in a coherent state, spectral and direct routes
    Uncertainty {
        #[arg(long, value_parser = parse::parse_q)]
        q: f64,
        /// Coherent-state label, e.g. 0.5-2i
        #[arg(long, value_parser = parse::parse_complex)]
        zeta: Complex64,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// Quadrature tolerance (default 1e-8; env QCOHERENT_REL_TOL overrides)
    #[arg(long)]
    rel_tol: Option<f64>,
    /// Pass/fail threshold; default is the command's documented invariant
    #[arg(long)]
    check_tol: Option<f64>,
    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    /// Output path; stdout when omitted
    #[arg(long)]
    output: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{err}");
                    ExitCode::SUCCESS
                }
                _ => {
                    // Usage problems go to the diagnostic stream, exit 1.
                    eprint!("{err}");
                    ExitCode::from(1)
                }
            };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(RunError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(RunError::Computation(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn resolve_rel_tol(flag: Option<f64>) -> Result<f64, RunError> {
    let value = match flag {
        Some(v) => v,
        None => match std::env::var(REL_TOL_ENV) {
            Ok(raw) => raw.parse::<f64>().map_err(|_| {
                RunError::Usage(format!("cannot parse {REL_TOL_ENV} value {raw:?}"))
            })?,
            Err(_) => 1e-8,
        },
    };
    if !(value > 0.0) || !value.is_finite() {
        return Err(RunError::Usage(format!(
            "quadrature tolerance must be positive (got {value})"
        )));
    }
    Ok(value)
}

fn run(cli: Cli) -> Result<bool, RunError> {
    let (payload, common, q_value, command_name) = match cli.command {
        Command::VerifyMoments { q, n_max, common } => {
            let cfg = config(&common)?;
            let tol = common.check_tol.unwrap_or(1e-6);
            (
                commands::verify_moments_cmd(q, n_max, &cfg, tol),
                common,
                q,
                "verify-moments",
            )
        }
        Command::Weight { q, grid, common } => {
            let cfg = config(&common)?;
            let tol = common.check_tol.unwrap_or(1e-6);
            (
                commands::weight_cmd(q, grid, &cfg, tol),
                common,
                q,
                "weight",
            )
        }
        Command::Resolution { q, n_trunc, common } => {
            let cfg = config(&common)?;
            // The undeformed case is held to the tighter budget its plain
            // factorial moments allow.
            let default_tol = if q == 1.0 { 1e-8 } else { 1e-6 };
            let tol = common.check_tol.unwrap_or(default_tol);
            (
                commands::resolution_cmd(q, n_trunc, &cfg, tol),
                common,
                q,
                "resolution",
            )
        }
        Command::Quantize {
            q,
            a,
            b,
            n_trunc,
            common,
        } => {
            let cfg = config(&common)?;
            let tol = common.check_tol.unwrap_or(0.0);
            (
                commands::quantize_cmd(q, a, b, n_trunc, &cfg, tol),
                common,
                q,
                "quantize",
            )
        }
        Command::SymbolEvolution {
            q,
            zeta,
            t_max,
            steps,
            common,
        } => {
            let cfg = config(&common)?;
            let tol = common.check_tol.unwrap_or(1e-10);
            (
                commands::symbol_evolution_cmd(q, zeta, t_max, steps, &cfg, tol),
                common,
                q,
                "symbol-evolution",
            )
        }
        Command::Uncertainty { q, zeta, common } => {
            let cfg = config(&common)?;
            let tol = common.check_tol.unwrap_or(1e-10);
            (
                commands::uncertainty_cmd(q, zeta, &cfg, tol),
                common,
                q,
                "uncertainty",
            )
        }
    };

    match payload {
        Ok(payload) => {
            let text = payload.render(common.format.into());
            emit(&text, common.output.as_deref())
                .map_err(|e| RunError::Usage(format!("cannot write output: {e}")))?;
            Ok(payload.pass)
        }
        Err(RunError::Computation(message)) => {
            // Structured payload carrying the failure, then exit 2.
            let payload = Payload {
                command: command_name,
                q: q_value,
                rows: Vec::new(),
                max_discrepancy: f64::NAN,
                pass: false,
                error: Some(message.clone()),
            };
            if matches!(common.format, FormatArg::Json) {
                let text = payload.render(OutputFormat::Json);
                emit(&text, common.output.as_deref())
                    .map_err(|e| RunError::Usage(format!("cannot write output: {e}")))?;
            }
            Err(RunError::Computation(message))
        }
        Err(usage) => Err(usage),
    }
}

fn config(common: &Common) -> Result<QuadratureConfig<f64>, RunError> {
    let rel_tol = resolve_rel_tol(common.rel_tol)?;
    QuadratureConfig::new(rel_tol, 32, 1 << 16).map_err(|e| RunError::Usage(e.to_string()))
}
