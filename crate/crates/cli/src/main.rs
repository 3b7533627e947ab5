//! `gframe`: generate, analyse and verify finite operator-valued frames.

mod report;
mod verify;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gframe_core::duals::{dual_proximity_bound, extremal_frame, random_alternate_dual, verify_alternate_dual};
use gframe_core::generators::{nearly_parseval_gframe, random_gframe, random_parseval_gframe};
use gframe_core::identities::{dual_gap_closed_form, frobenius_dual_decomposition, najati_gap};
use gframe_core::{interchange, Error, GFrame};
use serde::Serialize;

use report::{FrameSummary, VerificationReport};
use verify::Suite;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NOT_A_FRAME: u8 = 3;
const EXIT_VERIFICATION: u8 = 4;

#[derive(Parser)]
#[command(name = "gframe", version, about = "Finite operator-valued frame toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a frame and write it in the JSON interchange format
    Gen {
        kind: GenKind,
        /// Dimension of the analysed space
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Output dimensions k_i, comma separated (default: two operators with k = n)
        #[arg(long, value_delimiter = ',')]
        counts: Option<Vec<usize>>,
        /// Target epsilon for nearly-parseval and extremal frames
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        epsilon: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report bounds, budgets and canonical gaps of a frame file
    Analyze {
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check the frame identities and bounds against randomised companions
    Verify {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Write an alternate dual of a frame (the canonical dual when magnitude is 0)
    Dual {
        input: PathBuf,
        #[arg(long, default_value_t = 0.0)]
        magnitude: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKind {
    Random,
    Parseval,
    NearlyParseval,
    Extremal,
}

struct CliError {
    code: u8,
    message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotAFrame { .. } | Error::NotPositiveDefinite { .. } => EXIT_NOT_A_FRAME,
            Error::Format(_)
            | Error::Io { .. }
            | Error::Infeasible(_)
            | Error::EpsilonOutOfRange(_)
            | Error::InvalidShape(_)
            | Error::ShapeMismatch(_)
            | Error::DimensionMismatch { .. } => EXIT_USAGE,
            _ => EXIT_FAILURE,
        };
        let message = match &e {
            Error::NotAFrame { lambda_min, .. } => format!("{e}\nlambda_min = {lambda_min:e}"),
            _ => e.to_string(),
        };
        CliError { code, message }
    }
}

type CliResult = std::result::Result<u8, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Gen {
            kind,
            n,
            counts,
            epsilon,
            seed,
            out,
        } => cmd_gen(kind, n, counts, epsilon, seed, out.as_deref()),
        Command::Analyze { input, json } => cmd_analyze(&input, json),
        Command::Verify {
            input,
            suite,
            trials,
            seed,
            json,
        } => cmd_verify(&input, suite, trials, seed, json),
        Command::Dual {
            input,
            magnitude,
            seed,
            out,
        } => cmd_dual(&input, magnitude, seed, out.as_deref()),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

/// Writes the frame to `out`, or to stdout; `info` goes to stdout when a file
/// is written and to stderr otherwise so that stdout stays valid JSON.
fn emit_frame(frame: &GFrame, out: Option<&Path>, info: &str) -> Result<(), CliError> {
    match out {
        Some(path) => {
            interchange::write_frame(path, frame)?;
            print!("{info}");
            println!("wrote    {}", path.display());
        }
        None => {
            println!("{}", interchange::to_json(frame));
            eprint!("{info}");
        }
    }
    Ok(())
}

fn cmd_gen(
    kind: GenKind,
    n: usize,
    counts: Option<Vec<usize>>,
    epsilon: f64,
    seed: u64,
    out: Option<&Path>,
) -> CliResult {
    if !(0.0..1.0).contains(&epsilon) {
        return Err(Error::EpsilonOutOfRange(epsilon).into());
    }
    let counts = counts.unwrap_or_else(|| vec![n; 2]);
    let frame = match kind {
        GenKind::Random => random_gframe(n, &counts, seed)?,
        GenKind::Parseval => random_parseval_gframe(n, &counts, seed)?,
        GenKind::NearlyParseval => nearly_parseval_gframe(n, &counts, epsilon, seed)?,
        GenKind::Extremal => extremal_frame(n, epsilon)?,
    };
    let bounds = frame.validate()?;
    emit_frame(&frame, out, &FrameSummary::new(&frame, &bounds).to_string())?;
    Ok(0)
}

#[derive(Serialize)]
struct Analysis {
    #[serde(flatten)]
    summary: FrameSummary,
    operators: usize,
    frobenius_energy: f64,
    trace_s: f64,
    /// sum ||L_i - L_i S^{-1/2}||_F^2
    parseval_gap: f64,
    /// sum ||L_i - L_i S^{-1}||_F^2
    dual_gap: f64,
    parseval_gap_bound: Option<f64>,
    dual_gap_bound: Option<f64>,
}

fn cmd_analyze(input: &Path, json: bool) -> CliResult {
    let frame = interchange::read_frame(input)?;
    let s = frame.frame_operator()?;
    let bounds = s.bounds()?;
    let n = frame.dim() as f64;
    let dual = frame.canonical_dual()?;
    let dual_gap = frobenius_dual_decomposition(&frame, &dual)?.canonical;
    let (parseval_gap_bound, dual_gap_bound) = match bounds.epsilon.filter(|&e| e < 1.0) {
        Some(e) => (
            Some(n * (1.0 - (1.0 - e).sqrt()).powi(2)),
            Some(dual_proximity_bound(&frame)?.bound),
        ),
        None => (None, None),
    };
    debug_assert!((dual_gap - dual_gap_closed_form(&s)).abs() <= 1e-6 * (1.0 + dual_gap));
    let analysis = Analysis {
        summary: FrameSummary::new(&frame, &bounds),
        operators: frame.len(),
        frobenius_energy: frame.frobenius_energy(),
        trace_s: s.matrix.trace()?.re,
        parseval_gap: najati_gap(&frame)?,
        dual_gap,
        parseval_gap_bound,
        dual_gap_bound,
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&analysis).expect("serialisable"));
    } else {
        print!("{}", analysis.summary);
        println!("operators            {}", analysis.operators);
        println!("sum ||L_i||_F^2      {}", analysis.frobenius_energy);
        println!("Tr(S)                {}", analysis.trace_s);
        println!("parseval gap         {}", analysis.parseval_gap);
        println!("dual gap             {}", analysis.dual_gap);
        if let (Some(p), Some(d)) = (parseval_gap_bound, dual_gap_bound) {
            println!("parseval gap bound   {p}");
            println!("dual gap bound       {d}");
        }
    }
    Ok(0)
}

fn cmd_verify(input: &Path, suite: Suite, trials: usize, seed: u64, json: bool) -> CliResult {
    if trials == 0 {
        return Err(CliError {
            code: EXIT_USAGE,
            message: "--trials must be at least 1".into(),
        });
    }
    let frame = interchange::read_frame(input)?;
    let s = frame.frame_operator()?;
    let bounds = s.bounds()?;
    let checks = verify::run(suite, &frame, &s, &bounds, trials, seed);
    let report = VerificationReport::new(FrameSummary::new(&frame, &bounds), suite.name(), trials, seed, checks);
    if json {
        println!("{}", serde_json::to_string_pretty(&report).expect("serialisable"));
    } else {
        print!("{report}");
    }
    Ok(if report.overall { 0 } else { EXIT_VERIFICATION })
}

fn cmd_dual(input: &Path, magnitude: f64, seed: u64, out: Option<&Path>) -> CliResult {
    if !(magnitude >= 0.0 && magnitude.is_finite()) {
        return Err(CliError {
            code: EXIT_USAGE,
            message: format!("--magnitude must be finite and non-negative, got {magnitude}"),
        });
    }
    let frame = interchange::read_frame(input)?;
    let dual = random_alternate_dual(&frame, magnitude, seed)?;
    let cert = verify_alternate_dual(&frame, &dual)?;
    let distance = dual.distance_sq(&frame.canonical_dual()?)?.sqrt();
    let info = format!(
        "dual residual                 {:e} (tolerance {:e})\ndistance to canonical dual    {:e}\n",
        cert.residual, cert.tolerance, distance
    );
    emit_frame(&dual, out, &info)?;
    Ok(if cert.passed { 0 } else { EXIT_VERIFICATION })
}
