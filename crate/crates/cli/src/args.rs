//! Flag definitions for the `gft` binary.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Numerical checks of derivative bounds for normalized analytic
/// functions on the unit disk.
///
/// Complex flag values are written `re`, `imi`, or `re+imi` — for example
/// `0.2`, `0.3i`, `0+0.2i`, `1.2-0.5i`. Boundary points are plain numbers
/// (angles in turns, i.e. fractions of a full revolution) or complex
/// literals within 1e-9 of the unit circle.
///
/// Exit codes: 0 all checks passed; 2 a hypothesis or probe flag failed;
/// 1 evaluation error; 64 unusable flags. The environment variable
/// GFT_THREADS caps worker threads (0 or unset = automatic).
#[derive(Debug, Parser)]
#[command(name = "gft", version, about, long_about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check one of the five sufficient conditions for a given function.
    Verify(VerifyArgs),
    /// Reproduce a worked single-coefficient construction end to end.
    Example(ExampleArgs),
    /// Random suite for the boundary-maximum derivative inequality.
    JackProbe(JackProbeArgs),
    /// Estimate an expression's supremum on a circle or the whole disk.
    Sup(SupArgs),
    /// Emit a CSV grid of an expression's magnitude over [-1,1]^2.
    Field(FieldArgs),
}

/// Where the function comes from: inline coefficients or a file.
#[derive(Debug, Args)]
pub struct SourceArgs {
    /// Inline coefficients `c0,c1,c2,...` (complex literals; c0 must be 0
    /// and c1 must be 1).
    #[arg(long, value_name = "LIST", conflicts_with = "coeff_file")]
    pub coeffs: Option<String>,
    /// Coefficient file: one `index,re,im` line per nonzero coefficient,
    /// indices strictly increasing.
    #[arg(long, value_name = "PATH")]
    pub coeff_file: Option<PathBuf>,
}

/// Sampler knobs shared by every command that estimates suprema.
#[derive(Debug, Args)]
pub struct SamplingArgs {
    /// Angular samples per circle (minimum 64).
    #[arg(long, default_value_t = 4096)]
    pub angular_samples: usize,
    /// Golden-section refinement iterations around the best grid angle.
    #[arg(long, default_value_t = 64)]
    pub refine_iters: usize,
    /// Distance of the outermost sampled circle from the unit circle.
    #[arg(long, default_value_t = 1e-4)]
    pub epsilon: f64,
    /// Smallest radius sampled for expressions with a removable origin.
    #[arg(long, default_value_t = 1e-3)]
    pub inner_cutoff: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Report format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Which sufficient condition to check (1-5).
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
    pub theorem: u8,
    #[command(flatten)]
    pub source: SourceArgs,
    /// Boundary points averaged into alpha (turns or complex literals).
    #[arg(long, value_name = "LIST")]
    pub points: String,
    /// Amplification factor, must be greater than 1.
    #[arg(long)]
    pub rho: f64,
    /// Required clearance from the ray [n, +inf) (theorem 4 only).
    #[arg(long, default_value_t = gft::DEFAULT_RAY_TOL)]
    pub ray_tol: f64,
    #[command(flatten)]
    pub sampling: SamplingArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ExampleArgs {
    /// Which worked construction to run: 1, 2 or 5.
    #[arg(long)]
    pub id: u8,
    /// Order of the perturbation: f(z) = z + a z^{n+1}.
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    /// The perturbation coefficient (complex literal).
    #[arg(long, default_value = "0.2")]
    pub a: String,
    #[command(flatten)]
    pub sampling: SamplingArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct JackProbeArgs {
    /// RNG seed; the whole summary is a function of the flag values.
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Random polynomials to draw.
    #[arg(long, default_value_t = 100)]
    pub trials: u32,
    /// Smallest vanishing order at the origin.
    #[arg(long, default_value_t = 1)]
    pub n_min: u32,
    /// Largest vanishing order at the origin.
    #[arg(long, default_value_t = 3)]
    pub n_max: u32,
    /// Smallest polynomial degree.
    #[arg(long, default_value_t = 2)]
    pub degree_min: u32,
    /// Largest polynomial degree.
    #[arg(long, default_value_t = 8)]
    pub degree_max: u32,
    /// Comma-separated probe radii in (0, 1).
    #[arg(long, default_value = "0.5,0.9")]
    pub r: String,
    /// Acceptance tolerance for the three probe flags.
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    #[command(flatten)]
    pub sampling: SamplingArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SupArgs {
    /// Expression: t1..t5, fprime-minus-1 or f-over-z-minus-1.
    #[arg(long)]
    pub kind: String,
    #[command(flatten)]
    pub source: SourceArgs,
    /// Estimate on this single circle radius in (0, 1).
    #[arg(long, conflicts_with = "disk")]
    pub radius: Option<f64>,
    /// Estimate over the whole sampled disk.
    #[arg(long)]
    pub disk: bool,
    /// Scalar reduction: modulus or real. Default: real for t3, else
    /// modulus.
    #[arg(long)]
    pub reduce: Option<String>,
    #[command(flatten)]
    pub sampling: SamplingArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    /// Expression: t1..t5, fprime-minus-1 or f-over-z-minus-1. t3 emits
    /// the real part, t4 the distance to the ray [n, +inf), the rest the
    /// modulus.
    #[arg(long)]
    pub kind: String,
    #[command(flatten)]
    pub source: SourceArgs,
    /// Grid resolution N for the N x N grid over [-1, 1]^2 (minimum 16).
    #[arg(long, default_value_t = 64)]
    pub grid: usize,
    /// Points with x^2 + y^2 > (1 - epsilon)^2 get an empty value field.
    #[arg(long, default_value_t = 1e-4)]
    pub epsilon: f64,
    /// Write the grid here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}
