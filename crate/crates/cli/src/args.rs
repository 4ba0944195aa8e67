//! Flag surface. Every mathematical input is text in exact form: `--theta`
//! takes the cosine as a fraction "s/r", coordinates and sides take "a" or
//! "a,b" meaning a + b*sqrt(d).

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "theta-forge",
    version,
    about = "Exact decision toolkit for areas of triangles with a fixed rational-cosine angle"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Print the curve model attached to (n, theta)
    Curve(CurveArgs),
    /// Torsion subgroup of the curve over the chosen field
    Torsion(TorsionArgs),
    /// Search for a witness and classify the area parameter
    Classify(ClassifyArgs),
    /// Map a curve point to the triangle it encodes
    TriangleFromPoint(TriangleFromPointArgs),
    /// Map a triangle to its curve point
    PointFromTriangle(PointFromTriangleArgs),
    /// Analyze the slope quartic attached to (r, s)
    Quartic(QuarticArgs),
    /// Enumerate triangles directly, bypassing the curve machinery
    Oracle(OracleArgs),
    /// Collect rank evidence from a quadratic twist
    TwistEvidence(TwistEvidenceArgs),
    /// Replay the bundled worked examples and report PASS/FAIL per item
    VerifyPaper(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Json,
    Text,
}

#[derive(Args)]
pub struct CommonArgs {
    /// Square-free positive area parameter
    #[arg(long, allow_hyphen_values = true)]
    pub n: i64,
    /// cos(theta) as an exact reduced fraction "s/r"
    #[arg(long, allow_hyphen_values = true)]
    pub theta: String,
    /// Work over Q(sqrt(d)) instead of Q
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<i64>,
}

#[derive(Args)]
pub struct OutputArgs {
    /// Report format
    #[arg(long, value_enum, default_value = "json")]
    pub output: OutputMode,
}

#[derive(Args)]
pub struct BoundsArgs {
    /// Largest denominator shell e in x = m/e^2
    #[arg(long)]
    pub denom_bound: Option<u32>,
    /// Largest |m| in x = m/e^2
    #[arg(long)]
    pub numer_bound: Option<i64>,
}

#[derive(Args)]
pub struct CurveArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct TorsionArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(flatten)]
    pub bounds: BoundsArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct TriangleFromPointArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Abscissa, "a" or "a,b"
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
    /// Ordinate, "a" or "a,b"
    #[arg(long, allow_hyphen_values = true)]
    pub y: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct PointFromTriangleArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// First side at the angle, "a" or "a,b"
    #[arg(long, allow_hyphen_values = true)]
    pub u: String,
    /// Second side at the angle, "a" or "a,b"
    #[arg(long, allow_hyphen_values = true)]
    pub v: String,
    /// Opposite side, "a" or "a,b"
    #[arg(long, allow_hyphen_values = true)]
    pub w: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct QuarticArgs {
    /// Denominator of the cosine, r >= 1
    #[arg(long, allow_hyphen_values = true)]
    pub r: i64,
    /// Numerator of the cosine
    #[arg(long, allow_hyphen_values = true)]
    pub s: i64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Enumeration height for the trial side
    #[arg(long, default_value_t = 10)]
    pub height: u32,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct TwistEvidenceArgs {
    /// Square-free positive area parameter
    #[arg(long, allow_hyphen_values = true)]
    pub n: i64,
    /// cos(theta) as an exact reduced fraction "s/r"
    #[arg(long, allow_hyphen_values = true)]
    pub theta: String,
    /// Twist scale; evidence is transported into Q(sqrt(d))
    #[arg(long, allow_hyphen_values = true)]
    pub d: i64,
    #[command(flatten)]
    pub bounds: BoundsArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub output: OutputArgs,
}
