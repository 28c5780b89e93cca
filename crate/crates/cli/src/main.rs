//! `sy`: command-line front end for the superyangian library.
//!
//! Every command prints plain text by default or a single JSON document with
//! `--format json`. The exit status is 0 when every executed check passed,
//! 1 when a check failed and 2 on invalid input.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use superyangian::classify::ClassifyError;
use superyangian::enveloping::EnvelopingError;
use superyangian::loopmap::LoopError;
use superyangian::rootdata::RootDataError;
use superyangian::yangian::YangianError;

/// Output format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable text.
    Plain,
    /// One JSON document on stdout.
    Json,
}

/// Exact verification and classification for super Yangians of type A.
#[derive(Debug, Parser)]
#[command(name = "sy", version, about)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, env = "SY_FORMAT", value_enum, default_value = "plain")]
    pub format: Format,
    /// Number of worker threads (defaults to the number of cores).
    #[arg(long, global = true, env = "SY_JOBS", value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
    /// The command to run.
    #[command(subcommand)]
    pub command: Command,
}

/// A parity diagram given as a string over `E`/`O`.
#[derive(Debug, Args)]
pub struct DiagramArg {
    /// Parity diagram, for example `EEO`.
    #[arg(long, env = "SY_DIAGRAM")]
    pub diagram: String,
}

/// Truncation caps for computations in the Yangian.
#[derive(Clone, Copy, Debug, Args)]
pub struct CapArgs {
    /// Degree cap N: the largest ħ-exponent plus total level kept.
    #[arg(long, env = "SY_CAP", default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    pub cap: u32,
    /// Length cap L: the largest number of letters in a monomial.
    #[arg(long, env = "SY_LEN", default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
    pub len: u64,
}

/// Top-level commands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Builds, lists or describes parity diagrams.
    Diagram(DiagramCmd),
    /// Prints the Cartan matrix of a diagram.
    Cartan(DiagramArg),
    /// Prints the positive roots of a diagram.
    Roots(DiagramArg),
    /// Prints the Weyl groups of a diagram and checks their Coxeter relations.
    Weyl(DiagramArg),
    /// Runs a verification suite on one diagram.
    Verify(VerifyCmd),
    /// Partitions the diagrams with given counts into classes.
    Classify(ClassifyCmd),
    /// Prints a scalar power series.
    Series(SeriesCmd),
    /// Prints the image of a loop generator in the truncated Yangian.
    Phi(PhiCmd),
    /// Checks scalar identities.
    Check {
        /// The identity to check.
        #[command(subcommand)]
        what: CheckCmd,
    },
    /// Works with the truncated Yangian directly.
    Yangian {
        /// The Yangian operation.
        #[command(subcommand)]
        what: YangianCmd,
    },
}

/// Arguments of `diagram`.
#[derive(Debug, Args)]
pub struct DiagramCmd {
    /// The distinguished diagram with M even entries followed by N odd ones.
    #[arg(long, num_args = 2, value_names = ["M", "N"], env = "SY_DISTINGUISHED", value_delimiter = ',',
          conflicts_with_all = ["np", "diagram"])]
    pub distinguished: Option<Vec<usize>>,
    /// Number of even entries, to list every diagram with the given counts.
    #[arg(long, env = "SY_NP", requires = "nm", conflicts_with = "diagram")]
    pub np: Option<usize>,
    /// Number of odd entries.
    #[arg(long, env = "SY_NM", requires = "np")]
    pub nm: Option<usize>,
    /// A diagram to describe.
    #[arg(long, env = "SY_DIAGRAM")]
    pub diagram: Option<String>,
}

/// Verification suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Matrix presentation of the Lie superalgebra and its bialgebra axioms.
    Lie,
    /// The Casimir tensor and the brackets of its positive part.
    Casimir,
    /// Yangian relations and PBW certification.
    Yangian,
    /// Coproduct, counit, antipode and quantization checks.
    Hopf,
    /// Loop relations on the images of the loop generators.
    Phi,
}

/// Arguments of `verify`.
#[derive(Debug, Args)]
pub struct VerifyCmd {
    /// Which suite to run.
    #[arg(long, env = "SY_SUITE", value_enum)]
    pub suite: Suite,
    /// The diagram.
    #[command(flatten)]
    pub diagram: DiagramArg,
    /// Truncation caps.
    #[command(flatten)]
    pub caps: CapArgs,
    /// Use the Hopf formulas also outside the minimalistic range.
    #[arg(long, env = "SY_ASSUME_HOPF")]
    pub assume_hopf: bool,
    /// Largest absolute loop mode for the `phi` suite.
    #[arg(long, env = "SY_MODES", default_value_t = 2)]
    pub modes: i64,
}

/// Classification modes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassifyMode {
    /// Classes of Hopf superalgebras.
    Hopf,
    /// Classes of isomorphic Lie superalgebras.
    Super,
}

/// Arguments of `classify`.
#[derive(Debug, Args)]
pub struct ClassifyCmd {
    /// Number of even entries.
    #[arg(long, env = "SY_NP")]
    pub np: usize,
    /// Number of odd entries.
    #[arg(long, env = "SY_NM")]
    pub nm: usize,
    /// Which classification.
    #[arg(long, env = "SY_MODE", value_enum, default_value = "hopf")]
    pub mode: ClassifyMode,
    /// Check every emitted isomorphism on the defining relations.
    #[arg(long, env = "SY_VERIFY")]
    pub verify: bool,
    /// Truncation caps for `--verify`.
    #[command(flatten)]
    pub caps: CapArgs,
}

/// Named scalar series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesName {
    /// `G(v) = log(v / (2 sinh(v/2)))`.
    #[value(name = "G")]
    G,
    /// `q − q⁻¹` with `q = e^{ħ/2}`.
    Qd,
    /// `ħ / (q − q⁻¹)`.
    HbarOverQd,
    /// `√(ħ / (q − q⁻¹))`.
    SqrtHbarOverQd,
    /// The q-number `[n]_q`.
    Qnumber,
}

/// Arguments of `series`.
#[derive(Debug, Args)]
pub struct SeriesCmd {
    /// Which series.
    #[arg(value_enum, env = "SY_SERIES")]
    pub name: SeriesName,
    /// Truncation order.
    #[arg(long, env = "SY_ORDER", default_value_t = 6, value_parser = clap::value_parser!(u32).range(2..))]
    pub order: u32,
    /// The integer `n` of the q-number.
    #[arg(long, env = "SY_N", default_value_t = 2, allow_negative_numbers = true)]
    pub n: i64,
}

/// Arguments of `phi`.
#[derive(Debug, Args)]
pub struct PhiCmd {
    /// The diagram.
    #[command(flatten)]
    pub diagram: DiagramArg,
    /// Loop generator `E:i:r`, `F:i:r` or `H:i:r` with a 1-based vertex.
    #[arg(long, env = "SY_GEN", allow_hyphen_values = true)]
    pub gen: String,
    /// Truncation caps.
    #[command(flatten)]
    pub caps: CapArgs,
}

/// Sign choices for the exchange identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SignChoice {
    /// Upper signs.
    Plus,
    /// Lower signs.
    Minus,
    /// Both.
    Both,
}

/// Scalar identities.
#[derive(Debug, Subcommand)]
pub enum CheckCmd {
    /// The exchange identity for `G`.
    Ge {
        /// The shift `a`, an exact rational such as `1/2`.
        #[arg(long, env = "SY_A", allow_hyphen_values = true)]
        a: String,
        /// Sign choice.
        #[arg(long, env = "SY_SIGN", value_enum, default_value = "both")]
        sign: SignChoice,
        /// Truncation order.
        #[arg(long, env = "SY_ORDER", default_value_t = 8, value_parser = clap::value_parser!(u32).range(2..))]
        order: u32,
        /// Parity factor, `1` for even pairs.
        #[arg(long, env = "SY_PARITY", default_value_t = 1, allow_negative_numbers = true)]
        parity: i8,
    },
}

/// Yangian operations.
#[derive(Debug, Subcommand)]
pub enum YangianCmd {
    /// Checks relation families on the normal-form engine.
    Verify {
        /// The diagram.
        #[command(flatten)]
        diagram: DiagramArg,
        /// `all`, `defining`, `minimal` or a comma-separated list of family names.
        #[arg(long, env = "SY_RELATIONS", default_value = "all")]
        relations: String,
        /// Truncation caps.
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Prints the coproduct of a generator.
    Delta {
        /// The diagram.
        #[command(flatten)]
        diagram: DiagramArg,
        /// Generator `h:i:r`, `x+:i:r` or `x-:i:r` with 1-based indices.
        #[arg(long, env = "SY_GEN")]
        gen: String,
        /// Truncation caps.
        #[command(flatten)]
        caps: CapArgs,
        /// Use the Hopf formulas also outside the minimalistic range.
        #[arg(long, env = "SY_ASSUME_HOPF")]
        assume_hopf: bool,
    },
}

/// Errors that end a command with exit status 2.
#[derive(Debug, Error)]
pub enum CliError {
    /// Invalid command-line input.
    #[error("{0}")]
    Usage(String),
    /// Root data failure, including diagram parse errors.
    #[error(transparent)]
    RootData(#[from] RootDataError),
    /// Enveloping algebra failure.
    #[error(transparent)]
    Enveloping(#[from] EnvelopingError),
    /// Yangian failure.
    #[error(transparent)]
    Yangian(#[from] YangianError),
    /// Loop algebra failure.
    #[error(transparent)]
    Loop(#[from] LoopError),
    /// Classification failure.
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    /// JSON serialization failure.
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(usize::from(jobs)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
