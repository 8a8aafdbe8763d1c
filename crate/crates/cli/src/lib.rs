//! Command-line front end for the `eulerlab-core` algorithms.
//!
//! [`run`] parses arguments, executes one subcommand and writes its result
//! as text or as a single JSON line. Exit status: 0 on success, 1 when a
//! theorem's hypothesis (or a verification item) fails, 2 on malformed
//! input.

mod commands;
mod document;
mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use eulerlab_core::{Error, Result};

pub use commands::execute;
pub use document::Document;
pub use output::{
    EulerCheckOutput, FlagFindOutput, FlagRingOutput, LineBlock, Output, ReduceOutput, SympowOutput,
    TorusDecomposeOutput, TorusExampleOutput,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_HYPOTHESIS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Text,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FieldArg {
    F2,
    Q,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoremArg {
    FreeZeroSet,
    StiefelReal,
    StiefelComplex,
    TorusInterior,
    TorusAnnulus,
}

#[derive(Debug, Clone, Parser)]
#[command(
    name = "eulerlab",
    version,
    about = "Euler-class obstructions for equivariant maps"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = OutputMode::Text, global = true)]
    pub output: OutputMode,
    /// Seed for sampled checks.
    #[arg(long, env = "EULERLAB_SEED", default_value_t = 0, global = true)]
    pub seed: u64,
    /// Tolerance for floating-point checks.
    #[arg(long, default_value_t = 1e-9, global = true)]
    pub tol: f64,
    /// Input document path (`-` for standard input).
    #[arg(short = 'i', long = "input", global = true, conflicts_with = "doc")]
    pub input: Option<PathBuf>,
    /// Inline input document.
    #[arg(long, global = true)]
    pub doc: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Normal form of a polynomial modulo a triangular system.
    Reduce {
        #[arg(long, value_enum)]
        field: Option<FieldArg>,
        /// Relation g_j; repeat once per variable, in order.
        #[arg(short = 'g', long = "relation")]
        relations: Vec<String>,
        #[arg(short = 'p', long = "poly")]
        polynomial: Option<String>,
    },
    /// Whether e(V) survives modulo e(U_1), ..., e(U_l).
    EulerCheck,
    /// Subgroup F and a flag of E/F with dim U_i > dim V_i.
    FlagFind,
    /// Zero-set dimension bound with its checklist.
    Bound {
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        #[arg(short = 'n')]
        n: Option<usize>,
    },
    /// The flag-manifold ring, optionally verified.
    FlagRing {
        #[arg(short = 'n')]
        n: Option<usize>,
        #[arg(short = 'l')]
        l: Option<usize>,
        /// Bounds n_1, ..., n_l, comma separated.
        #[arg(long, value_delimiter = ',')]
        bounds: Option<Vec<usize>>,
        #[arg(long)]
        verify: bool,
        /// Random Q tables for the Euler-class item.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Symmetric power table, or the least k with a target.
    Sympow {
        #[arg(short = 'd')]
        d: Option<u64>,
    },
    /// Rational-line decomposition of a torus module.
    TorusDecompose,
    /// The circle map for (a, b, c) and its equivariance check.
    TorusExample {
        #[arg(short = 'a')]
        a: Option<u64>,
        #[arg(short = 'b')]
        b: Option<u64>,
        #[arg(short = 'c')]
        c: Option<u64>,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
}

impl Cli {
    /// The input document, empty when none was given.
    pub fn document(&self) -> Result<Document> {
        match (&self.input, &self.doc) {
            (Some(p), _) => Document::load(p),
            (None, Some(text)) => Document::parse(text),
            (None, None) => Ok(Document::default()),
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    if e.is_hypothesis() {
        EXIT_HYPOTHESIS
    } else {
        EXIT_INPUT
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(result) => {
            let text = match cli.output {
                OutputMode::Text => result.to_text(),
                OutputMode::Machine => result.to_machine() + "\n",
            };
            let _ = out.write_all(text.as_bytes());
            match result.failure() {
                Some(f) => {
                    let _ = writeln!(err, "hypothesis failed: {f}");
                    EXIT_HYPOTHESIS
                }
                None => EXIT_OK,
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
