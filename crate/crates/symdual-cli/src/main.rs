mod commands;
mod errors;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::output::Format;

#[derive(Parser, Debug)]
#[command(name = "symdual", version, about = "Exact dual sequences, inverse systems and symbolic-power invariants")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "table")]
    pub format: Format,
    /// Seed for every random choice; recorded in the report.
    #[arg(long, global = true, default_value_t = symdual::verify::DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Transforms and growth of integer sequences.
    #[command(subcommand)]
    Seq(SeqCmd),
    /// Filtrations of ideals and their inverse systems.
    #[command(subcommand)]
    Filt(FiltCmd),
    /// Fat points, jets and regularity.
    #[command(subcommand)]
    Points(PointsCmd),
    /// Monomial ideals and the symbolic polyhedron.
    #[command(subcommand)]
    Monomial(MonomialCmd),
    /// Run the acceptance checks grouped under a section tag.
    Verify {
        /// One of sec2, sec3, sec4, appA, appB, sec5, sec6.
        tag: String,
    },
}

#[derive(Args, Debug, Clone)]
pub struct SeqInput {
    /// Sequence literal: a JSON list (start 1) or {"start": n0, "values": [...]}.
    #[arg(long)]
    pub alpha: String,
    /// Reference sequence for the relative transforms (default: the identity).
    #[arg(long)]
    pub beta: Option<String>,
    /// Declare alpha nondecreasing beyond the window.
    #[arg(long)]
    pub nondecreasing: bool,
    /// Tail bound alpha_d >= slope*d + offset beyond the window (rational, e.g. 1/2).
    #[arg(long)]
    pub tail_slope: Option<String>,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub tail_offset: String,
}

#[derive(Subcommand, Debug)]
pub enum SeqCmd {
    /// The right transform sup{d : alpha_d <= beta_n}.
    #[command(alias = "right-transform")]
    Right {
        #[command(flatten)]
        input: SeqInput,
        #[arg(long, default_value_t = 10)]
        nmax: i64,
    },
    /// The left transform inf{d : alpha_d >= beta_n}.
    #[command(alias = "left-transform")]
    Left {
        #[command(flatten)]
        input: SeqInput,
        #[arg(long, default_value_t = 10)]
        nmax: i64,
    },
    /// Subadditivity and superadditivity on the window.
    Class {
        #[command(flatten)]
        input: SeqInput,
    },
    /// One-sided bound on lim alpha_n / n.
    Growth {
        #[command(flatten)]
        input: SeqInput,
        #[arg(long, value_enum)]
        kind: GrowthArg,
    },
    /// The shifted sequence alpha[k]_n = alpha_{n+k}.
    Shift {
        #[command(flatten)]
        input: SeqInput,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
}

#[derive(Debug, Clone, Copy, clap::ValueEnum)]
pub enum GrowthArg {
    Sub,
    Super,
}

#[derive(Args, Debug, Clone)]
pub struct JsonInput {
    /// Path to a JSON input file.
    #[arg(long, conflicts_with = "json")]
    pub file: Option<std::path::PathBuf>,
    /// Inline JSON input.
    #[arg(long)]
    pub json: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum FiltCmd {
    /// Dimensions of (I_n)_d and the nesting/graded checks.
    Build {
        #[command(flatten)]
        input: JsonInput,
        #[arg(long, default_value_t = 4)]
        n_max: u32,
        #[arg(long, default_value_t = 6)]
        d_cap: u32,
    },
    /// Whether D(I_n) lies in I_{n-|D|} for the generating operators.
    CheckDc {
        #[command(flatten)]
        input: JsonInput,
        #[arg(long, default_value_t = 4)]
        n_max: u32,
        #[arg(long, default_value_t = 6)]
        d_cap: u32,
    },
    /// Degree pieces of L^s, its ideal property and finite length.
    Ltransform {
        #[command(flatten)]
        input: JsonInput,
        #[arg(long, default_value_t = 1)]
        s: u32,
        #[arg(long, default_value_t = 8)]
        d_cap: u32,
    },
    /// alpha and beta = soc(D/L^s) with the transform identities between them.
    Duality {
        #[command(flatten)]
        input: JsonInput,
        #[arg(long, default_value_t = 4)]
        n_max: u32,
        #[arg(long, default_value_t = 4)]
        s_max: u32,
        #[arg(long, default_value_t = 24)]
        d_cap: u32,
    },
}

#[derive(Args, Debug, Clone)]
pub struct PointsInput {
    #[command(flatten)]
    pub input: JsonInput,
    /// Characteristic, overriding the "char" field of the input.
    #[arg(long)]
    pub char: Option<u64>,
}

#[derive(Subcommand, Debug)]
pub enum PointsCmd {
    /// Hilbert function, multiplicity, regularity and initial degree of I^(m).
    Report {
        #[command(flatten)]
        points: PointsInput,
        #[arg(long, default_value_t = 3)]
        m_max: u32,
        #[arg(long, default_value_t = 12)]
        d_cap: u32,
    },
    /// Jet separation indices, directly and from the regularity.
    Jets {
        #[command(flatten)]
        points: PointsInput,
        #[arg(long, default_value_t = 6)]
        d_max: u32,
        /// Largest jet order tried; defaults to d + 1.
        #[arg(long)]
        k_cap: Option<u32>,
    },
    /// Regularity and jet sequences with their transform and additivity checks.
    Asymptotic {
        #[command(flatten)]
        points: PointsInput,
        #[arg(long, default_value_t = 8)]
        d_cap: u32,
        #[arg(long, default_value_t = 6)]
        m_cap: u32,
    },
    /// Random configurations against the small-point-count tables.
    Nagata {
        #[arg(long)]
        r: u64,
        #[arg(long = "N")]
        n: u64,
        #[arg(long, default_value_t = 1)]
        trials: u32,
        #[arg(long, default_value_t = 4)]
        m_cap: u32,
        #[arg(long, default_value_t = 24)]
        d_cap: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum MonomialCmd {
    /// Vertices and invariants of the symbolic polyhedron.
    Sp {
        #[command(flatten)]
        input: JsonInput,
    },
    /// Minimal generators of I^(n).
    Symbolic {
        #[command(flatten)]
        input: JsonInput,
        #[arg(long)]
        n: u32,
    },
    /// lambda_n and beta_n windows for the containment problem.
    Resurgence {
        #[command(flatten)]
        input: JsonInput,
        #[arg(long, default_value_t = 3)]
        n_max: u32,
        #[arg(long, default_value_t = 24)]
        d_cap: u32,
    },
    /// beta^nu_n for the monomial valuation with weight w.
    Betanu {
        #[command(flatten)]
        input: JsonInput,
        /// Comma-separated weight, one entry per variable.
        #[arg(long)]
        weight: String,
        #[arg(long, default_value_t = 3)]
        n_max: u32,
        #[arg(long, default_value_t = 24)]
        d_cap: u32,
    },
    /// Whether x^a lies in the integral closure of I^n.
    Closure {
        #[command(flatten)]
        input: JsonInput,
        /// Comma-separated exponent vector.
        #[arg(long)]
        exponent: String,
        #[arg(long)]
        n: u32,
    },
}

fn configure_threads() {
    if let Some(n) = std::env::var("SYMDUAL_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        if n >= 1 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            ExitCode::from(report.exit)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
