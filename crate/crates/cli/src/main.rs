//! `pbwdegen`: command-line front end for weighted PBW degenerations.

mod commands;
mod output;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "pbwdegen", version, about = "Weighted PBW degenerations of type-A flag varieties")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Rank parameter: the flag lives in C^n.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Sizes of the flag, e.g. `1,2,3` (default: the complete flag).
    #[arg(long, global = true)]
    pub d: Option<String>,
    /// Weight system file (JSON or text triangle).
    #[arg(long, global = true)]
    pub weights: Option<String>,
    /// Multidegree over `d`, e.g. `1,1,0`.
    #[arg(long, global = true)]
    pub mu: Option<String>,
    /// Total-degree bound for componentwise checks.
    #[arg(long, global = true)]
    pub degree_bound: Option<u32>,
    /// Worker threads for independent computations.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Lift the default n <= 4, degree <= 3 bounds on ideal computations.
    #[arg(long, global = true)]
    pub allow_large: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cone membership and faces of weight systems.
    #[command(subcommand)]
    Weights(WeightsCmd),
    /// Degrees s_I of the Plücker coordinates.
    Degrees,
    /// FFLV patterns.
    #[command(subcommand)]
    Fflv(FflvCmd),
    /// PBW semistandard tableaux and the tau/zeta bijection.
    #[command(subcommand)]
    Tableaux(TableauxCmd),
    /// Plücker relations and initial ideals.
    #[command(subcommand)]
    Ideal(IdealCmd),
    /// Degenerate representations.
    #[command(subcommand)]
    Rep(RepCmd),
    /// The tropical cone and its certificates.
    #[command(subcommand)]
    Trop(TropCmd),
    /// Runs the acceptance battery.
    Suite,
}

#[derive(Debug, Subcommand)]
pub enum WeightsCmd {
    /// Membership, interior and tight inequalities.
    Check {
        #[arg(long)]
        file: Option<String>,
    },
    /// The named weight systems for `--n`.
    Canonical,
    /// Prints a weight system as a text triangle or JSON.
    Show {
        #[arg(long)]
        file: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum FflvCmd {
    /// Lists the patterns of `Pi_lambda`.
    Patterns {
        #[arg(long)]
        lambda: String,
    },
    /// `|Pi_lambda|` and the Weyl dimension.
    Count {
        #[arg(long)]
        lambda: String,
    },
    /// Checks `Pi_lambda + Pi_other = Pi_{lambda+other}`.
    Minkowski {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        other: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum TableauxCmd {
    /// Lists the PBW semistandard tableaux of shape `lambda`.
    List {
        #[arg(long)]
        lambda: String,
    },
    /// Pattern of a tableau (JSON file with `shape` and `columns`).
    Tau {
        #[arg(long)]
        tableau: String,
    },
    /// Tableau of a pattern (JSON triangle file) of weight `lambda`.
    Zeta {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        lambda: String,
    },
    /// Verifies tau and zeta are inverse on all of shape `lambda`.
    RoundTrip {
        #[arg(long)]
        lambda: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum IdealCmd {
    /// Generates the Plücker relations for `--n` and `--d`.
    Gen,
    /// Basis of the initial component at `--mu` for `--weights`.
    Initial,
    /// Whether initial forms of the relations generate the initial ideal.
    CheckQuadratic,
    /// Whether regrading `--weights` by `--weights-b` gives the degeneration of B.
    CheckFaceDegeneration {
        #[arg(long)]
        weights_b: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum RepCmd {
    /// Dimension of the cyclic module of weight `lambda`.
    Dim {
        #[arg(long)]
        lambda: String,
    },
    /// Whether pattern monomials give a basis of the cyclic module.
    FflvCheck {
        #[arg(long)]
        lambda: String,
    },
    /// Whether the annihilator is spanned by non-pattern monomials.
    AnnihilatorCheck {
        #[arg(long)]
        lambda: String,
    },
    /// Whether each relation vanishes under the orbit substitution.
    PsiCheck {
        #[arg(long)]
        relations: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum TropCmd {
    /// The point h(A).
    Map,
    /// Cone conditions and a bounded monomial search.
    Check {
        #[arg(long)]
        point: String,
    },
    /// A relation certifying a failed inequality.
    Witness {
        #[arg(long)]
        point: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let argv: Vec<String> = std::env::args().collect();
    match commands::run(&cli) {
        Ok(outcome) => {
            let failed = outcome.verdicts.values().any(|v| !v);
            output::emit(&cli.global, &argv, &outcome, start.elapsed());
            if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
