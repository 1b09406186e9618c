use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use omlogic_cli::commands;

/// Finite algebraic-logic workbench: orthomodular lattices, truth-value
/// algebras, first-order semantics, and Hilbert-style proof checking.
#[derive(Parser)]
#[command(name = "omlogic", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the orthomodular-lattice axioms (i)-(v) of an algebra file,
    /// plus the all-pairs compatibility test (vi)
    CheckAlgebra {
        path: PathBuf,
        /// also require (vi): every pair compatible (a Boolean algebra)
        #[arg(long)]
        boolean: bool,
        #[arg(long)]
        json_in: bool,
        #[arg(long)]
        json_out: bool,
    },
    /// Print the center of an orthomodular lattice
    Center {
        path: PathBuf,
        #[arg(long)]
        json_in: bool,
        #[arg(long)]
        json_out: bool,
    },
    /// Decompose an orthomodular lattice into irreducible factors
    Factorize {
        path: PathBuf,
        #[arg(long)]
        json_in: bool,
        #[arg(long)]
        json_out: bool,
    },
    /// Enumerate all orthomodular lattices up to a size cap, up to
    /// isomorphism
    Enumerate {
        n: usize,
        #[arg(long)]
        json_out: bool,
    },
    /// Evaluate a formula in a structure; universe constants are usable
    Eval {
        structure: PathBuf,
        formula: String,
        /// emit {value, holds, closure_order} as JSON
        #[arg(long, visible_alias = "json-out")]
        json: bool,
        #[arg(long)]
        json_in: bool,
        #[arg(long)]
        allow_nonsurjective: bool,
    },
    /// Check whether a structure models every formula of a file
    ModelCheck {
        structure: PathBuf,
        gamma: PathBuf,
        #[arg(long)]
        json_in: bool,
        #[arg(long)]
        json_out: bool,
        #[arg(long)]
        allow_nonsurjective: bool,
    },
    /// Verify that a formula holds in every model of gamma exactly when it
    /// holds in every irreducible model; or run seeded random trials
    VerifyIrreducible {
        semantics: Option<PathBuf>,
        gamma: Option<PathBuf>,
        formula: Option<String>,
        /// complete the semantics under factor structures first
        #[arg(long)]
        saturate: bool,
        /// run this many random trials instead of checking files
        #[arg(long)]
        trials: Option<usize>,
        /// random seed (the OMLOGIC_SEED environment variable overrides)
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// trial generator caps
        #[arg(long, default_value_t = 3)]
        max_universe: usize,
        #[arg(long, default_value_t = 8)]
        max_algebra: usize,
        #[arg(long, default_value_t = 3)]
        max_depth: usize,
        #[arg(long, default_value_t = 2)]
        max_gamma: usize,
        #[arg(long)]
        json_out: bool,
        #[arg(long)]
        allow_nonsurjective: bool,
    },
    /// Check a proof file against a deduction system
    ProofCheck {
        system: PathBuf,
        hypotheses: PathBuf,
        proof: PathBuf,
        /// goal formula (defaults to the final step)
        #[arg(long)]
        goal: Option<String>,
        /// clause (ii) read literally: cited rules must be metavariable-free
        #[arg(long)]
        literal_rules: bool,
        /// after acceptance, look for models of the hypotheses in this
        /// semantics file where the goal fails
        #[arg(long)]
        sound_check: Option<PathBuf>,
        #[arg(long)]
        json_out: bool,
    },
}

fn run(cli: Cli) -> Result<i32, commands::CliError> {
    match cli.command {
        Command::CheckAlgebra {
            path,
            boolean,
            json_in,
            json_out,
        } => commands::check_algebra(&path, boolean, json_in, json_out),
        Command::Center {
            path,
            json_in,
            json_out,
        } => commands::center(&path, json_in, json_out),
        Command::Factorize {
            path,
            json_in,
            json_out,
        } => commands::factorize(&path, json_in, json_out),
        Command::Enumerate { n, json_out } => commands::enumerate(n, json_out),
        Command::Eval {
            structure,
            formula,
            json,
            json_in,
            allow_nonsurjective,
        } => commands::eval(&structure, &formula, allow_nonsurjective, json_in, json),
        Command::ModelCheck {
            structure,
            gamma,
            json_in,
            json_out,
            allow_nonsurjective,
        } => commands::model_check(&structure, &gamma, allow_nonsurjective, json_in, json_out),
        Command::VerifyIrreducible {
            semantics,
            gamma,
            formula,
            saturate,
            trials,
            seed,
            max_universe,
            max_algebra,
            max_depth,
            max_gamma,
            json_out,
            allow_nonsurjective,
        } => {
            // the environment variable takes priority over the flag
            let seed = match std::env::var("OMLOGIC_SEED") {
                Ok(v) => v.parse().map_err(|_| {
                    commands::CliError::Input(format!("OMLOGIC_SEED is not an integer: `{v}`"))
                })?,
                Err(_) => seed,
            };
            let caps = commands::TrialCaps {
                max_universe,
                max_algebra_size: max_algebra,
                max_depth,
                max_gamma,
            };
            commands::verify_irreducible(
                semantics.as_deref(),
                gamma.as_deref(),
                formula.as_deref(),
                saturate,
                trials,
                seed,
                caps,
                allow_nonsurjective,
                json_out,
            )
        }
        Command::ProofCheck {
            system,
            hypotheses,
            proof,
            goal,
            literal_rules,
            sound_check,
            json_out,
        } => commands::proof_check(
            &system,
            &hypotheses,
            &proof,
            goal.as_deref(),
            literal_rules,
            sound_check.as_deref(),
            json_out,
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code() as u8)
        }
    }
}
