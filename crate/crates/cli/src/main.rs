//! Batch command-line surface over the library: JSON in, JSON or aligned
//! text out. Exit status 0 on success, 1 on domain errors (with a
//! machine-readable error object on stderr), 2 on usage errors.

mod commands;
mod config;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{AppError, Output};
use config::{Config, Format};

#[derive(Parser)]
#[command(
    name = "superyang",
    version,
    about = "Exact computations with super Yangian l-weights"
)]
struct Cli {
    /// JSON config file; defaults to $SUPERYANG_CONFIG when set
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<std::path::PathBuf>,

    /// Output format (overrides the config file)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reflect a highest l-weight across an odd node
    Reflect {
        /// JSON file with {"parity", "lweight"}
        #[arg(long, value_name = "FILE")]
        lweight: std::path::PathBuf,
        /// 1-based node index
        #[arg(long)]
        node: usize,
    },
    /// Reflect a highest l-weight to a target parity sequence
    ReflectTo {
        #[arg(long, value_name = "FILE")]
        lweight: std::path::PathBuf,
        /// Target parity, e.g. "-++-"
        #[arg(long, allow_hyphen_values = true)]
        target: String,
    },
    /// Expand the rank-(1|1) irreducible character of a highest l-weight
    Qchar11 {
        #[arg(long, value_name = "FILE")]
        lweight: std::path::PathBuf,
    },
    /// Rewrite a rank-(1|1) q-character over the swapped parity sequence
    QcharReflect {
        /// JSON file with {"parity", "terms"}
        #[arg(long, value_name = "FILE")]
        qchar: std::path::PathBuf,
    },
    /// Enumerate tableaux of a skew shape and their character
    SkewChar {
        /// Outer partition, comma-separated (e.g. "5,3,3,3,3")
        #[arg(long)]
        outer: String,
        /// Inner partition, comma-separated; empty for a straight shape
        #[arg(long, default_value = "")]
        inner: String,
        /// Parity sequence, e.g. "+-+-"
        #[arg(long, allow_hyphen_values = true)]
        parity: String,
        /// Print only the number of tableaux
        #[arg(long, group = "mode")]
        count: bool,
        /// List the tableaux themselves
        #[arg(long, group = "mode")]
        list_tableaux: bool,
        /// Print the character (the default)
        #[arg(long = "char", group = "mode")]
        character: bool,
        /// Override the tableau cap from the config
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Bethe ansatz systems
    #[command(subcommand)]
    Bae(BaeCommand),
    /// Rational difference operators
    #[command(subcommand)]
    Diffop(DiffopCommand),
    /// Finiteness criterion at the standard parity sequence
    FiniteDim {
        #[arg(long, value_name = "FILE")]
        lweight: std::path::PathBuf,
    },
}

#[derive(Subcommand)]
enum BaeCommand {
    /// Check the equations: divisibility at odd nodes, residuals at rational
    /// roots of each y_i
    Check {
        /// JSON file with {"parity", "zeta", "y"}
        #[arg(long, value_name = "FILE")]
        system: std::path::PathBuf,
        /// Restrict to one node
        #[arg(long)]
        node: Option<usize>,
    },
    /// Fermionic reproduction at an odd node
    Reproduce {
        #[arg(long, value_name = "FILE")]
        system: std::path::PathBuf,
        #[arg(long)]
        node: usize,
    },
}

#[derive(Subcommand)]
enum DiffopCommand {
    /// Compare the operators of two systems up to a truncation order
    Compare {
        #[arg(long, value_name = "FILE")]
        before: std::path::PathBuf,
        #[arg(long, value_name = "FILE")]
        after: std::path::PathBuf,
        /// Truncation order (overrides the config)
        #[arg(long)]
        order: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match Config::load(cli.config.as_deref(), cli.format) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {}", msg);
            return ExitCode::from(2);
        }
    };

    let result = match cli.command {
        Command::Reflect { lweight, node } => commands::reflect(&config, &lweight, node),
        Command::ReflectTo { lweight, target } => commands::reflect_to(&config, &lweight, &target),
        Command::Qchar11 { lweight } => commands::qchar11(&config, &lweight),
        Command::QcharReflect { qchar } => commands::qchar_reflect(&config, &qchar),
        Command::SkewChar {
            outer,
            inner,
            parity,
            count,
            list_tableaux,
            character: _,
            cap,
        } => commands::skew_char(&config, &outer, &inner, &parity, count, list_tableaux, cap),
        Command::Bae(BaeCommand::Check { system, node }) => {
            commands::bae_check(&config, &system, node)
        }
        Command::Bae(BaeCommand::Reproduce { system, node }) => {
            commands::bae_reproduce(&config, &system, node)
        }
        Command::Diffop(DiffopCommand::Compare {
            before,
            after,
            order,
        }) => commands::diffop_compare(&config, &before, &after, order),
        Command::FiniteDim { lweight } => commands::finite_dim(&config, &lweight),
    };

    match result {
        Ok(Output::Text(text)) => {
            println!("{}", text);
            ExitCode::SUCCESS
        }
        Err(AppError { name, message }) => {
            let err = serde_json::json!({ "error": name, "message": message });
            eprintln!("{}", err);
            ExitCode::from(1)
        }
    }
}
