mod commands;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::Settings;
use report::Format;

/// Exact analysis of finite commutative rings and finite Boolean algebras.
#[derive(Parser)]
#[command(name = "regulus", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    /// Largest ring to construct.
    #[arg(long, global = true)]
    max_card: Option<usize>,

    /// Coefficient field for function rings, e.g. `GF(3)`.
    #[arg(long, global = true)]
    field: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Units, idempotents, nilradical, regularity and spectrum.
    Analyze { ring: String },
    /// The von Neumann regular hull and its unit map.
    Hull { ring: String },
    /// The Boolean algebra of idempotents and the map into clopens.
    Bool { ring: String },
    /// The residue-field presheaf on the constructible basis.
    Sheaf { ring: String },
    /// Stone space and function-ring representation of `2^n` or `{a,b,..}`.
    Stone { algebra: String },
    /// Represent a Boolean hom, given by its dual atom map, as a ring hom.
    RepresentHom { domain: String, codomain: String, atom_map: String },
    /// Run every invariant on one ring or on the built-in corpus.
    Check {
        ring: Option<String>,
        /// `all` runs the corpus.
        #[arg(long)]
        suite: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let settings = Settings { max_card: cli.max_card, field: cli.field.clone() };
    let result = match &cli.command {
        Command::Analyze { ring } => commands::analyze(&settings, ring),
        Command::Hull { ring } => commands::hull(&settings, ring),
        Command::Bool { ring } => commands::boolean(&settings, ring),
        Command::Sheaf { ring } => commands::sheaf(&settings, ring),
        Command::Stone { algebra } => commands::stone(&settings, algebra),
        Command::RepresentHom { domain, codomain, atom_map } => {
            commands::represent_hom(&settings, domain, codomain, atom_map)
        }
        Command::Check { ring, suite } => {
            if let Some(s) = suite.as_deref().filter(|s| *s != "all") {
                eprintln!("error: unknown suite `{s}`");
                return ExitCode::from(2);
            }
            if ring.is_none() && suite.is_none() {
                eprintln!("error: give a ring or `--suite all`");
                return ExitCode::from(2);
            }
            commands::check(&settings, ring.as_deref(), suite.is_some())
        }
    };
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match report.render(cli.format) {
        Ok(text) => print!("{text}"),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    if report.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
