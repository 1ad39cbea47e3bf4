//! Argument grammar and dispatch.

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use homdef::cochain::Flavor;
use homdef::exactlin::rational::Rational;
use homdef::homcore::Kind;

use crate::commands::{self, parse_catalog_args, Outcome};

#[derive(Debug, Parser)]
#[command(name = "homdef", version, about = "Exact checks for Hom-algebras, their cohomology and deformations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the defining identity of an algebra file.
    Check {
        path: PathBuf,
        /// Check under this kind instead of the declared one.
        #[arg(long, value_parser = commands::parse_kind)]
        kind: Option<Kind>,
        #[arg(long)]
        json: bool,
    },
    /// Dimensions of Z², B², H² and the derivation space.
    Cohomology {
        path: PathBuf,
        #[arg(long, value_parser = commands::parse_flavor)]
        flavor: Option<Flavor>,
        /// Also print bases.
        #[arg(long)]
        bases: bool,
        #[arg(long)]
        json: bool,
    },
    /// Formal deformations.
    Deform {
        #[command(subcommand)]
        command: DeformCommand,
    },
    /// Scan a graded family over an index window.
    Graded {
        /// qwitt, virq or witt-deformation
        family: String,
        #[arg(long, allow_hyphen_values = true, value_parser = commands::parse_rational)]
        q: Option<Rational>,
        #[arg(long)]
        orders: Option<usize>,
        /// Inclusive range lo..hi
        #[arg(long, allow_hyphen_values = true, value_parser = commands::parse_window)]
        window: Option<(i64, i64)>,
        #[arg(long)]
        json: bool,
    },
    /// Built-in instances.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
    /// Sample infinitesimal Hom-Lie deformations of sl2 and test whether the
    /// deformed bracket is Lie (experimental).
    Probe {
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum DeformCommand {
    /// Residual of the deformation equation at every order.
    Verify {
        path: PathBuf,
        /// Check orders 0..=N only.
        #[arg(long)]
        orders: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// List entries with their parameters and defaults.
    List {
        #[arg(long)]
        json: bool,
    },
    /// Print an instance. Parameters: --params k=v,... or --k v; --orders N.
    Show {
        name: String,
        #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Write an instance as an algebra or deformation file (--out PATH,
    /// stdout otherwise).
    Export {
        name: String,
        #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
        args: Vec<String>,
    },
}

pub fn run(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::Check { path, kind, json } => commands::check(&path, kind, json),
        Command::Cohomology {
            path,
            flavor,
            bases,
            json,
        } => commands::cohomology(&path, flavor, bases, json),
        Command::Deform {
            command: DeformCommand::Verify { path, orders, json },
        } => commands::deform_verify(&path, orders, json),
        Command::Graded {
            family,
            q,
            orders,
            window,
            json,
        } => commands::graded(&family, q, orders, window, json),
        Command::Catalog { command } => match command {
            CatalogCommand::List { json } => commands::catalog_list(json),
            CatalogCommand::Show { name, args } => {
                parse_catalog_args(&args).map_err(Outcome::usage).and_then(|a| commands::catalog_show(&name, &a))
            }
            CatalogCommand::Export { name, args } => {
                parse_catalog_args(&args).map_err(Outcome::usage).and_then(|a| commands::catalog_export(&name, &a))
            }
        },
        Command::Probe { samples, seed, json } => commands::probe(samples, seed, json),
    };
    result.unwrap_or_else(|e| e)
}
