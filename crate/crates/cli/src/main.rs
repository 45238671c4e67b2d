mod commands;
mod play;

use std::process::ExitCode;
use std::time::Duration;

use arlab_core::budget::SearchBudget;
use arlab_core::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATED: u8 = 1;
pub const EXIT_BUDGET: u8 = 2;
pub const EXIT_USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(name = "arlab", version, about = "Exact anti-Ramsey computations, constructions and games")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run an exact search for one quantity.
    Compute(commands::ComputeArgs),
    /// Check a named construction against its claim.
    Verify(commands::VerifyArgs),
    /// List every known bound for a pattern, optionally checking values.
    Bounds(commands::BoundsArgs),
    /// Play the online game, engine against engine or with a human.
    Play(play::PlayArgs),
    /// Bound intervals for paths, cycles, matchings and cliques.
    Table(commands::TableArgs),
    /// Convert between pattern names, graph6 and the JSON graph document.
    Convert(commands::ConvertArgs),
}

#[derive(Args, Debug, Clone)]
pub struct BudgetArgs {
    /// Search-tree nodes per search call.
    #[arg(long, default_value_t = 50_000_000)]
    max_nodes: u64,
    /// Wall-clock cap per search call, in seconds.
    #[arg(long)]
    time_limit: Option<f64>,
    /// Vertex cap for graph enumeration.
    #[arg(long, default_value_t = 16)]
    max_vertices: usize,
    /// Edge cap for graph enumeration.
    #[arg(long, default_value_t = 24)]
    max_edges: usize,
}

impl BudgetArgs {
    pub fn budget(&self) -> Result<SearchBudget, Error> {
        let time_limit = match self.time_limit {
            Some(t) if !(t.is_finite() && t > 0.0) => {
                return Err(Error::Usage("--time-limit must be a positive number of seconds".into()))
            }
            t => t.map(Duration::from_secs_f64),
        };
        Ok(SearchBudget {
            max_nodes: self.max_nodes,
            time_limit,
            max_colors: None,
            max_vertices: self.max_vertices,
            max_edges: self.max_edges,
        })
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    G6,
    Json,
    Key,
}

/// What a command prints and how it exits.
pub struct Report {
    pub text: String,
    pub json: String,
    pub code: u8,
}

impl Report {
    pub fn new(text: impl Into<String>, json: serde_json::Value, code: u8) -> Self {
        Report {
            text: text.into(),
            json: json.to_string(),
            code,
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Budget(_) => EXIT_BUDGET,
        Error::Usage(_) | Error::Parse { .. } | Error::Domain(_) => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    let result = match cli.command {
        Command::Compute(a) => commands::compute(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::Bounds(a) => commands::bounds(&a),
        Command::Play(a) => play::play(&a, cli.json),
        Command::Table(a) => commands::table(&a),
        Command::Convert(a) => commands::convert(&a),
    };
    match result {
        Ok(r) => {
            let out = if cli.json { &r.json } else { &r.text };
            if !out.is_empty() {
                println!("{}", out.trim_end());
            }
            ExitCode::from(r.code)
        }
        Err(e) => {
            eprintln!("arlab: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
