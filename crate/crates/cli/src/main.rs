use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gabidulin_cli::commands::{self, CliError, Output};

/// Exact generalized Gabidulin codes over number fields.
///
/// SPEC arguments are spec files or `preset:<name>` for a built-in tower
/// (roots8, kummer, cyclotomic-<p>, cyclotomic-<p>-<u>).
#[derive(Parser)]
#[command(name = "gabidulin", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Field operations.
    #[command(subcommand)]
    Field(FieldCommand),
    /// Code operations.
    #[command(subcommand)]
    Code(CodeCommand),
    /// Word operations.
    #[command(subcommand)]
    Word(WordCommand),
    /// Recompute a built-in example: roots8, ranks8, kummer, cyclotomic-<p>.
    Repro { id: String },
    /// Encode the message word MSG with the code supported on --g.
    Encode {
        spec: String,
        msg: String,
        #[arg(long)]
        g: String,
    },
    /// Add a seeded random error of rank --t to WORD.
    Corrupt {
        spec: String,
        word: String,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Decode WORD with the dimension --k code supported on --g.
    Decode {
        spec: String,
        word: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum FieldCommand {
    /// Print the characteristic polynomial and admissibility of θ.
    Check { spec: String },
}

#[derive(Subcommand)]
enum CodeCommand {
    /// Random code, message and error; decode and compare.
    Roundtrip {
        spec: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum WordCommand {
    /// Print the weights w0 w1 w2 w3 of a word.
    Weights { spec: String, word: String },
}

fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Field(FieldCommand::Check { spec }) => commands::field_check(&spec),
        Command::Code(CodeCommand::Roundtrip { spec, n, k, t, seed }) => commands::roundtrip(&spec, n, k, t, seed),
        Command::Word(WordCommand::Weights { spec, word }) => commands::word_weights(&spec, &word),
        Command::Repro { id } => commands::repro(&id),
        Command::Encode { spec, msg, g } => commands::encode(&spec, &msg, &g),
        Command::Corrupt { spec, word, t, seed } => commands::corrupt(&spec, &word, t, seed),
        Command::Decode { spec, word, g, k } => commands::decode(&spec, &word, &g, k),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{}", out.stdout);
            let _ = std::io::stdout().flush();
            for line in &out.stderr {
                eprintln!("{line}");
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
