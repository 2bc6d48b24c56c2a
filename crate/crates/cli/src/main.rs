use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser)]
#[command(
    name = "ga-bsc",
    version,
    about = "Binary spatter codes as geometric-algebra blades"
)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a seeded symbol table.
    Gen(GenArgs),
    /// Bind role=filler pairs into a record.
    Encode(EncodeArgs),
    /// Unbind roles from a record and clean up.
    Decode(DecodeArgs),
    /// Check the Pat Smith worked example.
    Verify(VerifyArgs),
    /// Time the sign kernel against the quadratic reference.
    Bench(BenchArgs),
    /// Dump the Pauli-matrix image of a blade as JSON.
    Matrix(MatrixArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Codec {
    Ga,
    Classic,
}

#[derive(Args)]
pub struct GenArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// Filler support width; fillers live on the first k positions.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_delimiter = ',', default_value = "r1,r2,r3")]
    pub roles: Vec<String>,
    #[arg(long, value_delimiter = ',', default_value = "f1,f2,f3")]
    pub fillers: Vec<String>,
    /// Also write the fillers as a clean-up memory file.
    #[arg(long)]
    pub memory: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct EncodeArgs {
    #[arg(long)]
    pub table: PathBuf,
    /// Comma-separated role=filler pairs.
    #[arg(long, value_delimiter = ',', required = true)]
    pub pairs: Vec<String>,
    /// One weight per pair (GA codec only).
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub weights: Option<Vec<f64>>,
    #[arg(long, value_enum, default_value_t = Codec::Ga)]
    pub codec: Codec,
    /// Tie-break seed for the classic majority vote.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct DecodeArgs {
    #[arg(long)]
    pub table: PathBuf,
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Roles to query; every role in the table when omitted.
    #[arg(long, value_delimiter = ',')]
    pub role: Vec<String>,
    /// Clean-up memory file; the table's fillers when omitted.
    #[arg(long)]
    pub memory: Option<PathBuf>,
    /// Results with |score| below this are flagged. Classic scores are
    /// 1 - 2 d / n.
    #[arg(long, default_value_t = 0.25)]
    pub threshold: f64,
    /// Expected codec; read from the record when omitted.
    #[arg(long, value_enum)]
    pub codec: Option<Codec>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Tensor factors of the matrix oracle; the fixture needs 4.
    #[arg(long, default_value_t = 4)]
    pub m: usize,
    /// Table to check in place of the built-in fixture.
    #[arg(long)]
    pub table: Option<PathBuf>,
}

#[derive(Args)]
pub struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_values_t = [1024, 10_000])]
    pub n: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args)]
pub struct MatrixArgs {
    /// Blade literal: a bit string, or hex together with --n.
    #[arg(long)]
    pub blade: String,
    #[arg(long)]
    pub n: Option<usize>,
    /// Tensor factors; ceil(n / 2) when omitted.
    #[arg(long)]
    pub m: Option<usize>,
}

/// What a command reports back to `main`.
pub enum Outcome {
    Success,
    CheckFailed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Gen(args) => commands::gen(args, cli.json),
        Command::Encode(args) => commands::encode(args, cli.json),
        Command::Decode(args) => commands::decode(args, cli.json),
        Command::Verify(args) => commands::verify(args, cli.json),
        Command::Bench(args) => commands::bench(args, cli.json),
        Command::Matrix(args) => commands::matrix(args),
    };
    match result {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
