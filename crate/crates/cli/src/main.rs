use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zn_cycle_index::Format;
use zn_cycle_index_cli::{parse_modulus, run, CliRequest, Command, Method};

/// Cycle index of the unit group of Z_n acting on Z_n by multiplication.
#[derive(Parser)]
#[command(name = "zn-cycle-index", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the cycle index
    Index {
        #[command(flatten)]
        common: Common,
        /// Route to use; defaults to all for n <= 256, formula above
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
    },
    /// List the orbits of the action, one per divisor d of n
    Orbits(Common),
    /// Cycle type of multiplication by a unit a
    Ctype {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        a: u64,
    },
    /// Number of subsets of Z_n up to the action
    CountSubsets {
        #[command(flatten)]
        common: Common,
        /// Only subsets of this size
        #[arg(long, conflicts_with = "by_size")]
        k: Option<u64>,
        /// Break the count down by subset size
        #[arg(long)]
        by_size: bool,
    },
    /// Number of orbits on Z_n, by Burnside's lemma
    CountOrbits(Common),
    /// Check that all applicable routes give the same cycle index
    Verify(Common),
}

#[derive(Args)]
struct Common {
    /// Modulus, decimal or factored such as 2^3*5
    #[arg(long, value_parser = parse_modulus)]
    n: u64,
    #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Formula,
    Blocks,
    Oracle,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Plain,
    Json,
    Latex,
}

fn request(cmd: Cmd) -> CliRequest {
    let (command, common) = match &cmd {
        Cmd::Index { common, .. } => (Command::Index, common),
        Cmd::Orbits(c) => (Command::Orbits, c),
        Cmd::Ctype { common, .. } => (Command::Ctype, common),
        Cmd::CountSubsets { common, .. } => (Command::CountSubsets, common),
        Cmd::CountOrbits(c) => (Command::CountOrbits, c),
        Cmd::Verify(c) => (Command::Verify, c),
    };
    let mut req = CliRequest::new(command, common.n);
    req.format = match common.format {
        FormatArg::Plain => Format::Plain,
        FormatArg::Json => Format::Json,
        FormatArg::Latex => Format::Latex,
    };
    match cmd {
        Cmd::Index { method, .. } => {
            req.method = method.map(|m| match m {
                MethodArg::Formula => Method::Formula,
                MethodArg::Blocks => Method::Blocks,
                MethodArg::Oracle => Method::Oracle,
                MethodArg::All => Method::All,
            })
        }
        Cmd::Ctype { a, .. } => req.a = Some(a),
        Cmd::CountSubsets { k, by_size, .. } => {
            req.k = k;
            req.by_size = by_size;
        }
        _ => {}
    }
    req
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&request(cli.command));
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
