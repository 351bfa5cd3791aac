use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use xmod::app::{self, Axioms, Format, Method, Outcome, RunConfig};
use xmod::{CliError, SCHEMAS};

/// Representation theory of finite crossed modules.
#[derive(Parser)]
#[command(name = "xmod", version)]
struct Cli {
    /// Print the JSON Schemas of all inputs and outputs and exit.
    #[arg(long)]
    schema: bool,
    /// Output format; `chartable` defaults to text, everything else to json.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Seed for the randomized splitting of irreducible representations.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Bound on group orders.
    #[arg(long, global = true, default_value_t = 512)]
    max_order: usize,
    /// Bound on |G||H|.
    #[arg(long, global = true, default_value_t = 2500)]
    max_dim: usize,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the crossed-module axioms.
    Validate { xmod: PathBuf },
    /// Verify the Hopf, R-matrix and ribbon axioms of D(G,H).
    Verify {
        xmod: PathBuf,
        #[arg(
            long,
            value_enum,
            value_delimiter = ',',
            default_value = "hopf,rmatrix,ribbon"
        )]
        axioms: Vec<Axioms>,
    },
    /// Block character table.
    Chartable { xmod: PathBuf },
    /// Centre basis and central primitive idempotents.
    Center { xmod: PathBuf },
    /// Fusion coefficients.
    Fusion {
        xmod: PathBuf,
        #[arg(long, value_enum, default_value = "char")]
        method: Method,
    },
    /// Invariant of a colored tangle or braid closure.
    Invariant {
        xmod: PathBuf,
        #[arg(long, conflicts_with = "braid", required_unless_present = "braid")]
        tangle: Option<PathBuf>,
        #[arg(long)]
        braid: Option<PathBuf>,
        /// Index into the group of ribbon choices.
        #[arg(long, default_value_t = 0)]
        ribbon: usize,
    },
    /// Simple modules with dimensions, duals and twists.
    Simples { xmod: PathBuf },
}

fn run(cli: &Cli, command: &Command) -> Result<Outcome, CliError> {
    let default = match command {
        Command::Chartable { .. } => Format::Text,
        _ => Format::Json,
    };
    let cfg = RunConfig {
        format: cli.format.unwrap_or(default),
        seed: cli.seed,
        max_order: cli.max_order,
        max_dim: cli.max_dim,
    };
    match command {
        Command::Validate { xmod } => app::validate(xmod, &cfg),
        Command::Verify { xmod, axioms } => app::verify(xmod, axioms, &cfg),
        Command::Chartable { xmod } => app::chartable(xmod, &cfg),
        Command::Center { xmod } => app::center(xmod, &cfg),
        Command::Fusion { xmod, method } => app::fusion(xmod, *method, &cfg),
        Command::Invariant {
            xmod,
            tangle,
            braid,
            ribbon,
        } => match (tangle, braid) {
            (Some(t), _) => app::invariant_tangle(xmod, t, *ribbon, &cfg),
            (None, Some(b)) => app::invariant_braid(xmod, b, *ribbon, &cfg),
            (None, None) => Err(CliError::Parse(
                "one of --tangle or --braid is required".into(),
            )),
        },
        Command::Simples { xmod } => app::simples_cmd(xmod, &cfg),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.schema {
        print!("{}", SCHEMAS);
        return ExitCode::SUCCESS;
    }
    let Some(command) = &cli.command else {
        eprintln!("no command given; see --help");
        return ExitCode::from(2);
    };
    match run(&cli, command) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&e.to_json()).expect("serializable")
            );
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
