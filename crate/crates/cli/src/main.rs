use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use arithphase::arith::TableFunction;
use arithphase_cli::figures::{run_figure, FigureId, FigureJob};
use arithphase_cli::table::run_table;
use arithphase_cli::{configure_threads, CliError};
use clap::{Parser, Subcommand, ValueEnum};

const AFTER_HELP: &str = "\
Tables: totient, moebius, mangoldt, mangoldt_b, carmichael, ramanujan (--q), kloosterman (--q)
Figures: fig1 .. fig10; `arithphase fig --help` lists them with their datasets
Threads: set ARITHPHASE_THREADS to size the worker pool; output does not depend on it
Exit status: 0 success, 1 internal failure, 2 bad arguments";

#[derive(Debug, Parser)]
#[command(name = "arithphase", version, about = "Arithmetic functions and figure datasets as CSV", after_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableName {
    Totient,
    Moebius,
    Mangoldt,
    #[value(name = "mangoldt_b")]
    MangoldtB,
    Carmichael,
    Ramanujan,
    Kloosterman,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tabulate an arithmetic function as `n,value` rows
    Table {
        function: TableName,
        /// Largest argument
        #[arg(long, visible_alias = "nmax")]
        max: u64,
        /// Smallest argument; defaults to 0 for the modular sums and 1 otherwise
        #[arg(long)]
        min: Option<u64>,
        /// Modulus of the ramanujan and kloosterman tables
        #[arg(long)]
        q: Option<u64>,
        /// Output file; standard output when absent
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the dataset behind one figure
    Fig {
        figure: FigureId,
        /// Parameter overrides as key=value pairs
        #[arg(long, num_args = 1.., value_parser = parse_key_value)]
        params: Vec<(String, String)>,
        /// Output file; standard output when absent
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_key_value(s: &str) -> Result<(String, String), String> {
    match s.split_once('=') {
        Some((k, v)) if !k.is_empty() => Ok((k.to_string(), v.to_string())),
        _ => Err(format!("expected key=value, got {s:?}")),
    }
}

fn with_output(
    path: Option<&PathBuf>,
    body: impl FnOnce(&mut dyn Write) -> Result<(), CliError>,
) -> Result<(), CliError> {
    match path {
        Some(p) => {
            let file = File::create(p).map_err(|e| CliError::Internal(format!("{}: {e}", p.display())))?;
            let mut w = BufWriter::new(file);
            body(&mut w)?;
            w.flush().map_err(|e| CliError::Internal(format!("{}: {e}", p.display())))
        }
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            body(&mut w)?;
            w.flush().map_err(|e| CliError::Internal(e.to_string()))
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    configure_threads()?;
    match cli.command {
        Command::Table { function, max, min, q, out } => {
            let name = function.to_possible_value().expect("named variant").get_name().to_string();
            let function = TableFunction::from_name(&name, q)?;
            with_output(out.as_ref(), |mut w| run_table(function, min, max, &mut w))
        }
        Command::Fig { figure, params, out } => {
            let job = FigureJob::new(figure, &params)?;
            with_output(out.as_ref(), |mut w| run_figure(&job, &mut w))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("arithphase: error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
