//! `canonical-bounds`: exact bounds on canonical degrees of curves on surfaces,
//! the Nagata-region explorer and the region figure as SVG.
//!
//! Exit codes: 0 success, 1 mathematical impossibility, 2 usage, 3 budget,
//! 4 I/O.

mod commands;
mod figure;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{
    BoundsArgs, Failure, Figure1Args, MiyaokaArgs, NagataCmd, SeshadriArgs, VojtaArgs,
};

const WORKERS_ENV: &str = "CANONICAL_BOUNDS_WORKERS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
    Svg,
}

#[derive(Parser, Debug)]
#[command(name = "canonical-bounds", version, about = "Exact canonical-degree bounds and Nagata-region tools")]
struct Cli {
    /// Output format; svg is only valid for figure1.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Canonical-degree, beta and genus bounds for negative and positive curves.
    Bounds(BoundsArgs),
    /// Evaluate the Miyaoka-type inequalities on a curve.
    Miyaoka(MiyaokaArgs),
    /// Region computations on the blow-up of the plane at n general points.
    Nagata {
        #[command(subcommand)]
        cmd: NagataCmd,
    },
    /// SVG of the hyperbola, its asymptote and the Nagata line.
    Figure1(Figure1Args),
    /// Lower bounds for the Vojta-type invariant Lambda_X.
    Vojta(VojtaArgs),
    /// Seshadri constant estimates for n general points.
    Seshadri(SeshadriArgs),
}

fn workers_from_env() -> Result<Option<usize>, Failure> {
    match std::env::var(WORKERS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(w) if w >= 1 => Ok(Some(w)),
            _ => Err(Failure::Usage(format!("{WORKERS_ENV}={v:?} is not a positive integer"))),
        },
        Err(_) => Ok(None),
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    if let Command::Figure1(args) = &cli.command {
        if !matches!(cli.format, None | Some(Format::Svg)) {
            return Err(Failure::Usage("figure1 only produces svg".into()));
        }
        if args.mmax == 0 {
            return Err(Failure::Usage("--mmax must be at least 1".into()));
        }
        return Ok(figure::figure1_svg(args.n, &args.beta0, args.mmax)?);
    }
    let report = match &cli.command {
        Command::Bounds(args) => commands::bounds(args)?,
        Command::Miyaoka(args) => commands::miyaoka(args)?,
        Command::Nagata { cmd } => commands::nagata(cmd, workers_from_env()?)?,
        Command::Vojta(args) => commands::vojta(args)?,
        Command::Seshadri(args) => commands::seshadri(args)?,
        Command::Figure1(_) => unreachable!(),
    };
    match cli.format.unwrap_or(Format::Table) {
        Format::Table => Ok(report.to_table()),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.to_json()).expect("json values serialize");
            s.push('\n');
            Ok(s)
        }
        Format::Csv => report.to_csv().map_err(|e| Failure::Io(e.to_string())),
        Format::Svg => Err(Failure::Usage("svg output is only available for figure1".into())),
    }
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure::Io(e.to_string()))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli).and_then(|text| emit(cli.out.as_ref(), &text)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.exit_code() as u8)
        }
    }
}
