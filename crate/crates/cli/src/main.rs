use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use flagspin::{ClassicalFamily, ClassicalParams, FixtureDoc, FlagSpec, Painting};
use flagspin_cli::{
    parse_blocks, parse_rows, CSpaceReport, ClassicalReport, ConstructReport, FlagReport,
    RegressSummary,
};

/// Spin and metaplectic structures on flag manifolds and C-spaces.
#[derive(Parser)]
#[command(name = "flagspin", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Output {
    /// Emit one JSON object instead of the text report.
    #[arg(long)]
    json: bool,
    /// Render weights as `L_k` instead of `Λk`.
    #[arg(long)]
    ascii: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of a painted Dynkin diagram, e.g. `E7(1,2,3,5)`.
    Flag {
        spec: String,
        /// The listed nodes are black rather than white.
        #[arg(long)]
        black: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Compare closed form, string count and general Koszul vectors.
    Classical {
        /// One of A, B, C, D.
        family: String,
        #[arg(long, default_value_t = 0)]
        n0: usize,
        /// Block sizes, comma separated.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        blocks: String,
        #[arg(long, default_value_t = 0)]
        r: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Spin and c1 verdicts for a C-space over a flag manifold.
    Cspace {
        spec: String,
        /// Rows of t0 over the black nodes: `a,b,c;d,e,f`.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "construct")]
        t0: Option<String>,
        /// List the spin C-spaces obtained by killing even Koszul nodes.
        #[arg(long)]
        construct: bool,
        #[arg(long)]
        black: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Recompute every row of a fixture file.
    Regress {
        path: PathBuf,
        #[command(flatten)]
        out: Output,
    },
}

enum Failure {
    Usage(String),
    Mismatch,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch) => ExitCode::from(2),
    }
}

fn emit<T: Serialize>(out: Output, value: &T, text: impl FnOnce() -> String) -> Result<(), Failure> {
    if out.json {
        println!("{}", serde_json::to_string(value)?);
    } else {
        println!("{}", text());
    }
    Ok(())
}

fn painting(spec: &str, black: bool) -> Result<Painting, Failure> {
    let mut fs: FlagSpec = spec.parse()?;
    if black {
        fs = FlagSpec::from_black(fs.lie_type, &fs.white)?;
    }
    Ok(fs.painting()?)
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Flag { spec, black, out } => {
            let p = painting(&spec, black)?;
            let report = FlagReport::new(&p);
            emit(out, &report, || report.render(p.black(), out.ascii))
        }
        Command::Classical { family, n0, blocks, r, out } => {
            let family: ClassicalFamily = family.parse()?;
            let params = ClassicalParams::new(family, n0, parse_blocks(&blocks)?, r)?;
            let report = ClassicalReport::new(&params)?;
            emit(out, &report, || report.render(&params.black_nodes()))
        }
        Command::Cspace { spec, t0, construct, black, out } => {
            let p = painting(&spec, black)?;
            if construct {
                let report = ConstructReport::new(&p)?;
                return emit(out, &report, || report.render());
            }
            let t0 = t0.ok_or_else(|| Failure::Usage("give --t0 or --construct".into()))?;
            let report = CSpaceReport::new(&p, &parse_rows(&t0)?)?;
            emit(out, &report, || report.render())
        }
        Command::Regress { path, out } => {
            let doc = FixtureDoc::load(&path)?;
            let report = flagspin::fixtures::run_regression(&doc)?;
            let summary = RegressSummary::new(&report);
            emit(out, &summary, || summary.render())?;
            if summary.ok {
                Ok(())
            } else {
                Err(Failure::Mismatch)
            }
        }
    }
}
