//! Thin command-line front end over the `opmeans` library.
//!
//! Exit codes: 0 success / no violations, 1 at least one violated
//! inequality on its stated regime, 2 input or configuration error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use opmeans::cli::{
    self, render_gap_text, CurveFn, Report, Suite, VerifyConfig,
};
use opmeans::means::MeanKind;

#[derive(Parser)]
#[command(name = "opmeans", version, about = "Matrix mean inequalities: verification, evaluation, curves, gap search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite over randomized instances
    Verify(VerifyArgs),
    /// Evaluate a weighted mean of two matrix JSON files
    Eval(EvalArgs),
    /// Emit CSV samples of a scalar function on a log grid
    Curve(CurveArgs),
    /// Scan the gap expression for both-sign witnesses per r
    GapSearch(GapSearchArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// one of: all, young, prop11, thm21, lemmas, rem22, cor27, kubo
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 400)]
    trials: usize,
    /// comma-separated matrix dimensions to sample
    #[arg(long, default_value = "1,2,3,4,5,6,7,8", value_delimiter = ',')]
    dims: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Args)]
struct EvalArgs {
    /// mean kind: am, gm, hm
    #[arg(long)]
    op: String,
    #[arg(long, default_value_t = 0.5)]
    nu: f64,
    /// path to matrix A (JSON: {"dim", "real", "imag"?})
    #[arg(long)]
    a: PathBuf,
    /// path to matrix B
    #[arg(long)]
    b: PathBuf,
    #[arg(long, default_value = "json")]
    format: String,
}

#[derive(Args)]
struct CurveArgs {
    /// one of: gap_expr, lemma_f, lemma_g, lemma_h, k_fn
    #[arg(long = "fn")]
    function: String,
    #[arg(long)]
    r: Option<f64>,
    #[arg(long)]
    nu: Option<f64>,
    #[arg(long, default_value_t = 1e-4)]
    t_lo: f64,
    #[arg(long, default_value_t = 1e4)]
    t_hi: f64,
    #[arg(long, default_value_t = 2001)]
    n: usize,
    /// write CSV here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GapSearchArgs {
    #[arg(long, default_value_t = 1.5)]
    r_lo: f64,
    #[arg(long, default_value_t = 1.5)]
    r_hi: f64,
    #[arg(long, default_value_t = 1)]
    r_steps: usize,
    #[arg(long, default_value_t = 1e-4)]
    t_lo: f64,
    #[arg(long, default_value_t = 1e4)]
    t_hi: f64,
    #[arg(long, default_value_t = 2001)]
    t_steps: usize,
    #[arg(long, default_value = "text")]
    format: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Verify(args) => {
            let suite: Suite = args.suite.parse()?;
            let cfg = VerifyConfig {
                suite: args.suite.clone(),
                trials: args.trials,
                dims: args.dims.clone(),
                seed: args.seed,
                tol: args.tol,
            };
            let report: Report = cli::run_verify(suite, &cfg)?;
            match args.format.as_str() {
                "json" => println!("{}", serde_json::to_string_pretty(&report)?),
                "text" => print!("{}", report.render_text()),
                other => anyhow::bail!("unknown format: {other}"),
            }
            Ok(if report.total_violations() > 0 {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Eval(args) => {
            let kind: MeanKind = args.op.parse()?;
            let json_output = match args.format.as_str() {
                "json" => true,
                "text" => false,
                other => anyhow::bail!("unknown format: {other}"),
            };
            let a = cli::load_matrix(&args.a)?;
            let b = cli::load_matrix(&args.b)?;
            println!("{}", cli::run_eval(kind, args.nu, &a, &b, json_output)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Curve(args) => {
            let function: CurveFn = args.function.parse()?;
            let csv = cli::run_curve(function, args.r, args.nu, args.t_lo, args.t_hi, args.n)?;
            match args.out {
                Some(path) => std::fs::write(&path, csv)?,
                None => print!("{csv}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::GapSearch(args) => {
            let report = cli::run_gap_search(
                args.r_lo,
                args.r_hi,
                args.r_steps,
                args.t_lo,
                args.t_hi,
                args.t_steps,
            )?;
            match args.format.as_str() {
                "json" => println!("{}", serde_json::to_string_pretty(&report)?),
                "text" => print!("{}", render_gap_text(&report)),
                other => anyhow::bail!("unknown format: {other}"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
