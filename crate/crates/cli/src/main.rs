//! `dstab`: certify, falsify and inspect matrix D-stability from the shell.

mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use dstab_core::certifier::{Seed, TestSelection};
use dstab_core::falsifier::FalsifyConfig;
use dstab_core::harness::{
    check, expand_dump, minor_cap_from_env, minors_dump, run_experiment, CheckConfig, DepthChoice,
    ExperimentConfig, GeneratorStyle,
};
use dstab_core::Matrix;

/// Exit status for usage and I/O errors.
const USAGE_ERROR: u8 = 3;

#[derive(Parser)]
#[command(name = "dstab", version, about = "Exact D-stability certification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline on a matrix file and report a verdict.
    Check {
        file: PathBuf,
        /// I, II or both.
        #[arg(long, default_value = "both")]
        test: TestSelection,
        /// Tree depth, or `auto` for every depth from 0 to n-2.
        #[arg(long, default_value = "auto")]
        depth: DepthChoice,
        /// Certify nodes in at most two variables by discriminant analysis.
        #[arg(long)]
        refine: bool,
        /// Retry on this many random simultaneous permutations.
        #[arg(long, default_value_t = 0)]
        permutations: usize,
        /// Sample this many positive diagonals looking for a counterexample.
        #[arg(long)]
        falsify: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Certification rate over random stable matrices.
    Experiment {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Generator parameters, e.g. `lead=100,diag=20..120,sigma=30`.
        #[arg(long, default_value = "default")]
        style: GeneratorStyle,
        #[arg(long, default_value = "I")]
        test: TestSelection,
        /// Defaults to n-2.
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        refine: bool,
        #[arg(long)]
        json: bool,
    },
    /// List every principal minor.
    Minors {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print the recursion nodes, F(0,1), G(0,1) and a coefficient tree.
    Expand {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        depth: usize,
        #[arg(long, default_value = "F01")]
        seed: Seed,
        #[arg(long)]
        json: bool,
    },
}

fn load(path: &Path) -> Result<Matrix> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Matrix::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit<T: serde::Serialize>(json: bool, value: &T, text: impl FnOnce(&T) -> String) -> Result<()> {
    if json {
        println!("{}", serde_json::to_string_pretty(value)?);
    } else {
        print!("{}", text(value));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8> {
    let cap = minor_cap_from_env()?;
    match cli.command {
        Command::Check {
            file,
            test,
            depth,
            refine,
            permutations,
            falsify,
            seed,
            json,
        } => {
            let a = load(&file)?;
            let cfg = CheckConfig {
                test,
                depth,
                refine,
                permutations,
                falsify: falsify.map(|trials| FalsifyConfig {
                    trials,
                    seed,
                    ..FalsifyConfig::default()
                }),
                seed,
                minor_cap: cap,
            };
            let report = check(&a, &cfg)?;
            emit(json, &report, render::report)?;
            Ok(report.verdict.exit_code() as u8)
        }
        Command::Experiment {
            n,
            trials,
            seed,
            style,
            test,
            depth,
            refine,
            json,
        } => {
            let cfg = ExperimentConfig {
                n,
                trials,
                seed,
                style,
                test,
                depth,
                refine,
                minor_cap: cap,
            };
            emit(json, &run_experiment(&cfg)?, render::experiment)?;
            Ok(0)
        }
        Command::Minors { file, json } => {
            emit(json, &minors_dump(&load(&file)?, cap)?, |d| d.text())?;
            Ok(0)
        }
        Command::Expand {
            file,
            depth,
            seed,
            json,
        } => {
            emit(json, &expand_dump(&load(&file)?, depth, seed, cap)?, |d| {
                d.text()
            })?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE_ERROR } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}
