//! Command-line front end for the sdepth engine. Every subcommand reads
//! files (text or JSON, sniffed), prints results to stdout, and exits
//! nonzero on parse errors, refusals, or FAIL verdicts.

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use sdepth::{
    minimal_primes, sdepth_exact, symbolic_power, transfer, Graph, Monomial, MonomialIdeal,
    QuotientPair, Ring, SolverLimits, StanleyDecomposition, TransferInstance,
};
use std::path::PathBuf;
use std::time::Duration;

#[derive(Parser)]
#[command(name = "sdepth", about = "Monomial ideal arithmetic, symbolic powers, and Stanley depth", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Limits {
    /// Refuse quotients whose characteristic poset exceeds this size
    #[arg(long, default_value_t = 4096)]
    max_poset_points: usize,
    /// Abort the search after this many seconds
    #[arg(long, default_value_t = 60)]
    time_budget_secs: u64,
}

impl Limits {
    fn to_solver(&self) -> SolverLimits {
        SolverLimits {
            max_poset_points: self.max_poset_points,
            time_budget: Duration::from_secs(self.time_budget_secs),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parse an ideal file and print its minimal generators
    Ideal {
        file: PathBuf,
        /// Emit JSON instead of one generator per line
        #[arg(long)]
        json: bool,
    },
    /// Symbolic power of a squarefree ideal
    Symbolic {
        file: PathBuf,
        #[arg(short, long)]
        k: u32,
        #[arg(long)]
        json: bool,
    },
    /// Ordinary power
    Power {
        file: PathBuf,
        #[arg(short, long)]
        k: u32,
        #[arg(long)]
        json: bool,
    },
    /// Colon by a monomial, written in the x1^2*x3 form
    Colon {
        file: PathBuf,
        #[arg(short, long)]
        v: String,
        #[arg(long)]
        json: bool,
    },
    /// Radical
    Radical {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Minimal primes of a squarefree ideal
    Primes { file: PathBuf },
    /// Exact Stanley depth with a verified witness decomposition
    Sdepth {
        file: PathBuf,
        /// Compute sdepth(S/I) instead of sdepth(I)
        #[arg(long)]
        quotient: bool,
        /// Also print the witness decomposition as JSON
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        limits: Limits,
    },
    /// Cover ideal of a graph file
    CoverIdeal {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Carry a decomposition across a transfer instance
    Transfer {
        /// Instance JSON file
        #[arg(long)]
        instance: PathBuf,
        /// Source decomposition JSON file (spaces only)
        #[arg(long)]
        decomposition: PathBuf,
    },
    /// Run an experiment spec and print the CSV report
    Experiment { spec: PathBuf },
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_ideal(path: &PathBuf) -> Result<MonomialIdeal> {
    Ok(MonomialIdeal::parse_auto(&read(path)?)?)
}

fn print_ideal(ideal: &MonomialIdeal, json: bool) {
    if json {
        println!("{}", ideal.to_json());
    } else {
        println!("{}", ideal.format(&Ring::new(ideal.num_vars())));
    }
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Ideal { file, json } => print_ideal(&load_ideal(&file)?, json),
        Command::Symbolic { file, k, json } => {
            print_ideal(&symbolic_power(&load_ideal(&file)?, k)?, json)
        }
        Command::Power { file, k, json } => {
            if k == 0 {
                bail!("k must be at least 1");
            }
            print_ideal(&load_ideal(&file)?.power(k), json)
        }
        Command::Colon { file, v, json } => {
            let ideal = load_ideal(&file)?;
            let v = Monomial::parse(&v, &Ring::new(ideal.num_vars()))?;
            print_ideal(&ideal.colon(&v), json)
        }
        Command::Radical { file, json } => print_ideal(&load_ideal(&file)?.radical(), json),
        Command::Primes { file } => {
            println!("{}", minimal_primes(&load_ideal(&file)?)?.to_json())
        }
        Command::Sdepth { file, quotient, witness, limits } => {
            let ideal = load_ideal(&file)?;
            let q = if quotient {
                QuotientPair::of_quotient_ring(ideal)
            } else {
                QuotientPair::of_ideal(ideal)
            };
            let (value, dec) = sdepth_exact(&q, &limits.to_solver())?;
            println!("sdepth = {value}");
            if witness {
                println!("{}", dec.spaces_to_json());
            }
        }
        Command::CoverIdeal { file, json } => {
            print_ideal(&Graph::parse(&read(&file)?)?.cover_ideal()?, json)
        }
        Command::Transfer { instance, decomposition } => {
            let instance = TransferInstance::from_json(&read(&instance)?)?;
            let source = StanleyDecomposition::from_spaces_json(
                instance.source().clone(),
                &read(&decomposition)?,
            )?;
            source.verify().map_err(sdepth::Error::InvalidDecomposition)?;
            let out = transfer(&instance, &source)?;
            let verified = out.verify().is_ok();
            println!("{}", out.spaces_to_json());
            println!(
                "{{\"input_sdepth\":{},\"output_sdepth\":{},\"verified\":{}}}",
                source.sdepth(),
                out.sdepth(),
                verified
            );
            if !verified {
                bail!("transfer output failed verification");
            }
        }
        Command::Experiment { spec } => {
            let spec: sdepth::experiments::ExperimentSpec = serde_json::from_str(&read(&spec)?)
                .context("parsing experiment spec")?;
            let report = sdepth::experiments::run(&spec)?;
            print!("{}", report.to_csv());
            if report.has_failure() {
                bail!("report contains FAIL verdicts");
            }
        }
    }
    Ok(())
}
