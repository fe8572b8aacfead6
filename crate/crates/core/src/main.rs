use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use log::info;

use pmcsolve::dp::{family_for, solve_with_containers, Strategy};
use pmcsolve::harness::{parse_instance, verify, Suite, VerifyOptions};
use pmcsolve::minsep::{enumerate_minimal_separators, enumerate_pmc_sets};
use pmcsolve::recognition::classify;
use pmcsolve::{solve_fvs, solve_mwis, Error, VertexSet, WeightedGraph};

#[derive(Parser)]
#[command(name = "pmcsolve", version, about = "Bounded-treewidth induced subgraphs via PMC containers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Work limit for enumerations.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    budget: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest graph the verification sweeps accept.
    #[arg(long, global = true, default_value_t = 12)]
    max_n: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Class membership report as JSON.
    Recognize { file: PathBuf },
    /// Minimal separators, one per line.
    Seps { file: PathBuf },
    /// Potential maximal cliques, one per line.
    Pmcs { file: PathBuf },
    /// Maximum-weight independent set of a long-hole-free graph.
    Mwis { file: PathBuf },
    /// Minimum feedback vertex set of a P5-free graph.
    Fvs { file: PathBuf },
    /// Maximum-weight induced subgraph of treewidth below K.
    TwSubgraph {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = StrategyArg::AllPmcs)]
        strategy: StrategyArg,
        /// Container file for `--strategy family`, one set per line.
        family: Option<PathBuf>,
    },
    /// Run an oracle sweep on the graph.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum)]
        suite: SuiteArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    AllPmcs,
    ClassC,
    Family,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    SepContainers,
    PmcContainers,
    Dp,
}

enum Failure {
    Lib(Error),
    Io(String),
    VerifyFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<WeightedGraph, Failure> {
    Ok(parse_instance(&read(path)?, &path.display().to_string())?)
}

fn parse_family(text: &str, n: usize) -> Result<Vec<VertexSet>, Error> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let mut set = VertexSet::EMPTY;
        for tok in line.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| Error::Parse {
                line: i + 1,
                msg: format!("expected vertex, found `{tok}`"),
            })?;
            if v >= n {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: format!("vertex {v} out of range"),
                });
            }
            set.insert(v);
        }
        out.push(set);
    }
    Ok(out)
}

fn print_sets(sets: &[VertexSet]) {
    for s in sets {
        println!("{s}");
    }
}

fn print_solution(inst: &WeightedGraph, s: VertexSet) {
    println!("weight {}", inst.weights.total(s));
    println!("set {s}");
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Recognize { file } => {
            let inst = load(&file)?;
            println!("{}", classify(&inst.graph).to_json());
        }
        Command::Seps { file } => print_sets(&enumerate_minimal_separators(&load(&file)?.graph, cli.budget)?),
        Command::Pmcs { file } => print_sets(&enumerate_pmc_sets(&load(&file)?.graph, cli.budget)?),
        Command::Mwis { file } => {
            let inst = load(&file)?;
            print_solution(&inst, solve_mwis(&inst.graph, &inst.weights)?);
        }
        Command::Fvs { file } => {
            let inst = load(&file)?;
            let fvs = solve_fvs(&inst.graph)?;
            println!("weight {}", fvs.len());
            println!("set {fvs}");
        }
        Command::TwSubgraph {
            file,
            k,
            strategy,
            family,
        } => {
            let inst = load(&file)?;
            let strategy = match (strategy, family) {
                (StrategyArg::AllPmcs, _) => Strategy::AllPmcs,
                (StrategyArg::ClassC, _) => Strategy::ClassCFamily { budget: cli.budget },
                (StrategyArg::Family, Some(path)) => {
                    Strategy::ExplicitFamily(parse_family(&read(&path)?, inst.graph.n())?)
                }
                (StrategyArg::Family, None) => {
                    return Err(Failure::Io("--strategy family needs a family file".into()));
                }
            };
            let family = family_for(&inst.graph, k, &strategy)?;
            info!("{} containers", family.len());
            print_solution(&inst, solve_with_containers(&inst.graph, &inst.weights, &family, k)?);
        }
        Command::Verify { file, suite } => {
            let inst = load(&file)?;
            let suite = match suite {
                SuiteArg::SepContainers => Suite::SepContainers,
                SuiteArg::PmcContainers => Suite::PmcContainers,
                SuiteArg::Dp => Suite::Dp,
            };
            let opts = VerifyOptions {
                budget: cli.budget,
                seed: cli.seed,
                max_n: cli.max_n,
            };
            let report = verify(&inst, suite, &opts)?;
            for f in &report.failures {
                eprintln!("FAIL {f}");
            }
            println!("checks {} failures {}", report.checks, report.failures.len());
            if !report.passed() {
                return Err(Failure::VerifyFailed);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_class_violation() {
                2
            } else {
                match e {
                    Error::BudgetExceeded { .. } => 3,
                    Error::Parse { .. } => 4,
                    _ => 1,
                }
            })
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::VerifyFailed) => ExitCode::from(1),
    }
}
