use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ccdec::constructors::{
    conjugacy_class_scheme, orbital_configuration, wl_closure_of_graph, GroupTable, PermutationGroupGens,
};
use ccdec::decomposition::{algorithm_c_with, MergeOrder};
use ccdec::io::{self, DecompositionReport};
use ccdec::{BuildOptions, CoherentConfiguration, Error};

/// Parabolics listed by `info` before giving up.
const PARABOLIC_LIMIT: usize = 1024;

#[derive(Parser)]
#[command(name = "ccdec", version, about = "Coherent configurations and their tensor decomposition")]
struct Cli {
    /// Check C3 against one extra witness per color only.
    #[arg(long, global = true)]
    fast: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the coherence axioms.
    Validate { file: PathBuf },
    /// Print invariants, fibers, valencies and the number of parabolics.
    Info { file: PathBuf },
    /// Split a thick configuration into indecomposable tensor factors.
    Decompose {
        file: PathBuf,
        /// Write the full report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Randomize the merge order of P* with this seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Tensor product of two or more configurations.
    Tensor {
        #[arg(required = true, num_args = 2..)]
        files: Vec<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Quotient by the parabolic with the given colors.
    Quotient {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        colors: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Orbital configuration of a permutation group.
    Orbital {
        #[arg(long)]
        degree: usize,
        /// One generator per line, as images of 0..degree.
        #[arg(long)]
        gens: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Conjugacy-class scheme of a group given by its Cayley table.
    GroupScheme {
        table: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Coherent closure of a graph given as an edge list.
    Wl {
        graph: PathBuf,
        /// Treat edges as arcs.
        #[arg(long)]
        directed: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        _ if e.axiom().is_some() => 2,
        Error::NotThick => 3,
        Error::NotAParabolic => 4,
        _ => 1,
    }
}

fn emit(output: Option<&Path>, cc: &CoherentConfiguration) -> Result<(), Error> {
    match output {
        Some(path) => io::write_ccm(path, cc),
        None => {
            print!("{}", io::to_ccm(cc));
            Ok(())
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    let options = if cli.fast { BuildOptions::default().fast() } else { BuildOptions::default() };
    let load = |path: &Path| io::read_ccm(path, options);
    match cli.command {
        Command::Validate { file } => {
            let cc = load(&file)?;
            println!("valid, degree {}, rank {}, thick={}", cc.degree(), cc.rank(), yes_no(cc.is_thick()));
        }
        Command::Info { file } => {
            let cc = load(&file)?;
            let f = cc.fingerprint();
            println!("degree {}", f.degree);
            println!("rank {}", f.rank);
            println!("thick {}", yes_no(cc.is_thick()));
            println!("homogeneous {}", yes_no(cc.is_homogeneous()));
            println!("valencies {}", join(&f.valencies));
            println!("fiber sizes {}", join(&f.fiber_sizes));
            for (i, fiber) in cc.fibers().iter().enumerate() {
                println!("fiber {i}: {}", join(fiber));
            }
            for c in cc.colors() {
                let (l, r) = cc.support(c);
                println!(
                    "color {c}: valency {}, transpose {}, fibers {l}->{r}{}",
                    cc.valency(c),
                    cc.transpose_color(c),
                    if cc.is_reflexive(c) { ", reflexive" } else { "" }
                );
            }
            let (parabolics, complete) = cc.parabolics(PARABOLIC_LIMIT)?;
            let bound = if complete { "" } else { "at least " };
            println!("parabolics {bound}{}", parabolics.len());
        }
        Command::Decompose { file, json, seed } => {
            let cc = load(&file)?;
            let order = seed.map_or(MergeOrder::Canonical, MergeOrder::Random);
            let d = algorithm_c_with(&cc, order)?;
            let report = DecompositionReport::new(&cc, &d);
            println!("{}", report.summary());
            if let Some(path) = json {
                std::fs::write(&path, report.to_json())
                    .map_err(|e| Error::Parse { line: 0, message: format!("{}: {e}", path.display()) })?;
            }
        }
        Command::Tensor { files, output } => {
            let factors = files.iter().map(|f| load(f)).collect::<Result<Vec<_>, _>>()?;
            let refs: Vec<&CoherentConfiguration> = factors.iter().collect();
            emit(output.as_deref(), &CoherentConfiguration::tensor_with(&refs, options)?)?;
        }
        Command::Quotient { file, colors, output } => {
            let cc = load(&file)?;
            let e = cc.parabolic_from_indices(&colors)?;
            emit(output.as_deref(), &cc.quotient(&e)?.0)?;
        }
        Command::Orbital { degree, gens, output } => {
            let generators = io::parse_generators(&io::read_to_string(&gens)?, degree)?;
            let cc = orbital_configuration(&PermutationGroupGens::new(degree, generators)?)?;
            emit(output.as_deref(), &cc)?;
        }
        Command::GroupScheme { table, output } => {
            let rows = io::parse_group_table(&io::read_to_string(&table)?)?;
            emit(output.as_deref(), &conjugacy_class_scheme(&GroupTable::new(&rows)?)?)?;
        }
        Command::Wl { graph, directed, output } => {
            let (n, edges) = io::parse_graph(&io::read_to_string(&graph)?)?;
            emit(output.as_deref(), &wl_closure_of_graph(n, &edges, directed)?)?;
        }
    }
    Ok(())
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = std::io::stdout().flush();
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
