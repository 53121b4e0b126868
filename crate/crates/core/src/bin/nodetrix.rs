//! Command-line front end. Exit status: 0 planar (or success), 1 not
//! planar, 2 budget exceeded, 3 any other error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use nodetrix::cli::{
    audit, compute_layout, parse, render_svg, run_test, serialize, Algorithm, Outcome, TestError, WitnessDoc,
    BUDGET_ENV,
};
use nodetrix::generate::{gen_random, FrameShape, GenParams};
use nodetrix::hardness::{reduce_fixed, reduce_free, Nae3SatFormula};
use nodetrix::model::ClusteredGraph;
use nodetrix::oracle::DEFAULT_BUDGET;

#[derive(Parser)]
#[command(name = "nodetrix", version, about = "NodeTrix planarity testing for flat clustered graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Auto,
    K2,
    Sp,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Fixed,
    Free,
}

#[derive(Clone, Copy, ValueEnum)]
enum ShapeArg {
    Sp,
    Partial2tree,
    Planar,
}

#[derive(clap::Args)]
struct Budget {
    /// Bound on constrained-planarity calls made by the oracle.
    #[arg(long, env = BUDGET_ENV, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate an instance file.
    Validate { file: PathBuf },
    /// Decide NodeTrix planarity.
    Test {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        algorithm: AlgorithmArg,
        #[command(flatten)]
        budget: Budget,
        /// Write an SVG drawing when planar.
        #[arg(long)]
        render: Option<PathBuf>,
        /// Write the JSON witness.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Decide NodeTrix planarity by exhaustive search.
    Oracle {
        file: PathBuf,
        #[command(flatten)]
        budget: Budget,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Build the instance of a NAE3SAT formula (one clause of three literals
    /// per line, `-` for negation).
    #[command(name = "reduce-nae3sat")]
    ReduceNae3sat {
        formula: PathBuf,
        #[arg(long, value_enum, default_value = "fixed")]
        model: ModelArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generate a seeded random instance.
    #[command(name = "gen-random")]
    GenRandom {
        /// Number of clusters.
        #[arg(long)]
        n: usize,
        /// Largest cluster size.
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "sp")]
        shape: ShapeArg,
        /// Cap on the number of non-trivial clusters.
        #[arg(long)]
        max_nontrivial: Option<usize>,
        /// Allow edges between matrices and repeated point-matrix edges.
        #[arg(long)]
        non_light: bool,
        /// Drop the side assignment.
        #[arg(long)]
        free: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Draw a planar instance as SVG.
    Render {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        algorithm: AlgorithmArg,
        #[command(flatten)]
        budget: Budget,
    },
}

fn algorithm(a: AlgorithmArg) -> Algorithm {
    match a {
        AlgorithmArg::Auto => Algorithm::Auto,
        AlgorithmArg::K2 => Algorithm::K2,
        AlgorithmArg::Sp => Algorithm::Sp,
        AlgorithmArg::Oracle => Algorithm::Oracle,
    }
}

fn load(path: &Path) -> Result<ClusteredGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse(&text).with_context(|| format!("{}", path.display()))
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Runs a test and reports it; returns the exit status.
fn decide(
    g: &ClusteredGraph,
    a: Algorithm,
    budget: u64,
    render: Option<&Path>,
    witness: Option<&Path>,
) -> Result<u8> {
    let out: Outcome = match run_test(g, a, budget) {
        Ok(o) => o,
        Err(e @ TestError::BudgetExceeded(_)) => {
            eprintln!("{e}");
            println!("unknown");
            return Ok(2);
        }
        Err(e) => return Err(e.into()),
    };
    let calls = out.calls.map(|c| format!(" calls={c}")).unwrap_or_default();
    println!("{} algorithm={}{calls}", if out.planar() { "planar" } else { "non-planar" }, out.algorithm);
    let model = if g.sides.is_some() { "fixed" } else { "free" };
    if let Some(path) = witness {
        let doc = match &out.witness {
            Some(w) => WitnessDoc::accepted(&out.sided, w, &out.algorithm.to_string(), model),
            None => WitnessDoc::rejected(g, &out.algorithm.to_string()),
        };
        emit(&serde_json::to_string_pretty(&doc)?, Some(path))?;
    }
    if let Some(path) = render {
        let Some(w) = &out.witness else { bail!("nothing to render: the instance is not planar") };
        let layout = compute_layout(&out.sided, w)?;
        let defects = audit(&out.sided, &layout);
        if !defects.is_empty() {
            bail!("drawing failed its crossing audit: {:?}", defects[0]);
        }
        emit(&render_svg(&out.sided, &layout), Some(path))?;
    }
    Ok(if out.planar() { 0 } else { 1 })
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Validate { file } => {
            let g = load(&file)?;
            println!(
                "valid: {} vertices, {} edges, {} clusters, largest {}, {} model, {}",
                g.n(),
                g.m(),
                g.clusters.len(),
                g.max_cluster_size(),
                if g.sides.is_some() { "fixed" } else { "free" },
                if g.is_light() { "light" } else { "not light" }
            );
            Ok(0)
        }
        Command::Test { file, algorithm: a, budget, render, witness } => {
            decide(&load(&file)?, algorithm(a), budget.budget, render.as_deref(), witness.as_deref())
        }
        Command::Oracle { file, budget, witness } => {
            decide(&load(&file)?, Algorithm::Oracle, budget.budget, None, witness.as_deref())
        }
        Command::Render { file, output, algorithm: a, budget } => {
            decide(&load(&file)?, algorithm(a), budget.budget, Some(&output), None)
        }
        Command::ReduceNae3sat { formula, model, output } => {
            let text = fs::read_to_string(&formula).with_context(|| format!("reading {}", formula.display()))?;
            let f = Nae3SatFormula::parse(&text)?;
            let g = match model {
                ModelArg::Fixed => reduce_fixed(&f).graph,
                ModelArg::Free => reduce_free(&f).graph,
            };
            emit(&serialize(&g), output.as_deref())?;
            Ok(0)
        }
        Command::GenRandom { n, k, seed, shape, max_nontrivial, non_light, free, output } => {
            let shape = match shape {
                ShapeArg::Sp => FrameShape::Sp,
                ShapeArg::Partial2tree => FrameShape::Partial2Tree,
                ShapeArg::Planar => FrameShape::Planar,
            };
            let mut params = GenParams::new(n, k, shape);
            params.light = !non_light;
            if let Some(m) = max_nontrivial {
                params.max_nontrivial = m;
            }
            let g = gen_random(&params, seed);
            let g = if free { g.without_sides() } else { g };
            emit(&serialize(&g), output.as_deref())?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}
