use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gridmark::io::{self, SolutionFile};
use gridmark::oracle::{self, Bound};
use gridmark::separation::{find_unseparated_pair, is_landmark_set, is_minimal_landmark_set};
use gridmark::svg::{self, Figure};
use gridmark::{Cost, Grid, Vertex};

/// Exact minimum-cost landmark sets of grid graphs.
#[derive(Parser)]
#[command(name = "gridmark", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance and print the solution as JSON.
    Solve(SolveArgs),
    /// Check whether a vertex set is a (minimal) landmark set.
    Verify {
        instance: PathBuf,
        /// JSON file holding `[[r,c],..]` or `{"vertices": [[r,c],..]}`.
        set: PathBuf,
        /// Also draw the set and any unseparated pair.
        #[arg(long, value_name = "PATH")]
        emit_svg: Option<PathBuf>,
    },
    /// Exhaustive search over small instances.
    Brute {
        instance: PathBuf,
        /// Enumerate every subset instead of stopping at the cardinality bound.
        #[arg(long)]
        no_cap: bool,
    },
    /// Write a random instance (chacha8-uniform generator) as CSV.
    Gen {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        max_cost: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write to a file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Time the solver on square grids and estimate the scaling exponent.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "125,250,500,1000")]
        sizes: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Kind::Uniform)]
        kind: Kind,
        #[arg(long, default_value_t = 1)]
        repeat: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct SolveArgs {
    instance: PathBuf,
    /// Add the best set of every category.
    #[arg(long)]
    report: bool,
    /// Print the solution file as JSON (the default).
    #[arg(long, conflicts_with = "csv_out")]
    json: bool,
    /// Print the chosen vertices as `row,col` lines instead.
    #[arg(long)]
    csv_out: bool,
    #[arg(long, value_name = "PATH")]
    emit_svg: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Uniform,
    Random,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads().and_then(|()| run(cli.command)) {
        eprintln!("error: {e:#}");
        return ExitCode::from(exit_code(&e));
    }
    ExitCode::SUCCESS
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<gridmark::Error>() {
        Some(gridmark::Error::UnsupportedGrid { .. }) => 3,
        Some(gridmark::Error::OracleRefused { .. }) => 4,
        Some(_) | None => 2,
    }
}

fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var("GRIDMARK_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .context("GRIDMARK_THREADS must be a non-negative integer")?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()?;
    Ok(())
}

fn read_instance(path: &Path) -> Result<Grid> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    io::parse_instance(&text).map_err(|e| anyhow::Error::new(e).context(path.display().to_string()))
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Solve(args) => solve(args),
        Command::Verify {
            instance,
            set,
            emit_svg,
        } => verify(&instance, &set, emit_svg.as_deref()),
        Command::Brute { instance, no_cap } => brute(&instance, no_cap),
        Command::Gen {
            m,
            n,
            max_cost,
            seed,
            output,
        } => {
            let csv = io::to_csv(&io::generate(m, n, max_cost, seed)?);
            match output {
                Some(path) => write_file(&path, &csv),
                None => {
                    print!("{csv}");
                    Ok(())
                }
            }
        }
        Command::Bench {
            sizes,
            kind,
            repeat,
            seed,
        } => bench(&sizes, kind, repeat, seed),
    }
}

fn solve(args: SolveArgs) -> Result<()> {
    let g = read_instance(&args.instance)?;
    let file = if args.report {
        SolutionFile::with_report(&gridmark::solve_with_report(&g)?)
    } else {
        SolutionFile::new(&gridmark::solve(&g)?)
    };
    if let Some(path) = &args.emit_svg {
        let fig = Figure {
            landmarks: &file.vertices,
            witness: file.witness.as_ref(),
            pair: None,
        };
        write_file(path, &svg::render(&g, &fig))?;
    }
    if args.csv_out {
        print!("{}", file.to_csv());
    } else {
        print!("{}", file.to_json());
    }
    Ok(())
}

fn verify(instance: &Path, set: &Path, emit_svg: Option<&Path>) -> Result<()> {
    let g = read_instance(instance)?;
    let text =
        std::fs::read_to_string(set).with_context(|| format!("reading {}", set.display()))?;
    let landmarks = io::parse_vertex_set(&text)?;
    if landmarks.is_empty() {
        anyhow::bail!(gridmark::Error::Input("the vertex set is empty".into()));
    }
    let (m, n) = (g.m(), g.n());
    let pair = find_unseparated_pair(m, n, &landmarks)?;
    match pair {
        Some((u, v)) => println!(
            "not a landmark set; pair {},{}",
            fmt_vertex(u),
            fmt_vertex(v)
        ),
        None if is_minimal_landmark_set(m, n, &landmarks)? => println!("landmark set; minimal"),
        None => println!("landmark set; not minimal"),
    }
    debug_assert_eq!(pair.is_none(), is_landmark_set(m, n, &landmarks)?);
    println!("cost {}", g.set_cost(&landmarks));
    if let Some(path) = emit_svg {
        write_file(
            path,
            &svg::render(
                &g,
                &Figure {
                    landmarks: &landmarks,
                    witness: None,
                    pair,
                },
            ),
        )?;
    }
    Ok(())
}

fn fmt_vertex(v: Vertex) -> String {
    format!("({},{})", v.row, v.col)
}

fn brute(instance: &Path, no_cap: bool) -> Result<()> {
    let g = read_instance(instance)?;
    let bound = if no_cap {
        Bound::Exhaustive
    } else {
        Bound::Cardinality
    };
    let r = oracle::brute_force_min_with(&g, bound)?;
    let doc = serde_json::json!({
        "m": g.m(),
        "n": g.n(),
        "cost": r.cost,
        "cardinality": r.best.len(),
        "vertices": r.best,
        "optimal_count": r.optimal_count,
        "cap": r.cap,
    });
    println!("{}", serde_json::to_string(&doc)?);
    Ok(())
}

fn bench(sizes: &[usize], kind: Kind, repeat: usize, seed: u64) -> Result<()> {
    let mut points = Vec::new();
    println!("{:>6} {:>12} {:>12}", "side", "vertices", "seconds");
    for &side in sizes {
        let g = match kind {
            Kind::Uniform => Grid::uniform(side, side, Cost::from_integer(1))?,
            Kind::Random => io::generate(side, side, 10, seed)?,
        };
        let mut best = f64::INFINITY;
        for _ in 0..repeat.max(1) {
            let start = Instant::now();
            gridmark::solve(&g)?;
            best = best.min(start.elapsed().as_secs_f64());
        }
        println!("{side:>6} {:>12} {best:>12.4}", side * side);
        points.push(((side * side) as f64, best));
    }
    if let Some(k) = scaling_exponent(&points) {
        println!("scaling exponent in |V|: {k:.2}");
    }
    Ok(())
}

/// Least-squares slope of log(time) against log(|V|).
fn scaling_exponent(points: &[(f64, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|p| p.1 > 0.0)
        .map(|&(v, t)| (v.ln(), t.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let len = pts.len() as f64;
    let (mx, my) = (
        pts.iter().map(|p| p.0).sum::<f64>() / len,
        pts.iter().map(|p| p.1).sum::<f64>() / len,
    );
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}
