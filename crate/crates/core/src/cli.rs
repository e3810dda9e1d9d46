//! The `pcentered` command-line front end.
//!
//! Exit codes: 0 success, 1 a verification (or decision) came out false,
//! 2 bad input or usage, 3 a size, iteration or time limit was hit.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::color::ColorAssignment;
use crate::compose::{compose_genus, compose_planar, PlanarPart};
use crate::decomposition::SimpleTreeDecomposition;
use crate::degree::{color_bounded_degree_with_retries, DegreeColorConfig, PaletteScale};
use crate::error::{Error, Result};
use crate::generators::{self, classics, DEFAULT_SIZE_CAP};
use crate::io;
use crate::layering::bfs_layering;
use crate::oracle::{self, ColoringKind, ExactValue};
use crate::outerplanar::{color_outerplanar, OuterplanarLayout};
use crate::stw::{color_simple_treewidth, DirectoryLayerSource, LayerDecompositionSource};
use crate::verifier::{is_p_centered, is_p_linear, VerifyMode, DEFAULT_LINEAR_CAP};

#[derive(Parser, Debug)]
#[command(name = "pcentered", version, about = "Generate graphs, compute and check p-centered colorings")]
struct Cli {
    /// Time budget in seconds for exact searches.
    #[arg(long, global = true, value_name = "SECONDS")]
    time_budget: Option<f64>,
    /// Largest number of vertices a generator may build.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_SIZE_CAP)]
    size_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph (and certificates) from one of the families.
    Generate(GenerateArgs),
    /// Compute a p-centered coloring.
    Color(ColorArgs),
    /// Check a coloring.
    Verify(VerifyArgs),
    /// Exact χ_p or lin_p of a small graph.
    Exact(ExactArgs),
    /// Run an algorithm over seeds and values of p, writing CSV.
    Bench(BenchArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    /// path N
    Path,
    /// cycle N
    Cycle,
    /// grid ROWS COLS
    Grid,
    /// complete N
    Complete,
    /// fans W D: the tree of fans F(W, D)
    Fans,
    /// gk K W D: G_K(W, D)
    Gk,
    /// lower-bound P T X N
    LowerBound,
    /// outerplanar N: random maximal outerplanar (seeded)
    Outerplanar,
    /// stacked N: random stacked triangulation (seeded)
    Stacked,
    /// ktree K N: random simple K-tree (seeded)
    Ktree,
    /// bounded-degree N DELTA M (seeded)
    BoundedDegree,
    /// product N LAYERS BLOWUP: layered instance over a stacked triangulation (seeded)
    Product,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    family: Family,
    /// Family parameters, in the order listed for the family.
    params: Vec<u64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(short, long)]
    output: PathBuf,
    /// Write the emitted simple tree-decomposition (of the quotient, for `product`).
    #[arg(long)]
    decomposition: Option<PathBuf>,
    /// Write the instance's layering (a BFS layering unless the family provides one).
    #[arg(long)]
    layering: Option<PathBuf>,
    /// Write the partition (`product` only).
    #[arg(long)]
    partition: Option<PathBuf>,
    /// Write the quotient graph (`product` only).
    #[arg(long)]
    quotient: Option<PathBuf>,
    /// Write the boundary vertex list (`gk` only).
    #[arg(long)]
    boundary: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Algo {
    Degree,
    Outerplanar,
    Stw,
    PlanarCompose,
    GenusCompose,
}

#[derive(Args, Debug)]
struct ColorArgs {
    #[arg(long, value_enum)]
    algo: Algo,
    #[arg(short)]
    p: usize,
    #[arg(short, long)]
    graph: PathBuf,
    /// Output coloring file; standard output when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Seed (required by `degree`).
    #[arg(long)]
    seed: Option<u64>,
    /// Palette multiplier for `degree`, e.g. `1/256` or `0.5`.
    #[arg(long)]
    palette_scale: Option<PaletteScale>,
    /// Use twice the palette (`degree`).
    #[arg(long)]
    doubled: bool,
    /// Attempts for `degree`; each retry bumps the seed and doubles the cap.
    #[arg(long, default_value_t = 1)]
    retries: usize,
    /// Write the run statistics of `degree` as CSV.
    #[arg(long)]
    stats: Option<PathBuf>,
    /// Circular vertex order for `outerplanar`.
    #[arg(long)]
    layout: Option<PathBuf>,
    /// Simple tree-decomposition for `stw`.
    #[arg(long)]
    decomposition: Option<PathBuf>,
    /// Directory of per-layer decompositions for `stw` at width above 3.
    #[arg(long)]
    layer_decompositions: Option<PathBuf>,
    #[arg(long)]
    layering: Option<PathBuf>,
    #[arg(long)]
    partition: Option<PathBuf>,
    #[arg(long)]
    quotient_coloring: Option<PathBuf>,
    /// Check that the quotient coloring is p-centered first (`planar-compose`).
    #[arg(long)]
    check_quotient: bool,
    #[arg(long)]
    z_set: Option<PathBuf>,
    #[arg(long)]
    gplus: Option<PathBuf>,
    #[arg(long)]
    w_layering: Option<PathBuf>,
    #[arg(long)]
    gplus_coloring: Option<PathBuf>,
    #[arg(long)]
    genus: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeArg {
    Subsets,
    Growth,
}

impl From<ModeArg> for VerifyMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Subsets => VerifyMode::Subsets,
            ModeArg::Growth => VerifyMode::Growth,
        }
    }
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(short, long)]
    graph: PathBuf,
    #[arg(short, long)]
    coloring: PathBuf,
    #[arg(short)]
    p: usize,
    #[arg(long, value_enum, default_value = "growth")]
    mode: ModeArg,
    /// Check p-linearity (simple paths) instead.
    #[arg(long)]
    linear: bool,
    /// Largest graph accepted for `--linear`.
    #[arg(long, default_value_t = DEFAULT_LINEAR_CAP)]
    linear_cap: usize,
}

#[derive(Args, Debug)]
struct ExactArgs {
    #[arg(short, long)]
    graph: PathBuf,
    #[arg(short)]
    p: usize,
    /// Compute lin_p instead of χ_p.
    #[arg(long)]
    linear: bool,
    /// Give up above this many colors (default: the vertex count).
    #[arg(long)]
    max_colors: Option<usize>,
    /// Only decide whether the value is at least K.
    #[arg(long, value_name = "K")]
    at_least: Option<usize>,
    /// Write the optimal (or refuting) coloring here.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum BenchFamily {
    /// Stacked triangulations, colored by `stw` (width 3).
    Stacked,
    /// Maximal outerplanar graphs, colored by `outerplanar`.
    Outerplanar,
    /// Simple 2-trees, colored by `stw`.
    Ktree2,
    /// Simple 3-trees, colored by `stw`.
    Ktree3,
    /// Random graphs of bounded degree, colored by `degree`.
    Degree,
    /// Layered product instances, colored by `stw` on the quotient and composed.
    Product,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long, value_enum)]
    family: BenchFamily,
    #[arg(long)]
    n: usize,
    /// Values of p: `3`, `1..4` (inclusive) or `1,2,5`.
    #[arg(long)]
    p: String,
    /// Number of seeds, starting at `--seed-start`.
    #[arg(long, default_value_t = 1)]
    seeds: u64,
    #[arg(long, default_value_t = 0)]
    seed_start: u64,
    /// Output CSV; standard output when omitted.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Verify in subsets mode instead of growth mode.
    #[arg(long)]
    subsets: bool,
    /// Maximum degree for `degree` (edges: n·Δ/2 · 0.9).
    #[arg(long, default_value_t = 3)]
    delta: usize,
    #[arg(long)]
    palette_scale: Option<PaletteScale>,
    #[arg(long)]
    doubled: bool,
    /// Layers for `product`.
    #[arg(long, default_value_t = 10)]
    layers: usize,
    /// Copies per class and layer for `product`.
    #[arg(long, default_value_t = 3)]
    blowup: usize,
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Entry point of the binary.
pub fn main() -> std::process::ExitCode {
    std::process::ExitCode::from(run(std::env::args_os()) as u8)
}

fn dispatch(cli: &Cli) -> Result<i32> {
    let budget = match cli.time_budget {
        Some(s) if !(s.is_finite() && s >= 0.0) => {
            return Err(Error::input("time budget must be a non-negative number"))
        }
        Some(s) => Some(Duration::from_secs_f64(s)),
        None => None,
    };
    match &cli.command {
        Command::Generate(a) => generate(a, cli.size_cap),
        Command::Color(a) => color(a),
        Command::Verify(a) => verify(a),
        Command::Exact(a) => exact(a, budget),
        Command::Bench(a) => bench(a, cli.size_cap),
    }
}

fn need<T: Copy>(value: Option<T>, what: &str) -> Result<T> {
    value.ok_or_else(|| Error::input(format!("{what} is required")))
}

fn need_path<'a>(value: &'a Option<PathBuf>, flag: &str) -> Result<&'a Path> {
    value.as_deref().ok_or_else(|| Error::input(format!("--{flag} is required")))
}

fn params<const K: usize>(family: Family, given: &[u64], usage: &str) -> Result<[usize; K]> {
    if given.len() != K {
        return Err(Error::input(format!("{family:?} takes {K} parameters: {usage}")));
    }
    let mut out = [0; K];
    for (o, &g) in out.iter_mut().zip(given) {
        *o = usize::try_from(g).map_err(|_| Error::input("parameter too large"))?;
    }
    Ok(out)
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::Resource(format!("{n} vertices requested, above the cap of {cap}")));
    }
    Ok(())
}

fn generate(a: &GenerateArgs, cap: usize) -> Result<i32> {
    let seed = || need(a.seed, "--seed for a random family");
    let mut decomposition: Option<SimpleTreeDecomposition> = None;
    let mut layering = None;
    let mut extra_written = Vec::new();
    let g = match a.family {
        Family::Path | Family::Cycle | Family::Complete => {
            let [n] = params(a.family, &a.params, "N")?;
            check_cap(n, cap)?;
            match a.family {
                Family::Path => classics::path(n),
                Family::Cycle => classics::cycle(n),
                _ => classics::complete(n),
            }
        }
        Family::Grid => {
            let [r, c] = params(a.family, &a.params, "ROWS COLS")?;
            check_cap(r.saturating_mul(c), cap)?;
            classics::grid(r, c)
        }
        Family::Fans => {
            let [w, d] = params(a.family, &a.params, "W D")?;
            decomposition = Some(generators::tree_of_fans_decomposition(w, d, cap)?);
            generators::tree_of_fans(w, d, cap)?
        }
        Family::Gk => {
            let [k, w, d] = params(a.family, &a.params, "K W D")?;
            let gk = generators::g_k_graph(k, w, d, cap)?;
            if let Some(path) = &a.boundary {
                io::save_vertex_list(path, &gk.boundary)?;
                extra_written.push("boundary");
            }
            decomposition = Some(gk.decomposition);
            gk.graph
        }
        Family::LowerBound => {
            let [p, t, x, n] = params(a.family, &a.params, "P T X N")?;
            generators::lower_bound_graph(p as u64, t as u64, x as u64, n as u64, cap)?
        }
        Family::Outerplanar | Family::Stacked => {
            let [n] = params(a.family, &a.params, "N")?;
            check_cap(n, cap)?;
            let (g, d) = if a.family == Family::Outerplanar {
                generators::random_maximal_outerplanar(n, seed()?)?
            } else {
                generators::random_stacked_triangulation(n, seed()?)?
            };
            decomposition = Some(d);
            g
        }
        Family::Ktree => {
            let [k, n] = params(a.family, &a.params, "K N")?;
            check_cap(n, cap)?;
            let (g, d) = generators::random_simple_ktree(k, n, seed()?)?;
            decomposition = Some(d);
            g
        }
        Family::BoundedDegree => {
            let [n, delta, m] = params(a.family, &a.params, "N DELTA M")?;
            check_cap(n, cap)?;
            generators::random_bounded_degree(n, delta, m, seed()?)?
        }
        Family::Product => {
            let [n, layers, blowup] = params(a.family, &a.params, "N LAYERS BLOWUP")?;
            check_cap(n.saturating_mul(layers).saturating_mul(blowup), cap)?;
            let seed = seed()?;
            let (h, d) = generators::random_stacked_triangulation(n, seed)?;
            let inst = generators::synth_product_instance(&h, layers, blowup, seed)?;
            if let Some(path) = &a.partition {
                io::save_partition(path, &inst.partition)?;
                extra_written.push("partition");
            }
            if let Some(path) = &a.quotient {
                io::save_graph(path, &inst.graph.quotient(&inst.partition))?;
                extra_written.push("quotient");
            }
            decomposition = Some(d);
            layering = Some(inst.layering);
            inst.graph
        }
    };
    if a.boundary.is_some() && !extra_written.contains(&"boundary") {
        return Err(Error::input("--boundary applies to the gk family only"));
    }
    if (a.partition.is_some() || a.quotient.is_some()) && a.family != Family::Product {
        return Err(Error::input("--partition and --quotient apply to the product family only"));
    }
    io::save_graph(&a.output, &g)?;
    if let Some(path) = &a.decomposition {
        let d = decomposition.ok_or_else(|| Error::input(format!("{:?} emits no decomposition", a.family)))?;
        io::save_decomposition(path, &d)?;
    }
    if let Some(path) = &a.layering {
        let l = match layering {
            Some(l) => l,
            None => bfs_layering(&g, None)?,
        };
        io::save_layering(path, &l)?;
    }
    println!("{} vertices, {} edges", g.vertex_count(), g.edge_count());
    Ok(0)
}

fn write_output(c: &ColorAssignment, output: &Option<PathBuf>) -> Result<()> {
    match output {
        Some(path) => io::save_coloring(path, c),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            io::write_coloring(c, &mut lock)?;
            Ok(lock.flush()?)
        }
    }
}

fn color(a: &ColorArgs) -> Result<i32> {
    let g = io::load_graph(&a.graph)?;
    let col = match a.algo {
        Algo::Degree => {
            let mut cfg = DegreeColorConfig::new(a.p, need(a.seed, "--seed for the degree algorithm")?);
            cfg.palette_scale = a.palette_scale.unwrap_or_default();
            cfg.doubled_mode = a.doubled;
            let (col, stats) = color_bounded_degree_with_retries(&g, &cfg, a.retries)??;
            let header = "iterations,violators,uncolored,palette_size,iteration_cap,seed";
            let row = format!(
                "{},{},{},{},{},{}",
                stats.iterations, stats.violators, stats.uncolored, stats.palette_size, stats.iteration_cap, stats.seed
            );
            if let Some(path) = &a.stats {
                std::fs::write(path, format!("{header}\n{row}\n"))?;
            }
            eprintln!("{header}\n{row}");
            // The run's invariant already implies this; never hand out an unchecked coloring.
            if !is_p_centered(&g, &col, a.p, VerifyMode::Growth)?.holds() {
                return Err(Error::Invariant("degree coloring failed verification".into()));
            }
            col
        }
        Algo::Outerplanar => {
            let layout = match &a.layout {
                Some(path) => Some(OuterplanarLayout::new(&g, io::load_vertex_list(path)?)?),
                None => None,
            };
            color_outerplanar(&g, a.p, layout.as_ref())?
        }
        Algo::Stw => {
            let d = io::load_decomposition(need_path(&a.decomposition, "decomposition")?)?;
            let source = a.layer_decompositions.clone().map(|root| DirectoryLayerSource { root });
            color_simple_treewidth(&g, &d, a.p, source.as_ref().map(|s| s as &dyn LayerDecompositionSource))?
        }
        Algo::PlanarCompose => {
            let layering = io::load_layering(need_path(&a.layering, "layering")?)?;
            let part = io::load_partition(need_path(&a.partition, "partition")?)?;
            let psi = io::load_coloring(need_path(&a.quotient_coloring, "quotient-coloring")?)?;
            compose_planar(&g, &layering, &part, &psi, a.p, a.check_quotient)?
        }
        Algo::GenusCompose => {
            let layering = io::load_layering(need_path(&a.layering, "layering")?)?;
            let z = io::load_vertex_list(need_path(&a.z_set, "z-set")?)?;
            let gplus = io::load_graph(need_path(&a.gplus, "gplus")?)?;
            let w = io::load_layering(need_path(&a.w_layering, "w-layering")?)?;
            let phi = io::load_coloring(need_path(&a.gplus_coloring, "gplus-coloring")?)?;
            let planar = PlanarPart { gplus: &gplus, layering: &w, coloring: &phi };
            compose_genus(&g, &layering, &z, planar, a.p, need(a.genus, "--genus")?)?
        }
    };
    write_output(&col, &a.output)?;
    eprintln!("{} colors used, palette {}", col.colors_used(), col.palette_size());
    Ok(0)
}

fn verify(a: &VerifyArgs) -> Result<i32> {
    let g = io::load_graph(&a.graph)?;
    let col = io::load_coloring(&a.coloring)?;
    let (verdict, what) = if a.linear {
        (is_p_linear(&g, &col, a.p, a.linear_cap)?, "linear")
    } else {
        (is_p_centered(&g, &col, a.p, a.mode.into())?, "centered")
    };
    match verdict.violation {
        None => {
            println!("{}-{what}: yes", a.p);
            Ok(0)
        }
        Some(v) => {
            println!("{}-{what}: no", a.p);
            println!("violation: {v}");
            Ok(1)
        }
    }
}

fn exact(a: &ExactArgs, budget: Option<Duration>) -> Result<i32> {
    let g = io::load_graph(&a.graph)?;
    let (kind, name) = if a.linear { (ColoringKind::Linear, "lin_p") } else { (ColoringKind::Centered, "chi_p") };
    if let Some(k) = a.at_least {
        if k == 0 {
            return Err(Error::input("--at-least needs K >= 1"));
        }
        let f = oracle::feasible(&g, a.p, kind, k - 1, budget)?;
        return Ok(match f.witness {
            None => {
                println!("{name} >= {k}: proved ({} search nodes)", f.nodes);
                if let Some(ob) = f.deepest_obstruction {
                    println!("deepest obstruction: {ob}");
                }
                0
            }
            Some(w) => {
                println!("{name} >= {k}: false; a coloring with {} colors exists", k - 1);
                if let Some(path) = &a.output {
                    io::save_coloring(path, &w)?;
                }
                1
            }
        });
    }
    let max = a.max_colors.unwrap_or(g.vertex_count().max(1));
    let value = match kind {
        ColoringKind::Centered => oracle::chi_p_exact(&g, a.p, max, budget)?,
        ColoringKind::Linear => oracle::lin_p_exact(&g, a.p, max, budget)?,
    };
    match value {
        ExactValue::Exact { value, witness } => {
            println!("{name} = {value}");
            if let Some(path) = &a.output {
                io::save_coloring(path, &witness)?;
            }
            Ok(0)
        }
        ExactValue::ExceedsMax { max_colors } => {
            println!("{name} > {max_colors}");
            Ok(0)
        }
    }
}

/// Parses `3`, `1..4` (inclusive) or `1,2,5`.
fn parse_p_values(s: &str) -> Result<Vec<usize>> {
    let bad = || Error::input(format!("cannot parse p values {s:?}"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let values: Vec<usize> = if let Some((lo, hi)) = s.split_once("..") {
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        (num(lo)?..=num(hi)?).collect()
    } else {
        s.split(',').map(num).collect::<Result<_>>()?
    };
    if values.is_empty() || values.contains(&0) {
        return Err(bad());
    }
    Ok(values)
}

#[derive(Clone, Debug, PartialEq)]
struct BenchRow {
    p: usize,
    seed: u64,
    colors_used: Option<usize>,
    palette_bound: u64,
    iterations: Option<u64>,
    runtime_ms: f64,
    verified: bool,
}

fn bench_cell(a: &BenchArgs, cap: usize, p: usize, seed: u64) -> Result<BenchRow> {
    check_cap(a.n, cap)?;
    let mode = if a.subsets { VerifyMode::Subsets } else { VerifyMode::Growth };
    let mut iterations = None;
    let (g, started, col) = match a.family {
        BenchFamily::Stacked | BenchFamily::Ktree2 | BenchFamily::Ktree3 => {
            let (g, d) = match a.family {
                BenchFamily::Stacked => generators::random_stacked_triangulation(a.n, seed)?,
                BenchFamily::Ktree2 => generators::random_simple_ktree(2, a.n, seed)?,
                _ => generators::random_simple_ktree(3, a.n, seed)?,
            };
            let t = Instant::now();
            let col = color_simple_treewidth(&g, &d, p, None)?;
            (g, t, Ok(col))
        }
        BenchFamily::Outerplanar => {
            let (g, _) = generators::random_maximal_outerplanar(a.n, seed)?;
            let t = Instant::now();
            let col = color_outerplanar(&g, p, None)?;
            (g, t, Ok(col))
        }
        BenchFamily::Degree => {
            let m = a.n * a.delta / 2 * 9 / 10;
            let g = generators::random_bounded_degree(a.n, a.delta, m, seed)?;
            let mut cfg = DegreeColorConfig::new(p, seed);
            cfg.palette_scale = a.palette_scale.unwrap_or_default();
            cfg.doubled_mode = a.doubled;
            cfg.check_invariant = Some(false);
            let t = Instant::now();
            let run = crate::degree::color_bounded_degree(&g, &cfg)?;
            let col = match run {
                Ok((col, stats)) => {
                    iterations = Some(stats.iterations);
                    Ok(col)
                }
                Err(fail) => {
                    iterations = Some(fail.stats.iterations);
                    Err(fail.stats.palette_size)
                }
            };
            (g, t, col)
        }
        BenchFamily::Product => {
            let (h, d) = generators::random_stacked_triangulation(a.n, seed)?;
            let inst = generators::synth_product_instance(&h, a.layers, a.blowup, seed)?;
            let t = Instant::now();
            let q = inst.graph.quotient(&inst.partition);
            let psi = color_simple_treewidth(&q, &d, p, None)?;
            let col = compose_planar(&inst.graph, &inst.layering, &inst.partition, &psi, p, false)?;
            (inst.graph, t, Ok(col))
        }
    };
    let runtime_ms = started.elapsed().as_secs_f64() * 1000.0;
    Ok(match col {
        Ok(col) => BenchRow {
            p,
            seed,
            colors_used: Some(col.colors_used()),
            palette_bound: col.palette_size(),
            iterations,
            runtime_ms,
            verified: is_p_centered(&g, &col, p, mode)?.holds(),
        },
        Err(palette) => {
            BenchRow { p, seed, colors_used: None, palette_bound: palette, iterations, runtime_ms, verified: false }
        }
    })
}

pub const BENCH_HEADER: [&str; 9] =
    ["family", "n", "p", "seed", "colors_used", "palette_bound", "iterations", "runtime_ms", "verified"];

fn bench(a: &BenchArgs, cap: usize) -> Result<i32> {
    let ps = parse_p_values(&a.p)?;
    let cells: Vec<(usize, u64)> =
        ps.iter().flat_map(|&p| (a.seed_start..a.seed_start + a.seeds).map(move |s| (p, s))).collect();
    let mut rows = cells.par_iter().map(|&(p, s)| bench_cell(a, cap, p, s)).collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| (r.p, r.seed));
    let family = a.family.to_possible_value().expect("named variant").get_name().to_owned();
    let sink: Box<dyn Write> = match &a.csv {
        Some(path) => Box::new(std::fs::File::create(path)?),
        None => Box::new(std::io::stdout()),
    };
    let mut w = csv::Writer::from_writer(sink);
    let csv_err = |e: csv::Error| Error::Io(std::io::Error::other(e));
    w.write_record(BENCH_HEADER).map_err(csv_err)?;
    for r in &rows {
        let opt = |x: Option<String>| x.unwrap_or_default();
        w.write_record([
            family.clone(),
            a.n.to_string(),
            r.p.to_string(),
            r.seed.to_string(),
            opt(r.colors_used.map(|c| c.to_string())),
            r.palette_bound.to_string(),
            opt(r.iterations.map(|i| i.to_string())),
            format!("{:.3}", r.runtime_ms),
            r.verified.to_string(),
        ])
        .map_err(csv_err)?;
    }
    w.flush()?;
    let failed = rows.iter().filter(|r| !r.verified).count();
    if failed > 0 {
        eprintln!("{failed} of {} runs produced no verified coloring", rows.len());
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_values() {
        assert_eq!(parse_p_values("1..4").unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(parse_p_values("1..=2").unwrap(), vec![1, 2]);
        assert_eq!(parse_p_values("2,5").unwrap(), vec![2, 5]);
        assert!(parse_p_values("0..2").is_err());
        assert!(parse_p_values("x").is_err());
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(["pcentered", "frobnicate"]), 2);
        assert_eq!(run(["pcentered", "verify", "--bogus"]), 2);
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
