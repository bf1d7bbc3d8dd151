//! The `tarkit` command line. [`run`] takes the argument list and output
//! streams and returns the exit code: 0 on success, 1 when a bound is
//! violated by a drawing with TAR above 60°, 2 on bad input.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use tarkit_core::bounds::{
    check_disconnected, check_lemma1, check_lemma2, check_observation1, check_theorem1, DisconnectedOutcome,
    Theorem1Outcome,
};
use tarkit_core::exceptions::{catalog, recognize_drawing, recognize_graph};
use tarkit_core::generators::{layered_8gon, random_connected_drawing, random_drawing, random_plane_drawing, regular_polygon};
use tarkit_core::optimizer::{grid_oracle, maximize_tar, OptConfig};
use tarkit_core::reduction::{build_reduction_graph, decode_assignment, layout_satisfying, parse_cnf, Assignment};
use tarkit_core::Drawing;

use crate::format::{read_drawing, read_graph, write_drawing};
use crate::parallel::maximize_tar_parallel;
use crate::report;
use crate::svg::{render, SvgOptions};

#[derive(Parser, Debug)]
#[command(name = "tarkit", version, about = "Total angular resolution of straight-line drawings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the TAR of a drawing and its exact comparison with 60°, 90°, 120°
    Tar { drawing: PathBuf },
    /// Run every applicable edge-count bound on a drawing
    Check { drawing: PathBuf },
    /// Name the exception a drawing is equivalent to, or `none`
    Recognize {
        drawing: PathBuf,
        /// Compare graphs up to isomorphism instead of drawings
        #[arg(long)]
        graph: bool,
    },
    /// Write a generated drawing
    Generate {
        #[command(subcommand)]
        family: Family,
        #[command(flatten)]
        out: Output,
    },
    /// Search for a drawing of a graph with large TAR
    Optimize {
        graph: PathBuf,
        #[arg(long, default_value_t = OptConfig::default().restarts)]
        restarts: usize,
        #[arg(long, default_value_t = OptConfig::default().steps)]
        steps: usize,
        #[arg(long, default_value_t = OptConfig::default().initial_step)]
        initial_step: f64,
        #[arg(long, default_value_t = OptConfig::default().cooling)]
        cooling: f64,
        #[arg(long, default_value_t = OptConfig::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = OptConfig::default().half_width)]
        half_width: i64,
        /// Worker threads for restarts
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Exhaustive search on a grid of this many points per axis instead
        #[arg(long)]
        grid: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Build the gadget graph of a 3-CNF formula in DIMACS format
    Reduce {
        cnf: PathBuf,
        /// Also lay the graph out with TAR exactly 60°
        #[arg(long)]
        layout: bool,
        /// Truth values as a 0/1 string; defaults to the first satisfying one
        #[arg(long)]
        assignment: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Read a satisfying assignment off a drawing of a reduction graph
    Decode {
        drawing: PathBuf,
        #[arg(long)]
        cnf: PathBuf,
    },
    /// Exception catalog
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
enum Family {
    /// Nested octagons with 2n - 6 edges
    Layered8gon {
        #[arg(long)]
        k: usize,
    },
    /// Regular polygon
    Polygon {
        #[arg(long)]
        k: usize,
    },
    /// Random drawing on an integer grid
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        range: i64,
        #[arg(long)]
        connected: bool,
        /// Plane drawing keeping each non-hull edge with this probability
        #[arg(long, conflicts_with_all = ["m", "connected"])]
        plane: Option<f64>,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// Write every witness drawing and its figure into a directory
    Export { dir: PathBuf },
}

#[derive(Args, Debug)]
struct Output {
    /// Drawing file to write (standard output if omitted, where applicable)
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    /// SVG figure to write
    #[arg(long, global = true)]
    svg: Option<PathBuf>,
}

/// Exit status categories.
enum Failure {
    Refuted,
    Input(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Refuted) => {
            let _ = writeln!(err, "bound violated by a drawing with TAR above 60°");
            1
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_drawing(path: &Path) -> Result<Drawing, Failure> {
    let d = read_drawing(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    if let Err(v) = d.validate() {
        let list: Vec<String> = v.iter().map(ToString::to_string).collect();
        return Err(Failure::Input(format!("{}: invalid drawing: {}", path.display(), list.join("; "))));
    }
    Ok(d)
}

fn write_file(path: &Path, text: &str) -> CmdResult {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit(d: &Drawing, o: &Output, title: &str, out: &mut dyn Write, stdout_default: bool) -> CmdResult {
    match &o.output {
        Some(p) => write_file(p, &write_drawing(d))?,
        None if stdout_default => write!(out, "{}", write_drawing(d))?,
        None => {}
    }
    if let Some(p) = &o.svg {
        let opts = SvgOptions { title: Some(title.into()), labels: d.n() <= 60, ..SvgOptions::default() };
        write_file(p, &render(d, &opts)?)?;
    }
    Ok(())
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Tar { drawing } => {
            let d = load_drawing(&drawing)?;
            writeln!(out, "{}", report::tar_line(&d.tar()?))?;
        }
        Command::Check { drawing } => check(&load_drawing(&drawing)?, out)?,
        Command::Recognize { drawing, graph } => {
            let d = load_drawing(&drawing)?;
            let id = if graph { recognize_graph(d.graph()) } else { recognize_drawing(&d)? };
            writeln!(out, "{}", id.map_or_else(|| "none".to_string(), |id| id.to_string()))?;
        }
        Command::Generate { family, out: o } => {
            let (d, title) = match family {
                Family::Layered8gon { k } => (layered_8gon(k)?, format!("layered 8-gon, k = {k}")),
                Family::Polygon { k } => (regular_polygon(k)?, format!("regular {k}-gon")),
                Family::Random { n, m, seed, range, connected, plane } => {
                    let d = match (plane, connected) {
                        (Some(keep), _) => random_plane_drawing(n, seed, range, keep)?,
                        (None, true) => random_connected_drawing(n, m.unwrap_or(n.saturating_sub(1)), seed, range)?,
                        (None, false) => random_drawing(n, m.unwrap_or(0), seed, range)?,
                    };
                    (d, format!("random drawing, seed {seed}"))
                }
            };
            emit(&d, &o, &title, out, true)?;
        }
        Command::Optimize { graph, restarts, steps, initial_step, cooling, seed, half_width, threads, grid, out: o } => {
            let g = read_graph(&read(&graph)?)?;
            let cfg = OptConfig { restarts, steps, initial_step, cooling, seed, half_width };
            let r = match grid {
                Some(size) => grid_oracle(&g, size, half_width)?,
                None if threads > 1 => maximize_tar_parallel(&g, &cfg, threads)?,
                None => maximize_tar(&g, &cfg)?,
            };
            write!(out, "{}", report::opt_report(&r))?;
            emit(&r.best, &o, "best drawing found", out, false)?;
        }
        Command::Reduce { cnf, layout, assignment, out: o } => {
            let f = parse_cnf(&read(&cnf)?)?;
            let r = build_reduction_graph(&f);
            write!(out, "{}", report::reduction_report(&r))?;
            if layout || assignment.is_some() {
                let a = match assignment {
                    Some(bits) => Assignment::from_bits(&bits).ok_or("assignment must be a string of 0 and 1")?,
                    None => {
                        if f.num_vars() > 20 {
                            return Err(Failure::Input("give --assignment for more than 20 variables".into()));
                        }
                        f.satisfying_assignments().into_iter().next().ok_or("formula is unsatisfiable")?
                    }
                };
                let d = layout_satisfying(&r, &a)?;
                writeln!(out, "[layout]\nassignment = {}\n{}", a.to_bits(), report::tar_line(&d.tar()?))?;
                emit(&d, &o, "reduction layout", out, false)?;
            }
        }
        Command::Decode { drawing, cnf } => {
            let f = parse_cnf(&read(&cnf)?)?;
            let r = build_reduction_graph(&f);
            let d = load_drawing(&drawing)?;
            let a = decode_assignment(&r, &d)?;
            writeln!(out, "assignment = {}\nsatisfies = {}", a.to_bits(), f.satisfied_by(&a))?;
        }
        Command::Catalog { action: CatalogAction::Export { dir } } => {
            fs::create_dir_all(&dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
            for e in catalog() {
                let name = file_stem(e.id.name());
                let d = &e.witness;
                write_file(&dir.join(format!("{name}.json")), &write_drawing(d))?;
                let opts = SvgOptions { title: Some(e.id.name().into()), ..SvgOptions::default() };
                write_file(&dir.join(format!("{name}.svg")), &render(d, &opts)?)?;
                writeln!(out, "{} n = {} m = {} {}", e.id, d.n(), d.m(), report::tar_line(&d.tar()?))?;
            }
        }
    }
    Ok(())
}

/// `E1(path3)` becomes `E1_path3`.
fn file_stem(name: &str) -> String {
    name.replace('(', "_").replace(')', "")
}

fn check(d: &Drawing, out: &mut dyn Write) -> CmdResult {
    let mut refuted = false;
    writeln!(out, "{}", report::tar_line(&d.tar()?))?;
    if d.n() >= 3 {
        let t = check_theorem1(d.graph(), Some(d))?;
        refuted |= t == Theorem1Outcome::RefutedWitness;
        write!(out, "{}", report::theorem1_report(&t))?;
    } else {
        writeln!(out, "[theorem1]\nnot applicable: fewer than 3 vertices")?;
    }
    if d.is_connected() {
        let l1 = check_lemma1(d)?;
        refuted |= l1.refutes();
        write!(out, "{}", report::bound_report(&l1))?;
        for (name, r) in [("observation1", check_observation1(d)), ("lemma2", check_lemma2(d))] {
            match r {
                Ok(r) => {
                    refuted |= r.refutes();
                    write!(out, "{}", report::bound_report(&r))?;
                }
                Err(e) => writeln!(out, "[{name}]\nnot applicable: {e}")?,
            }
        }
    } else {
        match check_disconnected(d) {
            Ok(o) => {
                if let DisconnectedOutcome::Report(r) = &o {
                    refuted |= r.refutes() || r.components.iter().any(|c| c.refutes());
                }
                write!(out, "{}", report::disconnected_report(&o))?;
            }
            Err(e) => writeln!(out, "[disconnected]\nnot applicable: {e}")?,
        }
    }
    if refuted {
        return Err(Failure::Refuted);
    }
    Ok(())
}
