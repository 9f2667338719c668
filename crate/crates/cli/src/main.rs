//! `snv` — exact-arithmetic command-line toolkit for integer vector
//! configurations: verdicts (normal, supernormal, tight, TDI), Hilbert
//! bases, duals, triangulations, chamber censuses, polygon chamber
//! complexes with SVG output, reduced Gröbner bases, initial ideals, and
//! the virtual-chamber bijection report.
//!
//! Output is deterministic JSON on stdout: sorted keys, sorted lists,
//! 1-based index sets. Exit codes: 0 = success (verdict true), 1 = verdict
//! false (or failed bijection), 2 = error.

mod input;
mod render;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};
use std::path::PathBuf;

use supernormal::chamber::chamber_complex;
use supernormal::fixtures::catalog;
use supernormal::hilbert::hilbert_basis;
use supernormal::ideal::{
    buchberger_reduced, groebner_cone, initial_ideal, lattice_ideal, WeightOrder,
};
use supernormal::limits::Limits;
use supernormal::linear::Q;
use supernormal::matrix::IntMatrix;
use supernormal::polygon::{
    emit_svg, polygon_chamber_complex, LatticePolygon, SvgOptions,
};
use supernormal::polyhedron::{is_tight, tighten};
use supernormal::supernormal::{is_normal, is_pointed, is_supernormal, is_tdi};
use supernormal::triangulate::{all_triangulations, is_regular};
use supernormal::virtualch::{verify_bijection, virtual_chambers};

use input::{parse_i64s, parse_integers, parse_vertices, resolve_matrix};
use render::{bigs, binomial, monomial, one_based, q_str};

#[derive(Parser)]
#[command(
    name = "snv",
    version,
    about = "Exact toolkit for integer vector configurations",
    propagate_version = true
)]
struct Cli {
    /// Raise the built-in safety limits (dimension, vector count, lattice
    /// points, degree, cell count) for deliberately large computations.
    #[arg(long, global = true)]
    unsafe_large: bool,
    #[command(subcommand)]
    command: Command,
}

/// Matrix input: exactly one of a named fixture, an inline string, or a file.
#[derive(Args)]
struct MatrixInput {
    /// Named configuration from the catalog (see `snv fixtures list`).
    #[arg(long)]
    fixture: Option<String>,
    /// Inline matrix "m n@row@row", rows of whitespace-separated integers.
    #[arg(long, allow_hyphen_values = true)]
    matrix: Option<String>,
    /// Matrix file: JSON {"rows": [[...]]}, the inline "@" form, or one
    /// row per line.
    #[arg(long)]
    file: Option<PathBuf>,
}

impl MatrixInput {
    fn resolve(&self) -> Result<IntMatrix> {
        resolve_matrix(&self.fixture, &self.matrix, &self.file)
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum CheckKind {
    Normal,
    Supernormal,
    Tight,
    Tdi,
}

#[derive(Copy, Clone, ValueEnum)]
enum PolygonReport {
    Chambers,
    Mu,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Verdict with witness: normal, supernormal, tight, or tdi.
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        #[command(flatten)]
        input: MatrixInput,
        /// Right-hand-side bounds for tight/tdi, e.g. --c "1 1 1".
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
    },
    /// Hilbert basis of the cone spanned by the columns.
    Hilbert {
        #[command(flatten)]
        input: MatrixInput,
    },
    /// The dual configuration: a basis of the linear relations among the
    /// columns, one relation per row.
    Gale {
        #[command(flatten)]
        input: MatrixInput,
    },
    /// All triangulations of the column configuration, with regularity.
    Triangulations {
        #[command(flatten)]
        input: MatrixInput,
        /// Only triangulations in which every column spans a ray.
        #[arg(long)]
        all_columns: bool,
    },
    /// Chamber complex of the column configuration: census and chambers.
    Chambers {
        #[command(flatten)]
        input: MatrixInput,
    },
    /// Planar chamber complex of a convex lattice polygon.
    Polygon {
        #[arg(value_enum)]
        report: PolygonReport,
        /// Axis-parallel rectangle [0,A] x [0,B].
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        rect: Option<Vec<i64>>,
        /// Vertices "x y, x y, ..." in boundary order.
        #[arg(long, allow_hyphen_values = true)]
        vertices: Option<String>,
        /// Output path for the SVG report.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Reduced Gröbner basis of the lattice ideal under a weight order.
    Gb {
        #[command(flatten)]
        input: MatrixInput,
        /// Variable weights, one per column, e.g. --omega "0 0 0 0 1 4 1 0".
        #[arg(long, allow_hyphen_values = true)]
        omega: Option<String>,
        /// Weight point in the column space, e.g. --w "2 2 1".
        #[arg(long, allow_hyphen_values = true)]
        w: Option<String>,
    },
    /// Initial ideal of the lattice ideal at a weight point.
    Initial {
        #[command(flatten)]
        input: MatrixInput,
        /// Weight point in the column space, e.g. --w "2 2 1".
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// Virtual chambers, virtual initial ideals, and the bijection report.
    Virtual {
        #[command(flatten)]
        input: MatrixInput,
        /// Certification degree for the graded check of each ideal.
        #[arg(long, default_value_t = 6)]
        degree: usize,
        /// Include the chamber listings in the output.
        #[arg(long)]
        list: bool,
    },
    /// The built-in configuration catalog.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Subcommand)]
enum FixturesAction {
    /// List every fixture with its dimensions and description.
    List,
}

fn limits(unsafe_large: bool) -> Limits {
    if unsafe_large {
        Limits {
            max_dim: 16,
            max_vectors: 512,
            max_lattice_points: 2_000_000,
            max_degree: 512,
            max_cells: 10_000_000,
        }
    } else {
        Limits::default()
    }
}

fn emit(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("JSON serialization"));
}

fn main() {
    let cli = Cli::parse();
    let lim = limits(cli.unsafe_large);
    match run(cli.command, &lim) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}

fn run(command: Command, lim: &Limits) -> Result<i32> {
    match command {
        Command::Check { kind, input, c } => cmd_check(kind, &input, c.as_deref(), lim),
        Command::Hilbert { input } => cmd_hilbert(&input, lim),
        Command::Gale { input } => cmd_gale(&input),
        Command::Triangulations { input, all_columns } => {
            cmd_triangulations(&input, all_columns, lim)
        }
        Command::Chambers { input } => cmd_chambers(&input, lim),
        Command::Polygon { report, rect, vertices, out } => {
            cmd_polygon(report, rect, vertices.as_deref(), out.as_deref(), lim)
        }
        Command::Gb { input, omega, w } => {
            cmd_gb(&input, omega.as_deref(), w.as_deref(), lim)
        }
        Command::Initial { input, w } => cmd_initial(&input, &w, lim),
        Command::Virtual { input, degree, list } => cmd_virtual(&input, degree, list, lim),
        Command::Fixtures { action: FixturesAction::List } => cmd_fixtures_list(),
    }
}

fn bounds_arg(c: Option<&str>) -> Result<Vec<BigInt>> {
    let s = c.ok_or_else(|| anyhow!("this check needs bounds: pass --c \"c1 c2 ...\""))?;
    parse_integers(s)
}

fn cmd_check(kind: CheckKind, input: &MatrixInput, c: Option<&str>, lim: &Limits) -> Result<i32> {
    let b = input.resolve()?;
    let (value, verdict) = match kind {
        CheckKind::Normal => {
            let report = is_normal(&b, lim)?;
            let mut out = json!({
                "kind": "normal",
                "pointed": is_pointed(&b),
                "verdict": report.normal,
            });
            if let Some(p) = &report.witness {
                out["witness"] = json!({ "point": bigs(p) });
            }
            (out, report.normal)
        }
        CheckKind::Supernormal => {
            let report = is_supernormal(&b, lim)?;
            let mut out = json!({
                "kind": "supernormal",
                "pointed": is_pointed(&b),
                "verdict": report.supernormal,
            });
            if let Some(w) = &report.witness {
                out["witness"] = json!({
                    "point": bigs(&w.point),
                    "subset": one_based(&w.subset),
                });
            }
            (out, report.supernormal)
        }
        CheckKind::Tight => {
            let c = bounds_arg(c)?;
            if c.len() != b.ncols() {
                bail!("--c must have one bound per column ({})", b.ncols());
            }
            let verdict = is_tight(&b, &c);
            let mut out = json!({
                "bounds": bigs(&c),
                "kind": "tight",
                "verdict": verdict,
            });
            if let Ok(t) = tighten(&b, &c) {
                out["tightened"] = bigs(&t);
            }
            (out, verdict)
        }
        CheckKind::Tdi => {
            let c = bounds_arg(c)?;
            if c.len() != b.ncols() {
                bail!("--c must have one bound per column ({})", b.ncols());
            }
            let report = is_tdi(&b, &c, lim)?;
            let mut out = json!({
                "bounds": bigs(&c),
                "kind": "tdi",
                "verdict": report.tdi,
            });
            if let Some(active) = &report.face_active {
                out["face_active"] = json!(one_based(active));
            }
            if let Some(p) = &report.missing_point {
                out["missing_point"] = bigs(p);
            }
            (out, report.tdi)
        }
    };
    emit(&value);
    Ok(if verdict { 0 } else { 1 })
}

fn cmd_hilbert(input: &MatrixInput, lim: &Limits) -> Result<i32> {
    let b = input.resolve()?;
    let basis = hilbert_basis(&b.columns(), b.nrows(), lim)?;
    emit(&json!({
        "count": basis.len(),
        "generators": basis.iter().map(|g| bigs(g)).collect::<Vec<_>>(),
    }));
    Ok(0)
}

fn cmd_gale(input: &MatrixInput) -> Result<i32> {
    let b = input.resolve()?;
    let dual = b.gale_dual();
    let rows: Vec<Value> =
        (0..dual.nrows()).map(|i| bigs(&dual.row(i))).collect();
    emit(&json!({
        "rows": rows,
        "shape": [dual.nrows(), dual.ncols()],
    }));
    Ok(0)
}

fn cmd_triangulations(input: &MatrixInput, all_columns: bool, lim: &Limits) -> Result<i32> {
    let b = input.resolve()?;
    let tris = all_triangulations(&b, all_columns, lim)?;
    let mut listings: Vec<Value> = Vec::with_capacity(tris.len());
    for cells in &tris {
        let weights = is_regular(&b, cells, lim)?;
        let mut entry = json!({
            "cells": cells.iter().map(|c| one_based(c)).collect::<Vec<_>>(),
            "regular": weights.is_some(),
        });
        if let Some(ws) = weights {
            entry["weights"] = bigs(&ws);
        }
        listings.push(entry);
    }
    emit(&json!({
        "count": tris.len(),
        "triangulations": listings,
    }));
    Ok(0)
}

fn cmd_chambers(input: &MatrixInput, lim: &Limits) -> Result<i32> {
    let b = input.resolve()?;
    let complex = chamber_complex(&b, lim)?;
    let census: serde_json::Map<String, Value> = complex
        .census()
        .into_iter()
        .map(|(facets, count)| (facets.to_string(), json!(count)))
        .collect();
    let chambers: Vec<Value> = complex
        .chambers
        .iter()
        .map(|ch| {
            json!({
                "defining": ch.defining.iter().map(|s| one_based(s)).collect::<Vec<_>>(),
                "facets": ch.facets,
                "sample": ch.sample.iter().map(q_str).collect::<Vec<_>>(),
            })
        })
        .collect();
    emit(&json!({
        "census": census,
        "chambers": chambers,
        "count": complex.chambers.len(),
    }));
    Ok(0)
}

fn polygon_arg(rect: Option<Vec<i64>>, vertices: Option<&str>) -> Result<LatticePolygon> {
    match (rect, vertices) {
        (Some(dims), None) => {
            let [a, bb] = dims[..] else { bail!("--rect takes two integers") };
            if a <= 0 || bb <= 0 {
                bail!("--rect sides must be positive");
            }
            Ok(LatticePolygon::new(&[(0, 0), (a, 0), (a, bb), (0, bb)])?)
        }
        (None, Some(s)) => Ok(LatticePolygon::new(&parse_vertices(s)?)?),
        (None, None) => bail!("no polygon: pass --rect A B or --vertices \"x y, ...\""),
        _ => bail!("pass exactly one of --rect, --vertices"),
    }
}

fn cmd_polygon(
    report: PolygonReport,
    rect: Option<Vec<i64>>,
    vertices: Option<&str>,
    out: Option<&std::path::Path>,
    lim: &Limits,
) -> Result<i32> {
    let polygon = polygon_arg(rect, vertices)?;
    let pcc = polygon_chamber_complex(&polygon, lim)?;
    match report {
        PolygonReport::Chambers => {
            let faces_by_edges: serde_json::Map<String, Value> = pcc
                .census
                .iter()
                .map(|(edges, count)| (edges.to_string(), json!(count)))
                .collect();
            emit(&json!({
                "faces_by_edges": faces_by_edges,
                "mu": pcc.mu,
                "total_faces": pcc.census.values().sum::<usize>(),
            }));
        }
        PolygonReport::Mu => {
            emit(&json!({ "mu": pcc.mu }));
        }
        PolygonReport::Svg => {
            let svg = emit_svg(&pcc, &SvgOptions::default());
            match out {
                Some(path) => {
                    std::fs::write(path, &svg)
                        .with_context(|| format!("cannot write {}", path.display()))?;
                    emit(&json!({
                        "mu": pcc.mu,
                        "path": path.display().to_string(),
                        "total_faces": pcc.census.values().sum::<usize>(),
                    }));
                }
                None => println!("{svg}"),
            }
        }
    }
    Ok(0)
}

fn weight_order(
    b: &IntMatrix,
    omega: Option<&str>,
    w: Option<&str>,
) -> Result<WeightOrder> {
    match (omega, w) {
        (Some(s), None) => {
            let omega = parse_i64s(s)?;
            if omega.len() != b.ncols() {
                bail!("--omega must have one weight per column ({})", b.ncols());
            }
            if omega.iter().any(|&x| x < 0) {
                bail!("--omega weights must be nonnegative");
            }
            Ok(WeightOrder::from_omega(b, &omega))
        }
        (None, Some(s)) => {
            let w = parse_i64s(s)?;
            if w.len() != b.nrows() {
                bail!("--w must have one entry per row ({})", b.nrows());
            }
            Ok(WeightOrder::from_integer_w(b, &w)?)
        }
        (None, None) => bail!("no order: pass --omega (per-column) or --w (point)"),
        _ => bail!("pass exactly one of --omega, --w"),
    }
}

fn cmd_gb(input: &MatrixInput, omega: Option<&str>, w: Option<&str>, lim: &Limits) -> Result<i32> {
    let b = input.resolve()?;
    let order = weight_order(&b, omega, w)?;
    let ideal = lattice_ideal(&b, lim)?;
    let gb = buchberger_reduced(&ideal, &order, lim)?;
    let cone = groebner_cone(&gb, &b)?;
    let elements: Vec<Value> = gb
        .elements
        .iter()
        .zip(&cone.flippable)
        .map(|(g, &flip)| {
            json!({
                "flippable": flip,
                "initial": g.plus,
                "rendered": binomial(&g.plus, &g.minus),
                "trailing": g.minus,
            })
        })
        .collect();
    emit(&json!({
        "count": gb.elements.len(),
        "elements": elements,
        "facet_count": cone.facets.len(),
        "flippable_count": cone.flippable.iter().filter(|&&f| f).count(),
    }));
    Ok(0)
}

fn cmd_initial(input: &MatrixInput, w: &str, lim: &Limits) -> Result<i32> {
    let b = input.resolve()?;
    let w: Vec<Q> = parse_i64s(w)?.into_iter().map(|x| Q::from(BigInt::from(x))).collect();
    if w.len() != b.nrows() {
        bail!("--w must have one entry per row ({})", b.nrows());
    }
    let ideal = lattice_ideal(&b, lim)?;
    let init = initial_ideal(&ideal, &w, lim)?;
    let monomials: Vec<Value> = init
        .monomials
        .iter()
        .map(|m| json!({ "exponents": m, "rendered": monomial(m) }))
        .collect();
    let binomials: Vec<Value> = init
        .binomials
        .iter()
        .map(|g| {
            json!({
                "minus": g.minus,
                "plus": g.plus,
                "rendered": binomial(&g.plus, &g.minus),
            })
        })
        .collect();
    emit(&json!({
        "binomials": binomials,
        "is_monomial": init.is_monomial(),
        "monomials": monomials,
    }));
    Ok(0)
}

fn cmd_virtual(input: &MatrixInput, degree: usize, list: bool, lim: &Limits) -> Result<i32> {
    let b = input.resolve()?;
    let report = verify_bijection(&b, degree, lim)?;
    let summary = format!(
        "{} chambers, {} ideals, bijection {}",
        report.chamber_count,
        report.ideal_count,
        if report.passed() { "OK" } else { "FAILED" }
    );
    let mut out = json!({
        "chambers": report.chamber_count,
        "degree": degree,
        "distinct_ideals": report.distinct_ideals,
        "errors": report.errors,
        "ideals": report.ideal_count,
        "passed": report.passed(),
        "regular": report.regular_count,
        "round_trip_failures": report.round_trip_failures,
        "summary": summary,
    });
    if list {
        let chambers = virtual_chambers(&b, lim)?;
        out["listings"] = Value::Array(
            chambers
                .iter()
                .map(|vc| {
                    json!({
                        "cells": vc.cells.iter().map(|c| one_based(c)).collect::<Vec<_>>(),
                        "regular": vc.regular,
                    })
                })
                .collect(),
        );
    }
    emit(&out);
    Ok(if report.passed() { 0 } else { 1 })
}

fn cmd_fixtures_list() -> Result<i32> {
    let entries: Vec<Value> = catalog()
        .iter()
        .map(|f| {
            json!({
                "cols": f.matrix.ncols(),
                "description": f.description,
                "id": f.id,
                "rows": f.matrix.nrows(),
            })
        })
        .collect();
    emit(&json!({ "count": entries.len(), "fixtures": entries }));
    Ok(0)
}
