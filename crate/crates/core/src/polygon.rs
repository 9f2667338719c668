//! Lattice polygons in the plane: the chamber complex cut out by all
//! segments between lattice points, the census of its faces by side count,
//! the maximum side count μ, the cone configuration over the polygon, and a
//! deterministic SVG rendering of the complex.

use crate::arrangement::{build_arrangement, Arrangement, Point};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linear::{q_int, Q};
use crate::matrix::IntMatrix;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// A convex polygon with integer vertices, stored counterclockwise, along
/// with every lattice point inside or on it (sorted by (y, x)).
#[derive(Debug, Clone)]
pub struct LatticePolygon {
    pub vertices: Vec<(BigInt, BigInt)>,
    pub lattice_points: Vec<(BigInt, BigInt)>,
}

impl LatticePolygon {
    /// Build from integer vertex coordinates in boundary order (either
    /// orientation; stored counterclockwise). Rejects polygons that are not
    /// strictly convex (fewer than 3 vertices, repeated or collinear
    /// corners, or self-intersections).
    pub fn new(vertices: &[(i64, i64)]) -> Result<LatticePolygon> {
        let vs: Vec<(BigInt, BigInt)> = vertices
            .iter()
            .map(|&(x, y)| (BigInt::from(x), BigInt::from(y)))
            .collect();
        Self::from_bigints(vs)
    }

    pub fn from_bigints(mut vs: Vec<(BigInt, BigInt)>) -> Result<LatticePolygon> {
        if vs.len() < 3 {
            return Err(Error::BadInput("a polygon needs at least 3 vertices".into()));
        }
        let n = vs.len();
        let mut area2 = BigInt::zero();
        for k in 0..n {
            let p = &vs[k];
            let q = &vs[(k + 1) % n];
            area2 += &p.0 * &q.1 - &q.0 * &p.1;
        }
        if area2.is_zero() {
            return Err(Error::BadInput("polygon has zero area".into()));
        }
        if area2.is_negative() {
            vs.reverse();
        }
        // Strict convexity: every consecutive turn is a strict left turn.
        for k in 0..n {
            let a = &vs[(k + n - 1) % n];
            let b = &vs[k];
            let c = &vs[(k + 1) % n];
            let cross = (&b.0 - &a.0) * (&c.1 - &b.1) - (&b.1 - &a.1) * (&c.0 - &b.0);
            if !cross.is_positive() {
                return Err(Error::BadInput(
                    "polygon vertices must make strict counterclockwise turns".into(),
                ));
            }
        }
        let lattice_points = enumerate_lattice_points(&vs);
        Ok(LatticePolygon { vertices: vs, lattice_points })
    }

    /// Whether an integer point lies inside or on the polygon.
    pub fn contains(&self, p: &(BigInt, BigInt)) -> bool {
        let n = self.vertices.len();
        (0..n).all(|k| {
            let a = &self.vertices[k];
            let b = &self.vertices[(k + 1) % n];
            let cross = (&b.0 - &a.0) * (&p.1 - &a.1) - (&b.1 - &a.1) * (&p.0 - &a.0);
            !cross.is_negative()
        })
    }
}

/// All lattice points inside or on the convex polygon, sorted by (y, x):
/// rows bottom to top, left to right within a row.
fn enumerate_lattice_points(vs: &[(BigInt, BigInt)]) -> Vec<(BigInt, BigInt)> {
    let xs: Vec<&BigInt> = vs.iter().map(|v| &v.0).collect();
    let ys: Vec<&BigInt> = vs.iter().map(|v| &v.1).collect();
    let (xmin, xmax) = (xs.iter().min().unwrap(), xs.iter().max().unwrap());
    let (ymin, ymax) = (ys.iter().min().unwrap(), ys.iter().max().unwrap());
    let inside = |p: &(BigInt, BigInt)| -> bool {
        let n = vs.len();
        (0..n).all(|k| {
            let a = &vs[k];
            let b = &vs[(k + 1) % n];
            let cross = (&b.0 - &a.0) * (&p.1 - &a.1) - (&b.1 - &a.1) * (&p.0 - &a.0);
            !cross.is_negative()
        })
    };
    let mut out = Vec::new();
    let mut y = (*ymin).clone();
    while &y <= *ymax {
        let mut x = (*xmin).clone();
        while &x <= *xmax {
            let p = (x.clone(), y.clone());
            if inside(&p) {
                out.push(p);
            }
            x += 1;
        }
        y += 1;
    }
    out
}

/// The chamber complex of the polygon: the arrangement of all segments
/// between pairs of its lattice points, the census of bounded faces by
/// side count, and μ = the maximum side count.
#[derive(Debug, Clone)]
pub struct PlanarChamberComplex {
    pub polygon: LatticePolygon,
    pub arrangement: Arrangement,
    pub census: BTreeMap<usize, usize>,
    pub mu: usize,
}

pub fn polygon_chamber_complex(
    p: &LatticePolygon,
    limits: &Limits,
) -> Result<PlanarChamberComplex> {
    let pts = &p.lattice_points;
    if pts.len() > limits.max_lattice_points {
        return Err(Error::TooLarge(format!(
            "polygon has {} lattice points; the limit is {} (raise it explicitly to proceed)",
            pts.len(),
            limits.max_lattice_points
        )));
    }
    if pts.len() < 2 {
        return Err(Error::BadInput("polygon has fewer than 2 lattice points".into()));
    }
    let q = |v: &BigInt| -> Q { Q::from(v.clone()) };
    let mut segments: Vec<(Point, Point)> = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            segments.push(((q(&pts[i].0), q(&pts[i].1)), (q(&pts[j].0), q(&pts[j].1))));
        }
    }
    let arrangement = build_arrangement(&segments)?;
    let census = arrangement.census();
    let mu = census.keys().max().copied().unwrap_or(0);
    Ok(PlanarChamberComplex { polygon: p.clone(), arrangement, census, mu })
}

/// μ(P): the maximum number of sides of any chamber of the polygon.
pub fn mu(p: &LatticePolygon, limits: &Limits) -> Result<usize> {
    Ok(polygon_chamber_complex(p, limits)?.mu)
}

/// The cone configuration over the polygon: one column (1, u, v) per
/// lattice point (u, v) of P, in (v, u)-sorted order (rows bottom to top).
pub fn cone_over_polygon(p: &LatticePolygon) -> IntMatrix {
    let cols: Vec<Vec<BigInt>> = p
        .lattice_points
        .iter()
        .map(|(u, v)| vec![BigInt::from(1), u.clone(), v.clone()])
        .collect();
    IntMatrix::from_cols(&cols)
}

#[derive(Debug, Clone, Copy)]
pub struct SvgOptions {
    /// Fill bounded faces with a color keyed to their side count.
    pub shade_faces: bool,
    /// Outline the faces achieving the maximum side count.
    pub highlight_max: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions { shade_faces: true, highlight_max: true }
    }
}

/// Deterministic SVG rendering of the planar chamber complex: shaded
/// faces, all arrangement segments, and the lattice points. Coordinates
/// are scaled to integers (pixels) and the y-axis is flipped so the
/// picture matches the usual orientation.
pub fn emit_svg(pcc: &PlanarChamberComplex, options: &SvgOptions) -> String {
    let arr = &pcc.arrangement;
    // Common denominator of all vertex coordinates.
    let mut denom = BigInt::from(1);
    for (x, y) in &arr.vertices {
        for d in [x.denom(), y.denom()] {
            let g = crate::matrix::gcd_of(&[denom.clone(), d.clone()]);
            denom = denom / g * d;
        }
    }
    // Pixels per lattice unit: keep the longer polygon extent near 640px.
    let xs: Vec<&BigInt> = pcc.polygon.vertices.iter().map(|v| &v.0).collect();
    let ys: Vec<&BigInt> = pcc.polygon.vertices.iter().map(|v| &v.1).collect();
    let xmin = (*xs.iter().min().unwrap()).clone();
    let xmax = (*xs.iter().max().unwrap()).clone();
    let ymin = (*ys.iter().min().unwrap()).clone();
    let ymax = (*ys.iter().max().unwrap()).clone();
    let extent = (&xmax - &xmin).max(&ymax - &ymin).to_i64().unwrap_or(1).max(1);
    let unit = (640 / extent).max(8);
    let margin: i64 = 24;
    // Pixel coordinates: px = (x − xmin)·unit + margin, with y flipped.
    let scale = |v: &Q, min: &BigInt| -> BigInt {
        ((v - Q::from(min.clone())) * q_int(unit)).to_integer()
    };
    let px = |p: &Point| -> (BigInt, BigInt) {
        let sx = scale(&p.0, &xmin) + margin;
        let sy = scale(&(Q::from(ymax.clone()) - &p.1 + Q::from(ymin.clone())), &ymin) + margin;
        (sx, sy)
    };
    let width = (&xmax - &xmin).to_i64().unwrap_or(1) * unit + 2 * margin;
    let height = (&ymax - &ymin).to_i64().unwrap_or(1) * unit + 2 * margin;

    let palette = ["#c6dbef", "#fdd0a2", "#c7e9c0", "#dadaeb", "#fcbba1", "#fee391"];
    let mut svg = String::new();
    let _ = write!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    );
    let _ = write!(svg, "<rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>\n");
    if options.shade_faces {
        for f in &arr.faces {
            if f.outer {
                continue;
            }
            let mut pts_attr = String::new();
            for &vi in &f.cycle {
                let (sx, sy) = px(&arr.vertices[vi]);
                let _ = write!(pts_attr, "{sx},{sy} ");
            }
            let fill = palette[(f.sides.max(3) - 3) % palette.len()];
            let highlight = options.highlight_max && f.sides == pcc.mu;
            let stroke = if highlight { " stroke=\"#d62728\" stroke-width=\"3\"" } else { "" };
            let _ = write!(
                svg,
                "<polygon points=\"{}\" fill=\"{}\"{}/>\n",
                pts_attr.trim_end(),
                fill,
                stroke
            );
        }
    }
    for &(u, v) in &arr.edges {
        let (x1, y1) = px(&arr.vertices[u]);
        let (x2, y2) = px(&arr.vertices[v]);
        let _ = write!(
            svg,
            "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"#555555\" stroke-width=\"1\"/>\n"
        );
    }
    for (x, y) in &pcc.polygon.lattice_points {
        let (cx, cy) = px(&(Q::from(x.clone()), Q::from(y.clone())));
        let _ = write!(
            svg,
            "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"4\" fill=\"#222222\"/>\n"
        );
    }
    svg.push_str("</svg>\n");
    svg
}
