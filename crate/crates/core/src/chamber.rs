//! Chamber complexes of configurations in dimension at most 3: the common
//! refinement of all cones spanned by linearly independent column subsets,
//! computed by slicing the cone of the configuration along every hyperplane
//! spanned by independent subsets one smaller.
//!
//! Rank 1 and 2 are handled by exact angular sweeps; rank 3 requires a
//! pointed cone and reduces to a planar segment arrangement on the
//! cross-section polygon, preferring the section at height x₁ = 1 when the
//! configuration lives there.

use crate::arrangement::{build_arrangement, Point};
use crate::cone::{cone_of_columns, Cone};
use crate::error::{Error, Result};
use crate::hilbert::positive_functional;
use crate::limits::Limits;
use crate::linear::{solve_square, Q};
use crate::matrix::{primitive_vector, IntMatrix};
use crate::supernormal::validate_configuration;
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

/// One maximal chamber: the independent rank-size column subsets whose
/// cones contain it, a rational point in its relative interior (ambient
/// coordinates), and the number of facets of the chamber cone.
#[derive(Debug, Clone)]
pub struct Chamber {
    pub defining: Vec<Vec<usize>>,
    pub sample: Vec<Q>,
    pub facets: usize,
}

#[derive(Debug, Clone)]
pub struct ChamberComplex {
    pub chambers: Vec<Chamber>,
}

impl ChamberComplex {
    /// Census of chambers by facet count.
    pub fn census(&self) -> std::collections::BTreeMap<usize, usize> {
        let mut out = std::collections::BTreeMap::new();
        for c in &self.chambers {
            *out.entry(c.facets).or_insert(0) += 1;
        }
        out
    }
}

/// The chamber complex of a configuration of rank at most 3. Rank-3 cones
/// must be pointed (the cross-section construction needs a bounded
/// polygon); full-dimensional complete fans in the plane are fine.
pub fn chamber_complex(b: &IntMatrix, limits: &Limits) -> Result<ChamberComplex> {
    validate_configuration(b, limits)?;
    let (basis, coords) = b.span_coordinates();
    let r = coords.nrows();
    if r > 3 {
        return Err(Error::Unsupported(
            "chamber complexes are computed for configurations of rank at most 3".into(),
        ));
    }
    let lift = |y: &[Q]| -> Vec<Q> {
        (0..basis.nrows())
            .map(|i| {
                (0..basis.ncols())
                    .map(|k| Q::from(basis.get(i, k).clone()) * &y[k])
                    .sum::<Q>()
            })
            .collect()
    };
    let chambers_in_coords = match r {
        1 => rank1_chambers(&coords),
        2 => rank2_chambers(&coords),
        3 => rank3_chambers(&coords)?,
        _ => unreachable!("rank 0 is rejected by validation"),
    };
    let n = coords.ncols();
    let mut chambers = Vec::new();
    for (sample, facets) in chambers_in_coords {
        let mut defining: Vec<Vec<usize>> = Vec::new();
        for sel in (0..n).combinations(r) {
            let sub = coords.select_cols(&sel);
            if sub.determinant().is_zero() {
                continue;
            }
            let a: Vec<Vec<Q>> = (0..r)
                .map(|i| sel.iter().map(|&j| Q::from(coords.get(i, j).clone())).collect())
                .collect();
            let lambda = solve_square(&a, &sample).expect("independent columns");
            if lambda.iter().all(|l| !l.is_negative()) {
                defining.push(sel);
            }
        }
        chambers.push(Chamber { defining, sample: lift(&sample), facets });
    }
    Ok(ChamberComplex { chambers })
}

/// Rank 1: the cone is a ray or the whole line; chambers are the present
/// sign directions.
fn rank1_chambers(coords: &IntMatrix) -> Vec<(Vec<Q>, usize)> {
    let mut has_pos = false;
    let mut has_neg = false;
    for j in 0..coords.ncols() {
        match coords.get(0, j).sign() {
            num_bigint::Sign::Plus => has_pos = true,
            num_bigint::Sign::Minus => has_neg = true,
            num_bigint::Sign::NoSign => {}
        }
    }
    let mut out = Vec::new();
    if has_pos {
        out.push((vec![Q::from(BigInt::from(1))], 1));
    }
    if has_neg {
        out.push((vec![Q::from(BigInt::from(-1))], 1));
    }
    out
}

/// Rank 2: slice the cone along the line of every column. The chamber
/// fan's rays are the column directions (both signs when the opposite
/// direction still lies in the cone) plus the boundary rays; chambers are
/// the sectors between angularly consecutive rays.
fn rank2_chambers(coords: &IntMatrix) -> Vec<(Vec<Q>, usize)> {
    let cone = cone_of_columns(coords);
    let mut dirs: Vec<Vec<BigInt>> = Vec::new();
    let push_dir = |d: Vec<BigInt>, cone: &Cone, dirs: &mut Vec<Vec<BigInt>>| {
        if d.iter().all(|x| x.is_zero()) {
            return;
        }
        let p = primitive_vector(&d);
        if cone.contains_int(&p) && !dirs.contains(&p) {
            dirs.push(p);
        }
    };
    for j in 0..coords.ncols() {
        let c = coords.col(j);
        push_dir(c.clone(), &cone, &mut dirs);
        push_dir(c.iter().map(|x| -x).collect(), &cone, &mut dirs);
    }
    for ray in &cone.rays {
        push_dir(ray.clone(), &cone, &mut dirs);
    }
    for line in &cone.lineality {
        push_dir(line.clone(), &cone, &mut dirs);
        push_dir(line.iter().map(|x| -x).collect(), &cone, &mut dirs);
    }
    // Counterclockwise angular sort from the positive x-axis.
    dirs.sort_by(|d1, d2| {
        let half = |d: &Vec<BigInt>| -> u8 {
            if d[1].is_positive() || (d[1].is_zero() && d[0].is_positive()) {
                0
            } else {
                1
            }
        };
        half(d1).cmp(&half(d2)).then_with(|| {
            let cross = &d1[0] * &d2[1] - &d1[1] * &d2[0];
            if cross.is_positive() {
                Ordering::Less
            } else if cross.is_negative() {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        })
    });
    let k = dirs.len();
    let mut out = Vec::new();
    for i in 0..k {
        let d1 = &dirs[i];
        let d2 = &dirs[(i + 1) % k];
        let det = &d1[0] * &d2[1] - &d1[1] * &d2[0];
        if !det.is_positive() {
            continue; // antipodal pair or the wraparound arc of a pointed cone
        }
        let mid: Vec<BigInt> = vec![&d1[0] + &d2[0], &d1[1] + &d2[1]];
        debug_assert!(cone.contains_int(&mid), "sector between cone directions stays inside");
        out.push((mid.into_iter().map(Q::from).collect(), 2));
    }
    out
}

/// Rank 3: cross-section construction. Every slicing plane spanned by two
/// independent columns meets the section plane in the line through the two
/// column section points, so the chamber complex is the planar arrangement
/// of all segments between section points.
fn rank3_chambers(coords: &IntMatrix) -> Result<Vec<(Vec<Q>, usize)>> {
    let n = coords.ncols();
    let cols = coords.columns();
    // Prefer the section at height x₁ = 1 when the configuration allows it.
    let f: Vec<BigInt> = if (0..n).all(|j| coords.get(0, j).is_positive()) {
        vec![BigInt::from(1), BigInt::zero(), BigInt::zero()]
    } else {
        positive_functional(&cols, 3).ok_or_else(|| {
            Error::NotPointed(
                "rank-3 chamber complexes need a pointed cone for the cross-section".into(),
            )
        })?
    };
    // Affine chart on the section plane {x : f·x = 1}: x = x0 + U·y with
    // U a lattice basis of f⊥ and x0 = f/(f·f).
    let fmat = IntMatrix::from_bigint_rows(vec![f.clone()]);
    let u = fmat.kernel_basis(); // 3×2
    let ff: BigInt = f.iter().map(|x| x * x).sum();
    let x0: Vec<Q> = f.iter().map(|x| Q::new(x.clone(), ff.clone())).collect();
    // Invert the chart on two independent rows of U.
    let mut rows = None;
    'rows: for i in 0..3 {
        for j in i + 1..3 {
            let det = u.get(i, 0) * u.get(j, 1) - u.get(j, 0) * u.get(i, 1);
            if !det.is_zero() {
                rows = Some((i, j));
                break 'rows;
            }
        }
    }
    let (ri, rj) = rows.expect("a rank-2 matrix has two independent rows");
    let chart = |x: &[Q]| -> Vec<Q> {
        let a: Vec<Vec<Q>> = vec![
            vec![Q::from(u.get(ri, 0).clone()), Q::from(u.get(ri, 1).clone())],
            vec![Q::from(u.get(rj, 0).clone()), Q::from(u.get(rj, 1).clone())],
        ];
        let rhs = vec![&x[ri] - &x0[ri], &x[rj] - &x0[rj]];
        solve_square(&a, &rhs).expect("chart rows are independent")
    };
    let unchart = |y: &[Q]| -> Vec<Q> {
        (0..3)
            .map(|i| {
                &x0[i]
                    + Q::from(u.get(i, 0).clone()) * &y[0]
                    + Q::from(u.get(i, 1).clone()) * &y[1]
            })
            .collect()
    };
    // Section points of the columns.
    let mut pts: Vec<Point> = Vec::new();
    for col in &cols {
        let h: BigInt = f.iter().zip(col).map(|(a, b)| a * b).sum();
        debug_assert!(h.is_positive());
        let x: Vec<Q> = col.iter().map(|c| Q::new(c.clone(), h.clone())).collect();
        let y = chart(&x);
        pts.push((y[0].clone(), y[1].clone()));
    }
    let mut segments: Vec<(Point, Point)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if pts[i] != pts[j] {
                segments.push((pts[i].clone(), pts[j].clone()));
            }
        }
    }
    if segments.is_empty() {
        return Err(Error::BadInput(
            "all columns are parallel; the configuration has rank 1, not 3".into(),
        ));
    }
    let arr = build_arrangement(&segments)?;
    let mut out = Vec::new();
    for face in &arr.faces {
        if face.outer {
            continue;
        }
        let y = vec![face.centroid.0.clone(), face.centroid.1.clone()];
        out.push((unchart(&y), face.sides));
    }
    Ok(out)
}
