//! Exact integer feasibility and bounded lattice-point enumeration.
//!
//! `lattice_feasible` decides whether a system of linear equations and
//! (possibly strict) inequalities with rational coefficients has an integer
//! solution, and returns one when it does. No branch-and-bound heuristics
//! and no floating point: equalities are removed by solving over the
//! integers and substituting a lattice parametrization, and the remaining
//! inequality system is attacked recursively. When the rational relaxation
//! is bounded we enumerate an exact coordinate interval; when the recession
//! cone is full-dimensional we push a rational witness far enough along an
//! interior direction that rounding cannot leave the polyhedron; otherwise a
//! recession ray is straightened to a coordinate axis by a unimodular change
//! of variables, which removes one variable.

use crate::error::{Error, Result};
use crate::linear::{clear_denominators, rational_feasible, LinCon, Q, Rel};
use crate::matrix::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An integer inequality row: `coeffs . x <= rhs`.
#[derive(Debug, Clone)]
struct IRow {
    coeffs: Vec<BigInt>,
    rhs: BigInt,
}

/// Outcome of normalizing a constraint list to integer form.
struct Normalized {
    eq: Vec<IRow>,
    le: Vec<IRow>,
    trivially_infeasible: bool,
}

/// Scale every constraint to integer coefficients and an integer right-hand
/// side (jointly, so the inequality direction is preserved), and turn strict
/// inequalities into weak ones using integrality of the left-hand side.
fn normalize(cons: &[LinCon], nvars: usize) -> Normalized {
    let mut out = Normalized { eq: Vec::new(), le: Vec::new(), trivially_infeasible: false };
    for con in cons {
        assert_eq!(con.coeffs.len(), nvars, "constraint arity mismatch");
        let mut joint: Vec<Q> = con.coeffs.clone();
        joint.push(con.rhs.clone());
        let ints = clear_denominators(&joint);
        let coeffs = ints[..nvars].to_vec();
        let mut rhs = ints[nvars].clone();
        // clear_denominators returns the zero vector for an all-zero input.
        if coeffs.iter().all(|c| c.is_zero()) && rhs.is_zero() && !joint.iter().all(|q| q.is_zero())
        {
            // The row was identically zero on the left with zero right side
            // only if the whole row was zero; a nonzero rhs survives scaling.
            unreachable!("joint scaling preserves nonzero entries");
        }
        let rel = match con.rel {
            Rel::Lt => {
                rhs -= 1;
                Rel::Le
            }
            r => r,
        };
        if coeffs.iter().all(|c| c.is_zero()) {
            let ok = match rel {
                Rel::Eq => rhs.is_zero(),
                Rel::Le => !rhs.is_negative(),
                Rel::Lt => unreachable!(),
            };
            if !ok {
                out.trivially_infeasible = true;
            }
            continue;
        }
        match rel {
            Rel::Eq => out.eq.push(IRow { coeffs, rhs }),
            Rel::Le => out.le.push(IRow { coeffs, rhs }),
            Rel::Lt => unreachable!(),
        }
    }
    out
}

/// Decide integer feasibility of the given constraints in `nvars` unknowns
/// and produce a witness.
pub fn lattice_feasible(cons: &[LinCon], nvars: usize) -> Option<Vec<BigInt>> {
    let norm = normalize(cons, nvars);
    if norm.trivially_infeasible {
        return None;
    }
    if nvars == 0 {
        return Some(Vec::new());
    }
    if norm.eq.is_empty() {
        return solve_le(&norm.le, nvars);
    }
    // Remove equalities: solve M x = d over the integers and substitute
    // x = x0 + K t for a kernel lattice basis K.
    let m = IntMatrix::from_bigint_rows(norm.eq.iter().map(|r| r.coeffs.clone()).collect());
    let d: Vec<BigInt> = norm.eq.iter().map(|r| r.rhs.clone()).collect();
    let x0 = m.solve_integer(&d)?;
    let k = m.kernel_basis();
    let t_dim = k.ncols();
    let reduced: Vec<IRow> = norm
        .le
        .iter()
        .map(|row| {
            let shift: BigInt =
                row.coeffs.iter().zip(&x0).map(|(a, x)| a * x).sum();
            let coeffs: Vec<BigInt> = (0..t_dim)
                .map(|j| {
                    (0..nvars).map(|i| &row.coeffs[i] * k.get(i, j)).sum()
                })
                .collect();
            IRow { coeffs, rhs: &row.rhs - shift }
        })
        .collect();
    if t_dim == 0 {
        return if reduced.iter().all(|r| !r.rhs.is_negative()) { Some(x0) } else { None };
    }
    let t = solve_le(&reduced, t_dim)?;
    Some(
        (0..nvars)
            .map(|i| {
                let mut v = x0[i].clone();
                for j in 0..t_dim {
                    v += k.get(i, j) * &t[j];
                }
                v
            })
            .collect(),
    )
}

fn irow_holds(row: &IRow, x: &[BigInt]) -> bool {
    let lhs: BigInt = row.coeffs.iter().zip(x).map(|(a, v)| a * v).sum();
    lhs <= row.rhs
}

fn rows_to_lincons(rows: &[IRow]) -> Vec<LinCon> {
    rows.iter()
        .map(|r| LinCon {
            coeffs: r.coeffs.iter().map(|c| Q::from(c.clone())).collect(),
            rel: Rel::Le,
            rhs: Q::from(r.rhs.clone()),
        })
        .collect()
}

/// Integer feasibility of a pure inequality system `rows . x <= rhs`.
fn solve_le(rows: &[IRow], nvars: usize) -> Option<Vec<BigInt>> {
    if nvars == 0 {
        return if rows.iter().all(|r| !r.rhs.is_negative()) { Some(Vec::new()) } else { None };
    }
    let live: Vec<IRow> = rows.iter().filter(|r| !r.coeffs.iter().all(|c| c.is_zero())).cloned().collect();
    if rows.iter().any(|r| r.coeffs.iter().all(|c| c.is_zero()) && r.rhs.is_negative()) {
        return None;
    }
    if live.is_empty() {
        return Some(vec![BigInt::zero(); nvars]);
    }
    // Rational relaxation must be nonempty.
    let witness = rational_feasible(&rows_to_lincons(&live), nvars)?;
    // A nonzero recession direction (rows . x <= 0, x != 0), found by probing
    // each signed coordinate direction; none exists iff the relaxation is
    // bounded. This avoids computing the full recession cone, whose extreme
    // ray count can explode in high dimension.
    let recession = find_recession_vector(&live, nvars);
    if recession.is_none() {
        // Bounded polytope: enumerate an exact interval for the first
        // variable and recurse.
        let (lo, hi) = fm_interval(&live, nvars, 0);
        let lo = lo.expect("bounded polytope has a finite lower bound");
        let hi = hi.expect("bounded polytope has a finite upper bound");
        let mut v = lo.ceil().to_integer();
        let hi_int = hi.floor().to_integer();
        while v <= hi_int {
            let sub: Vec<IRow> = live
                .iter()
                .map(|r| IRow {
                    coeffs: r.coeffs[1..].to_vec(),
                    rhs: &r.rhs - &r.coeffs[0] * &v,
                })
                .collect();
            if let Some(rest) = solve_le(&sub, nvars - 1) {
                let mut full = vec![v];
                full.extend(rest);
                return Some(full);
            }
            v += 1;
        }
        return None;
    }
    // Try a full-dimensional recession direction: rows . z <= -1.
    let interior: Vec<LinCon> = live
        .iter()
        .map(|r| LinCon {
            coeffs: r.coeffs.iter().map(|c| Q::from(c.clone())).collect(),
            rel: Rel::Le,
            rhs: -Q::one(),
        })
        .collect();
    if let Some(z) = rational_feasible(&interior, nvars) {
        // Push the rational witness along z far enough that rounding each
        // coordinate to the nearest integer stays feasible, then round.
        let lambda: BigInt = live
            .iter()
            .map(|r| r.coeffs.iter().map(|c| c.abs()).sum::<BigInt>())
            .max()
            .unwrap_or_else(BigInt::zero)
            + 1;
        let lq = Q::from(lambda);
        let point: Vec<BigInt> = witness
            .iter()
            .zip(&z)
            .map(|(w, zi)| {
                let v = w + &lq * zi;
                // nearest integer: floor(v + 1/2)
                (v + BigRational::new(BigInt::one(), BigInt::from(2))).floor().to_integer()
            })
            .collect();
        debug_assert!(live.iter().all(|r| irow_holds(r, &point)));
        return Some(point);
    }
    // Otherwise straighten one recession direction to the first coordinate
    // axis by a unimodular substitution x = U y and drop that variable.
    let ray = recession.expect("unbounded branch has a recession vector");
    let (u, _v) = unimodular_with_first_column(&ray, nvars);
    // Transformed rows: (row . U) y <= rhs; first column is row . ray <= 0.
    let trows: Vec<IRow> = live
        .iter()
        .map(|r| IRow {
            coeffs: (0..nvars)
                .map(|j| (0..nvars).map(|i| &r.coeffs[i] * u.get(i, j)).sum())
                .collect(),
            rhs: r.rhs.clone(),
        })
        .collect();
    for t in &trows {
        debug_assert!(!t.coeffs[0].is_positive(), "recession ray must not increase any row");
    }
    let zero_rows: Vec<IRow> = trows
        .iter()
        .filter(|t| t.coeffs[0].is_zero())
        .map(|t| IRow { coeffs: t.coeffs[1..].to_vec(), rhs: t.rhs.clone() })
        .collect();
    let tail = solve_le(&zero_rows, nvars - 1)?;
    // Lift: raise y_0 until every strictly decreasing row is satisfied.
    let mut y0 = BigInt::zero();
    for t in &trows {
        if t.coeffs[0].is_negative() {
            let partial: BigInt = t.coeffs[1..].iter().zip(&tail).map(|(a, v)| a * v).sum();
            let need = &partial - &t.rhs; // need + a0*y0 <= 0  with a0 < 0
            if need.is_positive() {
                let a0 = -&t.coeffs[0];
                let bound = need.div_ceil(&a0);
                if bound > y0 {
                    y0 = bound;
                }
            }
        }
    }
    let mut y = vec![y0];
    y.extend(tail);
    let x: Vec<BigInt> =
        (0..nvars).map(|i| (0..nvars).map(|j| u.get(i, j) * &y[j]).sum()).collect();
    debug_assert!(live.iter().all(|r| irow_holds(r, &x)));
    Some(x)
}

/// A nonzero integer vector in `{ x : rows . x <= 0 }`, or `None` when that
/// recession cone is `{0}` (the relaxation is bounded). Probes each signed
/// coordinate direction with a rational feasibility query.
fn find_recession_vector(rows: &[IRow], nvars: usize) -> Option<Vec<BigInt>> {
    use crate::matrix::primitive_vector;
    let homogeneous: Vec<LinCon> = rows
        .iter()
        .map(|r| LinCon {
            coeffs: r.coeffs.iter().map(|c| Q::from(c.clone())).collect(),
            rel: Rel::Le,
            rhs: Q::zero(),
        })
        .collect();
    for i in 0..nvars {
        for sign in [1i64, -1] {
            let mut probe = homogeneous.clone();
            let mut coeffs = vec![Q::zero(); nvars];
            coeffs[i] = Q::from(BigInt::from(-sign));
            probe.push(LinCon { coeffs, rel: Rel::Le, rhs: -Q::one() });
            if let Some(w) = rational_feasible(&probe, nvars) {
                return Some(primitive_vector(&clear_denominators(&w)));
            }
        }
    }
    None
}

/// A unimodular matrix whose first column is the given primitive vector,
/// returned alongside its inverse. Built from the Hermite transform of the
/// column: `T . ray = e_0` with `T` unimodular, so `U = T^{-1}` works.
fn unimodular_with_first_column(ray: &[BigInt], n: usize) -> (IntMatrix, IntMatrix) {
    let col = IntMatrix::from_bigint_rows(ray.iter().map(|x| vec![x.clone()]).collect());
    let hnf = col.hermite_normal_form();
    assert!(hnf.h.get(0, 0).is_one(), "recession ray must be primitive");
    let t = hnf.u; // t . ray = e_0
    // Invert t column by column (unimodular, so integer inverse exists).
    let mut inv_cols: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![BigInt::zero(); n];
        e[j] = BigInt::one();
        let c = t.solve_integer(&e).expect("unimodular matrix has an integer inverse");
        inv_cols.push(c);
    }
    let u = IntMatrix::from_cols(&inv_cols);
    (u, t)
}

/// Exact interval of a single variable over the rational relaxation of
/// `rows . x <= rhs`, obtained by Fourier-Motzkin elimination of every other
/// variable. `None` bounds mean unbounded on that side.
fn fm_interval(rows: &[IRow], nvars: usize, var: usize) -> (Option<Q>, Option<Q>) {
    // Work over Q as (coeffs, rhs) pairs.
    let mut sys: Vec<(Vec<Q>, Q)> = rows
        .iter()
        .map(|r| {
            (r.coeffs.iter().map(|c| Q::from(c.clone())).collect(), Q::from(r.rhs.clone()))
        })
        .collect();
    for elim in (0..nvars).rev() {
        if elim == var {
            continue;
        }
        let mut zeros: Vec<(Vec<Q>, Q)> = Vec::new();
        let mut pos: Vec<(Vec<Q>, Q)> = Vec::new();
        let mut neg: Vec<(Vec<Q>, Q)> = Vec::new();
        for (c, b) in sys {
            if c[elim].is_zero() {
                zeros.push((c, b));
            } else if c[elim].is_positive() {
                pos.push((c, b));
            } else {
                neg.push((c, b));
            }
        }
        for (cp, bp) in &pos {
            for (cn, bn) in &neg {
                let s = &cp[elim] / -&cn[elim]; // positive scale for the negative row
                let mut c: Vec<Q> =
                    cp.iter().zip(cn).map(|(a, b2)| a + &s * b2).collect();
                let b = bp + &s * bn;
                c[elim] = Q::zero();
                zeros.push((c, b));
            }
        }
        sys = zeros;
    }
    let mut lo: Option<Q> = None;
    let mut hi: Option<Q> = None;
    for (c, b) in sys {
        let a = &c[var];
        if a.is_zero() {
            continue; // consistency is the caller's concern
        }
        let bound = &b / a;
        if a.is_positive() {
            if hi.as_ref().map(|h| bound < *h).unwrap_or(true) {
                hi = Some(bound);
            }
        } else if lo.as_ref().map(|l| bound > *l).unwrap_or(true) {
            lo = Some(bound);
        }
    }
    (lo, hi)
}

/// Enumerate every integer point of a bounded rational-inequality system, in
/// ascending lexicographic order. Errors with `Unbounded` when the system is
/// not bounded and with `TooLarge` when more than `limit` points exist.
pub fn enumerate_lattice_points(
    cons: &[LinCon],
    nvars: usize,
    limit: usize,
) -> Result<Vec<Vec<BigInt>>> {
    let norm = normalize(cons, nvars);
    if norm.trivially_infeasible {
        return Ok(Vec::new());
    }
    if !norm.eq.is_empty() {
        // Fold equalities in as opposing inequalities; boundedness and
        // enumeration go through the same recursion.
        let mut le = norm.le.clone();
        for e in &norm.eq {
            le.push(e.clone());
            le.push(IRow { coeffs: e.coeffs.iter().map(|c| -c).collect(), rhs: -&e.rhs });
        }
        let mut out = Vec::new();
        enumerate_rec(&le, nvars, limit, &mut Vec::new(), &mut out)?;
        return Ok(out);
    }
    let mut out = Vec::new();
    enumerate_rec(&norm.le, nvars, limit, &mut Vec::new(), &mut out)?;
    Ok(out)
}

fn enumerate_rec(
    rows: &[IRow],
    nvars: usize,
    limit: usize,
    prefix: &mut Vec<BigInt>,
    out: &mut Vec<Vec<BigInt>>,
) -> Result<()> {
    if rows.iter().any(|r| r.coeffs.iter().all(|c| c.is_zero()) && r.rhs.is_negative()) {
        return Ok(());
    }
    if nvars == 0 {
        if out.len() >= limit {
            return Err(Error::TooLarge(format!("more than {limit} lattice points")));
        }
        out.push(prefix.clone());
        return Ok(());
    }
    let live: Vec<IRow> =
        rows.iter().filter(|r| !r.coeffs.iter().all(|c| c.is_zero())).cloned().collect();
    if rational_feasible(&rows_to_lincons(&live), nvars).is_none() {
        return Ok(());
    }
    let (lo, hi) = fm_interval(&live, nvars, 0);
    let (lo, hi) = match (lo, hi) {
        (Some(l), Some(h)) => (l, h),
        _ => {
            return Err(Error::Unbounded(
                "lattice point enumeration requires a bounded system".into(),
            ))
        }
    };
    let mut v = lo.ceil().to_integer();
    let hi_int = hi.floor().to_integer();
    while v <= hi_int {
        let sub: Vec<IRow> = live
            .iter()
            .map(|r| IRow { coeffs: r.coeffs[1..].to_vec(), rhs: &r.rhs - &r.coeffs[0] * &v })
            .collect();
        prefix.push(v.clone());
        enumerate_rec(&sub, nvars - 1, limit, prefix, out)?;
        prefix.pop();
        v += 1;
    }
    Ok(())
}
