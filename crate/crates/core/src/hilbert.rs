//! Hilbert bases of pointed rational cones and monoid membership.
//!
//! The Hilbert basis of a pointed cone `C` is the unique minimal generating
//! set of the monoid `C ∩ Z^m`. It is computed exactly: the extreme rays are
//! triangulated into simplicial subcones by pulling at the smallest ray, the
//! half-open fundamental parallelepiped of each simplicial subcone is
//! enumerated through Hermite coset representatives (never by scanning a
//! bounding box), and the resulting generating set is minimalized by exact
//! monoid-membership tests ordered along a strictly positive functional.

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linear::{clear_denominators, q_int, rational_feasible, solve_square, LinCon, Q, Rel};
use crate::matrix::IntMatrix;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::HashSet;

fn idot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// An integer functional `f` with `f . v >= 1` for every given vector, when
/// one exists. Existence for the generators of a cone is exactly
/// pointedness of that cone.
pub fn positive_functional(vectors: &[Vec<BigInt>], dim: usize) -> Option<Vec<BigInt>> {
    if vectors.is_empty() {
        return Some(vec![BigInt::zero(); dim]);
    }
    let cons: Vec<LinCon> = vectors
        .iter()
        .map(|v| LinCon {
            coeffs: v.iter().map(|x| -Q::from(x.clone())).collect(),
            rel: Rel::Le,
            rhs: -q_int(1),
        })
        .collect();
    let w = rational_feasible(&cons, dim)?;
    let f = clear_denominators(&w);
    debug_assert!(vectors.iter().all(|v| idot(&f, v).is_positive()));
    Some(f)
}

/// Nonnegative-integer multipliers expressing `target` over `gens`, if any.
///
/// When the generators admit a strictly positive functional the search is a
/// bounded depth-first enumeration (each multiplier is capped by the
/// functional value of what remains); otherwise it falls back to the general
/// integer-feasibility solver.
pub fn monoid_membership(target: &[BigInt], gens: &[Vec<BigInt>]) -> Option<Vec<BigInt>> {
    let dim = target.len();
    if target.iter().all(|x| x.is_zero()) {
        return Some(vec![BigInt::zero(); gens.len()]);
    }
    if gens.is_empty() {
        return None;
    }
    for g in gens {
        assert_eq!(g.len(), dim, "generator dimension mismatch");
    }
    // Cheap exits before any search: the target equals a generator or a sum
    // of two generators. These cover the common cases for large non-pointed
    // generating sets, where the general solver below would be expensive.
    for (i, g) in gens.iter().enumerate() {
        if g.as_slice() == target {
            let mut mults = vec![BigInt::zero(); gens.len()];
            mults[i] = BigInt::one();
            return Some(mults);
        }
    }
    for i in 0..gens.len() {
        for j in i..gens.len() {
            let sum: Vec<BigInt> = (0..dim).map(|c| &gens[i][c] + &gens[j][c]).collect();
            if sum.as_slice() == target {
                let mut mults = vec![BigInt::zero(); gens.len()];
                mults[i] += 1;
                mults[j] += 1;
                return Some(mults);
            }
        }
    }
    if let Some(f) = positive_functional(gens, dim) {
        let fr = idot(&f, target);
        if fr.is_negative() {
            return None;
        }
        let fg: Vec<BigInt> = gens.iter().map(|g| idot(&f, g)).collect();
        let mut failed: HashSet<(usize, Vec<BigInt>)> = HashSet::new();
        let mut mults = vec![BigInt::zero(); gens.len()];
        if dfs(target.to_vec(), &fr, 0, gens, &fg, &mut mults, &mut failed) {
            debug_assert!({
                let sum: Vec<BigInt> = (0..dim)
                    .map(|c| gens.iter().zip(&mults).map(|(g, m)| &g[c] * m).sum())
                    .collect();
                sum == target
            });
            return Some(mults);
        }
        return None;
    }
    // Non-pointed generator set: decide by integer programming.
    let mut cons: Vec<LinCon> = Vec::new();
    for c in 0..dim {
        cons.push(LinCon {
            coeffs: gens.iter().map(|g| Q::from(g[c].clone())).collect(),
            rel: Rel::Eq,
            rhs: Q::from(target[c].clone()),
        });
    }
    for i in 0..gens.len() {
        let mut coeffs = vec![Q::zero(); gens.len()];
        coeffs[i] = -q_int(1);
        cons.push(LinCon { coeffs, rel: Rel::Le, rhs: Q::zero() });
    }
    crate::intfeas::lattice_feasible(&cons, gens.len())
}

fn dfs(
    remaining: Vec<BigInt>,
    f_remaining: &BigInt,
    i: usize,
    gens: &[Vec<BigInt>],
    fg: &[BigInt],
    mults: &mut Vec<BigInt>,
    failed: &mut HashSet<(usize, Vec<BigInt>)>,
) -> bool {
    if remaining.iter().all(|x| x.is_zero()) {
        for m in mults.iter_mut().skip(i) {
            *m = BigInt::zero();
        }
        return true;
    }
    if i == gens.len() || f_remaining.is_negative() || f_remaining.is_zero() {
        return false;
    }
    let key = (i, remaining.clone());
    if failed.contains(&key) {
        return false;
    }
    let cap = f_remaining / &fg[i];
    let mut lambda = cap;
    while !lambda.is_negative() {
        let next: Vec<BigInt> =
            remaining.iter().zip(&gens[i]).map(|(r, g)| r - &lambda * g).collect();
        let fnext = f_remaining - &lambda * &fg[i];
        mults[i] = lambda.clone();
        if dfs(next, &fnext, i + 1, gens, fg, mults, failed) {
            return true;
        }
        lambda -= 1;
    }
    failed.insert(key);
    false
}

/// Simplicial decomposition of a pointed cone by pulling at the smallest
/// extreme ray: returns index sets into `rays`, each of size `dim(cone)`,
/// whose simplicial cones cover the cone and meet only along faces.
pub fn pulling_triangulation(rays: &[Vec<BigInt>], ambient: usize) -> Vec<Vec<usize>> {
    if rays.is_empty() {
        return Vec::new();
    }
    let cone = Cone::from_generators(rays, ambient);
    assert!(cone.is_pointed(), "pulling triangulation needs a pointed cone");
    let order: Vec<Vec<BigInt>> = rays.to_vec();
    let index_of = |v: &Vec<BigInt>| -> usize {
        order.iter().position(|r| r == v).expect("ray bookkeeping")
    };
    fn recurse(rays: &[Vec<BigInt>], ambient: usize) -> Vec<Vec<Vec<BigInt>>> {
        let cone = Cone::from_generators(rays, ambient);
        let extreme = cone.rays.clone();
        if extreme.len() <= cone.dim {
            return vec![extreme];
        }
        let apex = extreme.iter().min().expect("nonempty").clone();
        let mut simplices = Vec::new();
        for f in &cone.facets {
            if idot(f, &apex).is_zero() {
                continue;
            }
            let on_facet: Vec<Vec<BigInt>> =
                extreme.iter().filter(|r| idot(f, r).is_zero()).cloned().collect();
            for mut s in recurse(&on_facet, ambient) {
                s.push(apex.clone());
                simplices.push(s);
            }
        }
        simplices
    }
    let mut out: Vec<Vec<usize>> = recurse(&cone.rays, ambient)
        .into_iter()
        .map(|s| {
            let mut idx: Vec<usize> = s.iter().map(&index_of).collect();
            idx.sort_unstable();
            idx
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Integer points of the half-open parallelepiped `{ sum t_i basis_i :
/// 0 <= t_i < 1 }` for linearly independent integer vectors, enumerated via
/// coset representatives of the sublattice they span inside its saturation.
/// The point count equals the lattice index of the basis.
pub fn parallelepiped_points(basis: &[Vec<BigInt>], limits: &Limits) -> Result<Vec<Vec<BigInt>>> {
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let ambient = basis[0].len();
    let d = basis.len();
    // Saturation coordinates: a basis W of span(basis) ∩ Z^ambient, with the
    // input vectors expressed in W-coordinates as a full-rank d x d system.
    let (w, coords) = saturation_coordinates(basis, ambient)?;
    let s = IntMatrix::from_cols(&coords); // d x d, columns are basis in W-coords
    let det = s.determinant().abs();
    if det > BigInt::from(limits.max_lattice_points as u64) {
        return Err(Error::TooLarge(format!(
            "parallelepiped holds {det} lattice points (limit {})",
            limits.max_lattice_points
        )));
    }
    // Column Hermite form of s: the quotient Z^d / s Z^d is enumerated by
    // vectors x with 0 <= x_i < h_ii for the upper-triangular row form h of
    // the transposed matrix.
    let hnf = s.transpose().hermite_normal_form();
    let diag: Vec<BigInt> = (0..d).map(|i| hnf.h.get(i, i).clone()).collect();
    assert!(diag.iter().all(|x| x.is_positive()), "independent basis has full rank");
    // Rational inverse of s for coordinate extraction.
    let s_q: Vec<Vec<Q>> =
        (0..d).map(|r| (0..d).map(|c| Q::from(s.get(r, c).clone())).collect()).collect();
    let mut reps: Vec<Vec<BigInt>> = vec![Vec::new()];
    for bound in &diag {
        let mut next = Vec::new();
        for rep in &reps {
            let mut v = BigInt::zero();
            while &v < bound {
                let mut r = rep.clone();
                r.push(v.clone());
                next.push(r);
                v += 1;
            }
        }
        reps = next;
    }
    let mut points = Vec::new();
    for rep in reps {
        // t = frac(s^{-1} rep) lands the coset representative inside the
        // half-open parallelepiped; y = s t is its integer avatar.
        let rhs: Vec<Q> = rep.iter().map(|x| Q::from(x.clone())).collect();
        let t = solve_square(&s_q, &rhs).expect("full-rank system");
        let frac: Vec<Q> = t.iter().map(|v| v - v.floor()).collect();
        let y: Vec<Q> = (0..d)
            .map(|r| (0..d).map(|c| &s_q[r][c] * &frac[c]).sum())
            .collect();
        let y_int: Vec<BigInt> = y
            .iter()
            .map(|v| {
                assert!(v.is_integer(), "coset representative must be integral");
                v.to_integer()
            })
            .collect();
        // Back to ambient coordinates: z = W y.
        let z: Vec<BigInt> = (0..ambient)
            .map(|r| (0..d).map(|c| w.get(r, c) * &y_int[c]).sum())
            .collect();
        points.push(z);
    }
    points.sort();
    points.dedup();
    Ok(points)
}

/// A saturated lattice basis `W` of `span(vectors) ∩ Z^ambient` (columns of
/// the returned matrix) together with the integer coordinates of each input
/// vector in that basis.
fn saturation_coordinates(
    vectors: &[Vec<BigInt>],
    ambient: usize,
) -> Result<(IntMatrix, Vec<Vec<BigInt>>)> {
    let d = vectors.len();
    let rows = IntMatrix::from_bigint_rows(vectors.to_vec());
    if rows.rank() != d {
        return Err(Error::RankDeficient(
            "parallelepiped basis must be linearly independent".into(),
        ));
    }
    let w = if d == ambient {
        IntMatrix::identity(ambient)
    } else {
        // Orthogonal-complement rows, then the saturated kernel of those.
        let normals = rows.kernel_basis(); // ambient x (ambient - d)
        normals.transpose().kernel_basis() // ambient x d, saturated
    };
    let coords: Vec<Vec<BigInt>> = vectors
        .iter()
        .map(|v| {
            w.solve_integer(v)
                .expect("vector lies in the saturated lattice it spans")
        })
        .collect();
    Ok((w, coords))
}

/// The Hilbert basis of the pointed cone generated by the given vectors:
/// the unique minimal set of lattice points generating `cone ∩ Z^ambient`
/// as a monoid. Output is sorted lexicographically.
pub fn hilbert_basis(
    generators: &[Vec<BigInt>],
    ambient: usize,
    limits: &Limits,
) -> Result<Vec<Vec<BigInt>>> {
    let cone = Cone::from_generators(generators, ambient);
    if !cone.is_pointed() {
        return Err(Error::NotPointed(
            "Hilbert bases are defined here only for pointed cones".into(),
        ));
    }
    if cone.rays.is_empty() {
        return Ok(Vec::new());
    }
    let mut candidates: Vec<Vec<BigInt>> = cone.rays.clone();
    for simplex in pulling_triangulation(&cone.rays, ambient) {
        let basis: Vec<Vec<BigInt>> = simplex.iter().map(|&i| cone.rays[i].clone()).collect();
        for p in parallelepiped_points(&basis, limits)? {
            if !p.iter().all(|x| x.is_zero()) {
                candidates.push(p);
            }
        }
    }
    candidates.sort();
    candidates.dedup();
    if candidates.len() > limits.max_lattice_points {
        return Err(Error::TooLarge(format!(
            "{} Hilbert basis candidates (limit {})",
            candidates.len(),
            limits.max_lattice_points
        )));
    }
    // Minimalize in increasing order of a strictly positive functional: an
    // element is reducible exactly when the already-accepted ones reach it.
    let f = positive_functional(&cone.rays, ambient)
        .expect("pointed cones admit a strictly positive functional");
    candidates.sort_by(|a, b| idot(&f, a).cmp(&idot(&f, b)).then_with(|| a.cmp(b)));
    let mut accepted: Vec<Vec<BigInt>> = Vec::new();
    for v in candidates {
        if monoid_membership(&v, &accepted).is_none() {
            accepted.push(v);
        }
    }
    accepted.sort();
    Ok(accepted)
}
