//! Rational polyhedral cones by double description.
//!
//! A cone is kept in both representations: generators/extreme rays plus a
//! lineality basis on the V-side, facet inequalities plus span equations on
//! the H-side. Conversion runs Fourier-Motzkin-free incremental double
//! description: constraints are inserted one at a time while maintaining a
//! lineality basis and a ray list; when a constraint meets the lineality
//! space, one lineality vector turns into a ray and the rest are projected
//! onto the constraint hyperplane; otherwise rays are split into
//! positive/zero/negative classes and adjacent positive-negative pairs are
//! combined. Extremality is enforced with an exact rank test on active
//! constraints, so no floating point and no genericity assumptions enter.
//! Everything is `BigInt` exact; rays are primitive integer vectors.

use crate::linear::{iq_dot, q_from_bigints, Q};
use crate::matrix::{primitive_vector, IntMatrix};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::collections::BTreeSet;

fn idot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// V-description of `{ x : row . x >= 0 for every row }`: a lineality basis
/// and the extreme rays of the pointed part.
#[derive(Debug, Clone)]
pub struct DoubleDescription {
    pub lineality: Vec<Vec<BigInt>>,
    pub rays: Vec<Vec<BigInt>>,
}

/// Incremental double description for `{ x in R^dim : rows . x >= 0 }`.
pub fn dd_from_inequalities(rows: &[Vec<BigInt>], dim: usize) -> DoubleDescription {
    let mut lineality: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| {
            let mut e = vec![BigInt::zero(); dim];
            e[i] = BigInt::from(1);
            e
        })
        .collect();
    let mut rays: Vec<Vec<BigInt>> = Vec::new();
    let mut inserted: Vec<Vec<BigInt>> = Vec::new();
    for a in rows {
        assert_eq!(a.len(), dim);
        if a.iter().all(|x| x.is_zero()) {
            continue;
        }
        let lin_dots: Vec<BigInt> = lineality.iter().map(|l| idot(l, a)).collect();
        if let Some(k) = lin_dots.iter().position(|d| !d.is_zero()) {
            // The constraint cuts the lineality space: one basis vector
            // becomes a ray on the positive side, the rest are projected
            // into the hyperplane, and existing rays are projected too.
            let mut pivot = lineality.remove(k);
            let mut pd = lin_dots[k].clone();
            if pd.is_negative() {
                pivot = pivot.iter().map(|x| -x).collect();
                pd = -pd;
            }
            let project = |v: &[BigInt], vd: &BigInt| -> Vec<BigInt> {
                // pd * v - vd * pivot lies in the hyperplane a.x = 0
                let combo: Vec<BigInt> =
                    v.iter().zip(&pivot).map(|(vi, pi)| &pd * vi - vd * pi).collect();
                primitive_vector(&combo)
            };
            lineality = lineality
                .iter()
                .map(|l| {
                    let ld = idot(l, a);
                    if ld.is_zero() {
                        l.clone()
                    } else {
                        project(l, &ld)
                    }
                })
                .collect();
            rays = rays
                .iter()
                .map(|r| {
                    let rd = idot(r, a);
                    if rd.is_zero() {
                        r.clone()
                    } else {
                        project(r, &rd)
                    }
                })
                .collect();
            rays.push(pivot);
            rays = canonicalize_rays(rays, &lineality);
        } else {
            // Lineality is untouched; split the rays.
            let dots: Vec<BigInt> = rays.iter().map(|r| idot(r, a)).collect();
            if dots.iter().all(|d| !d.is_negative()) {
                inserted.push(a.clone());
                continue;
            }
            let mut next: Vec<Vec<BigInt>> = Vec::new();
            for (r, d) in rays.iter().zip(&dots) {
                if !d.is_negative() {
                    next.push(r.clone());
                }
            }
            for (i, (r_pos, d_pos)) in rays.iter().zip(&dots).enumerate() {
                if !d_pos.is_positive() {
                    continue;
                }
                for (r_neg, d_neg) in rays.iter().zip(&dots).skip(i + 1) {
                    if !d_neg.is_negative() {
                        continue;
                    }
                    let combo: Vec<BigInt> = r_pos
                        .iter()
                        .zip(r_neg)
                        .map(|(p, n)| -d_neg * p + d_pos * n)
                        .collect();
                    if combo.iter().all(|x| x.is_zero()) {
                        continue;
                    }
                    next.push(primitive_vector(&combo));
                }
                // also pair with negatives occurring before i
                for (r_neg, d_neg) in rays.iter().zip(&dots).take(i) {
                    if !d_neg.is_negative() {
                        continue;
                    }
                    let combo: Vec<BigInt> = r_pos
                        .iter()
                        .zip(r_neg)
                        .map(|(p, n)| -d_neg * p + d_pos * n)
                        .collect();
                    if combo.iter().all(|x| x.is_zero()) {
                        continue;
                    }
                    next.push(primitive_vector(&combo));
                }
            }
            next = canonicalize_rays(next, &lineality);
            rays = next;
            inserted.push(a.clone());
            // Keep only extreme rays: rank(active inserted rows) must reach
            // dim - |lineality| - 1.
            rays = filter_extreme(rays, &inserted, dim, lineality.len());
        }
        if !inserted.last().map(|last| last == a).unwrap_or(false) && !lin_cut_recorded(&inserted, a)
        {
            inserted.push(a.clone());
        }
    }
    DoubleDescription { lineality, rays }
}

fn lin_cut_recorded(inserted: &[Vec<BigInt>], a: &[BigInt]) -> bool {
    inserted.iter().any(|r| r == a)
}

fn dedupe(rays: &mut Vec<Vec<BigInt>>) {
    let mut seen: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    rays.retain(|r| seen.insert(r.clone()));
}

/// Canonical representative of a ray modulo a lineality space: the primitive
/// integer vector along the orthogonal projection of `r` onto the complement
/// of `span(lineality)`. Returns `None` when `r` lies inside the lineality
/// space (such a vector is not a ray at all).
fn canonicalize_mod_lineality(r: &[BigInt], lineality: &[Vec<BigInt>]) -> Option<Vec<BigInt>> {
    if r.iter().all(|x| x.is_zero()) {
        return None;
    }
    if lineality.is_empty() {
        return Some(primitive_vector(r));
    }
    use crate::linear::{clear_denominators, solve_square};
    let k = lineality.len();
    // Solve (L L^T) beta = L r, then project r - L^T beta.
    let gram: Vec<Vec<Q>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| Q::from(idot(&lineality[i], &lineality[j])))
                .collect()
        })
        .collect();
    let rhs: Vec<Q> = (0..k).map(|i| Q::from(idot(&lineality[i], r))).collect();
    let beta = solve_square(&gram, &rhs).expect("lineality basis must be independent");
    let proj: Vec<Q> = (0..r.len())
        .map(|c| {
            let mut v = Q::from(r[c].clone());
            for (i, b) in beta.iter().enumerate() {
                v -= b * Q::from(lineality[i][c].clone());
            }
            v
        })
        .collect();
    if proj.iter().all(|x| x.is_zero()) {
        return None;
    }
    Some(primitive_vector(&clear_denominators(&proj)))
}

fn canonicalize_rays(rays: Vec<Vec<BigInt>>, lineality: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut out: Vec<Vec<BigInt>> = rays
        .iter()
        .filter_map(|r| canonicalize_mod_lineality(r, lineality))
        .collect();
    dedupe(&mut out);
    out
}

fn filter_extreme(
    rays: Vec<Vec<BigInt>>,
    inserted: &[Vec<BigInt>],
    dim: usize,
    lin_dim: usize,
) -> Vec<Vec<BigInt>> {
    if rays.is_empty() {
        return rays;
    }
    let needed = dim - lin_dim - 1;
    rays.into_iter()
        .filter(|r| {
            let active: Vec<Vec<BigInt>> = inserted
                .iter()
                .filter(|a| idot(a, r).is_zero())
                .cloned()
                .collect();
            if active.is_empty() {
                return needed == 0;
            }
            IntMatrix::from_bigint_rows(active).rank() >= needed
        })
        .collect()
}

/// A rational polyhedral cone with both descriptions.
#[derive(Debug, Clone, Serialize)]
pub struct Cone {
    /// Ambient dimension.
    pub ambient: usize,
    /// The generators the cone was built from (empty if built from facets).
    pub generators: Vec<Vec<BigInt>>,
    /// Extreme rays of the pointed part, primitive and sorted.
    pub rays: Vec<Vec<BigInt>>,
    /// Lattice basis of the lineality space (canonical Hermite rows).
    pub lineality: Vec<Vec<BigInt>>,
    /// Facet inequalities: the cone satisfies `f . x >= 0` for each.
    pub facets: Vec<Vec<BigInt>>,
    /// Equations cutting out the linear span: `e . x = 0` on the cone.
    pub span_normals: Vec<Vec<BigInt>>,
    /// Dimension of the cone.
    pub dim: usize,
}

fn canonical_rows(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    rows.sort();
    rows.dedup();
    rows
}

fn lattice_basis_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let m = IntMatrix::from_bigint_rows(rows.to_vec());
    let basis = m.row_basis();
    (0..basis.nrows()).map(|i| basis.row(i)).collect()
}

/// Saturated lattice basis of `{ x in Z^ambient : r . x = 0 for all r }`.
fn kernel_rows(rows: &[Vec<BigInt>], ambient: usize) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return (0..ambient)
            .map(|i| {
                let mut e = vec![BigInt::zero(); ambient];
                e[i] = BigInt::from(1);
                e
            })
            .collect();
    }
    let m = IntMatrix::from_bigint_rows(rows.to_vec());
    let k = m.kernel_basis();
    let kt = k.transpose();
    lattice_basis_rows(&(0..kt.nrows()).map(|i| kt.row(i)).collect::<Vec<_>>())
}

impl Cone {
    /// Cone generated by the given vectors (nonnegative combinations).
    pub fn from_generators(gens: &[Vec<BigInt>], ambient: usize) -> Cone {
        for g in gens {
            assert_eq!(g.len(), ambient, "generator dimension mismatch");
        }
        let nonzero: Vec<Vec<BigInt>> =
            gens.iter().filter(|g| !g.iter().all(|x| x.is_zero())).cloned().collect();
        // Dual side: C* = { y : g . y >= 0 }, whose extreme rays are the
        // facet normals of C and whose lineality is the orthogonal of span(C).
        let dual = dd_from_inequalities(&nonzero, ambient);
        let span_normals = lattice_basis_rows(&dual.lineality);
        let facets = canonical_rows(dual.rays);
        // Primal side from the H-description.
        let mut h_rows: Vec<Vec<BigInt>> = facets.clone();
        for e in &span_normals {
            h_rows.push(e.clone());
            h_rows.push(e.iter().map(|x| -x).collect());
        }
        let primal = dd_from_inequalities(&h_rows, ambient);
        let lineality = kernel_rows(&h_rows, ambient);
        let rays = canonical_rows(primal.rays);
        let dim = ambient - span_normals.len();
        let cone = Cone {
            ambient,
            generators: gens.to_vec(),
            rays,
            lineality,
            facets,
            span_normals,
            dim,
        };
        cone.debug_validate();
        cone
    }

    /// Cone `{ x : rows . x >= 0 }` from inequalities alone.
    pub fn from_inequalities(rows: &[Vec<BigInt>], ambient: usize) -> Cone {
        let dd = dd_from_inequalities(rows, ambient);
        let mut gens = dd.rays.clone();
        for l in &dd.lineality {
            gens.push(l.clone());
            gens.push(l.iter().map(|x| -x).collect());
        }
        let mut cone = Cone::from_generators(&gens, ambient);
        cone.generators = Vec::new();
        cone
    }

    fn debug_validate(&self) {
        debug_assert!(self.generators.iter().all(|g| self.contains_int(g)));
        debug_assert!(self.rays.iter().all(|r| self.contains_int(r)));
        for l in &self.lineality {
            debug_assert!(self.contains_int(l));
            let neg: Vec<BigInt> = l.iter().map(|x| -x).collect();
            debug_assert!(self.contains_int(&neg));
        }
    }

    /// Membership for integer points.
    pub fn contains_int(&self, x: &[BigInt]) -> bool {
        self.span_normals.iter().all(|e| idot(e, x).is_zero())
            && self.facets.iter().all(|f| !idot(f, x).is_negative())
    }

    /// Membership for rational points.
    pub fn contains(&self, x: &[Q]) -> bool {
        self.span_normals.iter().all(|e| iq_dot(e, x).is_zero())
            && self.facets.iter().all(|f| !iq_dot(f, x).is_negative())
    }

    /// Strict membership: in the relative interior (inside every facet).
    pub fn contains_in_relative_interior(&self, x: &[Q]) -> bool {
        self.span_normals.iter().all(|e| iq_dot(e, x).is_zero())
            && self.facets.iter().all(|f| iq_dot(f, x).is_positive())
    }

    /// True when the lineality space is trivial.
    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    /// True when the cone is the whole ambient space.
    pub fn is_everything(&self) -> bool {
        self.dim == self.ambient && self.facets.is_empty()
    }

    /// An integer point in the relative interior (sum of extreme rays;
    /// the zero vector for linear subspaces).
    pub fn relative_interior_point(&self) -> Vec<BigInt> {
        let mut p = vec![BigInt::zero(); self.ambient];
        for r in &self.rays {
            for i in 0..self.ambient {
                p[i] += &r[i];
            }
        }
        debug_assert!(
            self.facets.iter().all(|f| idot(f, &p).is_positive()),
            "sum of extreme rays must be strictly inside every facet"
        );
        p
    }

    /// Intersection of two cones in the same ambient space.
    pub fn intersect(&self, other: &Cone) -> Cone {
        assert_eq!(self.ambient, other.ambient);
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for c in [self, other] {
            rows.extend(c.facets.iter().cloned());
            for e in &c.span_normals {
                rows.push(e.clone());
                rows.push(e.iter().map(|x| -x).collect());
            }
        }
        Cone::from_inequalities(&rows, self.ambient)
    }

    /// Set equality via mutual containment (basis independent).
    pub fn same_cone(&self, other: &Cone) -> bool {
        self.contained_in(other) && other.contained_in(self)
    }

    /// Containment via generators.
    pub fn contained_in(&self, other: &Cone) -> bool {
        self.rays.iter().all(|r| other.contains_int(r))
            && self.lineality.iter().all(|l| {
                let neg: Vec<BigInt> = l.iter().map(|x| -x).collect();
                other.contains_int(l) && other.contains_int(&neg)
            })
    }
}

/// Convenience: cone generated by the columns of a matrix.
pub fn cone_of_columns(m: &IntMatrix) -> Cone {
    Cone::from_generators(&m.columns(), m.nrows())
}

/// Rationals-to-cone membership for a raw generator list, without building
/// the full double description: `x in cone(gens)` decided by feasibility.
pub fn in_cone_of(x: &[Q], gens: &[Vec<BigInt>]) -> bool {
    use crate::linear::{rational_feasible, LinCon, Rel};
    let dim = x.len();
    // lambda >= 0, sum lambda_i g_i = x: variables lambda (|gens|)
    let mut cons: Vec<LinCon> = Vec::new();
    for coord in 0..dim {
        let coeffs: Vec<Q> = gens.iter().map(|g| q_from_bigints(&[g[coord].clone()])[0].clone()).collect();
        cons.push(LinCon { coeffs, rel: Rel::Eq, rhs: x[coord].clone() });
    }
    for i in 0..gens.len() {
        let mut coeffs = vec![Q::zero(); gens.len()];
        coeffs[i] = -Q::one();
        cons.push(LinCon { coeffs, rel: Rel::Le, rhs: Q::zero() });
    }
    rational_feasible(&cons, gens.len()).is_some()
}
