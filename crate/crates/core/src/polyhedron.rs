//! Polyhedra of the form `P_c = { x in R^m : x . b_i <= c_i }` attached to a
//! configuration of column vectors, with exact lattice-point reasoning.
//!
//! The right-hand side `c` is integral. The module answers rational and
//! integer feasibility, enumerates lattice points of bounded systems, tests
//! tightness (every facet hyperplane carries a lattice point of the
//! polyhedron), pushes facets in until they do (`tighten`), and exposes the
//! minimal faces with their active index sets, from which integrality of the
//! polyhedron (equality with the convex hull of its lattice points) is
//! decided face by face.

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::intfeas::{enumerate_lattice_points, lattice_feasible};
use crate::limits::Limits;
use crate::linear::{rational_feasible, LinCon, Q, Rel};
use crate::matrix::IntMatrix;
use num_bigint::BigInt;
use num_traits::Zero;
use itertools::Itertools;

/// The constraint list `x . b_i <= c_i` over the `m` coordinates of `x`.
pub fn facet_constraints(b: &IntMatrix, c: &[BigInt]) -> Vec<LinCon> {
    assert_eq!(b.ncols(), c.len(), "one right-hand side per column");
    (0..b.ncols())
        .map(|i| LinCon {
            coeffs: (0..b.nrows()).map(|j| Q::from(b.get(j, i).clone())).collect(),
            rel: Rel::Le,
            rhs: Q::from(c[i].clone()),
        })
        .collect()
}

pub fn equality_row(b: &IntMatrix, c: &[BigInt], i: usize) -> LinCon {
    LinCon {
        coeffs: (0..b.nrows()).map(|j| Q::from(b.get(j, i).clone())).collect(),
        rel: Rel::Eq,
        rhs: Q::from(c[i].clone()),
    }
}

/// Rational nonemptiness of `P_c`.
pub fn is_feasible(b: &IntMatrix, c: &[BigInt]) -> bool {
    rational_feasible(&facet_constraints(b, c), b.nrows()).is_some()
}

/// Some lattice point of `P_c`, when one exists.
pub fn lattice_point(b: &IntMatrix, c: &[BigInt]) -> Option<Vec<BigInt>> {
    lattice_feasible(&facet_constraints(b, c), b.nrows())
}

/// All lattice points of a bounded `P_c`, sorted lexicographically.
pub fn lattice_points(b: &IntMatrix, c: &[BigInt], limits: &Limits) -> Result<Vec<Vec<BigInt>>> {
    enumerate_lattice_points(&facet_constraints(b, c), b.nrows(), limits.max_lattice_points)
}

/// Boundedness of `P_c` for every `c`: the recession cone `{ x : x . b_i <= 0 }`
/// is trivial exactly when the columns positively span the whole space.
pub fn is_bounded(b: &IntMatrix) -> bool {
    Cone::from_generators(&b.columns(), b.nrows()).is_everything()
}

/// A lattice point of `P_c` lying on the `i`-th facet hyperplane.
pub fn facet_lattice_point(b: &IntMatrix, c: &[BigInt], i: usize) -> Option<Vec<BigInt>> {
    let mut cons = facet_constraints(b, c);
    cons.push(equality_row(b, c, i));
    lattice_feasible(&cons, b.nrows())
}

/// Tightness: every inequality is attained by some lattice point of `P_c`.
/// A polyhedron without lattice points is never tight.
pub fn is_tight(b: &IntMatrix, c: &[BigInt]) -> bool {
    (0..b.ncols()).all(|i| facet_lattice_point(b, c, i).is_some())
}

/// Push every facet in until it touches a lattice point: the componentwise
/// largest `c' <= c` with `P_{c'}` containing the same lattice points and
/// being tight. Fails when `P_c` has no lattice points at all (there is no
/// finite tightening then).
pub fn tighten(b: &IntMatrix, c: &[BigInt]) -> Result<Vec<BigInt>> {
    let z0 = lattice_point(b, c).ok_or_else(|| {
        Error::BadInput("tighten needs at least one lattice point in the polyhedron".into())
    })?;
    let n = b.ncols();
    let mut tightened = Vec::with_capacity(n);
    for i in 0..n {
        let bi_z0: BigInt = (0..b.nrows()).map(|j| b.get(j, i) * &z0[j]).sum();
        let max_slack = &c[i] - &bi_z0;
        let mut t = BigInt::zero();
        loop {
            assert!(
                t <= max_slack,
                "a lattice point bounds the slack of every facet"
            );
            let mut cons = facet_constraints(b, c);
            let mut eq = equality_row(b, c, i);
            eq.rhs -= Q::from(t.clone());
            cons.push(eq);
            if lattice_feasible(&cons, b.nrows()).is_some() {
                tightened.push(&c[i] - &t);
                break;
            }
            t += 1;
        }
    }
    Ok(tightened)
}

/// A minimal nonempty face of `P_c`: the indices of every inequality active
/// on it, with a rational point of the face.
#[derive(Debug, Clone)]
pub struct MinimalFace {
    pub active: Vec<usize>,
    pub witness: Vec<Q>,
}

/// The minimal faces of `P_c`. Every minimal face has dimension
/// `m - rank(B)` and is cut out by an independent `rank(B)`-subset of active
/// inequalities; candidates are enumerated and closed up to their full
/// active sets. Infeasible systems have no faces.
pub fn minimal_faces(b: &IntMatrix, c: &[BigInt]) -> Vec<MinimalFace> {
    let m = b.nrows();
    let n = b.ncols();
    let r = b.rank();
    if !is_feasible(b, c) {
        return Vec::new();
    }
    let base = facet_constraints(b, c);
    let mut faces: Vec<MinimalFace> = Vec::new();
    'subsets: for sigma in (0..n).combinations(r) {
        if IntMatrix::from_cols(
            &sigma.iter().map(|&i| b.col(i)).collect::<Vec<_>>(),
        )
        .rank()
            != r
        {
            continue;
        }
        // A subset of an already-found active set cuts out the same face.
        for f in &faces {
            if sigma.iter().all(|i| f.active.contains(i)) {
                continue 'subsets;
            }
        }
        let mut cons = base.clone();
        for &i in &sigma {
            cons.push(equality_row(b, c, i));
        }
        let witness = match rational_feasible(&cons, m) {
            Some(w) => w,
            None => continue,
        };
        // Close up to the full active set: index i is active when the face
        // admits no point with strict slack in row i.
        let active: Vec<usize> = (0..n)
            .filter(|&i| {
                if sigma.contains(&i) {
                    return true;
                }
                let mut probe = cons.clone();
                let mut strict = equality_row(b, c, i);
                strict.rel = Rel::Lt;
                probe.push(strict);
                rational_feasible(&probe, m).is_none()
            })
            .collect();
        if !faces.iter().any(|f| f.active == active) {
            faces.push(MinimalFace { active, witness });
        }
    }
    faces.sort_by(|a, b| a.active.cmp(&b.active));
    faces
}

/// Integrality of `P_c`: the polyhedron equals the convex hull of its
/// lattice points exactly when every minimal face contains a lattice point.
/// An infeasible system is integral vacuously.
pub fn is_integral(b: &IntMatrix, c: &[BigInt]) -> bool {
    minimal_faces(b, c).iter().all(|f| {
        let mut cons = facet_constraints(b, c);
        for &i in &f.active {
            cons.push(equality_row(b, c, i));
        }
        lattice_feasible(&cons, b.nrows()).is_some()
    })
}

/// The vertices of `P_c`, nonempty only when the columns have full rank `m`
/// (otherwise the polyhedron has no zero-dimensional faces).
pub fn vertices(b: &IntMatrix, c: &[BigInt]) -> Vec<Vec<Q>> {
    if b.rank() != b.nrows() {
        return Vec::new();
    }
    let mut vs: Vec<Vec<Q>> = minimal_faces(b, c).into_iter().map(|f| f.witness).collect();
    vs.sort();
    vs.dedup();
    vs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::q_vec;
    use num_traits::{One, Signed};

    fn cfg(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    // The square [-1,1]^2: columns e1, -e1, e2, -e2.
    fn square() -> IntMatrix {
        cfg(&[&[1, -1, 0, 0], &[0, 0, 1, -1]])
    }

    #[test]
    fn square_polyhedron_basics() {
        let b = square();
        let c = big(&[1, 1, 1, 1]);
        assert!(is_feasible(&b, &c));
        assert!(is_bounded(&b));
        let pts = lattice_points(&b, &c, &Limits::default()).unwrap();
        assert_eq!(pts.len(), 9);
        assert!(is_tight(&b, &c));
        assert!(is_integral(&b, &c));
        assert_eq!(tighten(&b, &c).unwrap(), c);
        let vs = vertices(&b, &c);
        assert_eq!(vs.len(), 4);
        assert!(vs.contains(&q_vec(&[1, 1])));
        assert!(vs.contains(&q_vec(&[-1, -1])));
    }

    #[test]
    fn fractional_box_is_not_tight_and_tightens_to_origin() {
        // 2x <= 1, -x <= 0, 2y <= 1, -y <= 0: the box [0, 1/2]^2.
        let b = cfg(&[&[2, -1, 0, 0], &[0, 0, 2, -1]]);
        let c = big(&[1, 0, 1, 0]);
        assert!(is_feasible(&b, &c));
        assert_eq!(lattice_point(&b, &c), Some(big(&[0, 0])));
        assert!(!is_tight(&b, &c));
        assert!(!is_integral(&b, &c));
        let tight = tighten(&b, &c).unwrap();
        assert_eq!(tight, big(&[0, 0, 0, 0]));
        assert!(is_tight(&b, &tight));
        assert!(is_integral(&b, &tight));
        // Tightening preserves the lattice points.
        assert_eq!(
            lattice_points(&b, &c, &Limits::default()).unwrap(),
            lattice_points(&b, &tight, &Limits::default()).unwrap()
        );
    }

    #[test]
    fn empty_polyhedron_has_no_faces_and_is_never_tight() {
        // x <= -1 and -x <= 0 clash.
        let b = cfg(&[&[1, -1]]);
        let c = big(&[-1, 0]);
        assert!(!is_feasible(&b, &c));
        assert!(minimal_faces(&b, &c).is_empty());
        assert!(!is_tight(&b, &c));
        assert!(is_integral(&b, &c)); // vacuous
        assert!(tighten(&b, &c).is_err());
    }

    #[test]
    fn square_minimal_faces_are_its_vertices() {
        let b = square();
        let c = big(&[1, 1, 1, 1]);
        let faces = minimal_faces(&b, &c);
        let active_sets: Vec<Vec<usize>> = faces.iter().map(|f| f.active.clone()).collect();
        assert_eq!(
            active_sets,
            vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]
        );
        for f in &faces {
            // The witness of a zero-dimensional face is the vertex itself.
            assert!(f.witness.iter().all(|q| q.abs() == Q::one()));
        }
    }

    #[test]
    fn rank_deficient_strip_has_line_faces() {
        // -1 <= x <= 1 in the plane: rank one, faces are vertical lines.
        let b = cfg(&[&[1, -1], &[0, 0]]);
        let c = big(&[1, 1]);
        assert!(!is_bounded(&b));
        let faces = minimal_faces(&b, &c);
        assert_eq!(faces.len(), 2);
        assert_eq!(faces[0].active, vec![0]);
        assert_eq!(faces[1].active, vec![1]);
        assert!(is_tight(&b, &c));
        assert!(is_integral(&b, &c));
        assert!(vertices(&b, &c).is_empty());
        assert!(matches!(
            lattice_points(&b, &c, &Limits::default()),
            Err(Error::Unbounded(_))
        ));
    }

    #[test]
    fn degenerate_vertex_collects_every_active_index() {
        // Three concurrent lines through the origin: x <= 0, y <= 0, x+y <= 0.
        let b = cfg(&[&[1, 0, 1], &[0, 1, 1]]);
        let c = big(&[0, 0, 0]);
        let faces = minimal_faces(&b, &c);
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].active, vec![0, 1, 2]);
        assert_eq!(faces[0].witness, q_vec(&[0, 0]));
    }

    #[test]
    fn tightening_matches_brute_force_on_random_bounded_systems() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x716);
        let mut tried = 0;
        while tried < 40 {
            let n = 4 + rng.gen_range(0..2);
            let cols: Vec<Vec<i64>> = (0..n)
                .map(|_| vec![rng.gen_range(-2i64..=2), rng.gen_range(-2i64..=2)])
                .collect();
            let b = IntMatrix::from_rows(&[
                cols.iter().map(|v| v[0]).collect::<Vec<_>>(),
                cols.iter().map(|v| v[1]).collect::<Vec<_>>(),
            ]);
            if !is_bounded(&b) {
                continue;
            }
            let c = big(&(0..n).map(|_| rng.gen_range(0i64..=4)).collect::<Vec<_>>());
            let pts = match lattice_points(&b, &c, &Limits::default()) {
                Ok(p) if !p.is_empty() => p,
                _ => continue,
            };
            tried += 1;
            let tight = tighten(&b, &c).unwrap();
            for i in 0..n {
                let max_attained = pts
                    .iter()
                    .map(|z| (0..2).map(|j| b.get(j, i) * &z[j]).sum::<BigInt>())
                    .max()
                    .unwrap();
                assert_eq!(tight[i], max_attained, "facet {} of {:?} rhs {:?}", i, cols, c);
            }
            assert!(is_tight(&b, &tight));
            assert_eq!(
                lattice_points(&b, &tight, &Limits::default()).unwrap(),
                pts
            );
            // Tight now means no facet can move: tighten is idempotent.
            assert_eq!(tighten(&b, &tight).unwrap(), tight);
            // And tightness of the original is equivalent to being fixed.
            assert_eq!(is_tight(&b, &c), tight == c);
        }
    }
}
