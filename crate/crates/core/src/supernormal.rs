//! Normality and supernormality verdicts for integer vector configurations,
//! and total dual integrality of the inequality systems they define.
//!
//! A configuration is the set of columns `b_1, …, b_n` of an integer matrix.
//! It is *normal* when every lattice point of `cone(B)` is a nonnegative
//! integer combination of the `b_i`. It is *supernormal* when every subset
//! `B' ⊆ B` satisfies the stronger condition that each lattice point of
//! `cone(B')` is a nonnegative integer combination of the members of `B`
//! lying in `cone(B')`.
//!
//! Supernormality is decided without enumerating all subsets: it suffices to
//! check linearly independent subsets `σ` that are *ray-closed* (every member
//! of `B` inside `cone(σ)` is parallel to a member of `σ`), and for those to
//! test only the lattice points of the half-open fundamental parallelepiped.
//! Sufficiency follows from a stellar-descent argument: any lattice point of
//! any `cone(B')` lies in some simplicial cone spanned by members of
//! `B ∩ cone(B')` whose interior meets no further ray of that set, and
//! shifting by the integral part of its coordinates lands it in the
//! parallelepiped of a ray-closed independent subset.

use crate::cone::{cone_of_columns, in_cone_of, Cone};
use crate::error::{Error, Result};
use crate::hilbert::{hilbert_basis, monoid_membership, parallelepiped_points};
use crate::limits::Limits;
use crate::linear::{q_from_bigints, solve_affine, Q};
use crate::matrix::{primitive_vector, IntMatrix};
use crate::polyhedron::minimal_faces;
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::collections::BTreeSet;

/// Verdict of a normality test. When the configuration is not normal,
/// `witness` is a lattice point of the cone that is not a nonnegative
/// integer combination of the vectors.
#[derive(Debug, Clone, Serialize)]
pub struct NormalityReport {
    pub normal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<BigInt>>,
}

/// A reason a configuration fails to be supernormal: the lattice point
/// `point` lies in the cone spanned by the columns indexed by `subset`
/// (0-based, independent) but is not a nonnegative integer combination of
/// the configuration members lying in that cone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupernormalWitness {
    pub subset: Vec<usize>,
    pub point: Vec<BigInt>,
}

/// Verdict of a supernormality test.
#[derive(Debug, Clone, Serialize)]
pub struct SupernormalityReport {
    pub supernormal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<SupernormalWitness>,
}

/// Verdict of a total dual integrality test. When the system fails to be
/// totally dual integral, `face_active` is the active index set of a minimal
/// face whose active columns are not normal, and `missing_point` witnesses
/// that failure of normality.
#[derive(Debug, Clone, Serialize)]
pub struct TdiReport {
    pub tdi: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub face_active: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub missing_point: Option<Vec<BigInt>>,
}

/// Check that a matrix is a valid configuration within the given limits:
/// columns pairwise distinct and nonzero, sizes under the guards.
pub fn validate_configuration(b: &IntMatrix, limits: &Limits) -> Result<()> {
    if b.nrows() == 0 || b.ncols() == 0 {
        return Err(Error::BadInput("configuration must be nonempty".into()));
    }
    if b.nrows() > limits.max_dim {
        return Err(Error::TooLarge(format!(
            "ambient dimension {} exceeds the limit {}",
            b.nrows(),
            limits.max_dim
        )));
    }
    if b.ncols() > limits.max_vectors {
        return Err(Error::TooLarge(format!(
            "{} vectors exceed the limit {}",
            b.ncols(),
            limits.max_vectors
        )));
    }
    let cols = b.columns();
    for (j, c) in cols.iter().enumerate() {
        if c.iter().all(|x| x.is_zero()) {
            return Err(Error::BadInput(format!("column {} is zero", j + 1)));
        }
        for (k, d) in cols.iter().enumerate().skip(j + 1) {
            if c == d {
                return Err(Error::BadInput(format!(
                    "columns {} and {} are equal",
                    j + 1,
                    k + 1
                )));
            }
        }
    }
    Ok(())
}

/// Whether the columns span a pointed cone, i.e. lie in an open halfspace.
pub fn is_pointed(b: &IntMatrix) -> bool {
    crate::hilbert::positive_functional(&b.columns(), b.nrows()).is_some()
}

/// Coordinates of `x` in the simplicial cone spanned by the independent
/// columns `sigma`, when `x` lies in that cone: the unique nonnegative
/// rational solution of `sigma · λ = x`.
fn simplicial_cone_coords(sigma: &[Vec<BigInt>], x: &[BigInt]) -> Option<Vec<Q>> {
    let m = x.len();
    let k = sigma.len();
    let a: Vec<Vec<Q>> = (0..m)
        .map(|i| (0..k).map(|j| Q::from(sigma[j][i].clone())).collect())
        .collect();
    let aff = solve_affine(&a, &q_from_bigints(x), k)?;
    debug_assert!(aff.basis.is_empty(), "independent columns give a unique solution");
    if aff.particular.iter().all(|c| !c.is_negative()) {
        Some(aff.particular)
    } else {
        None
    }
}

fn same_direction(a: &[BigInt], b: &[BigInt]) -> bool {
    primitive_vector(a) == primitive_vector(b)
}

/// Normality of an arbitrary list of vectors (zeros and duplicates are
/// tolerated and ignored): is every lattice point of their cone a
/// nonnegative integer combination of them?
///
/// Pointed cones are handled by testing every Hilbert basis element for
/// membership in the monoid the vectors generate. A cone with a nonzero
/// lineality space `L` splits: the configuration is normal exactly when
/// both signs of every basis vector of the lattice `L ∩ Z^m` lie in the
/// monoid and the image configuration in the quotient lattice `Z^m / (L ∩
/// Z^m)` (which spans a pointed cone) is normal. Witnesses from the
/// quotient lift through any integral preimage.
pub fn normality_of_set(
    vectors: &[Vec<BigInt>],
    ambient: usize,
    limits: &Limits,
) -> Result<NormalityReport> {
    let vs: Vec<Vec<BigInt>> = vectors
        .iter()
        .filter(|v| !v.iter().all(|x| x.is_zero()))
        .cloned()
        .collect();
    if vs.is_empty() {
        return Ok(NormalityReport { normal: true, witness: None });
    }
    let cone = Cone::from_generators(&vs, ambient);
    if cone.lineality.is_empty() {
        let hb = hilbert_basis(&vs, ambient, limits)?;
        for h in hb {
            if monoid_membership(&h, &vs).is_none() {
                return Ok(NormalityReport { normal: false, witness: Some(h) });
            }
        }
        return Ok(NormalityReport { normal: true, witness: None });
    }

    // Lineality split. The minimal face L of the cone is spanned by the
    // vectors lying in it, and any member of the monoid that lies in L is
    // already a combination of those vectors (sum the facet normals: the
    // result vanishes on the cone exactly on L). So the lattice of L is
    // covered if and only if ± every basis vector of it is a combination of
    // the vectors in L.
    let k = cone.lineality.len();
    let lin_rows = IntMatrix::from_bigint_rows(cone.lineality.clone());
    let in_lineality = |v: &[BigInt]| -> bool {
        let mut rows = cone.lineality.clone();
        rows.push(v.to_vec());
        IntMatrix::from_bigint_rows(rows).rank() == k
    };
    let sub: Vec<Vec<BigInt>> = vs.iter().filter(|v| in_lineality(v)).cloned().collect();
    for l in &cone.lineality {
        for signed in [l.clone(), l.iter().map(|x| -x).collect::<Vec<BigInt>>()] {
            if monoid_membership(&signed, &sub).is_none() {
                return Ok(NormalityReport { normal: false, witness: Some(signed) });
            }
        }
    }

    // Quotient by the lineality lattice: a unimodular U with U · Lᵀ = [D; 0]
    // (D diagonal with unit entries, since the lineality rows are a
    // saturated lattice basis) makes the last ambient − k coordinates of
    // U · x the quotient coordinates.
    let lt = lin_rows.transpose();
    let snf = lt.smith_normal_form();
    debug_assert!(
        (0..k).all(|i| snf.s.get(i, i).abs() == num_traits::one()),
        "a saturated lattice basis has unit invariant factors"
    );
    let proj = |v: &[BigInt]| -> Vec<BigInt> {
        let uv = snf.u.mul_vec(v);
        uv[k..].to_vec()
    };
    let image: Vec<Vec<BigInt>> = vs.iter().map(|v| proj(v)).collect();
    let inner = normality_of_set(&image, ambient - k, limits)?;
    if let Some(y) = inner.witness {
        let mut w = vec![BigInt::zero(); k];
        w.extend(y);
        let x0 = snf
            .u
            .solve_integer(&w)
            .expect("unimodular transforms are invertible over the integers");
        debug_assert!(in_cone_of(&q_from_bigints(&x0), &vs));
        debug_assert!(monoid_membership(&x0, &vs).is_none());
        return Ok(NormalityReport { normal: false, witness: Some(x0) });
    }
    Ok(NormalityReport { normal: inner.normal, witness: None })
}

/// Whether the configuration is normal: every lattice point of `cone(B)` is
/// a nonnegative integer combination of the columns. On failure the report
/// carries such a lattice point that is not.
pub fn is_normal(b: &IntMatrix, limits: &Limits) -> Result<NormalityReport> {
    validate_configuration(b, limits)?;
    normality_of_set(&b.columns(), b.nrows(), limits)
}

/// Whether the configuration is supernormal: every subset `B' ⊆ B` has all
/// lattice points of `cone(B')` generated by the members of `B` lying in
/// `cone(B')`.
///
/// The check enumerates linearly independent subsets `σ` in order of size
/// and then lexicographically by index set, keeps those that are ray-closed
/// (each member of `B` in `cone(σ)` is a positive multiple of a member of
/// `σ`), and tests the lattice points of the half-open parallelepiped of `σ`
/// for membership in the monoid generated by `B ∩ cone(σ)`. The first
/// failure, in that order, is the reported witness, which makes the witness
/// deterministic.
pub fn is_supernormal(b: &IntMatrix, limits: &Limits) -> Result<SupernormalityReport> {
    validate_configuration(b, limits)?;
    let m = b.nrows();
    let n = b.ncols();
    let cols = b.columns();
    for size in 1..=m.min(n) {
        for sel in (0..n).combinations(size) {
            let sigma: Vec<Vec<BigInt>> = sel.iter().map(|&j| cols[j].clone()).collect();
            let sub = IntMatrix::from_cols(&sigma);
            if sub.rank() < size {
                continue;
            }
            if parallelepiped_is_trivial(&sub) {
                // The half-open parallelepiped holds no nonzero lattice
                // point, so this subset cannot carry a witness; skip the
                // ray-closure scan.
                continue;
            }
            let mut closure: Vec<usize> = Vec::new();
            let mut ray_closed = true;
            for (j, col) in cols.iter().enumerate() {
                if simplicial_cone_coords(&sigma, col).is_some() {
                    closure.push(j);
                    if !sigma.iter().any(|s| same_direction(s, col)) {
                        ray_closed = false;
                        break;
                    }
                }
            }
            if !ray_closed {
                continue;
            }
            let closure_cols: Vec<Vec<BigInt>> =
                closure.iter().map(|&j| cols[j].clone()).collect();
            for p in parallelepiped_points(&sigma, limits)? {
                if p.iter().all(|x| x.is_zero()) {
                    continue;
                }
                if monoid_membership(&p, &closure_cols).is_none() {
                    return Ok(SupernormalityReport {
                        supernormal: false,
                        witness: Some(SupernormalWitness { subset: sel, point: p }),
                    });
                }
            }
        }
    }
    Ok(SupernormalityReport { supernormal: true, witness: None })
}

/// Whether the lattice spanned by the (independent) columns of `sub` has
/// index 1 in its saturation, i.e. the gcd of the maximal minors is 1. In
/// that case the half-open fundamental parallelepiped contains only the
/// origin.
fn parallelepiped_is_trivial(sub: &IntMatrix) -> bool {
    use num_integer::Integer;
    let k = sub.ncols();
    let t = sub.transpose();
    let mut g = BigInt::zero();
    for rows in (0..sub.nrows()).combinations(k) {
        let minor = t.select_cols(&rows).determinant();
        g = g.gcd(&minor);
        if g.is_one() {
            return true;
        }
    }
    false
}

/// Supernormality checked directly from the definition, enumerating every
/// nonempty subset `B'` and testing normality of `B ∩ cone(B')`. Exponential
/// in the number of columns; intended as a cross-check on small inputs.
pub fn supernormal_by_definition(b: &IntMatrix, limits: &Limits) -> Result<bool> {
    validate_configuration(b, limits)?;
    let n = b.ncols();
    let m = b.nrows();
    if n > 16 {
        return Err(Error::TooLarge(
            "definitional supernormality check is limited to 16 vectors".into(),
        ));
    }
    let cols = b.columns();
    let mut closures: BTreeSet<Vec<usize>> = BTreeSet::new();
    for mask in 1u32..(1u32 << n) {
        let gens: Vec<Vec<BigInt>> = (0..n)
            .filter(|j| mask & (1 << j) != 0)
            .map(|j| cols[j].clone())
            .collect();
        let closure: Vec<usize> = (0..n)
            .filter(|&j| in_cone_of(&q_from_bigints(&cols[j]), &gens))
            .collect();
        closures.insert(closure);
    }
    for closure in closures {
        let sub: Vec<Vec<BigInt>> = closure.iter().map(|&j| cols[j].clone()).collect();
        if !normality_of_set(&sub, m, limits)?.normal {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The planar consecutive-determinant criterion for supernormality.
///
/// For pairwise non-parallel nonzero vectors in the plane, sorted
/// counterclockwise starting from the positive x-axis, the configuration is
/// supernormal exactly when each consecutive pair has determinant 1, and
/// additionally the wrap-around pair does when the vectors positively span
/// the plane. Parallel pairs (in either direction) are rejected: the
/// criterion does not apply to them.
pub fn planar_consecutive_criterion(b: &IntMatrix) -> Result<bool> {
    if b.nrows() != 2 {
        return Err(Error::Unsupported(
            "the consecutive-determinant criterion is specific to the plane".into(),
        ));
    }
    if b.ncols() < 2 {
        return Err(Error::BadInput(
            "the consecutive-determinant criterion needs at least two vectors".into(),
        ));
    }
    let cols = b.columns();
    for (j, c) in cols.iter().enumerate() {
        if c.iter().all(|x| x.is_zero()) {
            return Err(Error::BadInput(format!("column {} is zero", j + 1)));
        }
        for d in cols.iter().skip(j + 1) {
            let neg: Vec<BigInt> = d.iter().map(|x| -x).collect();
            if same_direction(c, d) || same_direction(c, &neg) {
                return Err(Error::BadInput(
                    "the consecutive-determinant criterion requires pairwise non-parallel vectors"
                        .into(),
                ));
            }
        }
    }
    let half = |v: &[BigInt]| -> u8 {
        if v[1].is_positive() || (v[1].is_zero() && v[0].is_positive()) {
            0
        } else {
            1
        }
    };
    let det = |a: &[BigInt], b: &[BigInt]| -> BigInt { &a[0] * &b[1] - &a[1] * &b[0] };
    let mut sorted = cols.clone();
    sorted.sort_by(|a, b| half(a).cmp(&half(b)).then_with(|| det(b, a).cmp(&BigInt::zero())));
    let one = BigInt::from(1);
    for w in sorted.windows(2) {
        if det(&w[0], &w[1]) != one {
            return Ok(false);
        }
    }
    if cone_of_columns(b).is_everything() && det(&sorted[sorted.len() - 1], &sorted[0]) != one {
        return Ok(false);
    }
    Ok(true)
}

/// Whether the system `B^T x ≤ c` is totally dual integral: for every face
/// of the polyhedron, the columns active on it form a normal configuration.
/// It suffices to test minimal faces, since the active set of any face is a
/// superset of the active set of a minimal face it contains and activity
/// closure only adds vectors inside the active cone. An infeasible system
/// is vacuously totally dual integral.
pub fn is_tdi(b: &IntMatrix, c: &[BigInt], limits: &Limits) -> Result<TdiReport> {
    validate_configuration(b, limits)?;
    assert_eq!(c.len(), b.ncols(), "one bound per column");
    for face in minimal_faces(b, c) {
        let active_cols = b.select_cols(&face.active).columns();
        let rep = normality_of_set(&active_cols, b.nrows(), limits)?;
        if !rep.normal {
            return Ok(TdiReport {
                tdi: false,
                face_active: Some(face.active),
                missing_point: rep.witness,
            });
        }
    }
    Ok(TdiReport { tdi: true, face_active: None, missing_point: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::{rational_feasible, LinCon, Rel};
    use crate::polyhedron::{facet_constraints, is_tight};
    use num_bigint::BigInt;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cfg(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    /// A lattice point of the cone that is claimed missing from the monoid
    /// must really be in the cone and really be missing.
    fn check_normality_witness(b: &IntMatrix, w: &[BigInt]) {
        let cols = b.columns();
        assert!(in_cone_of(&q_from_bigints(w), &cols), "witness must lie in the cone");
        assert!(monoid_membership(w, &cols).is_none(), "witness must avoid the monoid");
    }

    fn check_supernormal_witness(b: &IntMatrix, w: &SupernormalWitness) {
        let cols = b.columns();
        let sigma: Vec<Vec<BigInt>> = w.subset.iter().map(|&j| cols[j].clone()).collect();
        assert_eq!(IntMatrix::from_cols(&sigma).rank(), sigma.len());
        assert!(simplicial_cone_coords(&sigma, &w.point).is_some());
        let closure: Vec<Vec<BigInt>> = cols
            .iter()
            .filter(|c| simplicial_cone_coords(&sigma, c).is_some())
            .cloned()
            .collect();
        assert!(monoid_membership(&w.point, &closure).is_none());
    }

    // ---- one-dimensional configurations, against the full classification ----

    fn dim1_config(vals: &[i64]) -> IntMatrix {
        cfg(&[vals.to_vec()])
    }

    #[test]
    fn dim1_classification_on_random_configurations() {
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        for _ in 0..150 {
            let n = rng.gen_range(1..=5);
            let mut vals: Vec<i64> = Vec::new();
            while vals.len() < n {
                let v = rng.gen_range(-9..=9i64);
                if v != 0 && !vals.contains(&v) {
                    vals.push(v);
                }
            }
            let b = dim1_config(&vals);
            let min = *vals.iter().min().unwrap();
            let max = *vals.iter().max().unwrap();
            let gcd = vals.iter().fold(0i64, |g, &v| {
                let mut a = g.abs();
                let mut b = v.abs();
                while b != 0 {
                    let t = a % b;
                    a = b;
                    b = t;
                }
                a
            });
            let expect_pointed = min > 0 || max < 0;
            let expect_normal = min == 1 || max == -1 || (min < 0 && max > 0 && gcd == 1);
            let expect_supernormal =
                min == 1 || max == -1 || (vals.contains(&1) && vals.contains(&-1));

            assert_eq!(is_pointed(&b), expect_pointed, "pointedness of {vals:?}");
            let nr = is_normal(&b, &lim()).unwrap();
            assert_eq!(nr.normal, expect_normal, "normality of {vals:?}");
            if let Some(w) = &nr.witness {
                check_normality_witness(&b, w);
            }
            let sr = is_supernormal(&b, &lim()).unwrap();
            assert_eq!(sr.supernormal, expect_supernormal, "supernormality of {vals:?}");
            if let Some(w) = &sr.witness {
                check_supernormal_witness(&b, w);
            }
            assert!(
                !sr.supernormal || nr.normal,
                "supernormal must imply normal for {vals:?}"
            );
            if expect_pointed {
                assert_eq!(
                    nr.normal, sr.supernormal,
                    "pointed line configurations: normal iff supernormal, at {vals:?}"
                );
            }
        }
    }

    #[test]
    fn line_pair_with_gap_is_normal_but_not_supernormal() {
        let b = dim1_config(&[-2, 3]);
        assert!(!is_pointed(&b));
        assert!(is_normal(&b, &lim()).unwrap().normal);
        let sr = is_supernormal(&b, &lim()).unwrap();
        assert!(!sr.supernormal);
        // The first violating subset in size-then-lex order is {-2} alone,
        // whose half-open parallelepiped contains -1.
        let w = sr.witness.unwrap();
        assert_eq!(w, SupernormalWitness { subset: vec![0], point: bi(&[-1]) });
        assert!(!supernormal_by_definition(&b, &lim()).unwrap());
    }

    #[test]
    fn positive_pair_with_gcd_one_is_pointed_but_not_normal() {
        let b = dim1_config(&[2, 3]);
        assert!(is_pointed(&b));
        let nr = is_normal(&b, &lim()).unwrap();
        assert!(!nr.normal);
        assert_eq!(nr.witness, Some(bi(&[1])));
        assert!(!is_supernormal(&b, &lim()).unwrap().supernormal);
    }

    // ---- two-dimensional configurations ----

    #[test]
    fn unimodular_quadrant_with_interior_ray_is_normal_not_supernormal() {
        let b = cfg(&[vec![1, 1, 0], vec![0, 2, 1]]);
        assert!(is_pointed(&b));
        assert!(is_normal(&b, &lim()).unwrap().normal);
        let sr = is_supernormal(&b, &lim()).unwrap();
        assert!(!sr.supernormal);
        let w = sr.witness.unwrap();
        assert_eq!(w, SupernormalWitness { subset: vec![0, 1], point: bi(&[1, 1]) });
        check_supernormal_witness(&b, &w);
        assert!(!supernormal_by_definition(&b, &lim()).unwrap());
    }

    #[test]
    fn halfplane_with_both_units_is_supernormal() {
        let b = cfg(&[vec![1, -1, 0], vec![0, 0, 1]]);
        assert!(!is_pointed(&b));
        assert!(is_normal(&b, &lim()).unwrap().normal);
        assert!(is_supernormal(&b, &lim()).unwrap().supernormal);
        assert!(supernormal_by_definition(&b, &lim()).unwrap());
    }

    #[test]
    fn halfplane_with_tripled_transversal_is_not_normal() {
        let b = cfg(&[vec![1, -1, 0], vec![0, 0, 3]]);
        let nr = is_normal(&b, &lim()).unwrap();
        assert!(!nr.normal);
        check_normality_witness(&b, nr.witness.as_ref().unwrap());
    }

    #[test]
    fn full_plane_with_even_horizontal_steps_is_not_normal() {
        let b = cfg(&[vec![0, 0, 2, -2], vec![1, -1, 0, 0]]);
        let nr = is_normal(&b, &lim()).unwrap();
        assert!(!nr.normal);
        // The lineality lattice basis is checked in canonical (Hermite row)
        // order, so the witness is pinned.
        assert_eq!(nr.witness, Some(bi(&[1, 0])));
        check_normality_witness(&b, nr.witness.as_ref().unwrap());
    }

    #[test]
    fn all_four_units_are_supernormal() {
        let b = cfg(&[vec![1, -1, 0, 0], vec![0, 0, 1, -1]]);
        assert!(is_normal(&b, &lim()).unwrap().normal);
        assert!(is_supernormal(&b, &lim()).unwrap().supernormal);
        assert!(supernormal_by_definition(&b, &lim()).unwrap());
    }

    fn random_nonparallel_planar(rng: &mut ChaCha8Rng) -> IntMatrix {
        let n = rng.gen_range(2..=6);
        let mut cols: Vec<Vec<i64>> = Vec::new();
        while cols.len() < n {
            let v = vec![rng.gen_range(-4..=4i64), rng.gen_range(-4..=4i64)];
            if v[0] == 0 && v[1] == 0 {
                continue;
            }
            let vb = bi(&v);
            let nb: Vec<BigInt> = vb.iter().map(|x| -x).collect();
            if cols
                .iter()
                .any(|c| same_direction(&bi(c), &vb) || same_direction(&bi(c), &nb))
            {
                continue;
            }
            cols.push(v);
        }
        cfg(&[
            cols.iter().map(|c| c[0]).collect(),
            cols.iter().map(|c| c[1]).collect(),
        ])
    }

    #[test]
    fn planar_criterion_agrees_with_subset_check_and_definition() {
        let mut rng = ChaCha8Rng::seed_from_u64(402);
        for trial in 0..50 {
            let b = random_nonparallel_planar(&mut rng);
            let by_criterion = planar_consecutive_criterion(&b).unwrap();
            let by_subsets = is_supernormal(&b, &lim()).unwrap().supernormal;
            let by_definition = supernormal_by_definition(&b, &lim()).unwrap();
            assert_eq!(by_criterion, by_subsets, "trial {trial}: {b:?}");
            assert_eq!(by_subsets, by_definition, "trial {trial}: {b:?}");
        }
    }

    #[test]
    fn planar_criterion_rejects_parallel_pairs_and_other_dimensions() {
        let parallel = cfg(&[vec![1, 2], vec![1, 2]]);
        assert!(matches!(
            planar_consecutive_criterion(&parallel),
            Err(Error::BadInput(_))
        ));
        let antipodal = cfg(&[vec![1, -1], vec![0, 0]]);
        assert!(matches!(
            planar_consecutive_criterion(&antipodal),
            Err(Error::BadInput(_))
        ));
        let line = cfg(&[vec![1, 2]]);
        assert!(matches!(
            planar_consecutive_criterion(&line),
            Err(Error::Unsupported(_))
        ));
    }

    // ---- three- and four-dimensional catalog configurations ----

    #[test]
    fn hilbert_basis_of_skew_cone_is_not_supernormal_at_pinned_subset() {
        let b = cfg(&[
            vec![1, 0, 1, 1, 1, 1],
            vec![0, 1, 1, 1, 2, 2],
            vec![0, 0, 1, 2, 3, 4],
        ]);
        assert!(is_pointed(&b));
        assert!(is_normal(&b, &lim()).unwrap().normal);
        let sr = is_supernormal(&b, &lim()).unwrap();
        assert!(!sr.supernormal);
        let w = sr.witness.unwrap();
        assert_eq!(
            w,
            SupernormalWitness { subset: vec![1, 2, 4], point: bi(&[1, 2, 2]) }
        );
        check_supernormal_witness(&b, &w);
        assert!(!supernormal_by_definition(&b, &lim()).unwrap());
    }

    #[test]
    fn adding_the_missing_point_makes_the_skew_cone_supernormal() {
        let b = cfg(&[
            vec![1, 0, 1, 1, 1, 1, 1],
            vec![0, 1, 1, 1, 2, 2, 2],
            vec![0, 0, 1, 2, 3, 4, 2],
        ]);
        assert!(is_supernormal(&b, &lim()).unwrap().supernormal);
        assert!(supernormal_by_definition(&b, &lim()).unwrap());
    }

    #[test]
    fn unit_cube_vertices_lifted_to_heights_are_not_supernormal() {
        let b = cfg(&[
            vec![1, 1, 1, 1, 1, 1, 1, 1],
            vec![0, 0, 0, 0, 1, 1, 1, 1],
            vec![0, 0, 1, 1, 0, 0, 1, 1],
            vec![0, 1, 0, 1, 0, 1, 0, 1],
        ]);
        assert!(is_pointed(&b));
        let sr = is_supernormal(&b, &lim()).unwrap();
        assert!(!sr.supernormal);
        let w = sr.witness.unwrap();
        assert_eq!(
            w,
            SupernormalWitness { subset: vec![0, 3, 5, 6], point: bi(&[2, 1, 1, 1]) }
        );
        check_supernormal_witness(&b, &w);
    }

    #[test]
    fn lifted_cube_with_center_point_added_is_supernormal() {
        let b = cfg(&[
            vec![1, 1, 1, 1, 1, 1, 1, 1, 2],
            vec![0, 0, 0, 0, 1, 1, 1, 1, 1],
            vec![0, 0, 1, 1, 0, 0, 1, 1, 1],
            vec![0, 1, 0, 1, 0, 1, 0, 1, 1],
        ]);
        assert!(is_supernormal(&b, &lim()).unwrap().supernormal);
    }

    #[test]
    fn all_small_sign_vectors_are_supernormal() {
        let mut cols: Vec<Vec<i64>> = Vec::new();
        for x in -1..=1i64 {
            for y in -1..=1i64 {
                for z in -1..=1i64 {
                    if (x, y, z) != (0, 0, 0) {
                        cols.push(vec![x, y, z]);
                    }
                }
            }
        }
        let b = cfg(&[
            cols.iter().map(|c| c[0]).collect(),
            cols.iter().map(|c| c[1]).collect(),
            cols.iter().map(|c| c[2]).collect(),
        ]);
        assert_eq!(b.ncols(), 26);
        assert!(!is_pointed(&b));
        assert!(is_normal(&b, &lim()).unwrap().normal);
        assert!(is_supernormal(&b, &lim()).unwrap().supernormal);
    }

    // ---- supernormality criterion against the definition in mixed shapes ----

    #[test]
    fn subset_criterion_matches_definition_on_random_spatial_configurations() {
        let mut rng = ChaCha8Rng::seed_from_u64(907);
        for trial in 0..30 {
            let n = rng.gen_range(2..=5);
            let mut cols: Vec<Vec<i64>> = Vec::new();
            while cols.len() < n {
                let v = vec![
                    rng.gen_range(-2..=2i64),
                    rng.gen_range(-2..=2i64),
                    rng.gen_range(-2..=2i64),
                ];
                if v.iter().all(|&x| x == 0) || cols.contains(&v) {
                    continue;
                }
                cols.push(v);
            }
            let b = cfg(&[
                cols.iter().map(|c| c[0]).collect(),
                cols.iter().map(|c| c[1]).collect(),
                cols.iter().map(|c| c[2]).collect(),
            ]);
            let fast = is_supernormal(&b, &lim()).unwrap();
            let slow = supernormal_by_definition(&b, &lim()).unwrap();
            assert_eq!(fast.supernormal, slow, "trial {trial}: {b:?}");
            if let Some(w) = &fast.witness {
                check_supernormal_witness(&b, w);
            }
        }
    }

    // ---- total dual integrality ----

    #[test]
    fn tight_but_not_tdi_bound_for_the_skew_quadrant() {
        let b = cfg(&[vec![1, 1, 0], vec![0, 2, 1]]);
        let c = bi(&[1, 1, 1]);
        assert!(is_tight(&b, &c));
        let rep = is_tdi(&b, &c, &lim()).unwrap();
        assert!(!rep.tdi);
        assert_eq!(rep.face_active, Some(vec![0, 1]));
        let missing = rep.missing_point.unwrap();
        let face_cols = b.select_cols(&[0, 1]).columns();
        assert!(in_cone_of(&q_from_bigints(&missing), &face_cols));
        assert!(monoid_membership(&missing, &face_cols).is_none());
    }

    #[test]
    fn empty_polyhedron_is_vacuously_tdi() {
        let b = cfg(&[vec![1, -1]]);
        let c = bi(&[-1, -1]);
        assert!(!crate::polyhedron::is_feasible(&b, &c));
        assert!(is_tdi(&b, &c, &lim()).unwrap().tdi);
    }

    /// For every subset of rows, decide whether it is the full active set of
    /// a nonempty face, and if so test normality of those columns. This is
    /// the definition of total dual integrality applied to every face, used
    /// to validate that testing minimal faces only is enough.
    fn tdi_over_all_faces(b: &IntMatrix, c: &[BigInt], limits: &Limits) -> bool {
        let n = b.ncols();
        let m = b.nrows();
        let base = facet_constraints(b, c);
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        for mask in 0u32..(1u32 << n) {
            let active: Vec<usize> = (0..n).filter(|j| mask & (1 << j) != 0).collect();
            let mut cons = base.clone();
            for &i in &active {
                cons.push(crate::polyhedron::equality_row(b, c, i));
            }
            if rational_feasible(&cons, m).is_none() {
                continue;
            }
            // Close up to the full active set of the face.
            let mut full = active.clone();
            for j in 0..n {
                if full.contains(&j) {
                    continue;
                }
                let mut probe = cons.clone();
                let col = b.col(j);
                probe.push(LinCon {
                    coeffs: col.iter().map(|x| Q::from(x.clone())).collect(),
                    rel: Rel::Lt,
                    rhs: Q::from(c[j].clone()),
                });
                if rational_feasible(&probe, m).is_none() {
                    full.push(j);
                }
            }
            full.sort_unstable();
            seen.insert(full);
        }
        for active in seen {
            let cols: Vec<Vec<BigInt>> =
                active.iter().map(|&j| b.col(j)).collect();
            if !normality_of_set(&cols, m, limits).unwrap().normal {
                return false;
            }
        }
        true
    }

    #[test]
    fn minimal_face_tdi_test_agrees_with_all_faces_on_random_systems() {
        let mut rng = ChaCha8Rng::seed_from_u64(5113);
        let mut disagreeable = 0usize;
        for _ in 0..40 {
            let n = rng.gen_range(2..=4);
            let mut cols: Vec<Vec<i64>> = Vec::new();
            while cols.len() < n {
                let v = vec![rng.gen_range(-2..=2i64), rng.gen_range(-2..=2i64)];
                if v.iter().all(|&x| x == 0) || cols.contains(&v) {
                    continue;
                }
                cols.push(v);
            }
            let b = cfg(&[
                cols.iter().map(|c| c[0]).collect(),
                cols.iter().map(|c| c[1]).collect(),
            ]);
            let c: Vec<BigInt> =
                (0..n).map(|_| BigInt::from(rng.gen_range(-2..=3i64))).collect();
            let fast = is_tdi(&b, &c, &lim()).unwrap().tdi;
            let slow = tdi_over_all_faces(&b, &c, &lim());
            assert_eq!(fast, slow, "B = {b:?}, c = {c:?}");
            if !fast {
                disagreeable += 1;
            }
        }
        // The sample must exercise both verdicts to mean anything.
        assert!(disagreeable > 0);
    }

    #[test]
    fn tight_systems_over_supernormal_configurations_are_tdi() {
        // All four unit directions in the plane form a supernormal
        // configuration, so every tight bound vector must give a totally
        // dual integral system.
        let b = cfg(&[vec![1, -1, 0, 0], vec![0, 0, 1, -1]]);
        assert!(is_supernormal(&b, &lim()).unwrap().supernormal);
        let mut rng = ChaCha8Rng::seed_from_u64(88);
        let mut tight_seen = 0usize;
        for _ in 0..60 {
            let c: Vec<BigInt> =
                (0..4).map(|_| BigInt::from(rng.gen_range(-3..=3i64))).collect();
            if is_tight(&b, &c) {
                tight_seen += 1;
                assert!(is_tdi(&b, &c, &lim()).unwrap().tdi, "c = {c:?}");
            }
        }
        assert!(tight_seen > 0);
    }

    #[test]
    fn validation_rejects_degenerate_configurations() {
        let zero_col = cfg(&[vec![1, 0], vec![0, 0]]);
        assert!(matches!(
            validate_configuration(&zero_col, &lim()),
            Err(Error::BadInput(_))
        ));
        let dup = cfg(&[vec![1, 1], vec![2, 2]]);
        assert!(matches!(
            validate_configuration(&dup, &lim()),
            Err(Error::BadInput(_))
        ));
        let wide = IntMatrix::from_rows(&[(0..40i64).map(|i| i + 1).collect::<Vec<_>>()]);
        assert!(matches!(
            validate_configuration(&wide, &lim()),
            Err(Error::TooLarge(_))
        ));
    }
}
