//! Virtual chambers of a configuration, sections of the dual projection,
//! virtual initial ideals, and the bijection between them.
//!
//! A virtual chamber is the set of complements of the maximal cells of a
//! triangulation of the Gale dual; regular triangulations correspond to
//! honest chambers of the chamber complex. Each triangulation defines a
//! section of the map u ↦ A·u from the nonnegative orthant onto cone(A),
//! and the associated monomial ideal is generated by the tight-degree
//! monomials outside the section's image.

use crate::error::{Error, Result};
use crate::ideal::{is_dual_graded, Expo, MonomialIdeal};
use crate::limits::Limits;
use crate::linear::{solve_square, Q};
use crate::matrix::IntMatrix;
use crate::polyhedron::is_tight;
use crate::supernormal::validate_configuration;
use crate::triangulate::{all_triangulations, is_regular};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;

/// One virtual chamber: the complements of the maximal cells of a
/// triangulation of the Gale dual, each of size equal to the number of
/// rows of the configuration.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct VirtualChamber {
    pub cells: Vec<Vec<usize>>,
    pub regular: bool,
}

/// A monomial ideal certified to have the dual-graded Hilbert function up
/// to the recorded total degree.
#[derive(Debug, Clone)]
pub struct VirtualInitialIdeal {
    pub ideal: MonomialIdeal,
    pub certified_to_degree: usize,
    pub source: Option<VirtualChamber>,
}

/// The section of the dual projection defined by a triangulation of the
/// Gale dual: a point of cone(A) is written in the unique cell containing
/// it, with ties between cells resolved to the lexicographically least.
#[derive(Debug, Clone)]
pub struct Section {
    dual: IntMatrix,
    cells: Vec<Vec<usize>>,
}

impl Section {
    /// The unique nonnegative solution of `A·u = b` supported on a cell.
    pub fn evaluate(&self, b: &[Q]) -> Result<Vec<Q>> {
        let r = self.dual.nrows();
        assert_eq!(b.len(), r);
        for cell in &self.cells {
            let a: Vec<Vec<Q>> = (0..r)
                .map(|i| cell.iter().map(|&j| Q::from(self.dual.get(i, j).clone())).collect())
                .collect();
            let Some(sol) = solve_square(&a, b) else { continue };
            if sol.iter().all(|x| !x.is_negative()) {
                let mut u = vec![Q::zero(); self.dual.ncols()];
                for (k, &j) in cell.iter().enumerate() {
                    u[j] = sol[k].clone();
                }
                return Ok(u);
            }
        }
        Err(Error::NotInCone("the point is outside the cone of the dual configuration".into()))
    }
}

fn complement(cell: &[usize], n: usize) -> Vec<usize> {
    (0..n).filter(|j| !cell.contains(j)).collect()
}

fn sorted_cells(mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for c in &mut cells {
        c.sort_unstable();
    }
    cells.sort();
    cells
}

/// All virtual chambers of the configuration: one per triangulation of the
/// Gale dual (triangulations in the general sense — cells need not use
/// every dual vector). Requires the columns to generate the full lattice,
/// so that the dual grading matches the row lattice exactly.
pub fn virtual_chambers(b: &IntMatrix, limits: &Limits) -> Result<Vec<VirtualChamber>> {
    validate_configuration(b, limits)?;
    if !b.columns_generate_lattice() {
        return Err(Error::NotSaturated(
            "virtual chambers need columns that generate the full integer lattice".into(),
        ));
    }
    let (m, n) = (b.nrows(), b.ncols());
    if b.rank() < m {
        return Err(Error::RankDeficient(
            "virtual chambers are defined for full-rank configurations".into(),
        ));
    }
    if n == m {
        return Ok(vec![VirtualChamber { cells: vec![(0..n).collect()], regular: true }]);
    }
    let a = b.gale_dual();
    let tris = all_triangulations(&a, false, limits)?;
    let mut out: Vec<VirtualChamber> = Vec::new();
    for t in tris {
        let regular = is_regular(&a, &t, limits)?.is_some();
        let cells = sorted_cells(t.iter().map(|c| complement(c, n)).collect());
        out.push(VirtualChamber { cells, regular });
    }
    out.sort();
    Ok(out)
}

/// The section attached to a virtual chamber (via the complementary
/// triangulation of the Gale dual).
pub fn section_for_chamber(b: &IntMatrix, vc: &VirtualChamber) -> Section {
    let n = b.ncols();
    let dual = b.gale_dual();
    let cells = sorted_cells(vc.cells.iter().map(|c| complement(c, n)).collect());
    Section { dual, cells }
}

/// Monomials of total degree at most `d`, in graded lexicographic order.
fn monomials_up_to(n: usize, d: i64) -> Vec<Expo> {
    let mut out = Vec::new();
    let mut v = vec![0i64; n];
    fn rec(v: &mut Vec<i64>, idx: usize, budget: i64, out: &mut Vec<Expo>) {
        if idx == v.len() {
            out.push(v.clone());
            return;
        }
        for e in 0..=budget {
            v[idx] = e;
            rec(v, idx + 1, budget - e, out);
        }
        v[idx] = 0;
    }
    rec(&mut v, 0, d, &mut out);
    out
}

fn dual_degree(a: &IntMatrix, c: &[i64]) -> Vec<Q> {
    (0..a.nrows())
        .map(|i| Q::from((0..c.len()).map(|j| a.get(i, j) * c[j]).sum::<BigInt>()))
        .collect()
}

fn ideal_from_section(
    b: &IntMatrix,
    section: &Section,
    tight: &[Expo],
    d: usize,
) -> Result<MonomialIdeal> {
    let a = b.gale_dual();
    let mut gens: Vec<Expo> = Vec::new();
    for c in tight {
        let u = section.evaluate(&dual_degree(&a, c))?;
        let in_image =
            u.iter().zip(c).all(|(ui, ci)| ui.is_integer() && ui.to_integer() == BigInt::from(*ci));
        if !in_image {
            gens.push(c.clone());
        }
    }
    let m = MonomialIdeal::new(gens);
    if !is_dual_graded(&m, b, d) {
        return Err(Error::BadInput(format!(
            "the section ideal fails the graded Hilbert check at degree {d}; \
             the bound is too small or the configuration is not supernormal"
        )));
    }
    Ok(m)
}

fn tight_monomials(b: &IntMatrix, d: usize) -> Vec<Expo> {
    monomials_up_to(b.ncols(), d as i64)
        .into_iter()
        .filter(|c| {
            let cb: Vec<BigInt> = c.iter().map(|x| BigInt::from(*x)).collect();
            is_tight(b, &cb)
        })
        .collect()
}

/// The virtual initial ideal of a virtual chamber, certified to degree
/// `d`: generated by the monomials `x^c` with `P_c` tight and `c` outside
/// the image of the chamber's section.
pub fn virtual_initial_ideal(
    b: &IntMatrix,
    vc: &VirtualChamber,
    d: usize,
    _limits: &Limits,
) -> Result<VirtualInitialIdeal> {
    let section = section_for_chamber(b, vc);
    let tight = tight_monomials(b, d);
    let ideal = ideal_from_section(b, &section, &tight, d)?;
    Ok(VirtualInitialIdeal { ideal, certified_to_degree: d, source: Some(vc.clone()) })
}

/// Recover the virtual chamber of a monomial ideal: its minimal primes
/// must be exactly the cells of a virtual chamber.
pub fn chamber_from_ideal(
    b: &IntMatrix,
    vii: &VirtualInitialIdeal,
    limits: &Limits,
) -> Result<VirtualChamber> {
    let m = b.nrows();
    let primes = vii.ideal.minimal_primes();
    if primes.iter().any(|p| p.len() != m) {
        return Err(Error::NotATriangulation(
            "the minimal primes do not all have chamber size".into(),
        ));
    }
    let cells = sorted_cells(primes);
    let all = virtual_chambers(b, limits)?;
    all.into_iter().find(|vc| vc.cells == cells).ok_or_else(|| {
        Error::NotATriangulation(
            "the minimal primes do not complement a triangulation of the dual".into(),
        )
    })
}

/// Outcome of the round-trip verification between virtual chambers and
/// virtual initial ideals at a fixed certification degree.
#[derive(Debug, Clone)]
pub struct BijectionReport {
    pub chamber_count: usize,
    pub regular_count: usize,
    pub ideal_count: usize,
    pub distinct_ideals: bool,
    pub round_trip_failures: Vec<usize>,
    pub errors: Vec<String>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.errors.is_empty()
            && self.round_trip_failures.is_empty()
            && self.distinct_ideals
            && self.ideal_count == self.chamber_count
    }
}

/// Construct every virtual chamber's ideal and check the bijection: the
/// ideals are pairwise distinct and each maps back to its chamber under
/// minimal primes. Failures are reported, not asserted, since the map is
/// only a bijection for supernormal configurations.
pub fn verify_bijection(b: &IntMatrix, d: usize, limits: &Limits) -> Result<BijectionReport> {
    let vcs = virtual_chambers(b, limits)?;
    let tight = tight_monomials(b, d);
    let mut ideals: Vec<Option<MonomialIdeal>> = Vec::new();
    let mut errors = Vec::new();
    for vc in &vcs {
        let section = section_for_chamber(b, vc);
        match ideal_from_section(b, &section, &tight, d) {
            Ok(m) => ideals.push(Some(m)),
            Err(e) => {
                errors.push(format!("chamber {:?}: {e}", vc.cells));
                ideals.push(None);
            }
        }
    }
    let mut round_trip_failures = Vec::new();
    for (k, (vc, ideal)) in vcs.iter().zip(&ideals).enumerate() {
        let Some(m) = ideal else { continue };
        let cells = sorted_cells(m.minimal_primes());
        if cells != vc.cells {
            round_trip_failures.push(k);
        }
    }
    let built: Vec<&MonomialIdeal> = ideals.iter().flatten().collect();
    let distinct: BTreeSet<Vec<Expo>> =
        built.iter().map(|m| m.generators().to_vec()).collect();
    Ok(BijectionReport {
        chamber_count: vcs.len(),
        regular_count: vcs.iter().filter(|vc| vc.regular).count(),
        ideal_count: built.len(),
        distinct_ideals: distinct.len() == built.len(),
        round_trip_failures,
        errors,
    })
}
