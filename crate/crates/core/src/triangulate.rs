//! Regular subdivisions from lifting heights, pulling refinements,
//! exhaustive triangulation enumeration, and unimodularity/regularity tests.
//!
//! A subdivision of a configuration is a polyhedral fan supported on the
//! cone of the columns whose maximal cells are recorded as index subsets. A
//! triangulation is a subdivision whose maximal cells are linearly
//! independent sets. Everything here works inside the saturated lattice of
//! the column span, so rank-deficient configurations are handled uniformly.

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linear::{clear_denominators, solve_square, strict_feasible, LinCon, Q, Rel};
use crate::matrix::{primitive_vector, IntMatrix};
use crate::polyhedron::{is_feasible, minimal_faces};
use crate::supernormal::validate_configuration;
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, HashMap};

/// A subdivision: the maximal cells as sorted 0-based column index sets,
/// plus the lifting heights when one is known that induces it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subdivision {
    pub cells: Vec<Vec<usize>>,
    pub lifting: Option<Vec<BigInt>>,
}

/// Coordinates of every column in a fixed lattice basis of the saturated
/// span `span(B) ∩ Z^m`, as an `r × n` full-row-rank matrix.
fn span_coordinates(b: &IntMatrix) -> IntMatrix {
    b.span_coordinates().1
}

/// The regular subdivision induced by lifting column `i` to height `c_i`:
/// the maximal cells are the active index sets of the minimal faces of the
/// polyhedron `{x : b_i · x ≤ c_i}`. Requires that polyhedron to be
/// nonempty, which is exactly the condition for the lifted support function
/// to be finite on the cone of the columns.
pub fn regular_subdivision(b: &IntMatrix, c: &[BigInt]) -> Result<Subdivision> {
    assert_eq!(c.len(), b.ncols(), "one height per column");
    if !is_feasible(b, c) {
        return Err(Error::BadInput(
            "the heights give an empty polyhedron, so they do not induce a subdivision".into(),
        ));
    }
    let mut cells: Vec<Vec<usize>> = minimal_faces(b, c).into_iter().map(|f| f.active).collect();
    cells.sort();
    cells.dedup();
    Ok(Subdivision { cells, lifting: Some(c.to_vec()) })
}

/// Refine a subdivision to a triangulation that uses all vectors by pulling
/// at every column in index order: pulling at a column inside a cell's cone
/// replaces that cell by the joins of the column with the cell's facets not
/// containing it. Requires the cells to span pointed cones (configurations
/// whose cone has lineality are triangulated by `all_triangulations`
/// instead). When the result is regular, integer heights inducing it are
/// attached.
pub fn refine_to_triangulation(
    b: &IntMatrix,
    s: &Subdivision,
    limits: &Limits,
) -> Result<Subdivision> {
    let n = b.ncols();
    let coords = span_coordinates(b);
    let r = coords.nrows();
    let mut cells: Vec<Vec<usize>> = s.cells.clone();
    for cell in &cells {
        assert!(!cell.is_empty() && cell.iter().all(|&j| j < n), "cell indices in range");
    }
    for a in 0..n {
        let target = coords.col(a);
        let mut next: Vec<Vec<usize>> = Vec::new();
        for cell in &cells {
            let gens: Vec<Vec<BigInt>> = cell.iter().map(|&j| coords.col(j)).collect();
            let cone = Cone::from_generators(&gens, r);
            if !cone.lineality.is_empty() {
                return Err(Error::NotPointed(
                    "pulling refinement needs pointed cells; use the triangulation \
                     enumeration for cones with lineality"
                        .into(),
                ));
            }
            if !cone.contains_int(&target) {
                next.push(cell.clone());
                continue;
            }
            let mut replaced = false;
            for f in &cone.facets {
                let fa: BigInt = f.iter().zip(&target).map(|(x, y)| x * y).sum();
                if fa.is_zero() {
                    continue;
                }
                let mut joined: Vec<usize> = cell
                    .iter()
                    .copied()
                    .filter(|&j| {
                        let col = coords.col(j);
                        f.iter().zip(&col).map(|(x, y)| x * y).sum::<BigInt>().is_zero()
                    })
                    .collect();
                if !joined.contains(&a) {
                    joined.push(a);
                }
                joined.sort_unstable();
                next.push(joined);
                replaced = true;
            }
            assert!(replaced, "a pointed cone has a facet missing any of its members");
        }
        next.sort();
        next.dedup();
        cells = next;
    }
    for cell in &cells {
        assert_eq!(cell.len(), r, "pulling at every column leaves simplicial cells");
        let sel = coords.select_cols(cell);
        assert_eq!(sel.rank(), r, "triangulation cells are independent");
    }
    let lifting = is_regular(b, &cells, limits)?;
    Ok(Subdivision { cells, lifting })
}

struct Enumerator {
    coords: IntMatrix,
    ncols: usize,
    rank: usize,
    candidates: Vec<Vec<usize>>,
    cand_cones: Vec<Cone>,
    wall_boundary: BTreeMap<Vec<usize>, bool>,
    wall_cands: BTreeMap<Vec<usize>, Vec<usize>>,
    proper_cache: HashMap<(usize, usize), bool>,
    results: Vec<Vec<Vec<usize>>>,
}

impl Enumerator {
    /// Sign of the determinant of the wall columns (sorted order) extended
    /// by column `j`: the side of `j` relative to the wall's hyperplane.
    fn side(&self, wall: &[usize], j: usize) -> i8 {
        let mut sel: Vec<usize> = wall.to_vec();
        sel.push(j);
        let d = self.coords.select_cols(&sel).determinant();
        if d.is_zero() {
            0
        } else if d.is_positive() {
            1
        } else {
            -1
        }
    }

    fn wall_is_boundary(&mut self, wall: &[usize]) -> bool {
        if let Some(&b) = self.wall_boundary.get(wall) {
            return b;
        }
        let mut pos = false;
        let mut neg = false;
        for j in 0..self.ncols {
            match self.side(wall, j) {
                1 => pos = true,
                -1 => neg = true,
                _ => {}
            }
        }
        let b = !(pos && neg);
        self.wall_boundary.insert(wall.to_vec(), b);
        b
    }

    fn proper(&mut self, a: usize, b: usize) -> bool {
        let key = (a.min(b), a.max(b));
        if let Some(&p) = self.proper_cache.get(&key) {
            return p;
        }
        let inter = self.cand_cones[a].intersect(&self.cand_cones[b]);
        let common: Vec<usize> = self.candidates[a]
            .iter()
            .copied()
            .filter(|j| self.candidates[b].contains(j))
            .collect();
        let gens: Vec<Vec<BigInt>> = common.iter().map(|&j| self.coords.col(j)).collect();
        let face = Cone::from_generators(&gens, self.rank);
        let p = inter.same_cone(&face);
        self.proper_cache.insert(key, p);
        p
    }

    fn walls_of(&self, cand: usize) -> Vec<Vec<usize>> {
        let cell = &self.candidates[cand];
        (0..cell.len())
            .map(|skip| {
                cell.iter()
                    .enumerate()
                    .filter(|&(p, _)| p != skip)
                    .map(|(_, &j)| j)
                    .collect()
            })
            .collect()
    }

    fn extend(&mut self, chosen: &mut Vec<usize>) {
        // Tally walls of the chosen cells with the side each cell lies on.
        let mut tally: BTreeMap<Vec<usize>, Vec<(usize, i8)>> = BTreeMap::new();
        for &ci in chosen.iter() {
            let cell = self.candidates[ci].clone();
            for wall in self.walls_of(ci) {
                let apex = *cell.iter().find(|j| !wall.contains(j)).unwrap();
                let s = self.side(&wall, apex);
                debug_assert!(s != 0);
                tally.entry(wall).or_default().push((ci, s));
            }
        }
        let mut open: Option<(Vec<usize>, i8)> = None;
        for (wall, entries) in &tally {
            if entries.len() == 1 && !self.wall_is_boundary(wall) {
                open = Some((wall.clone(), entries[0].1));
                break;
            }
        }
        let Some((wall, side)) = open else {
            let mut cells: Vec<Vec<usize>> =
                chosen.iter().map(|&ci| self.candidates[ci].clone()).collect();
            cells.sort();
            self.results.push(cells);
            return;
        };
        let mates = self.wall_cands.get(&wall).cloned().unwrap_or_default();
        for tau in mates {
            if chosen.contains(&tau) {
                continue;
            }
            let apex = *self.candidates[tau].iter().find(|j| !wall.contains(j)).unwrap();
            if self.side(&wall, apex) != -side {
                continue;
            }
            if !chosen.clone().iter().all(|&ci| self.proper(ci, tau)) {
                continue;
            }
            chosen.push(tau);
            self.extend(chosen);
            chosen.pop();
        }
    }
}

/// All triangulations of the configuration, enumerated exhaustively by
/// backtracking over candidate maximal cells (independent subsets of size
/// `rank`, ordered lexicographically) with pairwise proper-intersection
/// pruning; a partial complex is complete when every non-boundary wall is
/// shared by two cells. With `uses_all` set, only triangulations in which
/// every column spans a ray of the fan are produced; candidate cells are
/// then restricted to those whose cone contains no other column.
///
/// Columns that are positive multiples of each other are rejected, since
/// index-set cells cannot distinguish them.
pub fn all_triangulations(
    b: &IntMatrix,
    uses_all: bool,
    limits: &Limits,
) -> Result<Vec<Vec<Vec<usize>>>> {
    validate_configuration(b, limits)?;
    let n = b.ncols();
    if n > 12 {
        return Err(Error::TooLarge(
            "triangulation enumeration is exponential and limited to 12 vectors".into(),
        ));
    }
    let cols = b.columns();
    for i in 0..n {
        for j in i + 1..n {
            if primitive_vector(&cols[i]) == primitive_vector(&cols[j]) {
                return Err(Error::BadInput(
                    "triangulation enumeration requires no column to be a positive \
                     multiple of another"
                        .into(),
                ));
            }
        }
    }
    let coords = span_coordinates(b);
    let r = coords.nrows();

    let mut candidates: Vec<Vec<usize>> = Vec::new();
    for sel in (0..n).combinations(r) {
        let sub = coords.select_cols(&sel);
        if sub.determinant().is_zero() {
            continue;
        }
        if uses_all {
            let gens: Vec<Vec<Q>> = sel
                .iter()
                .map(|&j| coords.col(j).iter().map(|x| Q::from(x.clone())).collect())
                .collect();
            let a: Vec<Vec<Q>> = (0..r).map(|i| (0..r).map(|k| gens[k][i].clone()).collect()).collect();
            let mut closed = true;
            for j in 0..n {
                if sel.contains(&j) {
                    continue;
                }
                let rhs: Vec<Q> = coords.col(j).iter().map(|x| Q::from(x.clone())).collect();
                if let Some(lambda) = solve_square(&a, &rhs) {
                    if lambda.iter().all(|l| !l.is_negative()) {
                        closed = false;
                        break;
                    }
                }
            }
            if !closed {
                continue;
            }
        }
        candidates.push(sel);
    }

    let cand_cones: Vec<Cone> = candidates
        .iter()
        .map(|sel| {
            let gens: Vec<Vec<BigInt>> = sel.iter().map(|&j| coords.col(j)).collect();
            Cone::from_generators(&gens, r)
        })
        .collect();

    let mut wall_cands: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (ci, sel) in candidates.iter().enumerate() {
        for skip in 0..sel.len() {
            let wall: Vec<usize> = sel
                .iter()
                .enumerate()
                .filter(|&(p, _)| p != skip)
                .map(|(_, &j)| j)
                .collect();
            wall_cands.entry(wall).or_default().push(ci);
        }
    }

    // A probe point interior to the cone and off every hyperplane spanned by
    // r−1 columns: geometric sums of the columns become generic for some base.
    let mut probe: Option<Vec<BigInt>> = None;
    't: for t in 2i64..3000 {
        let tb = BigInt::from(t);
        let mut x = vec![BigInt::zero(); r];
        let mut w = BigInt::one();
        for j in 0..n {
            let col = coords.col(j);
            for i in 0..r {
                x[i] += &w * &col[i];
            }
            w *= &tb;
        }
        for wsel in (0..n).combinations(r - 1) {
            let wall_cols: Vec<Vec<BigInt>> = wsel.iter().map(|&j| coords.col(j)).collect();
            if r >= 2 && IntMatrix::from_cols(&wall_cols).rank() != r - 1 {
                continue;
            }
            let mut mat_cols = wall_cols;
            mat_cols.push(x.clone());
            if IntMatrix::from_cols(&mat_cols).determinant().is_zero() {
                continue 't;
            }
        }
        probe = Some(x);
        break;
    }
    let probe = probe.expect("a generic probe base exists below the search bound");

    let mut en = Enumerator {
        coords,
        ncols: n,
        rank: r,
        candidates,
        cand_cones,
        wall_boundary: BTreeMap::new(),
        wall_cands,
        proper_cache: HashMap::new(),
        results: Vec::new(),
    };

    // Each triangulation contains exactly one cell whose cone contains the
    // generic probe, so rooting the search there enumerates without repeats.
    for ci in 0..en.candidates.len() {
        let a: Vec<Vec<Q>> = (0..r)
            .map(|i| {
                en.candidates[ci]
                    .iter()
                    .map(|&j| Q::from(en.coords.get(i, j).clone()))
                    .collect()
            })
            .collect();
        let rhs: Vec<Q> = probe.iter().map(|x| Q::from(x.clone())).collect();
        let Some(lambda) = solve_square(&a, &rhs) else { continue };
        if !lambda.iter().all(|l| l.is_positive()) {
            continue;
        }
        let mut chosen = vec![ci];
        en.extend(&mut chosen);
    }

    let mut results = en.results;
    results.sort();
    let before = results.len();
    results.dedup();
    debug_assert_eq!(before, results.len(), "rooted search repeats no triangulation");
    if uses_all {
        debug_assert!(results
            .iter()
            .all(|t| (0..n).all(|j| t.iter().any(|cell| cell.contains(&j)))));
    }
    Ok(results)
}

/// Whether every maximal cell of the triangulation is a lattice basis of
/// the saturated span lattice.
pub fn is_unimodular(b: &IntMatrix, cells: &[Vec<usize>]) -> bool {
    let coords = span_coordinates(b);
    let r = coords.nrows();
    cells.iter().all(|cell| {
        assert_eq!(cell.len(), r, "triangulation cells have rank-many members");
        coords.select_cols(cell).determinant().abs().is_one()
    })
}

/// Whether the triangulation is regular: induced by some integer lifting
/// heights. Returns the heights when it is; they are verified by
/// recomputing the subdivision they induce. The decision is the exact
/// rational feasibility of the strict system that places, for each cell,
/// the supporting functional strictly below every column not in the cell.
pub fn is_regular(
    b: &IntMatrix,
    cells: &[Vec<usize>],
    _limits: &Limits,
) -> Result<Option<Vec<BigInt>>> {
    let n = b.ncols();
    let coords = span_coordinates(b);
    let r = coords.nrows();
    let mut rows: Vec<LinCon> = Vec::new();
    for cell in cells {
        assert_eq!(cell.len(), r, "regularity is decided for triangulations");
        let a: Vec<Vec<Q>> = (0..r)
            .map(|i| cell.iter().map(|&j| Q::from(coords.get(i, j).clone())).collect())
            .collect();
        for j in 0..n {
            if cell.contains(&j) {
                continue;
            }
            let rhs: Vec<Q> = coords.col(j).iter().map(|x| Q::from(x.clone())).collect();
            let lambda = solve_square(&a, &rhs).expect("cell columns form a basis of the span");
            let mut coeffs = vec![Q::from(BigInt::zero()); n];
            for (pos, &i) in cell.iter().enumerate() {
                coeffs[i] += lambda[pos].clone();
            }
            coeffs[j] -= Q::from(BigInt::one());
            rows.push(LinCon { coeffs, rel: Rel::Lt, rhs: Q::from(BigInt::zero()) });
        }
    }
    let Some(c) = strict_feasible(&rows, n) else {
        return Ok(None);
    };
    let heights = clear_denominators(&c);
    let recomputed = regular_subdivision(b, &heights)?;
    let mut sorted: Vec<Vec<usize>> = cells.to_vec();
    sorted.sort();
    assert_eq!(
        recomputed.cells, sorted,
        "verified heights must induce exactly the given triangulation"
    );
    Ok(Some(heights))
}
