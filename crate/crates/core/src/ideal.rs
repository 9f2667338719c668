//! Lattice/binomial ideal algebra: lattice ideals of configurations,
//! Buchberger reduced Gröbner bases under weight orders with lexicographic
//! tie-break, weight-initial ideals (monomial or mixed), Gröbner cones and
//! flippable basis elements, and monomial-ideal operations (minimal primes,
//! graded Hilbert-function checks against the dual grading).
//!
//! Everything is exponent-vector arithmetic: binomials are differences of
//! two monomials with coefficients ±1, so no general polynomial arithmetic
//! is ever required.

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linear::{clear_denominators, rational_feasible, solve_affine, LinCon, Q, Rel};
use crate::matrix::{primitive_vector, IntMatrix};
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

/// Exponent vector of a monomial.
pub type Expo = Vec<i64>;

fn expo_total(v: &[i64]) -> i64 {
    v.iter().sum()
}

fn expo_divides(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn expo_disjoint(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

fn expo_max(a: &[i64], b: &[i64]) -> Expo {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Render an exponent vector as a monomial, e.g. `x1^2*x2`; `1` when zero.
pub fn monomial_string(v: &[i64]) -> String {
    let parts: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, e)| **e > 0)
        .map(|(i, e)| if *e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Difference of two monomials `x^plus − x^minus` with coefficients ±1.
/// Constructors keep the supports disjoint; intermediate Buchberger states
/// may share support transiently.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    pub plus: Expo,
    pub minus: Expo,
}

impl Binomial {
    /// Binomial `x^{u⁺} − x^{u⁻}` from a lattice vector; supports disjoint.
    pub fn from_lattice_vector(u: &[BigInt]) -> Binomial {
        let plus = u
            .iter()
            .map(|x| if x.is_positive() { i64::try_from(x).expect("small exponent") } else { 0 })
            .collect();
        let minus = u
            .iter()
            .map(|x| if x.is_negative() { i64::try_from(&-x).expect("small exponent") } else { 0 })
            .collect();
        Binomial { plus, minus }
    }

    /// The lattice vector `plus − minus` as big integers.
    pub fn lattice_vector(&self) -> Vec<BigInt> {
        self.plus.iter().zip(&self.minus).map(|(p, m)| BigInt::from(p - m)).collect()
    }

    /// Swap sides so that `plus` is the lexicographically larger term
    /// (x₁ > x₂ > …) — the order-indifferent storage convention.
    pub fn lex_normalized(&self) -> Binomial {
        if self.plus >= self.minus {
            self.clone()
        } else {
            Binomial { plus: self.minus.clone(), minus: self.plus.clone() }
        }
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", monomial_string(&self.plus), monomial_string(&self.minus))
    }
}

/// A total order on monomials: a cascade of integer weight rows compared
/// in turn, refined by lexicographic comparison with x₁ largest. With
/// nonnegative rows this is a term order (1 is minimal).
#[derive(Debug, Clone)]
pub struct TermOrder {
    cascades: Vec<Vec<BigInt>>,
}

impl TermOrder {
    pub fn new(cascades: Vec<Vec<BigInt>>) -> TermOrder {
        TermOrder { cascades }
    }

    pub fn cmp_expo(&self, a: &[i64], b: &[i64]) -> Ordering {
        for w in &self.cascades {
            let wa: BigInt = w.iter().zip(a).map(|(wi, ai)| wi * ai).sum();
            let wb: BigInt = w.iter().zip(b).map(|(wi, bi)| wi * bi).sum();
            match wa.cmp(&wb) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        a.cmp(b)
    }
}

/// A weight order in the sense used for initial ideals: a target vector
/// `w` in the cone of the configuration together with nonnegative variable
/// weights `omega` satisfying `B·omega = w` exactly, refined by the fixed
/// lexicographic tie-break.
#[derive(Debug, Clone)]
pub struct WeightOrder {
    pub w: Vec<Q>,
    pub omega: Vec<Q>,
}

impl WeightOrder {
    /// Order from explicit variable weights; `w = B·omega`.
    pub fn from_omega(b: &IntMatrix, omega: &[i64]) -> WeightOrder {
        assert_eq!(omega.len(), b.ncols());
        assert!(omega.iter().all(|x| *x >= 0), "variable weights must be nonnegative");
        let w = (0..b.nrows())
            .map(|i| {
                Q::from((0..b.ncols()).map(|j| b.get(i, j) * omega[j]).sum::<BigInt>())
            })
            .collect();
        WeightOrder { w, omega: omega.iter().map(|x| Q::from(BigInt::from(*x))).collect() }
    }

    /// Order from a target vector `w ∈ cone(B)`: the variable weights are
    /// the first (in lexicographic subset order) nonnegative solution of
    /// `B·omega = w` supported on independent columns. Errors with
    /// `NotInCone` when no such solution exists.
    pub fn from_w(b: &IntMatrix, w: &[Q]) -> Result<WeightOrder> {
        assert_eq!(w.len(), b.nrows());
        let (m, n) = (b.nrows(), b.ncols());
        let r = b.rank();
        let rows: Vec<Vec<Q>> = (0..m)
            .map(|i| (0..n).map(|j| Q::from(b.get(i, j).clone())).collect())
            .collect();
        for sel in (0..n).combinations(r) {
            if b.select_cols(&sel).rank() < r {
                continue;
            }
            let a: Vec<Vec<Q>> = rows.iter().map(|row| sel.iter().map(|&j| row[j].clone()).collect()).collect();
            let Some(sol) = solve_affine(&a, w, r) else { continue };
            debug_assert!(sol.basis.is_empty(), "independent columns give a unique solution");
            if sol.particular.iter().all(|l| !l.is_negative()) {
                let mut omega = vec![Q::zero(); n];
                for (k, &j) in sel.iter().enumerate() {
                    omega[j] = sol.particular[k].clone();
                }
                return Ok(WeightOrder { w: w.to_vec(), omega });
            }
        }
        Err(Error::NotInCone(
            "the weight target is not in the cone of the configuration".into(),
        ))
    }

    /// Convenience: integer target vector.
    pub fn from_integer_w(b: &IntMatrix, w: &[i64]) -> Result<WeightOrder> {
        let wq: Vec<Q> = w.iter().map(|x| Q::from(BigInt::from(*x))).collect();
        WeightOrder::from_w(b, &wq)
    }

    /// The full term order: omega (cleared to integers) then lex.
    pub fn to_order(&self) -> TermOrder {
        TermOrder::new(vec![clear_denominators(&self.omega)])
    }

    /// Weight of a monomial under omega.
    pub fn weight(&self, v: &[i64]) -> Q {
        self.omega.iter().zip(v).map(|(o, e)| o * Q::from(BigInt::from(*e))).sum()
    }
}

/// The lattice ideal of a configuration: binomials `x^{u⁺} − x^{u⁻}` for
/// `u` in the row lattice, presented by a saturated generating set.
#[derive(Debug, Clone)]
pub struct LatticeIdeal {
    pub config: IntMatrix,
    pub generators: Vec<Binomial>,
    pub saturation_certified: bool,
}

/// A reduced Gröbner basis; `plus` of each element is its initial term.
/// `flippable` is filled in by [`groebner_cone`].
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub order: WeightOrder,
    pub elements: Vec<Binomial>,
    pub reduced: bool,
    pub flippable: Vec<bool>,
}

impl GroebnerBasis {
    /// The canonicalized element set, for order-insensitive comparison.
    pub fn element_set(&self) -> BTreeSet<Binomial> {
        self.elements.iter().cloned().collect()
    }
}

/// A monomial ideal presented by its minimal generators (a divisibility
/// antichain, sorted).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    gens: Vec<Expo>,
}

impl MonomialIdeal {
    /// Build from any generating set; reduces to the minimal antichain.
    pub fn new(gens: Vec<Expo>) -> MonomialIdeal {
        let mut sorted: Vec<Expo> = gens;
        sorted.sort_by_key(|v| (expo_total(v), v.clone()));
        sorted.dedup();
        let mut minimal: Vec<Expo> = Vec::new();
        for g in sorted {
            if !minimal.iter().any(|h| expo_divides(h, &g)) {
                minimal.push(g);
            }
        }
        MonomialIdeal { gens: minimal }
    }

    pub fn generators(&self) -> &[Expo] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Monomial membership: some generator divides the exponent.
    pub fn contains(&self, v: &[i64]) -> bool {
        self.gens.iter().any(|g| expo_divides(g, v))
    }

    /// Minimal primes, as variable index sets: the inclusion-minimal
    /// transversals of the generator supports, sorted. The whole ring
    /// (containing 1) has none; the zero ideal has the empty transversal.
    pub fn minimal_primes(&self) -> Vec<Vec<usize>> {
        let supports: Vec<Vec<usize>> = self
            .gens
            .iter()
            .map(|g| g.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i).collect())
            .collect();
        if supports.iter().any(|s: &Vec<usize>| s.is_empty()) {
            return Vec::new();
        }
        let mut covers: Vec<BTreeSet<usize>> = vec![BTreeSet::new()];
        for sup in &supports {
            let mut next: Vec<BTreeSet<usize>> = Vec::new();
            for c in &covers {
                if sup.iter().any(|v| c.contains(v)) {
                    next.push(c.clone());
                    continue;
                }
                for &v in sup {
                    let mut c2 = c.clone();
                    c2.insert(v);
                    next.push(c2);
                }
            }
            next.sort_by_key(|c| (c.len(), c.iter().cloned().collect::<Vec<_>>()));
            let mut pruned: Vec<BTreeSet<usize>> = Vec::new();
            for c in next {
                if !pruned.iter().any(|p| p.is_subset(&c)) {
                    pruned.push(c);
                }
            }
            covers = pruned;
        }
        let mut out: Vec<Vec<usize>> = covers.into_iter().map(|c| c.into_iter().collect()).collect();
        out.sort();
        out
    }
}

/// Initial structure of a lattice ideal under a weight vector: the weight-
/// initial forms of the reduced Gröbner basis. Purely monomial exactly
/// when the weight is generic for the ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InitialIdeal {
    pub monomials: Vec<Expo>,
    pub binomials: Vec<Binomial>,
}

impl InitialIdeal {
    pub fn is_monomial(&self) -> bool {
        self.binomials.is_empty()
    }

    /// The monomial ideal generated, when there are no binomial forms.
    pub fn monomial_ideal(&self) -> Option<MonomialIdeal> {
        if self.is_monomial() {
            Some(MonomialIdeal::new(self.monomials.clone()))
        } else {
            None
        }
    }
}

/// Normalize a binomial under the order: initial term first; `None` when
/// the two terms coincide (the zero binomial).
fn orient(b: Binomial, ord: &TermOrder) -> Option<Binomial> {
    match ord.cmp_expo(&b.plus, &b.minus) {
        Ordering::Greater => Some(b),
        Ordering::Less => Some(Binomial { plus: b.minus, minus: b.plus }),
        Ordering::Equal => None,
    }
}

/// Fully reduce a monomial modulo the initial terms of a basis. Each step
/// strictly decreases the monomial in the order, so this terminates.
fn normal_form_expo(v: &[i64], basis: &[Binomial], _ord: &TermOrder) -> Expo {
    let mut v = v.to_vec();
    'outer: loop {
        for g in basis {
            if expo_divides(&g.plus, &v) {
                for i in 0..v.len() {
                    v[i] = v[i] - g.plus[i] + g.minus[i];
                }
                debug_assert!(v.iter().all(|e| *e >= 0));
                continue 'outer;
            }
        }
        return v;
    }
}

/// Fully reduce a binomial modulo a basis: top-reduce the leading term to
/// irreducibility (re-orienting as needed), then tail-reduce. `None` when
/// it reduces to zero.
fn reduce_binomial(b: Binomial, basis: &[Binomial], ord: &TermOrder) -> Option<Binomial> {
    let mut cur = orient(b, ord)?;
    'top: loop {
        for g in basis {
            if expo_divides(&g.plus, &cur.plus) {
                let mut p = cur.plus.clone();
                for i in 0..p.len() {
                    p[i] = p[i] - g.plus[i] + g.minus[i];
                }
                cur = orient(Binomial { plus: p, minus: cur.minus }, ord)?;
                continue 'top;
            }
        }
        break;
    }
    let tail = normal_form_expo(&cur.minus, basis, ord);
    orient(Binomial { plus: cur.plus, minus: tail }, ord)
}

/// Buchberger completion with the coprime-initial-terms criterion. The cap
/// guards against non-termination bugs; it is far above anything the desk-
/// scale inputs need.
fn buchberger(gens: &[Binomial], ord: &TermOrder, limits: &Limits) -> Result<Vec<Binomial>> {
    let mut basis: Vec<Binomial> = Vec::new();
    for g in gens {
        if let Some(b) = orient(g.clone(), ord) {
            if !basis.contains(&b) {
                basis.push(b);
            }
        }
    }
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            queue.push_back((i, j));
        }
    }
    let cap = 400_000usize.max(limits.max_cells * 100);
    let mut steps = 0usize;
    while let Some((i, j)) = queue.pop_front() {
        steps += 1;
        if steps > cap {
            return Err(Error::TooLarge(
                "Buchberger completion exceeded its iteration guard".into(),
            ));
        }
        let (f, g) = (&basis[i], &basis[j]);
        if expo_disjoint(&f.plus, &g.plus) {
            continue;
        }
        let l = expo_max(&f.plus, &g.plus);
        let a: Expo = l.iter().zip(&f.plus).zip(&f.minus).map(|((l, p), m)| l - p + m).collect();
        let b: Expo = l.iter().zip(&g.plus).zip(&g.minus).map(|((l, p), m)| l - p + m).collect();
        let s = Binomial { plus: b, minus: a };
        if let Some(r) = reduce_binomial(s, &basis, ord) {
            let k = basis.len();
            for i in 0..k {
                queue.push_back((i, k));
            }
            basis.push(r);
        }
    }
    Ok(basis)
}

/// Inter-reduce a Gröbner basis to the unique reduced form: drop elements
/// whose initial term another initial term divides, then reduce every tail
/// to its normal form; sorted by graded-lex on initial terms.
fn reduce_basis(basis: Vec<Binomial>, ord: &TermOrder) -> Vec<Binomial> {
    let mut minimal: Vec<Binomial> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let dominated = basis.iter().enumerate().any(|(j, h)| {
            j != k
                && expo_divides(&h.plus, &g.plus)
                && (h.plus != g.plus || j < k)
        });
        if !dominated {
            minimal.push(g.clone());
        }
    }
    let reducers = minimal.clone();
    let mut out: Vec<Binomial> = minimal
        .into_iter()
        .map(|g| {
            let others: Vec<Binomial> =
                reducers.iter().filter(|h| h.plus != g.plus).cloned().collect();
            let tail = normal_form_expo(&g.minus, &others, ord);
            orient(Binomial { plus: g.plus, minus: tail }, ord)
                .expect("reduced element cannot vanish")
        })
        .collect();
    out.sort_by(|a, b| {
        expo_total(&a.plus)
            .cmp(&expo_total(&b.plus))
            .then_with(|| a.plus.cmp(&b.plus))
            .then_with(|| a.minus.cmp(&b.minus))
    });
    out
}

/// The lattice ideal of a configuration: generators from a row basis,
/// saturated with respect to all variables by the auxiliary-variable
/// elimination (adjoin `t·x₁⋯x_n − 1`, compute a Gröbner basis under a
/// t-eliminating block order, keep the t-free part).
pub fn lattice_ideal(b: &IntMatrix, limits: &Limits) -> Result<LatticeIdeal> {
    let n = b.ncols();
    let row_basis = b.row_basis();
    let mut ext_gens: Vec<Binomial> = Vec::new();
    for i in 0..row_basis.nrows() {
        let row = row_basis.row(i);
        let bin = Binomial::from_lattice_vector(&row);
        let mut plus = vec![0i64; n + 1];
        let mut minus = vec![0i64; n + 1];
        plus[1..].copy_from_slice(&bin.plus);
        minus[1..].copy_from_slice(&bin.minus);
        ext_gens.push(Binomial { plus, minus });
    }
    let mut inv_plus = vec![1i64; n + 1];
    inv_plus[0] = 1;
    ext_gens.push(Binomial { plus: inv_plus, minus: vec![0; n + 1] });
    // Block order: t-degree first, then total degree, then lex (t is the
    // first variable, so lex also prefers eliminating t).
    let mut t_first = vec![BigInt::zero(); n + 1];
    t_first[0] = BigInt::from(1);
    let ones = vec![BigInt::from(1); n + 1];
    let ord_t = TermOrder::new(vec![t_first, ones]);
    let gb_ext = reduce_basis(buchberger(&ext_gens, &ord_t, limits)?, &ord_t);
    let mut gens: Vec<Binomial> = Vec::new();
    for g in gb_ext {
        if g.plus[0] == 0 && g.minus[0] == 0 {
            gens.push(Binomial { plus: g.plus[1..].to_vec(), minus: g.minus[1..].to_vec() });
        }
    }
    // Canonical presentation: the reduced basis under the plain graded-lex
    // order, stored with the lex-larger term first (order-indifferent
    // storage convention).
    let ord = TermOrder::new(vec![vec![BigInt::from(1); n]]);
    let mut gens: Vec<Binomial> = reduce_basis(buchberger(&gens, &ord, limits)?, &ord)
        .into_iter()
        .map(|g| g.lex_normalized())
        .collect();
    gens.sort_by_key(|g| (expo_total(&g.plus), g.plus.clone(), g.minus.clone()));
    if cfg!(debug_assertions) {
        let a = b.gale_dual();
        for g in &gens {
            let diff = g.lattice_vector();
            for i in 0..a.nrows() {
                let dot: BigInt = (0..n).map(|j| a.get(i, j) * &diff[j]).sum();
                debug_assert!(dot.is_zero(), "generator outside the row space");
            }
        }
    }
    Ok(LatticeIdeal { config: b.clone(), generators: gens, saturation_certified: true })
}

/// The reduced Gröbner basis of a lattice ideal under a weight order.
pub fn buchberger_reduced(
    ideal: &LatticeIdeal,
    order: &WeightOrder,
    limits: &Limits,
) -> Result<GroebnerBasis> {
    let ord = order.to_order();
    let elements = reduce_basis(buchberger(&ideal.generators, &ord, limits)?, &ord);
    let n = elements.len();
    Ok(GroebnerBasis { order: order.clone(), elements, reduced: true, flippable: vec![false; n] })
}

/// Weight-initial forms of a reduced basis: the initial term alone where
/// the weight strictly separates the two terms, the whole binomial (in
/// storage normalization) where the weight ties.
pub fn initial_forms(gb: &GroebnerBasis) -> InitialIdeal {
    let mut monomials: Vec<Expo> = Vec::new();
    let mut binomials: Vec<Binomial> = Vec::new();
    for g in &gb.elements {
        let wp = gb.order.weight(&g.plus);
        let wm = gb.order.weight(&g.minus);
        debug_assert!(wp >= wm, "initial term cannot have smaller weight");
        if wp > wm {
            monomials.push(g.plus.clone());
        } else {
            binomials.push(g.lex_normalized());
        }
    }
    monomials.sort_by_key(|v| (expo_total(v), v.clone()));
    binomials.sort();
    InitialIdeal { monomials, binomials }
}

/// The initial ideal of the lattice ideal at a weight vector in cone(B).
pub fn initial_ideal(ideal: &LatticeIdeal, w: &[Q], limits: &Limits) -> Result<InitialIdeal> {
    let order = WeightOrder::from_w(&ideal.config, w)?;
    let gb = buchberger_reduced(ideal, &order, limits)?;
    Ok(initial_forms(&gb))
}

/// The Gröbner cone of a reduced basis with monomial initial ideal, in the
/// weight-target space: inequalities `y_k · w ≥ 0` where `Bᵀ y_k` is the
/// exponent difference of the k-th element. An element is flippable when
/// its hyperplane supports a facet of the cone that meets the interior of
/// the cone of the configuration (a genuine wall of the chamber complex).
#[derive(Debug, Clone)]
pub struct GroebnerCone {
    /// Primitive inequality normals, one per basis element.
    pub inequalities: Vec<Vec<BigInt>>,
    /// The distinct normals of facets meeting the interior of cone(B).
    pub facets: Vec<Vec<BigInt>>,
    /// Per-element facet flags.
    pub flippable: Vec<bool>,
}

pub fn groebner_cone(gb: &GroebnerBasis, b: &IntMatrix) -> Result<GroebnerCone> {
    let m = b.nrows();
    let forms = initial_forms(gb);
    if !forms.is_monomial() {
        return Err(Error::BadInput(
            "Gröbner cones are computed for monomial initial ideals".into(),
        ));
    }
    let bt_rows: Vec<Vec<Q>> = (0..b.ncols())
        .map(|j| (0..m).map(|i| Q::from(b.get(i, j).clone())).collect())
        .collect();
    let mut normals: Vec<Vec<BigInt>> = Vec::new();
    for g in &gb.elements {
        let rhs: Vec<Q> = g.lattice_vector().iter().map(|x| Q::from(x.clone())).collect();
        let sol = solve_affine(&bt_rows, &rhs, m)
            .expect("exponent differences of lattice binomials lie in the row space");
        debug_assert!(sol.basis.is_empty());
        normals.push(clear_denominators(&sol.particular));
    }
    for y in &normals {
        let side: Q = y.iter().zip(&gb.order.w).map(|(yi, wi)| Q::from(yi.clone()) * wi).sum();
        debug_assert!(!side.is_negative(), "the defining weight must satisfy its own cone");
    }
    // Walls are shared by parallel normals; test one representative per
    // primitive direction against all the others plus strict interiority
    // in cone(B).
    let directions: Vec<Vec<BigInt>> = normals.iter().map(|y| primitive_vector(y)).collect();
    let distinct: Vec<Vec<BigInt>> = directions.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let cone_b = crate::cone::cone_of_columns(b);
    let mut facet_dirs: Vec<Vec<BigInt>> = Vec::new();
    for d in &distinct {
        let mut cons: Vec<LinCon> = Vec::new();
        cons.push(LinCon::from_bigints(d, Rel::Eq, BigInt::zero()));
        for other in &distinct {
            if other != d {
                let neg: Vec<BigInt> = other.iter().map(|x| -x).collect();
                cons.push(LinCon::from_bigints(&neg, Rel::Le, BigInt::from(-1)));
            }
        }
        for f in &cone_b.facets {
            let neg: Vec<BigInt> = f.iter().map(|x| -x).collect();
            cons.push(LinCon::from_bigints(&neg, Rel::Le, BigInt::from(-1)));
        }
        for l in &cone_b.span_normals {
            cons.push(LinCon::from_bigints(l, Rel::Eq, BigInt::zero()));
        }
        if rational_feasible(&cons, m).is_some() {
            facet_dirs.push(d.clone());
        }
    }
    facet_dirs.sort();
    let flippable: Vec<bool> = directions.iter().map(|d| facet_dirs.contains(d)).collect();
    Ok(GroebnerCone { inequalities: directions, facets: facet_dirs, flippable })
}

/// Check the graded Hilbert condition against the dual grading of the
/// configuration, truncated at total degree `d`: group all monomials of
/// total degree ≤ d by their degree under the Gale dual of B and require
/// at most one standard monomial of M in every group, and exactly one in
/// the degree-zero group.
///
/// The check is one-sided by design. If a monomial of total degree ≤ d
/// lies in the full graded ideal, the generator witnessing that divides
/// it and so also has degree ≤ d; a degree-truncated generating set
/// therefore agrees with the full ideal on every enumerated monomial, and
/// a group with two standard monomials is a genuine violation. A group
/// with none may merely have its standard monomial above the truncation
/// degree, so empty groups are not violations — except at degree zero,
/// whose standard monomial must be 1 itself.
pub fn is_dual_graded(m: &MonomialIdeal, b: &IntMatrix, d: usize) -> bool {
    let a = b.gale_dual();
    let n = b.ncols();
    let mut buckets: BTreeMap<Vec<BigInt>, usize> = BTreeMap::new();
    let mut v = vec![0i64; n];
    enumerate_degrees(&a, m, d as i64, 0, &mut v, &mut buckets);
    let zero_key = vec![BigInt::zero(); a.nrows()];
    buckets.values().all(|&count| count <= 1) && buckets.get(&zero_key) == Some(&1)
}

fn enumerate_degrees(
    a: &IntMatrix,
    m: &MonomialIdeal,
    budget: i64,
    idx: usize,
    v: &mut Vec<i64>,
    buckets: &mut BTreeMap<Vec<BigInt>, usize>,
) {
    if idx == v.len() {
        let key: Vec<BigInt> = (0..a.nrows())
            .map(|i| (0..v.len()).map(|j| a.get(i, j) * v[j]).sum())
            .collect();
        let entry = buckets.entry(key).or_insert(0);
        if !m.contains(v) {
            *entry += 1;
        }
        return;
    }
    for e in 0..=budget {
        v[idx] = e;
        enumerate_degrees(a, m, budget - e, idx + 1, v, buckets);
    }
    v[idx] = 0;
}

/// Normal form of a monomial modulo a reduced basis (ideal membership:
/// a binomial `x^u − x^v` is in the ideal iff the two normal forms agree).
pub fn normal_form(v: &[i64], gb: &GroebnerBasis) -> Expo {
    normal_form_expo(v, &gb.elements, &gb.order.to_order())
}
