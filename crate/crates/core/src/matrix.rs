//! Exact integer matrices and lattice algorithms.
//!
//! Everything here is arbitrary-precision (`BigInt`) and exact: Hermite and
//! Smith normal forms with their unimodular transforms, integer kernels,
//! fraction-free determinants, integer linear solving, and duals of
//! configurations. The Hermite form is row-style: `U * M = H` with `U`
//! unimodular, pivots positive, entries above each pivot reduced to
//! `0 <= e < pivot`, and zero rows last. Kernels are computed from the
//! column Hermite form, which makes the returned basis a basis of the full
//! (saturated) kernel lattice, not merely a finite-index sublattice.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Dense row-major matrix over the integers.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

/// Result of a row-style Hermite normal form computation: `u * m = h`.
#[derive(Debug, Clone)]
pub struct Hnf {
    /// The Hermite normal form.
    pub h: IntMatrix,
    /// Unimodular transform with `u * m = h`.
    pub u: IntMatrix,
    /// Column index of each pivot, one entry per nonzero row of `h`.
    pub pivots: Vec<usize>,
}

/// Result of a Smith normal form computation: `u * m * v = s` with `s`
/// diagonal and each diagonal entry dividing the next.
#[derive(Debug, Clone)]
pub struct Snf {
    /// The diagonal Smith form.
    pub s: IntMatrix,
    /// Unimodular row transform.
    pub u: IntMatrix,
    /// Unimodular column transform.
    pub v: IntMatrix,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    /// Matrix from an explicit element vector in row-major order.
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Self {
        assert_eq!(data.len(), rows * cols, "element count must be rows*cols");
        IntMatrix { rows, cols, data }
    }

    /// Zero matrix of the given shape.
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    /// Identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Matrix from machine-integer rows (convenience for fixtures and tests).
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
        }
        let data = rows.iter().flat_map(|row| row.iter().map(|&x| BigInt::from(x))).collect();
        IntMatrix { rows: r, cols: c, data }
    }

    /// Matrix from big-integer rows.
    pub fn from_bigint_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
        }
        let data = rows.into_iter().flatten().collect();
        IntMatrix { rows: r, cols: c, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<BigInt>]) -> Self {
        let c = cols.len();
        let r = if c == 0 { 0 } else { cols[0].len() };
        let mut m = IntMatrix::zero(r, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r, "ragged columns");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    /// Number of rows.
    pub fn nrows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Element accessor.
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    /// Element mutator.
    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    /// Copy of row `i`.
    pub fn row(&self, i: usize) -> Vec<BigInt> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    /// Copy of column `j`.
    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// All columns as vectors.
    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    /// Transposed copy.
    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.get(k, j);
                    let cur = out.get(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    /// Matrix-vector product `self * v` with `v` a column vector.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    /// Row-vector-matrix product `v^T * self`.
    pub fn vec_mul(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.rows);
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| &v[i] * self.get(i, j)).sum())
            .collect()
    }

    /// Submatrix keeping the selected columns, in the given order.
    pub fn select_cols(&self, sel: &[usize]) -> IntMatrix {
        let mut out = IntMatrix::zero(self.rows, sel.len());
        for (jj, &j) in sel.iter().enumerate() {
            for i in 0..self.rows {
                out.set(i, jj, self.get(i, j).clone());
            }
        }
        out
    }

    /// Submatrix keeping the selected rows, in the given order.
    pub fn select_rows(&self, sel: &[usize]) -> IntMatrix {
        let mut out = IntMatrix::zero(sel.len(), self.cols);
        for (ii, &i) in sel.iter().enumerate() {
            for j in 0..self.cols {
                out.set(ii, j, self.get(i, j).clone());
            }
        }
        out
    }

    /// True when every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.get(r, j).clone();
            self.set(r, j, v);
        }
    }

    /// `row[dst] += q * row[src]`.
    fn add_multiple_of_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(dst, j) + q * self.get(src, j);
            self.set(dst, j, v);
        }
    }

    /// Row-style Hermite normal form `u * self = h`.
    ///
    /// `h` is in row echelon form with strictly increasing pivot columns,
    /// positive pivots, entries above each pivot reduced modulo the pivot,
    /// and zero rows collected at the bottom. `u` is unimodular.
    pub fn hermite_normal_form(&self) -> Hnf {
        let mut h = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            // Euclidean elimination below row r in column c.
            loop {
                // Find the row (>= r) with the smallest nonzero |entry|.
                let mut best: Option<usize> = None;
                for i in r..self.rows {
                    if !h.get(i, c).is_zero() {
                        match best {
                            None => best = Some(i),
                            Some(b) => {
                                if h.get(i, c).abs() < h.get(b, c).abs() {
                                    best = Some(i)
                                }
                            }
                        }
                    }
                }
                let Some(b) = best else { break };
                h.swap_rows(r, b);
                u.swap_rows(r, b);
                let pivot = h.get(r, c).clone();
                let mut any = false;
                for i in (r + 1)..self.rows {
                    let e = h.get(i, c).clone();
                    if e.is_zero() {
                        continue;
                    }
                    let q = -(&e / &pivot);
                    h.add_multiple_of_row(i, r, &q);
                    u.add_multiple_of_row(i, r, &q);
                    if !h.get(i, c).is_zero() {
                        any = true;
                    }
                }
                if !any {
                    break;
                }
            }
            if h.get(r, c).is_zero() {
                continue;
            }
            if h.get(r, c).is_negative() {
                h.negate_row(r);
                u.negate_row(r);
            }
            // Reduce the entries above the pivot into [0, pivot).
            let pivot = h.get(r, c).clone();
            for i in 0..r {
                let e = h.get(i, c).clone();
                let q = -e.div_floor(&pivot);
                h.add_multiple_of_row(i, r, &q);
                u.add_multiple_of_row(i, r, &q);
            }
            pivots.push(c);
            r += 1;
        }
        Hnf { h, u, pivots }
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        self.hermite_normal_form().pivots.len()
    }

    /// Basis of the row lattice: the nonzero rows of the Hermite form.
    pub fn row_basis(&self) -> IntMatrix {
        let hnf = self.hermite_normal_form();
        let r = hnf.pivots.len();
        hnf.h.select_rows(&(0..r).collect::<Vec<_>>())
    }

    /// Basis of the integer kernel `{ x in Z^ncols : self * x = 0 }`.
    ///
    /// Returned as a matrix whose columns are the basis vectors. The basis
    /// spans the full kernel lattice (it is saturated by construction).
    pub fn kernel_basis(&self) -> IntMatrix {
        // Row-HNF the transpose: u * self^T = h. Then self * u^T = h^T, so
        // the rows of u matching zero rows of h are a kernel basis.
        let hnf = self.transpose().hermite_normal_form();
        let rank = hnf.pivots.len();
        let n = self.cols;
        let mut cols = Vec::new();
        for i in rank..n {
            cols.push(hnf.u.row(i));
        }
        IntMatrix::from_cols(&cols)
    }

    /// Gale dual of an m×n configuration of rank m: an (n−m)×n matrix
    /// whose integer kernel is the saturation of the row lattice. The dual
    /// columns record the linear dependences among the configuration's
    /// columns.
    pub fn gale_dual(&self) -> IntMatrix {
        let k = self.kernel_basis();
        if k.ncols() == 0 {
            // Trivial kernel: the dual is the empty configuration on the
            // same column set (from_cols cannot recover the width).
            return IntMatrix::zero(0, self.cols);
        }
        k.transpose()
    }

    /// Determinant of a square matrix via fraction-free Bareiss elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant requires a square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..(n - 1) {
            if a.get(k, k).is_zero() {
                // Find a pivot row below and swap.
                let mut found = None;
                for i in (k + 1)..n {
                    if !a.get(i, k).is_zero() {
                        found = Some(i);
                        break;
                    }
                }
                match found {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    let num = a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j);
                    let v = &num / &prev;
                    a.set(i, j, v);
                }
                a.set(i, k, BigInt::zero());
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1).clone()
    }

    /// Smith normal form `u * self * v = s`.
    pub fn smith_normal_form(&self) -> Snf {
        let mut s = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut v = IntMatrix::identity(self.cols);
        let t_max = self.rows.min(self.cols);
        let mut t = 0;
        while t < t_max {
            // Find the minimal nonzero entry in the remaining submatrix.
            let mut best: Option<(usize, usize)> = None;
            for i in t..self.rows {
                for j in t..self.cols {
                    if !s.get(i, j).is_zero() {
                        match best {
                            None => best = Some((i, j)),
                            Some((bi, bj)) => {
                                if s.get(i, j).abs() < s.get(bi, bj).abs() {
                                    best = Some((i, j));
                                }
                            }
                        }
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            s.swap_rows(t, bi);
            u.swap_rows(t, bi);
            swap_cols(&mut s, t, bj);
            swap_cols(&mut v, t, bj);
            // Clear row and column t.
            let mut dirty = false;
            for i in (t + 1)..self.rows {
                let e = s.get(i, t).clone();
                if e.is_zero() {
                    continue;
                }
                let q = -(&e / s.get(t, t));
                s.add_multiple_of_row(i, t, &q);
                u.add_multiple_of_row(i, t, &q);
                if !s.get(i, t).is_zero() {
                    dirty = true;
                }
            }
            for j in (t + 1)..self.cols {
                let e = s.get(t, j).clone();
                if e.is_zero() {
                    continue;
                }
                let q = -(&e / s.get(t, t));
                add_multiple_of_col(&mut s, j, t, &q);
                add_multiple_of_col(&mut v, j, t, &q);
                if !s.get(t, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue; // Smaller remainders appeared: repeat with a better pivot.
            }
            // Enforce the divisibility chain: s[t][t] must divide all the rest.
            let pivot = s.get(t, t).clone();
            let mut offender = None;
            'outer: for i in (t + 1)..self.rows {
                for j in (t + 1)..self.cols {
                    if !(s.get(i, j) % &pivot).is_zero() {
                        offender = Some(i);
                        break 'outer;
                    }
                }
            }
            if let Some(i) = offender {
                let one = BigInt::one();
                s.add_multiple_of_row(t, i, &one);
                u.add_multiple_of_row(t, i, &one);
                continue;
            }
            if s.get(t, t).is_negative() {
                s.negate_row(t);
                u.negate_row(t);
            }
            t += 1;
        }
        Snf { s, u, v }
    }

    /// The nonzero diagonal invariant factors of the Smith form.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let snf = self.smith_normal_form();
        let mut out = Vec::new();
        for i in 0..self.rows.min(self.cols) {
            let d = snf.s.get(i, i);
            if d.is_zero() {
                break;
            }
            out.push(d.clone());
        }
        out
    }

    /// True when the row lattice is saturated in `Z^ncols`, i.e. every
    /// invariant factor equals 1. For a configuration matrix whose columns
    /// are the vectors, saturation of the row lattice of the *transpose* is
    /// the statement that the columns generate all of `Z^nrows`; use
    /// [`IntMatrix::columns_generate_lattice`] for that.
    pub fn is_row_lattice_saturated(&self) -> bool {
        self.invariant_factors().iter().all(|d| d.is_one())
    }

    /// True when the columns generate the full lattice `Z^nrows` as a group.
    pub fn columns_generate_lattice(&self) -> bool {
        self.rank() == self.rows && self.is_row_lattice_saturated()
    }

    /// Solve `self * x = b` over the integers. Returns one solution or
    /// `None` when no integer solution exists.
    pub fn solve_integer(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(b.len(), self.rows);
        // Column Hermite form via the transpose: u * self^T = h, so
        // self * u^T = h^T. Solve h^T y = b (column echelon), set x = u^T y.
        let hnf = self.transpose().hermite_normal_form();
        let ht = hnf.h.transpose(); // self * u^T = ht, ht is lower-echelon by columns
        let rank = hnf.pivots.len();
        let mut residual: Vec<BigInt> = b.to_vec();
        let mut y = vec![BigInt::zero(); self.cols];
        for j in 0..rank {
            let pr = hnf.pivots[j]; // pivot row of column j in ht
            let pivot = ht.get(pr, j).clone();
            let q = &residual[pr] / &pivot;
            if (&residual[pr] - &q * &pivot) != BigInt::zero() {
                return None;
            }
            for i in 0..self.rows {
                let upd = &residual[i] - &q * ht.get(i, j);
                residual[i] = upd;
            }
            y[j] = q;
        }
        if residual.iter().any(|x| !x.is_zero()) {
            return None;
        }
        let ut = hnf.u.transpose();
        Some(ut.mul_vec(&y))
    }

    /// A dual configuration: rows form a basis of the integer kernel of
    /// `self` acting on column vectors, reduced to Hermite form for
    /// canonicity. For an `m x n` configuration matrix of full row rank this
    /// is an `(n-m) x n` matrix `A` with `A * self^T = 0` whose row lattice
    /// is the full kernel lattice.
    pub fn dual_configuration(&self) -> IntMatrix {
        let k = self.kernel_basis(); // ncols x (ncols - rank)
        let a = k.transpose();
        if a.nrows() == 0 {
            return IntMatrix::zero(0, self.ncols());
        }
        a.row_basis()
    }

    /// A lattice basis of `span(columns) ∩ Z^m` together with the integer
    /// coordinates of every column in that basis: returns `(basis, coords)`
    /// with `basis` of shape `m × r` and `coords` of shape `r × n`, so that
    /// `basis · coords = self`. For full-rank matrices the basis is the
    /// identity and `coords` is the matrix itself.
    pub fn span_coordinates(&self) -> (IntMatrix, IntMatrix) {
        let m = self.nrows();
        let r = self.rank();
        if r == m {
            let mut id = IntMatrix::zero(m, m);
            for i in 0..m {
                id.set(i, i, BigInt::one());
            }
            return (id, self.clone());
        }
        let normals = self.transpose().kernel_basis();
        let basis = normals.transpose().kernel_basis();
        let cols: Vec<Vec<BigInt>> = (0..self.ncols())
            .map(|j| {
                basis
                    .solve_integer(&self.col(j))
                    .expect("columns lie in the saturated lattice of their span")
            })
            .collect();
        let coords = IntMatrix::from_cols(&cols);
        (basis, coords)
    }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.nrows() {
        let va = m.get(i, a).clone();
        let vb = m.get(i, b).clone();
        m.set(i, a, vb);
        m.set(i, b, va);
    }
}

/// `col[dst] += q * col[src]`.
fn add_multiple_of_col(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for i in 0..m.nrows() {
        let v = m.get(i, dst) + q * m.get(i, src);
        m.set(i, dst, v);
    }
}

/// Greatest common divisor of a slice (nonnegative; 0 for the empty/zero slice).
pub fn gcd_of(values: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for v in values {
        g = g.gcd(v);
    }
    g
}

/// Divide a nonzero integer vector by the gcd of its entries, making it
/// primitive while preserving direction. Zero vectors are returned unchanged.
pub fn primitive_vector(v: &[BigInt]) -> Vec<BigInt> {
    let g = gcd_of(v);
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Absolute value of the determinant of the square matrix formed by the
/// selected columns: the index of the sublattice they span (0 if dependent).
pub fn lattice_index(m: &IntMatrix, cols: &[usize]) -> BigInt {
    let sub = m.select_cols(cols);
    assert_eq!(sub.nrows(), sub.ncols(), "lattice_index requires |cols| = nrows");
    sub.determinant().abs()
}
