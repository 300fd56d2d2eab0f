//! Exact integer-lattice linear algebra: dense matrices over `BigInt`,
//! Smith normal form with unimodular transforms, kernels, saturation,
//! cokernel group structure, and finite subgroups of rational tori.
//!
//! Lattices are spanned by matrix *columns* unless stated otherwise.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use serde::Serialize;

pub type Int = BigInt;
pub type Rat = BigRational;

/// Dense matrix with arbitrary-precision integer entries, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![Int::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Int::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Int) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        Self::from_fn(r, c, |i, j| Int::from(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> IntMat {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] += a * b;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &IntMat) -> IntMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &IntMat) -> IntMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn neg(&self) -> IntMat {
        Self::from_fn(self.rows, self.cols, |i, j| -self.get(i, j))
    }

    pub fn scale(&self, c: &Int) -> IntMat {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    /// Column j as a vector.
    pub fn col(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Matrix whose columns are the given subset of this matrix's columns.
    pub fn select_cols(&self, idx: &[usize]) -> IntMat {
        Self::from_fn(self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    /// Horizontal concatenation [self | other].
    pub fn hcat(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            let v = -std::mem::take(&mut self.data[idx]);
            self.data[idx] = v;
        }
    }

    fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            let idx = i * self.cols + c;
            let v = -std::mem::take(&mut self.data[idx]);
            self.data[idx] = v;
        }
    }

    /// row_i += c * row_k
    fn add_row(&mut self, i: usize, k: usize, c: &Int) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let t = self.get(k, j) * c;
            self.data[i * self.cols + j] += t;
        }
    }

    /// col_j += c * col_l
    fn add_col(&mut self, j: usize, l: usize, c: &Int) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let t = self.get(i, l) * c;
            self.data[i * self.cols + j] += t;
        }
    }
}

/// Smith normal form `u * a * v = d` with `u`, `v` unimodular and the
/// diagonal of `d` a divisibility chain. Inverses of both transforms are
/// tracked during the reduction.
#[derive(Clone, Debug)]
pub struct SnfDecomposition {
    pub d: IntMat,
    pub u: IntMat,
    pub uinv: IntMat,
    pub v: IntMat,
    pub vinv: IntMat,
    pub rank: usize,
}

impl SnfDecomposition {
    /// Nonzero diagonal entries d_1 | d_2 | ... (all positive).
    pub fn divisors(&self) -> Vec<Int> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }
}

struct SnfWork {
    w: IntMat,
    u: IntMat,
    uinv: IntMat,
    v: IntMat,
    vinv: IntMat,
}

impl SnfWork {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.w.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.uinv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.w.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.vinv.swap_rows(a, b);
    }

    /// row_i += c * row_k, with the inverse op on uinv.
    fn add_row(&mut self, i: usize, k: usize, c: &Int) {
        let mc = -c.clone();
        self.w.add_row(i, k, c);
        self.u.add_row(i, k, c);
        self.uinv.add_col(k, i, &mc);
    }

    /// col_j += c * col_l, with the inverse op on vinv.
    fn add_col(&mut self, j: usize, l: usize, c: &Int) {
        let mc = -c.clone();
        self.w.add_col(j, l, c);
        self.v.add_col(j, l, c);
        self.vinv.add_row(l, j, &mc);
    }

    /// Unimodular 2x2 block on rows (k, i) turning w[k][k] into
    /// gcd(w[k][k], w[i][k]) and zeroing w[i][k] in one shot.
    fn gcd_rows(&mut self, k: usize, i: usize) {
        let p = self.w.get(k, k).clone();
        let b = self.w.get(i, k).clone();
        if b.is_zero() {
            return;
        }
        if !p.is_zero() && (&b % &p).is_zero() {
            let q = -(&b / &p);
            self.add_row(i, k, &q);
            return;
        }
        let e = p.extended_gcd(&b);
        let (g, s, t) = (e.gcd, e.x, e.y);
        let bp = &b / &g; // b/g
        let pp = &p / &g; // p/g
        // [row_k; row_i] := [[s, t], [-b/g, p/g]] * [row_k; row_i]
        self.row_block(k, i, &s, &t, &-bp, &pp);
    }

    fn gcd_cols(&mut self, k: usize, j: usize) {
        let p = self.w.get(k, k).clone();
        let b = self.w.get(k, j).clone();
        if b.is_zero() {
            return;
        }
        if !p.is_zero() && (&b % &p).is_zero() {
            let q = -(&b / &p);
            self.add_col(j, k, &q);
            return;
        }
        let e = p.extended_gcd(&b);
        let (g, s, t) = (e.gcd, e.x, e.y);
        let bp = &b / &g;
        let pp = &p / &g;
        self.col_block(k, j, &s, &t, &-bp, &pp);
    }

    /// rows (k, i) := [[a, b], [c, d]] (rows k, i), with ad - bc = 1.
    fn row_block(&mut self, k: usize, i: usize, a: &Int, b: &Int, c: &Int, d: &Int) {
        for m in [&mut self.w, &mut self.u] {
            for j in 0..m.cols() {
                let x = m.get(k, j).clone();
                let y = m.get(i, j).clone();
                m.set(k, j, a * &x + b * &y);
                m.set(i, j, c * &x + d * &y);
            }
        }
        // Inverse block [[d, -b], [-c, a]] applied to columns of uinv.
        let m = &mut self.uinv;
        for r in 0..m.rows() {
            let x = m.get(r, k).clone();
            let y = m.get(r, i).clone();
            m.set(r, k, d * &x - c * &y);
            m.set(r, i, a * &y - b * &x);
        }
    }

    /// cols (k, j) := (cols k, j) * [[a, c], [b, d]]^T, i.e. col_k := a*col_k + b*col_j,
    /// col_j := c*col_k_old + d*col_j, with ad - bc = 1.
    fn col_block(&mut self, k: usize, j: usize, a: &Int, b: &Int, c: &Int, d: &Int) {
        for m in [&mut self.w, &mut self.v] {
            for r in 0..m.rows() {
                let x = m.get(r, k).clone();
                let y = m.get(r, j).clone();
                m.set(r, k, a * &x + b * &y);
                m.set(r, j, c * &x + d * &y);
            }
        }
        let m = &mut self.vinv;
        for cc in 0..m.cols() {
            let x = m.get(k, cc).clone();
            let y = m.get(j, cc).clone();
            m.set(k, cc, d * &x - c * &y);
            m.set(j, cc, a * &y - b * &x);
        }
    }
}

/// Smith normal form by minimal-pivot elimination; entries are merged into
/// the pivot with single 2x2 extended-gcd blocks to keep the transform
/// coefficients from compounding.
pub fn snf(a: &IntMat) -> SnfDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut s = SnfWork {
        w: a.clone(),
        u: IntMat::identity(m),
        uinv: IntMat::identity(m),
        v: IntMat::identity(n),
        vinv: IntMat::identity(n),
    };

    let mut k = 0;
    while k < m.min(n) {
        // Minimal nonzero |entry| in the trailing submatrix becomes the pivot.
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..m {
            for j in k..n {
                if !s.w.get(i, j).is_zero()
                    && pivot
                        .map(|(pi, pj)| s.w.get(i, j).abs() < s.w.get(pi, pj).abs())
                        .unwrap_or(true)
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        s.swap_rows(k, pi);
        s.swap_cols(k, pj);

        loop {
            for i in k + 1..m {
                s.gcd_rows(k, i);
            }
            let col_clean = (k + 1..n).all(|j| s.w.get(k, j).is_zero());
            if !col_clean {
                for j in k + 1..n {
                    s.gcd_cols(k, j);
                }
            }
            let row_dirty = (k + 1..m).any(|i| !s.w.get(i, k).is_zero());
            let col_dirty = (k + 1..n).any(|j| !s.w.get(k, j).is_zero());
            if row_dirty || col_dirty {
                continue;
            }
            // The pivot must divide the whole trailing block; pull an
            // offending column in and keep reducing (the pivot shrinks).
            let mut offender = None;
            'scan: for i in k + 1..m {
                for j in k + 1..n {
                    if !(s.w.get(i, j) % s.w.get(k, k)).is_zero() {
                        offender = Some(j);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(j) => {
                    let one = Int::one();
                    s.add_col(k, j, &one);
                }
                None => break,
            }
        }
        if s.w.get(k, k).is_negative() {
            s.w.negate_row(k);
            s.u.negate_row(k);
            s.uinv.negate_col(k);
        }
        k += 1;
    }
    let rank = k;
    SnfDecomposition { d: s.w, u: s.u, uinv: s.uinv, v: s.v, vinv: s.vinv, rank }
}

/// |det| for a square matrix, via the SNF diagonal.
pub fn abs_det(a: &IntMat) -> Int {
    assert_eq!(a.rows(), a.cols());
    let s = snf(a);
    if s.rank < a.rows() {
        return Int::zero();
    }
    s.divisors().iter().product()
}

/// Basis of the right kernel {x : a x = 0}, as columns. The kernel of an
/// integer matrix is always a saturated sublattice.
pub fn kernel_basis(a: &IntMat) -> IntMat {
    let s = snf(a);
    let idx: Vec<usize> = (s.rank..a.cols()).collect();
    s.v.select_cols(&idx)
}

/// Saturation of the column span: a basis (as columns) of span_Q(b) ∩ Z^rows.
pub fn saturate_cols(b: &IntMat) -> IntMat {
    let s = snf(b);
    let idx: Vec<usize> = (0..s.rank).collect();
    s.uinv.select_cols(&idx)
}

/// Saturation with rows spanning the sublattice, mirroring `saturate_cols`.
pub fn saturate_rows(b: &IntMat) -> IntMat {
    saturate_cols(&b.transpose()).transpose()
}

/// Solve a x = b exactly over the integers for each column of b.
/// Returns None if no integral solution exists.
pub fn solve_int(a: &IntMat, b: &IntMat) -> Option<IntMat> {
    assert_eq!(a.rows(), b.rows());
    let s = snf(a);
    let ub = s.u.mul(b);
    let mut y = IntMat::zeros(a.cols(), b.cols());
    for j in 0..b.cols() {
        for i in 0..a.rows() {
            if i < s.rank {
                let (q, r) = ub.get(i, j).div_rem(s.d.get(i, i));
                if !r.is_zero() {
                    return None;
                }
                if i < a.cols() {
                    y.set(i, j, q);
                }
            } else if !ub.get(i, j).is_zero() {
                return None;
            }
        }
    }
    Some(s.v.mul(&y))
}

/// Inverse of a unimodular integer matrix.
pub fn inverse_unimodular(a: &IntMat) -> Option<IntMat> {
    assert_eq!(a.rows(), a.cols());
    let s = snf(a);
    if s.rank < a.rows() || s.divisors().iter().any(|d| !d.is_one()) {
        return None;
    }
    // u a v = 1  =>  a^{-1} = v u
    Some(s.v.mul(&s.u))
}

/// Finite abelian group presented by its elementary divisors
/// d_1 | d_2 | ... | d_k, each > 1.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct FiniteAbelianGroup {
    divisors: Vec<Int>,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        FiniteAbelianGroup { divisors: vec![] }
    }

    /// Keeps only the divisors > 1; the input must be a divisibility chain.
    pub fn from_divisors(divs: Vec<Int>) -> Self {
        let divisors: Vec<Int> = divs.into_iter().filter(|d| !d.is_one()).collect();
        for w in divisors.windows(2) {
            assert!(
                (&w[1] % &w[0]).is_zero(),
                "elementary divisors must form a chain"
            );
        }
        FiniteAbelianGroup { divisors }
    }

    pub fn divisors(&self) -> &[Int] {
        &self.divisors
    }

    pub fn is_trivial(&self) -> bool {
        self.divisors.is_empty()
    }

    pub fn order(&self) -> Int {
        self.divisors.iter().product()
    }

    /// Smallest n with n·G = 0 (the largest divisor, or 1).
    pub fn exponent(&self) -> Int {
        self.divisors.last().cloned().unwrap_or_else(Int::one)
    }

    /// (Z/m)^k
    pub fn elementary(m: u64, k: usize) -> Self {
        if m <= 1 {
            return Self::trivial();
        }
        FiniteAbelianGroup { divisors: vec![Int::from(m); k] }
    }
}

impl fmt::Debug for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.divisors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.divisors.iter().map(|d| format!("Z/{}", d)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Structure of coker(a: Z^cols -> Z^rows) = Z^rows / colspan(a):
/// the torsion part plus the free rank.
pub fn cokernel_structure(a: &IntMat) -> (FiniteAbelianGroup, usize) {
    let s = snf(a);
    (FiniteAbelianGroup::from_divisors(s.divisors()), a.rows() - s.rank)
}

/// Group {w ∈ Q^cols : m·w ∈ Z^rows} / Z^cols for a full-column-rank map m.
/// Isomorphic to ⊕ Z/d_i over the SNF divisors of m.
pub fn kernel_group_of_map(m: &IntMat) -> FiniteAbelianGroup {
    let s = snf(m);
    assert_eq!(s.rank, m.cols(), "kernel_group_of_map needs full column rank");
    FiniteAbelianGroup::from_divisors(s.divisors())
}

/// Subgroup of (Q/Z)^dim generated by rational coset representatives.
pub fn torus_subgroup(dim: usize, gens: &[Vec<Rat>]) -> FiniteAbelianGroup {
    for g in gens {
        assert_eq!(g.len(), dim);
    }
    if gens.is_empty() {
        return FiniteAbelianGroup::trivial();
    }
    // Common denominator D; the subgroup is L''/(D Z^dim) with L'' spanned by
    // D·Z^dim and the scaled generators.
    let mut den = Int::one();
    for g in gens {
        for x in g {
            den = den.lcm(x.denom());
        }
    }
    let mut cols: Vec<Vec<Int>> = Vec::new();
    for i in 0..dim {
        let mut e = vec![Int::zero(); dim];
        e[i] = den.clone();
        cols.push(e);
    }
    for g in gens {
        cols.push(
            g.iter()
                .map(|x| {
                    let scaled = x * Rat::from_integer(den.clone());
                    assert!(scaled.is_integer());
                    scaled.to_integer()
                })
                .collect(),
        );
    }
    let m = IntMat::from_fn(dim, cols.len(), |i, j| cols[j][i].clone());
    // Basis of L'' from the SNF, then express D·Z^dim in that basis.
    let s = snf(&m);
    assert_eq!(s.rank, dim);
    let basis = IntMat::from_fn(dim, dim, |i, j| s.uinv.get(i, j) * s.d.get(j, j));
    let dz = IntMat::identity(dim).scale(&den);
    let t = solve_int(&basis, &dz).expect("D Z^dim lies in the generated lattice");
    let (group, free) = cokernel_structure(&t);
    assert_eq!(free, 0);
    group
}

/// Solve a x = b over Q (b rational), exact. Returns None if inconsistent.
pub fn solve_rational(a: &IntMat, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(a.rows(), b.len());
    let mut den = Int::one();
    for x in b {
        den = den.lcm(x.denom());
    }
    let bi: Vec<Int> = b
        .iter()
        .map(|x| {
            let s = x * Rat::from_integer(den.clone());
            s.to_integer()
        })
        .collect();
    let bm = IntMat::from_fn(a.rows(), 1, |i, _| bi[i].clone());
    // Solve over Q via SNF directly (integral solve of the scaled system may
    // not exist even when a rational solution does).
    let s = snf(a);
    let ub = s.u.mul(&bm);
    let mut y = vec![Rat::zero(); a.cols()];
    for i in 0..a.rows() {
        if i < s.rank {
            y[i] = Rat::new(ub.get(i, 0).clone(), s.d.get(i, i).clone());
        } else if !ub.get(i, 0).is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); a.cols()];
    for i in 0..a.cols() {
        for j in 0..a.cols() {
            x[i] += Rat::from_integer(s.v.get(i, j).clone()) * y[j].clone();
        }
        x[i] /= Rat::from_integer(den.clone());
    }
    Some(x)
}

/// True if the column lattices of two full-column-rank matrices with the same
/// span are equal as sublattices of Z^rows. Both inputs must be saturated or
/// arbitrary; equality is mutual integral containment.
pub fn same_column_lattice(a: &IntMat, b: &IntMat) -> bool {
    if a.rows() != b.rows() {
        return false;
    }
    solve_int(a, b).is_some() && solve_int(b, a).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat(rows: &[&[i64]]) -> IntMat {
        IntMat::from_i64_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn snf_diag_2_3() {
        let a = mat(&[&[2, 0], &[0, 3]]);
        let s = snf(&a);
        assert_eq!(s.divisors(), vec![Int::from(1), Int::from(6)]);
        assert_eq!(s.u.mul(&a).mul(&s.v), s.d);
    }

    #[test]
    fn snf_zero_matrix() {
        let a = IntMat::zeros(3, 2);
        let s = snf(&a);
        assert_eq!(s.rank, 0);
        assert!(s.d.is_zero());
    }

    #[test]
    fn snf_known_4x4() {
        let a = mat(&[
            &[-6, 111, -36, 6],
            &[5, -672, 210, 74],
            &[0, -255, 81, 24],
            &[-7, 255, -81, -10],
        ]);
        let s = snf(&a);
        assert_eq!(
            s.divisors(),
            vec![Int::from(1), Int::from(3), Int::from(21)]
        );
    }

    #[test]
    fn saturate_scaled_vector() {
        // span{(2,0)} saturates to span{(1,0)}
        let b = mat(&[&[2], &[0]]);
        let s = saturate_cols(&b);
        assert_eq!(s.cols(), 1);
        assert_eq!(abs_det(&IntMat::from_fn(1, 1, |_, _| s.get(0, 0).clone())), Int::one());
        assert!(s.get(1, 0).is_zero());
    }

    #[test]
    fn saturate_index_two() {
        // span{(1,1),(1,-1)} has index 2 in Z^2; saturation is all of Z^2.
        let b = mat(&[&[1, 1], &[1, -1]]);
        let s = saturate_cols(&b);
        assert_eq!(abs_det(&s), Int::one());
    }

    #[test]
    fn cokernel_examples() {
        let (g, free) = cokernel_structure(&mat(&[&[1, 0], &[0, 4]]));
        assert_eq!(g.divisors(), &[Int::from(4)]);
        assert_eq!(free, 0);

        let empty = IntMat::zeros(3, 0);
        let (g, free) = cokernel_structure(&empty);
        assert!(g.is_trivial());
        assert_eq!(free, 3);
    }

    #[test]
    fn cokernel_order_is_abs_det() {
        let a = mat(&[&[4, 1], &[2, 3]]);
        let (g, free) = cokernel_structure(&a);
        assert_eq!(free, 0);
        assert_eq!(g.order(), abs_det(&a));
    }

    #[test]
    fn solve_and_kernel() {
        let a = mat(&[&[2, 4], &[1, 2]]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 1);
        assert!(a.mul(&k).is_zero());

        let b = mat(&[&[6], &[3]]);
        let x = solve_int(&a, &b).unwrap();
        assert_eq!(a.mul(&x), b);
    }

    #[test]
    fn torus_subgroup_examples() {
        let half = Rat::new(Int::from(1), Int::from(2));
        let g = torus_subgroup(2, &[vec![half.clone(), Rat::zero()]]);
        assert_eq!(g.divisors(), &[Int::from(2)]);

        let third = Rat::new(Int::from(1), Int::from(3));
        let g = torus_subgroup(2, &[vec![third.clone(), Rat::zero()], vec![Rat::zero(), third]]);
        assert_eq!(g.divisors(), &[Int::from(3), Int::from(3)]);

        let g = torus_subgroup(2, &[vec![Rat::zero(), Rat::zero()]]);
        assert!(g.is_trivial());
    }

    #[test]
    fn unimodular_inverse() {
        let a = mat(&[&[1, 2], &[1, 3]]);
        let inv = inverse_unimodular(&a).unwrap();
        assert_eq!(a.mul(&inv), IntMat::identity(2));
    }

    #[test]
    fn snf_roundtrip_random_batch() {
        // Seeded batch across sizes up to 40x40 with entries in [-50, 50].
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(601);
        for trial in 0..1000 {
            let rows = rng.gen_range(1..=40);
            let cols = rng.gen_range(1..=40);
            // Bias toward small matrices so the batch stays fast.
            let (rows, cols) = if trial % 10 != 0 { (rows.min(12), cols.min(12)) } else { (rows, cols) };
            let a = IntMat::from_fn(rows, cols, |_, _| Int::from(rng.gen_range(-50i64..=50)));
            let s = snf(&a);
            assert_eq!(s.u.mul(&a).mul(&s.v), s.d, "UAV = D failed");
            assert_eq!(s.u.mul(&s.uinv), IntMat::identity(rows));
            assert_eq!(s.vinv.mul(&s.v), IntMat::identity(cols));
            let divs = s.divisors();
            for w in divs.windows(2) {
                assert!((&w[1] % &w[0]).is_zero(), "divisor chain broken");
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn saturate_idempotent(entries in proptest::collection::vec(-20i64..20, 12)) {
            let b = IntMat::from_fn(4, 3, |i, j| Int::from(entries[i * 3 + j]));
            let s1 = saturate_cols(&b);
            let s2 = saturate_cols(&s1);
            prop_assert_eq!(s1.cols(), s2.cols());
            prop_assert!(same_column_lattice(&s1, &s2));
        }

        #[test]
        fn snf_roundtrip_small(entries in proptest::collection::vec(-50i64..50, 20)) {
            let a = IntMat::from_fn(4, 5, |i, j| Int::from(entries[i * 5 + j]));
            let s = snf(&a);
            prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d);
        }
    }
}

#[cfg(test)]
mod prof {
    use super::*;
    #[test]
    #[ignore]
    fn profile_single_snf() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for size in [10usize, 20, 30, 40] {
            let a = IntMat::from_fn(size, size, |_, _| Int::from(rng.gen_range(-50i64..=50)));
            let t0 = std::time::Instant::now();
            let s = snf(&a);
            let bits = |m: &IntMat| m.data.iter().map(|x| x.bits()).max().unwrap();
            eprintln!("size {}: {:?}, d {} u {} uinv {} v {} vinv {}", size, t0.elapsed(),
                bits(&s.d), bits(&s.u), bits(&s.uinv), bits(&s.v), bits(&s.vinv));
        }
    }
}
