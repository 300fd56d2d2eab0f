//! Cartan/root-system data for the simple types A–G: exact Cartan matrices
//! in Bourbaki numbering, the normalized invariant form (long roots of
//! squared length 2), positive roots, Weyl dimension, Dynkin index, and
//! weight multiplicities by Freudenthal's recursion.
//!
//! Weights are stored as integer coordinate vectors in the fundamental-weight
//! basis, so that `<x, alpha_j_check> = x[j]` exactly. Root-basis coordinates
//! come from the inverse Cartan matrix and are rational.

use std::collections::HashMap;

use num::{BigInt, One, Signed, Zero};
use thiserror::Error;

use crate::intlat::{self, IntMat, Rat};

pub type Int = BigInt;

/// Integral weight in fundamental-weight coordinates.
pub type Weight = Vec<i64>;

/// Rational vector in fundamental-weight coordinates.
pub type QVec = Vec<Rat>;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, serde::Serialize, serde::Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(&self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }
}

#[derive(Debug, Error)]
pub enum RootSysError {
    #[error("invalid simple type {family:?}{rank}")]
    InvalidType { family: Family, rank: usize },
    #[error("dimension mismatch: expected rank {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("weight is not dominant: coordinate {index} is {value}")]
    NotDominant { index: usize, value: i64 },
    #[error("weight system exceeds bound of {bound} weights")]
    WeightBoundExceeded { bound: usize },
}

/// Which lattice plays the role of the W-module: the root lattice (used for
/// the correspondence form) or the full weight lattice (used for the
/// evaluation-map quotient).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LatticeKind {
    Root,
    Weight,
}

/// Exact Cartan data of one simple type.
#[derive(Clone, Debug)]
pub struct RootDatum {
    pub family: Family,
    pub rank: usize,
    /// cartan[i][j] = <alpha_i, alpha_j_check>
    pub cartan: Vec<Vec<i64>>,
    pub cartan_inv: Vec<Vec<Rat>>,
    /// Half squared lengths (alpha_i, alpha_i)/2 in the normalization where
    /// long roots have squared length 2. Equal to 1 on long roots.
    pub half_len2: Vec<Rat>,
    /// Gram matrix <w_i, w_j> of the fundamental weights.
    pub gram: Vec<Vec<Rat>>,
    /// Simple roots in fundamental-weight coordinates (= Cartan rows).
    pub simple_roots: Vec<Weight>,
    pub fundamental_weights: Vec<Weight>,
    pub positive_roots: Vec<Weight>,
    /// Half-sum of positive roots = (1, ..., 1).
    pub rho: Weight,
    pub weyl_order: Int,
    pub lie_dim: usize,
}

fn cartan_matrix(family: Family, rank: usize) -> Option<Vec<Vec<i64>>> {
    let n = rank;
    if n == 0 {
        return None;
    }
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let bond = |c: &mut Vec<Vec<i64>>, i: usize, j: usize, cij: i64, cji: i64| {
        c[i][j] = cij;
        c[j][i] = cji;
    };
    match family {
        Family::A => {
            for i in 0..n.saturating_sub(1) {
                bond(&mut c, i, i + 1, -1, -1);
            }
        }
        Family::B => {
            // alpha_n short
            if n < 2 {
                return None;
            }
            for i in 0..n - 2 {
                bond(&mut c, i, i + 1, -1, -1);
            }
            bond(&mut c, n - 2, n - 1, -2, -1);
        }
        Family::C => {
            // alpha_n long
            if n < 3 {
                return None;
            }
            for i in 0..n - 2 {
                bond(&mut c, i, i + 1, -1, -1);
            }
            bond(&mut c, n - 2, n - 1, -1, -2);
        }
        Family::D => {
            if n < 4 {
                return None;
            }
            for i in 0..n - 2 {
                bond(&mut c, i, i + 1, -1, -1);
            }
            c[n - 2][n - 1] = 0;
            c[n - 1][n - 2] = 0;
            bond(&mut c, n - 3, n - 1, -1, -1);
        }
        Family::E => {
            if !(6..=8).contains(&n) {
                return None;
            }
            // Bourbaki: chain 1-3-4-5-6(-7)(-8), branch 2-4.
            let chain = [0usize, 2, 3, 4, 5, 6, 7];
            for w in chain[..n - 1].windows(2) {
                bond(&mut c, w[0], w[1], -1, -1);
            }
            bond(&mut c, 1, 3, -1, -1);
        }
        Family::F => {
            if n != 4 {
                return None;
            }
            bond(&mut c, 0, 1, -1, -1);
            bond(&mut c, 1, 2, -2, -1); // alpha_3, alpha_4 short
            bond(&mut c, 2, 3, -1, -1);
        }
        Family::G => {
            if n != 2 {
                return None;
            }
            // alpha_1 short, alpha_2 long
            bond(&mut c, 0, 1, -1, -3);
        }
    }
    Some(c)
}

fn weyl_order(family: Family, rank: usize) -> Int {
    let n = rank as u64;
    let fact = |k: u64| -> Int {
        let mut r = Int::one();
        for i in 2..=k {
            r *= Int::from(i);
        }
        r
    };
    match family {
        Family::A => fact(n + 1),
        Family::B | Family::C => fact(n) * Int::from(2u64).pow(rank as u32),
        Family::D => fact(n) * Int::from(2u64).pow(rank as u32 - 1),
        Family::E => match rank {
            6 => Int::from(51_840u64),
            7 => Int::from(2_903_040u64),
            8 => Int::from(696_729_600u64),
            _ => unreachable!(),
        },
        Family::F => Int::from(1152u64),
        Family::G => Int::from(12u64),
    }
}

fn num_positive_roots(family: Family, rank: usize) -> usize {
    let n = rank;
    match family {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::E => match rank {
            6 => 36,
            7 => 63,
            8 => 120,
            _ => unreachable!(),
        },
        Family::F => 24,
        Family::G => 6,
    }
}

/// Build the full root datum for a valid simple type.
pub fn build_root_datum(family: Family, rank: usize) -> Result<RootDatum, RootSysError> {
    let cartan =
        cartan_matrix(family, rank).ok_or(RootSysError::InvalidType { family, rank })?;
    let n = rank;

    // Symmetrizer: half_len2[i]/half_len2[j] = c[j][i]/c[i][j] on bonds,
    // normalized so long roots get 1.
    let mut half = vec![Rat::zero(); n];
    half[0] = Rat::one();
    let mut todo = vec![0usize];
    while let Some(i) = todo.pop() {
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && half[j].is_zero() {
                half[j] =
                    half[i].clone() * Rat::new(Int::from(cartan[j][i]), Int::from(cartan[i][j]));
                todo.push(j);
            }
        }
    }
    let max = half.iter().cloned().fold(Rat::zero(), |a, b| if b > a { b } else { a });
    for h in half.iter_mut() {
        *h /= max.clone();
    }

    let cmat = IntMat::from_i64_rows(&cartan);
    let cinv = inverse_rational(&cmat);

    // <w_i, w_j> = (C^{-1})_{ji} * half_len2[i]
    let gram: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| cinv[j][i].clone() * half[i].clone()).collect())
        .collect();
    for i in 0..n {
        for j in 0..n {
            assert_eq!(gram[i][j], gram[j][i], "invariant form must be symmetric");
        }
    }

    let simple_roots: Vec<Weight> = cartan.clone();
    let fundamental_weights: Vec<Weight> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();

    // Positive roots: closure of the simple roots under simple reflections,
    // keeping those with nonnegative root-basis coordinates.
    let mut seen: HashMap<Weight, ()> = HashMap::new();
    let mut queue: Vec<Weight> = simple_roots.clone();
    for r in &queue {
        seen.insert(r.clone(), ());
    }
    while let Some(r) = queue.pop() {
        for j in 0..n {
            let s = reflect_raw(&cartan, &r, j);
            if !seen.contains_key(&s) {
                seen.insert(s.clone(), ());
                queue.push(s);
            }
        }
    }
    let mut positive_roots: Vec<Weight> = seen
        .keys()
        .filter(|r| {
            let coords = root_coords_raw(&cinv, r);
            coords.iter().all(|c| !c.is_negative())
        })
        .cloned()
        .collect();
    positive_roots.sort();
    let expected = num_positive_roots(family, rank);
    assert_eq!(positive_roots.len(), expected, "positive root count");
    assert_eq!(seen.len(), 2 * expected, "root count");

    let rd = RootDatum {
        family,
        rank,
        cartan,
        cartan_inv: cinv,
        half_len2: half,
        gram,
        simple_roots,
        fundamental_weights,
        positive_roots,
        rho: vec![1; n],
        weyl_order: weyl_order(family, rank),
        lie_dim: n + 2 * expected,
    };
    // Long roots must have squared length 2 under the normalized form.
    for (i, h) in rd.half_len2.iter().enumerate() {
        if h.is_one() {
            let a = rd.to_qvec(&rd.simple_roots[i]);
            assert_eq!(rd.inner(&a, &a), Rat::from_integer(Int::from(2)));
        }
    }
    Ok(rd)
}

fn inverse_rational(a: &IntMat) -> Vec<Vec<Rat>> {
    let n = a.rows();
    let mut out = vec![vec![Rat::zero(); n]; n];
    for j in 0..n {
        let mut e = vec![Rat::zero(); n];
        e[j] = Rat::one();
        let x = intlat::solve_rational(a, &e).expect("Cartan matrix is invertible over Q");
        for (i, row) in out.iter_mut().enumerate() {
            row[j] = x[i].clone();
        }
    }
    out
}

fn reflect_raw(cartan: &[Vec<i64>], x: &Weight, j: usize) -> Weight {
    let xj = x[j];
    x.iter()
        .enumerate()
        .map(|(k, &xk)| xk - xj * cartan[j][k])
        .collect()
}

fn root_coords_raw(cinv: &[Vec<Rat>], x: &Weight) -> Vec<Rat> {
    let n = cinv.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| cinv[j][i].clone() * Rat::from_integer(Int::from(x[j])))
                .sum()
        })
        .collect()
}

impl RootDatum {
    /// Right action of the simple reflection s_j on an integral weight.
    pub fn reflect(&self, x: &Weight, j: usize) -> Weight {
        reflect_raw(&self.cartan, x, j)
    }

    /// Right action of a word of simple reflections (applied left to right).
    pub fn act_word(&self, x: &Weight, word: &[usize]) -> Weight {
        let mut y = x.clone();
        for &j in word {
            y = self.reflect(&y, j);
        }
        y
    }

    pub fn reflect_q(&self, x: &QVec, j: usize) -> QVec {
        let xj = x[j].clone();
        x.iter()
            .enumerate()
            .map(|(k, xk)| {
                xk.clone() - xj.clone() * Rat::from_integer(Int::from(self.cartan[j][k]))
            })
            .collect()
    }

    /// rank x rank integer matrix of a word in the reflection representation;
    /// row vectors act on the right, so `x · M` is the image of `x`.
    pub fn word_matrix(&self, word: &[usize]) -> IntMat {
        let n = self.rank;
        let mut m = IntMat::identity(n);
        for &j in word {
            // M_j = I - E_jj * C
            let mj = IntMat::from_fn(n, n, |a, b| {
                let mut v = Int::from(i64::from(a == b));
                if a == j {
                    v -= Int::from(self.cartan[j][b]);
                }
                v
            });
            m = m.mul(&mj);
        }
        m
    }

    pub fn to_qvec(&self, x: &Weight) -> QVec {
        x.iter().map(|&v| Rat::from_integer(Int::from(v))).collect()
    }

    /// Normalized W-invariant positive definite form; <w_i, alpha_j> vanishes
    /// off the diagonal and long roots have squared length 2.
    pub fn inner(&self, x: &QVec, y: &QVec) -> Rat {
        assert_eq!(x.len(), self.rank, "dimension mismatch");
        assert_eq!(y.len(), self.rank, "dimension mismatch");
        let mut s = Rat::zero();
        for i in 0..self.rank {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.rank {
                if y[j].is_zero() {
                    continue;
                }
                s += x[i].clone() * y[j].clone() * self.gram[i][j].clone();
            }
        }
        s
    }

    pub fn inner_ww(&self, x: &Weight, y: &Weight) -> Rat {
        self.inner(&self.to_qvec(x), &self.to_qvec(y))
    }

    /// Root-basis coordinates of a weight (rows of C give the simple roots).
    pub fn root_coords(&self, x: &Weight) -> Vec<Rat> {
        root_coords_raw(&self.cartan_inv, x)
    }

    pub fn is_dominant(&self, x: &Weight) -> bool {
        x.iter().all(|&v| v >= 0)
    }

    fn require_dominant(&self, x: &Weight) -> Result<(), RootSysError> {
        if x.len() != self.rank {
            return Err(RootSysError::DimensionMismatch { expected: self.rank, got: x.len() });
        }
        match x.iter().enumerate().find(|(_, &v)| v < 0) {
            Some((i, &v)) => Err(RootSysError::NotDominant { index: i, value: v }),
            None => Ok(()),
        }
    }

    /// Highest weight of the adjoint representation (the highest root).
    pub fn highest_root(&self) -> Weight {
        let mut best: Option<(&Weight, Rat)> = None;
        for r in &self.positive_roots {
            if self.is_dominant(r) {
                let len = self.inner_ww(r, r);
                if best.as_ref().map(|(_, l)| len > *l).unwrap_or(true) {
                    best = Some((r, len));
                }
            }
        }
        best.expect("every root system has a highest root").0.clone()
    }
}

/// Minimal negative definite W-invariant symmetric form with integral
/// pairings against the chosen lattice: `pair(x, y) = -scale * <x, y>`.
#[derive(Clone, Debug)]
pub struct IntegralForm {
    pub scale: Rat,
    pub lattice: LatticeKind,
}

impl IntegralForm {
    pub fn pair(&self, rd: &RootDatum, x: &Weight, y: &Weight) -> Rat {
        -self.scale.clone() * rd.inner_ww(x, y)
    }
}

/// Compute the minimal scale making all pairings of `lam` against the lattice
/// integral. W-invariance extends integrality from a basis to the whole
/// lattice since both lattices are W-stable.
pub fn integral_form(
    rd: &RootDatum,
    lam: &Weight,
    lattice: LatticeKind,
) -> Result<IntegralForm, RootSysError> {
    rd.require_dominant(lam)?;
    let basis: Vec<Weight> = match lattice {
        LatticeKind::Root => rd.simple_roots.clone(),
        LatticeKind::Weight => rd.fundamental_weights.clone(),
    };
    let pairings: Vec<Rat> = basis
        .iter()
        .map(|b| rd.inner_ww(lam, b))
        .filter(|p| !p.is_zero())
        .collect();
    // Minimal positive c with c*p integral for all p: lcm(denoms)/gcd(numers).
    let mut num_gcd = Int::zero();
    let mut den_lcm = Int::one();
    for p in &pairings {
        num_gcd = num::integer::gcd(num_gcd, p.numer().abs());
        den_lcm = num::integer::lcm(den_lcm, p.denom().clone());
    }
    let scale = if num_gcd.is_zero() { Rat::one() } else { Rat::new(den_lcm, num_gcd) };
    Ok(IntegralForm { scale, lattice })
}

/// Weyl dimension formula: prod_{a>0} <lam+rho, a> / <rho, a>.
pub fn weyl_dim(rd: &RootDatum, lam: &Weight) -> Result<Int, RootSysError> {
    rd.require_dominant(lam)?;
    let lam_rho: Weight = lam.iter().zip(&rd.rho).map(|(a, b)| a + b).collect();
    let mut acc = Rat::one();
    for a in &rd.positive_roots {
        acc *= rd.inner_ww(&lam_rho, a) / rd.inner_ww(&rd.rho, a);
    }
    assert!(acc.is_integer(), "Weyl dimension must be an integer");
    Ok(acc.to_integer())
}

/// Dynkin index dim(V) * <lam, lam + 2 rho> / dim(g) in the normalization
/// with long roots of squared length 2. Integral in all the cases used here,
/// but returned exactly as a rational.
pub fn dynkin_index(rd: &RootDatum, lam: &Weight) -> Result<Rat, RootSysError> {
    rd.require_dominant(lam)?;
    let dim = weyl_dim(rd, lam)?;
    let lam_2rho: Weight = lam.iter().zip(&rd.rho).map(|(a, b)| a + 2 * b).collect();
    let c2 = rd.inner_ww(lam, &lam_2rho);
    Ok(Rat::from_integer(dim) * c2 / Rat::from_integer(Int::from(rd.lie_dim as u64)))
}

/// One W-orbit inside a weight system.
#[derive(Clone, Debug)]
pub struct WeightOrbit {
    /// Dominant representative.
    pub rep: Weight,
    pub size: usize,
    pub multiplicity: Int,
}

#[derive(Clone, Debug)]
pub struct WeightSystem {
    /// Orbits ordered with the highest weight first, then by increasing
    /// height of lam - mu.
    pub orbits: Vec<WeightOrbit>,
    pub total_dim: Int,
}

impl WeightSystem {
    pub fn is_minuscule(&self) -> bool {
        self.orbits.len() == 1 && self.orbits[0].multiplicity.is_one()
    }

    /// Single nonzero orbit plus the zero weight.
    pub fn is_quasi_minuscule(&self) -> bool {
        self.orbits.len() == 2
            && self.orbits[0].multiplicity.is_one()
            && self.orbits[1].rep.iter().all(|&c| c == 0)
    }
}

/// All weights of the irreducible representation with highest weight `lam`,
/// grouped into W-orbits with multiplicities from Freudenthal's recursion.
pub fn weight_system(
    rd: &RootDatum,
    lam: &Weight,
    bound: usize,
) -> Result<WeightSystem, RootSysError> {
    rd.require_dominant(lam)?;

    // Enumerate the weight set by walking root strings downward from lam.
    let mut weights: HashMap<Weight, ()> = HashMap::new();
    let mut queue = vec![lam.clone()];
    weights.insert(lam.clone(), ());
    while let Some(mu) = queue.pop() {
        for j in 0..rd.rank {
            let m = mu[j];
            if m > 0 {
                let mut cur = mu.clone();
                for _ in 0..m {
                    cur = cur
                        .iter()
                        .zip(&rd.simple_roots[j])
                        .map(|(a, b)| a - b)
                        .collect();
                    if !weights.contains_key(&cur) {
                        weights.insert(cur.clone(), ());
                        queue.push(cur.clone());
                        if weights.len() > bound {
                            return Err(RootSysError::WeightBoundExceeded { bound });
                        }
                    }
                }
            }
        }
    }

    // Dominant representatives with orbit sizes.
    let mut orbit_sizes: HashMap<Weight, usize> = HashMap::new();
    for w in weights.keys() {
        let rep = dominant_rep(rd, w);
        *orbit_sizes.entry(rep).or_insert(0) += 1;
    }

    // Freudenthal, processed by increasing height of lam - mu.
    let mut dominants: Vec<Weight> = orbit_sizes.keys().cloned().collect();
    let height = |mu: &Weight| -> Rat {
        let diff: Weight = lam.iter().zip(mu).map(|(a, b)| a - b).collect();
        rd.root_coords(&diff).into_iter().sum()
    };
    dominants.sort_by(|a, b| height(a).cmp(&height(b)).then(a.cmp(b)));

    let lam_rho: Weight = lam.iter().zip(&rd.rho).map(|(a, b)| a + b).collect();
    let norm_lam_rho = rd.inner_ww(&lam_rho, &lam_rho);
    let mut mult: HashMap<Weight, Int> = HashMap::new();
    for mu in &dominants {
        if mu == lam {
            mult.insert(mu.clone(), Int::one());
            continue;
        }
        let mut sum = Rat::zero();
        for alpha in &rd.positive_roots {
            let mut k = 1i64;
            loop {
                let shifted: Weight =
                    mu.iter().zip(alpha).map(|(a, b)| a + k * b).collect();
                if !weights.contains_key(&shifted) {
                    break;
                }
                let m = mult
                    .get(&dominant_rep(rd, &shifted))
                    .expect("higher weights processed first")
                    .clone();
                sum += Rat::from_integer(m) * rd.inner_ww(&shifted, alpha);
                k += 1;
            }
        }
        let mu_rho: Weight = mu.iter().zip(&rd.rho).map(|(a, b)| a + b).collect();
        let denom = norm_lam_rho.clone() - rd.inner_ww(&mu_rho, &mu_rho);
        assert!(!denom.is_zero());
        let m = sum * Rat::from_integer(Int::from(2)) / denom;
        assert!(m.is_integer() && m.numer().is_positive(), "Freudenthal multiplicity");
        mult.insert(mu.clone(), m.to_integer());
    }

    let orbits: Vec<WeightOrbit> = dominants
        .iter()
        .map(|rep| WeightOrbit {
            rep: rep.clone(),
            size: orbit_sizes[rep],
            multiplicity: mult[rep].clone(),
        })
        .collect();
    let total: Int = orbits
        .iter()
        .map(|o| Int::from(o.size as u64) * o.multiplicity.clone())
        .sum();
    let expected = weyl_dim(rd, lam)?;
    assert_eq!(total, expected, "weight multiplicities must sum to dim V");
    Ok(WeightSystem { orbits, total_dim: total })
}

/// The dominant W-orbit representative of a weight.
pub fn dominant_rep(rd: &RootDatum, x: &Weight) -> Weight {
    let mut y = x.clone();
    loop {
        match y.iter().position(|&v| v < 0) {
            Some(j) => y = rd.reflect(&y, j),
            None => return y,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(Int::from(n), Int::from(d))
    }

    #[test]
    fn a2_basic_data() {
        let rd = build_root_datum(Family::A, 2).unwrap();
        assert_eq!(rd.positive_roots.len(), 3);
        assert_eq!(rd.weyl_order, Int::from(6));
        assert_eq!(rd.lie_dim, 8);
    }

    #[test]
    fn e8_basic_data() {
        let rd = build_root_datum(Family::E, 8).unwrap();
        assert_eq!(rd.positive_roots.len(), 120);
        assert_eq!(rd.weyl_order, Int::from(696_729_600u64));
        assert_eq!(rd.lie_dim, 248);
    }

    #[test]
    fn g2_basic_data() {
        let rd = build_root_datum(Family::G, 2).unwrap();
        assert_eq!(rd.positive_roots.len(), 6);
        assert_eq!(rd.lie_dim, 14);
    }

    #[test]
    fn invalid_types_rejected() {
        assert!(build_root_datum(Family::E, 9).is_err());
        assert!(build_root_datum(Family::D, 3).is_err());
        assert!(build_root_datum(Family::C, 2).is_err());
        assert!(build_root_datum(Family::F, 5).is_err());
    }

    #[test]
    fn inner_product_values() {
        let a2 = build_root_datum(Family::A, 2).unwrap();
        let w1 = vec![1, 0];
        assert_eq!(a2.inner_ww(&w1, &w1), rat(2, 3));

        let a1 = build_root_datum(Family::A, 1).unwrap();
        assert_eq!(a1.inner_ww(&vec![1], &a1.simple_roots[0]), rat(1, 1));

        let e8 = build_root_datum(Family::E, 8).unwrap();
        let w8 = e8.fundamental_weights[7].clone();
        assert_eq!(e8.inner_ww(&w8, &w8), rat(2, 1));
    }

    #[test]
    fn duality_with_coroots() {
        // <w_i, alpha_j> = delta_ij * (alpha_j, alpha_j)/2
        let rd = build_root_datum(Family::G, 2).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let got = rd.inner_ww(&rd.fundamental_weights[i], &rd.simple_roots[j]);
                let want = if i == j { rd.half_len2[j].clone() } else { Rat::zero() };
                assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn integral_form_scales() {
        let e8 = build_root_datum(Family::E, 8).unwrap();
        let f = integral_form(&e8, &e8.fundamental_weights[7], LatticeKind::Root).unwrap();
        assert_eq!(f.scale, Rat::one());
        let w8 = e8.fundamental_weights[7].clone();
        assert_eq!(f.pair(&e8, &w8, &w8), rat(-2, 1));

        let g2 = build_root_datum(Family::G, 2).unwrap();
        let f = integral_form(&g2, &g2.fundamental_weights[0], LatticeKind::Root).unwrap();
        assert_eq!(f.scale, rat(3, 1));
        let w1 = g2.fundamental_weights[0].clone();
        assert_eq!(f.pair(&g2, &w1, &w1), rat(-2, 1));
    }

    #[test]
    fn integral_form_a_family() {
        // (lam, lam) = -i(n+1-i)/(n+1) for A_n, w_i
        for n in 1..=8usize {
            let rd = build_root_datum(Family::A, n).unwrap();
            for i in 0..n {
                let f =
                    integral_form(&rd, &rd.fundamental_weights[i], LatticeKind::Root).unwrap();
                let w = rd.fundamental_weights[i].clone();
                let i1 = (i + 1) as i64;
                let want = rat(-i1 * (n as i64 + 1 - i1), n as i64 + 1);
                assert_eq!(f.pair(&rd, &w, &w), want, "A_{} w_{}", n, i + 1);
            }
        }
    }

    #[test]
    fn weyl_dim_values() {
        let a2 = build_root_datum(Family::A, 2).unwrap();
        assert_eq!(weyl_dim(&a2, &vec![1, 0]).unwrap(), Int::from(3));
        assert_eq!(weyl_dim(&a2, &vec![0, 0]).unwrap(), Int::one());

        let e8 = build_root_datum(Family::E, 8).unwrap();
        assert_eq!(weyl_dim(&e8, &e8.fundamental_weights[7]).unwrap(), Int::from(248));

        let d5 = build_root_datum(Family::D, 5).unwrap();
        assert_eq!(weyl_dim(&d5, &d5.fundamental_weights[4]).unwrap(), Int::from(16));
    }

    #[test]
    fn weyl_dim_diagram_symmetry() {
        let rd = build_root_datum(Family::A, 5).unwrap();
        for i in 0..5 {
            let a = weyl_dim(&rd, &rd.fundamental_weights[i]).unwrap();
            let b = weyl_dim(&rd, &rd.fundamental_weights[4 - i]).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn dynkin_index_values() {
        let e8 = build_root_datum(Family::E, 8).unwrap();
        assert_eq!(dynkin_index(&e8, &e8.fundamental_weights[7]).unwrap(), rat(60, 1));

        let g2 = build_root_datum(Family::G, 2).unwrap();
        assert_eq!(dynkin_index(&g2, &g2.fundamental_weights[0]).unwrap(), rat(2, 1));

        let a4 = build_root_datum(Family::A, 4).unwrap();
        assert_eq!(dynkin_index(&a4, &a4.fundamental_weights[1]).unwrap(), rat(3, 1));
    }

    #[test]
    fn dynkin_index_adjoint_is_twice_dual_coxeter() {
        let a1 = build_root_datum(Family::A, 1).unwrap();
        assert_eq!(dynkin_index(&a1, &a1.highest_root()).unwrap(), rat(4, 1));
        let e8 = build_root_datum(Family::E, 8).unwrap();
        assert_eq!(dynkin_index(&e8, &e8.highest_root()).unwrap(), rat(60, 1));
    }

    #[test]
    fn weight_system_e8_adjoint() {
        let e8 = build_root_datum(Family::E, 8).unwrap();
        let ws = weight_system(&e8, &e8.fundamental_weights[7], 100_000).unwrap();
        assert_eq!(ws.total_dim, Int::from(248));
        assert_eq!(ws.orbits.len(), 2);
        assert_eq!(ws.orbits[0].size, 240);
        assert_eq!(ws.orbits[0].multiplicity, Int::one());
        assert_eq!(ws.orbits[1].size, 1);
        assert!(ws.orbits[1].rep.iter().all(|&c| c == 0));
        assert_eq!(ws.orbits[1].multiplicity, Int::from(8));
        assert!(ws.is_quasi_minuscule());
    }

    #[test]
    fn weight_system_a2_minuscule() {
        let a2 = build_root_datum(Family::A, 2).unwrap();
        let ws = weight_system(&a2, &vec![1, 0], 1000).unwrap();
        assert!(ws.is_minuscule());
        assert_eq!(ws.orbits[0].size, 3);
    }

    #[test]
    fn weight_system_f4() {
        let f4 = build_root_datum(Family::F, 4).unwrap();
        let ws = weight_system(&f4, &f4.fundamental_weights[3], 1000).unwrap();
        assert_eq!(ws.total_dim, Int::from(26));
        assert_eq!(ws.orbits.len(), 2);
        assert_eq!(ws.orbits[0].size, 24);
        assert_eq!(ws.orbits[1].multiplicity, Int::from(2));
        assert!(ws.is_quasi_minuscule());
    }

    #[test]
    fn weight_bound_enforced() {
        let a4 = build_root_datum(Family::A, 4).unwrap();
        let err = weight_system(&a4, &vec![2, 2, 2, 2], 10).unwrap_err();
        assert!(matches!(err, RootSysError::WeightBoundExceeded { bound: 10 }));
    }

    #[test]
    fn inner_is_reflection_invariant() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for (fam, rank) in [(Family::A, 3), (Family::B, 3), (Family::G, 2), (Family::F, 4)] {
            let rd = build_root_datum(fam, rank).unwrap();
            for _ in 0..20 {
                let x: QVec = (0..rank)
                    .map(|_| rat(rng.gen_range(-9i64..9), rng.gen_range(1i64..5)))
                    .collect();
                let y: QVec = (0..rank)
                    .map(|_| rat(rng.gen_range(-9i64..9), rng.gen_range(1i64..5)))
                    .collect();
                let want = rd.inner(&x, &y);
                for j in 0..rank {
                    let sx = rd.reflect_q(&x, j);
                    let sy = rd.reflect_q(&y, j);
                    assert_eq!(rd.inner(&sx, &sy), want);
                }
            }
        }
    }
}
