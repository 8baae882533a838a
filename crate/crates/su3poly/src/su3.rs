//! The su(3) toolkit: trace-free matrices, spectra, roots and the chamber embedding.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{Float, FloatConst, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{max_abs, Scalar};

/// Relative tolerance for the sum-zero check on floating triples.
pub const SUM_TOL: f64 = 1e-9;

pub type Mat3<T> = [[Complex<T>; 3]; 3];

pub fn mat_zero<T: Scalar>() -> Mat3<T> {
    std::array::from_fn(|_| std::array::from_fn(|_| Complex::zero()))
}

pub fn mat_identity<T: Scalar>() -> Mat3<T> {
    let mut m = mat_zero();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Complex::new(T::one(), T::zero());
    }
    m
}

pub fn mat_mul<T: Scalar>(a: &Mat3<T>, b: &Mat3<T>) -> Mat3<T> {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..3).fold(Complex::zero(), |acc, k| acc + a[i][k].clone() * b[k][j].clone())
        })
    })
}

pub fn mat_adjoint<T: Scalar>(a: &Mat3<T>) -> Mat3<T> {
    std::array::from_fn(|i| std::array::from_fn(|j| a[j][i].conj()))
}

/// Trace-free Hermitian 3x3 matrix; `d3 = -d1 - d2` is implied.
#[derive(Clone, Debug, PartialEq)]
pub struct Hermitian3<T> {
    pub d1: T,
    pub d2: T,
    pub off12: Complex<T>,
    pub off13: Complex<T>,
    pub off23: Complex<T>,
}

impl<T: Scalar> Hermitian3<T> {
    pub fn zero() -> Self {
        Self {
            d1: T::zero(),
            d2: T::zero(),
            off12: Complex::zero(),
            off13: Complex::zero(),
            off23: Complex::zero(),
        }
    }

    /// Diagonal matrix; the entries must sum to zero.
    pub fn diagonal(d: [T; 3]) -> Result<Self> {
        check_sum_zero(&d)?;
        let [d1, d2, _] = d;
        Ok(Self { d1, d2, ..Self::zero() })
    }

    pub fn d3(&self) -> T {
        -(self.d1.clone() + self.d2.clone())
    }

    pub fn diag(&self) -> [T; 3] {
        [self.d1.clone(), self.d2.clone(), self.d3()]
    }

    pub fn to_matrix(&self) -> Mat3<T> {
        let re = |x: &T| Complex::new(x.clone(), T::zero());
        [
            [re(&self.d1), self.off12.clone(), self.off13.clone()],
            [self.off12.conj(), re(&self.d2), self.off23.clone()],
            [self.off13.conj(), self.off23.conj(), re(&self.d3())],
        ]
    }

    /// Reads the diagonal real parts and upper triangle; the input is assumed Hermitian and trace-free.
    pub fn from_matrix(m: &Mat3<T>) -> Self {
        Self {
            d1: m[0][0].re.clone(),
            d2: m[1][1].re.clone(),
            off12: m[0][1].clone(),
            off13: m[0][2].clone(),
            off23: m[1][2].clone(),
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        Self {
            d1: self.d1.clone() * s.clone(),
            d2: self.d2.clone() * s.clone(),
            off12: self.off12.clone() * s.clone(),
            off13: self.off13.clone() * s.clone(),
            off23: self.off23.clone() * s.clone(),
        }
    }

    /// `U M U^*`.
    pub fn conjugate_by(&self, u: &Mat3<T>) -> Self {
        Self::from_matrix(&mat_mul(&mat_mul(u, &self.to_matrix()), &mat_adjoint(u)))
    }

    pub fn is_diagonal(&self) -> bool {
        self.off12.is_zero() && self.off13.is_zero() && self.off23.is_zero()
    }

    /// Exact spectrum of a diagonal matrix, `None` otherwise.
    pub fn diagonal_spectrum(&self) -> Option<Spectrum<T>> {
        if !self.is_diagonal() {
            return None;
        }
        to_positive_chamber(self.diag()).ok().map(|(s, _)| s)
    }

    /// `tr(M^2)`.
    pub fn norm_sqr(&self) -> T {
        let two = T::one() + T::one();
        self.diag().iter().fold(T::zero(), |acc, x| acc + x.clone() * x.clone())
            + two
                * (self.off12.norm_sqr() + self.off13.norm_sqr() + self.off23.norm_sqr())
    }

    pub fn max_abs_entry(&self) -> f64 {
        let m = self.to_matrix();
        m.iter()
            .flatten()
            .map(|z| z.norm_sqr().to_f64().sqrt())
            .fold(0.0, f64::max)
    }
}

impl<T: Scalar> Add for Hermitian3<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self {
            d1: self.d1 + o.d1,
            d2: self.d2 + o.d2,
            off12: self.off12 + o.off12,
            off13: self.off13 + o.off13,
            off23: self.off23 + o.off23,
        }
    }
}

impl<T: Scalar> Sub for Hermitian3<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<T: Scalar> Neg for Hermitian3<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            d1: -self.d1,
            d2: -self.d2,
            off12: -self.off12,
            off13: -self.off13,
            off23: -self.off23,
        }
    }
}

impl<T: Scalar> Mul<T> for Hermitian3<T> {
    type Output = Self;
    fn mul(self, s: T) -> Self {
        self.scale(&s)
    }
}

/// Trace-free skew-Hermitian 3x3 matrix: diagonal `i*d1, i*d2, -i*(d1+d2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewHermitian3<T> {
    pub d1: T,
    pub d2: T,
    pub off12: Complex<T>,
    pub off13: Complex<T>,
    pub off23: Complex<T>,
}

impl<T: Scalar> SkewHermitian3<T> {
    /// `diag(0, i, -i)`.
    pub fn xi1() -> Self {
        Self::cartan(T::zero(), T::one())
    }

    /// `diag(-i, 0, i)`.
    pub fn xi2() -> Self {
        Self::cartan(-T::one(), T::zero())
    }

    pub fn cartan(d1: T, d2: T) -> Self {
        Self {
            d1,
            d2,
            off12: Complex::zero(),
            off13: Complex::zero(),
            off23: Complex::zero(),
        }
    }

    pub fn to_matrix(&self) -> Mat3<T> {
        let im = |x: T| Complex::new(T::zero(), x);
        let d3 = -(self.d1.clone() + self.d2.clone());
        [
            [im(self.d1.clone()), self.off12.clone(), self.off13.clone()],
            [-self.off12.conj(), im(self.d2.clone()), self.off23.clone()],
            [-self.off13.conj(), -self.off23.conj(), im(d3)],
        ]
    }
}

/// `Im tr(mu xi)`.
pub fn pairing<T: Scalar>(mu: &Hermitian3<T>, xi: &SkewHermitian3<T>) -> T {
    let a = mu.to_matrix();
    let b = xi.to_matrix();
    let mut tr = Complex::zero();
    for i in 0..3 {
        for j in 0..3 {
            tr = tr + a[i][j].clone() * b[j][i].clone();
        }
    }
    tr.im
}

/// Eigenvalues in descending order, summing to zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Spectrum<T> {
    pub l1: T,
    pub l2: T,
    pub l3: T,
}

impl<T: Scalar> Spectrum<T> {
    /// Checked constructor: sorted and trace-free.
    pub fn new(l1: T, l2: T, l3: T) -> Result<Self> {
        check_sum_zero(&[l1.clone(), l2.clone(), l3.clone()])?;
        if l1 < l2 || l2 < l3 {
            return Err(Error::Unsorted);
        }
        Ok(Self { l1, l2, l3 })
    }

    pub fn from_array(a: [T; 3]) -> Self {
        let [l1, l2, l3] = a;
        Self { l1, l2, l3 }
    }

    pub fn zero() -> Self {
        Self::from_array([T::zero(), T::zero(), T::zero()])
    }

    pub fn to_array(&self) -> [T; 3] {
        [self.l1.clone(), self.l2.clone(), self.l3.clone()]
    }

    pub fn dot(&self, n: &[T; 3]) -> T {
        self.l1.clone() * n[0].clone() + self.l2.clone() * n[1].clone() + self.l3.clone() * n[2].clone()
    }

    pub fn to_f64(&self) -> Spectrum<f64> {
        Spectrum { l1: self.l1.to_f64(), l2: self.l2.to_f64(), l3: self.l3.to_f64() }
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Spectrum<U> {
        Spectrum { l1: f(&self.l1), l2: f(&self.l2), l3: f(&self.l3) }
    }

    pub fn distance(&self, o: &Spectrum<T>) -> f64 {
        to_chamber(self).distance(&to_chamber(o))
    }

    pub fn on_wall12(&self) -> bool {
        self.l1 == self.l2
    }

    pub fn on_wall23(&self) -> bool {
        self.l2 == self.l3
    }
}

impl<T: Scalar> fmt::Display for Spectrum<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.l1, self.l2, self.l3)
    }
}

fn check_sum_zero<T: Scalar>(d: &[T; 3]) -> Result<()> {
    let s = d[0].clone() + d[1].clone() + d[2].clone();
    if T::EXACT {
        if s.is_zero() {
            return Ok(());
        }
    } else {
        let scale = max_abs(d).to_f64().max(f64::MIN_POSITIVE);
        if s.to_f64().abs() <= SUM_TOL * scale {
            return Ok(());
        }
    }
    Err(Error::SumNotZero(s.to_f64()))
}

/// An element of the symmetric group, acting as `sorted[i] = raw[perm[i]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn apply<T: Clone>(&self, raw: &[T]) -> Vec<T> {
        self.0.iter().map(|&p| raw[p].clone()).collect()
    }

    pub fn apply3<T: Clone>(&self, raw: &[T; 3]) -> [T; 3] {
        std::array::from_fn(|i| raw[self.0[i]].clone())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p] = i;
        }
        Self(inv)
    }

    /// Lexicographically smallest permutation sorting `raw` in descending order.
    pub fn sorting_descending<T: PartialOrd>(raw: &[T]) -> Self {
        let mut idx: Vec<usize> = (0..raw.len()).collect();
        idx.sort_by(|&a, &b| raw[b].partial_cmp(&raw[a]).unwrap_or(std::cmp::Ordering::Equal));
        Self(idx)
    }
}

/// Sorts a trace-free triple into the positive chamber.
pub fn to_positive_chamber<T: Scalar>(raw: [T; 3]) -> Result<(Spectrum<T>, Permutation)> {
    check_sum_zero(&raw)?;
    let perm = Permutation::sorting_descending(&raw);
    Ok((Spectrum::from_array(perm.apply3(&raw)), perm))
}

/// `(-l3, -l2, -l1)`, the chamber representative of `-s`.
pub fn star_involution<T: Scalar>(s: &Spectrum<T>) -> Spectrum<T> {
    Spectrum { l1: -s.l3.clone(), l2: -s.l2.clone(), l3: -s.l1.clone() }
}

/// Linear action of the star involution on a sum-zero vector or functional.
pub fn star_vector<T: Clone + Neg<Output = T>>(v: &[T; 3]) -> [T; 3] {
    [-v[2].clone(), -v[1].clone(), -v[0].clone()]
}

/// The positive roots of su(3).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Root {
    Alpha1,
    Alpha2,
    Alpha3,
}

impl Root {
    pub const ALL: [Root; 3] = [Root::Alpha1, Root::Alpha2, Root::Alpha3];

    pub fn vector(self) -> [i64; 3] {
        match self {
            Root::Alpha1 => [0, 1, -1],
            Root::Alpha2 => [-1, 0, 1],
            Root::Alpha3 => [1, -1, 0],
        }
    }

    /// Image under the star involution, which maps positive roots to positive roots.
    pub fn star(self) -> Root {
        match self {
            Root::Alpha1 => Root::Alpha3,
            Root::Alpha2 => Root::Alpha2,
            Root::Alpha3 => Root::Alpha1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Root::Alpha1 => "alpha1",
            Root::Alpha2 => "alpha2",
            Root::Alpha3 => "alpha3",
        }
    }

    pub fn as_hermitian<T: Scalar>(self) -> Hermitian3<T> {
        let v = self.vector();
        Hermitian3::diagonal(v.map(|x| T::from_i64(x).unwrap())).unwrap()
    }
}

/// A root with a sign: `sign * root`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedRoot {
    pub root: Root,
    pub sign: i8,
}

impl SignedRoot {
    pub fn plus(root: Root) -> Self {
        Self { root, sign: 1 }
    }

    pub fn minus(root: Root) -> Self {
        Self { root, sign: -1 }
    }

    pub fn vector(self) -> [i64; 3] {
        self.root.vector().map(|x| x * self.sign as i64)
    }

    pub fn from_vector(v: [i64; 3]) -> Option<Self> {
        Root::ALL.iter().find_map(|&r| {
            let rv = r.vector();
            if rv == v {
                Some(Self::plus(r))
            } else if rv.map(|x| -x) == v {
                Some(Self::minus(r))
            } else {
                None
            }
        })
    }
}

impl fmt::Display for SignedRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign < 0 { "-" } else { "+" };
        write!(f, "{}{}", s, self.root.name())
    }
}

/// Isometric coordinates of the sum-zero plane.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChamberPoint {
    pub p: f64,
    pub q: f64,
}

impl ChamberPoint {
    pub fn distance(&self, o: &ChamberPoint) -> f64 {
        (self.p - o.p).hypot(self.q - o.q)
    }
}

/// Coordinates in the orthonormal basis `(1,-1,0)/sqrt2, (1,1,-2)/sqrt6`.
pub fn to_chamber<T: Scalar>(s: &Spectrum<T>) -> ChamberPoint {
    let (l1, l2, l3) = (s.l1.to_f64(), s.l2.to_f64(), s.l3.to_f64());
    ChamberPoint {
        p: (l1 - l2) / std::f64::consts::SQRT_2,
        q: (l1 + l2 - 2.0 * l3) / 6f64.sqrt(),
    }
}

/// Inverse of [`to_chamber`].
pub fn from_chamber(c: &ChamberPoint) -> Spectrum<f64> {
    let a = c.p / std::f64::consts::SQRT_2;
    let b = c.q / 6f64.sqrt();
    Spectrum { l1: a + b, l2: -a + b, l3: -2.0 * b }
}

/// Sorted eigenvalues of a trace-free Hermitian matrix.
///
/// The most isolated eigenvalue comes from the trigonometric solution of the depressed cubic.
/// The remaining pair is read from the 2x2 compression onto the orthogonal complement of its
/// eigenvector, which keeps near-double eigenvalues accurate to rounding.
pub fn spectrum<T: Scalar + Float + FloatConst>(mu: &Hermitian3<T>) -> Spectrum<T> {
    let two = T::one() + T::one();
    let three = two + T::one();
    let six = three * two;
    let [d1, d2, d3] = mu.diag();
    let p2 = mu.norm_sqr();
    if p2 <= T::min_positive_value() {
        return Spectrum::zero();
    }
    let p = (p2 / six).sqrt();
    let (a, b, c) = (mu.off12, mu.off13, mu.off23);
    let det = d1 * d2 * d3 + two * (a * c * b.conj()).re
        - d1 * c.norm_sqr()
        - d2 * b.norm_sqr()
        - d3 * a.norm_sqr();
    let r = (det / (two * p * p * p)).max(-T::one()).min(T::one());
    let phi = r.acos() / three;
    let iso = if r >= T::zero() {
        two * p * phi.cos()
    } else {
        two * p * (phi + two * T::PI() / three).cos()
    };
    let (m, half_gap) = deflated_pair(mu, iso);
    let mut ev = [iso, m + half_gap, m - half_gap];
    ev.sort_by(|x, y| y.partial_cmp(x).unwrap());
    Spectrum::from_array(ev)
}

fn cross<T: Scalar + Float>(x: &[Complex<T>; 3], y: &[Complex<T>; 3]) -> [Complex<T>; 3] {
    [
        x[1] * y[2] - x[2] * y[1],
        x[2] * y[0] - x[0] * y[2],
        x[0] * y[1] - x[1] * y[0],
    ]
}

fn vnorm<T: Scalar + Float>(x: &[Complex<T>; 3]) -> T {
    (x[0].norm_sqr() + x[1].norm_sqr() + x[2].norm_sqr()).sqrt()
}

/// Mean and half-splitting of the two eigenvalues other than `iso`.
fn deflated_pair<T: Scalar + Float>(mu: &Hermitian3<T>, iso: T) -> (T, T) {
    let two = T::one() + T::one();
    let mut m = mu.to_matrix();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = row[i] - Complex::new(iso, T::zero());
    }
    let candidates = [cross(&m[0], &m[1]), cross(&m[0], &m[2]), cross(&m[1], &m[2])];
    let (v, nv) = candidates
        .iter()
        .map(|c| (*c, vnorm(c)))
        .fold((candidates[0], -T::one()), |best, cur| if cur.1 > best.1 { cur } else { best });
    if nv <= T::zero() {
        // M - iso is rank <= 1: the other two eigenvalues are equal.
        let m_pair = -iso / two;
        return (m_pair, T::zero());
    }
    let v = v.map(|z| z / nv);
    let k = (0..3)
        .min_by(|&i, &j| v[i].norm_sqr().partial_cmp(&v[j].norm_sqr()).unwrap())
        .unwrap();
    let mut u: [Complex<T>; 3] = std::array::from_fn(|i| -v[i] * v[k].conj());
    u[k] = u[k] + Complex::new(T::one(), T::zero());
    let nu = vnorm(&u);
    let u = u.map(|z| z / nu);
    let w = cross(&v, &u).map(|z| z.conj());
    let a = mu.to_matrix();
    let apply = |x: &[Complex<T>; 3]| -> [Complex<T>; 3] {
        std::array::from_fn(|i| (0..3).fold(Complex::zero(), |s, j| s + a[i][j] * x[j]))
    };
    let inner = |x: &[Complex<T>; 3], y: &[Complex<T>; 3]| -> Complex<T> {
        (0..3).fold(Complex::zero(), |s, i| s + x[i].conj() * y[i])
    };
    let (au, aw) = (apply(&u), apply(&w));
    let h11 = inner(&u, &au).re;
    let h22 = inner(&w, &aw).re;
    let h12 = inner(&u, &aw);
    let mean = (h11 + h22) / two;
    let half = ((h11 - h22) / two).hypot(h12.norm());
    (mean, half)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::ratio(n, d)
    }

    #[test]
    fn pairing_values() {
        let table = [(Root::Alpha1, 2, -1), (Root::Alpha2, -1, 2), (Root::Alpha3, -1, -1)];
        for (root, on1, on2) in table {
            let mu: Hermitian3<BigRational> = root.as_hermitian();
            assert_eq!(pairing(&mu, &SkewHermitian3::xi1()), q(on1, 1), "{root:?}");
            assert_eq!(pairing(&mu, &SkewHermitian3::xi2()), q(on2, 1), "{root:?}");
        }
        let zero: Hermitian3<f64> = Hermitian3::zero();
        assert_eq!(pairing(&zero, &SkewHermitian3::xi1()), 0.0);
    }

    #[test]
    fn roots_sum_to_zero() {
        let s: Vec<i64> = (0..3).map(|i| Root::ALL.iter().map(|r| r.vector()[i]).sum()).collect();
        assert_eq!(s, vec![0, 0, 0]);
    }

    #[test]
    fn spectrum_examples() {
        let m = Hermitian3::diagonal([2.0, -1.0, -1.0]).unwrap();
        let s = spectrum(&m);
        assert!((s.l1 - 2.0).abs() < 1e-14 && (s.l2 + 1.0).abs() < 1e-14 && (s.l3 + 1.0).abs() < 1e-14);
        let m = Hermitian3 { off12: Complex::new(1.0, 0.0), ..Hermitian3::zero() };
        let s = spectrum(&m);
        assert!((s.l1 - 1.0).abs() < 1e-14 && s.l2.abs() < 1e-14 && (s.l3 + 1.0).abs() < 1e-14);
        let m = Hermitian3::diagonal([2.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0]).unwrap();
        let s = spectrum(&m);
        assert!((s.l1 - 2.0 / 3.0).abs() < 1e-15 && (s.l3 + 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(spectrum(&Hermitian3::<f64>::zero()), Spectrum::zero());
    }

    #[test]
    fn spectrum_in_single_precision() {
        let m = Hermitian3 { off12: Complex::new(1.0f32, 0.0), ..Hermitian3::zero() };
        let s = spectrum(&m);
        assert!((s.l1 - 1.0).abs() < 1e-6 && (s.l3 + 1.0).abs() < 1e-6);
    }

    #[test]
    fn chamber_coordinates() {
        let c = to_chamber(&Spectrum::from_array([2.0, -1.0, -1.0]));
        assert!((c.p - 3.0 / 2f64.sqrt()).abs() < 1e-14 && (c.q - 3.0 / 6f64.sqrt()).abs() < 1e-14);
        let c = to_chamber(&Spectrum::from_array([1.0, 1.0, -2.0]));
        assert!(c.p.abs() < 1e-15 && (c.q - 6.0 / 6f64.sqrt()).abs() < 1e-14);
        assert_eq!(to_chamber(&Spectrum::<f64>::zero()), ChamberPoint { p: 0.0, q: 0.0 });
        let s = from_chamber(&to_chamber(&Spectrum::from_array([0.7, 0.1, -0.8])));
        assert!((s.l1 - 0.7).abs() < 1e-14 && (s.l2 - 0.1).abs() < 1e-14);
    }

    #[test]
    fn positive_chamber_sorting() {
        let (s, p) = to_positive_chamber([q(-1, 1), q(2, 1), q(-1, 1)]).unwrap();
        assert_eq!(s.to_array(), [q(2, 1), q(-1, 1), q(-1, 1)]);
        assert_eq!(p, Permutation(vec![1, 0, 2]));
        let (_, p) = to_positive_chamber([q(1, 1), q(0, 1), q(-1, 1)]).unwrap();
        assert!(p.is_identity());
        let (s, p) = to_positive_chamber([q(-1, 1), q(-1, 1), q(2, 1)]).unwrap();
        assert_eq!(s.to_array(), [q(2, 1), q(-1, 1), q(-1, 1)]);
        assert_eq!(p, Permutation(vec![2, 0, 1]));
        assert!(matches!(to_positive_chamber([q(1, 1), q(0, 1), q(0, 1)]), Err(Error::SumNotZero(_))));
        assert!(to_positive_chamber([1.0, -0.5, -0.5 + 1e-12]).is_ok());
        assert!(to_positive_chamber([1.0, -0.5, -0.4]).is_err());
    }

    #[test]
    fn star_examples() {
        let s = Spectrum::from_array([q(2, 1), q(-1, 1), q(-1, 1)]);
        assert_eq!(star_involution(&s).to_array(), [q(1, 1), q(1, 1), q(-2, 1)]);
        let s = Spectrum::from_array([q(1, 1), q(0, 1), q(-1, 1)]);
        assert_eq!(star_involution(&s), s);
    }

    #[test]
    fn star_maps_roots() {
        for r in Root::ALL {
            let v = r.vector();
            assert_eq!(star_vector(&v), r.star().vector());
        }
    }

    #[test]
    fn signed_roots() {
        assert_eq!(SignedRoot::from_vector([0, -1, 1]), Some(SignedRoot::minus(Root::Alpha1)));
        assert_eq!(SignedRoot::from_vector([1, 1, -2]), None);
        assert_eq!(SignedRoot::plus(Root::Alpha2).to_string(), "+alpha2");
    }
}
