//! Points of CP^2, the Fubini-Study momentum map and its weighted sums.

use num_complex::Complex;
use num_traits::{Float, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{max_abs, Scalar};
use crate::su3::{to_positive_chamber, Hermitian3, Mat3, Permutation, Root, SignedRoot, Spectrum};

/// Default tolerance on `|<Zi, Zj>|` for equality and orthogonality tests.
pub const STABILIZER_TOL: f64 = 1e-9;

const NORM_TOL: f64 = 1e-12;

/// A point of CP^2 stored as a unit vector.
#[derive(Clone, Debug, PartialEq)]
pub struct CPPoint<T> {
    pub z: [Complex<T>; 3],
}

impl<T: Scalar> CPPoint<T> {
    /// Coordinate point `e_k`, `k` in `1..=3`.
    pub fn basis(k: usize) -> Self {
        assert!((1..=3).contains(&k), "basis index {k} out of range");
        let z = std::array::from_fn(|i| {
            if i + 1 == k {
                Complex::new(T::one(), T::zero())
            } else {
                Complex::zero()
            }
        });
        Self { z }
    }

    /// Wraps a vector that is already of unit length.
    pub fn from_unit(z: [Complex<T>; 3]) -> Result<Self> {
        let p = Self { z };
        p.check_norm()?;
        Ok(p)
    }

    pub fn norm_sqr(&self) -> T {
        self.z.iter().fold(T::zero(), |acc, c| acc + c.norm_sqr())
    }

    fn check_norm(&self) -> Result<()> {
        let n = self.norm_sqr();
        let ok = if T::EXACT {
            n == T::one()
        } else {
            (n.to_f64() - 1.0).abs() <= NORM_TOL
        };
        if ok {
            Ok(())
        } else {
            Err(Error::NotNormalized(n.to_f64()))
        }
    }

    /// Hermitian inner product, antilinear in `self`.
    pub fn inner(&self, o: &Self) -> Complex<T> {
        (0..3).fold(Complex::zero(), |acc, i| acc + self.z[i].conj() * o.z[i].clone())
    }

    /// `U Z` without phase normalization.
    pub fn transform(&self, u: &Mat3<T>) -> Self {
        let z = std::array::from_fn(|i| {
            (0..3).fold(Complex::zero(), |acc, j| acc + u[i][j].clone() * self.z[j].clone())
        });
        Self { z }
    }

    /// Same line in CP^2, within `tol` on `1 - |<Z, W>|`.
    pub fn same_point(&self, o: &Self, tol: f64) -> bool {
        1.0 - self.inner(o).norm_sqr().to_f64().sqrt() <= tol
    }
}

impl<T: Scalar + Float> CPPoint<T> {
    /// Normalizes and fixes the phase so the first nonzero coordinate is real positive.
    pub fn normalized(z: [Complex<T>; 3]) -> Option<Self> {
        let n = z.iter().fold(T::zero(), |acc, c| acc + c.norm_sqr()).sqrt();
        if !(n > T::zero()) || !n.is_finite() {
            return None;
        }
        let lead = z
            .iter()
            .find(|c| c.norm() > n * T::epsilon())
            .copied()
            .unwrap_or(z[0]);
        let phase = lead.conj() / lead.norm();
        Some(Self { z: z.map(|c| c * phase / n) })
    }

    pub fn canonical(&self) -> Self {
        Self::normalized(self.z).expect("unit vector")
    }
}

/// `Z Z^* - I/3`.
pub fn fubini_study_moment<T: Scalar>(z: &CPPoint<T>) -> Result<Hermitian3<T>> {
    z.check_norm()?;
    let third = T::ratio(1, 3);
    let e = |i: usize, j: usize| z.z[i].clone() * z.z[j].conj();
    Ok(Hermitian3 {
        d1: z.z[0].norm_sqr() - third.clone(),
        d2: z.z[1].norm_sqr() - third,
        off12: e(0, 1),
        off13: e(0, 2),
        off23: e(1, 2),
    })
}

/// Symplectic weights `Gamma_1..Gamma_N`, `N` in `{2, 3}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Weights<T> {
    gammas: Vec<T>,
    allow_zero: bool,
}

impl<T: Scalar> Weights<T> {
    /// Nonzero weights only.
    pub fn new(gammas: Vec<T>) -> Result<Self> {
        Self::build(gammas, false)
    }

    /// Permits zero entries; that factor then contributes nothing to the momentum map.
    pub fn allowing_zero(gammas: Vec<T>) -> Result<Self> {
        Self::build(gammas, true)
    }

    fn build(gammas: Vec<T>, allow_zero: bool) -> Result<Self> {
        if !(2..=3).contains(&gammas.len()) {
            return Err(Error::UnsupportedLength(gammas.len()));
        }
        if !allow_zero {
            if let Some(i) = gammas.iter().position(|g| g.is_zero()) {
                return Err(Error::ZeroWeight(i + 1));
            }
        }
        Ok(Self { gammas, allow_zero })
    }

    pub fn gammas(&self) -> &[T] {
        &self.gammas
    }

    pub fn len(&self) -> usize {
        self.gammas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gammas.is_empty()
    }

    pub fn allows_zero(&self) -> bool {
        self.allow_zero
    }

    pub fn sum(&self) -> T {
        self.gammas.iter().fold(T::zero(), |a, g| a + g.clone())
    }

    pub fn scale(&self) -> T {
        max_abs(&self.gammas)
    }

    pub fn has_zero(&self) -> bool {
        self.gammas.iter().any(|g| g.is_zero())
    }

    pub fn negated(&self) -> Self {
        Self { gammas: self.gammas.iter().map(|g| -g.clone()).collect(), allow_zero: self.allow_zero }
    }

    /// Entry `i` of the result is entry `perm[i]` of `self`.
    pub fn permuted(&self, perm: &Permutation) -> Self {
        Self { gammas: perm.apply(&self.gammas), allow_zero: self.allow_zero }
    }

    pub fn to_f64(&self) -> Weights<f64> {
        Weights { gammas: self.gammas.iter().map(|g| g.to_f64()).collect(), allow_zero: self.allow_zero }
    }

    /// The nonzero entries, in order.
    pub fn nonzero(&self) -> Vec<T> {
        self.gammas.iter().filter(|g| !g.is_zero()).cloned().collect()
    }
}

/// `sum_j Gamma_j (Z_j Z_j^* - I/3)`.
pub fn weighted_moment<T: Scalar>(config: &[CPPoint<T>], w: &Weights<T>) -> Result<Hermitian3<T>> {
    if config.len() != w.len() {
        return Err(Error::LengthMismatch { config: config.len(), weights: w.len() });
    }
    let mut acc = Hermitian3::zero();
    for (z, g) in config.iter().zip(w.gammas()) {
        acc = acc + fubini_study_moment(z)?.scale(g);
    }
    Ok(acc)
}

/// Sorted spectra at the torus-fixed configurations for three factors.
#[derive(Clone, Debug, PartialEq)]
pub struct FixedPoints3<T> {
    pub a: Spectrum<T>,
    pub b: Spectrum<T>,
    pub c1: Spectrum<T>,
    pub c2: Spectrum<T>,
    pub c3: Spectrum<T>,
}

impl<T: Scalar> FixedPoints3<T> {
    pub fn all(&self) -> [&Spectrum<T>; 5] {
        [&self.a, &self.b, &self.c1, &self.c2, &self.c3]
    }

    pub fn c(&self, j: usize) -> &Spectrum<T> {
        match j {
            1 => &self.c1,
            2 => &self.c2,
            3 => &self.c3,
            _ => panic!("c index {j} out of range"),
        }
    }
}

/// Sorted endpoint spectra for two factors.
#[derive(Clone, Debug, PartialEq)]
pub struct FixedPoints2<T> {
    pub a: Spectrum<T>,
    pub c: Spectrum<T>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum FixedPointSpectra<T> {
    Two(FixedPoints2<T>),
    Three(FixedPoints3<T>),
}

/// Names of the five fixed points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FixedPoint {
    A,
    B,
    C1,
    C2,
    C3,
}

impl FixedPoint {
    pub const ALL: [FixedPoint; 5] = [FixedPoint::A, FixedPoint::B, FixedPoint::C1, FixedPoint::C2, FixedPoint::C3];

    pub fn name(self) -> &'static str {
        match self {
            FixedPoint::A => "a",
            FixedPoint::B => "b",
            FixedPoint::C1 => "c1",
            FixedPoint::C2 => "c2",
            FixedPoint::C3 => "c3",
        }
    }
}

fn sum3<T: Scalar>(g: &[T]) -> T {
    g.iter().fold(T::zero(), |a, x| a + x.clone())
}

/// Unsorted diagonal of the momentum image at a fixed configuration, for three factors.
pub fn raw_fixed_point<T: Scalar>(g: &[T], which: FixedPoint) -> [T; 3] {
    let third = T::ratio(1, 3);
    let s = sum3(g);
    let s3 = s.clone() * third.clone();
    let two = T::from_i64(2).unwrap();
    match which {
        FixedPoint::A => [two * s3.clone(), -s3.clone(), -s3],
        FixedPoint::B => {
            let (g1, g2, g3) = (g[0].clone(), g[1].clone(), g[2].clone());
            [
                (two.clone() * g1.clone() - g2.clone() - g3.clone()) * third.clone(),
                (two.clone() * g2.clone() - g1.clone() - g3.clone()) * third.clone(),
                (two * g3 - g1 - g2) * third,
            ]
        }
        FixedPoint::C1 | FixedPoint::C2 | FixedPoint::C3 => {
            let j = which as usize - 2;
            let gj = g[j].clone();
            [gj.clone() - s3.clone(), s - gj - s3.clone(), -s3]
        }
    }
}

/// Configuration realizing each named fixed point for three factors.
pub fn fixed_point_config<T: Scalar>(which: FixedPoint) -> [CPPoint<T>; 3] {
    let e = CPPoint::basis;
    match which {
        FixedPoint::A => [e(1), e(1), e(1)],
        FixedPoint::B => [e(1), e(2), e(3)],
        FixedPoint::C1 => [e(1), e(2), e(2)],
        FixedPoint::C2 => [e(2), e(1), e(2)],
        FixedPoint::C3 => [e(2), e(2), e(1)],
    }
}

/// Closed-form fixed-point spectra, sorted into the chamber.
pub fn fixed_point_spectra<T: Scalar>(w: &Weights<T>) -> FixedPointSpectra<T> {
    let g = w.gammas();
    let sorted = |raw: [T; 3]| to_positive_chamber(raw).expect("trace-free by construction").0;
    if g.len() == 2 {
        let third = T::ratio(1, 3);
        let two = T::from_i64(2).unwrap();
        let s = g[0].clone() + g[1].clone();
        let a = [two.clone() * s.clone() * third.clone(), -s.clone() * third.clone(), -s.clone() * third.clone()];
        let c = [
            (two.clone() * g[0].clone() - g[1].clone()) * third.clone(),
            (two * g[1].clone() - g[0].clone()) * third.clone(),
            -s * third,
        ];
        return FixedPointSpectra::Two(FixedPoints2 { a: sorted(a), c: sorted(c) });
    }
    FixedPointSpectra::Three(fixed_points3(g))
}

pub fn fixed_points3<T: Scalar>(g: &[T]) -> FixedPoints3<T> {
    let sorted = |w| to_positive_chamber(raw_fixed_point(g, w)).expect("trace-free by construction").0;
    FixedPoints3 {
        a: sorted(FixedPoint::A),
        b: sorted(FixedPoint::B),
        c1: sorted(FixedPoint::C1),
        c2: sorted(FixedPoint::C2),
        c3: sorted(FixedPoint::C3),
    }
}

/// Conjugacy class of the stabilizer of a configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StabilizerClass {
    U2,
    T2,
    U1,
    Trivial,
}

/// Stabilizer type from the equality and orthogonality pattern of the configuration.
pub fn configuration_stabilizer<T: Scalar>(config: &[CPPoint<T>], tol: f64) -> StabilizerClass {
    let n = config.len();
    let ip = |i: usize, j: usize| config[i].inner(&config[j]).norm_sqr().to_f64().sqrt();
    let eq = |i: usize, j: usize| 1.0 - ip(i, j) <= tol;
    let orth = |i: usize, j: usize| ip(i, j) <= tol;
    if n == 2 {
        return if eq(0, 1) {
            StabilizerClass::U2
        } else if orth(0, 1) {
            StabilizerClass::T2
        } else {
            StabilizerClass::U1
        };
    }
    assert_eq!(n, 3, "configurations have 2 or 3 points");
    let pairs = [(0, 1), (0, 2), (1, 2)];
    let n_eq = pairs.iter().filter(|&&(i, j)| eq(i, j)).count();
    if n_eq >= 2 {
        return StabilizerClass::U2;
    }
    if n_eq == 1 {
        let &(i, j) = pairs.iter().find(|&&(i, j)| eq(i, j)).unwrap();
        let k = 3 - i - j;
        return if orth(i, k) {
            StabilizerClass::T2
        } else {
            StabilizerClass::U1
        };
    }
    if pairs.iter().all(|&(i, j)| orth(i, j)) {
        return StabilizerClass::T2;
    }
    let gram = |i: usize, j: usize| config[i].inner(&config[j]);
    let g: [[Complex<f64>; 3]; 3] = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let c = gram(i, j);
            Complex::new(c.re.to_f64(), c.im.to_f64())
        })
    });
    let det = (g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
        - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
        + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]))
        .re;
    if det.abs() <= tol {
        return StabilizerClass::U1;
    }
    let orthogonal_to_rest = (0..3).any(|k| (0..3).filter(|&i| i != k).all(|i| orth(i, k)));
    if orthogonal_to_rest {
        StabilizerClass::U1
    } else {
        StabilizerClass::Trivial
    }
}

/// Torus weights of the tangent space at `e_k`, `k` in `1..=3`.
pub fn tangent_weights(k: usize) -> (SignedRoot, SignedRoot) {
    match k {
        1 => (SignedRoot::minus(Root::Alpha3), SignedRoot::plus(Root::Alpha2)),
        2 => (SignedRoot::minus(Root::Alpha1), SignedRoot::plus(Root::Alpha3)),
        3 => (SignedRoot::minus(Root::Alpha2), SignedRoot::plus(Root::Alpha1)),
        _ => panic!("basis index {k} out of range"),
    }
}

/// Applies `g` to every point of a configuration.
pub fn act<T: Scalar>(g: &Mat3<T>, config: &[CPPoint<T>]) -> Vec<CPPoint<T>> {
    config.iter().map(|z| z.transform(g)).collect()
}

/// Dimension of the stabilizer algebra `{xi in su(3) : xi Z_j is parallel to Z_j}`.
///
/// Cross-check for [`configuration_stabilizer`]; works in floating point.
pub fn stabilizer_dimension(config: &[CPPoint<f64>], tol: f64) -> usize {
    // Basis of su(3) as 8 real parameters; constraint rows are Re/Im parts of
    // (1 - P_j) xi Z_j = 0 where P_j projects onto Z_j.
    let basis: Vec<Mat3<f64>> = su3_basis();
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for z in config {
        let cols: Vec<[Complex<f64>; 3]> = basis
            .iter()
            .map(|xi| {
                let v = z.transform(xi).z;
                let p = z.inner(&CPPoint { z: v });
                std::array::from_fn(|i| v[i] - z.z[i] * p)
            })
            .collect();
        for i in 0..3 {
            rows.push(cols.iter().map(|c| c[i].re).collect());
            rows.push(cols.iter().map(|c| c[i].im).collect());
        }
    }
    8 - numeric_rank(rows, 8, tol)
}

fn su3_basis() -> Vec<Mat3<f64>> {
    let zero = Complex::new(0.0, 0.0);
    let mut out = Vec::new();
    let mut m = |entries: &[(usize, usize, Complex<f64>)]| {
        let mut a = [[zero; 3]; 3];
        for &(i, j, v) in entries {
            a[i][j] = v;
        }
        out.push(a);
    };
    let i = Complex::new(0.0, 1.0);
    let one = Complex::new(1.0, 0.0);
    m(&[(0, 0, i), (1, 1, -i)]);
    m(&[(1, 1, i), (2, 2, -i)]);
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        m(&[(a, b, one), (b, a, -one)]);
        m(&[(a, b, i), (b, a, i)]);
    }
    out
}

fn numeric_rank(mut rows: Vec<Vec<f64>>, ncols: usize, tol: f64) -> usize {
    let mut rank = 0;
    for col in 0..ncols {
        let pivot = (rank..rows.len()).max_by(|&a, &b| rows[a][col].abs().partial_cmp(&rows[b][col].abs()).unwrap());
        let Some(p) = pivot else { break };
        if rows[p][col].abs() <= tol {
            continue;
        }
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank {
                let f = rows[r][col] / rows[rank][col];
                for c in col..ncols {
                    rows[r][c] -= f * rows[rank][c];
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(n: i64, d: i64) -> Q {
        Q::ratio(n, d)
    }

    fn qs(v: &[(i64, i64)]) -> Vec<Q> {
        v.iter().map(|&(n, d)| q(n, d)).collect()
    }

    fn spec(v: [(i64, i64); 3]) -> Spectrum<Q> {
        Spectrum::from_array(v.map(|(n, d)| q(n, d)))
    }

    #[test]
    fn fubini_study_examples() {
        let m = fubini_study_moment(&CPPoint::<Q>::basis(1)).unwrap();
        assert_eq!(m.diag(), [q(2, 3), q(-1, 3), q(-1, 3)]);
        assert!(m.is_diagonal());
        let m = fubini_study_moment(&CPPoint::<Q>::basis(2)).unwrap();
        assert_eq!(m.diag(), [q(-1, 3), q(2, 3), q(-1, 3)]);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let z = CPPoint::from_unit([Complex::new(h, 0.0), Complex::new(h, 0.0), Complex::zero()]).unwrap();
        let m = fubini_study_moment(&z).unwrap();
        assert!((m.d1 - 1.0 / 6.0).abs() < 1e-15 && (m.d2 - 1.0 / 6.0).abs() < 1e-15);
        assert!((m.d3() + 1.0 / 3.0).abs() < 1e-15 && (m.off12.re - 0.5).abs() < 1e-15);
    }

    #[test]
    fn rejects_unnormalized() {
        let z = CPPoint { z: [Complex::new(q(1, 2), q(0, 1)), Complex::zero(), Complex::zero()] };
        assert!(matches!(fubini_study_moment(&z), Err(Error::NotNormalized(_))));
        assert!(CPPoint::from_unit([Complex::new(1.0, 1e-5), Complex::zero(), Complex::zero()]).is_err());
    }

    #[test]
    fn weighted_examples() {
        let e = CPPoint::<Q>::basis;
        let w = Weights::new(qs(&[(1, 1), (1, 1)])).unwrap();
        let m = weighted_moment(&[e(1), e(2)], &w).unwrap();
        assert_eq!(m.diag(), [q(1, 3), q(1, 3), q(-2, 3)]);
        let w = Weights::new(qs(&[(1, 1), (1, 1), (1, 1)])).unwrap();
        assert_eq!(weighted_moment(&[e(1), e(1), e(1)], &w).unwrap().diag(), [q(2, 1), q(-1, 1), q(-1, 1)]);
        let w = Weights::new(qs(&[(4, 1), (2, 1), (-1, 1)])).unwrap();
        assert_eq!(weighted_moment(&[e(1), e(2), e(3)], &w).unwrap().diag(), [q(7, 3), q(1, 3), q(-8, 3)]);
        assert!(matches!(
            weighted_moment(&[e(1), e(2)], &w),
            Err(Error::LengthMismatch { config: 2, weights: 3 })
        ));
    }

    #[test]
    fn weights_validation() {
        assert!(matches!(Weights::new(vec![1.0]), Err(Error::UnsupportedLength(1))));
        assert!(matches!(Weights::new(vec![1.0, 0.0, 2.0]), Err(Error::ZeroWeight(2))));
        assert!(Weights::allowing_zero(vec![1.0, 0.0, 2.0]).unwrap().has_zero());
    }

    #[test]
    fn fixed_point_examples() {
        let w = Weights::new(qs(&[(1, 1), (1, 1), (1, 1)])).unwrap();
        let FixedPointSpectra::Three(f) = fixed_point_spectra(&w) else { panic!() };
        assert_eq!(f.a, spec([(2, 1), (-1, 1), (-1, 1)]));
        assert_eq!(f.b, Spectrum::zero());
        for c in [&f.c1, &f.c2, &f.c3] {
            assert_eq!(*c, spec([(1, 1), (0, 1), (-1, 1)]));
        }
        let w = Weights::new(qs(&[(4, 1), (2, 1), (-1, 1)])).unwrap();
        let FixedPointSpectra::Three(f) = fixed_point_spectra(&w) else { panic!() };
        assert_eq!(f.a, spec([(10, 3), (-5, 3), (-5, 3)]));
        assert_eq!(f.b, spec([(7, 3), (1, 3), (-8, 3)]));
        assert_eq!(f.c1, spec([(7, 3), (-2, 3), (-5, 3)]));
        assert_eq!(f.c2, spec([(4, 3), (1, 3), (-5, 3)]));
        assert_eq!(f.c3, spec([(13, 3), (-5, 3), (-8, 3)]));
        let w = Weights::new(qs(&[(2, 1), (1, 1)])).unwrap();
        let FixedPointSpectra::Two(f) = fixed_point_spectra(&w) else { panic!() };
        assert_eq!(f.a, spec([(2, 1), (-1, 1), (-1, 1)]));
        assert_eq!(f.c, spec([(1, 1), (0, 1), (-1, 1)]));
    }

    #[test]
    fn stabilizer_examples() {
        let e = CPPoint::<f64>::basis;
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let mix = CPPoint::from_unit([Complex::new(h, 0.0), Complex::new(h, 0.0), Complex::zero()]).unwrap();
        assert_eq!(configuration_stabilizer(&[e(1), e(1)], STABILIZER_TOL), StabilizerClass::U2);
        assert_eq!(configuration_stabilizer(&[e(1), e(2)], STABILIZER_TOL), StabilizerClass::T2);
        assert_eq!(configuration_stabilizer(&[e(1), mix.clone()], STABILIZER_TOL), StabilizerClass::U1);
        assert_eq!(configuration_stabilizer(&[e(1), e(1), e(1)], STABILIZER_TOL), StabilizerClass::U2);
        assert_eq!(configuration_stabilizer(&[e(1), e(1), e(2)], STABILIZER_TOL), StabilizerClass::T2);
        assert_eq!(configuration_stabilizer(&[e(1), e(2), e(3)], STABILIZER_TOL), StabilizerClass::T2);
        assert_eq!(configuration_stabilizer(&[e(1), mix.clone(), e(3)], STABILIZER_TOL), StabilizerClass::U1);
        assert_eq!(configuration_stabilizer(&[e(1), mix.clone(), e(2)], STABILIZER_TOL), StabilizerClass::U1);
        let t = 1.0 / 3f64.sqrt();
        let g = CPPoint::from_unit([Complex::new(t, 0.0); 3]).unwrap();
        assert_eq!(configuration_stabilizer(&[e(1), e(2), g], STABILIZER_TOL), StabilizerClass::Trivial);
    }

    #[test]
    fn tangent_weight_table() {
        assert_eq!(tangent_weights(1), (SignedRoot::minus(Root::Alpha3), SignedRoot::plus(Root::Alpha2)));
        assert_eq!(tangent_weights(2), (SignedRoot::minus(Root::Alpha1), SignedRoot::plus(Root::Alpha3)));
        assert_eq!(tangent_weights(3), (SignedRoot::minus(Root::Alpha2), SignedRoot::plus(Root::Alpha1)));
    }

    #[test]
    fn tangent_weights_match_torus_action() {
        // At e_k the tangent directions e_m (m != k) carry the weight diag(E_mm - E_kk).
        for k in 1..=3usize {
            let (w1, w2) = tangent_weights(k);
            let mut found: Vec<[i64; 3]> = (1..=3usize)
                .filter(|&m| m != k)
                .map(|m| {
                    let mut v = [0i64; 3];
                    v[m - 1] += 1;
                    v[k - 1] -= 1;
                    v
                })
                .collect();
            let mut table = vec![w1.vector(), w2.vector()];
            found.sort();
            table.sort();
            assert_eq!(found, table, "e{k}");
        }
    }

    #[test]
    fn phase_canonicalization() {
        let z = CPPoint::normalized([Complex::new(0.0, 0.0), Complex::new(0.0, 2.0), Complex::new(1.0, 0.0)]).unwrap();
        assert!(z.z[0].norm() == 0.0 && z.z[1].im.abs() < 1e-15 && z.z[1].re > 0.0);
        assert!((z.norm_sqr() - 1.0).abs() < 1e-15);
        assert!(CPPoint::<f64>::normalized([Complex::zero(); 3]).is_none());
    }
}
