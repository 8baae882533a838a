//! Eigenvalue bounds for sums of trace-free 3x3 Hermitian matrices with a double eigenvalue.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moment::{fixed_point_config, fubini_study_moment, CPPoint, FixedPoint, Weights};
use crate::oracle::{block_rng, configuration_spectrum, sample_configuration};
use crate::polytope::{build_polytope_n2, build_polytope_n3, contains, ChamberPolytope};
use crate::scalar::Scalar;
use crate::su3::{Hermitian3, Spectrum};

/// A trace-free Hermitian matrix with spectrum `(lambda, lambda, -2 lambda)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DoubleEigMatrixSpec<T> {
    pub lambda: T,
}

impl<T: Scalar> DoubleEigMatrixSpec<T> {
    pub fn new(lambda: T) -> Self {
        Self { lambda }
    }

    /// `lambda (I - 3 Z Z^*)`, whose simple eigenvector is `z`.
    pub fn matrix(&self, z: &CPPoint<T>) -> Result<Hermitian3<T>> {
        Ok(fubini_study_moment(z)? * gamma_of_lambda(self))
    }
}

/// The symplectic weight `-3 lambda` realizing the spec as a Fubini-Study moment.
pub fn gamma_of_lambda<T: Scalar>(spec: &DoubleEigMatrixSpec<T>) -> T {
    -(T::ratio(3, 1) * spec.lambda.clone())
}

fn weights<T: Scalar>(specs: &[DoubleEigMatrixSpec<T>]) -> Weights<T> {
    Weights::allowing_zero(specs.iter().map(gamma_of_lambda).collect()).expect("two or three weights")
}

/// `lambda1` is the eigenvalue of `A + B` that never moves; another eigenvalue ranges over the interval.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwoMatrixBounds<T> {
    pub lambda1: T,
    pub lambda2_interval: (T, T),
}

pub fn sum_bounds_two<T: Scalar>(a: &DoubleEigMatrixSpec<T>, b: &DoubleEigMatrixSpec<T>) -> TwoMatrixBounds<T> {
    let l1 = a.lambda.clone() + b.lambda.clone();
    let other = a.lambda.clone() - T::ratio(2, 1) * b.lambda.clone();
    let lambda2_interval = if other <= l1 { (other, l1.clone()) } else { (l1.clone(), other) };
    TwoMatrixBounds { lambda1: l1, lambda2_interval }
}

/// The same bounds as a chamber polytope: the segment for `Gamma = -3 (lambda_A, lambda_B)`.
pub fn sum_polytope_two<T: Scalar>(a: &DoubleEigMatrixSpec<T>, b: &DoubleEigMatrixSpec<T>) -> Result<ChamberPolytope<T>> {
    build_polytope_n2(&weights(&[a.clone(), b.clone()]))
}

pub fn sum_bounds_three<T: Scalar>(
    a: &DoubleEigMatrixSpec<T>,
    b: &DoubleEigMatrixSpec<T>,
    c: &DoubleEigMatrixSpec<T>,
) -> Result<ChamberPolytope<T>> {
    build_polytope_n3(&weights(&[a.clone(), b.clone(), c.clone()]))
}

pub fn check_spectrum<T: Scalar>(
    a: &DoubleEigMatrixSpec<T>,
    b: &DoubleEigMatrixSpec<T>,
    c: &DoubleEigMatrixSpec<T>,
    target: &Spectrum<T>,
    tol: f64,
) -> Result<bool> {
    Ok(contains(&sum_bounds_three(a, b, c)?, target, tol))
}

/// Matrices `A, B, C` with the requested double eigenvalues whose sum has the target spectrum.
#[derive(Clone, Debug, PartialEq)]
pub struct Realization {
    pub matrices: [Hermitian3<f64>; 3],
    pub configuration: Vec<CPPoint<f64>>,
    pub spectrum: Spectrum<f64>,
    pub distance: f64,
    pub restart: usize,
}

/// Target distance counted as a hit.
pub const REALIZE_TOL: f64 = 1e-6;

const CHUNK: usize = 16;

fn pack(config: &[CPPoint<f64>]) -> Vec<f64> {
    config.iter().flat_map(|p| p.z.iter().flat_map(|c| [c.re, c.im])).collect()
}

fn unpack(x: &[f64]) -> Option<Vec<CPPoint<f64>>> {
    x.chunks(6)
        .map(|c| {
            CPPoint::normalized(std::array::from_fn(|i| num_complex::Complex::new(c[2 * i], c[2 * i + 1])))
        })
        .collect()
}

fn residual(x: &[f64], w: &Weights<f64>, target: &Spectrum<f64>) -> Option<[f64; 2]> {
    let s = configuration_spectrum(&unpack(x)?, w).ok()?;
    Some([s.l1 - target.l1, s.l2 - target.l2])
}

fn chamber_norm(r: &[f64; 2]) -> f64 {
    // Distance between sum-zero triples from their first two coordinates.
    (2.0 * (r[0] * r[0] + r[1] * r[1] + r[0] * r[1])).sqrt()
}

const MAX_STEPS: usize = 300;
const FD_STEP: f64 = 1e-7;

/// Damped Gauss-Newton with minimum-norm steps over the 18 real coordinates of a configuration.
fn descend(start: &[CPPoint<f64>], w: &Weights<f64>, target: &Spectrum<f64>) -> (Vec<CPPoint<f64>>, f64) {
    let mut x = pack(start);
    let Some(mut r) = residual(&x, w, target) else {
        return (start.to_vec(), f64::INFINITY);
    };
    let mut mu = 1e-3;
    for _ in 0..MAX_STEPS {
        if chamber_norm(&r) < REALIZE_TOL * 1e-3 || mu > 1e12 {
            break;
        }
        let mut jac = vec![[0.0; 2]; x.len()];
        for (i, col) in jac.iter_mut().enumerate() {
            let (mut up, mut dn) = (x.clone(), x.clone());
            up[i] += FD_STEP;
            dn[i] -= FD_STEP;
            if let (Some(a), Some(b)) = (residual(&up, w, target), residual(&dn, w, target)) {
                *col = [(a[0] - b[0]) / (2.0 * FD_STEP), (a[1] - b[1]) / (2.0 * FD_STEP)];
            }
        }
        let mut g = [[0.0; 2]; 2];
        for col in &jac {
            for a in 0..2 {
                for b in 0..2 {
                    g[a][b] += col[a] * col[b];
                }
            }
        }
        loop {
            let (m00, m01, m11) = (g[0][0] + mu, g[0][1], g[1][1] + mu);
            let det = m00 * m11 - m01 * m01;
            let y = [(m11 * r[0] - m01 * r[1]) / det, (m00 * r[1] - m01 * r[0]) / det];
            let trial: Vec<f64> = x.iter().zip(&jac).map(|(xi, c)| xi - (c[0] * y[0] + c[1] * y[1])).collect();
            match residual(&trial, w, target) {
                Some(rt) if chamber_norm(&rt) < chamber_norm(&r) => {
                    x = trial;
                    r = rt;
                    mu = (mu / 3.0).max(1e-12);
                    break;
                }
                _ => {
                    mu *= 4.0;
                    if mu > 1e12 {
                        break;
                    }
                }
            }
        }
    }
    (unpack(&x).expect("finite configuration"), chamber_norm(&r))
}

fn restart_point(k: usize, seed: u64) -> Vec<CPPoint<f64>> {
    match FixedPoint::ALL.get(k) {
        Some(&f) => fixed_point_config::<f64>(f).to_vec(),
        None => sample_configuration(&mut block_rng(seed, k as u64), 3),
    }
}

/// Searches for a realization with seeded restarts: the five fixed configurations, then random ones.
///
/// `NotFound` reports a search failure with the best distance reached.
pub fn realize(
    a: &DoubleEigMatrixSpec<f64>,
    b: &DoubleEigMatrixSpec<f64>,
    c: &DoubleEigMatrixSpec<f64>,
    target: &Spectrum<f64>,
    budget: usize,
    seed: u64,
) -> Result<Realization> {
    let predicted = sum_bounds_three(a, b, c)?;
    if !contains(&predicted, target, 1e-9) {
        return Err(Error::OutsidePolytope);
    }
    let specs = [*a, *b, *c];
    let w = weights(&specs);
    let mut best: Option<(usize, Vec<CPPoint<f64>>, f64)> = None;
    let mut start = 0;
    while start < budget {
        let end = (start + CHUNK).min(budget);
        let chunk: Vec<(usize, Vec<CPPoint<f64>>, f64)> = (start..end)
            .into_par_iter()
            .map(|k| {
                let (cfg, d) = descend(&restart_point(k, seed), &w, target);
                (k, cfg, d)
            })
            .collect();
        for cand in chunk {
            if best.as_ref().is_none_or(|b| cand.2 < b.2) {
                best = Some(cand);
            }
        }
        if best.as_ref().is_some_and(|b| b.2 < REALIZE_TOL) {
            break;
        }
        start = end;
    }
    let (restart, configuration, distance) = best.ok_or(Error::NotFound { best: f64::INFINITY })?;
    if distance >= REALIZE_TOL {
        return Err(Error::NotFound { best: distance });
    }
    let matrices = [0, 1, 2].map(|i| specs[i].matrix(&configuration[i]).expect("unit vector"));
    let spectrum = configuration_spectrum(&configuration, &w)?;
    Ok(Realization { matrices, configuration, spectrum, distance, restart })
}
