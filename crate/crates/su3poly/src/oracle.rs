//! Monte Carlo sampling of the momentum image, used as independent ground truth.

use std::io::Write;

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moment::{fixed_point_config, weighted_moment, CPPoint, FixedPoint, Weights};
use crate::polytope::{build_polytope, hausdorff_deficit, hull2d, ChamberPolytope, ABS_TOL_FLOOR};
use crate::scalar::Scalar;
use crate::su3::{spectrum, to_chamber, ChamberPoint, Mat3, Spectrum};

/// Samples per independent RNG stream.
pub const BLOCK_SIZE: usize = 4096;

/// Generator for block `block` of the run seeded by `seed`.
pub fn block_rng(seed: u64, block: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(block);
    rng
}

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex<f64> {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex::new(re, im)
}

/// Fubini-Study uniform point: a normalized complex Gaussian vector with canonical phase.
pub fn sample_cp2<R: Rng + ?Sized>(rng: &mut R) -> CPPoint<f64> {
    loop {
        let z = [gaussian(rng), gaussian(rng), gaussian(rng)];
        if let Some(p) = CPPoint::normalized(z) {
            return p;
        }
    }
}

/// Haar-distributed unitary from the QR decomposition of a complex Gaussian matrix.
pub fn haar_unitary<R: Rng + ?Sized>(rng: &mut R) -> Mat3<f64> {
    let mut cols: [[Complex<f64>; 3]; 3] = std::array::from_fn(|_| [gaussian(rng), gaussian(rng), gaussian(rng)]);
    for k in 0..3 {
        for j in 0..k {
            let proj: Complex<f64> = (0..3).map(|i| cols[j][i].conj() * cols[k][i]).sum();
            let cj = cols[j];
            for (x, v) in cols[k].iter_mut().zip(cj) {
                *x -= proj * v;
            }
        }
        let n = cols[k].iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        for c in cols[k].iter_mut() {
            *c /= n;
        }
    }
    std::array::from_fn(|i| std::array::from_fn(|j| cols[j][i]))
}

pub fn sample_configuration<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<CPPoint<f64>> {
    (0..n).map(|_| sample_cp2(rng)).collect()
}

pub fn configuration_spectrum(config: &[CPPoint<f64>], w: &Weights<f64>) -> Result<Spectrum<f64>> {
    Ok(spectrum(&weighted_moment(config, w)?))
}

/// Uniform samples of the momentum image.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleBatch {
    pub seed: u64,
    pub count: usize,
    pub spectra: Vec<Spectrum<f64>>,
    pub chamber_points: Vec<ChamberPoint>,
}

fn block_configurations(w: &Weights<f64>, seed: u64, block: usize, len: usize) -> impl Iterator<Item = Vec<CPPoint<f64>>> {
    let mut rng = block_rng(seed, block as u64);
    let n = w.len();
    (0..len).map(move |_| sample_configuration(&mut rng, n))
}

/// Configuration of sample `index` in the run `(seed, count)`, regenerated from its block stream.
pub fn replay_configuration(w: &Weights<f64>, seed: u64, index: usize) -> Vec<CPPoint<f64>> {
    let block = index / BLOCK_SIZE;
    block_configurations(w, seed, block, index % BLOCK_SIZE + 1)
        .last()
        .expect("non-empty block")
}

/// Independent of thread count: block `k` always covers samples `k*BLOCK_SIZE..`.
pub fn sample_batch(w: &Weights<f64>, count: usize, seed: u64) -> Result<SampleBatch> {
    let blocks = count.div_ceil(BLOCK_SIZE);
    let per_block: Vec<Vec<Spectrum<f64>>> = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let len = BLOCK_SIZE.min(count - b * BLOCK_SIZE);
            block_configurations(w, seed, b, len)
                .map(|c| configuration_spectrum(&c, w))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let spectra: Vec<Spectrum<f64>> = per_block.into_iter().flatten().collect();
    let chamber_points = spectra.iter().map(to_chamber).collect();
    Ok(SampleBatch { seed, count, spectra, chamber_points })
}

/// Samples and their convex hull, an inner approximation of the momentum polytope.
pub fn empirical_polytope(w: &Weights<f64>, count: usize, seed: u64) -> Result<(SampleBatch, ChamberPolytope<f64>)> {
    assert!(count >= 1, "count must be positive");
    let batch = sample_batch(w, count, seed)?;
    let hull = hull2d(&batch.chamber_points);
    Ok((batch, hull))
}

/// Perturbs each point of `center` by a complex Gaussian of scale `spread` and renormalizes.
pub fn perturb_configuration<R: Rng + ?Sized>(rng: &mut R, center: &[CPPoint<f64>], spread: f64) -> Vec<CPPoint<f64>> {
    center
        .iter()
        .map(|p| {
            let z = std::array::from_fn(|i| p.z[i] + gaussian(rng) * spread);
            CPPoint::normalized(z).unwrap_or_else(|| p.clone())
        })
        .collect()
}

/// Draws concentrated near `center`, for reaching polytope vertices that uniform sampling finds slowly.
pub fn importance_samples(
    w: &Weights<f64>,
    center: &[CPPoint<f64>],
    spread: f64,
    count: usize,
    seed: u64,
) -> Result<Vec<Spectrum<f64>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| configuration_spectrum(&perturb_configuration(&mut rng, center, spread), w))
        .collect()
}

const REFINE_ROUNDS: usize = 40;
const REFINE_DRAWS: usize = 64;

/// Shrinking-spread importance sampling towards `target`, starting from `start`.
fn refine_towards(w: &Weights<f64>, target: &Spectrum<f64>, start: Vec<CPPoint<f64>>, seed: u64) -> Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = start;
    let mut best_d = configuration_spectrum(&best, w)?.distance(target);
    let mut spread = 0.5;
    for _ in 0..REFINE_ROUNDS {
        for _ in 0..REFINE_DRAWS {
            let cand = perturb_configuration(&mut rng, &best, spread);
            let d = configuration_spectrum(&cand, w)?.distance(target);
            if d < best_d {
                best = cand;
                best_d = d;
            }
        }
        spread *= 0.7;
    }
    Ok(best_d)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VertexCoverage {
    pub vertex: [f64; 3],
    /// Nearest uniform sample.
    pub uniform_distance: f64,
    /// Nearest point after importance sampling around the nearest uniform sample and the fixed points.
    pub distance: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n_samples: usize,
    pub n_violations: usize,
    /// Largest distance of a sample outside the predicted polytope.
    pub max_violation: f64,
    pub diameter: f64,
    /// Largest distance from a predicted vertex to the empirical hull.
    pub hausdorff_inner: f64,
    pub vertex_coverage: Vec<VertexCoverage>,
    pub tolerance: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.n_violations == 0
    }

    pub fn max_coverage(&self) -> f64 {
        self.vertex_coverage.iter().map(|c| c.distance).fold(0.0, f64::max)
    }
}

/// Samples the momentum image for `w` and compares against its predicted polytope.
pub fn verify<T: Scalar>(w: &Weights<T>, count: usize, seed: u64, tol: f64) -> Result<VerificationReport> {
    let predicted = build_polytope(w).map_err(|e| match e {
        Error::AllWeightsDegenerate => Error::PredictionUnavailable,
        e => e,
    })?;
    verify_against(&predicted, &w.to_f64(), count, seed, tol)
}

/// Compares samples for `w` against an arbitrary `predicted` region.
pub fn verify_against<T: Scalar>(
    predicted: &ChamberPolytope<T>,
    w: &Weights<f64>,
    count: usize,
    seed: u64,
    tol: f64,
) -> Result<VerificationReport> {
    assert!(count >= 1, "count must be positive");
    let (batch, hull) = empirical_polytope(w, count, seed)?;
    let pf = predicted.to_f64();
    let diameter = pf.diameter();
    let band = (tol * diameter).max(ABS_TOL_FLOOR);
    let violations: Vec<f64> = batch.spectra.par_iter().map(|s| pf.violation(s)).collect();
    let n_violations = violations.iter().filter(|&&v| v > band).count();
    let max_violation = violations.iter().copied().fold(0.0, f64::max);
    let vertex_coverage = pf
        .vertices
        .par_iter()
        .enumerate()
        .map(|(k, v)| coverage(w, &batch, v, seed ^ (0x9e37_79b9_7f4a_7c15u64.wrapping_mul(k as u64 + 1))))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport {
        n_samples: count,
        n_violations,
        max_violation,
        diameter,
        hausdorff_inner: hausdorff_deficit(&hull, &pf),
        vertex_coverage,
        tolerance: tol,
    })
}

fn coverage(w: &Weights<f64>, batch: &SampleBatch, v: &Spectrum<f64>, seed: u64) -> Result<VertexCoverage> {
    let (idx, uniform_distance) = batch
        .spectra
        .iter()
        .enumerate()
        .map(|(i, s)| (i, s.distance(v)))
        .fold((0, f64::INFINITY), |b, c| if c.1 < b.1 { c } else { b });
    let mut starts = vec![replay_configuration(w, batch.seed, idx)];
    if w.len() == 3 {
        starts.extend(FixedPoint::ALL.iter().map(|&f| fixed_point_config::<f64>(f).to_vec()));
    } else {
        starts.push(vec![CPPoint::basis(1), CPPoint::basis(1)]);
        starts.push(vec![CPPoint::basis(1), CPPoint::basis(2)]);
    }
    let mut distance = uniform_distance;
    for (i, s) in starts.into_iter().enumerate() {
        distance = distance.min(refine_towards(w, v, s, seed.wrapping_add(i as u64))?);
    }
    Ok(VertexCoverage { vertex: v.to_array(), uniform_distance, distance })
}

/// Polytope shrunk towards its vertex centroid by `factor`, for harness self-tests.
pub fn shrink(p: &ChamberPolytope<f64>, factor: f64) -> ChamberPolytope<f64> {
    let n = p.vertices.len() as f64;
    let c: [f64; 3] = std::array::from_fn(|i| p.vertices.iter().map(|v| v.to_array()[i]).sum::<f64>() / n);
    let pts: Vec<ChamberPoint> = p
        .vertices
        .iter()
        .map(|v| {
            let a = v.to_array();
            to_chamber(&Spectrum::from_array(std::array::from_fn(|i| c[i] + factor * (a[i] - c[i]))))
        })
        .collect();
    hull2d(&pts)
}

/// Writes samples as CSV with columns `λ1,λ2,λ3,p,q`.
pub fn write_csv<W: Write>(batch: &SampleBatch, out: W) -> std::io::Result<()> {
    let mut wtr = csv::Writer::from_writer(out);
    wtr.write_record(["λ1", "λ2", "λ3", "p", "q"])?;
    for (s, c) in batch.spectra.iter().zip(&batch.chamber_points) {
        wtr.write_record([s.l1, s.l2, s.l3, c.p, c.q].map(|x| format!("{x:.15e}")))?;
    }
    wtr.flush()
}
