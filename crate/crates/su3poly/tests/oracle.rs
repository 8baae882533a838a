mod common;

use common::float;
use num_complex::Complex;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use su3poly::moment::{fubini_study_moment, Weights};
use su3poly::oracle::{empirical_polytope, haar_unitary, sample_batch, sample_cp2, verify};
use su3poly::polytope::{build_polytope, contains, distance_to_convex, hausdorff};
use su3poly::su3::to_chamber;
use su3poly::Hermitian3;

#[test]
fn first_draw_regression() {
    let p = sample_cp2(&mut ChaCha8Rng::seed_from_u64(42));
    let want = [
        Complex::new(0.7669451773489825, 0.0),
        Complex::new(0.20420071113455315, 0.19438798260722073),
        Complex::new(-0.5693294843340316, 0.09041247147999724),
    ];
    for (a, b) in p.z.iter().zip(want) {
        assert!((a - b).norm() < 1e-15);
    }
}

#[test]
fn uniform_measure_has_zero_mean_moment() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let n = 1_000_000;
    let mut acc = Hermitian3::<f64>::zero();
    for _ in 0..n {
        let z = sample_cp2(&mut rng);
        assert!((z.norm_sqr() - 1.0).abs() < 1e-12);
        acc = acc + fubini_study_moment(&z).unwrap();
    }
    assert!(acc.scale(&(1.0 / n as f64)).max_abs_entry() < 5e-3);
}

#[test]
fn sampling_is_unitarily_invariant() {
    // E|z1|^4 = 1/6 for the uniform measure, before and after a fixed rotation.
    let u = haar_unitary(&mut ChaCha8Rng::seed_from_u64(5));
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let n = 200_000;
    let (mut m0, mut m1) = (0.0, 0.0);
    for _ in 0..n {
        let z = sample_cp2(&mut rng);
        m0 += z.z[0].norm_sqr().powi(2);
        m1 += z.transform(&u).z[0].norm_sqr().powi(2);
    }
    assert!((m0 / n as f64 - 1.0 / 6.0).abs() < 3e-3);
    assert!((m1 / n as f64 - 1.0 / 6.0).abs() < 3e-3);
}

#[test]
fn batches_do_not_depend_on_thread_count() {
    let w = float(&[4, 2, -1]);
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| sample_batch(&w, 20_000, 77).unwrap())
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn two_factor_samples_lie_on_segment() {
    let w = Weights::new(vec![1.0, 1.0]).unwrap();
    let p = build_polytope(&w).unwrap();
    let (batch, _) = empirical_polytope(&w, 100_000, 2).unwrap();
    let seg = p.chamber_points();
    for c in &batch.chamber_points {
        assert!(distance_to_convex(c, &seg) < 1e-9);
    }
}

#[test]
fn region_c_samples_are_contained() {
    let w = float(&[4, 2, -1]);
    let p = build_polytope(&w).unwrap();
    let (batch, _) = empirical_polytope(&w, 100_000, 3).unwrap();
    assert!(batch.spectra.iter().all(|s| contains(&p, s, 1e-6)));
}

#[test]
fn aaa_verification_and_coverage() {
    let w = float(&[1, 1, 1]);
    let r = verify(&w, 100_000, 4, 1e-6).unwrap();
    assert_eq!(r.n_violations, 0);
    assert!(r.hausdorff_inner < 0.1 * r.diameter);
    let a = &r.vertex_coverage[0];
    assert_eq!(a.vertex, [2.0, -1.0, -1.0]);
    assert!(a.distance < 0.05);
}

#[test]
fn empirical_hulls_respect_star() {
    let w = float(&[7, 5, -3]);
    let (_, h) = empirical_polytope(&w, 100_000, 8).unwrap();
    let (_, hn) = empirical_polytope(&w.negated(), 100_000, 8).unwrap();
    assert!(hausdorff(&h.star(), &hn) < 0.05 * h.diameter());
    let pts: Vec<_> = h.star().vertices.iter().map(to_chamber).collect();
    assert_eq!(pts.len(), h.vertices.len());
}

#[test]
fn zero_weights_without_prediction() {
    let w = Weights::allowing_zero(vec![0.0, 0.0, 0.0]).unwrap();
    assert_eq!(verify(&w, 10, 0, 1e-6).unwrap_err(), su3poly::Error::PredictionUnavailable);
}
