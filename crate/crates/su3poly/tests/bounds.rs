mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use su3poly::bounds::{check_spectrum, realize, sum_bounds_three, sum_bounds_two, sum_polytope_two, DoubleEigMatrixSpec};
use su3poly::oracle::{haar_unitary, sample_cp2};
use su3poly::polytope::hausdorff;
use su3poly::su3::spectrum;
use su3poly::{Hermitian3, Spectrum};

fn random_matrix(spec: &DoubleEigMatrixSpec<f64>, rng: &mut ChaCha8Rng) -> Hermitian3<f64> {
    spec.matrix(&sample_cp2(rng)).unwrap()
}

fn nearest_index(s: &[f64; 3], x: f64) -> usize {
    (0..3).min_by(|&i, &j| (s[i] - x).abs().partial_cmp(&(s[j] - x).abs()).unwrap()).unwrap()
}

#[test]
fn two_matrix_bounds_under_rotation() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for (la, lb) in [(1.0, 1.0), (1.0, -1.0), (0.7, 2.3), (-1.5, -0.4), (-2.0, 0.5)] {
        let (a, b) = (DoubleEigMatrixSpec::new(la), DoubleEigMatrixSpec::new(lb));
        let bounds = sum_bounds_two(&a, &b);
        let (lo, hi) = bounds.lambda2_interval;
        for _ in 0..1000 {
            let m = random_matrix(&a, &mut rng) + random_matrix(&b, &mut rng);
            let s = spectrum(&m).to_array();
            let k = nearest_index(&s, bounds.lambda1);
            assert!((s[k] - bounds.lambda1).abs() < 1e-9);
            let others: Vec<f64> = (0..3).filter(|&i| i != k).map(|i| s[i]).collect();
            assert!(others.iter().any(|&x| x >= lo - 1e-9 && x <= hi + 1e-9), "{la} {lb} {s:?}");
        }
    }
}

#[test]
fn two_matrix_segment_agrees_with_interval() {
    for (la, lb) in [(1.0, 1.0), (1.0, -1.0), (0.3, -2.0)] {
        let (a, b) = (DoubleEigMatrixSpec::new(la), DoubleEigMatrixSpec::new(lb));
        let seg = sum_polytope_two(&a, &b).unwrap();
        let r = sum_bounds_two(&a, &b);
        for v in &seg.vertices {
            let s = v.to_array();
            let k = nearest_index(&s, r.lambda1);
            assert!((s[k] - r.lambda1).abs() < 1e-12);
            let others: Vec<f64> = (0..3).filter(|&i| i != k).map(|i| s[i]).collect();
            assert!(others.iter().any(|&x| (x - r.lambda2_interval.0).abs() < 1e-12 || (x - r.lambda2_interval.1).abs() < 1e-12));
        }
    }
}

#[test]
fn three_matrix_sums_stay_inside() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..50 {
        let specs: Vec<DoubleEigMatrixSpec<f64>> =
            (0..3).map(|_| DoubleEigMatrixSpec::new(rng.random_range(-2.0..2.0))).collect();
        for _ in 0..20 {
            let u = haar_unitary(&mut rng);
            let m = specs
                .iter()
                .map(|s| random_matrix(s, &mut rng).conjugate_by(&u))
                .fold(Hermitian3::zero(), |acc, x| acc + x);
            let s = spectrum(&m);
            assert!(check_spectrum(&specs[0], &specs[1], &specs[2], &s, 1e-9).unwrap());
        }
    }
}

#[test]
fn vanishing_third_matrix_is_the_segment() {
    let (a, b, c) = (DoubleEigMatrixSpec::new(0.8), DoubleEigMatrixSpec::new(-1.7), DoubleEigMatrixSpec::new(0.0));
    let p3 = sum_bounds_three(&a, &b, &c).unwrap();
    let p2 = sum_polytope_two(&a, &b).unwrap();
    assert!(hausdorff(&p3, &p2) < 1e-12);
}

#[test]
fn realizes_interior_targets() {
    let one = DoubleEigMatrixSpec::new(1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let p = sum_bounds_three(&one, &one, &one).unwrap();
    for _ in 0..5 {
        let wts: Vec<f64> = (0..3).map(|_| rng.random_range(0.05..1.0)).collect();
        let total: f64 = wts.iter().sum();
        let t: [f64; 3] = std::array::from_fn(|i| {
            p.vertices.iter().zip(&wts).map(|(v, w)| v.to_array()[i] * w).sum::<f64>() / total
        });
        let target = Spectrum::from_array(t);
        let r = realize(&one, &one, &one, &target, 10_000, 3).unwrap();
        assert!(r.distance < 1e-6);
        for m in &r.matrices {
            let s = spectrum(m);
            assert!((s.l1 - 1.0).abs() < 1e-10 && (s.l2 - 1.0).abs() < 1e-10 && (s.l3 + 2.0).abs() < 1e-10);
        }
        let sum = r.matrices.iter().cloned().fold(Hermitian3::zero(), |acc, x| acc + x);
        assert!(spectrum(&sum).distance(&target) < 1e-6);
    }
}
