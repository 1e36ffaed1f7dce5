use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hyperalpha::combinatorics::{fiedler_quotient, lambda2, symmetric_eigenvalues, Graph};

fn reference(matrix: &[f64], n: usize) -> Vec<f64> {
    let mut values: Vec<f64> = SymmetricEigen::new(DMatrix::from_row_slice(n, n, matrix))
        .eigenvalues
        .iter()
        .copied()
        .collect();
    values.sort_by(f64::total_cmp);
    values
}

fn assert_close(ours: &[f64], theirs: &[f64], scale: f64) {
    assert_eq!(ours.len(), theirs.len());
    for (a, b) in ours.iter().zip(theirs) {
        assert!(
            (a - b).abs() <= 1e-8 * scale.max(1.0),
            "{ours:?} vs {theirs:?}"
        );
    }
}

#[test]
fn jacobi_matches_reference_on_random_symmetric_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..60 {
        let n = rng.gen_range(1..=14);
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = rng.gen_range(-5.0..5.0);
                a[i * n + j] = v;
                a[j * n + i] = v;
            }
        }
        let norm = a.iter().map(|v| v * v).sum::<f64>().sqrt();
        assert_close(&symmetric_eigenvalues(&a, n), &reference(&a, n), norm);
    }
}

#[test]
fn graph_laplacian_spectra_match_reference() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..40 {
        let n = rng.gen_range(2..=16);
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|_| rng.gen_bool(0.35))
            .collect();
        let g = Graph::new(n, pairs).unwrap();
        let lap = g.laplacian_matrix();
        let theirs = reference(&lap, n);
        assert_close(&symmetric_eigenvalues(&lap, n), &theirs, n as f64);
        assert!((lambda2(&g).unwrap() - theirs[1].max(0.0)).abs() <= 1e-8 * n as f64);
    }
}

#[test]
fn known_spectra() {
    let path = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
    let expected = 2.0 - 2f64.sqrt();
    assert!((lambda2(&path).unwrap() - expected).abs() < 1e-10);
    let complete = Graph::new(5, (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j)))).unwrap();
    assert!((lambda2(&complete).unwrap() - 5.0).abs() < 1e-10);
}

/// Gradient descent on the Rayleigh quotient over vectors orthogonal to the
/// all-ones vector; converges to the second eigenvalue.
fn descend_quotient(g: &Graph, rng: &mut ChaCha8Rng) -> f64 {
    let n = g.n();
    let lap = g.laplacian_matrix();
    let max_degree = g.degrees().into_iter().max().unwrap_or(1).max(1) as f64;
    let step = 1.0 / (4.0 * max_degree);
    let project = |x: &mut Vec<f64>| {
        let mean = x.iter().sum::<f64>() / n as f64;
        x.iter_mut().for_each(|v| *v -= mean);
        let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        x.iter_mut().for_each(|v| *v /= norm);
    };
    let mut x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    project(&mut x);
    for _ in 0..20_000 {
        let lx: Vec<f64> = (0..n)
            .map(|i| (0..n).map(|j| lap[i * n + j] * x[j]).sum())
            .collect();
        let q: f64 = lx.iter().zip(&x).map(|(a, b)| a * b).sum();
        for i in 0..n {
            x[i] -= step * 2.0 * (lx[i] - q * x[i]);
        }
        project(&mut x);
    }
    fiedler_quotient(g, &x).unwrap()
}

#[test]
fn lambda2_is_the_minimum_fiedler_quotient() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..30 {
        let n = rng.gen_range(2..=8);
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        let g = Graph::new(n, pairs).unwrap();
        let best = descend_quotient(&g, &mut rng);
        let l2 = lambda2(&g).unwrap();
        assert!(
            (best - l2).abs() <= 1e-6,
            "optimized quotient {best} vs lambda2 {l2}"
        );
    }
}
