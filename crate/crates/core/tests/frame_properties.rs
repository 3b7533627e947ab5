use gframe_core::duals::{extremal_frame, random_alternate_dual, verify_alternate_dual};
use gframe_core::generators::{
    embed_vector_frame, nearly_parseval_gframe, random_gframe, random_parseval_gframe,
};
use gframe_core::identities::{
    dual_gap_closed_form, frobenius_dual_decomposition, najati_gap, najati_gap_closed_form,
    parseval_approx_decomposition, parseval_weighted_energy, pointwise_dual_decomposition,
};
use gframe_core::numeric::vector;
use gframe_core::random::GaussianStream;
use gframe_core::{ComplexMatrix, GFrame};
use proptest::prelude::*;

/// `(n, counts)` with `sum counts >= n`.
fn shape(max_n: usize, max_ops: usize) -> impl Strategy<Value = (usize, Vec<usize>)> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(1..=n, 1..=max_ops).prop_map(move |mut counts| {
            let total: usize = counts.iter().sum();
            if total < n {
                counts.push(n - total);
            }
            (n, counts)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn energy_matches_quadratic_form((n, counts) in shape(8, 5), seed in any::<u64>()) {
        let f = random_gframe(n, &counts, seed).unwrap();
        let s = f.frame_operator().unwrap();
        let x = GaussianStream::new(seed ^ 1).vector(n);
        let quad = vector::inner(&s.matrix.mul_vec(&x).unwrap(), &x).re;
        let energy = f.energy_at(&x).unwrap();
        prop_assert!((quad - energy).abs() <= 1e-10 * (1.0 + vector::norm_sqr(&x)) * (1.0 + quad));
    }

    #[test]
    fn bounds_are_attained_by_eigenvectors((n, counts) in shape(8, 5), seed in any::<u64>()) {
        let f = random_gframe(n, &counts, seed).unwrap();
        let s = f.frame_operator().unwrap();
        let b = s.bounds().unwrap();
        let top = s.eig.eigenvectors.column(0);
        let bottom = s.eig.eigenvectors.column(n - 1);
        prop_assert!((f.energy_at(&top).unwrap() - b.upper).abs() <= 1e-9 * (1.0 + b.upper));
        prop_assert!((f.energy_at(&bottom).unwrap() - b.lower).abs() <= 1e-9 * (1.0 + b.upper));
    }

    #[test]
    fn frobenius_energy_lies_in_bound_interval((n, counts) in shape(8, 5), seed in any::<u64>()) {
        let f = random_gframe(n, &counts, seed).unwrap();
        let b = f.validate().unwrap();
        let e = f.frobenius_energy();
        let slack = 1e-10 * (1.0 + e);
        prop_assert!(e.is_finite());
        prop_assert!(b.lower * n as f64 <= e + slack && e <= b.upper * n as f64 + slack);
    }

    #[test]
    fn canonical_parseval_budget((n, counts) in shape(10, 5), seed in any::<u64>()) {
        let g = random_gframe(n, &counts, seed).unwrap().canonical_parseval().unwrap();
        prop_assert!((g.frobenius_energy() - n as f64).abs() <= 1e-8 * n as f64);
        prop_assert!(g.frame_operator().unwrap().parseval_deviation() <= 1e-8 * n as f64);
    }

    #[test]
    fn synthesis_is_adjoint_of_analysis((n, counts) in shape(8, 5), seed in any::<u64>()) {
        let f = random_gframe(n, &counts, seed).unwrap();
        let mut s = GaussianStream::new(seed.wrapping_add(7));
        let x = s.vector(n);
        let y: Vec<_> = counts.iter().map(|&k| s.vector(k)).collect();
        let lhs = vector::inner(&f.synthesis(&y).unwrap(), &x);
        let rhs: gframe_core::Complex = y
            .iter()
            .zip(f.analysis(&x).unwrap())
            .map(|(yi, lx)| vector::inner(yi, &lx))
            .sum();
        prop_assert!((lhs - rhs).abs() <= 1e-10 * (1.0 + lhs.abs()));

        let sx = f.frame_operator().unwrap().matrix.mul_vec(&x).unwrap();
        let round = f.synthesis(&f.analysis(&x).unwrap()).unwrap();
        prop_assert!(vector::distance_sqr(&sx, &round).sqrt() <= 1e-10 * (1.0 + vector::norm(&sx)));
    }

    #[test]
    fn reconstruction_recovers_input((n, counts) in shape(10, 5), seed in any::<u64>()) {
        let f = random_gframe(n, &counts, seed).unwrap();
        let x = GaussianStream::new(seed ^ 0xabc).vector(n);
        let back = f.reconstruct(&x).unwrap();
        prop_assert!(vector::distance_sqr(&back, &x).sqrt() <= 1e-8 * vector::norm(&x));
    }

    #[test]
    fn vector_frame_embedding(n in 1usize..6, extra in 0usize..5, seed in any::<u64>()) {
        let mut s = GaussianStream::new(seed);
        let vs: Vec<_> = (0..n + extra).map(|_| s.vector(n)).collect();
        let f = embed_vector_frame(&vs).unwrap();
        let mut expected = ComplexMatrix::zeros(n, n);
        for v in &vs {
            for i in 0..n {
                for j in 0..n {
                    expected[(i, j)] += v[i] * v[j].conj();
                }
            }
        }
        let got = f.frame_operator().unwrap().matrix;
        prop_assert!(got.sub(&expected).unwrap().frobenius_norm() <= 1e-12 * (1.0 + expected.frobenius_norm()));

        let x = s.vector(n);
        let classical: f64 = vs.iter().map(|v| vector::inner(&x, v).norm_sqr()).sum();
        prop_assert!((classical - f.energy_at(&x).unwrap()).abs() <= 1e-12 * (1.0 + classical));
    }

    #[test]
    fn parseval_decomposition_identity((n, counts) in shape(16, 8), seed in any::<u64>()) {
        let lam = random_gframe(n, &counts, seed).unwrap();
        let gam = random_parseval_gframe(n, &counts, seed ^ 0x5555).unwrap();
        let d = parseval_approx_decomposition(&lam, &gam).unwrap();
        prop_assert!(d.residual() <= 1e-7 * (1.0 + d.total));
        prop_assert!(d.total - d.canonical_gap >= -1e-9);
    }

    #[test]
    fn closed_forms_agree((n, counts) in shape(10, 5), seed in any::<u64>()) {
        let lam = random_gframe(n, &counts, seed).unwrap();
        let s = lam.frame_operator().unwrap();
        prop_assert!((najati_gap(&lam).unwrap() - najati_gap_closed_form(&s)).abs() <= 1e-8);
        let canonical = frobenius_dual_decomposition(&lam, &lam.canonical_dual().unwrap()).unwrap().canonical;
        prop_assert!((canonical - dual_gap_closed_form(&s)).abs() <= 1e-8);
    }

    #[test]
    fn weighted_energy_is_frame_independent(n in 1usize..8, rows in 1usize..5, seed in any::<u64>()) {
        let l = GaussianStream::new(seed).matrix(rows, n);
        let a = parseval_weighted_energy(&l, &random_parseval_gframe(n, &[n, 2], seed).unwrap()).unwrap();
        let b = parseval_weighted_energy(&l, &random_parseval_gframe(n, &vec![1; n], seed ^ 3).unwrap()).unwrap();
        let tol = 1e-7 * (1.0 + l.frobenius_norm_sq());
        prop_assert!((a - b).abs() <= tol);
        prop_assert!((a - l.frobenius_norm_sq()).abs() <= tol);
    }

    #[test]
    fn random_duals_solve_the_dual_equation(
        (n, counts) in shape(16, 6),
        magnitude in 0.0f64..100.0,
        seed in any::<u64>(),
    ) {
        let lam = random_gframe(n, &counts, seed).unwrap();
        let gam = random_alternate_dual(&lam, magnitude, seed ^ 9).unwrap();
        prop_assert!(verify_alternate_dual(&lam, &gam).unwrap().residual <= 1e-8 * n as f64);
    }

    #[test]
    fn pointwise_identity_and_minimality(
        (n, counts) in shape(8, 5),
        magnitude in 0.01f64..10.0,
        seed in any::<u64>(),
    ) {
        let lam = random_gframe(n, &counts, seed).unwrap();
        let gam = random_alternate_dual(&lam, magnitude, seed ^ 17).unwrap();
        let mut s = GaussianStream::new(seed ^ 23);
        for _ in 0..10 {
            let x = s.vector(n);
            let d = pointwise_dual_decomposition(&lam, &gam, &x).unwrap();
            prop_assert!(d.identity_residual() <= 1e-8 * (1.0 + d.total));
            prop_assert!(d.total >= d.canonical - 1e-9);
        }
    }

    #[test]
    fn nearly_parseval_epsilon_is_exact(n in 2usize..=16, eps in 0.0f64..=0.95, seed in any::<u64>()) {
        let f = nearly_parseval_gframe(n, &[n, 1], eps, seed).unwrap();
        let got = f.validate().unwrap().epsilon.unwrap();
        prop_assert!((got - eps).abs() <= 1e-9);
    }
}

#[test]
fn extremal_frames_attain_both_bounds() {
    use gframe_core::duals::{dual_proximity_bound, parseval_proximity_bound};
    for n in 1..=16 {
        for eps in [0.0, 0.05, 0.19, 0.5, 0.9] {
            let f = extremal_frame(n, eps).unwrap();
            let p = parseval_proximity_bound(&f).unwrap();
            let d = dual_proximity_bound(&f).unwrap();
            assert!((p.gap - p.bound).abs() <= 1e-9 * n as f64, "{n} {eps} {p:?}");
            assert!((d.gap - d.bound).abs() <= 1e-9 * n as f64, "{n} {eps} {d:?}");
        }
    }
}

/// Pulling every eigenvalue of a sub-Parseval spectrum toward `1 - e` can only
/// enlarge the canonical-dual gap, since `(l - 1)^2 / l` decreases on `(0, 1]`.
#[test]
fn dual_gap_grows_as_spectrum_shrinks_toward_lower_edge() {
    let eps = 0.4;
    let mut s = GaussianStream::new(31);
    for _ in 0..50 {
        let n = 2 + (s.uniform() * 10.0) as usize;
        let spectrum: Vec<f64> = (0..n).map(|_| s.uniform_open(1.0 - eps, 1.0)).collect();
        let mut previous = f64::NEG_INFINITY;
        for step in 0..=10 {
            let t = step as f64 / 10.0;
            let shrunk: Vec<f64> = spectrum
                .iter()
                .map(|&l| (1.0 - t) * l + t * (1.0 - eps))
                .collect();
            let ops = shrunk
                .iter()
                .enumerate()
                .map(|(k, &l)| {
                    let mut row = ComplexMatrix::zeros(1, n);
                    row[(0, k)] = l.sqrt().into();
                    row
                })
                .collect();
            let f = GFrame::new(n, ops).unwrap();
            let gap = frobenius_dual_decomposition(&f, &f.canonical_dual().unwrap())
                .unwrap()
                .canonical;
            assert!(gap >= previous - 1e-12);
            previous = gap;
        }
        let bound = n as f64 * eps * eps / (1.0 - eps);
        assert!(previous <= bound + 1e-9 * n as f64);
    }
}
