//! Property tests for the numerical core and the mean operations.

use proptest::prelude::*;

use opmeans::hermit::{loewner_compare, HermitianMatrix, LoewnerRelation, DEFAULT_TOL};
use opmeans::means::{mean, representing_function, MeanKind, Weight};
use opmeans::sampling::{derive_seed, random_hpd, SampleConfig};

const KINDS: [MeanKind; 3] = [
    MeanKind::Arithmetic,
    MeanKind::Geometric,
    MeanKind::Harmonic,
];

/// Random Hermitian matrix, possibly indefinite: a PD draw shifted down.
fn random_hermitian(dim: usize, seed: u64, shift: f64) -> HermitianMatrix {
    let hpd = random_hpd(&SampleConfig::new(dim, seed)).unwrap();
    hpd.sub(&HermitianMatrix::identity(dim).scale(shift)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn eigh_reconstruction_and_orthonormality(dim in 1usize..=8, seed: u64, shift in 0.0..5.0) {
        let h = random_hermitian(dim, seed, shift);
        let d = h.eigh().unwrap();
        let bound = 100.0 * dim as f64 * f64::EPSILON;

        let resid = d.reconstruct().sub(&h).unwrap().fro_norm();
        prop_assert!(resid <= bound * h.fro_norm().max(1.0));

        // ||V* V - I||_F
        let v = &d.vectors;
        let gram = v.adjoint().mul(v).unwrap();
        let mut err = 0.0f64;
        for i in 0..dim {
            for j in 0..dim {
                let expect = if i == j { 1.0 } else { 0.0 };
                err += (gram[(i, j)] - num_complex::Complex64::new(expect, 0.0)).norm_sqr();
            }
        }
        prop_assert!(err.sqrt() <= bound);

        for w in d.eigenvalues.windows(2) {
            prop_assert!(w[0] <= w[1]);
        }
    }

    #[test]
    fn sqrt_squared_recovers_input(dim in 1usize..=6, seed: u64) {
        let h = random_hpd(&SampleConfig::new(dim, seed)).unwrap();
        let s = h.sqrt().unwrap();
        let sq = s.as_complex().mul(&s.as_complex()).unwrap().hermitize();
        prop_assert!(sq.sub(&h).unwrap().fro_norm() <= 1e-10 * h.fro_norm());
    }

    #[test]
    fn inverse_times_input_is_identity(dim in 1usize..=6, seed: u64) {
        let h = random_hpd(&SampleConfig::new(dim, seed)).unwrap();
        let prod = h.inverse().unwrap().as_complex().mul(&h.as_complex()).unwrap();
        let mut err = 0.0f64;
        for i in 0..dim {
            for j in 0..dim {
                let expect = if i == j { 1.0 } else { 0.0 };
                err += (prod[(i, j)] - num_complex::Complex64::new(expect, 0.0)).norm_sqr();
            }
        }
        prop_assert!(err.sqrt() <= 1e-8);
    }

    #[test]
    fn loewner_compare_antisymmetric(dim in 1usize..=6, seed: u64, shift in 0.0..5.0) {
        let a = random_hermitian(dim, seed, shift);
        let b = random_hermitian(dim, derive_seed(seed, 1), shift);
        let fwd = loewner_compare(&a, &b, DEFAULT_TOL).unwrap();
        let bwd = loewner_compare(&b, &a, DEFAULT_TOL).unwrap();
        prop_assert_eq!(fwd.margin_le, bwd.margin_ge);
        prop_assert_eq!(fwd.margin_ge, bwd.margin_le);
        let expected = match fwd.relation {
            LoewnerRelation::Le => LoewnerRelation::Ge,
            LoewnerRelation::Ge => LoewnerRelation::Le,
            other => other,
        };
        prop_assert_eq!(bwd.relation, expected);
    }

    #[test]
    fn psd_verdict_matches_2x2_closed_form(a in -5.0..5.0f64, b in -5.0..5.0f64, d in -5.0..5.0f64) {
        let h = HermitianMatrix::from_real(2, &[a, b, b, d]).unwrap();
        let verdict = h.psd_verdict(DEFAULT_TOL).unwrap();
        // lambda_min = (tr - sqrt(tr^2 - 4 det)) / 2
        let tr = a + d;
        let det = a * d - b * b;
        let closed = (tr - (tr * tr - 4.0 * det).sqrt()) / 2.0;
        prop_assert!((verdict.lambda_min - closed).abs() <= 1e-12);
    }

    #[test]
    fn boundary_weights_return_operands(dim in 1usize..=5, seed: u64) {
        let a = random_hpd(&SampleConfig::new(dim, seed)).unwrap();
        let b = random_hpd(&SampleConfig::new(dim, derive_seed(seed, 1))).unwrap();
        for kind in KINDS {
            let at0 = mean(kind, &a, &b, Weight::new(0.0).unwrap()).unwrap();
            let at1 = mean(kind, &a, &b, Weight::new(1.0).unwrap()).unwrap();
            prop_assert!(at0.sub(&a).unwrap().fro_norm() <= 1e-12 * a.fro_norm());
            prop_assert!(at1.sub(&b).unwrap().fro_norm() <= 1e-12 * b.fro_norm());
        }
    }

    #[test]
    fn weight_swap_symmetry(dim in 1usize..=5, seed: u64, nu in 0.0..=1.0f64) {
        let a = random_hpd(&SampleConfig::new(dim, seed)).unwrap();
        let b = random_hpd(&SampleConfig::new(dim, derive_seed(seed, 1))).unwrap();
        for kind in KINDS {
            let fwd = mean(kind, &a, &b, Weight::new(nu).unwrap()).unwrap();
            let swapped = mean(kind, &b, &a, Weight::new(1.0 - nu).unwrap()).unwrap();
            prop_assert!(
                fwd.sub(&swapped).unwrap().fro_norm() <= 1e-10 * fwd.fro_norm().max(1.0),
                "kind {:?} nu {}", kind, nu
            );
        }
    }

    #[test]
    fn one_by_one_matches_representing_function(
        a in 0.01..100.0f64, b in 0.01..100.0f64, nu in 0.0..=1.0f64,
    ) {
        let ma = HermitianMatrix::diagonal(&[a]);
        let mb = HermitianMatrix::diagonal(&[b]);
        let w = Weight::new(nu).unwrap();
        for kind in KINDS {
            let matrix = mean(kind, &ma, &mb, w).unwrap().get(0, 0).re;
            let scalar = a * representing_function(kind, w, b / a).unwrap();
            prop_assert!(
                (matrix - scalar).abs() <= 1e-12 * scalar.abs().max(1.0),
                "kind {:?}: {} vs {}", kind, matrix, scalar
            );
        }
    }

    #[test]
    fn scalar_mean_ordering(nu in 0.0..=1.0f64, exp in -4.0..4.0f64) {
        let t = 10.0f64.powf(exp);
        let w = Weight::new(nu).unwrap();
        let am = representing_function(MeanKind::Arithmetic, w, t).unwrap();
        let gm = representing_function(MeanKind::Geometric, w, t).unwrap();
        let hm = representing_function(MeanKind::Harmonic, w, t).unwrap();
        let tol = 1e-12 * am.max(1.0);
        prop_assert!(am >= gm - tol);
        prop_assert!(gm >= hm - tol);
    }
}

#[test]
fn congruence_invariance_of_geometric_mean() {
    // T (A #_nu B) T* == (T A T*) #_nu (T B T*) for invertible T.
    for seed in 0..30u64 {
        let dim = 2 + (seed % 4) as usize;
        let a = random_hpd(&SampleConfig::new(dim, derive_seed(seed, 10))).unwrap();
        let b = random_hpd(&SampleConfig::new(dim, derive_seed(seed, 11))).unwrap();
        // T = H U: Hermitian PD (cond <= 100) times a random unitary, so T
        // is invertible, well conditioned, and not Hermitian itself.
        let h = random_hpd(&SampleConfig::new(dim, derive_seed(seed, 12))).unwrap();
        let u = random_hpd(&SampleConfig::new(dim, derive_seed(seed, 13)))
            .unwrap()
            .eigh()
            .unwrap()
            .vectors;
        let t = h.as_complex().mul(&u).unwrap();
        let t_star = t.adjoint();

        let nu = Weight::new(0.25 + 0.5 * (seed as f64 / 30.0)).unwrap();
        let gm = mean(MeanKind::Geometric, &a, &b, nu).unwrap();
        let lhs = t.mul(&gm.as_complex()).unwrap().mul(&t_star).unwrap().hermitize();

        let ta = t.mul(&a.as_complex()).unwrap().mul(&t_star).unwrap().hermitize();
        let tb = t.mul(&b.as_complex()).unwrap().mul(&t_star).unwrap().hermitize();
        let rhs = mean(MeanKind::Geometric, &ta, &tb, nu).unwrap();

        let err = lhs.sub(&rhs).unwrap().fro_norm() / rhs.fro_norm();
        assert!(err <= 1e-8, "seed {seed}: relative error {err:.3e}");
    }
}

#[test]
fn commuting_reduction_matches_eigenvalue_ratios() {
    use opmeans::sampling::random_commuting_pair_with_spectra;
    for seed in 0..30u64 {
        let dim = 2 + (seed % 3) as usize;
        let (a, b, a_eigs, b_eigs) =
            random_commuting_pair_with_spectra(&SampleConfig::new(dim, seed)).unwrap();
        for kind in KINDS {
            let nu = 0.3;
            let w = Weight::new(nu).unwrap();
            let m = mean(kind, &a, &b, w).unwrap();
            let mut got = m.eigh().unwrap().eigenvalues;
            let mut expected: Vec<f64> = a_eigs
                .iter()
                .zip(&b_eigs)
                .map(|(&x, &y)| x * representing_function(kind, w, y / x).unwrap())
                .collect();
            expected.sort_by(|p, q| p.partial_cmp(q).unwrap());
            got.sort_by(|p, q| p.partial_cmp(q).unwrap());
            for (g, e) in got.iter().zip(&expected) {
                assert!(
                    (g - e).abs() <= 1e-10 * e.abs().max(1.0),
                    "seed {seed} kind {kind:?}: {g} vs {e}"
                );
            }
        }
    }
}
