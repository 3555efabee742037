// SPDX-License-Identifier: Apache-2.0

use lindproj::analysis::{pauli_decompose, state_diagnostics, sweep, trace_distance};
use lindproj::config::{parse_config, scenario_to_json};
use lindproj::linalg::{ComplexMatrix, C64};
use lindproj::model::{Hamiltonian, Scenario};
use lindproj::propagate::{
    approx_propagate_closed, approx_propagate_closed_with, approx_propagate_expanded,
    approx_propagate_product, exact_propagate, ExactPropagator, PairSum,
};
use lindproj::random::{random_density_matrix, random_family, random_pure_state, random_scenario};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn approximation_preserves_state_constraints(seed in any::<u64>(), n in 2usize..6, t in 0.0f64..8.0) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let s = random_scenario(n, 2.0, vec![0.0], &mut r);
        let d = state_diagnostics(&approx_propagate_closed(&s, t).unwrap().state).unwrap();
        prop_assert!((d.trace - C64::new(1.0, 0.0)).norm() <= 1e-12);
        prop_assert!(d.hermiticity_residual <= 1e-12);
        prop_assert!(d.min_eigenvalue >= -1e-10);
        prop_assert!(d.purity >= 1.0 / n as f64 - 1e-10 && d.purity <= 1.0 + 1e-10);
    }

    #[test]
    fn exact_path_is_physical_and_a_semigroup(seed in any::<u64>(), n in 2usize..5, t1 in 0.0f64..3.0, t2 in 0.0f64..3.0) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let s = random_scenario(n, 1.0, vec![0.0], &mut r);
        let exact = ExactPropagator::new(&s).unwrap();
        let full = exact.propagate(t1 + t2).unwrap().state;
        let d = state_diagnostics(&full).unwrap();
        prop_assert!(d.hermiticity_residual <= 1e-8);
        prop_assert!((d.trace - C64::new(1.0, 0.0)).norm() <= 1e-8);
        prop_assert!(d.min_eigenvalue >= -1e-8);
        let stepped = exact.propagate_from(&exact.propagate(t1).unwrap().state, t2).unwrap();
        prop_assert!(full.distance(&stepped) <= 1e-10);
    }

    #[test]
    fn all_approximate_forms_agree(seed in any::<u64>(), n in 2usize..6, t in 0.0f64..5.0) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let s = random_scenario(n, 1.0, vec![0.0], &mut r);
        let ordered = approx_propagate_closed_with(&s, t, PairSum::Ordered).unwrap().state;
        let symmetric = approx_propagate_closed_with(&s, t, PairSum::Symmetric).unwrap().state;
        prop_assert!(ordered.distance(&symmetric) <= 1e-14);
        prop_assert!(approx_propagate_product(&s, t).unwrap().state.distance(&symmetric) <= 1e-12);
        prop_assert!(approx_propagate_expanded(&s, t).unwrap().state.distance(&symmetric) <= 1e-12);
    }

    #[test]
    fn trace_distance_is_a_metric(seed in any::<u64>(), n in 2usize..6) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let [a, b, c] = [(); 3].map(|_| random_density_matrix(n, &mut r).into_matrix());
        let ab = trace_distance(&a, &b).unwrap();
        prop_assert!((ab - trace_distance(&b, &a).unwrap()).abs() <= 1e-14);
        prop_assert!(ab <= trace_distance(&a, &c).unwrap() + trace_distance(&c, &b).unwrap() + 1e-10);
        prop_assert!((0.0..=1.0 + 1e-10).contains(&ab));
    }

    #[test]
    fn sweep_ignores_member_order(seed in any::<u64>(), n in 3usize..6) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let s = random_scenario(n, 1.0, vec![0.1, 0.5, 1.5], &mut r);
        let mut order: Vec<usize> = (0..s.family.len()).collect();
        order.reverse();
        let permuted = Scenario::new(
            s.hamiltonian.clone(),
            s.family.permuted(&order).unwrap(),
            s.initial_state.clone(),
            s.time_grid.clone(),
        )
        .unwrap();
        for (a, b) in sweep(&s).unwrap().into_iter().zip(sweep(&permuted).unwrap()) {
            let (a, b) = (a.unwrap(), b.unwrap());
            prop_assert!((a.frobenius_gap - b.frobenius_gap).abs() <= 1e-12);
            prop_assert!((a.trace_distance - b.trace_distance).abs() <= 1e-12);
            prop_assert!((a.bch_indicator - b.bch_indicator).abs() <= 1e-12 * a.bch_indicator.max(1.0));
        }
    }

    #[test]
    fn pure_decoherence_pauli_coefficients_match(seed in any::<u64>(), t in 0.0f64..4.0) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let fam = random_family(4, &mut r);
        let rho = if r.gen_bool(0.5) { random_pure_state(4, &mut r) } else { random_density_matrix(4, &mut r) };
        let s = Scenario::new(Hamiltonian::zero(4), fam, rho, vec![t]).unwrap();
        let exact = pauli_decompose(&exact_propagate(&s, t).unwrap().state.hermitian_part()).unwrap();
        let approx = pauli_decompose(&approx_propagate_closed(&s, t).unwrap().state).unwrap();
        prop_assert!(exact.max_abs_diff(&approx) <= 1e-10);
    }

    #[test]
    fn json_round_trip_reproduces_output(seed in any::<u64>(), n in 2usize..5) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let s = random_scenario(n, 1.0, vec![0.0, 0.3, 1.1], &mut r);
        let back = parse_config(&scenario_to_json(&s)).unwrap();
        prop_assert_eq!(&back, &s);
        for &t in &s.time_grid {
            let a = approx_propagate_closed(&s, t).unwrap().state;
            let b = approx_propagate_closed(&back, t).unwrap().state;
            prop_assert!(a.distance(&b) <= 1e-14);
            let a = exact_propagate(&s, t).unwrap().state;
            let b = exact_propagate(&back, t).unwrap().state;
            prop_assert!(a.distance(&b) <= 1e-14);
        }
    }
}

#[test]
fn commuting_hamiltonian_is_exact() {
    // H diagonal in the projector basis commutes with every P_j.
    let s = lindproj::config::presets::load("three-projector").unwrap();
    let h = ComplexMatrix::real_diag(&[0.3, -0.7, 1.1, 1.1]);
    let s = Scenario::new(Hamiltonian::new(h).unwrap(), s.family.clone(), s.initial_state.clone(), s.time_grid.clone()).unwrap();
    for rec in sweep(&s).unwrap() {
        assert!(rec.unwrap().trace_distance <= 1e-10);
    }
}

#[test]
fn gaps_scale_quadratically_on_driven_qubit() {
    let s = lindproj::config::presets::load("driven-qubit").unwrap().with_time_grid(vec![0.05, 0.1, 0.2]).unwrap();
    let gaps: Vec<f64> = sweep(&s).unwrap().into_iter().map(|r| r.unwrap().frobenius_gap).collect();
    for w in gaps.windows(2) {
        let ratio = w[1] / w[0];
        assert!((3.8..4.2).contains(&ratio), "{gaps:?}");
    }
}
