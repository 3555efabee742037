// SPDX-License-Identifier: Apache-2.0

use lindproj::linalg::{commutator, kron, vectorize, devectorize, ComplexMatrix, C64};
use lindproj::model::{
    apply_dissipator, apply_dissipator_lindblad_form, build_dissipator_superop,
    build_hamiltonian_superop, build_r, complement, Hamiltonian,
};
use lindproj::random::{random_density_matrix, random_family, random_hermitian};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn superoperators_match_matrix_actions(seed in any::<u64>(), n in 2usize..6) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let fam = random_family(n, &mut r);
        let rho = random_density_matrix(n, &mut r).into_matrix();

        let d = apply_dissipator(&fam, &rho).unwrap();
        let d_alt = apply_dissipator_lindblad_form(&fam, &rho).unwrap();
        prop_assert!(d.distance(&d_alt) <= 1e-12);

        let b = build_dissipator_superop(&fam);
        let via_super = devectorize(&b.matrix().apply(&vectorize(&rho).unwrap()).unwrap(), n).unwrap();
        prop_assert!(via_super.distance(&(-&d)) <= 1e-12);

        let h = Hamiltonian::new(random_hermitian(n, 1.0, &mut r)).unwrap();
        let a = build_hamiltonian_superop(&h);
        let expected = commutator(h.matrix(), &rho).unwrap().scale(C64::new(0.0, -1.0));
        prop_assert!(a.apply(&rho).unwrap().distance(&expected) <= 1e-12);
        prop_assert!((&a.matrix().adjoint() + a.matrix()).frobenius_norm() <= 1e-14);
    }

    #[test]
    fn r_are_commuting_projectors(seed in any::<u64>(), n in 3usize..7) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let fam = random_family(n, &mut r);
        let ps: Vec<_> = fam.members().iter().map(|m| m.projector.clone()).collect();
        let rs: Vec<_> = ps.iter().map(|p| build_r(p).unwrap()).collect();
        for (j, rj) in rs.iter().enumerate() {
            prop_assert!(rj.is_projector(1e-12));
            for (k, rk) in rs.iter().enumerate().skip(j + 1) {
                let c = commutator(rj.matrix(), rk.matrix()).unwrap();
                prop_assert!(c.frobenius_norm() <= 1e-12);
                let expected = &kron(&ps[j], &ps[k].transpose()) + &kron(&ps[k], &ps[j].transpose());
                prop_assert!((rj.matrix() * rk.matrix()).distance(&expected) <= 1e-12);
                for rl in rs.iter().skip(k + 1) {
                    let triple = &(rj.matrix() * rk.matrix()) * rl.matrix();
                    prop_assert!(triple.frobenius_norm() <= 1e-12);
                }
            }
        }
    }

    #[test]
    fn complement_is_an_involution(seed in any::<u64>(), n in 2usize..6) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let fam = random_family(n, &mut r);
        for m in fam.members() {
            let p = &m.projector;
            let q = complement(p).unwrap();
            prop_assert!((p * &q).frobenius_norm() <= 1e-10);
            prop_assert!((&q * p).frobenius_norm() <= 1e-10);
            // Exact up to one rounding of 1 − (1 − x) on the diagonal.
            prop_assert!(complement(&q).unwrap().distance(p) <= 4.0 * f64::EPSILON * n as f64);
        }
        let id = ComplexMatrix::identity(n);
        prop_assert_eq!(complement(&complement(&id).unwrap()).unwrap(), id);
    }
}
