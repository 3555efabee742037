// SPDX-License-Identifier: Apache-2.0

//! Rank-2 projector on two qubits, built from orthonormal vectors, with the
//! state followed through its Pauli coefficients.
//!
//! cargo run -p lindproj --example extended_rank2

use lindproj::analysis::pauli_decompose;
use lindproj::linalg::{ComplexVector, C64};
use lindproj::model::{DensityMatrix, Hamiltonian, ProjectorFamily, ProjectorInput, Scenario};
use lindproj::propagate::{ClosedFormPropagator, ExactPropagator};

fn basis(amplitudes: [f64; 4]) -> lindproj::Result<ComplexVector> {
    ComplexVector::new(amplitudes.iter().map(|&a| C64::new(a, 0.0)).collect())
}

fn main() -> lindproj::Result<()> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    // Range spanned by |Φ+> and |Ψ+>.
    let family = ProjectorFamily::from_inputs(
        4,
        vec![(ProjectorInput::Vectors(vec![basis([s, 0.0, 0.0, s])?, basis([0.0, s, s, 0.0])?]), 1.0)],
    )?;
    println!("rank of P: {:.3}", family.members()[0].projector.trace().re);

    let rho0 = DensityMatrix::pure(&basis([1.0, 0.0, 0.0, 0.0])?)?;
    let scenario = Scenario::new(Hamiltonian::zero(4), family, rho0, vec![0.0, 0.5, 1.0, 2.0, 4.0])?;
    let exact = ExactPropagator::new(&scenario)?;
    let approx = ClosedFormPropagator::new(&scenario)?;
    println!("{:>5} {:>9} {:>9} {:>9} {:>9} {:>12}", "t", "p_z", "q_z", "r_xx", "r_zz", "|d coeff|");
    for &t in &scenario.time_grid {
        let e = pauli_decompose(&exact.propagate(t)?.state.hermitian_part())?;
        let a = pauli_decompose(&approx.propagate(t)?.state)?;
        println!(
            "{t:>5.2} {:>9.5} {:>9.5} {:>9.5} {:>9.5} {:>12.2e}",
            a.p[2], a.q[2], a.r[0][0], a.r[2][2], e.max_abs_diff(&a)
        );
    }
    Ok(())
}
