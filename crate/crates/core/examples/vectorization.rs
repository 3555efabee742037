// SPDX-License-Identifier: Apache-2.0

//! Row-stacking vectorization and the superoperators it induces.
//!
//! cargo run -p lindproj --example vectorization

use lindproj::linalg::{kron, vectorize, ComplexMatrix};
use lindproj::model::{apply_dissipator, build_dissipator_superop, ProjectorFamily, ProjectorMember};
use lindproj::random::ginibre;
use rand::SeedableRng;

fn main() -> lindproj::Result<()> {
    let x = ComplexMatrix::from_real_rows(&[[1.0, 2.0], [3.0, 4.0]])?;
    let v: Vec<f64> = vectorize(&x)?.as_slice().iter().map(|z| z.re).collect();
    println!("vec([[1,2],[3,4]]) = {v:?}");

    let mut rng = rand::rngs::StdRng::seed_from_u64(3);
    let (a, b, x) = (ginibre(4, 4, &mut rng), ginibre(4, 4, &mut rng), ginibre(4, 4, &mut rng));
    let lhs = vectorize(&(&(&a * &x) * &b))?;
    let rhs = kron(&a, &b.transpose()).apply(&vectorize(&x)?)?;
    println!("|vec(AXB) - (A kron B^T) vec(X)| = {:.2e}", lhs.distance(&rhs));

    let family = ProjectorFamily::new(2, vec![ProjectorMember::new(ComplexMatrix::real_diag(&[1.0, 0.0]), 2.0)])?;
    let sup = build_dissipator_superop(&family);
    println!("dissipator superoperator diagonal: {:?}", (0..4).map(|i| sup.matrix()[(i, i)].re).collect::<Vec<_>>());
    let rho = ComplexMatrix::from_real_rows(&[[0.5, 0.5], [0.5, 0.5]])?;
    println!("D(|+><+|) = {:?}", apply_dissipator(&family, &rho)?);
    Ok(())
}
