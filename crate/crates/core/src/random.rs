// SPDX-License-Identifier: Apache-2.0

//! Random states, Hamiltonians and orthogonal projector families.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::linalg::{ComplexMatrix, ComplexVector, C64, ZERO};
use crate::model::{DensityMatrix, Hamiltonian, ProjectorFamily, ProjectorMember, Scenario};

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Complex Ginibre matrix with standard normal entries.
pub fn ginibre<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| gaussian(rng))
}

/// Unitary from Gram-Schmidt (applied twice) on a Ginibre matrix.
pub fn random_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let g = ginibre(n, n, rng);
    let mut cols: Vec<Vec<C64>> = (0..n).map(|j| (0..n).map(|i| g[(i, j)]).collect()).collect();
    for j in 0..n {
        for _ in 0..2 {
            for k in 0..j {
                let dot: C64 = (0..n).map(|i| cols[k][i].conj() * cols[j][i]).sum();
                for i in 0..n {
                    let v = cols[k][i];
                    cols[j][i] -= dot * v;
                }
            }
        }
        let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in &mut cols[j] {
            *z /= norm;
        }
    }
    ComplexMatrix::from_fn(n, n, |i, j| cols[j][i])
}

/// Hermitian matrix `(G + G†)/2 · scale`.
pub fn random_hermitian<R: Rng + ?Sized>(n: usize, scale: f64, rng: &mut R) -> ComplexMatrix {
    ginibre(n, n, rng).hermitian_part().scale_real(scale)
}

/// Full-rank mixed state `G·G† / tr(G·G†)`.
pub fn random_density_matrix<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DensityMatrix {
    let g = ginibre(n, n, rng);
    let w = &g * &g.adjoint();
    let tr = w.trace().re;
    DensityMatrix::new(w.scale_real(1.0 / tr).hermitian_part()).expect("Wishart state is valid")
}

pub fn random_pure_state<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DensityMatrix {
    let psi = ComplexVector::new((0..n).map(|_| gaussian(rng)).collect()).expect("non-empty");
    DensityMatrix::pure(&psi).expect("non-zero vector")
}

/// Projectors onto disjoint groups of columns of a random unitary, with
/// random ranks summing to at most `n` and rates in `[0.1, 3)`.
pub fn random_family<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ProjectorFamily {
    let u = random_unitary(n, rng);
    let mut ranks = Vec::new();
    let mut used = 0;
    let members = rng.gen_range(1..=n);
    while ranks.len() < members && used < n {
        let r = rng.gen_range(1..=(n - used).min(3));
        ranks.push(r);
        used += r;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut start = 0;
    let mut out = Vec::new();
    for r in ranks {
        let cols = &order[start..start + r];
        start += r;
        let p = ComplexMatrix::from_fn(n, n, |i, j| {
            cols.iter().fold(ZERO, |acc, &c| acc + u[(i, c)] * u[(j, c)].conj())
        });
        out.push(ProjectorMember::new(p.hermitian_part(), rng.gen_range(0.1..3.0)));
    }
    ProjectorFamily::new(n, out).expect("columns of a unitary give orthogonal projectors")
}

/// Generic scenario: random `H` (entries of size ~`h_scale`), random family,
/// random mixed initial state.
pub fn random_scenario<R: Rng + ?Sized>(
    n: usize,
    h_scale: f64,
    time_grid: Vec<f64>,
    rng: &mut R,
) -> Scenario {
    Scenario::new(
        Hamiltonian::new(random_hermitian(n, h_scale, rng)).expect("Hermitian by construction"),
        random_family(n, rng),
        random_density_matrix(n, rng),
        time_grid,
    )
    .expect("random scenario is valid")
}
