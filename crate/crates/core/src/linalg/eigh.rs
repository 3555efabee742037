// SPDX-License-Identifier: Apache-2.0

//! Hermitian eigensolver (cyclic complex Jacobi).

use super::{ComplexMatrix, C64, HERMITIAN_TOL, ZERO};
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// Eigendecomposition `M = V·diag(values)·V†` with ascending eigenvalues.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    /// Column `k` is the eigenvector for `values[k]`.
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    /// `V·diag(f(λ))·V†`.
    pub fn map_spectrum(&self, f: impl Fn(f64) -> C64) -> ComplexMatrix {
        let n = self.values.len();
        let fv: Vec<C64> = self.values.iter().map(|&l| f(l)).collect();
        let v = &self.vectors;
        ComplexMatrix::from_fn(n, n, |i, j| {
            (0..n).map(|k| v[(i, k)] * fv[k] * v[(j, k)].conj()).sum()
        })
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.map_spectrum(|l| C64::new(l, 0.0))
    }
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>> {
    Ok(eigh(m)?.values)
}

/// Full Hermitian eigendecomposition.
///
/// Rejects inputs whose relative hermiticity residual exceeds
/// [`HERMITIAN_TOL`]; the Hermitian part is decomposed.
pub fn eigh(m: &ComplexMatrix) -> Result<HermitianEigen> {
    let n = m.require_square("eigensolver input")?;
    if !m.is_finite() {
        return Err(Error::invalid("eigensolver input contains non-finite entries"));
    }
    let residual = m.hermiticity_residual();
    if residual > HERMITIAN_TOL {
        return Err(Error::invalid(format!(
            "matrix is not Hermitian (relative residual {residual:.3e})"
        )));
    }
    let mut a = m.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    let scale = a.frobenius_norm();

    if scale > 0.0 {
        for _ in 0..MAX_SWEEPS {
            let off: f64 = (0..n)
                .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
                .map(|(i, j)| a[(i, j)].norm_sqr())
                .sum::<f64>()
                .sqrt();
            if off <= 1e-17 * scale {
                break;
            }
            let mut rotated = false;
            for p in 0..n {
                for q in p + 1..n {
                    if rotate(&mut a, &mut v, p, q, scale) {
                        rotated = true;
                    }
                }
            }
            if !rotated {
                break;
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&k| a[(k, k)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Ok(HermitianEigen { values, vectors })
}

/// One Jacobi rotation annihilating `a[p, q]`. Returns whether it rotated.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize, scale: f64) -> bool {
    let apq = a[(p, q)];
    let g = apq.norm();
    if g <= 1e-300 || g <= f64::EPSILON * 1e-3 * scale {
        if g != 0.0 {
            a[(p, q)] = ZERO;
            a[(q, p)] = ZERO;
        }
        return false;
    }
    let phase = apq / g;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = (aqq - app) / (2.0 * g);
    let t = if theta.is_infinite() {
        0.0
    } else {
        let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
        sign / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    // V restricted to (p, q): diag(1, conj(phase)) times the real rotation.
    let vpp = C64::new(c, 0.0);
    let vpq = C64::new(s, 0.0);
    let vqp = -phase.conj() * s;
    let vqq = phase.conj() * c;

    let n = a.rows();
    for k in 0..n {
        let x = a[(k, p)];
        let y = a[(k, q)];
        a[(k, p)] = x * vpp + y * vqp;
        a[(k, q)] = x * vpq + y * vqq;
    }
    for k in 0..n {
        let x = a[(p, k)];
        let y = a[(q, k)];
        a[(p, k)] = vpp.conj() * x + vqp.conj() * y;
        a[(q, k)] = vpq.conj() * x + vqq.conj() * y;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = C64::new(a[(q, q)].re, 0.0);
    for k in 0..n {
        let x = v[(k, p)];
        let y = v[(k, q)];
        v[(k, p)] = x * vpp + y * vqp;
        v[(k, q)] = x * vpq + y * vqq;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::pauli;

    fn assert_close(a: &[f64], b: &[f64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() <= tol, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn diagonal_sorted() {
        let d = ComplexMatrix::real_diag(&[3.0, 1.0, 2.0]);
        assert_eq!(hermitian_eigenvalues(&d).unwrap(), vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn pauli_x_spectrum() {
        let [sx, sy, _] = pauli();
        assert_close(&hermitian_eigenvalues(&sx).unwrap(), &[-1.0, 1.0], 1e-15);
        assert_close(&hermitian_eigenvalues(&sy).unwrap(), &[-1.0, 1.0], 1e-15);
    }

    #[test]
    fn rank_one_projector_spectrum() {
        let p = ComplexMatrix::from_real_rows(&[[0.5, 0.5], [0.5, 0.5]]).unwrap();
        assert_close(&hermitian_eigenvalues(&p).unwrap(), &[0.0, 1.0], 1e-15);
    }

    #[test]
    fn reconstruction_with_degenerate_spectrum() {
        let [sx, sy, sz] = pauli();
        let h = kron_sum(&sx, &sy, &sz);
        let eig = eigh(&h).unwrap();
        assert!(eig.reconstruct().distance(&h) < 1e-12);
        let vhv = &(&eig.vectors.adjoint() * &eig.vectors) - &ComplexMatrix::identity(4);
        assert!(vhv.frobenius_norm() < 1e-12);
    }

    fn kron_sum(a: &ComplexMatrix, b: &ComplexMatrix, c: &ComplexMatrix) -> ComplexMatrix {
        use crate::linalg::kron;
        &(&kron(a, a) + &kron(b, b)) + &kron(c, c)
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = ComplexMatrix::from_real_rows(&[[1.0, 1.0], [0.0, 0.0]]).unwrap();
        assert!(matches!(eigh(&m), Err(Error::InvalidInput(_))));
    }
}
