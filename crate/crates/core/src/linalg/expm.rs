// SPDX-License-Identifier: Apache-2.0

//! Matrix exponential by scaling and squaring with diagonal Padé
//! approximants (degrees 3, 5, 7, 9, 13), plus an eigendecomposition route
//! for Hermitian and anti-Hermitian inputs.

use super::{eigh, ComplexMatrix, C64, HERMITIAN_TOL, I, ONE, ZERO};
use crate::error::{Error, Result};

// 1-norm bounds below which the degree-m approximant meets unit roundoff.
const THETA_3: f64 = 1.495585217958292e-2;
const THETA_5: f64 = 2.539398330063230e-1;
const THETA_7: f64 = 9.504178996162932e-1;
const THETA_9: f64 = 2.097847961257068e0;
const THETA_13: f64 = 5.371920351148152e0;

const PADE_3: [f64; 4] = [120.0, 60.0, 12.0, 1.0];
const PADE_5: [f64; 6] = [30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0];
const PADE_7: [f64; 8] = [17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0];
const PADE_9: [f64; 10] = [
    17643225600.0,
    8821612800.0,
    2075673600.0,
    302702400.0,
    30270240.0,
    2162160.0,
    110880.0,
    3960.0,
    90.0,
    1.0,
];
const PADE_13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

/// General matrix exponential.
pub fn matexp(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let n = m.require_square("matexp input")?;
    if !m.is_finite() {
        return Err(Error::invalid("matexp input contains NaN or infinite entries"));
    }
    let norm = m.one_norm();
    if norm == 0.0 {
        return Ok(ComplexMatrix::identity(n));
    }
    for (theta, coeffs) in [
        (THETA_3, &PADE_3[..]),
        (THETA_5, &PADE_5[..]),
        (THETA_7, &PADE_7[..]),
        (THETA_9, &PADE_9[..]),
    ] {
        if norm <= theta {
            return pade_low(m, coeffs);
        }
    }
    let squarings = (norm / THETA_13).log2().ceil().max(0.0) as i32;
    let scaled = m.scale_real(0.5f64.powi(squarings));
    let mut x = pade_13(&scaled)?;
    for _ in 0..squarings {
        x = &x * &x;
    }
    Ok(x)
}

/// `exp(coeff·h)` for Hermitian `h`, computed as `V·diag(exp(coeff·λ))·V†`.
pub fn matexp_hermitian(h: &ComplexMatrix, coeff: C64) -> Result<ComplexMatrix> {
    let eig = eigh(h)?;
    Ok(eig.map_spectrum(|lambda| (coeff * lambda).exp()))
}

/// Dispatches Hermitian and anti-Hermitian inputs to the eigendecomposition
/// route and everything else to [`matexp`].
pub fn matexp_auto(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    m.require_square("matexp input")?;
    if m.hermiticity_residual() <= HERMITIAN_TOL {
        return matexp_hermitian(&m.hermitian_part(), ONE);
    }
    if m.anti_hermiticity_residual() <= HERMITIAN_TOL {
        // m = i·K with K = −i·m Hermitian.
        let k = m.scale(-I).hermitian_part();
        return matexp_hermitian(&k, I);
    }
    matexp(m)
}

fn pade_low(a: &ComplexMatrix, b: &[f64]) -> Result<ComplexMatrix> {
    let n = a.rows();
    let a2 = a * a;
    let degree = b.len() - 1;
    // Even powers I, A², A⁴, ...
    let mut powers = vec![ComplexMatrix::identity(n)];
    for k in 1..=degree / 2 {
        let next = &powers[k - 1] * &a2;
        powers.push(next);
    }
    let mut u_even = ComplexMatrix::zeros(n, n);
    let mut v = ComplexMatrix::zeros(n, n);
    for (k, p) in powers.iter().enumerate() {
        v = &v + &p.scale_real(b[2 * k]);
        u_even = &u_even + &p.scale_real(b[2 * k + 1]);
    }
    let u = a * &u_even;
    solve(&(&v - &u), &(&v + &u))
}

fn pade_13(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    let b = &PADE_13;
    let n = a.rows();
    let id = ComplexMatrix::identity(n);
    let a2 = a * a;
    let a4 = &a2 * &a2;
    let a6 = &a4 * &a2;
    let lin = |c6: f64, c4: f64, c2: f64, c0: f64| {
        let mut acc = &(&a6.scale_real(c6) + &a4.scale_real(c4)) + &a2.scale_real(c2);
        if c0 != 0.0 {
            acc = &acc + &id.scale_real(c0);
        }
        acc
    };
    let u_inner = &(&a6 * &lin(b[13], b[11], b[9], 0.0)) + &lin(b[7], b[5], b[3], b[1]);
    let u = a * &u_inner;
    let v = &(&a6 * &lin(b[12], b[10], b[8], 0.0)) + &lin(b[6], b[4], b[2], b[0]);
    solve(&(&v - &u), &(&v + &u))
}

/// Solve `a·x = b` by Gaussian elimination with partial pivoting.
pub fn solve(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    let n = a.require_square("solve coefficient matrix")?;
    if b.rows() != n {
        return Err(Error::dim(format!(
            "right-hand side has {} rows, expected {n}",
            b.rows()
        )));
    }
    let m = b.cols();
    let mut lu = a.clone();
    let mut x = b.clone();
    let scale = a.max_abs().max(f64::MIN_POSITIVE);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| lu[(i, col)].norm().total_cmp(&lu[(j, col)].norm()))
            .expect("non-empty range");
        if lu[(pivot, col)].norm() <= scale * 1e-300 {
            return Err(Error::invalid("singular matrix in linear solve"));
        }
        if pivot != col {
            for j in 0..n {
                let tmp = lu[(col, j)];
                lu[(col, j)] = lu[(pivot, j)];
                lu[(pivot, j)] = tmp;
            }
            for j in 0..m {
                let tmp = x[(col, j)];
                x[(col, j)] = x[(pivot, j)];
                x[(pivot, j)] = tmp;
            }
        }
        let inv = ONE / lu[(col, col)];
        for row in col + 1..n {
            let factor = lu[(row, col)] * inv;
            if factor == ZERO {
                continue;
            }
            lu[(row, col)] = ZERO;
            for j in col + 1..n {
                let v = lu[(col, j)];
                lu[(row, j)] -= factor * v;
            }
            for j in 0..m {
                let v = x[(col, j)];
                x[(row, j)] -= factor * v;
            }
        }
    }
    for col in (0..n).rev() {
        let inv = ONE / lu[(col, col)];
        for j in 0..m {
            let mut acc = x[(col, j)];
            for k in col + 1..n {
                acc -= lu[(col, k)] * x[(k, j)];
            }
            x[(col, j)] = acc * inv;
        }
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::pauli;

    fn taylor(m: &ComplexMatrix, terms: usize) -> ComplexMatrix {
        let n = m.rows();
        let mut acc = ComplexMatrix::identity(n);
        let mut term = ComplexMatrix::identity(n);
        for k in 1..terms {
            term = (&term * m).scale_real(1.0 / k as f64);
            acc = &acc + &term;
        }
        acc
    }

    #[test]
    fn exp_of_zero_is_identity() {
        assert_eq!(matexp(&ComplexMatrix::zeros(3, 3)).unwrap(), ComplexMatrix::identity(3));
    }

    #[test]
    fn exp_of_diagonal() {
        let d = ComplexMatrix::diag(&[C64::new(0.3, 0.0), C64::new(-2.0, 1.5)]);
        let e = matexp(&d).unwrap();
        let expected = ComplexMatrix::diag(&[C64::new(0.3, 0.0).exp(), C64::new(-2.0, 1.5).exp()]);
        assert!(e.distance(&expected) < 1e-14);
    }

    #[test]
    fn exp_of_nilpotent() {
        let n = ComplexMatrix::from_real_rows(&[[0.0, 1.0], [0.0, 0.0]]).unwrap();
        let e = matexp(&n).unwrap();
        let expected = ComplexMatrix::from_real_rows(&[[1.0, 1.0], [0.0, 1.0]]).unwrap();
        assert!(e.distance(&expected) < 1e-15);
    }

    #[test]
    fn every_pade_degree_matches_taylor() {
        let [sx, sy, sz] = pauli();
        let base = &(&sx + &sy.scale(C64::new(0.2, 0.7))) + &sz.scale_real(-0.4);
        // Norms straddling each theta threshold, then scaling-and-squaring.
        for s in [1e-3, 0.1, 0.5, 1.5, 3.0, 8.0] {
            let m = base.scale_real(s);
            let reference = taylor(&m.scale_real(1.0 / 64.0), 30);
            let mut reference = reference;
            for _ in 0..6 {
                reference = &reference * &reference;
            }
            let e = matexp(&m).unwrap();
            let rel = e.distance(&reference) / reference.frobenius_norm();
            assert!(rel < 1e-13, "scale {s}: {rel}");
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(matexp(&ComplexMatrix::zeros(2, 3)), Err(Error::Dimension(_))));
        let mut m = ComplexMatrix::zeros(2, 2);
        m[(0, 1)] = C64::new(f64::NAN, 0.0);
        assert!(matches!(matexp(&m), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn structured_route_agrees_with_pade() {
        let [sx, _, sz] = pauli();
        let h = &sx.scale_real(1.3) + &sz.scale_real(-0.4);
        let anti = h.scale(C64::new(0.0, -2.0));
        for m in [h, anti] {
            let a = matexp_auto(&m).unwrap();
            let b = matexp(&m).unwrap();
            assert!(a.distance(&b) < 1e-12);
        }
    }

    #[test]
    fn solve_recovers_rhs() {
        let a = ComplexMatrix::from_rows(&[
            [C64::new(0.0, 0.0), C64::new(2.0, 1.0)],
            [C64::new(1.0, -1.0), C64::new(3.0, 0.0)],
        ])
        .unwrap();
        let b = ComplexMatrix::identity(2);
        let x = solve(&a, &b).unwrap();
        assert!((&a * &x).distance(&b) < 1e-15);
        assert!(solve(&ComplexMatrix::zeros(2, 2), &b).is_err());
    }
}
