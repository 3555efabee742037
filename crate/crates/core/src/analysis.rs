// SPDX-License-Identifier: Apache-2.0

//! Metrics comparing the exact and approximate routes.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, kron, pauli, ComplexMatrix, C64};
use crate::model::Scenario;
use crate::propagate::{ClosedFormPropagator, ErrorIndicator, ExactPropagator};

/// Gaps below this are treated as numerical noise by [`convergence_order`].
pub const GAP_NOISE_FLOOR: f64 = 1e-14;

/// Exact vs. approximate comparison at one time point.
#[derive(Clone, Debug, PartialEq)]
pub struct ErrorRecord {
    pub time: f64,
    pub trace_distance: f64,
    pub frobenius_gap: f64,
    pub exact_trace: C64,
    pub approx_trace: C64,
    pub approx_min_eigenvalue: f64,
    pub bch_indicator: f64,
}

/// `½ Σ |λ_i(ρ − σ)|`.
pub fn trace_distance(rho: &ComplexMatrix, sigma: &ComplexMatrix) -> Result<f64> {
    if rho.shape() != sigma.shape() {
        return Err(Error::dim(format!(
            "trace distance between {}x{} and {}x{}",
            rho.rows(),
            rho.cols(),
            sigma.rows(),
            sigma.cols()
        )));
    }
    let eig = hermitian_eigenvalues(&(rho - sigma))?;
    Ok(0.5 * eig.iter().map(|l| l.abs()).sum::<f64>())
}

#[derive(Clone, Debug, PartialEq)]
pub struct StateReport {
    pub hermiticity_residual: f64,
    pub trace: C64,
    /// Minimum eigenvalue of the Hermitian part.
    pub min_eigenvalue: f64,
    /// `tr(ρ²)`, real part.
    pub purity: f64,
}

pub fn state_diagnostics(rho: &ComplexMatrix) -> Result<StateReport> {
    rho.require_square("state")?;
    let min_eigenvalue = hermitian_eigenvalues(&rho.hermitian_part())?[0];
    Ok(StateReport {
        hermiticity_residual: rho.hermiticity_residual(),
        trace: rho.trace(),
        min_eigenvalue,
        purity: (rho * rho).trace().re,
    })
}

/// Two-qubit expansion
/// `ρ = ¼(1⊗1 + p_i σ_i⊗1 + q_j 1⊗σ_j + r_ij σ_i⊗σ_j)` with
/// `σ_1, σ_2, σ_3 = σ_x, σ_y, σ_z` (stored zero-based).
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct PauliDecomposition {
    pub p: [f64; 3],
    pub q: [f64; 3],
    pub r: [[f64; 3]; 3],
}

impl PauliDecomposition {
    fn coefficients(&self) -> impl Iterator<Item = f64> + '_ {
        self.p
            .iter()
            .chain(&self.q)
            .chain(self.r.iter().flatten())
            .copied()
    }

    /// Largest absolute coefficient difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.coefficients()
            .zip(other.coefficients())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

fn tr_product(a: &ComplexMatrix, b: &ComplexMatrix) -> C64 {
    // tr(a·b) without forming the product.
    let n = a.rows();
    (0..n)
        .flat_map(|i| (0..n).map(move |k| (i, k)))
        .map(|(i, k)| a[(i, k)] * b[(k, i)])
        .sum()
}

pub fn pauli_decompose(rho: &ComplexMatrix) -> Result<PauliDecomposition> {
    if rho.shape() != (4, 4) {
        return Err(Error::dim(format!(
            "Pauli decomposition needs a 4x4 matrix, got {}x{}",
            rho.rows(),
            rho.cols()
        )));
    }
    if !rho.is_hermitian() {
        return Err(Error::invalid("Pauli decomposition needs a Hermitian matrix"));
    }
    let s = pauli();
    let id = ComplexMatrix::identity(2);
    let mut d = PauliDecomposition::default();
    for i in 0..3 {
        d.p[i] = tr_product(rho, &kron(&s[i], &id)).re;
        d.q[i] = tr_product(rho, &kron(&id, &s[i])).re;
        for j in 0..3 {
            d.r[i][j] = tr_product(rho, &kron(&s[i], &s[j])).re;
        }
    }
    Ok(d)
}

pub fn pauli_reconstruct(d: &PauliDecomposition) -> ComplexMatrix {
    let s = pauli();
    let id = ComplexMatrix::identity(2);
    let mut acc = ComplexMatrix::identity(4);
    for i in 0..3 {
        acc = &acc + &kron(&s[i], &id).scale_real(d.p[i]);
        acc = &acc + &kron(&id, &s[i]).scale_real(d.q[i]);
        for j in 0..3 {
            acc = &acc + &kron(&s[i], &s[j]).scale_real(d.r[i][j]);
        }
    }
    acc.scale_real(0.25)
}

/// Compare the exact and closed-form routes at every grid point.
///
/// Time points are evaluated in parallel; the output is in grid order.
pub fn sweep(scenario: &Scenario) -> Result<Vec<Result<ErrorRecord>>> {
    let exact = ExactPropagator::new(scenario)?;
    let approx = ClosedFormPropagator::new(scenario)?;
    let indicator = ErrorIndicator::new(scenario)?;
    Ok(scenario
        .time_grid
        .par_iter()
        .map(|&t| compare_at(&exact, &approx, &indicator, t))
        .collect())
}

fn compare_at(
    exact: &ExactPropagator,
    approx: &ClosedFormPropagator,
    indicator: &ErrorIndicator,
    t: f64,
) -> Result<ErrorRecord> {
    let e = exact.propagate(t)?.state;
    let a = approx.propagate(t)?.state;
    Ok(ErrorRecord {
        time: t,
        trace_distance: trace_distance(&e, &a)?,
        frobenius_gap: e.distance(&a),
        exact_trace: e.trace(),
        approx_trace: a.trace(),
        approx_min_eigenvalue: hermitian_eigenvalues(&a.hermitian_part())?[0],
        bch_indicator: indicator.at(t),
    })
}

/// Ordinary least-squares slope of `ln y` against `ln t`, skipping points
/// with `t <= 0` or `y < GAP_NOISE_FLOOR`.
pub fn log_log_slope(points: impl IntoIterator<Item = (f64, f64)>) -> Result<f64> {
    let usable: Vec<(f64, f64)> = points
        .into_iter()
        .filter(|&(t, y)| t > 0.0 && y >= GAP_NOISE_FLOOR && t.is_finite() && y.is_finite())
        .map(|(t, y)| (t.ln(), y.ln()))
        .collect();
    if usable.len() < 3 {
        return Err(Error::invalid(format!(
            "need at least 3 points with t > 0 and gap >= {GAP_NOISE_FLOOR:e}, have {}",
            usable.len()
        )));
    }
    let n = usable.len() as f64;
    let mx = usable.iter().map(|p| p.0).sum::<f64>() / n;
    let my = usable.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = usable.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = usable.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx == 0.0 {
        return Err(Error::invalid("all usable points share the same time"));
    }
    Ok(sxy / sxx)
}

/// Fitted order of the Frobenius gap in `t`.
pub fn convergence_order(records: &[ErrorRecord]) -> Result<f64> {
    log_log_slope(records.iter().map(|r| (r.time, r.frobenius_gap)))
}
