// SPDX-License-Identifier: Apache-2.0

//! Propagation of `ρ(0)` under the projector master equation.
//!
//! Three routes are provided:
//!
//! * **exact**: `vec ρ(t) = exp(t(A + B))·vec ρ(0)` with the full `n²×n²`
//!   generator. Deliberately unstructured; it is the reference.
//! * **commutable approximation**: `exp(t(A + B)) ≈ exp(tA)·exp(tB)`, which
//!   drops the BCH interaction term. Because the `R_j` are commuting
//!   projectors, `exp(tB)` collapses to a finite sum and the result has the
//!   closed form
//!
//!   ```text
//!   ρ(t) ≈ U { ρ₀ + Σ_j (e_j − 1)(P_j ρ₀ Q_j + Q_j ρ₀ P_j)
//!              + Σ_{j<k} (e_j − 1)(e_k − 1)(P_j ρ₀ P_k + P_k ρ₀ P_j) } U†
//!   ```
//!
//!   with `U = e^{−itH}` and `e_j = e^{−λ_j t/2}`. The product and expanded
//!   superoperator forms of the same approximation are kept as cross-checks.
//!
//! The approximation is exact whenever `[A, B] = 0` (e.g. `H = 0`, or `H`
//! commuting with every `P_j`) and otherwise deviates at second order in `t`.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{
    commutator, eigh, kron, matexp, vectorize, devectorize, ComplexMatrix, ComplexVector,
    HermitianEigen, C64,
};
use crate::model::{build_dissipator_superop, build_hamiltonian_superop, build_r, projector_exp, Scenario, Superoperator};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Exact,
    ApproxClosed,
    ApproxProduct,
    ApproxExpanded,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::ApproxClosed => "approx-closed",
            Method::ApproxProduct => "approx-product",
            Method::ApproxExpanded => "approx-expanded",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// State at one time. Stored unvalidated so diagnostics can see violations.
#[derive(Clone, Debug)]
pub struct PropagationResult {
    pub time: f64,
    pub state: ComplexMatrix,
    pub method: Method,
}

fn check_time(t: f64) -> Result<()> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::invalid(format!("time must be finite and >= 0, got {t}")));
    }
    Ok(())
}

/// The Hamiltonian part `A = −i(H⊗1 − 1⊗Hᵀ)` and dissipative part
/// `B = −Σ (λ_j/2) R_j` of the vectorized generator.
pub fn generators(scenario: &Scenario) -> (Superoperator, Superoperator) {
    (
        build_hamiltonian_superop(&scenario.hamiltonian),
        build_dissipator_superop(&scenario.family),
    )
}

/// Exact route with the generator built once.
#[derive(Clone, Debug)]
pub struct ExactPropagator {
    dim: usize,
    generator: ComplexMatrix,
    initial: ComplexVector,
}

impl ExactPropagator {
    pub fn new(scenario: &Scenario) -> Result<Self> {
        let (a, b) = generators(scenario);
        Ok(Self {
            dim: scenario.dim(),
            generator: a.matrix() + b.matrix(),
            initial: vectorize(scenario.initial_state.matrix())?,
        })
    }

    pub fn generator(&self) -> &ComplexMatrix {
        &self.generator
    }

    /// `exp(t·L)`.
    pub fn propagator(&self, t: f64) -> Result<ComplexMatrix> {
        check_time(t)?;
        matexp(&self.generator.scale_real(t))
    }

    pub fn propagate(&self, t: f64) -> Result<PropagationResult> {
        let v = self.propagator(t)?.apply(&self.initial)?;
        Ok(PropagationResult {
            time: t,
            state: devectorize(&v, self.dim)?,
            method: Method::Exact,
        })
    }

    /// Evolve an arbitrary `rho` (not necessarily the scenario's initial state).
    pub fn propagate_from(&self, rho: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
        if rho.shape() != (self.dim, self.dim) {
            return Err(Error::dim(format!("state must be {0}x{0}", self.dim)));
        }
        devectorize(&self.propagator(t)?.apply(&vectorize(rho)?)?, self.dim)
    }
}

pub fn exact_propagate(scenario: &Scenario, t: f64) -> Result<PropagationResult> {
    check_time(t)?;
    ExactPropagator::new(scenario)?.propagate(t)
}

/// How the cross-term sum of the closed form is organized.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairSum {
    /// `Σ_{j<k}`.
    Ordered,
    /// `½ Σ_{j≠k}`.
    Symmetric,
}

/// Closed-form commutable approximation with the `t`-independent pieces
/// (spectrum of `H`, sandwich terms of `ρ₀`) precomputed.
#[derive(Clone, Debug)]
pub struct ClosedFormPropagator {
    h_eig: HermitianEigen,
    rates: Vec<f64>,
    rho0: ComplexMatrix,
    /// `P_j ρ₀ Q_j + Q_j ρ₀ P_j`.
    single: Vec<ComplexMatrix>,
    /// `P_j ρ₀ P_k + P_k ρ₀ P_j`, indexed `[j][k]` (symmetric).
    cross: Vec<Vec<ComplexMatrix>>,
}

impl ClosedFormPropagator {
    pub fn new(scenario: &Scenario) -> Result<Self> {
        let n = scenario.dim();
        let rho0 = scenario.initial_state.matrix().clone();
        let id = ComplexMatrix::identity(n);
        let members = scenario.family.members();
        let single = members
            .iter()
            .map(|m| {
                let p = &m.projector;
                let q = &id - p;
                &(&(p * &rho0) * &q) + &(&(&q * &rho0) * p)
            })
            .collect();
        let cross = members
            .iter()
            .map(|mj| {
                members
                    .iter()
                    .map(|mk| {
                        let (pj, pk) = (&mj.projector, &mk.projector);
                        &(&(pj * &rho0) * pk) + &(&(pk * &rho0) * pj)
                    })
                    .collect()
            })
            .collect();
        Ok(Self {
            h_eig: eigh(scenario.hamiltonian.matrix())?,
            rates: members.iter().map(|m| m.rate).collect(),
            rho0,
            single,
            cross,
        })
    }

    /// Pure-decoherence part `exp(tB)` applied to `ρ₀`, before conjugation.
    pub fn decohered(&self, t: f64, pairs: PairSum) -> Result<ComplexMatrix> {
        check_time(t)?;
        // e^{−λt/2} − 1 without cancellation for small λt.
        let f: Vec<f64> = self.rates.iter().map(|&l| (-l * t / 2.0).exp_m1()).collect();
        let mut acc = self.rho0.clone();
        for (j, term) in self.single.iter().enumerate() {
            acc = &acc + &term.scale_real(f[j]);
        }
        let m = f.len();
        match pairs {
            PairSum::Ordered => {
                for j in 0..m {
                    for k in j + 1..m {
                        acc = &acc + &self.cross[j][k].scale_real(f[j] * f[k]);
                    }
                }
            }
            PairSum::Symmetric => {
                let mut half = ComplexMatrix::zeros(acc.rows(), acc.cols());
                for j in 0..m {
                    for k in (0..m).filter(|&k| k != j) {
                        half = &half + &self.cross[j][k].scale_real(f[j] * f[k]);
                    }
                }
                acc = &acc + &half.scale_real(0.5);
            }
        }
        Ok(acc)
    }

    /// `e^{−itH}`.
    pub fn unitary(&self, t: f64) -> ComplexMatrix {
        if t == 0.0 {
            return ComplexMatrix::identity(self.rho0.rows());
        }
        self.h_eig.map_spectrum(|e| C64::new(0.0, -t * e).exp())
    }

    pub fn propagate_with(&self, t: f64, pairs: PairSum) -> Result<PropagationResult> {
        let inner = self.decohered(t, pairs)?;
        let u = self.unitary(t);
        let state = &(&u * &inner) * &u.adjoint();
        Ok(PropagationResult {
            time: t,
            state,
            method: Method::ApproxClosed,
        })
    }

    pub fn propagate(&self, t: f64) -> Result<PropagationResult> {
        self.propagate_with(t, PairSum::Symmetric)
    }
}

pub fn approx_propagate_closed(scenario: &Scenario, t: f64) -> Result<PropagationResult> {
    check_time(t)?;
    ClosedFormPropagator::new(scenario)?.propagate(t)
}

pub fn approx_propagate_closed_with(
    scenario: &Scenario,
    t: f64,
    pairs: PairSum,
) -> Result<PropagationResult> {
    check_time(t)?;
    ClosedFormPropagator::new(scenario)?.propagate_with(t, pairs)
}

/// `e^{−itH} ⊗ (e^{itH})ᵀ`, the superoperator of `ρ ↦ e^{−itH} ρ e^{itH}`.
pub fn unitary_superop(scenario: &Scenario, t: f64) -> Result<Superoperator> {
    check_time(t)?;
    let eig = eigh(scenario.hamiltonian.matrix())?;
    let u = eig.map_spectrum(|e| C64::new(0.0, -t * e).exp());
    let u_inv = eig.map_spectrum(|e| C64::new(0.0, t * e).exp());
    Superoperator::new(scenario.dim(), kron(&u, &u_inv.transpose()))
}

/// Product form: unitary factor times `Π_j (1 + (e^{−λ_j t/2} − 1) R_j)`,
/// applied factor by factor in ascending `j`.
pub fn approx_propagate_product(scenario: &Scenario, t: f64) -> Result<PropagationResult> {
    check_time(t)?;
    let n = scenario.dim();
    let mut v = vectorize(scenario.initial_state.matrix())?;
    // Rightmost factor acts first; the factors commute, so any order is valid.
    for m in scenario.family.members().iter().rev() {
        let factor = projector_exp(-m.rate * t / 2.0, &build_r(&m.projector)?)?;
        v = factor.matrix().apply(&v)?;
    }
    v = unitary_superop(scenario, t)?.matrix().apply(&v)?;
    Ok(PropagationResult {
        time: t,
        state: devectorize(&v, n)?,
        method: Method::ApproxProduct,
    })
}

/// The product `Π_j (1 + (e_j − 1) R_j)` expanded with `R_j R_k = P_j⊗P_kᵀ +
/// P_k⊗P_jᵀ` (j < k) and vanishing triple products.
pub fn decoherence_superop_expanded(scenario: &Scenario, t: f64) -> Result<Superoperator> {
    check_time(t)?;
    let n = scenario.dim();
    let members = scenario.family.members();
    let f: Vec<f64> = members.iter().map(|m| (-m.rate * t / 2.0).exp_m1()).collect();
    let mut acc = ComplexMatrix::identity(n * n);
    for (m, &fj) in members.iter().zip(&f) {
        acc = &acc + &build_r(&m.projector)?.matrix().scale_real(fj);
    }
    for j in 0..members.len() {
        for k in j + 1..members.len() {
            let (pj, pk) = (&members[j].projector, &members[k].projector);
            let rr = &kron(pj, &pk.transpose()) + &kron(pk, &pj.transpose());
            acc = &acc + &rr.scale_real(f[j] * f[k]);
        }
    }
    Superoperator::new(n, acc)
}

pub fn approx_propagate_expanded(scenario: &Scenario, t: f64) -> Result<PropagationResult> {
    let decay = decoherence_superop_expanded(scenario, t)?;
    let full = unitary_superop(scenario, t)?.compose(&decay)?;
    Ok(PropagationResult {
        time: t,
        state: full.apply(scenario.initial_state.matrix())?,
        method: Method::ApproxExpanded,
    })
}

/// Interaction term `I(A, B)` of `e^{A+B} = e^A e^{I(A,B)} e^B`, truncated to
///
/// ```text
/// I(A, B) ≈ −½[A, B] + (1/6)([[A, B], B] + [A, [A, B]])
/// ```
///
/// Higher-order terms of the series are not computed, so the factorization
/// holds only up to a fourth-order residual.
pub fn bch_interaction_term(a: &Superoperator, b: &Superoperator) -> Result<ComplexMatrix> {
    if a.dim() != b.dim() {
        return Err(Error::dim(format!(
            "superoperators on dimensions {} and {}",
            a.dim(),
            b.dim()
        )));
    }
    let (a, b) = (a.matrix(), b.matrix());
    let ab = commutator(a, b)?;
    let nested = &commutator(&ab, b)? + &commutator(a, &ab)?;
    Ok(&ab.scale_real(-0.5) + &nested.scale_real(1.0 / 6.0))
}

/// `½‖[tA, tB]‖_F`, the size of the leading term dropped by the commutable
/// approximation. Exactly quadratic in `t`.
#[derive(Clone, Copy, Debug)]
pub struct ErrorIndicator {
    commutator_norm: f64,
}

impl ErrorIndicator {
    pub fn new(scenario: &Scenario) -> Result<Self> {
        let (a, b) = generators(scenario);
        Ok(Self {
            commutator_norm: commutator(a.matrix(), b.matrix())?.frobenius_norm(),
        })
    }

    /// `‖[A, B]‖_F` of the unscaled generators.
    pub fn commutator_norm(&self) -> f64 {
        self.commutator_norm
    }

    pub fn at(&self, t: f64) -> f64 {
        0.5 * t * t * self.commutator_norm
    }
}

pub fn commutable_error_indicator(scenario: &Scenario, t: f64) -> Result<f64> {
    Ok(ErrorIndicator::new(scenario)?.at(t))
}
