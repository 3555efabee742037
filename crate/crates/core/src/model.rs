// SPDX-License-Identifier: Apache-2.0

//! States, Hamiltonians, projector families and the superoperators of the
//! vectorized master equation
//!
//! ```text
//! d vec(ρ)/dt = [ −i(H⊗1 − 1⊗Hᵀ) − Σ_j (λ_j/2)(P_j⊗Q_jᵀ + Q_j⊗P_jᵀ) ] vec(ρ)
//! ```
//!
//! where `Q_j = 1 − P_j`.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{
    hermitian_eigenvalues, kron, vectorize, devectorize, ComplexMatrix, ComplexVector, C64,
    HERMITIAN_TOL, I, ONE,
};

/// Tolerance for projector axioms and density-matrix constraints.
pub const MODEL_TOL: f64 = 1e-10;

/// Hermitian, unit-trace, positive-semidefinite state.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        matrix.require_square("density matrix")?;
        let herm = matrix.hermiticity_residual();
        if herm > HERMITIAN_TOL {
            return Err(Error::Validation(format!(
                "density matrix is not Hermitian (residual {herm:.3e})"
            )));
        }
        let tr = matrix.trace();
        if (tr - ONE).norm() > MODEL_TOL {
            return Err(Error::Validation(format!(
                "density matrix trace is {:.12}{:+.3e}i, expected 1",
                tr.re, tr.im
            )));
        }
        let min_eig = hermitian_eigenvalues(&matrix)?[0];
        if min_eig < -MODEL_TOL {
            return Err(Error::Validation(format!(
                "density matrix is not positive semidefinite (min eigenvalue {min_eig:.3e})"
            )));
        }
        Ok(Self { matrix })
    }

    /// Pure state `|ψ⟩⟨ψ|` from a (not necessarily normalized) vector.
    pub fn pure(psi: &ComplexVector) -> Result<Self> {
        let norm = psi.norm();
        if norm == 0.0 {
            return Err(Error::invalid("zero state vector"));
        }
        Self::new(ComplexMatrix::outer(psi, psi).scale_real(1.0 / (norm * norm)))
    }

    pub fn maximally_mixed(n: usize) -> Self {
        Self {
            matrix: ComplexMatrix::identity(n).scale_real(1.0 / n as f64),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }
}

/// System Hamiltonian (ħ = 1).
#[derive(Clone, Debug, PartialEq)]
pub struct Hamiltonian {
    matrix: ComplexMatrix,
}

impl Hamiltonian {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        matrix.require_square("Hamiltonian")?;
        let herm = matrix.hermiticity_residual();
        if herm > HERMITIAN_TOL {
            return Err(Error::Validation(format!(
                "Hamiltonian is not Hermitian (residual {herm:.3e})"
            )));
        }
        Ok(Self { matrix })
    }

    pub fn zero(n: usize) -> Self {
        Self {
            matrix: ComplexMatrix::zeros(n, n),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }
}

/// How a projector is entered.
#[derive(Clone, Debug)]
pub enum ProjectorInput {
    Matrix(ComplexMatrix),
    /// Orthonormal vectors spanning the range; `P = Σ v·v†`.
    Vectors(Vec<ComplexVector>),
}

impl ProjectorInput {
    /// Normalize to matrix form.
    pub fn into_matrix(self, dim: usize) -> Result<ComplexMatrix> {
        match self {
            ProjectorInput::Matrix(m) => Ok(m),
            ProjectorInput::Vectors(vs) => projector_from_vectors(dim, &vs),
        }
    }
}

/// `Σ v·v†` over an orthonormal set.
pub fn projector_from_vectors(dim: usize, vectors: &[ComplexVector]) -> Result<ComplexMatrix> {
    for (a, u) in vectors.iter().enumerate() {
        if u.len() != dim {
            return Err(Error::dim(format!(
                "vector {a} has length {}, expected {dim}",
                u.len()
            )));
        }
        for (b, v) in vectors.iter().enumerate().skip(a) {
            let inner: C64 = u.as_slice().iter().zip(v.as_slice()).map(|(x, y)| x.conj() * y).sum();
            let target = if a == b { ONE } else { C64::new(0.0, 0.0) };
            if (inner - target).norm() > MODEL_TOL {
                return Err(Error::Validation(format!(
                    "vectors {a} and {b} are not orthonormal (<v{a}|v{b}> = {:.3e}{:+.3e}i)",
                    inner.re, inner.im
                )));
            }
        }
    }
    let mut p = ComplexMatrix::zeros(dim, dim);
    for v in vectors {
        p = &p + &ComplexMatrix::outer(v, v);
    }
    Ok(p)
}

/// One dissipation channel `(P_j, λ_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectorMember {
    pub projector: ComplexMatrix,
    pub rate: f64,
}

impl ProjectorMember {
    pub fn new(projector: ComplexMatrix, rate: f64) -> Self {
        Self { projector, rate }
    }
}

/// Residuals for one member.
#[derive(Clone, Debug)]
pub struct MemberReport {
    pub index: usize,
    pub shape_ok: bool,
    pub hermiticity: f64,
    pub idempotency: f64,
    pub rate: f64,
    pub rate_ok: bool,
    /// `tr P`, the rank of an exact projector.
    pub rank: f64,
}

impl MemberReport {
    pub fn passed(&self, tol: f64) -> bool {
        self.shape_ok && self.rate_ok && self.hermiticity <= tol && self.idempotency <= tol
    }
}

/// Pairwise orthogonality residual `‖P_j·P_k‖_F`.
#[derive(Clone, Debug)]
pub struct PairReport {
    pub j: usize,
    pub k: usize,
    pub orthogonality: f64,
}

#[derive(Clone, Debug)]
pub struct FamilyReport {
    pub dim: usize,
    pub tolerance: f64,
    pub members: Vec<MemberReport>,
    pub pairs: Vec<PairReport>,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.members.iter().all(|m| m.passed(self.tolerance))
            && self.pairs.iter().all(|p| p.orthogonality <= self.tolerance)
    }

    /// Describe the first failure, if any.
    pub fn first_failure(&self) -> Option<String> {
        let tol = self.tolerance;
        for m in &self.members {
            let j = m.index;
            if !m.shape_ok {
                return Some(format!("projector {j} is not {0}x{0}", self.dim));
            }
            if !m.rate_ok {
                return Some(format!("projector {j} has rate {} (must be finite and > 0)", m.rate));
            }
            if m.hermiticity > tol {
                return Some(format!(
                    "projector {j} is not Hermitian (residual {:.3e})",
                    m.hermiticity
                ));
            }
            if m.idempotency > tol {
                return Some(format!(
                    "projector {j} is not idempotent (||P^2 - P||_F = {:.3e})",
                    m.idempotency
                ));
            }
        }
        self.pairs.iter().find(|p| p.orthogonality > tol).map(|p| {
            format!(
                "projectors ({}, {}) are not orthogonal (||P_{} P_{}||_F = {:.3e})",
                p.j, p.k, p.j, p.k, p.orthogonality
            )
        })
    }
}

impl fmt::Display for FamilyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "projector family: dim {}, {} member(s), tolerance {:.0e}",
            self.dim,
            self.members.len(),
            self.tolerance
        )?;
        for m in &self.members {
            writeln!(
                f,
                "  P_{}: rate {:<10} rank {:<6.3} hermiticity {:.3e}  idempotency {:.3e}  {}",
                m.index,
                m.rate,
                m.rank,
                m.hermiticity,
                m.idempotency,
                if m.passed(self.tolerance) { "ok" } else { "FAIL" }
            )?;
        }
        for p in &self.pairs {
            writeln!(
                f,
                "  P_{} P_{}: orthogonality {:.3e}  {}",
                p.j,
                p.k,
                p.orthogonality,
                if p.orthogonality <= self.tolerance { "ok" } else { "FAIL" }
            )?;
        }
        match self.first_failure() {
            None => write!(f, "result: pass"),
            Some(msg) => write!(f, "result: FAIL ({msg})"),
        }
    }
}

/// Check the projector axioms and rates without rejecting anything.
pub fn validate_family(dim: usize, members: &[ProjectorMember]) -> FamilyReport {
    let members_report = members
        .iter()
        .enumerate()
        .map(|(index, m)| {
            let p = &m.projector;
            let shape_ok = p.shape() == (dim, dim);
            let (hermiticity, idempotency) = if shape_ok {
                (p.hermiticity_residual(), (&(p * p) - p).frobenius_norm())
            } else {
                (f64::INFINITY, f64::INFINITY)
            };
            MemberReport {
                index,
                shape_ok,
                hermiticity,
                idempotency,
                rate: m.rate,
                rate_ok: m.rate.is_finite() && m.rate > 0.0,
                rank: if shape_ok { p.trace().re } else { f64::NAN },
            }
        })
        .collect();
    let mut pairs = Vec::new();
    for j in 0..members.len() {
        for k in j + 1..members.len() {
            let (a, b) = (&members[j].projector, &members[k].projector);
            let orthogonality = if a.shape() == (dim, dim) && b.shape() == (dim, dim) {
                (a * b).frobenius_norm()
            } else {
                f64::INFINITY
            };
            pairs.push(PairReport { j, k, orthogonality });
        }
    }
    FamilyReport {
        dim,
        tolerance: MODEL_TOL,
        members: members_report,
        pairs,
    }
}

/// Validated set of mutually orthogonal projectors with positive rates.
/// Completeness (`Σ P_j = 1`) is not required.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectorFamily {
    dim: usize,
    members: Vec<ProjectorMember>,
}

impl ProjectorFamily {
    pub fn new(dim: usize, members: Vec<ProjectorMember>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::dim("projector family dimension must be positive"));
        }
        let report = validate_family(dim, &members);
        if let Some(msg) = report.first_failure() {
            return Err(Error::Validation(msg));
        }
        Ok(Self { dim, members })
    }

    /// Build from mixed matrix / vector inputs.
    pub fn from_inputs(dim: usize, inputs: Vec<(ProjectorInput, f64)>) -> Result<Self> {
        let members = inputs
            .into_iter()
            .enumerate()
            .map(|(j, (input, rate))| {
                let p = input.into_matrix(dim).map_err(|e| match e {
                    Error::Validation(msg) => Error::Validation(format!("projector {j}: {msg}")),
                    Error::Dimension(msg) => Error::Dimension(format!("projector {j}: {msg}")),
                    other => other,
                })?;
                Ok(ProjectorMember::new(p, rate))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(dim, members)
    }

    pub fn empty(dim: usize) -> Self {
        Self {
            dim,
            members: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn members(&self) -> &[ProjectorMember] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn report(&self) -> FamilyReport {
        validate_family(self.dim, &self.members)
    }

    /// Same family with members reordered by `order`.
    pub fn permuted(&self, order: &[usize]) -> Result<Self> {
        if order.len() != self.len() {
            return Err(Error::invalid("permutation length differs from family size"));
        }
        let members = order
            .iter()
            .map(|&j| {
                self.members
                    .get(j)
                    .cloned()
                    .ok_or_else(|| Error::invalid(format!("index {j} out of range")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.dim, members)
    }
}

/// Hamiltonian, dissipators, initial state and the times at which to look.
#[derive(Clone, Debug, PartialEq)]
pub struct Scenario {
    pub hamiltonian: Hamiltonian,
    pub family: ProjectorFamily,
    pub initial_state: DensityMatrix,
    pub time_grid: Vec<f64>,
}

impl Scenario {
    pub fn new(
        hamiltonian: Hamiltonian,
        family: ProjectorFamily,
        initial_state: DensityMatrix,
        time_grid: Vec<f64>,
    ) -> Result<Self> {
        let n = hamiltonian.dim();
        if family.dim() != n || initial_state.dim() != n {
            return Err(Error::dim(format!(
                "Hamiltonian is {n}x{n}, family is {}, state is {}",
                family.dim(),
                initial_state.dim()
            )));
        }
        if time_grid.is_empty() {
            return Err(Error::Validation("time grid is empty".into()));
        }
        if let Some(t) = time_grid.iter().find(|t| !t.is_finite()) {
            return Err(Error::Validation(format!("time grid contains {t}")));
        }
        if time_grid[0] < 0.0 {
            return Err(Error::Validation(format!(
                "time grid starts at {} (< 0)",
                time_grid[0]
            )));
        }
        if let Some(w) = time_grid.windows(2).position(|w| w[1] <= w[0]) {
            return Err(Error::Validation(format!(
                "time grid not strictly ascending at index {}",
                w + 1
            )));
        }
        Ok(Self {
            hamiltonian,
            family,
            initial_state,
            time_grid,
        })
    }

    pub fn dim(&self) -> usize {
        self.hamiltonian.dim()
    }

    pub fn with_time_grid(&self, time_grid: Vec<f64>) -> Result<Self> {
        Self::new(
            self.hamiltonian.clone(),
            self.family.clone(),
            self.initial_state.clone(),
            time_grid,
        )
    }
}

/// `n²×n²` matrix acting on row-stacked vectorized `n×n` matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct Superoperator {
    dim: usize,
    matrix: ComplexMatrix,
}

impl Superoperator {
    pub fn new(dim: usize, matrix: ComplexMatrix) -> Result<Self> {
        let n2 = dim * dim;
        if dim == 0 || matrix.shape() != (n2, n2) {
            return Err(Error::dim(format!(
                "superoperator on {dim}x{dim} matrices must be {n2}x{n2}, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(Self { dim, matrix })
    }

    pub fn zero(dim: usize) -> Self {
        let n2 = dim * dim;
        Self {
            dim,
            matrix: ComplexMatrix::zeros(n2, n2),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            dim,
            matrix: ComplexMatrix::identity(dim * dim),
        }
    }

    /// Dimension `n` of the underlying state space.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    /// `devec(S·vec(x))`.
    pub fn apply(&self, x: &ComplexMatrix) -> Result<ComplexMatrix> {
        if x.shape() != (self.dim, self.dim) {
            return Err(Error::dim(format!(
                "superoperator on {0}x{0} matrices applied to {1}x{2}",
                self.dim,
                x.rows(),
                x.cols()
            )));
        }
        devectorize(&self.matrix.apply(&vectorize(x)?)?, self.dim)
    }

    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        Self::new(self.dim, self.matrix.matmul(&rhs.matrix)?)
    }

    pub fn scale(&self, c: C64) -> Self {
        Self {
            dim: self.dim,
            matrix: self.matrix.scale(c),
        }
    }

    /// Hermitian and idempotent within `tol`.
    pub fn is_projector(&self, tol: f64) -> bool {
        is_projector(&self.matrix, tol)
    }
}

fn is_projector(m: &ComplexMatrix, tol: f64) -> bool {
    m.is_square()
        && m.hermiticity_residual() <= tol
        && (&(m * m) - m).frobenius_norm() <= tol
}

fn require_projector(p: &ComplexMatrix, what: &str) -> Result<()> {
    p.require_square(what)?;
    if !is_projector(p, MODEL_TOL) {
        return Err(Error::invalid(format!(
            "{what} is not a projector (hermiticity {:.3e}, idempotency {:.3e})",
            p.hermiticity_residual(),
            (&(p * p) - p).frobenius_norm()
        )));
    }
    Ok(())
}

/// `Q = 1 − P`.
pub fn complement(p: &ComplexMatrix) -> Result<ComplexMatrix> {
    require_projector(p, "complement input")?;
    Ok(&ComplexMatrix::identity(p.rows()) - p)
}

fn check_state_dim(family: &ProjectorFamily, rho: &ComplexMatrix) -> Result<()> {
    if rho.shape() != (family.dim(), family.dim()) {
        return Err(Error::dim(format!(
            "family acts on {0}x{0} matrices, got {1}x{2}",
            family.dim(),
            rho.rows(),
            rho.cols()
        )));
    }
    Ok(())
}

/// `D(ρ) = ½ Σ_j λ_j (P_j ρ Q_j + Q_j ρ P_j)`.
pub fn apply_dissipator(family: &ProjectorFamily, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
    check_state_dim(family, rho)?;
    let n = family.dim();
    let id = ComplexMatrix::identity(n);
    let mut out = ComplexMatrix::zeros(n, n);
    for m in family.members() {
        let p = &m.projector;
        let q = &id - p;
        let term = &(&(p * rho) * &q) + &(&(&q * rho) * p);
        out = &out + &term.scale_real(0.5 * m.rate);
    }
    Ok(out)
}

/// `D(ρ) = ½ Σ_j λ_j (P_j ρ + ρ P_j − 2 P_j ρ P_j)`, the Lindblad form of
/// the same operator.
pub fn apply_dissipator_lindblad_form(
    family: &ProjectorFamily,
    rho: &ComplexMatrix,
) -> Result<ComplexMatrix> {
    check_state_dim(family, rho)?;
    let n = family.dim();
    let mut out = ComplexMatrix::zeros(n, n);
    for m in family.members() {
        let p = &m.projector;
        let pr = p * rho;
        let term = &(&pr + &(rho * p)) - &(&pr * p).scale_real(2.0);
        out = &out + &term.scale_real(0.5 * m.rate);
    }
    Ok(out)
}

/// `−i(H⊗1 − 1⊗Hᵀ)`, the generator of `ρ ↦ −i[H, ρ]`.
pub fn build_hamiltonian_superop(h: &Hamiltonian) -> Superoperator {
    let n = h.dim();
    let id = ComplexMatrix::identity(n);
    let m = h.matrix();
    let generator = (&kron(m, &id) - &kron(&id, &m.transpose())).scale(-I);
    Superoperator { dim: n, matrix: generator }
}

/// `B = −Σ_j (λ_j/2)(P_j⊗Q_jᵀ + Q_j⊗P_jᵀ)`, the generator of `ρ ↦ −D(ρ)`.
pub fn build_dissipator_superop(family: &ProjectorFamily) -> Superoperator {
    let n = family.dim();
    let mut acc = ComplexMatrix::zeros(n * n, n * n);
    for m in family.members() {
        let r = r_matrix(&m.projector);
        acc = &acc - &r.scale_real(0.5 * m.rate);
    }
    Superoperator { dim: n, matrix: acc }
}

fn r_matrix(p: &ComplexMatrix) -> ComplexMatrix {
    let q = &ComplexMatrix::identity(p.rows()) - p;
    &kron(p, &q.transpose()) + &kron(&q, &p.transpose())
}

/// `R = P⊗Qᵀ + Q⊗Pᵀ`, itself a projector on the vectorized space.
pub fn build_r(p: &ComplexMatrix) -> Result<Superoperator> {
    require_projector(p, "R input")?;
    Ok(Superoperator {
        dim: p.rows(),
        matrix: r_matrix(p),
    })
}

/// `exp(scale·R) = 1 + (e^scale − 1)·R` for a projector `R`.
pub fn projector_exp(scale: f64, r: &Superoperator) -> Result<Superoperator> {
    if !scale.is_finite() {
        return Err(Error::invalid(format!("scale {scale} is not finite")));
    }
    if !r.is_projector(MODEL_TOL) {
        return Err(Error::invalid("projector_exp requires a projector superoperator"));
    }
    let factor = scale.exp_m1();
    let matrix = &ComplexMatrix::identity(r.matrix.rows()) + &r.matrix.scale_real(factor);
    Ok(Superoperator { dim: r.dim, matrix })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{hermitian_eigenvalues, matexp};

    fn real(rows: &[&[f64]]) -> ComplexMatrix {
        ComplexMatrix::from_real_rows(rows).unwrap()
    }

    fn plus() -> ComplexMatrix {
        real(&[&[0.5, 0.5], &[0.5, 0.5]])
    }

    fn minus() -> ComplexMatrix {
        real(&[&[0.5, -0.5], &[-0.5, 0.5]])
    }

    fn diag10() -> ComplexMatrix {
        ComplexMatrix::real_diag(&[1.0, 0.0])
    }

    #[test]
    fn validate_family_cases() {
        assert!(validate_family(2, &[ProjectorMember::new(diag10(), 1.0)]).passed());
        let pair = [ProjectorMember::new(plus(), 1.0), ProjectorMember::new(minus(), 2.0)];
        let report = validate_family(2, &pair);
        assert!(report.passed());
        assert!(report.pairs[0].orthogonality < 1e-15);

        let bad = real(&[&[1.0, 1.0], &[0.0, 0.0]]);
        let report = validate_family(2, &[ProjectorMember::new(bad, 1.0)]);
        assert!(!report.passed());
        assert!(report.members[0].hermiticity > MODEL_TOL);
        assert!(report.first_failure().unwrap().contains("not Hermitian"));
    }

    #[test]
    fn family_constructor_fails_fast() {
        let overlap = [ProjectorMember::new(diag10(), 1.0), ProjectorMember::new(plus(), 1.0)];
        let err = ProjectorFamily::new(2, overlap.to_vec()).unwrap_err();
        assert!(err.to_string().contains("(0, 1)"), "{err}");
        for rate in [0.0, -1.0, f64::NAN] {
            assert!(ProjectorFamily::new(2, vec![ProjectorMember::new(diag10(), rate)]).is_err());
        }
        assert!(ProjectorFamily::new(3, vec![ProjectorMember::new(diag10(), 1.0)]).is_err());
    }

    #[test]
    fn rank_two_from_vectors() {
        let e = |k: usize| {
            ComplexVector::new((0..4).map(|i| C64::new(if i == k { 1.0 } else { 0.0 }, 0.0)).collect())
                .unwrap()
        };
        let fam = ProjectorFamily::from_inputs(
            4,
            vec![(ProjectorInput::Vectors(vec![e(0), e(3)]), 0.5)],
        )
        .unwrap();
        assert!((fam.members()[0].projector.trace().re - 2.0).abs() < 1e-15);

        let not_orthonormal = ProjectorInput::Vectors(vec![e(0), e(0)]);
        assert!(ProjectorFamily::from_inputs(4, vec![(not_orthonormal, 1.0)]).is_err());
    }

    #[test]
    fn complement_cases() {
        assert_eq!(complement(&diag10()).unwrap(), ComplexMatrix::real_diag(&[0.0, 1.0]));
        assert_eq!(complement(&ComplexMatrix::zeros(3, 3)).unwrap(), ComplexMatrix::identity(3));
        assert_eq!(complement(&plus()).unwrap(), minus());
        assert_eq!(complement(&complement(&plus()).unwrap()).unwrap(), plus());
        assert!(complement(&real(&[&[2.0, 0.0], &[0.0, 0.0]])).is_err());
    }

    #[test]
    fn dissipator_hand_value() {
        let fam = ProjectorFamily::new(2, vec![ProjectorMember::new(diag10(), 2.0)]).unwrap();
        let d = apply_dissipator(&fam, &plus()).unwrap();
        assert!(d.distance(&real(&[&[0.0, 0.5], &[0.5, 0.0]])) < 1e-15);
        let d2 = apply_dissipator_lindblad_form(&fam, &plus()).unwrap();
        assert!(d.distance(&d2) < 1e-15);
    }

    #[test]
    fn dissipator_vanishes_on_commuting_state() {
        let fam = ProjectorFamily::new(
            2,
            vec![
                ProjectorMember::new(diag10(), 1.5),
                ProjectorMember::new(ComplexMatrix::real_diag(&[0.0, 1.0]), 0.3),
            ],
        )
        .unwrap();
        let rho = ComplexMatrix::real_diag(&[0.3, 0.7]);
        assert_eq!(apply_dissipator(&fam, &rho).unwrap().frobenius_norm(), 0.0);
        let empty = ProjectorFamily::empty(2);
        assert_eq!(apply_dissipator(&empty, &plus()).unwrap(), ComplexMatrix::zeros(2, 2));
        assert!(apply_dissipator(&empty, &ComplexMatrix::zeros(3, 3)).is_err());
    }

    #[test]
    fn hamiltonian_superop_cases() {
        let id = Hamiltonian::new(ComplexMatrix::identity(2)).unwrap();
        assert_eq!(build_hamiltonian_superop(&id).matrix().frobenius_norm(), 0.0);

        let h = Hamiltonian::new(diag10()).unwrap();
        let a = build_hamiltonian_superop(&h);
        let rho = real(&[&[0.0, 1.0], &[0.0, 0.0]]);
        let out = a.apply(&rho).unwrap();
        assert!(out.distance(&rho.scale(-I)) < 1e-15);
        assert!((&a.matrix().adjoint() + a.matrix()).frobenius_norm() < 1e-15);
    }

    #[test]
    fn dissipator_superop_single_member() {
        let lambda = 1.7;
        let fam = ProjectorFamily::new(2, vec![ProjectorMember::new(diag10(), lambda)]).unwrap();
        let b = build_dissipator_superop(&fam);
        let expected = ComplexMatrix::real_diag(&[0.0, 1.0, 1.0, 0.0]).scale_real(-lambda / 2.0);
        assert!(b.matrix().distance(&expected) < 1e-15);
        assert_eq!(build_dissipator_superop(&ProjectorFamily::empty(3)), Superoperator::zero(3));
    }

    #[test]
    fn dissipator_superop_spectrum() {
        // Three rank-1 projectors on C³ with rates a, b, c: each off-diagonal
        // element (j, k) of ρ decays at (λ_j + λ_k)/2.
        let (a, b, c) = (0.4, 1.0, 2.2);
        let fam = ProjectorFamily::new(
            3,
            vec![
                ProjectorMember::new(ComplexMatrix::real_diag(&[1.0, 0.0, 0.0]), a),
                ProjectorMember::new(ComplexMatrix::real_diag(&[0.0, 1.0, 0.0]), b),
                ProjectorMember::new(ComplexMatrix::real_diag(&[0.0, 0.0, 1.0]), c),
            ],
        )
        .unwrap();
        let bsup = build_dissipator_superop(&fam);
        let eig = hermitian_eigenvalues(bsup.matrix()).unwrap();
        let mut expected = vec![0.0, 0.0, 0.0];
        for (x, y) in [(a, b), (a, c), (b, c)] {
            expected.push(-(x + y) / 2.0);
            expected.push(-(x + y) / 2.0);
        }
        expected.sort_by(f64::total_cmp);
        for (e, x) in eig.iter().zip(&expected) {
            assert!((e - x).abs() < 1e-14, "{eig:?} vs {expected:?}");
        }

        // Single member: eigenvalues {0, 0, −λ/2, −λ/2}.
        let fam = ProjectorFamily::new(2, vec![ProjectorMember::new(plus(), 3.0)]).unwrap();
        let eig = hermitian_eigenvalues(build_dissipator_superop(&fam).matrix()).unwrap();
        for (e, x) in eig.iter().zip([-1.5, -1.5, 0.0, 0.0]) {
            assert!((e - x).abs() < 1e-14);
        }
    }

    #[test]
    fn r_cases() {
        let r = build_r(&diag10()).unwrap();
        assert_eq!(*r.matrix(), ComplexMatrix::real_diag(&[0.0, 1.0, 1.0, 0.0]));
        assert_eq!(build_r(&ComplexMatrix::zeros(2, 2)).unwrap(), Superoperator::zero(2));
        assert_eq!(build_r(&ComplexMatrix::identity(2)).unwrap(), Superoperator::zero(2));
        assert!(r.is_projector(1e-12));
        assert!(build_r(&real(&[&[1.0, 1.0], &[0.0, 0.0]])).is_err());
    }

    #[test]
    fn projector_exp_cases() {
        let r = build_r(&diag10()).unwrap();
        assert_eq!(projector_exp(0.0, &r).unwrap(), Superoperator::identity(2));

        let full = Superoperator::identity(2);
        let e = projector_exp(0.7, &full).unwrap();
        assert!(e.matrix().distance(&ComplexMatrix::identity(4).scale_real(0.7f64.exp())) < 1e-15);

        let e = projector_exp(-1.0, &r).unwrap();
        let em1 = (-1.0f64).exp();
        let expected = ComplexMatrix::real_diag(&[1.0, em1, em1, 1.0]);
        assert!(e.matrix().distance(&expected) < 1e-15);
        let via_matexp = matexp(&r.matrix().scale_real(-1.0)).unwrap();
        assert!(e.matrix().distance(&via_matexp) < 1e-14);

        let not_proj = Superoperator::identity(2).scale(C64::new(2.0, 0.0));
        assert!(projector_exp(1.0, &not_proj).is_err());
    }

    #[test]
    fn density_matrix_gates() {
        assert!(DensityMatrix::new(plus()).is_ok());
        assert!(DensityMatrix::new(ComplexMatrix::real_diag(&[0.5, 0.6])).is_err());
        assert!(DensityMatrix::new(ComplexMatrix::real_diag(&[1.5, -0.5])).is_err());
        assert!(DensityMatrix::new(real(&[&[0.5, 0.5], &[0.0, 0.5]])).is_err());
        assert!(Hamiltonian::new(real(&[&[0.0, 1.0], &[0.0, 0.0]])).is_err());
    }

    #[test]
    fn scenario_grid_checks() {
        let h = Hamiltonian::zero(2);
        let fam = ProjectorFamily::empty(2);
        let rho = DensityMatrix::maximally_mixed(2);
        let mk = |grid: Vec<f64>| Scenario::new(h.clone(), fam.clone(), rho.clone(), grid);
        assert!(mk(vec![0.0, 0.5, 1.0]).is_ok());
        assert!(mk(vec![]).is_err());
        assert!(mk(vec![-0.1, 1.0]).is_err());
        assert!(mk(vec![0.0, 1.0, 1.0]).is_err());
        assert!(Scenario::new(h, ProjectorFamily::empty(3), rho, vec![0.0]).is_err());
    }
}
