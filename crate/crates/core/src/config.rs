// SPDX-License-Identifier: Apache-2.0

//! JSON scenario documents.
//!
//! Complex numbers are `[re, im]` arrays and matrices are arrays of rows:
//!
//! ```json
//! {
//!   "name": "driven-qubit",
//!   "dimension": 2,
//!   "hamiltonian": [[[0, 0], [1, 0]], [[1, 0], [0, 0]]],
//!   "projectors": [
//!     { "matrix": [[[1, 0], [0, 0]], [[0, 0], [0, 0]]], "rate": 1.0 }
//!   ],
//!   "initial_state": [[[1, 0], [0, 0]], [[0, 0], [0, 0]]],
//!   "time_grid": [0.0, 0.05, 0.1]
//! }
//! ```
//!
//! A projector is given either as `"matrix"` or as `"vectors"`, a list of
//! orthonormal column vectors spanning its range. `"time_grid"` is either an
//! explicit ascending list or `{"start", "stop", "count", "spacing"}` with
//! `spacing` one of `"linear"` or `"log"`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, ComplexVector, C64};
use crate::model::{
    validate_family, DensityMatrix, FamilyReport, Hamiltonian, ProjectorFamily, ProjectorInput,
    ProjectorMember, Scenario,
};

pub type ComplexEntry = [f64; 2];
pub type MatrixEntries = Vec<Vec<ComplexEntry>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub dimension: usize,
    pub hamiltonian: MatrixEntries,
    pub projectors: Vec<ProjectorConfig>,
    pub initial_state: MatrixEntries,
    pub time_grid: TimeGridConfig,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProjectorConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<MatrixEntries>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vectors: Option<Vec<Vec<ComplexEntry>>>,
    pub rate: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TimeGridConfig {
    Explicit(Vec<f64>),
    Range(TimeRange),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TimeRange {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    #[serde(default)]
    pub spacing: Spacing,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    #[default]
    Linear,
    Log,
}

impl TimeRange {
    pub fn points(&self) -> Result<Vec<f64>> {
        let TimeRange { start, stop, count, spacing } = *self;
        if count == 0 {
            return Err(Error::Validation("time_grid: count must be >= 1".into()));
        }
        if count == 1 {
            return Ok(vec![start]);
        }
        let last = (count - 1) as f64;
        let pts = match spacing {
            Spacing::Linear => (0..count)
                .map(|i| if i == count - 1 { stop } else { start + (stop - start) * i as f64 / last })
                .collect(),
            Spacing::Log => {
                if start <= 0.0 || stop <= 0.0 {
                    return Err(Error::Validation(
                        "time_grid: log spacing needs start > 0 and stop > 0".into(),
                    ));
                }
                let ratio = (stop / start).ln();
                (0..count)
                    .map(|i| if i == count - 1 { stop } else { start * (ratio * i as f64 / last).exp() })
                    .collect()
            }
        };
        Ok(pts)
    }
}

impl TimeGridConfig {
    pub fn points(&self) -> Result<Vec<f64>> {
        match self {
            TimeGridConfig::Explicit(v) => Ok(v.clone()),
            TimeGridConfig::Range(r) => r.points(),
        }
    }
}

fn entry(z: C64) -> ComplexEntry {
    [z.re, z.im]
}

fn matrix_entries(m: &ComplexMatrix) -> MatrixEntries {
    (0..m.rows()).map(|i| m.row(i).iter().map(|&z| entry(z)).collect()).collect()
}

fn parse_matrix(field: &str, dim: usize, rows: &MatrixEntries) -> Result<ComplexMatrix> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(Error::Validation(format!("{field}: expected a {dim}x{dim} matrix")));
    }
    let rows: Vec<Vec<C64>> = rows
        .iter()
        .map(|r| r.iter().map(|&[re, im]| C64::new(re, im)).collect())
        .collect();
    ComplexMatrix::from_rows(&rows).map_err(|e| Error::Validation(format!("{field}: {e}")))
}

fn prefixed(field: String) -> impl FnOnce(Error) -> Error {
    move |e| match e {
        Error::Validation(m) => Error::Validation(format!("{field}: {m}")),
        Error::Dimension(m) => Error::Validation(format!("{field}: {m}")),
        Error::InvalidInput(m) => Error::Validation(format!("{field}: {m}")),
        other => other,
    }
}

impl ScenarioConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    fn projector_inputs(&self) -> Result<Vec<(ProjectorInput, f64)>> {
        let n = self.dimension;
        self.projectors
            .iter()
            .enumerate()
            .map(|(j, p)| {
                let field = format!("projectors[{j}]");
                let input = match (&p.matrix, &p.vectors) {
                    (Some(m), None) => ProjectorInput::Matrix(parse_matrix(&field, n, m)?),
                    (None, Some(vs)) => ProjectorInput::Vectors(
                        vs.iter()
                            .map(|v| {
                                ComplexVector::new(v.iter().map(|&[re, im]| C64::new(re, im)).collect())
                            })
                            .collect::<Result<_>>()
                            .map_err(prefixed(field.clone()))?,
                    ),
                    _ => {
                        return Err(Error::Validation(format!(
                            "{field}: give exactly one of \"matrix\" or \"vectors\""
                        )))
                    }
                };
                Ok((input, p.rate))
            })
            .collect()
    }

    /// Projector members normalized to matrix form, without checking the
    /// projector axioms.
    pub fn members(&self) -> Result<Vec<ProjectorMember>> {
        let n = self.dimension;
        self.projector_inputs()?
            .into_iter()
            .enumerate()
            .map(|(j, (input, rate))| {
                Ok(ProjectorMember::new(
                    input.into_matrix(n).map_err(prefixed(format!("projectors[{j}]")))?,
                    rate,
                ))
            })
            .collect()
    }

    /// Projector-axiom report for the document's family.
    pub fn family_report(&self) -> Result<FamilyReport> {
        if self.dimension == 0 {
            return Err(Error::Validation("dimension: must be positive".into()));
        }
        Ok(validate_family(self.dimension, &self.members()?))
    }

    pub fn to_scenario(&self) -> Result<Scenario> {
        let n = self.dimension;
        if n == 0 {
            return Err(Error::Validation("dimension: must be positive".into()));
        }
        let h = Hamiltonian::new(parse_matrix("hamiltonian", n, &self.hamiltonian)?)
            .map_err(prefixed("hamiltonian".into()))?;
        let family = ProjectorFamily::from_inputs(n, self.projector_inputs()?)
            .map_err(prefixed("projectors".into()))?;
        let rho0 = DensityMatrix::new(parse_matrix("initial_state", n, &self.initial_state)?)
            .map_err(prefixed("initial_state".into()))?;
        let grid = self.time_grid.points()?;
        Scenario::new(h, family, rho0, grid).map_err(prefixed("time_grid".into()))
    }

    /// Document for `scenario`, with projectors in matrix form and an
    /// explicit time grid.
    pub fn from_scenario(scenario: &Scenario, name: Option<String>) -> Self {
        Self {
            name,
            description: None,
            dimension: scenario.dim(),
            hamiltonian: matrix_entries(scenario.hamiltonian.matrix()),
            projectors: scenario
                .family
                .members()
                .iter()
                .map(|m| ProjectorConfig {
                    matrix: Some(matrix_entries(&m.projector)),
                    vectors: None,
                    rate: m.rate,
                })
                .collect(),
            initial_state: matrix_entries(scenario.initial_state.matrix()),
            time_grid: TimeGridConfig::Explicit(scenario.time_grid.clone()),
        }
    }
}

/// Parse and validate a JSON scenario document.
pub fn parse_config(text: &str) -> Result<Scenario> {
    ScenarioConfig::from_json(text)?.to_scenario()
}

pub fn scenario_to_json(scenario: &Scenario) -> String {
    ScenarioConfig::from_scenario(scenario, None).to_json()
}

/// Shipped scenario documents.
pub mod presets {
    use super::{parse_config, ScenarioConfig};
    use crate::error::{Error, Result};
    use crate::model::Scenario;

    pub const QUBIT_DEPHASING: &str = include_str!("../presets/qubit-dephasing.json");
    pub const DRIVEN_QUBIT: &str = include_str!("../presets/driven-qubit.json");
    pub const TWO_QUBIT_RANK2: &str = include_str!("../presets/two-qubit-rank2.json");
    pub const THREE_PROJECTOR: &str = include_str!("../presets/three-projector.json");

    pub const ALL: [(&str, &str); 4] = [
        ("qubit-dephasing", QUBIT_DEPHASING),
        ("driven-qubit", DRIVEN_QUBIT),
        ("two-qubit-rank2", TWO_QUBIT_RANK2),
        ("three-projector", THREE_PROJECTOR),
    ];

    pub fn names() -> impl Iterator<Item = &'static str> {
        ALL.iter().map(|(n, _)| *n)
    }

    pub fn text(name: &str) -> Option<&'static str> {
        ALL.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
    }

    fn unknown(name: &str) -> Error {
        Error::invalid(format!(
            "unknown preset {name:?} (available: {})",
            names().collect::<Vec<_>>().join(", ")
        ))
    }

    pub fn config(name: &str) -> Result<ScenarioConfig> {
        ScenarioConfig::from_json(text(name).ok_or_else(|| unknown(name))?)
    }

    pub fn load(name: &str) -> Result<Scenario> {
        parse_config(text(name).ok_or_else(|| unknown(name))?)
    }
}
