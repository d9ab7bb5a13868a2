//! JSON payloads shared by the command line and the HTTP API.
//!
//! Boards and press sets travel as row-major '0'/'1' strings, button 1 first. Press
//! sets additionally carry their 1-based button list.

use serde::{Deserialize, Serialize};

use luminous_core::solver::{Parity, SweepReport, SweepRow};
use luminous_core::{DetResult, PressVector, SingularityVerdict, SolveReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PressSet {
    pub bits: String,
    pub buttons: Vec<usize>,
}

impl From<&PressVector> for PressSet {
    fn from(x: &PressVector) -> Self {
        Self {
            bits: x.to_bit_string(),
            buttons: x.buttons(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolveReportJson {
    pub rows: usize,
    pub cols: usize,
    pub config: String,
    pub solvable: bool,
    pub nullity: usize,
    /// Decimal string; 2^nullity can exceed any fixed-width integer.
    pub solution_count: String,
    pub particular: Option<PressSet>,
    pub minimal: Option<PressSet>,
    pub minimal_weight: Option<usize>,
    pub certified: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solutions: Option<Vec<PressSet>>,
}

impl SolveReportJson {
    pub fn new(config: String, report: &SolveReport, solutions: Option<Vec<PressSet>>) -> Self {
        Self {
            rows: report.dims.rows(),
            cols: report.dims.cols(),
            config,
            solvable: report.solvable,
            nullity: report.nullity,
            solution_count: report.solution_count.to_string(),
            particular: report.particular.as_ref().map(PressSet::from),
            minimal: report.minimal.as_ref().map(PressSet::from),
            minimal_weight: report.minimal_weight,
            certified: report.certified,
            solutions,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DetJson {
    pub m: usize,
    pub n: usize,
    pub exact_zero: bool,
    /// Eigenvalue product; `null` if it left the double range.
    pub float: Option<f64>,
    /// Exact determinant as a decimal string; `null` above the exact-determinant cap.
    pub bareiss: Option<String>,
}

impl DetJson {
    pub fn new(m: usize, n: usize, det: &DetResult) -> Self {
        Self {
            m,
            n,
            exact_zero: det.exact_zero,
            float: det.float_value.is_finite().then_some(det.float_value),
            bareiss: det.exact_value.as_ref().map(ToString::to_string),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CriterionJson {
    pub m: usize,
    pub n: usize,
    pub singular: bool,
    pub conditions: Vec<String>,
}

impl CriterionJson {
    pub fn new(m: usize, n: usize, v: &SingularityVerdict) -> Self {
        Self {
            m,
            n,
            singular: v.singular,
            conditions: v.conditions.iter().map(|c| c.name().to_owned()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoardJson {
    pub rows: usize,
    pub cols: usize,
    pub seed: u64,
    pub config: String,
    pub solvable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HintJson {
    pub rows: usize,
    pub cols: usize,
    pub solvable: bool,
    /// Button to press next; `null` when the board is dark or unsolvable.
    pub hint: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub field: String,
    pub matrix: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepRowJson {
    pub m: usize,
    pub n: usize,
    pub singular: bool,
    pub conditions: Vec<String>,
    pub nullity: usize,
    /// "even", "odd", or `null` when the exact determinant was not computed.
    pub det_parity: Option<String>,
}

impl From<&SweepRow> for SweepRowJson {
    fn from(r: &SweepRow) -> Self {
        Self {
            m: r.m,
            n: r.n,
            singular: r.verdict.singular,
            conditions: r.verdict.conditions.iter().map(|c| c.name().to_owned()).collect(),
            nullity: r.nullity,
            det_parity: r.det_parity.map(|p| {
                match p {
                    Parity::Even => "even",
                    Parity::Odd => "odd",
                }
                .to_owned()
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepJson {
    pub max: usize,
    pub table: Vec<SweepRowJson>,
    /// Closed form says nonsingular, GF(2) nullity is positive.
    pub discrepancies: Vec<SweepRowJson>,
    /// Closed form says singular, GF(2) nullity is zero. Expected to be empty.
    pub violations: Vec<SweepRowJson>,
    /// Exact determinant parity disagrees with GF(2) invertibility. Expected to be empty.
    pub parity_mismatches: Vec<SweepRowJson>,
}

impl From<&SweepReport> for SweepJson {
    fn from(r: &SweepReport) -> Self {
        Self {
            max: r.max,
            table: r.rows.iter().map(SweepRowJson::from).collect(),
            discrepancies: r.discrepancies().map(SweepRowJson::from).collect(),
            violations: r.violations().map(SweepRowJson::from).collect(),
            parity_mismatches: r.parity_mismatches().map(SweepRowJson::from).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorJson {
    pub error: String,
}

/// Body of `POST /api/solve`.
#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SolveRequest {
    pub rows: usize,
    pub cols: usize,
    pub config: String,
    #[serde(default)]
    pub all: bool,
    #[serde(default)]
    pub cap: Option<usize>,
}

/// Body of `POST /api/hint`.
#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct HintRequest {
    pub rows: usize,
    pub cols: usize,
    pub config: String,
}
