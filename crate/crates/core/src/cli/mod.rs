//! File formats, algorithm dispatch, witnesses and rendering behind the
//! command-line tool.

mod format;
mod render;
mod svg;
mod witness;
#[cfg(test)]
mod tests;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::k2::{test_k2, K2Error};
use crate::model::{ClusteredGraph, PermutationAssignment, Violation};
use crate::oracle::{oracle_fixed, oracle_free, test_assignment, OracleError, Witness};
use crate::sp::{test_partial_2_tree, SpError};

pub use format::{parse, serialize, FormatError, FORMAT_VERSION};
pub use render::{audit, compute_layout, Defect, Matrix, NodeTrixLayout, Pt, RenderError, Route};
pub use svg::render_svg;
pub use witness::{RotationEntry, SideEntry, WitnessDoc};

/// Budget variable read by the command-line tool.
pub const BUDGET_ENV: &str = "NTP_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Auto,
    K2,
    Sp,
    Oracle,
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "auto" => Ok(Algorithm::Auto),
            "k2" => Ok(Algorithm::K2),
            "sp" => Ok(Algorithm::Sp),
            "oracle" => Ok(Algorithm::Oracle),
            _ => Err(format!("unknown algorithm {s:?} (expected auto, k2, sp or oracle)")),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Auto => "auto",
            Algorithm::K2 => "k2",
            Algorithm::Sp => "sp",
            Algorithm::Oracle => "oracle",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TestError {
    #[error("invalid instance: {0}")]
    Invalid(Violation),
    #[error("algorithm {0} does not apply: {1}")]
    NotApplicable(Algorithm, String),
    #[error("budget of {0} constrained-planarity calls exceeded")]
    BudgetExceeded(u64),
    #[error(transparent)]
    Sp(SpError),
    #[error(transparent)]
    K2(K2Error),
    #[error(transparent)]
    Oracle(OracleError),
    #[error("{0} accepted a permutation assignment that the wheel reduction rejects")]
    Inconsistent(Algorithm),
}

impl TestError {
    /// Exit status of the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            TestError::BudgetExceeded(_) => 2,
            _ => 3,
        }
    }
}

impl From<OracleError> for TestError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::BudgetExceeded(b) => TestError::BudgetExceeded(b),
            other => TestError::Oracle(other),
        }
    }
}

/// Result of [`run_test`].
#[derive(Clone, Debug)]
pub struct Outcome {
    /// Algorithm that decided the instance.
    pub algorithm: Algorithm,
    /// The input with the side assignment of the witness (the input itself
    /// in the fixed model or when rejected).
    pub sided: ClusteredGraph,
    pub witness: Option<Witness>,
    /// Constrained-planarity calls, for the oracle.
    pub calls: Option<u64>,
}

impl Outcome {
    pub fn planar(&self) -> bool {
        self.witness.is_some()
    }

    pub fn exit_code(&self) -> i32 {
        if self.planar() {
            0
        } else {
            1
        }
    }
}

/// Decides `g` with the requested algorithm. `Auto` sends fixed-sides
/// instances with clusters of size at most two to the k2 tester, instances
/// whose light reduction has a partial-2-tree frame to the series-parallel
/// tester and everything else, including the free model, to the oracle.
/// Every accepted permutation assignment is checked against the wheel
/// reduction, which also yields the witness embedding.
pub fn run_test(g: &ClusteredGraph, algorithm: Algorithm, budget: u64) -> Result<Outcome, TestError> {
    if let Some(v) = g.validate().into_iter().next() {
        return Err(TestError::Invalid(v));
    }
    if g.sides.is_none() {
        if !matches!(algorithm, Algorithm::Auto | Algorithm::Oracle) {
            return Err(TestError::NotApplicable(algorithm, "sides are free".into()));
        }
        let v = oracle_free(g, budget)?;
        let sided = v.sides.map_or_else(|| g.clone(), |s| g.with_sides(s));
        return Ok(Outcome { algorithm: Algorithm::Oracle, sided, witness: v.witness, calls: Some(v.calls) });
    }
    match algorithm {
        Algorithm::Auto if g.max_cluster_size() <= 2 => run_test(g, Algorithm::K2, budget),
        Algorithm::Auto => match run_test(g, Algorithm::Sp, budget) {
            Err(TestError::NotApplicable(..)) => run_test(g, Algorithm::Oracle, budget),
            other => other,
        },
        Algorithm::K2 => {
            if g.max_cluster_size() > 2 {
                return Err(TestError::NotApplicable(algorithm, "a cluster has more than two vertices".into()));
            }
            let v = test_k2(g).map_err(TestError::K2)?;
            confirm(g, algorithm, v.pi)
        }
        Algorithm::Sp => {
            let light = if g.is_light() { g.clone() } else { g.light_reduce() };
            let v = match test_partial_2_tree(&light) {
                Err(SpError::FrameNotPartial2Tree) | Err(SpError::FrameNotSeriesParallel) => {
                    return Err(TestError::NotApplicable(algorithm, "frame is not a partial 2-tree".into()))
                }
                other => other.map_err(TestError::Sp)?,
            };
            // Light reduction appends clusters, so the original ones keep
            // their indices.
            let pi = v.pi.map(|p| PermutationAssignment(p.0[..g.clusters.len()].to_vec()));
            confirm(g, algorithm, pi)
        }
        Algorithm::Oracle => {
            let v = oracle_fixed(g, budget)?;
            Ok(Outcome { algorithm, sided: g.clone(), witness: v.witness, calls: Some(v.calls) })
        }
    }
}

fn confirm(g: &ClusteredGraph, algorithm: Algorithm, pi: Option<PermutationAssignment>) -> Result<Outcome, TestError> {
    let witness = match pi {
        None => None,
        Some(pi) => Some(test_assignment(g, &pi).ok_or(TestError::Inconsistent(algorithm))?),
    };
    Ok(Outcome { algorithm, sided: g.clone(), witness, calls: None })
}
