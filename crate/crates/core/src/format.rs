//! JSON wire format shared by the command-line tool and any other consumer.
//!
//! Element literals are always strings (`"-inf"`, `"3"`, `"1/2"`, `"{a,b}"`)
//! so rationals stay exact. Coordinate indices are 1-based.
//!
//! ```json
//! {"algebra": "max-plus", "A": [["inf"]], "w": ["inf"]}
//! ```
//!
//! A region member:
//!
//! ```json
//! {"lower": ["-inf"], "upper": ["inf"], "lowerExcluded": [1], "upperExcluded": []}
//! ```

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::qinterval::{QuasiInterval, SolutionRegion};
use crate::solver::SolveStats;
use crate::tensor::{Matrix, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemFile {
    pub algebra: String,
    #[serde(rename = "A")]
    pub a: Vec<Vec<String>>,
    pub w: Vec<String>,
}

/// A parsed system `A v = w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct System {
    pub algebra: Algebra,
    pub a: Matrix,
    pub w: Vector,
}

impl SystemFile {
    /// Parses the system, with `algebra` taking precedence over the file's
    /// own descriptor when given.
    pub fn parse(&self, algebra: Option<Algebra>) -> Result<System> {
        let algebra = match algebra {
            Some(alg) => alg,
            None => self.algebra.parse()?,
        };
        let a = Matrix::parse(algebra, &self.a)?;
        let w = Vector::parse(algebra, &self.w)?;
        if w.len() != a.rows() {
            return Err(Error::dims(
                format!("w of length {} (rows of A)", a.rows()),
                w.len(),
            ));
        }
        Ok(System { algebra, a, w })
    }

    pub fn from_system(a: &Matrix, w: &Vector) -> Self {
        SystemFile {
            algebra: a.algebra().to_string(),
            a: a.literal_rows(),
            w: w.literals(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct MemberRecord {
    pub lower: Vec<String>,
    pub upper: Vec<String>,
    pub lower_excluded: Vec<usize>,
    pub upper_excluded: Vec<usize>,
}

impl MemberRecord {
    pub fn from_interval(q: &QuasiInterval) -> Self {
        MemberRecord {
            lower: q.lower().literals(),
            upper: q.upper().literals(),
            lower_excluded: q.lower_excluded().iter().map(|k| k + 1).collect(),
            upper_excluded: q.upper_excluded().iter().map(|k| k + 1).collect(),
        }
    }

    pub fn to_interval(&self, algebra: Algebra) -> Result<QuasiInterval> {
        let zero_based = |ks: &[usize]| -> Result<BTreeSet<usize>> {
            ks.iter()
                .map(|&k| {
                    k.checked_sub(1)
                        .ok_or_else(|| Error::Parse("coordinate indices are 1-based".into()))
                })
                .collect()
        };
        QuasiInterval::new(
            Vector::parse(algebra, &self.lower)?,
            Vector::parse(algebra, &self.upper)?,
            zero_based(&self.lower_excluded)?,
            zero_based(&self.upper_excluded)?,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StatsRecord {
    pub choice_functions: u64,
    pub explored: u64,
    pub pruned: u64,
    pub terms: u64,
    pub wall_time_ms: f64,
}

impl StatsRecord {
    pub fn new(stats: &SolveStats, wall_time_ms: f64) -> Self {
        StatsRecord {
            choice_functions: u64::try_from(stats.choice_functions).unwrap_or(u64::MAX),
            explored: stats.explored,
            pruned: stats.pruned,
            terms: stats.terms,
            wall_time_ms,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionReport {
    pub system: SystemFile,
    pub members: Vec<MemberRecord>,
    pub greatest: Option<Vec<String>>,
    pub canonical: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stats: Option<StatsRecord>,
}

impl RegionReport {
    /// Rebuilds the region described by the report.
    pub fn region(&self) -> Result<SolutionRegion> {
        let alg: Algebra = self.system.algebra.parse()?;
        let members = self
            .members
            .iter()
            .map(|m| m.to_interval(alg))
            .collect::<Result<Vec<_>>>()?;
        let dim = self.system.a.first().map_or(0, Vec::len);
        SolutionRegion::new(alg, dim, members)
    }
}
