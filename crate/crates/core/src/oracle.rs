//! Ground truth that does not go through the solver: exhaustive enumeration
//! over finite carriers, breakpoint grids for the dense carriers, and direct
//! checks of the order-theoretic structure of solution sets.

use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;

use crate::algebra::{midpoint, step, Algebra, Element, ExtRational};
use crate::error::{Error, Result};
use crate::qinterval::SolutionRegion;
use crate::solver;
use crate::tensor::{Matrix, Vector};

/// Default cap on the number of candidate vectors an oracle will visit.
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 1_000_000;

/// Every vector of `carrierⁿ`, in lexicographic carrier order.
pub fn all_vectors(alg: Algebra, n: usize, limit: u64) -> Result<Vec<Vector>> {
    let carrier = alg.carrier().ok_or(Error::CarrierNotFinite(alg))?;
    let size = (carrier.len() as u128).saturating_pow(n as u32);
    if size > u128::from(limit) {
        return Err(Error::EnumerationTooLarge { size, limit });
    }
    std::iter::repeat_n(carrier, n)
        .multi_cartesian_product()
        .map(|entries| Vector::new(alg, entries))
        .collect()
}

/// `X(A, w)` by testing every vector of a finite carrier.
pub fn enumerate_solutions(a: &Matrix, w: &Vector) -> Result<Vec<Vector>> {
    enumerate_solutions_limited(a, w, DEFAULT_ENUMERATION_LIMIT)
}

pub fn enumerate_solutions_limited(a: &Matrix, w: &Vector, limit: u64) -> Result<Vec<Vector>> {
    if w.len() != a.rows() {
        return Err(Error::dims(a.rows(), w.len()));
    }
    let mut out = Vec::new();
    for v in all_vectors(a.algebra(), a.cols(), limit)? {
        if a.mat_vec(&v)? == *w {
            out.push(v);
        }
    }
    Ok(out)
}

/// A product grid of test points, one ascending list per coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleGrid {
    algebra: Algebra,
    coords: Vec<Vec<Element>>,
}

impl SampleGrid {
    /// Grid through the given per-coordinate breakpoints.
    ///
    /// Dense carriers get `−∞`, `∞`, the breakpoints, the midpoint of every
    /// pair of consecutive finite breakpoints and one probe beyond each
    /// finite extreme (or `0` when there is no finite breakpoint). Finite
    /// carriers get the whole carrier.
    pub fn from_breakpoints(alg: Algebra, breakpoints: Vec<BTreeSet<Element>>) -> Result<Self> {
        let coords = breakpoints
            .into_iter()
            .map(|points| {
                if let Some(carrier) = alg.carrier() {
                    return Ok(carrier);
                }
                for p in &points {
                    alg.check(p)?;
                }
                Ok(refine_dense(points))
            })
            .collect::<Result<_>>()?;
        Ok(SampleGrid { algebra: alg, coords })
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn coords(&self) -> &[Vec<Element>] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Number of grid points.
    pub fn size(&self) -> u128 {
        self.coords
            .iter()
            .fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128))
    }

    /// The point with the given per-coordinate indices.
    pub fn point(&self, index: &[usize]) -> Vector {
        let entries = index
            .iter()
            .zip(&self.coords)
            .map(|(&i, c)| c[i].clone())
            .collect();
        Vector::new(self.algebra, entries).expect("grid entries belong to the algebra")
    }

    /// All index tuples in lexicographic order.
    pub fn indices(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.coords
            .iter()
            .map(|c| 0..c.len())
            .multi_cartesian_product()
    }

    pub fn points(&self) -> impl Iterator<Item = Vector> + '_ {
        self.indices().map(|idx| self.point(&idx))
    }
}

fn refine_dense(points: BTreeSet<Element>) -> Vec<Element> {
    let mut out: BTreeSet<Element> = points;
    out.insert(Element::neg_inf());
    out.insert(Element::pos_inf());
    let finite: Vec<_> = out
        .iter()
        .filter_map(|e| match e {
            Element::Ext(ExtRational::Finite(q)) => Some(q.clone()),
            _ => None,
        })
        .collect();
    match (finite.first(), finite.last()) {
        (Some(lo), Some(hi)) => {
            let mut extra = vec![step(lo, true), step(hi, false)];
            extra.extend(finite.iter().tuple_windows().map(|(a, b)| midpoint(a, b)));
            out.extend(extra.into_iter().map(|q| Element::Ext(ExtRational::Finite(q))));
        }
        _ => {
            out.insert(Element::int(0));
        }
    }
    out.into_iter().collect()
}

/// The breakpoint grid of a system: per coordinate `j`, every `q_j^i`, every
/// defined `p_j^i`, `−∞`, `∞`, and the probes of
/// [`SampleGrid::from_breakpoints`].
pub fn build_grid(a: &Matrix, w: &Vector) -> Result<SampleGrid> {
    let rows = solver::analyze(a, w)?;
    let mut per_coord = vec![BTreeSet::new(); a.cols()];
    for ra in &rows {
        for (j, (sol, q)) in ra.solutions().iter().zip(ra.bounds()).enumerate() {
            per_coord[j].insert(q.clone());
            if let Some(p) = sol.lower() {
                per_coord[j].insert(p.clone());
            }
            if let Some(q) = sol.upper() {
                per_coord[j].insert(q.clone());
            }
        }
    }
    SampleGrid::from_breakpoints(a.algebra(), per_coord)
}

/// First point where region membership disagrees with `A v = w`.
pub fn first_disagreement(
    region: &SolutionRegion,
    a: &Matrix,
    w: &Vector,
    points: impl IntoIterator<Item = Vector>,
) -> Result<Option<Vector>> {
    for v in points {
        if region.contains(&v)? != solver::verify(a, w, &v)? {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// Outcome of [`check_joinblank_structure`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureReport {
    /// All checks hold; `terminal` is `⋁X`, absent when `X` is empty.
    Pass { terminal: Option<Vector> },
    Fail {
        property: StructureProperty,
        counterexample: Vec<Vector>,
    },
}

impl StructureReport {
    pub fn is_pass(&self) -> bool {
        matches!(self, StructureReport::Pass { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureProperty {
    /// `⋁X ∈ X`.
    TerminalPoint,
    /// `[u, ⋁X] ⊆ X` for every `u ∈ X`.
    OrderInterval,
    /// `u ∨ v ∈ X` for all `u, v ∈ X`.
    JoinClosure,
}

/// Checks that a finite solution set has the union-of-intervals shape
/// `X = ⋃_{u ∈ X} [u, x]` with `x = ⋁X`, and is closed under pairwise joins.
///
/// Works over any finite join-blank algebra, including power sets, using
/// the lattice order.
pub fn check_joinblank_structure(alg: Algebra, n: usize, x_set: &[Vector]) -> Result<StructureReport> {
    check_joinblank_structure_limited(alg, n, x_set, DEFAULT_ENUMERATION_LIMIT)
}

pub fn check_joinblank_structure_limited(
    alg: Algebra,
    n: usize,
    x_set: &[Vector],
    limit: u64,
) -> Result<StructureReport> {
    let Some(terminal) = Vector::join_all(x_set)? else {
        return Ok(StructureReport::Pass { terminal: None });
    };
    let members: HashSet<&Vector> = x_set.iter().collect();
    if !members.contains(&terminal) {
        return Ok(StructureReport::Fail {
            property: StructureProperty::TerminalPoint,
            counterexample: vec![terminal],
        });
    }
    for z in all_vectors(alg, n, limit)? {
        if !z.leq(&terminal)? || members.contains(&z) {
            continue;
        }
        for u in x_set {
            if u.leq(&z)? {
                return Ok(StructureReport::Fail {
                    property: StructureProperty::OrderInterval,
                    counterexample: vec![u.clone(), z],
                });
            }
        }
    }
    for (u, v) in x_set.iter().tuple_combinations() {
        let j = u.join(v)?;
        if !members.contains(&j) {
            return Ok(StructureReport::Fail {
                property: StructureProperty::JoinClosure,
                counterexample: vec![u.clone(), v.clone()],
            });
        }
    }
    Ok(StructureReport::Pass {
        terminal: Some(terminal),
    })
}
