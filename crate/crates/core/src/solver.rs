//! Solution spaces of `A v = w` over a max-blank algebra.
//!
//! Row `i` is satisfied exactly when some column `j'` reaches `w(i)`
//! (`A(i,j') ⊗ v(j') = w(i)`) while every column stays at or below it
//! (`v(j) ≤ q_j^i`, the residual). That makes the row's solution set a union
//! of one quasi-interval per satisfiable column, all sharing the upper
//! endpoint `q_i`. Intersecting the rows and distributing the intersection
//! over the unions yields one term per choice function `i ↦ j'(i)`; each
//! term is again a quasi-interval.
//!
//! The choice functions are explored depth-first, keeping the running
//! intersection and cutting a branch as soon as it becomes empty.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::algebra::{Algebra, Element, ScalarSolution};
use crate::error::{Error, Result};
use crate::qinterval::{QuasiInterval, SolutionRegion};
use crate::tensor::{Matrix, Vector};

/// Default cap on the number of choice functions (before pruning).
pub const DEFAULT_TERM_BUDGET: u64 = 1_000_000;

/// Scalar analysis of one row of `A v = w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowAnalysis {
    algebra: Algebra,
    row: usize,
    solutions: Vec<ScalarSolution>,
    bounds: Vec<Element>,
}

impl RowAnalysis {
    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn row(&self) -> usize {
        self.row
    }

    pub fn dim(&self) -> usize {
        self.solutions.len()
    }

    /// `{v | A(i,j) ⊗ v = w(i)}` for each column `j`.
    pub fn solutions(&self) -> &[ScalarSolution] {
        &self.solutions
    }

    /// Residual bound `q_j^i` for each column, defined for every `j`.
    pub fn bounds(&self) -> &[Element] {
        &self.bounds
    }

    pub fn bound_vector(&self) -> Result<Vector> {
        Vector::new(self.algebra, self.bounds.clone())
    }

    /// Columns whose scalar equation is solvable.
    pub fn satisfiable(&self) -> Vec<usize> {
        self.columns(|s| !s.is_empty())
    }

    /// Satisfiable columns with a left-open scalar solution.
    pub fn left_open(&self) -> Vec<usize> {
        self.columns(ScalarSolution::is_left_open)
    }

    /// Satisfiable columns with a closed scalar solution.
    pub fn closed(&self) -> Vec<usize> {
        self.columns(|s| matches!(s, ScalarSolution::Closed(..)))
    }

    fn columns(&self, pred: impl Fn(&ScalarSolution) -> bool) -> Vec<usize> {
        (0..self.solutions.len())
            .filter(|&j| pred(&self.solutions[j]))
            .collect()
    }

    /// The row's solution set, one quasi-interval per satisfiable column `j'`:
    /// the scalar solution at `j'` and `[⊥, q_j^i]` at every other `j`.
    ///
    /// An empty list means the row cannot be satisfied.
    pub fn region(&self) -> Result<Vec<QuasiInterval>> {
        let upper = self.bound_vector()?;
        let bottom = Vector::bottom(self.algebra, self.dim())?;
        let mut out = Vec::new();
        for (j, sol) in self.solutions.iter().enumerate() {
            let Some(p) = sol.lower() else { continue };
            let lower = bottom.with(j, p.clone())?;
            let excluded = if sol.is_left_open() {
                BTreeSet::from([j])
            } else {
                BTreeSet::new()
            };
            out.push(QuasiInterval::new(
                lower,
                upper.clone(),
                excluded,
                BTreeSet::new(),
            )?);
        }
        Ok(out)
    }
}

/// Computes the scalar solutions and residual bounds of row `i`.
pub fn analyze_row(a: &Matrix, i: usize, w_i: &Element) -> Result<RowAnalysis> {
    let alg = a.algebra();
    if !alg.is_totally_ordered() {
        return Err(Error::NotTotallyOrdered(alg));
    }
    if i >= a.rows() {
        return Err(Error::dims(format!("row index < {}", a.rows()), i));
    }
    let mut solutions = Vec::with_capacity(a.cols());
    let mut bounds = Vec::with_capacity(a.cols());
    for coeff in a.row(i) {
        solutions.push(alg.solve_scalar(coeff, w_i)?);
        bounds.push(alg.residual(coeff, w_i)?);
    }
    Ok(RowAnalysis {
        algebra: alg,
        row: i,
        solutions,
        bounds,
    })
}

/// Free-function form of [`RowAnalysis::region`].
pub fn row_region(ra: &RowAnalysis) -> Result<Vec<QuasiInterval>> {
    ra.region()
}

/// The column chosen for each row, `i ↦ j'(i)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChoiceFunction(pub Vec<usize>);

impl ChoiceFunction {
    pub fn column(&self, row: usize) -> usize {
        self.0[row]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Drop empty and subsumed members from the result.
    pub canonicalize: bool,
    /// Maximum number of choice functions, counted before pruning.
    pub budget: u64,
    /// Worker threads for the search; 1 runs on the calling thread.
    pub threads: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            canonicalize: true,
            budget: DEFAULT_TERM_BUDGET,
            threads: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// `∏ |U_i|`, the number of choice functions before pruning.
    pub choice_functions: u128,
    /// Partial intersections computed during the search.
    pub explored: u64,
    /// Partial intersections found empty and cut off.
    pub pruned: u64,
    /// Complete choice functions with a non-empty term.
    pub terms: u64,
}

impl SolveStats {
    fn merge(&mut self, other: &SolveStats) {
        self.explored += other.explored;
        self.pruned += other.pruned;
        self.terms += other.terms;
    }
}

#[derive(Debug, Clone)]
pub struct Solution {
    pub region: SolutionRegion,
    pub stats: SolveStats,
}

/// One term of the expanded union together with the choice that produced it.
pub type Term = (ChoiceFunction, QuasiInterval);

fn check_system(a: &Matrix, w: &Vector) -> Result<()> {
    if a.algebra() != w.algebra() {
        return Err(Error::mismatch(format!(
            "matrix over {} with right-hand side over {}",
            a.algebra(),
            w.algebra()
        )));
    }
    if w.len() != a.rows() {
        return Err(Error::dims(
            format!("right-hand side of length {}", a.rows()),
            w.len(),
        ));
    }
    if !a.algebra().is_totally_ordered() {
        return Err(Error::NotTotallyOrdered(a.algebra()));
    }
    Ok(())
}

/// Analyzes every row of the system.
pub fn analyze(a: &Matrix, w: &Vector) -> Result<Vec<RowAnalysis>> {
    check_system(a, w)?;
    (0..a.rows())
        .map(|i| analyze_row(a, i, w.get(i)))
        .collect()
}

/// All non-empty terms of the union over choice functions, in lexicographic
/// choice order, without canonicalization.
pub fn expand_terms(a: &Matrix, w: &Vector, opts: &SolveOptions) -> Result<(Vec<Term>, SolveStats)> {
    let rows = analyze(a, w)?;
    let row_terms: Vec<Vec<(usize, QuasiInterval)>> = rows
        .iter()
        .map(|ra| Ok(ra.satisfiable().into_iter().zip(ra.region()?).collect()))
        .collect::<Result<_>>()?;

    let count = row_terms
        .iter()
        .fold(1u128, |acc, t| acc.saturating_mul(t.len() as u128));
    let mut stats = SolveStats {
        choice_functions: count,
        ..SolveStats::default()
    };
    if count == 0 {
        return Ok((Vec::new(), stats));
    }
    if count > u128::from(opts.budget) {
        return Err(Error::TermBudgetExceeded {
            count,
            budget: opts.budget,
        });
    }

    let full = QuasiInterval::full(a.algebra(), a.cols())?;
    let branch = |first: &(usize, QuasiInterval)| -> Result<(Vec<Term>, SolveStats)> {
        let mut search = Search {
            row_terms: &row_terms,
            out: Vec::new(),
            stats: SolveStats::default(),
            choice: Vec::with_capacity(row_terms.len()),
        };
        search.step(0, &full, first)?;
        Ok((search.out, search.stats))
    };

    let branches: Vec<Result<(Vec<Term>, SolveStats)>> = if opts.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .expect("failed to start solver threads");
        pool.install(|| row_terms[0].par_iter().map(branch).collect())
    } else {
        row_terms[0].iter().map(branch).collect()
    };

    let mut terms = Vec::new();
    for b in branches {
        let (out, s) = b?;
        terms.extend(out);
        stats.merge(&s);
    }
    Ok((terms, stats))
}

struct Search<'a> {
    row_terms: &'a [Vec<(usize, QuasiInterval)>],
    out: Vec<Term>,
    stats: SolveStats,
    choice: Vec<usize>,
}

impl Search<'_> {
    /// Intersects `current` with the chosen term of row `i` and recurses.
    fn step(&mut self, i: usize, current: &QuasiInterval, chosen: &(usize, QuasiInterval)) -> Result<()> {
        let next = current.intersect(&chosen.1)?;
        self.stats.explored += 1;
        if next.is_empty()? {
            self.stats.pruned += 1;
            return Ok(());
        }
        self.choice.push(chosen.0);
        if i + 1 == self.row_terms.len() {
            self.stats.terms += 1;
            self.out.push((ChoiceFunction(self.choice.clone()), next));
        } else {
            for t in &self.row_terms[i + 1] {
                self.step(i + 1, &next, t)?;
            }
        }
        self.choice.pop();
        Ok(())
    }
}

/// `X(A, w)` as a canonical finite union of quasi-intervals.
pub fn solve(a: &Matrix, w: &Vector) -> Result<SolutionRegion> {
    Ok(solve_with(a, w, &SolveOptions::default())?.region)
}

pub fn solve_with(a: &Matrix, w: &Vector, opts: &SolveOptions) -> Result<Solution> {
    let (terms, stats) = expand_terms(a, w, opts)?;
    let raw = SolutionRegion::new(
        a.algebra(),
        a.cols(),
        terms.into_iter().map(|(_, q)| q).collect(),
    )?;
    let region = if opts.canonicalize {
        raw.canonicalize()?
    } else {
        raw
    };
    Ok(Solution { region, stats })
}

/// The greatest solution `⋀_i q_i`, if it solves the system.
///
/// Whenever `X(A, w)` is non-empty this is its join, and every member of
/// the solved region has it as upper endpoint.
pub fn greatest_solution(a: &Matrix, w: &Vector) -> Result<Option<Vector>> {
    let rows = analyze(a, w)?;
    let bounds = rows
        .iter()
        .map(RowAnalysis::bound_vector)
        .collect::<Result<Vec<_>>>()?;
    let x = Vector::meet_all(&bounds)?.expect("matrix has at least one row");
    Ok(if a.mat_vec(&x)? == *w { Some(x) } else { None })
}

/// Whether `A v = w` holds exactly.
pub fn verify(a: &Matrix, w: &Vector, v: &Vector) -> Result<bool> {
    if w.len() != a.rows() {
        return Err(Error::dims(
            format!("right-hand side of length {}", a.rows()),
            w.len(),
        ));
    }
    if w.algebra() != a.algebra() {
        return Err(Error::mismatch("right-hand side over a different algebra"));
    }
    Ok(a.mat_vec(v)? == *w)
}
