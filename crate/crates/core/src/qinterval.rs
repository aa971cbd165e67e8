//! Quasi-intervals: boxes in `Vⁿ` whose coordinate intervals may exclude
//! either endpoint, and finite unions of them.
//!
//! Exclusion sets hold 0-based coordinate indices.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::tensor::Vector;

/// `I₁ × ⋯ × Iₙ` where `I_k` runs from `lower(k)` to `upper(k)`, excluding
/// `lower(k)` when `k ∈ lower_excluded` and `upper(k)` when
/// `k ∈ upper_excluded`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuasiInterval {
    lower: Vector,
    upper: Vector,
    lower_excluded: BTreeSet<usize>,
    upper_excluded: BTreeSet<usize>,
}

impl QuasiInterval {
    pub fn new(
        lower: Vector,
        upper: Vector,
        lower_excluded: BTreeSet<usize>,
        upper_excluded: BTreeSet<usize>,
    ) -> Result<Self> {
        if lower.algebra() != upper.algebra() {
            return Err(Error::mismatch(format!(
                "endpoints over {} and {}",
                lower.algebra(),
                upper.algebra()
            )));
        }
        let n = lower.len();
        if upper.len() != n {
            return Err(Error::dims(n, upper.len()));
        }
        if let Some(&k) = lower_excluded.iter().chain(&upper_excluded).find(|&&k| k >= n) {
            return Err(Error::dims(format!("coordinate index < {n}"), k));
        }
        Ok(QuasiInterval {
            lower,
            upper,
            lower_excluded,
            upper_excluded,
        })
    }

    /// The closed interval `[lower, upper]`.
    pub fn closed(lower: Vector, upper: Vector) -> Result<Self> {
        QuasiInterval::new(lower, upper, BTreeSet::new(), BTreeSet::new())
    }

    /// The closed box `[⊥, ⊤]ⁿ`.
    pub fn full(algebra: Algebra, n: usize) -> Result<Self> {
        QuasiInterval::closed(Vector::bottom(algebra, n)?, Vector::top(algebra, n)?)
    }

    pub fn algebra(&self) -> Algebra {
        self.lower.algebra()
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &Vector {
        &self.lower
    }

    pub fn upper(&self) -> &Vector {
        &self.upper
    }

    pub fn lower_excluded(&self) -> &BTreeSet<usize> {
        &self.lower_excluded
    }

    pub fn upper_excluded(&self) -> &BTreeSet<usize> {
        &self.upper_excluded
    }

    pub fn is_right_closed(&self) -> bool {
        self.upper_excluded.is_empty()
    }

    fn side(&self, k: usize) -> Side<'_> {
        Side {
            lo: self.lower.get(k),
            lo_open: self.lower_excluded.contains(&k),
            hi: self.upper.get(k),
            hi_open: self.upper_excluded.contains(&k),
        }
    }

    fn conformable(&self, algebra: Algebra, n: usize) -> Result<()> {
        if algebra != self.algebra() {
            return Err(Error::mismatch(format!(
                "{} quasi-interval used with {algebra}",
                self.algebra()
            )));
        }
        if n != self.dim() {
            return Err(Error::dims(self.dim(), n));
        }
        Ok(())
    }

    pub fn contains(&self, v: &Vector) -> Result<bool> {
        self.conformable(v.algebra(), v.len())?;
        let alg = self.algebra();
        for (k, x) in v.entries().iter().enumerate() {
            if !self.side(k).contains(alg, x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_empty(&self) -> Result<bool> {
        let alg = self.algebra();
        if !alg.is_totally_ordered() {
            return Err(Error::NotTotallyOrdered(alg));
        }
        for k in 0..self.dim() {
            if self.side(k).is_empty(alg)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Intersection of two quasi-intervals over a totally ordered algebra.
    ///
    /// The lower endpoint is `p ∨ r`, excluded exactly when an input attaining
    /// it excludes it; the upper endpoint is `q ∧ s` under the mirrored rule.
    /// For right-closed inputs this is the exclusion set
    /// `{i ∈ A∖B | p(i) ≥ r(i)} ∪ {j ∈ B∖A | p(j) ≤ r(j)} ∪ (A ∩ B)`.
    /// The result is not canonicalized and may be empty.
    pub fn intersect(&self, other: &QuasiInterval) -> Result<QuasiInterval> {
        other.conformable(self.algebra(), self.dim())?;
        let alg = self.algebra();
        if !alg.is_totally_ordered() {
            return Err(Error::NotTotallyOrdered(alg));
        }
        let n = self.dim();
        let mut lower = Vec::with_capacity(n);
        let mut upper = Vec::with_capacity(n);
        let mut lower_excluded = BTreeSet::new();
        let mut upper_excluded = BTreeSet::new();
        for k in 0..n {
            let (a, b) = (self.side(k), other.side(k));
            let (lo, lo_open) = match a.lo.cmp(b.lo) {
                Ordering::Greater => (a.lo, a.lo_open),
                Ordering::Less => (b.lo, b.lo_open),
                Ordering::Equal => (a.lo, a.lo_open || b.lo_open),
            };
            let (hi, hi_open) = match a.hi.cmp(b.hi) {
                Ordering::Less => (a.hi, a.hi_open),
                Ordering::Greater => (b.hi, b.hi_open),
                Ordering::Equal => (a.hi, a.hi_open || b.hi_open),
            };
            lower.push(lo.clone());
            upper.push(hi.clone());
            if lo_open {
                lower_excluded.insert(k);
            }
            if hi_open {
                upper_excluded.insert(k);
            }
        }
        Ok(QuasiInterval {
            lower: Vector::new(alg, lower)?,
            upper: Vector::new(alg, upper)?,
            lower_excluded,
            upper_excluded,
        })
    }

    /// Whether every point of `other` lies in `self`, decided per coordinate.
    pub fn subsumes(&self, other: &QuasiInterval) -> Result<bool> {
        other.conformable(self.algebra(), self.dim())?;
        if other.is_empty()? {
            return Ok(true);
        }
        if self.is_empty()? {
            return Ok(false);
        }
        let alg = self.algebra();
        for k in 0..self.dim() {
            if !self.side(k).covers(alg, &other.side(k))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for QuasiInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alg = self.algebra();
        let parts: Vec<String> = (0..self.dim())
            .map(|k| {
                let s = self.side(k);
                format!(
                    "{}{}, {}{}",
                    if s.lo_open { '(' } else { '[' },
                    alg.format_element(s.lo),
                    alg.format_element(s.hi),
                    if s.hi_open { ')' } else { ']' },
                )
            })
            .collect();
        f.write_str(&parts.join(" × "))
    }
}

/// One coordinate interval.
struct Side<'a> {
    lo: &'a Element,
    lo_open: bool,
    hi: &'a Element,
    hi_open: bool,
}

impl Side<'_> {
    fn contains(&self, alg: Algebra, x: &Element) -> Result<bool> {
        let above = if self.lo_open {
            alg.lt(self.lo, x)?
        } else {
            alg.leq(self.lo, x)?
        };
        let below = if self.hi_open {
            alg.lt(x, self.hi)?
        } else {
            alg.leq(x, self.hi)?
        };
        Ok(above && below)
    }

    fn is_empty(&self, alg: Algebra) -> Result<bool> {
        Ok(match alg.compare(self.lo, self.hi)? {
            Ordering::Greater => true,
            Ordering::Equal => self.lo_open || self.hi_open,
            Ordering::Less => self.lo_open && self.hi_open && !alg.has_interior(self.lo, self.hi)?,
        })
    }

    /// Closed bounds `[lo, hi]` of a non-empty interval over a finite chain.
    fn closed_bounds(&self, alg: Algebra) -> Result<(Element, Element)> {
        let lo = if self.lo_open {
            alg.successor(self.lo)?
        } else {
            Some(self.lo.clone())
        };
        let hi = if self.hi_open {
            alg.predecessor(self.hi)?
        } else {
            Some(self.hi.clone())
        };
        match (lo, hi) {
            (Some(lo), Some(hi)) => Ok((lo, hi)),
            _ => unreachable!("closed_bounds called on an empty interval"),
        }
    }

    /// `self ⊇ other`, both non-empty.
    fn covers(&self, alg: Algebra, other: &Side<'_>) -> Result<bool> {
        if alg.is_dense() {
            let lower_ok = match self.lo.cmp(other.lo) {
                Ordering::Less => true,
                Ordering::Equal => !self.lo_open || other.lo_open,
                Ordering::Greater => false,
            };
            let upper_ok = match self.hi.cmp(other.hi) {
                Ordering::Greater => true,
                Ordering::Equal => !self.hi_open || other.hi_open,
                Ordering::Less => false,
            };
            Ok(lower_ok && upper_ok)
        } else {
            let (lo1, hi1) = self.closed_bounds(alg)?;
            let (lo2, hi2) = other.closed_bounds(alg)?;
            Ok(lo1 <= lo2 && hi2 <= hi1)
        }
    }
}

/// A finite union of quasi-intervals sharing an algebra and dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionRegion {
    algebra: Algebra,
    dim: usize,
    members: Vec<QuasiInterval>,
}

impl SolutionRegion {
    pub fn new(algebra: Algebra, dim: usize, members: Vec<QuasiInterval>) -> Result<Self> {
        for q in &members {
            q.conformable(algebra, dim)?;
        }
        Ok(SolutionRegion {
            algebra,
            dim,
            members,
        })
    }

    pub fn empty(algebra: Algebra, dim: usize) -> Self {
        SolutionRegion {
            algebra,
            dim,
            members: Vec::new(),
        }
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn members(&self) -> &[QuasiInterval] {
        &self.members
    }

    pub fn into_members(self) -> Vec<QuasiInterval> {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// True when the region has no members. Only for canonical regions does
    /// this coincide with the union being empty.
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: &Vector) -> Result<bool> {
        if v.algebra() != self.algebra {
            return Err(Error::mismatch(format!(
                "{} region queried with a {} vector",
                self.algebra,
                v.algebra()
            )));
        }
        if v.len() != self.dim {
            return Err(Error::dims(self.dim, v.len()));
        }
        for q in &self.members {
            if q.contains(v)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Drops empty members, then every member subsumed by another. Among
    /// mutually subsuming (equal) members the earliest is kept; survivors
    /// keep their relative order.
    pub fn canonicalize(&self) -> Result<SolutionRegion> {
        // exact repeats are dropped up front; the first copy wins either way
        let mut seen = HashSet::new();
        let mut live = Vec::with_capacity(self.members.len());
        for q in &self.members {
            if seen.insert(q) && !q.is_empty()? {
                live.push(q);
            }
        }
        let mut keep = Vec::with_capacity(live.len());
        'outer: for (i, q) in live.iter().enumerate() {
            for (j, other) in live.iter().enumerate() {
                if i != j && other.subsumes(q)? && (j < i || !q.subsumes(other)?) {
                    continue 'outer;
                }
            }
            keep.push((*q).clone());
        }
        Ok(SolutionRegion {
            algebra: self.algebra,
            dim: self.dim,
            members: keep,
        })
    }

    pub fn is_canonical(&self) -> Result<bool> {
        for (i, q) in self.members.iter().enumerate() {
            if q.is_empty()? {
                return Ok(false);
            }
            for (j, other) in self.members.iter().enumerate() {
                if i != j && other.subsumes(q)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
