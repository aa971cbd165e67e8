//! Shared fixtures for the integration tests: random systems, grid-indexed
//! membership tables and the order-property checks run on them.

#![allow(dead_code)]

use std::collections::BTreeSet;

use maxblank_core::oracle::SampleGrid;
use maxblank_core::{Algebra, Element, Matrix, QuasiInterval, SolutionRegion, Vector};
use rand::rngs::StdRng;
use rand::seq::IndexedRandom;
use rand::Rng;

/// Entry pool for random max-plus systems.
pub fn max_plus_pool() -> Vec<Element> {
    let mut pool = vec![Element::neg_inf(), Element::pos_inf()];
    pool.extend([-2, 0, 1, 3].map(Element::int));
    pool
}

/// A wider pool for scalar and interval properties over the extended rationals.
pub fn dense_pool() -> Vec<Element> {
    let mut pool = max_plus_pool();
    pool.extend([-5, -1, 2, 4, 7].map(Element::int));
    pool.extend([Element::ratio(1, 2), Element::ratio(-7, 3), Element::ratio(5, 4)]);
    pool
}

pub fn pool_for(alg: Algebra) -> Vec<Element> {
    alg.carrier().unwrap_or_else(dense_pool)
}

pub fn random_matrix(rng: &mut StdRng, alg: Algebra, pool: &[Element], m: usize, n: usize) -> Matrix {
    let rows = (0..m)
        .map(|_| (0..n).map(|_| pool.choose(rng).unwrap().clone()).collect())
        .collect();
    Matrix::from_rows(alg, rows).unwrap()
}

pub fn random_vector(rng: &mut StdRng, alg: Algebra, pool: &[Element], n: usize) -> Vector {
    Vector::new(alg, (0..n).map(|_| pool.choose(rng).unwrap().clone()).collect()).unwrap()
}

/// A random system of size at most `max_m × max_n`. Half of the right-hand
/// sides are drawn from the pool, half are `A v₀` for a random pool vector
/// `v₀`, so a fair share of the systems is consistent.
pub fn random_system(
    rng: &mut StdRng,
    alg: Algebra,
    pool: &[Element],
    max_m: usize,
    max_n: usize,
) -> (Matrix, Vector) {
    let m = rng.random_range(1..=max_m);
    let n = rng.random_range(1..=max_n);
    let a = random_matrix(rng, alg, pool, m, n);
    let w = if rng.random_bool(0.5) {
        random_vector(rng, alg, pool, m)
    } else {
        a.mat_vec(&random_vector(rng, alg, pool, n)).unwrap()
    };
    (a, w)
}

pub fn random_subset(rng: &mut StdRng, n: usize) -> BTreeSet<usize> {
    (0..n).filter(|_| rng.random_bool(0.5)).collect()
}

pub fn random_right_closed(rng: &mut StdRng, alg: Algebra, pool: &[Element], n: usize) -> QuasiInterval {
    QuasiInterval::new(
        random_vector(rng, alg, pool, n),
        random_vector(rng, alg, pool, n),
        random_subset(rng, n),
        BTreeSet::new(),
    )
    .unwrap()
}

/// Grid through every endpoint of the given quasi-intervals.
pub fn grid_for_intervals(alg: Algebra, n: usize, qs: &[&QuasiInterval]) -> SampleGrid {
    let mut per_coord = vec![BTreeSet::new(); n];
    for q in qs {
        for (k, set) in per_coord.iter_mut().enumerate() {
            set.insert(q.lower().get(k).clone());
            set.insert(q.upper().get(k).clone());
        }
    }
    SampleGrid::from_breakpoints(alg, per_coord).unwrap()
}

/// Lower exclusion set of the intersection of two right-closed quasi-intervals
/// `₍A₎(p, q] ∩ ₍B₎(r, s]`, straight from its set-builder description.
pub fn expected_lower_exclusions(
    a: &BTreeSet<usize>,
    b: &BTreeSet<usize>,
    p: &Vector,
    r: &Vector,
) -> BTreeSet<usize> {
    let left = a.difference(b).filter(|&&i| p.get(i) >= r.get(i));
    let right = b.difference(a).filter(|&&j| p.get(j) <= r.get(j));
    left.chain(right).chain(a.intersection(b)).copied().collect()
}

/// Region membership of every grid point, indexed in mixed radix with the
/// last coordinate varying fastest.
pub struct GridTable {
    pub dims: Vec<usize>,
    pub contained: Vec<bool>,
}

impl GridTable {
    pub fn build(grid: &SampleGrid, member: impl Fn(&Vector) -> bool) -> Self {
        let dims: Vec<usize> = grid.coords().iter().map(Vec::len).collect();
        let contained = grid.indices().map(|idx| member(&grid.point(&idx))).collect();
        GridTable { dims, contained }
    }

    pub fn len(&self) -> usize {
        self.contained.len()
    }

    pub fn decode(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.dims.len()];
        for k in (0..self.dims.len()).rev() {
            idx[k] = flat % self.dims[k];
            flat /= self.dims[k];
        }
        idx
    }

    pub fn encode(&self, idx: &[usize]) -> usize {
        idx.iter().zip(&self.dims).fold(0, |acc, (&i, &d)| acc * d + i)
    }

    /// For every point, whether some contained point lies below it
    /// (`below = true`) or above it, via prefix sweeps per coordinate.
    fn reach(&self, below: bool) -> Vec<bool> {
        let mut r = self.contained.clone();
        let mut stride = 1;
        for k in (0..self.dims.len()).rev() {
            let d = self.dims[k];
            for flat in 0..r.len() {
                let pos = (flat / stride) % d;
                if below && pos > 0 && r[flat - stride] {
                    r[flat] = true;
                }
            }
            if !below {
                for flat in (0..r.len()).rev() {
                    let pos = (flat / stride) % d;
                    if pos + 1 < d && r[flat + stride] {
                        r[flat] = true;
                    }
                }
            }
            stride *= d;
        }
        r
    }

    /// A grid point strictly between two contained points but not contained.
    pub fn convexity_violation(&self) -> Option<Vec<usize>> {
        let below = self.reach(true);
        let above = self.reach(false);
        (0..self.len())
            .find(|&z| !self.contained[z] && below[z] && above[z])
            .map(|z| self.decode(z))
    }

    /// Two contained grid points whose join is not contained. Coordinates are
    /// ascending, so the join is the componentwise maximum of the indices.
    pub fn join_violation(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let members: Vec<Vec<usize>> = (0..self.len())
            .filter(|&z| self.contained[z])
            .map(|z| self.decode(z))
            .collect();
        let mut joined = vec![0; self.dims.len()];
        for (x, u) in members.iter().enumerate() {
            for v in &members[x + 1..] {
                for k in 0..joined.len() {
                    joined[k] = u[k].max(v[k]);
                }
                if !self.contained[self.encode(&joined)] {
                    return Some((u.clone(), v.clone()));
                }
            }
        }
        None
    }
}

/// Every member shares the upper endpoint `x` and excludes no upper endpoint.
pub fn members_share_terminal(region: &SolutionRegion, x: &Vector) -> bool {
    region
        .members()
        .iter()
        .all(|q| q.upper() == x && q.is_right_closed())
}
