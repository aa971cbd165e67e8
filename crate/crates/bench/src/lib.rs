//! Seeded system generators shared by the benchmarks.

use maxblank_core::{Algebra, Element, Matrix, Vector};
use rand::rngs::StdRng;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};

/// Entry pool used for the dense algebras.
pub fn dense_pool() -> Vec<Element> {
    let mut pool = vec![Element::neg_inf(), Element::pos_inf()];
    pool.extend([-2, 0, 1, 3].map(Element::int));
    pool
}

fn pick(rng: &mut StdRng, pool: &[Element], len: usize) -> Vec<Element> {
    (0..len).map(|_| pool.choose(rng).unwrap().clone()).collect()
}

/// `count` random `rows × cols` systems. Half the right-hand sides are
/// `A v₀` for a random `v₀`, so most of those are consistent.
pub fn random_systems(alg: Algebra, rows: usize, cols: usize, count: usize, seed: u64) -> Vec<(Matrix, Vector)> {
    let pool = alg.carrier().unwrap_or_else(dense_pool);
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a = Matrix::from_rows(alg, (0..rows).map(|_| pick(&mut rng, &pool, cols)).collect()).unwrap();
            let w = if rng.random_bool(0.5) {
                Vector::new(alg, pick(&mut rng, &pool, rows)).unwrap()
            } else {
                a.mat_vec(&Vector::new(alg, pick(&mut rng, &pool, cols)).unwrap()).unwrap()
            };
            (a, w)
        })
        .collect()
}

/// `n × n` system with every entry `one` and `w = one`: every row has `n`
/// satisfiable columns, so there are `n^n` choice functions.
pub fn saturated(alg: Algebra, n: usize) -> (Matrix, Vector) {
    let a = Matrix::from_rows(alg, vec![vec![alg.one(); n]; n]).unwrap();
    (a, Vector::filled(alg, n, alg.one()).unwrap())
}
