//! Inputs shared by the benchmarks.

use semiglue::constructions::PlaneHomogeneousGens;
use semiglue::SemigroupGens;

pub fn twisted_pair() -> (SemigroupGens, SemigroupGens) {
    let a = vec![vec![4, 0, 0], vec![3, 1, 0], vec![2, 2, 0], vec![1, 3, 0]];
    let b = vec![vec![3, 3, 0], vec![3, 2, 1], vec![3, 1, 2], vec![3, 0, 3]];
    (
        SemigroupGens::new(a, "x").unwrap(),
        SemigroupGens::new(b, "y").unwrap(),
    )
}

/// Columns `(d - s, s)` for `s` in `0..=d`.
pub fn rational_normal_curve(d: i64) -> SemigroupGens {
    SemigroupGens::new((0..=d).map(|s| vec![d - s, s]).collect(), "x").unwrap()
}

pub fn plane_curve(steps: &[u64], degree: u64) -> PlaneHomogeneousGens {
    PlaneHomogeneousGens::new(steps.to_vec(), degree).unwrap()
}
