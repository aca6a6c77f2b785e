#![allow(dead_code)]

pub mod props;

use rand::Rng;
use semiglue::SemigroupGens;

pub fn from_rows(rows: &[&[i64]], prefix: &str) -> SemigroupGens {
    let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
    SemigroupGens::from_rows(&rows, prefix).unwrap()
}

pub fn from_cols(cols: &[&[i64]], prefix: &str) -> SemigroupGens {
    SemigroupGens::new(cols.iter().map(|c| c.to_vec()).collect(), prefix).unwrap()
}

pub fn twisted_a() -> SemigroupGens {
    from_rows(&[&[4, 3, 2, 1], &[0, 1, 2, 3], &[0, 0, 0, 0]], "x")
}

pub fn twisted_b() -> SemigroupGens {
    from_rows(&[&[3, 3, 3, 3], &[3, 2, 1, 0], &[0, 1, 2, 3]], "y")
}

pub fn twisted_b_prime() -> SemigroupGens {
    from_rows(&[&[2, 2, 2, 2], &[3, 2, 1, 0], &[1, 2, 3, 4]], "y")
}

pub fn prime_a() -> SemigroupGens {
    from_cols(&[&[1, 6, 7], &[1, 4, 5], &[1, 2, 3], &[2, 2, 4]], "x")
}

pub fn prime_b() -> SemigroupGens {
    from_cols(&[&[1, 1, 6], &[1, 1, 4], &[1, 1, 1], &[3, 3, 6]], "y")
}

pub fn not_prime_a() -> SemigroupGens {
    from_rows(&[&[1, 1, 2, 3], &[6, 4, 5, 3], &[7, 5, 7, 6]], "x")
}

pub fn not_prime_b() -> SemigroupGens {
    from_rows(&[&[1, 2, 3, 9], &[1, 2, 3, 9], &[6, 7, 8, 18]], "y")
}

/// Shared by the linear-coefficient pair glued as `2A ⊔ B` and the
/// minimal-generator count counterexample.
pub fn shifted_a() -> SemigroupGens {
    from_cols(&[&[1, 6, 7], &[1, 4, 5], &[2, 5, 7], &[5, 5, 10]], "x")
}

pub fn shifted_b() -> SemigroupGens {
    from_cols(&[&[1, 1, 6], &[2, 2, 7], &[3, 3, 8], &[10, 10, 20]], "y")
}

pub fn linear_a() -> SemigroupGens {
    from_cols(
        &[&[4, 1, 5], &[2, 1, 3], &[1, 2, 3], &[3, 1, 4], &[3, 3, 6]],
        "x",
    )
}

pub fn linear_b() -> SemigroupGens {
    from_cols(
        &[&[2, 1, 1], &[3, 2, 3], &[5, 3, 4], &[4, 5, 11], &[3, 3, 6]],
        "y",
    )
}

pub fn twisted_cubic() -> SemigroupGens {
    from_rows(&[&[3, 2, 1, 0], &[0, 1, 2, 3]], "x")
}

/// A random set of `p` distinct nonzero columns in `{0..=max}^n`.
pub fn random_gens<R: Rng>(
    rng: &mut R,
    n: usize,
    p: usize,
    max: i64,
    prefix: &str,
) -> SemigroupGens {
    loop {
        let mut cols: Vec<Vec<i64>> = Vec::new();
        let mut tries = 0;
        while cols.len() < p && tries < 100 {
            tries += 1;
            let c: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=max)).collect();
            if c.iter().any(|&x| x > 0) && !cols.contains(&c) {
                cols.push(c);
            }
        }
        if cols.len() == p {
            return SemigroupGens::new(cols, prefix).unwrap();
        }
    }
}

/// Random columns inside the cone of `rank` random directions.
pub fn random_gens_of_rank<R: Rng>(
    rng: &mut R,
    n: usize,
    rank: usize,
    p: usize,
    prefix: &str,
) -> Option<SemigroupGens> {
    let dirs: Vec<Vec<i64>> = (0..rank)
        .map(|_| loop {
            let d: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
            if d.iter().any(|&x| x > 0) {
                break d;
            }
        })
        .collect();
    let mut cols: Vec<Vec<i64>> = Vec::new();
    for _ in 0..50 {
        if cols.len() == p {
            break;
        }
        let coeffs: Vec<i64> = (0..rank).map(|_| rng.gen_range(0..=2)).collect();
        let c: Vec<i64> = (0..n)
            .map(|i| dirs.iter().zip(&coeffs).map(|(d, k)| d[i] * k).sum())
            .collect();
        if c.iter().any(|&x| x > 0) && !cols.contains(&c) {
            cols.push(c);
        }
    }
    if cols.len() < p {
        return None;
    }
    let g = SemigroupGens::new(cols, prefix).ok()?;
    (g.rank() == rank).then_some(g)
}
