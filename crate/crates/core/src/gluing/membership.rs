use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::exactlin::{self, IntegerMatrix, LatticeVector};
use crate::toric::SemigroupGens;

/// Depth-first search for `x ∈ N^p` with `A·x = v`.
///
/// Coefficients are bounded by componentwise quotients, so the search is
/// exhaustive. Failed `(column, remainder)` states are remembered, so one
/// searcher can answer many queries against the same generators.
#[derive(Clone, Debug)]
pub struct MembershipSearch<'a> {
    gens: &'a SemigroupGens,
    // covered[j][i]: some column j.. is positive at coordinate i
    covered: Vec<Vec<bool>>,
    failed: HashSet<(usize, Vec<i64>)>,
}

impl<'a> MembershipSearch<'a> {
    pub fn new(gens: &'a SemigroupGens) -> Self {
        let p = gens.p();
        let n = gens.n();
        let mut covered = vec![vec![false; n]; p + 1];
        for j in (0..p).rev() {
            let next = covered[j + 1].clone();
            covered[j] = next
                .iter()
                .zip(gens.column(j))
                .map(|(&c, &a)| c || a > 0)
                .collect();
        }
        MembershipSearch {
            gens,
            covered,
            failed: HashSet::new(),
        }
    }

    pub fn solve(&mut self, v: &[i64]) -> Result<Option<Vec<u64>>> {
        if v.len() != self.gens.n() {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {}, expected {}",
                v.len(),
                self.gens.n()
            )));
        }
        if v.iter().any(|&x| x < 0) {
            return Ok(None);
        }
        let mut x = vec![0u64; self.gens.p()];
        Ok(self.search(0, v.to_vec(), &mut x).then_some(x))
    }

    fn search(&mut self, j: usize, r: Vec<i64>, x: &mut Vec<u64>) -> bool {
        if r.iter().all(|&e| e == 0) {
            return true;
        }
        if j == self.gens.p() {
            return false;
        }
        if r.iter().zip(&self.covered[j]).any(|(&e, &c)| e > 0 && !c) {
            return false;
        }
        let key = (j, r);
        if self.failed.contains(&key) {
            return false;
        }
        let (_, r) = key;
        let col = self.gens.column(j).to_vec();
        let max = col
            .iter()
            .zip(&r)
            .filter(|(&a, _)| a > 0)
            .map(|(&a, &e)| e / a)
            .min()
            .expect("generators are nonzero");
        for k in (0..=max).rev() {
            let rest: Vec<i64> = r.iter().zip(&col).map(|(&e, &a)| e - k * a).collect();
            if self.search(j + 1, rest, x) {
                x[j] = k as u64;
                return true;
            }
        }
        self.failed.insert((j, r));
        false
    }
}

/// Some `x ∈ N^p` with `A·x = v`, or `None`.
pub fn is_member(v: &[i64], gens: &SemigroupGens) -> Result<Option<Vec<u64>>> {
    MembershipSearch::new(gens).solve(v)
}

/// The multipliers `k ≤ kmax` with `k·u ∈ <A>`, each with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiples {
    pub found: Vec<(u64, Vec<u64>)>,
    /// No positive multiple of `u` lies in `<A>` at all (not only within the
    /// bound).
    pub never: bool,
}

impl Multiples {
    pub fn ks(&self) -> Vec<u64> {
        self.found.iter().map(|(k, _)| *k).collect()
    }

    pub fn contains(&self, k: u64) -> bool {
        self.found.iter().any(|(j, _)| *j == k)
    }

    pub fn witness(&self, k: u64) -> Option<&[u64]> {
        self.found
            .iter()
            .find(|(j, _)| *j == k)
            .map(|(_, x)| x.as_slice())
    }

    pub fn is_empty(&self) -> bool {
        self.found.is_empty()
    }
}

pub(crate) fn to_i64(u: &LatticeVector) -> Result<Vec<i64>> {
    u.to_i64()
        .ok_or_else(|| Error::Overflow(format!("{u} does not fit in 64 bits")))
}

/// Whether no positive multiple of `u` can lie in `<A>`: `u` leaves `N^n`,
/// or the generators usable for it (those vanishing wherever `u` does) do not
/// span a line through `u`.
pub fn multiples_never(u: &[i64], gens: &SemigroupGens) -> bool {
    if u.iter().any(|&x| x < 0) || u.iter().all(|&x| x == 0) {
        return true;
    }
    let usable: Vec<Vec<i64>> = gens
        .columns()
        .iter()
        .filter(|c| c.iter().zip(u).all(|(&a, &e)| e != 0 || a == 0))
        .cloned()
        .collect();
    if usable.is_empty() {
        return true;
    }
    let m = IntegerMatrix::from_columns(&usable).expect("nonempty columns");
    let mut with_u = usable.clone();
    with_u.push(u.to_vec());
    let mu = IntegerMatrix::from_columns(&with_u).expect("nonempty columns");
    exactlin::rank(&mu) > exactlin::rank(&m)
}

pub fn multiples_in_semigroup(
    u: &LatticeVector,
    gens: &SemigroupGens,
    kmax: u64,
) -> Result<Multiples> {
    let u = to_i64(u)?;
    if u.len() != gens.n() {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {}, expected {}",
            u.len(),
            gens.n()
        )));
    }
    if multiples_never(&u, gens) {
        return Ok(Multiples {
            found: Vec::new(),
            never: true,
        });
    }
    let mut search = MembershipSearch::new(gens);
    let mut found = Vec::new();
    for k in 1..=kmax {
        let v = scale(&u, k)?;
        if let Some(x) = search.solve(&v)? {
            found.push((k, x));
        }
    }
    Ok(Multiples {
        found,
        never: false,
    })
}

pub(crate) fn scale(u: &[i64], k: u64) -> Result<Vec<i64>> {
    let k = i64::try_from(k).map_err(|_| Error::Overflow(format!("multiplier {k}")))?;
    u.iter()
        .map(|&x| {
            x.checked_mul(k)
                .ok_or_else(|| Error::Overflow(format!("{k} * {x}")))
        })
        .collect()
}
