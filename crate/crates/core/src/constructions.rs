//! Gluing two homogeneous semigroups of `N^2` after embedding them in `N^3`,
//! and the gluability tests for rank-one parts.

use num_integer::Integer;

use crate::binomial::{Binomial, Monomial};
use crate::error::{Error, Result};
use crate::exactlin::{self, LatticeVector};
use crate::gluing::{multiples_in_semigroup, GluingCandidate, Verdict};
use crate::toric::SemigroupGens;

/// Steps `0 < a_1 < ... < a_{p-2} < c` of the plane semigroup generated by
/// `(c, 0), (c - a_1, a_1), ..., (0, c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneHomogeneousGens {
    steps: Vec<u64>,
    degree: u64,
}

impl PlaneHomogeneousGens {
    pub fn new(steps: Vec<u64>, degree: u64) -> Result<Self> {
        let mut prev = 0;
        for &s in &steps {
            if s <= prev {
                return Err(Error::InvalidGenerators(
                    "steps must be positive and strictly increasing".into(),
                ));
            }
            prev = s;
        }
        if degree <= prev {
            return Err(Error::InvalidGenerators(format!(
                "degree {degree} must exceed every step"
            )));
        }
        i64::try_from(degree).map_err(|_| Error::Overflow(format!("degree {degree}")))?;
        Ok(PlaneHomogeneousGens { steps, degree })
    }

    /// Reads the steps off the columns of a `2 x p` matrix whose columns
    /// all sum to the same `c`.
    pub fn from_gens(g: &SemigroupGens) -> Result<Self> {
        if g.n() != 2 {
            return Err(Error::DimensionMismatch(format!(
                "expected generators in N^2, got N^{}",
                g.n()
            )));
        }
        let c = g.column(0)[0] + g.column(0)[1];
        let mut cols: Vec<&[i64]> = g.columns().iter().map(|v| v.as_slice()).collect();
        cols.sort_by_key(|v| v[1]);
        let ends = cols.first().map(|v| v[1]) == Some(0) && cols.last().map(|v| v[1]) == Some(c);
        if !ends || cols.iter().any(|v| v[0] + v[1] != c) {
            return Err(Error::InvalidGenerators(
                "columns must be (c,0), (c-a,a), ..., (0,c)".into(),
            ));
        }
        let steps = cols[1..cols.len() - 1]
            .iter()
            .map(|v| v[1] as u64)
            .collect();
        Self::new(steps, c as u64)
    }

    pub fn steps(&self) -> &[u64] {
        &self.steps
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn p(&self) -> usize {
        self.steps.len() + 2
    }

    fn second_row(&self) -> Vec<i64> {
        let mut row = vec![0];
        row.extend(self.steps.iter().map(|&s| s as i64));
        row.push(self.degree as i64);
        row
    }

    pub fn gens(&self, prefix: &str) -> Result<SemigroupGens> {
        let c = self.degree as i64;
        let columns = self
            .second_row()
            .into_iter()
            .map(|s| vec![c - s, s])
            .collect();
        SemigroupGens::new(columns, prefix)
    }
}

/// The embedded pair `A'`, `B'` glued as `C = d·A' ⊔ a_i·B'` along
/// `ρ = x_{i+1} - y_1`.
#[derive(Clone, Debug)]
pub struct EmbeddedGluing {
    pub a_prime: SemigroupGens,
    pub b_prime: SemigroupGens,
    pub m: u64,
    pub r: u64,
    /// 1-based index into the steps of the first semigroup.
    pub i: usize,
    pub k1: u64,
    pub k2: u64,
    pub rho: Binomial,
    pub candidate: GluingCandidate,
}

impl EmbeddedGluing {
    pub fn c(&self) -> &SemigroupGens {
        self.candidate.glued()
    }

    /// Common coordinate sum of the columns of `C`, `m·d·a_i`.
    pub fn degree(&self) -> u64 {
        self.m * self.k1 * self.k2
    }

    /// `(m - 1, 1, 0)`.
    pub fn expected_u(&self) -> LatticeVector {
        LatticeVector::from_i64(&[self.m as i64 - 1, 1, 0])
    }
}

pub fn embed_and_glue(
    p: &PlaneHomogeneousGens,
    q: &PlaneHomogeneousGens,
    i: usize,
) -> Result<EmbeddedGluing> {
    if i == 0 || i > p.steps.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: p.steps.len(),
        });
    }
    let ai = p.steps[i - 1];
    let (c, d) = (p.degree, q.degree);
    if d.gcd(&ai) != 1 {
        return Err(Error::NotCoprime(d, ai));
    }
    let m = c.div_ceil(ai);
    let r = m * ai - c;
    let (ci, di, ri) = (c as i64, d as i64, r as i64);
    let top = (m as i64 - 1)
        .checked_mul(di)
        .ok_or_else(|| Error::Overflow("(m-1)·d".into()))?;

    let a_cols = p
        .second_row()
        .into_iter()
        .map(|s| vec![ci - s + ri, s, 0])
        .collect();
    let b_cols = q
        .second_row()
        .into_iter()
        .map(|s| vec![top, di - s, s])
        .collect();
    let a_prime = SemigroupGens::new(a_cols, "x")?;
    let b_prime = SemigroupGens::new(b_cols, "y")?;
    let candidate = GluingCandidate::new(a_prime.clone(), b_prime.clone(), d, ai)?;
    let total = p.p() + q.p();
    let rho = Binomial::new(Monomial::var(total, i), Monomial::var(total, p.p()))
        .expect("distinct variables");
    Ok(EmbeddedGluing {
        a_prime,
        b_prime,
        m,
        r,
        i,
        k1: d,
        k2: ai,
        rho,
        candidate,
    })
}

/// The smallest 1-based `i` with `gcd(d, a_i) = 1`.
pub fn default_index(p: &PlaneHomogeneousGens, q: &PlaneHomogeneousGens) -> Option<usize> {
    p.steps
        .iter()
        .position(|&a| a.gcd(&q.degree) == 1)
        .map(|k| k + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rank1Gluability {
    pub verdict: Verdict,
    /// Primitive direction of the rank-one side.
    pub direction: LatticeVector,
    /// `k` with `k·b` in the other semigroup, and its coefficients.
    pub witness: Option<(u64, Vec<u64>)>,
}

/// Whether some multiple of the direction of a rank-one `B` lies in `<A>`,
/// with `rk A = n`.
pub fn rank1_gluable(a: &SemigroupGens, b: &SemigroupGens, kmax: u64) -> Result<Rank1Gluability> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch(format!(
            "A lives in N^{} but B in N^{}",
            a.n(),
            b.n()
        )));
    }
    if a.rank() != a.n() {
        return Err(Error::RankMismatch(format!(
            "rk A = {}, expected {}",
            a.rank(),
            a.n()
        )));
    }
    if b.rank() != 1 {
        return Err(Error::RankMismatch(format!(
            "rk B = {}, expected 1",
            b.rank()
        )));
    }
    let direction = exactlin::primitive(&b.matrix().column(0))?;
    let ms = multiples_in_semigroup(&direction, a, kmax)?;
    let verdict = if !ms.found.is_empty() {
        Verdict::Yes
    } else if ms.never {
        Verdict::No
    } else {
        Verdict::NotFoundWithinBound
    };
    Ok(Rank1Gluability {
        verdict,
        direction,
        witness: ms.found.into_iter().next(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGluability {
    pub verdict: Verdict,
    /// The rank-one side, when there is one.
    pub rank_one: Option<Side>,
    pub detail: Option<Rank1Gluability>,
}

/// Gluability in `N^2`: one side must have rank one, and a multiple of its
/// direction must lie in the other.
pub fn n2_gluable(a: &SemigroupGens, b: &SemigroupGens, kmax: u64) -> Result<PlaneGluability> {
    if a.n() != 2 || b.n() != 2 {
        return Err(Error::DimensionMismatch(
            "expected generators in N^2".into(),
        ));
    }
    let (ra, rb) = (a.rank(), b.rank());
    let (side, full, line) = match (ra, rb) {
        (_, 1) if ra == 2 => (Side::B, a, b),
        (1, _) if rb == 2 => (Side::A, b, a),
        _ => {
            return Ok(PlaneGluability {
                verdict: Verdict::No,
                rank_one: match (ra, rb) {
                    (_, 1) => Some(Side::B),
                    (1, _) => Some(Side::A),
                    _ => None,
                },
                detail: None,
            })
        }
    };
    let detail = rank1_gluable(full, line, kmax)?;
    Ok(PlaneGluability {
        verdict: detail.verdict,
        rank_one: Some(side),
        detail: Some(detail),
    })
}
