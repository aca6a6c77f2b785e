//! Deciding and certifying gluings `C = k1·A ⊔ k2·B` of two semigroups.

mod audit;
mod membership;
mod verify;

use num_bigint::BigInt;
use num_integer::Integer;

pub use audit::{implication_chain_audit, AuditOptions, ChainAudit, DEFAULT_DBOX};
pub use membership::{
    is_member, multiples_in_semigroup, multiples_never, MembershipSearch, Multiples,
};
pub use verify::{verify_gluing, GluingReport, RhoSource};

use crate::binomial::{Binomial, VariableBlock};
use crate::error::{Error, Result};
use crate::exactlin::{self, IntegerMatrix, LatticeVector};
use crate::toric::SemigroupGens;
use membership::to_i64;

/// Default bound on the multipliers `k` tried in membership searches.
pub const DEFAULT_KMAX: u64 = 50;

/// Outcome of a bounded search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Yes,
    No,
    NotFoundWithinBound,
}

impl Verdict {
    pub fn is_yes(self) -> bool {
        self == Verdict::Yes
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::NotFoundWithinBound => "not-found-within-bound",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankConditions {
    pub rank_a: usize,
    pub rank_b: usize,
    pub rank_ab: usize,
    pub n: usize,
}

impl RankConditions {
    /// `rk[A|B] = n` and `rk A + rk B = n + 1`.
    pub fn hold(&self) -> bool {
        self.rank_ab == self.n && self.rank_a + self.rank_b == self.n + 1
    }

    pub fn is_degenerate(&self) -> bool {
        self.rank_ab < self.n
    }

    /// The conditions for the pair viewed inside the span of `[A|B]`.
    pub fn hold_after_projection(&self) -> bool {
        self.rank_a + self.rank_b == self.rank_ab + 1
    }

    fn failure(&self) -> Error {
        Error::RankConditionsFail {
            rank_a: self.rank_a,
            rank_b: self.rank_b,
            rank_ab: self.rank_ab,
            n: self.n,
        }
    }
}

fn same_n(a: &SemigroupGens, b: &SemigroupGens) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch(format!(
            "A lives in N^{} but B in N^{}",
            a.n(),
            b.n()
        )));
    }
    Ok(())
}

fn joint_matrix(a: &SemigroupGens, b: &SemigroupGens) -> IntegerMatrix {
    a.matrix().hconcat(b.matrix()).expect("same row count")
}

pub fn check_rank_conditions(a: &SemigroupGens, b: &SemigroupGens) -> Result<RankConditions> {
    same_n(a, b)?;
    Ok(RankConditions {
        rank_a: a.rank(),
        rank_b: b.rank(),
        rank_ab: exactlin::rank(&joint_matrix(a, b)),
        n: a.n(),
    })
}

/// Coordinates forming a basis of the row space of `[A|B]`. Restricting to
/// them is injective on the span of the generators and keeps entries
/// nonnegative.
pub fn nondegenerate_rows(a: &SemigroupGens, b: &SemigroupGens) -> Result<Vec<usize>> {
    same_n(a, b)?;
    Ok(exactlin::independent_rows(&joint_matrix(a, b)))
}

/// The primitive generator of `v(A) ∩ v(B)` with first nonzero entry
/// positive.
pub fn gluable_lattice_point(a: &SemigroupGens, b: &SemigroupGens) -> Result<LatticeVector> {
    let rc = check_rank_conditions(a, b)?;
    if !rc.hold_after_projection() {
        return Err(rc.failure());
    }
    let cols_a = exactlin::independent_columns(a.matrix());
    let cols_b = exactlin::independent_columns(b.matrix());
    gluable_lattice_point_with(a, b, &cols_a, &cols_b)
}

/// [`gluable_lattice_point`] from a chosen set of independent columns of
/// each side (`rk A` of them from `A`, `rk B` from `B`).
pub fn gluable_lattice_point_with(
    a: &SemigroupGens,
    b: &SemigroupGens,
    cols_a: &[usize],
    cols_b: &[usize],
) -> Result<LatticeVector> {
    let rc = check_rank_conditions(a, b)?;
    if !rc.hold_after_projection() {
        return Err(rc.failure());
    }
    if cols_a.len() != rc.rank_a || cols_b.len() != rc.rank_b {
        return Err(Error::RankMismatch(format!(
            "expected {} columns of A and {} of B",
            rc.rank_a, rc.rank_b
        )));
    }
    let rows = nondegenerate_rows(a, b)?;
    let m = a
        .matrix()
        .select_columns(cols_a)?
        .hconcat(&b.matrix().select_columns(cols_b)?)?
        .select_rows(&rows)?;
    let d = exactlin::dependent_column_relation(&m)?;
    let mut u = vec![BigInt::from(0); a.n()];
    for (k, &j) in cols_a.iter().enumerate() {
        let coeff = &d.0[k];
        for (ui, &x) in u.iter_mut().zip(a.column(j)) {
            *ui += coeff * BigInt::from(x);
        }
    }
    exactlin::primitive(&LatticeVector(u))
}

/// `A`, `B` and the multipliers of `C = k1·A ⊔ k2·B`.
#[derive(Clone, Debug)]
pub struct GluingCandidate {
    a: SemigroupGens,
    b: SemigroupGens,
    k1: u64,
    k2: u64,
    c: SemigroupGens,
}

impl GluingCandidate {
    pub fn new(a: SemigroupGens, b: SemigroupGens, k1: u64, k2: u64) -> Result<Self> {
        same_n(&a, &b)?;
        if k1 == 0 || k2 == 0 {
            return Err(Error::InvalidGenerators(
                "multipliers must be positive".into(),
            ));
        }
        let block = a.block().concat(b.block())?;
        let mut columns = a.scaled(k1)?.columns().to_vec();
        columns.extend(b.scaled(k2)?.columns().iter().cloned());
        let c = SemigroupGens::with_block(columns, block)?;
        Ok(GluingCandidate { a, b, k1, k2, c })
    }

    pub fn a(&self) -> &SemigroupGens {
        &self.a
    }

    pub fn b(&self) -> &SemigroupGens {
        &self.b
    }

    pub fn k1(&self) -> u64 {
        self.k1
    }

    pub fn k2(&self) -> u64 {
        self.k2
    }

    /// `k1·A ⊔ k2·B` over the joint block `x1.., y1..`.
    pub fn glued(&self) -> &SemigroupGens {
        &self.c
    }

    pub fn block(&self) -> &VariableBlock {
        self.c.block()
    }

    /// `x^c - y^d` over the joint block.
    pub fn split_binomial(&self, c: &[u64], d: &[u64]) -> Result<Binomial> {
        let mut plus = Vec::with_capacity(self.c.p());
        let mut minus = Vec::with_capacity(self.c.p());
        for &e in c {
            plus.push(exponent(e)?);
            minus.push(0);
        }
        for &e in d {
            plus.push(0);
            minus.push(exponent(e)?);
        }
        Binomial::new(
            crate::binomial::Monomial(plus),
            crate::binomial::Monomial(minus),
        )
        .ok_or_else(|| Error::InvalidGenerators("zero gluing binomial".into()))
    }
}

fn exponent(e: u64) -> Result<u32> {
    u32::try_from(e).map_err(|_| Error::Overflow(format!("exponent {e}")))
}

/// Rank conditions plus some positive multiple of `u` in each semigroup.
#[derive(Clone, Debug)]
pub struct NecessaryConditions {
    pub verdict: Verdict,
    pub rank_conditions: RankConditions,
    pub u: Option<LatticeVector>,
    pub multiples_a: Option<Multiples>,
    pub multiples_b: Option<Multiples>,
}

impl NecessaryConditions {
    /// The smallest `k` with `k·u ∈ <A>`, with its witness.
    pub fn witness_a(&self) -> Option<(u64, &[u64])> {
        first(self.multiples_a.as_ref())
    }

    pub fn witness_b(&self) -> Option<(u64, &[u64])> {
        first(self.multiples_b.as_ref())
    }
}

fn first(m: Option<&Multiples>) -> Option<(u64, &[u64])> {
    m.and_then(|m| m.found.first())
        .map(|(k, x)| (*k, x.as_slice()))
}

pub fn necessary_conditions(
    a: &SemigroupGens,
    b: &SemigroupGens,
    kmax: u64,
) -> Result<NecessaryConditions> {
    let rc = check_rank_conditions(a, b)?;
    if !rc.hold_after_projection() {
        return Ok(NecessaryConditions {
            verdict: Verdict::No,
            rank_conditions: rc,
            u: None,
            multiples_a: None,
            multiples_b: None,
        });
    }
    let u = gluable_lattice_point(a, b)?;
    let ma = multiples_in_semigroup(&u, a, kmax)?;
    let mb = multiples_in_semigroup(&u, b, kmax)?;
    let verdict = if ma.never || mb.never {
        Verdict::No
    } else if !ma.is_empty() && !mb.is_empty() {
        Verdict::Yes
    } else {
        Verdict::NotFoundWithinBound
    };
    Ok(NecessaryConditions {
        verdict,
        rank_conditions: rc,
        u: Some(u),
        multiples_a: Some(ma),
        multiples_b: Some(mb),
    })
}

/// Relatively prime `k1, k2` with `k1·u = B·d` and `k2·u = A·c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoprimePair {
    pub k1: u64,
    pub k2: u64,
    /// `c` with `A·c = k2·u`.
    pub witness_a: Vec<u64>,
    /// `d` with `B·d = k1·u`.
    pub witness_b: Vec<u64>,
}

/// The coprime pair minimizing `(k1 + k2, k1)` among `k1, k2 ≤ kmax`.
pub fn find_coprime_pair(
    a: &SemigroupGens,
    b: &SemigroupGens,
    kmax: u64,
) -> Result<Option<CoprimePair>> {
    let u = gluable_lattice_point(a, b)?;
    let ma = multiples_in_semigroup(&u, a, kmax)?;
    let mb = multiples_in_semigroup(&u, b, kmax)?;
    Ok(coprime_pair_from(&ma, &mb))
}

pub(crate) fn coprime_pair_from(ma: &Multiples, mb: &Multiples) -> Option<CoprimePair> {
    let mut best: Option<CoprimePair> = None;
    for (k1, d) in &mb.found {
        for (k2, c) in &ma.found {
            if k1.gcd(k2) != 1 {
                continue;
            }
            let better = best
                .as_ref()
                .is_none_or(|p| (k1 + k2, *k1) < (p.k1 + p.k2, p.k1));
            if better {
                best = Some(CoprimePair {
                    k1: *k1,
                    k2: *k2,
                    witness_a: c.clone(),
                    witness_b: d.clone(),
                });
            }
        }
    }
    best
}

/// The level `|ℓ|` of a binomial of `I_C`: writing its exponent difference
/// as `(α, -β)`, `A·α = k2·ℓ·u` and `B·β = k1·ℓ·u`.
pub fn level(w: &Binomial, cand: &GluingCandidate) -> Result<u64> {
    let (k1, k2) = (cand.k1, cand.k2);
    if k1.gcd(&k2) != 1 {
        return Err(Error::NotCoprime(k1, k2));
    }
    let p = cand.a.p();
    if w.len() != cand.c.p() {
        return Err(Error::BlockMismatch(format!(
            "binomial over {} variables, expected {}",
            w.len(),
            cand.c.p()
        )));
    }
    let diff = w.exponent_difference();
    let alpha = &diff[..p];
    let beta: Vec<i64> = diff[p..].iter().map(|&x| -x).collect();
    let a_alpha = cand.a.apply(alpha);
    let b_beta = cand.b.apply(&beta);
    let shown = || w.display(cand.block());
    let (k1, k2) = (i128::from(k1), i128::from(k2));
    if a_alpha.iter().zip(&b_beta).any(|(&x, &y)| k1 * x != k2 * y) {
        return Err(Error::NotInIdeal(shown()));
    }
    let u = to_i64(&gluable_lattice_point(&cand.a, &cand.b)?)?;
    let (pivot, &up) = u
        .iter()
        .enumerate()
        .find(|(_, &x)| x != 0)
        .expect("u is nonzero");
    let t = a_alpha[pivot];
    let up = i128::from(up);
    if t % (k2 * up) != 0 {
        return Err(Error::NotInIdeal(shown()));
    }
    let l = t / (k2 * up);
    let multiple_of_u =
        |v: &[i128], k: i128| v.iter().zip(&u).all(|(&x, &e)| x == k * l * i128::from(e));
    if !multiple_of_u(&a_alpha, k2) || !multiple_of_u(&b_beta, k1) {
        return Err(Error::NotInIdeal(shown()));
    }
    Ok(l.unsigned_abs() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::parse_binomial;
    fn lattice(v: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(v)
    }

    fn rows(r: &[&[i64]], prefix: &str) -> SemigroupGens {
        SemigroupGens::from_rows(&r.iter().map(|x| x.to_vec()).collect::<Vec<_>>(), prefix).unwrap()
    }

    fn twisted_a() -> SemigroupGens {
        rows(&[&[4, 3, 2, 1], &[0, 1, 2, 3], &[0, 0, 0, 0]], "x")
    }

    fn twisted_b() -> SemigroupGens {
        rows(&[&[3, 3, 3, 3], &[3, 2, 1, 0], &[0, 1, 2, 3]], "y")
    }

    fn twisted_b_prime() -> SemigroupGens {
        rows(&[&[2, 2, 2, 2], &[3, 2, 1, 0], &[1, 2, 3, 4]], "y")
    }

    #[test]
    fn rank_conditions_twisted() {
        let rc = check_rank_conditions(&twisted_a(), &twisted_b()).unwrap();
        assert_eq!((rc.rank_a, rc.rank_b, rc.rank_ab), (2, 2, 3));
        assert!(rc.hold());
        let same = check_rank_conditions(&twisted_b(), &twisted_b()).unwrap();
        assert!(!same.hold());
        let short = rows(&[&[1, 2]], "y");
        assert!(check_rank_conditions(&twisted_a(), &short).is_err());
    }

    #[test]
    fn numerical_pairs_satisfy_rank_conditions() {
        let a = rows(&[&[3, 5]], "x");
        let b = rows(&[&[2, 7]], "y");
        assert!(check_rank_conditions(&a, &b).unwrap().hold());
        assert_eq!(gluable_lattice_point(&a, &b).unwrap(), lattice(&[1]));
    }

    #[test]
    fn lattice_points_twisted() {
        assert_eq!(
            gluable_lattice_point(&twisted_a(), &twisted_b()).unwrap(),
            lattice(&[1, 1, 0])
        );
        assert_eq!(
            gluable_lattice_point(&twisted_a(), &twisted_b_prime()).unwrap(),
            lattice(&[1, 2, 0])
        );
        assert!(matches!(
            gluable_lattice_point(&twisted_b(), &twisted_b()),
            Err(Error::RankConditionsFail { .. })
        ));
    }

    #[test]
    fn lattice_point_of_degenerate_pair_is_lifted() {
        // both live in the plane z = 0 of N^3
        let a = rows(&[&[1, 0], &[0, 1], &[0, 0]], "x");
        let b = rows(&[&[2], &[3], &[0]], "y");
        let rc = check_rank_conditions(&a, &b).unwrap();
        assert!(rc.is_degenerate() && rc.hold_after_projection() && !rc.hold());
        assert_eq!(gluable_lattice_point(&a, &b).unwrap(), lattice(&[2, 3, 0]));
    }

    #[test]
    fn coprime_pair_twisted() {
        let pair = find_coprime_pair(&twisted_a(), &twisted_b(), DEFAULT_KMAX)
            .unwrap()
            .unwrap();
        assert_eq!((pair.k1, pair.k2), (3, 2));
        assert_eq!(pair.witness_a, vec![0, 0, 1, 0]);
        assert_eq!(pair.witness_b, vec![1, 0, 0, 0]);
    }

    #[test]
    fn necessary_conditions_fail_on_b_prime() {
        let nc = necessary_conditions(&twisted_a(), &twisted_b_prime(), DEFAULT_KMAX).unwrap();
        assert_eq!(nc.verdict, Verdict::No);
        assert!(nc.multiples_b.as_ref().unwrap().never);
        assert!(nc.multiples_a.as_ref().unwrap().contains(4));
    }

    #[test]
    fn level_of_witness_binomial() {
        let cand = GluingCandidate::new(twisted_a(), twisted_b(), 1, 1).unwrap();
        let w = parse_binomial("y1^2 - x1*x4^2", cand.block()).unwrap();
        assert_eq!(level(&w, &cand).unwrap(), 6);
        assert_eq!(level(&w.negated(), &cand).unwrap(), 6);
        let not_in = parse_binomial("y1 - x1", cand.block()).unwrap();
        assert!(matches!(level(&not_in, &cand), Err(Error::NotInIdeal(_))));
        let even = GluingCandidate::new(twisted_a(), twisted_b(), 2, 4).unwrap();
        assert_eq!(level(&w, &even).unwrap_err(), Error::NotCoprime(2, 4));
    }

    #[test]
    fn candidate_rejects_zero_multiplier() {
        assert!(GluingCandidate::new(twisted_a(), twisted_b(), 0, 1).is_err());
        let clash = GluingCandidate::new(twisted_a(), twisted_a(), 1, 1);
        assert!(clash.is_err());
    }
}
