//! Homological invariants of a gluing, from those of its parts.
//!
//! Nothing here computes a resolution. Dimensions come from ranks and `μ`
//! from the toric module; depth, Cohen–Macaulayness and the Gorenstein
//! property are facts supplied by the caller.

use std::fmt;

use crate::error::{Error, Result};
use crate::toric::{self, SemigroupGens};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tri {
    Yes,
    No,
    Unknown,
}

impl Tri {
    pub fn from_bool(b: bool) -> Tri {
        if b {
            Tri::Yes
        } else {
            Tri::No
        }
    }

    /// Kleene conjunction.
    pub fn and(self, other: Tri) -> Tri {
        match (self, other) {
            (Tri::No, _) | (_, Tri::No) => Tri::No,
            (Tri::Yes, Tri::Yes) => Tri::Yes,
            _ => Tri::Unknown,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Tri::Yes => "yes",
            Tri::No => "no",
            Tri::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Betti numbers `β_0, ..., β_pd`, trailing zeros removed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BettiSequence(Vec<u64>);

impl BettiSequence {
    pub fn new(mut values: Vec<u64>) -> Result<Self> {
        while values.last() == Some(&0) {
            values.pop();
        }
        if values.is_empty() {
            return Err(Error::InvalidGenerators("Betti sequence is zero".into()));
        }
        Ok(BettiSequence(values))
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn projective_dimension(&self) -> usize {
        self.0.len() - 1
    }
}

/// `β_i(C) = Σ_{i'} β_{i'}(A)·(β_{i-i'}(B) + β_{i-i'-1}(B))`.
pub fn glued_betti(a: &BettiSequence, b: &BettiSequence) -> Result<BettiSequence> {
    let len = a.0.len() + b.0.len();
    let overflow = || Error::Overflow("Betti number exceeds 64 bits".into());
    let mut out = vec![0u64; len];
    for (i, o) in out.iter_mut().enumerate() {
        for i2 in 0..=i.min(a.0.len() - 1) {
            let j = i - i2;
            let inner = b.get(j) + if j > 0 { b.get(j - 1) } else { 0 };
            let term = a.0[i2].checked_mul(inner).ok_or_else(overflow)?;
            *o = o.checked_add(term).ok_or_else(overflow)?;
        }
    }
    BettiSequence::new(out)
}

pub fn dim_of(a: &SemigroupGens) -> usize {
    a.rank()
}

pub fn glued_dim(dim_a: usize, dim_b: usize) -> usize {
    dim_a + dim_b - 1
}

pub fn glued_pd(pd_a: usize, pd_b: usize) -> usize {
    pd_a + pd_b + 1
}

pub fn glued_depth(depth_a: usize, depth_b: usize) -> usize {
    depth_a + depth_b - 1
}

/// Cohen–Macaulay type of a gluing of rings of types `t_a` and `t_b`.
pub fn cm_type_product(t_a: u64, t_b: u64) -> u64 {
    t_a * t_b
}

/// `μ = p - dim`.
pub fn is_ci_by_count(mu: usize, variables: usize, dim: usize) -> bool {
    mu + dim == variables
}

pub fn is_complete_intersection(a: &SemigroupGens) -> Result<bool> {
    let mu = toric::toric_ideal(a)?.mu();
    Ok(is_ci_by_count(mu, a.p(), dim_of(a)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologySummary {
    pub dim: usize,
    pub variables: usize,
    pub mu: usize,
    pub pd: Option<usize>,
    pub depth: Option<usize>,
    pub ci: Tri,
    pub cm: Tri,
    pub gorenstein: Tri,
}

impl HomologySummary {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        dim: usize,
        variables: usize,
        mu: usize,
        pd: Option<usize>,
        depth: Option<usize>,
        ci: Tri,
        cm: Tri,
        gorenstein: Tri,
    ) -> Result<Self> {
        if let (Some(pd), Some(depth)) = (pd, depth) {
            if pd + depth != variables {
                return Err(Error::DimensionMismatch(format!(
                    "pd {pd} + depth {depth} differs from {variables} variables"
                )));
            }
        }
        if ci == Tri::Yes && (cm == Tri::No || gorenstein == Tri::No) {
            return Err(Error::InvalidGenerators(
                "a complete intersection is Gorenstein and Cohen-Macaulay".into(),
            ));
        }
        let (cm, gorenstein) = if ci == Tri::Yes {
            (Tri::Yes, Tri::Yes)
        } else {
            (cm, gorenstein)
        };
        Ok(HomologySummary {
            dim,
            variables,
            mu,
            pd,
            depth,
            ci,
            cm,
            gorenstein,
        })
    }

    /// What the toric ideal alone tells: dimension, `μ`, and whether `μ`
    /// equals the codimension.
    pub fn from_counts(dim: usize, variables: usize, mu: usize) -> Self {
        let ci = Tri::from_bool(is_ci_by_count(mu, variables, dim));
        let known = if ci == Tri::Yes {
            Tri::Yes
        } else {
            Tri::Unknown
        };
        HomologySummary {
            dim,
            variables,
            mu,
            pd: if ci == Tri::Yes {
                Some(variables - dim)
            } else {
                None
            },
            depth: if ci == Tri::Yes { Some(dim) } else { None },
            ci,
            cm: known,
            gorenstein: known,
        }
    }
}

/// Invariants of `k[C]` for a gluing `C` of `A` and `B`.
pub fn propagate(a: &HomologySummary, b: &HomologySummary, glued: bool) -> Result<HomologySummary> {
    if !glued {
        return Err(Error::NotAGluing);
    }
    Ok(HomologySummary {
        dim: glued_dim(a.dim, b.dim),
        variables: a.variables + b.variables,
        mu: a.mu + b.mu + 1,
        pd: a.pd.zip(b.pd).map(|(x, y)| glued_pd(x, y)),
        depth: a.depth.zip(b.depth).map(|(x, y)| glued_depth(x, y)),
        ci: a.ci.and(b.ci),
        cm: a.cm.and(b.cm),
        gorenstein: a.gorenstein.and(b.gorenstein),
    })
}
