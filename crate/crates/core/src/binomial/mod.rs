//! Monomials, binomials and Gröbner bases of ideals generated by pure
//! differences of monomials.
//!
//! Coefficients are always `±1`, so nothing here depends on the base field.
//! Reducing a monomial by a binomial `u - v` replaces a factor `u` with `v`,
//! which keeps every intermediate object a monomial or a binomial.

mod groebner;
mod ideal;
mod order;

use std::fmt;

pub use groebner::{buchberger, normal_form, GroebnerBasis, GroebnerBuilder};
pub use ideal::{ideal_equal, BinomialIdeal};
pub use order::MonomialOrder;

use crate::error::{Error, Result};

/// Ordered, distinct variable names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VariableBlock {
    names: Vec<String>,
}

impl VariableBlock {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidGenerators("empty variable block".into()));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::InvalidGenerators(format!("duplicate variable {a}")));
            }
        }
        Ok(VariableBlock { names })
    }

    /// `prefix1, ..., prefix{size}`.
    pub fn indexed(prefix: &str, size: usize) -> Result<Self> {
        Self::new((1..=size).map(|i| format!("{prefix}{i}")))
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn concat(&self, other: &VariableBlock) -> Result<VariableBlock> {
        Self::new(self.names.iter().chain(other.names.iter()).cloned())
    }

    pub fn select(&self, positions: &[usize]) -> Result<VariableBlock> {
        Self::new(positions.iter().map(|&i| self.names[i].clone()))
    }
}

/// Exponent vector of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(size: usize) -> Self {
        Monomial(vec![0; size])
    }

    pub fn var(size: usize, index: usize) -> Self {
        let mut e = vec![0; size];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        divides(&self.0, &other.0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// Exponents placed at `offset` inside a vector of length `total`.
    pub fn embed(&self, total: usize, offset: usize) -> Monomial {
        let mut e = vec![0; total];
        e[offset..offset + self.0.len()].copy_from_slice(&self.0);
        Monomial(e)
    }

    pub fn display(&self, block: &VariableBlock) -> String {
        let factors: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| match e {
                1 => block.names[i].clone(),
                _ => format!("{}^{}", block.names[i], e),
            })
            .collect();
        if factors.is_empty() {
            "1".into()
        } else {
            factors.join("*")
        }
    }
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// `plus - minus` with `plus != minus`.
///
/// The two sides may share variables; [`Binomial::cancel_common`] removes the
/// common factor when that is meaningful (prime ideals such as toric ideals).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    plus: Monomial,
    minus: Monomial,
}

impl Binomial {
    /// `None` is the zero binomial.
    pub fn new(plus: Monomial, minus: Monomial) -> Option<Binomial> {
        assert_eq!(
            plus.len(),
            minus.len(),
            "binomial sides over different blocks"
        );
        (plus != minus).then_some(Binomial { plus, minus })
    }

    /// `x^{v+} - x^{v-}` for an integer vector `v`.
    pub fn from_exponent_difference(v: &[i64]) -> Option<Binomial> {
        let plus = v.iter().map(|&x| x.max(0) as u32).collect();
        let minus = v.iter().map(|&x| (-x).max(0) as u32).collect();
        Binomial::new(Monomial(plus), Monomial(minus))
    }

    pub fn plus(&self) -> &Monomial {
        &self.plus
    }

    pub fn minus(&self) -> &Monomial {
        &self.minus
    }

    pub fn len(&self) -> usize {
        self.plus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.plus.is_empty()
    }

    pub fn negated(&self) -> Binomial {
        Binomial {
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }

    /// Stores the leading monomial under `order` as `plus`.
    pub fn oriented(self, order: &MonomialOrder) -> Binomial {
        if order.compare(&self.plus.0, &self.minus.0).is_lt() {
            self.negated()
        } else {
            self
        }
    }

    /// Puts the side containing the lowest-indexed variable first.
    pub fn lower_index_first(self) -> Binomial {
        let first = |m: &Monomial| m.support().next().unwrap_or(usize::MAX);
        if first(&self.minus) < first(&self.plus) {
            self.negated()
        } else {
            self
        }
    }

    pub fn exponent_difference(&self) -> Vec<i64> {
        self.plus
            .0
            .iter()
            .zip(&self.minus.0)
            .map(|(&a, &b)| i64::from(a) - i64::from(b))
            .collect()
    }

    pub fn has_disjoint_support(&self) -> bool {
        self.plus.is_coprime(&self.minus)
    }

    /// Divides both sides by their gcd.
    pub fn cancel_common(&self) -> Binomial {
        Binomial::from_exponent_difference(&self.exponent_difference())
            .expect("sides differ, so the difference is nonzero")
    }

    pub fn embed(&self, total: usize, offset: usize) -> Binomial {
        Binomial {
            plus: self.plus.embed(total, offset),
            minus: self.minus.embed(total, offset),
        }
    }

    /// Whether both sides only involve the variables in `positions`.
    pub fn supported_in(&self, positions: &[usize]) -> bool {
        self.plus
            .support()
            .chain(self.minus.support())
            .all(|i| positions.contains(&i))
    }

    pub fn project(&self, positions: &[usize]) -> Binomial {
        let pick = |m: &Monomial| Monomial(positions.iter().map(|&i| m.0[i]).collect());
        Binomial {
            plus: pick(&self.plus),
            minus: pick(&self.minus),
        }
    }

    pub fn is_homogeneous(&self, weights: &[u64]) -> bool {
        weighted_degree(&self.plus.0, weights) == weighted_degree(&self.minus.0, weights)
    }

    pub fn display(&self, block: &VariableBlock) -> String {
        format!(
            "{} - {}",
            self.plus.display(block),
            self.minus.display(block)
        )
    }

    pub fn display_with<'a>(&'a self, block: &'a VariableBlock) -> BinomialDisplay<'a> {
        BinomialDisplay {
            binomial: self,
            block,
        }
    }
}

pub struct BinomialDisplay<'a> {
    binomial: &'a Binomial,
    block: &'a VariableBlock,
}

impl fmt::Display for BinomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.binomial.display(self.block))
    }
}

pub(crate) fn weighted_degree(e: &[u32], weights: &[u64]) -> u128 {
    e.iter()
        .zip(weights)
        .map(|(&a, &w)| u128::from(a) * u128::from(w))
        .sum()
}

/// Parses `lhs - rhs` where each side is `1` or a `*`-separated product of
/// `name` / `name^k` factors over `block`.
pub fn parse_binomial(text: &str, block: &VariableBlock) -> Result<Binomial> {
    let (lhs, rhs) = text
        .split_once('-')
        .ok_or_else(|| Error::InvalidGenerators(format!("expected `lhs - rhs`: {text}")))?;
    let plus = parse_monomial(lhs, block)?;
    let minus = parse_monomial(rhs, block)?;
    Binomial::new(plus, minus)
        .ok_or_else(|| Error::InvalidGenerators(format!("zero binomial: {text}")))
}

pub fn parse_monomial(text: &str, block: &VariableBlock) -> Result<Monomial> {
    let mut e = vec![0u32; block.size()];
    let text = text.trim();
    if text == "1" {
        return Ok(Monomial(e));
    }
    for factor in text.split('*') {
        let factor = factor.trim();
        let (name, power) = match factor.split_once('^') {
            Some((n, p)) => {
                let p = p
                    .trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidGenerators(format!("bad exponent in `{factor}`")))?;
                (n.trim(), p)
            }
            None => (factor, 1),
        };
        let i = block
            .position(name)
            .ok_or_else(|| Error::InvalidGenerators(format!("unknown variable `{name}`")))?;
        e[i] += power;
    }
    Ok(Monomial(e))
}
