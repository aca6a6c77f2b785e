use std::sync::OnceLock;

use super::groebner::{buchberger, GroebnerBasis};
use super::{Binomial, Monomial, MonomialOrder, VariableBlock};
use crate::error::{Error, Result};

/// An ideal generated by pure-difference binomials over a variable block.
///
/// `weights` is a positive grading used for the default order, a weighted
/// degrevlex with the last variable cheapest. The reduced Gröbner basis for
/// that order is computed at most once and shared by clones made afterwards.
#[derive(Clone, Debug)]
pub struct BinomialIdeal {
    block: VariableBlock,
    generators: Vec<Binomial>,
    weights: Vec<u64>,
    groebner: OnceLock<GroebnerBasis>,
}

impl BinomialIdeal {
    pub fn new(block: VariableBlock, generators: Vec<Binomial>) -> Result<Self> {
        let weights = vec![1; block.size()];
        Self::with_weights(block, generators, weights)
    }

    pub fn with_weights(
        block: VariableBlock,
        generators: Vec<Binomial>,
        weights: Vec<u64>,
    ) -> Result<Self> {
        if weights.len() != block.size() || weights.contains(&0) {
            return Err(Error::DimensionMismatch(
                "one positive weight per variable is required".into(),
            ));
        }
        if let Some(g) = generators.iter().find(|g| g.len() != block.size()) {
            return Err(Error::BlockMismatch(format!(
                "generator over {} variables in a block of {}",
                g.len(),
                block.size()
            )));
        }
        Ok(BinomialIdeal {
            block,
            generators,
            weights,
            groebner: OnceLock::new(),
        })
    }

    pub(crate) fn with_cached_basis(mut self, basis: GroebnerBasis) -> Self {
        debug_assert_eq!(basis.order(), &self.default_order());
        self.groebner = OnceLock::from(basis);
        self
    }

    pub fn block(&self) -> &VariableBlock {
        &self.block
    }

    pub fn generators(&self) -> &[Binomial] {
        &self.generators
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators
            .iter()
            .all(|g| g.is_homogeneous(&self.weights))
    }

    pub fn default_order(&self) -> MonomialOrder {
        MonomialOrder::degrevlex(self.weights.clone())
    }

    /// Reduced Gröbner basis for the default order.
    pub fn groebner(&self) -> &GroebnerBasis {
        self.groebner
            .get_or_init(|| buchberger(&self.generators, &self.default_order()))
    }

    pub fn groebner_with(&self, order: &MonomialOrder) -> GroebnerBasis {
        if *order == self.default_order() {
            self.groebner().clone()
        } else {
            buchberger(&self.generators, order)
        }
    }

    pub fn contains(&self, b: &Binomial) -> bool {
        self.groebner().contains(b)
    }

    /// `I : (prod of vars)^inf` by one variable at a time: a Gröbner basis in
    /// an order where the variable is cheapest, then every element divided by
    /// the largest power of it dividing both sides. Requires the generators to
    /// be homogeneous for the ideal's weights.
    pub fn saturate(&self, vars: &[usize]) -> Result<BinomialIdeal> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        if let Some(&v) = vars.iter().find(|&&v| v >= self.block.size()) {
            return Err(Error::IndexOutOfRange {
                index: v + 1,
                max: self.block.size(),
            });
        }
        let mut gens = self.generators.clone();
        for &v in vars {
            let order = MonomialOrder::degrevlex_cheapest(self.weights.clone(), v);
            let basis = buchberger(&gens, &order);
            gens = basis
                .into_elements()
                .into_iter()
                .filter_map(|g| divide_out(&g, v))
                .collect();
        }
        let order = self.default_order();
        let basis = buchberger(&gens, &order);
        let out = BinomialIdeal::with_weights(
            self.block.clone(),
            basis.elements().to_vec(),
            self.weights.clone(),
        )?;
        Ok(out.with_cached_basis(basis))
    }

    /// Generators of `I ∩ k[keep]`, as an ideal over the sub-block `keep`.
    pub fn eliminate(&self, keep: &[usize]) -> Result<BinomialIdeal> {
        let size = self.block.size();
        if let Some(&v) = keep.iter().find(|&&v| v >= size) {
            return Err(Error::IndexOutOfRange {
                index: v + 1,
                max: size,
            });
        }
        let eliminated: Vec<bool> = (0..size).map(|i| !keep.contains(&i)).collect();
        let order = MonomialOrder::elimination(self.weights.clone(), eliminated);
        let basis = buchberger(&self.generators, &order);
        let gens = basis
            .elements()
            .iter()
            .filter(|g| g.supported_in(keep))
            .map(|g| g.project(keep))
            .collect();
        let weights = keep.iter().map(|&i| self.weights[i]).collect();
        BinomialIdeal::with_weights(self.block.select(keep)?, gens, weights)
    }

    /// The extension `I·R` to a larger block, placing this block's variables
    /// at `offset`.
    pub fn extend(&self, block: &VariableBlock, offset: usize, weights: Vec<u64>) -> Result<Self> {
        if offset + self.block.size() > block.size() {
            return Err(Error::BlockMismatch("extension does not fit".into()));
        }
        let gens = self
            .generators
            .iter()
            .map(|g| g.embed(block.size(), offset))
            .collect();
        BinomialIdeal::with_weights(block.clone(), gens, weights)
    }

    /// Ideal sum with extra generators over the same block.
    pub fn plus(&self, extra: &[Binomial]) -> Result<Self> {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        BinomialIdeal::with_weights(self.block.clone(), gens, self.weights.clone())
    }

    pub fn sum(&self, other: &BinomialIdeal) -> Result<Self> {
        if self.block != other.block {
            return Err(Error::BlockMismatch(
                "sum of ideals over different blocks".into(),
            ));
        }
        self.plus(&other.generators)
    }
}

fn divide_out(g: &Binomial, v: usize) -> Option<Binomial> {
    let k = g.plus().0[v].min(g.minus().0[v]);
    let mut p = g.plus().0.clone();
    let mut q = g.minus().0.clone();
    p[v] -= k;
    q[v] -= k;
    Binomial::new(Monomial(p), Monomial(q))
}

/// Whether every generator of each ideal lies in the other.
pub fn ideal_equal(i: &BinomialIdeal, j: &BinomialIdeal) -> Result<bool> {
    if i.block != j.block {
        return Err(Error::BlockMismatch(format!(
            "{:?} vs {:?}",
            i.block.names(),
            j.block.names()
        )));
    }
    Ok(i.generators.iter().all(|g| j.contains(g)) && j.generators.iter().all(|g| i.contains(g)))
}
