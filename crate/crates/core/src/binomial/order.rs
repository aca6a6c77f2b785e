use std::cmp::Ordering;

use super::weighted_degree;

/// A weighted degree reverse-lexicographic order, optionally refined into a
/// block elimination order.
///
/// With elimination enabled, the weighted degree in the eliminated variables
/// is compared first, so any monomial containing an eliminated variable is
/// larger than every monomial free of them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    weights: Vec<u64>,
    // variable indices scanned by the reverse-lex tie-break, cheapest first
    revlex: Vec<usize>,
    eliminated: Option<Vec<bool>>,
}

impl MonomialOrder {
    /// Weighted degrevlex where the last variable is the cheapest.
    pub fn degrevlex(weights: Vec<u64>) -> Self {
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        let revlex = (0..weights.len()).rev().collect();
        MonomialOrder {
            weights,
            revlex,
            eliminated: None,
        }
    }

    pub fn unit_degrevlex(size: usize) -> Self {
        Self::degrevlex(vec![1; size])
    }

    /// Weighted degrevlex where `var` is the cheapest variable; the others
    /// keep their usual positions.
    pub fn degrevlex_cheapest(weights: Vec<u64>, var: usize) -> Self {
        let mut order = Self::degrevlex(weights);
        order.revlex.retain(|&v| v != var);
        order.revlex.insert(0, var);
        order
    }

    /// Block elimination order for the variables flagged in `eliminated`.
    pub fn elimination(weights: Vec<u64>, eliminated: Vec<bool>) -> Self {
        assert_eq!(weights.len(), eliminated.len());
        let mut order = Self::degrevlex(weights);
        order.eliminated = Some(eliminated);
        order
    }

    pub fn size(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn eliminated(&self) -> Option<&[bool]> {
        self.eliminated.as_deref()
    }

    pub fn degree(&self, e: &[u32]) -> u128 {
        weighted_degree(e, &self.weights)
    }

    pub fn compare(&self, a: &[u32], b: &[u32]) -> Ordering {
        if let Some(elim) = &self.eliminated {
            let block = |e: &[u32]| -> u128 {
                e.iter()
                    .zip(&self.weights)
                    .zip(elim)
                    .filter(|(_, &x)| x)
                    .map(|((&a, &w), _)| u128::from(a) * u128::from(w))
                    .sum()
            };
            match block(a).cmp(&block(b)) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        match self.degree(a).cmp(&self.degree(b)) {
            Ordering::Equal => {}
            other => return other,
        }
        for &v in &self.revlex {
            if a[v] != b[v] {
                // fewer of the cheapest variable wins
                return b[v].cmp(&a[v]);
            }
        }
        Ordering::Equal
    }
}
