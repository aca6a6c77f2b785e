use std::collections::BTreeSet;

use super::membership::{scale, to_i64, MembershipSearch};
use super::{check_rank_conditions, gluable_lattice_point, level, nondegenerate_rows};
use super::{GluingCandidate, RankConditions};
use crate::binomial::{ideal_equal, Binomial, BinomialIdeal, VariableBlock};
use crate::error::Result;
use crate::exactlin::LatticeVector;
use crate::homology::{propagate, HomologySummary};
use crate::toric::{toric_ideal, GradedBinomialSet};

/// Where a gluing binomial came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RhoSource {
    /// `x^c - y^d` with `A·c = k2·u` and `B·d = k1·u`.
    Witness,
    /// A minimal generator of `I_C` with one side in each block.
    SplitGenerator,
    /// Built from fibers in the degree of a minimal generator of `I_C`
    /// outside `I_A + I_B`.
    FiberSplit,
}

impl RhoSource {
    pub fn as_str(self) -> &'static str {
        match self {
            RhoSource::Witness => "witness",
            RhoSource::SplitGenerator => "split-generator",
            RhoSource::FiberSplit => "fiber-split",
        }
    }
}

#[derive(Clone, Debug)]
pub struct GluingReport {
    pub k1: u64,
    pub k2: u64,
    pub block: VariableBlock,
    pub rank_conditions: RankConditions,
    /// Coordinates kept when `[A|B]` is degenerate.
    pub projected_rows: Option<Vec<usize>>,
    pub u: Option<LatticeVector>,
    /// `c` with `A·c = k2·u`.
    pub witness_a: Option<Vec<u64>>,
    /// `d` with `B·d = k1·u`.
    pub witness_b: Option<Vec<u64>>,
    pub is_gluing: bool,
    pub rho: Option<Binomial>,
    pub rho_source: Option<RhoSource>,
    pub rho_level: Option<u64>,
    /// Minimal generators, over the joint block.
    pub ideal_a: Vec<Binomial>,
    pub ideal_b: Vec<Binomial>,
    pub ideal_c: Vec<Binomial>,
    /// Minimal generators of `I_C` outside `I_A·R + I_B·R`.
    pub extra_generators: Vec<Binomial>,
    pub homology_a: HomologySummary,
    pub homology_b: HomologySummary,
    pub homology_c: HomologySummary,
    /// Invariants of `C` predicted from the parts, when it is a gluing.
    pub predicted: Option<HomologySummary>,
}

impl GluingReport {
    pub fn mu_a(&self) -> usize {
        self.ideal_a.len()
    }

    pub fn mu_b(&self) -> usize {
        self.ideal_b.len()
    }

    pub fn mu_c(&self) -> usize {
        self.ideal_c.len()
    }
}

/// Decides whether `I_C = I_A·R + I_B·R + <ρ>` for some `ρ = x^c - y^d`.
pub fn verify_gluing(cand: &GluingCandidate) -> Result<GluingReport> {
    let (a, b, c) = (cand.a(), cand.b(), cand.glued());
    let (p, q) = (a.p(), b.p());
    let rc = check_rank_conditions(a, b)?;
    let projected_rows = rc
        .is_degenerate()
        .then(|| nondegenerate_rows(a, b))
        .transpose()?;

    let ia = toric_ideal(a)?;
    let ib = toric_ideal(b)?;
    let ic = toric_ideal(c)?;
    let weights = c.weights();
    let joint = cand.block();
    let ideal_a: Vec<Binomial> = ia.generators().iter().map(|g| g.embed(p + q, 0)).collect();
    let ideal_b: Vec<Binomial> = ib.generators().iter().map(|g| g.embed(p + q, p)).collect();
    let mut j_gens = ideal_a.clone();
    j_gens.extend(ideal_b.iter().cloned());
    let j = BinomialIdeal::with_weights(joint.clone(), j_gens, weights)?;
    let extra: Vec<Binomial> = ic
        .generators()
        .iter()
        .filter(|g| !j.contains(g))
        .cloned()
        .collect();

    let mut search_a = MembershipSearch::new(a);
    let mut search_b = MembershipSearch::new(b);
    let mut candidates: Vec<(Binomial, RhoSource)> = Vec::new();

    let mut u = None;
    let mut witness_a = None;
    let mut witness_b = None;
    if rc.hold_after_projection() {
        let point = gluable_lattice_point(a, b)?;
        let ui = to_i64(&point)?;
        witness_a = search_a.solve(&scale(&ui, cand.k2())?)?;
        witness_b = search_b.solve(&scale(&ui, cand.k1())?)?;
        if let (Some(x), Some(y)) = (&witness_a, &witness_b) {
            candidates.push((cand.split_binomial(x, y)?, RhoSource::Witness));
        }
        u = Some(point);
    }
    for g in ic.generators() {
        if is_split(g, p) {
            candidates.push((g.clone(), RhoSource::SplitGenerator));
        }
    }
    let mut tried_degrees = BTreeSet::new();
    for g in &extra {
        let degree = c.degree(&g.plus().0);
        if !tried_degrees.insert(degree.clone()) {
            continue;
        }
        let Some(on_a) = divide(&degree, cand.k1()) else {
            continue;
        };
        let Some(on_b) = divide(&degree, cand.k2()) else {
            continue;
        };
        if let (Some(x), Some(y)) = (search_a.solve(&on_a)?, search_b.solve(&on_b)?) {
            candidates.push((cand.split_binomial(&x, &y)?, RhoSource::FiberSplit));
        }
    }

    let mut found = None;
    for (rho, source) in candidates {
        if !ic.ideal.contains(&rho) {
            continue;
        }
        let sum = j.plus(std::slice::from_ref(&rho))?;
        if ic.generators().iter().all(|g| sum.contains(g)) && ideal_equal(&ic.ideal, &sum)? {
            found = Some((rho, source));
            break;
        }
    }

    let homology_a = summary(a.rank(), p, &ia);
    let homology_b = summary(b.rank(), q, &ib);
    let homology_c = summary(c.rank(), p + q, &ic);
    let is_gluing = found.is_some();
    let predicted = is_gluing
        .then(|| propagate(&homology_a, &homology_b, true))
        .transpose()?;
    let (rho, rho_source) = match found {
        Some((r, s)) => (Some(r.lower_index_first()), Some(s)),
        None => (None, None),
    };
    let rho_level = match &rho {
        Some(r) if u.is_some() => level(r, cand).ok(),
        _ => None,
    };
    Ok(GluingReport {
        k1: cand.k1(),
        k2: cand.k2(),
        block: joint.clone(),
        rank_conditions: rc,
        projected_rows,
        u,
        witness_a,
        witness_b,
        is_gluing,
        rho,
        rho_source,
        rho_level,
        ideal_a,
        ideal_b,
        ideal_c: ic.generators().to_vec(),
        extra_generators: extra,
        homology_a,
        homology_b,
        homology_c,
        predicted,
    })
}

fn summary(dim: usize, variables: usize, ideal: &GradedBinomialSet) -> HomologySummary {
    HomologySummary::from_counts(dim, variables, ideal.mu())
}

/// One side only in the first `p` variables, the other only in the rest.
fn is_split(g: &Binomial, p: usize) -> bool {
    let in_x = |m: &crate::binomial::Monomial| m.support().all(|i| i < p);
    let in_y = |m: &crate::binomial::Monomial| m.support().all(|i| i >= p);
    (in_x(g.plus()) && in_y(g.minus())) || (in_y(g.plus()) && in_x(g.minus()))
}

fn divide(v: &[i128], k: u64) -> Option<Vec<i64>> {
    let k = i128::from(k);
    v.iter()
        .map(|&x| (x % k == 0).then(|| i64::try_from(x / k).ok()).flatten())
        .collect()
}
