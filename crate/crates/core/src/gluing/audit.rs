use std::collections::HashMap;

use super::membership::{multiples_in_semigroup, to_i64};
use super::{check_rank_conditions, coprime_pair_from, gluable_lattice_point, verify_gluing};
use super::{GluingCandidate, Verdict};
use crate::error::Result;
use crate::exactlin::LatticeVector;
use crate::toric::SemigroupGens;

/// Default bound on the coefficient sum explored by the direct search for
/// `A·X = B·Y`.
pub const DEFAULT_DBOX: u32 = 12;

#[derive(Clone, Debug)]
pub struct AuditOptions {
    pub kmax: u64,
    pub dbox: u32,
    /// Multipliers tried for gluability besides the coprime pair.
    pub extra_pairs: Vec<(u64, u64)>,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions {
            kmax: super::DEFAULT_KMAX,
            dbox: DEFAULT_DBOX,
            extra_pairs: Vec::new(),
        }
    }
}

/// The four conditions
/// (a) coprime `k1, k2` with `k2·u ∈ <A>` and `k1·u ∈ <B>`,
/// (b) some `k1·A ⊔ k2·B` is a gluing,
/// (c) some positive multiples of `u` in `<A>` and in `<B>`,
/// (d) a solution of `A·X = B·Y` with `X, Y ≥ 0` nonzero,
/// with the implications between them checked on the data found.
#[derive(Clone, Debug)]
pub struct ChainAudit {
    pub u: LatticeVector,
    pub a: Verdict,
    pub b: Verdict,
    pub c: Verdict,
    pub d: Verdict,
    pub coprime_pair: Option<(u64, u64)>,
    pub glued_pair: Option<(u64, u64)>,
    pub multiples_a: Vec<u64>,
    pub multiples_b: Vec<u64>,
    pub d_witness: Option<(Vec<u64>, Vec<u64>)>,
    pub violations: Vec<String>,
}

impl ChainAudit {
    pub fn is_consistent(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn implication_chain_audit(
    a: &SemigroupGens,
    b: &SemigroupGens,
    options: &AuditOptions,
) -> Result<ChainAudit> {
    let rc = check_rank_conditions(a, b)?;
    let u = gluable_lattice_point(a, b)?;
    debug_assert!(rc.hold_after_projection());
    let ui = to_i64(&u)?;
    let ma = multiples_in_semigroup(&u, a, options.kmax)?;
    let mb = multiples_in_semigroup(&u, b, options.kmax)?;
    let mut violations = Vec::new();

    let c = if ma.never || mb.never {
        Verdict::No
    } else if !ma.is_empty() && !mb.is_empty() {
        Verdict::Yes
    } else {
        Verdict::NotFoundWithinBound
    };

    let pair = coprime_pair_from(&ma, &mb);
    let av = match (&pair, c) {
        (Some(_), _) => Verdict::Yes,
        (None, Verdict::No) => Verdict::No,
        (None, _) => Verdict::NotFoundWithinBound,
    };

    // (b): the coprime pair first, then the caller's pairs
    let mut tries: Vec<(u64, u64)> = pair.iter().map(|p| (p.k1, p.k2)).collect();
    tries.extend(options.extra_pairs.iter().copied());
    let mut glued = None;
    for &(k1, k2) in &tries {
        let cand = GluingCandidate::new(a.clone(), b.clone(), k1, k2)?;
        let report = verify_gluing(&cand)?;
        if report.is_gluing {
            glued = Some(((k1, k2), report));
            break;
        }
        if pair.as_ref().is_some_and(|p| (p.k1, p.k2) == (k1, k2)) {
            violations.push(format!("(a) => (b): C = {k1}A u {k2}B is not a gluing"));
        }
    }
    let bv = match (&glued, c) {
        (Some(_), _) => Verdict::Yes,
        (None, Verdict::No) => Verdict::No,
        (None, _) => Verdict::NotFoundWithinBound,
    };

    // (d): direct search, then witnesses derived from (b) and (c)
    let mut d_witness = direct_search(a, b, options.dbox);
    if let Some(((k1, k2), report)) = &glued {
        let derived = report.rho.as_ref().and_then(|rho| {
            let e = rho.exponent_difference();
            let (x, y) = e.split_at(a.p());
            let sign = if x.iter().any(|&v| v > 0) { 1 } else { -1 };
            let xs: Vec<u64> = x.iter().map(|&v| (sign * v).max(0) as u64 * k1).collect();
            let ys: Vec<u64> = y.iter().map(|&v| (-sign * v).max(0) as u64 * k2).collect();
            solves(a, b, &xs, &ys).then_some((xs, ys))
        });
        match derived {
            Some(w) => {
                d_witness.get_or_insert(w);
            }
            None => violations.push("(b) => (d): the gluing binomial gives no solution".into()),
        }
    }
    if let (Some((ka, x)), Some((kb, y))) = (ma.found.first(), mb.found.first()) {
        // A·x = ka·u and B·y = kb·u, so A·(kb·x) = B·(ka·y)
        let xs: Vec<u64> = x.iter().map(|&v| v * kb).collect();
        let ys: Vec<u64> = y.iter().map(|&v| v * ka).collect();
        if solves(a, b, &xs, &ys) {
            d_witness.get_or_insert((xs, ys));
        } else {
            violations.push("(c) => (d): multiples of u give no solution".into());
        }
    }
    let dv = match (&d_witness, c) {
        (Some(_), _) => Verdict::Yes,
        (None, Verdict::No) => Verdict::No,
        (None, _) => Verdict::NotFoundWithinBound,
    };
    if let Some((x, _)) = &d_witness {
        let v = a.degree(&x.iter().map(|&e| e as u32).collect::<Vec<_>>());
        if !is_positive_multiple(&v, &ui) {
            violations.push("(d) => (c): A·X is not a multiple of u".into());
        } else if c == Verdict::No {
            violations.push("(d) => (c): solution found but (c) was refuted".into());
        }
    }
    if bv == Verdict::Yes && c == Verdict::No {
        violations.push("(b) => (c): gluing found but (c) was refuted".into());
    }

    Ok(ChainAudit {
        u,
        a: av,
        b: bv,
        c,
        d: dv,
        coprime_pair: pair.map(|p| (p.k1, p.k2)),
        glued_pair: glued.map(|(k, _)| k),
        multiples_a: ma.ks(),
        multiples_b: mb.ks(),
        d_witness,
        violations,
    })
}

fn solves(a: &SemigroupGens, b: &SemigroupGens, x: &[u64], y: &[u64]) -> bool {
    let to32 =
        |v: &[u64]| -> Option<Vec<u32>> { v.iter().map(|&e| u32::try_from(e).ok()).collect() };
    let (Some(x), Some(y)) = (to32(x), to32(y)) else {
        return false;
    };
    x.iter().any(|&e| e > 0) && y.iter().any(|&e| e > 0) && a.degree(&x) == b.degree(&y)
}

fn is_positive_multiple(v: &[i128], u: &[i64]) -> bool {
    let Some(i) = u.iter().position(|&x| x != 0) else {
        return false;
    };
    let ui = i128::from(u[i]);
    if v[i] % ui != 0 {
        return false;
    }
    let t = v[i] / ui;
    t > 0 && v.iter().zip(u).all(|(&x, &e)| x == t * i128::from(e))
}

/// Elements of `<A>` and `<B>` with coefficient sums in `1..=depth`,
/// intersected.
fn direct_search(a: &SemigroupGens, b: &SemigroupGens, depth: u32) -> Option<(Vec<u64>, Vec<u64>)> {
    let left = layers(a, depth);
    let right = layers(b, depth);
    let mut best: Option<(&Vec<i64>, &Vec<u64>, &Vec<u64>)> = None;
    for (v, x) in &left {
        if let Some(y) = right.get(v) {
            if best.is_none_or(|(w, _, _)| v < w) {
                best = Some((v, x, y));
            }
        }
    }
    best.map(|(_, x, y)| (x.clone(), y.clone()))
}

fn layers(g: &SemigroupGens, depth: u32) -> HashMap<Vec<i64>, Vec<u64>> {
    let mut seen: HashMap<Vec<i64>, Vec<u64>> = HashMap::new();
    let mut frontier: Vec<(Vec<i64>, Vec<u64>)> = vec![(vec![0; g.n()], vec![0; g.p()])];
    for _ in 0..depth {
        let mut next = Vec::new();
        for (v, x) in &frontier {
            for (j, col) in g.columns().iter().enumerate() {
                let w: Vec<i64> = v.iter().zip(col).map(|(a, b)| a + b).collect();
                if seen.contains_key(&w) {
                    continue;
                }
                let mut y = x.clone();
                y[j] += 1;
                seen.insert(w.clone(), y.clone());
                next.push((w, y));
            }
        }
        frontier = next;
    }
    seen
}
