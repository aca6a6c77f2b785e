#![allow(dead_code)]

use num_bigint::BigInt;
use semiglue::binomial::{normal_form, MonomialOrder};
use semiglue::exactlin::{self, IntegerMatrix, LatticeVector};
use semiglue::gluing::MembershipSearch;
use semiglue::toric::toric_ideal;
use semiglue::{Binomial, BinomialIdeal, Monomial, SemigroupGens};

pub type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn primitive_idempotent(v: &[i64]) -> Check {
    let v = LatticeVector::from_i64(v);
    match exactlin::primitive(&v) {
        Err(_) => ensure(v.is_zero(), || format!("primitive failed on {v}")),
        Ok(p) => {
            ensure(p.is_primitive(), || format!("{p} is not primitive"))?;
            let q = exactlin::primitive(&p).map_err(|e| e.to_string())?;
            ensure(p == q, || format!("primitive({p}) = {q}"))?;
            // p is ±v/content(v)
            let g = v.content();
            let back = p.scaled(&g);
            let neg = back.scaled(&BigInt::from(-1));
            ensure(back == v || neg == v, || format!("{p}·{g} is not ±{v}"))
        }
    }
}

/// Gcd of all maximal minors of the columns of `basis`.
fn maximal_minor_gcd(basis: &IntegerMatrix) -> BigInt {
    let (n, r) = (basis.rows(), basis.cols());
    let mut g = BigInt::from(0);
    let mut rows: Vec<usize> = (0..r).collect();
    loop {
        let sub = basis.select_rows(&rows).unwrap();
        g = num_integer::Integer::gcd(&g, &exactlin::determinant(&sub).unwrap());
        // next r-subset of 0..n in lexicographic order
        let Some(i) = (0..r).rev().find(|&i| rows[i] < n - r + i) else {
            return g;
        };
        rows[i] += 1;
        for k in i + 1..r {
            rows[k] = rows[k - 1] + 1;
        }
    }
}

/// `M·k = 0` for each basis vector, the right count, and a saturated lattice.
pub fn kernel_exact(rows: &[Vec<i64>]) -> Check {
    let m = IntegerMatrix::from_rows(rows).map_err(|e| e.to_string())?;
    let basis = exactlin::kernel_lattice_basis(&m);
    let expected = m.cols() - exactlin::rank(&m);
    ensure(basis.len() == expected, || {
        format!("kernel of size {} for nullity {expected}", basis.len())
    })?;
    for k in &basis {
        let image = m.mul_vec(k.entries()).map_err(|e| e.to_string())?;
        ensure(image.is_zero(), || format!("M·{k} = {image}"))?;
    }
    if basis.is_empty() {
        return Ok(());
    }
    let cols: Vec<Vec<i64>> = basis.iter().map(|k| k.to_i64().unwrap()).collect();
    let k = IntegerMatrix::from_columns(&cols).map_err(|e| e.to_string())?;
    ensure(exactlin::rank(&k) == basis.len(), || {
        "kernel basis is dependent".into()
    })?;
    let g = maximal_minor_gcd(&k);
    ensure(g == BigInt::from(1), || {
        format!("kernel lattice has index {g}")
    })
}

pub fn rank_of_transpose(rows: &[Vec<i64>]) -> Check {
    let m = IntegerMatrix::from_rows(rows).map_err(|e| e.to_string())?;
    let (r, t) = (exactlin::rank(&m), exactlin::rank(&m.transpose()));
    ensure(r == t, || format!("rank {r} but transpose rank {t}"))
}

fn gens(cols: &[Vec<i64>]) -> Option<SemigroupGens> {
    SemigroupGens::new(cols.to_vec(), "x").ok()
}

/// The reduced Gröbner basis does not depend on the order of the generators.
pub fn groebner_deterministic(cols: &[Vec<i64>], perm_seed: u64) -> Check {
    let Some(a) = gens(cols) else { return Ok(()) };
    let ideal = toric_ideal(&a).map_err(|e| e.to_string())?;
    let mut shuffled: Vec<Binomial> = ideal.generators().to_vec();
    let len = shuffled.len();
    if len > 1 {
        let mut s = perm_seed;
        for i in (1..len).rev() {
            s = s
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            let j = (s >> 33) as usize % (i + 1);
            shuffled.swap(i, j);
        }
        if perm_seed % 2 == 1 {
            shuffled = shuffled.into_iter().map(|b| b.negated()).collect();
        }
    }
    let other = BinomialIdeal::with_weights(a.block().clone(), shuffled, a.weights())
        .map_err(|e| e.to_string())?;
    let mut x: Vec<Binomial> = ideal.ideal.groebner().elements().to_vec();
    let mut y: Vec<Binomial> = other.groebner().elements().to_vec();
    x.sort();
    y.sort();
    ensure(x == y, || "reduced bases differ".into())
}

/// Saturating a lattice ideal a second time changes nothing.
pub fn saturation_idempotent(cols: &[Vec<i64>]) -> Check {
    let Some(a) = gens(cols) else { return Ok(()) };
    let basis = exactlin::kernel_lattice_basis(a.matrix());
    let lattice: Vec<Binomial> = basis
        .iter()
        .filter_map(|k| Binomial::from_exponent_difference(&k.to_i64().unwrap()))
        .collect();
    let ideal = BinomialIdeal::with_weights(a.block().clone(), lattice, a.weights())
        .map_err(|e| e.to_string())?;
    let all: Vec<usize> = (0..a.p()).collect();
    let once = ideal.saturate(&all).map_err(|e| e.to_string())?;
    let twice = once.saturate(&all).map_err(|e| e.to_string())?;
    ensure(
        semiglue::binomial::ideal_equal(&once, &twice).map_err(|e| e.to_string())?,
        || "saturation is not idempotent".into(),
    )?;
    let toric = toric_ideal(&a).map_err(|e| e.to_string())?;
    ensure(
        semiglue::binomial::ideal_equal(&once, &toric.ideal).map_err(|e| e.to_string())?,
        || "saturated lattice ideal differs from the toric ideal".into(),
    )
}

/// Normal forms are fixed points, and reduction preserves the `A`-degree.
pub fn normal_form_idempotent(cols: &[Vec<i64>], monomials: &[Vec<u32>]) -> Check {
    let Some(a) = gens(cols) else { return Ok(()) };
    let ideal = toric_ideal(&a).map_err(|e| e.to_string())?;
    let gb = ideal.ideal.groebner();
    for m in monomials {
        let m: Vec<u32> = m
            .iter()
            .copied()
            .chain(std::iter::repeat(0))
            .take(a.p())
            .collect();
        let once = gb.reduce_monomial(&Monomial(m.clone()));
        let twice = gb.reduce_monomial(&once);
        ensure(once == twice, || {
            format!("normal form of {m:?} moved again")
        })?;
        ensure(a.degree(&m) == a.degree(&once.0), || {
            format!("reduction of {m:?} changed degree")
        })?;
        if let Some(b) = Binomial::new(Monomial(m.clone()), once.clone()) {
            ensure(normal_form(&b, gb).is_none(), || {
                format!("{m:?} - nf not in ideal")
            })?;
        }
    }
    let unit = MonomialOrder::unit_degrevlex(a.p());
    let other = ideal.ideal.groebner_with(&unit);
    for g in ideal.generators() {
        ensure(other.contains(g), || {
            "generator not in ideal under another order".into()
        })?;
    }
    Ok(())
}

/// Every `x` with `A·x = v`, by exhaustive search over the box; `None` when
/// the box exceeds `limit` points.
pub fn exhaustive_solutions(a: &SemigroupGens, v: &[i64], limit: u64) -> Option<Vec<Vec<u64>>> {
    let mut caps = Vec::new();
    let mut size: u64 = 1;
    for col in a.columns() {
        let cap = col
            .iter()
            .zip(v)
            .filter(|(&c, _)| c > 0)
            .map(|(&c, &t)| if t < 0 { -1 } else { t / c })
            .min()?;
        if cap < 0 {
            return Some(Vec::new());
        }
        size = size.checked_mul(cap as u64 + 1)?;
        if size > limit {
            return None;
        }
        caps.push(cap as u64);
    }
    let mut out = Vec::new();
    let mut x = vec![0u64; a.p()];
    loop {
        let image: Vec<i128> = (0..a.n())
            .map(|i| {
                a.columns()
                    .iter()
                    .zip(&x)
                    .map(|(c, &e)| i128::from(c[i]) * i128::from(e))
                    .sum()
            })
            .collect();
        if image.iter().zip(v).all(|(&w, &t)| w == i128::from(t)) {
            out.push(x.clone());
        }
        let mut k = 0;
        loop {
            if k == x.len() {
                return Some(out);
            }
            if x[k] < caps[k] {
                x[k] += 1;
                break;
            }
            x[k] = 0;
            k += 1;
        }
    }
}

/// Sound: any answer solves `A·x = v`. Complete: an answer exists exactly
/// when the exhaustive search finds one.
pub fn membership_agrees(cols: &[Vec<i64>], v: &[i64]) -> Check {
    let Some(a) = gens(cols) else { return Ok(()) };
    if v.len() != a.n() {
        return Ok(());
    }
    let Some(all) = exhaustive_solutions(&a, v, 10_000) else {
        return Ok(());
    };
    let found = MembershipSearch::new(&a)
        .solve(v)
        .map_err(|e| e.to_string())?;
    match found {
        Some(x) => ensure(all.contains(&x), || {
            format!("{x:?} does not solve A·x = {v:?}")
        }),
        None => ensure(all.is_empty(), || {
            format!("missed solution {:?} of {v:?}", all[0])
        }),
    }
}
