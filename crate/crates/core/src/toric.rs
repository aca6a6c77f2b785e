//! Toric ideals of affine semigroups.
//!
//! `I_A` is computed from a lattice basis of `ker A`: the binomials of the
//! basis vectors generate an ideal whose saturation at every variable is
//! `I_A`. A brute-force fiber enumeration is provided as an independent check.

use std::collections::{BTreeMap, BTreeSet};

use crate::binomial::{Binomial, BinomialIdeal, GroebnerBuilder, VariableBlock};
use crate::error::{Error, Result};
use crate::exactlin::{self, IntegerMatrix};

/// Default cap on the number of fiber points visited by [`enumerate_oracle`].
pub const DEFAULT_WORK_LIMIT: usize = 1_000_000;

/// Nonzero generators `a_1, ..., a_p` of a semigroup in `N^n`, with one
/// variable per generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupGens {
    columns: Vec<Vec<i64>>,
    matrix: IntegerMatrix,
    block: VariableBlock,
}

impl SemigroupGens {
    /// Generators given as columns; variables are `prefix1..prefix{p}`.
    /// Repeated columns are rejected.
    pub fn new(columns: Vec<Vec<i64>>, prefix: &str) -> Result<Self> {
        let block = VariableBlock::indexed(prefix, columns.len())?;
        let gens = Self::with_block(columns, block)?;
        for (j, c) in gens.columns.iter().enumerate() {
            if gens.columns[..j].contains(c) {
                return Err(Error::InvalidGenerators(format!(
                    "generator {} repeats an earlier generator",
                    j + 1
                )));
            }
        }
        Ok(gens)
    }

    /// Generators given as the rows of the matrix whose columns they are.
    pub fn from_rows(rows: &[Vec<i64>], prefix: &str) -> Result<Self> {
        Self::new(transpose(rows)?, prefix)
    }

    /// Like [`SemigroupGens::new`] but allows repeated columns, as happens in
    /// `k1·A ⊔ k2·B` when the two parts share an element.
    pub fn with_block(columns: Vec<Vec<i64>>, block: VariableBlock) -> Result<Self> {
        let Some(first) = columns.first() else {
            return Err(Error::EmptyMatrix { rows: 0, cols: 0 });
        };
        let n = first.len();
        if n == 0 {
            return Err(Error::EmptyMatrix {
                rows: 0,
                cols: columns.len(),
            });
        }
        if columns.len() != block.size() {
            return Err(Error::BlockMismatch(format!(
                "{} generators for {} variables",
                columns.len(),
                block.size()
            )));
        }
        for (j, c) in columns.iter().enumerate() {
            if c.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "generator {} has length {}, expected {}",
                    j + 1,
                    c.len(),
                    n
                )));
            }
            if c.iter().any(|&x| x < 0) {
                return Err(Error::InvalidGenerators(format!(
                    "generator {} has a negative entry",
                    j + 1
                )));
            }
            if c.iter().all(|&x| x == 0) {
                return Err(Error::InvalidGenerators(format!(
                    "generator {} is zero",
                    j + 1
                )));
            }
        }
        let matrix = IntegerMatrix::from_columns(&columns)?;
        Ok(SemigroupGens {
            columns,
            matrix,
            block,
        })
    }

    pub fn n(&self) -> usize {
        self.columns[0].len()
    }

    pub fn p(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Vec<i64>] {
        &self.columns
    }

    pub fn column(&self, j: usize) -> &[i64] {
        &self.columns[j]
    }

    pub fn matrix(&self) -> &IntegerMatrix {
        &self.matrix
    }

    pub fn block(&self) -> &VariableBlock {
        &self.block
    }

    pub fn rank(&self) -> usize {
        exactlin::rank(&self.matrix)
    }

    pub fn has_repeated_columns(&self) -> bool {
        (0..self.p()).any(|j| self.columns[..j].contains(&self.columns[j]))
    }

    /// Column sums; every toric binomial is homogeneous for these weights.
    pub fn weights(&self) -> Vec<u64> {
        self.columns
            .iter()
            .map(|c| c.iter().map(|&x| x as u64).sum())
            .collect()
    }

    /// `k·A`, keeping the variable block.
    pub fn scaled(&self, k: u64) -> Result<SemigroupGens> {
        let k = i64::try_from(k).map_err(|_| Error::Overflow(format!("multiplier {k}")))?;
        let columns = self
            .columns
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&x| {
                        x.checked_mul(k)
                            .ok_or_else(|| Error::Overflow(format!("{k} * {x}")))
                    })
                    .collect()
            })
            .collect::<Result<Vec<Vec<i64>>>>()?;
        Self::with_block(columns, self.block.clone())
    }

    /// The same generators restricted to the coordinates in `rows`.
    pub fn select_rows(&self, rows: &[usize]) -> Result<SemigroupGens> {
        let columns = self
            .columns
            .iter()
            .map(|c| rows.iter().map(|&r| c[r]).collect())
            .collect();
        Self::with_block(columns, self.block.clone())
    }

    /// `A·x` for an exponent vector `x`.
    pub fn degree(&self, x: &[u32]) -> Vec<i128> {
        let mut out = vec![0i128; self.n()];
        for (c, &e) in self.columns.iter().zip(x) {
            if e == 0 {
                continue;
            }
            for (o, &a) in out.iter_mut().zip(c) {
                *o += i128::from(a) * i128::from(e);
            }
        }
        out
    }

    /// `A·v` for a signed vector `v`.
    pub fn apply(&self, v: &[i64]) -> Vec<i128> {
        let mut out = vec![0i128; self.n()];
        for (c, &e) in self.columns.iter().zip(v) {
            for (o, &a) in out.iter_mut().zip(c) {
                *o += i128::from(a) * i128::from(e);
            }
        }
        out
    }

    /// Whether both sides of `b` have the same degree.
    pub fn is_graded(&self, b: &Binomial) -> bool {
        self.degree(&b.plus().0) == self.degree(&b.minus().0)
    }
}

fn transpose(rows: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let Some(first) = rows.first() else {
        return Err(Error::EmptyMatrix { rows: 0, cols: 0 });
    };
    let p = first.len();
    if let Some(r) = rows.iter().find(|r| r.len() != p) {
        return Err(Error::DimensionMismatch(format!(
            "row of length {}, expected {}",
            r.len(),
            p
        )));
    }
    Ok((0..p)
        .map(|j| rows.iter().map(|r| r[j]).collect())
        .collect())
}

/// Binomial generators together with the `N^n`-degree of each.
#[derive(Clone, Debug)]
pub struct GradedBinomialSet {
    pub ideal: BinomialIdeal,
    pub degrees: Vec<Vec<i128>>,
}

impl GradedBinomialSet {
    pub fn new(gens: &SemigroupGens, generators: Vec<Binomial>) -> Result<Self> {
        for g in &generators {
            if g.len() != gens.p() || !gens.is_graded(g) {
                return Err(Error::InvalidGenerators(format!(
                    "{} is not homogeneous for the semigroup grading",
                    g.display(gens.block())
                )));
            }
        }
        let degrees = generators
            .iter()
            .map(|g| gens.degree(&g.plus().0))
            .collect();
        let ideal = BinomialIdeal::with_weights(gens.block().clone(), generators, gens.weights())?;
        Ok(GradedBinomialSet { ideal, degrees })
    }

    pub fn generators(&self) -> &[Binomial] {
        self.ideal.generators()
    }

    pub fn mu(&self) -> usize {
        self.ideal.generators().len()
    }
}

/// A minimal generating set of `I_A`.
pub fn toric_ideal(a: &SemigroupGens) -> Result<GradedBinomialSet> {
    let mut lattice = Vec::new();
    for v in exactlin::kernel_lattice_basis(a.matrix()) {
        let v = v
            .to_i64()
            .filter(|v| v.iter().all(|x| x.unsigned_abs() <= u64::from(u32::MAX)))
            .ok_or_else(|| Error::Overflow("kernel vector exceeds exponent range".into()))?;
        lattice.extend(Binomial::from_exponent_difference(&v));
    }
    let all: Vec<usize> = (0..a.p()).collect();
    let basis_ideal = BinomialIdeal::with_weights(a.block().clone(), lattice, a.weights())?;
    let saturated = basis_ideal.saturate(&all)?;
    let set = GradedBinomialSet::new(a, saturated.generators().to_vec())?;
    Ok(minimal_generators(&set))
}

/// Drops generators that lie in the ideal of the generators of smaller
/// degree, processing in increasing weighted degree.
pub fn minimal_generators(g: &GradedBinomialSet) -> GradedBinomialSet {
    let ideal = &g.ideal;
    let order = ideal.default_order();
    let mut items: Vec<(usize, u128)> = ideal
        .generators()
        .iter()
        .enumerate()
        .map(|(k, b)| (k, order.degree(&b.plus().0)))
        .collect();
    items.sort_by(|&(i, di), &(j, dj)| {
        let (bi, bj) = (&ideal.generators()[i], &ideal.generators()[j]);
        di.cmp(&dj)
            .then_with(|| {
                let bi = bi.clone().oriented(&order);
                let bj = bj.clone().oriented(&order);
                order
                    .compare(&bi.plus().0, &bj.plus().0)
                    .then_with(|| bi.cmp(&bj))
            })
            .then(i.cmp(&j))
    });

    let mut builder = GroebnerBuilder::new(order.clone());
    let mut kept = Vec::new();
    let mut degrees = Vec::new();
    for (k, _) in items {
        let b = &ideal.generators()[k];
        builder.complete();
        if builder.reduce(b).is_none() {
            continue;
        }
        builder.add(b);
        kept.push(b.clone());
        degrees.push(g.degrees[k].clone());
    }
    let ideal = BinomialIdeal::with_weights(ideal.block().clone(), kept, ideal.weights().to_vec())
        .expect("subset of a valid generating set");
    GradedBinomialSet { ideal, degrees }
}

/// Every binomial `x^{α+} - x^{α-}` with `A·α = 0` and `A·α+ ≤ bound`, each
/// once, with the lexicographically larger exponent vector first.
pub fn enumerate_oracle(
    a: &SemigroupGens,
    degree_bound: &[i64],
    work_limit: usize,
) -> Result<BTreeSet<Binomial>> {
    if degree_bound.len() != a.n() {
        return Err(Error::DimensionMismatch(format!(
            "degree bound of length {}, expected {}",
            degree_bound.len(),
            a.n()
        )));
    }
    if degree_bound.iter().any(|&b| b < 0) {
        return Err(Error::InvalidGenerators("negative degree bound".into()));
    }
    let mut fibers: BTreeMap<Vec<i64>, Vec<Vec<u32>>> = BTreeMap::new();
    let mut visited = 0usize;
    let mut x = vec![0u32; a.p()];
    let mut room = degree_bound.to_vec();
    enumerate_box(
        a,
        0,
        &mut x,
        &mut room,
        &mut fibers,
        &mut visited,
        work_limit,
    )?;

    let mut out = BTreeSet::new();
    for points in fibers.values() {
        for (i, u) in points.iter().enumerate() {
            for v in &points[..i] {
                let diff: Vec<i64> = u
                    .iter()
                    .zip(v)
                    .map(|(&s, &t)| i64::from(s) - i64::from(t))
                    .collect();
                let b = Binomial::from_exponent_difference(&diff).expect("distinct points");
                out.insert(if b.plus() >= b.minus() {
                    b
                } else {
                    b.negated()
                });
            }
        }
    }
    Ok(out)
}

fn enumerate_box(
    a: &SemigroupGens,
    j: usize,
    x: &mut Vec<u32>,
    room: &mut Vec<i64>,
    fibers: &mut BTreeMap<Vec<i64>, Vec<Vec<u32>>>,
    visited: &mut usize,
    limit: usize,
) -> Result<()> {
    if j == a.p() {
        *visited += 1;
        if *visited > limit {
            return Err(Error::BoundTooLarge { limit });
        }
        let degree = a.degree(x).into_iter().map(|d| d as i64).collect();
        fibers.entry(degree).or_default().push(x.clone());
        return Ok(());
    }
    let col = a.column(j).to_vec();
    let mut k = 0u32;
    loop {
        enumerate_box(a, j + 1, x, room, fibers, visited, limit)?;
        if col.iter().zip(room.iter()).any(|(&c, &r)| c > r) {
            break;
        }
        for (r, &c) in room.iter_mut().zip(&col) {
            *r -= c;
        }
        k += 1;
        x[j] = k;
    }
    for (r, &c) in room.iter_mut().zip(&col) {
        *r += c * i64::from(k);
    }
    x[j] = 0;
    Ok(())
}
