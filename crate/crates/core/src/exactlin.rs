//! Exact integer linear algebra.
//!
//! Everything here works over arbitrary-precision integers: ranks come from
//! fraction-free (Bareiss) elimination, integer kernels from unimodular
//! column reduction, and maximal minors either from Laplace expansion or
//! from a Bareiss determinant.

use std::fmt;

pub use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A dense integer matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix { rows, cols });
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(IntegerMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, vec![BigInt::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n, n)?;
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        Ok(m)
    }

    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let data = rows.iter().flatten().map(|&x| x.into()).collect();
        Self::new(r, c, data)
    }

    /// Builds the matrix whose columns are the given vectors.
    pub fn from_columns<T: Into<BigInt> + Copy>(columns: &[Vec<T>]) -> Result<Self> {
        let c = columns.len();
        let r = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|col| col.len() != r) {
            return Err(Error::DimensionMismatch(
                "columns of different lengths".into(),
            ));
        }
        let mut data = Vec::with_capacity(r * c);
        for i in 0..r {
            for col in columns {
                data.push(col[i].into());
            }
        }
        Self::new(r, c, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    fn get_mut(&mut self, r: usize, c: usize) -> &mut BigInt {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> LatticeVector {
        LatticeVector((0..self.rows).map(|r| self.get(r, c).clone()).collect())
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        IntegerMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Result<IntegerMatrix> {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            for &c in cols {
                data.push(self.get(r, c).clone());
            }
        }
        IntegerMatrix::new(self.rows, cols.len(), data)
    }

    pub fn select_rows(&self, rows: &[usize]) -> Result<IntegerMatrix> {
        let data = rows
            .iter()
            .flat_map(|&r| self.row(r).iter().cloned())
            .collect();
        IntegerMatrix::new(rows.len(), self.cols, data)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hconcat(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot concatenate {} rows with {} rows",
                self.rows, other.rows
            )));
        }
        let mut data = Vec::with_capacity(self.data.len() + other.data.len());
        for r in 0..self.rows {
            data.extend(self.row(r).iter().cloned());
            data.extend(other.row(r).iter().cloned());
        }
        IntegerMatrix::new(self.rows, self.cols + other.cols, data)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<LatticeVector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok(LatticeVector(
            (0..self.rows)
                .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
                .collect(),
        ))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// An integer vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector(pub Vec<BigInt>);

impl LatticeVector {
    pub fn from_i64(v: &[i64]) -> Self {
        LatticeVector(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
            && self
                .0
                .iter()
                .find(|x| !x.is_zero())
                .is_some_and(|x| x.is_positive())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    pub fn scaled(&self, k: &BigInt) -> LatticeVector {
        LatticeVector(self.0.iter().map(|x| x * k).collect())
    }

    /// Entries as `i64`, or `None` if any entry does not fit.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.0.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Row echelon form by fraction-free elimination. Returns the reduced matrix
/// rows and the pivot columns, in order.
fn bareiss_echelon(m: &IntegerMatrix) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows).map(|r| m.row(r).to_vec()).collect();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..m.cols {
        if rank == m.rows {
            break;
        }
        let Some(p) = (rank..m.rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..m.rows {
            for j in col + 1..m.cols {
                let v = &a[i][j] * &a[rank][col] - &a[i][col] * &a[rank][j];
                a[i][j] = v / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        pivots.push(col);
        rank += 1;
    }
    (a, pivots)
}

/// Rank over the rationals.
pub fn rank(m: &IntegerMatrix) -> usize {
    bareiss_echelon(m).1.len()
}

/// Lexicographically first maximal set of linearly independent columns.
pub fn independent_columns(m: &IntegerMatrix) -> Vec<usize> {
    bareiss_echelon(m).1
}

/// Lexicographically first maximal set of linearly independent rows.
pub fn independent_rows(m: &IntegerMatrix) -> Vec<usize> {
    bareiss_echelon(&m.transpose()).1
}

/// Determinant of a square matrix via Bareiss elimination.
pub fn determinant(m: &IntegerMatrix) -> Result<BigInt> {
    if m.rows != m.cols {
        return Err(Error::DimensionMismatch(format!(
            "determinant of a {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|r| m.row(r).to_vec()).collect();
    let mut prev = BigInt::one();
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(BigInt::zero());
        };
        if p != k {
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Determinant by cofactor expansion along the first row.
pub fn laplace_determinant(m: &IntegerMatrix) -> Result<BigInt> {
    if m.rows != m.cols {
        return Err(Error::DimensionMismatch(format!(
            "determinant of a {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let rows: Vec<usize> = (0..m.rows).collect();
    let cols: Vec<usize> = (0..m.cols).collect();
    Ok(laplace(m, &rows, &cols))
}

fn laplace(m: &IntegerMatrix, rows: &[usize], cols: &[usize]) -> BigInt {
    match rows.len() {
        1 => m.get(rows[0], cols[0]).clone(),
        2 => {
            m.get(rows[0], cols[0]) * m.get(rows[1], cols[1])
                - m.get(rows[0], cols[1]) * m.get(rows[1], cols[0])
        }
        _ => {
            let mut acc = BigInt::zero();
            for (k, &c) in cols.iter().enumerate() {
                let entry = m.get(rows[0], c);
                if entry.is_zero() {
                    continue;
                }
                let minor_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let minor = laplace(m, &rows[1..], &minor_cols);
                if k % 2 == 0 {
                    acc += entry * minor;
                } else {
                    acc -= entry * minor;
                }
            }
            acc
        }
    }
}

/// Divides `v` by the gcd of its entries and fixes the sign so the first
/// nonzero entry is positive.
pub fn primitive(v: &LatticeVector) -> Result<LatticeVector> {
    let g = v.content();
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    let first_negative =
        v.0.iter()
            .find(|x| !x.is_zero())
            .is_some_and(Signed::is_negative);
    let g = if first_negative { -g } else { g };
    Ok(LatticeVector(v.0.iter().map(|x| x / &g).collect()))
}

/// The primitive relation among the columns of an `n x (n+1)` matrix of rank
/// `n`, built from its signed maximal minors.
pub fn dependent_column_relation(m: &IntegerMatrix) -> Result<LatticeVector> {
    if m.cols != m.rows + 1 {
        return Err(Error::DimensionMismatch(format!(
            "expected {} columns for {} rows, got {}",
            m.rows + 1,
            m.rows,
            m.cols
        )));
    }
    let r = rank(m);
    if r < m.rows {
        return Err(Error::RankDeficient {
            rank: r,
            expected: m.rows,
        });
    }
    let mut d = Vec::with_capacity(m.cols);
    for j in 0..m.cols {
        let keep: Vec<usize> = (0..m.cols).filter(|&c| c != j).collect();
        let minor = m.select_columns(&keep)?;
        let det = if m.rows <= 4 {
            laplace_determinant(&minor)?
        } else {
            determinant(&minor)?
        };
        d.push(if j % 2 == 0 { det } else { -det });
    }
    primitive(&LatticeVector(d))
}

/// A basis of the saturated lattice `ker(M) ∩ Z^cols`, returned in row
/// Hermite normal form (so the basis is canonical and each vector primitive).
pub fn kernel_lattice_basis(m: &IntegerMatrix) -> Vec<LatticeVector> {
    let p = m.cols;
    let mut work = m.clone();
    let mut unimodular = IntegerMatrix::identity(p).expect("p >= 1");
    let mut k = 0;
    for r in 0..m.rows {
        if k == p {
            break;
        }
        loop {
            // column with the smallest nonzero entry in row r
            let pivot = (k..p)
                .filter(|&c| !work.get(r, c).is_zero())
                .min_by(|&a, &b| work.get(r, a).abs().cmp(&work.get(r, b).abs()));
            let Some(pivot) = pivot else { break };
            swap_columns(&mut work, k, pivot);
            swap_columns(&mut unimodular, k, pivot);
            let mut done = true;
            for c in k + 1..p {
                if work.get(r, c).is_zero() {
                    continue;
                }
                let q = work.get(r, c).div_floor(work.get(r, k));
                sub_column_multiple(&mut work, c, k, &q);
                sub_column_multiple(&mut unimodular, c, k, &q);
                if !work.get(r, c).is_zero() {
                    done = false;
                }
            }
            if done {
                k += 1;
                break;
            }
        }
    }
    let rows: Vec<Vec<BigInt>> = (k..p).map(|c| unimodular.column(c).0).collect();
    hermite_rows(rows).into_iter().map(LatticeVector).collect()
}

fn swap_columns(m: &mut IntegerMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for r in 0..m.rows {
        let i = r * m.cols;
        m.data.swap(i + a, i + b);
    }
}

/// column[target] -= q * column[source]
fn sub_column_multiple(m: &mut IntegerMatrix, target: usize, source: usize, q: &BigInt) {
    for r in 0..m.rows {
        let s = m.get(r, source) * q;
        *m.get_mut(r, target) -= s;
    }
}

/// Row Hermite normal form of a full-row-rank integer matrix: positive
/// pivots, entries above each pivot reduced into `[0, pivot)`.
fn hermite_rows(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let Some(width) = rows.first().map(Vec::len) else {
        return rows;
    };
    let mut k = 0;
    for c in 0..width {
        if k == rows.len() {
            break;
        }
        loop {
            let pivot = (k..rows.len())
                .filter(|&r| !rows[r][c].is_zero())
                .min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()));
            let Some(pivot) = pivot else { break };
            rows.swap(k, pivot);
            let mut done = true;
            for r in k + 1..rows.len() {
                if rows[r][c].is_zero() {
                    continue;
                }
                let q = rows[r][c].div_floor(&rows[k][c]);
                sub_row_multiple(&mut rows, r, k, &q);
                if !rows[r][c].is_zero() {
                    done = false;
                }
            }
            if done {
                if rows[k][c].is_negative() {
                    for x in rows[k].iter_mut() {
                        *x = -&*x;
                    }
                }
                for r in 0..k {
                    let q = rows[r][c].div_floor(&rows[k][c]);
                    if !q.is_zero() {
                        sub_row_multiple(&mut rows, r, k, &q);
                    }
                }
                k += 1;
                break;
            }
        }
    }
    rows.truncate(k);
    rows
}

fn sub_row_multiple(rows: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
    let (t, s) = if target < source {
        let (lo, hi) = rows.split_at_mut(source);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(target);
        (&mut hi[0], &lo[source])
    };
    for (x, y) in t.iter_mut().zip(s.iter()) {
        *x -= y * q;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntegerMatrix {
        IntegerMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn v(x: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(x)
    }

    #[test]
    fn rank_of_fixture_matrices() {
        let a = IntegerMatrix::from_columns(&[
            vec![1i64, 6, 7],
            vec![1, 4, 5],
            vec![1, 2, 3],
            vec![2, 2, 4],
        ])
        .unwrap();
        let b = IntegerMatrix::from_columns(&[
            vec![1i64, 1, 6],
            vec![1, 1, 4],
            vec![1, 1, 1],
            vec![3, 3, 6],
        ])
        .unwrap();
        assert_eq!(rank(&a), 2);
        assert_eq!(rank(&b), 2);
        assert_eq!(rank(&a.hconcat(&b).unwrap()), 3);
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        assert_eq!(rank(&IntegerMatrix::zeros(3, 5).unwrap()), 0);
        assert_eq!(rank(&IntegerMatrix::zeros(1, 1).unwrap()), 0);
    }

    #[test]
    fn empty_matrix_rejected() {
        assert!(matches!(
            IntegerMatrix::zeros(0, 3),
            Err(Error::EmptyMatrix { .. })
        ));
    }

    #[test]
    fn twisted_cubic_kernel() {
        let tc = m(&[&[3, 2, 1, 0], &[0, 1, 2, 3]]);
        let basis = kernel_lattice_basis(&tc);
        assert_eq!(basis.len(), 2);
        for b in &basis {
            assert!(tc.mul_vec(b.entries()).unwrap().is_zero());
            assert!(b.is_primitive());
        }
        assert_eq!(basis, vec![v(&[1, 0, -3, 2]), v(&[0, 1, -2, 1])]);
        // (1,-2,1,0) = b0 - 2 b1, and (0,1,-2,1) = b1
        let combo: Vec<BigInt> = basis[0]
            .entries()
            .iter()
            .zip(basis[1].entries())
            .map(|(a, b)| a - BigInt::from(2) * b)
            .collect();
        assert_eq!(LatticeVector(combo), v(&[1, -2, 1, 0]));
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(kernel_lattice_basis(&IntegerMatrix::identity(4).unwrap()).is_empty());
    }

    #[test]
    fn kernel_is_saturated_where_rref_is_not() {
        // RREF of (2 1 1) yields (-1,2,0),(-1,0,2), which miss (0,1,-1).
        let basis = kernel_lattice_basis(&m(&[&[2, 1, 1]]));
        assert_eq!(basis, vec![v(&[1, 0, -2]), v(&[0, 1, -1])]);
    }

    #[test]
    fn minors_relation_on_fixture() {
        let mat = m(&[&[4, 3, 3, 3], &[0, 1, 3, 2], &[0, 0, 0, 1]]);
        assert_eq!(dependent_column_relation(&mat).unwrap(), v(&[3, -6, 2, 0]));
    }

    #[test]
    fn third_column_is_sum() {
        let mat = m(&[&[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(dependent_column_relation(&mat).unwrap(), v(&[1, 1, -1]));
    }

    #[test]
    fn relation_needs_full_rank() {
        let mat = m(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(
            dependent_column_relation(&mat),
            Err(Error::RankDeficient {
                rank: 1,
                expected: 2
            })
        );
        assert!(matches!(
            dependent_column_relation(&m(&[&[1, 2], &[3, 4]])),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(primitive(&v(&[-6, -6, 0])).unwrap(), v(&[1, 1, 0]));
        assert_eq!(primitive(&v(&[5, 0, 0])).unwrap(), v(&[1, 0, 0]));
        assert_eq!(primitive(&v(&[0, -4, -6])).unwrap(), v(&[0, 2, 3]));
        assert_eq!(primitive(&v(&[0, 0])), Err(Error::ZeroVector));
    }

    #[test]
    fn laplace_and_bareiss_agree() {
        let mat = m(&[
            &[2, -1, 0, 3, 5],
            &[1, 4, -2, 0, 1],
            &[0, 3, 1, 1, -2],
            &[7, 0, 2, -1, 0],
            &[1, 1, 1, 1, 1],
        ]);
        assert_eq!(
            determinant(&mat).unwrap(),
            laplace_determinant(&mat).unwrap()
        );
        let singular = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert!(determinant(&singular).unwrap().is_zero());
    }

    #[test]
    fn large_minors_do_not_overflow() {
        let big = 3_000_000_000_i64;
        let mat = m(&[&[big, 1, 0], &[0, big, 1], &[1, 0, big]]);
        let expected = BigInt::from(big).pow(3) + 1;
        assert_eq!(determinant(&mat).unwrap(), expected);
        assert_eq!(laplace_determinant(&mat).unwrap(), expected);
    }
}
