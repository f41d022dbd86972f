//! Dense matrices over the rationals and their exact rank computations.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{normalize, primitive, Rational};

/// A dense row-major matrix of exact rationals. Zero-sized shapes are legal.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape { expected: rows * cols, got: entries.len() });
        }
        Ok(Self { rows, cols, entries })
    }

    /// Builds a matrix from row vectors; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::Shape { expected: cols, got: row.len() });
            }
            entries.extend(row);
        }
        Ok(Self { rows: n, cols, entries })
    }

    /// Builds a matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::Shape { expected: rows, got: col.len() });
            }
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Rational) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale_row(&mut self, i: usize, c: &Rational) {
        for x in &mut self.entries[i * self.cols..(i + 1) * self.cols] {
            *x *= c;
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::Shape { expected: self.rows, got: other.rows });
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    /// Rank over the rationals.
    ///
    /// Works on whichever side has more vectors: those are cleared of
    /// denominators, made primitive and deduplicated before fraction-free
    /// elimination, since row rank equals column rank.
    pub fn rank(&self) -> usize {
        let vectors = if self.cols > self.rows {
            (0..self.cols).map(|j| primitive(&self.column(j))).collect::<Vec<_>>()
        } else {
            (0..self.rows).map(|i| primitive(self.row(i))).collect()
        };
        echelon(distinct_nonzero(vectors)).len()
    }

    /// Codimension of the column space in the codomain of dimension `rows`.
    pub fn image_codim(&self) -> usize {
        self.rows - self.rank()
    }

    /// Basis of the right kernel `{v : self * v = 0}` in reduced form: one
    /// vector per non-pivot column, with a 1 in that column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let rows = distinct_nonzero((0..self.rows).map(|i| primitive(self.row(i))).collect());
        let reduced = reduced_echelon(echelon(rows), self.cols);
        let pivots: Vec<usize> = reduced.iter().map(|(p, _)| *p).collect();
        (0..self.cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![Rational::zero(); self.cols];
                v[free] = Rational::one();
                for (p, row) in &reduced {
                    v[*p] = -row[free].clone();
                }
                v
            })
            .collect()
    }

    /// Linear functionals on the codomain that vanish on the image; there are
    /// exactly `image_codim` of them.
    pub fn cokernel_basis(&self) -> Vec<Vec<Rational>> {
        self.transpose().nullspace()
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for x in self.row(i) {
                write!(f, "{x} ")?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

fn distinct_nonzero(vectors: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for v in vectors {
        if v.iter().all(Zero::is_zero) {
            continue;
        }
        if seen.insert(v.clone()) {
            out.push(v);
        }
    }
    out
}

/// Fraction-free forward elimination with content normalization. Pivots are
/// chosen as the first remaining vector with a nonzero entry, scanning
/// columns left to right. Returns the nonzero echelon rows.
fn echelon(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = &pivot_row[col];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let cur = row[col].clone();
            for j in col..width {
                row[j] = &row[j] * pivot - &pivot_row[j] * &cur;
            }
            normalize(&mut row[col..]);
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rows
}

/// Back-substitutes echelon rows into reduced row echelon form over the
/// rationals; returns `(pivot column, row)` pairs.
fn reduced_echelon(rows: Vec<Vec<BigInt>>, width: usize) -> Vec<(usize, Vec<Rational>)> {
    let mut out: Vec<(usize, Vec<Rational>)> = rows
        .into_iter()
        .map(|r| {
            let p = r.iter().position(|x| !x.is_zero()).expect("echelon rows are nonzero");
            let lead = Rational::from_integer(r[p].clone());
            let row = r.into_iter().map(|x| Rational::from_integer(x) / &lead).collect();
            (p, row)
        })
        .collect();
    for k in (0..out.len()).rev() {
        let (p, pivot_row) = out[k].clone();
        for (_, row) in out[..k].iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for j in p..width {
                let d = &pivot_row[j] * &c;
                row[j] -= d;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn m(rows: usize, cols: usize, xs: &[i64]) -> RationalMatrix {
        RationalMatrix::from_entries(rows, cols, xs.iter().map(|&x| int(x)).collect()).unwrap()
    }

    #[test]
    fn identity_and_zero() {
        assert_eq!(RationalMatrix::identity(3).rank(), 3);
        assert_eq!(RationalMatrix::identity(3).image_codim(), 0);
        assert!(RationalMatrix::identity(3).cokernel_basis().is_empty());
        assert_eq!(RationalMatrix::zeros(4, 5).rank(), 0);
        assert_eq!(RationalMatrix::zeros(5, 2).image_codim(), 5);
    }

    #[test]
    fn zero_column_cokernel_is_unit_vectors() {
        let basis = RationalMatrix::zeros(2, 1).cokernel_basis();
        assert_eq!(basis, vec![vec![int(1), int(0)], vec![int(0), int(1)]]);
    }

    #[test]
    fn vandermonde_at_0_1_2() {
        // rows (1, x, x^2) at x = 0, 1, 2; determinant 2
        let v = m(3, 3, &[1, 0, 0, 1, 1, 1, 1, 2, 4]);
        assert_eq!(v.rank(), 3);
    }

    #[test]
    fn empty_shapes() {
        assert_eq!(RationalMatrix::zeros(0, 0).rank(), 0);
        assert_eq!(RationalMatrix::zeros(0, 4).rank(), 0);
        assert_eq!(RationalMatrix::zeros(3, 0).image_codim(), 3);
        assert_eq!(RationalMatrix::zeros(3, 0).cokernel_basis().len(), 3);
    }

    #[test]
    fn rank_with_fractions() {
        let a = RationalMatrix::from_entries(
            2,
            3,
            vec![ratio(1, 2), ratio(1, 3), int(1), int(3), int(2), int(6)],
        )
        .unwrap();
        assert_eq!(a.rank(), 1);
        let k = a.nullspace();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.apply(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn cokernel_vanishes_on_image() {
        let a = m(3, 2, &[1, 2, 2, 4, 0, 1]);
        assert_eq!(a.image_codim(), 1);
        let ker = a.cokernel_basis();
        assert_eq!(ker.len(), 1);
        let at = a.transpose();
        assert!(at.apply(&ker[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn shape_errors() {
        assert!(RationalMatrix::from_entries(2, 2, vec![int(1)]).is_err());
        assert!(RationalMatrix::from_rows(2, vec![vec![int(1)]]).is_err());
    }
}
