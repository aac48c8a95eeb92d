//! Dense matrices of arbitrary-precision integers.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exec::Execution;

/// Row-major `rows x cols` integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.data[i * size + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::ShapeMismatch {
                    op: "from_rows",
                    left: (rows.len(), cols),
                    right: (1, r.len()),
                });
            }
            data.extend(r.iter().cloned().map(Into::into));
        }
        Ok(Self { rows: rows.len(), cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: impl Into<BigInt>) {
        self.data[i * self.cols + j] = v.into();
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn same_shape(&self, other: &Self, op: &'static str) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch { op, left: self.shape(), right: other.shape() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "add")?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "sub")?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    /// Exact product, using the default execution mode.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.mul_with(other, Execution::default())
    }

    /// Exact product; output rows are independent and may be computed in parallel.
    pub fn mul_with(&self, other: &Self, exec: Execution) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch { op: "mat_mul", left: self.shape(), right: other.shape() });
        }
        let cols = other.cols;
        let rows = exec.map_range(self.rows, |i| {
            let mut acc = vec![BigInt::zero(); cols];
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (slot, b) in acc.iter_mut().zip(other.row(k)) {
                    if !b.is_zero() {
                        *slot += a * b;
                    }
                }
            }
            acc
        });
        Ok(Self { rows: self.rows, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch { op: "mul_vec", left: self.shape(), right: (v.len(), 1) });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).filter(|(a, _)| !a.is_zero()).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// `A^k` for square `A`.
    pub fn pow(&self, k: usize) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Exact determinant by single-step fraction-free (Bareiss) elimination.
    ///
    /// The pivot is the first nonzero entry at or below the diagonal in the
    /// current column. Every division `(a_ij a_kk - a_ik a_kj) / a_{k-1,k-1}`
    /// is exact.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            let Some(p) = (k..n).find(|&i| !a.get(i, k).is_zero()) else {
                return Ok(BigInt::zero());
            };
            if p != k {
                a.swap_rows(p, k);
                negate = !negate;
            }
            let pivot = a.get(k, k).clone();
            for i in k + 1..n {
                let lead = a.get(i, k).clone();
                for j in k + 1..n {
                    let v = (a.get(i, j) * &pivot - &lead * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
                a.set(i, k, 0);
            }
            prev = pivot;
        }
        let det = a.get(n - 1, n - 1).clone();
        Ok(if negate { -det } else { det })
    }

    /// Rows as lists of decimal strings.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(ToString::to_string).collect()).collect()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{:?}", self.to_string_rows())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn products() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(a.mul(&IntMatrix::identity(3)).unwrap(), a);
        assert_eq!(m(&[&[2, 0], &[0, 1]]).mul(&m(&[&[1], &[1]])).unwrap(), m(&[&[2], &[1]]));
        assert!(matches!(a.mul(&a), Err(Error::ShapeMismatch { .. })));
        assert_eq!(
            a.mul_with(&a.transpose(), Execution::Sequential).unwrap(),
            a.mul_with(&a.transpose(), Execution::Parallel).unwrap()
        );
    }

    #[test]
    fn determinants() {
        assert_eq!(IntMatrix::identity(5).determinant().unwrap(), BigInt::one());
        assert_eq!(m(&[&[2, 0], &[0, 1]]).determinant().unwrap(), BigInt::from(2));
        assert_eq!(IntMatrix::zeros(0, 0).determinant().unwrap(), BigInt::one());
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant().unwrap(), BigInt::from(-1));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).determinant().unwrap(), BigInt::zero());
        // needs a pivot swap mid-elimination
        assert_eq!(m(&[&[1, 1, 1], &[1, 1, 2], &[1, 2, 1]]).determinant().unwrap(), BigInt::from(-1));
        assert!(matches!(m(&[&[1, 2]]).determinant(), Err(Error::NotSquare { rows: 1, cols: 2 })));
    }

    #[test]
    fn misc() {
        let a = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.pow(0).unwrap(), IntMatrix::identity(2));
        assert_eq!(a.pow(2).unwrap(), m(&[&[7, 10], &[15, 22]]));
        assert_eq!(a.commutator(&a).unwrap(), IntMatrix::zeros(2, 2));
        assert_eq!(a.mul_vec(&[1.into(), 1.into()]).unwrap(), vec![BigInt::from(3), BigInt::from(7)]);
        assert_eq!(a.to_string_rows(), vec![vec!["1", "2"], vec!["3", "4"]]);
        assert!(IntMatrix::from_rows(&[vec![1], vec![1, 2]]).is_err());
    }
}
