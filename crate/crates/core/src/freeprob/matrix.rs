use num_traits::{One, Zero};

use super::SpaceA;
use crate::error::{Error, Result};
use crate::scalar::{int, Scalar};

/// Square matrix with rational entries, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    size: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(size: usize, entries: Vec<Scalar>) -> Result<Self> {
        if size == 0 || entries.len() != size * size {
            return Err(Error::Domain(format!("{} entries do not fill a {size}x{size} matrix", entries.len())));
        }
        Ok(Matrix { size, entries })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::Domain("rows of unequal length".into()));
        }
        Matrix::new(size, rows.iter().flatten().map(|&v| int(v)).collect())
    }

    pub fn identity(size: usize) -> Self {
        let entries =
            (0..size * size).map(|k| if k / size == k % size { Scalar::one() } else { Scalar::zero() }).collect();
        Matrix { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.size + col]
    }

    pub fn trace(&self) -> Scalar {
        (0..self.size).map(|i| self.get(i, i).clone()).fold(Scalar::zero(), |a, b| a + b)
    }
}

/// `M_k(ℚ)` with the normalized trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatrixSpaceA {
    pub size: usize,
}

impl MatrixSpaceA {
    pub fn new(size: usize) -> Self {
        MatrixSpaceA { size }
    }
}

impl SpaceA for MatrixSpaceA {
    type Elem = Matrix;

    fn unit(&self) -> Matrix {
        Matrix::identity(self.size)
    }

    fn mul(&self, a: &Matrix, b: &Matrix) -> Matrix {
        let k = self.size;
        let entries = (0..k * k)
            .map(|idx| {
                let (i, j) = (idx / k, idx % k);
                (0..k).fold(Scalar::zero(), |acc, l| acc + a.get(i, l) * b.get(l, j))
            })
            .collect();
        Matrix { size: k, entries }
    }

    fn add(&self, a: &Matrix, b: &Matrix) -> Matrix {
        let entries = a.entries.iter().zip(&b.entries).map(|(x, y)| x + y).collect();
        Matrix { size: self.size, entries }
    }

    fn scale(&self, c: &Scalar, a: &Matrix) -> Matrix {
        Matrix { size: self.size, entries: a.entries.iter().map(|x| x * c).collect() }
    }

    fn phi(&self, a: &Matrix) -> Result<Scalar> {
        if a.size != self.size {
            return Err(Error::Domain(format!("{}x{} matrix in a {}x{} space", a.size, a.size, self.size, self.size)));
        }
        Ok(a.trace() / int(self.size as i64))
    }
}
