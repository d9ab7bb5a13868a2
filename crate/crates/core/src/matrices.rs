//! Dense matrices over a generic scalar, Kronecker products and sums, and the
//! game matrix A(m,n) = I_m ⊗ T_n + T_m ⊗ I_n − I_{mn}.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::board::GridDims;
use crate::error::{mismatch, Error, Result};
use crate::gf2::Gf2Matrix;

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DenseMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> DenseMatrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(mismatch(format!("row of length {cols}"), format!("row {i} of length {}", r.len())));
            }
            data.extend(r);
        }
        Ok(Self {
            rows: nrows,
            cols,
            data,
        })
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &T {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        &self.data[r * self.cols + c]
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> DenseMatrix<U> {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self
    where
        T: Clone,
    {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(mismatch(
                format!("{}x{}", self.rows, self.cols),
                format!("{}x{}", other.rows, other.cols),
            ));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }
}

impl<T: Clone + Zero + One> DenseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }
}

impl<T: Clone + Add<Output = T>> DenseMatrix<T> {
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() + b.clone())
    }
}

impl<T: Clone + Sub<Output = T>> DenseMatrix<T> {
    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() - b.clone())
    }
}

impl<T: Zero + PartialEq> DenseMatrix<T> {
    /// Entrywise reduction to GF(2) for 0/1 matrices: nonzero entries become 1.
    ///
    /// Only meaningful when the entries are already 0 or 1 (as they are for A(m,n));
    /// use [`DenseMatrix::map`] with an explicit parity for anything else.
    pub fn nonzero_pattern(&self) -> Gf2Matrix {
        let mut out = Gf2Matrix::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if !self.get(r, c).is_zero() {
                    out.set(r, c, true);
                }
            }
        }
        out
    }
}

impl<T: fmt::Debug> fmt::Debug for DenseMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.data.chunks(self.cols.max(1))).finish()
    }
}

/// One row per line, entries separated by single spaces.
impl<T: fmt::Display> fmt::Display for DenseMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// T_n: ones on the main, sub- and super-diagonals.
pub fn tridiagonal_ones<T: Clone + Zero + One>(n: usize) -> DenseMatrix<T> {
    DenseMatrix::from_fn(n, n, |r, c| if r.abs_diff(c) <= 1 { T::one() } else { T::zero() })
}

/// `a ⊗ b`: block (i,j) of the result is `a[i][j] · b`.
pub fn kronecker_product<T>(a: &DenseMatrix<T>, b: &DenseMatrix<T>) -> DenseMatrix<T>
where
    T: Clone + Mul<Output = T>,
{
    let (p, q) = (b.rows, b.cols);
    DenseMatrix::from_fn(a.rows * p, a.cols * q, |r, c| {
        a.get(r / p, c / q).clone() * b.get(r % p, c % q).clone()
    })
}

/// `a ⊕ b = I_m ⊗ a + b ⊗ I_n` for square `a` (n×n) and `b` (m×m).
pub fn kronecker_sum<T>(a: &DenseMatrix<T>, b: &DenseMatrix<T>) -> Result<DenseMatrix<T>>
where
    T: Clone + Zero + One + Mul<Output = T>,
{
    for (name, x) in [("left", a), ("right", b)] {
        if !x.is_square() {
            return Err(Error::Domain(format!(
                "kronecker sum needs square operands, {name} is {}x{}",
                x.rows, x.cols
            )));
        }
    }
    let left = kronecker_product(&DenseMatrix::identity(b.rows), a);
    let right = kronecker_product(b, &DenseMatrix::identity(a.rows));
    left.try_add(&right)
}

/// A(m,n) over any ring with characteristic other than 2, built from the Kronecker sum
/// T_n ⊕ T_m − I.
pub fn build_a<T>(dims: GridDims) -> DenseMatrix<T>
where
    T: Clone + Zero + One + Mul<Output = T> + Sub<Output = T>,
{
    let (m, n) = (dims.rows(), dims.cols());
    let sum = kronecker_sum(&tridiagonal_ones::<T>(n), &tridiagonal_ones::<T>(m))
        .expect("tridiagonal matrices are square");
    sum.try_sub(&DenseMatrix::identity(m * n))
        .expect("kronecker sum has order m*n")
}

/// A(m,n) with unbounded integer entries.
pub fn build_a_int(dims: GridDims) -> crate::IntMatrix {
    build_a(dims)
}

/// A(m,n) reduced mod 2.
pub fn build_a_gf2(dims: GridDims) -> Gf2Matrix {
    // small integers suffice: every entry of the Kronecker construction is 0, 1 or 2
    build_a::<i8>(dims).map(|&v| v.rem_euclid(2)).nonzero_pattern()
}
