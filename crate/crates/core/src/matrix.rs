//! Small dense row-major matrices over a [`Field`].

use alloc::vec::Vec;
use core::ops::{Index, IndexMut, Range};

use crate::scalar::{Field, ScaledValue};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Matrix { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n * m);
        for row in rows {
            assert_eq!(row.len(), m, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: n, cols: m, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }
}

impl<T: Clone> Matrix<T> {
    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn submatrix(&self, rows: Range<usize>, cols: Range<usize>) -> Self {
        assert!(rows.end <= self.rows && cols.end <= self.cols, "submatrix out of range");
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self[(rows.start + i, cols.start + j)].clone())
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

pub fn zeros<F: Field + ?Sized>(f: &F, rows: usize, cols: usize) -> Matrix<F::Elem> {
    Matrix::from_fn(rows, cols, |_, _| f.zero())
}

pub fn identity<F: Field + ?Sized>(f: &F, n: usize) -> Matrix<F::Elem> {
    Matrix::from_fn(n, n, |i, j| if i == j { f.one() } else { f.zero() })
}

/// Schoolbook product. Panics on a shape mismatch.
pub fn mul<F: Field + ?Sized>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.cols, b.rows, "inner dimensions");
    Matrix::from_fn(a.rows, b.cols, |i, j| {
        let mut acc = f.zero();
        for t in 0..a.cols {
            acc = f.add(&acc, &f.mul(&a[(i, t)], &b[(t, j)]));
        }
        acc
    })
}

pub fn sub<F: Field + ?Sized>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert!(a.rows == b.rows && a.cols == b.cols, "shape");
    Matrix::from_fn(a.rows, a.cols, |i, j| f.sub(&a[(i, j)], &b[(i, j)]))
}

/// Fraction-free (Bareiss) elimination. Every division is exact, so over a
/// field this is just a well-behaved Gaussian elimination; it is `O(n^3)`.
pub fn bareiss_det<F: Field + ?Sized>(f: &F, mut m: Matrix<F::Elem>) -> F::Elem {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows;
    if n == 0 {
        return f.one();
    }
    let mut negate = false;
    let mut prev = f.one();
    for k in 0..n - 1 {
        if f.is_zero(&m[(k, k)]) {
            match (k + 1..n).find(|&i| !f.is_zero(&m[(i, k)])) {
                Some(i) => {
                    m.swap_rows(k, i);
                    negate = !negate;
                }
                None => return f.zero(),
            }
        }
        let prev_inv = f.inv(&prev).expect("Bareiss pivots are nonzero");
        for i in k + 1..n {
            for j in k + 1..n {
                let t = f.sub(&f.mul(&m[(i, j)], &m[(k, k)]), &f.mul(&m[(i, k)], &m[(k, j)]));
                m[(i, j)] = f.mul(&t, &prev_inv);
            }
        }
        prev = m[(k, k)].clone();
    }
    let d = m[(n - 1, n - 1)].clone();
    if negate {
        f.neg(&d)
    } else {
        d
    }
}

/// Gaussian elimination with partial pivoting on scaled floats; the product
/// of pivots never overflows because each factor carries its own exponent.
pub fn pivoted_det(mut m: Matrix<ScaledValue>) -> ScaledValue {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows;
    let mut acc = ScaledValue::ONE;
    for k in 0..n {
        let pivot_row = (k..n)
            .max_by(|&a, &b| m[(a, k)].cmp_abs(&m[(b, k)]).then(b.cmp(&a)))
            .expect("nonempty range");
        if m[(pivot_row, k)].is_zero() {
            return ScaledValue::ZERO;
        }
        if pivot_row != k {
            m.swap_rows(k, pivot_row);
            acc = -acc;
        }
        let pivot = m[(k, k)];
        let pivot_inv = pivot.recip().expect("nonzero pivot");
        for i in k + 1..n {
            let factor = m[(i, k)] * pivot_inv;
            if factor.is_zero() {
                continue;
            }
            for j in k + 1..n {
                m[(i, j)] = m[(i, j)] - factor * m[(k, j)];
            }
        }
        acc = acc * pivot;
    }
    acc
}
