//! The `k × k` companion matrix of a band and its characteristic polynomial.
//!
//! ```text
//!       ( -a_{s-1}/a_s   1              )
//!       (   ⋮               ⋱           )
//!       ( -a_0/a_s            ⋱         )
//!   C = ( -a_{s+1}/a_s           ⋱      )
//!       (   ⋮                       1   )
//!       ( -a_{s+r}/a_s   0   …      0   )
//! ```
//!
//! Only the first column is stored; the rest is the shift structure.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bandspec::BandSpec;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Field, ScalarMode};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Companion<T> {
    first_col: Vec<T>,
}

/// Monic `x^k + c_{k-1} x^{k-1} + … + c_0`, stored as `c_0..c_{k-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Clone> Companion<T> {
    /// Panics on an empty column.
    pub fn from_first_col(first_col: Vec<T>) -> Self {
        assert!(!first_col.is_empty(), "companion matrix needs k >= 1");
        Companion { first_col }
    }

    pub fn k(&self) -> usize {
        self.first_col.len()
    }

    pub fn first_col(&self) -> &[T] {
        &self.first_col
    }

    /// Expands the structured matrix.
    pub fn to_dense<F: Field<Elem = T> + ?Sized>(&self, f: &F) -> Matrix<T> {
        let k = self.k();
        Matrix::from_fn(k, k, |i, j| match j {
            0 => self.first_col[i].clone(),
            _ if j == i + 1 => f.one(),
            _ => f.zero(),
        })
    }

    /// `C·x` in `O(k)`: `(C x)_i = first_col[i]·x_0 + x_{i+1}`.
    pub fn apply<F: Field<Elem = T> + ?Sized>(&self, f: &F, x: &[T]) -> Vec<T> {
        let k = self.k();
        assert_eq!(x.len(), k);
        (0..k)
            .map(|i| {
                let lead = f.mul(&self.first_col[i], &x[0]);
                if i + 1 < k {
                    f.add(&lead, &x[i + 1])
                } else {
                    lead
                }
            })
            .collect()
    }

    pub fn charpoly<F: Field<Elem = T> + ?Sized>(&self, f: &F) -> CharPoly<T> {
        let k = self.k();
        CharPoly { coeffs: (0..k).map(|j| f.neg(&self.first_col[k - 1 - j])).collect() }
    }
}

impl<T: Clone> CharPoly<T> {
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "degree must be at least 1");
        CharPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// `c_0..c_{k-1}`; the leading `1` is implicit.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Horner evaluation.
    pub fn eval<F: Field<Elem = T> + ?Sized>(&self, f: &F, x: &T) -> T {
        self.coeffs.iter().rev().fold(f.one(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    /// The companion matrix with this characteristic polynomial.
    pub fn companion<F: Field<Elem = T> + ?Sized>(&self, f: &F) -> Companion<T> {
        let k = self.degree();
        Companion { first_col: (0..k).map(|i| f.neg(&self.coeffs[k - 1 - i])).collect() }
    }
}

/// Builds `C` for `spec` inside `f`. Needs `s ≥ 1`; the division by `a_s`
/// happens here, once.
pub fn build<F: Field + ?Sized>(f: &F, spec: &BandSpec) -> Result<Companion<F::Elem>> {
    let s = spec.s();
    if s == 0 {
        return Err(Error::NoSuperdiagonal);
    }
    let a = spec.embed(f)?;
    let lead_inv = f.inv(&a[s]).ok_or(match f.mode() {
        ScalarMode::PrimeField(p) => Error::ModulusDividesLeadingCoefficient { p },
        _ => Error::ZeroLeadingCoefficient,
    })?;
    let scale = f.neg(&lead_inv);
    let order = (0..s).rev().chain(s + 1..=spec.k());
    Ok(Companion { first_col: order.map(|i| f.mul(&a[i], &scale)).collect() })
}

/// Integer companion matrix `K` for `spec`, with the scale factors `(A, L)`.
///
/// `L` is the lcm of the coefficient denominators and `A = L·a_s`. With
/// `C' = A·C` (an integer matrix whose superdiagonal is `A`) and
/// `D = diag(1, A^-1, …, A^-(k-1))`, `K = D^-1 C' D` is a standard companion
/// matrix with integer first column `-A^i · L·p_i`, where `p` is the pivot
/// order `a_{s-1}, …, a_0, a_{s+1}, …, a_{s+r}`. Since `D` is diagonal, the
/// upper-left `s × s` blocks satisfy `det(C^n block) = det(K^n block) / A^(ns)`.
pub fn build_integral(spec: &BandSpec) -> Result<(Companion<BigInt>, BigInt, BigInt)> {
    let s = spec.s();
    if s == 0 {
        return Err(Error::NoSuperdiagonal);
    }
    let l = spec.coeffs().iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let scaled: Vec<BigInt> = spec.coeffs().iter().map(|q| (q * &l).to_integer()).collect();
    let a = scaled[s].clone();
    if a.is_zero() {
        return Err(Error::ZeroLeadingCoefficient);
    }
    let order = (0..s).rev().chain(s + 1..=spec.k());
    let mut power = BigInt::one();
    let mut first_col = Vec::with_capacity(spec.k());
    for i in order {
        first_col.push(-&scaled[i] * &power);
        power *= &a;
    }
    Ok((Companion { first_col }, a, l))
}

/// `ch_C(x) = det(xI - C)` for `spec`.
pub fn charpoly<F: Field + ?Sized>(f: &F, spec: &BandSpec) -> Result<CharPoly<F::Elem>> {
    Ok(build(f, spec)?.charpoly(f))
}

/// The band of `T_n - λI`.
pub fn shift_lambda(spec: &BandSpec, lambda: &BigRational) -> BandSpec {
    spec.shift_lambda(lambda)
}
