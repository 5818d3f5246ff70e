//! The banded Toeplitz family `T_n`.
//!
//! Coefficients are stored as `a_0, a_1, …, a_s, a_{s+1}, …, a_{s+r}`:
//!
//! ```text
//!        a_0      a_1    …   a_s                0
//!        a_{s+1}  a_0    a_1  …   a_s
//!        ⋮                 ⋱              ⋱
//! T_n =  a_{s+r}   …   a_{s+1}  a_0  a_1  …  a_s
//!                  ⋱                 ⋱        ⋮
//!        0              a_{s+r}  …  a_{s+1}  a_0
//! ```
//!
//! so `a_1..a_s` run outward above the diagonal and `a_{s+1}..a_{s+r}` run
//! outward below it. Entry `(i, j)` is `a_{j-i}` when `0 ≤ j-i ≤ s` and
//! `a_{s+(i-j)}` when `1 ≤ i-j ≤ r`.

use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BandSpec {
    s: usize,
    r: usize,
    coeffs: Vec<BigRational>,
}

impl BandSpec {
    /// Builds and validates a spec.
    pub fn new(s: usize, r: usize, coeffs: Vec<BigRational>) -> Result<Self> {
        BandSpec { s, r, coeffs }.validate()
    }

    pub fn from_integers(s: usize, r: usize, coeffs: &[i64]) -> Result<Self> {
        BandSpec::new(s, r, coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// Returns the spec unchanged iff the length matches `k + 1` and the
    /// outermost coefficients `a_s`, `a_{s+r}` are nonzero.
    pub fn validate(self) -> Result<Self> {
        let expected = self.s + self.r + 1;
        if self.coeffs.len() != expected {
            return Err(Error::LengthMismatch { expected, found: self.coeffs.len() });
        }
        if self.coeffs[self.s].is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
        if self.coeffs[self.s + self.r].is_zero() {
            return Err(Error::ZeroTrailingCoefficient);
        }
        Ok(self)
    }

    /// Number of superdiagonals.
    pub fn s(&self) -> usize {
        self.s
    }

    /// Number of subdiagonals.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Bandwidth `r + s`.
    pub fn k(&self) -> usize {
        self.s + self.r
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// `a_i`.
    pub fn a(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    /// `a_s`, the outermost superdiagonal.
    pub fn leading(&self) -> &BigRational {
        &self.coeffs[self.s]
    }

    /// The coefficient on diagonal offset `j - i`, if inside the band.
    pub fn at_offset(&self, offset: isize) -> Option<&BigRational> {
        if offset >= 0 {
            let d = offset as usize;
            (d <= self.s).then(|| &self.coeffs[d])
        } else {
            let d = offset.unsigned_abs();
            (d <= self.r).then(|| &self.coeffs[self.s + d])
        }
    }

    /// The spec of `T_nᵗ`: super- and subdiagonal blocks swap roles.
    pub fn transpose(&self) -> BandSpec {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(self.coeffs[0].clone());
        coeffs.extend_from_slice(&self.coeffs[self.s + 1..]);
        coeffs.extend_from_slice(&self.coeffs[1..=self.s]);
        BandSpec { s: self.r, r: self.s, coeffs }
    }

    /// Same band with `a_0` replaced by `a_0 - λ`, i.e. the family `T_n - λI`.
    ///
    /// The result is not re-validated: when `s = 0` or `r = 0` the shifted
    /// diagonal is itself an outermost coefficient and may become zero.
    pub fn shift_lambda(&self, lambda: &BigRational) -> BandSpec {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] = &coeffs[0] - lambda;
        BandSpec { s: self.s, r: self.r, coeffs }
    }

    /// Dense `n × n` instance with exact entries.
    pub fn dense(&self, n: usize) -> Matrix<BigRational> {
        Matrix::from_fn(n, n, |i, j| {
            self.at_offset(j as isize - i as isize).cloned().unwrap_or_else(BigRational::zero)
        })
    }

    /// Dense `n × n` instance embedded in `f`.
    pub fn dense_in<F: Field + ?Sized>(&self, f: &F, n: usize) -> Result<Matrix<F::Elem>> {
        let embedded = self.embed(f)?;
        let zero = f.zero();
        Ok(Matrix::from_fn(n, n, |i, j| {
            let d = j as isize - i as isize;
            match self.at_offset(d) {
                Some(_) if d >= 0 => embedded[d as usize].clone(),
                Some(_) => embedded[self.s + d.unsigned_abs()].clone(),
                None => zero.clone(),
            }
        }))
    }

    /// Coefficients `a_0..a_k` converted into `f`.
    pub fn embed<F: Field + ?Sized>(&self, f: &F) -> Result<Vec<F::Elem>> {
        self.coeffs.iter().map(|c| f.from_rational(c)).collect()
    }
}
