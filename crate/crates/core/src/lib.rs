//! Determinants of banded Toeplitz matrices in time logarithmic in `n`.
//!
//! An `n × n` Toeplitz matrix with `s` superdiagonals and `r` subdiagonals
//! (bandwidth `k = r + s`) has a determinant that can be read off the
//! upper-left `s × s` block of the `n`-th power of a `k × k` companion
//! matrix:
//!
//! ```text
//! det(T_n) = (-1)^(n·s) · a_s^n · det(M),   M = upper-left s×s of C^n,   n ≥ k
//! ```
//!
//! The crate is `no_std` (it needs `alloc`). Arithmetic is abstracted by the
//! [`Field`] trait with three implementations: exact rationals, a prime
//! field, and an overflow-safe scaled float.
//!
//! ```
//! use banddet::{det, BandSpec, ScalarMode, Strategy};
//!
//! let spec = BandSpec::from_integers(1, 1, &[2, 1, 1]).unwrap();
//! let res = det(&spec, 9, Strategy::Auto, ScalarMode::ExactRational).unwrap();
//! assert_eq!(res.value.to_string(), "10");
//! ```
//!
//! Module map:
//!
//! - [`scalar`]: fields, [`ScaledValue`], rational parsing
//! - [`bandspec`]: the band description and dense materialization
//! - [`companion`]: companion matrix and its characteristic polynomial
//! - [`matpow`]: dense binary powering and `x^n mod ch_C(x)`
//! - [`detengine`]: the determinant API
//! - [`closedform`]: Lucas-sequence and pentadiagonal root formulas
//! - [`oracle`]: dense Bareiss/LU determinants and the column-reduction chain

#![no_std]

extern crate alloc;

pub mod bandspec;
pub mod closedform;
pub mod companion;
pub mod detengine;
mod error;
pub mod matpow;
pub mod matrix;
pub mod oracle;
pub mod scalar;

pub use bandspec::BandSpec;
pub use companion::{CharPoly, Companion};
pub use detengine::{det, det_in, det_shifted, det_shifted_in, small_det, DetResult, Path, Value};
pub use error::{Error, Result};
pub use matpow::{OpCounter, PolyResidue, Strategy};
pub use matrix::Matrix;
pub use scalar::{Field, IntegerRing, PrimeField, RationalField, ScalarMode, ScaledFloatField, ScaledValue};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
