//! `det(T_n)` and `det(T_n - λI)`.
//!
//! For `n ≥ k` the value is `(-1)^(n·s) · a_s^n · det(M)` with `M` the
//! upper-left `s × s` block of `C^n`. Before that the band is oriented so
//! that `s ≤ r` (transposing when needed), which keeps `M` as small as
//! possible and does not change the determinant. Below `n = k`, and for
//! triangular bands, the engine falls back to direct evaluation.

use num_rational::BigRational;

use crate::bandspec::BandSpec;
use crate::companion;
use crate::error::{Error, Result};
use crate::matpow::{self, OpCounter, Strategy};
use crate::matrix::Matrix;
use crate::scalar::{Field, IntegerRing, PrimeField, RationalField, ScalarMode, ScaledFloatField};

pub use crate::scalar::Value;

/// How a determinant was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Path {
    FastPolyMod,
    FastDense,
    DenseOracle,
    ReductionOracle,
    ClosedForm,
    Triangular,
}

impl Path {
    pub fn name(&self) -> &'static str {
        match self {
            Path::FastPolyMod => "FastPolyMod",
            Path::FastDense => "FastDense",
            Path::DenseOracle => "DenseOracle",
            Path::ReductionOracle => "ReductionOracle",
            Path::ClosedForm => "ClosedForm",
            Path::Triangular => "Triangular",
        }
    }

    /// True for the two companion-power paths, the only ones that apply
    /// the `(-1)^(n·s) a_s^n` factor.
    pub fn is_fast(&self) -> bool {
        matches!(self, Path::FastPolyMod | Path::FastDense)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DetResult {
    pub value: Value,
    pub n: u64,
    pub path: Path,
    pub mode: ScalarMode,
}

/// `det(T_n)` in the requested mode.
pub fn det(spec: &BandSpec, n: u64, strategy: Strategy, mode: ScalarMode) -> Result<DetResult> {
    let spec = spec.clone().validate()?;
    dispatch(&spec, n, strategy, mode)
}

/// `det(T_n - λI)`; `λ = 0` gives exactly [`det`].
pub fn det_shifted(
    spec: &BandSpec,
    n: u64,
    lambda: &BigRational,
    strategy: Strategy,
    mode: ScalarMode,
) -> Result<DetResult> {
    let spec = spec.clone().validate()?.shift_lambda(lambda);
    dispatch(&spec, n, strategy, mode)
}

/// [`det`] inside a caller-supplied field, returning the raw element.
pub fn det_in<F: Field + ?Sized>(
    f: &F,
    spec: &BandSpec,
    n: u64,
    strategy: Strategy,
) -> Result<(F::Elem, Path)> {
    det_in_counted(f, spec, n, strategy, &mut OpCounter::default())
}

/// [`det_in`] that also reports the powering cost.
pub fn det_in_counted<F: Field + ?Sized>(
    f: &F,
    spec: &BandSpec,
    n: u64,
    strategy: Strategy,
    counter: &mut OpCounter,
) -> Result<(F::Elem, Path)> {
    let spec = spec.clone().validate()?;
    prepared(f, &spec, n, strategy, counter)
}

pub fn det_shifted_in<F: Field + ?Sized>(
    f: &F,
    spec: &BandSpec,
    n: u64,
    lambda: &BigRational,
    strategy: Strategy,
) -> Result<(F::Elem, Path)> {
    let spec = spec.clone().validate()?.shift_lambda(lambda);
    prepared(f, &spec, n, strategy, &mut OpCounter::default())
}

/// Determinant of the small block: Bareiss in exact fields, partial
/// pivoting in the float field. `O(s^3)`.
pub fn small_det<F: Field + ?Sized>(f: &F, block: Matrix<F::Elem>) -> F::Elem {
    f.det(block)
}

fn dispatch(spec: &BandSpec, n: u64, strategy: Strategy, mode: ScalarMode) -> Result<DetResult> {
    let (value, path) = match mode.validate()? {
        ScalarMode::ExactRational => as_value(&RationalField, spec, n, strategy)?,
        ScalarMode::ScaledFloat => as_value(&ScaledFloatField, spec, n, strategy)?,
        ScalarMode::PrimeField(p) => as_value(&PrimeField::new(p)?, spec, n, strategy)?,
    };
    Ok(DetResult { value, n, path, mode })
}

fn as_value<F: Field>(f: &F, spec: &BandSpec, n: u64, strategy: Strategy) -> Result<(Value, Path)> {
    let (v, path) = prepared(f, spec, n, strategy, &mut OpCounter::default())?;
    Ok((f.to_value(&v), path))
}

// `spec` has passed validation before any shift; only the triangular path
// can see a zero outermost coefficient.
fn prepared<F: Field + ?Sized>(
    f: &F,
    spec: &BandSpec,
    n: u64,
    strategy: Strategy,
    counter: &mut OpCounter,
) -> Result<(F::Elem, Path)> {
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    let oriented;
    let spec = if spec.s() > spec.r() {
        oriented = spec.transpose();
        &oriented
    } else {
        spec
    };
    let (s, k) = (spec.s(), spec.k());

    if s == 0 {
        let diag = f.from_rational(spec.a(0))?;
        return Ok((f.pow(&diag, n), Path::Triangular));
    }
    if n < k as u64 {
        let dense = spec.dense_in(f, n as usize)?;
        return Ok((f.det(dense), Path::DenseOracle));
    }

    let strategy = strategy.resolve(n, k);
    let path = match strategy {
        Strategy::PolyMod => Path::FastPolyMod,
        _ => Path::FastDense,
    };
    if let Some(value) = f.companion_det(spec, n, strategy, counter) {
        return Ok((value?, path));
    }
    let c = companion::build(f, spec)?;
    let block = matpow::upper_left_block_counted(f, &c, n, s, strategy, counter);
    let lead = f.from_rational(spec.leading())?;
    let value = f.mul(&f.pow(&lead, n), &small_det(f, block));
    let negate = n % 2 == 1 && s % 2 == 1;
    Ok((if negate { f.neg(&value) } else { value }, path))
}

/// The companion-power determinant for an oriented rational band, computed
/// over the integers with [`companion::build_integral`]:
///
/// ```text
/// det(T_n) = (-1)^(n·s) det(K^n block) / (A^(n(s-1)) · L^n)
/// ```
pub fn integral_det(spec: &BandSpec, n: u64, strategy: Strategy, counter: &mut OpCounter) -> Result<BigRational> {
    let s = spec.s();
    if n < spec.k() as u64 {
        return Err(Error::BelowBandwidth { n, k: spec.k() });
    }
    let (k_mat, a, l) = companion::build_integral(spec)?;
    let z = IntegerRing;
    let block = matpow::upper_left_block_counted(&z, &k_mat, n, s, strategy, counter);
    let num = z.det(block);
    let den = z.pow(&a, n * (s as u64 - 1)) * z.pow(&l, n);
    let value = BigRational::new(num, den);
    Ok(if n % 2 == 1 && s % 2 == 1 { -value } else { value })
}
