//! Powers of the companion matrix.
//!
//! Two independent routes to the upper-left block of `C^n`:
//!
//! - [`dense_pow`]: binary powering of the expanded `k × k` matrix,
//!   `O(k^3 log n)`.
//! - [`polymod_pow`] + [`block_from_residue`]: `x^n mod ch_C(x)` by
//!   square-and-multiply on polynomials, `O(k^2 log n)`.
//!
//! The second route rests on the identity
//!
//! ```text
//! (C^n)[l][m] = coefficient of x^(k-l) in (x^(n+k-m) mod ch_C)      (1-based l, m)
//! ```
//!
//! which holds because column `m` of `C^n` is made of the recurrence
//! sequences `u_{l, n+k-m}` whose initial values form the identity matrix.

use alloc::vec;
use alloc::vec::Vec;

use crate::companion::{CharPoly, Companion};
use crate::matrix::{self, Matrix};
use crate::scalar::Field;

/// How to obtain the block of `C^n`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// [`Strategy::PolyMod`] when `n ≥ 4k`, dense powering below that.
    #[default]
    Auto,
    Dense,
    PolyMod,
}

/// Threshold multiplier for [`Strategy::Auto`].
pub const AUTO_POLYMOD_FACTOR: u64 = 4;

impl Strategy {
    /// Replaces `Auto` with a concrete choice for this `(n, k)`.
    pub fn resolve(self, n: u64, k: usize) -> Strategy {
        match self {
            Strategy::Auto if n >= AUTO_POLYMOD_FACTOR * k as u64 => Strategy::PolyMod,
            Strategy::Auto => Strategy::Dense,
            other => other,
        }
    }
}

/// Per-call operation counts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCounter {
    /// Full polynomial products (squarings) modulo `ch_C`.
    pub polymul: u64,
    /// `k × k` matrix products.
    pub matmul: u64,
}

/// `x^exponent mod ch_C(x)`, coefficients `c_0..c_{k-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyResidue<T> {
    coeffs: Vec<T>,
    exponent: u64,
}

impl<T> PolyResidue<T> {
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }
}

/// `base^n` for a square matrix, most significant bit first; at most
/// `2⌊log₂ n⌋` products.
pub fn mat_pow<F: Field + ?Sized>(
    f: &F,
    base: &Matrix<F::Elem>,
    n: u64,
    counter: &mut OpCounter,
) -> Matrix<F::Elem> {
    assert!(base.is_square());
    if n == 0 {
        return matrix::identity(f, base.rows());
    }
    let mut acc = base.clone();
    for bit in (0..63 - n.leading_zeros()).rev() {
        acc = matrix::mul(f, &acc, &acc);
        counter.matmul += 1;
        if (n >> bit) & 1 == 1 {
            acc = matrix::mul(f, &acc, base);
            counter.matmul += 1;
        }
    }
    acc
}

/// `C^n` by dense binary powering.
pub fn dense_pow<F: Field + ?Sized>(f: &F, c: &Companion<F::Elem>, n: u64) -> Matrix<F::Elem> {
    dense_pow_counted(f, c, n, &mut OpCounter::default())
}

pub fn dense_pow_counted<F: Field + ?Sized>(
    f: &F,
    c: &Companion<F::Elem>,
    n: u64,
    counter: &mut OpCounter,
) -> Matrix<F::Elem> {
    mat_pow(f, &c.to_dense(f), n, counter)
}

/// Reduces a polynomial of any degree modulo the monic `chi`.
fn reduce<F: Field + ?Sized>(f: &F, chi: &CharPoly<F::Elem>, mut p: Vec<F::Elem>) -> Vec<F::Elem> {
    let k = chi.degree();
    let c = chi.coeffs();
    for d in (k..p.len()).rev() {
        let top = core::mem::replace(&mut p[d], f.zero());
        if f.is_zero(&top) {
            continue;
        }
        for j in 0..k {
            let idx = d - k + j;
            p[idx] = f.sub(&p[idx], &f.mul(&top, &c[j]));
        }
    }
    p.truncate(k);
    p.resize(k, f.zero());
    p
}

/// `a·b mod chi` with schoolbook multiplication.
pub fn polymul_mod<F: Field + ?Sized>(
    f: &F,
    chi: &CharPoly<F::Elem>,
    a: &[F::Elem],
    b: &[F::Elem],
) -> Vec<F::Elem> {
    let mut prod = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            prod[i + j] = f.add(&prod[i + j], &f.mul(x, y));
        }
    }
    reduce(f, chi, prod)
}

/// `x·a mod chi` in `O(k)`.
pub fn mul_x_mod<F: Field + ?Sized>(f: &F, chi: &CharPoly<F::Elem>, a: &[F::Elem]) -> Vec<F::Elem> {
    let k = chi.degree();
    debug_assert_eq!(a.len(), k);
    let top = &a[k - 1];
    (0..k)
        .map(|j| {
            let shifted = if j == 0 { f.zero() } else { a[j - 1].clone() };
            f.sub(&shifted, &f.mul(top, &chi.coeffs()[j]))
        })
        .collect()
}

/// The residue of `x^i` for `i < k`.
fn monomial<F: Field + ?Sized>(f: &F, k: usize, i: usize) -> Vec<F::Elem> {
    let mut v = vec![f.zero(); k];
    if i < k {
        v[i] = f.one();
    } else {
        unreachable!("monomial degree {i} not below {k}");
    }
    v
}

/// `x^n mod chi`.
pub fn polymod_pow<F: Field + ?Sized>(f: &F, chi: &CharPoly<F::Elem>, n: u64) -> PolyResidue<F::Elem> {
    polymod_pow_counted(f, chi, n, &mut OpCounter::default())
}

/// As [`polymod_pow`], counting squarings in `counter.polymul`. Bits are
/// consumed most significant first, so a set bit costs one `O(k)`
/// multiply-by-`x` and each further bit one squaring: `⌊log₂ n⌋` products.
pub fn polymod_pow_counted<F: Field + ?Sized>(
    f: &F,
    chi: &CharPoly<F::Elem>,
    n: u64,
    counter: &mut OpCounter,
) -> PolyResidue<F::Elem> {
    let k = chi.degree();
    if n < k as u64 {
        return PolyResidue { coeffs: monomial(f, k, n as usize), exponent: n };
    }
    let mut acc = if k > 1 { monomial(f, k, 1) } else { mul_x_mod(f, chi, &monomial(f, k, 0)) };
    for bit in (0..63 - n.leading_zeros()).rev() {
        acc = polymul_mod(f, chi, &acc, &acc);
        counter.polymul += 1;
        if (n >> bit) & 1 == 1 {
            acc = mul_x_mod(f, chi, &acc);
        }
    }
    PolyResidue { coeffs: acc, exponent: n }
}

/// Upper-left `s × s` block of `C^n` from `base = x^n mod chi`:
/// entry `(l, m)` (1-based) is the coefficient of `x^(k-l)` in
/// `x^(n+k-m) mod chi`, reached by `k - 1` shifts of the base residue.
pub fn block_from_residue<F: Field + ?Sized>(
    f: &F,
    chi: &CharPoly<F::Elem>,
    base: &PolyResidue<F::Elem>,
    s: usize,
) -> Matrix<F::Elem> {
    let k = chi.degree();
    assert!((1..=k).contains(&s), "block size must satisfy 1 <= s <= k");
    assert_eq!(base.coeffs.len(), k);
    let mut columns: Vec<Vec<F::Elem>> = vec![Vec::new(); s];
    let mut cur = base.coeffs.clone();
    for step in 0..k {
        if step > 0 {
            cur = mul_x_mod(f, chi, &cur);
        }
        // exponent n + step sits in column m0 = k - 1 - step
        if step + s >= k {
            columns[k - 1 - step] = (0..s).map(|l0| cur[k - 1 - l0].clone()).collect();
        }
    }
    Matrix::from_fn(s, s, |l0, m0| columns[m0][l0].clone())
}

/// Upper-left `s × s` block of `C^n` by the chosen strategy.
pub fn upper_left_block<F: Field + ?Sized>(
    f: &F,
    c: &Companion<F::Elem>,
    n: u64,
    s: usize,
    strategy: Strategy,
) -> Matrix<F::Elem> {
    upper_left_block_counted(f, c, n, s, strategy, &mut OpCounter::default())
}

pub fn upper_left_block_counted<F: Field + ?Sized>(
    f: &F,
    c: &Companion<F::Elem>,
    n: u64,
    s: usize,
    strategy: Strategy,
    counter: &mut OpCounter,
) -> Matrix<F::Elem> {
    match strategy.resolve(n, c.k()) {
        Strategy::PolyMod => {
            let chi = c.charpoly(f);
            let base = polymod_pow_counted(f, &chi, n, counter);
            block_from_residue(f, &chi, &base, s)
        }
        _ => dense_pow_counted(f, c, n, counter).submatrix(0..s, 0..s),
    }
}
