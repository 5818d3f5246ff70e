//! Closed forms: tridiagonal determinants through Lucas sequences, and
//! pentadiagonal determinants from the roots of `ch_C`.
//!
//! Tridiagonal, band `(a, b, c)` with `b, c ≠ 0`:
//!
//! ```text
//! det(T_n) = (-1)^n b^n U_{n+1}(-a/b, c/b)
//! ```
//!
//! Pentadiagonal, band `(a, b, c, d, e)`: with `λ_i` the roots of
//! `ch_C(x) = x^4 + (b/c)x^3 + (a/c)x^2 + (d/c)x + e/c`, `det(T_n) = c^n E/D`
//! where `E` and `D` depend on the multiplicity pattern (cases I to V).
//! Roots are supplied by the caller; nothing here factors polynomials.
//!
//! The pentadiagonal formulas are evaluated for `n ≥ 4`. Cases I to IV
//! divide by a product of root differences and are refused in the float
//! field; Case V is a plain product and works everywhere.

use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::bandspec::BandSpec;
use crate::companion::Companion;
use crate::error::{Error, Result};
use crate::matpow::dense_pow;
use crate::scalar::Field;

/// Parameters of `U_n(P, Q)`: `U_0 = 0`, `U_1 = 1`, `U_{n+2} = P U_{n+1} - Q U_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LucasParams<T> {
    pub p: T,
    pub q: T,
}

impl<T: Clone> LucasParams<T> {
    /// `P = -a/b`, `Q = c/b` for a tridiagonal band.
    pub fn from_tridiagonal<F: Field<Elem = T> + ?Sized>(f: &F, spec: &BandSpec) -> Result<Self> {
        check_tridiagonal(spec)?;
        let a = spec.embed(f)?;
        let b_inv = f.inv(&a[1]).ok_or(Error::NotInvertible)?;
        Ok(LucasParams { p: f.neg(&f.mul(&a[0], &b_inv)), q: f.mul(&a[2], &b_inv) })
    }

    pub fn u<F: Field<Elem = T> + ?Sized>(&self, f: &F, n: u64) -> T {
        lucas_u(f, &self.p, &self.q, n)
    }
}

/// `U_n(P, Q)` in `O(log n)`: it is the top-right entry of
/// `[[P, 1], [-Q, 0]]^n`.
pub fn lucas_u<F: Field + ?Sized>(f: &F, p: &F::Elem, q: &F::Elem, n: u64) -> F::Elem {
    let c = Companion::from_first_col(alloc::vec![p.clone(), f.neg(q)]);
    dense_pow(f, &c, n)[(0, 1)].clone()
}

fn check_tridiagonal(spec: &BandSpec) -> Result<()> {
    if spec.s() != 1 || spec.r() != 1 {
        return Err(Error::NotTridiagonal { s: spec.s(), r: spec.r() });
    }
    Ok(())
}

/// `det(T_n)` for a tridiagonal band via the Lucas closed form.
pub fn tridiag_det<F: Field + ?Sized>(f: &F, spec: &BandSpec, n: u64) -> Result<F::Elem> {
    let spec = spec.clone().validate()?;
    let lucas = LucasParams::from_tridiagonal(f, &spec)?;
    let b = f.from_rational(spec.a(1))?;
    let value = f.mul(&f.pow(&b, n), &lucas.u(f, n + 1));
    Ok(if n % 2 == 1 { f.neg(&value) } else { value })
}

/// Distinct roots with positive multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct RootMultiset<T> {
    entries: Vec<(T, u32)>,
}

impl<T: Clone> RootMultiset<T> {
    pub fn new<F: Field<Elem = T> + ?Sized>(f: &F, entries: Vec<(T, u32)>) -> Result<Self> {
        if entries.iter().any(|(_, m)| *m == 0) {
            return Err(Error::InvalidRoots);
        }
        for (i, (x, _)) in entries.iter().enumerate() {
            if entries[i + 1..].iter().any(|(y, _)| f.is_zero(&f.sub(x, y))) {
                return Err(Error::InvalidRoots);
            }
        }
        Ok(RootMultiset { entries })
    }

    pub fn entries(&self) -> &[(T, u32)] {
        &self.entries
    }

    pub fn total_multiplicity(&self) -> u32 {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    /// Entries ordered by multiplicity, largest first (stable otherwise).
    fn by_multiplicity(&self) -> Vec<(T, u32)> {
        let mut sorted = self.entries.clone();
        sorted.sort_by_key(|x| core::cmp::Reverse(x.1));
        sorted
    }
}

/// Multiplicity pattern of the four roots of a pentadiagonal `ch_C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PentaCase {
    /// 1 + 1 + 1 + 1
    I,
    /// 2 + 1 + 1
    II,
    /// 2 + 2
    III,
    /// 3 + 1
    IV,
    /// 4
    V,
}

impl PentaCase {
    pub fn name(&self) -> &'static str {
        match self {
            PentaCase::I => "I",
            PentaCase::II => "II",
            PentaCase::III => "III",
            PentaCase::IV => "IV",
            PentaCase::V => "V",
        }
    }
}

pub fn penta_case_of<T: Clone>(roots: &RootMultiset<T>) -> Result<PentaCase> {
    let total = roots.total_multiplicity();
    if total != 4 {
        return Err(Error::MultiplicitySum { expected: 4, found: total });
    }
    let pattern: Vec<u32> = roots.by_multiplicity().iter().map(|(_, m)| *m).collect();
    Ok(match pattern.as_slice() {
        [1, 1, 1, 1] => PentaCase::I,
        [2, 1, 1] => PentaCase::II,
        [2, 2] => PentaCase::III,
        [3, 1] => PentaCase::IV,
        _ => PentaCase::V,
    })
}

// Field element paired with its field, so the case formulas can be written
// with ordinary operators.
struct X<'f, F: Field + ?Sized> {
    f: &'f F,
    v: F::Elem,
}

impl<F: Field + ?Sized> Clone for X<'_, F> {
    fn clone(&self) -> Self {
        X { f: self.f, v: self.v.clone() }
    }
}

impl<'f, F: Field + ?Sized> X<'f, F> {
    fn pow(&self, e: u64) -> Self {
        X { f: self.f, v: self.f.pow(&self.v, e) }
    }
}

impl<'f, F: Field + ?Sized> Add for X<'f, F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        X { f: self.f, v: self.f.add(&self.v, &rhs.v) }
    }
}

impl<'f, F: Field + ?Sized> Sub for X<'f, F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        X { f: self.f, v: self.f.sub(&self.v, &rhs.v) }
    }
}

impl<'f, F: Field + ?Sized> Mul for X<'f, F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        X { f: self.f, v: self.f.mul(&self.v, &rhs.v) }
    }
}

impl<'f, F: Field + ?Sized> Neg for X<'f, F> {
    type Output = Self;
    fn neg(self) -> Self {
        X { f: self.f, v: self.f.neg(&self.v) }
    }
}

/// `det(T_n) = c^n E/D` for a pentadiagonal band whose `ch_C` has the given
/// roots, `c = a_2`. Requires `n ≥ 4`.
pub fn penta_det<F: Field + ?Sized>(f: &F, roots: &RootMultiset<F::Elem>, c: &F::Elem, n: u64) -> Result<F::Elem> {
    if n < 4 {
        return Err(Error::ClosedFormRange { min: 4 });
    }
    let case = penta_case_of(roots)?;
    if case != PentaCase::V && !f.is_exact() {
        return Err(Error::InexactField);
    }
    let l: Vec<X<'_, F>> = roots.by_multiplicity().into_iter().map(|(v, _)| X { f, v }).collect();
    let k = |v: u64| X { f, v: f.from_u64(v) };
    let c_n = f.pow(c, n);

    let (e, d) = match case {
        PentaCase::I => {
            let (l1, l2, l3, l4) = (l[0].clone(), l[1].clone(), l[2].clone(), l[3].clone());
            let m = n + 2;
            let e = (l2.clone() - l3.clone())
                * (l1.clone() - l4.clone())
                * ((l2.clone() * l3.clone()).pow(m) + (l1.clone() * l4.clone()).pow(m))
                - (l1.clone() - l3.clone())
                    * (l2.clone() - l4.clone())
                    * ((l1.clone() * l3.clone()).pow(m) + (l2.clone() * l4.clone()).pow(m))
                + (l1.clone() - l2.clone())
                    * (l3.clone() - l4.clone())
                    * ((l1.clone() * l2.clone()).pow(m) + (l3.clone() * l4.clone()).pow(m));
            let d = (l1.clone() - l2.clone())
                * (l1.clone() - l3.clone())
                * (l1 - l4.clone())
                * (l2.clone() - l3.clone())
                * (l2 - l4.clone())
                * (l3 - l4);
            (e, d)
        }
        PentaCase::II => {
            let (l1, l2, l3) = (l[0].clone(), l[1].clone(), l[2].clone());
            let e = l1.pow(1 + n)
                * (l1.pow(3 + n) * (l2.clone() - l3.clone())
                    + l2.pow(2 + n)
                        * (l1.clone() * (-(k(2 + n) * l1.clone()) + l2.clone() + k(n) * l2.clone())
                            + (k(3 + n) * l1.clone() - k(2 + n) * l2.clone()) * l3.clone()))
                + l3.pow(2 + n)
                    * (l2.pow(2 + n) * (l2.clone() - l3.clone())
                        + l1.pow(1 + n)
                            * (k(2 + n) * l1.pow(2) + k(2 + n) * l2.clone() * l3.clone()
                                - l1.clone() * (k(3 + n) * l2.clone() + l3.clone() + k(n) * l3.clone())));
            let d = (l1.clone() - l2.clone()).pow(2) * (l1 - l3.clone()).pow(2) * (l2 - l3);
            (e, d)
        }
        PentaCase::III => {
            let (l1, l2) = (l[0].clone(), l[1].clone());
            let e = l1.pow(4 + 2 * n)
                - k(2 + n).pow(2) * (l1.clone() * l2.clone()).pow(1 + n) * (l1.pow(2) + l2.pow(2))
                + k(2) * k(3 + 4 * n + n * n) * (l1.clone() * l2.clone()).pow(2 + n)
                + l2.pow(4 + 2 * n);
            let d = (l1 - l2).pow(4);
            (e, d)
        }
        PentaCase::IV => {
            let (l1, l2) = (l[0].clone(), l[1].clone());
            let e = k(2 + n)
                * l1.pow(n)
                * (k(1 + n) * (l1.pow(3 + n) - l2.pow(3 + n)) - k(3 + n) * l1.pow(2 + n) * l2.clone()
                    + k(3 + n) * l1.clone() * l2.pow(2 + n));
            let d = k(2) * (l1 - l2).pow(3);
            (e, d)
        }
        PentaCase::V => {
            let l1 = l[0].clone();
            let e = k(n + 3) * k(n + 2).pow(2) * k(n + 1) * l1.pow(2 * n);
            (e, k(12))
        }
    };
    let ratio = f.div(&e.v, &d.v).ok_or(Error::NotInvertible)?;
    Ok(f.mul(&c_n, &ratio))
}
