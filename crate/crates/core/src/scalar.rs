//! Fields of computation and the overflow-safe scaled float.
//!
//! Every numeric routine in the crate is generic over [`Field`]. A field is a
//! value (not just a type) so the prime modulus can be chosen at run time;
//! elements of different fields have different types or are produced by a
//! single context, so one computation never mixes modes.

use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::bandspec::BandSpec;
use crate::error::{Error, Result};
use crate::matpow::{OpCounter, Strategy};
use crate::matrix::{self, Matrix};

/// Which arithmetic a computation runs in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScalarMode {
    ExactRational,
    ScaledFloat,
    /// Integers modulo an odd prime `p`.
    PrimeField(u64),
}

impl ScalarMode {
    /// Checks the prime-field modulus; the other modes are always valid.
    pub fn validate(self) -> Result<Self> {
        if let ScalarMode::PrimeField(p) = self {
            PrimeField::new(p)?;
        }
        Ok(self)
    }

    pub fn name(&self) -> &'static str {
        match self {
            ScalarMode::ExactRational => "rational",
            ScalarMode::ScaledFloat => "float",
            ScalarMode::PrimeField(_) => "prime",
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, ScalarMode::ScaledFloat)
    }
}

impl fmt::Display for ScalarMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarMode::PrimeField(p) => write!(f, "prime({p})"),
            other => f.write_str(other.name()),
        }
    }
}

/// A scalar in whichever mode produced it.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Rational(BigRational),
    Scaled(ScaledValue),
    Residue { value: u64, modulus: u64 },
}

impl Value {
    pub fn mode(&self) -> ScalarMode {
        match self {
            Value::Rational(_) => ScalarMode::ExactRational,
            Value::Scaled(_) => ScalarMode::ScaledFloat,
            Value::Residue { modulus, .. } => ScalarMode::PrimeField(*modulus),
        }
    }

    /// Negation in the value's own mode.
    pub fn neg(&self) -> Value {
        match self {
            Value::Rational(q) => Value::Rational(-q),
            Value::Scaled(v) => Value::Scaled(-*v),
            Value::Residue { value, modulus } => Value::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rational(q) => write!(f, "{q}"),
            Value::Scaled(v) => write!(f, "{v}"),
            Value::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Arithmetic context for one computation.
pub trait Field {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn mode(&self) -> ScalarMode;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Embeds an exact rational; fails when the denominator vanishes in the field.
    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem>;
    fn to_value(&self, a: &Self::Elem) -> Value;

    fn is_exact(&self) -> bool {
        self.mode().is_exact()
    }

    fn from_int(&self, v: i64) -> Self::Elem {
        self.from_rational(&BigRational::from_integer(v.into()))
            .expect("integers embed in every supported field")
    }

    fn from_u64(&self, v: u64) -> Self::Elem {
        self.from_rational(&BigRational::from_integer(v.into()))
            .expect("integers embed in every supported field")
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        Some(self.mul(a, &self.inv(b)?))
    }

    /// `base^n` by square-and-multiply, most significant bit first.
    /// `0^0` is `1`.
    fn pow(&self, base: &Self::Elem, n: u64) -> Self::Elem {
        if n == 0 {
            return self.one();
        }
        let mut acc = base.clone();
        let top = 63 - n.leading_zeros();
        for bit in (0..top).rev() {
            acc = self.mul(&acc, &acc);
            if (n >> bit) & 1 == 1 {
                acc = self.mul(&acc, base);
            }
        }
        acc
    }

    /// Determinant of a square matrix. Exact fields use fraction-free
    /// elimination; the float field overrides this with partial pivoting.
    fn det(&self, m: Matrix<Self::Elem>) -> Self::Elem {
        matrix::bareiss_det(self, m)
    }

    /// `(-1)^(n·s) a_s^n det(M)` for an oriented band (`1 ≤ s ≤ r`, `n ≥ k`)
    /// when the field has a cheaper route than powering its own companion
    /// matrix. `None` selects the generic path.
    fn companion_det(
        &self,
        _spec: &BandSpec,
        _n: u64,
        _strategy: Strategy,
        _counter: &mut OpCounter,
    ) -> Option<Result<Self::Elem>> {
        None
    }
}

/// Exact rational arithmetic over arbitrary-precision integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RationalField;

impl Field for RationalField {
    type Elem = BigRational;

    fn mode(&self) -> ScalarMode {
        ScalarMode::ExactRational
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn from_rational(&self, q: &BigRational) -> Result<BigRational> {
        Ok(q.clone())
    }
    fn to_value(&self, a: &BigRational) -> Value {
        Value::Rational(a.clone())
    }

    // Powers an integer companion matrix instead, avoiding a gcd per operation.
    fn companion_det(
        &self,
        spec: &BandSpec,
        n: u64,
        strategy: Strategy,
        counter: &mut OpCounter,
    ) -> Option<Result<BigRational>> {
        Some(crate::detengine::integral_det(spec, n, strategy, counter))
    }
}

/// The integers. Only ring operations are used by the powering code, so this
/// runs it without fractions; `inv` succeeds only for units.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IntegerRing;

impl Field for IntegerRing {
    type Elem = BigInt;

    fn mode(&self) -> ScalarMode {
        ScalarMode::ExactRational
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn inv(&self, a: &BigInt) -> Option<BigInt> {
        (a.abs().is_one()).then(|| a.clone())
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    /// Fails with [`Error::InexactField`] for non-integers.
    fn from_rational(&self, q: &BigRational) -> Result<BigInt> {
        if q.is_integer() {
            Ok(q.to_integer())
        } else {
            Err(Error::InexactField)
        }
    }
    fn to_value(&self, a: &BigInt) -> Value {
        Value::Rational(BigRational::from_integer(a.clone()))
    }
    fn det(&self, m: Matrix<BigInt>) -> BigInt {
        let q = matrix::bareiss_det(&RationalField, m.map(|v| BigRational::from_integer(v.clone())));
        q.to_integer()
    }
}

/// Integers modulo an odd prime that fits a machine word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p <= 2 || !is_prime(p) {
            return Err(Error::InvalidModulus { p });
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce(&self, v: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        v.mod_floor(&m).to_u64().expect("residue fits in u64")
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn mode(&self) -> ScalarMode {
        ScalarMode::PrimeField(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + (self.p - *b) as u128) % self.p as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    // Fermat: a^(p-2).
    fn inv(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| self.pow(a, self.p - 2))
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn from_rational(&self, q: &BigRational) -> Result<u64> {
        let den = self.reduce(q.denom());
        if den == 0 {
            return Err(Error::ModulusDividesDenominator { p: self.p });
        }
        let num = self.reduce(q.numer());
        Ok(self.mul(&num, &self.inv(&den).expect("nonzero")))
    }
    fn to_value(&self, a: &u64) -> Value {
        Value::Residue { value: *a, modulus: self.p }
    }
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    let d_shift = (n - 1).trailing_zeros();
    let d = (n - 1) >> d_shift;
    'witness: for &a in &BASES {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..d_shift {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A float kept as `sign · mantissa · 2^exp2` with `mantissa ∈ [1, 2)`.
///
/// The exponent is an `i128`, so magnitudes like `a_s^n` for any `u64` exponent
/// stay representable; only the 53-bit mantissa rounds. Exponent arithmetic
/// saturates at the `i128` bounds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScaledValue {
    sign: i8,
    mantissa: f64,
    exp2: i128,
}

const EXP_MASK: u64 = 0x7ff << 52;

// 2^e for e in the normal exponent range.
fn pow2(e: i32) -> f64 {
    debug_assert!((-1022..=1023).contains(&e));
    f64::from_bits(((e + 1023) as u64) << 52)
}

// Splits a positive finite nonzero float into mantissa in [1, 2) and exponent.
fn split(x: f64) -> (f64, i32) {
    let mut bits = x.to_bits() & !(1u64 << 63);
    let mut adjust = 0;
    if bits & EXP_MASK == 0 {
        bits = (f64::from_bits(bits) * pow2(64)).to_bits();
        adjust = -64;
    }
    let biased = ((bits & EXP_MASK) >> 52) as i32;
    let m = f64::from_bits((bits & !EXP_MASK) | (1023u64 << 52));
    (m, biased - 1023 + adjust)
}

impl ScaledValue {
    pub const ZERO: ScaledValue = ScaledValue { sign: 0, mantissa: 0.0, exp2: 0 };
    pub const ONE: ScaledValue = ScaledValue { sign: 1, mantissa: 1.0, exp2: 0 };

    /// Builds `sign · |m| · 2^exp2` and renormalizes the mantissa.
    fn normalized(sign: i8, m: f64, exp2: i128) -> ScaledValue {
        if sign == 0 || m == 0.0 {
            return ScaledValue::ZERO;
        }
        let (mant, e) = split(m);
        ScaledValue { sign, mantissa: mant, exp2: exp2.saturating_add(e as i128) }
    }

    pub fn from_f64(x: f64) -> Result<ScaledValue> {
        if !x.is_finite() {
            return Err(Error::NonFinite);
        }
        if x == 0.0 {
            return Ok(ScaledValue::ZERO);
        }
        let sign = if x.is_sign_negative() { -1 } else { 1 };
        Ok(ScaledValue::normalized(sign, x, 0))
    }

    /// Builds a value from arbitrary parts; the mantissa need not be normalized.
    pub fn from_parts(mantissa: f64, exp2: i128) -> Result<ScaledValue> {
        let base = ScaledValue::from_f64(mantissa)?;
        Ok(ScaledValue { exp2: base.exp2.saturating_add(exp2), ..base })
    }

    /// Nearest scaled value to an exact rational, without intermediate overflow.
    pub fn from_rational(q: &BigRational) -> ScaledValue {
        if q.is_zero() {
            return ScaledValue::ZERO;
        }
        let sign = if q.is_negative() { -1 } else { 1 };
        let num = q.numer().magnitude();
        let den = q.denom().magnitude();
        let shift = 64 + den.bits() as i128 - num.bits() as i128;
        let quotient = if shift >= 0 {
            (num << shift as usize) / den
        } else {
            num / (den << (-shift) as usize)
        };
        let m = quotient.to_u128().expect("quotient has at most 66 bits") as f64;
        ScaledValue::normalized(sign, m, -shift)
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }
    pub fn mantissa(&self) -> f64 {
        self.mantissa
    }
    pub fn exp2(&self) -> i128 {
        self.exp2
    }
    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// Nearest `f64`; overflows to infinity and underflows to zero.
    pub fn to_f64(&self) -> f64 {
        let s = self.sign as f64;
        match self.exp2 {
            _ if self.sign == 0 => 0.0,
            e if e > 1023 => s * f64::INFINITY,
            e if e >= -1022 => s * self.mantissa * pow2(e as i32),
            e if e >= -1075 => s * self.mantissa * pow2(e as i32 + 64) * pow2(-64),
            _ => s * 0.0,
        }
    }

    /// `log2 |x|`, `-inf` for zero. Useful for printing huge magnitudes.
    pub fn log2_abs(&self) -> f64 {
        if self.sign == 0 {
            return f64::NEG_INFINITY;
        }
        self.exp2 as f64 + log2_unit(self.mantissa)
    }

    pub fn recip(&self) -> Option<ScaledValue> {
        if self.sign == 0 {
            return None;
        }
        Some(ScaledValue::normalized(self.sign, 1.0 / self.mantissa, self.exp2.saturating_neg()))
    }

    /// Compares magnitudes.
    pub fn cmp_abs(&self, other: &ScaledValue) -> Ordering {
        match (self.sign == 0, other.sign == 0) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            _ => self
                .exp2
                .cmp(&other.exp2)
                .then(self.mantissa.partial_cmp(&other.mantissa).unwrap_or(Ordering::Equal)),
        }
    }

    /// `self^n` with the same square-and-multiply schedule as [`Field::pow`].
    pub fn pow(&self, n: u64) -> ScaledValue {
        ScaledFloatField.pow(self, n)
    }
}

// log2 of m in [1, 2) by repeated squaring: 52 bits of result.
fn log2_unit(mut m: f64) -> f64 {
    let mut result = 0.0;
    let mut bit = 0.5;
    for _ in 0..52 {
        m *= m;
        if m >= 2.0 {
            m *= 0.5;
            result += bit;
        }
        bit *= 0.5;
    }
    result
}

impl Mul for ScaledValue {
    type Output = ScaledValue;
    fn mul(self, rhs: ScaledValue) -> ScaledValue {
        ScaledValue::normalized(
            self.sign * rhs.sign,
            self.mantissa * rhs.mantissa,
            self.exp2.saturating_add(rhs.exp2),
        )
    }
}

impl Add for ScaledValue {
    type Output = ScaledValue;
    fn add(self, rhs: ScaledValue) -> ScaledValue {
        if self.sign == 0 {
            return rhs;
        }
        if rhs.sign == 0 {
            return self;
        }
        let (big, small) = if self.exp2 >= rhs.exp2 { (self, rhs) } else { (rhs, self) };
        let gap = big.exp2.saturating_sub(small.exp2);
        if gap > 64 {
            return big;
        }
        let v = big.sign as f64 * big.mantissa + small.sign as f64 * small.mantissa * pow2(-(gap as i32));
        if v == 0.0 {
            return ScaledValue::ZERO;
        }
        ScaledValue::normalized(if v < 0.0 { -1 } else { 1 }, v, big.exp2)
    }
}

impl Neg for ScaledValue {
    type Output = ScaledValue;
    fn neg(self) -> ScaledValue {
        ScaledValue { sign: -self.sign, ..self }
    }
}

impl Sub for ScaledValue {
    type Output = ScaledValue;
    fn sub(self, rhs: ScaledValue) -> ScaledValue {
        self + (-rhs)
    }
}

impl fmt::Display for ScaledValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == 0 {
            return f.write_str("0");
        }
        let sign = if self.sign < 0 { "-" } else { "" };
        write!(f, "{sign}{}*2^{}", self.mantissa, self.exp2)
    }
}

/// Floating-point arithmetic on [`ScaledValue`]s.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ScaledFloatField;

impl Field for ScaledFloatField {
    type Elem = ScaledValue;

    fn mode(&self) -> ScalarMode {
        ScalarMode::ScaledFloat
    }
    fn zero(&self) -> ScaledValue {
        ScaledValue::ZERO
    }
    fn one(&self) -> ScaledValue {
        ScaledValue::ONE
    }
    fn add(&self, a: &ScaledValue, b: &ScaledValue) -> ScaledValue {
        *a + *b
    }
    fn sub(&self, a: &ScaledValue, b: &ScaledValue) -> ScaledValue {
        *a - *b
    }
    fn mul(&self, a: &ScaledValue, b: &ScaledValue) -> ScaledValue {
        *a * *b
    }
    fn neg(&self, a: &ScaledValue) -> ScaledValue {
        -*a
    }
    fn inv(&self, a: &ScaledValue) -> Option<ScaledValue> {
        a.recip()
    }
    fn is_zero(&self, a: &ScaledValue) -> bool {
        a.is_zero()
    }
    fn from_rational(&self, q: &BigRational) -> Result<ScaledValue> {
        Ok(ScaledValue::from_rational(q))
    }
    fn to_value(&self, a: &ScaledValue) -> Value {
        Value::Scaled(*a)
    }

    fn det(&self, m: Matrix<ScaledValue>) -> ScaledValue {
        matrix::pivoted_det(m)
    }
}

/// Parses `"7"`, `"-7/2"`, `"0.125"` or `"1.5e-3"` (and `p/q` of decimals)
/// into an exact rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    match t.split_once('/') {
        Some((n, d)) => {
            let n = parse_decimal(n.trim(), text)?;
            let d = parse_decimal(d.trim(), text)?;
            if d.is_zero() {
                return Err(Error::ParseScalar(text.to_string()));
            }
            Ok(n / d)
        }
        None => parse_decimal(t, text),
    }
}

fn parse_decimal(t: &str, original: &str) -> Result<BigRational> {
    let err = || Error::ParseScalar(String::from(original));
    let (body, exp) = match t.find(['e', 'E']) {
        Some(i) => {
            let e: i32 = t[i + 1..].parse().map_err(|_| err())?;
            (&t[..i], e)
        }
        None => (t, 0),
    };
    if exp.unsigned_abs() > 100_000 {
        return Err(err());
    }
    let (negative, body) = match body.as_bytes().first() {
        Some(b'-') => (true, &body[1..]),
        Some(b'+') => (false, &body[1..]),
        _ => (false, body),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if (int.is_empty() && frac.is_empty())
        || !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit())
    {
        return Err(err());
    }
    let mut digits = String::with_capacity(int.len() + frac.len());
    digits.push_str(int);
    digits.push_str(frac);
    let mantissa = BigInt::parse_bytes(digits.as_bytes(), 10).ok_or_else(err)?;
    let mantissa = if negative { -mantissa } else { mantissa };
    let scale = exp as i64 - frac.len() as i64;
    let ten = BigInt::from(10u8);
    let value = if scale >= 0 {
        BigRational::from_integer(mantissa * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(mantissa, num_traits::pow(ten, (-scale) as usize))
    };
    Ok(value)
}

/// Builds an exact rational from an integer pair; panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Sign of an exact rational as `-1`, `0` or `1`.
pub fn rational_sign(q: &BigRational) -> i8 {
    match q.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}
