#![allow(dead_code)]

use banddet::{BandSpec, BigRational};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const EXAMPLES: [[i64; 5]; 5] = [
    [101, -17, 1, -247, 210],
    [17, -7, 1, -17, 6],
    [37, -10, 1, -60, 36],
    [30, -9, 1, -44, 24],
    [24, -8, 1, -32, 16],
];

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

pub fn nonzero(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    let v = rng.random_range(1..=bound);
    if rng.random_bool(0.5) {
        -v
    } else {
        v
    }
}

/// Random band with `k` in `k_range`, `s` and `r` both at least 1, integer
/// coefficients in `[-9, 9]` and nonzero outermost entries.
pub fn random_spec(rng: &mut ChaCha8Rng, k_range: std::ops::RangeInclusive<usize>) -> BandSpec {
    let k = rng.random_range(k_range);
    let s = rng.random_range(1..k);
    let mut c: Vec<i64> = (0..=k).map(|_| rng.random_range(-9..=9)).collect();
    c[s] = nonzero(rng, 9);
    c[k] = nonzero(rng, 9);
    BandSpec::from_integers(s, k - s, &c).unwrap()
}

pub fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    BigRational::new(rng.random_range(-30..=30i64).into(), rng.random_range(1..=7i64).into())
}
