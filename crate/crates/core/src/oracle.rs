//! Ground truth for everything else in the crate.
//!
//! - [`dense_det_bareiss`]: exact determinant of a dense rational matrix.
//! - [`dense_det_lu`]: partial-pivot determinant of a float matrix.
//! - [`ReductionState`] / [`reduction_det`]: the column-rotation and
//!   elimination chain that turns `det(T_n)` into an `s × s` determinant,
//!   performed step by step on explicit matrices.
//!
//! The chain works on
//!
//! ```text
//!            ( B_m | A_i )        B_m = columns s+1..m of T_m
//!  P_{m,i} = (     |-----)        A_i = k × s block, zero-padded below
//!            (     |  0  )
//! ```
//!
//! Rotating the first `s` columns of `T_n` to the end gives `P_{n,0}` with
//! sign `(-1)^((n-1)s)`. Each step clears the first row of `P_{m,i}` against
//! its pivot `a_s` and drops to the minor `P_{m-1,i+1}`, multiplying the
//! running factor by `a_s`. After `n - s` steps only the upper `s × s` of
//! `A_{n-s}` remains.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bandspec::BandSpec;
use crate::error::{Error, Result};
use crate::matrix::{self, Matrix};
use crate::scalar::{Field, ScalarMode, ScaledValue};

/// Exact determinant by fraction-free elimination over the integers.
///
/// Rows are first scaled to integers by the lcm of their denominators, so
/// every intermediate is an integer and every division is exact.
pub fn dense_det_bareiss(m: &Matrix<BigRational>) -> BigRational {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    let mut scale = BigInt::one();
    let mut ints: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let row = m.row(i);
        let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        ints.push(row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect());
        scale *= lcm;
    }
    BigRational::new(bareiss_integer(ints), scale)
}

fn bareiss_integer(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Partial-pivot determinant with scaled accumulation; singular input gives
/// zero (or a tiny value from rounding).
pub fn dense_det_lu(m: &Matrix<f64>) -> Result<ScaledValue> {
    let mut scaled = Vec::with_capacity(m.rows() * m.cols());
    for &x in m.iter() {
        scaled.push(ScaledValue::from_f64(x)?);
    }
    Ok(matrix::pivoted_det(Matrix::from_vec(m.rows(), m.cols(), scaled)))
}

/// `A_0`: the top `k` rows of the first `s` columns of `T_n`.
pub fn build_a0<F: Field + ?Sized>(f: &F, spec: &BandSpec) -> Result<Matrix<F::Elem>> {
    let embedded = spec.embed(f)?;
    let s = spec.s();
    Ok(Matrix::from_fn(spec.k(), s, |l, m| band_entry(f, spec, &embedded, m as isize - l as isize)))
}

/// `P_{size, i}` for a given `A_i`: `B_size` on the left, `A_i` stacked on
/// zeros on the right (only the top `size` rows of `A_i` when `size < k`).
pub fn build_p<F: Field + ?Sized>(
    f: &F,
    spec: &BandSpec,
    size: usize,
    a_block: &Matrix<F::Elem>,
) -> Result<Matrix<F::Elem>> {
    let (s, k) = (spec.s(), spec.k());
    if size < s || a_block.rows() != k || a_block.cols() != s {
        return Err(Error::Shape);
    }
    let embedded = spec.embed(f)?;
    let split = size - s;
    Ok(Matrix::from_fn(size, size, |i, j| {
        if j < split {
            band_entry(f, spec, &embedded, (j + s) as isize - i as isize)
        } else if i < k {
            a_block[(i, j - split)].clone()
        } else {
            f.zero()
        }
    }))
}

fn band_entry<F: Field + ?Sized>(f: &F, spec: &BandSpec, embedded: &[F::Elem], offset: isize) -> F::Elem {
    match spec.at_offset(offset) {
        Some(_) if offset >= 0 => embedded[offset as usize].clone(),
        Some(_) => embedded[spec.s() + offset.unsigned_abs()].clone(),
        None => f.zero(),
    }
}

/// First column of every `B_m`, `(a_s, a_{s-1}, …, a_0, a_{s+1}, …, a_{s+r})`.
pub fn pivot_column<F: Field + ?Sized>(f: &F, spec: &BandSpec) -> Result<Vec<F::Elem>> {
    let embedded = spec.embed(f)?;
    Ok((0..=spec.k()).map(|t| band_entry(f, spec, &embedded, spec.s() as isize - t as isize)).collect())
}

/// One elimination step on the `A` block: subtract `A[0][j]/a_s` times the
/// pivot column from column `j`, then drop the first row (the zero padding
/// supplies the new last row).
pub fn eliminate<F: Field + ?Sized>(
    f: &F,
    pivot: &[F::Elem],
    a_block: &Matrix<F::Elem>,
) -> Result<Matrix<F::Elem>> {
    let k = a_block.rows();
    let lead_inv = f.inv(&pivot[0]).ok_or(match f.mode() {
        ScalarMode::PrimeField(p) => Error::ModulusDividesLeadingCoefficient { p },
        _ => Error::ZeroLeadingCoefficient,
    })?;
    Ok(Matrix::from_fn(k, a_block.cols(), |l, j| {
        let mult = f.mul(&a_block[(0, j)], &lead_inv);
        let below = if l + 1 < k { a_block[(l + 1, j)].clone() } else { f.zero() };
        f.sub(&below, &f.mul(&mult, &pivot[l + 1]))
    }))
}

/// Where the chain stands after `i` steps: `det(T_n) = ±factor · det(P_{n-i,i})`.
#[derive(Clone, Debug, PartialEq)]
pub struct ReductionState<T> {
    n: usize,
    i: usize,
    a_block: Matrix<T>,
    pivot: Vec<T>,
    factor: T,
    negative: bool,
}

impl<T: Clone> ReductionState<T> {
    /// `P_{n,0}` with the rotation sign `(-1)^((n-1)s)`.
    pub fn start<F: Field<Elem = T> + ?Sized>(f: &F, spec: &BandSpec, n: usize) -> Result<Self> {
        if n < spec.k() || n == 0 {
            return Err(Error::BelowBandwidth { n: n as u64, k: spec.k() });
        }
        Ok(ReductionState {
            n,
            i: 0,
            a_block: build_a0(f, spec)?,
            pivot: pivot_column(f, spec)?,
            factor: f.one(),
            negative: (n - 1) % 2 == 1 && spec.s() % 2 == 1,
        })
    }

    pub fn steps_taken(&self) -> usize {
        self.i
    }

    /// Size of the current `P` matrix.
    pub fn size(&self) -> usize {
        self.n - self.i
    }

    pub fn a_block(&self) -> &Matrix<T> {
        &self.a_block
    }

    /// Accumulated `a_s^i`.
    pub fn factor(&self) -> &T {
        &self.factor
    }

    /// Whether the rotation sign is `-1`.
    pub fn negative(&self) -> bool {
        self.negative
    }

    /// Advances `P_{m,i}` to `P_{m-1,i+1}`; possible while `m > s`.
    pub fn step<F: Field<Elem = T> + ?Sized>(&mut self, f: &F) -> Result<()> {
        let s = self.a_block.cols();
        if self.size() <= s {
            return Err(Error::Shape);
        }
        self.a_block = eliminate(f, &self.pivot, &self.a_block)?;
        self.factor = f.mul(&self.factor, &self.pivot[0]);
        self.i += 1;
        Ok(())
    }

    /// The current `P_{n-i,i}`.
    pub fn current<F: Field<Elem = T> + ?Sized>(&self, f: &F, spec: &BandSpec) -> Result<Matrix<T>> {
        build_p(f, spec, self.size(), &self.a_block)
    }

    /// `±factor · det(P_{n-i,i})` with a dense determinant of the current matrix.
    pub fn det_via_current<F: Field<Elem = T> + ?Sized>(&self, f: &F, spec: &BandSpec) -> Result<T> {
        let d = f.mul(&self.factor, &f.det(self.current(f, spec)?));
        Ok(if self.negative { f.neg(&d) } else { d })
    }
}

/// `det(T_n)` by running the chain to the end: `n - s` eliminations, then
/// the determinant of the upper `s × s` of `A_{n-s}`.
pub fn reduction_det<F: Field + ?Sized>(f: &F, spec: &BandSpec, n: usize) -> Result<F::Elem> {
    let mut state = ReductionState::start(f, spec, n)?;
    while state.size() > spec.s() {
        state.step(f)?;
    }
    state.det_via_current(f, spec)
}

#[cfg(test)]
mod tests {
    extern crate std;

    use super::*;
    use crate::companion;
    use crate::matpow::dense_pow;
    use crate::scalar::{ratio, RationalField};
    use alloc::vec;
    use proptest::prelude::*;

    fn spec(s: usize, r: usize, c: &[i64]) -> BandSpec {
        BandSpec::from_integers(s, r, c).unwrap()
    }

    // Oracle for the oracle: Laplace expansion along the first row.
    fn cofactor(m: &Matrix<BigRational>) -> BigRational {
        let n = m.rows();
        if n == 0 {
            return ratio(1, 1);
        }
        (0..n)
            .map(|j| {
                let minor = Matrix::from_fn(n - 1, n - 1, |i, c| m[(i + 1, if c < j { c } else { c + 1 })].clone());
                let term = &m[(0, j)] * cofactor(&minor);
                if j % 2 == 0 { term } else { -term }
            })
            .fold(ratio(0, 1), |a, b| a + b)
    }

    #[test]
    fn bareiss_examples() {
        assert_eq!(dense_det_bareiss(&Matrix::from_rows(vec![vec![ratio(5, 7)]])), ratio(5, 7));
        assert_eq!(dense_det_bareiss(&crate::matrix::identity(&RationalField, 7)), ratio(1, 1));
        let m = Matrix::from_rows(vec![vec![1, 2], vec![3, 4]]).map(|&v| ratio(v, 1));
        assert_eq!(dense_det_bareiss(&m), ratio(-2, 1));
        let half = Matrix::from_rows(vec![vec![ratio(1, 2), ratio(1, 3)], vec![ratio(1, 4), ratio(1, 5)]]);
        assert_eq!(dense_det_bareiss(&half), ratio(1, 10) - ratio(1, 12));
    }

    #[test]
    fn lu_examples() {
        let d = Matrix::from_rows(vec![vec![2.0, 0.0, 0.0], vec![0.0, 2.0, 0.0], vec![0.0, 0.0, 2.0]]);
        assert_eq!(dense_det_lu(&d).unwrap(), ScaledValue::from_parts(1.0, 3).unwrap());
        let p = Matrix::from_rows(vec![vec![0.0, 1.0, 0.0], vec![1.0, 0.0, 0.0], vec![0.0, 0.0, 1.0]]);
        assert_eq!(dense_det_lu(&p).unwrap().to_f64(), -1.0);
        let singular = Matrix::from_rows(vec![vec![1.0, 2.0], vec![2.0, 4.0]]);
        assert!(dense_det_lu(&singular).unwrap().to_f64().abs() < 1e-12);
    }

    #[test]
    fn lu_matches_bareiss_on_random_integers() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(10);
        for _ in 0..20 {
            let ints = Matrix::from_fn(10, 10, |_, _| rng.random_range(-20i64..=20));
            let exact = dense_det_bareiss(&ints.map(|&v| ratio(v, 1)));
            let approx = dense_det_lu(&ints.map(|&v| v as f64)).unwrap().to_f64();
            let exact = ScaledValue::from_rational(&exact).to_f64();
            assert!(((approx - exact) / exact).abs() < 1e-9, "{approx} vs {exact}");
        }
    }

    #[test]
    fn tridiagonal_a0_and_pivot() {
        let f = RationalField;
        let t = spec(1, 1, &[3, 2, 5]);
        assert_eq!(build_a0(&f, &t).unwrap(), Matrix::from_rows(vec![vec![ratio(3, 1)], vec![ratio(5, 1)]]));
        assert_eq!(pivot_column(&f, &t).unwrap(), vec![ratio(2, 1), ratio(3, 1), ratio(5, 1)]);
    }

    #[test]
    fn p_n0_is_rotated_t_n() {
        let f = RationalField;
        let sp = spec(2, 3, &[1, -2, 3, 4, -5, 6]);
        let n = 8;
        let t = sp.dense(n);
        let p = build_p(&f, &sp, n, &build_a0(&f, &sp).unwrap()).unwrap();
        let rotated = Matrix::from_fn(n, n, |i, j| t[(i, (j + sp.s()) % n)].clone());
        assert_eq!(p, rotated);
    }

    #[test]
    fn reduction_examples() {
        let f = RationalField;
        let ex1 = spec(2, 2, &[101, -17, 1, -247, 210]);
        assert_eq!(reduction_det(&f, &ex1, 5).unwrap(), dense_det_bareiss(&ex1.dense(5)));
        assert_eq!(reduction_det(&f, &spec(1, 1, &[2, 1, 1]), 6).unwrap(), ratio(7, 1));
        let t = spec(1, 1, &[2, 1, 1]);
        let state = ReductionState::start(&f, &t, 6).unwrap();
        assert_eq!(state.det_via_current(&f, &t).unwrap(), ratio(7, 1));
        assert_eq!(
            reduction_det(&f, &ex1, 3),
            Err(Error::BelowBandwidth { n: 3, k: 4 })
        );
    }

    #[test]
    fn reduction_handles_triangular_bands() {
        let f = RationalField;
        for sp in [spec(0, 2, &[3, 1, 1]), spec(2, 0, &[3, 1, 1]), spec(0, 0, &[-2])] {
            assert_eq!(reduction_det(&f, &sp, 5).unwrap(), dense_det_bareiss(&sp.dense(5)));
        }
    }

    fn arb_spec(max_k: usize) -> impl proptest::strategy::Strategy<Value = BandSpec> {
        (1usize..=max_k).prop_flat_map(|k| (0usize..=k, Just(k))).prop_flat_map(|(s, k)| {
            let nz = prop_oneof![-9i64..=-1, 1i64..=9];
            (proptest::collection::vec(-9i64..=9, k + 1), nz.clone(), nz).prop_map(
                move |(mut c, lead, trail)| {
                    c[k] = trail;
                    c[s] = lead;
                    BandSpec::from_integers(s, k - s, &c).unwrap()
                },
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn bareiss_matches_cofactor(vals in proptest::collection::vec(-9i64..=9, 9), dens in proptest::collection::vec(1i64..=4, 9)) {
            let m = Matrix::from_fn(3, 3, |i, j| ratio(vals[3 * i + j], dens[3 * i + j]));
            prop_assert_eq!(dense_det_bareiss(&m), cofactor(&m));
            prop_assert_eq!(crate::matrix::bareiss_det(&RationalField, m.clone()), cofactor(&m));
        }

        #[test]
        fn rotation_sign(sp in arb_spec(5), extra in 0usize..8) {
            let f = RationalField;
            let n = sp.k().max(1) + extra;
            let p0 = build_p(&f, &sp, n, &build_a0(&f, &sp).unwrap()).unwrap();
            let sign = if (n - 1) * sp.s() % 2 == 1 { ratio(-1, 1) } else { ratio(1, 1) };
            prop_assert_eq!(dense_det_bareiss(&sp.dense(n)), sign * dense_det_bareiss(&p0));
        }

        // Every intermediate P along the chain carries the same determinant.
        #[test]
        fn chain_is_consistent(sp in arb_spec(5), extra in 0usize..6) {
            let f = RationalField;
            let n = sp.k().max(1) + extra;
            let truth = dense_det_bareiss(&sp.dense(n));
            let mut state = ReductionState::start(&f, &sp, n).unwrap();
            loop {
                prop_assert_eq!(state.det_via_current(&f, &sp).unwrap(), truth.clone());
                if state.size() == sp.s() { break; }
                state.step(&f).unwrap();
            }
            prop_assert_eq!(reduction_det(&f, &sp, n).unwrap(), truth);
        }

        // Each elimination step is multiplication by the companion matrix.
        #[test]
        fn elimination_is_companion_product(sp in arb_spec(5)) {
            prop_assume!(sp.s() >= 1);
            let f = RationalField;
            let c = companion::build(&f, &sp).unwrap().to_dense(&f);
            let pivot = pivot_column(&f, &sp).unwrap();
            let mut a = build_a0(&f, &sp).unwrap();
            for _ in 0..10 {
                let next = eliminate(&f, &pivot, &a).unwrap();
                prop_assert_eq!(&next, &crate::matrix::mul(&f, &c, &a));
                a = next;
            }
        }

        // det(upper s×s of C^(n-s)·A_0) = (-a_s)^s · det(upper-left s×s of C^n).
        #[test]
        fn block_identity(sp in arb_spec(5), n_extra in 1usize..=30) {
            prop_assume!(sp.s() >= 1);
            let f = RationalField;
            let s = sp.s();
            let n = s + n_extra;
            let c = companion::build(&f, &sp).unwrap();
            let lhs_full = crate::matrix::mul(&f, &dense_pow(&f, &c, (n - s) as u64), &build_a0(&f, &sp).unwrap());
            let lhs = f.det(lhs_full.submatrix(0..s, 0..s));
            let rhs = f.pow(&-sp.leading().clone(), s as u64) * f.det(dense_pow(&f, &c, n as u64).submatrix(0..s, 0..s));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
