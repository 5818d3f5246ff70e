//! Acceptance criteria 1 to 8. Runs as a plain binary so every criterion
//! prints exactly one `[PASS]`/`[FAIL]` line; the process fails if any does.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use banddet::closedform::{penta_det, tridiag_det, RootMultiset};
use banddet::detengine::det_in_counted;
use banddet::matpow::{dense_pow, polymod_pow, upper_left_block};
use banddet::oracle::{dense_det_bareiss, reduction_det};
use banddet::{
    companion, det, det_in, det_shifted, BandSpec, BigRational, Field, OpCounter, PrimeField, RationalField,
    ScalarMode, Strategy, Value,
};
use common::{int, nonzero, random_rational, EXAMPLES};
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const AC1_BUDGET: Duration = Duration::from_secs(5);
const AC2_BUDGET: Duration = Duration::from_secs(30);
const AC6_COUNT_RATIO: f64 = 1.6;
const AC6_BUDGET: Duration = Duration::from_millis(1);
const PRIME: u64 = 1_000_000_007;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rational_det(spec: &BandSpec, n: u64, strategy: Strategy) -> BigRational {
    match det(spec, n, strategy, ScalarMode::ExactRational).unwrap().value {
        Value::Rational(q) => q,
        other => panic!("rational mode returned {other:?}"),
    }
}

/// Any `0 ≤ s ≤ k`, coefficients in `[-9, 9]`, nonzero outermost entries.
fn any_band(rng: &mut ChaCha8Rng, k_lo: usize, k_hi: usize) -> BandSpec {
    let k = rng.random_range(k_lo..=k_hi);
    let s = rng.random_range(0..=k);
    let mut c: Vec<i64> = (0..=k).map(|_| rng.random_range(-9..=9)).collect();
    c[s] = nonzero(rng, 9);
    c[k] = nonzero(rng, 9);
    BandSpec::from_integers(s, k - s, &c).unwrap()
}

fn ac1() -> Outcome {
    let roots: [&[(i64, u32)]; 5] = [
        &[(2, 1), (3, 1), (5, 1), (7, 1)],
        &[(1, 2), (2, 1), (3, 1)],
        &[(2, 2), (3, 2)],
        &[(2, 3), (3, 1)],
        &[(2, 4)],
    ];
    let start = Instant::now();
    let f = RationalField;
    let mut checked = 0;
    for (coeffs, rts) in EXAMPLES.iter().zip(roots) {
        let spec = BandSpec::from_integers(2, 2, coeffs).unwrap();
        let rs = RootMultiset::new(&f, rts.iter().map(|&(r, m)| (int(r), m)).collect()).unwrap();
        for n in 4..=30u64 {
            let fast = rational_det(&spec, n, Strategy::PolyMod);
            let closed = penta_det(&f, &rs, &int(1), n).unwrap();
            let oracle = dense_det_bareiss(&spec.dense(n as usize));
            ensure(fast == closed && closed == oracle, || format!("{coeffs:?} n={n}: {fast} / {closed} / {oracle}"))?;
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < AC1_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("{checked} exact three-way matches in {elapsed:.2?}"))
}

fn ac2() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC2);
    for trial in 0..200 {
        let spec = any_band(&mut rng, 2, 6);
        let n = rng.random_range(spec.k()..=60);
        let fast = rational_det(&spec, n as u64, Strategy::Auto);
        let oracle = dense_det_bareiss(&spec.dense(n));
        let chain = reduction_det(&RationalField, &spec, n).unwrap();
        ensure(fast == oracle && oracle == chain, || format!("trial {trial}: {spec:?} n={n}"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < AC2_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("200 seeded specs agree in {elapsed:.2?}"))
}

fn ac3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC3);
    let f = RationalField;
    for trial in 0..100 {
        let (a, b, c) = (rng.random_range(-20..=20), nonzero(&mut rng, 20), nonzero(&mut rng, 20));
        let spec = BandSpec::from_integers(1, 1, &[a, b, c]).unwrap();
        let n_max = rng.random_range(1..=50u64);
        let dets: Vec<BigRational> = (1..=n_max).map(|n| rational_det(&spec, n, Strategy::Auto)).collect();
        for n in 1..=n_max {
            let closed = tridiag_det(&f, &spec, n).unwrap();
            ensure(closed == dets[n as usize - 1], || format!("trial {trial}: ({a},{b},{c}) n={n}"))?;
        }
        ensure(dets[0] == int(a), || format!("det T_1 for ({a},{b},{c})"))?;
        if n_max >= 2 {
            ensure(dets[1] == int(a * a - b * c), || format!("det T_2 for ({a},{b},{c})"))?;
        }
        for i in 2..dets.len() {
            let rec = int(a) * &dets[i - 1] - int(b * c) * &dets[i - 2];
            ensure(dets[i] == rec, || format!("recurrence at n={} for ({a},{b},{c})", i + 1))?;
        }
    }
    Ok("100 tridiagonal bands, closed form and recurrence exact".into())
}

fn ac4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC4);
    for trial in 0..50 {
        let spec = any_band(&mut rng, 1, 5);
        let n = rng.random_range(1..=40usize);
        let lambda = random_rational(&mut rng);
        let mut dense = spec.dense(n);
        for i in 0..n {
            dense[(i, i)] = &dense[(i, i)] - &lambda;
        }
        let got = det_shifted(&spec, n as u64, &lambda, Strategy::Auto, ScalarMode::ExactRational).unwrap();
        let want = dense_det_bareiss(&dense);
        ensure(got.value == Value::Rational(want.clone()), || format!("trial {trial}: {spec:?} n={n} λ={lambda}"))?;
    }
    Ok("50 shifted determinants exact".into())
}

fn ac5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC5);
    let f = PrimeField::new(PRIME).unwrap();
    let mut entries = 0usize;
    for trial in 0..100 {
        let spec = common::random_spec(&mut rng, 2..=6);
        let c = companion::build(&f, &spec).unwrap();
        let k = spec.k();
        for n in [k as u64, 17, 1000, 1_000_000] {
            let dense = upper_left_block(&f, &c, n, spec.s(), Strategy::Dense);
            let poly = upper_left_block(&f, &c, n, spec.s(), Strategy::PolyMod);
            ensure(dense == poly, || format!("trial {trial}: {spec:?} n={n}"))?;
        }
        let chi = c.charpoly(&f);
        for n in 0..=200u64 {
            let power = dense_pow(&f, &c, n);
            for m in 1..=k {
                let residue = polymod_pow(&f, &chi, n + (k - m) as u64);
                for l in 1..=k {
                    ensure(power[(l - 1, m - 1)] == residue.coeffs()[k - l], || {
                        format!("trial {trial}: entry ({l},{m}) of C^{n} for {spec:?}")
                    })?;
                    entries += 1;
                }
            }
        }
    }
    // The identity is field-independent; confirm it exactly over the rationals too.
    let q = RationalField;
    for trial in 0..10 {
        let spec = common::random_spec(&mut rng, 2..=6);
        let c = companion::build(&q, &spec).unwrap();
        let chi = c.charpoly(&q);
        let k = spec.k();
        for n in (0..=200u64).step_by(25) {
            let power = dense_pow(&q, &c, n);
            for m in 1..=k {
                let residue = polymod_pow(&q, &chi, n + (k - m) as u64);
                for l in 1..=k {
                    ensure(power[(l - 1, m - 1)] == residue.coeffs()[k - l], || {
                        format!("rational trial {trial}: entry ({l},{m}) of C^{n}")
                    })?;
                    entries += 1;
                }
            }
        }
    }
    Ok(format!("blocks identical for 400 (spec, n) pairs; {entries} power entries match residues"))
}

fn ac6() -> Outcome {
    let f = PrimeField::new(PRIME).unwrap();
    let spec = BandSpec::from_integers(2, 2, &EXAMPLES[0]).unwrap();
    let count = |n: u64| {
        let mut counter = OpCounter::default();
        det_in_counted(&f, &spec, n, Strategy::PolyMod, &mut counter).unwrap();
        counter.polymul
    };
    let (c20, c30) = (count(1 << 20), count(1 << 30));
    ensure(c30 as f64 <= AC6_COUNT_RATIO * c20 as f64, || format!("polymul counts {c20} -> {c30}"))?;
    let mut times: Vec<Duration> = (0..201)
        .map(|_| {
            let start = Instant::now();
            std::hint::black_box(det_in(&f, std::hint::black_box(&spec), 1 << 30, Strategy::Auto).unwrap());
            start.elapsed()
        })
        .collect();
    times.sort();
    let median = times[times.len() / 2];
    ensure(median < AC6_BUDGET, || format!("median evaluation at n=2^30 took {median:?}"))?;
    Ok(format!(
        "polymul(2^20)={c20}, polymul(2^30)={c30}, ratio {:.3}; median n=2^30 evaluation {median:.2?}",
        c30 as f64 / c20 as f64
    ))
}

fn ac7() -> Outcome {
    let f = RationalField;
    let n = 6;
    let target = penta_det(&f, &RootMultiset::new(&f, vec![(int(2), 2), (int(3), 1), (int(5), 1)]).unwrap(), &int(1), n)
        .unwrap();
    let mut diffs: Vec<BigRational> = Vec::new();
    for denom in [10i64, 100, 1000] {
        let eps = BigRational::new(1.into(), denom.into());
        let near = RootMultiset::new(&f, vec![(int(2), 1), (int(3), 1), (int(5), 1), (int(2) + eps, 1)]).unwrap();
        diffs.push((penta_det(&f, &near, &int(1), n).unwrap() - &target).abs());
    }
    ensure(diffs.windows(2).all(|w| w[1] < w[0]), || format!("differences {diffs:?}"))?;
    let shown: Vec<String> = diffs.iter().map(|d| format!("{:.3e}", rational_to_f64(d))).collect();
    Ok(format!("|Case I - Case II| = {}", shown.join(" > ")))
}

fn rational_to_f64(q: &BigRational) -> f64 {
    banddet::ScaledValue::from_rational(q).to_f64()
}

fn ac8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC8);
    let p = PrimeField::new(PRIME).unwrap();
    for trial in 0..100 {
        let spec = any_band(&mut rng, 1, 6);
        let k = spec.k().max(1);
        let at_k = rational_det(&spec, k as u64, Strategy::Auto);
        ensure(at_k == dense_det_bareiss(&spec.dense(k)), || format!("trial {trial}: n=k for {spec:?}"))?;
        let at_k_poly = rational_det(&spec, k as u64, Strategy::PolyMod);
        ensure(at_k_poly == at_k, || format!("trial {trial}: PolyMod at n=k for {spec:?}"))?;
        let n = rng.random_range(1..=40u64);
        let t = spec.transpose();
        ensure(rational_det(&spec, n, Strategy::Auto) == rational_det(&t, n, Strategy::Auto), || {
            format!("trial {trial}: transpose at n={n} for {spec:?}")
        })?;
        let big_n = rng.random_range(1..=1u64 << 50);
        ensure(det_in(&p, &spec, big_n, Strategy::Auto).unwrap().0 == det_in(&p, &t, big_n, Strategy::Auto).unwrap().0, || {
            format!("trial {trial}: transpose mod p at n={big_n}")
        })?;
        ensure(p.from_rational(&at_k).unwrap() == det_in(&p, &spec, k as u64, Strategy::Auto).unwrap().0, || {
            format!("trial {trial}: prime mode at n=k")
        })?;
    }
    Ok("n = k matches the oracle; transposed bands give identical determinants".into())
}

fn main() {
    let criteria: [(&str, &str, fn() -> Outcome); 8] = [
        ("AC1", "worked examples I-V, fast = closed form = Bareiss, n in 4..=30", ac1),
        ("AC2", "randomized oracle equivalence (fast, Bareiss, reduction chain)", ac2),
        ("AC3", "tridiagonal Lucas closed form and recurrence", ac3),
        ("AC4", "shifted determinant det(T_n - λI)", ac4),
        ("AC5", "PolyMod/Dense block equality and power/residue identity", ac5),
        ("AC6", "logarithmic scaling of the polynomial path", ac6),
        ("AC7", "Case I tends to Case II as roots merge", ac7),
        ("AC8", "n = k boundary and transpose invariance", ac8),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (id, title, run) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("[PASS] {id} {title}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {id} {title}: {why}");
            }
        }
    }
    println!("acceptance: {}/8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
