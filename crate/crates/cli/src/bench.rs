//! `bench`: median wall time and squaring counts in a prime field, as CSV.

use std::io::Write;
use std::time::{Duration, Instant};

use banddet::detengine::det_in_counted;
use banddet::{BandSpec, OpCounter, PrimeField, Strategy};

use crate::error::{CliError, CliResult};
use crate::nlist::parse_n_list;
use crate::{write_line, BenchArgs, BenchStrategy};

/// Pentadiagonal band with `ch_C(x) = (x-2)(x-3)(x-5)(x-7)`.
const DEFAULT_PENTA: [i64; 5] = [101, -17, 1, -247, 210];

/// Built-in band of bandwidth `k`: `s = ⌈k/2⌉`, coefficients `1, 2, …`.
fn builtin(k: usize) -> CliResult<BandSpec> {
    if k == 0 {
        return Err(CliError::usage("--k must be at least 1"));
    }
    if k == 4 {
        return Ok(BandSpec::from_integers(2, 2, &DEFAULT_PENTA)?);
    }
    let coeffs: Vec<i64> = (1..=k as i64 + 1).collect();
    Ok(BandSpec::from_integers(k.div_ceil(2), k / 2, &coeffs)?)
}

fn median(mut xs: Vec<Duration>) -> Duration {
    xs.sort();
    xs[xs.len() / 2]
}

pub fn run_bench(args: &BenchArgs, out: &mut impl Write) -> CliResult<()> {
    let spec = if args.spec.is_given() { args.spec.load()? } else { builtin(args.k)? };
    let ns = parse_n_list(&args.n)?;
    if args.reps == 0 {
        return Err(CliError::usage("--reps must be at least 1"));
    }
    let f = PrimeField::new(args.prime)?;
    let strategies: &[(Strategy, &str)] = match args.strategy {
        BenchStrategy::All => &[(Strategy::Dense, "dense"), (Strategy::PolyMod, "polymod")],
        BenchStrategy::Dense => &[(Strategy::Dense, "dense")],
        BenchStrategy::Polymod => &[(Strategy::PolyMod, "polymod")],
    };
    write_line(out, "n,strategy,median_ns,polymul_count")?;
    for &n in &ns {
        for &(strategy, name) in strategies {
            let mut counter = OpCounter::default();
            det_in_counted(&f, &spec, n, strategy, &mut counter)?;
            let times = (0..args.reps)
                .map(|_| {
                    let start = Instant::now();
                    let r = det_in_counted(&f, &spec, n, strategy, &mut OpCounter::default());
                    let elapsed = start.elapsed();
                    std::hint::black_box(r).map(|_| elapsed)
                })
                .collect::<banddet::Result<Vec<_>>>()?;
            write_line(out, &format!("{n},{name},{},{}", median(times).as_nanos(), counter.polymul))?;
        }
    }
    Ok(())
}
