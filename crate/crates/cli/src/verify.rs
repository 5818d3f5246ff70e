//! `verify`: random bands, each determinant computed three ways.

use std::io::Write;

use banddet::oracle::{dense_det_bareiss, reduction_det};
use banddet::{det_in, BandSpec, BigRational, RationalField, Strategy};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{CliError, CliResult};
use crate::spec_io::spec_to_json;
use crate::{write_line, VerifyArgs};

const COEFF_BOUND: i64 = 9;

struct Trial {
    spec: BandSpec,
    n: usize,
    fast: BigRational,
    path: &'static str,
    dense: BigRational,
    chain: Option<BigRational>,
}

impl Trial {
    fn agrees(&self) -> bool {
        self.fast == self.dense && self.chain.as_ref().is_none_or(|c| *c == self.dense)
    }
}

fn nonzero(rng: &mut ChaCha8Rng) -> i64 {
    let v = rng.random_range(1..=COEFF_BOUND);
    if rng.random_bool(0.5) {
        -v
    } else {
        v
    }
}

/// Trial `t` only depends on `(seed, t)`, so results do not depend on the
/// thread count.
fn random_case(args: &VerifyArgs, trial: usize) -> (BandSpec, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    rng.set_stream(trial as u64);
    let k = rng.random_range(args.k_min..=args.k_max);
    let s = rng.random_range(0..=k);
    let mut coeffs: Vec<i64> = (0..=k).map(|_| rng.random_range(-COEFF_BOUND..=COEFF_BOUND)).collect();
    coeffs[s] = nonzero(&mut rng);
    coeffs[k] = nonzero(&mut rng);
    let spec = BandSpec::from_integers(s, k - s, &coeffs).expect("ends are nonzero");
    let n = rng.random_range(k.max(1)..=args.n_max.max(k.max(1)));
    (spec, n)
}

fn run_trial(args: &VerifyArgs, trial: usize) -> CliResult<Trial> {
    let f = RationalField;
    let (spec, n) = random_case(args, trial);
    let (mut fast, path) = det_in(&f, &spec, n as u64, Strategy::Auto)?;
    if args.sabotage && path.is_fast() {
        fast = -fast;
    }
    let dense = dense_det_bareiss(&spec.dense(n));
    // The chain needs a pivot a_s on the superdiagonal side.
    let chain = if spec.s() > 0 { Some(reduction_det(&f, &spec, n)?) } else { None };
    Ok(Trial { spec, n, fast, path: path.name(), dense, chain })
}

pub fn run_verify(args: &VerifyArgs, out: &mut impl Write) -> CliResult<()> {
    if args.k_min == 0 || args.k_min > args.k_max {
        return Err(CliError::usage("need 1 <= --k-min <= --k-max"));
    }
    let trials: Vec<Trial> = (0..args.trials).into_par_iter().map(|t| run_trial(args, t)).collect::<CliResult<_>>()?;
    let mut ok = 0;
    for (t, trial) in trials.iter().enumerate() {
        if trial.agrees() {
            ok += 1;
            continue;
        }
        let chain = trial.chain.as_ref().map_or_else(|| "-".to_string(), |c| c.to_string());
        write_line(
            out,
            &format!(
                "mismatch: trial={t} n={} spec={} fast={} ({}) bareiss={} chain={chain}",
                trial.n,
                spec_to_json(&trial.spec),
                trial.fast,
                trial.path,
                trial.dense
            ),
        )?;
    }
    write_line(out, &format!("{ok}/{} ok", args.trials))?;
    if ok == args.trials {
        Ok(())
    } else {
        Err(CliError::Mismatch(format!("{} of {} trials disagree", args.trials - ok, args.trials)))
    }
}
