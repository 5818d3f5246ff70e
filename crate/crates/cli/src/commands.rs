//! `det` and `charpoly`.

use std::io::Write;

use banddet::{det, det_shifted, BandSpec, BigRational, DetResult, ScalarMode};

use crate::error::CliResult;
use crate::nlist::parse_n_list;
use crate::report::{approx_of, csv_escape, json_line, plain_line, value_string, Record};
use crate::spec_io::{parse_scalar_list, SpecJson};
use crate::{write_line, CharpolyArgs, DetArgs, FormatArg, ModeArgs};

const RATIONAL_WARN_N: u64 = 10_000;

pub fn warn_if_huge(mode: ScalarMode, ns: &[u64]) {
    if mode == ScalarMode::ExactRational {
        if let Some(n) = ns.iter().find(|&&n| n > RATIONAL_WARN_N) {
            eprintln!(
                "warning: n = {n} in rational mode; exact values grow linearly in n digits. \
                 Consider --mode prime or --mode float."
            );
        }
    }
}

pub fn record(spec: Option<&BandSpec>, lambda: Option<&BigRational>, res: &DetResult, mode: &ModeArgs) -> Record {
    Record {
        spec: spec.map(SpecJson::from_spec),
        n: res.n,
        lambda: lambda.map(|l| l.to_string()),
        mode: res.mode.name().to_string(),
        prime: match res.mode {
            ScalarMode::PrimeField(p) => Some(p),
            _ => None,
        },
        strategy: mode.strategy.name().to_string(),
        path: res.path.name().to_string(),
        case: None,
        value: value_string(&res.value),
        approx: approx_of(&res.value),
    }
}

pub fn run_det(args: &DetArgs, out: &mut impl Write) -> CliResult<()> {
    let spec = args.spec.load()?;
    let ns = parse_n_list(&args.n)?;
    let mode = args.mode.scalar_mode()?;
    warn_if_huge(mode, &ns);
    if args.mode.format == FormatArg::Csv {
        write_line(out, "n,value,path,mode")?;
    }
    for &n in &ns {
        let res = det(&spec, n, args.mode.strategy.strategy(), mode)?;
        let rec = record(Some(&spec), None, &res, &args.mode);
        let line = match args.mode.format {
            FormatArg::Plain => plain_line(&rec, ns.len() > 1),
            FormatArg::Json => json_line(&rec),
            FormatArg::Csv => format!("{},{},{},{}", n, csv_escape(&rec.value), rec.path, rec.mode),
        };
        write_line(out, &line)?;
    }
    Ok(())
}

pub fn run_charpoly(args: &CharpolyArgs, out: &mut impl Write) -> CliResult<()> {
    let spec = args.spec.load()?;
    let ns = parse_n_list(&args.n)?;
    let lambdas = parse_scalar_list(&args.lambda)?;
    let mode = args.mode.scalar_mode()?;
    warn_if_huge(mode, &ns);
    let multi_n = ns.len() > 1;
    if args.mode.format == FormatArg::Csv {
        write_line(out, if multi_n { "n,lambda,value" } else { "lambda,value" })?;
    }
    for &n in &ns {
        for lambda in &lambdas {
            let res = det_shifted(&spec, n, lambda, args.mode.strategy.strategy(), mode)?;
            let rec = record(Some(&spec), Some(lambda), &res, &args.mode);
            let line = match args.mode.format {
                FormatArg::Plain if !multi_n && lambdas.len() == 1 => plain_line(&rec, false),
                FormatArg::Plain if !multi_n => format!("{lambda} {}", plain_line(&rec, false)),
                FormatArg::Plain => plain_line(&rec, true),
                FormatArg::Json => json_line(&rec),
                FormatArg::Csv if multi_n => format!("{n},{},{}", csv_escape(&lambda.to_string()), csv_escape(&rec.value)),
                FormatArg::Csv => format!("{},{}", csv_escape(&lambda.to_string()), csv_escape(&rec.value)),
            };
            write_line(out, &line)?;
        }
    }
    Ok(())
}
