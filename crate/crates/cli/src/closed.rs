//! `closed`: Lucas-sequence determinants for tridiagonal bands and root
//! formulas for pentadiagonal ones.

use std::io::Write;

use banddet::closedform::{penta_case_of, penta_det, tridiag_det, RootMultiset};
use banddet::{companion, BandSpec, BigRational, Field, PrimeField, RationalField, ScalarMode, ScaledFloatField, Value};
use num_traits::{One, Zero};

use crate::error::{CliError, CliResult};
use crate::nlist::parse_n_list;
use crate::report::{approx_of, csv_escape, json_line, plain_line, value_string, Record};
use crate::spec_io::{parse_scalar, SpecJson};
use crate::{write_line, ClosedArgs, FormatArg};

/// `2:2,3,5` is the root 2 twice, then 3 and 5 once each.
pub fn parse_roots(text: &str) -> CliResult<Vec<(BigRational, u32)>> {
    text.split(',')
        .map(|item| {
            let (root, mult) = match item.split_once(':') {
                Some((r, m)) => {
                    let m = m.trim().parse::<u32>().map_err(|_| CliError::usage(format!("bad multiplicity in {item:?}")))?;
                    (r, m)
                }
                None => (item, 1),
            };
            Ok((parse_scalar(root)?, mult))
        })
        .collect()
}

/// Coefficients `c_0..c_{k-1}` of `∏ (x - λ)^m`, monic leading term dropped.
fn expand(roots: &[(BigRational, u32)]) -> Vec<BigRational> {
    let mut poly = vec![BigRational::one()];
    for (root, mult) in roots {
        for _ in 0..*mult {
            let mut next = vec![BigRational::zero(); poly.len() + 1];
            for (i, c) in poly.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * root;
            }
            poly = next;
        }
    }
    poly.pop();
    poly
}

fn check_roots(spec: &BandSpec, roots: &[(BigRational, u32)]) -> CliResult<()> {
    if spec.s() != 2 || spec.r() != 2 {
        return Err(CliError::InvalidSpec(format!(
            "root formulas need a pentadiagonal band (s = r = 2), got s = {}, r = {}",
            spec.s(),
            spec.r()
        )));
    }
    let chi = companion::charpoly(&RationalField, spec)?;
    let total: u32 = roots.iter().map(|(_, m)| m).sum();
    if total == 4 && expand(roots) != chi.coeffs() {
        let shown: Vec<String> = chi.coeffs().iter().map(|c| c.to_string()).collect();
        return Err(CliError::InvalidSpec(format!(
            "roots do not match ch_C(x) = x^4 + ({})x^3 + ({})x^2 + ({})x + ({})",
            shown[3], shown[2], shown[1], shown[0]
        )));
    }
    Ok(())
}

fn penta_value<F: Field>(f: &F, roots: &[(BigRational, u32)], c: &BigRational, n: u64) -> CliResult<(Value, String)> {
    let embedded = roots.iter().map(|(r, m)| Ok((f.from_rational(r)?, *m))).collect::<banddet::Result<Vec<_>>>()?;
    let set = RootMultiset::new(f, embedded)?;
    let case = penta_case_of(&set)?;
    let v = penta_det(f, &set, &f.from_rational(c)?, n)?;
    Ok((f.to_value(&v), case.name().to_string()))
}

fn tri_value<F: Field>(f: &F, spec: &BandSpec, n: u64) -> CliResult<Value> {
    Ok(f.to_value(&tridiag_det(f, spec, n)?))
}

pub fn run_closed(args: &ClosedArgs, out: &mut impl Write) -> CliResult<()> {
    let ns = parse_n_list(&args.n)?;
    let mode = args.mode.scalar_mode()?;
    let spec = if args.spec.is_given() { Some(args.spec.load()?) } else { None };
    let roots = args.roots.as_deref().map(parse_roots).transpose()?;
    let c = match (&spec, &args.c) {
        (Some(spec), _) => spec.coeffs().get(2).cloned().unwrap_or_else(BigRational::one),
        (None, Some(text)) => parse_scalar(text)?,
        (None, None) => BigRational::one(),
    };
    match (&spec, &roots) {
        (Some(spec), Some(roots)) => check_roots(spec, roots)?,
        (None, None) => return Err(CliError::usage("give a tridiagonal spec, or --roots for the pentadiagonal formulas")),
        _ => {}
    }
    if args.mode.format == FormatArg::Csv {
        write_line(out, "n,value,path,mode")?;
    }
    for &n in &ns {
        let (value, case) = match (&roots, &spec) {
            (Some(roots), _) => {
                let (v, case) = match mode {
                    ScalarMode::ExactRational => penta_value(&RationalField, roots, &c, n)?,
                    ScalarMode::ScaledFloat => penta_value(&ScaledFloatField, roots, &c, n)?,
                    ScalarMode::PrimeField(p) => penta_value(&PrimeField::new(p)?, roots, &c, n)?,
                };
                (v, Some(case))
            }
            (None, Some(spec)) => {
                let v = match mode {
                    ScalarMode::ExactRational => tri_value(&RationalField, spec, n)?,
                    ScalarMode::ScaledFloat => tri_value(&ScaledFloatField, spec, n)?,
                    ScalarMode::PrimeField(p) => tri_value(&PrimeField::new(p)?, spec, n)?,
                };
                (v, None)
            }
            (None, None) => unreachable!("rejected above"),
        };
        let rec = Record {
            spec: spec.as_ref().map(SpecJson::from_spec),
            n,
            lambda: None,
            mode: mode.name().to_string(),
            prime: match mode {
                ScalarMode::PrimeField(p) => Some(p),
                _ => None,
            },
            strategy: "closed".into(),
            path: "ClosedForm".into(),
            case,
            value: value_string(&value),
            approx: approx_of(&value),
        };
        let line = match args.mode.format {
            FormatArg::Plain => plain_line(&rec, ns.len() > 1),
            FormatArg::Json => json_line(&rec),
            FormatArg::Csv => format!("{n},{},{},{}", csv_escape(&rec.value), rec.path, rec.mode),
        };
        write_line(out, &line)?;
    }
    Ok(())
}
