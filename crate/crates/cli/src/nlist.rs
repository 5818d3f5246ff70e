//! `--n` values: a single size, a comma list, or a range `A..B` / `A..=B`.

use crate::error::{CliError, CliResult};

pub fn parse_n_list(text: &str) -> CliResult<Vec<u64>> {
    let text = text.trim();
    let bad = || CliError::usage(format!("cannot parse n {text:?}: expected N, N1,N2,..., A..B or A..=B"));
    let values: Vec<u64> = if let Some((a, b)) = text.split_once("..=") {
        let (a, b) = (parse_one(a).ok_or_else(bad)?, parse_one(b).ok_or_else(bad)?);
        if a > b {
            return Err(CliError::usage(format!("empty n range {text:?}")));
        }
        (a..=b).collect()
    } else if let Some((a, b)) = text.split_once("..") {
        let (a, b) = (parse_one(a).ok_or_else(bad)?, parse_one(b).ok_or_else(bad)?);
        if a >= b {
            return Err(CliError::usage(format!("empty n range {text:?}")));
        }
        (a..b).collect()
    } else {
        text.split(',').map(|t| parse_one(t).ok_or_else(bad)).collect::<CliResult<_>>()?
    };
    if values.contains(&0) {
        return Err(CliError::usage("n must be at least 1"));
    }
    if values.len() > 1_000_000 {
        return Err(CliError::usage("n range has more than 10^6 entries"));
    }
    Ok(values)
}

/// Accepts plain integers and powers written `2^30`.
fn parse_one(t: &str) -> Option<u64> {
    let t = t.trim().replace('_', "");
    match t.split_once('^') {
        Some((b, e)) => b.parse::<u64>().ok()?.checked_pow(e.parse().ok()?),
        None => t.parse().ok(),
    }
    .filter(|&n| n <= i64::MAX as u64)
}
