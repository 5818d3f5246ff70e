//! Band specs from flags or JSON files: `{"s": 1, "r": 1, "coeffs": ["2", "1", "1"]}`.

use std::path::Path;

use banddet::scalar::parse_rational;
use banddet::{BandSpec, BigRational};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecJson {
    pub s: usize,
    pub r: usize,
    pub coeffs: Vec<String>,
}

impl SpecJson {
    pub fn from_spec(spec: &BandSpec) -> Self {
        SpecJson { s: spec.s(), r: spec.r(), coeffs: spec.coeffs().iter().map(|q| q.to_string()).collect() }
    }

    pub fn to_spec(&self) -> CliResult<BandSpec> {
        let coeffs = self.coeffs.iter().map(|c| parse_scalar(c)).collect::<CliResult<Vec<_>>>()?;
        Ok(BandSpec::new(self.s, self.r, coeffs)?)
    }
}

pub fn parse_scalar(text: &str) -> CliResult<BigRational> {
    parse_rational(text).map_err(|e| CliError::usage(e.to_string()))
}

pub fn parse_scalar_list(text: &str) -> CliResult<Vec<BigRational>> {
    text.split(',').map(parse_scalar).collect()
}

pub fn spec_to_json(spec: &BandSpec) -> String {
    serde_json::to_string(&SpecJson::from_spec(spec)).expect("spec serializes")
}

pub fn read_spec_file(path: &Path) -> CliResult<BandSpec> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    let json: SpecJson = serde_json::from_str(&text)
        .map_err(|e| CliError::usage(format!("cannot parse {}: {e}", path.display())))?;
    json.to_spec()
}

pub fn spec_from_flags(s: Option<usize>, r: Option<usize>, coeffs: Option<&str>) -> CliResult<BandSpec> {
    match (s, r, coeffs) {
        (Some(s), Some(r), Some(c)) => Ok(BandSpec::new(s, r, parse_scalar_list(c)?)?),
        _ => Err(CliError::usage("give either --spec FILE or all of --s, --r and --coeffs")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let spec = spec_from_flags(Some(1), Some(2), Some("1/2,-3,4.25,7")).unwrap();
        let json = spec_to_json(&spec);
        assert_eq!(json, r#"{"s":1,"r":2,"coeffs":["1/2","-3","17/4","7"]}"#);
        let back: SpecJson = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_spec().unwrap(), spec);
    }

    #[test]
    fn invalid_specs_map_to_exit_two() {
        assert_eq!(spec_from_flags(Some(1), Some(1), Some("1,0,1")).unwrap_err().code(), 2);
        assert_eq!(spec_from_flags(Some(1), Some(1), Some("1,2")).unwrap_err().code(), 2);
        assert_eq!(spec_from_flags(Some(1), Some(1), Some("1,x,2")).unwrap_err().code(), 1);
        assert_eq!(spec_from_flags(None, Some(1), Some("1,2,3")).unwrap_err().code(), 1);
    }
}
