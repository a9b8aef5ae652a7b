//! Coefficient file formats.
//!
//! Both formats list the coefficients in ascending order, leading
//! coefficient included:
//!
//! * JSON: `{"coeffs": [[re, im], ...]}`
//! * text: one coefficient per line, `re im`, whitespace separated. Blank
//!   lines and lines starting with `#` are skipped.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::GeneralPolynomial;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct CoeffFile {
    coeffs: Vec<[f64; 2]>,
}

pub fn parse_json(input: &str) -> Result<GeneralPolynomial> {
    let file: CoeffFile = serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))?;
    GeneralPolynomial::new(
        file.coeffs
            .into_iter()
            .map(|[re, im]| Complex64::new(re, im))
            .collect(),
    )
}

pub fn parse_text(input: &str) -> Result<GeneralPolynomial> {
    let mut coeffs = Vec::new();
    for (lineno, line) in input.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse(format!(
                "line {}: expected `re im`, got {:?}",
                lineno + 1,
                line
            )));
        }
        let parse = |s: &str| {
            s.parse::<f64>()
                .map_err(|e| Error::Parse(format!("line {}: {}: {:?}", lineno + 1, e, s)))
        };
        coeffs.push(Complex64::new(parse(fields[0])?, parse(fields[1])?));
    }
    GeneralPolynomial::new(coeffs)
}

/// Dispatches on the first non-blank character: `{` means JSON.
pub fn parse_auto(input: &str) -> Result<GeneralPolynomial> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

pub fn to_json(p: &GeneralPolynomial) -> String {
    let file = CoeffFile {
        coeffs: p.coeffs().iter().map(|c| [c.re, c.im]).collect(),
    };
    serde_json::to_string(&file).expect("coefficient file serializes")
}

pub fn to_text(p: &GeneralPolynomial) -> String {
    p.coeffs()
        .iter()
        .map(|c| format!("{:?} {:?}\n", c.re, c.im))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_and_text_agree() {
        let j = parse_json(r#"{"coeffs": [[2, 0], [0, 0], [1, 0], [1, 0]]}"#).unwrap();
        let t = parse_text("2 0\n0 0\n\n# comment\n1 0\n1.0 0.0\n").unwrap();
        assert_eq!(j, t);
        assert_eq!(j.degree(), 3);
        assert_eq!(parse_auto(&to_json(&j)).unwrap(), j);
        assert_eq!(parse_auto(&to_text(&j)).unwrap(), j);
    }

    #[test]
    fn complex_entries() {
        let p = parse_text("0.5 -1.25\n1 0\n").unwrap();
        assert_eq!(p.coeffs()[0], Complex64::new(0.5, -1.25));
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_text("1 0 3\n1 0\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_text("1 x\n1 0\n"), Err(Error::Parse(_))));
        assert!(matches!(
            parse_json("{\"coeffs\": [1, 2]}"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(parse_json("not json"), Err(Error::Parse(_))));
        assert_eq!(parse_text("1 0\n0 0\n"), Err(Error::LeadingCoefficientZero));
    }
}
