//! JSON documents written by `table` and `matrix`, and the seed-file reader.

use degenerate_seidel::algebra::TermRecord;
use degenerate_seidel::{BiPoly, SequenceKind};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Values {
    Numbers,
    Polynomials,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub n: usize,
    pub poly: BiPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub kind: SequenceKind,
    pub n_max: usize,
    pub values: Values,
    /// The rational substituted for `λ`, when any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    pub entries: Vec<TableEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixEntry {
    pub k: usize,
    pub n: usize,
    pub poly: BiPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    /// Family name of the seed, or `custom` for a seed file.
    pub kind: String,
    pub n_max: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    pub entries: Vec<MatrixEntry>,
}

/// Pretty JSON with a trailing newline; the only serializer used for output.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents always serialize");
    s.push('\n');
    s
}

/// Reads an initial sequence from JSON.
///
/// Accepts either a bare array of polynomials (each a list of term records)
/// or a document with an `entries` array whose items carry `n` and `poly`,
/// such as the output of `table --polynomials --format json`. Errors name the
/// line and column for syntax problems, the entry and term otherwise.
pub fn parse_seed_file(text: &str) -> Result<Vec<BiPoly>, String> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| format!("line {}, column {}: {e}", e.line(), e.column()))?;
    match value {
        Value::Array(rows) => rows
            .into_iter()
            .enumerate()
            .map(|(i, row)| parse_poly(row, i))
            .collect(),
        Value::Object(mut obj) => {
            let Some(Value::Array(entries)) = obj.remove("entries") else {
                return Err(
                    "expected an array of polynomials or an object with an \"entries\" array"
                        .into(),
                );
            };
            entries
                .into_iter()
                .enumerate()
                .map(|(i, entry)| {
                    let Value::Object(mut entry) = entry else {
                        return Err(format!("entry {i}: expected an object"));
                    };
                    match entry.get("n").and_then(Value::as_u64) {
                        Some(n) if n == i as u64 => {}
                        Some(n) => return Err(format!("entry {i}: index n = {n}, expected {i}")),
                        None => return Err(format!("entry {i}: missing or invalid \"n\"")),
                    }
                    let poly = entry
                        .remove("poly")
                        .ok_or_else(|| format!("entry {i}: missing \"poly\""))?;
                    parse_poly(poly, i)
                })
                .collect()
        }
        _ => Err("expected an array of polynomials or an object with an \"entries\" array".into()),
    }
}

fn parse_poly(value: Value, entry: usize) -> Result<BiPoly, String> {
    let Value::Array(terms) = value else {
        return Err(format!(
            "entry {entry}: polynomial must be an array of terms"
        ));
    };
    let records = terms
        .into_iter()
        .enumerate()
        .map(|(j, t)| {
            serde_json::from_value::<TermRecord>(t)
                .map_err(|e| format!("entry {entry}, term {j}: {e}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    BiPoly::from_records(&records).map_err(|e| format!("entry {entry}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bare_array_seed() {
        let text = r#"[[{"x_deg":0,"lambda_deg":0,"num":"1","den":"1"}], [], [{"x_deg":1,"lambda_deg":0,"num":"1","den":"2"}]]"#;
        let seed = parse_seed_file(text).unwrap();
        assert_eq!(seed.len(), 3);
        assert!(seed[1].is_zero());
        assert_eq!(seed[2], "x/2".parse().unwrap());
    }

    #[test]
    fn document_seed() {
        let text = r#"{"entries":[{"n":0,"poly":[]},{"n":1,"poly":[{"x_deg":0,"lambda_deg":1,"num":"-3","den":"2"}]}]}"#;
        let seed = parse_seed_file(text).unwrap();
        assert_eq!(seed[1], "-(3/2)λ".parse().unwrap());
    }

    #[test]
    fn diagnostics_locate_the_problem() {
        let err = parse_seed_file("[\n[{\"x_deg\":0,}]\n]").unwrap_err();
        assert!(err.starts_with("line 2"), "{err}");

        let err = parse_seed_file(r#"[[], [{"x_deg":0,"lambda_deg":0,"num":"1","den":"0"}]]"#)
            .unwrap_err();
        assert!(
            err.contains("entry 1") && err.contains("zero denominator"),
            "{err}"
        );

        let err = parse_seed_file(r#"[[{"x_deg":0,"lambda_deg":0,"num":"1"}]]"#).unwrap_err();
        assert!(err.contains("entry 0, term 0"), "{err}");

        let err = parse_seed_file(r#"{"entries":[{"n":1,"poly":[]}]}"#).unwrap_err();
        assert!(err.contains("expected 0"), "{err}");

        assert!(parse_seed_file("42").is_err());
    }
}
