//! Problem documents: a JSON schema with a canonical writer, and a CSV
//! importer for spreadsheet users.
//!
//! JSON layout:
//!
//! ```json
//! {
//!   "alternatives": ["A1", "A2"],
//!   "attributes": [{"name": "O1", "kind": "benefit"}],
//!   "weights": {"scalar": [1.0]},
//!   "matrix": [[[0.6, 0.3]], [[0.5, 0.2]]]
//! }
//! ```
//!
//! `weights` may instead be `{"ifv": [[mu, nu], ...]}`.

use std::fmt::Write as _;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::ifv::Ifv;
use crate::topsis::{Attribute, AttributeKind, DecisionProblem, Weights};

/// A parse or validation failure with a 1-based source position.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    alternatives: Vec<String>,
    attributes: Vec<Attribute>,
    weights: Weights,
    matrix: Vec<Vec<Ifv>>,
}

/// 1-based position of the first `"key"` in `text`, or `(1, 1)`.
fn locate_key(text: &str, key: &str) -> (usize, usize) {
    let needle = format!("\"{key}\"");
    text.lines()
        .enumerate()
        .find_map(|(i, l)| l.find(&needle).map(|c| (i + 1, l[..c].chars().count() + 1)))
        .unwrap_or((1, 1))
}

/// Parses and validates a JSON problem document.
///
/// Syntax and value errors point at the offending token; structural errors
/// (dimension or weight problems) point at the key they concern.
pub fn parse_problem_json(text: &str) -> Result<DecisionProblem, ParseError> {
    let raw: RawProblem = serde_json::from_str(text).map_err(|e| {
        let message = e.to_string();
        // serde_json appends " at line L column C"; keep the bare message
        let message = match message.rfind(" at line ") {
            Some(k) => message[..k].to_string(),
            None => message,
        };
        ParseError {
            line: e.line(),
            column: e.column(),
            message,
        }
    })?;
    let key = if raw.alternatives.len() < 2 {
        "alternatives"
    } else if raw.attributes.is_empty() {
        "attributes"
    } else {
        "matrix"
    };
    DecisionProblem::new(raw.alternatives, raw.attributes, raw.matrix, raw.weights).map_err(|e| {
        let key = if matches!(e, Error::Weight(_)) { "weights" } else { key };
        let (line, column) = locate_key(text, key);
        ParseError {
            line,
            column,
            message: e.to_string(),
        }
    })
}

fn num(x: f64) -> String {
    serde_json::to_string(&x).expect("finite float")
}

fn text(s: &str) -> String {
    serde_json::to_string(s).expect("string")
}

fn pair(v: &Ifv) -> String {
    format!("[{}, {}]", num(v.mu()), num(v.nu()))
}

/// Canonical JSON rendering. Re-parsing the output yields an identical
/// problem, and rendering that again yields identical bytes.
pub fn write_problem_json(problem: &DecisionProblem) -> String {
    let mut out = String::from("{\n");
    let alts: Vec<String> = problem.alternatives().iter().map(|a| text(a)).collect();
    let _ = writeln!(out, "  \"alternatives\": [{}],", alts.join(", "));
    out.push_str("  \"attributes\": [\n");
    let n_attr = problem.attributes().len();
    for (j, a) in problem.attributes().iter().enumerate() {
        let kind = match a.kind {
            AttributeKind::Benefit => "benefit",
            AttributeKind::Cost => "cost",
        };
        let sep = if j + 1 < n_attr { "," } else { "" };
        let _ = writeln!(out, "    {{\"name\": {}, \"kind\": \"{kind}\"}}{sep}", text(&a.name));
    }
    out.push_str("  ],\n");
    let weights = match problem.weights() {
        Weights::Scalar(w) => {
            let w: Vec<String> = w.iter().map(|&x| num(x)).collect();
            format!("{{\"scalar\": [{}]}}", w.join(", "))
        }
        Weights::Ifv(w) => {
            let w: Vec<String> = w.iter().map(pair).collect();
            format!("{{\"ifv\": [{}]}}", w.join(", "))
        }
    };
    let _ = writeln!(out, "  \"weights\": {weights},");
    out.push_str("  \"matrix\": [\n");
    let n = problem.matrix().len();
    for (i, row) in problem.matrix().iter().enumerate() {
        let cells: Vec<String> = row.iter().map(pair).collect();
        let sep = if i + 1 < n { "," } else { "" };
        let _ = writeln!(out, "    [{}]{sep}", cells.join(", "));
    }
    out.push_str("  ]\n}\n");
    out
}

fn csv_error(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

fn parse_cell(cell: &str, line: usize, column: usize) -> Result<Ifv, ParseError> {
    let (mu, nu) = cell
        .split_once(',')
        .ok_or_else(|| csv_error(line, column, format!("expected \"mu,nu\", got {cell:?}")))?;
    let parse = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|e| csv_error(line, column, format!("bad number {s:?}: {e}")))
    };
    Ifv::new(parse(mu)?, parse(nu)?).map_err(|e| csv_error(line, column, e.to_string()))
}

/// Imports a CSV matrix.
///
/// The header row is `alternative,<attribute names...>`. Optional rows
/// whose first cell is `kind` (values `benefit`/`cost`) and a required row
/// whose first cell is `weight` (plain numbers, or quoted `"mu,nu"` pairs
/// for IFV weights) may appear anywhere. Every other row is an alternative
/// whose cells are quoted `"mu,nu"` pairs.
pub fn parse_problem_csv(text: &str) -> Result<DecisionProblem, ParseError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| csv_error(1, 1, e.to_string()))?
        .clone();
    if headers.len() < 2 {
        return Err(csv_error(1, 1, "header needs an alternative column and at least one attribute"));
    }
    let names: Vec<String> = headers.iter().skip(1).map(str::to_string).collect();
    let mut kinds = vec![AttributeKind::Benefit; names.len()];
    let mut weights = None;
    let mut alternatives = Vec::new();
    let mut matrix = Vec::new();

    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            csv_error(line, 1, e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        let cells: Vec<&str> = record.iter().skip(1).collect();
        if cells.len() != names.len() {
            return Err(csv_error(
                line,
                1,
                format!("expected {} attribute cells, got {}", names.len(), cells.len()),
            ));
        }
        match &record[0] {
            "kind" => {
                for (j, c) in cells.iter().enumerate() {
                    kinds[j] = match *c {
                        "benefit" => AttributeKind::Benefit,
                        "cost" => AttributeKind::Cost,
                        other => {
                            return Err(csv_error(line, j + 2, format!("unknown attribute kind {other:?}")))
                        }
                    };
                }
            }
            "weight" => {
                let w = if cells.iter().any(|c| c.contains(',')) {
                    Weights::Ifv(
                        cells
                            .iter()
                            .enumerate()
                            .map(|(j, c)| parse_cell(c, line, j + 2))
                            .collect::<Result<_, _>>()?,
                    )
                } else {
                    Weights::Scalar(
                        cells
                            .iter()
                            .enumerate()
                            .map(|(j, c)| {
                                c.parse::<f64>()
                                    .map_err(|e| csv_error(line, j + 2, format!("bad weight {c:?}: {e}")))
                            })
                            .collect::<Result<_, _>>()?,
                    )
                };
                weights = Some((w, line));
            }
            name => {
                alternatives.push(name.to_string());
                matrix.push(
                    cells
                        .iter()
                        .enumerate()
                        .map(|(j, c)| parse_cell(c, line, j + 2))
                        .collect::<Result<Vec<_>, _>>()?,
                );
            }
        }
    }
    let (weights, weight_line) = weights.ok_or_else(|| csv_error(1, 1, "missing `weight` row"))?;
    let attributes = names
        .into_iter()
        .zip(kinds)
        .map(|(name, kind)| Attribute { name, kind })
        .collect();
    DecisionProblem::new(alternatives, attributes, matrix, weights).map_err(|e| {
        let line = if matches!(e, Error::Weight(_)) { weight_line } else { 1 };
        csv_error(line, 1, e.to_string())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const DOC: &str = r#"{
  "alternatives": ["x", "y"],
  "attributes": [{"name": "q", "kind": "benefit"}, {"name": "c", "kind": "cost"}],
  "weights": {"scalar": [0.4, 0.6]},
  "matrix": [[[0.6, 0.3], [0.5, 0.2]], [[0.1, 0.8], [0.0, 1.0]]]
}"#;

    #[test]
    fn parses_and_round_trips() {
        let p = parse_problem_json(DOC).unwrap();
        assert_eq!(p.attributes()[1].kind, AttributeKind::Cost);
        let text = write_problem_json(&p);
        let q = parse_problem_json(&text).unwrap();
        assert_eq!(p, q);
        assert_eq!(write_problem_json(&q), text);
    }

    #[test]
    fn located_errors() {
        let bad = DOC.replace("[0.4, 0.6]", "[0.4, 0.5]");
        let e = parse_problem_json(&bad).unwrap_err();
        assert!(e.message.contains("weights sum ≠ 1"), "{e}");
        assert_eq!((e.line, e.column), (4, 3));

        let bad = DOC.replace("[0.1, 0.8]", "[0.7, 0.8]");
        let e = parse_problem_json(&bad).unwrap_err();
        assert_eq!(e.line, 5);
        assert!(e.message.contains("mu + nu"), "{e}");

        let e = parse_problem_json("{ \"alternatives\": [").unwrap_err();
        assert_eq!(e.line, 1);
    }

    #[test]
    fn csv_import() {
        let csv = "alternative,q,c\nkind,benefit,cost\nweight,0.4,0.6\nx,\"0.6,0.3\",\"0.5,0.2\"\ny,\"0.1,0.8\",\"0,1\"\n";
        let p = parse_problem_csv(csv).unwrap();
        assert_eq!(p, parse_problem_json(DOC).unwrap());

        let ifv_w = "alternative,q\nweight,\"1,0\"\nx,\"0.6,0.3\"\ny,\"0.1,0.8\"\n";
        let p = parse_problem_csv(ifv_w).unwrap();
        assert_eq!(p.weights(), &Weights::Ifv(vec![Ifv::ONE]));

        let bad = "alternative,q\nweight,1\nx,\"0.6,0.7\"\ny,\"0.1,0.8\"\n";
        let e = parse_problem_csv(bad).unwrap_err();
        assert_eq!((e.line, e.column), (3, 2));
        let bad = "alternative,q\nweight,0.5\nx,\"0.6,0.3\"\ny,\"0.1,0.8\"\n";
        assert_eq!(parse_problem_csv(bad).unwrap_err().line, 2);
    }
}
