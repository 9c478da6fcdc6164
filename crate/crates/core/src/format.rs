//! Exact text encodings: rationals as `p/q` strings, triangles as JSON or CSV.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{parse, render, Rational};
use crate::report::IdentityReport;
use crate::trimat::TriMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleDoc {
    pub name: String,
    pub order: usize,
    pub rows: Vec<Vec<String>>,
}

fn render_rows(rows: &[Vec<Rational>]) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.iter().map(render).collect()).collect()
}

fn parse_rows(rows: &[Vec<String>]) -> Result<Vec<Vec<Rational>>> {
    rows.iter().map(|r| r.iter().map(|s| parse(s)).collect()).collect()
}

/// Any ragged array of rationals (triangles, Seidel arrays, AT corners).
pub fn rows_to_json(name: &str, rows: &[Vec<Rational>]) -> Result<String> {
    let doc = TriangleDoc { name: name.to_string(), order: rows.len(), rows: render_rows(rows) };
    serde_json::to_string(&doc).map_err(|e| Error::Format(e.to_string()))
}

pub fn triangle_to_json(name: &str, m: &TriMatrix) -> Result<String> {
    rows_to_json(name, m.rows())
}

pub fn rows_from_json(text: &str) -> Result<(String, Vec<Vec<Rational>>)> {
    let doc: TriangleDoc = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    if doc.order != doc.rows.len() {
        return Err(Error::Format(format!("order {} but {} rows", doc.order, doc.rows.len())));
    }
    Ok((doc.name, parse_rows(&doc.rows)?))
}

pub fn triangle_from_json(text: &str) -> Result<(String, TriMatrix)> {
    let (name, rows) = rows_from_json(text)?;
    Ok((name, TriMatrix::from_rows(rows)?))
}

/// One line per row, entries separated by commas, no header.
pub fn rows_to_csv(rows: &[Vec<Rational>]) -> Result<String> {
    let mut w = csv::WriterBuilder::new().flexible(true).has_headers(false).from_writer(Vec::new());
    for row in rows {
        w.write_record(row.iter().map(render)).map_err(|e| Error::Format(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Format(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Format(e.to_string()))
}

pub fn rows_from_csv(text: &str) -> Result<Vec<Vec<Rational>>> {
    let mut r = csv::ReaderBuilder::new().flexible(true).has_headers(false).from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for record in r.records() {
        let record = record.map_err(|e| Error::Format(e.to_string()))?;
        rows.push(record.iter().map(|s| parse(s.trim())).collect::<Result<Vec<_>>>()?);
    }
    Ok(rows)
}

pub fn triangle_from_csv(text: &str) -> Result<TriMatrix> {
    Ok(TriMatrix::from_rows(rows_from_csv(text)?)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceDoc {
    pub name: String,
    pub terms: Vec<String>,
}

pub fn sequence_to_json(name: &str, terms: &[Rational]) -> Result<String> {
    let doc = SequenceDoc { name: name.to_string(), terms: terms.iter().map(render).collect() };
    serde_json::to_string(&doc).map_err(|e| Error::Format(e.to_string()))
}

pub fn sequence_from_json(text: &str) -> Result<(String, Vec<Rational>)> {
    let doc: SequenceDoc = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    Ok((doc.name, doc.terms.iter().map(|s| parse(s)).collect::<Result<_>>()?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleDoc {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub id: String,
    pub depth: usize,
    pub pass: bool,
    pub cases: usize,
    pub counterexample: Option<CounterexampleDoc>,
}

impl From<&IdentityReport> for ReportDoc {
    fn from(r: &IdentityReport) -> Self {
        ReportDoc {
            id: r.id.clone(),
            depth: r.depth,
            pass: r.pass,
            cases: r.cases,
            counterexample: r.counterexample.as_ref().map(|c| CounterexampleDoc {
                n: c.n,
                k: c.k,
                lhs: c.lhs.to_string(),
                rhs: c.rhs.to_string(),
            }),
        }
    }
}

pub fn reports_to_json(reports: &[IdentityReport]) -> Result<String> {
    let docs: Vec<ReportDoc> = reports.iter().map(ReportDoc::from).collect();
    serde_json::to_string_pretty(&docs).map_err(|e| Error::Format(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    #[test]
    fn json_schema() {
        let m = TriMatrix::from_rows(vec![vec![int(1)], vec![frac(-1, 4), frac(3, 2)]]).unwrap();
        let text = triangle_to_json("B", &m).unwrap();
        assert_eq!(text, r#"{"name":"B","order":2,"rows":[["1"],["-1/4","3/2"]]}"#);
        assert_eq!(triangle_from_json(&text).unwrap(), ("B".to_string(), m));
    }

    #[test]
    fn csv_layout() {
        let m = TriMatrix::from_rows(vec![vec![int(1)], vec![frac(-1, 4), frac(3, 2)]]).unwrap();
        let text = rows_to_csv(m.rows()).unwrap();
        assert_eq!(text, "1\n-1/4,3/2\n");
        assert_eq!(triangle_from_csv(&text).unwrap(), m);
    }

    #[test]
    fn malformed_inputs() {
        assert!(triangle_from_json(r#"{"name":"x","order":2,"rows":[["1"]]}"#).is_err());
        assert!(triangle_from_json(r#"{"name":"x","order":1,"rows":[["1/0"]]}"#).is_err());
        assert!(triangle_from_csv("1,2\n").is_err());
        assert!(rows_from_csv("1\n0.5\n").is_err());
    }

    #[test]
    fn sequence_round_trip() {
        let terms = vec![int(1), frac(-1, 2), frac(1, 6)];
        let text = sequence_to_json("bernoulli", &terms).unwrap();
        assert_eq!(sequence_from_json(&text).unwrap(), ("bernoulli".to_string(), terms));
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-10_000i64..10_000, 1i64..500).prop_map(|(n, d)| frac(n, d))
    }

    fn arb_triangle() -> impl Strategy<Value = TriMatrix> {
        (1usize..7).prop_flat_map(|n| {
            proptest::collection::vec(arb_rational(), n * (n + 1) / 2).prop_map(move |flat| {
                let mut it = flat.into_iter();
                let rows = (0..n).map(|i| it.by_ref().take(i + 1).collect()).collect();
                TriMatrix::from_rows(rows).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn json_round_trip(m in arb_triangle()) {
            let text = triangle_to_json("m", &m).unwrap();
            prop_assert_eq!(triangle_from_json(&text).unwrap().1, m);
        }

        #[test]
        fn csv_round_trip(m in arb_triangle()) {
            let text = rows_to_csv(m.rows()).unwrap();
            prop_assert_eq!(triangle_from_csv(&text).unwrap(), m);
        }
    }
}
