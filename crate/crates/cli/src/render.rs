use genocchi::format;
use genocchi::rational::render;
use genocchi::{Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

/// Right-aligned columns; `mark(i, j)` cells are wrapped in brackets.
pub fn table(rows: &[Vec<Rational>], mark: impl Fn(usize, usize) -> bool) -> String {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, x)| if mark(i, j) { format!("[{}]", render(x)) } else { render(x) })
                .collect()
        })
        .collect();
    let cols = cells.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| cells.iter().filter_map(|r| r.get(j)).map(String::len).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn rows(name: &str, rows: &[Vec<Rational>], fmt: OutputFormat, mark: impl Fn(usize, usize) -> bool) -> Result<String> {
    match fmt {
        OutputFormat::Table => Ok(table(rows, mark)),
        OutputFormat::Csv => format::rows_to_csv(rows),
        OutputFormat::Json => Ok(format::rows_to_json(name, rows)? + "\n"),
    }
}

pub fn sequence(name: &str, terms: &[Rational], fmt: OutputFormat) -> Result<String> {
    let strs: Vec<String> = terms.iter().map(render).collect();
    Ok(match fmt {
        OutputFormat::Table => strs.join(" ") + "\n",
        OutputFormat::Csv => strs.join(",") + "\n",
        OutputFormat::Json => format::sequence_to_json(name, terms)? + "\n",
    })
}
