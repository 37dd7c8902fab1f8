//! Text and JSON encodings of tables and orders.
//!
//! Table text format: a line holding `n`, then `n` lines of `n`
//! space-separated integers, where line `y` holds `F(1,y) … F(n,y)`.
//! Blank lines and lines starting with `#` are ignored, so several records
//! can share one stream. The JSON form is `{"n": int, "table": [[…]]}` with
//! the same row convention.

use serde::{Deserialize, Serialize};

use crate::chain::{BinaryOperation, Element, FiniteChain};
use crate::error::{Error, Result};
use crate::order::LinearOrder;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRecord {
    pub n: usize,
    pub table: Vec<Vec<Element>>,
}

impl From<&BinaryOperation> for TableRecord {
    fn from(op: &BinaryOperation) -> Self {
        Self {
            n: op.n(),
            table: op.rows(),
        }
    }
}

impl TryFrom<TableRecord> for BinaryOperation {
    type Error = Error;

    fn try_from(record: TableRecord) -> Result<Self> {
        BinaryOperation::from_rows(FiniteChain::new(record.n)?, &record.table)
    }
}

pub fn table_to_text(op: &BinaryOperation) -> String {
    let mut out = format!("{}\n", op.n());
    for row in op.rows() {
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn table_to_json(op: &BinaryOperation) -> String {
    serde_json::to_string(&TableRecord::from(op)).expect("table records always serialize")
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

fn parse_number(line: usize, token: &str) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a nonnegative integer, found `{token}`"),
    })
}

/// Parses every table record in a text stream.
pub fn tables_from_text(text: &str) -> Result<Vec<BinaryOperation>> {
    let mut lines = content_lines(text).peekable();
    let mut out = Vec::new();
    while let Some((line_no, header)) = lines.next() {
        let n = parse_number(line_no, header)?;
        let chain = FiniteChain::new(n).map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let (row_no, row) = lines.next().ok_or(Error::Parse {
                line: line_no,
                message: format!("expected {n} rows after the size line"),
            })?;
            let values = row
                .split_whitespace()
                .map(|t| parse_number(row_no, t))
                .collect::<Result<Vec<_>>>()?;
            if values.len() != n {
                return Err(Error::Parse {
                    line: row_no,
                    message: format!("expected {n} values, found {}", values.len()),
                });
            }
            rows.push(values);
        }
        let op = BinaryOperation::from_rows(chain, &rows).map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        out.push(op);
    }
    Ok(out)
}

fn exactly_one(mut ops: Vec<BinaryOperation>) -> Result<BinaryOperation> {
    match ops.len() {
        1 => Ok(ops.pop().unwrap()),
        found => Err(Error::Parse {
            line: 0,
            message: format!("expected exactly one table, found {found}"),
        }),
    }
}

pub fn table_from_text(text: &str) -> Result<BinaryOperation> {
    exactly_one(tables_from_text(text)?)
}

pub fn table_from_json(text: &str) -> Result<BinaryOperation> {
    let record: TableRecord = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    record.try_into()
}

/// Accepts either encoding, choosing JSON when the input starts with `{`.
pub fn table_from_str(text: &str) -> Result<BinaryOperation> {
    if text.trim_start().starts_with('{') {
        table_from_json(text)
    } else {
        table_from_text(text)
    }
}

/// Parses the order text format, `a_1 … a_n` on one line.
pub fn order_from_text(text: &str) -> Result<LinearOrder> {
    let mut lines = content_lines(text);
    let (line_no, line) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "empty order".into(),
    })?;
    if let Some((extra, _)) = lines.next() {
        return Err(Error::Parse {
            line: extra,
            message: "an order occupies a single line".into(),
        });
    }
    let seq = line
        .split_whitespace()
        .map(|t| parse_number(line_no, t))
        .collect::<Result<Vec<_>>>()?;
    LinearOrder::new(seq).map_err(|e| Error::Parse {
        line: line_no,
        message: e.to_string(),
    })
}
