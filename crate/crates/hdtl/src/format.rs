//! Table serialisation: versioned JSON (lossless), CSV and markdown grids.
//!
//! JSON layout:
//!
//! ```text
//! {"schema":"hdtl-table/1","config":"(())","basis":["t1,t2,b1,b2", …],
//!  "cells":[[[[0,"p"]], …], …]}
//! ```
//!
//! `cells[i][j]` lists the terms of `basis[i] · basis[j]` as
//! `[basis index, coefficient]` pairs.

use std::fmt::Write;
use std::str::FromStr;

use hdtl_core::{parse_boundary, AlgebraElement, Coefficient, HomSpace, MultiplicationTable, ShClass};
use serde::{Deserialize, Serialize};

pub const TABLE_SCHEMA: &str = "hdtl-table/1";

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("unknown format {0:?} (expected json, csv or markdown)")]
    UnknownFormat(String),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(String),
    #[error(transparent)]
    Core(#[from] hdtl_core::Error),
    #[error("schema: {0}")]
    Schema(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Json,
    Csv,
    Markdown,
}

impl FromStr for TableFormat {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, FormatError> {
        match s {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            "markdown" | "md" => Ok(Self::Markdown),
            other => Err(FormatError::UnknownFormat(other.into())),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableDocument {
    pub schema: String,
    pub config: String,
    pub basis: Vec<String>,
    pub cells: Vec<Vec<Vec<(usize, String)>>>,
}

impl TableDocument {
    pub fn from_table(t: &MultiplicationTable) -> Self {
        let n = t.basis().len();
        Self {
            schema: TABLE_SCHEMA.into(),
            config: t.config().render(),
            basis: t.basis().iter().map(|h| h.to_string()).collect(),
            cells: (0..n)
                .map(|i| {
                    (0..n).map(|j| t.sparse_cell(i, j).into_iter().map(|(k, c)| (k, c.to_string())).collect()).collect()
                })
                .collect(),
        }
    }

    pub fn into_table(self) -> Result<MultiplicationTable, FormatError> {
        if self.schema != TABLE_SCHEMA {
            return Err(FormatError::Schema(format!("unsupported schema {:?}", self.schema)));
        }
        let config = parse_boundary(&self.config)?;
        let space = HomSpace::new(&config, &config);
        let basis = self
            .basis
            .iter()
            .map(|s| space.h_class(&ShClass::parse(&config, &config, s)?))
            .collect::<Result<Vec<_>, _>>()?;
        let mut cells = Vec::with_capacity(self.cells.len());
        for row in self.cells {
            let mut out_row = Vec::with_capacity(row.len());
            for cell in row {
                let mut e = AlgebraElement::zero(&config, &config);
                for (k, c) in cell {
                    let h = basis.get(k).ok_or_else(|| FormatError::Schema(format!("class index {k} out of range")))?;
                    e.add_term(h, &c.parse::<Coefficient>()?)?;
                }
                out_row.push(e);
            }
            cells.push(out_row);
        }
        Ok(MultiplicationTable::from_parts(config, basis, cells)?)
    }
}

/// `D<k>` names, 1-based in basis order.
pub fn class_name(index: usize) -> String {
    format!("D{}", index + 1)
}

/// A cell as `coef*Dk` terms joined by ` + `; unit coefficients are left out
/// and multi-term coefficients parenthesised.
pub fn cell_text(t: &MultiplicationTable, row: usize, col: usize) -> String {
    let terms = t.sparse_cell(row, col);
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (k, c)) in terms.iter().enumerate() {
        if i > 0 {
            out.push_str(" + ");
        }
        match c.terms().count() {
            _ if c.is_one() => {}
            1 => write!(out, "{c}*").unwrap(),
            _ => write!(out, "({c})*").unwrap(),
        }
        out.push_str(&class_name(*k));
    }
    out
}

pub fn serialize_table(t: &MultiplicationTable, format: TableFormat) -> Result<String, FormatError> {
    match format {
        TableFormat::Json => Ok(serde_json::to_string(&TableDocument::from_table(t))?),
        TableFormat::Csv => table_csv(t),
        TableFormat::Markdown => Ok(table_markdown(t)),
    }
}

pub fn parse_table(text: &str) -> Result<MultiplicationTable, FormatError> {
    serde_json::from_str::<TableDocument>(text)?.into_table()
}

fn table_markdown(t: &MultiplicationTable) -> String {
    let n = t.basis().len();
    let mut out = format!("config: `{}`\n\n", t.config());
    for (k, h) in t.basis().iter().enumerate() {
        writeln!(out, "- {} = [{}]", class_name(k), h).unwrap();
    }
    out.push_str("\n| row × col |");
    for k in 0..n {
        write!(out, " {} |", class_name(k)).unwrap();
    }
    out.push_str("\n|---|");
    out.push_str(&"---|".repeat(n));
    out.push('\n');
    for i in 0..n {
        write!(out, "| {} |", class_name(i)).unwrap();
        for j in 0..n {
            write!(out, " {} |", cell_text(t, i, j)).unwrap();
        }
        out.push('\n');
    }
    out
}

fn table_csv(t: &MultiplicationTable) -> Result<String, FormatError> {
    let n = t.basis().len();
    let mut w = csv::Writer::from_writer(Vec::new());
    let header = std::iter::once("row \\ col".to_string())
        .chain(t.basis().iter().enumerate().map(|(k, h)| format!("{}=[{}]", class_name(k), h)));
    w.write_record(header).map_err(|e| FormatError::Csv(e.to_string()))?;
    for i in 0..n {
        let row =
            std::iter::once(format!("{}=[{}]", class_name(i), t.basis()[i])).chain((0..n).map(|j| cell_text(t, i, j)));
        w.write_record(row).map_err(|e| FormatError::Csv(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| FormatError::Csv(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use hdtl_core::multiplication_table;

    fn table(s: &str) -> MultiplicationTable {
        multiplication_table(&parse_boundary(s).unwrap()).unwrap()
    }

    #[test]
    fn smallest_table_json() {
        let json = serialize_table(&table(""), TableFormat::Json).unwrap();
        assert_eq!(json, r#"{"schema":"hdtl-table/1","config":"","basis":[""],"cells":[[[[0,"1"]]]]}"#);
    }

    #[test]
    fn json_round_trip() {
        for s in ["", "()", "(())", "()()", "(()())"] {
            let t = table(s);
            let text = serialize_table(&t, TableFormat::Json).unwrap();
            assert_eq!(parse_table(&text).unwrap(), t, "{s}");
        }
    }

    #[test]
    fn markdown_cell() {
        let t = table("(())");
        let md = serialize_table(&t, TableFormat::Markdown).unwrap();
        assert!(md.contains("- D1 = [t1,t2,b1,b2]"));
        let first_row = md.lines().find(|l| l.starts_with("| D1 |")).unwrap();
        assert!(first_row.starts_with("| D1 | p*D1 |"), "{first_row}");
    }

    #[test]
    fn csv_grid() {
        let t = table("()");
        let csv = serialize_table(&t, TableFormat::Csv).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], r#"row \ col,"D1=[t1,b1]",D2=[t1|b1]"#);
        assert_eq!(lines[2], "D2=[t1|b1],D2,q*D2");
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(matches!("xml".parse::<TableFormat>(), Err(FormatError::UnknownFormat(_))));
        let good = serialize_table(&table("()"), TableFormat::Json).unwrap();
        let wrong_schema = good.replace("hdtl-table/1", "hdtl-table/9");
        assert!(matches!(parse_table(&wrong_schema), Err(FormatError::Schema(_))));
        let bad_index = good.replace("[[[0,\"1\"]]", "[[[5,\"1\"]]");
        assert!(parse_table(&bad_index).is_err());
        let bad_coeff = good.replace("\"q\"", "\"z\"");
        assert!(matches!(parse_table(&bad_coeff), Err(FormatError::Core(_))));
        let wrong_cell = good.replace("\"q\"", "\"p\"");
        assert!(parse_table(&wrong_cell).is_ok(), "cells are data, not recomputed");
        assert!(matches!(parse_table("{}"), Err(FormatError::Json(_))));
    }
}
