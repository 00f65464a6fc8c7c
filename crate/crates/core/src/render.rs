//! Text output: DOT diagrams and classification tables.

use std::fmt::Write as _;

use serde::Serialize;

use crate::affine::Reduced;
use crate::dominance::HasseSegment;
use crate::error::{Error, Result};
use crate::normality::Classification;

/// Output format of a table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Md,
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "md" => Ok(Format::Md),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::Parse(format!("unknown table format {s:?}"))),
        }
    }
}

/// A rectangular table of strings with fixed column order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table { headers: headers.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        assert_eq!(row.len(), self.headers.len(), "row width");
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Md => self.to_md(),
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    pub fn to_md(&self) -> String {
        let esc = |s: &str| s.replace('|', "\\|");
        let mut out = String::new();
        let line = |cells: Vec<String>| format!("| {} |\n", cells.join(" | "));
        out.push_str(&line(self.headers.iter().map(|h| esc(h)).collect()));
        out.push_str(&line(self.headers.iter().map(|_| "---".to_string()).collect()));
        for r in &self.rows {
            out.push_str(&line(r.iter().map(|c| esc(c)).collect()));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.headers).expect("in-memory write");
        for r in &self.rows {
            w.write_record(r).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }

    /// An array of objects keyed by header, in column order.
    pub fn to_json(&self) -> String {
        let rows: Vec<serde_json::Map<String, serde_json::Value>> = self
            .rows
            .iter()
            .map(|r| self.headers.iter().cloned().zip(r.iter().map(|c| serde_json::Value::String(c.clone()))).collect())
            .collect();
        let mut s = serde_json::to_string_pretty(&rows).expect("strings serialize");
        s.push('\n');
        s
    }
}

pub const CLASSIFICATION_COLUMNS: [&str; 5] = ["group", "component", "family", "verdict", "provenance"];

/// One row per normal family and component.
pub fn classification_table(results: &[Classification]) -> Table {
    let mut t = Table::new(&CLASSIFICATION_COLUMNS);
    for c in results {
        for comp in &c.components {
            let fams: Vec<String> = if c.all_normal {
                vec!["all".into()]
            } else {
                comp.families.iter().map(|f| f.to_string()).collect()
            };
            for f in fams {
                t.push(vec![c.group.clone(), comp.index.to_string(), f, "Normal".into(), c.provenance.clone()]);
            }
        }
    }
    t
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT digraph of a Hasse segment; edges point upwards and carry the support
/// of the cover.
pub fn hasse_dot(seg: &HasseSegment) -> String {
    let mut out = String::new();
    let title = format!("{} component {}", seg.group, seg.component);
    writeln!(out, "digraph {} {{", dot_id(&title)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=plaintext];").unwrap();
    for (i, n) in seg.nodes.iter().enumerate() {
        writeln!(out, "  n{i} [label={}];", dot_id(&n.name)).unwrap();
    }
    for e in &seg.edges {
        let lab = e.label.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        writeln!(out, "  n{} -> n{} [label={}];", e.from, e.to, dot_id(&format!("{{{lab}}}"))).unwrap();
    }
    out.push_str("}\n");
    out
}

/// `s0*s1*t2`-style name of a reduced expression; the identity is `1`.
pub fn reduced_name(r: &Reduced) -> String {
    let mut parts: Vec<String> = r.word.iter().map(|i| format!("s{i}")).collect();
    if r.omega != 0 {
        parts.push(format!("t{}", r.omega));
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FlagRow {
    pub element: Reduced,
    pub length: usize,
    pub status: crate::normality::Status,
}

/// CSV dump `element,length,status` of flag verdicts.
pub fn flag_csv(rows: &[FlagRow]) -> String {
    let mut t = Table::new(&["element", "length", "status"]);
    for r in rows {
        t.push(vec![reduced_name(&r.element), r.length.to_string(), r.status.to_string()]);
    }
    t.to_csv()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_table_is_header_only() {
        let t = classification_table(&[]);
        assert_eq!(t.to_csv(), "group,component,family,verdict,provenance\n");
        assert_eq!(t.to_md().lines().count(), 2);
        assert_eq!(t.to_json().trim(), "[]");
    }

    #[test]
    fn csv_quotes_commas() {
        let mut t = Table::new(&["a", "b"]);
        t.push(vec!["x,y".into(), "z".into()]);
        assert_eq!(t.to_csv(), "a,b\n\"x,y\",z\n");
    }

    #[test]
    fn reduced_names() {
        assert_eq!(reduced_name(&Reduced { omega: 0, word: vec![] }), "1");
        assert_eq!(reduced_name(&Reduced { omega: 2, word: vec![0, 1] }), "s0*s1*t2");
    }
}
