//! Tabular reports rendered as JSON or CSV.
//!
//! Both encodings carry the same data: the JSON header fields become `# key=value`
//! comment lines in CSV, and every row becomes one CSV record. Non-string cells
//! are written as compact JSON, so `[2,2]` reads back identically from either;
//! strings are written bare unless they would parse as JSON (`"1"`), and null
//! is the empty cell.

use std::io::Write;

use clap::ValueEnum;
use serde::ser::{Serialize, SerializeMap, Serializer};
use serde_json::Value;

pub const SCHEMA: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub struct Report {
    pub command: &'static str,
    pub seed: u64,
    pub meta: Vec<(&'static str, Value)>,
    pub rows_key: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

impl Report {
    pub fn new(command: &'static str, rows_key: &'static str, columns: &[&'static str]) -> Self {
        Report {
            command,
            seed: 0,
            meta: Vec::new(),
            rows_key,
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn meta(&mut self, key: &'static str, value: impl Into<Value>) -> &mut Self {
        self.meta.push((key, value.into()));
        self
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer(&mut *out, self)?;
                writeln!(out)
            }
            Format::Csv => self.write_csv(out),
        }
    }

    fn write_csv(&self, out: &mut dyn Write) -> std::io::Result<()> {
        writeln!(out, "# schema={}", csv_cell(&Value::from(SCHEMA)))?;
        writeln!(out, "# command={}", self.command)?;
        writeln!(out, "# seed={}", self.seed)?;
        for (k, v) in &self.meta {
            writeln!(out, "# {k}={}", csv_cell(v))?;
        }
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(csv_cell))?;
        }
        w.flush()
    }
}

fn csv_cell(v: &Value) -> String {
    match v {
        // quote strings that would otherwise read back as another JSON value
        Value::String(s) if s.is_empty() || serde_json::from_str::<Value>(s).is_ok() => v.to_string(),
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

struct Row<'a>(&'a [&'static str], &'a [Value]);

impl Serialize for Row<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0.iter().zip(self.1) {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl Serialize for Report {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        map.serialize_entry("schema", SCHEMA)?;
        map.serialize_entry("command", self.command)?;
        map.serialize_entry("seed", &self.seed)?;
        for (k, v) in &self.meta {
            map.serialize_entry(k, v)?;
        }
        let rows: Vec<Row> = self.rows.iter().map(|r| Row(&self.columns, r)).collect();
        map.serialize_entry(self.rows_key, &rows)?;
        map.end()
    }
}
