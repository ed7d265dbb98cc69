//! Output tables and their CSV / JSON encodings.
//!
//! CSV artifacts start with `# config: <json>` and hold one or more tables,
//! each introduced by `# table: <name>` and a header row. JSON artifacts are
//! a single object `{ "config", "tables": { name: [row, ...] } }`.
//! Floats are written with 17 significant digits; exact rationals as
//! `numerator/denominator` strings (plain integers when the denominator is 1).

use std::fmt::Write as _;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use serde_json::value::RawValue;

use crate::config::{OutputFormat, RunConfig};
use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(u64),
    Float(f64),
    Exact(String),
    Bool(bool),
    Text(String),
}

impl Cell {
    pub fn text(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => format_float(*v),
            Cell::Exact(s) | Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as u64)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(v.into())
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

/// 17 significant digits in scientific notation.
pub fn format_float(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        v.to_string()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub name: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(name: &'static str, columns: &[&'static str]) -> Self {
        Table {
            name,
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len(), "row width for table {}", self.name);
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<Vec<&Cell>> {
        let idx = self.columns.iter().position(|c| *c == name)?;
        Some(self.rows.iter().map(|r| &r[idx]).collect())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Artifact {
    pub config: RunConfig,
    pub tables: Vec<Table>,
}

impl Artifact {
    pub fn table(&self, name: &str) -> Option<&Table> {
        self.tables.iter().find(|t| t.name == name)
    }

    pub fn render(&self) -> Result<Vec<u8>, CliError> {
        match self.config.format {
            OutputFormat::Csv => self.render_csv(),
            OutputFormat::Json => self.render_json(),
        }
    }

    fn render_csv(&self) -> Result<Vec<u8>, CliError> {
        let mut out = String::new();
        writeln!(out, "{CONFIG_PREFIX}{}", serde_json::to_string(&self.config)?).expect("string write");
        let mut bytes = out.into_bytes();
        for table in &self.tables {
            bytes.extend_from_slice(format!("# table: {}\n", table.name).as_bytes());
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer.write_record(&table.columns)?;
            for row in &table.rows {
                writer.write_record(row.iter().map(Cell::text))?;
            }
            bytes.extend(writer.into_inner().map_err(|e| CliError::Io(e.into_error()))?);
        }
        Ok(bytes)
    }

    fn render_json(&self) -> Result<Vec<u8>, CliError> {
        let mut text = serde_json::to_string_pretty(&JsonArtifact(self))?;
        text.push('\n');
        Ok(text.into_bytes())
    }
}

pub const CONFIG_PREFIX: &str = "# config: ";

/// Recovers the run configuration embedded in a CSV or JSON artifact.
pub fn config_from_artifact(text: &str) -> Result<RunConfig, CliError> {
    if let Some(line) = text.lines().next().and_then(|l| l.strip_prefix(CONFIG_PREFIX)) {
        return Ok(serde_json::from_str(line)?);
    }
    #[derive(serde::Deserialize)]
    struct Header {
        config: RunConfig,
    }
    let header: Header = serde_json::from_str(text)?;
    Ok(header.config)
}

struct JsonArtifact<'a>(&'a Artifact);
struct JsonTables<'a>(&'a [Table]);
struct JsonRow<'a>(&'a Table, &'a [Cell]);

impl Serialize for JsonArtifact<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("config", &self.0.config)?;
        map.serialize_entry("tables", &JsonTables(&self.0.tables))?;
        map.end()
    }
}

impl Serialize for JsonTables<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for table in self.0 {
            let rows: Vec<JsonRow> = table.rows.iter().map(|r| JsonRow(table, r)).collect();
            map.serialize_entry(table.name, &rows)?;
        }
        map.end()
    }
}

impl Serialize for JsonRow<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.1.len()))?;
        for (col, cell) in self.0.columns.iter().zip(self.1) {
            match cell {
                Cell::Int(v) => map.serialize_entry(col, v)?,
                Cell::Bool(v) => map.serialize_entry(col, v)?,
                Cell::Exact(v) | Cell::Text(v) => map.serialize_entry(col, v)?,
                Cell::Float(v) if v.is_finite() => {
                    let raw = RawValue::from_string(format_float(*v)).map_err(serde::ser::Error::custom)?;
                    map.serialize_entry(col, &raw)?
                }
                Cell::Float(v) => map.serialize_entry(col, &v.to_string())?,
            }
        }
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Subcommand;

    fn config(format: OutputFormat) -> RunConfig {
        RunConfig {
            subcommand: Subcommand::Moments,
            max_k: 1,
            intensity: "1".into(),
            n: 10,
            sample_count: 2,
            base_seed: 3,
            bin_count: 4,
            out: None,
            format,
        }
    }

    fn artifact(format: OutputFormat) -> Artifact {
        let mut t = Table::new("demo", &["k", "value", "x"]);
        t.push(vec![1usize.into(), Cell::Exact("3/2".into()), 0.1f64.into()]);
        Artifact { config: config(format), tables: vec![t] }
    }

    #[test]
    fn seventeen_significant_digits() {
        assert_eq!(format_float(0.1), "1.0000000000000001e-1");
        assert_eq!(format_float(-2.0), "-2.0000000000000000e0");
        assert_eq!(format_float(f64::NAN), "NaN");
        let back: f64 = format_float(std::f64::consts::PI).parse().unwrap();
        assert_eq!(back, std::f64::consts::PI);
    }

    #[test]
    fn csv_layout() {
        let text = String::from_utf8(artifact(OutputFormat::Csv).render().unwrap()).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert!(lines[0].starts_with(CONFIG_PREFIX));
        assert_eq!(lines[1..], ["# table: demo", "k,value,x", "1,3/2,1.0000000000000001e-1"]);
        assert_eq!(config_from_artifact(&text).unwrap(), config(OutputFormat::Csv));
    }

    #[test]
    fn json_layout() {
        let text = String::from_utf8(artifact(OutputFormat::Json).render().unwrap()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["tables"]["demo"][0]["value"], "3/2");
        assert_eq!(v["tables"]["demo"][0]["k"], 1);
        assert_eq!(v["tables"]["demo"][0]["x"].as_f64(), Some(0.1));
        assert!(text.contains("1.0000000000000001e-1"));
        assert_eq!(config_from_artifact(&text).unwrap(), config(OutputFormat::Json));
    }
}
