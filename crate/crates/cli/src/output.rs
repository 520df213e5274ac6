//! Output payloads and their CSV/JSON renderings.
//!
//! Identical run configurations must produce byte-identical files: floats are
//! rendered with 17 significant digits in CSV (round-trip exact), JSON keys
//! are sorted, and row order is fixed by the computation.

use std::fs;
use std::io::Write;

use serde_json::{json, Map, Number, Value};

/// One table cell.
#[derive(Debug, Clone, Copy)]
pub enum Cell {
    Int(u64),
    Float(f64),
}

/// One output row: column name paired with value, in column order.
pub type Row = Vec<(&'static str, Cell)>;

/// The result of one command run.
#[derive(Debug)]
pub struct Payload {
    pub command: &'static str,
    pub q: f64,
    pub rows: Vec<Row>,
    pub max_discrepancy: f64,
    pub pass: bool,
    /// Set when the computation failed mid-run; carries the offending point.
    pub error: Option<String>,
}

impl Payload {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
        }
    }

    fn to_csv(&self) -> String {
        let mut out = String::new();
        if let Some(first) = self.rows.first() {
            let header: Vec<&str> = first.iter().map(|(name, _)| *name).collect();
            out.push_str(&header.join(","));
            out.push('\n');
        }
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|(_, cell)| render_cell(*cell)).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for (name, cell) in row {
                    obj.insert((*name).to_string(), cell_value(*cell));
                }
                Value::Object(obj)
            })
            .collect();
        let mut doc = json!({
            "command": self.command,
            "q": self.q,
            "rows": rows,
            "max_discrepancy": self.max_discrepancy,
            "pass": self.pass,
        });
        if let Some(err) = &self.error {
            doc.as_object_mut()
                .expect("document is an object")
                .insert("error".to_string(), Value::String(err.clone()));
        }
        let mut text = serde_json::to_string_pretty(&doc).expect("payload serializes");
        text.push('\n');
        text
    }
}

/// 17 significant digits: round-trip exact for doubles.
fn render_cell(cell: Cell) -> String {
    match cell {
        Cell::Int(v) => v.to_string(),
        Cell::Float(v) => format!("{v:.16e}"),
    }
}

fn cell_value(cell: Cell) -> Value {
    match cell {
        Cell::Int(v) => Value::Number(v.into()),
        Cell::Float(v) => Number::from_f64(v)
            .map(Value::Number)
            .unwrap_or(Value::Null),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Writes the rendered payload to the path, or to stdout when no path was
/// given.
pub fn emit(text: &str, output_path: Option<&str>) -> std::io::Result<()> {
    match output_path {
        Some(path) => fs::write(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Payload {
        Payload {
            command: "verify-moments",
            q: 2.0,
            rows: vec![
                vec![("n", Cell::Int(0)), ("discrepancy", Cell::Float(1e-9))],
                vec![("n", Cell::Int(1)), ("discrepancy", Cell::Float(0.5))],
            ],
            max_discrepancy: 1e-9,
            pass: true,
            error: None,
        }
    }

    #[test]
    fn csv_layout_and_digits() {
        let text = sample().render(OutputFormat::Csv);
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "n,discrepancy");
        assert_eq!(lines.next().unwrap(), "0,1.0000000000000001e-9");
        assert_eq!(lines.next().unwrap(), "1,5.0000000000000000e-1");
    }

    #[test]
    fn json_has_contract_fields() {
        let text = sample().render(OutputFormat::Json);
        let doc: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["command"], "verify-moments");
        assert_eq!(doc["q"], 2.0);
        assert_eq!(doc["pass"], true);
        assert!(doc["rows"].as_array().unwrap().len() == 2);
        assert!(doc.get("error").is_none());
    }

    #[test]
    fn rendering_is_deterministic() {
        let a = sample().render(OutputFormat::Json);
        let b = sample().render(OutputFormat::Json);
        assert_eq!(a, b);
    }

    #[test]
    fn failure_payload_carries_the_error() {
        let payload = Payload {
            command: "weight",
            q: 1.5,
            rows: Vec::new(),
            max_discrepancy: f64::NAN,
            pass: false,
            error: Some("weight at t = 3: accuracy error".into()),
        };
        let doc: Value = serde_json::from_str(&payload.render(OutputFormat::Json)).unwrap();
        assert_eq!(doc["pass"], false);
        assert!(doc["error"].as_str().unwrap().contains("t = 3"));
        // NaN is not a JSON number; it degrades to null rather than panicking.
        assert!(doc["max_discrepancy"].is_null());
    }
}
