use std::io::Write;

use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => n.to_string(),
        other => other.to_string(),
    }
}

fn rows(v: &Value) -> Vec<&serde_json::Map<String, Value>> {
    match v {
        Value::Array(items) => items.iter().filter_map(Value::as_object).collect(),
        Value::Object(m) => vec![m],
        _ => Vec::new(),
    }
}

/// Writes `v` (an object or an array of objects) in the requested format.
pub fn emit(v: &Value, format: Format, out: &mut impl Write) -> std::io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, v)?;
            writeln!(out)
        }
        Format::Csv => {
            let rs = rows(v);
            let mut w = csv::Writer::from_writer(out);
            if let Some(first) = rs.first() {
                w.write_record(first.keys())?;
            }
            for r in &rs {
                w.write_record(r.values().map(cell))?;
            }
            w.flush()
        }
        Format::Text => match v {
            Value::Array(items) => {
                for item in items {
                    let line: Vec<String> = rows(item).iter().flat_map(|m| m.iter().map(|(k, v)| format!("{k}={}", cell(v)))).collect();
                    writeln!(out, "{}", line.join(" "))?;
                }
                Ok(())
            }
            Value::Object(m) => {
                for (k, v) in m {
                    writeln!(out, "{k}: {}", cell(v))?;
                }
                Ok(())
            }
            other => writeln!(out, "{}", cell(other)),
        },
    }
}
