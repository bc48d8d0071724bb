use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Table,
}

/// The report envelope: tool version, the command, its caps and seed, and the result.
pub struct Report {
    pub command: String,
    pub seed: u64,
    pub caps: Map<String, Value>,
    pub certified: bool,
    /// Process exit status: 0 ok, 1 failed checks, 2 not certified within the caps.
    pub exit: u8,
    pub result: Value,
    /// Replaces the generic table body.
    pub table_body: Option<String>,
}

impl Report {
    pub fn new(command: &str, seed: u64, result: impl Serialize) -> Report {
        Report {
            command: command.to_string(),
            seed,
            caps: Map::new(),
            certified: true,
            exit: 0,
            table_body: None,
            result: serde_json::to_value(result).expect("serializable report"),
        }
    }

    pub fn cap(mut self, name: &str, value: impl Into<Value>) -> Report {
        self.caps.insert(name.to_string(), value.into());
        self
    }

    pub fn certified(mut self, yes: bool) -> Report {
        self.certified = yes;
        if !yes && self.exit == 0 {
            self.exit = 2;
        }
        self
    }

    pub fn table_body(mut self, body: String) -> Report {
        self.table_body = Some(body);
        self
    }

    pub fn failed_checks(mut self, failed: bool) -> Report {
        if failed {
            self.exit = 1;
        }
        self
    }

    pub fn to_value(&self) -> Value {
        json!({
            "version": env!("CARGO_PKG_VERSION"),
            "command": self.command,
            "seed": self.seed,
            "caps": self.caps,
            "certified": self.certified,
            "result": self.result,
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_value()).expect("json");
                s.push('\n');
                s
            }
            Format::Table => self.table(),
        }
    }

    fn table(&self) -> String {
        let mut out = String::new();
        let caps: Vec<String> = self.caps.iter().map(|(k, v)| format!("{k}={}", compact(v))).collect();
        let _ = writeln!(
            out,
            "symdual {} | {} | seed {} | {}",
            env!("CARGO_PKG_VERSION"),
            self.command,
            self.seed,
            if caps.is_empty() { "no caps".to_string() } else { caps.join(" ") }
        );
        if !self.certified {
            let _ = writeln!(out, "(not certified within the caps)");
        }
        match &self.table_body {
            Some(body) => out.push_str(body),
            None => rows(&mut out, &self.result, ""),
        }
        out
    }
}

fn rows(out: &mut String, v: &Value, indent: &str) {
    match v {
        Value::Object(map) => {
            let width = map.keys().map(|k| k.chars().count()).max().unwrap_or(0);
            for (k, v) in map {
                if is_scalar_like(v) {
                    let _ = writeln!(out, "{indent}{k:<width$}  {}", compact(v));
                } else {
                    let _ = writeln!(out, "{indent}{k}:");
                    rows(out, v, &format!("{indent}  "));
                }
            }
        }
        Value::Array(items) if !items.iter().all(is_scalar_like) => {
            for (i, item) in items.iter().enumerate() {
                let _ = writeln!(out, "{indent}[{i}]");
                rows(out, item, &format!("{indent}  "));
            }
        }
        other => {
            let _ = writeln!(out, "{indent}{}", compact(other));
        }
    }
}

/// Scalars, flat arrays and sequence windows print on one line.
fn is_scalar_like(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(map) => map.contains_key("values") && map.contains_key("start"),
        _ => true,
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        Value::Object(map) if map.contains_key("values") && map.contains_key("start") => {
            let vals = map["values"].as_array().map(|a| a.iter().map(compact).collect::<Vec<_>>().join(", "));
            format!("[{}] from {}", vals.unwrap_or_default(), compact(&map["start"]))
        }
        Value::Array(items) => format!("[{}]", items.iter().map(compact).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}
