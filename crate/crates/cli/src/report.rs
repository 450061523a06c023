use std::fmt::Write as _;

use serde_json::{Map, Value};

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

/// Sections in insertion order, plus an optional DOT rendering.
pub struct Report {
    command: &'static str,
    subject: String,
    sections: Map<String, Value>,
    dot: Option<String>,
    pub failed: bool,
}

impl Report {
    pub fn new(command: &'static str, subject: impl Into<String>) -> Report {
        Report { command, subject: subject.into(), sections: Map::new(), dot: None, failed: false }
    }

    pub fn put(&mut self, key: &str, value: impl Into<Value>) {
        self.sections.insert(key.to_string(), value.into());
    }

    pub fn set_dot(&mut self, dot: String) {
        self.dot = Some(dot);
    }

    pub fn to_json(&self) -> Value {
        let mut top = Map::new();
        top.insert("schema_version".into(), SCHEMA_VERSION.into());
        top.insert("command".into(), self.command.into());
        top.insert("subject".into(), self.subject.clone().into());
        for (k, v) in &self.sections {
            top.insert(k.clone(), v.clone());
        }
        Value::Object(top)
    }

    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(&self.to_json()).expect("values serialize") + "\n"),
            Format::Dot => self.dot.clone().ok_or_else(|| format!("`{}` has no DOT output", self.command)),
            Format::Text => {
                let mut out = format!("{} {}\n", self.command, self.subject);
                for (k, v) in &self.sections {
                    text_entry(&mut out, 0, k, v);
                }
                Ok(out)
            }
        }
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|i| !i.is_array() && !i.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(scalar).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

fn text_entry(out: &mut String, depth: usize, key: &str, v: &Value) {
    let pad = "  ".repeat(depth);
    if is_flat(v) {
        let _ = writeln!(out, "{pad}{key}: {}", scalar(v));
        return;
    }
    let _ = writeln!(out, "{pad}{key}:");
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                text_entry(out, depth + 1, k, x);
            }
        }
        Value::Array(items) => {
            for x in items {
                match x {
                    Value::Object(m) if m.values().all(|y| is_flat(y)) => {
                        let parts: Vec<String> = m.iter().map(|(k, y)| format!("{k}={}", scalar(y))).collect();
                        let _ = writeln!(out, "{pad}  - {}", parts.join(" "));
                    }
                    Value::Object(m) => {
                        let _ = writeln!(out, "{pad}  -");
                        for (k, y) in m {
                            text_entry(out, depth + 2, k, y);
                        }
                    }
                    other => {
                        let _ = writeln!(out, "{pad}  - {}", scalar(other));
                    }
                }
            }
        }
        _ => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn json_keeps_insertion_order() {
        let mut r = Report::new("analyze", "Z/6");
        r.put("zeta", 1);
        r.put("alpha", 2);
        let s = r.render(Format::Json).unwrap();
        assert!(s.find("zeta").unwrap() < s.find("alpha").unwrap());
        assert!(s.contains("\"schema_version\": 1"));
    }

    #[test]
    fn text_nests() {
        let mut r = Report::new("hull", "Z/4");
        r.put("eta", json!([{"a": "0", "image": "0"}]));
        r.put("checks", json!({"kernel": true}));
        let s = r.render(Format::Text).unwrap();
        assert!(s.contains("  - a=0 image=0"));
        assert!(s.contains("  kernel: true"));
        assert!(r.render(Format::Dot).is_err());
    }
}
