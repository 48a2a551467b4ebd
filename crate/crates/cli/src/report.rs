use std::time::Duration;

use serde_json::{Map, Value};

use crate::Format;

pub const SCHEMA: &str = "nkt-report/1";
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone)]
enum Entry {
    Field(&'static str, Value),
    /// Rendered as `key: <len>` then one `item: …` line per element.
    List {
        key: &'static str,
        item: &'static str,
        items: Vec<Value>,
    },
}

/// A command's result as an ordered list of entries, rendered either as
/// text lines or as one JSON object. Both renderings come from the same
/// values, so they carry the same numbers.
#[derive(Debug, Clone)]
pub struct Report {
    command: String,
    params: Map<String, Value>,
    entries: Vec<Entry>,
}

impl Report {
    pub fn new(command: impl Into<String>, params: Map<String, Value>) -> Self {
        Report {
            command: command.into(),
            params,
            entries: Vec::new(),
        }
    }

    pub fn field(&mut self, key: &'static str, value: impl Into<Value>) -> &mut Self {
        self.entries.push(Entry::Field(key, value.into()));
        self
    }

    pub fn list(&mut self, key: &'static str, item: &'static str, items: Vec<Value>) -> &mut Self {
        self.entries.push(Entry::List { key, item, items });
        self
    }

    pub fn params_insert(&mut self, key: &str, value: Value) {
        self.params.insert(key.to_string(), value);
    }

    pub fn render(&self, format: Format, elapsed: Option<Duration>) -> String {
        let elapsed_ms = elapsed.map(|d| d.as_millis() as u64);
        match format {
            Format::Human => self.human(elapsed_ms),
            Format::Structured => self.structured(elapsed_ms),
        }
    }

    fn human(&self, elapsed_ms: Option<u64>) -> String {
        let mut out = format!("schema: {SCHEMA}\ncommand: {}\n", self.command);
        out.push_str(&format!(
            "params: {}\n",
            inline(&Value::Object(self.params.clone()))
        ));
        for entry in &self.entries {
            match entry {
                Entry::Field(key, value) => out.push_str(&format!("{key}: {}\n", inline(value))),
                Entry::List { key, item, items } => {
                    out.push_str(&format!("{key}: {}\n", items.len()));
                    for v in items {
                        out.push_str(&format!("{item}: {}\n", inline(v)));
                    }
                }
            }
        }
        if let Some(ms) = elapsed_ms {
            out.push_str(&format!("elapsed_ms: {ms}\n"));
        }
        out
    }

    fn structured(&self, elapsed_ms: Option<u64>) -> String {
        let mut result = Map::new();
        for entry in &self.entries {
            match entry {
                Entry::Field(key, value) => result.insert(key.to_string(), value.clone()),
                Entry::List { key, items, .. } => {
                    result.insert(key.to_string(), Value::Array(items.clone()))
                }
            };
        }
        let mut doc = Map::new();
        doc.insert("schema".into(), SCHEMA.into());
        doc.insert("schema_version".into(), SCHEMA_VERSION.into());
        doc.insert("command".into(), self.command.clone().into());
        doc.insert("params".into(), Value::Object(self.params.clone()));
        doc.insert("result".into(), Value::Object(result));
        if let Some(ms) = elapsed_ms {
            doc.insert("elapsed_ms".into(), ms.into());
        }
        let mut text = serde_json::to_string(&Value::Object(doc)).expect("report values serialize");
        text.push('\n');
        text
    }
}

/// One-line text form: objects become `key=value` pairs, arrays are
/// comma-separated, null is `none`.
fn inline(value: &Value) -> String {
    match value {
        Value::Null => "none".into(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.is_empty() => "none".into(),
        Value::Array(items) => items.iter().map(inline).collect::<Vec<_>>().join(","),
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", inline(v)))
            .collect::<Vec<_>>()
            .join(" "),
    }
}
