//! Report envelope and its two renderings.

use std::time::Instant;

use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: &str = "1";

pub struct Report {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub result: Value,
    timings: Map<String, Value>,
    record_timings: bool,
}

impl Report {
    pub fn new(command: &'static str, record_timings: bool) -> Self {
        Self {
            command,
            inputs: Map::new(),
            result: Value::Null,
            timings: Map::new(),
            record_timings,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.to_string(), value.into());
    }

    /// Runs `f`, recording its wall-clock time under `phase` when timings are on.
    pub fn phase<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.record_timings {
            self.timings
                .insert(phase.to_string(), json!(start.elapsed().as_secs_f64()));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "timings": self.timings,
        })
    }

    /// `key: value` lines, one per leaf of the JSON form. Nested keys are
    /// joined with `.`, array entries indexed with `[i]`; arrays of scalars
    /// stay on one line.
    pub fn to_human(&self) -> String {
        let mut lines = vec![format!("command: {}", self.command)];
        flatten("inputs", &Value::Object(self.inputs.clone()), &mut lines);
        flatten("", &self.result, &mut lines);
        if !self.timings.is_empty() {
            flatten("timings", &Value::Object(self.timings.clone()), &mut lines);
        }
        lines.join("\n") + "\n"
    }
}

fn join(prefix: &str, key: &str) -> String {
    if prefix.is_empty() {
        key.to_string()
    } else {
        format!("{prefix}.{key}")
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".to_string(),
        other => other.to_string(),
    }
}

pub fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                flatten(&join(prefix, k), child, out);
            }
        }
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            out.push(format!("{prefix}: {}", parts.join(" ")));
        }
        Value::Array(items) => {
            for (i, child) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), child, out);
            }
        }
        leaf => out.push(format!("{prefix}: {}", scalar(leaf))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn human_lines_follow_json_leaves() {
        let mut r = Report::new("demo", false);
        r.input("file", "a.stab");
        r.result = json!({"order": "18", "rows": ["10", "01"], "items": [{"x": 1}, {"x": null}]});
        assert_eq!(
            r.to_human(),
            "command: demo\ninputs.file: a.stab\nitems[0].x: 1\nitems[1].x: none\norder: 18\nrows: 10 01\n"
        );
        assert_eq!(r.to_json()["timings"], json!({}));
    }
}
