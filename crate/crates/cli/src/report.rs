//! The JSON report every command emits, and the text rendering derived
//! from it.

use serde::Serialize;
use serde_json::Value;
use weiljet::report::{CheckEntry, Report};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Debug)]
pub struct CliReport {
    pub schema_version: u32,
    pub command: Value,
    pub entries: Vec<CheckEntry>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub timing_ms: f64,
}

impl CliReport {
    pub fn new(command: Value, report: Report, output: Option<Value>, timing_ms: f64) -> Self {
        let pass = report.all_passed();
        CliReport {
            schema_version: SCHEMA_VERSION,
            command,
            entries: report.entries,
            pass,
            output,
            error: None,
            timing_ms,
        }
    }

    pub fn failed(command: Value, error: String, timing_ms: f64) -> Self {
        CliReport {
            schema_version: SCHEMA_VERSION,
            command,
            entries: vec![],
            pass: false,
            output: None,
            error: Some(error),
            timing_ms,
        }
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Text table built from the JSON form.
pub fn render(v: &Value) -> String {
    let mut out = String::new();
    if let Some(cmd) = v["command"]["name"].as_str() {
        out += &format!("{cmd}\n");
    }
    if let Some(e) = v["error"].as_str() {
        out += &format!("error: {e}\n");
    }
    let entries = v["entries"].as_array().cloned().unwrap_or_default();
    let width = entries.iter().filter_map(|e| e["name"].as_str()).map(str::len).max().unwrap_or(0);
    for e in &entries {
        let name = e["name"].as_str().unwrap_or("");
        let mark = if e["passed"].as_bool() == Some(true) { "pass" } else { "FAIL" };
        match e["witness"].as_str() {
            Some(w) => out += &format!("  {mark}  {name:width$}  {w}\n"),
            None => out += &format!("  {mark}  {name}\n"),
        }
    }
    if let Some(d) = v["output"]["diagram"].as_str() {
        out += d;
    }
    if let Some(verdict) = v["output"]["certificate"]["verdict"].as_str() {
        out += &format!("certificate: {verdict}\n");
    }
    let npass = entries.iter().filter(|e| e["passed"].as_bool() == Some(true)).count();
    out += &format!(
        "{} ({npass}/{} checks) in {:.1} ms\n",
        if v["pass"].as_bool() == Some(true) { "PASS" } else { "FAIL" },
        entries.len(),
        v["timing_ms"].as_f64().unwrap_or(0.0)
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn table_from_json() {
        let mut r = Report::new();
        r.pass("a");
        r.fail("longer name", "why");
        let v = CliReport::new(json!({"name": "x"}), r, None, 1.0).to_value();
        assert_eq!(v["pass"], false);
        assert_eq!(v["schema_version"], SCHEMA_VERSION);
        let text = render(&v);
        assert_eq!(text, "x\n  pass  a\n  FAIL  longer name  why\nFAIL (1/2 checks) in 1.0 ms\n");
    }
}
