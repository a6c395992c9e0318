//! Output envelope shared by every subcommand.
//!
//! All three formats are projections of one `serde_json::Value` tree, so
//! they can never disagree about the payload. Objects serialize with
//! sorted keys (serde_json's default map is ordered), which makes every
//! format byte-deterministic for a given input.

use clap::ValueEnum;
use lenset_core::Error;
use serde::Serialize;
use serde_json::Value;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One JSON object per invocation, newline-terminated.
    Json,
    /// Flattened `path<TAB>value` lines, one per leaf, sorted by path.
    Tsv,
    /// `path: value` lines for reading in a terminal.
    Human,
}

#[derive(Debug, Serialize)]
struct ErrorInfo {
    code: &'static str,
    message: String,
}

/// The one shape every invocation prints: request echo, payload, status.
#[derive(Debug, Serialize)]
pub struct Envelope {
    command: &'static str,
    parameters: BTreeMap<String, String>,
    /// Payload; `null` when the command failed.
    result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    bound_used: Option<u64>,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<ErrorInfo>,
}

impl Envelope {
    pub fn ok(
        command: &'static str,
        parameters: BTreeMap<String, String>,
        result: Value,
        bound_used: Option<u64>,
    ) -> Self {
        Envelope { command, parameters, result, bound_used, status: "ok", error: None }
    }

    pub fn err(command: &'static str, parameters: BTreeMap<String, String>, e: &Error) -> Self {
        Envelope {
            command,
            parameters,
            result: Value::Null,
            bound_used: None,
            status: "error",
            error: Some(ErrorInfo { code: e.code(), message: e.to_string() }),
        }
    }

    pub fn is_err(&self) -> bool {
        self.error.is_some()
    }

    /// Rendered output, trailing newline included.
    pub fn render(&self, format: Format) -> String {
        let value = serde_json::to_value(self).expect("envelope serializes");
        match format {
            Format::Json => {
                let mut s = serde_json::to_string(&value).expect("value serializes");
                s.push('\n');
                s
            }
            Format::Tsv => {
                let mut lines = Vec::new();
                flatten(String::new(), &value, &mut lines);
                lines.sort();
                let mut s = String::new();
                for (path, leaf) in lines {
                    s.push_str(&path);
                    s.push('\t');
                    s.push_str(&leaf);
                    s.push('\n');
                }
                s
            }
            Format::Human => {
                let mut lines = Vec::new();
                flatten(String::new(), &value, &mut lines);
                lines.sort();
                let mut s = String::new();
                for (path, leaf) in lines {
                    s.push_str(&path);
                    s.push_str(": ");
                    s.push_str(&humanize(&leaf));
                    s.push('\n');
                }
                s
            }
        }
    }
}

/// Walk the tree, descending objects into dotted paths; arrays and scalars
/// stay whole as compact JSON, so no line ever has an empty value.
fn flatten(prefix: String, value: &Value, out: &mut Vec<(String, String)>) {
    match value {
        Value::Object(map) if !map.is_empty() => {
            for (key, child) in map {
                let path = if prefix.is_empty() {
                    key.clone()
                } else {
                    format!("{prefix}.{key}")
                };
                flatten(path, child, out);
            }
        }
        _ => out.push((prefix, serde_json::to_string(value).expect("value serializes"))),
    }
}

/// Terminal-friendly take on a compact-JSON leaf: bare strings, `(none)`
/// for empty arrays, everything else as-is.
fn humanize(leaf: &str) -> String {
    if leaf == "[]" {
        return "(none)".to_string();
    }
    match serde_json::from_str::<Value>(leaf) {
        Ok(Value::String(s)) => s,
        _ => leaf.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Envelope {
        let mut params = BTreeMap::new();
        params.insert("monoid".to_string(), "3,4,5".to_string());
        Envelope::ok(
            "info",
            params,
            json!({"atoms": [3, 4, 5], "gaps": [], "frobenius": 2, "note": "x y"}),
            Some(42),
        )
    }

    #[test]
    fn json_is_one_sorted_line() {
        let s = sample().render(Format::Json);
        assert!(s.ends_with('\n'));
        assert_eq!(s.lines().count(), 1);
        // Keys sorted at every level.
        let atoms = s.find("\"atoms\"").unwrap();
        let frob = s.find("\"frobenius\"").unwrap();
        assert!(atoms < frob);
        assert!(s.contains("\"bound_used\":42"));
        assert!(s.contains("\"status\":\"ok\""));
        assert!(!s.contains("\"error\""));
    }

    #[test]
    fn tsv_flattens_objects_and_keeps_arrays_whole() {
        let s = sample().render(Format::Tsv);
        assert!(s.contains("result.atoms\t[3,4,5]\n"));
        assert!(s.contains("result.gaps\t[]\n"));
        assert!(s.contains("parameters.monoid\t\"3,4,5\"\n"));
        assert!(s.contains("status\t\"ok\"\n"));
        // Sorted by path, exactly one tab per line, no trailing blanks.
        let lines: Vec<&str> = s.lines().collect();
        let mut sorted = lines.clone();
        sorted.sort();
        assert_eq!(lines, sorted);
        assert!(lines.iter().all(|l| l.matches('\t').count() == 1));
        assert!(lines.iter().all(|l| !l.ends_with(' ') && !l.ends_with('\t')));
    }

    #[test]
    fn human_unquotes_strings_and_names_empties() {
        let s = sample().render(Format::Human);
        assert!(s.contains("result.note: x y\n"));
        assert!(s.contains("result.gaps: (none)\n"));
        assert!(s.contains("result.atoms: [3,4,5]\n"));
    }

    #[test]
    fn error_envelopes_carry_code_and_null_result() {
        let e = Envelope::err("lengths", BTreeMap::new(), &Error::NotAnElement(7));
        assert!(e.is_err());
        let s = e.render(Format::Json);
        assert!(s.contains("\"result\":null"));
        assert!(s.contains("\"status\":\"error\""));
        assert!(s.contains("\"code\":\"NotAnElement\""));
        let t = e.render(Format::Tsv);
        assert!(t.contains("error.code\t\"NotAnElement\"\n"));
    }
}
