use std::path::{Path, PathBuf};

use anyhow::Result;
use serde::Serialize;
use serde_json::{Map, Value};

pub const SCHEMA: u64 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub name: String,
    pub holds: bool,
    pub detail: Value,
}

impl Verdict {
    pub fn new(name: impl Into<String>, holds: bool, detail: impl Serialize) -> Self {
        Verdict { name: name.into(), holds, detail: serde_json::to_value(detail).expect("serializable detail") }
    }
}

/// Everything needed to replay a run. Timing is printed to stderr and never
/// stored, so identical runs produce identical files.
#[derive(Debug, Clone)]
pub struct RunReport {
    pub command: &'static str,
    pub parameters: Map<String, Value>,
    pub seed: Option<u64>,
    pub outputs: Vec<PathBuf>,
    pub verdicts: Vec<Verdict>,
    pub results: Map<String, Value>,
}

impl RunReport {
    pub fn new(command: &'static str, seed: Option<u64>) -> Self {
        RunReport {
            command,
            parameters: Map::new(),
            seed,
            outputs: Vec::new(),
            verdicts: Vec::new(),
            results: Map::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) {
        self.parameters.insert(key.into(), serde_json::to_value(value).expect("serializable parameter"));
    }

    pub fn result(&mut self, key: &str, value: impl Serialize) {
        self.results.insert(key.into(), serde_json::to_value(value).expect("serializable result"));
    }

    pub fn verdict(&mut self, v: Verdict) {
        self.verdicts.push(v);
    }

    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn to_json(&self) -> String {
        let mut body = Map::new();
        body.insert("command".into(), Value::from(self.command));
        body.insert("parameters".into(), Value::Object(self.parameters.clone()));
        body.insert("seed".into(), self.seed.map_or(Value::Null, Value::from));
        body.insert(
            "outputs".into(),
            self.outputs.iter().map(|p| Value::from(p.display().to_string())).collect::<Vec<_>>().into(),
        );
        body.insert("verdicts".into(), serde_json::to_value(&self.verdicts).expect("serializable verdicts"));
        body.insert("results".into(), Value::Object(self.results.clone()));
        let mut doc = Map::new();
        doc.insert("schema".into(), Value::from(SCHEMA));
        if let Value::Object(rest) = decimal_strings(Value::Object(body)) {
            doc.extend(rest);
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable report");
        s.push('\n');
        s
    }

    /// Writes the report to `path`, or to stdout when no path is given.
    pub fn emit(&self, path: Option<&Path>) -> Result<()> {
        let json = self.to_json();
        match path {
            Some(p) => interp_core::io::write_atomic(p, json.as_bytes())?,
            None => print!("{json}"),
        }
        Ok(())
    }
}

/// Rewrites every JSON number as its decimal string.
pub fn decimal_strings(v: Value) -> Value {
    match v {
        Value::Number(n) => Value::String(n.to_string()),
        Value::Array(a) => Value::Array(a.into_iter().map(decimal_strings).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, decimal_strings(v))).collect()),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_become_strings() {
        let v = decimal_strings(serde_json::json!({"a": [1, 2.5], "b": {"c": 18446744073709551615u64}, "d": true}));
        assert_eq!(v, serde_json::json!({"a": ["1", "2.5"], "b": {"c": "18446744073709551615"}, "d": true}));
    }

    #[test]
    fn schema_stays_numeric() {
        let mut r = RunReport::new("count", Some(3));
        r.param("k", 2);
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["seed"], "3");
        assert_eq!(v["parameters"]["k"], "2");
    }
}
