//! Report serialization. Every command emits a JSON object with the keys
//! `command`, `params`, `result`, `elapsed_ms`; all integer payloads are
//! decimal strings so values of unbounded magnitude survive any JSON parser.

use std::io::Write;
use std::path::Path;

use serde_json::{json, Map, Value};

pub struct Report {
    pub command: &'static str,
    pub params: Map<String, Value>,
    pub result: Value,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "params": Value::Object(self.params.clone()),
            "result": self.result,
            "elapsed_ms": self.elapsed_ms.to_string(),
        })
    }

    pub fn render(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.to_json()).expect("report is valid JSON");
        text.push('\n');
        text
    }
}

/// Builder for the `params` echo; values are stored as decimal strings.
pub fn params_of(pairs: &[(&str, String)]) -> Map<String, Value> {
    let mut map = Map::new();
    for (key, value) in pairs {
        map.insert((*key).to_string(), Value::String(value.clone()));
    }
    map
}

/// Writes to stdout, or atomically to `path` via a temporary file in the
/// same directory.
pub fn emit(text: &str, path: Option<&Path>) -> std::io::Result<()> {
    match path {
        None => {
            print!("{text}");
            std::io::stdout().flush()
        }
        Some(path) => {
            let dir = path.parent().filter(|d| !d.as_os_str().is_empty());
            let mut file = match dir {
                Some(dir) => tempfile::NamedTempFile::new_in(dir)?,
                None => tempfile::NamedTempFile::new_in(".")?,
            };
            file.write_all(text.as_bytes())?;
            file.persist(path).map_err(|e| e.error)?;
            Ok(())
        }
    }
}
