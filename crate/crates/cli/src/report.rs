use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::args::OutputFormat;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub level: &'static str,
    pub message: String,
}

impl Diagnostic {
    pub fn warning(message: impl Into<String>) -> Diagnostic {
        Diagnostic {
            level: "warning",
            message: message.into(),
        }
    }

    pub fn note(message: impl Into<String>) -> Diagnostic {
        Diagnostic {
            level: "note",
            message: message.into(),
        }
    }
}

/// Flat tabular view of a report, used for CSV.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub verb: &'static str,
    pub params: Map<String, Value>,
    pub status: String,
    pub results: Vec<Value>,
    pub summary: Value,
    pub diagnostics: Vec<Diagnostic>,
    pub table: Table,
    pub text: Vec<String>,
    pub wall_ms: Option<u128>,
}

impl Report {
    pub fn new(verb: &'static str) -> Report {
        Report {
            verb,
            params: Map::new(),
            status: "ok".into(),
            results: Vec::new(),
            summary: Value::Null,
            diagnostics: Vec::new(),
            table: Table::default(),
            text: Vec::new(),
            wall_ms: None,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) {
        self.params.insert(key.to_string(), value.into());
    }

    fn payload(&self) -> Value {
        let diagnostics: Vec<Value> = self
            .diagnostics
            .iter()
            .map(|d| json!({"level": d.level, "message": d.message}))
            .collect();
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": {"verb": self.verb, "params": Value::Object(self.params.clone())},
            "status": self.status,
            "results": self.results,
            "summary": self.summary,
            "diagnostics": diagnostics,
        })
    }

    /// SHA-256 of the compact canonical payload (everything except timing).
    pub fn fingerprint(&self) -> String {
        let canonical = serde_json::to_string(&self.payload()).expect("serializable");
        hex::encode(Sha256::digest(canonical.as_bytes()))
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.payload();
        let obj = v.as_object_mut().expect("object");
        obj.insert("fingerprint".into(), Value::String(self.fingerprint()));
        if let Some(ms) = self.wall_ms {
            obj.insert("timing".into(), json!({"wall_ms": ms as u64}));
        }
        v
    }
}

pub fn emit(report: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&report.to_json()).expect("serializable");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&report.table.header).expect("in-memory write");
            for row in &report.table.rows {
                w.write_record(row).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
        OutputFormat::Text => {
            let mut out = format!("{}: {}\n", report.verb, report.status);
            for line in &report.text {
                out.push_str(line);
                out.push('\n');
            }
            for d in &report.diagnostics {
                out.push_str(&format!("{}: {}\n", d.level, d.message));
            }
            if let Some(ms) = report.wall_ms {
                out.push_str(&format!("wall time: {ms} ms\n"));
            }
            out
        }
    }
}

/// Exact integer as a JSON number, whatever its size.
pub fn big(x: u128) -> Value {
    serde_json::to_value(x).expect("arbitrary precision numbers")
}
