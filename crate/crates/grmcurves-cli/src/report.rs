//! Deterministic report output: JSON with stable key order, or a flat CSV
//! for table-building.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, Serialize)]
pub struct ReportRecord {
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub outputs: BTreeMap<String, Value>,
    pub checks: BTreeMap<String, bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ms: Option<u128>,
}

impl ReportRecord {
    pub fn new(
        command: &str,
        params: BTreeMap<String, Value>,
        outputs: BTreeMap<String, Value>,
        checks: BTreeMap<String, bool>,
    ) -> Self {
        ReportRecord {
            command: command.into(),
            params,
            outputs,
            checks,
            ms: None,
        }
    }
}

pub fn emit(records: &[ReportRecord], csv: bool) {
    if csv {
        emit_csv(records);
    } else if records.len() == 1 {
        println!("{}", serde_json::to_string_pretty(&records[0]).unwrap());
    } else {
        println!("{}", serde_json::to_string_pretty(records).unwrap());
    }
}

fn emit_csv(records: &[ReportRecord]) {
    println!("command,section,key,value");
    for rec in records {
        for (k, v) in &rec.params {
            csv_row(&rec.command, "param", k, &scalar(v));
        }
        for (k, v) in &rec.outputs {
            csv_row(&rec.command, "output", k, &scalar(v));
        }
        for (k, &v) in &rec.checks {
            csv_row(&rec.command, "check", k, if v { "pass" } else { "fail" });
        }
        if let Some(ms) = rec.ms {
            csv_row(&rec.command, "timing", "ms", &ms.to_string());
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn csv_row(command: &str, section: &str, key: &str, value: &str) {
    println!(
        "{},{},{},{}",
        quote(command),
        quote(section),
        quote(key),
        quote(value)
    );
}

fn quote(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}
