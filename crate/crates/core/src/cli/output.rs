use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::Provenance;

/// A labelled result value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Field {
    pub value: Value,
    pub provenance: &'static str,
}

/// Machine-readable record printed by every command.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub results: BTreeMap<String, Field>,
    pub meta: BTreeMap<String, Value>,
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        let mut meta = BTreeMap::new();
        meta.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
        OutputRecord {
            command: command.into(),
            inputs: BTreeMap::new(),
            results: BTreeMap::new(),
            meta,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.inputs.insert(key.into(), json!(value));
        self
    }

    pub fn result(&mut self, key: &str, value: impl Serialize, provenance: Provenance) -> &mut Self {
        self.results.insert(
            key.into(),
            Field {
                value: json!(value),
                provenance: provenance.label(),
            },
        );
        self
    }

    pub fn meta(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.meta.insert(key.into(), json!(value));
        self
    }

    /// Pretty JSON with sorted keys, so parse-and-reserialize is a fixed point.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("record is serializable");
        serde_json::to_string_pretty(&value).expect("value is serializable")
    }

    /// `field,value,provenance` rows.
    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["field", "value", "provenance"])?;
        for (name, field) in &self.results {
            let value = match &field.value {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            w.write_record([name.as_str(), value.as_str(), field.provenance])?;
        }
        w.flush()?;
        Ok(())
    }
}
