//! Command results: a text rendering plus a JSON value with a fixed schema
//! tag. Object keys come out sorted, so identical inputs give identical bytes.

use aspw_core::oracle::OracleReport;
use aspw_core::{FFElem, Place, RatFunc};
use serde_json::{json, Map, Value};

pub const SCHEMA: &str = "aspw/1";

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub text: String,
    pub json: Value,
    /// A criterion and its oracle (or an internal cross-check) disagree.
    pub disagreement: bool,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.to_string(), text: String::new(), json: Value::Object(Map::new()), disagreement: false }
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    pub fn set(&mut self, key: &str, v: impl Into<Value>) {
        if let Value::Object(m) = &mut self.json {
            m.insert(key.to_string(), v.into());
        }
    }

    pub fn to_json_string(&self) -> String {
        let mut m = match &self.json {
            Value::Object(m) => m.clone(),
            other => {
                let mut m = Map::new();
                m.insert("result".into(), other.clone());
                m
            }
        };
        m.insert("schema".into(), SCHEMA.into());
        m.insert("command".into(), self.command.clone().into());
        m.insert("disagreement".into(), self.disagreement.into());
        let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("json values always serialize");
        s.push('\n');
        s
    }
}

pub fn place_str(p: &Place) -> String {
    match p {
        Place::Infinity => "inf".into(),
        Place::Finite(pl) => pl.to_string(),
    }
}

pub fn rf(x: &RatFunc) -> Value {
    x.to_string().into()
}

pub fn el(x: &FFElem) -> Value {
    x.to_string().into()
}

pub fn elems(xs: &[FFElem]) -> Value {
    Value::Array(xs.iter().map(el).collect())
}

pub fn functional(v: &[u32]) -> Value {
    json!(v)
}

pub fn oracle_json(r: &OracleReport) -> Value {
    let params: Map<String, Value> = r.parameters.iter().map(|(k, v)| (k.clone(), Value::from(v.clone()))).collect();
    json!({
        "claim": r.claim,
        "parameters": params,
        "mode": r.mode.as_str(),
        "seed": r.seed,
        "verdict": r.verdict,
        "witness": r.witness,
    })
}

pub fn oracle_text(r: &OracleReport) -> String {
    let params: Vec<String> = r.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let mut s = format!(
        "{}: {} ({}{})",
        r.claim,
        if r.verdict { "pass" } else { "FAIL" },
        r.mode.as_str(),
        r.seed.map(|x| format!(", seed {x}")).unwrap_or_default()
    );
    if !params.is_empty() {
        s.push_str(&format!("\n  {}", params.join("\n  ")));
    }
    if let Some(w) = &r.witness {
        s.push_str(&format!("\n  witness: {w}"));
    }
    s
}
