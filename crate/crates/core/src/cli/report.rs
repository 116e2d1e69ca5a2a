use serde_json::{Map, Value};

use crate::exactring::{format_rational, Rational};

/// A single report value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReportValue {
    Rational(Rational),
    Bool(bool),
    Int(i64),
    Text(String),
}

impl ReportValue {
    fn text(&self) -> String {
        match self {
            ReportValue::Rational(q) => format_rational(q),
            ReportValue::Bool(b) => b.to_string(),
            ReportValue::Int(i) => i.to_string(),
            ReportValue::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            ReportValue::Rational(q) => Value::String(format_rational(q)),
            ReportValue::Bool(b) => Value::Bool(*b),
            ReportValue::Int(i) => Value::from(*i),
            ReportValue::Text(s) => Value::String(s.clone()),
        }
    }
}

impl From<Rational> for ReportValue {
    fn from(q: Rational) -> Self {
        ReportValue::Rational(q)
    }
}

impl From<&Rational> for ReportValue {
    fn from(q: &Rational) -> Self {
        ReportValue::Rational(q.clone())
    }
}

impl From<bool> for ReportValue {
    fn from(b: bool) -> Self {
        ReportValue::Bool(b)
    }
}

impl From<i64> for ReportValue {
    fn from(i: i64) -> Self {
        ReportValue::Int(i)
    }
}

impl From<String> for ReportValue {
    fn from(s: String) -> Self {
        ReportValue::Text(s)
    }
}

impl From<&str> for ReportValue {
    fn from(s: &str) -> Self {
        ReportValue::Text(s.to_string())
    }
}

/// Ordered `key = value` records.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReportDocument {
    records: Vec<(String, ReportValue)>,
}

impl ReportDocument {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Into<ReportValue>) {
        self.records.push((key.into(), value.into()));
    }

    pub fn extend(&mut self, other: ReportDocument) {
        self.records.extend(other.records);
    }

    pub fn records(&self) -> &[(String, ReportValue)] {
        &self.records
    }

    pub fn get(&self, key: &str) -> Option<&ReportValue> {
        self.records.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn render_text(&self) -> String {
        self.records
            .iter()
            .map(|(k, v)| format!("{k} = {}\n", v.text()))
            .collect()
    }

    /// One JSON object; rationals are `"p/q"` strings.
    pub fn render_json(&self) -> String {
        let map: Map<String, Value> = self
            .records
            .iter()
            .map(|(k, v)| (k.clone(), v.json()))
            .collect();
        let mut out = serde_json::to_string_pretty(&Value::Object(map))
            .expect("report values always serialize");
        out.push('\n');
        out
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            self.render_json()
        } else {
            self.render_text()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::rat;

    #[test]
    fn text_and_json() {
        let mut doc = ReportDocument::new();
        doc.push("a_hol", rat(-1, 48));
        doc.push("gauge_free", true);
        doc.push("colors", 3i64);
        doc.push("note", "x");
        assert_eq!(doc.render_text(), "a_hol = -1/48\ngauge_free = true\ncolors = 3\nnote = x\n");
        let v: Value = serde_json::from_str(&doc.render_json()).unwrap();
        assert_eq!(v["a_hol"], "-1/48");
        assert_eq!(v["gauge_free"], true);
        assert_eq!(v["colors"], 3);
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["a_hol", "gauge_free", "colors", "note"]);
    }
}
