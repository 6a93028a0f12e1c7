//! Report model shared by every command and its table, JSON and CSV renderings.

use canonical_bounds::{QuadSurd, Rational};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

/// Significant digits carried by every decimal rendering.
pub const SIG_DIGITS: usize = 12;

#[derive(Debug, Clone)]
pub enum Field {
    Int(BigInt),
    Rat(Rational),
    Surd(QuadSurd),
    Bool(bool),
    Text(String),
    Null,
}

impl Field {
    /// Exact textual form: an integer, `p/q`, a surd expression, or plain text.
    pub fn exact(&self) -> String {
        match self {
            Field::Int(n) => n.to_string(),
            Field::Rat(q) => q.to_string(),
            Field::Surd(s) => s.to_string(),
            Field::Bool(b) => b.to_string(),
            Field::Text(t) => t.clone(),
            Field::Null => String::new(),
        }
    }

    pub fn approx(&self) -> Option<String> {
        match self {
            Field::Int(n) => Some(QuadSurd::from(n.clone()).approx(SIG_DIGITS)),
            Field::Rat(q) => Some(QuadSurd::from(q.clone()).approx(SIG_DIGITS)),
            Field::Surd(s) => Some(s.approx(SIG_DIGITS)),
            _ => None,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Field::Int(_) | Field::Rat(_) => json!({"exact": self.exact(), "approx": self.approx()}),
            Field::Surd(s) => json!({"exact": s, "approx": self.approx()}),
            Field::Bool(b) => Value::Bool(*b),
            Field::Text(t) => Value::String(t.clone()),
            Field::Null => Value::Null,
        }
    }
}

impl From<BigInt> for Field {
    fn from(n: BigInt) -> Self {
        Field::Int(n)
    }
}

impl From<u64> for Field {
    fn from(n: u64) -> Self {
        Field::Int(n.into())
    }
}

impl From<Rational> for Field {
    fn from(q: Rational) -> Self {
        if q.is_integer() {
            Field::Int(q.to_integer())
        } else {
            Field::Rat(q)
        }
    }
}

impl From<QuadSurd> for Field {
    fn from(s: QuadSurd) -> Self {
        match s.to_rational() {
            Some(q) => q.into(),
            None => Field::Surd(s),
        }
    }
}

impl From<bool> for Field {
    fn from(b: bool) -> Self {
        Field::Bool(b)
    }
}

impl From<&str> for Field {
    fn from(t: &str) -> Self {
        Field::Text(t.to_string())
    }
}

impl From<String> for Field {
    fn from(t: String) -> Self {
        Field::Text(t)
    }
}

impl<T: Into<Field>> From<Option<T>> for Field {
    fn from(v: Option<T>) -> Self {
        v.map_or(Field::Null, Into::into)
    }
}

pub type Record = Vec<(String, Field)>;

/// Builds a record from `key => value` pairs.
#[macro_export]
macro_rules! record {
    ($($key:expr => $value:expr),* $(,)?) => {
        vec![$(($key.to_string(), $crate::render::Field::from($value))),*]
    };
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub inputs: Record,
    pub results: Vec<Record>,
    pub refs: Vec<String>,
    /// Fixed CSV header; otherwise the union of result keys in first-seen order.
    pub columns: Option<Vec<String>>,
    pub notes: Vec<String>,
}

impl Report {
    /// Inputs that are `Null` (flags not given) are dropped.
    pub fn new(command: &str, inputs: Record) -> Self {
        Report {
            command: command.to_string(),
            inputs: inputs.into_iter().filter(|(_, v)| !matches!(v, Field::Null)).collect(),
            results: Vec::new(),
            refs: Vec::new(),
            columns: None,
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, record: Record) {
        self.results.push(record);
    }

    pub fn cite(&mut self, id: &str) {
        if !self.refs.iter().any(|r| r == id) {
            self.refs.push(id.to_string());
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    fn column_names(&self) -> Vec<String> {
        if let Some(cols) = &self.columns {
            return cols.clone();
        }
        let mut cols: Vec<String> = Vec::new();
        for (key, _) in self.results.iter().flatten() {
            if !cols.contains(key) {
                cols.push(key.clone());
            }
        }
        cols
    }

    pub fn to_json(&self) -> Value {
        let object = |rec: &Record| -> Value {
            Value::Object(rec.iter().map(|(k, v)| (k.clone(), v.to_json())).collect::<Map<_, _>>())
        };
        let mut out = json!({
            "command": self.command,
            "inputs": object(&self.inputs),
            "results": self.results.iter().map(object).collect::<Vec<_>>(),
            "paper_refs": self.refs,
        });
        if !self.notes.is_empty() {
            out["notes"] = json!(self.notes);
        }
        out
    }

    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let cols = self.column_names();
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        w.write_record(&cols)?;
        for rec in &self.results {
            let row = cols.iter().map(|c| {
                rec.iter()
                    .find(|(k, _)| k == c)
                    .map(|(_, v)| v.exact())
                    .unwrap_or_default()
            });
            w.write_record(row)?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_table(&self) -> String {
        let mut out = format!("{}\n", self.command);
        let cell = |f: &Field| match (f, f.approx()) {
            (Field::Int(_), _) | (_, None) => f.exact(),
            (_, Some(a)) => format!("{}  (~ {a})", f.exact()),
        };
        let inputs: Vec<String> = self.inputs.iter().map(|(k, v)| format!("{k}={}", v.exact())).collect();
        if !inputs.is_empty() {
            out.push_str(&format!("  inputs: {}\n", inputs.join(" ")));
        }
        for rec in &self.results {
            out.push('\n');
            let width = rec.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, v) in rec {
                out.push_str(&format!("  {k:<width$}  {}\n", cell(v)));
            }
        }
        for n in &self.notes {
            out.push_str(&format!("\nnote: {n}\n"));
        }
        out
    }
}
