use std::io::{self, Write};

use hypergraph_spectra::search::{edge_list, SearchReport};
use hypergraph_spectra::Hypergraph;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone)]
pub enum Field {
    Float(f64),
    Int(i64),
    Bool(bool),
    Text(String),
    Floats(Vec<f64>),
    Absent,
}

impl Field {
    fn text(&self) -> String {
        match self {
            Field::Float(x) => float(*x),
            Field::Int(i) => i.to_string(),
            Field::Bool(b) => b.to_string(),
            Field::Text(s) => s.clone(),
            Field::Floats(xs) => xs.iter().map(|x| float(*x)).collect::<Vec<_>>().join(","),
            Field::Absent => "none".into(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Field::Float(x) => json!(x),
            Field::Int(i) => json!(i),
            Field::Bool(b) => json!(b),
            Field::Text(s) => json!(s),
            Field::Floats(xs) => json!(xs),
            Field::Absent => Value::Null,
        }
    }
}

fn float(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.10}")
    } else {
        x.to_string()
    }
}

macro_rules! into_field {
    ($($t:ty => $arm:ident as $cast:ty),*) => {
        $(impl From<$t> for Field {
            fn from(v: $t) -> Self {
                Field::$arm(v as $cast)
            }
        })*
    };
}

into_field!(f64 => Float as f64, f32 => Float as f64, usize => Int as i64, u64 => Int as i64, i64 => Int as i64);

impl From<bool> for Field {
    fn from(v: bool) -> Self {
        Field::Bool(v)
    }
}

impl From<String> for Field {
    fn from(v: String) -> Self {
        Field::Text(v)
    }
}

impl From<&str> for Field {
    fn from(v: &str) -> Self {
        Field::Text(v.to_string())
    }
}

impl From<Vec<f64>> for Field {
    fn from(v: Vec<f64>) -> Self {
        Field::Floats(v)
    }
}

impl<T: Into<Field>> From<Option<T>> for Field {
    fn from(v: Option<T>) -> Self {
        v.map_or(Field::Absent, Into::into)
    }
}

/// Ordered `key=value` record, printable as text lines or one JSON object.
#[derive(Debug, Clone, Default)]
pub struct Report {
    fields: Vec<(String, Field)>,
    rows: Vec<Report>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn put(&mut self, key: &str, value: impl Into<Field>) -> &mut Self {
        self.fields.push((key.to_string(), value.into()));
        self
    }

    pub fn push_row(&mut self, row: Report) {
        self.rows.push(row);
    }

    pub fn put_search(&mut self, r: &SearchReport, timing: bool) {
        self.put("question", r.question.as_str());
        self.put("n", r.n);
        self.put("k", r.k);
        self.put("alpha", r.alpha);
        if r.alpha.is_none() && r.optimum_value.fract() == 0.0 {
            self.put("optimum", r.optimum_value as i64);
        } else {
            self.put("optimum", r.optimum_value);
        }
        self.put("witness", r.witness.as_ref().map(graph));
        self.put("witness_classes", r.witness_iso_class_count);
        self.put("verdict", r.verdict.to_string());
        self.put("counterexample", r.counterexample.as_ref().map(graph));
        for (k, v) in &r.details {
            self.put(k, typed(v));
        }
        if timing {
            self.put("wall_time_s", r.wall_time.as_secs_f64());
        }
    }

    fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (k, v) in &self.fields {
            map.insert(k.clone(), v.json());
        }
        if !self.rows.is_empty() {
            map.insert("rows".into(), Value::Array(self.rows.iter().map(Report::to_json).collect()));
        }
        Value::Object(map)
    }

    pub fn emit(&self, as_json: bool) -> io::Result<()> {
        let mut out = io::stdout().lock();
        if as_json {
            writeln!(out, "{}", self.to_json())?;
            return Ok(());
        }
        for (k, v) in &self.fields {
            writeln!(out, "{k}={}", v.text())?;
        }
        for row in &self.rows {
            let line: Vec<String> = row.fields.iter().map(|(k, v)| format!("{k}={}", v.text())).collect();
            writeln!(out, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

fn typed(raw: &str) -> Field {
    if let Ok(i) = raw.parse::<i64>() {
        Field::Int(i)
    } else if let Ok(b) = raw.parse::<bool>() {
        Field::Bool(b)
    } else if let Ok(x) = raw.parse::<f64>() {
        Field::Float(x)
    } else {
        Field::Text(raw.to_string())
    }
}

/// Edge list of a hypergraph on the report's vertex set, e.g. `0 1,1 2`.
pub fn graph(h: &Hypergraph) -> String {
    edge_list(h)
}
