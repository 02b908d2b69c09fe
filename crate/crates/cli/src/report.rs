//! A command's result and its text, JSON and LaTeX renderings.

use serde_json::{json, Map, Value};

use cometcount::exact::{LaurentPoly2, RatFun};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

/// A rendered polynomial or rational function.
#[derive(Clone, Debug)]
pub struct Expr {
    text: String,
    latex: String,
}

impl Expr {
    pub fn poly(p: &LaurentPoly2, names: [&str; 2]) -> Self {
        Self { text: p.to_text(names), latex: p.to_latex(names) }
    }

    pub fn ratfun(f: &RatFun, names: [&str; 2]) -> Self {
        Self { text: f.to_text(names), latex: f.to_latex(names) }
    }

    pub fn plain(s: impl Into<String>) -> Self {
        let s = s.into();
        Self { latex: s.clone(), text: s }
    }
}

#[derive(Clone, Debug)]
enum Entry {
    Expr { label: &'static str, expr: Expr },
    Value(Value),
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    query: Map<String, Value>,
    entries: Vec<(String, Entry)>,
    checks: Vec<(String, bool)>,
    timings: Vec<(String, f64)>,
    /// Free-form lines shown only in text and LaTeX output.
    notes: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Self::default();
        r.query("command", json!(command));
        r
    }

    pub fn query(&mut self, key: &str, v: Value) {
        self.query.insert(key.to_string(), v);
    }

    /// A polynomial-valued field; `label` is its LaTeX name.
    pub fn expr(&mut self, key: &str, label: &'static str, expr: Expr) {
        self.entries.push((key.to_string(), Entry::Expr { label, expr }));
    }

    pub fn value(&mut self, key: &str, v: Value) {
        self.entries.push((key.to_string(), Entry::Value(v)));
    }

    pub fn check(&mut self, name: &str, ok: bool) {
        self.checks.push((name.to_string(), ok));
    }

    pub fn timing(&mut self, stage: &str, seconds: f64) {
        self.timings.push((stage.to_string(), seconds));
    }

    pub fn clear_timings(&mut self) {
        self.timings.clear();
    }

    pub fn note(&mut self, line: String) {
        self.notes.push(line);
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
                s.push('\n');
                s
            }
            Format::Text => self.to_text(),
            Format::Latex => self.to_latex(),
        }
    }

    fn to_json(&self) -> Value {
        let mut out = Map::new();
        out.insert("schema".into(), json!(1));
        out.insert("query".into(), Value::Object(self.query.clone()));
        for (k, e) in &self.entries {
            let v = match e {
                Entry::Expr { expr, .. } => json!(expr.text),
                Entry::Value(v) => v.clone(),
            };
            out.insert(k.clone(), v);
        }
        let checks: Map<String, Value> = self.checks.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
        out.insert("checks".into(), Value::Object(checks));
        let timings: Map<String, Value> = self.timings.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
        out.insert("timings".into(), Value::Object(timings));
        Value::Object(out)
    }

    fn query_line(&self) -> String {
        let parts: Vec<String> = self
            .query
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}={s}"),
                v => format!("{k}={v}"),
            })
            .collect();
        parts.join(" ")
    }

    fn to_text(&self) -> String {
        let mut s = format!("query: {}\n", self.query_line());
        for (k, e) in &self.entries {
            match e {
                Entry::Expr { expr, .. } => s.push_str(&format!("{k} = {}\n", expr.text)),
                Entry::Value(Value::String(v)) => s.push_str(&format!("{k} = {v}\n")),
                Entry::Value(v) => s.push_str(&format!("{k} = {v}\n")),
            }
        }
        for line in &self.notes {
            s.push_str(line);
            s.push('\n');
        }
        for (k, ok) in &self.checks {
            s.push_str(&format!("check {k}: {}\n", if *ok { "ok" } else { "FAILED" }));
        }
        for (k, t) in &self.timings {
            s.push_str(&format!("time {k}: {t:.3}s\n"));
        }
        s
    }

    fn to_latex(&self) -> String {
        let mut s = format!("% {}\n\\begin{{align*}}\n", self.query_line());
        let mut rows = Vec::new();
        for (k, e) in &self.entries {
            match e {
                Entry::Expr { label, expr } => rows.push(format!("{label} &= {}", expr.latex)),
                Entry::Value(Value::String(v)) => {
                    rows.push(format!("\\text{{{}}} &= \\text{{{}}}", tex_escape(k), tex_escape(v)))
                }
                Entry::Value(v) => rows.push(format!("\\text{{{}}} &= \\text{{{}}}", tex_escape(k), tex_escape(&v.to_string()))),
            }
        }
        s.push_str(&rows.join(" \\\\\n"));
        s.push_str("\n\\end{align*}\n");
        for line in &self.notes {
            s.push_str(&format!("% {line}\n"));
        }
        for (k, ok) in &self.checks {
            s.push_str(&format!("% check {k}: {}\n", if *ok { "ok" } else { "FAILED" }));
        }
        for (k, t) in &self.timings {
            s.push_str(&format!("% time {k}: {t:.3}s\n"));
        }
        s
    }
}

fn tex_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '_' | '#' | '%' | '&' | '$' | '{' | '}' => {
                out.push('\\');
                out.push(c);
            }
            _ => out.push(c),
        }
    }
    out
}
