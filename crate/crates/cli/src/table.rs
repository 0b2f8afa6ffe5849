//! Plain-text rendering of JSON results for `--table`.

use serde_json::Value;
use std::fmt::Write;

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            items.iter().map(cell).collect::<Vec<_>>().join(",")
        }
        other => other.to_string(),
    }
}

fn rows(items: &[Value], out: &mut String) {
    let mut cols: Vec<&str> = Vec::new();
    for it in items {
        if let Value::Object(m) = it {
            for k in m.keys() {
                if !cols.contains(&k.as_str()) {
                    cols.push(k);
                }
            }
        }
    }
    if cols.is_empty() {
        for it in items {
            let _ = writeln!(out, "{}", cell(it));
        }
        return;
    }
    let grid: Vec<Vec<String>> = items
        .iter()
        .map(|it| cols.iter().map(|c| cell(it.get(*c).unwrap_or(&Value::Null))).collect())
        .collect();
    let width: Vec<usize> = cols
        .iter()
        .enumerate()
        .map(|(i, c)| grid.iter().map(|r| r[i].len()).max().unwrap_or(0).max(c.len()))
        .collect();
    let line = |vals: Vec<&str>| -> String {
        let parts: Vec<String> = vals.iter().zip(&width).map(|(v, w)| format!("{v:<w$}")).collect();
        parts.join("  ").trim_end().to_string()
    };
    let _ = writeln!(out, "{}", line(cols.clone()));
    for r in &grid {
        let _ = writeln!(out, "{}", line(r.iter().map(String::as_str).collect()));
    }
}

pub fn render(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Array(items) => rows(items, &mut out),
        Value::Object(m) => {
            let key_w = m.keys().map(String::len).max().unwrap_or(0);
            let mut nested = Vec::new();
            for (k, val) in m {
                match val {
                    Value::Array(items) if items.iter().any(Value::is_object) => nested.push((k, items)),
                    _ => {
                        let _ = writeln!(out, "{k:<key_w$}  {}", cell(val));
                    }
                }
            }
            for (k, items) in nested {
                let _ = writeln!(out, "\n{k}:");
                rows(items, &mut out);
            }
        }
        other => {
            let _ = writeln!(out, "{}", cell(other));
        }
    }
    out
}
