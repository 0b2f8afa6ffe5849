//! Inequality files: `{"coeffs": {"u-v": "p/q", ...}, "rhs": "p/q"}`.

use anyhow::{anyhow, bail, Context, Result};
use bondkit::graph::Graph;
use bondkit::polytope::{from_spec, parse_rational, LinearInequality};
use num_rational::BigRational;
use serde_json::{json, Map, Value};
use std::path::Path;

fn rational(v: &Value) -> Result<BigRational> {
    let s = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        _ => bail!("expected a number or a \"p/q\" string, found {v}"),
    };
    parse_rational(&s).map_err(|e| anyhow!("{e}"))
}

pub fn from_json(g: &Graph, v: &Value) -> Result<LinearInequality> {
    let obj = v.as_object().ok_or_else(|| anyhow!("inequality must be a JSON object"))?;
    let coeffs = obj
        .get("coeffs")
        .and_then(Value::as_object)
        .ok_or_else(|| anyhow!("missing \"coeffs\" object"))?;
    let rhs = rational(obj.get("rhs").ok_or_else(|| anyhow!("missing \"rhs\""))?)?;
    let mut a = vec![BigRational::from_integer(0.into()); g.edge_count()];
    for (key, val) in coeffs {
        let (u, w) = key
            .split_once('-')
            .and_then(|(u, w)| Some((u.trim().parse::<usize>().ok()?, w.trim().parse::<usize>().ok()?)))
            .ok_or_else(|| anyhow!("edge key must look like \"u-v\", found {key:?}"))?;
        let e = g
            .edge_between(u, w)
            .ok_or_else(|| anyhow!("{key} is not an edge of the graph"))?;
        a[e] = rational(val)?;
    }
    LinearInequality::new(&a, &rhs).map_err(|e| anyhow!("{e}"))
}

pub fn to_json(g: &Graph, ineq: &LinearInequality) -> Value {
    let mut coeffs = Map::new();
    for e in ineq.support() {
        let (u, v) = g.edge(e);
        coeffs.insert(format!("{u}-{v}"), json!(ineq.coeffs()[e].to_string()));
    }
    let mut out = json!({"coeffs": coeffs, "rhs": ineq.rhs().to_string(), "text": ineq.to_string()});
    if let Some(t) = ineq.tag() {
        out["tag"] = json!(t);
    }
    out
}

/// Reads one inequality or a list: a JSON array, JSON lines, or a single
/// object.
pub fn read_file(g: &Graph, path: &Path) -> Result<Vec<LinearInequality>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let values: Vec<Value> = match serde_json::from_str::<Value>(&text) {
        Ok(Value::Array(items)) => items,
        Ok(v) => vec![v],
        Err(_) => text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(serde_json::from_str)
            .collect::<std::result::Result<_, _>>()
            .with_context(|| format!("parsing {}", path.display()))?,
    };
    values.iter().map(|v| from_json(g, v)).collect()
}

/// `--ineq` accepts a family spec such as `cycle-sum:outer` or a JSON file.
pub fn resolve(g: &Graph, cycles: &[(String, Vec<usize>)], arg: &str) -> Result<LinearInequality> {
    let path = Path::new(arg);
    if path.exists() {
        let mut all = read_file(g, path)?;
        if all.len() != 1 {
            bail!("{arg} holds {} inequalities, expected one", all.len());
        }
        return Ok(all.remove(0));
    }
    from_spec(g, cycles, arg).map_err(|e| anyhow!("--ineq {arg:?}: {e}"))
}
