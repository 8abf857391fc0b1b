//! Result documents: deterministic JSON with sorted keys, plus the
//! `--pretty` table renderer.

use num_rational::Ratio;
use serde_json::{json, Map, Value};

/// Assembles the output envelope.  `complete` is attached only for
/// enumeration-backed results.
pub fn document(command: &str, inputs: Value, result: Value, complete: Option<bool>) -> Value {
    let mut doc = Map::new();
    doc.insert("command".to_string(), Value::String(command.to_string()));
    if let Some(flag) = complete {
        doc.insert("complete".to_string(), Value::Bool(flag));
    }
    doc.insert("inputs".to_string(), inputs);
    doc.insert("result".to_string(), result);
    doc.insert(
        "version".to_string(),
        Value::String(env!("CARGO_PKG_VERSION").to_string()),
    );
    Value::Object(doc)
}

pub fn ratio(value: Ratio<u64>) -> Value {
    json!({
        "denominator": value.denom(),
        "numerator": value.numer(),
    })
}

pub fn emit(doc: &Value, pretty: bool) {
    if pretty {
        print!("{}", pretty_text(doc));
    } else {
        println!("{}", serde_json::to_string(doc).expect("serializable document"));
    }
}

fn pretty_text(doc: &Value) -> String {
    let mut out = String::new();
    let object = doc.as_object().expect("document is an object");
    for (key, value) in object {
        match value {
            Value::Object(_) | Value::Array(_) => {
                out.push_str(&format!("{key}:\n"));
                render_nested(value, "  ", &mut out);
            }
            _ => out.push_str(&format!("{key}: {}\n", scalar(value))),
        }
    }
    out
}

fn render_nested(value: &Value, indent: &str, out: &mut String) {
    match value {
        Value::Object(map) => {
            let width = map.keys().map(String::len).max().unwrap_or(0);
            for (key, value) in map {
                match value {
                    Value::Object(_) | Value::Array(_) if !is_scalar_array(value) => {
                        out.push_str(&format!("{indent}{key}:\n"));
                        render_nested(value, &format!("{indent}  "), out);
                    }
                    _ => out.push_str(&format!(
                        "{indent}{key:<width$}  {}\n",
                        flat(value),
                        width = width
                    )),
                }
            }
        }
        Value::Array(items) => {
            if is_scalar_array(value) {
                out.push_str(&format!("{indent}{}\n", flat(value)));
            } else {
                for item in items {
                    if let Some(row) = check_row(item) {
                        out.push_str(&format!("{indent}{row}\n"));
                    } else {
                        render_nested(item, indent, out);
                        out.push('\n');
                    }
                }
            }
        }
        _ => out.push_str(&format!("{indent}{}\n", scalar(value))),
    }
}

/// Verification check entries get a one-line PASS/FAIL table row.
fn check_row(item: &Value) -> Option<String> {
    let map = item.as_object()?;
    let name = map.get("name")?.as_str()?;
    let pass = map.get("pass")?.as_bool()?;
    let detail = map.get("detail")?.as_str()?;
    let mark = if pass { "PASS" } else { "FAIL" };
    Some(format!("{mark}  {name:<42}  {detail}"))
}

fn is_scalar_array(value: &Value) -> bool {
    matches!(value, Value::Array(items)
        if items.iter().all(|i| !matches!(i, Value::Object(_) | Value::Array(_))))
}

fn flat(value: &Value) -> String {
    match value {
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(scalar).collect();
            format!("{{{}}}", inner.join(", "))
        }
        Value::Object(map) => {
            if let (Some(n), Some(d)) = (map.get("numerator"), map.get("denominator")) {
                if map.len() == 2 {
                    return format!("{}/{}", scalar(n), scalar(d));
                }
            }
            let inner: Vec<String> = map
                .iter()
                .map(|(k, v)| format!("{k}: {}", scalar(v)))
                .collect();
            inner.join(", ")
        }
        _ => scalar(value),
    }
}

fn scalar(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}
