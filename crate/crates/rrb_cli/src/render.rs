//! Output rendering. JSON is the source of truth: reports are converted to
//! `serde_json::Value` first (whose object map sorts keys), so two runs of
//! the same computation print byte-identical output. Text mode is a plain
//! rendering of the same value.

use serde_json::Value;

/// Canonical single-line JSON with sorted keys.
pub fn to_canonical_json(v: &Value) -> String {
    serde_json::to_string(v).expect("serializing a Value cannot fail")
}

/// Human-readable indented rendering of the same value.
pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    render(v, 0, &mut out);
    if out.ends_with('\n') {
        out.pop();
    }
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

/// Inline form for an array whose elements are scalars, or arrays of
/// scalars one level deep (matrix rows stay on one line each).
fn inline(v: &Value) -> Option<String> {
    match v {
        Value::Array(items) => {
            let parts: Option<Vec<String>> = items.iter().map(scalar).collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        _ => scalar(v),
    }
}

fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str(&format!("{pad}{{}}\n"));
                return;
            }
            for (key, val) in map {
                if let Some(s) = inline(val) {
                    out.push_str(&format!("{pad}{key}: {s}\n"));
                } else {
                    out.push_str(&format!("{pad}{key}:\n"));
                    render(val, depth + 1, out);
                }
            }
        }
        Value::Array(items) => {
            if items.is_empty() {
                out.push_str(&format!("{pad}[]\n"));
                return;
            }
            for item in items {
                if let Some(s) = inline(item) {
                    out.push_str(&format!("{pad}- {s}\n"));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render(item, depth + 1, out);
                }
            }
        }
        _ => {
            out.push_str(&format!("{pad}{}\n", scalar(v).unwrap()));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn json_output_sorts_keys() {
        let v = json!({"zeta": 1, "alpha": [2, 3], "mid": {"b": true, "a": "x"}});
        assert_eq!(
            to_canonical_json(&v),
            "{\"alpha\":[2,3],\"mid\":{\"a\":\"x\",\"b\":true},\"zeta\":1}"
        );
    }

    #[test]
    fn text_inlines_scalar_rows_and_indents_nesting() {
        let v = json!({
            "dims": [1, 2, 3],
            "matrix": [["1", "0"], ["0", "1"]],
            "report": {"valid": true, "violations": []}
        });
        let expected = "dims: [1, 2, 3]\n\
                        matrix:\n  - [1, 0]\n  - [0, 1]\n\
                        report:\n  valid: true\n  violations: []";
        assert_eq!(to_text(&v), expected);
    }
}
