//! Document encoding. JSON and CSV carry the same leaves: CSV is the JSON
//! tree flattened to `path,value` rows.

use anyhow::Result;
use serde_json::{Map, Value};

use crate::geometry::Rational;
use crate::report::CheckReport;

use super::Format;

/// Leaves of `doc` as `(path, value)`; object keys and array indices are
/// joined with `.`. Empty containers appear as `{}` / `[]` leaves.
pub fn flatten(doc: &Value) -> Vec<(String, String)> {
    fn go(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
        let join = |k: &str| {
            if prefix.is_empty() {
                k.to_string()
            } else {
                format!("{prefix}.{k}")
            }
        };
        match v {
            Value::Object(m) if !m.is_empty() => {
                for (k, child) in m {
                    go(&join(k), child, out);
                }
            }
            Value::Array(a) if !a.is_empty() => {
                for (i, child) in a.iter().enumerate() {
                    go(&join(&i.to_string()), child, out);
                }
            }
            Value::Object(_) => out.push((prefix.to_string(), "{}".into())),
            Value::Array(_) => out.push((prefix.to_string(), "[]".into())),
            Value::String(s) => out.push((prefix.to_string(), s.clone())),
            other => out.push((prefix.to_string(), other.to_string())),
        }
    }
    let mut out = Vec::new();
    go("", doc, &mut out);
    out
}

fn as_rational(s: &str) -> Option<Rational> {
    if !s.contains('/') {
        return None;
    }
    s.parse().ok()
}

pub fn render(doc: &Value, format: Format, decimal: Option<usize>) -> Result<String> {
    match format {
        Format::Json => {
            let mut doc = doc.clone();
            if let (Some(digits), Value::Object(m)) = (decimal, &mut doc) {
                let approx: Map<String, Value> = flatten(&Value::Object(m.clone()))
                    .into_iter()
                    .filter_map(|(p, v)| as_rational(&v).map(|r| (p, Value::String(r.to_decimal(digits)))))
                    .collect();
                m.insert("approx_decimal".into(), Value::Object(approx));
            }
            Ok(serde_json::to_string_pretty(&doc)? + "\n")
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            match decimal {
                None => w.write_record(["path", "value"])?,
                Some(_) => w.write_record(["path", "value", "approx_decimal"])?,
            }
            for (path, value) in flatten(doc) {
                match decimal {
                    None => w.write_record([&path, &value])?,
                    Some(digits) => {
                        let approx = as_rational(&value).map(|r| r.to_decimal(digits)).unwrap_or_default();
                        w.write_record([&path, &value, &approx])?
                    }
                }
            }
            Ok(String::from_utf8(w.into_inner()?)?)
        }
    }
}

/// Human summary printed when the document goes to a file.
pub fn summary(report: &CheckReport) -> String {
    let mut out = format!(
        "instance: {}\nchecks: {} passed, {} failed, {} total\n",
        report.instance, report.summary.passed, report.summary.failed, report.summary.total
    );
    for c in report.failures() {
        out.push_str(&format!("FAIL {}: {}\n", c.name, c.witness));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn flatten_paths() {
        let doc = json!({"a": {"b": [1, "x,y"]}, "c": [], "d": true});
        assert_eq!(
            flatten(&doc),
            vec![
                ("a.b.0".to_string(), "1".to_string()),
                ("a.b.1".into(), "x,y".into()),
                ("c".into(), "[]".into()),
                ("d".into(), "true".into()),
            ]
        );
    }

    #[test]
    fn csv_quotes_and_decimals() {
        let doc = json!({"w": "3/8", "s": "a,b"});
        let out = render(&doc, Format::Csv, Some(3)).unwrap();
        assert_eq!(out, "path,value,approx_decimal\nw,3/8,0.375\ns,\"a,b\",\n");
        let js = render(&doc, Format::Json, Some(2)).unwrap();
        assert!(js.contains("\"approx_decimal\": {\n    \"w\": \"0.37\"\n  }"));
    }
}
