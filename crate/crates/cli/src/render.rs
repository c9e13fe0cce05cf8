use serde_json::Value;

/// Two-column `key  value` rendering of a JSON document. Nested objects use
/// dotted keys; arrays of scalars or arrays stay inline.
pub fn table(value: &Value) -> String {
    let mut rows = Vec::new();
    collect("", value, &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}

fn collect(prefix: &str, value: &Value, rows: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                collect(&key(k), v, rows);
            }
        }
        Value::Array(items) if items.iter().any(Value::is_object) => {
            for (i, v) in items.iter().enumerate() {
                collect(&format!("{prefix}[{i}]"), v, rows);
            }
        }
        Value::String(s) => rows.push((prefix.to_string(), s.clone())),
        other => rows.push((prefix.to_string(), other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flattens_nested_objects() {
        let v: Value = serde_json::from_str(r#"{"a":{"b":1,"cc":[[1,2]]},"s":"x","l":[{"n":true}]}"#).unwrap();
        assert_eq!(table(&v), "a.b     1\na.cc    [[1,2]]\nl[0].n  true\ns       x\n");
    }
}
