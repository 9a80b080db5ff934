//! Minimal structural JSON-schema checker for the shipped output schemas.
//!
//! Supports the subset the schemas use: `type`, `properties`, `required`,
//! `items`, `enum`, and nullable unions via `type: [..]`. Good enough to
//! keep the JSON outputs honest in tests without pulling in a full
//! validator.

use serde_json::Value;

pub fn validate(schema: &Value, value: &Value) -> Result<(), String> {
    check(schema, value, "$")
}

fn type_matches(t: &str, value: &Value) -> bool {
    match t {
        "object" => value.is_object(),
        "array" => value.is_array(),
        "string" => value.is_string(),
        "integer" => value.is_i64() || value.is_u64(),
        "number" => value.is_number(),
        "boolean" => value.is_boolean(),
        "null" => value.is_null(),
        _ => false,
    }
}

fn check(schema: &Value, value: &Value, path: &str) -> Result<(), String> {
    if let Some(types) = schema.get("type") {
        let ok = match types {
            Value::String(t) => type_matches(t, value),
            Value::Array(ts) => ts.iter().any(|t| t.as_str().is_some_and(|t| type_matches(t, value))),
            _ => return Err(format!("{path}: malformed schema type")),
        };
        if !ok {
            return Err(format!("{path}: expected type {types}, found {value}"));
        }
    }
    if let Some(allowed) = schema.get("enum").and_then(Value::as_array) {
        if !allowed.contains(value) {
            return Err(format!("{path}: {value} not in {allowed:?}"));
        }
    }
    if let Some(required) = schema.get("required").and_then(Value::as_array) {
        for key in required {
            let key = key.as_str().ok_or_else(|| format!("{path}: malformed required"))?;
            if value.get(key).is_none() {
                return Err(format!("{path}: missing required field `{key}`"));
            }
        }
    }
    if let Some(props) = schema.get("properties").and_then(Value::as_object) {
        for (key, subschema) in props {
            if let Some(sub) = value.get(key) {
                check(subschema, sub, &format!("{path}.{key}"))?;
            }
        }
    }
    if let Some(items) = schema.get("items") {
        if let Some(array) = value.as_array() {
            for (i, item) in array.iter().enumerate() {
                check(items, item, &format!("{path}[{i}]"))?;
            }
        }
    }
    Ok(())
}

pub const CONVERT_SCHEMA: &str = include_str!("../schema/convert.schema.json");
pub const PLAN_SCHEMA: &str = include_str!("../schema/plan.schema.json");
pub const SCAN_SCHEMA: &str = include_str!("../schema/scan.schema.json");
pub const CERTIFICATE_SCHEMA: &str = include_str!("../schema/certificate.schema.json");

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn subset_validator() {
        let schema = json!({
            "type": "object",
            "required": ["a"],
            "properties": {
                "a": {"type": "integer"},
                "b": {"type": ["string", "null"]},
                "c": {"type": "array", "items": {"type": "integer"}},
                "d": {"enum": ["x", "y"]}
            }
        });
        assert!(validate(&schema, &json!({"a": 1, "b": null, "c": [1,2], "d": "x"})).is_ok());
        assert!(validate(&schema, &json!({"b": "s"})).is_err());
        assert!(validate(&schema, &json!({"a": "s"})).is_err());
        assert!(validate(&schema, &json!({"a": 1, "d": "z"})).is_err());
    }

    #[test]
    fn shipped_schemas_parse() {
        for s in [CONVERT_SCHEMA, PLAN_SCHEMA, SCAN_SCHEMA, CERTIFICATE_SCHEMA] {
            let _: serde_json::Value = serde_json::from_str(s).unwrap();
        }
    }
}
