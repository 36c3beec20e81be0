use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

fn sort_keys(v: Value) -> Value {
    match v {
        Value::Object(m) => {
            let mut entries: Vec<(String, Value)> = m.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            let mut out = Map::new();
            for (k, v) in entries {
                out.insert(k, sort_keys(v));
            }
            Value::Object(out)
        }
        Value::Array(xs) => Value::Array(xs.into_iter().map(sort_keys).collect()),
        other => other,
    }
}

/// JSON value with object keys sorted at every level.
pub fn canonical_value<T: Serialize + ?Sized>(x: &T) -> Result<Value> {
    let v = serde_json::to_value(x).map_err(|e| Error::InvariantViolation(format!("serialization failed: {e}")))?;
    Ok(sort_keys(v))
}

/// Pretty-printed canonical JSON with a trailing newline.
pub fn to_canonical_json<T: Serialize + ?Sized>(x: &T) -> Result<String> {
    let v = canonical_value(x)?;
    let mut s = serde_json::to_string_pretty(&v).expect("values always serialize");
    s.push('\n');
    Ok(s)
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}
