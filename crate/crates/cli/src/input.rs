use serde_json::{json, Value};
use zonotopal::VectorList;

/// The parsed input document.
#[derive(Debug, Clone)]
pub struct InputSpec {
    pub list: VectorList,
    pub labels: Option<Vec<String>>,
}

impl InputSpec {
    pub fn parse(text: &str) -> Result<Self, String> {
        let doc: Value = serde_json::from_str(text).map_err(|e| format!("input is not valid JSON: {e}"))?;
        Self::from_value(&doc)
    }

    pub fn from_value(doc: &Value) -> Result<Self, String> {
        let obj = doc.as_object().ok_or("input must be a JSON object")?;
        let dim = obj
            .get("dim")
            .and_then(Value::as_u64)
            .ok_or("\"dim\" must be a nonnegative integer")? as usize;
        let rows = obj
            .get("vectors")
            .and_then(Value::as_array)
            .ok_or("\"vectors\" must be an array of integer vectors")?;
        let vectors = rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.as_array()
                    .ok_or(format!("vector {i} is not an array"))?
                    .iter()
                    .map(|c| c.as_i64().ok_or(format!("vector {i} has a non-integer entry")))
                    .collect::<Result<Vec<i64>, String>>()
            })
            .collect::<Result<Vec<_>, String>>()?;
        let labels = match obj.get("labels") {
            None | Some(Value::Null) => None,
            Some(Value::Array(ls)) => {
                let ls = ls
                    .iter()
                    .map(|l| l.as_str().map(str::to_owned).ok_or("labels must be strings"))
                    .collect::<Result<Vec<_>, _>>()?;
                if ls.len() != vectors.len() {
                    return Err(format!("{} labels for {} vectors", ls.len(), vectors.len()));
                }
                Some(ls)
            }
            Some(_) => return Err("\"labels\" must be an array of strings".into()),
        };
        if let Some(key) = obj.keys().find(|k| !matches!(k.as_str(), "dim" | "vectors" | "labels")) {
            return Err(format!("unknown input field {key:?}"));
        }
        let list = VectorList::new(dim, vectors).map_err(|e| e.to_string())?;
        Ok(InputSpec { list, labels })
    }

    /// The input as it would be written back: re-parses to an equal spec.
    pub fn echo(&self) -> Value {
        let mut v = json!({ "dim": self.list.dim(), "vectors": self.list.vectors() });
        if let Some(ls) = &self.labels {
            v["labels"] = json!(ls);
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_echoes() {
        let spec = InputSpec::parse(r#"{"dim": 2, "vectors": [[1, 0], [1, 1]], "labels": ["a", "b"]}"#).unwrap();
        assert_eq!(spec.list.len(), 2);
        let again = InputSpec::from_value(&spec.echo()).unwrap();
        assert_eq!(again.list, spec.list);
        assert_eq!(again.labels, spec.labels);
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in [
            "[1]",
            r#"{"dim": 1}"#,
            r#"{"dim": 1, "vectors": []}"#,
            r#"{"dim": 1, "vectors": [[0]]}"#,
            r#"{"dim": 2, "vectors": [[1]]}"#,
            r#"{"dim": 1, "vectors": [[1.5]]}"#,
            r#"{"dim": 1, "vectors": [[1]], "labels": ["a", "b"]}"#,
            r#"{"dim": 1, "vectors": [[1]], "extra": 1}"#,
        ] {
            assert!(InputSpec::parse(bad).is_err(), "{bad}");
        }
    }
}
