//! Browser bindings: window rendering, Vandermonde rotation and named
//! sequences. Every function returns JSON text or an error message.

use std::collections::BTreeMap;

use binarray::scalar::parse_list;
use binarray::{cauchy_product, vandermonde_expand, BinomialArray, InitialSequence, SeqVec};
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct WindowJson {
    cols: Vec<i64>,
    rows: Vec<RowJson>,
}

#[derive(Serialize)]
struct RowJson {
    k: u64,
    values: Vec<String>,
}

#[derive(Serialize)]
struct RotationJson {
    product: String,
    columns: Vec<ColumnJson>,
}

#[derive(Serialize)]
struct ColumnJson {
    n: i64,
    left: Vec<String>,
    right: Vec<String>,
    dot: String,
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

/// Rows `0..rows` and columns `col_min..=col_max` of `B(init)`.
#[wasm_bindgen]
pub fn render_window(init: &str, rows: u32, col_min: i32, col_max: i32) -> Result<String, String> {
    if rows == 0 || rows > 60 {
        return Err("rows must be between 1 and 60".into());
    }
    let initial = parse_list(init).map_err(|e| e.to_string())?;
    let array = BinomialArray::new(InitialSequence::new(initial));
    let w = array.window(0, u64::from(rows) - 1, col_min.into(), col_max.into()).map_err(|e| e.to_string())?;
    let out = WindowJson {
        cols: w.cols().collect(),
        rows: w.rows().map(|k| RowJson { k, values: strings(&w.row(k)) }).collect(),
    };
    json(&out)
}

/// Column `n` of `B(a)` against column `-n` of `B(b)` turned upside down,
/// rows `0..=m`, for each `n` in `n_min..=n_max`.
#[wasm_bindgen]
pub fn vandermonde(a: &str, b: &str, m: u32, n_min: i32, n_max: i32) -> Result<String, String> {
    let a = SeqVec::new(parse_list(a).map_err(|e| e.to_string())?);
    let b = SeqVec::new(parse_list(b).map_err(|e| e.to_string())?);
    let m = m as usize;
    let product = cauchy_product(&a, &b, m).map_err(|e| e.to_string())?;
    let cols = vandermonde_expand(&a, &b, m, n_min.into()..=n_max.into()).map_err(|e| e.to_string())?;
    let out = RotationJson {
        product: product.to_string(),
        columns: cols
            .iter()
            .map(|c| ColumnJson { n: c.n, left: strings(&c.lhs), right: strings(&c.rhs), dot: c.dot.to_string() })
            .collect(),
    };
    json(&out)
}

/// First `count` terms of a named family; `params` is `key=value` pairs
/// separated by commas.
#[wasm_bindgen]
pub fn sequence(family: &str, params: &str, count: u32) -> Result<String, String> {
    let mut map = BTreeMap::new();
    for pair in params.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = pair.split_once('=').ok_or_else(|| format!("{pair:?} is not key=value"))?;
        let v: i64 = v.trim().parse().map_err(|_| format!("{k} needs an integer"))?;
        map.insert(k.trim().to_string(), v);
    }
    let terms = binarray::catalan::sequence(family, &map, count.min(200) as usize).map_err(|e| e.to_string())?;
    json(&strings(&terms))
}

/// Names and parameters of the sequence families, for the page's menu.
#[wasm_bindgen]
pub fn families() -> String {
    let list: Vec<(&str, &[&str], &str)> =
        binarray::catalan::FAMILIES.iter().map(|f| (f.name, f.params, f.about)).collect();
    serde_json::to_string(&list).unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_json() {
        let text = render_window("1,-1", 5, 0, 4).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["cols"], serde_json::json!([0, 1, 2, 3, 4]));
        let col2: Vec<&str> = v["rows"].as_array().unwrap().iter().map(|r| r["values"][2].as_str().unwrap()).collect();
        assert_eq!(col2, ["1", "1", "-1", "-1", "0"]);
        assert!(render_window("1,q", 3, 0, 1).is_err());
        assert!(render_window("1", 3, 2, 0).is_err());
        assert!(render_window("1", 0, 0, 1).is_err());
    }

    #[test]
    fn rotation_dots() {
        let text = vandermonde("3,4,-1,-2", "2,2,-1,-1", 3, -2, 2).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["product"], "-13");
        let cols = v["columns"].as_array().unwrap();
        assert_eq!(cols.len(), 5);
        assert!(cols.iter().all(|c| c["dot"] == "-13"));
        assert!(vandermonde("1", "1", 3, 0, 0).is_err());
    }

    #[test]
    fn sequences() {
        assert_eq!(sequence("catalan", "", 5).unwrap(), r#"["1","1","2","5","14"]"#);
        assert_eq!(sequence("crs", "r=1, s=1", 4).unwrap(), r#"["1","2","5","14"]"#);
        assert!(sequence("crs", "r", 4).is_err());
        assert!(families().contains("shapiro-row"));
    }
}
