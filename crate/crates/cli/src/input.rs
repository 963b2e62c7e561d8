//! Complex vectors on the command line: a JSON array whose entries are
//! `[re, im]` pairs, bare reals, or rational strings such as `"1/4"`.

use cp3_numeric::C64;
use serde_json::Value;

fn real(v: &Value) -> Result<f64, String> {
    match v {
        Value::Number(n) => n.as_f64().ok_or_else(|| format!("{n} is not a finite number")),
        Value::String(s) => rational(s),
        other => Err(format!("expected a number, got {other}")),
    }
}

fn rational(s: &str) -> Result<f64, String> {
    let bad = || format!("cannot read {s:?} as a rational");
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<f64>().map_err(|_| bad())?, d.trim().parse::<f64>().map_err(|_| bad())?),
        None => (s.trim().parse::<f64>().map_err(|_| bad())?, 1.0),
    };
    if d == 0.0 {
        return Err(bad());
    }
    Ok(n / d)
}

pub fn complex_vector(text: &str) -> Result<Vec<C64>, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| format!("invalid JSON {text:?}: {e}"))?;
    let Value::Array(items) = v else {
        return Err(format!("expected a JSON array, got {text}"));
    };
    items
        .iter()
        .map(|item| match item {
            Value::Array(pair) if pair.len() == 2 => Ok(C64::new(real(&pair[0])?, real(&pair[1])?)),
            Value::Array(pair) => Err(format!("expected [re, im], got {} entries", pair.len())),
            other => Ok(C64::new(real(other)?, 0.0)),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_entries() {
        let v = complex_vector(r#"[[1, 2], 0.5, "1/4", ["-3/2", "2"]]"#).unwrap();
        assert_eq!(v, vec![C64::new(1.0, 2.0), C64::new(0.5, 0.0), C64::new(0.25, 0.0), C64::new(-1.5, 2.0)]);
        assert!(complex_vector("[[1, 2, 3]]").is_err());
        assert!(complex_vector(r#"["1/0"]"#).is_err());
        assert!(complex_vector("{}").is_err());
    }
}
