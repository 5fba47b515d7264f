//! JSON encodings. Index sets are comma-joined keys (`"1,3"`), exact numbers
//! are strings (`"-3/2"`); integers are also accepted as JSON numbers.
//! Output maps use sorted keys.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::degrees::{GradingVector, PlueckerIndex};
use crate::error::{Error, Result};
use crate::fflv::{DominantWeight, TrianglePattern};
use crate::ideals::GradedPolynomial;
use crate::poly::{format_rational, parse_rational, Monomial, Rational};
use crate::tableaux::PBWTableau;
use crate::triangle::pairs;
use crate::tropical::TropicalPoint;
use crate::weights::WeightSystem;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| parse_err(format!("invalid JSON: {e}")))
}

fn rational_of(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap().into())),
        other => Err(parse_err(format!("expected an exact number, got {other}"))),
    }
}

fn integer_of(v: &Value) -> Result<i64> {
    let r = rational_of(v)?;
    if !r.is_integer() {
        return Err(parse_err(format!("expected an integer, got {v}")));
    }
    i64::try_from(r.to_integer()).map_err(|_| parse_err(format!("integer out of range: {v}")))
}

fn usize_field(obj: &Map<String, Value>, key: &str) -> Result<usize> {
    obj.get(key)
        .and_then(Value::as_u64)
        .map(|n| n as usize)
        .ok_or_else(|| parse_err(format!("missing or invalid field {key:?}")))
}

fn object(v: &Value) -> Result<&Map<String, Value>> {
    v.as_object().ok_or_else(|| parse_err("expected a JSON object"))
}

fn pair_of(key: &str) -> Result<(usize, usize)> {
    let bad = || parse_err(format!("expected a key \"i,j\", got {key:?}"));
    let (i, j) = key.split_once(',').ok_or_else(bad)?;
    Ok((i.trim().parse().map_err(|_| bad())?, j.trim().parse().map_err(|_| bad())?))
}

fn triangle_entries(n: usize, map: &Map<String, Value>, what: &str) -> Result<BTreeMap<(usize, usize), i64>> {
    let mut out = BTreeMap::new();
    for (key, v) in map {
        let (i, j) = pair_of(key)?;
        if !(1 <= i && i < j && j <= n) {
            return Err(Error::InvalidIndex(format!("{what} key {key:?} for n = {n}")));
        }
        out.insert((i, j), integer_of(v)?);
    }
    for (i, j) in pairs(n) {
        if !out.contains_key(&(i, j)) {
            return Err(Error::MissingIndex(format!("{what} entry {i},{j}")));
        }
    }
    Ok(out)
}

/// `{"n": 4, "a": {"1,2": 1, ...}}` with every pair present.
pub fn weights_from_json(v: &Value) -> Result<WeightSystem> {
    let obj = object(v)?;
    let n = usize_field(obj, "n")?;
    if n < 2 {
        return Err(Error::ShapeMismatch(format!("n = {n} is too small")));
    }
    let a = obj.get("a").and_then(Value::as_object).ok_or_else(|| parse_err("missing object field \"a\""))?;
    let entries = triangle_entries(n, a, "weight")?;
    Ok(WeightSystem::from_fn(n, |i, j| entries[&(i, j)]))
}

pub fn weights_to_json(a: &WeightSystem) -> Value {
    let map: Map<String, Value> = pairs(a.n()).map(|(i, j)| (format!("{i},{j}"), json!(a.get(i, j)))).collect();
    json!({"n": a.n(), "a": map})
}

pub fn pattern_to_json(t: &TrianglePattern) -> Value {
    let map: Map<String, Value> = pairs(t.n()).map(|(i, j)| (format!("{i},{j}"), json!(t.get(i, j)))).collect();
    json!({"n": t.n(), "t": map})
}

pub fn pattern_from_json(v: &Value) -> Result<TrianglePattern> {
    let obj = object(v)?;
    let n = usize_field(obj, "n")?;
    let t = obj.get("t").and_then(Value::as_object).ok_or_else(|| parse_err("missing object field \"t\""))?;
    let entries = triangle_entries(n, t, "pattern")?;
    let values = pairs(n)
        .map(|p| u32::try_from(entries[&p]).map_err(|_| parse_err("pattern entries must be nonnegative")))
        .collect::<Result<Vec<u32>>>()?;
    TrianglePattern::from_entries(n, values)
}

pub fn tableau_to_json(y: &PBWTableau) -> Value {
    json!({"n": y.n(), "shape": y.shape().coeffs(), "columns": y.columns()})
}

pub fn weight_to_json(l: &DominantWeight) -> Value {
    json!({"n": l.n(), "coeffs": l.coeffs()})
}

fn rational_map(map: &BTreeMap<PlueckerIndex, Rational>) -> Value {
    // keys sort as strings so the output is stable under any index order
    let sorted: BTreeMap<String, Value> = map.iter().map(|(k, v)| (k.key(), json!(format_rational(v)))).collect();
    Value::Object(sorted.into_iter().collect())
}

fn indexed_values(n: usize, map: &Map<String, Value>) -> Result<BTreeMap<PlueckerIndex, Rational>> {
    map.iter().map(|(k, v)| Ok((PlueckerIndex::parse_key(n, k)?, rational_of(v)?))).collect()
}

pub fn point_to_json(s: &TropicalPoint) -> Value {
    json!({"n": s.n(), "s": rational_map(s.values())})
}

/// Either `{"n": 3, "s": {...}}` or a bare map over all `2^n - 2` keys.
pub fn point_from_json(v: &Value) -> Result<TropicalPoint> {
    let obj = object(v)?;
    let (n, map) = match obj.get("s").and_then(Value::as_object) {
        Some(map) => (usize_field(obj, "n")?, map),
        None => {
            let n = (2..=16).find(|&n| (1usize << n) - 2 == obj.len()).ok_or_else(|| {
                parse_err(format!("a bare point needs 2^n - 2 keys, got {}", obj.len()))
            })?;
            (n, obj)
        }
    };
    TropicalPoint::from_values(n, indexed_values(n, map)?)
}

pub fn grading_to_json(g: &GradingVector) -> Value {
    json!({"n": g.n(), "d": g.d(), "s": rational_map(g.values())})
}

pub fn monomial_to_json(m: &Monomial<PlueckerIndex>) -> Value {
    Value::Array(m.vars().iter().map(|v| json!(v.key())).collect())
}

/// `[{"coeff": "1", "monomial": ["1", "2,3"]}, ...]`.
pub fn polynomial_to_json(f: &GradedPolynomial) -> Value {
    Value::Array(
        f.terms()
            .map(|(m, c)| json!({"coeff": format_rational(c), "monomial": monomial_to_json(m)}))
            .collect(),
    )
}

pub fn polynomial_from_json(n: usize, v: &Value) -> Result<GradedPolynomial> {
    let terms = v.as_array().ok_or_else(|| parse_err("a polynomial is a list of terms"))?;
    let mut f = GradedPolynomial::zero();
    for t in terms {
        let t = object(t)?;
        let c = rational_of(t.get("coeff").ok_or_else(|| parse_err("term without \"coeff\""))?)?;
        let vars = t
            .get("monomial")
            .and_then(Value::as_array)
            .ok_or_else(|| parse_err("term without \"monomial\" list"))?
            .iter()
            .map(|k| k.as_str().ok_or_else(|| parse_err("monomial entries are index keys")).and_then(|k| PlueckerIndex::parse_key(n, k)))
            .collect::<Result<Vec<_>>>()?;
        f.add_term(Monomial::from_vars(vars), c);
    }
    Ok(f)
}

/// A list of polynomials, or `{"n": .., "relations": [...]}`.
pub fn polynomials_from_json(n: usize, v: &Value) -> Result<Vec<GradedPolynomial>> {
    let list = match v {
        Value::Array(list) => list,
        Value::Object(obj) => obj.get("relations").and_then(Value::as_array).ok_or_else(|| parse_err("missing \"relations\" list"))?,
        _ => return Err(parse_err("expected a list of polynomials")),
    };
    list.iter().map(|p| polynomial_from_json(n, p)).collect()
}

/// Parses `"1,1,0"` into a multidegree or coefficient list.
pub fn parse_list(spec: &str) -> Result<Vec<u32>> {
    spec.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| parse_err(format!("not a list of nonnegative integers: {spec:?}"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::plucker_relations;
    use crate::tropical::map_h;

    #[test]
    fn weights_roundtrip() {
        let a = WeightSystem::toric(4);
        assert_eq!(weights_from_json(&weights_to_json(&a)).unwrap(), a);
        let text = r#"{"n": 3, "a": {"1,2": "1", "2,3": 1, "1,3": -2}}"#;
        let a = weights_from_json(&parse_json(text).unwrap()).unwrap();
        assert_eq!(a.get(1, 3), -2);
        assert!(weights_from_json(&parse_json(r#"{"n": 3, "a": {"1,2": 1}}"#).unwrap()).is_err());
        assert!(weights_from_json(&parse_json(r#"{"n": 3, "a": {"1,2": "1/2", "2,3": 1, "1,3": 1}}"#).unwrap()).is_err());
    }

    #[test]
    fn point_roundtrip() {
        let s = map_h(&WeightSystem::constant(3, 1)).unwrap();
        let v = point_to_json(&s);
        assert_eq!(point_from_json(&v).unwrap(), s);
        assert_eq!(point_from_json(&v["s"]).unwrap(), s);
    }

    #[test]
    fn polynomial_roundtrip() {
        for f in plucker_relations(4, &[1, 2, 3]).unwrap() {
            assert_eq!(polynomial_from_json(4, &polynomial_to_json(&f)).unwrap(), f);
        }
    }

    #[test]
    fn lists() {
        assert_eq!(parse_list("1, 1,0").unwrap(), vec![1, 1, 0]);
        assert!(parse_list("1,-1").is_err());
    }
}
