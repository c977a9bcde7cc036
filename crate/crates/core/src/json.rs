//! JSON encodings of the domain types.
//!
//! Rationals are strings "p/q" (or "p" for integers), factored polynomials
//! are sorted arrays of root strings, dense polynomials are arrays of
//! coefficient strings lowest degree first, parity sequences are '+'/'-'
//! strings. Emitted values are canonical, so every output re-parses to an
//! equal value.

use std::fmt;

use serde_json::{json, Value};

use crate::bethe::{BAESystem, BetheError};
use crate::lweight::{LWeight, LWeightError, RatB};
use crate::parity::ParitySeq;
use crate::poly::{DensePoly, FactoredPoly};
use crate::qchar::QChar;
use crate::rat::Rat;

/// Errors from decoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JsonError {
    Malformed { context: String },
    LWeight(LWeightError),
    Bethe(BetheError),
}

impl JsonError {
    pub fn name(&self) -> &'static str {
        match self {
            JsonError::Malformed { .. } => "MalformedJson",
            JsonError::LWeight(e) => e.name(),
            JsonError::Bethe(e) => e.name(),
        }
    }

    fn at(context: &str) -> Self {
        JsonError::Malformed {
            context: context.to_string(),
        }
    }
}

impl fmt::Display for JsonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JsonError::Malformed { context } => write!(f, "malformed JSON: {}", context),
            JsonError::LWeight(e) => write!(f, "{}", e),
            JsonError::Bethe(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for JsonError {}

impl From<LWeightError> for JsonError {
    fn from(e: LWeightError) -> Self {
        JsonError::LWeight(e)
    }
}

impl From<BetheError> for JsonError {
    fn from(e: BetheError) -> Self {
        JsonError::Bethe(e)
    }
}

pub fn factored_to_json(p: &FactoredPoly) -> Value {
    Value::Array(p.roots().iter().map(|r| json!(r.to_string())).collect())
}

pub fn factored_from_json(v: &Value) -> Result<FactoredPoly, JsonError> {
    let arr = v
        .as_array()
        .ok_or_else(|| JsonError::at("factored polynomial must be an array of root strings"))?;
    let roots: Vec<Rat> = arr
        .iter()
        .map(|r| {
            r.as_str()
                .ok_or_else(|| JsonError::at("root must be a string"))?
                .parse::<Rat>()
                .map_err(|e| JsonError::at(&e.to_string()))
        })
        .collect::<Result<_, _>>()?;
    Ok(FactoredPoly::from_roots(roots))
}

pub fn dense_to_json(p: &DensePoly) -> Value {
    Value::Array(p.coeffs().iter().map(|c| json!(c.to_string())).collect())
}

pub fn dense_from_json(v: &Value) -> Result<DensePoly, JsonError> {
    let arr = v
        .as_array()
        .ok_or_else(|| JsonError::at("dense polynomial must be an array of coefficient strings"))?;
    let coeffs: Vec<Rat> = arr
        .iter()
        .map(|c| {
            c.as_str()
                .ok_or_else(|| JsonError::at("coefficient must be a string"))?
                .parse::<Rat>()
                .map_err(|e| JsonError::at(&e.to_string()))
        })
        .collect::<Result<_, _>>()?;
    Ok(DensePoly::from_coeffs(coeffs))
}

fn ratb_to_json(c: &RatB) -> Value {
    json!({
        "num": factored_to_json(c.num()),
        "den": factored_to_json(c.den()),
    })
}

fn ratb_from_json(v: &Value) -> Result<RatB, JsonError> {
    let obj = v
        .as_object()
        .ok_or_else(|| JsonError::at("component must be an object with num and den"))?;
    let num = factored_from_json(obj.get("num").ok_or_else(|| JsonError::at("missing num"))?)?;
    let den = factored_from_json(obj.get("den").ok_or_else(|| JsonError::at("missing den"))?)?;
    Ok(RatB::new(num, den)?)
}

fn components_to_json(z: &LWeight) -> Value {
    Value::Array(z.components().iter().map(ratb_to_json).collect())
}

fn components_from_json(parity: &ParitySeq, v: &Value) -> Result<LWeight, JsonError> {
    let arr = v
        .as_array()
        .ok_or_else(|| JsonError::at("lweight must be an array of components"))?;
    let components = arr
        .iter()
        .enumerate()
        .map(|(idx, c)| {
            ratb_from_json(c).map_err(|e| match e {
                JsonError::LWeight(LWeightError::UnequalDegrees { .. }) => {
                    JsonError::LWeight(LWeightError::UnequalDegrees { component: idx + 1 })
                }
                other => other,
            })
        })
        .collect::<Result<_, _>>()?;
    Ok(LWeight::new(parity.clone(), components)?)
}

fn parity_from_json(v: &Value) -> Result<ParitySeq, JsonError> {
    v.as_str()
        .ok_or_else(|| JsonError::at("parity must be a '+'/'-' string"))?
        .parse::<ParitySeq>()
        .map_err(|e| JsonError::at(&e.to_string()))
}

pub fn lweight_to_json(z: &LWeight) -> Value {
    json!({
        "parity": z.parity().to_string(),
        "lweight": components_to_json(z),
    })
}

pub fn lweight_from_json(v: &Value) -> Result<LWeight, JsonError> {
    let obj = v
        .as_object()
        .ok_or_else(|| JsonError::at("expected an object with parity and lweight"))?;
    let parity = parity_from_json(
        obj.get("parity")
            .ok_or_else(|| JsonError::at("missing parity"))?,
    )?;
    components_from_json(
        &parity,
        obj.get("lweight")
            .ok_or_else(|| JsonError::at("missing lweight"))?,
    )
}

pub fn qchar_to_json(q: &QChar) -> Value {
    let terms: Vec<Value> = q
        .terms()
        .iter()
        .map(|(z, mult)| {
            json!({
                "lweight": components_to_json(z),
                "mult": mult,
            })
        })
        .collect();
    json!({
        "parity": q.parity().to_string(),
        "terms": terms,
    })
}

pub fn qchar_from_json(v: &Value) -> Result<QChar, JsonError> {
    let obj = v
        .as_object()
        .ok_or_else(|| JsonError::at("expected an object with parity and terms"))?;
    let parity = parity_from_json(
        obj.get("parity")
            .ok_or_else(|| JsonError::at("missing parity"))?,
    )?;
    let terms = obj
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| JsonError::at("terms must be an array"))?;
    let mut q = QChar::zero(parity.clone());
    for t in terms {
        let term = t
            .as_object()
            .ok_or_else(|| JsonError::at("term must be an object"))?;
        let z = components_from_json(
            &parity,
            term.get("lweight")
                .ok_or_else(|| JsonError::at("missing term lweight"))?,
        )?;
        let mult = term
            .get("mult")
            .and_then(Value::as_i64)
            .ok_or_else(|| JsonError::at("mult must be an integer"))?;
        q.add_term(z, mult)?;
    }
    Ok(q)
}

pub fn system_to_json(sys: &BAESystem) -> Value {
    let y: Vec<Value> = sys.y().iter().map(dense_to_json).collect();
    json!({
        "parity": sys.parity().to_string(),
        "zeta": components_to_json(sys.zeta()),
        "y": y,
    })
}

pub fn system_from_json(v: &Value) -> Result<BAESystem, JsonError> {
    let obj = v
        .as_object()
        .ok_or_else(|| JsonError::at("expected an object with parity, zeta and y"))?;
    let parity = parity_from_json(
        obj.get("parity")
            .ok_or_else(|| JsonError::at("missing parity"))?,
    )?;
    let zeta = components_from_json(
        &parity,
        obj.get("zeta")
            .ok_or_else(|| JsonError::at("missing zeta"))?,
    )?;
    let y = obj
        .get("y")
        .and_then(Value::as_array)
        .ok_or_else(|| JsonError::at("y must be an array of dense polynomials"))?
        .iter()
        .map(dense_from_json)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BAESystem::new(zeta, y)?)
}

/// Canonical rendering used by every command so byte-identical inputs give
/// byte-identical outputs.
pub fn to_string_pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vector_weight() -> LWeight {
        LWeight::new(
            "+-".parse().unwrap(),
            vec![
                RatB::new(
                    FactoredPoly::from_int_roots(&[-1]),
                    FactoredPoly::from_int_roots(&[0]),
                )
                .unwrap(),
                RatB::one(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn lweight_round_trip() {
        let z = vector_weight();
        let v = lweight_to_json(&z);
        assert_eq!(v["parity"], "+-");
        assert_eq!(v["lweight"][0]["num"][0], "-1");
        let back = lweight_from_json(&v).unwrap();
        assert_eq!(back, z);
    }

    #[test]
    fn lweight_input_is_reduced() {
        // (u+1)u / (u u) reduces to (u+1)/u
        let v = json!({
            "parity": "+-",
            "lweight": [
                {"num": ["-1", "0"], "den": ["0", "0"]},
                {"num": [], "den": []},
            ],
        });
        let z = lweight_from_json(&v).unwrap();
        assert_eq!(z, vector_weight());
    }

    #[test]
    fn invalid_lweight_is_rejected() {
        let v = json!({
            "parity": "+-",
            "lweight": [
                {"num": ["-1"], "den": []},
                {"num": [], "den": []},
            ],
        });
        let err = lweight_from_json(&v).unwrap_err();
        assert_eq!(err.name(), "UnequalDegrees");

        let v = json!({"parity": "+-", "lweight": [{"num": [], "den": []}]});
        assert_eq!(lweight_from_json(&v).unwrap_err().name(), "ComponentCount");
    }

    #[test]
    fn qchar_round_trip() {
        let chi = crate::gl11::irreducible_qchar(&vector_weight()).unwrap();
        let v = qchar_to_json(&chi);
        let back = qchar_from_json(&v).unwrap();
        assert_eq!(back, chi);
    }

    #[test]
    fn system_round_trip() {
        let sys = BAESystem::new(
            vector_weight(),
            vec![DensePoly::from_coeffs(vec![Rat::new(1, 2), Rat::one()])],
        )
        .unwrap();
        let v = system_to_json(&sys);
        assert_eq!(v["y"][0][0], "1/2");
        let back = system_from_json(&v).unwrap();
        assert_eq!(back, sys);
    }
}
