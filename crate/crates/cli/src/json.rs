use std::str::FromStr;

use hmclass_core::algebra::{PolyY, Rational, Spectrum};
use hmclass_core::ktheory::GradedProjClass;
use hmclass_core::spectrum::{SigmaClass, StratumSpec};
use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

pub fn bigint(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integer literal"))
}

/// `[num, den]` in lowest terms.
pub fn rational(r: &Rational) -> Value {
    json!([bigint(r.numer()), bigint(r.denom())])
}

/// Ascending coefficient list.
pub fn poly(p: &PolyY) -> Value {
    Value::Array(p.coeffs().iter().map(rational).collect())
}

pub fn class(c: &GradedProjClass) -> Value {
    let map: Map<String, Value> = (0..=c.n())
        .map(|d| (format!("P^{d}"), poly(c.coeff(d))))
        .collect();
    Value::Object(map)
}

pub fn spectrum(s: &Spectrum) -> Value {
    Value::Array(s.iter().map(|(a, n)| json!([rational(a), n])).collect())
}

pub fn sigma(s: &SigmaClass) -> Value {
    let top: Map<String, Value> = s
        .top
        .iter()
        .map(|t| (t.label.clone(), poly(&t.coeff)))
        .collect();
    let lower: Map<String, Value> = s
        .lower
        .iter()
        .map(|(d, p)| (format!("P^{d}"), poly(p)))
        .collect();
    json!({ "n": s.n, "top": top, "lower": lower, "text": s.to_string() })
}

pub fn stratum(s: &StratumSpec) -> Value {
    json!({
        "label": s.label,
        "kind": s.kind.as_str(),
        "multiplicity": s.multiplicity,
        "spectrum": spectrum(&s.spectrum),
    })
}
