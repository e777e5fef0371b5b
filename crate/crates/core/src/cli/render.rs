//! JSON, CSV and text renderings of exact values.

use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::clifford::Multivector;
use crate::field::FieldScalar;
use crate::linalg::Matrix;
use crate::reptheory::Entry;

/// `{"coeffs": [c0, c1, c2, c3], "exact": "...", "decimal": "..."}` for
/// `c0 + c1√2 + c2τ + c3√2τ`.
pub fn scalar(x: &FieldScalar, bits: u32) -> Value {
    json!({
        "coeffs": x.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "exact": x.to_string(),
        "decimal": x.to_decimal(bits),
    })
}

pub fn vector(v: &[FieldScalar], bits: u32) -> Value {
    Value::Array(v.iter().map(|x| scalar(x, bits)).collect())
}

pub fn matrix(m: &Matrix, bits: u32) -> Value {
    Value::Array(m.to_rows().iter().map(|r| vector(r, bits)).collect())
}

/// Coefficient map keyed by blade name, plus the signed blade sum.
pub fn multivector(m: &Multivector, bits: u32) -> Value {
    let mut blades = Map::new();
    for b in m.support() {
        blades.insert(Multivector::blade_name(b), scalar(m.coeff(b), bits));
    }
    json!({ "blades": blades, "text": m.to_string() })
}

pub fn complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{:.12}", z.re)
    } else {
        let sign = if z.im < 0.0 { '-' } else { '+' };
        format!("{:.12}{sign}{:.12}i", z.re, z.im.abs())
    }
}

pub fn entry(e: &Entry, bits: u32) -> Value {
    json!({
        "exact": e.exact.as_ref().map(|x| scalar(x, bits)),
        "re": e.value.re,
        "im": e.value.im,
    })
}

/// Exact text where available, else the numeric value.
pub fn entry_text(e: &Entry) -> String {
    match &e.exact {
        Some(x) => x.to_string(),
        None => complex(e.value),
    }
}

pub fn vector_text(v: &[FieldScalar]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

pub fn csv(header: &[String], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("writing to memory");
    for row in rows {
        w.write_record(row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flushing to memory")).expect("csv output is UTF-8")
}
