//! JSON forms for scalars, states, unitaries and reports.
//!
//! A scalar is `{"c":[a,b,c,d],"k":k}` with integers written as plain JSON
//! numbers of any size. Readers reject non-canonical scalars and non-unit
//! states or matrices, naming the violated invariant.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::error::{Error, Result};
use crate::ring::{parse_decimal, RingScalar, ZOmega};
use crate::synthesis::{Circuit, GateCounts, OptimalityCertificate};
use crate::unitary::{RingState, RingUnitary};

fn int_value(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("decimal integer is a JSON number"))
}

fn int_from_value(v: &Value, what: &str) -> Result<BigInt> {
    match v {
        Value::Number(n) => parse_decimal(&n.to_string())
            .map_err(|_| Error::Parse(format!("{what}: expected an integer, got {n}"))),
        other => Err(Error::Parse(format!(
            "{what}: expected an integer, got {other}"
        ))),
    }
}

pub fn scalar_to_value(z: &RingScalar) -> Value {
    let c: Vec<Value> = z.num().coords().iter().map(int_value).collect();
    json!({ "c": c, "k": z.k() })
}

pub fn scalar_from_value(v: &Value) -> Result<RingScalar> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("scalar must be an object {\"c\":[..],\"k\":..}".into()))?;
    if obj.len() != 2 {
        return Err(Error::Parse(
            "scalar must have exactly the fields \"c\" and \"k\"".into(),
        ));
    }
    let c = obj
        .get("c")
        .and_then(Value::as_array)
        .filter(|a| a.len() == 4)
        .ok_or_else(|| {
            Error::Parse("scalar field \"c\" must be an array of four integers".into())
        })?;
    let k = obj
        .get("k")
        .ok_or_else(|| Error::Parse("scalar is missing \"k\"".into()))
        .and_then(|k| int_from_value(k, "scalar exponent"))?;
    let k = i64::try_from(&k).map_err(|_| Error::Parse("scalar exponent out of range".into()))?;
    let coords = [
        int_from_value(&c[0], "coordinate")?,
        int_from_value(&c[1], "coordinate")?,
        int_from_value(&c[2], "coordinate")?,
        int_from_value(&c[3], "coordinate")?,
    ];
    RingScalar::from_canonical(ZOmega::from_coords(coords), k).ok_or_else(|| {
        Error::Parse(
            "scalar is not canonical: numerator divisible by √2, or zero with k ≠ 0".into(),
        )
    })
}

pub fn state_to_value(s: &RingState) -> Value {
    json!({ "z": scalar_to_value(&s.z), "w": scalar_to_value(&s.w) })
}

pub fn state_from_value(v: &Value) -> Result<RingState> {
    let get = |name: &str| {
        v.get(name)
            .ok_or_else(|| Error::Parse(format!("state is missing {name:?}")))
            .and_then(scalar_from_value)
    };
    let s = RingState::new(get("z")?, get("w")?);
    s.validate()?;
    Ok(s)
}

const ENTRY_NAMES: [&str; 4] = ["z00", "z01", "z10", "z11"];

pub fn unitary_to_value(u: &RingUnitary) -> Value {
    let mut m = Map::new();
    for (name, z) in ENTRY_NAMES.iter().zip(u.entries()) {
        m.insert((*name).to_string(), scalar_to_value(z));
    }
    Value::Object(m)
}

/// Parses a matrix and checks unitarity.
pub fn unitary_from_value(v: &Value) -> Result<RingUnitary> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("matrix must be an object with z00, z01, z10, z11".into()))?;
    let mut entries = Vec::with_capacity(4);
    for name in ENTRY_NAMES {
        let z = obj
            .get(name)
            .ok_or_else(|| Error::Parse(format!("matrix is missing {name:?}")))?;
        entries.push(scalar_from_value(z).map_err(|e| Error::Parse(format!("{name}: {e}")))?);
    }
    let [z00, z01, z10, z11]: [RingScalar; 4] = entries.try_into().expect("four entries");
    let u = RingUnitary::new(z00, z01, z10, z11);
    u.validate()?;
    Ok(u)
}

pub fn unitary_to_string(u: &RingUnitary) -> String {
    unitary_to_value(u).to_string()
}

pub fn unitary_from_str(s: &str) -> Result<RingUnitary> {
    let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    unitary_from_value(&v)
}

pub fn counts_to_value(c: &GateCounts) -> Value {
    json!({
        "n_g": c.n_g,
        "n_T": c.n_t,
        "n_H": c.n_h,
        "n_P": c.n_p,
        "n_Pl": c.n_pl,
    })
}

pub fn certificate_to_value(c: &OptimalityCertificate) -> Value {
    json!({
        "h": c.h_claimed,
        "t": c.t_claimed,
        "l": c.l,
        "j": c.j,
    })
}

/// `{"circuit", "counts", "phase_k", "certificate"}`
pub fn report_value(
    circuit: &Circuit,
    phase_k: u8,
    certificate: Option<&OptimalityCertificate>,
) -> Value {
    json!({
        "circuit": circuit.to_text(),
        "counts": counts_to_value(&circuit.counts()),
        "phase_k": phase_k,
        "certificate": certificate.map(certificate_to_value),
    })
}
