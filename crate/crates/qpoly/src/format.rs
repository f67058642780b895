//! JSON encodings of quaternions, polynomials and Lagrange bases.
//!
//! * quaternion: `[t, x, y, z]` (a bare number is read as a real quaternion)
//! * formal polynomial: `{"type":"formal","coeffs":[q0, q1, …]}`, ascending
//! * txyz polynomial: `{"type":"txyz","terms":[{"exp":[a,b,c,d],"coeff":q}, …]}`,
//!   terms sorted lexicographically by exponent
//! * Lagrange basis: `{"type":"lagrange-basis","choice":1|2,"factor_order":…,
//!   "points":[…],"polys":[…]}`
//!
//! Floats are written with 17 significant digits so that every value
//! re-parses to the same `f64`.

use std::io;
use std::path::PathBuf;

use qpoly_core::{FormalPoly, LagrangeBasis, LagrangeChoice, Quaternion, TxyzPoly};
use serde::Serialize;
use serde_json::{json, Map, Number, Value};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, FormatError>;

fn schema<T>(msg: impl Into<String>) -> Result<T> {
    Err(FormatError::Schema(msg.into()))
}

/// Writes floats as `{:.16e}`, i.e. 17 significant digits.
struct SeventeenDigits;

impl serde_json::ser::Formatter for SeventeenDigits {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }
}

/// Compact JSON text with 17-significant-digit floats.
pub fn to_json_string(value: &Value) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SeventeenDigits);
    value.serialize(&mut ser).expect("serializing a JSON value cannot fail");
    String::from_utf8(out).expect("serde_json emits UTF-8")
}

/// A JSON number, or `null` for non-finite input.
pub fn number(v: f64) -> Value {
    Number::from_f64(v).map(Value::Number).unwrap_or(Value::Null)
}

/// Parses inline JSON, or reads and parses the named file.
pub fn load(arg: &str) -> Result<Value> {
    let trimmed = arg.trim_start();
    let inline = trimmed.starts_with(['[', '{', '-', '+'])
        || trimmed.starts_with(|c: char| c.is_ascii_digit());
    if inline {
        return Ok(serde_json::from_str(arg)?);
    }
    let path = PathBuf::from(arg);
    let text = std::fs::read_to_string(&path).map_err(|source| FormatError::Io { path, source })?;
    Ok(serde_json::from_str(&text)?)
}

pub fn quat_to_value(q: Quaternion) -> Value {
    Value::Array(q.to_array().iter().map(|&c| number(c)).collect())
}

pub fn quat_from_value(v: &Value) -> Result<Quaternion> {
    match v {
        Value::Number(n) => Ok(Quaternion::real(float(n)?)),
        Value::Array(items) if items.len() == 4 => {
            let mut c = [0.0; 4];
            for (slot, item) in c.iter_mut().zip(items) {
                *slot = match item {
                    Value::Number(n) => float(n)?,
                    other => return schema(format!("quaternion component must be a number, got {other}")),
                };
            }
            Ok(Quaternion::from(c))
        }
        other => schema(format!("expected a quaternion [t,x,y,z], got {other}")),
    }
}

fn float(n: &Number) -> Result<f64> {
    match n.as_f64() {
        Some(f) if f.is_finite() => Ok(f),
        _ => schema(format!("number {n} is not a finite float")),
    }
}

pub fn quats_to_value(qs: &[Quaternion]) -> Value {
    Value::Array(qs.iter().map(|&q| quat_to_value(q)).collect())
}

pub fn quats_from_value(v: &Value) -> Result<Vec<Quaternion>> {
    match v {
        Value::Array(items) => items.iter().map(quat_from_value).collect(),
        other => schema(format!("expected a list of quaternions, got {other}")),
    }
}

pub fn formal_to_value(p: &FormalPoly) -> Value {
    json!({ "type": "formal", "coeffs": quats_to_value(p.coeffs()) })
}

pub fn txyz_to_value(p: &TxyzPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(exp, &c)| json!({ "exp": exp.to_vec(), "coeff": quat_to_value(c) }))
        .collect();
    json!({ "type": "txyz", "terms": terms })
}

/// A polynomial in either representation.
#[derive(Clone, Debug, PartialEq)]
pub enum Poly {
    Formal(FormalPoly),
    Txyz(TxyzPoly),
}

impl Poly {
    pub fn to_value(&self) -> Value {
        match self {
            Poly::Formal(p) => formal_to_value(p),
            Poly::Txyz(p) => txyz_to_value(p),
        }
    }

    pub fn from_value(v: &Value) -> Result<Self> {
        let obj = object(v, "polynomial")?;
        match obj.get("type").and_then(Value::as_str) {
            Some("formal") => {
                let coeffs = quats_from_value(field(obj, "coeffs")?)?;
                Ok(Poly::Formal(FormalPoly::from_coeffs(coeffs)))
            }
            Some("txyz") => {
                let Value::Array(items) = field(obj, "terms")? else {
                    return schema("\"terms\" must be a list");
                };
                let mut terms = Vec::with_capacity(items.len());
                for item in items {
                    let t = object(item, "term")?;
                    terms.push((exponent(field(t, "exp")?)?, quat_from_value(field(t, "coeff")?)?));
                }
                let mut seen: Vec<_> = terms.iter().map(|(e, _)| *e).collect();
                seen.sort_unstable();
                if seen.windows(2).any(|w| w[0] == w[1]) {
                    return schema("repeated exponent in \"terms\"");
                }
                Ok(Poly::Txyz(TxyzPoly::from_terms(terms)))
            }
            Some(other) => schema(format!("unknown polynomial type {other:?}")),
            None => schema("polynomial object needs a string \"type\""),
        }
    }

    /// The polynomial as a function of `q = t + xi + yj + zk`. Formal
    /// polynomials are read with the variable on the left of each
    /// coefficient.
    pub fn into_txyz(self) -> TxyzPoly {
        match self {
            Poly::Formal(p) => TxyzPoly::from_formal(&p),
            Poly::Txyz(p) => p,
        }
    }
}

fn object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    match v {
        Value::Object(m) => Ok(m),
        other => schema(format!("expected a {what} object, got {other}")),
    }
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| FormatError::Schema(format!("missing field {key:?}")))
}

fn exponent(v: &Value) -> Result<[u32; 4]> {
    let Value::Array(items) = v else {
        return schema(format!("exponent must be a list of 4 integers, got {v}"));
    };
    if items.len() != 4 {
        return schema(format!("exponent must have 4 entries, got {}", items.len()));
    }
    let mut e = [0u32; 4];
    for (slot, item) in e.iter_mut().zip(items) {
        *slot = item
            .as_u64()
            .and_then(|n| u32::try_from(n).ok())
            .ok_or_else(|| FormatError::Schema(format!("exponent entry {item} is not a small non-negative integer")))?;
    }
    Ok(e)
}

pub fn basis_to_value(b: &LagrangeBasis) -> Value {
    json!({
        "type": "lagrange-basis",
        "choice": b.choice().number(),
        "factor_order": LagrangeBasis::FACTOR_ORDER,
        "points": quats_to_value(b.points()),
        "polys": b.polys().iter().map(txyz_to_value).collect::<Vec<_>>(),
    })
}

/// A parsed Lagrange basis document.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisRecord {
    pub choice: LagrangeChoice,
    pub factor_order: String,
    pub points: Vec<Quaternion>,
    pub polys: Vec<TxyzPoly>,
}

impl BasisRecord {
    pub fn from_value(v: &Value) -> Result<Self> {
        let obj = object(v, "basis")?;
        if obj.get("type").and_then(Value::as_str) != Some("lagrange-basis") {
            return schema("basis object needs \"type\": \"lagrange-basis\"");
        }
        let choice = field(obj, "choice")?
            .as_u64()
            .and_then(|n| u8::try_from(n).ok())
            .and_then(LagrangeChoice::from_number)
            .ok_or_else(|| FormatError::Schema("\"choice\" must be 1 or 2".into()))?;
        let factor_order = field(obj, "factor_order")?
            .as_str()
            .ok_or_else(|| FormatError::Schema("\"factor_order\" must be a string".into()))?
            .to_owned();
        let points = quats_from_value(field(obj, "points")?)?;
        let Value::Array(items) = field(obj, "polys")? else {
            return schema("\"polys\" must be a list");
        };
        let polys = items
            .iter()
            .map(|p| match Poly::from_value(p)? {
                Poly::Txyz(t) => Ok(t),
                Poly::Formal(_) => schema("basis polynomials must be txyz"),
            })
            .collect::<Result<Vec<_>>>()?;
        if polys.len() != points.len() {
            return schema(format!("{} polynomials for {} points", polys.len(), points.len()));
        }
        Ok(Self { choice, factor_order, points, polys })
    }
}
