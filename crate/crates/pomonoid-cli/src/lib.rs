//! Document model for the command-line front end: bit-exact JSON
//! serialization for monoids, ideals, endomaps, set functions, families,
//! and reports.
//!
//! Canonical form: keys in the schema order, arrays in element-index
//! order, no insignificant whitespace, rationals as lowest-terms `p/q`
//! strings with the sign on the numerator. Parsing rejects unknown keys
//! and non-canonical rationals, reporting a JSON-pointer-style location.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use pomonoid::monoid::FiniteMonoid;
use pomonoid::projection::EndoMap;
use pomonoid::{Error, Rat, Result};
use serde_json::Value;

/// A parsed document.
#[derive(Debug, Clone)]
pub enum Document {
    Monoid(FiniteMonoid),
    Ideal(IdealDoc),
    Endo(EndoMap),
    SetFunc(SetFuncDoc),
    Family(Vec<SetFuncDoc>),
    Report(Report),
}

/// An ideal with its carrier monoid (inlined on serialization, possibly a
/// file reference on input).
#[derive(Debug, Clone)]
pub struct IdealDoc {
    pub monoid: FiniteMonoid,
    /// Strictly ascending element indices.
    pub members: Vec<usize>,
}

/// A set function payload; binding to a monoid happens at use time.
#[derive(Debug, Clone)]
pub struct SetFuncDoc {
    pub dim: usize,
    pub values: Vec<Vec<Rat>>,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub witness: Option<Value>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

// ---------------------------------------------------------------------------
// rationals

/// Formats a rational canonically: lowest terms, positive denominator,
/// sign on the numerator, `0/1` for zero.
pub fn format_rational(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Strict parser for the canonical rational format.
pub fn parse_rational(s: &str, at: &str) -> Result<Rat> {
    let reject = |msg: &str| Error::structure(format!("at {at}: {msg} (got {s:?})"));
    let (num, den) = s
        .split_once('/')
        .ok_or_else(|| reject("rational must be written p/q"))?;
    let digits_ok = |d: &str| -> bool {
        !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()) && (d == "0" || !d.starts_with('0'))
    };
    let num_body = num.strip_prefix('-').unwrap_or(num);
    if !digits_ok(num_body) || (num.starts_with('-') && num_body == "0") {
        return Err(reject("numerator not canonical"));
    }
    if !digits_ok(den) || den == "0" {
        return Err(reject("denominator not canonical"));
    }
    let n: BigInt = num.parse().expect("validated digits");
    let d: BigInt = den.parse().expect("validated digits");
    if n.is_zero() && d != BigInt::from(1) {
        return Err(reject("zero must be written 0/1"));
    }
    if !n.is_zero() && gcd(n.magnitude().clone(), d.magnitude().clone()) != 1u32.into() {
        return Err(reject("rational not in lowest terms"));
    }
    Ok(Rat::new(n, d))
}

fn gcd(mut a: num_bigint::BigUint, mut b: num_bigint::BigUint) -> num_bigint::BigUint {
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

// ---------------------------------------------------------------------------
// canonical serialization

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn json_usizes(xs: &[usize]) -> String {
    let mut out = String::from("[");
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{x}");
    }
    out.push(']');
    out
}

fn json_matrix(rows: &[Vec<usize>]) -> String {
    let mut out = String::from("[");
    for (i, row) in rows.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&json_usizes(row));
    }
    out.push(']');
    out
}

fn json_bool_matrix(rows: &[Vec<bool>]) -> String {
    let mut out = String::from("[");
    for (i, row) in rows.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push('[');
        for (j, b) in row.iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            out.push_str(if *b { "true" } else { "false" });
        }
        out.push(']');
    }
    out.push(']');
    out
}

pub fn serialize_monoid(m: &FiniteMonoid) -> String {
    let mut out = String::from("{\"kind\":\"monoid\",\"elements\":[");
    for (i, name) in m.elements().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&json_string(name));
    }
    let _ = write!(
        out,
        "],\"op\":{},\"leq\":{},\"unit\":{},\"zero\":{}}}",
        json_matrix(m.op_table()),
        json_bool_matrix(m.leq_table()),
        m.unit(),
        m.zero()
    );
    out
}

pub fn serialize_ideal(doc: &IdealDoc) -> String {
    format!(
        "{{\"kind\":\"ideal\",\"monoid\":{},\"members\":{}}}",
        serialize_monoid(&doc.monoid),
        json_usizes(&doc.members)
    )
}

pub fn serialize_endomap(map: &EndoMap) -> String {
    format!(
        "{{\"kind\":\"endomap\",\"image\":{}}}",
        json_usizes(map.image())
    )
}

fn serialize_setfunc_body(doc: &SetFuncDoc) -> String {
    let mut out = format!(
        "{{\"kind\":\"setfunction\",\"dim\":{},\"values\":[",
        doc.dim
    );
    for (i, row) in doc.values.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push('[');
        for (j, v) in row.iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            out.push_str(&json_string(&format_rational(v)));
        }
        out.push(']');
    }
    out.push_str("]}");
    out
}

pub fn serialize_setfunction(doc: &SetFuncDoc) -> String {
    serialize_setfunc_body(doc)
}

pub fn serialize_family(members: &[SetFuncDoc]) -> String {
    let mut out = String::from("{\"kind\":\"family\",\"members\":[");
    for (i, member) in members.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&serialize_setfunc_body(member));
    }
    out.push_str("]}");
    out
}

pub fn serialize_report(report: &Report) -> String {
    let mut out = String::from("{\"kind\":\"report\",\"checks\":[");
    for (i, check) in report.checks.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let witness = match &check.witness {
            None => "null".to_string(),
            Some(v) => serde_json::to_string(v).expect("witness serializes"),
        };
        let _ = write!(
            out,
            "{{\"name\":{},\"pass\":{},\"witness\":{}}}",
            json_string(&check.name),
            check.pass,
            witness
        );
    }
    out.push_str("]}");
    out
}

pub fn serialize_document(doc: &Document) -> String {
    match doc {
        Document::Monoid(m) => serialize_monoid(m),
        Document::Ideal(i) => serialize_ideal(i),
        Document::Endo(e) => serialize_endomap(e),
        Document::SetFunc(f) => serialize_setfunction(f),
        Document::Family(ms) => serialize_family(ms),
        Document::Report(r) => serialize_report(r),
    }
}

// ---------------------------------------------------------------------------
// parsing

fn want_object<'v>(v: &'v Value, at: &str) -> Result<&'v serde_json::Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::structure(format!("at {at}: expected an object")))
}

fn want_array<'v>(v: &'v Value, at: &str) -> Result<&'v Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::structure(format!("at {at}: expected an array")))
}

fn want_str<'v>(v: &'v Value, at: &str) -> Result<&'v str> {
    v.as_str()
        .ok_or_else(|| Error::structure(format!("at {at}: expected a string")))
}

fn want_usize(v: &Value, at: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::structure(format!("at {at}: expected a nonnegative integer")))
}

fn want_bool(v: &Value, at: &str) -> Result<bool> {
    v.as_bool()
        .ok_or_else(|| Error::structure(format!("at {at}: expected a boolean")))
}

fn field<'v>(obj: &'v serde_json::Map<String, Value>, key: &str, at: &str) -> Result<&'v Value> {
    obj.get(key)
        .ok_or_else(|| Error::structure(format!("at {at}/{key}: missing field")))
}

fn check_keys(obj: &serde_json::Map<String, Value>, allowed: &[&str], at: &str) -> Result<()> {
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(Error::structure(format!("at {at}/{key}: unknown field")));
        }
    }
    Ok(())
}

fn parse_usize_array(v: &Value, at: &str) -> Result<Vec<usize>> {
    want_array(v, at)?
        .iter()
        .enumerate()
        .map(|(i, x)| want_usize(x, &format!("{at}/{i}")))
        .collect()
}

fn parse_monoid_value(v: &Value, at: &str) -> Result<FiniteMonoid> {
    let obj = want_object(v, at)?;
    check_keys(obj, &["kind", "elements", "op", "leq", "unit", "zero"], at)?;
    let kind = want_str(field(obj, "kind", at)?, &format!("{at}/kind"))?;
    if kind != "monoid" {
        return Err(Error::structure(format!(
            "at {at}/kind: expected \"monoid\", got {kind:?}"
        )));
    }
    let elements = want_array(field(obj, "elements", at)?, &format!("{at}/elements"))?
        .iter()
        .enumerate()
        .map(|(i, x)| want_str(x, &format!("{at}/elements/{i}")).map(|s| s.to_string()))
        .collect::<Result<Vec<String>>>()?;
    let op = want_array(field(obj, "op", at)?, &format!("{at}/op"))?
        .iter()
        .enumerate()
        .map(|(i, row)| parse_usize_array(row, &format!("{at}/op/{i}")))
        .collect::<Result<Vec<Vec<usize>>>>()?;
    let leq = want_array(field(obj, "leq", at)?, &format!("{at}/leq"))?
        .iter()
        .enumerate()
        .map(|(i, row)| {
            want_array(row, &format!("{at}/leq/{i}"))?
                .iter()
                .enumerate()
                .map(|(j, b)| want_bool(b, &format!("{at}/leq/{i}/{j}")))
                .collect::<Result<Vec<bool>>>()
        })
        .collect::<Result<Vec<Vec<bool>>>>()?;
    let unit = want_usize(field(obj, "unit", at)?, &format!("{at}/unit"))?;
    let zero = want_usize(field(obj, "zero", at)?, &format!("{at}/zero"))?;
    FiniteMonoid::new(elements, op, leq, unit, zero)
}

fn parse_setfunc_value(v: &Value, at: &str) -> Result<SetFuncDoc> {
    let obj = want_object(v, at)?;
    check_keys(obj, &["kind", "dim", "values"], at)?;
    let kind = want_str(field(obj, "kind", at)?, &format!("{at}/kind"))?;
    if kind != "setfunction" {
        return Err(Error::structure(format!(
            "at {at}/kind: expected \"setfunction\", got {kind:?}"
        )));
    }
    let dim = want_usize(field(obj, "dim", at)?, &format!("{at}/dim"))?;
    let values = want_array(field(obj, "values", at)?, &format!("{at}/values"))?
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let row = want_array(row, &format!("{at}/values/{i}"))?;
            if row.len() != dim {
                return Err(Error::structure(format!(
                    "at {at}/values/{i}: expected {dim} coordinates"
                )));
            }
            row.iter()
                .enumerate()
                .map(|(j, cell)| {
                    let here = format!("{at}/values/{i}/{j}");
                    parse_rational(want_str(cell, &here)?, &here)
                })
                .collect::<Result<Vec<Rat>>>()
        })
        .collect::<Result<Vec<Vec<Rat>>>>()?;
    Ok(SetFuncDoc { dim, values })
}

/// Parses a document. File references inside ideal documents are resolved
/// through `read_file` so callers control filesystem access.
pub fn parse_document(text: &str, read_file: &dyn Fn(&str) -> Result<String>) -> Result<Document> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| Error::structure(format!("invalid JSON: {e}")))?;
    let obj = want_object(&v, "")?;
    let kind = want_str(field(obj, "kind", "")?, "/kind")?;
    match kind {
        "monoid" => Ok(Document::Monoid(parse_monoid_value(&v, "")?)),
        "ideal" => {
            check_keys(obj, &["kind", "monoid", "members"], "")?;
            let mval = field(obj, "monoid", "")?;
            let monoid = match mval {
                Value::String(path) => {
                    let content = read_file(path)?;
                    let inner: Value = serde_json::from_str(&content)
                        .map_err(|e| Error::structure(format!("invalid JSON in {path}: {e}")))?;
                    parse_monoid_value(&inner, "/monoid")?
                }
                other => parse_monoid_value(other, "/monoid")?,
            };
            let members = parse_usize_array(field(obj, "members", "")?, "/members")?;
            if members.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::structure(
                    "at /members: indices must be strictly ascending",
                ));
            }
            if members.iter().any(|&i| i >= monoid.len()) {
                return Err(Error::structure("at /members: index out of range"));
            }
            Ok(Document::Ideal(IdealDoc { monoid, members }))
        }
        "endomap" => {
            check_keys(obj, &["kind", "image"], "")?;
            let image = parse_usize_array(field(obj, "image", "")?, "/image")?;
            Ok(Document::Endo(EndoMap::new(image)))
        }
        "setfunction" => Ok(Document::SetFunc(parse_setfunc_value(&v, "")?)),
        "family" => {
            check_keys(obj, &["kind", "members"], "")?;
            let members = want_array(field(obj, "members", "")?, "/members")?
                .iter()
                .enumerate()
                .map(|(i, member)| parse_setfunc_value(member, &format!("/members/{i}")))
                .collect::<Result<Vec<SetFuncDoc>>>()?;
            Ok(Document::Family(members))
        }
        "report" => {
            check_keys(obj, &["kind", "checks"], "")?;
            let checks = want_array(field(obj, "checks", "")?, "/checks")?
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let at = format!("/checks/{i}");
                    let cobj = want_object(c, &at)?;
                    check_keys(cobj, &["name", "pass", "witness"], &at)?;
                    Ok(Check {
                        name: want_str(field(cobj, "name", &at)?, &format!("{at}/name"))?
                            .to_string(),
                        pass: want_bool(field(cobj, "pass", &at)?, &format!("{at}/pass"))?,
                        witness: match field(cobj, "witness", &at)? {
                            Value::Null => None,
                            other => Some(other.clone()),
                        },
                    })
                })
                .collect::<Result<Vec<Check>>>()?;
            Ok(Document::Report(Report { checks }))
        }
        other => Err(Error::structure(format!(
            "at /kind: unknown document kind {other:?}"
        ))),
    }
}
