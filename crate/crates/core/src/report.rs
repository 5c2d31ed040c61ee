//! Structured outcome of a single identity check.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::exactnum::Rat;

/// A value on either side of a check: exact, or a double for the few
/// checks that are inherently floating point.
#[derive(Clone, Debug, PartialEq)]
pub enum Quantity {
    Exact(Rat),
    Approx(f64),
}

impl Quantity {
    pub fn to_f64(&self) -> f64 {
        match self {
            Quantity::Exact(r) => r.to_f64(),
            Quantity::Approx(v) => *v,
        }
    }

    pub fn as_exact(&self) -> Option<&Rat> {
        match self {
            Quantity::Exact(r) => Some(r),
            Quantity::Approx(_) => None,
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Exact(r) => write!(f, "{r}"),
            Quantity::Approx(v) => write!(f, "{v:e}"),
        }
    }
}

impl Serialize for Quantity {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Quantity::Exact(r) => r.serialize(s),
            Quantity::Approx(v) => s.serialize_f64(*v),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// A named parameter of a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamValue {
    Int(i64),
    Rat(Rat),
}

impl ParamValue {
    fn as_rat(&self) -> Rat {
        match self {
            ParamValue::Int(i) => Rat::from(*i),
            ParamValue::Rat(r) => r.clone(),
        }
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            ParamValue::Int(i) => Some(*i),
            ParamValue::Rat(r) => r.to_i64(),
        }
    }
}

impl Ord for ParamValue {
    fn cmp(&self, other: &Self) -> Ordering {
        self.as_rat().cmp(&other.as_rat())
    }
}

impl PartialOrd for ParamValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for ParamValue {
    fn from(v: i64) -> Self {
        ParamValue::Int(v)
    }
}

impl From<u64> for ParamValue {
    fn from(v: u64) -> Self {
        ParamValue::Int(v as i64)
    }
}

impl From<Rat> for ParamValue {
    fn from(v: Rat) -> Self {
        ParamValue::Rat(v)
    }
}

impl From<&Rat> for ParamValue {
    fn from(v: &Rat) -> Self {
        ParamValue::Rat(v.clone())
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(i) => write!(f, "{i}"),
            ParamValue::Rat(r) => write!(f, "{r}"),
        }
    }
}

impl Serialize for ParamValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ParamValue::Int(i) => s.serialize_i64(*i),
            ParamValue::Rat(r) => r.serialize(s),
        }
    }
}

/// Parameters in insertion order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Params(Vec<(String, ParamValue)>);

impl Params {
    pub fn new() -> Self {
        Params(Vec::new())
    }

    pub fn with(mut self, name: &str, value: impl Into<ParamValue>) -> Self {
        self.0.push((name.to_string(), value.into()));
        self
    }

    pub fn get(&self, name: &str) -> Option<&ParamValue> {
        self.0.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }

    pub fn iter(&self) -> impl Iterator<Item = &(String, ParamValue)> {
        self.0.iter()
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Outcome of checking one identity at one parameter point.
///
/// Exact checks pass iff the residual `lhs - rhs` is zero; floating-point
/// checks carry a tolerance and pass iff `|residual| <= tolerance`.
#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    pub identity_id: String,
    pub params: Params,
    pub status: Status,
    pub lhs: Quantity,
    pub rhs: Quantity,
    pub residual: Quantity,
    pub tolerance: Option<f64>,
}

impl VerifyReport {
    pub fn exact(id: &str, params: Params, lhs: Rat, rhs: Rat) -> Self {
        let residual = &lhs - &rhs;
        let status = if residual.is_zero() { Status::Pass } else { Status::Fail };
        VerifyReport {
            identity_id: id.to_string(),
            params,
            status,
            lhs: Quantity::Exact(lhs),
            rhs: Quantity::Exact(rhs),
            residual: Quantity::Exact(residual),
            tolerance: None,
        }
    }

    pub fn approx(id: &str, params: Params, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        let residual = lhs - rhs;
        let status = if residual.abs() <= tolerance { Status::Pass } else { Status::Fail };
        VerifyReport {
            identity_id: id.to_string(),
            params,
            status,
            lhs: Quantity::Approx(lhs),
            rhs: Quantity::Approx(rhs),
            residual: Quantity::Approx(residual),
            tolerance: Some(tolerance),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Exact residual, if this is an exact check.
    pub fn exact_residual(&self) -> Option<&Rat> {
        self.residual.as_exact()
    }
}

impl Serialize for VerifyReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let len = if self.tolerance.is_some() { 7 } else { 6 };
        let mut st = s.serialize_struct("VerifyReport", len)?;
        st.serialize_field("id", &self.identity_id)?;
        st.serialize_field("params", &self.params)?;
        st.serialize_field("status", &self.status)?;
        st.serialize_field("lhs", &self.lhs)?;
        st.serialize_field("rhs", &self.rhs)?;
        st.serialize_field("residual", &self.residual)?;
        if let Some(t) = self.tolerance {
            st.serialize_field("tolerance", &t)?;
        }
        st.end()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "{status} {}({}) lhs={} rhs={} residual={}", self.identity_id, self.params, self.lhs, self.rhs, self.residual)
    }
}

/// CSV text with a bare header row. Non-numeric fields, such as exact
/// rationals `"num/den"`, are quoted; numbers are not.
pub fn csv_table<I>(header: &[&str], rows: I) -> String
where
    I: IntoIterator<Item = Vec<String>>,
{
    let mut out = header.join(",");
    out.push('\n');
    let mut w = csv::WriterBuilder::new().quote_style(csv::QuoteStyle::NonNumeric).from_writer(Vec::new());
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    out.push_str(std::str::from_utf8(&w.into_inner().expect("flush")).expect("utf8"));
    out
}
