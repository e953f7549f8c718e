//! JSON wire formats and the CLI error model.
//!
//! Conventions, kept stable for scripting:
//! - integers that fit `i64` are JSON numbers; anything larger is a decimal
//!   string;
//! - rationals are strings, `"p"` for integers and `"p/q"` otherwise;
//! - binary forms and polynomials serialize as
//!   `{"degree": d, "terms": [{"exp": [...], "coeff": "p/q"}]}` (polynomials
//!   also carry `"numVars"`);
//! - splitting types are plain integer arrays;
//! - domain failures use `{"error": {"kind": "...", "message": "..."}}` with
//!   kebab-case kinds.

use clustered_core::p1::{BinaryForm, CoordinateMap, MultiPolynomial, SplittingType};
use clustered_core::{
    ClusterError, GrassContext, GrassmannError, OsculationError, P1Error, Partition, RingError,
    SchubertClass,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

/// Failures surfaced by the binary: usage problems exit 1, domain errors
/// exit 2 with a machine-readable kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Domain { kind: String, message: String },
}

impl CliError {
    pub fn domain(kind: &str, message: impl Into<String>) -> Self {
        CliError::Domain {
            kind: kind.into(),
            message: message.into(),
        }
    }

    pub fn malformed_json(context: &str, err: &serde_json::Error) -> Self {
        CliError::domain("malformed-json", format!("{context}: {err}"))
    }
}

impl From<GrassmannError> for CliError {
    fn from(e: GrassmannError) -> Self {
        let kind = match e {
            GrassmannError::InvalidContext { .. } => "invalid-context",
            GrassmannError::NotWeaklyDecreasing => "not-weakly-decreasing",
            GrassmannError::NotAdmissible { .. } => "not-admissible",
            GrassmannError::HShiftUndefined => "h-undefined",
            GrassmannError::PShiftUndefined => "p-undefined",
        };
        CliError::domain(kind, e.to_string())
    }
}

impl From<RingError> for CliError {
    fn from(e: RingError) -> Self {
        match e {
            RingError::ContextMismatch => CliError::domain("context-mismatch", e.to_string()),
            RingError::Grassmann(g) => g.into(),
        }
    }
}

impl From<ClusterError> for CliError {
    fn from(e: ClusterError) -> Self {
        let kind = match &e {
            ClusterError::ZeroClass => "zero-class",
            ClusterError::NotEffective => "not-effective",
            ClusterError::NotHomogeneous => "not-homogeneous",
            ClusterError::EllOutOfRange => "ell-out-of-range",
            ClusterError::ZeroPartition => "zero-partition",
            ClusterError::PlaneOutOfRange { .. } => "plane-out-of-range",
            ClusterError::ZDimensionTooLarge { .. } => "z-dimension-too-large",
            ClusterError::DegreeOutOfRange => "degree-out-of-range",
            ClusterError::Grassmann(g) => return (*g).into(),
            ClusterError::Ring(r) => return (*r).into(),
        };
        CliError::domain(kind, e.to_string())
    }
}

impl From<OsculationError> for CliError {
    fn from(e: OsculationError) -> Self {
        let kind = match e {
            OsculationError::AmbientTooSmall { .. } => "ambient-too-small",
            OsculationError::DegreeOutOfRange => "degree-out-of-range",
            OsculationError::ContactCountOutOfRange { .. } => "contact-count-out-of-range",
            OsculationError::ContactOrderOutOfRange => "contact-order-out-of-range",
        };
        CliError::domain(kind, e.to_string())
    }
}

impl From<P1Error> for CliError {
    fn from(e: P1Error) -> Self {
        let kind = match e {
            P1Error::ZeroForm => "zero-form",
            P1Error::ZeroMap => "zero-map",
            P1Error::DegreeMismatch { .. } => "degree-mismatch",
            P1Error::NotEnoughDistinctRoots { .. } => "not-enough-distinct-roots",
            P1Error::EmptyType => "empty-type",
            P1Error::ExponentArity { .. } => "exponent-arity",
            P1Error::NotHomogeneous => "not-homogeneous",
            P1Error::BadCoordinateMap => "bad-coordinate-map",
            P1Error::ZeroLineRestriction => "zero-line-restriction",
            P1Error::NonProportionalRestrictions => "non-proportional-restrictions",
        };
        CliError::domain(kind, e.to_string())
    }
}

/// Envelope printed by every subcommand under `--json`.
#[derive(Debug, Clone, Serialize)]
pub struct CommandResult {
    pub command: String,
    pub inputs: Value,
    pub outputs: Value,
    pub citations: Vec<String>,
}

impl CommandResult {
    pub fn new(command: &str, inputs: Value, outputs: Value, citations: &[&str]) -> Self {
        CommandResult {
            command: command.into(),
            inputs,
            outputs,
            citations: citations.iter().map(|s| s.to_string()).collect(),
        }
    }
}

pub fn error_json(e: &CliError) -> Value {
    match e {
        CliError::Usage(msg) => json!({"error": {"kind": "usage", "message": msg}}),
        CliError::Domain { kind, message } => {
            json!({"error": {"kind": kind, "message": message}})
        }
    }
}

// ---- serialization helpers ----

pub fn bigint_json(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(n) => json!(n),
        Err(_) => json!(v.to_string()),
    }
}

pub fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn partition_json(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn context_json(ctx: &GrassContext) -> Value {
    json!({"planeDim": ctx.plane_dim(), "ambientDim": ctx.ambient_dim()})
}

/// Class terms ordered by codimension, then reverse-lexicographically, so
/// the leading box partition of each degree prints first.
pub fn class_terms(class: &SchubertClass) -> Vec<(Partition, BigInt)> {
    let mut terms: Vec<(Partition, BigInt)> = class
        .terms()
        .map(|(p, c)| (p.clone(), c.clone()))
        .collect();
    terms.sort_by(|(a, _), (b, _)| a.size().cmp(&b.size()).then(b.parts().cmp(a.parts())));
    terms
}

pub fn class_json(class: &SchubertClass) -> Value {
    let entries: Vec<Value> = class_terms(class)
        .into_iter()
        .map(|(p, c)| json!({"partition": p.parts(), "coeff": bigint_json(&c)}))
        .collect();
    json!(entries)
}

pub fn binary_form_json(form: &BinaryForm) -> Value {
    let d = form.degree();
    let terms: Vec<Value> = form
        .coefficients()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| {
            json!({"exp": [d - j as u32, j as u32], "coeff": rational_string(c)})
        })
        .collect();
    json!({"degree": d, "terms": terms})
}

pub fn multipoly_json(p: &MultiPolynomial) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .map(|(e, c)| json!({"exp": e, "coeff": rational_string(c)}))
        .collect();
    json!({"degree": p.degree(), "numVars": p.num_vars(), "terms": terms})
}

pub fn coordinate_map_json(m: &CoordinateMap) -> Value {
    json!({
        "sourceVars": m.source_vars(),
        "targetVars": m.target_vars(),
        "images": m.images(),
    })
}

pub fn splitting_json(t: &SplittingType) -> Value {
    json!(t.twists())
}

// ---- parsing helpers ----

pub fn parse_u32(label: &str, s: &str) -> Result<u32, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("{label}: expected a nonnegative integer, got {s:?}")))
}

/// "k,n" -> context G(k, n).
pub fn parse_context(s: &str) -> Result<GrassContext, CliError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(CliError::Usage(format!(
            "context must be \"planeDim,ambientDim\", got {s:?}"
        )));
    }
    let k = parse_u32("context planeDim", parts[0])?;
    let n = parse_u32("context ambientDim", parts[1])?;
    Ok(GrassContext::new(k, n)?)
}

/// "2,1,0" -> partition (2, 1, 0). Parts must already be weakly decreasing.
pub fn parse_partition(s: &str) -> Result<Partition, CliError> {
    let parts = s
        .split(',')
        .map(|p| parse_u32("partition part", p))
        .collect::<Result<Vec<u32>, _>>()?;
    Ok(Partition::new(parts)?)
}

pub fn parse_rational(s: &str) -> Result<BigRational, CliError> {
    let bad = || CliError::Usage(format!("expected a rational like 3 or -1/2, got {s:?}"));
    let mut pieces = s.trim().splitn(2, '/');
    let numer: BigInt = pieces.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    let denom: BigInt = match pieces.next() {
        Some(d) => d.trim().parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(numer, denom))
}

/// Comma-separated rational coefficients, s-power first: "1,0,-1" is
/// s^2 - t^2.
pub fn parse_binary_form(s: &str) -> Result<BinaryForm, CliError> {
    let coeffs = s
        .split(',')
        .map(parse_rational)
        .collect::<Result<Vec<_>, _>>()?;
    if coeffs.is_empty() {
        return Err(CliError::Usage("form needs at least one coefficient".into()));
    }
    Ok(BinaryForm::new((coeffs.len() - 1) as u32, coeffs)?)
}

fn coeff_from_value(v: &Value) -> Result<BigInt, CliError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| CliError::domain("malformed-json", "coefficients must be integers")),
        Value::String(s) => s
            .parse()
            .map_err(|_| CliError::domain("malformed-json", format!("bad integer {s:?}"))),
        _ => Err(CliError::domain(
            "malformed-json",
            "coefficient must be a number or decimal string",
        )),
    }
}

/// A class as `[{"partition": [...], "coeff": c}, ...]`.
pub fn parse_class(ctx: GrassContext, s: &str) -> Result<SchubertClass, CliError> {
    let value: Value =
        serde_json::from_str(s).map_err(|e| CliError::malformed_json("class", &e))?;
    let Value::Array(items) = value else {
        return Err(CliError::domain(
            "malformed-json",
            "class must be an array of {partition, coeff} objects",
        ));
    };
    let mut terms = Vec::new();
    for item in &items {
        let partition = item
            .get("partition")
            .and_then(Value::as_array)
            .ok_or_else(|| CliError::domain("malformed-json", "term needs a partition array"))?;
        let parts = partition
            .iter()
            .map(|v| {
                v.as_u64()
                    .and_then(|x| u32::try_from(x).ok())
                    .ok_or_else(|| {
                        CliError::domain("malformed-json", "partition parts must be small nonnegative integers")
                    })
            })
            .collect::<Result<Vec<u32>, _>>()?;
        let coeff = coeff_from_value(
            item.get("coeff")
                .ok_or_else(|| CliError::domain("malformed-json", "term needs a coeff"))?,
        )?;
        terms.push((Partition::new(parts)?, coeff));
    }
    Ok(SchubertClass::from_terms(ctx, terms)?)
}

fn rational_from_value(v: &Value) -> Result<BigRational, CliError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|x| BigRational::from_integer(BigInt::from(x)))
            .ok_or_else(|| CliError::domain("malformed-json", "coefficients must be exact")),
        Value::String(s) => parse_rational(s)
            .map_err(|_| CliError::domain("malformed-json", format!("bad rational {s:?}"))),
        _ => Err(CliError::domain(
            "malformed-json",
            "coefficient must be a number or \"p/q\" string",
        )),
    }
}

/// A polynomial as `{"degree": d, "numVars": v, "terms": [{"exp": [...],
/// "coeff": "p/q"}]}`; `numVars` may be omitted when terms determine it.
pub fn parse_multipoly(label: &str, s: &str) -> Result<MultiPolynomial, CliError> {
    let value: Value = serde_json::from_str(s).map_err(|e| CliError::malformed_json(label, &e))?;
    let degree = value
        .get("degree")
        .and_then(Value::as_u64)
        .and_then(|d| u32::try_from(d).ok())
        .ok_or_else(|| CliError::domain("malformed-json", format!("{label}: needs a degree")))?;
    let terms_value = value
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::domain("malformed-json", format!("{label}: needs terms")))?;
    let mut terms: Vec<(Vec<u32>, BigRational)> = Vec::new();
    for item in terms_value {
        let exp = item
            .get("exp")
            .and_then(Value::as_array)
            .ok_or_else(|| CliError::domain("malformed-json", "term needs an exp array"))?
            .iter()
            .map(|v| {
                v.as_u64().and_then(|x| u32::try_from(x).ok()).ok_or_else(|| {
                    CliError::domain("malformed-json", "exponents must be small nonnegative integers")
                })
            })
            .collect::<Result<Vec<u32>, _>>()?;
        let coeff = rational_from_value(
            item.get("coeff")
                .ok_or_else(|| CliError::domain("malformed-json", "term needs a coeff"))?,
        )?;
        terms.push((exp, coeff));
    }
    let num_vars = match value.get("numVars").and_then(Value::as_u64) {
        Some(v) => v as usize,
        None => terms
            .iter()
            .map(|(e, _)| e.len())
            .max()
            .ok_or_else(|| {
                CliError::domain(
                    "malformed-json",
                    format!("{label}: numVars is required for a zero polynomial"),
                )
            })?,
    };
    Ok(MultiPolynomial::new(num_vars, degree, terms)?)
}
