//! Curve fixture files: a JSON list of
//! `{"kind": "hyperelliptic" | "trigonal", "f": ["c0", "c1", ...], "r": optional}`
//! with rational coefficients of `f` from low to high degree.

use canring_core::curve::{fixture_polys, OracleCurve};
use canring_core::UniPoly;
use serde_json::{json, Value};

use crate::json::{rational_from_json, rational_to_json, JsonError};

#[derive(Debug, thiserror::Error)]
pub enum FixtureError {
    #[error("invalid JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("fixture {index}: {message}")]
    Invalid { index: usize, message: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveKind {
    Hyperelliptic,
    Trigonal,
}

impl CurveKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::Hyperelliptic => "hyperelliptic",
            Self::Trigonal => "trigonal",
        }
    }
}

/// One parsed and validated fixture.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub kind: CurveKind,
    pub curve: OracleCurve,
    /// The twist of the theta-grading, when it exists.
    pub r: Option<usize>,
}

impl Fixture {
    fn new(kind: CurveKind, f: UniPoly) -> Result<Self, String> {
        let curve = match kind {
            CurveKind::Hyperelliptic => OracleCurve::hyperelliptic(f),
            CurveKind::Trigonal => OracleCurve::trigonal(f),
        }
        .map_err(|e| e.to_string())?;
        let r = curve.theta_twist().ok();
        Ok(Self { kind, curve, r })
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "kind": self.kind.name(),
            "f": self.curve.f().coeffs().iter().map(rational_to_json).collect::<Vec<_>>(),
        });
        if let Some(r) = self.r {
            v["r"] = json!(r);
        }
        v
    }
}

fn parse_one(v: &Value) -> Result<Fixture, String> {
    let kind = match v.get("kind").and_then(Value::as_str) {
        Some("hyperelliptic") => CurveKind::Hyperelliptic,
        Some("trigonal") => CurveKind::Trigonal,
        Some(other) => return Err(format!("unknown kind {other:?}")),
        None => return Err("missing \"kind\"".into()),
    };
    let coeffs = v
        .get("f")
        .and_then(Value::as_array)
        .ok_or("missing coefficient list \"f\"")?
        .iter()
        .map(rational_from_json)
        .collect::<Result<Vec<_>, JsonError>>()
        .map_err(|e| e.to_string())?;
    let fixture = Fixture::new(kind, UniPoly::new(coeffs))?;
    if let Some(r) = v.get("r").filter(|r| !r.is_null()) {
        let r = r.as_u64().ok_or("\"r\" must be a non-negative integer")? as usize;
        if fixture.r != Some(r) {
            return Err(format!("declared r = {r} does not fit the degree of f"));
        }
    }
    Ok(fixture)
}

pub fn parse_fixtures(text: &str) -> Result<Vec<Fixture>, FixtureError> {
    let v: Value = serde_json::from_str(text)?;
    let list = v.as_array().ok_or(FixtureError::Invalid {
        index: 0,
        message: "top level must be a list".into(),
    })?;
    list.iter()
        .enumerate()
        .map(|(index, item)| parse_one(item).map_err(|message| FixtureError::Invalid { index, message }))
        .collect()
}

pub fn fixtures_to_json(fixtures: &[Fixture]) -> Value {
    Value::Array(fixtures.iter().map(Fixture::to_json).collect())
}

/// Two fixtures per shape: hyperelliptic of genus 3, 5, 7 and trigonal
/// with `r = 1, 2, 3`.
pub fn default_fixtures() -> Vec<Fixture> {
    let mut out = Vec::new();
    for g in [3, 5, 7] {
        for f in fixture_polys(2 * g + 2) {
            out.push(Fixture::new(CurveKind::Hyperelliptic, f).expect("squarefree fixture"));
        }
    }
    for r in 1..=3 {
        for f in fixture_polys(3 * r + 3) {
            out.push(Fixture::new(CurveKind::Trigonal, f).expect("squarefree fixture"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_validates() {
        let text = r#"[
            {"kind": "hyperelliptic", "f": ["-1", "0", "0", "0", "0", "0", "0", "0", "1"]},
            {"kind": "trigonal", "f": ["1", "1/2", "0", "0", "0", "0", "1"], "r": 1}
        ]"#;
        let fx = parse_fixtures(text).unwrap();
        assert_eq!(fx.len(), 2);
        assert_eq!(fx[0].r, Some(1));
        assert_eq!(fx[1].curve.genus(), 4);

        assert!(parse_fixtures(r#"[{"kind": "trigonal", "f": ["1", "0", "0", "0", "0", "0", "1"], "r": 2}]"#).is_err());
        assert!(parse_fixtures(r#"[{"kind": "quartic", "f": ["1"]}]"#).is_err());
        assert!(parse_fixtures(r#"[{"kind": "hyperelliptic", "f": ["1", "-2", "1", "0", "0", "0", "0", "0"]}]"#).is_err());
        assert!(parse_fixtures("{").is_err());
    }

    #[test]
    fn default_fixtures_round_trip() {
        let fx = default_fixtures();
        assert_eq!(fx.len(), 12);
        let text = fixtures_to_json(&fx).to_string();
        assert_eq!(parse_fixtures(&text).unwrap(), fx);
    }
}
