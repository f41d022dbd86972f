//! JSON encodings of computation results.
//!
//! Rationals are strings `"p/q"`, split bundles are descending arrays of
//! twists, and generator profiles are objects keyed by degree with degrees
//! 2 to 4 always present.

use canring_core::cy3::N0Equivalences;
use canring_core::rational::{self, Rational};
use canring_core::surface::{BranchCheck, CanonicalCoverReport, DivisorClass, RuledSurface};
use canring_core::{GeneratorProfile, RationalMatrix, SplitBundle};
use serde_json::{json, Map, Value};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum JsonError {
    #[error("expected {expected} at {path}")]
    Type { path: String, expected: &'static str },
    #[error("missing field {0:?}")]
    Missing(String),
    #[error("{0}")]
    Value(String),
}

pub type Result<T> = std::result::Result<T, JsonError>;

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| JsonError::Missing(key.into()))
}

fn as_i64(v: &Value, path: &str) -> Result<i64> {
    v.as_i64().ok_or_else(|| JsonError::Type { path: path.into(), expected: "integer" })
}

fn as_usize(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| JsonError::Type { path: path.into(), expected: "non-negative integer" })
}

fn as_bool(v: &Value, path: &str) -> Result<bool> {
    v.as_bool().ok_or_else(|| JsonError::Type { path: path.into(), expected: "boolean" })
}

fn as_str<'a>(v: &'a Value, path: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| JsonError::Type { path: path.into(), expected: "string" })
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| JsonError::Type { path: path.into(), expected: "array" })
}

pub fn rational_to_json(x: &Rational) -> Value {
    Value::String(rational::format(x))
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    rational::parse(as_str(v, "rational")?).map_err(|e| JsonError::Value(e.to_string()))
}

pub fn bundle_to_json(b: &SplitBundle) -> Value {
    json!(b.twists())
}

/// Reads twists in any order; the bundle lives on `P^ambient`.
pub fn bundle_from_json(v: &Value, ambient: usize) -> Result<SplitBundle> {
    let twists = as_array(v, "bundle")?
        .iter()
        .map(|x| as_i64(x, "bundle[]"))
        .collect::<Result<Vec<_>>>()?;
    Ok(SplitBundle::new(ambient, twists))
}

pub fn profile_to_json(p: &GeneratorProfile) -> Value {
    let mut m = Map::new();
    for d in 2..=4 {
        m.insert(d.to_string(), json!(p.get(d)));
    }
    for (d, c) in p.iter().filter(|&(d, _)| d > 4) {
        m.insert(d.to_string(), json!(c));
    }
    Value::Object(m)
}

pub fn profile_from_json(v: &Value) -> Result<GeneratorProfile> {
    let obj = v.as_object().ok_or(JsonError::Type { path: "profile".into(), expected: "object" })?;
    let mut p = GeneratorProfile::new();
    for (k, c) in obj {
        let d: u32 = k
            .parse()
            .map_err(|_| JsonError::Value(format!("profile degree {k:?} is not an integer")))?;
        p.set(d, as_usize(c, k)?);
    }
    Ok(p)
}

pub fn matrix_to_json(m: &RationalMatrix) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array(m.row(i).iter().map(rational_to_json).collect()))
        .collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": rows })
}

pub fn matrix_from_json(v: &Value) -> Result<RationalMatrix> {
    let cols = as_usize(field(v, "cols")?, "cols")?;
    let rows = as_usize(field(v, "rows")?, "rows")?;
    let entries = as_array(field(v, "entries")?, "entries")?
        .iter()
        .map(|row| as_array(row, "entries[]")?.iter().map(rational_from_json).collect())
        .collect::<Result<Vec<Vec<_>>>>()?;
    if entries.len() != rows {
        return Err(JsonError::Value(format!("{} rows listed, {rows} declared", entries.len())));
    }
    RationalMatrix::from_rows(cols, entries).map_err(|e| JsonError::Value(e.to_string()))
}

pub fn surface_to_json(s: RuledSurface) -> Value {
    Value::String(s.to_string())
}

/// `"P1xP1"` or `"F<e>"`.
pub fn parse_surface(s: &str) -> Result<RuledSurface> {
    if s.eq_ignore_ascii_case("p1xp1") {
        return Ok(RuledSurface::P1xP1);
    }
    s.strip_prefix(['F', 'f'])
        .and_then(|e| e.parse().ok())
        .map(RuledSurface::Hirzebruch)
        .ok_or_else(|| JsonError::Value(format!("unknown surface {s:?}")))
}

pub fn class_to_json(d: &DivisorClass) -> Value {
    json!({ "surface": surface_to_json(d.surface), "a": d.a, "b": d.b })
}

pub fn class_from_json(v: &Value) -> Result<DivisorClass> {
    let s = parse_surface(as_str(field(v, "surface")?, "surface")?)?;
    Ok(s.class(as_i64(field(v, "a")?, "a")?, as_i64(field(v, "b")?, "b")?))
}

fn branch_to_json(b: &BranchCheck) -> Value {
    json!({
        "class": class_to_json(&b.class),
        "effective": b.effective,
        "fixed_c0": b.fixed_c0,
        "moving": class_to_json(&b.moving),
        "moving_base_point_free": b.moving_base_point_free,
        "smooth_member": b.smooth_member,
    })
}

fn branch_from_json(v: &Value) -> Result<BranchCheck> {
    Ok(BranchCheck {
        class: class_from_json(field(v, "class")?)?,
        effective: as_bool(field(v, "effective")?, "effective")?,
        fixed_c0: as_i64(field(v, "fixed_c0")?, "fixed_c0")?,
        moving: class_from_json(field(v, "moving")?)?,
        moving_base_point_free: as_bool(field(v, "moving_base_point_free")?, "moving_base_point_free")?,
        smooth_member: as_bool(field(v, "smooth_member")?, "smooth_member")?,
    })
}

pub fn report_to_json(r: &CanonicalCoverReport) -> Value {
    json!({
        "k_class_ok": r.k_class_ok,
        "regular": r.regular,
        "h0K": r.h0_k,
        "h0_hyperplane": r.h0_hyperplane,
        "cover_degree": r.cover_degree,
        "target_degree": r.target_degree,
        "minimal_degree": r.minimal_degree,
        "predicted_profile": r.predicted_profile.as_ref().map(profile_to_json),
        "branches": r.branches.iter().map(branch_to_json).collect::<Vec<_>>(),
        "image_is_cone": r.image_is_cone,
        "assumptions": r.assumptions,
        "passes": r.passes(),
    })
}

pub fn report_from_json(v: &Value) -> Result<CanonicalCoverReport> {
    let branches = as_array(field(v, "branches")?, "branches")?;
    let [b1, b2] = branches.as_slice() else {
        return Err(JsonError::Value(format!("expected 2 branches, got {}", branches.len())));
    };
    let predicted = field(v, "predicted_profile")?;
    Ok(CanonicalCoverReport {
        k_class_ok: as_bool(field(v, "k_class_ok")?, "k_class_ok")?,
        regular: as_bool(field(v, "regular")?, "regular")?,
        h0_k: as_usize(field(v, "h0K")?, "h0K")?,
        h0_hyperplane: as_usize(field(v, "h0_hyperplane")?, "h0_hyperplane")?,
        cover_degree: as_usize(field(v, "cover_degree")?, "cover_degree")?,
        target_degree: as_i64(field(v, "target_degree")?, "target_degree")?,
        minimal_degree: as_bool(field(v, "minimal_degree")?, "minimal_degree")?,
        predicted_profile: if predicted.is_null() { None } else { Some(profile_from_json(predicted)?) },
        branches: [branch_from_json(b1)?, branch_from_json(b2)?],
        image_is_cone: as_bool(field(v, "image_is_cone")?, "image_is_cone")?,
        assumptions: as_array(field(v, "assumptions")?, "assumptions")?
            .iter()
            .map(|a| as_str(a, "assumptions[]").map(String::from))
            .collect::<Result<_>>()?,
    })
}

pub fn n0_to_json(e: &N0Equivalences) -> Value {
    json!({
        "n": e.n,
        "sectional_genus": e.sectional_genus,
        "N0_B2": e.n0_b2,
        "N0_B3": e.n0_b3,
        "sectional_genus_gt_3": e.sectional_genus_gt_3,
        "C_nonhyperelliptic": e.c_nonhyperelliptic,
        "all_equal": e.all_equal(),
    })
}

pub fn n0_from_json(v: &Value) -> Result<N0Equivalences> {
    Ok(N0Equivalences {
        n: as_usize(field(v, "n")?, "n")?,
        sectional_genus: as_usize(field(v, "sectional_genus")?, "sectional_genus")?,
        n0_b2: as_bool(field(v, "N0_B2")?, "N0_B2")?,
        n0_b3: as_bool(field(v, "N0_B3")?, "N0_B3")?,
        sectional_genus_gt_3: as_bool(field(v, "sectional_genus_gt_3")?, "sectional_genus_gt_3")?,
        c_nonhyperelliptic: as_bool(field(v, "C_nonhyperelliptic")?, "C_nonhyperelliptic")?,
    })
}
