//! The acceptance suite: nine exact checks, each reporting what was expected
//! and what was computed.

use std::collections::BTreeMap;

use canring_core::algebra::{cyclic_admissible, hilbert_fit, theta_splitting};
use canring_core::curve::{canonical_profile_bruteforce, hyperelliptic_fixtures, OracleCurve};
use canring_core::cy3::{alpha_beta_surjectivity, n0_equivalences, sectional_genus, CYCover};
use canring_core::rational::{int, ratio};
use canring_core::ring::{
    beta_codim, beta_image_equal, generator_profile, hyperelliptic_profile, surface_canonical_profile,
};
use canring_core::sections::h0;
use canring_core::surface::{
    canonical_class, cohomology, euler_characteristic, f1_tower_options, f2_cone_tower, intersect,
    parity_obstruction, quadric_tower_options, tower_canonical, tower_h0K, tower_pushforward,
    tower_regular, validate_canonical_cover, DoubleCoverTower,
};
use canring_core::{GeneratorProfile, RationalMatrix, RuledSurface, SplitBundle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::fixtures::default_fixtures;
use crate::json::{class_to_json, profile_to_json};

#[derive(Clone, Debug, PartialEq)]
pub struct CheckOutcome {
    pub id: &'static str,
    pub title: &'static str,
    pub pass: bool,
    pub expected: Value,
    pub actual: Value,
}

impl CheckOutcome {
    fn new(id: &'static str, title: &'static str, expected: Value, actual: Value) -> Self {
        Self { id, title, pass: expected == actual, expected, actual }
    }

    pub fn line(&self) -> String {
        format!("[{}] {} {}", if self.pass { "pass" } else { "FAIL" }, self.id, self.title)
    }
}

pub type Check = fn() -> CheckOutcome;

pub const ALL: [(&str, Check); 9] = [
    ("1", beta_grid),
    ("2", oracle_equivalence),
    ("3", hyperelliptic_rings),
    ("4", generator_profiles),
    ("5", cone_tower),
    ("6", scroll_towers),
    ("7", obstructions),
    ("8", threefold_normal_generation),
    ("9", property_suites),
];

pub fn run_all() -> Vec<CheckOutcome> {
    ALL.iter().map(|(_, check)| check()).collect()
}

pub fn report(outcomes: &[CheckOutcome]) -> Value {
    let mut m = serde_json::Map::new();
    for o in outcomes {
        m.insert(
            o.id.to_string(),
            json!({ "pass": o.pass, "expected": o.expected, "actual": o.actual }),
        );
    }
    Value::Object(m)
}

/// The codimensions stated for `s = t = 1`, `t = 1`, and `s = t = 2` when
/// `r = 1`; `None` outside those cases.
pub fn listed_codim(n: usize, r: i64, s: u32, t: u32) -> Option<usize> {
    let r_u = r as usize;
    match (r, s, t) {
        (1, 1, 1) => Some(n - 2),
        (1, 2, 1) => Some(0),
        (1, 3, 1) => Some(1),
        (1, 2, 2) => Some(usize::from(n == 2)),
        (1, s, 1) if s >= 4 => Some(0),
        (_, 1, 1) => Some(r_u * (n - 2)),
        (_, 2, 1) => Some(r_u - 1),
        (_, s, 1) if s >= 3 => Some(0),
        _ => None,
    }
}

/// Codimension of `beta(s, t)` in closed form for any `s, t >= 1`.
///
/// With `R_l = H^0(O(lr)) + (n-2) H^0(O((l-1)r-1)) + H^0(O((l-2)r-2))`
/// every block of `R_(s+t)` is filled by multiplication with the first
/// block as soon as a factor block of the same kind is nonzero. So only
/// the middle blocks at `s = t = 1` can be missed, and the last block
/// when neither factor has last-block sections and (for `n >= 3`) the
/// middle blocks cannot pair up because `s = 1` or `t = 1`.
pub fn closed_codim(n: usize, r: i64, s: u32, t: u32) -> usize {
    let (si, ti) = (s as i64, t as i64);
    let middle = if s == 1 && t == 1 { (n - 2) * r as usize } else { 0 };
    let last_hit = h0(1, (si - 2) * r - 2) > 0
        || h0(1, (ti - 2) * r - 2) > 0
        || (n >= 3 && s >= 2 && t >= 2);
    let last = if last_hit { 0 } else { h0(1, (si + ti - 2) * r - 2) };
    middle + last
}

pub fn stated_profile(n: usize, r: i64) -> GeneratorProfile {
    if (n, r) == (2, 1) {
        GeneratorProfile::from_pairs(&[(4, 1)])
    } else {
        GeneratorProfile::from_pairs(&[(2, r as usize * (n - 2)), (3, r as usize - 1)])
    }
}

fn beta_grid() -> CheckOutcome {
    const TITLE: &str = "beta(s,t) codimensions on r<=6, n<=6, s+t<=8 match the closed forms";
    let mut cases = 0;
    let mut mismatches = Vec::new();
    for r in 1..=6i64 {
        for n in 2..=6usize {
            for s in 1..=7u32 {
                for t in 1..=8 - s {
                    cases += 1;
                    let expect = closed_codim(n, r, s, t);
                    let listed_ok = listed_codim(n, r, s, t).is_none_or(|c| c == expect);
                    match beta_codim(n, r, s, t) {
                        Ok(got) if got == expect && listed_ok => {}
                        Ok(got) => mismatches.push(json!({
                            "n": n, "r": r, "s": s, "t": t, "expected": expect, "got": got
                        })),
                        Err(e) => mismatches.push(json!({
                            "n": n, "r": r, "s": s, "t": t, "error": e.to_string()
                        })),
                    }
                }
            }
        }
    }
    let equal = beta_image_equal(2, 1, (2, 2), (3, 1)).map_err(|e| e.to_string());
    CheckOutcome::new(
        "1",
        TITLE,
        json!({ "cases": 840, "mismatches": [], "beta22_equals_beta31_for_n2_r1": true }),
        json!({
            "cases": cases,
            "mismatches": mismatches,
            "beta22_equals_beta31_for_n2_r1": equal.unwrap_or(false),
        }),
    )
}

fn oracle_equivalence() -> CheckOutcome {
    const TITLE: &str = "explicit covers y^2=f (g=3,5,7) and y^3=f (r=1,2,3) agree with the block calculus";
    let mut mismatches = Vec::new();
    let mut cases = 0;
    let fixtures = default_fixtures();
    for fx in &fixtures {
        let n = fx.curve.sheets();
        let r = fx.r.expect("theta-graded fixture") as i64;
        for s in 1..=5u32 {
            for t in 1..=6 - s {
                cases += 1;
                let got = canring_core::curve::oracle_mult_codim(&fx.curve, s, t);
                let want = beta_codim(n, r, s, t);
                if got.as_ref().ok() != want.as_ref().ok() || got.is_err() {
                    mismatches.push(json!({
                        "n": n, "r": r, "s": s, "t": t,
                        "oracle": format!("{got:?}"), "engine": format!("{want:?}"),
                    }));
                }
            }
        }
        let split = canring_core::curve::oracle_pushforward_split(&fx.curve);
        let want = theta_splitting(n, r);
        if split.as_ref().ok() != want.as_ref().ok() || split.is_err() {
            mismatches.push(json!({
                "n": n, "r": r,
                "oracle_split": format!("{split:?}"), "theta_splitting": format!("{want:?}"),
            }));
        }
    }
    CheckOutcome::new(
        "2",
        TITLE,
        json!({ "fixtures": 12, "codim_cases": 180, "mismatches": [] }),
        json!({ "fixtures": fixtures.len(), "codim_cases": cases, "mismatches": mismatches }),
    )
}

fn hyperelliptic_rings() -> CheckOutcome {
    const TITLE: &str = "hyperelliptic canonical rings g=2..6: {3:1} for g=2, {2:g-2} otherwise";
    let mut expected = BTreeMap::new();
    let mut actual = BTreeMap::new();
    for g in 2..=6usize {
        let stated = if g == 2 {
            GeneratorProfile::from_pairs(&[(3, 1)])
        } else {
            GeneratorProfile::from_pairs(&[(2, g - 2)])
        };
        let mut got = Vec::new();
        match hyperelliptic_fixtures(g) {
            Ok(curves) => {
                for c in curves {
                    got.push(
                        canonical_profile_bruteforce(&OracleCurve::Hyperelliptic(c))
                            .map(|p| profile_to_json(&p))
                            .unwrap_or_else(|e| json!(e.to_string())),
                    );
                }
            }
            Err(e) => got.push(json!(e.to_string())),
        }
        got.push(
            hyperelliptic_profile(g as u32)
                .map(|p| profile_to_json(&p))
                .unwrap_or_else(|e| json!(e.to_string())),
        );
        let s = profile_to_json(&stated);
        expected.insert(g.to_string(), json!([s, s, s]));
        actual.insert(g.to_string(), Value::Array(got));
    }
    CheckOutcome::new("3", TITLE, json!(expected), json!(actual))
}

fn generator_profiles() -> CheckOutcome {
    const TITLE: &str = "generator profiles of theta-rings equal the surface canonical-ring profiles";
    let mut mismatches = Vec::new();
    for r in 1..=6i64 {
        for n in 2..=6usize {
            let stated = stated_profile(n, r);
            let engine = generator_profile(n, r).map_err(|e| e.to_string());
            let surface = surface_canonical_profile(n, r).map_err(|e| e.to_string());
            if engine.as_ref() != Ok(&stated) || surface.as_ref() != Ok(&stated) {
                mismatches.push(json!({
                    "n": n, "r": r, "stated": profile_to_json(&stated),
                    "engine": format!("{engine:?}"), "surface": format!("{surface:?}"),
                }));
            }
        }
    }
    let special = generator_profile(2, 1).map(|p| profile_to_json(&p)).unwrap_or(Value::Null);
    CheckOutcome::new(
        "4",
        TITLE,
        json!({ "mismatches": [], "n2_r1": {"2": 0, "3": 0, "4": 1} }),
        json!({ "mismatches": mismatches, "n2_r1": special }),
    )
}

fn cone_tower() -> CheckOutcome {
    const TITLE: &str = "double-double cover of F2 with L1=C0+3f, L2=2C0+3f onto the quadric cone";
    let (t, h) = f2_cone_tower();
    let s = RuledSurface::Hirzebruch(2);
    let classes = |v: Vec<canring_core::DivisorClass>| v.iter().map(class_to_json).collect::<Vec<_>>();
    let report = validate_canonical_cover(&t, &h);
    CheckOutcome::new(
        "5",
        TITLE,
        json!({
            "pushforward": classes(vec![s.zero(), s.class(-1, -3), s.class(-2, -3), s.class(-3, -6)]),
            "canonical": class_to_json(&s.class(1, 2)),
            "h0K": 4,
            "regular": true,
            "image_degree": 2,
            "image_is_cone": true,
            "report_passes": true,
        }),
        json!({
            "pushforward": classes(tower_pushforward(&t)),
            "canonical": class_to_json(&tower_canonical(&t)),
            "h0K": tower_h0K(&t),
            "regular": tower_regular(&t),
            "image_degree": intersect(&h, &h).unwrap_or(-1),
            "image_is_cone": report.as_ref().map(|r| r.image_is_cone).unwrap_or(false),
            "report_passes": report.as_ref().map(|r| r.passes()).unwrap_or(false),
        }),
    )
}

fn scroll_towers() -> CheckOutcome {
    const TITLE: &str = "double-double covers of P1xP1 (m=1..4) and F1 (m=2..4) are canonical covers";
    let mut runs: Vec<(String, DoubleCoverTower, canring_core::DivisorClass)> = Vec::new();
    for m in 1..=4 {
        for swap in [false, true] {
            for (k, (t, h)) in quadric_tower_options(m, swap).into_iter().enumerate() {
                runs.push((format!("P1xP1 m={m} swap={swap} option={k}"), t, h));
            }
        }
    }
    for m in 2..=4 {
        for (k, (t, h)) in f1_tower_options(m).into_iter().enumerate() {
            runs.push((format!("F1 m={m} option={k}"), t, h));
        }
    }
    let mut failures = Vec::new();
    for (name, t, h) in &runs {
        match validate_canonical_cover(t, h) {
            Ok(r) if r.passes() && r.h0_k == h.h0() => {}
            Ok(r) => failures.push(json!({ "case": name, "report": crate::json::report_to_json(&r) })),
            Err(e) => failures.push(json!({ "case": name, "error": e.to_string() })),
        }
    }
    CheckOutcome::new(
        "6",
        TITLE,
        json!({ "cases": 22, "failures": [] }),
        json!({ "cases": runs.len(), "failures": failures }),
    )
}

fn obstructions() -> CheckOutcome {
    const TITLE: &str = "cyclic covers only for n in {2,3}; scroll covers only of even degree";
    let mut cyclic = Vec::new();
    for n in 2..=10usize {
        let ok: Vec<bool> = (1..=5).map(|r| cyclic_admissible(n, r).unwrap_or(true)).collect();
        if ok.iter().all(|&x| x) {
            cyclic.push(n);
        } else if ok.iter().any(|&x| x) {
            cyclic.push(1000 + n);
        }
    }
    let scrolls = [
        RuledSurface::Hirzebruch(1).class(1, 2),
        RuledSurface::Hirzebruch(0).class(1, 3),
        RuledSurface::Hirzebruch(2).class(1, 4),
        RuledSurface::P1xP1.class(1, 2),
        RuledSurface::P1xP1.class(3, 1),
    ];
    let mut obstructed = Vec::new();
    for n in 2..=11u32 {
        let verdicts: Vec<bool> =
            scrolls.iter().map(|h| parity_obstruction(h, n).unwrap_or(false)).collect();
        if verdicts.iter().all(|&x| x) {
            obstructed.push(n);
        } else if verdicts.iter().any(|&x| x) {
            obstructed.push(1000 + n);
        }
    }
    CheckOutcome::new(
        "7",
        TITLE,
        json!({ "cyclic_degrees": [2, 3], "obstructed_degrees": [3, 5, 7, 9, 11] }),
        json!({ "cyclic_degrees": cyclic, "obstructed_degrees": obstructed }),
    )
}

fn threefold_normal_generation() -> CheckOutcome {
    const TITLE: &str = "threefold covers of P3: N0 equivalences for n=2..8, rank 35 for quadrics x quadrics";
    let mut records = Vec::new();
    let mut false_at = Vec::new();
    for n in 2..=8 {
        let cover = CYCover::new(n).expect("n >= 2");
        match n0_equivalences(&cover) {
            Ok(e) => {
                records.push(e.all_equal());
                if !e.n0_b2 {
                    false_at.push(n);
                }
            }
            Err(_) => records.push(false),
        }
    }
    let gamma = alpha_beta_surjectivity(&CYCover::new(4).unwrap())
        .map(|s| s.gamma_rank)
        .unwrap_or(0);
    CheckOutcome::new(
        "8",
        TITLE,
        json!({ "all_equal": vec![true; 7], "false_at": [2], "sectional_genus_n2": 3, "gamma_rank": 35 }),
        json!({
            "all_equal": records,
            "false_at": false_at,
            "sectional_genus_n2": sectional_genus(&CYCover::new(2).unwrap()),
            "gamma_rank": gamma,
        }),
    )
}

fn property_suites() -> CheckOutcome {
    const TITLE: &str = "Riemann-Roch/Serre duality grid, hilbert_fit round trips, rank invariants";
    let mut rr_failures = 0;
    let mut surfaces: Vec<RuledSurface> = (0..=3).map(RuledSurface::Hirzebruch).collect();
    surfaces.push(RuledSurface::P1xP1);
    for s in surfaces {
        let k = canonical_class(s);
        for a in -6..=6 {
            for b in -6..=6 {
                let d = s.class(a, b);
                let (h0, h1, h2) = cohomology(&d);
                let chi = euler_characteristic(&d);
                let rr = 1 + intersect(&d, &d.sub(&k).unwrap()).unwrap() / 2;
                let serre = cohomology(&k.sub(&d).unwrap());
                if h0 as i64 - h1 as i64 + h2 as i64 != chi || chi != rr || serre.0 != h2 || serre.2 != h0 {
                    rr_failures += 1;
                }
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut fit_failures = 0;
    for _ in 0..200 {
        let len = rng.gen_range(1..=8);
        let twists: Vec<i64> = (0..len).map(|_| rng.gen_range(-10..=2)).collect();
        let b = SplitBundle::new(1, twists);
        let dims: BTreeMap<i64, usize> =
            (-b.twists()[0] - 1..=-b.twists()[len - 1] + 1).map(|k| (k, b.h0(k))).collect();
        if hilbert_fit(&dims).ok() != Some(b) {
            fit_failures += 1;
        }
    }

    let mut matrix_failures = 0;
    for _ in 0..100 {
        let (rows, cols) = (rng.gen_range(0..=6), rng.gen_range(0..=6));
        let m = RationalMatrix::from_fn(rows, cols, |_, _| match rng.gen_range(0..4) {
            0 => int(0),
            1 => ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5)),
            _ => int(rng.gen_range(-4..=4)),
        });
        let rank = m.rank();
        if rank != m.transpose().rank() || m.image_codim() + rank != rows {
            matrix_failures += 1;
        }
    }

    CheckOutcome::new(
        "9",
        TITLE,
        json!({ "riemann_roch_serre_failures": 0, "hilbert_fit_failures": 0, "matrix_failures": 0 }),
        json!({
            "riemann_roch_serre_failures": rr_failures,
            "hilbert_fit_failures": fit_failures,
            "matrix_failures": matrix_failures,
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_agrees_with_listed_values() {
        for r in 1..=6 {
            for n in 2..=6 {
                for s in 1..=7 {
                    for t in 1..=8 - s {
                        if let Some(c) = listed_codim(n, r, s, t) {
                            assert_eq!(closed_codim(n, r, s, t), c, "n={n} r={r} ({s},{t})");
                        }
                    }
                }
            }
        }
    }
}
