use canring::cli::run;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("canring").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out.trim_end().to_string()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    serde_json::from_str(&ok(&a)).unwrap()
}

#[test]
fn documented_outputs() {
    assert_eq!(ok(&["split-type", "--n", "3", "--r", "2"]), "[-3, -6]");
    assert_eq!(ok(&["beta", "--n", "4", "--r", "1", "--s", "1", "--t", "1"]), "codim 2");
    assert_eq!(ok(&["gens", "--surface", "--n", "2", "--r", "1"]), "{4: 1}");
    assert_eq!(ok(&["gens", "--n", "3", "--r", "2"]), "{2: 2, 3: 1}");
    assert_eq!(ok(&["hyperelliptic", "--g", "6"]), "{2: 4}");
    assert_eq!(ok(&["catalog", "--r", "3"]), "S(1,2)\nS(0,3) cone");
    assert_eq!(ok(&["parity", "--base", "F1", "--hyperplane", "1,2", "--n", "3"]), "obstructed");
    assert_eq!(ok(&["parity", "--base", "P1xP1", "--hyperplane", "1,2", "--n", "4"]), "allowed");
}

#[test]
fn json_outputs() {
    assert_eq!(json(&["split-type", "--n", "5", "--r", "1"]), serde_json::json!([-2, -2, -2, -4]));
    assert_eq!(json(&["beta", "--n", "2", "--r", "1", "--s", "2", "--t", "2"])["codim"], 1);
    assert_eq!(
        json(&["gens", "--n", "2", "--r", "1"]),
        serde_json::json!({"2": 0, "3": 0, "4": 1})
    );
    let grid = json(&["beta-grid", "--n", "3", "--r", "1", "--max-level", "4"]);
    assert_eq!(grid.as_array().unwrap().len(), 6);
    let cy = json(&["cy3", "--n", "2"]);
    assert_eq!(cy["N0_B2"], false);
    assert_eq!(cy["sectional_genus"], 3);
    let cy = json(&["cy3", "--n", "4", "--star", "false"]);
    assert_eq!(cy["N0_B2"], false);
    assert_eq!(cy["sectional_genus_gt_3"], true);
    assert_eq!(cy["all_equal"], false);
    let report = json(&[
        "surface", "--base", "F2", "--l1", "1,3", "--l2", "2,3", "--hyperplane", "1,2",
    ]);
    assert_eq!(report["h0K"], 4);
    assert_eq!(report["image_is_cone"], true);
    assert_eq!(report["predicted_profile"], serde_json::json!({"2": 4, "3": 1, "4": 0}));
}

#[test]
fn negative_classes_parse() {
    let r = json(&[
        "surface", "--base", "P1xP1", "--l1", "-2,2", "--l2", "0,0", "--hyperplane", "1,1",
    ]);
    assert_eq!(r["regular"], false);
    assert_eq!(r["passes"], false);
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["nonsense"]).0, 2);
    assert_eq!(call(&["beta", "--n", "3"]).0, 2);
    assert_eq!(call(&["beta", "--n", "x", "--r", "1", "--s", "1", "--t", "1"]).0, 2);
    assert_eq!(call(&["split-type", "--n", "3", "--r", "2", "--format", "xml"]).0, 2);
    let (code, _, err) = call(&["split-type", "--n", "1", "--r", "1"]);
    assert_eq!(code, 1);
    assert!(err.contains("cover degree"));
    assert_eq!(call(&["beta", "--n", "3", "--r", "1", "--s", "0", "--t", "2"]).0, 1);
    assert_eq!(call(&["hyperelliptic", "--g", "1"]).0, 1);
    assert_eq!(call(&["catalog", "--r", "0"]).0, 1);
    assert_eq!(call(&["surface", "--base", "F2", "--l1", "1", "--l2", "2,3", "--hyperplane", "1,2"]).0, 1);
    assert_eq!(call(&["parity", "--base", "P1xP1", "--hyperplane", "2,2", "--n", "4"]).0, 1);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn oracle_reads_fixture_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("curves.json");
    std::fs::write(
        &path,
        r#"[{"kind": "trigonal", "f": ["-1", "0", "0", "0", "0", "0", "1"], "r": 1},
            {"kind": "hyperelliptic", "f": ["-1", "0", "0", "0", "0", "0", "1"]}]"#,
    )
    .unwrap();
    let rows = json(&["oracle", "--fixtures", path.to_str().unwrap()]);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows[0]["codims_agree"], true);
    assert_eq!(rows[0]["split"], serde_json::json!([-2, -4]));
    assert_eq!(rows[0]["canonical_profile"], serde_json::json!({"2": 0, "3": 0, "4": 0}));
    // genus 2: no theta grading, canonical ring still computed
    assert_eq!(rows[1]["codims_agree"], Value::Null);
    assert_eq!(rows[1]["canonical_profile"], serde_json::json!({"2": 0, "3": 1, "4": 0}));

    std::fs::write(&path, r#"[{"kind": "trigonal", "f": ["1", "-2", "1"]}]"#).unwrap();
    assert_eq!(call(&["oracle", "--fixtures", path.to_str().unwrap()]).0, 1);
    assert_eq!(call(&["oracle", "--fixtures", "/nonexistent/curves.json"]).0, 1);
}

#[test]
fn acceptance_suite_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let (code, out, _) = call(&["paper-check", "--report", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("[pass]")).count(), 9);
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report.as_object().unwrap().len(), 9);
    assert!(report.as_object().unwrap().values().all(|v| v["pass"] == true));
}
