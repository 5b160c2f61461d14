use std::process::Command;

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dihedral-k")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn verify_exit_codes() {
    assert_eq!(bin(&["verify", "--from", "3", "--to", "99", "--odd"]).0, 0);
    assert_eq!(bin(&["verify", "8"]).0, 0);
    let (code, out, _) = bin(&["verify", "12"]);
    assert_eq!(code, 1);
    assert!(out.contains("n=12 relation 5: defect -2v_3"));
    assert!(out.contains("swapped η: relation 5: defect -2v_3"));
    assert_eq!(bin(&["verify", "2"]).0, 2);
    assert_eq!(bin(&["verify", "5", "--from", "3", "--to", "7"]).0, 2);
    assert_eq!(bin(&["frobnicate"]).0, 2);
}

#[test]
fn poly_and_table() {
    assert_eq!(bin(&["poly", "psi", "2"]).1, "0 4 1\n");
    assert_eq!(bin(&["poly", "fmin", "7"]).1, "7 14 7 1\n");
    assert_eq!(bin(&["poly", "cheb", "3"]).1, "0 -3 0 4\n");
    // ψ^4 - ψ^2 = (16w + 20w^2 + 8w^3 + w^4) - (4w + w^2)
    assert_eq!(bin(&["poly", "g", "3"]).1, "0 12 19 8 1\n");
    let (code, _, err) = bin(&["poly", "fmin", "4"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
    assert_eq!(bin(&["table", "cohomology", "--n", "3", "--pmax", "4"]).1, "0 ↦ Z\n1 ↦ 0\n2 ↦ Z_2\n3 ↦ 0\n4 ↦ Z_3⊕Z_2\n");
    assert_eq!(bin(&["table", "cohomology", "--n", "2", "--pmax", "4"]).0, 2);
}

#[test]
fn restrict_and_audit() {
    assert_eq!(bin(&["restrict", "--n", "5", "--elem", "v", "--target", "zn"]).1, "0\n");
    assert_eq!(bin(&["restrict", "--n", "4", "--elem", "phi", "--target", "zn"]).1, "0 4 3 1\n");
    assert_eq!(bin(&["restrict", "--n", "4", "--elem", "v2", "--target", "z3"]).0, 2);
    assert_eq!(bin(&["audit", "--n", "3", "--depth", "3"]).0, 0);
    assert_eq!(bin(&["audit", "--n", "4", "--depth", "3"]).0, 0);
    assert_eq!(bin(&["audit", "--n", "5", "--depth", "2"]).0, 0);
    let (code, _, err) = bin(&["audit", "--n", "4", "--depth", "60"]);
    assert_eq!(code, 2);
    assert!(err.contains("limit"));
}

#[test]
fn json_schema() {
    let (code, out, _) = bin(&["--json", "verify", "12"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "verify");
    let rel5 = &v["results"][4];
    assert_eq!(rel5["item"], "relation 5");
    assert_eq!(rel5["status"], "defect");
    assert_eq!(rel5["basis"].as_array().unwrap().len(), rel5["defect"].as_array().unwrap().len());
}

#[test]
fn deterministic_across_jobs() {
    let a = bin(&["--jobs", "1", "--csv", "verify", "--from", "3", "--to", "30"]);
    let b = bin(&["--jobs", "3", "--csv", "verify", "--from", "3", "--to", "30"]);
    assert_eq!(a, b);
}
