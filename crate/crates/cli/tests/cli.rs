use std::process::{Command, Output};

fn mck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mck")).args(args).output().expect("run mck")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = mck(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn catalan_and_pascal_tables() {
    assert_eq!(ok(&["table", "catalan", "--size", "4", "--format", "csv"]), "1,1,2,5,14\n1,2,5,14,42\n1,3,9,28\n1,4,14,48\n");
    assert_eq!(ok(&["table", "pascal", "--format", "csv"]), "1,2,6,20,70\n1,3,10,35,126\n1,4,15,56\n1,5,21,84\n");
}

#[test]
fn kostka_tables_as_json() {
    let doc: serde_json::Value = serde_json::from_str(&ok(&["table", "kostka-c", "--size", "2", "--format", "json"])).unwrap();
    assert_eq!(doc["kind"], "kostka-c");
    assert_eq!(doc["size"], 2);
    assert_eq!(doc["orientation"], "upper-even");
    let value = |r: u64, c: u64| {
        doc["entries"]
            .as_array()
            .unwrap()
            .iter()
            .find(|e| e["row"] == r && e["col"] == c)
            .map(|e| e["value"].as_str().unwrap().to_string())
    };
    assert_eq!(value(0, 0).as_deref(), Some("1"));
    assert_eq!(value(0, 2).as_deref(), Some("t^2"));
    assert_eq!(value(0, 4).as_deref(), Some("t^4 + t^8"));
    assert_eq!(value(1, 3).as_deref(), Some("t^2 + t^4"));
    assert_eq!(value(0, 1), None);
    let d = ok(&["table", "kostka-d", "--size", "3"]);
    assert!(d.contains("0: 1, 2*t, 2*t^2 + 2*t^4 + 2*t^6"), "{d}");
    assert!(d.contains("1: 1, t + t^2 + t^3"), "{d}");
    assert!(d.contains("2: 1, t + 2*t^3 + t^5"), "{d}");
    assert!(mck(&["table", "kostka-c", "--format", "csv"]).status.code() == Some(2));
}

#[test]
fn matrices() {
    assert_eq!(ok(&["matrix", "C", "--size", "4", "--spec", "schur-c", "--format", "csv"]), "1,1\n1,2\n1\n1\n");
    let doc: serde_json::Value = serde_json::from_str(&ok(&["matrix", "B", "--size", "3", "--format", "json"])).unwrap();
    for key in ["kind", "size", "orientation", "spec", "entries"] {
        assert!(doc.get(key).is_some(), "{key}");
    }
    assert_eq!(doc["orientation"], "lower-even");
    assert_eq!(doc["entries"].as_array().unwrap().len(), 4);
    let generic = mck(&["matrix", "B", "--size", "3", "--format", "csv"]);
    assert_eq!(generic.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&generic.stderr).contains("integer"));
}

#[test]
fn size_bound_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_mck"))
        .args(["matrix", "C", "--size", "4"])
        .env("MCK_MAX_SIZE", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("exceeds"));
}

#[test]
fn polynomial_routes() {
    let via_c = ok(&["poly", "--route", "via-C", "--spec", "schur-c", "--n", "3", "--r", "2"]);
    assert_eq!(via_c, "1 * m[1,1] + 2 * m[]\n");
    assert_eq!(ok(&["poly", "--route", "schur", "--spec", "schur-c", "--n", "3", "--r", "2"]), via_c);
    assert_eq!(ok(&["poly", "--route", "via-E", "--spec", "schur-c", "--n", "3", "--r", "2"]), via_c);

    let params = "2/3,-2/3,5/7,-5/7,3/11,-4/13";
    let args = |route| ["poly", "--route", route, "--n", "2", "--r", "2", "--params", params];
    let oracle = ok(&args("oracle"));
    for route in ["fourfold", "twofold", "via-E", "via-C"] {
        assert_eq!(ok(&args(route)), oracle, "{route}");
    }
    let doc: serde_json::Value =
        serde_json::from_str(&ok(&["poly", "--route", "hl", "--spec", "hl-d", "--n", "2", "--r", "2", "--format", "json"])).unwrap();
    assert_eq!(doc["terms"][0]["partition"], serde_json::json!([1, 1]));
    assert_eq!(doc["terms"][0]["coeff"], "1");
}

#[test]
fn invalid_arguments() {
    let o = mck(&["poly", "--route", "oracle", "--n", "2", "--r", "1", "--params", "1,2,3/0,4,5,6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("3/0"), "{}", String::from_utf8_lossy(&o.stderr));
    let o = mck(&["poly", "--route", "twofold", "--n", "2", "--r", "1", "--params", "1,2,3,4,5,6"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(mck(&["poly", "--route", "oracle", "--n", "2", "--r", "1"]).status.code(), Some(2));
    assert_eq!(mck(&["poly", "--route", "schur", "--n", "2", "--r", "3"]).status.code(), Some(2));
    assert_eq!(mck(&["matrix", "C", "--spec", "nonsense"]).status.code(), Some(2));
    assert_eq!(mck(&["verify", "everything"]).status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let out = ok(&["verify", "inverse", "--size", "12"]);
    assert!(out.ends_with("overall: PASS\n"), "{out}");
    let a = ok(&["verify", "oracle", "--n", "2", "--trials", "5", "--seed", "7"]);
    let b = ok(&["verify", "oracle", "--n", "2", "--trials", "5", "--seed", "7"]);
    assert_eq!(a, b);
    assert!(a.ends_with("overall: PASS\n"));
    assert_eq!(a.matches("PASS").count(), 11);
    let doc: serde_json::Value = serde_json::from_str(&ok(&["verify", "paths", "--size", "4", "--format", "json"])).unwrap();
    assert_eq!(doc["verdict"], "PASS");
    assert!(doc["checks"].as_array().unwrap().iter().all(|c| c.get("elapsed_ms").is_none()));
    let timed = ok(&["verify", "kostka", "--size", "6", "--n", "3", "--timings"]);
    assert!(timed.contains(" ms)"), "{timed}");
    let conj = ok(&["verify", "conjecture", "--trials", "1", "--order", "2"]);
    assert!(conj.ends_with("overall: PASS\n"), "{conj}");
}
