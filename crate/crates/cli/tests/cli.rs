use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn instances() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../instances")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("overring-cli-{}-{name}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    dir
}

fn analyze(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_analyze")).args(args).output().unwrap()
}

fn report(path: PathBuf) -> Value {
    serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn qr_criterion_fail_carries_the_note() {
    let out = scratch("qr");
    let input = instances().join("example56.json");
    let o = analyze(&[p(&input), "--cmd", "qr-criterion", "--x", "1,0", "--out", p(&out)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let r = report(out.join("01-qr-criterion.json"));
    assert_eq!(r["schema"], 1);
    assert_eq!(r["status"], "ok");
    assert_eq!(r["result"]["verdict"], "FAIL");
    assert!(r["result"]["note"]
        .as_str()
        .unwrap()
        .contains("is not proconstructible"));
    assert_eq!(
        r["result"]["detail"]["colon"],
        serde_json::json!([[0, 1], [1, 1], [2, 0], [3, 0]])
    );
}

#[test]
fn chain_xcal_has_three_points_and_a_graph() {
    let out = scratch("xcal");
    let input = instances().join("chain3.poset");
    let o = analyze(&[p(&input), "--cmd", "xcal", "--dot", "--out", p(&out)]);
    assert!(o.status.success());
    let r = report(out.join("01-xcal.json"));
    assert_eq!(r["result"]["points"], 3);
    assert_eq!(r["result"]["labels"], serde_json::json!(["{a,b,c}", "{a,b}", "{a}"]));
    let dot = fs::read_to_string(out.join("01-xcal.dot")).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 2);
}

#[test]
fn zn_scal_table() {
    let out = scratch("zn");
    let o = analyze(&["--zn", "12", "--cmd", "scal", "--out", p(&out)]);
    assert!(o.status.success());
    let r = report(out.join("01-scal.json"));
    assert_eq!(r["result"]["points"], 3);
    assert_eq!(r["result"]["axioms_hold"], true);
    let incidence = r["result"]["dump"]["incidence"].as_array().unwrap();
    let four = incidence.iter().find(|i| i["element"] == "4").unwrap();
    assert_eq!(four["points"], serde_json::json!(["{(3)}"]));
}

#[test]
fn fail_verdicts_are_not_errors_but_command_errors_are() {
    let out = scratch("errors");
    let input = instances().join("chain3.poset");
    let o = analyze(&[p(&input), "--cmd", "poset", "--cmd", "colon", "--out", p(&out)]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(report(out.join("01-poset.json"))["status"], "ok");
    let r = report(out.join("02-colon.json"));
    assert_eq!(r["status"], "error");
    assert!(r["error"].as_str().unwrap().contains("semigroup"));
    let leftovers: Vec<_> = fs::read_dir(&out)
        .unwrap()
        .filter(|e| e.as_ref().unwrap().file_name().to_string_lossy().ends_with(".tmp"))
        .collect();
    assert!(leftovers.is_empty());
}

#[test]
fn malformed_input_exits_with_a_diagnostic() {
    let dir = scratch("malformed");
    fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    fs::write(&bad, r#"{"dim": 3, "generators": [[1,0,0]]}"#).unwrap();
    let o = analyze(&[p(&bad), "--cmd", "tspec", "--out", p(&dir)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));

    let cyclic = dir.join("cycle.poset");
    fs::write(&cyclic, "a < b\nb < a\n").unwrap();
    let o = analyze(&[p(&cyclic), "--cmd", "poset", "--out", p(&dir)]);
    assert_eq!(o.status.code(), Some(2));

    let o = analyze(&["--zn", "12", "--out", p(&dir)]);
    assert_eq!(o.status.code(), Some(2), "no commands");
    let o = analyze(&["--zn", "12", "--cmd", "scal", "--box", "0", "--out", p(&dir)]);
    assert_eq!(o.status.code(), Some(2), "nonpositive box");
    assert!(!dir.join("01-scal.json").exists());
}

#[test]
fn query_files_and_configs() {
    let dir = scratch("queries");
    fs::create_dir_all(&dir).unwrap();
    let queries = dir.join("q.json");
    fs::write(
        &queries,
        r#"[{"cmd": "colon", "x": 2}, {"cmd": "vclosure", "ideal": [3, 5]}, {"cmd": "tspec"}]"#,
    )
    .unwrap();
    let input = instances().join("numerical35.json");
    let out = dir.join("out");
    let o = analyze(&[p(&input), "--queries", p(&queries), "--out", p(&out)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(
        report(out.join("01-colon.json"))["result"]["colon"],
        serde_json::json!([[3], [10]])
    );
    assert_eq!(report(out.join("02-vclosure.json"))["result"]["divisorial"], true);
    assert_eq!(
        report(out.join("03-tspec.json"))["result"]["t_primes"],
        serde_json::json!(["(0)", "m"])
    );

    fs::write(&queries, r#"[{"cmd": "colon", "z": 2}]"#).unwrap();
    let o = analyze(&[p(&input), "--queries", p(&queries), "--out", p(&out)]);
    assert_eq!(o.status.code(), Some(2));

    let config = dir.join("run.json");
    fs::write(
        &config,
        r#"{"instance": {"semigroup": {"dim": 2, "generators": [[1, 0], [0, 1]]}},
            "out": "cfg", "box": 3,
            "commands": [{"cmd": "qr-criterion"}, {"cmd": "cor45"}]}"#,
    )
    .unwrap();
    let o = analyze(&["--config", p(&config)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let r = report(dir.join("cfg/01-qr-criterion.json"));
    assert_eq!(r["result"]["radius"], 3);
    assert_eq!(r["result"]["verdict"], "PASS");
    let cor = report(dir.join("cfg/02-cor45.json"));
    assert_eq!(cor["result"]["intersection_is_d"], true);
}

#[test]
fn pit_modes() {
    let out = scratch("pit");
    let input = instances().join("example56.json");
    let o = analyze(&[
        p(&input),
        "--cmd",
        "pit",
        "--delta",
        "(0),P_x",
        "--lambda",
        "(0),P_y",
        "--out",
        p(&out),
    ]);
    assert!(o.status.success());
    let d = &report(out.join("01-pit.json"))["result"]["distinction"];
    assert_eq!(d["outcome"], "witness");
    assert_eq!(d["in_first"], true);

    let o = analyze(&[
        p(&input),
        "--cmd",
        "pit",
        "--delta",
        "P_x,P_y",
        "--x",
        "1,0",
        "--out",
        p(&out),
    ]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("closed downward"));
    let r = report(out.join("01-pit.json"));
    assert_eq!(r["result"]["member"], true);
    assert_eq!(
        r["result"]["localizations"][3],
        serde_json::json!({"member": false, "prime": "m"})
    );

    let o = analyze(&[
        p(&input),
        "--cmd",
        "pit",
        "--delta",
        "(0)",
        "--lambda",
        "(0)",
        "--out",
        p(&out),
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn radical_and_lemma55_reports() {
    let out = scratch("radical");
    let input = instances().join("example56.json");
    let o = analyze(&[
        p(&input),
        "--cmd",
        "radical",
        "--cmd",
        "lemma55",
        "--x",
        "1,0",
        "--box",
        "4",
        "--out",
        p(&out),
    ]);
    assert!(o.status.success());
    let r = report(out.join("01-radical.json"));
    assert_eq!(r["result"]["radical_of_principal"], "FAIL");
    assert_eq!(r["result"]["minimal_primes"], serde_json::json!(["m"]));
    let l = report(out.join("02-lemma55.json"));
    assert_eq!(l["result"]["passed"], true);
    assert_eq!(l["result"]["radius"], 4);
}
