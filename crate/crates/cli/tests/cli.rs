use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

use flagspin_cli::{ClassicalReport, ConstructReport, CSpaceReport, FlagReport, RegressSummary};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagspin")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok_stdout(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn assert_round_trip<T: serde::de::DeserializeOwned + serde::Serialize>(text: &str) -> T {
    let line = text.trim_end();
    let typed: T = serde_json::from_str(line).unwrap();
    assert_eq!(serde_json::to_string(&typed).unwrap(), line);
    let generic: Value = serde_json::from_str(line).unwrap();
    assert_eq!(serde_json::to_string(&generic).unwrap(), line);
    typed
}

#[test]
fn flag_text_report() {
    let out = ok_stdout(&["flag", "F4(2,3)"]);
    assert!(out.contains("5Λ1 + 6Λ4"), "{out}");
    assert!(out.contains("spin       no"));
    let ascii = ok_stdout(&["flag", "F4(2,3)", "--ascii"]);
    assert!(ascii.contains("5L_1 + 6L_4"));
    assert!(ascii.is_ascii());
}

#[test]
fn flag_json_reports() {
    let e6: FlagReport = assert_round_trip(&ok_stdout(&["flag", "E6(2,3,4,5,6)", "--json"]));
    assert_eq!(e6.koszul_weight, [12, 0, 0, 0, 0, 0]);
    assert_eq!((e6.d, e6.b2, e6.spin), (1, 1, true));
    assert_eq!(e6.t_roots.len(), 1);

    let e8: FlagReport = assert_round_trip(&ok_stdout(&["flag", "E8()", "--json"]));
    assert_eq!(e8.koszul_vector, [2; 8]);
    assert_eq!((e8.d, e8.dim, e8.spin), (120, 240, true));
    assert_eq!(e8.koszul_root, [58, 114, 168, 220, 270, 182, 92, 136]);

    let f4: FlagReport = assert_round_trip(&ok_stdout(&["flag", "F4(2,3)", "--json"]));
    assert_eq!(f4.koszul_vector, [5, 6]);
    assert!(!f4.spin);
}

#[test]
fn black_entry_mode() {
    let white = ok_stdout(&["flag", "E7(1,2,3,5)", "--json"]);
    let black = ok_stdout(&["flag", "E7(4,6,7)", "--black", "--json"]);
    assert_eq!(white, black);
    let report: FlagReport = assert_round_trip(&white);
    assert_eq!(report.koszul_vector, [6, 3, 2]);
}

#[test]
fn classical_examples() {
    let b: ClassicalReport =
        assert_round_trip(&ok_stdout(&["classical", "B", "--n0", "0", "--blocks", "2", "--r", "2", "--json"]));
    assert_eq!((b.group.as_str(), b.closed_form.as_slice()), ("B4", &[6][..]));
    assert!(b.agree && b.spin_closed_form && b.spin_parity);

    let c: ClassicalReport = assert_round_trip(&ok_stdout(&["classical", "C", "--blocks", "3", "--json"]));
    assert_eq!(c.closed_form, [4]);
    assert!(c.agree && c.spin_closed_form && c.spin_parity);

    let d: ClassicalReport = assert_round_trip(&ok_stdout(&["classical", "D", "--blocks", "4", "--r", "0", "--json"]));
    assert_eq!(d.closed_form, [6]);
    assert!(d.agree && d.spin_closed_form);

    let text = ok_stdout(&["classical", "A", "--n0", "1", "--blocks", "2,3"]);
    assert!(text.contains("AGREE"));
}

#[test]
fn cspace_examples() {
    let cs: CSpaceReport =
        assert_round_trip(&ok_stdout(&["cspace", "E7(1,2,3,5)", "--t0", "1,0,0", "--json"]));
    assert!(cs.spin);
    assert_eq!((cs.b2, cs.fiber_dim), (1, 2));

    let m: CSpaceReport = assert_round_trip(&ok_stdout(&["cspace", "E6()", "--t0", "", "--json"]));
    assert!(m.spin && m.c1_zero);
    assert_eq!((m.b2, m.fiber_dim), (0, 6));

    let c: ConstructReport =
        assert_round_trip(&ok_stdout(&["cspace", "E7(1,2,3,5)", "--construct", "--json"]));
    assert_eq!(c.constructions.len(), 2);
    assert!(c.constructions.iter().all(|x| x.spin));

    let neg = ok_stdout(&["cspace", "E7(1,2,3,5)", "--t0", "0,-1,2"]);
    assert!(neg.contains("spin        false"), "{neg}");
}

#[test]
fn regress_exceptional() {
    let out = ok_stdout(&["regress", &data("exceptional.json")]);
    assert!(out.contains("101 checked, 0 mismatched"), "{out}");
    assert!(out.contains("45 fibrations"));
    assert!(out.contains("E6 8, E7 14, E8 18, F4 4, G2 1"));
    let summary: RegressSummary = assert_round_trip(&ok_stdout(&["regress", &data("exceptional.json"), "--json"]));
    assert!(summary.ok);
    assert_eq!(summary.census.unwrap().total, 45);
    ok_stdout(&["regress", &data("table1.json")]);
}

#[test]
fn regress_mismatch_exits_2() {
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(data("exceptional.json")).unwrap()).unwrap();
    let rows = doc["rows"].as_array_mut().unwrap();
    let d = rows[0]["d"].as_u64().unwrap();
    rows[0]["d"] = Value::from(d + 1);
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("corrupted_d.json");
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
    let o = run(&["regress", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("MISMATCH #0 G2() d"));
}

#[test]
fn usage_errors_exit_1() {
    let bad_json = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("bad.json");
    std::fs::write(&bad_json, "{ not json").unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec!["flag", "E7(8)"],
        vec!["flag", "E7(1,2"],
        vec!["flag", "H3(1)"],
        vec!["flag", "E7(1,2,3,4,5,6,7)"],
        vec!["bogus"],
        vec!["classical", "B", "--blocks", "1"],
        vec!["classical", "Q", "--blocks", "2"],
        vec!["cspace", "E7(1,2,3,5)", "--t0", ""],
        vec!["cspace", "E7(1,2,3,5)", "--t0", "1,x,0"],
        vec!["cspace", "E7(1,2,3,5)"],
        vec!["cspace", "E7(1,2,3,5)", "--t0", "1,0,0", "--construct"],
        vec!["regress", "/nonexistent/fixture.json"],
        vec!["regress", bad_json.to_str().unwrap()],
    ];
    for args in cases {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_0() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn spec_formatting_round_trip() {
    let report: FlagReport = assert_round_trip(&ok_stdout(&["flag", " B4 ( 3, 1 )", "--json"]));
    assert_eq!(report.group, "B4");
    assert_eq!(report.white, [1, 3]);
    let text = ok_stdout(&["flag", "B4(3,1)"]);
    assert!(text.starts_with("flag       B4(1,3)\n"));
}
