use std::process::{Command, Output};

fn sedqm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sedqm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_all_prints_twelve_suites() {
    let o = sedqm(&["verify", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| !l.starts_with(' ')).count(), 12, "{text}");
    assert!(text.contains("QUATERNION_BRACKET: 9/9 passed"));
}

#[test]
fn verify_json_is_parseable_and_stable() {
    let a = sedqm(&["verify", "--suite", "leibniz-failure", "--format", "json"]);
    let b = sedqm(&["verify", "--suite", "leibniz-failure", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v[0]["name"], "LEIBNIZ_FAILURE");
    assert_eq!(v[0]["passed"], true);
    assert!(!v[0]["witnesses"].as_array().unwrap().is_empty());
}

#[test]
fn exit_codes() {
    assert_eq!(sedqm(&["verify", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(sedqm(&["simulate", "--dt", "0"]).status.code(), Some(2));
    assert_eq!(sedqm(&["table", "--format", "xml"]).status.code(), Some(2));
    let o = sedqm(&["eval", "i1*"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains('^'));
}

#[test]
fn eval_examples() {
    for (expr, want) in [("[i4,i5,i2]", "-2*i3"), ("i0*i1", "-e1"), ("I*I", "-1")] {
        let o = sedqm(&["eval", expr]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).trim_end(), want);
    }
}

#[test]
fn simulate_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("na.csv");
    let o = sedqm(&[
        "simulate", "--model", "na-qubit", "--omega", "0,0,1", "--s0", "1,0,0", "--t-max",
        "6.2832", "--dt", "0.001", "--output", path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let csv = std::fs::read_to_string(&path).unwrap();
    assert_eq!(csv.lines().count(), 1 + 6284);
    let summary = stdout(&o);
    let drift: f64 = summary
        .lines()
        .find_map(|l| l.strip_prefix("max drift of |s|^2: "))
        .unwrap()
        .parse()
        .unwrap();
    assert!(drift <= 1e-8);
}

#[test]
fn simulate_unwritable_output_fails() {
    let o = sedqm(&["simulate", "--t-max", "1", "--output", "/nonexistent-dir/x.csv"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn oscillatory_extended_run_stays_bounded() {
    let o = sedqm(&["simulate", "--model", "extended", "--n1", "1", "--n2", "-1", "--t-max", "20"]);
    assert_eq!(o.status.code(), Some(0));
    let max = stdout(&o)
        .lines()
        .skip(1)
        .flat_map(|l| l.split(',').skip(1).map(|x| x.parse::<f64>().unwrap().abs()).collect::<Vec<_>>())
        .fold(0.0, f64::max);
    assert!(max < 1.5);
}

#[test]
fn table_exports() {
    let o = sedqm(&["table", "--format", "csv"]);
    let csv = stdout(&o);
    assert_eq!(csv.lines().count(), 17);
    let row = csv.lines().find(|l| l.starts_with("i5,")).unwrap();
    let header: Vec<&str> = csv.lines().next().unwrap().split(',').collect();
    let col = header.iter().position(|h| *h == "e2").unwrap();
    assert_eq!(row.split(',').nth(col).unwrap(), "-e7");
    assert_eq!(csv, include_str!("../fixtures/table_i.csv"));

    let md = stdout(&sedqm(&["table", "--format", "markdown"]));
    assert_eq!(md.lines().count(), 18);
}
