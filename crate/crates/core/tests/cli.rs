use std::process::{Command, Output};

fn qmink(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmink"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).trim_end().to_string()
}

#[test]
fn normal_forms_print_one_line() {
    let cases = [
        ("a[1,2]*a[1,1]", "slq41", "q*a[1,1]*a[1,2]"),
        ("D12inv*D[1,3]", "minkq", "q*D[1,3]*D12inv"),
        ("t[3,1]", "minkq", "-q^-1*D[2,3]*D12inv"),
        ("t[3,2]*t[3,1]", "chiral-abstract", "q^-1*t[3,1]*t[3,2]"),
        ("D[1,5]*D[1,5]", "minkq", "0"),
    ];
    for (expr, algebra, expected) in cases {
        let out = qmink(&["nf", expr, "--algebra", algebra]);
        assert!(out.status.success(), "{expr} in {algebra}");
        assert_eq!(stdout(&out), expected, "{expr} in {algebra}");
    }
}

#[test]
fn bad_input_exits_with_two() {
    for args in [
        &["nf", "x0", "--algebra", "slq41"][..],
        &["nf", "a[1,1] +", "--algebra", "slq41"],
        &["nf", "a[1,1]", "--algebra", "gl2"],
        &["check", "no-such-suite"],
    ] {
        let out = qmink(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    }
}

#[test]
fn syntax_errors_carry_a_position() {
    let out = qmink(&["nf", "a[1,1] * ?", "--algebra", "slq41"]);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("column 10"), "{err}");
}

#[test]
fn closure_table_json_has_every_pair() {
    let out = qmink(&["table", "closure", "--format", "json"]);
    assert!(out.status.success());
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 66);
    let vanishing = rows.iter().filter(|r| r["terms"].as_array().unwrap().is_empty());
    assert_eq!(vanishing.count(), 9);
    let impure: Vec<_> = rows
        .iter()
        .filter(|r| r["terms"].as_array().unwrap().len() > 1)
        .collect();
    assert_eq!(impure.len(), 5);
    assert!(impure.iter().all(|r| r["pure"] == false));
    for r in impure {
        let terms = r["terms"].as_array().unwrap();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0]["coefficient"], "q^2");
        assert_eq!(terms[1]["coefficient"], "q - q^3");
    }
}

#[test]
fn conformal_table_lists_every_bracket() {
    let out = qmink(&["table", "conformal"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 15 * 14 / 2);
    assert!(text.lines().any(|l| l == "[D, K0] = K0"));
    assert!(text.lines().any(|l| l == "[P0, K0] = 2*D"));
}

#[test]
fn report_written_to_file_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("qmink-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("twistor.json");
    let out = qmink(&[
        "check",
        "twistor",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let printed: serde_json::Value =
        serde_json::from_slice(&qmink(&["check", "twistor", "--format", "json", "--serial"]).stdout)
            .unwrap();
    assert_eq!(written["overall"], true);
    let ids = |v: &serde_json::Value| -> Vec<String> {
        v["records"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["id"].as_str().unwrap().to_string())
            .collect()
    };
    assert_eq!(ids(&written), ids(&printed));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn text_report_ends_with_summary() {
    let out = qmink(&["check", "sct-inversion"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let passes = text.lines().filter(|l| l.starts_with("[PASS]")).count();
    assert_eq!(
        text.lines().last().unwrap(),
        format!("overall: PASS ({passes}/{passes} passed)")
    );
}
