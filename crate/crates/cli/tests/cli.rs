use std::path::PathBuf;
use std::process::{Command, Output};

fn qary(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qary"))
        .args(args)
        .env_remove("QARY_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

#[test]
fn bound_methods() {
    let o = qary(&["bound", "4", "11", "8", "--method", "divisibility"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("A_4(11,8) <= 60"));

    let o = qary(&["bound", "5", "7", "6", "--method", "plotkin"]);
    assert!(stdout(&o).contains("A_5(7,6) <= 15"));

    let o = qary(&["bound", "5", "8", "6", "--method", "plotkin"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("inapplicable"));

    let o = qary(&["--format", "json", "bound", "5", "8", "6"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["bound"], 70);
    assert_eq!(v["divisibility"]["phi"][3]["phi"], -98);

    let o = qary(&["bound", "3", "2", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn enumerate_kirkman_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut lists = Vec::new();
    for threads in ["1", "4"] {
        let out = dir.path().join(threads);
        let o = qary(&[
            "--threads",
            threads,
            "enumerate",
            "5",
            "7",
            "6",
            "15",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains("classes 7"));
        lists.push(std::fs::read_to_string(out.join("classes.list")).unwrap());
        assert!(out.join("class-007.code").exists());
    }
    assert_eq!(lists[0], lists[1]);
    assert!(lists[0].starts_with("#! classes 7 q 5 n 7 d 6 size 15 generator qary"));
}

#[test]
fn enumerate_guards() {
    let o = qary(&["enumerate", "3", "3", "2", "9"]);
    assert!(stdout(&o).contains("classes 1"));

    let o = qary(&["enumerate", "5", "8", "6", "65"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("desk scale"));

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("partial");
    let o = qary(&[
        "enumerate",
        "5",
        "7",
        "6",
        "15",
        "--budget",
        "10",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("partial"));
    assert!(!out.join("classes.list").exists());
}

#[test]
fn net_commands() {
    let dir = tempfile::tempdir().unwrap();
    let net = dir.path().join("f1.net");
    let o = qary(&[
        "net",
        "gh-expand",
        &data("figure1.gh"),
        "-o",
        net.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = qary(&["net", "check", net.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("net\n"));

    let o = qary(&["net", "to-code", &data("figure2.net")]);
    assert_eq!(o.status.code(), Some(0));
    let code = qary_core::parse_code(&stdout(&o)).unwrap();
    let fig2 =
        qary_core::parse_code(&std::fs::read_to_string(data("figure2.code")).unwrap()).unwrap();
    assert_eq!(code, fig2);

    let o = qary(&["net", "from-code", &data("figure2.code")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("1 3\n100100100\n"));

    let bad = dir.path().join("identity4.net");
    std::fs::write(&bad, "1 2\n1000\n0100\n0010\n0001\n").unwrap();
    let o = qary(&["net", "check", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not a net"));

    let broken = dir.path().join("broken.net");
    std::fs::write(&broken, "1 2\n1000\n01x0\n").unwrap();
    let o = qary(&["net", "check", broken.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn verify_commands() {
    let dir = tempfile::tempdir().unwrap();
    let o = qary(&[
        "verify",
        "a3_16_11",
        "--json",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "verified");
    assert_eq!(v["bound"], 29);
    assert!(dir.path().join("a3_16_11.cert.json").exists());
    assert!(dir.path().join("a3_16_11.cert.txt").exists());

    let o = qary(&["verify", "bogus_id"]);
    assert_eq!(o.status.code(), Some(2));
}
