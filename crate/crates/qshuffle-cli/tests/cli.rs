use std::path::PathBuf;
use std::process::{Command, Output};

fn qshuffle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qshuffle"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(n: usize) -> String {
    let path =
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("tests/golden/spectrum_n{n}.md"));
    std::fs::read_to_string(path).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn spectrum_tables_match_goldens() {
    for n in 2..=5 {
        let n_arg = n.to_string();
        let o = qshuffle(&["spectrum", "--n", &n_arg, "--format", "md"]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), golden(n), "n = {n}");
    }
}

#[test]
fn spectrum_row_counts() {
    let o = qshuffle(&["spectrum", "--n", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 22);
    let one = qshuffle(&["spectrum", "--n", "1"]);
    let text = stdout(&one);
    assert_eq!(text.lines().count(), 5);
    assert!(text.ends_with("| (1) / () [0] | 1 | 1 | 1 |\n"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(qshuffle(&["spectrum", "--n", "9"]).status.code(), Some(2));
    assert_eq!(
        qshuffle(&["spectrum", "--n", "3", "--format", "xml"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qshuffle(&["charpoly", "--op", "t2r", "--n", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qshuffle(&["verify", "--n", "3", "--q", "-1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        qshuffle(&["flags", "--n", "3", "--p", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(qshuffle(&["bogus"]).status.code(), Some(2));
}

#[test]
fn verify_passes_and_embeds_provenance() {
    let o = qshuffle(&["verify", "--n", "3", "--q", "2,3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["q_values"], serde_json::json!(["2", "3"]));
    assert!(v["version"]
        .as_str()
        .unwrap()
        .starts_with(env!("CARGO_PKG_VERSION")));
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));
}

#[test]
fn charpoly_outputs() {
    let b = qshuffle(&["charpoly", "--op", "b2r", "--n", "4"]);
    let s = qshuffle(&["charpoly", "--op", "r2b", "--n", "4"]);
    assert_eq!(b.stdout, s.stdout);
    assert_eq!(
        stdout(&b),
        "χ(y) = (y - (q^3 + q^2 + q + 1)) (y - (q + 1))^6 (y - (1))^8 y^9\n"
    );
    let r = qshuffle(&[
        "charpoly",
        "--op",
        "r2r",
        "--n",
        "3",
        "--q",
        "2",
        "--bruteforce",
    ]);
    assert_eq!(r.status.code(), Some(0));
    assert!(stdout(&r).ends_with("agrees: true\n"));
}

#[test]
fn flags_report() {
    let o = qshuffle(&["flags", "--n", "3", "--p", "2", "--check", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["case"], "n=3, p=2");
    assert_eq!(v["passed"], true);
    assert_eq!(v["eigenvalues"], serde_json::json!([7, 1, 0]));
}

#[test]
fn config_and_out_dir() {
    let dir = scratch("config_and_out_dir");
    let conf = dir.join("qshuffle.conf");
    let out = dir.join("out");
    std::fs::write(
        &conf,
        format!("# defaults\nq_list = 3\noutput_dir = {}\n", out.display()),
    )
    .unwrap();
    let o = qshuffle(&[
        "--config",
        conf.to_str().unwrap(),
        "verify",
        "--n",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["q_values"], serde_json::json!(["3"]));
    assert_eq!(std::fs::read(out.join("verify_n2.json")).unwrap(), o.stdout);

    std::fs::write(&conf, "colour = blue\n").unwrap();
    assert_eq!(
        qshuffle(&["--config", conf.to_str().unwrap(), "spectrum", "--n", "2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn simulate_and_eigvectors() {
    let dir = scratch("simulate_and_eigvectors");
    let csv = dir.join("tv.csv");
    let o = qshuffle(&[
        "simulate",
        "--n",
        "3",
        "--q",
        "2",
        "--steps",
        "5",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    // 1 - π(id) with π(id) = 1/[3]!_q = 1/21
    assert_eq!(text.lines().count(), 7);
    assert!(text.lines().nth(1).unwrap().starts_with("0,20/21,"));
    let e = qshuffle(&["eigvectors", "--lambda", "3,1", "--q", "2"]);
    assert_eq!(e.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&e.stdout).unwrap();
    assert_eq!(v["vectors"].as_array().unwrap().len(), 3);
    assert_eq!(
        qshuffle(&["eigvectors", "--lambda", "3,1", "--q", "-2"])
            .status
            .code(),
        Some(2)
    );
}
