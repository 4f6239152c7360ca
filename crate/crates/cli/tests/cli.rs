use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_paraquat-cli"))
}

fn strip_times(v: &mut serde_json::Value) {
    for c in v["checks"].as_array_mut().unwrap() {
        c["wall_time"] = serde_json::Value::Null;
    }
}

#[test]
fn passing_suite_exits_zero() {
    let out = bin().args(["--suite", "algebra", "--samples", "20"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("algebra.norm_multiplicativity"));
}

#[test]
fn configuration_errors_exit_two() {
    for args in [
        vec!["--suite", "reduce-pq", "--p", "2", "--q", "4"],
        vec!["--suite", "reduce-pq", "--p", "3", "--q", "3"],
        vec!["--suite", "nonsense"],
        vec!["--suite", "algebra", "--format", "yaml"],
        vec!["--suite", "reduce-s1", "--xi", "1,2"],
        vec!["--samples", "many"],
    ] {
        let out = bin().args(&args).output().unwrap();
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn failing_check_exits_one() {
    // a zero override makes the floating flow-addition check fail
    let out = bin().args(["--suite", "algebra", "--samples", "50", "--tol", "0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains("FAIL"));
}

#[test]
fn json_report_file_is_deterministic() {
    let dir = std::env::temp_dir().join(format!("paraquat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let mut runs = Vec::new();
    for k in 0..2 {
        let path = dir.join(format!("run{k}.json"));
        let status = bin()
            .args(["--suite", "reduce-pq", "--samples", "10", "--seed", "7", "--format", "json", "--out"])
            .arg(&path)
            .status()
            .unwrap();
        assert_eq!(status.code(), Some(0));
        let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(v["version"], "1");
        assert_eq!(v["config"]["seed"], 7);
        strip_times(&mut v);
        runs.push(v);
    }
    assert_eq!(runs[0], runs[1]);
    let names: Vec<&str> = runs[0]["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    std::fs::remove_dir_all(&dir).ok();
}
