use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_krawtchouk"))
        .args(args)
        .env_remove("KRAWTCHOUK_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn matrix_csv_symmetric_order_three() {
    let out = run(&["matrix", "--n", "3", "--r", "1", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "# krawtchouk N=3 r=1/1\n1,1,1,1\n3,1,-1,-3\n3,-1,-1,3\n1,-1,1,-1\n"
    );
}

#[test]
fn matrix_csv_r_two() {
    let out = run(&["matrix", "--n", "2", "--r", "2", "--format", "csv"]);
    assert_eq!(
        stdout(&out),
        "# krawtchouk N=2 r=2/1\n1,1,1\n2,-1,-4\n1,-2,4\n"
    );
}

#[test]
fn matrix_order_zero_is_single_cell() {
    let out = run(&["matrix", "--n", "0", "--r", "5/3", "--format", "csv"]);
    assert_eq!(stdout(&out), "# krawtchouk N=0 r=5/3\n1\n");
    let out = run(&["matrix", "--n", "0", "--r", "5/3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().last(), Some("1"));
}

#[test]
fn matrix_renders_fractions() {
    let out = run(&["matrix", "--n", "1", "--r", "-1/2", "--format", "csv"]);
    assert_eq!(stdout(&out), "# krawtchouk N=1 r=-1/2\n1,1\n1,1/2\n");
}

#[test]
fn matrix_json() {
    let out = run(&["matrix", "--n", "2", "--r", "2", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["r"], "2/1");
    assert_eq!(v["entries"][1], serde_json::json!(["2", "-1", "-4"]));
}

#[test]
fn format_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_krawtchouk"))
        .args(["matrix", "--n", "1"])
        .env("KRAWTCHOUK_FORMAT", "csv")
        .output()
        .unwrap();
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "# krawtchouk N=1 r=1/1\n1,1\n1,-1\n"
    );
}

#[test]
fn matrix_bad_parameter_is_usage_error() {
    assert_eq!(code(&run(&["matrix", "--n", "2", "--r", "1/0"])), 2);
    assert_eq!(code(&run(&["matrix", "--n", "2", "--r", "abc"])), 2);
    assert_eq!(code(&run(&["matrix", "--n", "-1"])), 2);
}

#[test]
fn verify_all_passes() {
    let out = run(&["verify", "--suite", "all", "--max-n", "10"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
}

#[test]
fn verify_pascal_case_count() {
    let out = run(&[
        "verify", "--suite", "pascal", "--max-n", "6", "--r", "3/7", "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    // two relations at every (n, j) with 0 <= n, j <= N
    let expected: u64 = (0..=6u64).map(|n| 2 * (n + 1) * (n + 1)).sum();
    assert_eq!(v["suites"][0]["cases"], expected);
    assert_eq!(v["invocation"]["r_values"], serde_json::json!(["3/7"]));
}

#[test]
fn verify_trivial_sums() {
    let out = run(&[
        "verify", "--suite", "sums", "--max-n", "0", "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["total_failures"], 0);
    assert_eq!(v["schema"], 1);
}

#[test]
fn verify_unknown_suite_is_usage_error() {
    let out = run(&["verify", "--suite", "nonsense"]);
    assert_eq!(code(&out), 2);
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn verify_corrupted_matrix_is_violation() {
    let out = run(&[
        "verify",
        "--suite",
        "all",
        "--max-n",
        "5",
        "--corrupt",
        "4,2,1",
        "--format",
        "json",
        "--canonical",
    ]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["passed"], false);
    assert!(v["total_failures"].as_u64().unwrap() > 0);
    let failures = v["suites"][0]["failures"].as_array().unwrap();
    assert!(!failures.is_empty());
}

#[test]
fn verify_failure_list_is_bounded() {
    let out = run(&[
        "verify",
        "--suite",
        "pascal",
        "--max-n",
        "6",
        "--corrupt",
        "3,1,1",
        "--failure-cap",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["suites"][0]["failures"].as_array().unwrap().len(), 2);
    assert!(v["suites"][0]["failure_count"].as_u64().unwrap() > 2);
}

#[test]
fn verify_canonical_json_is_byte_stable() {
    let args = [
        "verify",
        "--suite",
        "all",
        "--max-n",
        "7",
        "--format",
        "json",
        "--canonical",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(json(&a).get("wall_time_ms").is_none());
    let timed = run(&[
        "verify",
        "--suite",
        "involution",
        "--max-n",
        "3",
        "--format",
        "json",
    ]);
    assert!(json(&timed)["wall_time_ms"].is_u64());
}

#[test]
fn verify_parallel_matches_sequential() {
    let seq = json(&run(&[
        "verify",
        "--max-n",
        "8",
        "--format",
        "json",
        "--canonical",
    ]));
    let par = json(&run(&[
        "verify",
        "--max-n",
        "8",
        "--format",
        "json",
        "--canonical",
        "--jobs",
        "4",
    ]));
    assert_eq!(seq["suites"], par["suites"]);
    let corrupt = [
        "verify",
        "--max-n",
        "6",
        "--format",
        "json",
        "--canonical",
        "--corrupt",
        "5,0,3",
    ];
    let seq = json(&run(&corrupt));
    let par = json(&run(&[&corrupt[..], &["--jobs", "3"]].concat()));
    assert_eq!(seq["suites"], par["suites"]);
}

#[test]
fn verify_bad_r_is_usage_error() {
    assert_eq!(
        code(&run(&["verify", "--suite", "pascal", "--r", "x/2"])),
        2
    );
    assert_eq!(
        code(&run(&["verify", "--suite", "pascal", "--corrupt", "1,2"])),
        2
    );
}

#[test]
fn zeon_u_diagonal() {
    let out = run(&["zeon", "--n", "2", "--op", "U"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "# zeon op=U n=2 size=4 nnz=2\n0 0 2\n3 3 -2\n# diagonal 2 0 0 -2\n"
    );
    let v = json(&run(&["zeon", "--n", "2", "--op", "U", "--format", "json"]));
    assert_eq!(v["diagonal"], serde_json::json!(["2", "0", "0", "-2"]));
}

#[test]
fn zeon_t_single_entry() {
    let out = run(&["zeon", "--n", "1", "--op", "T"]);
    assert_eq!(stdout(&out), "# zeon op=T n=1 size=2 nnz=1\n1 0 1\n");
}

#[test]
fn zeon_t_entry_count() {
    let out = run(&["zeon", "--n", "4", "--op", "T"]);
    let text = stdout(&out);
    assert!(text.starts_with("# zeon op=T n=4 size=16 nnz=32\n"));
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 32);
    let v = json(&run(&[
        "zeon", "--n", "4", "--op", "Tstar", "--format", "json",
    ]));
    assert_eq!(v["nnz"], 32);
}

#[test]
fn zeon_raise_and_lower_tokens() {
    let raise = stdout(&run(&["zeon", "--n", "3", "--op", "raise:2"]));
    let lower = stdout(&run(&["zeon", "--n", "3", "--op", "lower:2"]));
    let flip = |text: &str| {
        let mut rows: Vec<String> = text
            .lines()
            .skip(1)
            .map(|l| {
                let p: Vec<&str> = l.split(' ').collect();
                format!("{} {} {}", p[1], p[0], p[2])
            })
            .collect();
        rows.sort();
        rows
    };
    let mut lower_rows: Vec<String> = lower.lines().skip(1).map(String::from).collect();
    lower_rows.sort();
    assert_eq!(flip(&raise), lower_rows);
}

#[test]
fn zeon_bad_operator_is_usage_error() {
    assert_eq!(code(&run(&["zeon", "--n", "3", "--op", "V"])), 2);
    assert_eq!(code(&run(&["zeon", "--n", "3", "--op", "raise:4"])), 2);
    assert_eq!(code(&run(&["zeon", "--n", "13", "--op", "T"])), 2);
}

#[test]
fn algebra_u_family() {
    let out = run(&[
        "algebra", "--n", "4", "--family", "U", "--check", "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(
        v["computed"],
        serde_json::json!({"d": 16, "delta": 5, "zeta": 70, "z": 5})
    );
}

#[test]
fn algebra_t_family() {
    let out = run(&[
        "algebra", "--n", "3", "--family", "T", "--check", "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["computed"]["delta"], 20);
    assert_eq!(v["computed"]["zeta"], 5);
    assert_eq!(v["computed"]["z"], 2);
    assert_eq!(v["z_discrepancy"], false);
}

#[test]
fn algebra_tt_family_notes_discrepancy() {
    let out = run(&["algebra", "--n", "2", "--family", "TT", "--check"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("NOTE: paper-stated z differs"), "{text}");
    let v = json(&run(&[
        "algebra", "--n", "2", "--family", "TT", "--check", "--format", "json",
    ]));
    assert_eq!(v["computed"]["z"], 4);
    assert_eq!(v["predicted"]["z"], 2);
    assert_eq!(v["z_discrepancy"], true);
}

#[test]
fn algebra_budget_and_usage_errors() {
    assert_eq!(code(&run(&["algebra", "--n", "6", "--family", "U"])), 2);
    assert_eq!(
        code(&run(&[
            "algebra",
            "--n",
            "7",
            "--family",
            "U",
            "--allow-large"
        ])),
        2
    );
    assert_eq!(code(&run(&["algebra", "--n", "2", "--family", "X"])), 2);
    assert_eq!(code(&run(&["algebra", "--n", "0", "--family", "U"])), 2);
}

#[test]
fn algebra_allow_large_warns() {
    let out = run(&[
        "algebra",
        "--n",
        "6",
        "--family",
        "U",
        "--allow-large",
        "--check",
    ]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["matrix", "--n", "5", "--r", "3/7"][..],
        &["zeon", "--n", "5", "--op", "U", "--format", "json"],
        &["algebra", "--n", "3", "--family", "TT", "--format", "json"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
}
