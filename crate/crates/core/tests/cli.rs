use serde_json::Value;
use superschur::cli::run;

fn call(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let argv = std::iter::once("superschur").chain(args.iter().copied());
    let code = run(argv, &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn untimed(line: &str) -> Value {
    let mut v: Value = serde_json::from_str(line).unwrap();
    v["timing"] = Value::from(0.0);
    v
}

#[test]
fn hook_schur_of_a_box() {
    assert_eq!(
        call(&["compute", "hook-schur", "--lambda", "1", "--m", "1", "--n", "1"]),
        (0, "1*x[-1] + 1*y[1]\n".into())
    );
}

#[test]
fn weyl_hook_matrix_verifies() {
    let (code, out) = call(&[
        "verify",
        "weyl-hook",
        "--m",
        "1",
        "--n",
        "1",
        "--max-size",
        "2",
        "--trunc",
        "4",
    ]);
    assert_eq!(code, 0);
    assert_eq!(untimed(&out)["status"], "verified");
}

#[test]
fn malformed_input_exits_2() {
    let (code, _) = call(&[
        "compute", "sab", "--lambda", "1,2", "--alpha", "a1:0", "--beta", "b1:0", "--trunc", "4",
    ]);
    assert_eq!(code, 2);
    assert_eq!(
        call(&["compute", "sab", "--lambda", "1", "--alpha", "a1:2", "--beta", "b1:0"]).0,
        2
    );
    assert_eq!(call(&["verify", "nothing"]).0, 2);
    assert_eq!(call(&["compute", "kac", "--weight", "0,1|0"]).0, 2);
}

#[test]
fn failed_verification_exits_1_with_counterexample() {
    let (code, out) = call(&[
        "verify",
        "restricted-cauchy",
        "--d",
        "1",
        "--nx",
        "2",
        "--ny",
        "2",
        "--trunc",
        "4",
        "--zero-weights",
        "literal",
    ]);
    assert_eq!(code, 1);
    let v = untimed(&out);
    assert_eq!(v["status"], "failed");
    assert_eq!(v["first_discrepancy"]["reconfirmed"], true);
}

#[test]
fn json_is_deterministic() {
    let args = [
        "verify",
        "weyl",
        "--lambda",
        "1,-1",
        "--alpha",
        "a1:0,a2:1",
        "--beta",
        "b1:0",
        "--trunc",
        "4",
    ];
    let (c1, o1) = call(&args);
    let (c2, o2) = call(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(untimed(&o1), untimed(&o2));
    let (_, s1) = call(&[
        "compute",
        "sab",
        "--lambda",
        "1,-1",
        "--alpha",
        "a1:0,a2:1",
        "--beta",
        "b1:0",
        "--trunc",
        "4",
        "--format",
        "json",
    ]);
    let (_, s2) = call(&[
        "compute",
        "sab",
        "--lambda",
        "1,-1",
        "--alpha",
        "a1:0,a2:1",
        "--beta",
        "b1:0",
        "--trunc",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(s1, s2);
}

#[test]
fn sab_paths_print_the_same_series() {
    let base = [
        "compute",
        "sab",
        "--lambda",
        "1,-1",
        "--alpha",
        "a1:0,a2:1",
        "--beta",
        "b1:0",
        "--trunc",
        "4",
    ];
    let outs: Vec<String> = ["lr", "def", "jt"]
        .iter()
        .map(|p| {
            let mut a = base.to_vec();
            a.extend(["--path", p]);
            call(&a).1
        })
        .collect();
    assert!(outs.iter().all(|o| o == &outs[0]));
}

#[test]
fn enumerations() {
    assert_eq!(
        call(&["enumerate", "ssyt", "--shape", "3,1/1", "--letters", "2", "--count"]),
        (0, "6\n".into())
    );
    let (code, out) = call(&["enumerate", "cosets", "--max-len", "4", "--window", "2,2", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 6);
    assert_eq!(
        call(&["compute", "lambda-pm", "--lambda", "2,-1", "--mu", "1"]),
        (0, "(2,1) (1,1)\n".into())
    );
}

#[test]
fn config_file_runs_each_entry() {
    let path = std::env::temp_dir().join(format!("superschur-config-{}.json", std::process::id()));
    std::fs::write(
        &path,
        r#"[{"command": "compute hook-schur", "params": {"lambda": "1", "m": 1, "n": 1}},
            {"command": "verify denominator", "params": {"m": 1, "n": 1, "trunc": 4}, "format": "text"}]"#,
    )
    .unwrap();
    let (code, out) = call(&["--config", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "1*x[-1] + 1*y[1]");
    assert!(lines[1].starts_with("denominator") && lines[1].contains("verified"));
}

#[test]
fn command_definition_is_consistent() {
    use clap::CommandFactory;
    superschur::cli::Cli::command().debug_assert();
}
