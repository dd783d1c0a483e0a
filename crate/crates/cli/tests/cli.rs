//! Drives the compiled binary: exit codes, output files, census.

use std::path::PathBuf;
use std::process::Command;

fn gradex() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gradex"))
}

fn cfg(name: &str) -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "configs", name]
        .iter()
        .collect()
}

fn exit_code(args: &[&str]) -> i32 {
    gradex().args(args).output().unwrap().status.code().unwrap()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gradex-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn analyze_exit_codes_follow_the_selected_property() {
    let b = cfg("example_b.cfg");
    let b = b.to_str().unwrap();
    assert_eq!(exit_code(&["analyze", b]), 0);
    assert_eq!(exit_code(&["analyze", b, "--property", "strong"]), 1);
    assert_eq!(
        exit_code(&["analyze", b, "--property", "locally-strong=0"]),
        0
    );
    assert_eq!(
        exit_code(&["analyze", b, "--property", "locally-strong=1"]),
        1
    );

    let c = cfg("example_c_rational.cfg");
    assert_eq!(exit_code(&["analyze", c.to_str().unwrap()]), 1);
    let l = cfg("example_c_leavitt.cfg");
    assert_eq!(exit_code(&["analyze", l.to_str().unwrap()]), 2);
    let p = cfg("example_polyring.cfg");
    assert_eq!(
        exit_code(&[
            "analyze",
            p.to_str().unwrap(),
            "--property",
            "epsilon-strong"
        ]),
        1
    );
}

#[test]
fn errors_exit_above_two() {
    assert!(exit_code(&["analyze", "/definitely/missing.cfg"]) > 2);

    let bad = tmp("bad.cfg");
    std::fs::write(
        &bad,
        "group = \"Z/3\"\nn = 3\ntuple = [\"1\", \"0\", \"0\"]\nring = \"Q\"\n",
    )
    .unwrap();
    let out = gradex()
        .args(["analyze", bad.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.code().unwrap() > 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("g_1"));

    std::fs::write(&bad, "group = \"Z/3\"\nn = 3\ntuple = [\"0\"\n").unwrap();
    let out = gradex()
        .args(["analyze", bad.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.code().unwrap() > 2);
    assert!(
        String::from_utf8_lossy(&out.stderr).contains("line"),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    assert!(
        exit_code(&[
            "analyze",
            cfg("example_b.cfg").to_str().unwrap(),
            "--property",
            "bogus"
        ]) > 2
    );
}

#[test]
fn report_written_to_file_re_verifies() {
    let out = tmp("b.json");
    let code = exit_code(&[
        "analyze",
        cfg("example_b.cfg").to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(exit_code(&["verify-report", out.to_str().unwrap()]), 0);

    // Tamper with one witness entry.
    let text = std::fs::read_to_string(&out).unwrap();
    let mut json: serde_json::Value = serde_json::from_str(&text).unwrap();
    json["verdicts"]["epsilon_crossed"]["certificate"]["pairs"][0]["a"][0][0] = "7".into();
    std::fs::write(&out, serde_json::to_string(&json).unwrap()).unwrap();
    assert!(exit_code(&["verify-report", out.to_str().unwrap()]) > 2);
}

#[test]
fn text_format_and_env_cap() {
    let out = gradex()
        .args([
            "analyze",
            cfg("example_a.cfg").to_str().unwrap(),
            "--format",
            "text",
        ])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("strong: Yes"), "{text}");

    let code = gradex()
        .env("GRADEX_MAX_N", "2")
        .args(["analyze", cfg("example_a.cfg").to_str().unwrap()])
        .status()
        .unwrap()
        .code()
        .unwrap();
    assert!(code > 2);
}

#[test]
fn census_csv_and_counts() {
    let out = gradex()
        .args([
            "exhaustive",
            "--group",
            "Z/2",
            "--n",
            "2",
            "--ring",
            "Q",
            "--jobs",
            "2",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let csv = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        csv,
        "tuple,strong,epsilon_crossed,rank_Se,supp_size\n\"(0,0)\",false,true,4,1\n\"(0,1)\",true,true,2,2\n"
    );
    let summary = String::from_utf8(out.stderr).unwrap();
    assert!(
        summary.contains("total 2, strong 1, epsilon-crossed 2"),
        "{summary}"
    );

    let out = gradex()
        .args(["exhaustive", "--group", "Z/3", "--n", "3", "--ring", "Q"])
        .output()
        .unwrap();
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("total 9, strong 2"));

    assert!(exit_code(&["exhaustive", "--group", "Z", "--n", "2", "--ring", "Q"]) > 2);
    assert!(exit_code(&["exhaustive", "--group", "Z/2", "--n", "7", "--ring", "Q"]) > 2);
    assert_eq!(
        exit_code(&[
            "exhaustive",
            "--group",
            "Z/2",
            "--n",
            "7",
            "--ring",
            "Q",
            "--max-n",
            "7"
        ]),
        0
    );
}

#[test]
fn leavitt_verify_subcommand() {
    let out = gradex().arg("leavitt-verify").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.contains("(C^2)[3,3] = x1*y1+x2*y2 -> 1 [ok]"),
        "{text}"
    );
    assert!(text.contains("deg C = 1"));
}
