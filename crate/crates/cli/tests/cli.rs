use std::io::Write;
use std::process::{Command, Output, Stdio};

fn uninorm(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_uninorm"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(text) = stdin {
        child
            .stdin
            .take()
            .unwrap()
            .write_all(text.as_bytes())
            .unwrap();
    }
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn enumerate_counts_go_to_stderr() {
    let out = uninorm(&["enumerate", "uninorms", "--n", "3"], None);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stderr).trim(), "4");
    assert_eq!(stdout(&out).split("\n\n").count(), 4);

    let out = uninorm(&["enumerate", "single-peaked", "--n", "4"], None);
    assert_eq!(stdout(&out).lines().count(), 8);
    let out = uninorm(&["enumerate", "uninorms", "--n", "1"], None);
    assert_eq!(stdout(&out), "1\n1\n");
    let out = uninorm(
        &[
            "enumerate",
            "conservative",
            "--n",
            "3",
            "--symmetric",
            "--format",
            "json",
        ],
        None,
    );
    assert_eq!(stdout(&out).lines().count(), 8);
}

#[test]
fn enumerate_to_file() {
    let dir = std::env::temp_dir().join(format!("uninorm-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("gspecs.txt");
    let out = uninorm(
        &[
            "enumerate",
            "gspecs",
            "--n",
            "3",
            "--output",
            path.to_str().unwrap(),
        ],
        None,
    );
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "1 1\n2 2 2\n2 3 2\n3 3 3 3\n"
    );
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn check_exit_status_follows_properties() {
    let out = uninorm(
        &[
            "check",
            "--fixture",
            "fig13",
            "--properties",
            "associative,bisymmetric",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(1));
    let profile = json(&out);
    assert_eq!(profile["associative"], true);
    assert_eq!(profile["bisymmetric"], false);

    let out = uninorm(
        &["check", "--properties", "conservative"],
        Some("2\n1 2\n2 2\n"),
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["conservative"], true);

    let out = uninorm(
        &[
            "check",
            "--fixture",
            "fig7",
            "--properties",
            "nondecreasing",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["nondecreasing"], false);

    let out = uninorm(&["check", "-"], Some(r#"{"n":2,"table":[[1,1],[1,2]]}"#));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["neutral"], 2);
}

#[test]
fn usage_and_parse_errors_exit_two() {
    for (args, stdin) in [
        (vec!["check", "--properties", "pretty"], Some("1\n1\n")),
        (vec!["check"], Some("2\n1 2\n")),
        (vec!["check", "--fixture", "fig10"], None),
        (vec!["verify", "--theorem", "nope", "--n", "3"], None),
        (vec!["verify", "--theorem", "Tcons", "--n", "9"], None),
        (vec!["enumerate", "conservative", "--n", "9"], None),
        (vec!["enumerate", "bogus", "--n", "3"], None),
        (
            vec!["render", "--order", "1 3 3", "--style", "profile"],
            None,
        ),
        (vec!["count", "--n", "65"], None),
    ] {
        let out = uninorm(&args, stdin);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn render_styles() {
    let out = uninorm(&["render", "--fixture", "fig3"], None);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 5);
    assert!(!text.contains('('));

    let out = uninorm(
        &["render", "--order", "2 3 4 1 5", "--style", "profile"],
        None,
    );
    assert!(stdout(&out).contains(": single-peaked"));
    let out = uninorm(
        &["render", "--fixture", "two-peaks", "--style", "profile"],
        None,
    );
    assert!(stdout(&out).contains("not single-peaked"));

    let out = uninorm(&["render", "--style", "dot"], Some("1\n1\n"));
    let dot = stdout(&out);
    assert!(dot.starts_with("graph contour {"));
    assert_eq!(dot.matches("pos=").count(), 1);
}

#[test]
fn verify_reports() {
    let out = uninorm(&["verify", "--theorem", "main2n", "--n", "10"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["metrics"]["count"], 512);

    let out = uninorm(&["verify", "--theorem", "main2n", "--n", "1"], None);
    assert_eq!(json(&out)["metrics"]["count"], 1);

    let out = uninorm(
        &["verify", "--theorem", "testCA", "--n", "4", "--jobs", "2"],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["checked"], 4096);
    assert_eq!(report["counterexamples"], 0);

    let out = uninorm(&["verify", "--theorem", "open-questions", "--n", "3"], None);
    assert_eq!(json(&out)["enumeration"]["conservative_associative"], 20);
}

#[test]
fn count_command() {
    let out = uninorm(&["count", "--n", "5", "--e", "3", "--verify"], None);
    assert_eq!(out.status.code(), Some(0));
    let value = json(&out);
    assert_eq!(value["count"], 6);
    assert_eq!(value["generated"], 6);
    let out = uninorm(&["count", "--n", "64"], None);
    assert_eq!(json(&out)["count"], 1u64 << 63);
}
