use std::path::Path;
use std::process::{Command, Output};

fn polysym(cache: Option<&Path>, args: &[&str]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_polysym"));
    cmd.env_remove("POLYSYM_CACHE_DIR");
    match cache {
        Some(dir) => cmd.arg("--cache-dir").arg(dir),
        None => cmd.arg("--no-cache"),
    };
    cmd.args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = polysym(None, args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stderr(&out));
    stdout(&out)
}

/// Runs a failing command; returns the single stderr line.
fn fails(args: &[&str], code: i32) -> String {
    let out = polysym(None, args);
    assert_eq!(out.status.code(), Some(code), "{args:?}: {}", stdout(&out));
    let err = stderr(&out);
    assert_eq!(err.lines().count(), 1, "{err}");
    err
}

const P4: &str = r#"{"basis":"P","terms":[[[[4,1]],"1"]]}"#;
const H4: &str = r#"{"basis":"H","terms":[[[[4,1]],"1"]]}"#;

#[test]
fn expand_examples() {
    assert_eq!(ok(&["expand", "P", "4"]), "4*M[4] + 2*M[2^2] + 1*M[1^4]\n");
    assert_eq!(ok(&["expand", "M", "1"]), "1*M[1]\n");
    assert_eq!(
        ok(&["expand", "H+", "2"]),
        "-1*M[2] + 1*M[1 1] + 1*M[1^2]\n"
    );
    assert_eq!(ok(&["expand", "E", "1"]), "-1*M[1]\n");
}

#[test]
fn convert_examples() {
    assert_eq!(
        ok(&["convert", "P", "H", P4]),
        r#"{"basis":"H","terms":[[[[4,1]],"4"],[[[3,1],[1,1]],"-4"],[[[2,1],[2,1]],"-2"],[[[2,1],[1,1],[1,1]],"4"],[[[1,1],[1,1],[1,1],[1,1]],"-1"]]}"#
            .to_owned()
            + "\n"
    );
    let to_m = ok(&["convert", "H", "M", H4]);
    let x: serde_json::Value = serde_json::from_str(&to_m).unwrap();
    let terms = x["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 11);
    assert!(terms.iter().all(|t| t[1] == "1"));
    assert_eq!(ok(&["convert", "P", "P", P4]), format!("{P4}\n"));
}

#[test]
fn convert_reads_stdin() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_polysym"))
        .args(["--no-cache", "--format", "text", "convert", "P", "M", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(P4.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(stdout(&out), "4*M[4] + 2*M[2^2] + 1*M[1^4]\n");
}

#[test]
fn products_and_coefficients() {
    assert_eq!(ok(&["product", "1", "1"]), "2*M[1 1] + 1*M[1^2]\n");
    let product = ok(&["product", "2 2 1^2 1", "2 1", "3^3 1"]);
    assert_eq!(product.split(" + ").count(), 10);
    assert!(
        product.starts_with("18*M[3^3 2 2 2 1^2 1 1 1]"),
        "{product}"
    );
    let target = "3^3 2 2 2 1^2 1^2 1";
    let sources = ["2 2 1^2 1", "2 1", "3^3 1"];
    let mut args = vec!["coeff", "S", target];
    args.extend(sources);
    assert_eq!(ok(&args), "18\n");
    let mut args = vec!["coeff", "s", "--degree", "1", target];
    args.extend(sources);
    assert_eq!(ok(&args), "6\n");
    assert_eq!(
        ok(&["coeff", "D", "8 6^2 2^3 2 2", "6^2 2^4 1^8 1^2"]),
        "72\n"
    );
    let alpha = "2^2 1^2 1^2 1^2 1 1 1";
    assert_eq!(ok(&["coeff", "E", "5 3^2 2", alpha]), "4\n");
    assert_eq!(ok(&["coeff", "H", "5 3^2 2", alpha]), "40\n");
    assert_eq!(ok(&["coeff", "ES", "5 3^2 2", alpha]), "-2\n");
    assert_eq!(ok(&["coeff", "HS", "5 3^2 2", alpha]), "-32\n");
    assert_eq!(
        ok(&["--format", "json", "coeff", "HS", "5 3^2 2", alpha]),
        "{\"value\":\"-32\"}\n"
    );
}

#[test]
fn omega_examples() {
    let p2 = r#"{"basis":"P","terms":[[[[2,1]],"1"]]}"#;
    assert_eq!(
        ok(&["omega", p2]),
        "{\"basis\":\"P\",\"terms\":[[[[2,1]],\"-1\"]]}\n"
    );
    let h = ok(&["--format", "text", "omega", H4]);
    for route in ["h", "e", "h-plus", "p"] {
        assert_eq!(
            ok(&["--format", "text", "omega", "--route", route, H4]),
            h,
            "{route}"
        );
    }
}

#[test]
fn verify_suites() {
    let report = ok(&["verify", "identities", "--max-d", "3"]);
    assert!(report.lines().filter(|l| l.starts_with("PASS ")).count() == 28 * 3 * 2);
    assert!(report.ends_with("identities: 168 passed, 0 failed\n"));
    let report = ok(&["verify", "generating-functions", "--max-n", "0"]);
    assert!(
        report.ends_with("generating-functions: 14 passed, 0 failed\n"),
        "{report}"
    );
    let report = ok(&["--format", "json", "verify", "oracle", "--max-n", "4"]);
    let doc: serde_json::Value = serde_json::from_str(&report).unwrap();
    assert_eq!(doc["failed"], 0);
    assert_eq!(doc["suite"], "oracle");
}

#[test]
fn tables() {
    assert_eq!(ok(&["table", "stack-count", "0"]), "0: 1\n");
    assert_eq!(
        ok(&["table", "psp", "--order", "3", "2"]),
        "0: 1\n1: 1\n2: 4\n"
    );
    assert_eq!(
        ok(&["table", "stack-count", "4"]),
        "0: 1\n1: 1\n2: 3\n3: 5\n4: 11\n"
    );
    let table = ok(&["table", "stacked-tabular", "20", "--check-paper"]);
    assert!(table.contains("20: 67037152\n"));
    assert!(table.ends_with("check: 20 values match the published table\n"));
    let doc: serde_json::Value = serde_json::from_str(&ok(&[
        "--format",
        "json",
        "table",
        "classical-tabular",
        "3",
    ]))
    .unwrap();
    assert_eq!(
        doc["values"],
        serde_json::json!([[1, "1"], [2, "3"], [3, "7"]])
    );
}

#[test]
fn exit_codes_and_error_lines() {
    let err = fails(&["expand", "P", "4 x"], 2);
    assert!(err.starts_with("error[parse]: "), "{err}");
    let err = fails(&["expand", "Q", "4"], 2);
    assert!(err.starts_with("error[parse]: "), "{err}");
    let err = fails(&["convert", "P", "H", "{not json"], 2);
    assert!(err.starts_with("error[json]: "), "{err}");
    let err = fails(&["convert", "H", "P", P4], 3);
    assert!(err.starts_with("error[semantic]: "), "{err}");
    let err = fails(&["table", "nonsense", "3"], 2);
    assert!(err.starts_with("error[usage]: "), "{err}");
    let err = fails(&["table", "psp", "3", "--check-paper"], 2);
    assert!(err.starts_with("error[usage]: "), "{err}");
    let err = fails(&["verify", "identities", "--max-d", "0"], 2);
    assert!(err.starts_with("error[usage]: "), "{err}");
    let err = fails(&["coeff", "D", "4"], 2);
    assert!(err.starts_with("error[usage]: "), "{err}");
    fails(&["frobnicate"], 2);
}

#[test]
fn warm_cache_gives_identical_output() {
    let dir = tempfile::tempdir().unwrap();
    let x = r#"{"basis":"E+","terms":[[[[3,1],[1,1]],"2/3"],[[[2,1],[1,2]],"-5"],[[[4,1]],"1"]]}"#;
    let cases: [&[&str]; 4] = [
        &["convert", "E+", "H+", x],
        &["convert", "E+", "P", x],
        &["omega", "--route", "h", x],
        &["--format", "text", "convert", "E+", "E", x],
    ];
    for args in cases {
        let reference = polysym(None, args);
        let cold = polysym(Some(dir.path()), args);
        let warm = polysym(Some(dir.path()), args);
        assert_eq!(reference.status.code(), Some(0));
        assert_eq!(cold.stdout, reference.stdout, "{args:?}");
        assert_eq!(warm.stdout, reference.stdout, "{args:?}");
    }
    let files = std::fs::read_dir(dir.path()).unwrap().count();
    assert!(files > 0, "nothing was cached");
}

#[test]
fn corrupt_cache_entries_are_ignored() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["convert", "P", "H", P4];
    let reference = polysym(Some(dir.path()), &args);
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        std::fs::write(entry.unwrap().path(), "{ truncated").unwrap();
    }
    let again = polysym(Some(dir.path()), &args);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(again.stdout, reference.stdout);
}
