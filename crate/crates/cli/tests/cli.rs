use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    run_with(args, None, &[])
}

fn run_with(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_supergrid"));
    cmd.args(args)
        .env_remove("SUPERGRID_FUZZ_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    let mut input = child.stdin.take().unwrap();
    input.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(input);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

fn words(s: &str) -> Vec<&str> {
    s.split_whitespace().collect()
}

#[test]
fn longest_reports_case_and_length() {
    let o = run(&words(
        "longest --shape C --m 5 --n 5 --k 2 --l 1 --c 2 --d 2 --s 1,1 --t 5,5 --format json",
    ));
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["case"], "C1");
    assert_eq!(v["length"], 23);
    assert_eq!(v["upper_bound"], 23);
    assert_eq!(v["path"].as_array().unwrap().len(), 23);
    assert_eq!(v["forbidden"], serde_json::json!([]));
}

#[test]
fn cycle_of_the_ten_by_eight_rectangle() {
    let o = run(&words("hc --shape R --m 10 --n 8"));
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let verts: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(verts.len(), 80);
    assert!(verts.iter().all(|l| l.split(',').count() == 2));
    assert!(text.contains("# cycle 80"));

    let o = run(&words("render --shape R --m 10 --n 8 --solve hc"));
    assert!(stdout(&o).contains("boundary edges: 32"));
    let o = run(&words("render --shape R --m 10 --n 8 --format svg"));
    let svg = stdout(&o);
    assert!(svg.starts_with("<svg") && svg.contains("boundary edges: 32"));
    assert_eq!(svg.matches("<circle").count(), 80);
}

#[test]
fn forbidden_results_and_strict_mode() {
    let args = "hp --shape C --m 3 --n 4 --k 1 --l 2 --c 1 --d 1 --s 1,1 --t 2,2";
    let o = run(&words(&format!("{args} --format json")));
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["forbidden"], serde_json::json!(["F7"]));
    assert!(v["path"].is_null());
    assert_eq!(
        run(&words(&format!("{args} --strict"))).status.code(),
        Some(3)
    );

    let o = run(&words(
        "hc --shape L --m 3 --n 3 --k 2 --l 2 --strict --format json",
    ));
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(json(&o)["forbidden"], serde_json::json!(["F5"]));
}

#[test]
fn argument_errors_exit_with_two() {
    for args in [
        "hp --shape Q --m 3 --n 3 --s 1,1 --t 2,2",
        "hp --shape R --m 3 --n 3 --s 1,1",
        "hp --shape R --m 3 --n 3 --s 1,1 --t 9,9",
        "hp --shape R --m 3 --n 3 --s 1;1 --t 2,2",
        "longest --shape C --m 5 --n 5 --k 2 --l 1 --c 2 --d 1 --s 1,1 --t 2,2",
        "longest --shape L --m 3 --n 3 --k 3 --l 1 --s 1,1 --t 1,2",
        "render --shape R --m 3 --n 3 --format json",
    ] {
        let o = run(&words(args));
        assert_eq!(
            o.status.code(),
            Some(2),
            "{args}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
    }
}

#[test]
fn emitted_json_passes_check() {
    let shapes = [
        "--shape R --m 4 --n 3",
        "--shape L --m 4 --n 4 --k 2 --l 2",
        "--shape C --m 4 --n 5 --k 2 --l 2 --c 2",
        "--shape C --m 3 --n 5 --k 2 --l 1 --c 2",
    ];
    let pairs = [
        ("1,1", "1,3"),
        ("1,2", "2,3"),
        ("2,1", "1,5"),
        ("1,1", "2,1"),
    ];
    for shape in shapes {
        let o = run(&words(&format!("hc {shape} --format json")));
        let c = run_with(&["check"], Some(&stdout(&o)), &[]);
        assert_eq!(c.status.code(), Some(0), "hc {shape}: {}", stdout(&c));
        for (s, t) in pairs {
            for query in ["hp", "longest"] {
                let o = run(&words(&format!(
                    "{query} {shape} --s {s} --t {t} --format json"
                )));
                if o.status.code() == Some(2) {
                    continue; // endpoint outside this shape
                }
                let c = run_with(&["check"], Some(&stdout(&o)), &[]);
                assert_eq!(
                    c.status.code(),
                    Some(0),
                    "{query} {shape} {s} {t}: {}",
                    stdout(&c)
                );
            }
        }
    }
}

#[test]
fn check_rejects_tampered_paths() {
    let o = run(&words(
        "hp --shape R --m 4 --n 3 --s 1,1 --t 4,3 --format json",
    ));
    let mut v = json(&o);
    let path = v["path"].as_array_mut().unwrap();
    path.swap(3, 7);
    let c = run_with(&["check", "--format", "json"], Some(&v.to_string()), &[]);
    assert_eq!(c.status.code(), Some(1));
    assert_eq!(json(&c)["valid"], false);

    let mut v = json(&o);
    v["path"].as_array_mut().unwrap().pop();
    v["length"] = 11.into();
    let c = run_with(&["check"], Some(&v.to_string()), &[]);
    assert_eq!(c.status.code(), Some(1));
    assert!(stdout(&c).starts_with("invalid"));

    let text = "1,1\n2,2\n3,3\n";
    let c = run_with(
        &words("check --shape R --m 3 --n 3 --s 1,1 --t 3,3"),
        Some(text),
        &[],
    );
    assert_eq!(c.status.code(), Some(0));
    assert!(stdout(&c).starts_with("ok: path of 3 vertices"));
    let c = run_with(
        &words("check --shape R --m 3 --n 3 --closed"),
        Some(text),
        &[],
    );
    assert_eq!(c.status.code(), Some(1));
}

#[test]
fn text_output_round_trips_through_check() {
    let o = run(&words(
        "longest --shape L --m 5 --n 3 --k 4 --l 1 --s 1,2 --t 2,3",
    ));
    let text = stdout(&o);
    assert!(text.contains("# case F4") && text.contains("# forbidden F4"));
    let c = run_with(
        &words("check --shape L --m 5 --n 3 --k 4 --l 1 --s 1,2 --t 2,3"),
        Some(&text),
        &[],
    );
    assert_eq!(c.status.code(), Some(0), "{}", stdout(&c));
    assert!(stdout(&c).contains("path of 10 vertices"));
}

fn seed_file(name: &str, lines: &[&str]) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("supergrid-{}-{name}.jsonl", std::process::id()));
    std::fs::write(&path, lines.join("\n")).unwrap();
    path
}

#[test]
fn seed_files_drive_batches() {
    let path = seed_file(
        "batch",
        &[
            r#"{"shape":{"kind":"R","m":3,"n":3},"s":[1,1],"t":[3,3]}"#,
            "# comment",
            r#"{"shape":{"kind":"C","m":3,"n":4,"k":1,"l":2,"c":1},"s":[1,1],"t":[2,2]}"#,
            r#"{"shape":{"kind":"L","m":4,"n":4,"k":2,"l":2},"command":"hc"}"#,
        ],
    );
    let p = path.to_str().unwrap();
    let o = run(&["longest", "--seed-file", p, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0]["length"], 9);
    assert_eq!(lines[1]["forbidden"], serde_json::json!(["F7"]));
    assert_eq!(lines[2]["closed"], true);
    assert_eq!(
        run(&["longest", "--seed-file", p, "--strict"])
            .status
            .code(),
        Some(3)
    );

    let o = run(&["fuzz", "--seed-file", p, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(
        (v["shapes"].as_u64(), v["pairs"].as_u64()),
        (Some(3), Some(2))
    );

    let bad = seed_file(
        "bad",
        &[r#"{"shape":{"kind":"L","m":2,"n":2,"k":2,"l":1}}"#],
    );
    assert_eq!(
        run(&["hc", "--seed-file", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    let _ = std::fs::remove_file(path);
    let _ = std::fs::remove_file(bad);
}

#[test]
fn fuzz_budget_comes_from_the_environment() {
    let o = run_with(
        &words("fuzz --max-vertices 10"),
        None,
        &[("SUPERGRID_FUZZ_BUDGET", "8")],
    );
    assert_eq!(o.status.code(), Some(2));
    let o = run_with(
        &words("fuzz --format json"),
        None,
        &[("SUPERGRID_FUZZ_BUDGET", "6")],
    );
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert!(v["shapes"].as_u64().unwrap() > 0);
    assert_eq!(v["mismatches"], serde_json::json!([]));
}

/// The headline gate: every shape and ordered pair up to 18 vertices.
#[test]
fn fuzz_up_to_eighteen_vertices_finds_no_mismatch() {
    let o = run(&words("fuzz --max-vertices 18"));
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    assert!(text.trim_end().ends_with(": 0 mismatches"), "{text}");
}
