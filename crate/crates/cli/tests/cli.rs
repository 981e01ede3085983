use std::io::Write;
use std::process::{Command, Output, Stdio};

fn wronski(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wronski"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    } else {
        drop(child.stdin.take());
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn sample(field: &str, m: &str, p: &str) -> String {
    let o = wronski(&["sample", "--field", field, "--m", m, "--p", p, "--seed", "1"], None);
    assert!(o.status.success(), "{}", stderr(&o));
    stdout(&o)
}

#[test]
fn counts_table() {
    let o = wronski(&["counts", "--max-m", "4", "--max-p", "4"], None);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("462"));
    assert!(out.contains("n_R"));
}

#[test]
fn counts_json() {
    let o = wronski(&["--format", "json", "counts", "--max-m", "3", "--max-p", "3"], None);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.is_object());
}

#[test]
fn wronskian_of_the_chart_center() {
    let center = r#"{"field":"Q","m":2,"p":2,"x":[["0","0"],["0","0"]]}"#;
    let o = wronski(&["wronskian", "-"], Some(center));
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("t^4"), "{out}");
    assert!(out.contains("not split"), "{out}");
}

#[test]
fn local_index_on_sampled_instances() {
    for (field, m, p) in [("Q", "2", "2"), ("Fp:11", "2", "2"), ("Fp:7", "1", "3"), ("Q", "2", "3")] {
        let inst = sample(field, m, p);
        let o = wronski(&["local-index", "-"], Some(&inst));
        match o.status.code() {
            Some(0) => assert!(stdout(&o).contains("agrees: true")),
            // Sampled points can be non-simple over small fields.
            Some(3) => assert!(field.starts_with("Fp")),
            c => panic!("{field} ({m},{p}) exited with {c:?}: {}", stderr(&o)),
        }
    }
}

#[test]
fn local_index_json_reports_agreement() {
    let inst = sample("Q", "2", "2");
    let o = wronski(&["--format", "json", "local-index", "-"], Some(&inst));
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["agrees"], serde_json::Value::Bool(true));
}

#[test]
fn global_degree_over_f11_is_hyperbolic() {
    let o = wronski(&["global-degree", "--field", "Fp:11", "--m", "2", "--p", "2", "--sample"], None);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("1·H, verdict True"));
}

#[test]
fn non_split_fiber_is_diagnosed() {
    let o = wronski(&["global-degree", "--field", "Fp:7", "--m", "2", "--p", "2", "--s", "0,1,2,3"], None);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("verdict withheld"));
    assert!(out.contains("resample"));
}

#[test]
fn exit_codes() {
    // 2: malformed input.
    assert_eq!(wronski(&["wronskian", "-"], Some(r#"{"field":"Q","m":2}"#)).status.code(), Some(2));
    assert_eq!(wronski(&["global-degree", "--field", "11", "--m", "2", "--p", "2", "--sample"], None).status.code(), Some(2));
    // 3: every split F_7 instance of shape (2,2) is a non-simple zero.
    let inst = sample("Fp:7", "2", "2");
    assert_eq!(wronski(&["local-index", "-"], Some(&inst)).status.code(), Some(3));
    // 4: budget exhausted.
    let o = wronski(
        &["global-degree", "--field", "Fp:11", "--m", "3", "--p", "3", "--s", "0,1,2,3,4,5,6,7,8", "--budget", "10"],
        None,
    );
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "selftest", "--seed", "5"];
    let a = wronski(&args, None);
    let b = wronski(&args, None);
    assert!(a.status.success(), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(sample("Q", "2", "3"), sample("Q", "2", "3"));
}
