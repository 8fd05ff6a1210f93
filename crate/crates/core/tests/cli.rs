//! End-to-end command pipelines.

use kss_core::cli::{run, Outcome};

const B_STAR: &str = r#"{"kind":"path","n":3,"factors":[{"rows":[[1,1,2],[2,3,4]]},{"rows":[[2],[3]]},{"rows":[[1,1,1,3]]},{"rows":[[2]]},{"rows":[[1]]}]}"#;
const RC_STAR: &str = r#"{"kind":"rc","n":3,"L":[[1,"4",1],[1,"1",2],[2,"3",1],[2,"1",1]],"nu":[[["3","0"],["1","0"]],[["3","0"],["1","1"]],[["1","0"]]]}"#;

fn kss(args: &[&str], input: &str) -> Outcome {
    let mut argv = vec!["kss"];
    argv.extend_from_slice(args);
    run(argv, &mut input.as_bytes())
}

fn ok(args: &[&str], input: &str) -> String {
    let out = kss(args, input);
    assert_eq!(out.code, 0, "kss {args:?}: {}", out.stderr);
    out.stdout
}

#[test]
fn phi_and_inverse() {
    assert_eq!(ok(&["phi"], B_STAR).trim_end(), RC_STAR);
    assert_eq!(ok(&["phi-inv", "--shape", "2x3,2x1,1x4,1x1,1x1"], RC_STAR).trim_end(), B_STAR);
}

#[test]
fn transpose_commutes_with_phi() {
    let via_rc = ok(&["transpose"], &ok(&["phi"], B_STAR));
    let via_path = ok(&["phi"], &ok(&["transpose"], B_STAR));
    assert_eq!(via_rc, via_path);
    assert_eq!(ok(&["transpose", "--n", "3"], &via_rc).trim_end(), RC_STAR);
}

#[test]
fn stretch_commutes_with_phi() {
    let left = ok(&["phi"], &ok(&["stretch", "--m", "2"], B_STAR));
    let right = ok(&["stretch", "--m", "2"], RC_STAR);
    assert_eq!(left, right);
    let half = ok(&["stretch", "--m", "1/2"], B_STAR);
    assert_eq!(ok(&["phi-q"], &half), ok(&["stretch", "--m", "1/2"], RC_STAR));
}

#[test]
fn weights_agree() {
    assert_eq!(ok(&["weight"], B_STAR), ok(&["weight"], RC_STAR));
}

#[test]
fn moves_and_inverses() {
    let g = ok(&["gamma", "--r", "2", "--s", "3", "--m", "1"], RC_STAR);
    assert_eq!(ok(&["gamma", "--r", "2", "--s", "3", "--m", "1", "--inverse"], &g).trim_end(), RC_STAR);
    let b = ok(&["beta", "--r", "2", "--s", "1"], &g);
    assert_eq!(ok(&["beta", "--r", "2", "--s", "1", "--inverse"], &b), g);
    let d = ok(&["delta"], &b);
    assert!(d.starts_with(r#"{"letter":2,"rc":"#), "{d}");
    let rest = d.trim_end().strip_prefix(r#"{"letter":2,"rc":"#).unwrap().strip_suffix('}').unwrap();
    assert_eq!(ok(&["delta-inv", "--letter", "2"], rest), b);
}

#[test]
fn r_matrix_is_an_involution() {
    let once = ok(&["r-matrix", "--pos", "4"], B_STAR);
    assert_ne!(once.trim_end(), B_STAR);
    assert_eq!(ok(&["r-matrix", "--pos", "4"], &once).trim_end(), B_STAR);
    assert_eq!(ok(&["phi"], &once).trim_end(), RC_STAR);
    assert_eq!(kss(&["r-matrix", "--pos", "5"], B_STAR).code, 2);
}

#[test]
fn enumerations_have_equal_size() {
    let paths = ok(&["enumerate-paths", "--shape", "1x2,2x1,1x1", "--n", "3"], "");
    let rcs = ok(&["enumerate-rcs", "--L", "1:2,2:1,1:1", "--n", "3"], "");
    assert!(!paths.is_empty());
    assert_eq!(paths.lines().count(), rcs.lines().count());
}

#[test]
fn verify_reports_json() {
    let out = ok(&["verify", "--suite", "bijection", "--n", "2", "--max-boxes", "3"], "");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["failures"], 0);
    assert!(v["checks"].as_u64().unwrap() > 0);
    assert_eq!(kss(&["verify", "--suite", "nonsense"], "").code, 1);
}

#[test]
fn file_input_and_output() {
    let dir = std::env::temp_dir().join(format!("kss-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("b.json");
    let output = dir.join("rc.json");
    std::fs::write(&input, B_STAR).unwrap();
    let out = kss(&["--in", input.to_str().unwrap(), "--out", output.to_str().unwrap(), "phi"], "");
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(std::fs::read_to_string(&output).unwrap().trim_end(), RC_STAR);
    let pretty = ok(&["--format", "pretty", "phi"], B_STAR);
    assert!(pretty.lines().count() > 1);
    assert_eq!(ok(&["phi-inv", "--shape", "2x3,2x1,1x4,1x1,1x1"], &pretty).trim_end(), B_STAR);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn error_exit_codes() {
    assert_eq!(kss(&["phi"], "[]").code, 1);
    assert_eq!(kss(&["phi"], RC_STAR).code, 1);
    let low = r#"{"kind":"path","n":1,"factors":[{"rows":[[2]]}]}"#;
    assert_eq!(kss(&["phi"], low).code, 2);
    assert_eq!(kss(&["phi-inv", "--shape", "1x1"], RC_STAR).code, 2);
}
