use std::process::Command;

fn run(args: &[&str]) -> (String, i32) {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_fockbasis"))
        .arg("--cache-dir")
        .arg(dir.path())
        .args(args)
        .output()
        .unwrap();
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

#[test]
fn straighten() {
    assert_eq!(run(&["straighten", "--n", "2", "--word", "-1,2"]), ("-v^-1*(2,-1) - (1-v^-2)*(1,0)\n".into(), 0));
    assert_eq!(run(&["straighten", "--n", "2", "--word", "1,1"]), ("0\n".into(), 0));
}

#[test]
fn decomp_and_basis() {
    let (csv, code) = run(&["decomp", "--n", "2", "--weight", "2"]);
    assert_eq!(code, 0);
    assert!(csv.ends_with("1,0\n1,1\n"), "{}", csv);
    let (json, code) = run(&["basis", "--n", "2", "--weight", "2", "--kind", "plus", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["kind"], "plus");
    let (tex, _) = run(&["basis", "--n", "3", "--weight", "3", "--kind", "minus", "--format", "latex"]);
    assert!(tex.contains("\\begin{"));
}

#[test]
fn exit_codes() {
    let (json, code) = run(&["verify", "--suite", "straighten", "--n", "2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(run(&["verify", "--suite", "nope", "--n", "2"]).1, 2);
    assert_eq!(run(&["straighten", "--n", "1", "--word", "0"]).1, 2);
    assert_eq!(run(&["basis", "--n", "2", "--weight", "9", "--kind", "hall"]).1, 3);
}
