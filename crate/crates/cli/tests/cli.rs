use std::process::{Command, Output};

fn ratcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ratcat")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = ratcat(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    ratcat(args).status.code().unwrap()
}

#[test]
fn count() {
    assert_eq!(stdout(&["count", "5", "7"]), "66\n");
    let v: serde_json::Value = serde_json::from_str(&stdout(&["count", "5", "7", "--format", "json"])).unwrap();
    assert_eq!(v["count"], 66);
    assert_eq!(stdout(&["count", "5", "7", "--format", "csv"]), "m,n,count\n5,7,66\n");
}

#[test]
fn poly() {
    assert_eq!(stdout(&["poly", "2", "5"]), "q^2 + q*t + t^2\n");
    assert_eq!(stdout(&["poly", "4", "3"]), "q^3 + q^2*t + q*t + q*t^2 + t^3\n");
    assert_eq!(
        stdout(&["poly", "2", "5", "--format", "json"]),
        "{\"vars\":[\"q\",\"t\"],\"terms\":[[0,2,1],[1,1,1],[2,0,1]]}\n"
    );
}

#[test]
fn poincare() {
    let out = stdout(&["poincare", "4", "3"]);
    assert!(out.contains("area: 1 + t^2 + 2*t^4 + t^6\n"));
    assert!(out.contains("h: 1 + t^2 + 2*t^4 + t^6\n"));
    assert!(out.ends_with("equal: true\n"));
}

#[test]
fn semimodules() {
    let out = stdout(&["semimodules", "3", "4"]);
    assert_eq!(out.lines().count(), 5);
    assert!(out.starts_with("m=3 n=4 gaps=1,2,5 diagram=- a=3 h+=0\n"));
    assert!(out.contains("m=3 n=4 gaps=- diagram=2,1 a=0 h+=3\n"));
    let csv = stdout(&["semimodules", "3", "4", "--format", "csv"]);
    assert_eq!(csv.lines().next(), Some("gaps,diagram,a,h_plus"));
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["semimodules", "3", "4", "--format", "json"])).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 5);
}

#[test]
fn gmap_and_dual() {
    assert_eq!(
        stdout(&["gmap", "7", "3", "--gaps", "1,4"]),
        "G_m: 1,1,1,0,0,0,0\nG_n: 2,1,0\ntranspose-duality: holds\n"
    );
    assert_eq!(stdout(&["dual", "3", "7", "--gaps", "2,5"]), "m=3 n=7 gaps=1,2,4,5\n");
    assert_eq!(stdout(&["dual", "3", "4", "--gaps", "-"]), "m=3 n=4 gaps=-\n");
    assert_eq!(code(&["dual", "3", "4", "--gaps", "1,3"]), 1);
}

#[test]
fn reconstruct() {
    let out = stdout(&["reconstruct", "9", "4", "--g", "2,1,1,0,0,0,0,0,0"]);
    assert!(out.contains("generators: 0,3,4,6,7,8,10,11,14\n"), "{out}");
    assert!(out.contains("tree: 0->2 "));
    let out = stdout(&["reconstruct", "9", "5", "--g", "3,2,2,2,1,0,0,0,0"]);
    assert!(out.contains("generators: 0,4,5,7,10,12,15,17,20\n"));
    assert!(out.contains("8->inf"));
    assert_eq!(code(&["reconstruct", "9", "4", "--g", "2,1"]), 1);
    assert_eq!(code(&["reconstruct", "7", "5", "--g", "0,0,0,0,0,0,0"]), 1);
}

#[test]
fn bounce() {
    let out = stdout(&["bounce", "7", "3", "--g", "1,1,1,0,0,0,0"]);
    assert_eq!(out, "vertical: 2,0,1,0\nhorizontal: 2,2,1,1\nsteps: V2 E2 V0 E2 V1 E1 V0 E1\nstatistic: 2\n");
    let out = stdout(&["bounce", "8", "3", "--gaps", "1,2,5"]);
    assert!(out.contains("steps: V1 E1 V1 E2 V1 E2 V0 E2 V0 E1\nstatistic: 3\n"));
    assert!(out.contains("7->inf"));
    assert_eq!(code(&["bounce", "8", "3"]), 1);
}

#[test]
fn cores() {
    assert_eq!(stdout(&["cores", "3", "4"]), "-\n1\n2\n1,1\n3,1,1\n");
    assert_eq!(stdout(&["cores", "3", "4", "--list"]), "-\n1\n2\n1,1\n3,1,1\n");
    assert_eq!(stdout(&["cores", "3", "4", "--count"]), "5\n");
    assert_eq!(stdout(&["cores", "5", "7", "--self-conjugate"]), "10\n");
    assert_eq!(code(&["cores", "3", "4", "--count", "--list"]), 1);
}

#[test]
fn involution() {
    assert_eq!(
        stdout(&["involution", "3", "7", "--diagram", "4,1"]),
        "image: 1\ndiagram stats: (1, 5)\nimage stats: (5, 1)\n"
    );
    assert!(stdout(&["involution", "2", "5", "--diagram", "-"]).starts_with("image: 2\n"));
    assert_eq!(code(&["involution", "4", "5", "--diagram", "1"]), 1);
}

#[test]
fn verify_passes_and_is_deterministic() {
    let a = stdout(&["verify", "--max-sum", "12"]);
    assert!(a.ends_with("failures=0 conjectures=28 counterexamples=0\n"), "{}", a.lines().last().unwrap());
    let b = Command::new(env!("CARGO_BIN_EXE_ratcat"))
        .args(["verify", "--max-sum", "12"])
        .env("RATCAT_THREADS", "3")
        .output()
        .unwrap();
    assert_eq!(a.as_bytes(), b.stdout.as_slice());
    assert!(stdout(&["verify", "--max-sum", "7"]).contains("(2,5) symmetry pass"));
}

#[test]
fn verify_formats() {
    let csv = stdout(&["verify", "--max-sum", "5", "--format", "csv"]);
    assert!(csv.starts_with("m,n,check,status,witness\n1,1,count,pass,\"\"\n"));
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["verify", "--max-sum", "12", "--format", "json"])).unwrap();
    assert_eq!(v["hard_failures"], 0);
    assert_eq!(v["counterexamples"], 0);
    let records = v["records"].as_array().unwrap();
    assert!(records.iter().any(|r| r["status"] == "conjecture-holds"));
    for r in records {
        assert!(r["m"].is_u64() && r["n"].is_u64() && r["check"].is_string());
    }
}

#[test]
fn corrupted_statistic_exits_two() {
    let out = ratcat(&["verify", "--max-sum", "7", "--mutate-hplus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("symmetry fail"));
}

#[test]
fn usage_errors() {
    assert_eq!(code(&["frobnicate"]), 1);
    assert_eq!(code(&["count", "4", "6"]), 1);
    assert_eq!(code(&["count", "x", "6"]), 1);
    assert_eq!(code(&["verify", "--max-sum", "2"]), 1);
    assert_eq!(code(&["poly", "2", "5", "--format", "csv"]), 1);
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["--version"]), 0);
}
