use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use hopfdual::catalog;
use hopfdual::instance::InstanceFile;

fn hopfdual(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfdual"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_file(dir: &Path, name: &str, f: &InstanceFile) -> String {
    let p = dir.join(name);
    fs::write(&p, serde_json::to_string_pretty(f).unwrap()).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn list_names_entries() {
    let o = hopfdual(&["catalog", "list"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    for name in ["Z_C2", "gauss", "sweedler4_Q", "sweedler4_Z3", "swap_smash", "Zmod6_C2"] {
        assert!(s.lines().any(|l| l.starts_with(name)), "{name} missing");
    }
}

#[test]
fn gauss_passes_everything() {
    let o = hopfdual(&["catalog", "run", "gauss", "--suite", "all"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn sweedler_duality_covers_both_sides() {
    let o = hopfdual(&["catalog", "run", "sweedler4_Q", "--suite", "duality"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let s = stdout(&o);
    assert!(s.contains("duality.u0-right.iso"));
    assert!(s.contains("duality.u1-left.iso"));
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(code(&hopfdual(&["catalog", "run", "nope"])), 2);
    assert_eq!(code(&hopfdual(&["catalog", "run", "Z_C2", "--suite", "bogus"])), 2);
    assert_eq!(code(&hopfdual(&["verify", "/definitely/not/here.json"])), 2);
    assert_eq!(code(&hopfdual(&["frobnicate"])), 2);

    let dir = tempfile::tempdir().unwrap();
    let mut f = catalog::get("gauss").unwrap().to_file();
    f.action = None;
    let p = write_file(dir.path(), "no_action.json", &f);
    let o = hopfdual(&["verify", &p, "--suite", "crossed"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing action"));

    let bad = dir.path().join("garbage.json");
    fs::write(&bad, "{ not json").unwrap();
    assert_eq!(code(&hopfdual(&["verify", bad.to_str().unwrap()])), 2);
}

#[test]
fn export_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["Z_C2", "conj_twisted", "gaussian_ints_cleft"] {
        let p = dir.path().join(format!("{name}.json"));
        let o = hopfdual(&["catalog", "export", name, p.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
        let back = InstanceFile::from_json(&fs::read_to_string(&p).unwrap()).unwrap();
        assert_eq!(back, catalog::get(name).unwrap().to_file());
    }
    let p = dir.path().join("Z_C2.json");
    let o = hopfdual(&["verify", p.to_str().unwrap(), "--suite", "hopf"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn mutated_antipode_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let mut f = catalog::get("Z_C2").unwrap().to_file();
    // S(e) = e, S(g) = e
    f.hopf.antipode = Some(vec![(0, 0, "1".into()), (1, 0, "1".into())]);
    let p = write_file(dir.path(), "bad_antipode.json", &f);
    let o = hopfdual(&["verify", &p, "--suite", "hopf"]);
    assert_eq!(code(&o), 1);
    let s = stdout(&o);
    let line = s.lines().find(|l| l.starts_with("FAIL hopf.axioms.antipode ")).expect("antipode failure line");
    assert!(line.ends_with("witness: g"), "{line}");
}

#[test]
fn canonical_output_is_byte_identical() {
    let a = hopfdual(&["catalog", "run", "conj_twisted", "--format", "json"]);
    let b = hopfdual(&["catalog", "run", "conj_twisted", "--format", "json"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn catalog_report_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("a.json");
    let p2 = dir.path().join("b.json");
    let t = dir.path().join("a.txt");
    assert_eq!(code(&hopfdual(&["report", "--format", "json", "--out", p1.to_str().unwrap()])), 0);
    assert_eq!(code(&hopfdual(&["report", "--format", "json", "--out", p2.to_str().unwrap()])), 0);
    assert_eq!(fs::read(&p1).unwrap(), fs::read(&p2).unwrap());
    assert_eq!(code(&hopfdual(&["report", "--format", "text", "--out", t.to_str().unwrap()])), 0);
    let text = fs::read_to_string(&t).unwrap();
    assert!(text.ends_with(&format!("{} instance(s), 0 failed\n", catalog::names().len())));
}
