use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

fn hiaus(args: &[&str], cache: &std::path::Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hiaus")).args(args).env("HIAUS_CACHE_DIR", cache).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_a2_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let o = hiaus(&["verify-auslander", corpus("a2.json").to_str().unwrap(), "--n", "1"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("verdict: PASS"));
}

#[test]
fn find_ct_reports_one_of_size_four() {
    let dir = tempfile::tempdir().unwrap();
    let o = hiaus(
        &["find-ct", corpus("auslander_a2.json").to_str().unwrap(), "--n", "2", "--format", "json"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["count"], 1);
    assert_eq!(v["result"]["found"][0]["size"], 4);
}

#[test]
fn whole_a2_at_n2_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let o = hiaus(&["check-axioms", corpus("a2.json").to_str().unwrap(), "--n", "2", "--subcategory", "all"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness:"));
}

#[test]
fn non_prime_modulus_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let o = hiaus(&["check-axioms", corpus("invalid/p4.json").to_str().unwrap()], dir.path());
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("modulus not prime"), "{err}");
    assert!(err.contains("field.p"), "{err}");
}

#[test]
fn json_reports_are_byte_identical_with_and_without_cache() {
    let dir = tempfile::tempdir().unwrap();
    let path = corpus("auslander_a2.json");
    let base = ["report", path.to_str().unwrap(), "--format", "json", "--seed", "3"];
    let uncached = hiaus(&[&base[..], &["--no-cache"]].concat(), dir.path());
    let cold = hiaus(&base, dir.path());
    let warm = hiaus(&base, dir.path());
    assert_eq!(uncached.status.code(), Some(0));
    assert_eq!(uncached.stdout, cold.stdout);
    assert_eq!(cold.stdout, warm.stdout);
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
}

#[test]
fn out_directory_receives_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("reports");
    let o = hiaus(
        &["check-axioms", corpus("semisimple2.json").to_str().unwrap(), "--out", out.to_str().unwrap(), "--format", "json"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let written = std::fs::read(out.join("semisimple2.check-axioms.json")).unwrap();
    assert_eq!(written, o.stdout);
}
