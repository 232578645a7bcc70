use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hyperbasis::model::counting::{count_morphisms, Budget, MorphismKind};
use hyperbasis::model::family::{generate, FamilySpec};
use hyperbasis::model::invariants::sigma_star;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperbasis")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn generated(dir: &Path, name: &str, args: &[&str]) -> String {
    let mut full = vec!["generate"];
    full.extend_from_slice(args);
    let out = run(&full);
    assert!(out.status.success());
    write(dir, name, &stdout(&out)).to_str().unwrap().to_string()
}

#[test]
fn generate_prints_hg_text() {
    let out = run(&["generate", "--family", "b_k", "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "p hg 3 1\ne 0 1 2\n");
}

#[test]
fn count_matches_the_library() {
    let dir = tempfile::tempdir().unwrap();
    let b2 = generated(dir.path(), "b2.hg", &["--family", "b_k", "--k", "2"]);
    let b3 = generated(dir.path(), "b3.hg", &["--family", "b_k", "--k", "3"]);
    let budget = Budget::default();
    let (p, h) = (generate(&FamilySpec::Bk { k: 2 }).unwrap(), generate(&FamilySpec::Bk { k: 3 }).unwrap());
    for kind in [MorphismKind::Hom, MorphismKind::TrimHom] {
        let expected = count_morphisms(kind, &p, &h, &budget).unwrap();
        let out = run(&["count", "--kind", kind.name(), "--pattern", &b2, "--host", &b3]);
        assert_eq!(stdout(&out), format!("{} = {expected}\n", kind.name()));
    }
    assert_eq!(stdout(&run(&["count", "--kind", "trimhom", "--pattern", &b2, "--host", &b3])), "trimhom = 9\n");
}

#[test]
fn invariants_print_reduced_fractions() {
    let dir = tempfile::tempdir().unwrap();
    let path = generated(
        dir.path(),
        "sunflower_4_1_3.hg",
        &["--family", "sunflower", "--uniformity", "4", "--core", "1", "--petals", "3"],
    );
    let h = generate(&FamilySpec::Sunflower { uniformity: 4, core: 1, petals: 3 }).unwrap();
    let sigma = sigma_star(&h, &Budget::default()).unwrap().value;
    let text = stdout(&run(&["invariants", "--input", &path]));
    assert!(text.contains(&format!("sigma_star = {}/{}\n", sigma.numer(), sigma.denom())));
    assert!(text.contains("sigma_star = 3/1\n"));
    let json: serde_json::Value = serde_json::from_str(&stdout(&run(&["invariants", "--input", &path, "--json"]))).unwrap();
    assert_eq!(json["sigma_star"], "3/1");
    assert_eq!(json["vertices"], 10);
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let b2 = generated(dir.path(), "b2.hg", &["--family", "b_k", "--k", "2"]);
    let h = write(dir.path(), "h.hg", "p hg 3 2\ne 0 1\ne 1 2\n");
    for args in [
        vec!["expand", "--kind", "stremb", "--pattern", h.to_str().unwrap()],
        vec!["tensor", "--left", &b2, "--right", h.to_str().unwrap()],
        vec!["interpolate", "--kind", "sub", "--pattern", &b2, "--host", h.to_str().unwrap()],
    ] {
        let (a, b) = (run(&args), run(&args));
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let b3 = generated(dir.path(), "b3.hg", &["--family", "b_k", "--k", "3"]);
    assert_eq!(run(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(run(&["count", "--bogus"]).status.code(), Some(64));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    let bad = write(dir.path(), "bad.hg", "p hg 2 1\ne 0 5\n");
    let out = run(&["invariants", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let out = run(&["count", "--kind", "hom", "--pattern", &b3, "--host", &b3, "--map-budget", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(run(&["generate", "--family", "b_k"]).status.code(), Some(1));
}

#[test]
fn gadgets_report_both_sides() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.hg", "p hg 4 6\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n");
    let text = stdout(&run(&["gadget", "clique", "--graph", k4.to_str().unwrap(), "--k", "3"]));
    assert_eq!(text, "sub = 4\ncliques = 4\n");
    let cn = write(dir.path(), "i.cn", "p cn 1 2 2\nx 0 0\nx 1 1\na 0 0\na 0 1\n");
    let text = stdout(&run(&["gadget", "cn", "--input", cn.to_str().unwrap()]));
    assert_eq!(text, "cp_trimhom = 1\ncolourful_neighbourhoods = 1\n");
}

#[test]
fn selftest_fast_passes() {
    let out = run(&["selftest", "--level", "fast"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(!stdout(&out).contains("FAIL"));
}
