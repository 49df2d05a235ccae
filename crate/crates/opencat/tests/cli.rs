//! End-to-end checks of the command line: exit codes, report text, and the
//! compose/apply/gen round trips.

use std::path::Path;
use std::process::{Command, Output};

use opencat::harness::document::{parse, serialize, Document};
use opencat::harness::fixtures;
use opencat::OpenFunctor;

fn opencat(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_opencat"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn write_doc(dir: &Path, name: &str, doc: &Document) -> String {
    let path = dir.join(name);
    std::fs::write(&path, serialize(doc)).unwrap();
    name.to_owned()
}

#[test]
fn validate_reports_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let of2 = write_doc(dir.path(), "of2.json", &Document::OpenFunctor(fixtures::of2()));
    let ok = opencat(&["validate", &of2], dir.path());
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok).trim(), "valid");

    let broken = opencat::FinCategory::builder()
        .object("a")
        .object("b")
        .arrow("f", "a", "b")
        .compose("f", "id_a", "id_a")
        .build();
    let broken = write_doc(dir.path(), "broken.json", &Document::Category(broken));
    let bad = opencat(&["validate", &broken], dir.path());
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("RightIdentity"));

    std::fs::write(dir.path().join("garbage.json"), "{ not json").unwrap();
    let garbage = opencat(&["validate", "garbage.json"], dir.path());
    assert_eq!(garbage.status.code(), Some(2));
}

#[test]
fn compose_then_validate_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let of2 = fixtures::of2();
    let of2_file = write_doc(dir.path(), "of2.json", &Document::OpenFunctor(of2.clone()));
    let id_file = write_doc(
        dir.path(),
        "id.json",
        &Document::OpenFunctor(OpenFunctor::identity(of2.cod())),
    );
    let composed = opencat(
        &["compose", &id_file, &of2_file, "-o", "out.json"],
        dir.path(),
    );
    assert_eq!(composed.status.code(), Some(0), "{composed:?}");
    let check = opencat(&["validate", "out.json"], dir.path());
    assert_eq!(check.status.code(), Some(0));
    let text = std::fs::read_to_string(dir.path().join("out.json")).unwrap();
    let Document::OpenFunctor(result) = parse(&text).unwrap() else {
        panic!("composite should be an open functor");
    };
    assert_eq!(result, opencat::compose_open(&OpenFunctor::identity(of2.cod()), &of2).unwrap());

    // A classical functor document lifts to the same composite.
    let lifted = write_doc(
        dir.path(),
        "lifted.json",
        &Document::Functor(opencat::FinFunctor::identity(of2.cod())),
    );
    let via_lift = opencat(
        &["compose", &lifted, &of2_file, "-o", "out2.json"],
        dir.path(),
    );
    assert_eq!(via_lift.status.code(), Some(0));
    assert_eq!(
        std::fs::read_to_string(dir.path().join("out2.json")).unwrap(),
        text
    );

    // Mismatched boundaries exit with code 3.
    let dag_id = write_doc(
        dir.path(),
        "dag_id.json",
        &Document::OpenFunctor(OpenFunctor::identity(&fixtures::dag_path())),
    );
    let mismatch = opencat(&["compose", &dag_id, &of2_file], dir.path());
    assert_eq!(mismatch.status.code(), Some(3));
}

#[test]
fn apply_prints_the_result_object() {
    let dir = tempfile::tempdir().unwrap();
    let of2 = write_doc(dir.path(), "of2.json", &Document::OpenFunctor(fixtures::of2()));
    let hit = opencat(
        &["apply", &of2, "--object", "b", "--element", "x2"],
        dir.path(),
    );
    assert_eq!(hit.status.code(), Some(0));
    assert_eq!(stdout(&hit).trim(), "a");

    let miss = opencat(
        &["apply", &of2, "--object", "b", "--element", "x0"],
        dir.path(),
    );
    assert_eq!(miss.status.code(), Some(1));

    let bad_token = opencat(
        &["apply", &of2, "--object", "b", "--element", "<x1"],
        dir.path(),
    );
    assert_eq!(bad_token.status.code(), Some(2));
}

#[test]
fn apply_accepts_pair_tokens_on_composites() {
    let dir = tempfile::tempdir().unwrap();
    let of2 = fixtures::of2();
    let composed = opencat::compose_open(&OpenFunctor::identity(of2.cod()), &of2).unwrap();
    let file = write_doc(dir.path(), "composed.json", &Document::OpenFunctor(composed));
    let hit = opencat(
        &["apply", &file, "--object", "b", "--element", "<x2,*>"],
        dir.path(),
    );
    assert_eq!(hit.status.code(), Some(0), "{hit:?}");
    assert_eq!(stdout(&hit).trim(), "a");
}

#[test]
fn gen_emits_parseable_valid_documents() {
    let dir = tempfile::tempdir().unwrap();
    for kind in [
        "category",
        "presheaf",
        "functor",
        "open_functor",
        "open_nat_trans",
    ] {
        let out = opencat(&["gen", "--kind", kind, "--seed", "5"], dir.path());
        assert_eq!(out.status.code(), Some(0), "gen {kind}");
        let doc = parse(&stdout(&out)).unwrap();
        assert_eq!(doc.kind(), kind);
        std::fs::write(dir.path().join("gen.json"), stdout(&out)).unwrap();
        let check = opencat(&["validate", "gen.json"], dir.path());
        assert_eq!(check.status.code(), Some(0), "generated {kind} invalid");
    }
    let unknown = opencat(&["gen", "--kind", "poset"], dir.path());
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn laws_subcommand_reports_tallies() {
    let dir = tempfile::tempdir().unwrap();
    let out = opencat(
        &["laws", "--seed", "7", "--count", "5", "--law", "pentagon"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "pentagon: 5/5 hold\n");

    let unknown = opencat(&["laws", "--law", "dodecagon"], dir.path());
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn fiber_guard_env_override() {
    let dir = tempfile::tempdir().unwrap();
    let bad = Command::new(env!("CARGO_BIN_EXE_opencat"))
        .args(["laws", "--count", "1", "--law", "triangle"])
        .env("OPENCAT_MAX_FIBER", "lots")
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));

    let generous = Command::new(env!("CARGO_BIN_EXE_opencat"))
        .args(["laws", "--count", "2", "--law", "triangle"])
        .env("OPENCAT_MAX_FIBER", "4096")
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert_eq!(generous.status.code(), Some(0));
}
