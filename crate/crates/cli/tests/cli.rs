use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture_config() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures/pipeline/conceptmap.toml")
}

fn conceptmap(out: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conceptmap"))
        .arg("--config")
        .arg(fixture_config())
        .arg("--output")
        .arg(out)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn stage_by_stage_run_finds_loops() {
    let dir = tempfile::tempdir().unwrap();
    for stage in ["ingest", "discover", "profile", "annotate", "index"] {
        let o = conceptmap(dir.path(), &[stage]);
        assert!(o.status.success(), "{stage}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(stdout(&o).starts_with(&format!("{stage}: ")));
    }
    let o = conceptmap(dir.path(), &["search", "loop"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(!text.is_empty());
    for line in text.lines() {
        let mut parts = line.splitn(3, ':');
        let path = parts.next().unwrap();
        assert!(path.ends_with(".java"), "{line}");
        assert!(parts.next().unwrap().parse::<u32>().is_ok(), "{line}");
    }
    assert!(text.contains("for (;;) { // @concepts: loop"));

    let o = conceptmap(dir.path(), &["eval", "-k", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("entity\tp@4\ttop pattern\n"));
    assert!(dir.path().join("eval.tsv").is_file());
}

#[test]
fn search_before_index_is_a_user_error() {
    let dir = tempfile::tempdir().unwrap();
    let o = conceptmap(dir.path(), &["search", "loop"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing artifact"));
}

#[test]
fn dry_run_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    let o = conceptmap(&out, &["--dry-run", "run"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("write "));
    assert!(!out.exists());
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn changed_config_makes_downstream_stale() {
    let dir = tempfile::tempdir().unwrap();
    assert!(conceptmap(dir.path(), &["run"]).status.success());
    let o = conceptmap(dir.path(), &["--set", "top_k=5", "annotate"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("stale artifact"));
    assert!(conceptmap(dir.path(), &["--force", "--set", "top_k=5", "annotate"])
        .status
        .success());

    let status = stdout(&conceptmap(dir.path(), &["status"]));
    let states: Vec<&str> = status.lines().map(|l| l.split_whitespace().last().unwrap()).collect();
    // only annotate was rebuilt under top_k=5; status runs with the file's top_k
    assert_eq!(states, ["current", "current", "current", "stale", "current"]);
}

#[test]
fn rerun_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    assert!(conceptmap(dir.path(), &["run"]).status.success());
    let before = fs::read(dir.path().join("index.jsonl")).unwrap();
    let profiles = fs::read(dir.path().join("profiles.jsonl")).unwrap();
    assert!(conceptmap(dir.path(), &["run"]).status.success());
    assert_eq!(fs::read(dir.path().join("index.jsonl")).unwrap(), before);
    assert_eq!(fs::read(dir.path().join("profiles.jsonl")).unwrap(), profiles);
}

#[test]
fn bad_input_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        conceptmap(dir.path(), &["--set", "colour=red", "run"]).status.code(),
        Some(1)
    );
    assert_eq!(
        conceptmap(dir.path(), &["--set", "novalue", "run"]).status.code(),
        Some(1)
    );
    assert_eq!(conceptmap(dir.path(), &["frobnicate"]).status.code(), Some(1));

    // a corpus file with no post rows is a data error
    let bad = dir.path().join("bad.xml");
    fs::write(&bad, "<posts>\n<item Id=\"1\" />\n</posts>\n").unwrap();
    let corpus = format!("corpus=[{:?}]", bad.display().to_string());
    let o = conceptmap(&dir.path().join("out"), &["--set", &corpus, "ingest"]);
    assert_eq!(o.status.code(), Some(2), "{}", String::from_utf8_lossy(&o.stderr));
}
