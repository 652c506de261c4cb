use std::path::Path;
use std::process::{Command, Output};

use hctree_cli::files::{ColoringFile, TreeFile};

fn hctree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hctree")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = path(dir, name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn gen_analyze_color_verify() {
    let dir = tempfile::tempdir().unwrap();
    let tree = path(dir.path(), "f.json");
    assert_eq!(
        code(&hctree(&[
            "gen",
            "--family",
            "firecracker",
            "--m",
            "3",
            "--k",
            "4",
            "-o",
            &tree
        ])),
        0
    );

    let out = hctree(&["analyze", &tree]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("n: 12\n"), "{text}");
    assert!(text.contains("total_level: 23\n"));
    assert!(text.contains("lower_bound: 76\n"));

    let coloring = path(dir.path(), "c.json");
    assert_eq!(code(&hctree(&["color", &tree, "-o", &coloring])), 0);
    let file: ColoringFile = serde_json::from_str(&std::fs::read_to_string(&coloring).unwrap()).unwrap();
    assert_eq!(file.span, 76);
    assert_eq!(file.optimal, Some(true));
    assert_eq!(code(&hctree(&["verify", &tree, &coloring])), 0);

    let canonical = hctree(&["color", &tree, "--order", "canonical"]);
    assert_eq!(code(&canonical), 0);
    let file: ColoringFile = serde_json::from_str(&stdout(&canonical)).unwrap();
    assert_eq!(file.span, 76);
}

#[test]
fn verify_rejects_bad_colorings() {
    let dir = tempfile::tempdir().unwrap();
    let star = write(
        dir.path(),
        "s.json",
        r#"{"version":1,"n":4,"edges":[[0,1],[0,2],[0,3]]}"#,
    );
    let good = write(
        dir.path(),
        "g.json",
        r#"{"version":1,"colors":[[0,0],[1,2],[2,3],[3,4]],"span":4}"#,
    );
    let clash = write(
        dir.path(),
        "b.json",
        r#"{"version":1,"colors":[[0,0],[1,2],[2,2],[3,4]],"span":4}"#,
    );
    let wrong_span = write(
        dir.path(),
        "w.json",
        r#"{"version":1,"colors":[[0,0],[1,2],[2,3],[3,4]],"span":9}"#,
    );
    let missing = write(
        dir.path(),
        "m.json",
        r#"{"version":1,"colors":[[0,0],[1,2],[2,3]],"span":3}"#,
    );
    assert_eq!(code(&hctree(&["verify", &star, &good])), 0);
    let out = hctree(&["verify", &star, &clash]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).starts_with("invalid: 1 violating pairs"));
    assert_eq!(code(&hctree(&["verify", &star, &wrong_span])), 2);
    assert_eq!(code(&hctree(&["verify", &star, &missing])), 2);
    assert_eq!(code(&hctree(&["verify", &star, "/nonexistent.json"])), 2);
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let cycle = write(
        dir.path(),
        "c.json",
        r#"{"version":1,"n":3,"edges":[[0,1],[1,2],[2,0]]}"#,
    );
    let garbage = write(dir.path(), "g.json", "not json");
    assert_eq!(code(&hctree(&["analyze", &cycle])), 2);
    assert_eq!(code(&hctree(&["analyze", &garbage])), 2);
    assert_eq!(
        code(&hctree(&["gen", "--family", "firecracker", "--m", "3", "--k", "3"])),
        2
    );
    assert_eq!(code(&hctree(&["gen", "--family", "random", "--n", "5"])), 2);
    assert_eq!(
        code(&hctree(&[
            "table",
            "--family",
            "firecracker",
            "--m",
            "3..3",
            "--k",
            "3..3"
        ])),
        2
    );
    assert_eq!(code(&hctree(&["table", "--family", "pathpendant", "--m", "8..3"])), 2);
    assert_eq!(code(&hctree(&["nonsense"])), 2);
}

#[test]
fn color_without_qualified_order_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    // two centers with sides of 4 and 3 vertices
    let t = write(
        dir.path(),
        "t.json",
        r#"{"version":1,"n":7,"edges":[[0,1],[0,2],[2,3],[0,4],[1,5],[5,6]]}"#,
    );
    let c = path(dir.path(), "c.json");
    assert_eq!(code(&hctree(&["color", &t, "-o", &c])), 3);
    assert_eq!(code(&hctree(&["verify", &t, &c])), 0);

    let path5 = write(
        dir.path(),
        "p.json",
        r#"{"version":1,"n":5,"edges":[[0,1],[1,2],[2,3],[3,4]]}"#,
    );
    let out = hctree(&["analyze", &path5]);
    assert!(stdout(&out).contains("lower_bound: n/a"));
    assert_eq!(code(&hctree(&["color", &path5, "-o", &c])), 3);
    assert_eq!(code(&hctree(&["verify", &path5, &c])), 0);
}

#[test]
fn color_with_order_file() {
    let dir = tempfile::tempdir().unwrap();
    let star = write(
        dir.path(),
        "s.json",
        r#"{"version":1,"n":4,"edges":[[0,1],[0,2],[0,3]]}"#,
    );
    let good = write(dir.path(), "o1.json", r#"{"order":[0,2,3,1]}"#);
    let bare = write(dir.path(), "o2.json", "[0, 3, 2, 1]");
    let bad = write(dir.path(), "o3.json", "[1, 2, 3, 0]");
    let dup = write(dir.path(), "o4.json", "[0, 0, 3, 1]");
    for order in [&good, &bare] {
        let out = hctree(&["color", &star, "--order", order]);
        assert_eq!(code(&out), 0);
        let file: ColoringFile = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(file.span, 4);
    }
    assert_eq!(code(&hctree(&["color", &star, "--order", &bad])), 3);
    assert_eq!(code(&hctree(&["color", &star, "--order", &dup])), 2);
}

#[test]
fn oracle_budget_exits_4() {
    let dir = tempfile::tempdir().unwrap();
    let tree = path(dir.path(), "t.json");
    assert_eq!(
        code(&hctree(&[
            "gen", "--family", "random", "--n", "10", "--seed", "1", "-o", &tree
        ])),
        0
    );
    assert_eq!(code(&hctree(&["oracle", &tree, "--node-limit", "5"])), 4);
    assert_eq!(code(&hctree(&["oracle", &tree, "--max-n", "8"])), 4);
    let w = path(dir.path(), "w.json");
    let out = hctree(&["oracle", &tree, "-o", &w]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("hc: "));
    assert_eq!(code(&hctree(&["verify", &tree, &w])), 0);
}

#[test]
fn table_examples() {
    let out = hctree(&["table", "--family", "pathpendant", "--m", "3..8"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r.ends_with(",yes")), "{text}");

    let out = hctree(&[
        "table",
        "--family",
        "symmetric",
        "--k",
        "2..3",
        "--d",
        "2..4",
        "--format",
        "markdown",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 2 + 6);
    assert!(text.lines().skip(2).all(|r| r.ends_with("| yes |")), "{text}");
}

#[test]
fn files_roundtrip() {
    let inst = hctree::families::gen_symmetric(2, 3).unwrap();
    let file = TreeFile::from_instance(&inst);
    let back: TreeFile = serde_json::from_str(&serde_json::to_string(&file).unwrap()).unwrap();
    assert_eq!(back, file);
    let loaded = back.into_tree().unwrap();
    assert_eq!(loaded.tree, inst.tree);
    assert_eq!(loaded.canonical_order().unwrap().unwrap(), inst.canonical_order);

    let coloring = hctree::coloring::coloring_from_order(&inst.tree, &inst.canonical_order).unwrap();
    let cf = ColoringFile::new(&coloring, Some(true), Some(12));
    let back: ColoringFile = serde_json::from_str(&serde_json::to_string(&cf).unwrap()).unwrap();
    assert_eq!(back, cf);
    assert_eq!(back.to_coloring(inst.tree.n()).unwrap(), coloring);
}
