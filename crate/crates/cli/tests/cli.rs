//! End-to-end runs of the `hexpath` binary.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use tempfile::TempDir;

fn hexpath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hexpath")).args(args).env_remove("HEXPATH_WORKERS").output().unwrap()
}

fn hexpath_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hexpath"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn path_file(dir: &Path, name: &str, n: u32, stones: &[(i32, i32)]) -> PathBuf {
    let mut text = format!("hexpath 1\nsize {n}\n");
    for (x, y) in stones {
        text.push_str(&format!("{x} {y}\n"));
    }
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

const FIG1C: [(i32, i32); 15] = [
    (1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (5, 2), (4, 3), (3, 3),
    (2, 3), (1, 4), (1, 5), (2, 5), (3, 5), (4, 5), (5, 5),
];

const WORKED: [(i32, i32); 46] = [
    (10, 1), (10, 2), (10, 3), (10, 4), (10, 5), (10, 6), (10, 7), (10, 8), (9, 9), (8, 9),
    (7, 9), (6, 9), (5, 9), (4, 9), (3, 9), (3, 8), (3, 7), (3, 6), (3, 5), (4, 4), (5, 4),
    (6, 4), (6, 5), (5, 6), (5, 7), (6, 7), (7, 7), (8, 6), (8, 5), (8, 4), (8, 3), (8, 2),
    (7, 2), (6, 2), (5, 2), (4, 2), (3, 2), (2, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7),
    (1, 8), (1, 9), (1, 10),
];

/// An optimal 10x10 path whose ends are not both corners.
const OFF_CORNER: [(i32, i32); 47] = [
    (5, 1), (1, 3), (2, 2), (3, 2), (1, 4), (5, 2), (6, 2), (7, 2), (8, 2), (9, 2),
    (10, 2), (10, 3), (3, 3), (3, 4), (4, 4), (6, 4), (7, 4), (8, 4), (10, 4), (1, 5),
    (4, 5), (5, 5), (8, 5), (10, 5), (1, 6), (2, 6), (6, 6), (7, 6), (9, 6), (2, 7),
    (4, 7), (5, 7), (9, 7), (10, 7), (1, 8), (3, 8), (6, 8), (7, 8), (10, 8), (1, 9),
    (3, 9), (4, 9), (5, 9), (7, 9), (8, 9), (9, 9), (1, 10),
];

#[test]
fn bound_prints_value_and_rule() {
    let o = hexpath(&["bound", "9"]);
    assert_eq!((code(&o), stdout(&o)), (0, "38 (Thm 3b)\n".to_string()));
    let o = hexpath(&["bound", "11"]);
    assert_eq!(stdout(&o), "57 (Thm 3d)\n");
    let o = hexpath(&["bound", "4"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("N/A"));
}

#[test]
fn length_reads_the_census_and_the_bound() {
    assert_eq!(stdout(&hexpath(&["length", "17"])), "140\n");
    assert_eq!(stdout(&hexpath(&["length", "25"])), "306\n");
    assert_eq!(code(&hexpath(&["length", "0"])), 2);
}

#[test]
fn table_text_and_csv() {
    let text = stdout(&hexpath(&["table", "--max", "10"]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 11);
    assert!(lines[4].contains("N/A"));
    assert!(lines[9].split_whitespace().eq(["9", "37", "38", "5568"]));
    let csv = stdout(&hexpath(&["table", "--csv"]));
    assert_eq!(csv.lines().next(), Some("n,length,bound,count"));
    assert_eq!(csv.lines().nth(19), Some("19,175,175,16631833"));
    assert_eq!(csv.lines().nth(4), Some("4,8,,4"));
}

#[test]
fn search_counts() {
    let o = hexpath(&["search", "5", "--count"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("length=11 count=23 proven=true\nnodes="));
    let o = hexpath(&["search", "8", "--count"]);
    assert!(stdout(&o).starts_with("length=30 count=115 proven=true\n"));
}

#[test]
fn search_find_one_emits_a_verifiable_path() {
    let o = hexpath(&["search", "6"]);
    let out = stdout(&o);
    assert!(out.starts_with("length=16 proven=true\n"));
    let file = &out[out.find("hexpath 1").unwrap()..];
    let v = hexpath_stdin(&["verify", "-"], file);
    assert_eq!(code(&v), 0);
    assert!(stdout(&v).contains("minimal=true\nk=16\n"));
}

#[test]
fn search_with_explicit_target_is_not_proven() {
    let o = hexpath(&["search", "6", "--count", "--target", "15"]);
    assert!(stdout(&o).starts_with("length=15 "));
    assert!(stdout(&o).contains("proven=false"));
    assert_eq!(code(&hexpath(&["search", "6", "--target", "99"])), 2);
}

#[test]
fn search_resource_limits() {
    let o = hexpath(&["search", "12"]);
    assert_eq!(code(&o), 3);
    let o = hexpath(&["search", "8", "--count", "--node-limit", "100"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("nodes_expanded="));
}

#[test]
fn search_enumerates_into_a_directory() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("paths");
    let o = hexpath(&["search", "2", "--enumerate", arg(&out)]);
    assert_eq!(code(&o), 0);
    let mut names: Vec<String> = fs::read_dir(&out).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    names.sort();
    assert_eq!(names.len(), 4);
    let manifest = fs::read_to_string(out.join("MANIFEST")).unwrap();
    assert!(manifest.starts_with("hexpath-manifest 1\nsize 2\nlength 2\ncount 3\nproven true\n"));
    for name in names.iter().filter(|n| n.ends_with(".path")) {
        assert!(manifest.contains(name.as_str()));
        assert_eq!(code(&hexpath(&["verify", arg(&out.join(name))])), 0);
    }
}

#[test]
fn search_output_is_independent_of_workers() {
    let run = |w: &str| {
        Command::new(env!("CARGO_BIN_EXE_hexpath"))
            .args(["search", "7", "--count"])
            .env("HEXPATH_WORKERS", w)
            .output()
            .unwrap()
            .stdout
    };
    let one = run("1");
    assert_eq!(run("2"), one);
    assert_eq!(run("8"), one);
}

#[test]
fn verify_reports_removable_stones() {
    let dir = TempDir::new().unwrap();
    let p = path_file(dir.path(), "c.path", 5, &FIG1C);
    let o = hexpath(&["verify", arg(&p)]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.starts_with("winning=true\nminimal=false\nk=15\n"));
    assert!(out.contains("reason=removable stone ("));
    let p = path_file(dir.path(), "gap.path", 5, &[(3, 1), (3, 2), (3, 4), (2, 5)]);
    let o = hexpath(&["verify", arg(&p)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("reason=not winning"));
}

#[test]
fn verify_accepts_witnesses_and_off_corner_paths() {
    let w = stdout(&hexpath(&["witness", "10"]));
    let o = hexpath_stdin(&["verify", "-"], &w);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("minimal=true\nk=47\n"));
    assert!(stdout(&o).contains("eq1=true"));
    let dir = TempDir::new().unwrap();
    let p = path_file(dir.path(), "r.path", 10, &OFF_CORNER);
    let o = hexpath(&["verify", arg(&p)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("k=47\n"));
}

#[test]
fn waste_accounts_for_the_worked_example() {
    let dir = TempDir::new().unwrap();
    let p = path_file(dir.path(), "w.path", 10, &WORKED);
    let a = stdout(&hexpath(&["waste", arg(&p), "--region", "A"]));
    assert!(a.starts_with("region=A\n"));
    assert!(a.contains("b=4\n"));
    assert!(a.contains("e=9\nt_down-t_up=5\neq2=true\n"));
    let all = stdout(&hexpath(&["waste", arg(&p)]));
    assert!(all.starts_with("region=all\nt=18\n"));
    assert!(all.contains("region=B\n"));
    let c = path_file(dir.path(), "c.path", 5, &FIG1C);
    let o = hexpath(&["waste", arg(&c)]);
    assert_eq!((code(&o), stdout(&o)), (1, "minimal=false\n".to_string()));
}

#[test]
fn witness_extend_and_generate() {
    let o = hexpath(&["witness", "3"]);
    assert_eq!(stdout(&o), "hexpath 1\nsize 3\n1 1\n1 2\n2 2\n3 2\n3 3\n");
    assert_eq!(code(&hexpath(&["witness", "21"])), 1);
    let w6 = stdout(&hexpath(&["witness", "6"]));
    let e = hexpath_stdin(&["extend", "-"], &w6);
    assert_eq!(code(&e), 0);
    let text = stdout(&e);
    assert!(text.starts_with("hexpath 1\nsize 14\n"));
    assert_eq!(text.lines().count() - 2, 94);
    let g = hexpath(&["generate", "28"]);
    assert_eq!(code(&g), 0);
    assert_eq!(stdout(&g).lines().count() - 2, 385);
    let log = String::from_utf8(g.stderr).unwrap();
    assert!(log.starts_with("base n=20 length=195\n"));
    assert!(log.ends_with("-> n=28 length=385\n"));
    assert_eq!(code(&hexpath(&["generate", "12"])), 1);
}

#[test]
fn render_ascii_and_svg() {
    let w1 = stdout(&hexpath(&["witness", "1"]));
    assert_eq!(stdout(&hexpath_stdin(&["render", "-"], &w1)), "●\n");
    let w5 = stdout(&hexpath(&["witness", "5"]));
    let svg = stdout(&hexpath_stdin(&["render", "-", "--format", "svg"], &w5));
    assert!(svg.starts_with("<?xml"));
    assert!(svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("class=\"cell\"").count(), 25);
    assert_eq!(svg.matches("<circle").count(), 11);
    assert_eq!(svg.matches('<').count(), svg.matches('>').count());
    let dir = TempDir::new().unwrap();
    let p = path_file(dir.path(), "w.path", 10, &WORKED);
    let shaded = stdout(&hexpath(&["render", arg(&p), "--format", "svg", "--waste"]));
    assert_eq!(shaded.matches("class=\"waste\"").count(), 18);
    let text = stdout(&hexpath(&["render", arg(&p), "--waste", "--extension"]));
    assert!(text.ends_with("wasted triangles: 18\n"));
    assert!(text.starts_with("○ "));
}

#[test]
fn malformed_input_exits_two() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.path");
    fs::write(&bad, "hexpath 1\nsize 3\n1 9\n").unwrap();
    assert_eq!(code(&hexpath(&["verify", arg(&bad)])), 2);
    fs::write(&bad, "not a path file\n").unwrap();
    assert_eq!(code(&hexpath(&["verify", arg(&bad)])), 2);
    assert_eq!(code(&hexpath(&["verify", arg(&dir.path().join("missing.path"))])), 2);
    assert_eq!(code(&hexpath(&["bound", "x"])), 2);
}
