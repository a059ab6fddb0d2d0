use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn pda(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pda")).args(args).output().unwrap()
}

fn pda_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pda"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, body: &[u8]) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("pda-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn constructions_pipe_into_verify() {
    for (f, k, z) in [
        (4, 6, 2),
        (5, 10, 3),
        (6, 4, 3),
        (7, 7, 2),
        (12, 4, 3),
        (8, 12, 6),
        (5, 7, 2),
        (3, 3, 3),
    ] {
        let built = pda(&["construct", &f.to_string(), &k.to_string(), &z.to_string()]);
        assert_eq!(built.status.code(), Some(0), "({f},{k},{z})");
        let checked = pda_stdin(&["verify", "-"], &built.stdout);
        assert_eq!(checked.status.code(), Some(0), "({f},{k},{z}): {}", stdout(&checked));
    }
}

#[test]
fn construct_named_and_provenance_line() {
    let o = pda(&["construct", "4", "6", "2", "--method", "fixed:e.2"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("# method=fixed:e.2 s=4 optimality=lower-bound-matched")
    );
    assert_eq!(lines.next(), Some("PDA 4 6 2 4"));
    assert_eq!(
        pda(&["construct", "4", "6", "2", "--method", "no-such"]).status.code(),
        Some(2)
    );
    assert_eq!(pda(&["construct", "3", "3", "9"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let bad = scratch("crossing.pda", b"PDA 2 2 0 3\n1 2\n3 1\n");
    let o = pda(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("condition 4"));
    assert!(stdout(&o).contains("(1,2)"));
    let junk = scratch("junk.pda", b"hello\n");
    assert_eq!(pda(&["verify", junk.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(pda(&["verify", "/nonexistent/file.pda"]).status.code(), Some(2));
}

#[test]
fn bound_examples() {
    let out = stdout(&pda(&["bound", "5", "7", "3"]));
    assert!(out.contains("basic\t4\n") && out.contains("known\t5\t"));
    let out = stdout(&pda(&["bound", "4", "6", "2"]));
    assert!(out.contains("basic\t4\n") && out.contains("nested\t4\n") && out.contains("known\t4\t"));
    let out = stdout(&pda(&["bound", "10", "4", "3"]));
    assert!(out.contains("known\t14\t"));
    let out = stdout(&pda(&["bound", "20", "4", "3"]));
    assert!(out.contains("full-rows\t"));
}

#[test]
fn solve_examples() {
    let o = pda(&["solve", "4", "3", "2", "--budget", "threads=1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("s_min: 3\n"));
    let o = pda(&["solve", "3", "3", "2"]);
    assert!(stdout(&o).contains("s_min: 1\n"));
    let o = pda(&["solve", "6", "6", "2", "--budget", "nodes=10,time=5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("status: timeout"));
    assert_eq!(
        pda(&["solve", "4", "3", "2", "--budget", "nodes=x"]).status.code(),
        Some(2)
    );
}

#[test]
fn simulate_runs() {
    let demo = scratch("demo.pda", b"PDA 2 2 1 1\n1 -\n- 1\n");
    let o = pda(&["simulate", demo.to_str().unwrap(), "2", "--demands", "0,1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("node 0 pass\nnode 1 pass\n"));
    assert!(text.contains("broadcasts 1 rate 1/2"));

    let full = scratch("full.pda", b"PDA 2 3 2 0\n- - -\n- - -\n");
    let o = pda(&["simulate", full.to_str().unwrap(), "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("broadcasts 0 "));

    let broken = scratch("broken.pda", b"PDA 2 2 1 1\n1 -\n");
    assert_eq!(pda(&["simulate", broken.to_str().unwrap(), "2"]).status.code(), Some(2));
}

#[test]
fn seed_from_environment() {
    let demo = scratch("seeded.pda", b"PDA 2 2 1 1\n1 -\n- 1\n");
    let o = Command::new(env!("CARGO_BIN_EXE_pda"))
        .args(["simulate", demo.to_str().unwrap(), "2"])
        .env("PDA_SEED", "77")
        .output()
        .unwrap();
    assert!(stdout(&o).contains("seed 77\n"));
    let o = pda(&["simulate", demo.to_str().unwrap(), "2", "--seed", "5"]);
    assert!(stdout(&o).contains("seed 5\n"));
}

#[test]
fn tables_match_golden_files() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let list = stdout(&pda(&["table", "list"]));
    for family in list.lines() {
        let want = std::fs::read_to_string(dir.join(format!("{family}.tsv"))).unwrap();
        assert_eq!(stdout(&pda(&["table", family])), want, "{family}");
    }
    let want = std::fs::read_to_string(dir.join("all.tsv")).unwrap();
    assert_eq!(stdout(&pda(&["table"])), want);
}

#[test]
fn table_values() {
    let col = |family: &str| -> Vec<String> {
        stdout(&pda(&["table", family]))
            .lines()
            .skip(1)
            .map(|l| l.split('\t').nth(4).unwrap().to_owned())
            .collect()
    };
    assert_eq!(col("s66"), ["15", "11", "6", "3", "1"]);
    assert_eq!(col("s77")[2..5], ["10", "6", "4"]);
    assert_eq!(col("f4k3")[..9], ["1", "3", "4", "7..8", "10", "12", "14", "17", "18"]);
}

#[test]
fn adjudicate_conflict() {
    let o = pda(&["adjudicate", "5", "7", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("solver: exact 9\n"));
    assert!(text.contains("5k2-small\t10\tdisagrees\n"));
    let o = pda(&["adjudicate", "7", "7", "2", "--budget", "nodes=5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("inconclusive"));
}
