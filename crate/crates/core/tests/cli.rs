use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn seating(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seating")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn entropy_of_final_arrangement() {
    let o = seating(&["entropy", "--scenario", data("fig1_final.scenario").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "231\n");
}

#[test]
fn replay_prints_real_rows() {
    let o = seating(&["replay", "--scenario", data("fig1.scenario").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("step,label,mean,std,min,max\n0,real,12,0,12,12\n"));
    assert!(text.ends_with("17,real,231,0,231,231\n"));
}

#[test]
fn simulate_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let sc = data("fig1.scenario");
    let run = |name: &str| {
        let out = dir.path().join(name);
        let o = seating(&[
            "simulate", "--scenario", sc.to_str().unwrap(), "--policy", "all", "--runs", "1", "--seed", "7",
            "--out", out.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        std::fs::read(out).unwrap()
    };
    let a = run("a.csv");
    assert_eq!(a, run("b.csv"));
    let text = String::from_utf8(a).unwrap();
    let labels: Vec<_> = text.lines().skip(1).take(6).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(labels, ["random", "max", "space", "simple", "center", "real"]);
    assert_eq!(text.lines().count(), 1 + 18 * 6);
}

#[test]
fn simulate_single_policy_to_stdout() {
    let o = seating(&[
        "simulate", "--scenario", data("fig1.scenario").to_str().unwrap(), "--policy", "max", "--runs", "5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().nth(1).unwrap().starts_with("0,max,12,0,12,12"));
}

#[test]
fn analyze_histograms() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("choices.txt");
    std::fs::write(
        &path,
        "groups 2\nrows 3\ncols 5\ngrid\n#....\n.....\n....#\nchosen 2,3\n\ngroups 1\nrows 1\ncols 4\ngrid\n##..\nchosen 1,4\n",
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let o = seating(&["analyze", "--choices", p, "--metric", "nearest"]);
    assert_eq!(stdout(&o), "distance,count\n2,1\n3,1\n");
    let o = seating(&["analyze", "--choices", p, "--metric", "center"]);
    assert_eq!(stdout(&o), "distance,count\n0,1\n");
    let o = seating(&["analyze", "--choices", p, "--metric", "center", "--min-groups", "3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.txt");
    std::fs::write(&empty, "").unwrap();
    let o = seating(&["analyze", "--choices", empty.to_str().unwrap(), "--metric", "nearest"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no choice records"));

    let bad = dir.path().join("bad.scenario");
    std::fs::write(&bad, "rows 1\ncols 2\ngrid\n.x\narrivals\n").unwrap();
    let o = seating(&["entropy", "--scenario", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4, column 2"));

    let full = dir.path().join("full.scenario");
    std::fs::write(&full, "rows 1\ncols 2\ngrid\n#.\narrivals\n2\n").unwrap();
    let o = seating(&["simulate", "--scenario", full.to_str().unwrap(), "--policy", "random", "--runs", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("step 1"));

    assert_eq!(seating(&[]).status.code(), Some(2));
    assert_eq!(seating(&["simulate", "--policy", "nope"]).status.code(), Some(2));
    assert_eq!(seating(&["entropy"]).status.code(), Some(2));
    let o = seating(&["simulate", "--scenario", full.to_str().unwrap(), "--policy", "max", "--runs", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(seating(&["--help"]).status.code(), Some(0));
}
