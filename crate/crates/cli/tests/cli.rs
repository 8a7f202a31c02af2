use std::path::Path;
use std::process::{Command, Output};

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_poset-codes"))
        .args(args)
        .current_dir(dir)
        .env_remove("POSET_CODES_MAX_ENUM")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_n2(dir: &Path) {
    let o = run(dir, &["construct", "--family", "n2", "--q", "2", "--r", "2", "--k1", "1", "--k2", "1", "--out", "c.txt"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("# wrote: c.txt"));
}

#[test]
fn points_csv_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    write_n2(dir.path());
    let o = run(dir.path(), &["points", "c.txt", "--out", "p.csv"]);
    assert_eq!(o.status.code(), Some(0));
    let csv = std::fs::read_to_string(dir.path().join("p.csv")).unwrap();
    assert_eq!(csv.lines().count(), 5);
    assert_eq!(csv.lines().next(), Some("x1,x2"));
    assert!(csv.contains("1/4 0.250000000000,1/4 0.250000000000"));
}

#[test]
fn tiling_by_size_and_characterization() {
    let dir = tempfile::tempdir().unwrap();
    write_n2(dir.path());
    for (size, expect) in [("3", "every ideal gives a perfect tiling"), ("2", "some ideal gives a tiling"), ("1", "no ideal gives a tiling")] {
        let o = run(dir.path(), &["tiling", "c.txt", "--ideal-size", size]);
        assert_eq!(o.status.code(), Some(0), "size {size}");
        let text = stdout(&o);
        assert!(text.contains(expect), "{text}");
        assert!(text.contains("# result: pass"), "{text}");
    }
    let o = run(dir.path(), &["tiling", "c.txt"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("# part2: pass"));
}

#[test]
fn mds_code_fails_nmds_checks() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("mds.txt"), "q=2\nposet=ordered n=2 r=2\nG=\n1001\n0110\n").unwrap();
    let o = run(dir.path(), &["verify-distribution", "mds.txt"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("# part2: fail"));
    let o = run(dir.path(), &["tiling", "mds.txt"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(dir.path(), &["weightdist", "mds.txt", "--method", "analytic"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    let o = run(dir.path(), &["weightdist", "mds.txt", "--method", "brute", "--format", "tsv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("s\tA_s\n0\t1\n"));
}

#[test]
fn general_poset_from_file() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("p.txt"), "n=4\n1 < 2\n1 < 3\n").unwrap();
    std::fs::write(dir.path().join("c.txt"), "q=3\nposet=file:p.txt\nG=\n1021\n0112\n").unwrap();
    let o = run(dir.path(), &["analyze", "c.txt"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("# poset: general (4 elements, 2 covers)"));
    let o = run(dir.path(), &["points", "c.txt"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn env_bound_and_seeded_construction() {
    let dir = tempfile::tempdir().unwrap();
    let a = run(dir.path(), &["construct", "--family", "n1", "--q", "5", "--r", "5", "--k", "3", "--seed", "4"]);
    let b = run(dir.path(), &["construct", "--family", "n1", "--q", "5", "--r", "5", "--k", "3", "--seed", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    std::fs::write(dir.path().join("c.txt"), &a.stdout).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_poset-codes"))
        .args(["weightdist", "c.txt"])
        .current_dir(dir.path())
        .env("POSET_CODES_MAX_ENUM", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("bound is 4"));
}
