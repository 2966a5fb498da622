use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn motif(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_motif")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write_config(dir: &Path, body: &str) -> String {
    let p = dir.join("run.cfg");
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

fn gen(dir: &Path, seed: &str, alpha: &str) -> String {
    let out = dir.join("data");
    let o = motif(&[
        "gen", "--n", "600", "--k", "20", "--motif-len", "20", "--alpha", alpha, "--seed", seed, "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    out.to_str().unwrap().to_string()
}

#[test]
fn gen_then_recover_finds_the_motif() {
    let dir = tempfile::tempdir().unwrap();
    let data = gen(dir.path(), "3", "0");
    let cfg = write_config(dir.path(), "epsilon = 0.01\nwindow_override = 12\n");
    let out = dir.path().join("rec");
    for algo in ["sublinear", "subquadratic", "deterministic"] {
        let o = motif(&[
            "recover", "--input", &format!("{data}/sequences.fa"), "--algo", algo, "--config", &cfg, "--seed", "1",
            "--out", out.to_str().unwrap(),
        ]);
        assert_eq!(code(&o), 0, "{algo}: {}", String::from_utf8_lossy(&o.stderr));
        let got = fs::read_to_string(out.join("consensus.fa")).unwrap();
        let want = fs::read_to_string(format!("{data}/motif.fa")).unwrap();
        assert_eq!(got.lines().nth(1), want.lines().nth(1), "{algo}");

        let truth = fs::read_to_string(format!("{data}/truth.tsv")).unwrap();
        let bounds = fs::read_to_string(out.join("boundaries.tsv")).unwrap();
        assert_eq!(bounds.lines().next(), Some("seq_id\tleft\tright"));
        for row in bounds.lines().skip(1) {
            let cols: Vec<&str> = row.split('\t').collect();
            let t = truth.lines().find(|l| l.starts_with(&format!("{}\t", cols[0]))).unwrap();
            let tc: Vec<&str> = t.split('\t').collect();
            assert_eq!(&cols[1..3], &tc[1..3], "{algo} {row}");
        }
    }
}

#[test]
fn recover_without_out_writes_fasta_and_tsv_to_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let data = gen(dir.path(), "3", "0");
    let cfg = write_config(dir.path(), "epsilon = 0.01\nwindow_override = 12\nalgorithm_type = deterministic\nseed = 1\n");
    let o = motif(&["recover", "--input", &format!("{data}/sequences.fa"), "--config", &cfg]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with(">consensus\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("seq") && !l.starts_with("seq_id")).count(), 10);
}

#[test]
fn recovery_failure_exits_with_one() {
    let dir = tempfile::tempdir().unwrap();
    // no planted motif: twelve unrelated random sequences
    let mut fa = String::new();
    let mut x: u64 = 12345;
    for i in 0..12 {
        fa.push_str(&format!(">r{i}\n"));
        for _ in 0..300 {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            fa.push(b"ACGT"[(x >> 62) as usize] as char);
        }
        fa.push('\n');
    }
    let input = dir.path().join("noise.fa");
    fs::write(&input, fa).unwrap();
    let cfg = write_config(dir.path(), "epsilon = 0.01\nwindow_override = 16\n");
    let o = motif(&["recover", "--input", input.to_str().unwrap(), "--algo", "deterministic", "--config", &cfg]);
    assert_eq!(code(&o), 1, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(String::from_utf8_lossy(&o.stderr).contains("recovery failed"));
}

#[test]
fn usage_and_parse_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&motif(&["frobnicate"])), 2);
    assert_eq!(code(&motif(&["recover", "--algo", "fastest", "--input", "x.fa"])), 2);

    let bad = dir.path().join("bad.fa");
    fs::write(&bad, ">ok\nACGT\n>broken\nACNT\n").unwrap();
    let o = motif(&["recover", "--input", bad.to_str().unwrap(), "--algo", "sublinear"]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("broken") && err.contains("offset"), "{err}");

    let cfg = write_config(dir.path(), "epsilon = 0.01\nwindw = 3\n");
    let data = gen(dir.path(), "1", "0");
    let o = motif(&["recover", "--input", &format!("{data}/sequences.fa"), "--algo", "sublinear", "--config", &cfg]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains(":2"));

    let o = motif(&["recover", "--input", &format!("{data}/sequences.fa")]);
    assert_eq!(code(&o), 2);
}

#[test]
fn gen_is_reproducible_and_honours_psi() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let da = gen(a.path(), "9", "0.1");
    let db = gen(b.path(), "9", "0.1");
    for f in ["sequences.fa", "truth.tsv", "motif.fa"] {
        assert_eq!(fs::read(format!("{da}/{f}")).unwrap(), fs::read(format!("{db}/{f}")).unwrap(), "{f}");
    }
    let fa = fs::read_to_string(format!("{da}/sequences.fa")).unwrap();
    assert!(fa.lines().all(|l| l.len() <= 70));

    let out = a.path().join("psi");
    let o = motif(&["gen", "--n", "100", "--k", "5", "--motif-len", "10", "--psi", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let truth = fs::read_to_string(out.join("truth.tsv")).unwrap();
    for row in truth.lines().skip(1) {
        assert_eq!(row.split('\t').nth(3).unwrap().split(',').count(), 2);
    }
}

#[test]
fn accuracy_report_is_byte_reproducible_and_appends() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "epsilon = 0.01\nwindow_override = 12\n");
    let run = |path: &Path| {
        let o = motif(&[
            "bench", "accuracy", "--trials", "4", "--motif-len", "20", "--alpha", "0", "--algo", "deterministic",
            "--config", &cfg, "--seed", "5", "--out", path.to_str().unwrap(),
        ]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
        stdout(&o)
    };
    let (p1, p2) = (dir.path().join("a.tsv"), dir.path().join("b.tsv"));
    let summary = run(&p1);
    assert!(summary.contains("accuracy=100.0%"), "{summary}");
    run(&p2);
    assert_eq!(fs::read(&p1).unwrap(), fs::read(&p2).unwrap());
    run(&p1);
    let text = fs::read_to_string(&p1).unwrap();
    assert_eq!(text.lines().count(), 1 + 8);
    assert_eq!(text.lines().filter(|l| l.starts_with("seed\t")).count(), 1);
    assert!(text.lines().skip(1).all(|l| l.ends_with("\tNA")));
}

#[test]
fn scaling_prints_slopes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.tsv");
    let o = motif(&["bench", "scaling", "--ns", "512,1024", "--seeds", "1", "--algos", "deterministic", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("# slope\tdeterministic\t"));
    assert_eq!(fs::read_to_string(&out).unwrap().lines().count(), 3);
}

#[test]
fn oracle_reports_exact_consensus() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("z.fa");
    fs::write(&input, ">a\nTTACGTTT\n>b\nGACGTGGG\n>c\nACGTCCCC\n").unwrap();
    let out = dir.path().join("c.fa");
    let o = motif(&["oracle", "--input", input.to_str().unwrap(), "--motif-len", "4", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(fs::read_to_string(&out).unwrap(), ">consensus\nACGT\n");
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("EXACT cost=0 offsets=3,2,1"), "{err}");
    let o = motif(&["oracle", "--input", input.to_str().unwrap(), "--motif-len", "9"]);
    assert_eq!(code(&o), 2);
}
