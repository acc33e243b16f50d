use std::io::Write;
use std::process::{Command, Output, Stdio};

const WORKED: &str = "n 4\ne 1 2 3\ne 1 2 4\ne 1 3 4\n";

fn zforce(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_zforce"))
        .args(args)
        .env_remove("ZF_SEARCH_BOUND")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn zforce");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn section(text: &str, title: &str) -> Vec<String> {
    text.lines()
        .skip_while(|l| *l != format!("{title}:"))
        .skip(1)
        .take_while(|l| !l.ends_with(':'))
        .map(str::to_owned)
        .collect()
}

fn k_subsets_text(n: usize, k: usize) -> Vec<String> {
    use itertools::Itertools;
    (1..=n)
        .combinations(k)
        .map(|c| c.iter().map(|v| v.to_string()).join(" "))
        .collect()
}

#[test]
fn closure_from_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.txt");
    std::fs::write(&path, WORKED).unwrap();
    let p = path.to_str().unwrap();
    let o = zforce(
        &["closure", "--rule", "r2", "--black", "1,2", "--input", p],
        "",
    );
    assert!(o.status.success());
    assert_eq!(stdout(&o), "closure: 1 2\nsteps: 0\n");
    let o = zforce(
        &["closure", "--rule", "r1", "--black", "1,2", "--input", p],
        "",
    );
    let out = stdout(&o);
    assert!(out.starts_with("closure: 1 2 3 4\nsteps: 1\n"), "{out}");
    assert!(
        out.contains("edge {1 3 4} trigger {1} blackens {3 4}"),
        "{out}"
    );
}

#[test]
fn families_print_six_pairs() {
    let o = zforce(&["families", "--rule", "r1"], WORKED);
    assert!(o.status.success());
    assert_eq!(section(&stdout(&o), "forcing"), k_subsets_text(4, 2));
    assert_eq!(section(&stdout(&o), "immune"), k_subsets_text(4, 3));
}

#[test]
fn construct_r2_forcing() {
    let o = zforce(&["construct", "r2-forcing", "--n", "4", "--k", "2"], "");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "n 4\ne 1 2\ne 1 3\ne 1 4\ne 2 3 4\n");
    let o = zforce(
        &["construct", "r2-forcing", "--n", "4", "--k", "2", "--json"],
        "",
    );
    assert_eq!(
        stdout(&o).trim(),
        r#"{"vertices":4,"edges":[[1,2],[1,3],[1,4],[2,3,4]]}"#
    );
}

#[test]
fn construct_pipes_into_families() {
    let cases = [
        ("r1-forcing", "r1", "forcing"),
        ("r1-immune", "r1", "immune"),
        ("r2-forcing", "r2", "forcing"),
        ("r2-immune", "r2", "immune"),
    ];
    for n in 1..=7 {
        for k in 1..=n {
            for (name, rule, side) in cases {
                let (ns, ks) = (n.to_string(), k.to_string());
                let built = zforce(&["construct", name, "--n", &ns, "--k", &ks], "");
                assert!(built.status.success(), "{name} {n} {k}");
                let fams = zforce(&["families", "--rule", rule], &stdout(&built));
                assert!(fams.status.success(), "{}", stderr(&fams));
                assert_eq!(
                    section(&stdout(&fams), side),
                    k_subsets_text(n, k),
                    "{name} n={n} k={k}"
                );
            }
        }
    }
}

#[test]
fn verify_checks_uniform_families() {
    let built = zforce(&["construct", "r2-immune", "--n", "6", "--k", "4"], "");
    let o = zforce(
        &["verify", "--rule", "r2", "--expect-immune-uniform", "4"],
        &stdout(&built),
    );
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(
        stdout(&o),
        "rule: r2\nPASS\tTr(forcing) = immune\nPASS\tTr(immune) = forcing\nPASS\timmune = U(4,6)\n"
    );
    let o = zforce(
        &["verify", "--rule", "r2", "--expect-forcing-uniform", "4"],
        &stdout(&built),
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL\tforcing = U(4,6)"));
}

#[test]
fn output_is_identical_across_worker_counts() {
    let h = zforce(&["construct", "r2-forcing", "--n", "9", "--k", "4"], "");
    let input = stdout(&h);
    let base = zforce(&["families", "--rule", "r2", "--direct"], &input);
    assert!(base.status.success());
    for jobs in ["2", "3", "8"] {
        let o = zforce(
            &["families", "--rule", "r2", "--direct", "--jobs", jobs],
            &input,
        );
        assert_eq!(o.stdout, base.stdout);
    }
    let t1 = zforce(&["tables", "--n-max", "5"], "");
    let t4 = zforce(&["tables", "--n-max", "5", "--jobs", "4"], "");
    assert_eq!(t1.stdout, t4.stdout);
    let again = zforce(&["tables", "--n-max", "5"], "");
    assert_eq!(t1.stdout, again.stdout);
}

#[test]
fn reference_check_passes() {
    for flag in ["--reference-check", "--paper-check"] {
        let o = zforce(&["tables", flag], "");
        assert!(o.status.success(), "{}", stderr(&o));
        let out = stdout(&o);
        assert!(
            out.lines().filter(|l| l.starts_with("PASS\t")).count() == 57,
            "{out}"
        );
        assert!(!out.contains("FAIL"));
    }
}

#[test]
fn exit_codes() {
    // usage errors
    let o = zforce(&["closure", "--black", "1"], WORKED);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--rule"));
    assert_eq!(
        zforce(&["families", "--rule", "r9"], WORKED).status.code(),
        Some(2)
    );
    assert_eq!(zforce(&["frobnicate"], "").status.code(), Some(2));
    // domain errors echo the error name
    let o = zforce(&["families", "--rule", "r0"], WORKED);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error: RuleNotApplicable"));
    let o = zforce(
        &["check-forcing", "--rule", "r1", "--set", "1"],
        "n 3\ne 1 2\ne 1 2 3\n",
    );
    assert!(stderr(&o).starts_with("error: NotAClutter"));
    let o = zforce(&["construct", "graph-immune", "--n", "6", "--k", "3"], "");
    assert!(stderr(&o).starts_with("error: NotRealizable"));
    let o = zforce(&["check-immune", "--rule", "r1", "--set", "9"], WORKED);
    assert!(stderr(&o).starts_with("error: VertexOutOfRange"));
    let o = zforce(
        &[
            "closure",
            "--rule",
            "r1",
            "--black",
            "1",
            "--input",
            "/nonexistent/h",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn point_queries() {
    let pendant = "n 4\ne 1 2\ne 1 3\ne 2 3\ne 3 4\n";
    let o = zforce(&["check-immune", "--rule", "r2", "--set", "1,2"], pendant);
    assert_eq!(stdout(&o), "immune: true\nimmune (neighbourhood): true\n");
    let o = zforce(&["check-immune", "--rule", "r2", "--set", "1,2,3"], pendant);
    assert_eq!(stdout(&o), "immune: false\nimmune (neighbourhood): false\n");
    let o = zforce(&["check-forcing", "--rule", "r2", "--set", "2,3"], WORKED);
    assert_eq!(stdout(&o), "forcing: true\n");
    let o = zforce(&["forcing-number", "--rule", "r2"], WORKED);
    assert_eq!(stdout(&o), "forcing number: 2\n");
    let o = zforce(&["sigma", "--x", "1", "--edge", "1,3,4"], WORKED);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "sigma1: 0\nsigma2: 1\n1 3 4\n");
}

#[test]
fn transversal_and_catalog() {
    let o = zforce(&["transversal"], "n 4\ne 1 2\ne 3 4\n");
    assert_eq!(stdout(&o), "n 4\ne 1 3\ne 1 4\ne 2 3\ne 2 4\n");
    let o = zforce(
        &["transversal", "--json"],
        r#"{"vertices": 3, "edges": [[1,2,3]]}"#,
    );
    assert_eq!(stdout(&o).trim(), r#"{"vertices":3,"edges":[[1],[2],[3]]}"#);
    let o = zforce(&["catalog"], "");
    assert_eq!(stdout(&o).lines().count(), 1 + 28);
    let o = zforce(&["catalog", "--n-max", "5"], "");
    assert_eq!(stdout(&o).lines().count(), 1 + 28 + 180);
}

#[test]
fn search_guard_and_override() {
    let wide = "n 14\ne 1 2\n";
    let o = zforce(&["families", "--rule", "r1"], wide);
    assert!(stderr(&o).starts_with("error: SearchBoundExceeded"));
    let o = zforce(&["forcing-number", "--rule", "r1", "--allow-large"], wide);
    assert_eq!(stdout(&o), "forcing number: 13\n");
    let o = Command::new(env!("CARGO_BIN_EXE_zforce"))
        .args(["construct", "complete", "--n", "3", "--k", "2"])
        .output()
        .unwrap();
    let mut child = Command::new(env!("CARGO_BIN_EXE_zforce"))
        .args(["forcing-number", "--rule", "r1"])
        .env("ZF_SEARCH_BOUND", "2")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&o.stdout).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("SearchBoundExceeded"));
}
