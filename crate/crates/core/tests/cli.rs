use std::path::Path;

use rainbow_core::cli::{run, EXIT_BUDGET, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
use rainbow_core::families::{generate, FamilySpec};
use rainbow_core::Graph;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn rainbow(args: &[&str]) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("rainbow").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_then_solve_wheel2() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.el");
    let o = rainbow(&["gen", "--family", "wheel2", "--n", "9", "--out", path_str(&g)]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let text = std::fs::read_to_string(&g).unwrap();
    assert!(text.starts_with("# wheel2 n=9\n19 36\n"));

    let o = rainbow(&["solve", "--graph", path_str(&g), "--mode", "srvc"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert_eq!(o.stdout.lines().next(), Some("3"));
    assert!(o.stdout.contains("status\texact"));
}

#[test]
fn check_reports_failing_pair_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("p4.el");
    let bad = dir.path().join("bad.col");
    std::fs::write(&g, "4 3\n0 1\n1 2\n2 3\n").unwrap();
    std::fs::write(&bad, "4 2\n0 2\n1 1\n2 1\n3 2\n").unwrap();
    let o = rainbow(&["check", "--graph", path_str(&g), "--coloring", path_str(&bad), "--mode", "srvc"]);
    assert_eq!(o.code, EXIT_FAILED);
    assert!(o.stdout.contains("failing pair (0,3)"), "{}", o.stdout);

    let good = dir.path().join("good.col");
    std::fs::write(&good, "4 2\n0 1\n1 1\n2 2\n3 1\n").unwrap();
    let o = rainbow(&["check", "--graph", path_str(&g), "--coloring", path_str(&good), "--mode", "srvc"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.starts_with("valid"));
}

#[test]
fn paper_labels_name_wheel2_vertices() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("w.el");
    let c = dir.path().join("mono.col");
    rainbow(&["gen", "--family", "wheel2", "--n", "7", "--out", path_str(&g)]);
    let mono: String = std::iter::once("15 1\n".to_string())
        .chain((0..15).map(|v| format!("{v} 1\n")))
        .collect();
    std::fs::write(&c, mono).unwrap();
    let o = rainbow(&[
        "check",
        "--graph",
        path_str(&g),
        "--coloring",
        path_str(&c),
        "--mode",
        "rvc",
        "--paper-labels",
    ]);
    assert_eq!(o.code, EXIT_FAILED);
    assert!(o.stdout.contains("(u_1,v_3)"), "{}", o.stdout);
}

#[test]
fn verify_lemma3_small_range_passes() {
    let o = rainbow(&["verify", "--suite", "lemma3", "--min", "3", "--max", "7"]);
    assert_eq!(o.code, EXIT_OK, "{}{}", o.stdout, o.stderr);
    assert!(o.stdout.starts_with("suite\tcase\texpected\tobserved\tstatus\n"));
    assert!(o.stdout.contains("lemma3\tW2_7 rvc 2-coloring\tnone\tnone\tpass"));
}

#[test]
fn verify_reports_are_deterministic() {
    let a = rainbow(&["verify", "--suite", "checker-oracle", "--min", "3", "--max", "4", "--samples", "50"]);
    let b = rainbow(&["verify", "--suite", "checker-oracle", "--min", "3", "--max", "4", "--samples", "50"]);
    assert_eq!(a.code, EXIT_OK);
    assert_eq!(a.stdout, b.stdout);

    let j = rainbow(&["verify", "--suite", "cor12", "--format", "jsonl"]);
    assert_eq!(j.code, EXIT_OK);
    for line in j.stdout.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["suite"], "cor12");
    }
}

#[test]
fn budget_exhaustion_exits_3() {
    let o = rainbow(&["verify", "--suite", "thm4-colorings", "--pairs", "5,6", "--budget-nodes", "10"]);
    assert_eq!(o.code, EXIT_BUDGET, "{}", o.stdout);
    assert!(o.stdout.contains("\tunknown\n"));

    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("glued.el");
    rainbow(&["gen", "--family", "thm4", "--a", "5", "--b", "6", "--out", path_str(&g)]);
    let o = rainbow(&["solve", "--graph", path_str(&g), "--mode", "rvc", "--budget-nodes", "1000"]);
    assert_eq!(o.code, EXIT_BUDGET);
    assert!(o.stdout.contains("status\tunknown"));
}

#[test]
fn large_inputs_need_a_budget() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("glued.el");
    rainbow(&["gen", "--family", "thm4", "--a", "5", "--b", "6", "--out", path_str(&g)]);
    let o = rainbow(&["solve", "--graph", path_str(&g), "--mode", "rvc"]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("budget"));

    let o = rainbow(&["verify", "--suite", "prop11", "--max", "7"]);
    assert_eq!(o.code, EXIT_USAGE);
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(rainbow(&["solve", "--bogus"]).code, EXIT_USAGE);
    assert_eq!(rainbow(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(rainbow(&["verify", "--suite", "nope"]).code, EXIT_USAGE);
    assert_eq!(rainbow(&["gen", "--family", "wheel2"]).code, EXIT_USAGE);
    assert_eq!(rainbow(&["dist", "--graph", "/nonexistent/g.el"]).code, EXIT_USAGE);

    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("bad.el");
    std::fs::write(&g, "3 5\n0 1\n").unwrap();
    let o = rainbow(&["dist", "--graph", path_str(&g)]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.starts_with("error:"));

    assert_eq!(rainbow(&["--help"]).code, EXIT_OK);
}

#[test]
fn dist_prints_diameter_and_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("c5.el");
    rainbow(&["gen", "--family", "cycle", "--n", "5", "--out", path_str(&g)]);
    let o = rainbow(&["dist", "--graph", path_str(&g), "--matrix"]);
    assert_eq!(o.code, EXIT_OK);
    let lines: Vec<&str> = o.stdout.lines().collect();
    assert_eq!(lines[0], "diameter\t2");
    assert_eq!(lines[1], "0 1 2 2 1");
    assert_eq!(lines.len(), 6);
}

#[test]
fn solve_oracle_and_witness() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("p6.el");
    let w = dir.path().join("w.col");
    rainbow(&["gen", "--family", "path", "--n", "6", "--out", path_str(&g)]);
    let o = rainbow(&[
        "solve",
        "--graph",
        path_str(&g),
        "--mode",
        "rvc",
        "--oracle",
        "--witness",
        path_str(&w),
        "--stats",
    ]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert!(o.stdout.starts_with("4\n"));
    assert!(o.stdout.contains("oracle\t4\tagree"));
    assert!(o.stderr.contains("nodes\t"));
    let o = rainbow(&["check", "--graph", path_str(&g), "--coloring", path_str(&w), "--mode", "rvc"]);
    assert_eq!(o.code, EXIT_OK);
}

#[test]
fn paper_coloring_files_check_out() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("w.el");
    let c = dir.path().join("c.col");
    rainbow(&["gen", "--family", "wheel2", "--n", "10", "--out", path_str(&g)]);
    let o = rainbow(&["paper-coloring", "--kind", "lemma3", "--n", "10", "--out", path_str(&c)]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let o = rainbow(&["check", "--graph", path_str(&g), "--coloring", path_str(&c), "--mode", "rvc"]);
    assert_eq!(o.code, EXIT_OK);

    let p = dir.path().join("p7.el");
    rainbow(&["gen", "--family", "path", "--n", "7", "--out", path_str(&p)]);
    let o = rainbow(&["paper-coloring", "--kind", "thm1", "--graph", path_str(&p)]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.starts_with("7 5\n"));

    let o = rainbow(&["paper-coloring", "--kind", "thm1"]);
    assert_eq!(o.code, EXIT_USAGE);
}

#[test]
fn gen_round_trips_every_family() {
    let specs = [
        (vec!["--family", "path", "--n", "5"], FamilySpec::Path { n: 5 }),
        (vec!["--family", "cycle", "--n", "6"], FamilySpec::Cycle { n: 6 }),
        (vec!["--family", "complete", "--n", "4"], FamilySpec::Complete { n: 4 }),
        (vec!["--family", "bipartite", "--s", "2", "--t", "3"], FamilySpec::Bipartite { s: 2, t: 3 }),
        (
            vec!["--family", "multipartite", "--parts", "1,2,2"],
            FamilySpec::Multipartite { parts: vec![1, 2, 2] },
        ),
        (vec!["--family", "wheel", "--n", "5"], FamilySpec::Wheel { n: 5 }),
        (vec!["--family", "wheel2", "--n", "12"], FamilySpec::Wheel2 { n: 12 }),
        (vec!["--family", "thm4", "--a", "6", "--b", "8"], FamilySpec::Thm4 { a: 6, b: 8 }),
    ];
    for (args, spec) in specs {
        let mut argv = vec!["gen"];
        argv.extend(args);
        let o = rainbow(&argv);
        assert_eq!(o.code, EXIT_OK, "{spec}: {}", o.stderr);
        assert_eq!(o.stdout.lines().next().unwrap(), format!("# {spec}"));
        let parsed = Graph::parse_edge_list(&o.stdout).unwrap();
        assert_eq!(parsed, generate(&spec).unwrap(), "{spec}");
    }
}

#[test]
fn search_violation_reports_first_vertex_deletion() {
    let o = rainbow(&["search-violation", "--max-n", "4", "--variant", "vertex"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.starts_with("violation\tn=3\tedges=0-1,0-2\tdeleted=vertex 1"), "{}", o.stdout);
    let o = rainbow(&["search-violation", "--max-n", "5", "--variant", "edge"]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.stdout, "none\tmax_n=5\n");
}
