//! End-to-end runs of the `pcentered` command line.

use std::path::Path;
use std::process::Command;

use pcentered::cli::{run, BENCH_HEADER};
use pcentered::io;
use pcentered::verifier::{is_p_centered, VerifyMode};

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn pcentered(args: &[&str]) -> i32 {
    run(std::iter::once("pcentered").chain(args.iter().copied()))
}

#[test]
fn stacked_pipeline_generate_color_verify() {
    let dir = tempfile::tempdir().unwrap();
    let (g, td, c) = (dir.path().join("g.txt"), dir.path().join("g.td"), dir.path().join("c.txt"));
    assert_eq!(pcentered(&["generate", "stacked", "40", "--seed", "9", "-o", s(&g), "--decomposition", s(&td)]), 0);
    assert_eq!(
        pcentered(&["color", "--algo", "stw", "-p", "2", "-g", s(&g), "--decomposition", s(&td), "-o", s(&c)]),
        0
    );
    assert_eq!(pcentered(&["verify", "-g", s(&g), "-c", s(&c), "-p", "2"]), 0);
    assert_eq!(pcentered(&["verify", "-g", s(&g), "-c", s(&c), "-p", "2", "--mode", "subsets"]), 0);

    // Collapse the coloring to one color: now a violation.
    let graph = io::load_graph(&g).unwrap();
    let one = pcentered::ColorAssignment::scalar(1, vec![0; graph.vertex_count()]).unwrap();
    io::save_coloring(&c, &one).unwrap();
    assert_eq!(pcentered(&["verify", "-g", s(&g), "-c", s(&c), "-p", "2"]), 1);
}

#[test]
fn product_pipeline_composes() {
    let dir = tempfile::tempdir().unwrap();
    let f = |n: &str| dir.path().join(n).to_str().unwrap().to_owned();
    let (g, l, part, q, qtd, psi, c) = (f("g"), f("l"), f("part"), f("q"), f("q.td"), f("psi"), f("c"));
    let args = [
        "generate",
        "product",
        "15",
        "8",
        "3",
        "--seed",
        "2",
        "-o",
        &g,
        "--layering",
        &l,
        "--partition",
        &part,
        "--quotient",
        &q,
        "--decomposition",
        &qtd,
    ];
    assert_eq!(pcentered(&args), 0);
    assert_eq!(pcentered(&["color", "--algo", "stw", "-p", "3", "-g", &q, "--decomposition", &qtd, "-o", &psi]), 0);
    let compose = [
        "color",
        "--algo",
        "planar-compose",
        "-p",
        "3",
        "-g",
        &g,
        "--layering",
        &l,
        "--partition",
        &part,
        "--quotient-coloring",
        &psi,
        "--check-quotient",
        "-o",
        &c,
    ];
    assert_eq!(pcentered(&compose), 0);
    let graph = io::load_graph(&g).unwrap();
    let col = io::load_coloring(&c).unwrap();
    assert!(is_p_centered(&graph, &col, 3, VerifyMode::Growth).unwrap().holds());
    assert_eq!(col.palette_shape(), &[4, 52, 3]);
}

#[test]
fn outerplanar_with_explicit_layout_and_rejection() {
    let dir = tempfile::tempdir().unwrap();
    let (g, lay, c) = (dir.path().join("g"), dir.path().join("layout"), dir.path().join("c"));
    assert_eq!(pcentered(&["generate", "cycle", "7", "-o", s(&g)]), 0);
    io::save_vertex_list(&lay, &[0, 1, 2, 3, 4, 5, 6]).unwrap();
    assert_eq!(
        pcentered(&["color", "--algo", "outerplanar", "-p", "2", "-g", s(&g), "--layout", s(&lay), "-o", s(&c)]),
        0
    );
    assert_eq!(pcentered(&["verify", "-g", s(&g), "-c", s(&c), "-p", "2"]), 0);
    assert_eq!(pcentered(&["generate", "complete", "4", "-o", s(&g)]), 0);
    assert_eq!(pcentered(&["color", "--algo", "outerplanar", "-p", "1", "-g", s(&g), "-o", s(&c)]), 2);
}

#[test]
fn exact_and_budget_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let (g, w) = (dir.path().join("g"), dir.path().join("w"));
    assert_eq!(pcentered(&["generate", "path", "7", "-o", s(&g)]), 0);
    assert_eq!(pcentered(&["exact", "-g", s(&g), "-p", "1", "-o", s(&w)]), 0);
    assert_eq!(io::load_coloring(&w).unwrap().colors_used(), 2);
    assert_eq!(pcentered(&["exact", "-g", s(&g), "-p", "2", "--at-least", "3"]), 0);
    assert_eq!(pcentered(&["exact", "-g", s(&g), "-p", "2", "--at-least", "4"]), 1);
    assert_eq!(pcentered(&["generate", "bounded-degree", "70", "4", "120", "--seed", "1", "-o", s(&g)]), 0);
    assert_eq!(pcentered(&["--time-budget", "0", "exact", "-g", s(&g), "-p", "3"]), 3);
    assert_eq!(pcentered(&["--size-cap", "5", "generate", "grid", "3", "3", "-o", s(&g)]), 3);
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g");
    assert_eq!(pcentered(&["verify", "-g", s(&g), "-c", s(&g), "-p", "1"]), 2);
    std::fs::write(&g, "3 1\n0 5\n").unwrap();
    assert_eq!(pcentered(&["color", "--algo", "degree", "-p", "1", "--seed", "0", "-g", s(&g)]), 2);
    assert_eq!(pcentered(&["generate", "stacked", "10", "-o", s(&g)]), 2, "random family without a seed");
    assert_eq!(pcentered(&["generate", "grid", "3", "-o", s(&g)]), 2, "wrong parameter count");
}

fn bench_rows(csv: &Path) -> Vec<Vec<String>> {
    let mut r = csv::Reader::from_path(csv).unwrap();
    let header: Vec<String> = r.headers().unwrap().iter().map(str::to_owned).collect();
    assert_eq!(header, BENCH_HEADER);
    r.records().map(|rec| rec.unwrap().iter().map(str::to_owned).collect()).collect()
}

#[test]
fn bench_csv_schema() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.csv");
    assert_eq!(
        pcentered(&["bench", "--family", "stacked", "--n", "50", "--p", "1..4", "--seeds", "5", "--csv", s(&out)]),
        0
    );
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("family,n,p,seed,colors_used,palette_bound,iterations,runtime_ms,verified\n"));
    let rows = bench_rows(&out);
    assert_eq!(rows.len(), 20);
    let keys: Vec<(usize, u64)> = rows.iter().map(|r| (r[2].parse().unwrap(), r[3].parse().unwrap())).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    for r in &rows {
        assert_eq!((r[0].as_str(), r[1].as_str()), ("stacked", "50"));
        let (used, bound): (u64, u64) = (r[4].parse().unwrap(), r[5].parse().unwrap());
        assert!(used <= bound);
        assert_eq!(r[6], "", "deterministic algorithms report no iterations");
        assert!(r[7].parse::<f64>().unwrap() >= 0.0);
        assert_eq!(r[8], "true");
    }

    // Same cells, same results apart from timing.
    let again = dir.path().join("again.csv");
    assert_eq!(
        pcentered(&["bench", "--family", "stacked", "--n", "50", "--p", "1..4", "--seeds", "5", "--csv", s(&again)]),
        0
    );
    let strip = |rows: Vec<Vec<String>>| {
        rows.into_iter()
            .map(|mut r| {
                r.remove(7);
                r
            })
            .collect::<Vec<_>>()
    };
    assert_eq!(strip(bench_rows(&again)), strip(rows));
}

#[test]
fn bench_degree_reports_iterations_and_failures() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d.csv");
    let args = [
        "bench",
        "--family",
        "degree",
        "--n",
        "80",
        "--p",
        "2",
        "--seeds",
        "4",
        "--delta",
        "4",
        "--palette-scale",
        "1/4096",
        "--csv",
        s(&out),
    ];
    assert_eq!(pcentered(&args), 0);
    for r in bench_rows(&out) {
        assert!(!r[6].is_empty());
        if r[8] == "false" {
            assert_eq!(r[4], "", "failed runs report no colors");
        }
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_pcentered");
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["generate", "path", "4", "-o", s(&g)]), Some(0));
    assert_eq!(status(&["no-such-command"]), Some(2));
    assert_eq!(status(&["--size-cap", "2", "generate", "path", "4", "-o", s(&g)]), Some(3));
    let out = Command::new(bin).args(["color", "--algo", "outerplanar", "-p", "1", "-g", s(&g)]).output().unwrap();
    let col = io::read_coloring(&out.stdout[..]).unwrap();
    assert_eq!(col.vertex_count(), 4);
}
