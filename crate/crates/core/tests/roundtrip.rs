//! Files written by the command line parse back to equal values.

use std::path::Path;

use pcentered::cli::run;
use pcentered::io;

fn pcentered(args: &[&str]) -> i32 {
    run(std::iter::once("pcentered").chain(args.iter().copied()))
}

/// Loads with `load`, rewrites with `save`, and checks both the value and
/// the bytes survive.
fn round_trip<T: PartialEq + std::fmt::Debug>(
    path: &Path,
    load: impl Fn(&Path) -> pcentered::Result<T>,
    save: impl Fn(&Path, &T) -> pcentered::Result<()>,
) {
    let value = load(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let copy = path.with_extension("copy");
    save(&copy, &value).unwrap();
    assert_eq!(load(&copy).unwrap(), value);
    assert_eq!(std::fs::read(path).unwrap(), std::fs::read(&copy).unwrap(), "{}", path.display());
}

#[test]
fn generated_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let f = |n: &str| dir.path().join(n);
    let s = |p: &Path| p.to_str().unwrap().to_owned();
    let families: &[&[&str]] = &[
        &["path", "5"],
        &["grid", "3", "4"],
        &["fans", "2", "3"],
        &["gk", "3", "2", "2"],
        &["lower-bound", "1", "2", "2", "3"],
        &["outerplanar", "30", "--seed", "4"],
        &["stacked", "30", "--seed", "4"],
        &["ktree", "3", "30", "--seed", "4"],
        &["bounded-degree", "30", "3", "40", "--seed", "4"],
        &["product", "10", "5", "2", "--seed", "4"],
    ];
    for (i, fam) in families.iter().enumerate() {
        let g = f(&format!("g{i}"));
        let lay = f(&format!("l{i}"));
        let mut args = vec!["generate".to_owned()];
        args.extend(fam.iter().map(|a| a.to_string()));
        args.extend(["-o".into(), s(&g), "--layering".into(), s(&lay)]);
        let has_td = !matches!(fam[0], "path" | "grid" | "lower-bound" | "bounded-degree");
        let td = f(&format!("t{i}"));
        if has_td {
            args.extend(["--decomposition".into(), s(&td)]);
        }
        if fam[0] == "product" {
            args.extend(["--partition".into(), s(&f("part")), "--quotient".into(), s(&f("q"))]);
        }
        if fam[0] == "gk" {
            args.extend(["--boundary".into(), s(&f("boundary"))]);
        }
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(pcentered(&refs), 0, "{fam:?}");
        round_trip(&g, |p| io::load_graph(p), |p, v| io::save_graph(p, v));
        round_trip(&lay, |p| io::load_layering(p), |p, v| io::save_layering(p, v));
        if has_td {
            round_trip(&td, |p| io::load_decomposition(p), |p, v| io::save_decomposition(p, v));
        }
    }
    round_trip(&f("part"), |p| io::load_partition(p), |p, v| io::save_partition(p, v));
    round_trip(&f("q"), |p| io::load_graph(p), |p, v| io::save_graph(p, v));
    round_trip(&f("boundary"), |p| io::load_vertex_list(p), |p, v| io::save_vertex_list(p, v));

    let c = f("c");
    assert_eq!(
        pcentered(&[
            "color",
            "--algo",
            "stw",
            "-p",
            "2",
            "-g",
            &s(&f("q")),
            "--decomposition",
            &s(&f("t9")),
            "-o",
            &s(&c)
        ]),
        0
    );
    round_trip(&c, |p| io::load_coloring(p), |p, v| io::save_coloring(p, v));
    let stats = f("stats.csv");
    assert_eq!(
        pcentered(&[
            "color",
            "--algo",
            "degree",
            "-p",
            "1",
            "--seed",
            "3",
            "-g",
            &s(&f("g8")),
            "-o",
            &s(&c),
            "--stats",
            &s(&stats)
        ]),
        0
    );
    round_trip(&c, |p| io::load_coloring(p), |p, v| io::save_coloring(p, v));
    assert_eq!(std::fs::read_to_string(&stats).unwrap().lines().count(), 2);
}
