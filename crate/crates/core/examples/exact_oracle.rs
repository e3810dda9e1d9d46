//! Exact χ_p and lin_p of small graphs.

use pcentered::generators::classics;
use pcentered::oracle::{chi_p_exact, lin_p_exact};

fn main() -> pcentered::Result<()> {
    let graphs = [("P7", classics::path(7)), ("C6", classics::cycle(6)), ("grid 3x3", classics::grid(3, 3))];
    for (name, g) in &graphs {
        for p in 1..=3 {
            let n = g.vertex_count();
            let chi = chi_p_exact(g, p, n, None)?.value().expect("n colors always suffice");
            let lin = lin_p_exact(g, p, n, None)?.value().expect("n colors always suffice");
            println!("{name}: chi_{p} = {chi}, lin_{p} = {lin}");
        }
    }
    Ok(())
}
