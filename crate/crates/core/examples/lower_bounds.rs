//! Lower bounds on lin_p from the recursive lower-bound family.

use std::time::Duration;

use pcentered::generators::{lower_bound_graph, lower_bound_size};
use pcentered::oracle::lin_p_at_least;

fn main() -> pcentered::Result<()> {
    for (p, t, x, n, k) in [(1, 1, 2, 2, 2), (1, 2, 2, 3, 3), (2, 1, 2, 3, 3)] {
        let g = lower_bound_graph(p, t, x, n, 1 << 20)?;
        let f = lin_p_at_least(&g, p as usize, k, Some(Duration::from_secs(60)))?;
        println!("G({p},{t},{x},{n}): {} vertices, lin_{p} >= {k}: {}", g.vertex_count(), f.witness.is_none());
        if let Some(ob) = f.deepest_obstruction {
            println!("  deepest obstruction: {ob}");
        }
    }
    // Larger members are far beyond any explicit construction.
    match lower_bound_size(2, 2, 2, 3) {
        Some(size) => println!("G(2,2,2,3) would have {size} vertices"),
        None => println!("G(2,2,2,3) has more than 2^4096 vertices"),
    }
    Ok(())
}
