//! Write and read back every file format.

use pcentered::generators::random_stacked_triangulation;
use pcentered::{bfs_layering, io, stw, VertexPartition};

fn main() -> pcentered::Result<()> {
    let (g, d) = random_stacked_triangulation(8, 2)?;
    let layering = bfs_layering(&g, None)?;
    let col = stw::color_simple_treewidth(&g, &d, 1, None)?;
    let part = VertexPartition::new((0..8).map(|v| v / 2).collect())?;

    let mut out = Vec::new();
    io::write_graph(&g, &mut out)?;
    println!("graph:\n{}", String::from_utf8_lossy(&out));
    assert_eq!(io::read_graph(&out[..])?, g);

    for (name, bytes) in [
        ("layering", {
            let mut b = Vec::new();
            io::write_layering(&layering, &mut b)?;
            b
        }),
        ("partition", {
            let mut b = Vec::new();
            io::write_partition(&part, &mut b)?;
            b
        }),
        ("decomposition", {
            let mut b = Vec::new();
            io::write_decomposition(&d, &mut b)?;
            b
        }),
        ("coloring", {
            let mut b = Vec::new();
            io::write_coloring(&col, &mut b)?;
            b
        }),
    ] {
        println!("{name}:\n{}", String::from_utf8_lossy(&bytes));
    }
    let mut b = Vec::new();
    io::write_coloring(&col, &mut b)?;
    assert_eq!(io::read_coloring(&b[..])?, col);
    Ok(())
}
