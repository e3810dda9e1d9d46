//! Lift a coloring of a quotient graph through a layered partition.

use pcentered::compose::compose_planar;
use pcentered::generators::{random_stacked_triangulation, synth_product_instance};
use pcentered::layering::validate_partition_layered_width;
use pcentered::stw::color_simple_treewidth;
use pcentered::verifier::{is_p_centered, VerifyMode};

fn main() -> pcentered::Result<()> {
    let (h, d) = random_stacked_triangulation(40, 11)?;
    let inst = synth_product_instance(&h, 15, 3, 11)?;
    let g = &inst.graph;
    println!("{} vertices in {} layers", g.vertex_count(), inst.layering.layer_count());
    assert!(validate_partition_layered_width(g, &inst.layering, &inst.partition, 3));
    let quotient = g.quotient(&inst.partition);
    for p in 1..=3 {
        let psi = color_simple_treewidth(&quotient, &d, p, None)?;
        let col = compose_planar(g, &inst.layering, &inst.partition, &psi, p, true)?;
        let ok = is_p_centered(g, &col, p, VerifyMode::Growth)?.holds();
        println!(
            "p={p}: quotient palette {}, composed palette {:?} ({} used), verified={ok}",
            psi.palette_size(),
            col.palette_shape(),
            col.colors_used()
        );
    }
    Ok(())
}
