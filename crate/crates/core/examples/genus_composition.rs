//! Add apex vertices to a planar instance and color the result as a genus-1 graph.

use pcentered::compose::{compose_genus, compose_planar, PlanarPart};
use pcentered::generators::{random_stacked_triangulation, synth_product_instance};
use pcentered::layering::Layering;
use pcentered::stw::color_simple_treewidth;
use pcentered::verifier::{is_p_centered, VerifyMode};
use pcentered::GraphBuilder;

fn main() -> pcentered::Result<()> {
    let p = 2;
    let (h, d) = random_stacked_triangulation(25, 4)?;
    let inst = synth_product_instance(&h, 8, 2, 4)?;
    let psi = color_simple_treewidth(&inst.graph.quotient(&inst.partition), &d, p, None)?;
    let phi = compose_planar(&inst.graph, &inst.layering, &inst.partition, &psi, p, false)?;

    // Z: one extra vertex per chosen layer, adjacent to part of its own and neighboring layers.
    let n0 = inst.graph.vertex_count();
    let mut b = GraphBuilder::from_graph(&inst.graph);
    let mut layers = inst.layering.as_slice().to_vec();
    let mut z = Vec::new();
    for target in [2, 5] {
        let a = b.add_vertex();
        layers.push(target);
        z.push(a);
        for v in (0..n0).filter(|&v| layers[v].abs_diff(target) <= 1 && v % 2 == 0) {
            b.add_edge(a, v);
        }
    }
    let g = b.build();
    let planar = PlanarPart { gplus: &inst.graph, layering: &inst.layering, coloring: &phi };
    let col = compose_genus(&g, &Layering::new(layers), &z, planar, p, 1)?;
    let ok = is_p_centered(&g, &col, p, VerifyMode::Growth)?.holds();
    println!("apices {z:?} colored {:?}", z.iter().map(|&v| col.flat(v)).collect::<Vec<_>>());
    println!(
        "palette {} = 2g(p+1) + |φ+| = {} + {}, verified={ok}",
        col.palette_size(),
        2 * (p + 1),
        phi.palette_size()
    );
    Ok(())
}
