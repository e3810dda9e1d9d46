//! Outerplanar colorings: layout recognition, coloring and the structural trace.

use pcentered::generators::{random_maximal_outerplanar, tree_of_fans};
use pcentered::outerplanar::{color_outerplanar_traced, find_outerplanar_layout, outerplanar_palette_bound};
use pcentered::verifier::{is_p_centered, VerifyMode};

fn main() -> pcentered::Result<()> {
    let (g, _) = random_maximal_outerplanar(200, 3)?;
    let layout = find_outerplanar_layout(&g).expect("generated graphs are outerplanar");
    println!("outer cycle starts {:?}", &layout.order()[..8]);
    for p in 1..=5 {
        let (col, trace) = color_outerplanar_traced(&g, p, Some(&layout))?;
        let ok = is_p_centered(&g, &col, p, VerifyMode::Growth)?.holds();
        println!(
            "p={p}: {} colors (bound {}), {} layers, {} layer paths, largest forbidden set {}, verified={ok}",
            col.colors_used(),
            outerplanar_palette_bound(p),
            trace.layers,
            trace.layer_paths,
            trace.max_forbidden
        );
    }
    let fans = tree_of_fans(2, 5, 1 << 20)?;
    let (col, _) = color_outerplanar_traced(&fans, 2, None)?;
    println!("F(2,5): {} vertices, {} colors", fans.vertex_count(), col.colors_used());
    Ok(())
}
