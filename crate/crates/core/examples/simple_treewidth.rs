//! Colorings from simple tree-decompositions of width 1, 2 and 3.

use pcentered::generators::{classics, random_simple_ktree, random_stacked_triangulation};
use pcentered::stw::{color_simple_treewidth, stw_palette_bound};
use pcentered::verifier::{is_p_centered, VerifyMode};
use pcentered::SimpleTreeDecomposition;

fn main() -> pcentered::Result<()> {
    let path = classics::path(6);
    let d = SimpleTreeDecomposition::new((0..5).map(|i| vec![i, i + 1]).collect(), &[(0, 1), (1, 2), (2, 3), (3, 4)])?;
    println!("P6, p=2: {:?}", color_simple_treewidth(&path, &d, 2, None)?.flatten());

    for k in [2, 3] {
        let (g, d) = random_simple_ktree(k, 120, 5)?;
        for p in 1..=3 {
            let col = color_simple_treewidth(&g, &d, p, None)?;
            let ok = is_p_centered(&g, &col, p, VerifyMode::Growth)?.holds();
            println!(
                "simple {k}-tree, p={p}: {} colors, bound {}, verified={ok}",
                col.colors_used(),
                stw_palette_bound(k, p)
            );
        }
    }
    let (g, d) = random_stacked_triangulation(500, 1)?;
    let col = color_simple_treewidth(&g, &d, 3, None)?;
    println!("stacked triangulation on 500 vertices, p=3: {} colors of {:?}", col.colors_used(), col.palette_shape());
    Ok(())
}
