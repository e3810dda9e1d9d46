//! The randomized colorer for graphs of bounded degree, with run statistics.

use pcentered::degree::{color_bounded_degree_with_retries, palette_size, DegreeColorConfig, PaletteScale};
use pcentered::generators::random_bounded_degree;
use pcentered::verifier::{is_p_centered, VerifyMode};

fn main() -> pcentered::Result<()> {
    let g = random_bounded_degree(300, 3, 400, 7)?;
    println!("palette for Δ=3, p=2: {}", palette_size(3, 2, PaletteScale::ONE, false)?);
    for p in 1..=3 {
        let cfg = DegreeColorConfig::new(p, 42);
        let (col, stats) = color_bounded_degree_with_retries(&g, &cfg, 3)??;
        let ok = is_p_centered(&g, &col, p, VerifyMode::Growth)?.holds();
        println!(
            "p={p}: {} colors of {}, {} iterations, {} violators, verified={ok}",
            col.colors_used(),
            stats.palette_size,
            stats.iterations,
            stats.violators
        );
    }
    // A starved palette may run out of iterations; the failure is reported, not hidden.
    let mut cfg = DegreeColorConfig::new(2, 1);
    cfg.palette_scale = PaletteScale::new(1, 4096)?;
    match color_bounded_degree_with_retries(&g, &cfg, 1)? {
        Ok((col, _)) => println!("palette/4096: finished with {} colors", col.colors_used()),
        Err(fail) => println!(
            "palette/4096: gave up after {} iterations with {} vertices colored",
            fail.stats.iterations,
            fail.partial.colored_count()
        ),
    }
    Ok(())
}
