//! Check colorings of a small grid and print the violation that refutes a bad one.

use pcentered::generators::classics;
use pcentered::verifier::{is_p_centered, VerifyMode};
use pcentered::ColorAssignment;

fn main() -> pcentered::Result<()> {
    let g = classics::grid(3, 3);
    // Row-major 3x3 grid, colored by BFS distance from the corner modulo 3.
    let by_distance = ColorAssignment::scalar(3, (0..9).map(|v| ((v / 3 + v % 3) % 3) as u64).collect())?;
    let distinct = ColorAssignment::scalar(9, (0..9).collect())?;
    for (name, col) in [("distance mod 3", &by_distance), ("all distinct", &distinct)] {
        for p in 1..=3 {
            let verdict = is_p_centered(&g, col, p, VerifyMode::Subsets)?;
            match verdict.violation {
                None => println!("{name}: {p}-centered"),
                Some(v) => println!("{name}: not {p}-centered, {v}"),
            }
        }
    }
    Ok(())
}
