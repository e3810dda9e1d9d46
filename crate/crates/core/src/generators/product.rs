//! Certified layered-partition instances, built forward from a quotient.

use rand::Rng;

use super::rng;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::layering::{Layering, VertexPartition};

/// A graph with a layering and a partition of layered width at most the
/// blow-up, whose quotient is a subgraph of the source graph `h` under the
/// identity map on class ids.
#[derive(Clone, Debug)]
pub struct ProductInstance {
    pub graph: Graph,
    pub layering: Layering,
    pub partition: VertexPartition,
}

/// Builds a graph inside the product of `h` with a path of `layers` vertices.
///
/// Each vertex `X` of `h` becomes a class occupying a random interval of
/// layers with `1..=blowup` copies per layer. Copies in equal or adjacent
/// layers may be joined when they share a class or their classes are
/// adjacent in `h`; every edge of `h` whose classes meet in equal or adjacent
/// layers is realized at least once.
pub fn synth_product_instance(h: &Graph, layers: usize, blowup: usize, seed: u64) -> Result<ProductInstance> {
    if !(1..=3).contains(&blowup) {
        return Err(Error::input("blowup must be 1, 2 or 3"));
    }
    if layers < 1 {
        return Err(Error::input("need at least one layer"));
    }
    let mut rng = rng(seed);
    let m = h.vertex_count();
    // copies[x][l] = vertices of class x in layer l (empty outside its interval).
    let mut spans = Vec::with_capacity(m);
    for _ in 0..m {
        let start = rng.gen_range(0..layers);
        let len = rng.gen_range(1..=(layers - start).min(4));
        let counts: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=blowup)).collect();
        spans.push((start, counts));
    }
    // Number vertices by (layer, class, copy).
    let mut copies: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); layers]; m];
    let mut layer_of = Vec::new();
    let mut class_of = Vec::new();
    for l in 0..layers {
        for (x, (start, counts)) in spans.iter().enumerate() {
            if l >= *start && l < start + counts.len() {
                for _ in 0..counts[l - start] {
                    copies[x][l].push(layer_of.len());
                    layer_of.push(l);
                    class_of.push(x);
                }
            }
        }
    }
    let n = layer_of.len();
    let mut b = GraphBuilder::new(n);
    let near = |x: usize, y: usize| -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for l in 0..layers {
            for &u in &copies[x][l] {
                for l2 in l.saturating_sub(1)..=(l + 1).min(layers - 1) {
                    for &v in &copies[y][l2] {
                        if u < v || x != y {
                            pairs.push((u, v));
                        }
                    }
                }
            }
        }
        pairs
    };
    for x in 0..m {
        for (u, v) in near(x, x) {
            if u != v && rng.gen_bool(0.5) {
                b.add_edge(u, v);
            }
        }
    }
    for (x, y) in h.edges() {
        let pairs = near(x, y);
        if pairs.is_empty() {
            continue;
        }
        let forced = rng.gen_range(0..pairs.len());
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if i == forced || rng.gen_bool(1.0 / 3.0) {
                b.add_edge(u, v);
            }
        }
    }
    Ok(ProductInstance {
        graph: b.build(),
        layering: Layering::new(layer_of),
        partition: VertexPartition::new(class_of)?,
    })
}
