//! Lifting colorings through layered partitions.
//!
//! Given a layering and a partition of layered width at most 3, a p-centered
//! coloring `ψ` of the quotient lifts to `(layer mod (p+1), ψ(class), γ)`,
//! where `γ` separates the at most three vertices a class has in a layer.

use std::collections::HashMap;

use crate::color::ColorAssignment;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::layering::{layered_width_excess, validate_layering, Layering, VertexPartition};
use crate::verifier::{is_p_centered, VerifyMode};

/// Colors `g` with triples `(layer mod (p+1), ψ(class), γ)`, palette shape
/// `[p+1, |ψ|, 3]`. With `check_psi`, `ψ` is first verified p-centered on
/// the quotient.
pub fn compose_planar(
    g: &Graph,
    layering: &Layering,
    part: &VertexPartition,
    psi: &ColorAssignment,
    p: usize,
    check_psi: bool,
) -> Result<ColorAssignment> {
    if p < 1 {
        return Err(Error::input("p must be at least 1"));
    }
    let n = g.vertex_count();
    if part.vertex_count() != n {
        return Err(Error::input(format!("partition covers {} vertices, graph has {n}", part.vertex_count())));
    }
    if !validate_layering(g, layering) {
        return Err(Error::input("not a layering of the graph"));
    }
    if let Some((class, layer)) = layered_width_excess(layering, part, 3) {
        return Err(Error::input(format!("class {class} has more than 3 vertices in layer {layer}")));
    }
    if psi.vertex_count() != part.class_count() {
        return Err(Error::input(format!(
            "quotient coloring covers {} classes, partition has {}",
            psi.vertex_count(),
            part.class_count()
        )));
    }
    if check_psi && !is_p_centered(&g.quotient(part), psi, p, VerifyMode::Growth)?.holds() {
        return Err(Error::input("quotient coloring is not p-centered"));
    }
    let mut next_gamma: HashMap<(usize, usize), u64> = HashMap::new();
    let mut tuples = Vec::with_capacity(n);
    for v in 0..n {
        let (class, layer) = (part.class_of(v), layering.layer_of(v));
        let gamma = next_gamma.entry((class, layer)).or_default();
        tuples.push(vec![(layer % (p + 1)) as u64, psi.flat(class), *gamma]);
        *gamma += 1;
    }
    ColorAssignment::new(vec![(p + 1) as u64, psi.palette_size(), 3], &tuples)
}

/// Inputs of [`compose_genus`] describing the planar part `G+ ⊇ G - Z`.
/// Vertex `v` of `G` outside `Z` is vertex `v` of `G+`; `G+` may have more.
#[derive(Clone, Copy, Debug)]
pub struct PlanarPart<'a> {
    pub gplus: &'a Graph,
    pub layering: &'a Layering,
    pub coloring: &'a ColorAssignment,
}

/// Colors a graph of Euler genus `genus` from a coloring of a planar
/// supergraph of `G - Z`. Vertices of `Z` get `(0, layer mod (p+1), z)` with
/// `z < 2·genus` distinct within each layer, the others `(1, φ+(v))`. The two
/// kinds are encoded as disjoint ranges of a scalar palette of size
/// `2·genus·(p+1) + |φ+|`: `α·2g + z` and `2g(p+1) + flat φ+(v)`.
pub fn compose_genus(
    g: &Graph,
    layering: &Layering,
    z: &[usize],
    planar: PlanarPart<'_>,
    p: usize,
    genus: usize,
) -> Result<ColorAssignment> {
    if p < 1 {
        return Err(Error::input("p must be at least 1"));
    }
    let n = g.vertex_count();
    if !validate_layering(g, layering) {
        return Err(Error::input("not a layering of the graph"));
    }
    if !validate_layering(planar.gplus, planar.layering) {
        return Err(Error::input("not a layering of the planar part"));
    }
    if planar.coloring.vertex_count() != planar.gplus.vertex_count() {
        return Err(Error::input("planar coloring does not cover the planar part"));
    }
    let mut in_z = vec![false; n];
    for &v in z {
        if v >= n || std::mem::replace(&mut in_z[v], true) {
            return Err(Error::input(format!("Z entry {v} is out of range or repeated")));
        }
    }
    let two_g = 2 * genus as u64;
    let mut z_index: HashMap<usize, u64> = HashMap::new();
    let mut colors = vec![0; n];
    for v in 0..n {
        let layer = layering.layer_of(v);
        if in_z[v] {
            let k = z_index.entry(layer).or_default();
            if *k >= two_g {
                return Err(Error::input(format!("layer {layer} holds more than {two_g} vertices of Z")));
            }
            colors[v] = (layer % (p + 1)) as u64 * two_g + *k;
            *k += 1;
            continue;
        }
        if v >= planar.gplus.vertex_count() {
            return Err(Error::input(format!("vertex {v} outside Z is missing from the planar part")));
        }
        if planar.layering.layer_of(v) != layer {
            return Err(Error::input(format!(
                "vertex {v} is in layer {layer} but in layer {} of the planar part",
                planar.layering.layer_of(v)
            )));
        }
        colors[v] = two_g * (p + 1) as u64 + planar.coloring.flat(v);
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| !in_z[u] && !in_z[v] && !planar.gplus.has_edge(u, v)) {
        return Err(Error::input(format!("edge {u}-{v} of G - Z is missing from the planar part")));
    }
    ColorAssignment::scalar(two_g * (p + 1) as u64 + planar.coloring.palette_size(), colors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{classics, random_stacked_triangulation, synth_product_instance};
    use crate::graph::GraphBuilder;
    use crate::layering::bfs_layering;
    use crate::stw::color_simple_treewidth;

    #[test]
    fn path_with_distinct_psi() {
        let g = classics::path(5);
        let lay = bfs_layering(&g, None).unwrap();
        let psi = ColorAssignment::scalar(5, (0..5).collect()).unwrap();
        for p in 1..=4 {
            let col = compose_planar(&g, &lay, &VertexPartition::identity(5), &psi, p, true).unwrap();
            assert!(is_p_centered(&g, &col, p, VerifyMode::Subsets).unwrap().holds());
        }
    }

    #[test]
    fn gamma_separates_a_class_in_one_layer() {
        let g = Graph::empty(3);
        let lay = Layering::new(vec![0, 0, 0]);
        let part = VertexPartition::new(vec![0, 0, 0]).unwrap();
        let psi = ColorAssignment::scalar(1, vec![0]).unwrap();
        let col = compose_planar(&g, &lay, &part, &psi, 2, false).unwrap();
        assert_eq!((0..3).map(|v| col.color(v)[2]).collect::<Vec<_>>(), vec![0, 1, 2]);
        let four = Graph::empty(4);
        let err = compose_planar(
            &four,
            &Layering::new(vec![0; 4]),
            &VertexPartition::new(vec![0; 4]).unwrap(),
            &psi,
            2,
            false,
        );
        assert!(matches!(err, Err(Error::Input(m)) if m.contains("class 0") && m.contains("layer 0")));
    }

    fn planar_instance(seed: u64, p: usize) -> (Graph, Layering, ColorAssignment) {
        let (h, d) = random_stacked_triangulation(20, seed).unwrap();
        let inst = synth_product_instance(&h, 10, 3, seed).unwrap();
        let q = inst.graph.quotient(&inst.partition);
        let psi = color_simple_treewidth(&q, &d, p, None).unwrap();
        let col = compose_planar(&inst.graph, &inst.layering, &inst.partition, &psi, p, false).unwrap();
        assert!(col.palette_size() <= 3 * (p as u64 + 1) * psi.palette_size());
        (inst.graph, inst.layering, col)
    }

    #[test]
    fn synthetic_product_end_to_end() {
        for seed in 0..4 {
            let (g, _, col) = planar_instance(seed, 2);
            assert!(is_p_centered(&g, &col, 2, VerifyMode::Growth).unwrap().holds());
        }
    }

    #[test]
    fn genus_with_empty_z_offsets_planar_colors() {
        let (g, lay, col) = planar_instance(1, 1);
        let planar = PlanarPart { gplus: &g, layering: &lay, coloring: &col };
        let out = compose_genus(&g, &lay, &[], planar, 1, 1).unwrap();
        assert_eq!(out.palette_size(), 4 + col.palette_size());
        assert!((0..g.vertex_count()).all(|v| out.flat(v) == 4 + col.flat(v)));
    }

    #[test]
    fn genus_with_two_apices() {
        let p = 2;
        let (g0, lay0, col0) = planar_instance(3, p);
        let n0 = g0.vertex_count();
        let mut b = GraphBuilder::from_graph(&g0);
        let (a1, a2) = (b.add_vertex(), b.add_vertex());
        let mut layers = lay0.as_slice().to_vec();
        layers.extend([3, 3]);
        for v in 0..n0 {
            if (2..=4).contains(&layers[v]) && v % 2 == 0 {
                b.add_edge(a1, v);
            }
            if (2..=4).contains(&layers[v]) && v % 3 == 0 {
                b.add_edge(a2, v);
            }
        }
        b.add_edge(a1, a2);
        let g = b.build();
        let lay = Layering::new(layers);
        let planar = PlanarPart { gplus: &g0, layering: &lay0, coloring: &col0 };
        let col = compose_genus(&g, &lay, &[a1, a2], planar, p, 1).unwrap();
        assert_eq!((col.flat(a1), col.flat(a2)), (0, 1));
        assert!(is_p_centered(&g, &col, p, VerifyMode::Growth).unwrap().holds());
        assert!(compose_genus(&g, &lay, &[a1, a2], planar, p, 0).is_err());
    }
}
