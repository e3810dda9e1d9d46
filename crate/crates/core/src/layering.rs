//! Layerings and vertex partitions.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Assignment of a non-negative layer index to each vertex.
///
/// A layering of a graph requires every edge to join equal or consecutive
/// layers; [`validate_layering`] checks that against a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layering {
    layer_of: Vec<usize>,
    layer_count: usize,
}

impl Layering {
    pub fn new(layer_of: Vec<usize>) -> Self {
        let layer_count = layer_of.iter().max().map_or(0, |&m| m + 1);
        Layering { layer_of, layer_count }
    }

    pub fn layer_of(&self, v: usize) -> usize {
        self.layer_of[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.layer_of
    }

    pub fn vertex_count(&self) -> usize {
        self.layer_of.len()
    }

    pub fn layer_count(&self) -> usize {
        self.layer_count
    }

    /// Vertices of each layer, ascending.
    pub fn layers(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.layer_count];
        for (v, &l) in self.layer_of.iter().enumerate() {
            out[l].push(v);
        }
        out
    }
}

/// Assignment of each vertex to exactly one class; class ids are dense
/// (`0..class_count`) and every class is non-empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    class_of: Vec<usize>,
    class_count: usize,
}

impl VertexPartition {
    pub fn new(class_of: Vec<usize>) -> Result<Self> {
        let class_count = class_of.iter().max().map_or(0, |&m| m + 1);
        let mut used = vec![false; class_count];
        for &c in &class_of {
            used[c] = true;
        }
        if let Some(c) = used.iter().position(|&u| !u) {
            return Err(Error::input(format!("partition class {c} is empty")));
        }
        Ok(VertexPartition { class_of, class_count })
    }

    /// Every vertex in its own class.
    pub fn identity(n: usize) -> Self {
        VertexPartition { class_of: (0..n).collect(), class_count: n }
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.class_of
    }

    pub fn vertex_count(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.class_count];
        for (v, &c) in self.class_of.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

/// BFS-layering: each vertex's layer is its distance from the root of its
/// component. Without explicit roots, the smallest vertex of each component
/// is used.
pub fn bfs_layering(g: &Graph, roots: Option<&[usize]>) -> Result<Layering> {
    let n = g.vertex_count();
    let components = g.connected_components(None);
    let roots: Vec<usize> = match roots {
        None => components.iter().map(|c| c[0]).collect(),
        Some(r) => {
            if r.len() != components.len() {
                return Err(Error::input(format!("{} roots given for {} components", r.len(), components.len())));
            }
            let mut comp_of = vec![0; n];
            for (i, c) in components.iter().enumerate() {
                for &v in c {
                    comp_of[v] = i;
                }
            }
            let mut hit = vec![false; components.len()];
            for &v in r {
                if v >= n {
                    return Err(Error::input(format!("root {v} out of range")));
                }
                if std::mem::replace(&mut hit[comp_of[v]], true) {
                    return Err(Error::input(format!("two roots in the component of {v}")));
                }
            }
            r.to_vec()
        }
    };
    let mut layer = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for &r in &roots {
        layer[r] = 0;
        queue.push_back(r);
    }
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if layer[w] == usize::MAX {
                layer[w] = layer[v] + 1;
                queue.push_back(w);
            }
        }
    }
    Ok(Layering::new(layer))
}

/// True iff `layering` covers `g` and every edge spans at most one layer.
pub fn validate_layering(g: &Graph, layering: &Layering) -> bool {
    layering.vertex_count() == g.vertex_count()
        && g.edges().all(|(u, v)| layering.layer_of(u).abs_diff(layering.layer_of(v)) <= 1)
}

/// The first `(class, layer)` pair whose intersection exceeds `ell`, if any.
pub fn layered_width_excess(layering: &Layering, part: &VertexPartition, ell: usize) -> Option<(usize, usize)> {
    let mut count: HashMap<(usize, usize), usize> = HashMap::new();
    for v in 0..part.vertex_count() {
        let key = (part.class_of(v), layering.layer_of(v));
        let c = count.entry(key).or_default();
        *c += 1;
        if *c > ell {
            return Some(key);
        }
    }
    None
}

/// True iff `layering` is a valid layering of `g` and every class of `part`
/// meets every layer in at most `ell` vertices.
pub fn validate_partition_layered_width(g: &Graph, layering: &Layering, part: &VertexPartition, ell: usize) -> bool {
    part.vertex_count() == g.vertex_count()
        && validate_layering(g, layering)
        && layered_width_excess(layering, part, ell).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::classics;

    #[test]
    fn bfs_examples() {
        assert_eq!(bfs_layering(&classics::path(3), Some(&[0])).unwrap().as_slice(), &[0, 1, 2]);
        assert_eq!(bfs_layering(&Graph::empty(1), None).unwrap().as_slice(), &[0]);
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(bfs_layering(&two, None).unwrap().as_slice(), &[0, 1, 0, 1]);
        assert_eq!(bfs_layering(&two, Some(&[1, 3])).unwrap().as_slice(), &[1, 0, 1, 0]);
    }

    #[test]
    fn bfs_root_errors() {
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(bfs_layering(&two, Some(&[0])).is_err());
        assert!(bfs_layering(&two, Some(&[0, 1])).is_err());
        assert!(bfs_layering(&two, Some(&[0, 9])).is_err());
    }

    #[test]
    fn validation_examples() {
        let p3 = classics::path(3);
        let layers = Layering::new(vec![0, 1, 2]);
        assert!(validate_partition_layered_width(&p3, &layers, &VertexPartition::identity(3), 1));
        let edge = classics::path(2);
        assert!(!validate_layering(&edge, &Layering::new(vec![0, 2])));
        let flat = Layering::new(vec![0, 0, 1]);
        let part = VertexPartition::new(vec![0, 0, 1]).unwrap();
        assert!(!validate_partition_layered_width(&p3, &flat, &part, 1));
        assert_eq!(layered_width_excess(&flat, &part, 1), Some((0, 0)));
    }

    #[test]
    fn partition_rejects_gaps() {
        assert!(VertexPartition::new(vec![0, 2]).is_err());
    }
}
