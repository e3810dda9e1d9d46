//! p-centered colorings of graphs of bounded simple treewidth.
//!
//! Every bag of a simple tree-decomposition of width `k` is made a clique,
//! the resulting chordal graph `G+` is BFS-layered, and a vertex in layer `i`
//! gets `(i mod (p+1), β)` where `β` colors the layer graph `G+[V_i]`, whose
//! simple treewidth is at most `k - 1`. Layer graphs of width-3 inputs are
//! outerplanar and are colored by [`crate::outerplanar`].

use std::path::PathBuf;

use rayon::prelude::*;

use crate::color::ColorAssignment;
use crate::decomposition::{check_decomposition, SimpleTreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::io;
use crate::layering::bfs_layering;
use crate::outerplanar::{color_outerplanar, outerplanar_palette_bound};

/// Makes every bag of `d` a clique. `d` must be a valid simple
/// decomposition of `g`.
pub fn chordal_completion(g: &Graph, d: &SimpleTreeDecomposition) -> Result<Graph> {
    check_decomposition(g, d, true).map_err(|e| Error::input(format!("decomposition: {e}")))?;
    let mut b = GraphBuilder::from_graph(g);
    for bag in d.bags() {
        for (i, &u) in bag.iter().enumerate() {
            for &v in &bag[i + 1..] {
                b.add_edge(u, v);
            }
        }
    }
    let gplus = b.build();
    if !gplus.is_chordal() {
        return Err(Error::Invariant("completion of a tree-decomposition is not chordal".into()));
    }
    Ok(gplus)
}

/// Supplies simple tree-decompositions of layer graphs, which widths above 3
/// need. `layers` lists the layer index at each level of the recursion, so
/// `[i]` is `G+[V_i]` and `[i, j]` is layer `j` of that graph's completion.
/// Layer graphs use local vertex ids: the rank of the vertex among its layer.
pub trait LayerDecompositionSource: Sync {
    fn decomposition(&self, layers: &[usize], layer_graph: &Graph) -> Result<Option<SimpleTreeDecomposition>>;
}

/// Reads `dir/layer_i.td`, `dir/layer_i/layer_j.td`, and so on.
#[derive(Clone, Debug)]
pub struct DirectoryLayerSource {
    pub root: PathBuf,
}

impl DirectoryLayerSource {
    pub fn path_for(&self, layers: &[usize]) -> PathBuf {
        let mut path = self.root.clone();
        let (last, dirs) = layers.split_last().expect("at least one layer");
        for i in dirs {
            path.push(format!("layer_{i}"));
        }
        path.push(format!("layer_{last}.td"));
        path
    }
}

impl LayerDecompositionSource for DirectoryLayerSource {
    fn decomposition(&self, layers: &[usize], _: &Graph) -> Result<Option<SimpleTreeDecomposition>> {
        let path = self.path_for(layers);
        if !path.exists() {
            return Ok(None);
        }
        io::load_decomposition(path).map(Some)
    }
}

/// Palette size of [`color_simple_treewidth`] for width `k`:
/// `p + 1` for `k <= 1` and `(p+1)^{k-2} (p⌈log(p+1)⌉ + 2p + 1)` otherwise.
pub fn stw_palette_bound(k: usize, p: usize) -> u64 {
    match k {
        0 | 1 => (p + 1) as u64,
        _ => (p as u64 + 1).pow(k as u32 - 2) * outerplanar_palette_bound(p),
    }
}

/// Colors `g` using a simple tree-decomposition of width `k = d.width()`.
/// Widths above 3 need `source` to supply decompositions of the layer graphs.
pub fn color_simple_treewidth(
    g: &Graph,
    d: &SimpleTreeDecomposition,
    p: usize,
    source: Option<&dyn LayerDecompositionSource>,
) -> Result<ColorAssignment> {
    if p < 1 {
        return Err(Error::input("p must be at least 1"));
    }
    let k = d.width();
    let gplus = chordal_completion(g, d)?;
    match k {
        0 | 1 => {
            let layering = bfs_layering(&gplus, None)?;
            let alpha = (0..g.vertex_count()).map(|v| (layering.layer_of(v) % (p + 1)) as u64).collect();
            ColorAssignment::scalar((p + 1) as u64, alpha)
        }
        // A simple 2-tree is outerplanar; its own algorithm is the sharper one.
        2 => color_outerplanar(&gplus, p, None).map_err(|e| match e {
            Error::NotOuterplanar => Error::Precondition("width-2 completion is not outerplanar".into()),
            e => e,
        }),
        _ => {
            let flat = layered(&gplus, k, p, &[], source)?;
            let f = stw_palette_bound(k - 1, p);
            let tuples: Vec<Vec<u64>> = flat.into_iter().map(|(a, b)| vec![a, b]).collect();
            ColorAssignment::new(vec![(p + 1) as u64, f], &tuples)
        }
    }
}

/// `(α, flat β)` per vertex of a chordal graph of simple width `k >= 3`.
fn layered(
    gplus: &Graph,
    k: usize,
    p: usize,
    prefix: &[usize],
    source: Option<&dyn LayerDecompositionSource>,
) -> Result<Vec<(u64, u64)>> {
    let layering = bfs_layering(gplus, None)?;
    let layers = layering.layers();
    let betas: Vec<Vec<u64>> = layers
        .par_iter()
        .enumerate()
        .map(|(i, layer)| {
            let h = gplus.induced_subgraph(layer);
            if k == 3 {
                return color_outerplanar(&h, p, None).map(|c| c.flatten()).map_err(|e| match e {
                    Error::NotOuterplanar => Error::Precondition(format!(
                        "layer {i} is not outerplanar; the decomposition is not simple of width 3"
                    )),
                    e => e,
                });
            }
            let mut path = prefix.to_vec();
            path.push(i);
            let dec = source.map(|s| s.decomposition(&path, &h)).transpose()?.flatten().ok_or_else(|| {
                Error::Precondition(format!(
                    "width {k} needs a simple decomposition of layer graph {path:?}; none was supplied"
                ))
            })?;
            if dec.width() > k - 1 {
                return Err(Error::input(format!(
                    "layer graph {path:?} decomposition has width {} > {}",
                    dec.width(),
                    k - 1
                )));
            }
            let hplus = chordal_completion(&h, &dec)?;
            let inner = layered(&hplus, k - 1, p, &path, source)?;
            let f = stw_palette_bound(k - 2, p);
            Ok(inner.into_iter().map(|(a, b)| a * f + b).collect())
        })
        .collect::<Result<_>>()?;
    let mut out = vec![(0, 0); gplus.vertex_count()];
    for (i, layer) in layers.iter().enumerate() {
        for (local, &v) in layer.iter().enumerate() {
            out[v] = ((i % (p + 1)) as u64, betas[i][local]);
        }
    }
    Ok(out)
}
