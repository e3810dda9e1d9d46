//! p-centered colorings of outerplanar graphs with
//! `p⌈log(p+1)⌉ + 2p + 1` colors.
//!
//! The graph is completed to a maximal outerplanar graph `G+` and BFS-layered.
//! Every layer of `G+` induces a linear forest; its components (*layer
//! paths*) are colored periodically with `p+1` colors chosen outside a
//! forbidden set. Coloring a path `P` forbids, on the paths of the next `p`
//! layers whose shadow lies in `P`, the color `0_P` and the colors of the
//! shadow's ancestors in an in-order labeled binary tree.

mod layout;

use std::collections::{BTreeSet, HashMap};

pub use layout::{find_outerplanar_layout, is_non_crossing, OuterplanarLayout};

use crate::color::ColorAssignment;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::layering::{bfs_layering, Layering};

pub(crate) fn ceil_log2(x: usize) -> usize {
    (usize::BITS - x.saturating_sub(1).leading_zeros()) as usize
}

/// `p⌈log2(p+1)⌉ + 2p + 1`.
pub fn outerplanar_palette_bound(p: usize) -> u64 {
    (p * ceil_log2(p + 1) + 2 * p + 1) as u64
}

/// Adds edges to make `g` maximal outerplanar with the layout order as its
/// outer cycle: the cycle edges first, then a fan from the lowest-index
/// vertex of every inner face. Discovers a layout when none is given.
pub fn complete_to_maximal_outerplanar(
    g: &Graph,
    layout: Option<&OuterplanarLayout>,
) -> Result<(Graph, OuterplanarLayout)> {
    let layout = match layout {
        Some(l) => OuterplanarLayout::new(g, l.order().to_vec())?,
        None => find_outerplanar_layout(g).ok_or(Error::NotOuterplanar)?,
    };
    let n = g.vertex_count();
    let order = layout.order();
    let pos = layout.positions();
    let mut b = GraphBuilder::from_graph(g);
    if n == 2 {
        b.add_edge(0, 1);
    }
    if n < 3 {
        return Ok((b.build(), layout));
    }
    for i in 0..n {
        b.add_edge(order[i], order[(i + 1) % n]);
    }
    // Work in positions; every inner face lies below its extreme edge (a, b).
    let with_cycle = b.build();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, v) in with_cycle.edges() {
        adj[pos[u]].push(pos[v]);
        adj[pos[v]].push(pos[u]);
    }
    for a in &mut adj {
        a.sort_unstable();
    }
    // Largest neighbor of `x` in `(x, limit]`.
    let step = |x: usize, limit: usize| -> usize {
        let i = adj[x].partition_point(|&y| y <= limit);
        adj[x][i - 1]
    };
    let mut b = GraphBuilder::from_graph(&with_cycle);
    for a in 0..n {
        for &z in adj[a].iter().filter(|&&z| z >= a + 2) {
            let mut face = vec![a, step(a, z - 1)];
            while *face.last().unwrap() != z {
                face.push(step(*face.last().unwrap(), z));
            }
            if face.len() < 4 {
                continue;
            }
            let apex = face.iter().map(|&x| order[x]).min().unwrap();
            for &x in &face {
                if order[x] != apex {
                    b.add_edge(apex, order[x]);
                }
            }
        }
    }
    Ok((b.build(), layout))
}

/// Binary tree on labels `1..=p`, labeled in order and balanced by midpoint
/// splitting, so its height is `⌈log2(p+1)⌉`.
#[derive(Clone, Debug)]
pub struct InOrderTree {
    /// `parent[l]` for labels `1..=p`; 0 marks the root (and pads index 0).
    parent: Vec<usize>,
}

impl InOrderTree {
    pub fn new(p: usize) -> Self {
        fn build(lo: usize, hi: usize, up: usize, parent: &mut [usize]) {
            if lo > hi {
                return;
            }
            let mid = lo + (hi - lo) / 2;
            parent[mid] = up;
            if mid > lo {
                build(lo, mid - 1, mid, parent);
            }
            build(mid + 1, hi, mid, parent);
        }
        let mut parent = vec![0; p + 1];
        if p > 0 {
            build(1, p, 0, &mut parent);
        }
        InOrderTree { parent }
    }

    pub fn size(&self) -> usize {
        self.parent.len() - 1
    }

    /// `F(ℓ)`: the label itself and all its ancestors; empty for `ℓ = 0`.
    pub fn ancestors(&self, label: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut l = label;
        while l != 0 {
            out.push(l);
            l = self.parent[l];
        }
        out
    }

    /// Maximum number of nodes on a root-to-leaf path.
    pub fn height(&self) -> usize {
        (1..=self.size()).map(|l| self.ancestors(l).len()).max().unwrap_or(0)
    }
}

/// A connected component of the graph strictly above a layer, with its
/// shadow (the neighbors it has in that layer).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shadow {
    pub component: Vec<usize>,
    pub shadow: Vec<usize>,
}

/// Shadows in layer `i` of the components above it. Requires a chordal
/// graph; fails if some shadow is not a clique.
pub fn shadows(gplus: &Graph, layering: &Layering, i: usize) -> Result<Vec<Shadow>> {
    if !gplus.is_chordal() {
        return Err(Error::Precondition("shadows need a chordal graph".into()));
    }
    let above: Vec<usize> = (0..gplus.vertex_count()).filter(|&v| layering.layer_of(v) > i).collect();
    let mut out = Vec::new();
    for component in gplus.connected_components(Some(&above)) {
        let shadow: BTreeSet<usize> = component
            .iter()
            .flat_map(|&v| gplus.neighbors(v).iter().copied())
            .filter(|&w| layering.layer_of(w) == i)
            .collect();
        let shadow: Vec<usize> = shadow.into_iter().collect();
        for (x, &a) in shadow.iter().enumerate() {
            for &b in &shadow[x + 1..] {
                if !gplus.has_edge(a, b) {
                    return Err(Error::Precondition(format!("shadow {shadow:?} in layer {i} is not a clique")));
                }
            }
        }
        out.push(Shadow { component, shadow });
    }
    Ok(out)
}

/// Counters from one run of [`color_outerplanar_traced`]; all structural
/// checks they count passed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OuterplanarTrace {
    pub layers: usize,
    pub layer_paths: usize,
    pub shadow_checks: usize,
    pub max_forbidden: usize,
    pub max_forbidden_growth: usize,
}

struct LayerPath {
    level: usize,
    vertices: Vec<usize>,
}

/// Splits each layer into its components and checks each is a path,
/// oriented from its lower-index endpoint.
fn layer_paths(g: &Graph, layering: &Layering) -> Result<Vec<LayerPath>> {
    let mut paths = Vec::new();
    for (level, layer) in layering.layers().into_iter().enumerate() {
        for comp in g.connected_components(Some(&layer)) {
            let inner = |v: usize| -> Vec<usize> {
                g.neighbors(v).iter().copied().filter(|&w| layering.layer_of(w) == level).collect()
            };
            let degrees: Vec<usize> = comp.iter().map(|&v| inner(v).len()).collect();
            let edges: usize = degrees.iter().sum::<usize>() / 2;
            if edges + 1 != comp.len() || degrees.iter().any(|&d| d > 2) {
                return Err(Error::Invariant(format!("layer {level} component {comp:?} is not a path")));
            }
            let start = comp.iter().zip(&degrees).filter(|&(_, &d)| d <= 1).map(|(&v, _)| v).min().unwrap();
            let mut vertices = vec![start];
            let mut prev = usize::MAX;
            let mut cur = start;
            while let Some(&next) = inner(cur).iter().find(|&&w| w != prev) {
                vertices.push(next);
                prev = cur;
                cur = next;
            }
            paths.push(LayerPath { level, vertices });
        }
    }
    Ok(paths)
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
}

/// p-centered coloring of an outerplanar graph with at most
/// [`outerplanar_palette_bound`] colors.
pub fn color_outerplanar(g: &Graph, p: usize, layout: Option<&OuterplanarLayout>) -> Result<ColorAssignment> {
    color_outerplanar_traced(g, p, layout).map(|(c, _)| c)
}

/// As [`color_outerplanar`], also reporting what the structural checks saw.
pub fn color_outerplanar_traced(
    g: &Graph,
    p: usize,
    layout: Option<&OuterplanarLayout>,
) -> Result<(ColorAssignment, OuterplanarTrace)> {
    if p < 1 {
        return Err(Error::input("p must be at least 1"));
    }
    let bound = outerplanar_palette_bound(p);
    let n = g.vertex_count();
    if n == 0 {
        return Ok((ColorAssignment::scalar(bound, Vec::new())?, OuterplanarTrace::default()));
    }
    let (gplus, _) = complete_to_maximal_outerplanar(g, layout)?;
    if !gplus.is_chordal() {
        return Err(Error::Invariant("completion is not chordal".into()));
    }
    let layering = bfs_layering(&gplus, None)?;
    let depth = layering.layer_count();
    let paths = layer_paths(&gplus, &layering)?;
    let mut path_of = vec![0; n];
    let mut label = vec![0; n];
    let mut by_level: Vec<Vec<usize>> = vec![Vec::new(); depth];
    for (id, path) in paths.iter().enumerate() {
        by_level[path.level].push(id);
        for (k, &v) in path.vertices.iter().enumerate() {
            path_of[v] = id;
            label[v] = k % (p + 1);
        }
    }
    let mut trace = OuterplanarTrace { layers: depth, layer_paths: paths.len(), ..Default::default() };

    // donors[i] = (path P' at a level in i+1..=i+p, its shadow in layer i),
    // gathered top-down while the components above i are merged.
    let mut donors: Vec<Vec<(usize, Vec<usize>)>> = vec![Vec::new(); depth];
    let mut dsu = Dsu((0..n).collect());
    let layers = layering.layers();
    for i in (0..depth.saturating_sub(1)).rev() {
        for &v in &layers[i + 1] {
            for &w in gplus.neighbors(v) {
                if layering.layer_of(w) > i {
                    dsu.union(v, w);
                }
            }
        }
        let mut shadow_of: HashMap<usize, BTreeSet<usize>> = HashMap::new();
        for &v in &layers[i + 1] {
            for &w in gplus.neighbors(v).iter().filter(|&&w| layering.layer_of(w) == i) {
                shadow_of.entry(dsu.find(v)).or_default().insert(w);
            }
        }
        for k in i + 1..=(i + p).min(depth - 1) {
            for &pid in &by_level[k] {
                let root = dsu.find(paths[pid].vertices[0]);
                let s: Vec<usize> = shadow_of.get(&root).map(|s| s.iter().copied().collect()).unwrap_or_default();
                let ok = match s[..] {
                    [_] => true,
                    [a, b] => gplus.has_edge(a, b) && path_of[a] == path_of[b],
                    _ => false,
                };
                if !ok {
                    return Err(Error::Invariant(format!(
                        "shadow {s:?} in layer {i} of the path {:?} is not a clique of size 1 or 2",
                        paths[pid].vertices
                    )));
                }
                trace.shadow_checks += 1;
                donors[i].push((pid, s));
            }
        }
    }

    let tree = InOrderTree::new(p);
    let log = ceil_log2(p + 1);
    let mut forbidden: Vec<BTreeSet<u64>> = vec![BTreeSet::new(); paths.len()];
    let mut palette_of: Vec<Vec<u64>> = vec![Vec::new(); paths.len()];
    let mut color = vec![0u64; n];
    for i in 0..depth {
        for &pid in &by_level[i] {
            let chosen: Vec<u64> = (0..bound).filter(|c| !forbidden[pid].contains(c)).take(p + 1).collect();
            if chosen.len() < p + 1 {
                return Err(Error::Invariant(format!(
                    "only {} colors left for the layer path {:?}",
                    chosen.len(),
                    paths[pid].vertices
                )));
            }
            for &v in &paths[pid].vertices {
                color[v] = chosen[label[v]];
            }
            palette_of[pid] = chosen;
        }
        for (target, s) in &donors[i] {
            let pal = &palette_of[path_of[s[0]]];
            let mut add: BTreeSet<u64> = BTreeSet::from([pal[0]]);
            for &v in s {
                add.extend(tree.ancestors(label[v]).into_iter().map(|l| pal[l]));
            }
            if add.len() > log + 1 {
                return Err(Error::Invariant(format!(
                    "forbidden-set update of size {} exceeds {}",
                    add.len(),
                    log + 1
                )));
            }
            trace.max_forbidden_growth = trace.max_forbidden_growth.max(add.len());
            let f = &mut forbidden[*target];
            f.extend(add);
            if f.len() > p * log + p {
                return Err(Error::Invariant(format!("forbidden set of size {} exceeds {}", f.len(), p * log + p)));
            }
            trace.max_forbidden = trace.max_forbidden.max(f.len());
        }
    }
    Ok((ColorAssignment::scalar(bound, color)?, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{classics, random_maximal_outerplanar, tree_of_fans};
    use crate::verifier::{is_p_centered, VerifyMode};

    #[test]
    fn bounds() {
        assert_eq!(outerplanar_palette_bound(1), 4);
        assert_eq!(outerplanar_palette_bound(2), 9);
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(4), 2);
        assert_eq!(ceil_log2(5), 3);
    }

    #[test]
    fn completion_examples() {
        let c4 = classics::cycle(4);
        let lay = OuterplanarLayout::new(&c4, vec![0, 1, 2, 3]).unwrap();
        let (gp, _) = complete_to_maximal_outerplanar(&c4, Some(&lay)).unwrap();
        assert_eq!(gp.edge_count(), 5);
        assert!(gp.has_edge(0, 2));
        let k3 = classics::complete(3);
        assert_eq!(complete_to_maximal_outerplanar(&k3, None).unwrap().0, k3);
        assert!(matches!(complete_to_maximal_outerplanar(&classics::complete(4), None), Err(Error::NotOuterplanar)));
    }

    #[test]
    fn completion_is_maximal_outerplanar() {
        for seed in 0..40 {
            let g = crate::generators::random_bounded_degree(12, 2, 9, seed).unwrap();
            let (gp, lay) = complete_to_maximal_outerplanar(&g, None).unwrap();
            assert_eq!(gp.edge_count(), 2 * 12 - 3);
            assert!(is_non_crossing(&gp, lay.order()));
            assert!(gp.is_chordal());
            assert!(g.edges().all(|(u, v)| gp.has_edge(u, v)));
        }
    }

    #[test]
    fn in_order_tree() {
        for p in 1..=20 {
            let t = InOrderTree::new(p);
            assert_eq!(t.height(), ceil_log2(p + 1), "p={p}");
            for l in 1..p {
                let (a, b): (BTreeSet<_>, BTreeSet<_>) =
                    (t.ancestors(l).into_iter().collect(), t.ancestors(l + 1).into_iter().collect());
                assert!(a.is_subset(&b) || b.is_subset(&a));
            }
        }
        assert!(InOrderTree::new(3).ancestors(0).is_empty());
    }

    #[test]
    fn shadow_examples() {
        // Two triangles stacked: 0 | 1 2 | 3 4 with 3 over edge 12, 4 over 23.
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap();
        let lay = bfs_layering(&g, None).unwrap();
        let s = shadows(&g, &lay, 1).unwrap();
        assert_eq!(s, vec![Shadow { component: vec![3, 4], shadow: vec![1, 2] }]);
        assert!(shadows(&g, &lay, 2).unwrap().is_empty());
    }

    #[test]
    fn fans_and_random() {
        let f = tree_of_fans(2, 3, 1000).unwrap();
        assert_eq!(f.vertex_count(), 15);
        let col = color_outerplanar(&f, 2, None).unwrap();
        assert!(col.colors_used() <= 9);
        assert!(is_p_centered(&f, &col, 2, VerifyMode::Subsets).unwrap().holds());
        for seed in 0..10 {
            let (g, _) = random_maximal_outerplanar(40, seed).unwrap();
            for p in 1..=3 {
                let col = color_outerplanar(&g, p, None).unwrap();
                assert!(is_p_centered(&g, &col, p, VerifyMode::Growth).unwrap().holds());
            }
        }
    }

    #[test]
    fn disconnected_input() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (4, 5)]).unwrap();
        let col = color_outerplanar(&g, 2, None).unwrap();
        assert!(is_p_centered(&g, &col, 2, VerifyMode::Subsets).unwrap().holds());
    }
}
