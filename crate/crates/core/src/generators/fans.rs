//! Trees of fans `F(w, d)` and the graphs `G_k(w, d)` built from them.

use crate::decomposition::SimpleTreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// A generated graph with its root (always vertex 0), boundary and a simple
/// tree-decomposition.
#[derive(Clone, Debug)]
struct Built {
    n: usize,
    edges: Vec<(usize, usize)>,
    boundary: Vec<usize>,
    bags: Vec<Vec<usize>>,
    tree_edges: Vec<(usize, usize)>,
}

impl Built {
    fn graph(&self) -> Graph {
        let mut b = GraphBuilder::new(self.n);
        for &(u, v) in &self.edges {
            b.add_edge(u, v);
        }
        b.build()
    }

    fn decomposition(&self) -> SimpleTreeDecomposition {
        SimpleTreeDecomposition::new(self.bags.clone(), &self.tree_edges).expect("generated tree is simple")
    }
}

/// `F(w, d)`: vertex count `sum_{j=0}^{d} w^j`, or `None` on overflow.
fn fans_size(w: usize, d: usize) -> Option<u128> {
    let mut total: u128 = 0;
    let mut level: u128 = 1;
    for _ in 0..=d {
        total = total.checked_add(level)?;
        level = level.checked_mul(w as u128)?;
    }
    Some(total)
}

fn check_cap(size: Option<u128>, cap: usize, what: &str) -> Result<()> {
    match size {
        Some(s) if s <= cap as u128 => Ok(()),
        Some(s) => Err(Error::Resource(format!("{what} has {s} vertices, above the cap of {cap}"))),
        None => Err(Error::Resource(format!("{what} has more than 2^128 vertices, above the cap of {cap}"))),
    }
}

fn build_fans(w: usize, d: usize) -> Built {
    let n = fans_size(w, d).unwrap() as usize;
    let mut edges = Vec::new();
    let mut bags: Vec<Vec<usize>> = Vec::new();
    let mut tree_edges = Vec::new();
    // first_bag_with[v]: a bag of v's parent fan containing v.
    let mut bag_with = vec![usize::MAX; n];
    let mut level_start = 0;
    let mut level_len = 1;
    for _ in 0..d {
        let next_start = level_start + level_len;
        for i in 0..level_len {
            let u = level_start + i;
            let children: Vec<usize> = (0..w).map(|c| next_start + i * w + c).collect();
            for (c, &child) in children.iter().enumerate() {
                edges.push((u, child));
                if c > 0 {
                    edges.push((children[c - 1], child));
                }
            }
            let first = bags.len();
            if w == 1 {
                bags.push(vec![u, children[0]]);
                bag_with[children[0]] = first;
            } else {
                for c in 0..w - 1 {
                    bags.push(vec![u, children[c], children[c + 1]]);
                    if c > 0 {
                        tree_edges.push((first + c - 1, first + c));
                    }
                }
                for (c, &child) in children.iter().enumerate() {
                    bag_with[child] = first + c.min(w - 2);
                }
            }
            if bag_with[u] != usize::MAX {
                tree_edges.push((bag_with[u], first));
            }
        }
        level_start = next_start;
        level_len *= w;
    }
    if bags.is_empty() {
        bags.push(vec![0]);
    }
    let boundary = (level_start..level_start + level_len).collect();
    Built { n, edges, boundary, bags, tree_edges }
}

/// Tree of fans `F(w, d)`: the complete `w`-ary tree of depth `d` with the
/// children of every inner vertex joined by a path. Vertices are numbered
/// level by level, left to right.
pub fn tree_of_fans(w: usize, d: usize, size_cap: usize) -> Result<Graph> {
    if w < 1 {
        return Err(Error::input("tree of fans needs w >= 1"));
    }
    check_cap(fans_size(w, d), size_cap, &format!("F({w},{d})"))?;
    Ok(build_fans(w, d).graph())
}

/// Simple tree-decomposition of `F(w, d)` whose bags are the fan triangles.
pub fn tree_of_fans_decomposition(w: usize, d: usize, size_cap: usize) -> Result<SimpleTreeDecomposition> {
    if w < 1 {
        return Err(Error::input("tree of fans needs w >= 1"));
    }
    check_cap(fans_size(w, d), size_cap, &format!("F({w},{d})"))?;
    Ok(build_fans(w, d).decomposition())
}

/// Result of [`g_k_graph`].
#[derive(Clone, Debug)]
pub struct GkGraph {
    pub graph: Graph,
    /// Final boundary, the deepest level of the underlying tree of fans.
    pub boundary: Vec<usize>,
    /// A tree-decomposition of width at most `k` that is simple.
    pub decomposition: SimpleTreeDecomposition,
}

/// Root made universal; the root joins every bag.
fn make_universal(mut g: Built) -> Built {
    let mut b = GraphBuilder::new(g.n);
    for &(u, v) in &g.edges {
        b.add_edge(u, v);
    }
    for v in 1..g.n {
        b.add_edge(0, v);
    }
    g.edges = b.build().edges().collect();
    for bag in &mut g.bags {
        if !bag.contains(&0) {
            bag.insert(0, 0);
        }
    }
    g
}

/// Glues a copy of `block` onto every boundary vertex of `base`, identifying
/// the block root with that vertex.
fn glue(base: &Built, block: &Built) -> Built {
    let mut out = base.clone();
    let mut some_bag = vec![usize::MAX; base.n];
    for (i, bag) in base.bags.iter().enumerate() {
        for &v in bag {
            if some_bag[v] == usize::MAX {
                some_bag[v] = i;
            }
        }
    }
    let mut boundary = Vec::with_capacity(base.boundary.len() * block.boundary.len());
    for &u in &base.boundary {
        let offset = out.n;
        let map = |v: usize| if v == 0 { u } else { offset + v - 1 };
        out.n += block.n - 1;
        out.edges.extend(block.edges.iter().map(|&(a, b)| (map(a), map(b))));
        let bag_offset = out.bags.len();
        out.bags.extend(block.bags.iter().map(|bag| bag.iter().map(|&v| map(v)).collect()));
        out.tree_edges.extend(block.tree_edges.iter().map(|&(s, t)| (s + bag_offset, t + bag_offset)));
        // Every block bag holds the block root.
        out.tree_edges.push((some_bag[u], bag_offset));
        boundary.extend(block.boundary.iter().map(|&v| map(v)));
    }
    out.boundary = boundary;
    out
}

/// Vertex count and boundary size of `G_k(w, d)`.
fn gk_size(k: usize, w: usize, d: usize) -> Option<(u128, u128)> {
    let mut size = fans_size(w, d)?;
    let mut bound = (w as u128).checked_pow(d as u32)?;
    for _ in 3..=k {
        let (block_size, block_bound) = (size, bound);
        for _ in 1..d {
            size = size.checked_add(bound.checked_mul(block_size - 1)?)?;
            bound = bound.checked_mul(block_bound)?;
        }
    }
    Some((size, bound))
}

/// `G_k(w, d)`: `G_2 = F(w, d)`; `G_j(w, d, 1)` makes the root of `G_{j-1}(w, d)`
/// universal; `G_j(w, d, δ + 1)` glues a copy of `G_j(w, d, 1)` by its root onto
/// every boundary vertex of `G_j(w, d, δ)`; `G_j(w, d) = G_j(w, d, d)`.
pub fn g_k_graph(k: usize, w: usize, d: usize, size_cap: usize) -> Result<GkGraph> {
    if k < 2 || w < 1 {
        return Err(Error::input("G_k(w,d) needs k >= 2 and w >= 1"));
    }
    if k > 2 && d < 1 {
        return Err(Error::input("G_k(w,d) with k > 2 needs d >= 1"));
    }
    check_cap(gk_size(k, w, d).map(|s| s.0), size_cap, &format!("G_{k}({w},{d})"))?;
    let mut current = build_fans(w, d);
    for _ in 3..=k {
        let block = make_universal(current);
        current = block.clone();
        for _ in 1..d {
            current = glue(&current, &block);
        }
    }
    Ok(GkGraph { graph: current.graph(), boundary: current.boundary.clone(), decomposition: current.decomposition() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::check_decomposition;
    use crate::generators::classics;

    const CAP: usize = 1_000_000;

    #[test]
    fn fans_sizes() {
        let f = tree_of_fans(2, 2, CAP).unwrap();
        assert_eq!((f.vertex_count(), f.edge_count()), (7, 9));
        assert_eq!(tree_of_fans(5, 0, CAP).unwrap().vertex_count(), 1);
        assert!(matches!(tree_of_fans(10, 7, CAP), Err(Error::Resource(_))));
    }

    #[test]
    fn fans_decomposition_is_simple() {
        for w in 1..=4 {
            for d in 0..=4 {
                let g = tree_of_fans(w, d, CAP).unwrap();
                let dec = tree_of_fans_decomposition(w, d, CAP).unwrap();
                check_decomposition(&g, &dec, true).unwrap();
            }
        }
    }

    #[test]
    fn g2_is_tree_of_fans() {
        let g = g_k_graph(2, 2, 1, CAP).unwrap();
        assert_eq!(g.graph, classics::complete(3));
        assert_eq!(g.boundary, vec![1, 2]);
    }

    #[test]
    fn g3_of_2_1_is_triangle() {
        let g = g_k_graph(3, 2, 1, CAP).unwrap();
        assert_eq!(g.graph, classics::complete(3));
        assert_eq!(g.boundary, vec![1, 2]);
    }

    #[test]
    fn gk_sizes_match_construction() {
        for k in 2..=4 {
            for w in 1..=3 {
                for d in 1..=3 {
                    let Ok(g) = g_k_graph(k, w, d, 20_000) else { continue };
                    let (size, bound) = gk_size(k, w, d).unwrap();
                    assert_eq!(g.graph.vertex_count() as u128, size, "k={k} w={w} d={d}");
                    assert_eq!(g.boundary.len() as u128, bound);
                    assert!(g.decomposition.width() <= k);
                    check_decomposition(&g.graph, &g.decomposition, true).unwrap();
                }
            }
        }
    }
}
