//! Tree-decompositions with a simplicity check.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A tree-decomposition: a tree over bag indices plus one vertex set per bag.
///
/// The type is named for its main use; [`validate_decomposition`] decides
/// whether a given instance is actually simple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleTreeDecomposition {
    tree: Graph,
    bags: Vec<Vec<usize>>,
    width: usize,
}

impl SimpleTreeDecomposition {
    /// Bags are sorted on construction; the width is derived from the largest
    /// bag. Tree edges index into `bags`.
    pub fn new(mut bags: Vec<Vec<usize>>, tree_edges: &[(usize, usize)]) -> Result<Self> {
        for bag in &mut bags {
            bag.sort_unstable();
        }
        let tree =
            Graph::from_edges(bags.len(), tree_edges).map_err(|e| Error::input(format!("decomposition tree: {e}")))?;
        let width = bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1);
        Ok(SimpleTreeDecomposition { tree, bags, width })
    }

    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn bag_count(&self) -> usize {
        self.bags.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Renames every vertex `v` to `map[v]`.
    pub fn relabel(&self, map: &[usize]) -> Self {
        let bags = self
            .bags
            .iter()
            .map(|b| {
                let mut nb: Vec<usize> = b.iter().map(|&v| map[v]).collect();
                nb.sort_unstable();
                nb
            })
            .collect();
        SimpleTreeDecomposition { tree: self.tree.clone(), bags, width: self.width }
    }
}

/// Checks a decomposition against `g`, returning the first failed condition.
pub fn check_decomposition(
    g: &Graph,
    d: &SimpleTreeDecomposition,
    require_simple: bool,
) -> std::result::Result<(), String> {
    let n = g.vertex_count();
    let b = d.bag_count();
    if b == 0 {
        return if n == 0 { Ok(()) } else { Err("no bags".into()) };
    }
    if d.tree.vertex_count() != b || d.tree.edge_count() + 1 != b || !d.tree.is_connected() {
        return Err("bag graph is not a tree".into());
    }
    let mut bags_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, bag) in d.bags.iter().enumerate() {
        if bag.is_empty() {
            return Err(format!("bag {i} is empty"));
        }
        if bag.windows(2).any(|w| w[0] == w[1]) {
            return Err(format!("bag {i} repeats a vertex"));
        }
        for &v in bag {
            if v >= n {
                return Err(format!("bag {i} names vertex {v} outside the graph"));
            }
            bags_of[v].push(i);
        }
    }
    let real_width = d.bags.iter().map(Vec::len).max().unwrap() - 1;
    if real_width != d.width {
        return Err(format!("declared width {} but largest bag gives {real_width}", d.width));
    }
    for (v, list) in bags_of.iter().enumerate() {
        if list.is_empty() {
            return Err(format!("vertex {v} is in no bag"));
        }
        // A subforest of a tree is connected iff it has one edge fewer than nodes.
        let inner_edges = d
            .tree
            .edges()
            .filter(|&(s, t)| d.bags[s].binary_search(&v).is_ok() && d.bags[t].binary_search(&v).is_ok())
            .count();
        if inner_edges + 1 != list.len() {
            return Err(format!("bags containing vertex {v} are not connected in the tree"));
        }
    }
    for (u, v) in g.edges() {
        if !bags_of[u].iter().any(|&i| d.bags[i].binary_search(&v).is_ok()) {
            return Err(format!("edge {u}-{v} is not covered"));
        }
    }
    if require_simple {
        // Simplicity is defined for k >= 1; an edgeless width-0 decomposition is
        // judged with k = 1.
        let k = d.width.max(1);
        let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
        for bag in &d.bags {
            if bag.len() < k {
                continue;
            }
            for subset in k_subsets(bag, k) {
                let c = seen.entry(subset.clone()).or_default();
                *c += 1;
                if *c > 2 {
                    return Err(format!("vertex set {subset:?} lies in more than two bags"));
                }
            }
        }
    }
    Ok(())
}

/// True iff `d` is a tree-decomposition of `g` of its declared width, and
/// (when `require_simple`) every set of `width` vertices lies in at most two
/// bags.
pub fn validate_decomposition(g: &Graph, d: &SimpleTreeDecomposition, require_simple: bool) -> bool {
    check_decomposition(g, d, require_simple).is_ok()
}

/// Subsets of size `k` of a bag whose size is `k` or `k + 1`.
fn k_subsets(bag: &[usize], k: usize) -> Vec<Vec<usize>> {
    if bag.len() == k {
        return vec![bag.to_vec()];
    }
    (0..bag.len()).map(|skip| bag.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::classics;

    #[test]
    fn triangle_single_bag() {
        let d = SimpleTreeDecomposition::new(vec![vec![2, 0, 1]], &[]).unwrap();
        assert!(validate_decomposition(&classics::complete(3), &d, true));
        assert_eq!(d.width(), 2);
    }

    #[test]
    fn uncovered_edge() {
        let d = SimpleTreeDecomposition::new(vec![vec![0], vec![1]], &[(0, 1)]).unwrap();
        let err = check_decomposition(&classics::path(2), &d, false).unwrap_err();
        assert!(err.contains("not covered"), "{err}");
    }

    #[test]
    fn stacking_three_times_on_one_edge_is_not_simple() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)]).unwrap();
        let d =
            SimpleTreeDecomposition::new(vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4]], &[(0, 1), (0, 2)]).unwrap();
        assert!(validate_decomposition(&g, &d, false));
        assert!(!validate_decomposition(&g, &d, true));
        // Twice is fine.
        let g4 = g.induced_subgraph(&[0, 1, 2, 3]);
        let d4 = SimpleTreeDecomposition::new(vec![vec![0, 1, 2], vec![0, 1, 3]], &[(0, 1)]).unwrap();
        assert!(validate_decomposition(&g4, &d4, true));
    }

    #[test]
    fn disconnected_subtree_rejected() {
        let g = classics::path(3);
        let d = SimpleTreeDecomposition::new(vec![vec![0, 1], vec![2], vec![1, 2]], &[(0, 1), (1, 2)]).unwrap();
        let err = check_decomposition(&g, &d, false).unwrap_err();
        assert!(err.contains("vertex 1"), "{err}");
    }

    #[test]
    fn non_tree_rejected() {
        let g = classics::path(2);
        let d = SimpleTreeDecomposition::new(vec![vec![0, 1], vec![0, 1]], &[]).unwrap();
        assert!(!validate_decomposition(&g, &d, false));
    }
}
