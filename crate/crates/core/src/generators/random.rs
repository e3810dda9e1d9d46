//! Seeded random members of the bounded-degree, outerplanar and bounded
//! simple treewidth classes.

use rand::Rng;

use super::{random_permutation, rng};
use crate::decomposition::SimpleTreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// Applies `perm` (old -> new) to a graph and its bags.
fn relabel(
    n: usize,
    edges: &[(usize, usize)],
    bags: Vec<Vec<usize>>,
    tree: &[(usize, usize)],
    perm: &[usize],
) -> (Graph, SimpleTreeDecomposition) {
    let mut b = GraphBuilder::new(n);
    for &(u, v) in edges {
        b.add_edge(perm[u], perm[v]);
    }
    let bags = bags.into_iter().map(|bag| bag.into_iter().map(|v| perm[v]).collect()).collect();
    let dec = SimpleTreeDecomposition::new(bags, tree).expect("generated tree");
    (b.build(), dec)
}

/// Random triangulation of a convex `n`-gon (a maximal outerplanar graph),
/// with randomly permuted labels. The decomposition's bags are the triangles.
pub fn random_maximal_outerplanar(n: usize, seed: u64) -> Result<(Graph, SimpleTreeDecomposition)> {
    if n < 3 {
        return Err(Error::input("maximal outerplanar generator needs n >= 3"));
    }
    let mut rng = rng(seed);
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let mut bags = Vec::new();
    let mut tree = Vec::new();
    // (lo, hi, parent bag) for polygon pieces still to triangulate.
    let mut stack = vec![(0, n - 1, usize::MAX)];
    while let Some((lo, hi, parent)) = stack.pop() {
        if hi - lo < 2 {
            continue;
        }
        let mid = rng.gen_range(lo + 1..hi);
        let id = bags.len();
        bags.push(vec![lo, mid, hi]);
        if parent != usize::MAX {
            tree.push((parent, id));
        }
        if mid - lo >= 2 {
            edges.push((lo, mid));
        }
        if hi - mid >= 2 {
            edges.push((mid, hi));
        }
        stack.push((mid, hi, id));
        stack.push((lo, mid, id));
    }
    let perm = random_permutation(n, &mut rng);
    Ok(relabel(n, &edges, bags, &tree, &perm))
}

/// Stacked triangulation: start from a triangle and repeatedly insert a
/// vertex into a uniformly random face (the outer face included). Bags are
/// the `K4`s created by each insertion.
pub fn random_stacked_triangulation(n: usize, seed: u64) -> Result<(Graph, SimpleTreeDecomposition)> {
    if n < 3 {
        return Err(Error::input("stacked triangulation needs n >= 3"));
    }
    let mut rng = rng(seed);
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    if n == 3 {
        let perm = random_permutation(n, &mut rng);
        return Ok(relabel(n, &edges, vec![vec![0, 1, 2]], &[], &perm));
    }
    // (face, bag that created it); the two sides of the first triangle have no creator yet.
    let mut faces: Vec<([usize; 3], usize)> = vec![([0, 1, 2], usize::MAX), ([0, 1, 2], usize::MAX)];
    let mut bags: Vec<Vec<usize>> = Vec::new();
    let mut tree = Vec::new();
    for v in 3..n {
        let idx = rng.gen_range(0..faces.len());
        let ([a, b, c], creator) = faces.swap_remove(idx);
        let id = bags.len();
        bags.push(vec![a, b, c, v]);
        match creator {
            usize::MAX if id > 0 => tree.push((0, id)),
            usize::MAX => {}
            parent => tree.push((parent, id)),
        }
        edges.extend([(a, v), (b, v), (c, v)]);
        faces.extend([([a, b, v], id), ([a, c, v], id), ([b, c, v], id)]);
    }
    let perm = random_permutation(n, &mut rng);
    Ok(relabel(n, &edges, bags, &tree, &perm))
}

/// Random simple `k`-tree: grow from a `(k+1)`-clique, each time attaching a
/// new vertex to a `k`-clique that lies in only one bag so far.
pub fn random_simple_ktree(k: usize, n: usize, seed: u64) -> Result<(Graph, SimpleTreeDecomposition)> {
    if k < 1 || n < k + 1 {
        return Err(Error::input(format!("simple {k}-tree needs k >= 1 and n >= k + 1")));
    }
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for u in 0..=k {
        for v in u + 1..=k {
            edges.push((u, v));
        }
    }
    let mut bags: Vec<Vec<usize>> = vec![(0..=k).collect()];
    let mut tree = Vec::new();
    // (k-clique, owning bag); each is removed once a second bag uses it.
    let mut open: Vec<(Vec<usize>, usize)> =
        (0..=k).map(|skip| ((0..=k).filter(|&x| x != skip).collect(), 0)).collect();
    for v in k + 1..n {
        let idx = rng.gen_range(0..open.len());
        let (clique, owner) = open.swap_remove(idx);
        let id = bags.len();
        let mut bag = clique.clone();
        bag.push(v);
        tree.push((owner, id));
        edges.extend(clique.iter().map(|&u| (u, v)));
        for skip in 0..clique.len() {
            let mut sub: Vec<usize> = clique.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &u)| u).collect();
            sub.push(v);
            open.push((sub, id));
        }
        bags.push(bag);
    }
    let perm = random_permutation(n, &mut rng);
    Ok(relabel(n, &edges, bags, &tree, &perm))
}

/// Random graph with `m` edges and maximum degree at most `delta`, by
/// rejection of proposals that would repeat an edge or exceed the degree cap.
pub fn random_bounded_degree(n: usize, delta: usize, m: usize, seed: u64) -> Result<Graph> {
    if m > n * delta / 2 {
        return Err(Error::input(format!("{m} edges cannot fit in {n} vertices of degree <= {delta}")));
    }
    let mut rng = rng(seed);
    let mut b = GraphBuilder::new(n);
    let mut degree = vec![0usize; n];
    let budget = 200 * m + 10_000;
    let mut placed = 0;
    for _ in 0..budget {
        if placed == m {
            break;
        }
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || degree[u] >= delta || degree[v] >= delta || b.has_edge(u, v) {
            continue;
        }
        b.add_edge(u, v);
        degree[u] += 1;
        degree[v] += 1;
        placed += 1;
    }
    if placed < m {
        return Err(Error::Resource(format!("placed only {placed} of {m} edges within {budget} proposals")));
    }
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::check_decomposition;
    use crate::generators::classics;

    #[test]
    fn outerplanar_triangle() {
        let (g, d) = random_maximal_outerplanar(3, 9).unwrap();
        assert_eq!(g, classics::complete(3));
        check_decomposition(&g, &d, true).unwrap();
    }

    #[test]
    fn certificates_are_valid_and_simple() {
        for seed in 0..100 {
            let n = 4 + (seed as usize % 47);
            let (g, d) = random_maximal_outerplanar(n, seed).unwrap();
            assert_eq!(g.edge_count(), 2 * n - 3);
            check_decomposition(&g, &d, true).unwrap();
            for k in [2, 3] {
                let (g, d) = random_simple_ktree(k, n, seed).unwrap();
                assert_eq!(d.width(), k);
                check_decomposition(&g, &d, true).unwrap();
            }
            let (g, d) = random_stacked_triangulation(n, seed).unwrap();
            check_decomposition(&g, &d, true).unwrap();
        }
    }

    #[test]
    fn stacked_edge_count() {
        for n in [3, 4, 5, 6, 20] {
            let (g, _) = random_stacked_triangulation(n, 1).unwrap();
            assert_eq!(g.edge_count(), 3 * n - 6);
        }
    }

    #[test]
    fn bounded_degree_examples() {
        let g = random_bounded_degree(5, 2, 5, 3).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert!(g.max_degree() <= 2);
        assert_eq!(random_bounded_degree(40, 3, 50, 7).unwrap(), random_bounded_degree(40, 3, 50, 7).unwrap());
        assert!(random_bounded_degree(5, 2, 6, 3).is_err());
    }

    #[test]
    fn deterministic_under_seed() {
        assert_eq!(random_stacked_triangulation(30, 5).unwrap().0, random_stacked_triangulation(30, 5).unwrap().0);
        assert_ne!(random_stacked_triangulation(30, 5).unwrap().0, random_stacked_triangulation(30, 6).unwrap().0);
    }
}
