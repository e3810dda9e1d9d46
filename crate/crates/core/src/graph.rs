//! Undirected simple graphs on dense vertex indices `0..n`.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::layering::VertexPartition;

/// An undirected simple graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

/// Incremental graph construction that silently drops repeated edges.
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    adj: Vec<BTreeSet<usize>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder { adj: vec![BTreeSet::new(); n] }
    }

    /// Starts from an existing graph, for building supergraphs.
    pub fn from_graph(g: &Graph) -> Self {
        GraphBuilder { adj: g.adj.iter().map(|nb| nb.iter().copied().collect()).collect() }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// Appends a fresh vertex and returns its index.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(BTreeSet::new());
        self.adj.len() - 1
    }

    /// Adds `uv`; returns `false` if the edge was already present.
    ///
    /// # Panics
    /// On self-loops or out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "self-loop at vertex {u}");
        assert!(u < self.adj.len() && v < self.adj.len(), "edge {u}-{v} out of range");
        let fresh = self.adj[u].insert(v);
        self.adj[v].insert(u);
        fresh
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn build(self) -> Graph {
        let adj: Vec<Vec<usize>> = self.adj.into_iter().map(|s| s.into_iter().collect()).collect();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { adj, edge_count }
    }
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], edge_count: 0 }
    }

    /// Builds a graph from an edge list, rejecting self-loops, out-of-range
    /// endpoints and repeated edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::input(format!("edge {u}-{v} out of range for {n} vertices")));
            }
            if !b.add_edge(u, v) {
                return Err(Error::input(format!("repeated edge {u}-{v}")));
            }
        }
        Ok(b.build())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Subgraph induced by `vertices`. Local vertex `i` is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                if local[w] != usize::MAX {
                    adj[i].push(local[w]);
                }
            }
            adj[i].sort_unstable();
        }
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { adj, edge_count }
    }

    /// Connected components of the graph, or of the subgraph induced by
    /// `restrict` when given. Each component is sorted; components are
    /// ordered by their minimum vertex.
    pub fn connected_components(&self, restrict: Option<&[usize]>) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut allowed = vec![restrict.is_none(); n];
        if let Some(r) = restrict {
            for &v in r {
                allowed[v] = true;
            }
        }
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if !allowed[s] || seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if allowed[w] && !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components(None).len() <= 1
    }

    /// Quotient graph: one vertex per class, an edge between two classes iff
    /// some edge of `self` joins them.
    pub fn quotient(&self, part: &VertexPartition) -> Graph {
        let mut b = GraphBuilder::new(part.class_count());
        for (u, v) in self.edges() {
            let (a, c) = (part.class_of(u), part.class_of(v));
            if a != c {
                b.add_edge(a, c);
            }
        }
        b.build()
    }

    /// A perfect elimination ordering if the graph is chordal.
    ///
    /// Runs maximum-cardinality search (ties to the smallest index) and checks
    /// the reversed visit order with the usual parent-neighborhood test.
    pub fn perfect_elimination_order(&self) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        if n == 0 {
            return Some(Vec::new());
        }
        // Buckets of unnumbered vertices keyed by weight.
        let mut weight = vec![0usize; n];
        let mut numbered = vec![false; n];
        let mut buckets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n + 1];
        buckets[0].extend(0..n);
        let mut top = 0;
        let mut visit = Vec::with_capacity(n);
        for _ in 0..n {
            while buckets[top].is_empty() {
                top -= 1;
            }
            let v = *buckets[top].iter().next().unwrap();
            buckets[top].remove(&v);
            numbered[v] = true;
            visit.push(v);
            for &w in &self.adj[v] {
                if !numbered[w] {
                    buckets[weight[w]].remove(&w);
                    weight[w] += 1;
                    buckets[weight[w]].insert(w);
                    top = top.max(weight[w]);
                }
            }
        }
        visit.reverse();
        if self.is_perfect_elimination_order(&visit) {
            Some(visit)
        } else {
            None
        }
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_order().is_some()
    }

    /// Checks that for each vertex its neighbors later in `order` form a clique.
    pub fn is_perfect_elimination_order(&self, order: &[usize]) -> bool {
        let n = self.vertex_count();
        if order.len() != n {
            return false;
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return false;
            }
            pos[v] = i;
        }
        for &v in order {
            let later: Vec<usize> = self.adj[v].iter().copied().filter(|&w| pos[w] > pos[v]).collect();
            let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) else {
                continue;
            };
            if later.iter().any(|&w| w != parent && !self.has_edge(parent, w)) {
                return false;
            }
        }
        true
    }

    /// BFS distances from `root` within its component; `usize::MAX` elsewhere.
    pub fn bfs_distances(&self, root: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        let mut queue = VecDeque::from([root]);
        dist[root] = 0;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}
