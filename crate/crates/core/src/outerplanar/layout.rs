//! Outerplanar layouts: circular vertex orders without crossing edges.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A circular order of all vertices in which no two edges cross. Connected
/// components occupy consecutive arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OuterplanarLayout {
    order: Vec<usize>,
}

impl OuterplanarLayout {
    /// Checks that `order` is a permutation of `g`'s vertices with no
    /// crossing edges.
    pub fn new(g: &Graph, order: Vec<usize>) -> Result<Self> {
        let n = g.vertex_count();
        if order.len() != n {
            return Err(Error::input(format!("layout lists {} vertices, graph has {n}", order.len())));
        }
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::input(format!("layout is not a permutation (vertex {v})")));
            }
        }
        if !is_non_crossing(g, &order) {
            return Err(Error::NotOuterplanar);
        }
        Ok(OuterplanarLayout { order })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// `position[v]` = index of `v` in the order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

/// Whether placing the vertices on a circle in `order` leaves every pair of
/// edges non-crossing. `order` must be a permutation.
pub fn is_non_crossing(g: &Graph, order: &[usize]) -> bool {
    let n = order.len();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // Chords of a circle cross iff their position intervals interleave, so a
    // bracket-matching sweep decides it.
    let mut opening: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut open_ending = vec![0usize; n];
    for (u, v) in g.edges() {
        let (a, b) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
        opening[a].push(b);
    }
    let mut stack: Vec<usize> = Vec::new();
    for x in 0..n {
        while stack.last() == Some(&x) {
            stack.pop();
            open_ending[x] -= 1;
        }
        if open_ending[x] > 0 {
            return false;
        }
        opening[x].sort_unstable_by(|a, b| b.cmp(a));
        for &b in &opening[x] {
            stack.push(b);
            open_ending[b] += 1;
        }
    }
    true
}

/// Biconnected blocks (as vertex sets) by Tarjan's algorithm. Isolated
/// vertices belong to no block.
fn blocks(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbor index)
        let mut stack = vec![(root, usize::MAX, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, parent, next) = *top;
            top.2 += 1;
            if let Some(&w) = g.neighbors(v).get(next) {
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    edges.push((v, w));
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edges.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            if parent != usize::MAX {
                low[parent] = low[parent].min(low[v]);
                if low[v] >= disc[parent] {
                    let mut set = BTreeSet::new();
                    while let Some((a, b)) = edges.pop() {
                        set.insert(a);
                        set.insert(b);
                        if (a, b) == (parent, v) {
                            break;
                        }
                    }
                    out.push(set.into_iter().collect());
                }
            }
        }
    }
    out
}

/// Hamiltonian cycle of a biconnected outerplanar block, by repeatedly
/// removing a degree-2 vertex `v` and joining its neighbors, then putting
/// each `v` back between them. `None` if the block is not outerplanar.
fn block_cycle(g: &Graph, block: &[usize]) -> Option<Vec<usize>> {
    if block.len() <= 2 {
        return Some(block.to_vec());
    }
    let local = |v: usize| block.binary_search(&v).ok();
    let mut adj: Vec<BTreeSet<usize>> =
        block.iter().map(|&v| g.neighbors(v).iter().filter_map(|&w| local(w)).collect()).collect();
    let k = block.len();
    let mut alive = vec![true; k];
    let mut queue: Vec<usize> = (0..k).filter(|&v| adj[v].len() == 2).collect();
    let mut removed = Vec::new();
    let mut remaining = k;
    while remaining > 3 {
        let v = loop {
            let v = queue.pop()?;
            if alive[v] && adj[v].len() == 2 {
                break v;
            }
        };
        let mut it = adj[v].iter();
        let (a, b) = (*it.next().unwrap(), *it.next().unwrap());
        alive[v] = false;
        remaining -= 1;
        adj[a].remove(&v);
        adj[b].remove(&v);
        adj[a].insert(b);
        adj[b].insert(a);
        for x in [a, b] {
            if adj[x].len() == 2 {
                queue.push(x);
            }
        }
        removed.push((v, a, b));
    }
    let rest: Vec<usize> = (0..k).filter(|&v| alive[v]).collect();
    if rest.iter().any(|&v| adj[v].len() != 2) {
        return None;
    }
    let mut succ = vec![0; k];
    for i in 0..3 {
        succ[rest[i]] = rest[(i + 1) % 3];
    }
    for &(v, a, b) in removed.iter().rev() {
        let (a, b) = match (succ[a] == b, succ[b] == a) {
            (true, _) => (a, b),
            (_, true) => (b, a),
            _ => return None,
        };
        succ[a] = v;
        succ[v] = b;
    }
    let mut cycle = vec![block[rest[0]]];
    let mut x = succ[rest[0]];
    while x != rest[0] {
        cycle.push(block[x]);
        x = succ[x];
    }
    Some(cycle)
}

enum Task {
    /// Emit the vertex, then everything hanging off it except its block.
    Vertex(usize, usize),
    /// Emit the blocks at a vertex other than the given one.
    Expand(usize, usize),
}

/// Finds a non-crossing circular order of `g`, or `None` when `g` is not
/// outerplanar. Each block's outer cycle is recovered, and blocks are
/// inserted after their cut vertex.
pub fn find_outerplanar_layout(g: &Graph) -> Option<OuterplanarLayout> {
    let n = g.vertex_count();
    let mut cycles = Vec::new();
    let mut blocks_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in blocks(g) {
        let cycle = block_cycle(g, &block)?;
        for &v in &block {
            blocks_at[v].push(cycles.len());
        }
        cycles.push(cycle);
    }
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for root in 0..n {
        if placed[root] {
            continue;
        }
        let mut tasks = vec![Task::Vertex(root, usize::MAX)];
        while let Some(task) = tasks.pop() {
            match task {
                Task::Vertex(v, block) => {
                    placed[v] = true;
                    order.push(v);
                    tasks.push(Task::Expand(v, block));
                }
                Task::Expand(v, skip) => {
                    let mut next = Vec::new();
                    for &b in blocks_at[v].iter().filter(|&&b| b != skip) {
                        let cyc = &cycles[b];
                        let at = cyc.iter().position(|&x| x == v).unwrap();
                        for i in 1..cyc.len() {
                            next.push(Task::Vertex(cyc[(at + i) % cyc.len()], b));
                        }
                    }
                    tasks.extend(next.into_iter().rev());
                }
            }
        }
    }
    is_non_crossing(g, &order).then_some(OuterplanarLayout { order })
}
