//! Checking p-centered and p-linear colorings.
//!
//! A coloring is p-centered when every connected subgraph either sees more
//! than `p` colors or contains a color that occurs exactly once. Two deciders
//! are provided:
//!
//! * **subsets** – for every set `S` of at most `p` colors, every component of
//!   the subgraph induced by `S`-colored vertices must have a unique color.
//! * **growth** – from each vertex, grow color sets outward (adding colors
//!   seen on the boundary of the current component) up to size `p`.
//!
//! Both rest on the same fact: if a connected `H` with color set `S` has no
//! unique color, the component of `G[S]` containing `H` has color set exactly
//! `S`, and a color unique on that component would be unique on `H`.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use crate::color::ColorAssignment;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which kind of coloring a [`Violation`] refutes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    Centered,
    Linear,
}

/// A connected vertex set (a path, for [`ViolationKind::Linear`]) on which
/// at most `p` colors appear and none of them exactly once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Sorted for centered violations; in path order for linear ones.
    pub vertex_set: Vec<usize>,
    /// Sorted flattened colors.
    pub color_set: Vec<u64>,
    pub kind: ViolationKind,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let kind = match self.kind {
            ViolationKind::Centered => "connected set",
            ViolationKind::Linear => "path",
        };
        write!(f, "{kind} {:?} uses colors {:?}, none exactly once", self.vertex_set, self.color_set)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum VerifyMode {
    Subsets,
    #[default]
    Growth,
}

/// Outcome of a verification: `violation` is `None` exactly when the
/// coloring passes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub violation: Option<Violation>,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// Default vertex cap for [`is_p_linear`]; simple-path enumeration is
/// exponential.
pub const DEFAULT_LINEAR_CAP: usize = 18;

fn check_inputs(g: &Graph, col: &ColorAssignment, p: usize) -> Result<Vec<u64>> {
    if p < 1 {
        return Err(Error::input("p must be at least 1"));
    }
    if col.vertex_count() != g.vertex_count() {
        return Err(Error::input(format!(
            "coloring covers {} vertices, graph has {}",
            col.vertex_count(),
            g.vertex_count()
        )));
    }
    Ok(col.flatten())
}

/// Decides whether `col` is p-centered on `g`.
pub fn is_p_centered(g: &Graph, col: &ColorAssignment, p: usize, mode: VerifyMode) -> Result<Verdict> {
    let flat = check_inputs(g, col, p)?;
    Ok(is_p_centered_flat(g, &flat, p, mode))
}

/// [`is_p_centered`] over already flattened colors. Requires `p >= 1`.
pub fn is_p_centered_flat(g: &Graph, colors: &[u64], p: usize, mode: VerifyMode) -> Verdict {
    let violation = match mode {
        VerifyMode::Subsets => subsets_scan(g, colors, p),
        VerifyMode::Growth => growth_scan(g, colors, p),
    };
    Verdict { violation }
}

/// Checks a component for a color occurring exactly once; returns the
/// component's sorted color set when there is none.
fn colors_without_unique(members: &[usize], colors: impl Fn(usize) -> u64) -> Option<Vec<u64>> {
    let mut count: HashMap<u64, usize> = HashMap::new();
    for &v in members {
        *count.entry(colors(v)).or_default() += 1;
    }
    if count.values().any(|&c| c == 1) {
        return None;
    }
    let mut set: Vec<u64> = count.into_keys().collect();
    set.sort_unstable();
    Some(set)
}

fn subsets_scan(g: &Graph, colors: &[u64], p: usize) -> Option<Violation> {
    let palette: Vec<u64> = colors.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let mut chosen = Vec::with_capacity(p);
    subsets_rec(g, colors, p, &palette, 0, &mut chosen)
}

fn subsets_rec(
    g: &Graph,
    colors: &[u64],
    p: usize,
    palette: &[u64],
    start: usize,
    chosen: &mut Vec<u64>,
) -> Option<Violation> {
    if !chosen.is_empty() {
        let members: Vec<usize> = (0..g.vertex_count()).filter(|&v| chosen.contains(&colors[v])).collect();
        for comp in g.connected_components(Some(&members)) {
            if let Some(color_set) = colors_without_unique(&comp, |v| colors[v]) {
                return Some(Violation { vertex_set: comp, color_set, kind: ViolationKind::Centered });
            }
        }
    }
    if chosen.len() == p {
        return None;
    }
    for i in start..palette.len() {
        chosen.push(palette[i]);
        let found = subsets_rec(g, colors, p, palette, i + 1, chosen);
        chosen.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Component of `start` among colored vertices whose color lies in `set`.
fn grow_component(g: &Graph, color_of: &impl Fn(usize) -> Option<u64>, set: &[u64], start: usize) -> Vec<usize> {
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    let mut comp = Vec::new();
    while let Some(v) = queue.pop_front() {
        comp.push(v);
        for &w in g.neighbors(v) {
            if !seen.contains(&w) && color_of(w).is_some_and(|c| set.binary_search(&c).is_ok()) {
                seen.insert(w);
                queue.push_back(w);
            }
        }
    }
    comp.sort_unstable();
    comp
}

/// Growth search anchored at `start`. With `min_anchor`, states whose
/// component contains a vertex smaller than `start` are skipped: they are
/// reached from that smaller vertex too.
fn growth_from(
    g: &Graph,
    color_of: &impl Fn(usize) -> Option<u64>,
    p: usize,
    start: usize,
    min_anchor: bool,
) -> Option<Violation> {
    let first = color_of(start)?;
    let mut visited: HashSet<Vec<u64>> = HashSet::new();
    let mut stack = vec![vec![first]];
    visited.insert(vec![first]);
    while let Some(set) = stack.pop() {
        let comp = grow_component(g, color_of, &set, start);
        if min_anchor && comp[0] < start {
            continue;
        }
        let present: BTreeSet<u64> = comp.iter().map(|&v| color_of(v).unwrap()).collect();
        if present.len() == set.len() {
            if let Some(color_set) = colors_without_unique(&comp, |v| color_of(v).unwrap()) {
                return Some(Violation { vertex_set: comp, color_set, kind: ViolationKind::Centered });
            }
        }
        if set.len() == p {
            continue;
        }
        let mut boundary: BTreeSet<u64> = BTreeSet::new();
        for &v in &comp {
            for &w in g.neighbors(v) {
                if let Some(c) = color_of(w) {
                    if set.binary_search(&c).is_err() {
                        boundary.insert(c);
                    }
                }
            }
        }
        // Push in descending order so the smallest extension is explored first.
        for &c in boundary.iter().rev() {
            let mut next = set.clone();
            let at = next.binary_search(&c).unwrap_err();
            next.insert(at, c);
            if visited.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    None
}

fn growth_scan(g: &Graph, colors: &[u64], p: usize) -> Option<Violation> {
    let color_of = |v: usize| Some(colors[v]);
    (0..g.vertex_count()).find_map(|v| growth_from(g, &color_of, p, v, true))
}

/// Searches for a violator containing `v` under a partial coloring.
/// Uncolored vertices (`None`) belong to no subgraph.
pub fn find_violator_containing(g: &Graph, colors: &[Option<u64>], p: usize, v: usize) -> Result<Option<Violation>> {
    if p < 1 {
        return Err(Error::input("p must be at least 1"));
    }
    if colors.get(v).copied().flatten().is_none() {
        return Err(Error::input(format!("vertex {v} is not colored")));
    }
    Ok(find_violator_unchecked(g, colors, p, v))
}

pub(crate) fn find_violator_unchecked(g: &Graph, colors: &[Option<u64>], p: usize, v: usize) -> Option<Violation> {
    let color_of = |w: usize| colors[w];
    growth_from(g, &color_of, p, v, false)
}

/// Full scan of a partial coloring for any violator.
pub fn find_any_violator(g: &Graph, colors: &[Option<u64>], p: usize) -> Option<Violation> {
    let color_of = |w: usize| colors[w];
    (0..g.vertex_count()).find_map(|v| growth_from(g, &color_of, p, v, true))
}

/// Running multiset of colors on a path under construction.
#[derive(Default)]
struct PathColors {
    count: HashMap<u64, usize>,
    singles: usize,
}

impl PathColors {
    fn push(&mut self, c: u64) {
        let k = self.count.entry(c).or_default();
        *k += 1;
        match *k {
            1 => self.singles += 1,
            2 => self.singles -= 1,
            _ => {}
        }
    }

    fn pop(&mut self, c: u64) {
        let k = self.count.get_mut(&c).unwrap();
        *k -= 1;
        match *k {
            0 => {
                self.singles -= 1;
                self.count.remove(&c);
            }
            1 => self.singles += 1,
            _ => {}
        }
    }

    fn distinct(&self) -> usize {
        self.count.len()
    }

    fn is_violation(&self, p: usize) -> bool {
        self.distinct() <= p && self.singles == 0
    }

    fn sorted_colors(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.count.keys().copied().collect();
        v.sort_unstable();
        v
    }
}

/// Decides whether `col` is p-linear on `g`: every simple path sees more than
/// `p` colors or has a color occurring exactly once.
///
/// Graphs with more than `vertex_cap` vertices are refused.
pub fn is_p_linear(g: &Graph, col: &ColorAssignment, p: usize, vertex_cap: usize) -> Result<Verdict> {
    let flat = check_inputs(g, col, p)?;
    if g.vertex_count() > vertex_cap {
        return Err(Error::Resource(format!(
            "p-linear verification is capped at {vertex_cap} vertices, graph has {}",
            g.vertex_count()
        )));
    }
    let colors: Vec<Option<u64>> = flat.into_iter().map(Some).collect();
    let violation = (0..g.vertex_count()).find_map(|v| linear_violation_through(g, &colors, p, v, true));
    Ok(Verdict { violation })
}

/// A simple path through `v` among colored vertices with at most `p` colors
/// and no unique color. With `endpoint_only`, only paths starting at `v` are
/// searched (enough when every vertex is tried as a start).
pub(crate) fn linear_violation_through(
    g: &Graph,
    colors: &[Option<u64>],
    p: usize,
    v: usize,
    endpoint_only: bool,
) -> Option<Violation> {
    let first = colors[v]?;
    let mut on_path = vec![false; g.vertex_count()];
    let mut arm = vec![v];
    let mut pc = PathColors::default();
    on_path[v] = true;
    pc.push(first);
    let mut search = LinearSearch { g, colors, p, on_path, pc, endpoint_only };
    search.extend_first(&mut arm)
}

struct LinearSearch<'a> {
    g: &'a Graph,
    colors: &'a [Option<u64>],
    p: usize,
    on_path: Vec<bool>,
    pc: PathColors,
    endpoint_only: bool,
}

impl LinearSearch<'_> {
    fn violation(&self, first_arm: &[usize], second_arm: &[usize]) -> Violation {
        // Path order: reversed second arm, then the first arm (both start at the anchor).
        let mut path: Vec<usize> = second_arm.iter().rev().copied().collect();
        path.pop();
        path.extend_from_slice(first_arm);
        Violation { vertex_set: path, color_set: self.pc.sorted_colors(), kind: ViolationKind::Linear }
    }

    /// Grows the first arm from the anchor; at every length, tries all second arms.
    fn extend_first(&mut self, arm: &mut Vec<usize>) -> Option<Violation> {
        if self.pc.is_violation(self.p) {
            return Some(self.violation(arm, &arm[..1]));
        }
        if !self.endpoint_only && arm.len() > 1 {
            let mut second = vec![arm[0]];
            if let Some(found) = self.extend_second(arm, &mut second) {
                return Some(found);
            }
        }
        let tip = *arm.last().unwrap();
        for &w in self.g.neighbors(tip) {
            let Some(c) = self.colors[w] else { continue };
            if self.on_path[w] {
                continue;
            }
            self.pc.push(c);
            // More than p colors persists under extension.
            if self.pc.distinct() <= self.p {
                self.on_path[w] = true;
                arm.push(w);
                let found = self.extend_first(arm);
                arm.pop();
                self.on_path[w] = false;
                if found.is_some() {
                    self.pc.pop(c);
                    return found;
                }
            }
            self.pc.pop(c);
        }
        None
    }

    fn extend_second(&mut self, first: &[usize], second: &mut Vec<usize>) -> Option<Violation> {
        let tip = *second.last().unwrap();
        for &w in self.g.neighbors(tip) {
            let Some(c) = self.colors[w] else { continue };
            if self.on_path[w] {
                continue;
            }
            self.pc.push(c);
            if self.pc.distinct() <= self.p {
                self.on_path[w] = true;
                second.push(w);
                let found = if self.pc.is_violation(self.p) {
                    Some(self.violation(first, second))
                } else {
                    self.extend_second(first, second)
                };
                second.pop();
                self.on_path[w] = false;
                if found.is_some() {
                    self.pc.pop(c);
                    return found;
                }
            }
            self.pc.pop(c);
        }
        None
    }
}

/// Independent re-check of a violation's defining properties.
pub fn violation_is_valid(g: &Graph, col: &ColorAssignment, p: usize, viol: &Violation) -> bool {
    let set = &viol.vertex_set;
    if set.is_empty() || set.iter().any(|&v| v >= g.vertex_count()) {
        return false;
    }
    let connected = match viol.kind {
        ViolationKind::Centered => {
            let mut sorted = set.clone();
            sorted.sort_unstable();
            sorted.dedup();
            sorted.len() == set.len() && g.connected_components(Some(&sorted)).len() == 1
        }
        ViolationKind::Linear => {
            let distinct: HashSet<_> = set.iter().collect();
            distinct.len() == set.len() && set.windows(2).all(|w| g.has_edge(w[0], w[1]))
        }
    };
    let mut count: HashMap<u64, usize> = HashMap::new();
    for &v in set {
        *count.entry(col.flat(v)).or_default() += 1;
    }
    let mut colors: Vec<u64> = count.keys().copied().collect();
    colors.sort_unstable();
    connected && count.len() <= p && count.values().all(|&c| c != 1) && colors == viol.color_set
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::classics;

    fn scalar(colors: &[u64]) -> ColorAssignment {
        ColorAssignment::scalar(colors.iter().max().unwrap() + 1, colors.to_vec()).unwrap()
    }

    fn both(g: &Graph, c: &ColorAssignment, p: usize) -> (Verdict, Verdict) {
        (is_p_centered(g, c, p, VerifyMode::Subsets).unwrap(), is_p_centered(g, c, p, VerifyMode::Growth).unwrap())
    }

    #[test]
    fn triangle_rainbow_is_centered() {
        let (s, gr) = both(&classics::complete(3), &scalar(&[1, 2, 3]), 3);
        assert!(s.holds() && gr.holds());
    }

    #[test]
    fn alternating_p4_fails_for_p2() {
        let g = classics::path(4);
        let c = scalar(&[1, 2, 1, 2]);
        for mode in [VerifyMode::Subsets, VerifyMode::Growth] {
            let v = is_p_centered(&g, &c, 2, mode).unwrap().violation.unwrap();
            assert_eq!(v.vertex_set, vec![0, 1, 2, 3]);
            assert_eq!(v.color_set, vec![1, 2]);
            assert!(violation_is_valid(&g, &c, 2, &v));
        }
    }

    #[test]
    fn c4_with_three_colors_is_2_centered() {
        let (s, gr) = both(&classics::cycle(4), &scalar(&[1, 2, 1, 3]), 2);
        assert!(s.holds() && gr.holds());
    }

    #[test]
    fn input_errors() {
        let g = classics::path(2);
        assert!(is_p_centered(&g, &scalar(&[0, 1]), 0, VerifyMode::Growth).is_err());
        assert!(is_p_centered(&g, &scalar(&[0]), 1, VerifyMode::Growth).is_err());
        assert!(find_violator_containing(&g, &[None, Some(1)], 1, 0).is_err());
    }

    #[test]
    fn anchored_search_examples() {
        let star = Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(find_violator_containing(&star, &[Some(1), Some(2), Some(2)], 2, 0).unwrap(), None);
        let p4 = classics::path(4);
        let v = find_violator_containing(&p4, &[Some(1), Some(2), Some(1), Some(2)], 2, 0).unwrap().unwrap();
        assert_eq!(v.vertex_set, vec![0, 1, 2, 3]);
        assert_eq!(find_violator_containing(&p4, &[Some(1), Some(2), None, Some(2)], 2, 0).unwrap(), None);
    }

    #[test]
    fn linear_examples() {
        let edge = classics::path(2);
        assert!(!is_p_linear(&edge, &scalar(&[1, 1]), 1, DEFAULT_LINEAR_CAP).unwrap().holds());
        let p4 = classics::path(4);
        let v = is_p_linear(&p4, &scalar(&[1, 2, 2, 1]), 2, DEFAULT_LINEAR_CAP).unwrap().violation.unwrap();
        assert_eq!(v.kind, ViolationKind::Linear);
        assert!(violation_is_valid(&p4, &scalar(&[1, 2, 2, 1]), 2, &v));
        // Subpaths of 1,2,1,2: every path with a repeated color has length >= 3
        // and then contains both colors with one of them once, except the full path.
        assert!(!is_p_linear(&p4, &scalar(&[1, 2, 1, 2]), 3, DEFAULT_LINEAR_CAP).unwrap().holds());
        assert!(is_p_linear(&p4, &scalar(&[1, 2, 1, 2]), 1, DEFAULT_LINEAR_CAP).unwrap().holds());
    }

    #[test]
    fn linear_cap_is_enforced() {
        let g = classics::path(5);
        let c = scalar(&[0, 1, 2, 3, 4]);
        assert!(matches!(is_p_linear(&g, &c, 1, 4), Err(Error::Resource(_))));
    }

    #[test]
    fn anchored_linear_through_interior() {
        // The anchor is the interior vertex 1; violating paths must extend both ways.
        let g = classics::path(3);
        let colors = [Some(5), Some(5), Some(5)];
        let v = linear_violation_through(&g, &colors, 1, 1, false).unwrap();
        assert!(v.vertex_set.contains(&1));
        let colors = [Some(1), Some(2), Some(1)];
        assert!(linear_violation_through(&g, &colors, 2, 1, false).is_none());
        let colors = [Some(1), Some(2), Some(1), Some(2)];
        let g4 = classics::path(4);
        let v = linear_violation_through(&g4, &colors, 2, 1, false).unwrap();
        assert_eq!(v.vertex_set.len(), 4);
    }
}
