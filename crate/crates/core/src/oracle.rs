//! Exact `χ_p` and `lin_p` by backtracking, for small graphs.
//!
//! Vertices are colored in index order. Vertex `i` may only take a color at
//! most one larger than the largest color used on `0..i`, which removes
//! palette permutations. After each assignment the search looks for a
//! violation through the newly colored vertex only: a violation among the
//! colored prefix that avoids it would have been caught earlier.

use std::time::{Duration, Instant};

use crate::color::ColorAssignment;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verifier::{find_violator_unchecked, linear_violation_through, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColoringKind {
    Centered,
    Linear,
}

/// Result of an exact computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactValue {
    /// The minimum number of colors, with an optimal coloring.
    Exact { value: usize, witness: ColorAssignment },
    /// No coloring with at most `max_colors` colors exists.
    ExceedsMax { max_colors: usize },
}

impl ExactValue {
    pub fn value(&self) -> Option<usize> {
        match self {
            ExactValue::Exact { value, .. } => Some(*value),
            ExactValue::ExceedsMax { .. } => None,
        }
    }
}

/// Answer to "can `g` be colored with `colors` colors?".
#[derive(Clone, Debug)]
pub struct Feasibility {
    pub witness: Option<ColorAssignment>,
    /// Search nodes visited.
    pub nodes: u64,
    /// The violation that pruned the deepest dead end, if any.
    pub deepest_obstruction: Option<Violation>,
}

struct Search<'a> {
    g: &'a Graph,
    p: usize,
    kind: ColoringKind,
    colors: Vec<Option<u64>>,
    k: u64,
    deadline: Option<Instant>,
    nodes: u64,
    deepest: Option<(usize, Violation)>,
    timed_out: bool,
}

impl Search<'_> {
    fn violation_at(&self, v: usize) -> Option<Violation> {
        match self.kind {
            ColoringKind::Centered => find_violator_unchecked(self.g, &self.colors, self.p, v),
            ColoringKind::Linear => linear_violation_through(self.g, &self.colors, self.p, v, false),
        }
    }

    fn run(&mut self, v: usize, max_used: Option<u64>) -> bool {
        if v == self.g.vertex_count() {
            return true;
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.timed_out = true;
        }
        if self.timed_out {
            return false;
        }
        let limit = max_used.map_or(1, |m| m + 2).min(self.k);
        for c in 0..limit {
            self.colors[v] = Some(c);
            match self.violation_at(v) {
                Some(viol) => {
                    if self.deepest.as_ref().is_none_or(|(d, _)| v > *d) {
                        self.deepest = Some((v, viol));
                    }
                }
                None => {
                    if self.run(v + 1, Some(max_used.map_or(c, |m| m.max(c)))) {
                        return true;
                    }
                    if self.timed_out {
                        break;
                    }
                }
            }
        }
        self.colors[v] = None;
        false
    }
}

/// Decides whether `g` has a p-centered (or p-linear) coloring with at most
/// `colors` colors.
pub fn feasible(
    g: &Graph,
    p: usize,
    kind: ColoringKind,
    colors: usize,
    budget: Option<Duration>,
) -> Result<Feasibility> {
    feasible_until(g, p, kind, colors, budget.map(|b| Instant::now() + b))
}

fn feasible_until(
    g: &Graph,
    p: usize,
    kind: ColoringKind,
    colors: usize,
    deadline: Option<Instant>,
) -> Result<Feasibility> {
    if p < 1 {
        return Err(Error::input("p must be at least 1"));
    }
    let n = g.vertex_count();
    let mut s = Search {
        g,
        p,
        kind,
        colors: vec![None; n],
        k: colors as u64,
        deadline,
        nodes: 0,
        deepest: None,
        timed_out: false,
    };
    let found = s.run(0, None);
    if s.timed_out {
        return Err(Error::Budget { lower: 0, upper: None });
    }
    let witness = found.then(|| {
        let flat: Vec<u64> = s.colors.iter().map(|c| c.unwrap()).collect();
        ColorAssignment::scalar(colors as u64, flat).expect("colors below k")
    });
    Ok(Feasibility { witness, nodes: s.nodes, deepest_obstruction: s.deepest.map(|(_, v)| v) })
}

fn exact(g: &Graph, p: usize, kind: ColoringKind, max_colors: usize, budget: Option<Duration>) -> Result<ExactValue> {
    let deadline = budget.map(|b| Instant::now() + b);
    let n = g.vertex_count();
    if n == 0 {
        return Ok(ExactValue::Exact { value: 0, witness: ColorAssignment::scalar(1, Vec::new())? });
    }
    for k in 1..=max_colors {
        match feasible_until(g, p, kind, k, deadline) {
            Ok(f) => {
                if let Some(witness) = f.witness {
                    return Ok(ExactValue::Exact { value: k, witness });
                }
            }
            // All smaller palettes were refuted; n distinct colors always work.
            Err(Error::Budget { .. }) => return Err(Error::Budget { lower: k, upper: Some(n) }),
            Err(e) => return Err(e),
        }
    }
    Ok(ExactValue::ExceedsMax { max_colors })
}

/// `χ_p(g)` if it is at most `max_colors`.
pub fn chi_p_exact(g: &Graph, p: usize, max_colors: usize, budget: Option<Duration>) -> Result<ExactValue> {
    exact(g, p, ColoringKind::Centered, max_colors, budget)
}

/// `lin_p(g)` if it is at most `max_colors`.
pub fn lin_p_exact(g: &Graph, p: usize, max_colors: usize, budget: Option<Duration>) -> Result<ExactValue> {
    exact(g, p, ColoringKind::Linear, max_colors, budget)
}

/// Decides `lin_p(g) >= k` by refuting every p-linear coloring with `k - 1`
/// colors. The returned [`Feasibility`] carries the search statistics; the
/// bound holds iff its `witness` is `None`.
pub fn lin_p_at_least(g: &Graph, p: usize, k: usize, budget: Option<Duration>) -> Result<Feasibility> {
    if k == 0 {
        return Err(Error::input("lower bound k must be at least 1"));
    }
    feasible(g, p, ColoringKind::Linear, k - 1, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::classics;
    use crate::verifier::{is_p_centered, is_p_linear, VerifyMode};

    fn chi(g: &Graph, p: usize) -> usize {
        chi_p_exact(g, p, g.vertex_count().max(1), None).unwrap().value().unwrap()
    }

    fn lin(g: &Graph, p: usize) -> usize {
        lin_p_exact(g, p, g.vertex_count().max(1), None).unwrap().value().unwrap()
    }

    #[test]
    fn known_values() {
        assert_eq!(chi(&classics::cycle(5), 1), 3);
        for p in 1..=4 {
            assert_eq!(chi(&classics::complete(4), p), 4);
        }
        assert_eq!(chi(&classics::path(4), 2), 3);
        assert_eq!(lin(&classics::complete(3), 1), 3);
        assert_eq!(lin(&Graph::empty(1), 3), 1);
    }

    #[test]
    fn p4_needs_three_for_lin_2() {
        let f = lin_p_at_least(&classics::path(4), 2, 3, None).unwrap();
        assert!(f.witness.is_none());
        assert!(f.deepest_obstruction.is_some());
        let star_with_tail = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)]).unwrap();
        assert!(lin_p_at_least(&star_with_tail, 2, 3, None).unwrap().witness.is_none());
    }

    #[test]
    fn witnesses_verify() {
        let g = classics::grid(3, 3);
        for p in 1..=3 {
            if let ExactValue::Exact { witness, .. } = chi_p_exact(&g, p, 9, None).unwrap() {
                assert!(is_p_centered(&g, &witness, p, VerifyMode::Subsets).unwrap().holds());
            }
            if let ExactValue::Exact { witness, .. } = lin_p_exact(&g, p, 9, None).unwrap() {
                assert!(is_p_linear(&g, &witness, p, 18).unwrap().holds());
            }
        }
    }

    #[test]
    fn exceeds_max() {
        assert_eq!(chi_p_exact(&classics::complete(5), 1, 3, None).unwrap(), ExactValue::ExceedsMax { max_colors: 3 });
    }

    #[test]
    fn budget_exhaustion_reports_bounds() {
        let g = classics::grid(4, 5);
        match chi_p_exact(&g, 4, 20, Some(Duration::from_millis(1))) {
            Err(Error::Budget { lower, upper }) => {
                assert!(lower >= 1);
                assert_eq!(upper, Some(20));
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }
}
