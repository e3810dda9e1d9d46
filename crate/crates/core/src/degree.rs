//! Randomized p-centered coloring of bounded-degree graphs.
//!
//! Vertices are colored one at a time in index order with uniformly random
//! colors. Whenever the new color creates a violator `H` (necessarily through
//! the new vertex), the first `min(|H|, 2p)` vertices of a depth-first walk of
//! a spanning tree of `H` are uncolored again. With `c = 2^10 Δ^{2-1/p} p`
//! colors the process finishes after `O(n log c)` steps in expectation.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rand::Rng;

use crate::color::ColorAssignment;
use crate::error::{Error, Result};
use crate::generators::rng;
use crate::graph::Graph;
use crate::verifier::{find_any_violator, find_violator_unchecked};

/// A positive rational multiplier for the palette size.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PaletteScale {
    num: u64,
    den: u64,
}

impl PaletteScale {
    pub const ONE: PaletteScale = PaletteScale { num: 1, den: 1 };

    pub fn new(num: u64, den: u64) -> Result<Self> {
        if num == 0 || den == 0 {
            return Err(Error::input("palette scale must be a positive rational"));
        }
        Ok(PaletteScale { num, den })
    }
}

impl Default for PaletteScale {
    fn default() -> Self {
        Self::ONE
    }
}

impl fmt::Display for PaletteScale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Accepts `a`, `a/b` and decimals such as `0.25`.
impl FromStr for PaletteScale {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::input(format!("cannot parse palette scale {s:?}"));
        let s = s.trim();
        if let Some((a, b)) = s.split_once('/') {
            return PaletteScale::new(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
        }
        match s.split_once('.') {
            None => PaletteScale::new(s.parse().map_err(|_| bad())?, 1),
            Some((int, frac)) => {
                if frac.len() > 18 || !frac.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                let den = 10u64.pow(frac.len() as u32);
                let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
                let frac: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
                let num = int.checked_mul(den).and_then(|x| x.checked_add(frac)).ok_or_else(bad)?;
                PaletteScale::new(num, den)
            }
        }
    }
}

/// `⌈scale · 2^10 · Δ^{2-1/p} · p⌉`, doubled on request, and at least 1
/// (Δ = 0) or 2 (Δ = 1).
///
/// Computed exactly: `c` is the least integer with
/// `(c·den)^p ≥ (num · 2^10 · p)^p · Δ^{2p-1}`.
pub fn palette_size(delta: usize, p: usize, scale: PaletteScale, doubled: bool) -> Result<u64> {
    if p < 1 {
        return Err(Error::input("p must be at least 1"));
    }
    let pe = p as u32;
    let rhs = (BigUint::from(scale.num) * 1024u32 * BigUint::from(p)).pow(pe) * BigUint::from(delta).pow(2 * pe - 1);
    let den = BigUint::from(scale.den);
    let fits = |c: u64| (BigUint::from(c) * &den).pow(pe) >= rhs;
    // Float estimate, then settle exactly.
    let est = scale.num as f64 / scale.den as f64 * 1024.0 * p as f64 * (delta as f64).powf(2.0 - 1.0 / p as f64);
    if !est.is_finite() || est > 1e18 {
        return Err(Error::input("palette size overflows 64 bits"));
    }
    let mut c = est.ceil() as u64;
    while c > 0 && fits(c - 1) {
        c -= 1;
    }
    while !fits(c) {
        c += 1;
    }
    let c = c.max(if delta == 1 { 2 } else { 1 });
    Ok(if doubled { c * 2 } else { c })
}

/// Default iteration cap `⌈2n ln(2c+1)⌉ + 64`.
pub fn default_iteration_cap(n: usize, palette: u64) -> u64 {
    (2.0 * n as f64 * ((2 * palette + 1) as f64).ln()).ceil() as u64 + 64
}

/// Parameters of one run.
#[derive(Clone, Debug)]
pub struct DegreeColorConfig {
    pub p: usize,
    /// Overrides the formula palette when set.
    pub palette_size: Option<u64>,
    pub palette_scale: PaletteScale,
    pub doubled_mode: bool,
    /// Overrides [`default_iteration_cap`] when set.
    pub iteration_cap: Option<u64>,
    pub seed: u64,
    /// Full violator scan after every iteration. Defaults to on in debug
    /// builds for graphs of at most 200 vertices.
    pub check_invariant: Option<bool>,
}

impl DegreeColorConfig {
    pub fn new(p: usize, seed: u64) -> Self {
        DegreeColorConfig {
            p,
            palette_size: None,
            palette_scale: PaletteScale::ONE,
            doubled_mode: false,
            iteration_cap: None,
            seed,
            check_invariant: None,
        }
    }

    /// The palette used on `g`.
    pub fn palette_for(&self, g: &Graph) -> Result<u64> {
        let c = match self.palette_size {
            Some(0) => return Err(Error::input("palette size must be at least 1")),
            Some(c) if self.doubled_mode => c * 2,
            Some(c) => c,
            None => palette_size(g.max_degree(), self.p, self.palette_scale, self.doubled_mode)?,
        };
        Ok(c)
    }
}

/// Per-vertex color or uncolored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialColoring {
    colors: Vec<Option<u64>>,
    colored: usize,
}

impl PartialColoring {
    pub fn new(n: usize) -> Self {
        PartialColoring { colors: vec![None; n], colored: 0 }
    }

    pub fn get(&self, v: usize) -> Option<u64> {
        self.colors[v]
    }

    pub fn set(&mut self, v: usize, c: u64) {
        if self.colors[v].replace(c).is_none() {
            self.colored += 1;
        }
    }

    pub fn unset(&mut self, v: usize) {
        if self.colors[v].take().is_some() {
            self.colored -= 1;
        }
    }

    pub fn colored_count(&self) -> usize {
        self.colored
    }

    pub fn is_complete(&self) -> bool {
        self.colored == self.colors.len()
    }

    pub fn as_slice(&self) -> &[Option<u64>] {
        &self.colors
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunStats {
    pub iterations: u64,
    pub violators: u64,
    /// Total vertices uncolored over the run.
    pub uncolored: u64,
    pub palette_size: u64,
    pub iteration_cap: u64,
    pub seed: u64,
}

/// The iteration cap was reached before every vertex was colored.
#[derive(Clone, Debug, thiserror::Error)]
#[error("iteration cap {} reached with {} of {} vertices colored", .stats.iteration_cap, .partial.colored_count(), .partial.as_slice().len())]
pub struct IterationCapReached {
    pub partial: PartialColoring,
    pub stats: RunStats,
}

impl From<IterationCapReached> for Error {
    fn from(e: IterationCapReached) -> Self {
        Error::Resource(e.to_string())
    }
}

/// A spanning tree of `h` by BFS from `root`, walked depth-first with
/// children in ascending order; returns the first `limit` distinct vertices
/// (the preorder prefix of the Euler tour).
fn euler_prefix(g: &Graph, h: &[usize], root: usize, limit: usize) -> Vec<usize> {
    let in_h: BTreeSet<usize> = h.iter().copied().collect();
    let mut children: std::collections::HashMap<usize, Vec<usize>> = Default::default();
    let mut seen = BTreeSet::from([root]);
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if in_h.contains(&w) && seen.insert(w) {
                children.entry(u).or_default().push(w);
                queue.push_back(w);
            }
        }
    }
    let mut order = Vec::with_capacity(limit);
    let mut stack = vec![root];
    while let Some(u) = stack.pop() {
        order.push(u);
        if order.len() == limit {
            break;
        }
        if let Some(ch) = children.get(&u) {
            stack.extend(ch.iter().rev());
        }
    }
    order
}

/// Runs the randomized colorer once.
pub fn color_bounded_degree(
    g: &Graph,
    cfg: &DegreeColorConfig,
) -> Result<std::result::Result<(ColorAssignment, RunStats), IterationCapReached>> {
    if cfg.p < 1 {
        return Err(Error::input("p must be at least 1"));
    }
    let n = g.vertex_count();
    let palette = cfg.palette_for(g)?;
    let cap = cfg.iteration_cap.unwrap_or_else(|| default_iteration_cap(n, palette));
    let check = cfg.check_invariant.unwrap_or(cfg!(debug_assertions) && n <= 200);
    let mut rng = rng(cfg.seed);
    let mut stats = RunStats { palette_size: palette, iteration_cap: cap, seed: cfg.seed, ..Default::default() };
    let mut f = PartialColoring::new(n);
    let mut uncolored: BTreeSet<usize> = (0..n).collect();
    while let Some(&v) = uncolored.first() {
        if stats.iterations == cap {
            return Ok(Err(IterationCapReached { partial: f, stats }));
        }
        stats.iterations += 1;
        let c = rng.gen_range(0..palette);
        f.set(v, c);
        uncolored.remove(&v);
        let before = f.colored_count();
        if let Some(h) = find_violator_unchecked(g, f.as_slice(), cfg.p, v) {
            stats.violators += 1;
            let drop = euler_prefix(g, &h.vertex_set, v, h.vertex_set.len().min(2 * cfg.p));
            debug_assert_eq!(drop[0], v);
            for &u in &drop {
                f.unset(u);
                uncolored.insert(u);
            }
            stats.uncolored += drop.len() as u64;
            debug_assert_eq!(before - f.colored_count(), drop.len());
        }
        if check {
            if let Some(bad) = find_any_violator(g, f.as_slice(), cfg.p) {
                return Err(Error::Invariant(format!("violator left after iteration {}: {bad}", stats.iterations)));
            }
        }
    }
    let flat = f.as_slice().iter().map(|c| c.expect("all colored")).collect();
    Ok(Ok((ColorAssignment::scalar(palette, flat)?, stats)))
}

/// Runs up to `attempts` times; each retry increments the seed and doubles
/// the iteration cap.
pub fn color_bounded_degree_with_retries(
    g: &Graph,
    cfg: &DegreeColorConfig,
    attempts: usize,
) -> Result<std::result::Result<(ColorAssignment, RunStats), IterationCapReached>> {
    let mut cfg = cfg.clone();
    let palette = cfg.palette_for(g)?;
    let mut cap = cfg.iteration_cap.unwrap_or_else(|| default_iteration_cap(g.vertex_count(), palette));
    let mut last = None;
    for _ in 0..attempts.max(1) {
        cfg.iteration_cap = Some(cap);
        match color_bounded_degree(g, &cfg)? {
            Ok(done) => return Ok(Ok(done)),
            Err(fail) => last = Some(fail),
        }
        cfg.seed = cfg.seed.wrapping_add(1);
        cap = cap.saturating_mul(2);
    }
    Ok(Err(last.unwrap()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{classics, random_bounded_degree};
    use crate::verifier::{is_p_centered, VerifyMode};

    #[test]
    fn palette_examples() {
        let one = PaletteScale::ONE;
        assert_eq!(palette_size(3, 1, one, false).unwrap(), 3072);
        // 2048 · 3^{1.5} = 10641.72...
        assert_eq!(palette_size(3, 2, one, false).unwrap(), 10642);
        assert_eq!(palette_size(2, 1, one, false).unwrap(), 2048);
        assert_eq!(palette_size(3, 1, one, true).unwrap(), 6144);
        assert_eq!(palette_size(0, 2, one, false).unwrap(), 1);
        assert_eq!(palette_size(1, 3, PaletteScale::new(1, 100_000).unwrap(), false).unwrap(), 2);
        assert_eq!(palette_size(3, 1, "1/256".parse().unwrap(), false).unwrap(), 12);
    }

    #[test]
    fn scale_parsing() {
        assert_eq!("0.25".parse::<PaletteScale>().unwrap(), PaletteScale::new(25, 100).unwrap());
        assert_eq!("3".parse::<PaletteScale>().unwrap(), PaletteScale::new(3, 1).unwrap());
        assert!("0".parse::<PaletteScale>().is_err());
        assert!("x/2".parse::<PaletteScale>().is_err());
    }

    #[test]
    fn p1_gives_proper_coloring() {
        let g = random_bounded_degree(60, 4, 100, 2).unwrap();
        let mut cfg = DegreeColorConfig::new(1, 5);
        cfg.palette_scale = "1/64".parse().unwrap();
        let (col, _) = color_bounded_degree_with_retries(&g, &cfg, 4).unwrap().unwrap();
        for (u, v) in g.edges() {
            assert_ne!(col.flat(u), col.flat(v));
        }
    }

    #[test]
    fn deterministic_and_verified() {
        let g = classics::grid(6, 6);
        for p in 1..=3 {
            let mut cfg = DegreeColorConfig::new(p, 11);
            cfg.palette_scale = "1/256".parse().unwrap();
            cfg.check_invariant = Some(true);
            let a = color_bounded_degree_with_retries(&g, &cfg, 8).unwrap().unwrap();
            let b = color_bounded_degree_with_retries(&g, &cfg, 8).unwrap().unwrap();
            assert_eq!(a, b);
            assert!(is_p_centered(&g, &a.0, p, VerifyMode::Growth).unwrap().holds());
        }
    }

    #[test]
    fn tiny_palette_fails_honestly() {
        let g = classics::complete(5);
        let mut cfg = DegreeColorConfig::new(1, 0);
        cfg.palette_size = Some(3);
        let fail = color_bounded_degree(&g, &cfg).unwrap().unwrap_err();
        assert_eq!(fail.stats.iterations, fail.stats.iteration_cap);
        assert!(!fail.partial.is_complete());
    }

    #[test]
    fn uncolor_count_matches_rule() {
        let g = classics::path(30);
        let mut cfg = DegreeColorConfig::new(2, 3);
        cfg.palette_size = Some(4);
        cfg.iteration_cap = Some(100_000);
        let (_, stats) = color_bounded_degree(&g, &cfg).unwrap().unwrap();
        // Each violator removes between 2 and 2p vertices.
        assert!(stats.uncolored >= 2 * stats.violators && stats.uncolored <= 4 * stats.violators);
        assert_eq!(stats.iterations, 30 + stats.uncolored);
    }
}
