//! The treewidth lower-bound family `G(p, t, x, N)`.
//!
//! `G(0, t, x, N)` and `G(p, 0, x, N)` are single vertices. Otherwise, with
//! `M = C(p+t-1, t-1)` and `X = (x-1) N^M + 1`, take a copy `G0` of
//! `G(p-1, t, X, N)` and hang `X` disjoint copies of `G(p, t-1, x, N)` off every
//! vertex `v` of `G0`, each copy vertex joined to `v`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// Sizes beyond this many bits are reported as "astronomical" rather than
/// computed.
const SIZE_BITS: u64 = 4096;

fn binomial(n: u64, k: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `X = (x - 1) N^M + 1`, or `None` once it exceeds [`SIZE_BITS`].
fn branching(p: u64, t: u64, x: &BigUint, n: u64) -> Option<BigUint> {
    let m = binomial(p + t - 1, t - 1).to_u64()?;
    let bits_per = 64 - n.leading_zeros() as u64;
    if m.saturating_mul(bits_per) > SIZE_BITS {
        return None;
    }
    let pow = BigUint::from(n).pow(m as u32);
    Some((x - 1u32) * pow + 1u32)
}

fn size_rec(
    p: u64,
    t: u64,
    x: &BigUint,
    n: u64,
    memo: &mut HashMap<(u64, u64, BigUint), Option<BigUint>>,
) -> Option<BigUint> {
    if p == 0 || t == 0 {
        return Some(BigUint::one());
    }
    let key = (p, t, x.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let result = (|| {
        let big_x = branching(p, t, x, n)?;
        let base = size_rec(p - 1, t, &big_x, n, memo)?;
        let child = size_rec(p, t - 1, x, n, memo)?;
        let size = base * (BigUint::one() + big_x * child);
        (size.bits() <= SIZE_BITS).then_some(size)
    })();
    memo.insert(key, result.clone());
    result
}

/// Vertex count of `G(p, t, x, N)`, or `None` if it exceeds `2^4096`.
pub fn lower_bound_size(p: u64, t: u64, x: u64, n: u64) -> Option<BigUint> {
    size_rec(p, t, &BigUint::from(x), n, &mut HashMap::new())
}

fn build(p: u64, t: u64, x: u64, n: u64) -> Graph {
    if p == 0 || t == 0 {
        return Graph::empty(1);
    }
    // The size check has already bounded X.
    let big_x = branching(p, t, &BigUint::from(x), n).unwrap().to_usize().unwrap();
    let base = build(p - 1, t, big_x as u64, n);
    let child = build(p, t - 1, x, n);
    let mut b = GraphBuilder::new(base.vertex_count() * (1 + big_x * child.vertex_count()));
    for (u, v) in base.edges() {
        b.add_edge(u, v);
    }
    let mut next = base.vertex_count();
    for v in 0..base.vertex_count() {
        for _ in 0..big_x {
            for (a, c) in child.edges() {
                b.add_edge(next + a, next + c);
            }
            for w in next..next + child.vertex_count() {
                b.add_edge(v, w);
            }
            next += child.vertex_count();
        }
    }
    b.build()
}

/// Builds `G(p, t, x, N)` after checking its size against `size_cap`.
pub fn lower_bound_graph(p: u64, t: u64, x: u64, n: u64, size_cap: usize) -> Result<Graph> {
    if x < 2 || n < 1 {
        return Err(Error::input("lower-bound graph needs x >= 2 and N >= 1"));
    }
    match lower_bound_size(p, t, x, n) {
        None => Err(Error::Resource(format!(
            "G({p},{t},{x},{n}) has more than 2^{SIZE_BITS} vertices, above the cap of {size_cap}"
        ))),
        Some(size) if size > BigUint::from(size_cap) => {
            Err(Error::Resource(format!("G({p},{t},{x},{n}) has {size} vertices, above the cap of {size_cap}")))
        }
        Some(_) => Ok(build(p, t, x, n)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: usize = 1_000_000;

    #[test]
    fn base_cases_are_single_vertices() {
        assert_eq!(lower_bound_graph(0, 5, 2, 3, CAP).unwrap().vertex_count(), 1);
        assert_eq!(lower_bound_graph(4, 0, 2, 3, CAP).unwrap().vertex_count(), 1);
    }

    #[test]
    fn g_1_1_2_2_is_a_claw() {
        let g = lower_bound_graph(1, 1, 2, 2, CAP).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn g_1_2_2_3_has_51_vertices() {
        let g = lower_bound_graph(1, 2, 2, 3, CAP).unwrap();
        assert_eq!(g.vertex_count(), 51);
        // Root adjacent to everything; ten claws K_{1,4} below it.
        assert_eq!(g.degree(0), 50);
        assert_eq!(g.edge_count(), 50 + 10 * 4);
    }

    #[test]
    fn g_2_1_2_3_has_55_vertices() {
        let g = lower_bound_graph(2, 1, 2, 3, CAP).unwrap();
        assert_eq!(g.vertex_count(), 55);
        assert_eq!(g.edge_count(), 54);
    }

    #[test]
    fn oversize_is_refused_with_size() {
        let err = lower_bound_graph(3, 3, 2, 4, CAP).unwrap_err();
        assert!(matches!(err, Error::Resource(ref m) if m.contains("vertices")), "{err}");
    }

    #[test]
    fn size_formula_matches_construction() {
        for p in 0..=2 {
            for t in 0..=2 {
                for x in 2..=3 {
                    for n in 1..=2 {
                        let size = lower_bound_size(p, t, x, n).unwrap();
                        if size > BigUint::from(50_000u32) {
                            continue;
                        }
                        let g = lower_bound_graph(p, t, x, n, CAP).unwrap();
                        assert_eq!(BigUint::from(g.vertex_count()), size, "p={p} t={t} x={x} N={n}");
                    }
                }
            }
        }
    }
}
