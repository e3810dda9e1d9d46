//! Tuple-valued vertex colorings.

use std::collections::HashSet;

use crate::error::{Error, Result};

/// Per-vertex color tuples of a fixed arity (1 to 4 coordinates).
///
/// `palette_shape[i]` bounds coordinate `i`. Tuples flatten to a single
/// integer in row-major (mixed radix) order, which is a bijection between
/// tuples inside the shape and `0..palette_size()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorAssignment {
    shape: Vec<u64>,
    // Row-major: vertex v owns entries v*arity .. (v+1)*arity.
    coords: Vec<u64>,
}

pub const MAX_ARITY: usize = 4;

impl ColorAssignment {
    /// Builds an assignment from per-vertex tuples.
    pub fn new(shape: Vec<u64>, tuples: &[Vec<u64>]) -> Result<Self> {
        let arity = shape.len();
        let mut coords = Vec::with_capacity(tuples.len() * arity);
        for (v, t) in tuples.iter().enumerate() {
            if t.len() != arity {
                return Err(Error::input(format!("vertex {v} has {} coordinates, expected {arity}", t.len())));
            }
            coords.extend_from_slice(t);
        }
        Self::from_coords(shape, coords)
    }

    /// Builds an assignment from a flat row-major coordinate buffer.
    pub fn from_coords(shape: Vec<u64>, coords: Vec<u64>) -> Result<Self> {
        let arity = shape.len();
        if !(1..=MAX_ARITY).contains(&arity) {
            return Err(Error::input(format!("color arity {arity} outside 1..={MAX_ARITY}")));
        }
        if shape.contains(&0) {
            return Err(Error::input("palette shape has a zero bound"));
        }
        if shape.iter().try_fold(1u64, |acc, &s| acc.checked_mul(s)).is_none() {
            return Err(Error::input("palette shape overflows 64 bits"));
        }
        if !coords.len().is_multiple_of(arity) {
            return Err(Error::input("coordinate buffer length is not a multiple of the arity"));
        }
        for (i, &c) in coords.iter().enumerate() {
            if c >= shape[i % arity] {
                return Err(Error::input(format!(
                    "vertex {} coordinate {} is {c}, bound {}",
                    i / arity,
                    i % arity,
                    shape[i % arity]
                )));
            }
        }
        Ok(ColorAssignment { shape, coords })
    }

    /// Single-coordinate assignment with `bound` colors.
    pub fn scalar(bound: u64, colors: Vec<u64>) -> Result<Self> {
        Self::from_coords(vec![bound.max(1)], colors)
    }

    pub fn arity(&self) -> usize {
        self.shape.len()
    }

    pub fn palette_shape(&self) -> &[u64] {
        &self.shape
    }

    /// Product of the coordinate bounds.
    pub fn palette_size(&self) -> u64 {
        self.shape.iter().product()
    }

    pub fn vertex_count(&self) -> usize {
        self.coords.len() / self.arity()
    }

    pub fn color(&self, v: usize) -> &[u64] {
        let a = self.arity();
        &self.coords[v * a..(v + 1) * a]
    }

    pub fn flat(&self, v: usize) -> u64 {
        self.color(v).iter().zip(&self.shape).fold(0, |acc, (&c, &s)| acc * s + c)
    }

    pub fn flatten(&self) -> Vec<u64> {
        (0..self.vertex_count()).map(|v| self.flat(v)).collect()
    }

    /// Inverse of [`flat`](Self::flat).
    pub fn unflatten(shape: &[u64], mut value: u64) -> Vec<u64> {
        let mut out = vec![0; shape.len()];
        for (slot, &s) in out.iter_mut().zip(shape).rev() {
            *slot = value % s;
            value /= s;
        }
        out
    }

    /// Number of distinct colors actually assigned.
    pub fn colors_used(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.color(v)).collect::<HashSet<_>>().len()
    }

    /// Restriction to the first `n` vertices.
    pub fn truncate(&self, n: usize) -> Self {
        let a = self.arity();
        ColorAssignment { shape: self.shape.clone(), coords: self.coords[..n * a].to_vec() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_out_of_shape() {
        assert!(ColorAssignment::new(vec![2, 3], &[vec![1, 3]]).is_err());
        assert!(ColorAssignment::new(vec![2, 3], &[vec![1]]).is_err());
        assert!(ColorAssignment::new(vec![], &[]).is_err());
        assert!(ColorAssignment::new(vec![1, 1, 1, 1, 1], &[]).is_err());
    }

    #[test]
    fn flat_is_row_major() {
        let c = ColorAssignment::new(vec![2, 3, 3], &[vec![1, 2, 0], vec![0, 0, 2]]).unwrap();
        assert_eq!(c.flatten(), vec![9 + 6, 2]);
        assert_eq!(c.palette_size(), 18);
        assert_eq!(c.colors_used(), 2);
    }

    proptest! {
        #[test]
        fn flattening_is_a_bijection(shape in proptest::collection::vec(1u64..7, 1..=4), seed in 0u64..1000) {
            let size: u64 = shape.iter().product();
            let value = seed % size;
            let tuple = ColorAssignment::unflatten(&shape, value);
            let c = ColorAssignment::new(shape.clone(), &[tuple]).unwrap();
            prop_assert_eq!(c.flat(0), value);
        }
    }
}
