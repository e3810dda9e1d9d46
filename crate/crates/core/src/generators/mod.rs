//! Graph families: lower-bound constructions, random members of the
//! upper-bound classes with their structural certificates, and classics.

pub mod classics;
mod fans;
mod lower_bound;
mod product;
mod random;

pub use fans::{g_k_graph, tree_of_fans, tree_of_fans_decomposition, GkGraph};
pub use lower_bound::{lower_bound_graph, lower_bound_size};
pub use product::{synth_product_instance, ProductInstance};
pub use random::{
    random_bounded_degree, random_maximal_outerplanar, random_simple_ktree, random_stacked_triangulation,
};

/// Default cap on generated graph sizes.
pub const DEFAULT_SIZE_CAP: usize = 1_000_000;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The seeded generator behind every randomized routine in the crate.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random relabeling `old -> new` of `0..n`.
pub(crate) fn random_permutation(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}
