//! Seeded random graphs, optionally restricted to a hereditary class.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dp::exact_treewidth_le;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::recognition::{is_in_class_c, is_long_hole_free, is_p5_free};

/// Rejections allowed per vertex before giving up.
pub const MAX_ATTEMPTS: usize = 2_000;

/// Largest graph the class-restricted generators accept.
pub const MAX_RANDOM_N: usize = 64;

/// Erdős–Rényi graph `G(n, p)`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Graph::from_fn(n, |_, _| rng.gen_bool(p.clamp(0.0, 1.0)))
}

/// Random graph in a hereditary class: vertices arrive one at a time, each
/// joined to every earlier vertex with probability `p`, and a vertex whose
/// neighborhood takes the graph out of the class is redrawn.
pub fn random_hereditary_graph(n: usize, p: f64, seed: u64, in_class: impl Fn(&Graph) -> bool) -> Result<Graph> {
    if n > MAX_RANDOM_N {
        return Err(Error::TooLarge { n, max: MAX_RANDOM_N });
    }
    let p = p.clamp(0.0, 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj: Vec<VertexSet> = Vec::with_capacity(n);
    for v in 0..n {
        let mut attempts = 0;
        loop {
            let nb: VertexSet = (0..v).filter(|_| rng.gen_bool(p)).collect();
            let mut trial = adj.clone();
            for u in nb {
                trial[u].insert(v);
            }
            trial.push(nb);
            let g = Graph::from_fn(v + 1, |a, b| trial[a].contains(b))?;
            if in_class(&g) {
                adj = trial;
                break;
            }
            attempts += 1;
            if attempts >= MAX_ATTEMPTS {
                return Err(Error::GiveUp { attempts });
            }
        }
    }
    Graph::from_fn(n, |a, b| adj[a].contains(b))
}

pub fn random_class_c_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    random_hereditary_graph(n, p, seed, is_in_class_c)
}

pub fn random_long_hole_free_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    random_hereditary_graph(n, p, seed, is_long_hole_free)
}

pub fn random_p5_free_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    random_hereditary_graph(n, p, seed, is_p5_free)
}

/// A random `F` with `G[F]` of treewidth below `k`: vertices are offered in
/// random order and most of those that keep the bound are kept.
pub fn random_bounded_treewidth_subset(g: &Graph, k: usize, seed: u64) -> Result<VertexSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order = g.vertices().to_vec();
    order.shuffle(&mut rng);
    let mut f = VertexSet::EMPTY;
    if k == 0 {
        return Ok(f);
    }
    for v in order {
        if rng.gen_bool(0.8) && exact_treewidth_le(&g.induced(f.with(v)).0, k - 1)? {
            f.insert(v);
        }
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_examples() {
        assert_eq!(random_class_c_graph(0, 0.5, 1).unwrap().n(), 0);
        assert_eq!(random_class_c_graph(5, 1.0, 1).unwrap(), Graph::complete(5));
        assert_eq!(random_class_c_graph(10, 0.4, 9).unwrap(), random_class_c_graph(10, 0.4, 9).unwrap());
        assert!(matches!(random_class_c_graph(65, 0.4, 9), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn generated_graphs_are_in_their_class() {
        for seed in 0..30 {
            assert!(is_in_class_c(&random_class_c_graph(12, 0.4, seed).unwrap()));
            assert!(is_long_hole_free(&random_long_hole_free_graph(12, 0.4, seed).unwrap()));
            assert!(is_p5_free(&random_p5_free_graph(12, 0.4, seed).unwrap()));
        }
    }

    #[test]
    fn bounded_subsets_respect_the_bound() {
        let g = Graph::prism(4);
        for seed in 0..20 {
            let f = random_bounded_treewidth_subset(&g, 1, seed).unwrap();
            assert!(g.is_independent(f));
            let f = random_bounded_treewidth_subset(&g, 2, seed).unwrap();
            assert!(exact_treewidth_le(&g.induced(f).0, 1).unwrap());
        }
    }

    #[test]
    fn impossible_class_gives_up() {
        assert!(matches!(
            random_hereditary_graph(2, 0.5, 0, |g| g.n() < 2),
            Err(Error::GiveUp { .. })
        ));
    }
}
