//! Seeded random graph families for tests, benches and the CLI.

use super::{Graph, Vertex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Intersection graph of `n` intervals with left ends uniform in `[0, n)`
/// and lengths uniform in `[0, 4)`.
pub fn random_interval_graph(n: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    let mut iv: Vec<(f64, f64, Vertex)> = (0..n)
        .map(|v| {
            let a = r.gen::<f64>() * n as f64;
            let len = r.gen::<f64>() * 4.0;
            (a, a + len, v)
        })
        .collect();
    iv.sort_by(|x, y| x.0.total_cmp(&y.0));
    let mut edges = Vec::new();
    for i in 0..iv.len() {
        for j in i + 1..iv.len() {
            if iv[j].0 > iv[i].1 {
                break;
            }
            edges.push((iv[i].2, iv[j].2));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Uniform random recursive tree with shuffled labels.
pub fn random_tree<R: Rng>(n: usize, r: &mut R) -> Graph {
    let mut label: Vec<Vertex> = (0..n).collect();
    label.shuffle(r);
    let edges: Vec<_> = (1..n)
        .map(|v| (label[v], label[r.gen_range(0..v)]))
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Random forest: a random tree with each edge kept with probability `keep`.
pub fn random_forest<R: Rng>(n: usize, keep: f64, r: &mut R) -> Graph {
    let t = random_tree(n, r);
    let edges: Vec<_> = t.edges().filter(|_| r.gen_bool(keep)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Erdős–Rényi G(n, p).
pub fn random_gnp<R: Rng>(n: usize, p: f64, r: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random graph with maximum degree at most `max_deg`, built by
/// `attempts` random pair insertions that respect the cap.
pub fn random_bounded_degree<R: Rng>(
    n: usize,
    max_deg: usize,
    attempts: usize,
    r: &mut R,
) -> Graph {
    let mut deg = vec![0usize; n];
    let mut edges = std::collections::BTreeSet::new();
    if n >= 2 {
        for _ in 0..attempts {
            let u = r.gen_range(0..n);
            let v = r.gen_range(0..n);
            if u == v || deg[u] >= max_deg || deg[v] >= max_deg {
                continue;
            }
            if edges.insert((u.min(v), u.max(v))) {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
    }
    let e: Vec<_> = edges.into_iter().collect();
    Graph::from_edges(n, &e).unwrap()
}

/// Dense-ish subcubic graph: `2n` capped insertions at degree 3.
pub fn random_subcubic<R: Rng>(n: usize, r: &mut R) -> Graph {
    random_bounded_degree(n, 3, 2 * n, r)
}

/// Random bipartite graph with sides of the given sizes.
pub fn random_bipartite<R: Rng>(a: usize, b: usize, p: f64, r: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            if r.gen_bool(p) {
                edges.push((u, a + v));
            }
        }
    }
    Graph::from_edges(a + b, &edges).unwrap()
}

/// Random subset where each vertex joins with probability `p`.
pub fn random_subset<R: Rng>(n: usize, p: f64, r: &mut R) -> super::VertexSet {
    let mut s = super::VertexSet::new(n);
    for v in 0..n {
        if r.gen_bool(p) {
            s.insert(v);
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::classify;

    #[test]
    fn interval_edge_cases() {
        assert_eq!(random_interval_graph(0, 1).n(), 0);
        let g = random_interval_graph(1, 1);
        assert_eq!((g.n(), g.edge_count()), (1, 0));
        assert_eq!(random_interval_graph(30, 5), random_interval_graph(30, 5));
    }

    #[test]
    fn trees_are_trees() {
        let mut r = rng(3);
        for n in 1..40 {
            let t = random_tree(n, &mut r);
            let c = classify(&t);
            assert!(c.is_forest);
            assert_eq!(c.components.len(), 1);
        }
    }

    #[test]
    fn bounded_degree_respects_cap() {
        let mut r = rng(9);
        let g = random_subcubic(50, &mut r);
        assert!(g.max_degree() <= 3);
    }
}
