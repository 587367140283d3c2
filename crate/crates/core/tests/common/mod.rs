#![allow(dead_code)]

use ext_core::{Graph, VertexSet};

/// Every labeled graph on `n` vertices, by edge mask over pairs (i<j).
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

/// Every labeled graph on at most `max_n` vertices.
pub fn graphs_up_to(max_n: usize) -> impl Iterator<Item = Graph> {
    (0..=max_n).flat_map(labeled_graphs)
}

pub fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u64..1 << n).map(move |m| VertexSet::from_mask(n, m))
}

/// An unsatisfiable (3,B2) formula on 15 variables, found by local search
/// over clause arrangements with exhaustive model counting.
pub const UNSAT_B2_15: &str = "p cnf 15 20
15 -14 -6 0
6 -10 7 0
-15 2 12 0
13 9 -6 0
15 14 -3 0
-3 -12 -15 0
11 -8 5 0
5 1 -11 0
6 -7 13 0
4 1 -5 0
-2 -13 9 0
8 -2 -9 0
4 11 10 0
10 -11 -1 0
12 14 3 0
-12 3 2 0
7 8 -4 0
-10 -9 -1 0
-14 -13 -7 0
-4 -8 -5 0
";
