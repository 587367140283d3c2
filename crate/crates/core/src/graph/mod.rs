//! Simple undirected graphs over contiguous ids, plus class recognition.

mod classify;
mod dimacs;
mod lexbfs;
pub mod random;
mod vertex_set;

pub use classify::{classify, Classification};
pub use dimacs::{parse_dimacs, write_dimacs};
pub use lexbfs::{chordal_peo, is_peo, lex_bfs};
pub use random::random_interval_graph;
pub use vertex_set::VertexSet;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Immutable simple graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are errors.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m2 = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m2 += list.len();
        }
        Ok(Graph {
            adj,
            edge_count: m2 / 2,
        })
    }

    pub fn path(n: usize) -> Self {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 3 {
            e.push((n - 1, 0));
        }
        Graph::from_edges(n, &e).unwrap()
    }

    pub fn complete(n: usize) -> Self {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Graph::from_edges(n, &e).unwrap()
    }

    /// K_{1,leaves} with center 0.
    pub fn star(leaves: usize) -> Self {
        let e: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &e).unwrap()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn closed_neighborhood(&self, u: &VertexSet) -> VertexSet {
        let mut out = u.clone();
        for v in u.iter() {
            for &w in &self.adj[v] {
                out.insert(w);
            }
        }
        out
    }

    pub fn open_neighborhood(&self, u: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n());
        for v in u.iter() {
            for &w in &self.adj[v] {
                out.insert(w);
            }
        }
        out
    }

    /// Subgraph induced by `w`, renumbered in increasing id order, with the
    /// map from new ids to old ids.
    pub fn induced_subgraph(&self, w: &VertexSet) -> (Graph, Vec<Vertex>) {
        let map: Vec<Vertex> = w.iter().collect();
        let mut inv = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            inv[v] = i;
        }
        let mut adj = Vec::with_capacity(map.len());
        let mut m2 = 0;
        for &v in &map {
            let list: Vec<Vertex> = self.adj[v]
                .iter()
                .filter(|&&x| inv[x] != usize::MAX)
                .map(|&x| inv[x])
                .collect();
            m2 += list.len();
            adj.push(list);
        }
        (
            Graph {
                adj,
                edge_count: m2 / 2,
            },
            map,
        )
    }

    /// Same vertex set with the given edges removed.
    pub fn without_edges(&self, drop: &[(Vertex, Vertex)]) -> Graph {
        let mut adj = self.adj.clone();
        let mut m = self.edge_count;
        for &(u, v) in drop {
            if let Ok(i) = adj[u].binary_search(&v) {
                adj[u].remove(i);
                let j = adj[v].binary_search(&u).unwrap();
                adj[v].remove(j);
                m -= 1;
            }
        }
        Graph { adj, edge_count: m }
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].iter().all(|&w| !s.contains(w)))
    }

    /// Lifts a set on an induced subgraph back to this graph's ids.
    pub fn lift(&self, map: &[Vertex], s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n());
        for v in s.iter() {
            out.insert(map[v]);
        }
        out
    }

    /// Proper coloring that scans `order` and assigns each vertex the
    /// smallest color unused by its already colored neighbours.
    pub fn greedy_coloring(&self, order: &[Vertex]) -> Vec<usize> {
        assert_eq!(order.len(), self.n(), "order must be a permutation");
        let mut color = vec![usize::MAX; self.n()];
        let mut seen = vec![usize::MAX; self.n() + 1];
        for &v in order {
            for &w in &self.adj[v] {
                if color[w] != usize::MAX {
                    seen[color[w]] = v;
                }
            }
            let c = (0..).find(|&c| seen[c] != v).unwrap();
            color[v] = c;
        }
        color
    }
}

/// Free-function form used by the CLI and tests.
pub fn greedy_coloring(g: &Graph, order: &[Vertex]) -> Vec<usize> {
    g.greedy_coloring(order)
}
