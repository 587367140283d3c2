use super::{Graph, VertexSet};
use std::collections::VecDeque;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    /// Sides of a 2-coloring; each component's lowest vertex is on side A.
    pub bipartition: Option<(VertexSet, VertexSet)>,
    pub is_forest: bool,
    pub max_degree: usize,
    /// Components ordered by their lowest vertex.
    pub components: Vec<VertexSet>,
}

pub fn classify(g: &Graph) -> Classification {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    let mut bipartite = true;
    let mut components = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        let mut comp = VertexSet::new(n);
        side[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            comp.insert(v);
            for &w in g.neighbors(v) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    bipartite = false;
                }
            }
        }
        components.push(comp);
    }
    let bipartition = bipartite.then(|| {
        let mut a = VertexSet::new(n);
        let mut b = VertexSet::new(n);
        for v in 0..n {
            if side[v] == 0 {
                a.insert(v);
            } else {
                b.insert(v);
            }
        }
        (a, b)
    });
    Classification {
        bipartition,
        is_forest: g.edge_count() + components.len() == n,
        max_degree: g.max_degree(),
        components,
    }
}
