//! Definition-level checkers.

use crate::graph::{Graph, Vertex, VertexSet};
use crate::hcover::{copies_within, Pattern};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A private edge `(v, t)` with `t` outside the solution.
    Edge(Vertex, Vertex),
    /// A private copy of the pattern.
    Copy(VertexSet),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub solution: VertexSet,
    pub witnesses: BTreeMap<Vertex, Witness>,
}

impl Certificate {
    /// Attaches the smallest private edge to every solution vertex.
    pub fn with_private_edges(g: &Graph, solution: VertexSet) -> Self {
        let mut witnesses = BTreeMap::new();
        for v in solution.iter() {
            if let Some(&t) = g.neighbors(v).iter().find(|&&t| !solution.contains(t)) {
                witnesses.insert(v, Witness::Edge(v, t));
            }
        }
        Certificate {
            solution,
            witnesses,
        }
    }

    /// Checks a minimal vertex cover containing `u`, including the witnesses.
    pub fn verify_vc(&self, g: &Graph, u: &VertexSet) -> bool {
        let s = &self.solution;
        if s.capacity() != g.n() || !u.is_subset(s) || !is_minimal_vertex_cover(g, s) {
            return false;
        }
        s.iter().all(|v| match self.witnesses.get(&v) {
            Some(Witness::Edge(a, t)) => *a == v && g.has_edge(v, *t) && !s.contains(*t),
            _ => false,
        }) && self.witnesses.keys().all(|&v| s.contains(v))
    }

    /// Checks a maximal independent set inside `permitted`.
    pub fn verify_is(&self, g: &Graph, permitted: &VertexSet) -> bool {
        self.solution.capacity() == g.n()
            && self.solution.is_subset(permitted)
            && is_maximal_independent_set(g, &self.solution)
    }

    /// Checks a minimal H-cover containing `u` with its private copies.
    pub fn verify_hcover(&self, g: &Graph, h: &Pattern, u: &VertexSet) -> bool {
        let s = &self.solution;
        if !u.is_subset(s) || !is_minimal_h_cover(g, h, s) {
            return false;
        }
        s.iter().all(|v| match self.witnesses.get(&v) {
            Some(Witness::Copy(k)) => {
                k.intersection(s).to_vec() == vec![v]
                    && copies_within(g, h, Some(k), Some(v)).iter().any(|c| c == k)
            }
            _ => false,
        })
    }
}

/// Result of an extension decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub answer: bool,
    pub certificate: Option<Certificate>,
}

impl Decision {
    pub fn no() -> Self {
        Decision {
            answer: false,
            certificate: None,
        }
    }

    pub fn yes(cert: Certificate) -> Self {
        Decision {
            answer: true,
            certificate: Some(cert),
        }
    }
}

pub fn is_vertex_cover(g: &Graph, s: &VertexSet) -> bool {
    g.edges().all(|(a, b)| s.contains(a) || s.contains(b))
}

pub fn is_minimal_vertex_cover(g: &Graph, s: &VertexSet) -> bool {
    is_vertex_cover(g, s)
        && s
            .iter()
            .all(|v| g.neighbors(v).iter().any(|&t| !s.contains(t)))
}

pub fn is_maximal_independent_set(g: &Graph, s: &VertexSet) -> bool {
    g.is_independent(s) && g.closed_neighborhood(s).len() == g.n()
}

pub fn is_independent_dominating_within(g: &Graph, region: &VertexSet, s: &VertexSet) -> bool {
    if !g.is_independent(s) {
        return false;
    }
    region.iter().all(|v| {
        s.contains(v)
            || g
                .neighbors(v)
                .iter()
                .any(|&t| s.contains(t) && region.contains(t))
    })
}

/// True iff `g[w]` contains no subgraph copy of `h`.
pub fn is_h_free(g: &Graph, h: &Pattern, w: &VertexSet) -> bool {
    !crate::hcover::has_copy(g, h, Some(w), None)
}

pub fn is_minimal_h_cover(g: &Graph, h: &Pattern, s: &VertexSet) -> bool {
    let copies = copies_within(g, h, None, None);
    if copies.iter().any(|k| k.is_disjoint(s)) {
        return false;
    }
    s.iter().all(|v| {
        copies
            .iter()
            .any(|k| k.contains(v) && k.intersection(s).len() == 1)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(n: usize, s: &[usize]) -> VertexSet {
        VertexSet::from_slice(n, s)
    }

    #[test]
    fn vertex_cover_examples() {
        let p3 = Graph::path(3);
        assert!(is_minimal_vertex_cover(&p3, &vs(3, &[1])));
        assert!(!is_minimal_vertex_cover(&p3, &vs(3, &[0, 1])));
        let star = Graph::star(5);
        assert!(is_minimal_vertex_cover(&star, &vs(6, &[1, 2, 3, 4, 5])));
    }

    #[test]
    fn independent_set_examples() {
        assert!(is_maximal_independent_set(&Graph::complete(2), &vs(2, &[0])));
        assert!(!is_maximal_independent_set(&Graph::path(3), &vs(3, &[0])));
        assert!(is_maximal_independent_set(&Graph::cycle(4), &vs(4, &[0, 2])));
    }

    #[test]
    fn dominating_within_examples() {
        let p3 = Graph::path(3);
        let all = vs(3, &[0, 1, 2]);
        assert!(is_independent_dominating_within(&p3, &all, &vs(3, &[1])));
        assert!(!is_independent_dominating_within(&p3, &all, &vs(3, &[0])));
        let p4 = Graph::path(4);
        assert!(is_independent_dominating_within(&p4, &vs(4, &[0, 1, 2, 3]), &vs(4, &[1, 3])));
    }

    #[test]
    fn h_free_examples() {
        let k4 = Graph::complete(4);
        assert!(is_h_free(&k4, &Pattern::k3(), &vs(4, &[0, 1])));
        assert!(!is_h_free(&k4, &Pattern::k3(), &vs(4, &[0, 1, 2])));
        let c5 = Graph::cycle(5);
        assert!(is_h_free(&c5, &Pattern::k2(), &vs(5, &[0, 2])));
    }

    #[test]
    fn h_cover_examples() {
        assert!(is_minimal_h_cover(&Graph::complete(4), &Pattern::k3(), &vs(4, &[0, 1])));
        assert!(!is_minimal_h_cover(&Graph::complete(3), &Pattern::k3(), &vs(3, &[0, 1])));
        let c5 = Graph::cycle(5);
        for mask in 0u64..32 {
            let s = VertexSet::from_mask(5, mask);
            assert_eq!(
                is_minimal_h_cover(&c5, &Pattern::k2(), &s),
                is_minimal_vertex_cover(&c5, &s)
            );
        }
    }

    #[test]
    fn certificate_checks_witnesses() {
        let p3 = Graph::path(3);
        let c = Certificate::with_private_edges(&p3, vs(3, &[0, 2]));
        assert!(c.verify_vc(&p3, &vs(3, &[0])));
        let mut bad = c.clone();
        bad.witnesses.insert(0, Witness::Edge(0, 2));
        assert!(!bad.verify_vc(&p3, &vs(3, &[0])));
    }
}
