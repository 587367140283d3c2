//! Pattern copies, Ext H-cover and Ext induced H-free.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use std::collections::BTreeSet;

pub const PATTERN_BOUND: usize = 5;
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// A small fixed pattern graph H.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    graph: Graph,
    order: Vec<Vertex>,
}

impl Pattern {
    pub fn new(graph: Graph) -> Result<Self> {
        let n = graph.n();
        if n < 2 {
            return Err(Error::InvalidInstance("pattern needs at least 2 vertices".into()));
        }
        if n > PATTERN_BOUND {
            return Err(Error::BoundExceeded {
                n,
                bound: PATTERN_BOUND,
            });
        }
        // BFS order per component so each later vertex usually has a mapped
        // neighbour when it is placed.
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut i = order.len();
            order.push(s);
            while i < order.len() {
                let v = order[i];
                i += 1;
                for &w in graph.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        order.push(w);
                    }
                }
            }
        }
        Ok(Pattern { graph, order })
    }

    pub fn k2() -> Self {
        Pattern::new(Graph::complete(2)).unwrap()
    }

    pub fn k3() -> Self {
        Pattern::new(Graph::complete(3)).unwrap()
    }

    pub fn p3() -> Self {
        Pattern::new(Graph::path(3)).unwrap()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.n()
    }
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Pattern,
    allowed: Option<&'a VertexSet>,
    map: Vec<Vertex>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn ok(&self, q: Vertex, c: Vertex, placed: usize) -> bool {
        if self.used[c] || self.g.degree(c) < self.h.graph.degree(q) {
            return false;
        }
        if self.allowed.is_some_and(|a| !a.contains(c)) {
            return false;
        }
        self.h.order[..placed].iter().all(|&p| {
            !self.h.graph.has_edge(p, q) || self.g.has_edge(self.map[p], c)
        })
    }

    /// Extends the partial map; `visit` returns false to stop.
    fn run(&mut self, placed: usize, visit: &mut dyn FnMut(&[Vertex]) -> bool) -> bool {
        let k = self.h.order.len();
        if placed == k {
            return visit(&self.map);
        }
        let q = self.h.order[placed];
        if self.map[q] != usize::MAX {
            return self.run(placed + 1, visit);
        }
        let anchor_nb = self.h.order[..placed]
            .iter()
            .copied()
            .find(|&p| self.h.graph.has_edge(p, q));
        let cands: Vec<Vertex> = match anchor_nb {
            Some(p) => self.g.neighbors(self.map[p]).to_vec(),
            None => (0..self.g.n()).collect(),
        };
        for c in cands {
            if !self.ok(q, c, placed) {
                continue;
            }
            self.map[q] = c;
            self.used[c] = true;
            let go = self.run(placed + 1, visit);
            self.used[c] = false;
            self.map[q] = usize::MAX;
            if !go {
                return false;
            }
        }
        true
    }
}

/// Visits every embedding of `h` into `g` (inside `allowed` if given, through
/// `anchor` if given). Stops early when `visit` returns false.
fn embeddings(
    g: &Graph,
    h: &Pattern,
    allowed: Option<&VertexSet>,
    anchor: Option<Vertex>,
    visit: &mut dyn FnMut(&[Vertex]) -> bool,
) {
    let k = h.order();
    let mut s = Search {
        g,
        h,
        allowed,
        map: vec![usize::MAX; k],
        used: vec![false; g.n()],
    };
    match anchor {
        None => {
            s.run(0, visit);
        }
        Some(a) => {
            if allowed.is_some_and(|w| !w.contains(a)) {
                return;
            }
            // Fix the anchor image at each pattern position in turn; order
            // is rotated so the fixed vertex is placed first.
            for q in 0..k {
                if g.degree(a) < h.graph.degree(q) {
                    continue;
                }
                let mut order = vec![q];
                let mut i = 0;
                let mut seen = vec![false; k];
                seen[q] = true;
                while order.len() < k {
                    if i < order.len() {
                        let v = order[i];
                        i += 1;
                        for &w in h.graph.neighbors(v) {
                            if !seen[w] {
                                seen[w] = true;
                                order.push(w);
                            }
                        }
                    } else {
                        let w = (0..k).find(|&w| !seen[w]).unwrap();
                        seen[w] = true;
                        order.push(w);
                    }
                }
                let rotated = Pattern {
                    graph: h.graph.clone(),
                    order,
                };
                let mut s = Search {
                    g,
                    h: &rotated,
                    allowed,
                    map: vec![usize::MAX; k],
                    used: vec![false; g.n()],
                };
                s.map[q] = a;
                s.used[a] = true;
                if !s.run(1, visit) {
                    return;
                }
            }
        }
    }
}

/// Vertex sets of subgraph copies of `h` in `g`, each once, sorted.
pub fn enumerate_copies(g: &Graph, h: &Pattern, anchor: Option<Vertex>) -> Vec<VertexSet> {
    copies_within(g, h, None, anchor)
}

pub(crate) fn copies_within(
    g: &Graph,
    h: &Pattern,
    allowed: Option<&VertexSet>,
    anchor: Option<Vertex>,
) -> Vec<VertexSet> {
    let mut found: BTreeSet<Vec<Vertex>> = BTreeSet::new();
    embeddings(g, h, allowed, anchor, &mut |m| {
        let mut key = m.to_vec();
        key.sort_unstable();
        found.insert(key);
        true
    });
    found
        .into_iter()
        .map(|k| VertexSet::from_slice(g.n(), &k))
        .collect()
}

/// True if some copy of `h` lies inside `allowed` (through `anchor` if given).
pub(crate) fn has_copy(
    g: &Graph,
    h: &Pattern,
    allowed: Option<&VertexSet>,
    anchor: Option<Vertex>,
) -> bool {
    let mut hit = false;
    embeddings(g, h, allowed, anchor, &mut |_| {
        hit = true;
        false
    });
    hit
}

/// Outcome of the Ext H-cover search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HcoverDecision {
    pub answer: bool,
    /// One copy per forced vertex on YES.
    pub family: Vec<(Vertex, VertexSet)>,
}

pub fn decide_ext_hcover(g: &Graph, h: &Pattern, u: &VertexSet) -> Result<HcoverDecision> {
    decide_ext_hcover_with_budget(g, h, u, DEFAULT_BUDGET)
}

pub fn decide_ext_hcover_with_budget(
    g: &Graph,
    h: &Pattern,
    u: &VertexSet,
    budget: u128,
) -> Result<HcoverDecision> {
    let no = HcoverDecision {
        answer: false,
        family: Vec::new(),
    };
    if u.is_empty() {
        return Ok(HcoverDecision {
            answer: true,
            family: Vec::new(),
        });
    }
    // Copies meeting U in exactly one vertex, grouped by that vertex.
    let single: Vec<(Vertex, VertexSet)> = copies_within(g, h, None, None)
        .into_iter()
        .filter_map(|k| {
            let meet = k.intersection(u);
            (meet.len() == 1).then(|| (meet.first().unwrap(), k))
        })
        .collect();
    let mut per_u: Vec<(Vertex, Vec<VertexSet>)> = Vec::new();
    for x in u.iter() {
        let cands: Vec<VertexSet> = single
            .iter()
            .filter(|(y, _)| *y == x)
            .map(|(_, k)| k.clone())
            .collect();
        if cands.is_empty() {
            return Ok(no);
        }
        per_u.push((x, cands));
    }
    let product = per_u
        .iter()
        .fold(1u128, |acc, (_, c)| acc.saturating_mul(c.len() as u128));
    if product > budget {
        return Err(Error::BudgetExceeded(product));
    }
    per_u.sort_by_key(|(x, c)| (c.len(), *x));
    // Candidates with the same footprint outside U are interchangeable.
    let levels: Vec<(Vertex, Vec<(VertexSet, VertexSet)>)> = per_u
        .into_iter()
        .map(|(x, cands)| {
            let mut seen = BTreeSet::new();
            let list = cands
                .into_iter()
                .filter_map(|k| {
                    let outside = k.difference(u);
                    seen.insert(outside.clone()).then_some((outside, k))
                })
                .collect();
            (x, list)
        })
        .collect();
    let mut chosen = Vec::new();
    let w = VertexSet::new(g.n());
    if backtrack(g, h, &levels, 0, &w, &mut chosen) {
        let family = chosen
            .iter()
            .enumerate()
            .map(|(i, &c)| (levels[i].0, levels[i].1[c].1.clone()))
            .collect::<Vec<_>>();
        let mut family = family;
        family.sort_by_key(|(x, _)| *x);
        Ok(HcoverDecision {
            answer: true,
            family,
        })
    } else {
        Ok(no)
    }
}

fn backtrack(
    g: &Graph,
    h: &Pattern,
    levels: &[(Vertex, Vec<(VertexSet, VertexSet)>)],
    depth: usize,
    w: &VertexSet,
    chosen: &mut Vec<usize>,
) -> bool {
    if depth == levels.len() {
        return true;
    }
    for (i, (outside, _)) in levels[depth].1.iter().enumerate() {
        let next = w.union(outside);
        let fresh = outside.difference(w);
        if fresh.iter().any(|v| has_copy(g, h, Some(&next), Some(v))) {
            continue;
        }
        chosen.push(i);
        if backtrack(g, h, levels, depth + 1, &next, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Does some maximal H-free vertex set lie inside `u`?
pub fn decide_ext_induced_hfree(g: &Graph, h: &Pattern, u: &VertexSet) -> Result<bool> {
    Ok(decide_ext_hcover(g, h, &u.complement())?.answer)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(n: usize, s: &[usize]) -> VertexSet {
        VertexSet::from_slice(n, s)
    }

    #[test]
    fn copy_examples() {
        assert_eq!(enumerate_copies(&Graph::complete(4), &Pattern::k3(), None).len(), 4);
        let c = enumerate_copies(&Graph::path(3), &Pattern::k2(), None);
        assert_eq!(c, vec![vs(3, &[0, 1]), vs(3, &[1, 2])]);
        assert!(enumerate_copies(&Graph::cycle(4), &Pattern::k3(), None).is_empty());
        let anchored = enumerate_copies(&Graph::complete(4), &Pattern::k3(), Some(0));
        assert_eq!(anchored.len(), 3);
        assert!(anchored.iter().all(|k| k.contains(0)));
    }

    #[test]
    fn p3_copies_in_k3_dedup() {
        // Three embeddings up to automorphism, one vertex set.
        assert_eq!(enumerate_copies(&Graph::complete(3), &Pattern::p3(), None).len(), 1);
    }

    #[test]
    fn decide_examples() {
        let d = decide_ext_hcover(&Graph::complete(4), &Pattern::k3(), &vs(4, &[0])).unwrap();
        assert!(d.answer);
        assert_eq!(d.family.len(), 1);
        assert!(d.family[0].1.contains(0));
        let d = decide_ext_hcover(&Graph::complete(3), &Pattern::k3(), &vs(3, &[0, 1])).unwrap();
        assert!(!d.answer);
    }

    #[test]
    fn induced_hfree_examples() {
        let k4 = Graph::complete(4);
        assert!(decide_ext_induced_hfree(&k4, &Pattern::k3(), &vs(4, &[1, 2, 3])).unwrap());
        assert!(!decide_ext_induced_hfree(&Graph::cycle(4), &Pattern::k3(), &vs(4, &[])).unwrap());
    }

    #[test]
    fn budget_refusal() {
        let g = Graph::complete(5);
        let err = decide_ext_hcover_with_budget(&g, &Pattern::k2(), &vs(5, &[0, 1]), 1);
        assert!(matches!(err, Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn pattern_bounds() {
        assert!(Pattern::new(Graph::empty(1)).is_err());
        assert!(Pattern::new(Graph::complete(6)).is_err());
    }
}
