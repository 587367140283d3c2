//! Approximations for Max Ext VC.

use crate::branch::complete_avoiding;
use crate::certify::Certificate;
use crate::error::{Error, Result};
use crate::graph::{classify, Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Approx {
    /// |S ∩ U| for the returned cover S.
    pub value: usize,
    pub certificate: Certificate,
    /// Color classes used (degree method only; 0 otherwise).
    pub classes: usize,
}

/// Per component, the bipartition side with more forced vertices.
pub fn approx_bipartite(g: &Graph, u: &VertexSet) -> Result<Approx> {
    let c = classify(g);
    let (a, b) = c.bipartition.ok_or(Error::NotBipartite)?;
    let mut s = VertexSet::new(g.n());
    for comp in &c.components {
        if comp.len() < 2 {
            continue;
        }
        let ca = comp.intersection(&a);
        let cb = comp.intersection(&b);
        let side = if ca.intersection(u).len() >= cb.intersection(u).len() {
            ca
        } else {
            cb
        };
        s = s.union(&side);
    }
    let value = s.intersection(u).len();
    Ok(Approx {
        value,
        certificate: Certificate::with_private_edges(g, s),
        classes: 0,
    })
}

/// Colors g[N(U)∖U] greedily and keeps the class that dominates the most
/// forced vertices.
pub fn approx_degree(g: &Graph, u: &VertexSet) -> Result<Approx> {
    let n = g.n();
    let ring = g.open_neighborhood(u).difference(u);
    let (sub, map) = g.induced_subgraph(&ring);
    let order: Vec<usize> = (0..sub.n()).collect();
    let color = sub.greedy_coloring(&order);
    let classes = color.iter().copied().max().map_or(0, |m| m + 1);
    let mut best: Option<(usize, VertexSet, VertexSet)> = None;
    for c in 0..classes {
        let mut cls = VertexSet::new(n);
        for i in (0..sub.n()).filter(|&i| color[i] == c) {
            cls.insert(map[i]);
        }
        let reach = g.open_neighborhood(&cls).intersection(u);
        if best.as_ref().is_none_or(|(k, _, _)| reach.len() > *k) {
            best = Some((reach.len(), cls, reach));
        }
    }
    let (keep, r) = match best {
        Some((_, cls, reach)) => (reach, cls),
        None => (VertexSet::new(n), VertexSet::new(n)),
    };
    let certificate = complete_avoiding(g, &keep, &r, Some(u))?;
    Ok(Approx {
        value: certificate.solution.intersection(u).len(),
        certificate,
        classes,
    })
}
