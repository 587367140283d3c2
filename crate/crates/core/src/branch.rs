//! Exact Ext VC solvers: private-edge branching and min-degree branching.

use crate::certify::{Certificate, Decision, Witness};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::instance::{ExtInstance, ProblemKind};
use crate::kernel::{apply_rules, Verdict};
use std::collections::BTreeMap;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BranchStats {
    pub nodes_expanded: u64,
    pub max_depth: usize,
    /// Indexed by `Rule::index()`.
    pub rule_firings: [u64; 8],
    /// Number of branching children created.
    pub branches: u64,
    /// Fewest forced vertices removed by a single branching choice.
    pub min_forced_removed: Option<usize>,
}

impl BranchStats {
    fn note_branch(&mut self, removed: usize) {
        self.branches += 1;
        self.min_forced_removed = Some(self.min_forced_removed.map_or(removed, |m| m.min(removed)));
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solved {
    pub decision: Decision,
    pub stats: BranchStats,
}

/// Turns an independent set `r` that dominates `u` into a minimal vertex
/// cover containing `u`.
pub fn complete_to_certificate(g: &Graph, u: &VertexSet, r: &VertexSet) -> Result<Certificate> {
    complete_avoiding(g, u, r, None)
}

/// As `complete_to_certificate`; the greedy extension takes vertices outside
/// `avoid` before vertices inside it.
pub(crate) fn complete_avoiding(
    g: &Graph,
    u: &VertexSet,
    r: &VertexSet,
    avoid: Option<&VertexSet>,
) -> Result<Certificate> {
    let n = g.n();
    if u.capacity() != n || r.capacity() != n {
        return Err(Error::Precondition("set capacity differs from graph order".into()));
    }
    if !r.is_disjoint(u) {
        return Err(Error::Precondition("r meets U".into()));
    }
    if let Some(v) = r
        .iter()
        .find(|&v| !g.neighbors(v).iter().any(|&w| u.contains(w)))
    {
        return Err(Error::Precondition(format!("vertex {v} of r has no neighbour in U")));
    }
    if !g.is_independent(r) {
        return Err(Error::Precondition("r is not independent".into()));
    }
    let mut witnesses = BTreeMap::new();
    for x in u.iter() {
        match g.neighbors(x).iter().find(|&&w| r.contains(w)) {
            Some(&t) => {
                witnesses.insert(x, Witness::Edge(x, t));
            }
            None => {
                return Err(Error::Precondition(format!("U-vertex {x} not dominated by r")));
            }
        }
    }
    let mut indep = r.clone();
    let mut blocked = g.closed_neighborhood(r);
    let passes: Vec<Box<dyn Fn(Vertex) -> bool>> = match avoid {
        Some(a) => {
            let a1 = a.clone();
            let a2 = a.clone();
            vec![Box::new(move |v| !a1.contains(v)), Box::new(move |v| a2.contains(v))]
        }
        None => vec![Box::new(|_| true)],
    };
    for pass in &passes {
        for v in 0..n {
            if !blocked.contains(v) && pass(v) {
                indep.insert(v);
                blocked.insert(v);
                for &w in g.neighbors(v) {
                    blocked.insert(w);
                }
            }
        }
    }
    let solution = indep.complement();
    for v in solution.iter() {
        if witnesses.contains_key(&v) {
            continue;
        }
        let t = g
            .neighbors(v)
            .iter()
            .copied()
            .find(|&t| !solution.contains(t))
            .expect("complement of a maximal independent set");
        witnesses.insert(v, Witness::Edge(v, t));
    }
    let cert = Certificate {
        solution,
        witnesses,
    };
    if !cert.verify_vc(g, u) {
        return Err(Error::Internal("completed certificate does not verify".into()));
    }
    Ok(cert)
}

fn finish(inst: &ExtInstance, excluded: Option<VertexSet>, stats: BranchStats) -> Result<Solved> {
    let decision = match excluded {
        Some(r) => Decision::yes(complete_to_certificate(&inst.graph, &inst.forced, &r)?),
        None => Decision::no(),
    };
    Ok(Solved { decision, stats })
}

struct Fpt<'a> {
    g: &'a Graph,
    in_u: &'a VertexSet,
    stats: BranchStats,
    chosen: Vec<Vertex>,
}

impl Fpt<'_> {
    fn take(&mut self, x: Vertex, alive: &mut VertexSet, left: &mut VertexSet) {
        alive.remove(x);
        left.remove(x);
        for &w in self.g.neighbors(x) {
            alive.remove(w);
            left.remove(w);
        }
        self.chosen.push(x);
    }

    fn run(&mut self, depth: usize, mut alive: VertexSet, mut left: VertexSet) -> bool {
        self.stats.nodes_expanded += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        let mark = self.chosen.len();
        loop {
            if left.is_empty() {
                return true;
            }
            // Fail-first: the forced vertex with the fewest private-edge options.
            let mut best: Option<(usize, Vertex)> = None;
            for u in left.iter() {
                let c = self
                    .g
                    .neighbors(u)
                    .iter()
                    .filter(|&&x| alive.contains(x) && !self.in_u.contains(x))
                    .count();
                if best.is_none_or(|(bc, _)| c < bc) {
                    best = Some((c, u));
                }
            }
            let (count, u) = best.unwrap();
            let cands: Vec<Vertex> = self
                .g
                .neighbors(u)
                .iter()
                .copied()
                .filter(|&x| alive.contains(x) && !self.in_u.contains(x))
                .collect();
            match count {
                0 => {
                    self.chosen.truncate(mark);
                    return false;
                }
                1 => self.take(cands[0], &mut alive, &mut left),
                _ => {
                    // Forced picks made in this node stay below `forced_end`.
                    let forced_end = self.chosen.len();
                    for x in cands {
                        let mut a = alive.clone();
                        let mut l = left.clone();
                        let before = l.len();
                        self.take(x, &mut a, &mut l);
                        self.stats.note_branch(before - l.len());
                        if self.run(depth + 1, a, l) {
                            return true;
                        }
                        self.chosen.truncate(forced_end);
                    }
                    self.chosen.truncate(mark);
                    return false;
                }
            }
        }
    }
}

/// Branches on the private-edge partner of one forced vertex at a time.
/// Single-option choices are taken inside the current node, so the node
/// count is bounded by Δ^|U| + 1.
pub fn solve_fpt(inst: &ExtInstance) -> Result<Solved> {
    inst.expect_kind(ProblemKind::ExtVc)?;
    let g = &inst.graph;
    let mut f = Fpt {
        g,
        in_u: &inst.forced,
        stats: BranchStats::default(),
        chosen: Vec::new(),
    };
    let ok = f.run(0, g.vertices(), inst.forced.clone());
    let bound = (g.max_degree() as u128)
        .checked_pow(inst.forced.len() as u32)
        .map_or(u128::MAX, |b| b.saturating_add(1));
    assert!(
        f.stats.nodes_expanded as u128 <= bound,
        "node bound violated: {} > {bound}",
        f.stats.nodes_expanded
    );
    let excluded = ok.then(|| VertexSet::from_slice(g.n(), &f.chosen));
    finish(inst, excluded, f.stats)
}

struct Exact {
    stats: BranchStats,
}

impl Exact {
    /// Returns excluded vertices (input ids) of some solution.
    fn node(&mut self, inst: &ExtInstance, depth: usize) -> Option<VertexSet> {
        self.stats.nodes_expanded += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        let red = apply_rules(inst).expect("Ext VC instance");
        for (c, f) in self.stats.rule_firings.iter_mut().zip(red.trace.firings()) {
            *c += f;
        }
        let mut excluded = red.excluded(inst.n());
        match red.verdict {
            Some(Verdict::No) => return None,
            Some(Verdict::Yes) => return Some(excluded),
            None => {}
        }
        let rg = &red.instance;
        let comps = crate::graph::classify(&rg.graph).components;
        for comp in comps {
            let (cg, cmap) = rg.graph.induced_subgraph(&comp);
            let cu = VertexSet::from_slice(
                cg.n(),
                &(0..cg.n())
                    .filter(|&i| rg.forced.contains(cmap[i]))
                    .collect::<Vec<_>>(),
            );
            let sub = ExtInstance::vc(cg, cu);
            let r = self.branch(&sub, depth)?;
            for v in r.iter() {
                excluded.insert(red.origin[cmap[v]]);
            }
        }
        Some(excluded)
    }

    fn branch(&mut self, inst: &ExtInstance, depth: usize) -> Option<VertexSet> {
        let g = &inst.graph;
        let u = &inst.forced;
        let v = (0..g.n()).min_by_key(|&v| (g.degree(v), v))?;
        let mut cands: Vec<Vertex> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&x| !u.contains(x))
            .collect();
        if !u.contains(v) {
            cands.push(v);
            cands.sort_unstable();
        }
        for w in cands {
            let mut keep = g.vertices();
            keep.remove(w);
            for &x in g.neighbors(w) {
                keep.remove(x);
            }
            let removed = u.difference(&keep).len();
            self.stats.note_branch(removed);
            let (cg, map) = g.induced_subgraph(&keep);
            let cu = VertexSet::from_slice(
                cg.n(),
                &(0..cg.n()).filter(|&i| u.contains(map[i])).collect::<Vec<_>>(),
            );
            if let Some(r) = self.node(&ExtInstance::vc(cg, cu), depth + 1) {
                let mut out = VertexSet::from_slice(g.n(), &[w]);
                for x in r.iter() {
                    out.insert(map[x]);
                }
                return Some(out);
            }
        }
        None
    }
}

/// Reduce, split into components, branch on a minimum-degree vertex.
pub fn solve_exact(inst: &ExtInstance) -> Result<Solved> {
    inst.expect_kind(ProblemKind::ExtVc)?;
    let mut e = Exact {
        stats: BranchStats::default(),
    };
    let excluded = e.node(inst, 0);
    finish(inst, excluded, e.stats)
}
