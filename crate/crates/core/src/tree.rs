//! Ext VC on forests and the black-and-white tree class 𝒯.

use crate::branch::complete_to_certificate;
use crate::certify::Decision;
use crate::error::{Error, Result};
use crate::graph::{classify, parse_dimacs, write_dimacs, Graph, Vertex, VertexSet};
use crate::instance::{ExtInstance, ProblemKind};
use crate::kernel::{apply_rules, Verdict};
use std::collections::HashMap;

pub const FORBIDDEN_BOUND: usize = 18;

/// Decides Ext VC on a forest with the rule engine, which always reaches a
/// verdict on forests.
pub fn decide_forest(inst: &ExtInstance) -> Result<Decision> {
    inst.expect_kind(ProblemKind::ExtVc)?;
    let g = &inst.graph;
    if g.edge_count() >= g.n().max(1) || !classify(g).is_forest {
        return Err(Error::NotForest);
    }
    let red = apply_rules(inst)?;
    match red.verdict {
        Some(Verdict::Yes) => Ok(Decision::yes(complete_to_certificate(
            g,
            &inst.forced,
            &red.excluded(g.n()),
        )?)),
        Some(Verdict::No) => Ok(Decision::no()),
        None => Err(Error::Internal("rules stalled on a forest".into())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredTree {
    pub tree: Graph,
    pub black: VertexSet,
}

impl ColoredTree {
    pub fn new(tree: Graph, black: VertexSet) -> Result<Self> {
        let c = classify(&tree);
        if tree.n() == 0 || !c.is_forest || c.components.len() != 1 {
            return Err(Error::InvalidInstance("not a tree".into()));
        }
        if black.capacity() != tree.n() {
            return Err(Error::InvalidInstance("black set sized for another graph".into()));
        }
        Ok(ColoredTree { tree, black })
    }

    /// DIMACS block followed by a "b v1 v2 ..." line (1-based).
    pub fn parse(text: &str) -> Result<Self> {
        let mut rest = String::new();
        let mut black_ids: Option<Vec<usize>> = None;
        for (i, line) in text.lines().enumerate() {
            let t = line.trim();
            if let Some(ids) = t.strip_prefix('b').filter(|r| r.is_empty() || r.starts_with(' ')) {
                if black_ids.is_some() {
                    return Err(Error::Parse {
                        line: i + 1,
                        msg: "duplicate b-line".into(),
                    });
                }
                let mut v = Vec::new();
                for tok in ids.split_whitespace() {
                    let x: usize = tok.parse().map_err(|_| Error::Parse {
                        line: i + 1,
                        msg: format!("bad id '{tok}'"),
                    })?;
                    v.push(x);
                }
                black_ids = Some(v);
            } else {
                rest.push_str(line);
                rest.push('\n');
            }
        }
        let tree = parse_dimacs(&rest)?;
        let mut black = VertexSet::new(tree.n());
        for x in black_ids.unwrap_or_default() {
            if x == 0 || x > tree.n() {
                return Err(Error::VertexOutOfRange(x));
            }
            black.insert(x - 1);
        }
        ColoredTree::new(tree, black)
    }

    pub fn to_text(&self) -> String {
        let mut s = write_dimacs(&self.tree);
        s.push('b');
        for v in self.black.iter() {
            s.push_str(&format!(" {}", v + 1));
        }
        s.push('\n');
        s
    }
}

/// Membership in 𝒯 by peeling black–white–white triples off black leaves.
pub fn is_in_t(ct: &ColoredTree) -> bool {
    let t = &ct.tree;
    let black = &ct.black;
    let n = t.n();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut left = n;
    let mut queue: Vec<Vertex> = (0..n).filter(|&v| black.contains(v) && deg[v] == 1).collect();
    let other = |v: Vertex, not: Vertex, alive: &[bool]| {
        t.neighbors(v).iter().copied().find(|&w| w != not && alive[w])
    };
    while let Some(b) = queue.pop() {
        if !alive[b] || deg[b] != 1 {
            continue;
        }
        let Some(w1) = other(b, usize::MAX, &alive) else {
            return false;
        };
        if black.contains(w1) || deg[w1] != 2 {
            return false;
        }
        let Some(w2) = other(w1, b, &alive) else {
            return false;
        };
        if black.contains(w2) || deg[w2] != 2 {
            return false;
        }
        let Some(big) = other(w2, w1, &alive) else {
            return false;
        };
        if !black.contains(big) {
            return false;
        }
        for v in [b, w1, w2] {
            alive[v] = false;
        }
        left -= 3;
        deg[big] -= 1;
        if deg[big] == 1 {
            queue.push(big);
        }
    }
    let accepted = left == 1 && (0..n).any(|v| alive[v] && black.contains(v));
    if accepted {
        debug_assert!((0..n).all(|v| t.degree(v) != 1 || black.contains(v)));
    }
    accepted
}

/// Searches for a connected induced subtree that keeps every contained
/// forced vertex at its full degree and whose coloring (forced = black) lies
/// in 𝒯. Such a subtree exists iff the instance is a NO-instance.
pub fn find_forbidden_subtree(t: &Graph, u: &VertexSet) -> Result<Option<VertexSet>> {
    let n = t.n();
    if n > FORBIDDEN_BOUND {
        return Err(Error::BoundExceeded {
            n,
            bound: FORBIDDEN_BOUND,
        });
    }
    let c = classify(t);
    if !c.is_forest || c.components.len() > 1 {
        return Err(Error::InvalidInstance("not a tree".into()));
    }
    if !t.is_independent(u) {
        return Err(Error::Unsupported("forced set must be independent".into()));
    }
    let mut f = Forbidden {
        t,
        u,
        memo: HashMap::new(),
    };
    for b in u.iter() {
        if f.ok(b, None) {
            let mut out = VertexSet::new(n);
            f.collect(b, None, &mut out);
            return Ok(Some(out));
        }
    }
    Ok(None)
}

struct Forbidden<'a> {
    t: &'a Graph,
    u: &'a VertexSet,
    memo: HashMap<(Vertex, Option<Vertex>), bool>,
}

impl Forbidden<'_> {
    /// A continuation `w1 - w2 - b2` through white neighbour `w1` of `b`.
    fn arm(&mut self, b: Vertex, w1: Vertex) -> Option<(Vertex, Vertex)> {
        if self.u.contains(w1) {
            return None;
        }
        for &w2 in self.t.neighbors(w1) {
            if w2 == b || self.u.contains(w2) {
                continue;
            }
            for &b2 in self.t.neighbors(w2) {
                if b2 != w1 && self.u.contains(b2) && self.ok(b2, Some(w2)) {
                    return Some((w2, b2));
                }
            }
        }
        None
    }

    /// Every neighbour of black `b` except `parent` starts a full arm.
    fn ok(&mut self, b: Vertex, parent: Option<Vertex>) -> bool {
        if let Some(&r) = self.memo.get(&(b, parent)) {
            return r;
        }
        let t = self.t;
        let r = t
            .neighbors(b)
            .iter()
            .filter(|&&w| Some(w) != parent)
            .all(|&w1| self.arm(b, w1).is_some());
        self.memo.insert((b, parent), r);
        r
    }

    fn collect(&mut self, b: Vertex, parent: Option<Vertex>, out: &mut VertexSet) {
        out.insert(b);
        let t = self.t;
        for &w1 in t.neighbors(b) {
            if Some(w1) == parent {
                continue;
            }
            let (w2, b2) = self.arm(b, w1).expect("checked by ok");
            out.insert(w1);
            out.insert(w2);
            self.collect(b2, Some(w2), out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(n: usize, s: &[usize]) -> VertexSet {
        VertexSet::from_slice(n, s)
    }

    fn forest(g: Graph, u: &[usize]) -> bool {
        decide_forest(&ExtInstance::vc_from_slice(g, u)).unwrap().answer
    }

    #[test]
    fn forest_examples() {
        assert!(!forest(Graph::path(4), &[0, 3]));
        assert!(!forest(Graph::path(7), &[0, 3, 6]));
        assert!(forest(Graph::path(7), &[0, 3]));
        let inst = ExtInstance::vc_from_slice(Graph::path(7), &[0, 3]);
        let d = decide_forest(&inst).unwrap();
        assert!(d.certificate.unwrap().verify_vc(&inst.graph, &inst.forced));
    }

    #[test]
    fn forest_rejects_cycles() {
        let inst = ExtInstance::vc_from_slice(Graph::cycle(5), &[0]);
        assert_eq!(decide_forest(&inst), Err(Error::NotForest));
    }

    fn spider() -> ColoredTree {
        // Center 0, legs 0-a-b-c with black tips.
        let mut e = Vec::new();
        let mut black = vec![0];
        for leg in 0..3 {
            let base = 1 + 3 * leg;
            e.push((0, base));
            e.push((base, base + 1));
            e.push((base + 1, base + 2));
            black.push(base + 2);
        }
        let g = Graph::from_edges(10, &e).unwrap();
        ColoredTree::new(g, vs(10, &black)).unwrap()
    }

    #[test]
    fn membership_examples() {
        assert!(is_in_t(&ColoredTree::new(Graph::empty(1), vs(1, &[0])).unwrap()));
        assert!(!is_in_t(&ColoredTree::new(Graph::empty(1), vs(1, &[])).unwrap()));
        assert!(is_in_t(&ColoredTree::new(Graph::path(4), vs(4, &[0, 3])).unwrap()));
        assert!(is_in_t(&ColoredTree::new(Graph::path(7), vs(7, &[0, 3, 6])).unwrap()));
        assert!(is_in_t(&spider()));
        assert!(!is_in_t(&ColoredTree::new(Graph::path(4), vs(4, &[0, 2, 3])).unwrap()));
        assert!(!is_in_t(&ColoredTree::new(Graph::path(3), vs(3, &[0, 2])).unwrap()));
    }

    #[test]
    fn colored_tree_text_roundtrip() {
        let s = spider();
        assert_eq!(ColoredTree::parse(&s.to_text()).unwrap(), s);
        assert!(ColoredTree::parse("p edge 3 3\ne 1 2\ne 2 3\ne 3 1\nb 1\n").is_err());
    }

    #[test]
    fn forbidden_examples() {
        let p7 = Graph::path(7);
        assert_eq!(
            find_forbidden_subtree(&p7, &vs(7, &[0, 3, 6])).unwrap(),
            Some(VertexSet::full(7))
        );
        assert_eq!(find_forbidden_subtree(&p7, &vs(7, &[0, 3])).unwrap(), None);
        assert_eq!(
            find_forbidden_subtree(&Graph::empty(1), &vs(1, &[0])).unwrap(),
            Some(vs(1, &[0]))
        );
        assert!(find_forbidden_subtree(&Graph::path(3), &vs(3, &[0, 1])).is_err());
        assert!(find_forbidden_subtree(&Graph::path(19), &vs(19, &[0])).is_err());
    }

    #[test]
    fn forbidden_subtree_is_edge_full_member() {
        let p10 = Graph::path(10);
        let u = vs(10, &[1, 4, 7]);
        // 1 has both neighbours, so 0 must be an arm start but cannot continue.
        assert_eq!(find_forbidden_subtree(&p10, &u).unwrap(), None);
        let u = vs(10, &[0, 3, 6, 9]);
        let s = find_forbidden_subtree(&p10, &u).unwrap().unwrap();
        let (sub, map) = p10.induced_subgraph(&s);
        let black = VertexSet::from_slice(
            sub.n(),
            &(0..sub.n()).filter(|&i| u.contains(map[i])).collect::<Vec<_>>(),
        );
        assert!(is_in_t(&ColoredTree::new(sub, black).unwrap()));
    }
}
