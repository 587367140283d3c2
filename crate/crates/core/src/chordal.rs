//! Minimum-weight independent dominating sets on chordal graphs, and the
//! Ext VC / Max Ext VC / Min Ext IS problems built on them.

use crate::branch::complete_to_certificate;
use crate::certify::{is_independent_dominating_within, Certificate, Decision};
use crate::error::{Error, Result};
use crate::graph::{chordal_peo, is_peo, Graph, Vertex, VertexSet};
use crate::instance::{ExtInstance, ProblemKind};
use crate::oracle::Oracle;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    pub graph: Graph,
    pub weights: Vec<u64>,
}

impl WeightedGraph {
    pub fn new(graph: Graph, weights: Vec<u64>) -> Result<Self> {
        if weights.len() != graph.n() {
            return Err(Error::InvalidInstance(format!(
                "{} weights for {} vertices",
                weights.len(),
                graph.n()
            )));
        }
        Ok(WeightedGraph { graph, weights })
    }
}

/// One non-negative integer per line, vertex order 1..n.
pub fn parse_weights(text: &str, n: usize) -> Result<Vec<u64>> {
    let mut w = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('c') {
            continue;
        }
        w.push(t.parse::<u64>().map_err(|_| Error::Parse {
            line: i + 1,
            msg: format!("bad weight '{t}'"),
        })?);
    }
    if w.len() != n {
        return Err(Error::InvalidInstance(format!("{} weights for {n} vertices", w.len())));
    }
    Ok(w)
}

/// Primal–dual sweep along a perfect elimination ordering.
///
/// The dual has a packing variable `y[v]` per closed neighbourhood and a
/// variable `z[v]` per forward clique `{v} ∪ later neighbours`. The forward
/// pass keeps every reduced weight (slack) non-negative; the backward pass
/// picks tight vertices respecting complementary slackness. The returned set
/// is checked to be independent dominating with weight equal to the dual
/// value, which proves optimality.
pub fn wmisds_chordal(wg: &WeightedGraph, peo: &[Vertex]) -> Result<(u64, VertexSet)> {
    let g = &wg.graph;
    let n = g.n();
    if wg.weights.len() != n {
        return Err(Error::InvalidInstance("weight count differs from n".into()));
    }
    if !is_peo(g, peo) {
        return Err(Error::InvalidPeo);
    }
    let mut pos = vec![0; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    let mut slack: Vec<i128> = wg.weights.iter().map(|&w| w as i128).collect();
    let mut y = vec![0i128; n];
    let mut z = vec![0i128; n];
    for &v in peo {
        z[v] = (-slack[v]).max(0);
        if z[v] > 0 {
            slack[v] += z[v];
            for &u in g.neighbors(v) {
                if pos[u] > pos[v] {
                    slack[u] += z[v];
                }
            }
        }
        let mut m = slack[v];
        for &u in g.neighbors(v) {
            if pos[u] < pos[v] {
                m = m.min(slack[u]);
            }
        }
        y[v] = m;
        slack[v] -= m;
        for &u in g.neighbors(v) {
            slack[u] -= m;
        }
    }
    if slack.iter().any(|&s| s < 0) {
        return Err(Error::Internal("negative reduced weight".into()));
    }
    let dual: i128 = y.iter().sum::<i128>() - z.iter().sum::<i128>();

    let mut s = VertexSet::new(n);
    let mut hits = vec![0usize; n];
    for &v in peo.iter().rev() {
        if slack[v] != 0 || hits[v] != 0 {
            continue;
        }
        if g.neighbors(v).iter().any(|&u| y[u] > 0 && hits[u] != 0) {
            continue;
        }
        s.insert(v);
        hits[v] += 1;
        for &u in g.neighbors(v) {
            hits[u] += 1;
        }
    }
    let weight: u64 = s.iter().map(|v| wg.weights[v]).sum();
    if !is_independent_dominating_within(g, &g.vertices(), &s) || weight as i128 != dual {
        return Err(Error::Internal(format!(
            "primal {weight} does not match dual {dual}"
        )));
    }
    Ok((weight, s))
}

fn chordal_or_err(g: &Graph) -> Result<Vec<Vertex>> {
    chordal_peo(g).ok_or(Error::NotChordal)
}

/// Forced vertices weigh 1, the rest 0, on `g[N[U]]`; returns the optimum
/// and the optimal set in `g` ids.
fn forced_weight_optimum(g: &Graph, u: &VertexSet, peo: &[Vertex]) -> Result<(u64, VertexSet)> {
    let region = g.closed_neighborhood(u);
    let (sub, map) = g.induced_subgraph(&region);
    let mut inv = vec![usize::MAX; g.n()];
    for (i, &v) in map.iter().enumerate() {
        inv[v] = i;
    }
    let sub_peo: Vec<Vertex> = peo
        .iter()
        .filter(|&&v| inv[v] != usize::MAX)
        .map(|&v| inv[v])
        .collect();
    let weights = map.iter().map(|&v| u64::from(u.contains(v))).collect();
    let (val, s) = wmisds_chordal(&WeightedGraph::new(sub, weights)?, &sub_peo)?;
    Ok((val, g.lift(&map, &s)))
}

pub fn decide_ext_vc_chordal(inst: &ExtInstance) -> Result<Decision> {
    inst.expect_kind(ProblemKind::ExtVc)?;
    let g = &inst.graph;
    let peo = chordal_or_err(g)?;
    let (val, s) = forced_weight_optimum(g, &inst.forced, &peo)?;
    if val == 0 {
        Ok(Decision::yes(complete_to_certificate(g, &inst.forced, &s)?))
    } else {
        Ok(Decision::no())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxExt {
    pub value: usize,
    /// The forced vertices that the returned cover keeps.
    pub extendible: VertexSet,
    pub certificate: Certificate,
}

pub fn max_ext_vc_chordal(g: &Graph, u: &VertexSet) -> Result<MaxExt> {
    let peo = chordal_or_err(g)?;
    if !g.is_independent(u) {
        return Err(Error::Unsupported(
            "max_ext_vc_chordal needs an independent forced set".into(),
        ));
    }
    let (val, s) = forced_weight_optimum(g, u, &peo)?;
    let value = u.len() - val as usize;
    let keep = u.difference(&s);
    let mut r = s.difference(u);
    for v in r.clone().iter() {
        if !g.neighbors(v).iter().any(|&x| keep.contains(x)) {
            r.remove(v);
        }
    }
    let certificate = complete_to_certificate(g, &keep, &r)?;
    if certificate.solution.intersection(u).len() != value {
        return Err(Error::Internal("cover keeps more forced vertices than the optimum".into()));
    }
    Ok(MaxExt {
        value,
        extendible: keep,
        certificate,
    })
}

/// Min Ext IS value: |V| minus the Max Ext VC optimum for V∖U.
pub fn min_ext_is_value(g: &Graph, u: &VertexSet) -> Result<usize> {
    let rest = u.complement();
    if g.is_independent(&rest) && chordal_peo(g).is_some() {
        return Ok(g.n() - max_ext_vc_chordal(g, &rest)?.value);
    }
    let oracle = Oracle::from_env();
    if g.n() <= oracle.bound {
        return Ok(g.n() - oracle.max_ext_vc_opt(g, &rest)?.0);
    }
    Err(Error::Unsupported(
        "Min Ext IS needs a chordal graph with independent V∖U or an oracle-sized graph".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::random::{random_tree, rng};
    use crate::graph::random_interval_graph;
    use crate::oracle::{decide_ext_vc_bf, max_ext_vc_opt_bf, min_wisds_bf};
    use rand::Rng;

    fn vs(n: usize, s: &[usize]) -> VertexSet {
        VertexSet::from_slice(n, s)
    }

    fn solve(g: Graph, w: Vec<u64>) -> (u64, VertexSet) {
        let peo = chordal_peo(&g).unwrap();
        wmisds_chordal(&WeightedGraph::new(g, w).unwrap(), &peo).unwrap()
    }

    #[test]
    fn wmisds_examples() {
        assert_eq!(solve(Graph::complete(3), vec![1, 0, 0]).0, 0);
        let (v, s) = solve(Graph::path(3), vec![0, 1, 0]);
        assert_eq!(v, 0);
        assert_eq!(s.to_vec(), vec![0, 2]);
        let g = random_interval_graph(12, 7);
        let mut r = rng(1);
        let w: Vec<u64> = (0..12).map(|_| r.gen_range(0..2)).collect();
        assert_eq!(solve(g.clone(), w.clone()).0, min_wisds_bf(&g, &w).unwrap());
    }

    #[test]
    fn invalid_peo_rejected() {
        let g = Graph::path(3);
        let wg = WeightedGraph::new(g, vec![0, 0, 0]).unwrap();
        assert_eq!(wmisds_chordal(&wg, &[1, 0, 2]), Err(Error::InvalidPeo));
    }

    #[test]
    fn general_weights_on_intervals() {
        let mut r = rng(5);
        for seed in 0..200 {
            let n = r.gen_range(1..11);
            let g = random_interval_graph(n, seed);
            let w: Vec<u64> = (0..n).map(|_| r.gen_range(0..5)).collect();
            assert_eq!(solve(g.clone(), w.clone()).0, min_wisds_bf(&g, &w).unwrap());
        }
    }

    #[test]
    fn decide_examples() {
        let k4 = Graph::complete(4);
        let inst = ExtInstance::vc_from_slice(k4.clone(), &[0]);
        let d = decide_ext_vc_chordal(&inst).unwrap();
        assert!(d.answer);
        assert!(d.certificate.unwrap().verify_vc(&k4, &inst.forced));
        // Minimal covers of K4 are the 3-sets, so {0,1} extends.
        let two = ExtInstance::vc_from_slice(k4.clone(), &[0, 1]);
        assert!(decide_ext_vc_bf(&two).unwrap().answer);
        assert!(decide_ext_vc_chordal(&two).unwrap().answer);
        assert!(!decide_ext_vc_chordal(&ExtInstance::vc_from_slice(k4, &[0, 1, 2, 3])).unwrap().answer);
        assert_eq!(
            decide_ext_vc_chordal(&ExtInstance::vc_from_slice(Graph::cycle(4), &[0])),
            Err(Error::NotChordal)
        );
    }

    #[test]
    fn trees_agree_with_oracle() {
        let mut r = rng(8);
        for _ in 0..200 {
            let n = r.gen_range(1..12);
            let t = random_tree(n, &mut r);
            let u = crate::graph::random::random_subset(n, 0.3, &mut r);
            let inst = ExtInstance::vc(t, u);
            assert_eq!(
                decide_ext_vc_chordal(&inst).unwrap().answer,
                decide_ext_vc_bf(&inst).unwrap().answer
            );
        }
    }

    #[test]
    fn max_ext_examples() {
        let m = max_ext_vc_chordal(&Graph::path(3), &vs(3, &[0, 2])).unwrap();
        assert_eq!(m.value, 2);
        let star = Graph::star(5);
        let leaves = vs(6, &[1, 2, 3, 4, 5]);
        let m = max_ext_vc_chordal(&star, &leaves).unwrap();
        assert_eq!(m.value, 5);
        assert!(m.certificate.verify_vc(&star, &m.extendible));
        assert!(matches!(
            max_ext_vc_chordal(&Graph::path(3), &vs(3, &[0, 1])),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn max_ext_matches_oracle_on_intervals() {
        let mut r = rng(12);
        for seed in 0..150 {
            let n = r.gen_range(1..12);
            let g = random_interval_graph(n, seed + 1000);
            // Random independent set by greedy over a shuffled order.
            let mut u = VertexSet::new(n);
            for v in 0..n {
                if r.gen_bool(0.5) && g.neighbors(v).iter().all(|&w| !u.contains(w)) {
                    u.insert(v);
                }
            }
            let m = max_ext_vc_chordal(&g, &u).unwrap();
            assert_eq!(m.value, max_ext_vc_opt_bf(&g, &u).unwrap().0);
        }
    }

    #[test]
    fn min_ext_is_examples() {
        assert_eq!(min_ext_is_value(&Graph::path(3), &vs(3, &[1])).unwrap(), 1);
        let c5 = Graph::cycle(5);
        assert_eq!(min_ext_is_value(&c5, &VertexSet::full(5)).unwrap(), 5);
        assert_eq!(min_ext_is_value(&Graph::cycle(4), &vs(4, &[0])).unwrap(), 2);
    }

    #[test]
    fn weight_file() {
        assert_eq!(parse_weights("1\n0\n\n3\n", 3).unwrap(), vec![1, 0, 3]);
        assert!(parse_weights("1\n", 2).is_err());
        assert!(parse_weights("x\n", 1).is_err());
    }
}
