//! Reduction rules for Ext VC with a replayable trace.
//!
//! Rules fire one at a time: the lowest-numbered applicable rule, and within
//! a rule the lowest vertex id. Rule 6 fires only when 0..5' are idle and
//! removes all of V∖N[U] in one step.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::instance::{ExtInstance, ProblemKind};
use std::collections::{BTreeSet, HashSet};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    R0,
    R1,
    R2,
    R3,
    R4,
    R5,
    R5Prime,
    R6,
}

impl Rule {
    pub const ALL: [Rule; 8] = [
        Rule::R0,
        Rule::R1,
        Rule::R2,
        Rule::R3,
        Rule::R4,
        Rule::R5,
        Rule::R5Prime,
        Rule::R6,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Rule::R0 => "R0",
            Rule::R1 => "R1",
            Rule::R2 => "R2",
            Rule::R3 => "R3",
            Rule::R4 => "R4",
            Rule::R5 => "R5",
            Rule::R5Prime => "R5'",
            Rule::R6 => "R6",
        }
    }

    fn from_name(s: &str) -> Option<Rule> {
        Rule::ALL.into_iter().find(|r| r.name() == s)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
}

impl Verdict {
    pub fn answer(self) -> bool {
        self == Verdict::Yes
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub rule: Rule,
    pub removed_vertices: Vec<Vertex>,
    pub removed_edges: Vec<(Vertex, Vertex)>,
    pub removed_forced: Vec<Vertex>,
    pub verdict: Option<Verdict>,
    /// Vertex committed to stay outside the cover (R4, R5, R5'). Not part of
    /// the text form.
    pub excluded: Option<Vertex>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<Step>,
}

fn join_ids(ids: &[Vertex]) -> String {
    if ids.is_empty() {
        return "-".into();
    }
    ids.iter()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_ids(s: &str, line: usize) -> Result<Vec<Vertex>> {
    if s == "-" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| match t.parse::<usize>() {
            Ok(v) if v >= 1 => Ok(v - 1),
            _ => Err(Error::Parse {
                line,
                msg: format!("bad id '{t}'"),
            }),
        })
        .collect()
}

impl ReductionTrace {
    pub fn verdict(&self) -> Option<Verdict> {
        self.steps.last().and_then(|s| s.verdict)
    }

    pub fn firings(&self) -> [u64; 8] {
        let mut c = [0; 8];
        for s in &self.steps {
            c[s.rule.index()] += 1;
        }
        c
    }

    /// One line per step, 1-based ids.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.steps {
            let edges = if s.removed_edges.is_empty() {
                "-".to_string()
            } else {
                s.removed_edges
                    .iter()
                    .map(|(a, b)| format!("{}-{}", a + 1, b + 1))
                    .collect::<Vec<_>>()
                    .join(",")
            };
            out.push_str(&format!(
                "rule={} removed_v={} removed_e={} removed_u={}",
                s.rule,
                join_ids(&s.removed_vertices),
                edges,
                join_ids(&s.removed_forced)
            ));
            match s.verdict {
                Some(Verdict::Yes) => out.push_str(" verdict=YES"),
                Some(Verdict::No) => out.push_str(" verdict=NO"),
                None => {}
            }
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut steps = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let lno = i + 1;
            if line.trim().is_empty() {
                continue;
            }
            let bad = |msg: &str| Error::Parse {
                line: lno,
                msg: msg.to_string(),
            };
            let mut step = Step {
                rule: Rule::R0,
                removed_vertices: Vec::new(),
                removed_edges: Vec::new(),
                removed_forced: Vec::new(),
                verdict: None,
                excluded: None,
            };
            let mut have_rule = false;
            for tok in line.split_whitespace() {
                let (k, v) = tok.split_once('=').ok_or_else(|| bad("expected key=value"))?;
                match k {
                    "rule" => {
                        step.rule = Rule::from_name(v).ok_or_else(|| bad("unknown rule"))?;
                        have_rule = true;
                    }
                    "removed_v" => step.removed_vertices = parse_ids(v, lno)?,
                    "removed_u" => step.removed_forced = parse_ids(v, lno)?,
                    "removed_e" => {
                        if v != "-" {
                            for pair in v.split(',') {
                                let (a, b) = pair.split_once('-').ok_or_else(|| bad("bad edge"))?;
                                let a = parse_ids(a, lno)?;
                                let b = parse_ids(b, lno)?;
                                step.removed_edges.push((a[0], b[0]));
                            }
                        }
                    }
                    "verdict" => {
                        step.verdict = Some(match v {
                            "YES" => Verdict::Yes,
                            "NO" => Verdict::No,
                            _ => return Err(bad("bad verdict")),
                        })
                    }
                    _ => return Err(bad("unknown key")),
                }
            }
            if !have_rule {
                return Err(bad("missing rule"));
            }
            steps.push(step);
        }
        Ok(ReductionTrace { steps })
    }

    /// Applies the recorded deletions to `original`.
    pub fn replay(&self, original: &ExtInstance) -> Reduced {
        let g = &original.graph;
        let mut alive = vec![true; g.n()];
        let mut forced = original.forced.clone();
        let mut dropped = HashSet::new();
        for s in &self.steps {
            for &v in &s.removed_vertices {
                alive[v] = false;
            }
            for &(a, b) in &s.removed_edges {
                dropped.insert((a.min(b), a.max(b)));
            }
            for &v in &s.removed_forced {
                forced.remove(v);
            }
        }
        let (instance, origin) = materialize(g, &alive, &forced, &dropped);
        Reduced {
            instance,
            origin,
            trace: self.clone(),
            verdict: self.verdict(),
        }
    }
}

fn materialize(
    g: &Graph,
    alive: &[bool],
    forced: &VertexSet,
    dropped: &HashSet<(Vertex, Vertex)>,
) -> (ExtInstance, Vec<Vertex>) {
    let origin: Vec<Vertex> = (0..g.n()).filter(|&v| alive[v]).collect();
    let mut inv = vec![usize::MAX; g.n()];
    for (i, &v) in origin.iter().enumerate() {
        inv[v] = i;
    }
    let edges: Vec<_> = g
        .edges()
        .filter(|&(a, b)| alive[a] && alive[b] && !dropped.contains(&(a, b)))
        .map(|(a, b)| (inv[a], inv[b]))
        .collect();
    let graph = Graph::from_edges(origin.len(), &edges).unwrap();
    let mut u = VertexSet::new(origin.len());
    for (i, &v) in origin.iter().enumerate() {
        if forced.contains(v) {
            u.insert(i);
        }
    }
    (ExtInstance::vc(graph, u), origin)
}

/// Output of the rule engine.
#[derive(Clone, Debug)]
pub struct Reduced {
    pub instance: ExtInstance,
    /// Reduced id → input id.
    pub origin: Vec<Vertex>,
    pub trace: ReductionTrace,
    pub verdict: Option<Verdict>,
}

impl Reduced {
    /// Vertices committed outside the cover, in input ids. Independent and
    /// dominating every removed forced vertex.
    pub fn excluded(&self, n: usize) -> VertexSet {
        let mut r = VertexSet::new(n);
        for s in &self.trace.steps {
            if let Some(x) = s.excluded {
                r.insert(x);
            }
        }
        r
    }
}

struct Reducer<'a> {
    g: &'a Graph,
    alive: Vec<bool>,
    in_u: Vec<bool>,
    deg: Vec<usize>,
    u_deg: Vec<usize>,
    nonu_deg: Vec<usize>,
    u_count: usize,
    uu_edges: Vec<(Vertex, Vertex)>,
    uu_next: usize,
    dropped: HashSet<(Vertex, Vertex)>,
    q1: BTreeSet<Vertex>,
    q2: BTreeSet<Vertex>,
    q4: BTreeSet<Vertex>,
    q5: BTreeSet<Vertex>,
    q5p: BTreeSet<Vertex>,
    q6: BTreeSet<Vertex>,
    steps: Vec<Step>,
    finished: bool,
    scratch: Vec<(u8, Vertex)>,
}

impl<'a> Reducer<'a> {
    fn new(inst: &'a ExtInstance) -> Self {
        let g = &inst.graph;
        let n = g.n();
        let in_u: Vec<bool> = (0..n).map(|v| inst.forced.contains(v)).collect();
        let mut r = Reducer {
            g,
            alive: vec![true; n],
            deg: (0..n).map(|v| g.degree(v)).collect(),
            u_deg: (0..n)
                .map(|v| g.neighbors(v).iter().filter(|&&w| in_u[w]).count())
                .collect(),
            nonu_deg: (0..n)
                .map(|v| g.neighbors(v).iter().filter(|&&w| !in_u[w]).count())
                .collect(),
            u_count: inst.forced.len(),
            uu_edges: g.edges().filter(|&(a, b)| in_u[a] && in_u[b]).collect(),
            in_u,
            uu_next: 0,
            dropped: HashSet::new(),
            q1: BTreeSet::new(),
            q2: BTreeSet::new(),
            q4: BTreeSet::new(),
            q5: BTreeSet::new(),
            q5p: BTreeSet::new(),
            q6: BTreeSet::new(),
            steps: Vec::new(),
            finished: false,
            scratch: Vec::new(),
        };
        // Bulk-build the initial queues from sorted runs.
        let mut wants = Vec::new();
        for v in 0..n {
            r.wanted(v, &mut wants);
        }
        let mut runs: [Vec<Vertex>; 6] = Default::default();
        for (q, x) in wants {
            runs[q as usize].push(x);
        }
        for (q, mut run) in runs.into_iter().enumerate() {
            run.sort_unstable();
            *r.queue(q as u8) = run.into_iter().collect();
        }
        r
    }

    fn live_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.alive[a]
            && self.alive[b]
            && !(self.in_u[a] && self.in_u[b] && self.dropped.contains(&(a.min(b), a.max(b))))
    }

    fn live_neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.g
            .neighbors(v)
            .iter()
            .copied()
            .filter(move |&w| self.live_edge(v, w))
    }

    fn touch(&mut self, v: Vertex) {
        let mut wants = std::mem::take(&mut self.scratch);
        self.wanted(v, &mut wants);
        for &(q, x) in &wants {
            self.queue(q).insert(x);
        }
        wants.clear();
        self.scratch = wants;
    }

    fn queue(&mut self, q: u8) -> &mut BTreeSet<Vertex> {
        match q {
            0 => &mut self.q1,
            1 => &mut self.q2,
            2 => &mut self.q4,
            3 => &mut self.q5,
            4 => &mut self.q5p,
            _ => &mut self.q6,
        }
    }

    /// Queue entries (queue index, vertex) that `v`'s current state calls for.
    fn wanted(&self, v: Vertex, out: &mut Vec<(u8, Vertex)>) {
        if !self.alive[v] {
            return;
        }
        if self.in_u[v] {
            match self.deg[v] {
                0 => out.push((0, v)),
                1 => out.push((2, v)),
                _ => {}
            }
        } else {
            if self.deg[v] == 0 {
                out.push((1, v));
            }
            if self.deg[v] >= 1 && self.nonu_deg[v] == 0 {
                out.push((4, v));
            }
            if self.u_deg[v] == 0 {
                out.push((5, v));
            }
            if self.deg[v] == 1 && self.u_deg[v] == 1 {
                if let Some(u) = self.live_neighbors(v).next() {
                    out.push((3, u));
                }
            }
        }
    }

    fn kill(&mut self, vs: &[Vertex]) {
        let mut hit = Vec::new();
        for &v in vs {
            if !self.alive[v] {
                continue;
            }
            let nbrs: Vec<Vertex> = self.live_neighbors(v).collect();
            self.alive[v] = false;
            if self.in_u[v] {
                self.u_count -= 1;
            }
            for w in nbrs {
                self.deg[w] -= 1;
                if self.in_u[v] {
                    self.u_deg[w] -= 1;
                } else {
                    self.nonu_deg[w] -= 1;
                }
                hit.push(w);
            }
        }
        for w in hit {
            self.touch(w);
        }
    }

    fn pop_valid(
        q: &mut BTreeSet<Vertex>,
        mut valid: impl FnMut(Vertex) -> bool,
    ) -> Option<Vertex> {
        while let Some(v) = q.pop_first() {
            if valid(v) {
                return Some(v);
            }
        }
        None
    }

    fn push(&mut self, rule: Rule, removed: Vec<Vertex>, excluded: Option<Vertex>) {
        let mut removed = removed;
        removed.sort_unstable();
        removed.dedup();
        let removed_forced = removed.iter().copied().filter(|&v| self.in_u[v]).collect();
        self.kill(&removed);
        self.steps.push(Step {
            rule,
            removed_vertices: removed,
            removed_edges: Vec::new(),
            removed_forced,
            verdict: None,
            excluded,
        });
    }

    fn verdict(&mut self, rule: Rule, v: Verdict) {
        self.steps.push(Step {
            rule,
            removed_vertices: Vec::new(),
            removed_edges: Vec::new(),
            removed_forced: Vec::new(),
            verdict: Some(v),
            excluded: None,
        });
        self.finished = true;
    }

    /// Fires one rule; false at a fixpoint or after a verdict.
    fn step(&mut self) -> bool {
        if self.finished {
            return false;
        }
        if self.u_count == 0 {
            self.verdict(Rule::R0, Verdict::Yes);
            return true;
        }
        let (alive, in_u, deg) = (&self.alive, &self.in_u, &self.deg);
        if Self::pop_valid(&mut self.q1, |v| alive[v] && in_u[v] && deg[v] == 0).is_some() {
            self.verdict(Rule::R1, Verdict::No);
            return true;
        }
        if let Some(x) = Self::pop_valid(&mut self.q2, |v| alive[v] && !in_u[v] && deg[v] == 0) {
            self.push(Rule::R2, vec![x], None);
            return true;
        }
        while self.uu_next < self.uu_edges.len() {
            let (a, b) = self.uu_edges[self.uu_next];
            self.uu_next += 1;
            if self.alive[a] && self.alive[b] {
                self.dropped.insert((a, b));
                for v in [a, b] {
                    self.deg[v] -= 1;
                    self.u_deg[v] -= 1;
                }
                self.touch(a);
                self.touch(b);
                self.steps.push(Step {
                    rule: Rule::R3,
                    removed_vertices: Vec::new(),
                    removed_edges: vec![(a, b)],
                    removed_forced: Vec::new(),
                    verdict: None,
                    excluded: None,
                });
                return true;
            }
        }
        if let Some(u) = Self::pop_valid(&mut self.q4, |v| alive[v] && in_u[v] && deg[v] == 1) {
            let x = self.live_neighbors(u).next().unwrap();
            let mut removed: Vec<Vertex> = self.live_neighbors(x).collect();
            removed.push(x);
            self.push(Rule::R4, removed, Some(x));
            return true;
        }
        let mut r5 = None;
        while let Some(u) = self.q5.pop_first() {
            if !(self.alive[u] && self.in_u[u]) {
                continue;
            }
            let x = self
                .live_neighbors(u)
                .find(|&x| !self.in_u[x] && self.deg[x] == 1);
            if let Some(x) = x {
                r5 = Some((u, x));
                break;
            }
        }
        if let Some((u, x)) = r5 {
            self.push(Rule::R5, vec![u, x], Some(x));
            return true;
        }
        let nonu = &self.nonu_deg;
        if let Some(x) = Self::pop_valid(&mut self.q5p, |v| {
            alive[v] && !in_u[v] && deg[v] >= 1 && nonu[v] == 0
        }) {
            let mut removed: Vec<Vertex> = self.live_neighbors(x).collect();
            removed.push(x);
            self.push(Rule::R5Prime, removed, Some(x));
            return true;
        }
        let u_deg = &self.u_deg;
        let outside: Vec<Vertex> = std::mem::take(&mut self.q6)
            .into_iter()
            .filter(|&v| alive[v] && !in_u[v] && u_deg[v] == 0)
            .collect();
        if !outside.is_empty() {
            self.push(Rule::R6, outside, None);
            return true;
        }
        false
    }

    fn finish(self, inst: &ExtInstance) -> Reduced {
        let trace = ReductionTrace { steps: self.steps };
        let verdict = trace.verdict();
        let mut forced = inst.forced.clone();
        for v in 0..inst.n() {
            if !self.alive[v] {
                forced.remove(v);
            }
        }
        let (instance, origin) = materialize(self.g, &self.alive, &forced, &self.dropped);
        Reduced {
            instance,
            origin,
            trace,
            verdict,
        }
    }
}

/// Applies rules exhaustively and in order.
pub fn apply_rules(inst: &ExtInstance) -> Result<Reduced> {
    inst.expect_kind(ProblemKind::ExtVc)?;
    let mut r = Reducer::new(inst);
    while r.step() {}
    Ok(r.finish(inst))
}

/// Fires only the next applicable rule, if any.
pub fn apply_next_rule(inst: &ExtInstance) -> Result<Option<Reduced>> {
    inst.expect_kind(ProblemKind::ExtVc)?;
    let mut r = Reducer::new(inst);
    Ok(r.step().then(|| r.finish(inst)))
}

/// The instance `(g[N[U]], U)` with the map to input ids.
pub fn restrict_to_closed_neighborhood(inst: &ExtInstance) -> Result<(ExtInstance, Vec<Vertex>)> {
    inst.expect_kind(ProblemKind::ExtVc)?;
    let region = inst.graph.closed_neighborhood(&inst.forced);
    let (g, map) = inst.graph.induced_subgraph(&region);
    let mut u = VertexSet::new(g.n());
    for (i, &v) in map.iter().enumerate() {
        if inst.forced.contains(v) {
            u.insert(i);
        }
    }
    Ok((ExtInstance::vc(g, u), map))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KernelReport {
    /// Vertices left after full reduction; 0 once a verdict is reached.
    pub reduced_n: usize,
    /// (Δ + 1)·|U| of the input.
    pub bound: usize,
}

pub fn kernel_size_report(inst: &ExtInstance) -> Result<KernelReport> {
    let red = apply_rules(inst)?;
    let reduced_n = if red.verdict.is_some() {
        0
    } else {
        red.instance.n()
    };
    Ok(KernelReport {
        reduced_n,
        bound: (inst.graph.max_degree() + 1) * inst.forced.len(),
    })
}
