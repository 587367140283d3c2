//! Instance generators from reductions, with brute-force truth oracles.

use crate::error::{Error, Result};
use crate::graph::{classify, write_dimacs, Graph, Vertex, VertexSet};
use crate::instance::ExtInstance;
use rand::seq::SliceRandom;
use rand::Rng;

pub const SAT_BOUND: usize = 24;

/// 3-CNF where every variable occurs twice positively and twice negatively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct B2SatFormula {
    num_vars: usize,
    clauses: Vec<[i32; 3]>,
}

impl B2SatFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        let mut errs = Vec::new();
        let mut pos = vec![0usize; num_vars];
        let mut neg = vec![0usize; num_vars];
        let mut fixed = Vec::with_capacity(clauses.len());
        for (j, c) in clauses.iter().enumerate() {
            if c.len() != 3 {
                errs.push(format!("clause {} has {} literals", j + 1, c.len()));
                continue;
            }
            let mut vars = Vec::new();
            for &lit in c {
                let v = lit.unsigned_abs() as usize;
                if lit == 0 || v > num_vars {
                    errs.push(format!("clause {}: literal {lit} out of range", j + 1));
                    continue;
                }
                if vars.contains(&v) {
                    errs.push(format!("clause {} repeats variable {v}", j + 1));
                }
                vars.push(v);
                if lit > 0 {
                    pos[v - 1] += 1;
                } else {
                    neg[v - 1] += 1;
                }
            }
            fixed.push([c[0], c[1], c[2]]);
        }
        for v in 0..num_vars {
            if pos[v] != 2 || neg[v] != 2 {
                errs.push(format!(
                    "variable {}: {} positive, {} negative occurrences",
                    v + 1,
                    pos[v],
                    neg[v]
                ));
            }
        }
        if errs.is_empty() {
            Ok(B2SatFormula {
                num_vars,
                clauses: fixed,
            })
        } else {
            Err(Error::InvalidFormula(errs))
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[i32; 3]] {
        &self.clauses
    }

    pub fn to_cnf(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            s.push_str(&format!("{} {} {} 0\n", c[0], c[1], c[2]));
        }
        s
    }
}

/// DIMACS CNF, validated against the occurrence profile.
pub fn parse_cnf(text: &str) -> Result<B2SatFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut cur = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let perr = |msg: String| Error::Parse { line: i + 1, msg };
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if line.starts_with('p') {
            let t: Vec<&str> = line.split_whitespace().collect();
            if header.is_some() || t.len() != 4 || t[1] != "cnf" {
                return Err(perr("expected a single 'p cnf n m'".into()));
            }
            let n = t[2].parse().map_err(|_| perr("bad variable count".into()))?;
            let m = t[3].parse().map_err(|_| perr("bad clause count".into()))?;
            header = Some((n, m));
            continue;
        }
        if header.is_none() {
            return Err(perr("clause before p-line".into()));
        }
        for tok in line.split_whitespace() {
            let lit: i32 = tok.parse().map_err(|_| perr(format!("bad literal '{tok}'")))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut cur));
            } else {
                cur.push(lit);
            }
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: 0,
        msg: "missing p-line".into(),
    })?;
    if !cur.is_empty() {
        clauses.push(cur);
    }
    let mut f = B2SatFormula::new(n, clauses);
    if let Ok(ok) = &f {
        if ok.clauses.len() != m {
            f = Err(Error::InvalidFormula(vec![format!(
                "header declares {m} clauses, found {}",
                ok.clauses.len()
            )]));
        }
    }
    f
}

/// Random formula with `n` variables (`n` divisible by 3).
pub fn random_b2sat<R: Rng>(n: usize, r: &mut R) -> B2SatFormula {
    assert!(n % 3 == 0, "variable count must be divisible by 3");
    loop {
        let mut slots: Vec<i32> = (1..=n as i32).flat_map(|v| [v, v, -v, -v]).collect();
        slots.shuffle(r);
        let clauses: Vec<Vec<i32>> = slots.chunks(3).map(<[i32]>::to_vec).collect();
        if let Ok(f) = B2SatFormula::new(n, clauses) {
            return f;
        }
    }
}

/// Exhaustive satisfiability check.
pub fn sat_bf(f: &B2SatFormula) -> Result<bool> {
    let n = f.num_vars;
    if n > SAT_BOUND {
        return Err(Error::BoundExceeded {
            n,
            bound: SAT_BOUND,
        });
    }
    let masks: Vec<(u32, u32)> = f
        .clauses
        .iter()
        .map(|c| {
            let mut p = 0u32;
            let mut q = 0u32;
            for &l in c {
                let b = 1u32 << (l.unsigned_abs() - 1);
                if l > 0 {
                    p |= b;
                } else {
                    q |= b;
                }
            }
            (p, q)
        })
        .collect();
    Ok((0u32..1 << n).any(|a| masks.iter().all(|&(p, q)| a & p != 0 || !a & q != 0)))
}

/// Cubic bipartite Ext VC instance, satisfiable iff YES.
///
/// Variable `i` owns ids `10i..10i+10`:
/// `x l m r ¬x` (first copy, path in that order) and `x' l' m' r' ¬x'`
/// (second copy, path `¬x' l' m' r' x'`), with links `l l'`, `m m'`,
/// `r r'`. Clause `j` is `10n + j` and its mirror `10n + m + j`; each is
/// joined to the literal vertices of its own copy. Forced: all clause
/// vertices and all `m`, `m'`.
pub fn gen_from_b2sat(f: &B2SatFormula) -> ExtInstance {
    let n = f.num_vars;
    let m = f.clauses.len();
    let total = 10 * n + 2 * m;
    let mut edges = Vec::new();
    let mut forced = Vec::new();
    for i in 0..n {
        let b = 10 * i;
        let (x, l, mm, r, nx) = (b, b + 1, b + 2, b + 3, b + 4);
        let (x2, l2, m2, r2, nx2) = (b + 5, b + 6, b + 7, b + 8, b + 9);
        edges.extend([(x, l), (l, mm), (mm, r), (r, nx)]);
        edges.extend([(nx2, l2), (l2, m2), (m2, r2), (r2, x2)]);
        edges.extend([(l, l2), (mm, m2), (r, r2)]);
        forced.extend([mm, m2]);
    }
    let lit_vertex = |lit: i32, copy: usize| {
        let i = lit.unsigned_abs() as usize - 1;
        10 * i + 5 * copy + if lit > 0 { 0 } else { 4 }
    };
    for (j, c) in f.clauses.iter().enumerate() {
        let (c1, c2) = (10 * n + j, 10 * n + m + j);
        forced.extend([c1, c2]);
        for &lit in c {
            edges.push((c1, lit_vertex(lit, 0)));
            edges.push((c2, lit_vertex(lit, 1)));
        }
    }
    let g = Graph::from_edges(total, &edges).unwrap();
    assert!((0..total).all(|v| g.degree(v) == 3), "generated graph must be cubic");
    assert!(classify(&g).bipartition.is_some(), "generated graph must be bipartite");
    let u = VertexSet::from_slice(total, &forced);
    ExtInstance::vc(g, u)
}

fn check_parts(n: usize, parts: &[VertexSet]) -> Result<()> {
    let mut seen = VertexSet::new(n);
    for (i, p) in parts.iter().enumerate() {
        if p.capacity() != n {
            return Err(Error::InvalidPartition(format!("part {} sized for another graph", i + 1)));
        }
        if p.is_empty() {
            return Err(Error::InvalidPartition(format!("part {} is empty", i + 1)));
        }
        if !p.is_disjoint(&seen) {
            return Err(Error::InvalidPartition(format!("part {} overlaps another", i + 1)));
        }
        seen = seen.union(p);
    }
    if seen.len() != n {
        return Err(Error::InvalidPartition("parts do not cover every vertex".into()));
    }
    Ok(())
}

/// One vertex per part, pairwise non-adjacent.
pub fn mcis_bf(g: &Graph, parts: &[VertexSet]) -> Result<bool> {
    check_parts(g.n(), parts)?;
    fn go(g: &Graph, parts: &[VertexSet], i: usize, pick: &mut Vec<Vertex>) -> bool {
        if i == parts.len() {
            return true;
        }
        for v in parts[i].iter() {
            if pick.iter().all(|&p| !g.has_edge(p, v)) {
                pick.push(v);
                if go(g, parts, i + 1, pick) {
                    return true;
                }
                pick.pop();
            }
        }
        false
    }
    Ok(go(g, parts, 0, &mut Vec::new()))
}

/// Bipartite Ext VC instance that is YES iff `g` has a multicolored
/// independent set.
///
/// Parts are first made cliques; a part with one vertex gets a padding
/// vertex adjacent to everything outside that part. With `n'` the padded
/// order and `k` parts, ids are `V = 0..n'`, `V̄ = n'..2n'`, `w_i = 2n'+i`,
/// `w̄_i = 2n'+k+i`; the forced set is all `w_i` and `w̄_i`.
pub fn gen_mcis(g: &Graph, parts: &[VertexSet]) -> Result<ExtInstance> {
    check_parts(g.n(), parts)?;
    let k = parts.len();
    let mut part_of: Vec<usize> = vec![0; g.n()];
    for (i, p) in parts.iter().enumerate() {
        for v in p.iter() {
            part_of[v] = i;
        }
    }
    let mut members: Vec<Vec<Vertex>> = parts.iter().map(VertexSet::to_vec).collect();
    let mut n2 = g.n();
    for mem in members.iter_mut() {
        if mem.len() == 1 {
            mem.push(n2);
            part_of.push(usize::MAX);
            n2 += 1;
        }
    }
    let mut base: Vec<(Vertex, Vertex)> = g.edges().collect();
    for (i, mem) in members.iter().enumerate() {
        for a in 0..mem.len() {
            for b in a + 1..mem.len() {
                base.push((mem[a], mem[b]));
            }
        }
        for &pad in mem.iter().filter(|&&v| v >= g.n()) {
            for (j, other) in members.iter().enumerate() {
                if j != i {
                    base.extend(other.iter().map(|&o| (pad, o)));
                }
            }
        }
    }
    let total = 2 * n2 + 2 * k;
    let bar = |v: Vertex| n2 + v;
    let mut edges = Vec::new();
    for &(a, b) in &base {
        edges.push((a, bar(b)));
        edges.push((b, bar(a)));
    }
    for (i, mem) in members.iter().enumerate() {
        let (w, wbar) = (2 * n2 + i, 2 * n2 + k + i);
        for &v in mem {
            edges.push((v, wbar));
            edges.push((bar(v), w));
        }
    }
    let out = Graph::from_edges(total, &edges)?;
    debug_assert!(classify(&out).bipartition.is_some());
    let u = VertexSet::from_slice(total, &(2 * n2..total).collect::<Vec<_>>());
    Ok(ExtInstance::vc(out, u))
}

/// `g` plus a pendant copy `v' = n + v` of every vertex; forced set `V'`.
pub fn gen_maxis_gadget(g: &Graph) -> (Graph, VertexSet) {
    let n = g.n();
    let mut edges: Vec<_> = g.edges().collect();
    edges.extend((0..n).map(|v| (v, n + v)));
    let h = Graph::from_edges(2 * n, &edges).unwrap();
    let u = VertexSet::from_slice(2 * n, &(n..2 * n).collect::<Vec<_>>());
    (h, u)
}

/// DIMACS text with a provenance comment block, plus the forced-set file.
pub fn emit_instance(inst: &ExtInstance, construction: &str) -> (String, String) {
    let mut g = String::new();
    for line in construction.lines() {
        g.push_str("c ");
        g.push_str(line);
        g.push('\n');
    }
    g.push_str(&write_dimacs(&inst.graph));
    let forced = inst
        .forced
        .iter()
        .map(|v| format!("{}\n", v + 1))
        .collect::<String>();
    (g, forced)
}
