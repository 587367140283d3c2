//! Brute-force reference implementations for small graphs.

use crate::certify::{Certificate, Decision};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::hcover::{copies_within, Pattern};
use crate::instance::{ExtInstance, ProblemKind};

pub const DEFAULT_BOUND: usize = 20;
pub const HCOVER_BOUND: usize = 12;
pub const BOUND_ENV: &str = "EXT_ORACLE_BOUND";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    pub bound: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            bound: DEFAULT_BOUND,
        }
    }
}

fn mask_of(s: &VertexSet) -> u64 {
    s.to_mask()
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn nbr_masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

/// Maximal independent sets by include/exclude recursion, exclude first.
pub struct MaximalIs {
    n: usize,
    nbr: Vec<u64>,
    stack: Vec<(usize, u64, u64)>,
}

impl Iterator for MaximalIs {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let full = full_mask(self.n);
        while let Some((i, set, blocked)) = self.stack.pop() {
            // Vertices already passed that nothing can dominate any more.
            let low = if i == 64 { u64::MAX } else { (1u64 << i) - 1 };
            let high = full & !low;
            let mut loose = low & !(set | blocked);
            let mut dead = false;
            while loose != 0 {
                let v = loose.trailing_zeros() as usize;
                loose &= loose - 1;
                if self.nbr[v] & high == 0 {
                    dead = true;
                    break;
                }
            }
            if dead {
                continue;
            }
            if i == self.n {
                if set | blocked == full {
                    return Some(VertexSet::from_mask(self.n, set));
                }
                continue;
            }
            if blocked & (1 << i) == 0 {
                self.stack
                    .push((i + 1, set | 1 << i, blocked | self.nbr[i]));
            }
            self.stack.push((i + 1, set, blocked));
        }
        None
    }
}

impl Oracle {
    pub fn with_bound(bound: usize) -> Self {
        Oracle { bound }
    }

    /// Default bound, overridden by `EXT_ORACLE_BOUND` (capped at 64).
    pub fn from_env() -> Self {
        let bound = std::env::var(BOUND_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .map_or(DEFAULT_BOUND, |b| b.min(64));
        Oracle { bound }
    }

    fn check(&self, n: usize, bound: usize) -> Result<()> {
        let bound = bound.min(64);
        if n > bound {
            Err(Error::BoundExceeded { n, bound })
        } else {
            Ok(())
        }
    }

    pub fn enumerate_maximal_is(&self, g: &Graph) -> Result<MaximalIs> {
        self.check(g.n(), self.bound)?;
        Ok(MaximalIs {
            n: g.n(),
            nbr: nbr_masks(g),
            stack: vec![(0, 0, 0)],
        })
    }

    pub fn decide_ext_vc(&self, inst: &ExtInstance) -> Result<Decision> {
        inst.expect_kind(ProblemKind::ExtVc)?;
        let g = &inst.graph;
        let u = mask_of(&inst.forced);
        for s in self.enumerate_maximal_is(g)? {
            if mask_of(&s) & u == 0 {
                return Ok(Decision::yes(Certificate::with_private_edges(
                    g,
                    s.complement(),
                )));
            }
        }
        Ok(Decision::no())
    }

    pub fn decide_ext_is(&self, inst: &ExtInstance) -> Result<Decision> {
        inst.expect_kind(ProblemKind::ExtIs)?;
        let g = &inst.graph;
        let permitted = mask_of(&inst.forced);
        for s in self.enumerate_maximal_is(g)? {
            if mask_of(&s) & !permitted == 0 {
                return Ok(Decision::yes(Certificate {
                    solution: s,
                    witnesses: Default::default(),
                }));
            }
        }
        Ok(Decision::no())
    }

    /// Max |S ∩ U| over minimal vertex covers S, with an optimal cover.
    pub fn max_ext_vc_opt(&self, g: &Graph, u: &VertexSet) -> Result<(usize, VertexSet)> {
        let um = mask_of(u);
        let mut best: Option<(usize, VertexSet)> = None;
        for s in self.enumerate_maximal_is(g)? {
            let val = (um & !mask_of(&s)).count_ones() as usize;
            if best.as_ref().is_none_or(|(b, _)| val > *b) {
                best = Some((val, s.complement()));
            }
        }
        Ok(best.expect("every graph has a maximal independent set"))
    }

    /// Min weight of an independent dominating set.
    pub fn min_wisds(&self, g: &Graph, weights: &[u64]) -> Result<u64> {
        if weights.len() != g.n() {
            return Err(Error::InvalidInstance("weight count differs from n".into()));
        }
        let mut best = u64::MAX;
        for s in self.enumerate_maximal_is(g)? {
            best = best.min(s.iter().map(|v| weights[v]).sum());
        }
        Ok(best)
    }

    pub fn independence_number(&self, g: &Graph) -> Result<usize> {
        Ok(self
            .enumerate_maximal_is(g)?
            .map(|s| s.len())
            .max()
            .unwrap_or(0))
    }

    /// Exhaustive search for a minimal H-cover containing `u`.
    pub fn decide_ext_hcover(&self, g: &Graph, h: &Pattern, u: &VertexSet) -> Result<bool> {
        self.check(g.n(), HCOVER_BOUND)?;
        let copies: Vec<u64> = copies_within(g, h, None, None)
            .iter()
            .map(mask_of)
            .collect();
        let um = mask_of(u);
        let rest = full_mask(g.n()) & !um;
        let mut sub = rest;
        loop {
            let s = um | sub;
            if is_min_cover_mask(&copies, s) {
                return Ok(true);
            }
            if sub == 0 {
                return Ok(false);
            }
            sub = (sub - 1) & rest;
        }
    }
}

fn is_min_cover_mask(copies: &[u64], s: u64) -> bool {
    let mut private = 0u64;
    for &k in copies {
        let hit = k & s;
        if hit == 0 {
            return false;
        }
        if hit.count_ones() == 1 {
            private |= hit;
        }
    }
    private == s
}

pub fn enumerate_maximal_is(g: &Graph) -> Result<Vec<VertexSet>> {
    Ok(Oracle::default().enumerate_maximal_is(g)?.collect())
}

pub fn decide_ext_vc_bf(inst: &ExtInstance) -> Result<Decision> {
    Oracle::default().decide_ext_vc(inst)
}

pub fn decide_ext_is_bf(inst: &ExtInstance) -> Result<Decision> {
    Oracle::default().decide_ext_is(inst)
}

pub fn max_ext_vc_opt_bf(g: &Graph, u: &VertexSet) -> Result<(usize, VertexSet)> {
    Oracle::default().max_ext_vc_opt(g, u)
}

pub fn min_wisds_bf(g: &Graph, weights: &[u64]) -> Result<u64> {
    Oracle::default().min_wisds(g, weights)
}

pub fn decide_ext_hcover_bf(g: &Graph, h: &Pattern, u: &VertexSet) -> Result<bool> {
    Oracle::default().decide_ext_hcover(g, h, u)
}

pub fn independence_number_bf(g: &Graph) -> Result<usize> {
    Oracle::default().independence_number(g)
}
