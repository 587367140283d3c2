//! Algorithm selection for Ext VC.

use crate::io::Outcome;
use clap::ValueEnum;
use ext_core::branch::{solve_exact, solve_fpt};
use ext_core::chordal::decide_ext_vc_chordal;
use ext_core::graph::{chordal_peo, classify};
use ext_core::oracle::Oracle;
use ext_core::tree::decide_forest;
use ext_core::{Decision, ExtInstance};

/// Auto dispatch picks the FPT search while Δ^|U| stays below this.
pub const FPT_AUTO_NODES: f64 = 1e6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Auto,
    Tree,
    Chordal,
    Fpt,
    Exact,
    Oracle,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::Tree => "tree",
            Algorithm::Chordal => "chordal",
            Algorithm::Fpt => "fpt",
            Algorithm::Exact => "exact",
            Algorithm::Oracle => "oracle",
        }
    }
}

pub struct Run {
    pub algorithm: Algorithm,
    pub decision: Decision,
    /// Search nodes and depth for the branching solvers.
    pub stats: Option<(u64, usize)>,
}

pub fn resolve_auto(inst: &ExtInstance) -> Algorithm {
    let g = &inst.graph;
    if classify(g).is_forest {
        Algorithm::Tree
    } else if chordal_peo(g).is_some() {
        Algorithm::Chordal
    } else if (g.max_degree().max(1) as f64).powi(inst.forced.len() as i32) <= FPT_AUTO_NODES {
        Algorithm::Fpt
    } else {
        Algorithm::Exact
    }
}

pub fn decide_vc(inst: &ExtInstance, algorithm: Algorithm) -> Outcome<Run> {
    let algorithm = match algorithm {
        Algorithm::Auto => resolve_auto(inst),
        a => a,
    };
    let (decision, stats) = match algorithm {
        Algorithm::Tree => (decide_forest(inst)?, None),
        Algorithm::Chordal => (decide_ext_vc_chordal(inst)?, None),
        Algorithm::Fpt => {
            let s = solve_fpt(inst)?;
            (s.decision, Some((s.stats.nodes_expanded, s.stats.max_depth)))
        }
        Algorithm::Exact => {
            let s = solve_exact(inst)?;
            (s.decision, Some((s.stats.nodes_expanded, s.stats.max_depth)))
        }
        Algorithm::Oracle => (Oracle::from_env().decide_ext_vc(inst)?, None),
        Algorithm::Auto => unreachable!("resolved above"),
    };
    Ok(Run {
        algorithm,
        decision,
        stats,
    })
}
