use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::hcover::Pattern;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProblemKind {
    ExtVc,
    ExtIs,
    ExtHcover,
}

/// A graph with a forced (Ext VC, Ext H-cover) or permitted (Ext IS) set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtInstance {
    pub graph: Graph,
    pub forced: VertexSet,
    pub kind: ProblemKind,
    pub pattern: Option<Pattern>,
}

impl ExtInstance {
    pub fn new(
        graph: Graph,
        forced: VertexSet,
        kind: ProblemKind,
        pattern: Option<Pattern>,
    ) -> Result<Self> {
        if forced.capacity() != graph.n() {
            return Err(Error::InvalidInstance(format!(
                "forced set sized for {} vertices, graph has {}",
                forced.capacity(),
                graph.n()
            )));
        }
        if (kind == ProblemKind::ExtHcover) != pattern.is_some() {
            return Err(Error::InvalidInstance(
                "a pattern is required exactly for Ext H-cover".into(),
            ));
        }
        Ok(ExtInstance {
            graph,
            forced,
            kind,
            pattern,
        })
    }

    /// Panics if `forced` does not match the graph.
    pub fn vc(graph: Graph, forced: VertexSet) -> Self {
        Self::new(graph, forced, ProblemKind::ExtVc, None).unwrap()
    }

    pub fn is(graph: Graph, permitted: VertexSet) -> Self {
        Self::new(graph, permitted, ProblemKind::ExtIs, None).unwrap()
    }

    pub fn hcover(graph: Graph, pattern: Pattern, forced: VertexSet) -> Self {
        Self::new(graph, forced, ProblemKind::ExtHcover, Some(pattern)).unwrap()
    }

    pub fn vc_from_slice(graph: Graph, forced: &[usize]) -> Self {
        let n = graph.n();
        Self::vc(graph, VertexSet::from_slice(n, forced))
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub(crate) fn expect_kind(&self, kind: ProblemKind) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::InvalidInstance(format!(
                "expected {kind:?} instance, got {:?}",
                self.kind
            )))
        }
    }

    /// The Ext VC instance with forced set V∖U equivalent to this Ext IS one.
    pub fn is_to_vc(&self) -> ExtInstance {
        ExtInstance::vc(self.graph.clone(), self.forced.complement())
    }
}
