//! Input loading and result printing.

use ext_core::certify::Witness;
use ext_core::graph::parse_dimacs;
use ext_core::{Certificate, Error, Graph, VertexSet};
use std::fmt::Write as _;
use std::path::Path;

/// Failure while running a subcommand, mapped to an exit code in `main`.
#[derive(Debug)]
pub enum Failure {
    Io(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Io(_) => 3,
            Failure::Core(Error::Internal(_)) => 1,
            Failure::Core(e) if e.is_refusal() => 4,
            Failure::Core(_) => 3,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Io(m) => write!(f, "{m}"),
            Failure::Core(e) => write!(f, "{e}"),
        }
    }
}

pub type Outcome<T> = std::result::Result<T, Failure>;

pub fn read_text(path: &Path) -> Outcome<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

pub fn write_text(path: &Path, text: &str) -> Outcome<()> {
    std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

pub fn read_graph(path: &Path) -> Outcome<Graph> {
    let text = read_text(path)?;
    parse_dimacs(&text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

/// Parses 1-based ids separated by commas, whitespace or newlines.
pub fn parse_ids(text: &str, n: usize) -> Outcome<VertexSet> {
    let mut set = VertexSet::new(n);
    for tok in text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
    {
        let id: usize = tok
            .parse()
            .map_err(|_| Failure::Io(format!("bad vertex id {tok:?}")))?;
        if id == 0 || id > n {
            return Err(Failure::Io(format!("vertex id {id} outside 1..={n}")));
        }
        set.insert(id - 1);
    }
    Ok(set)
}

/// Reads the forced set from `--forced` or `--forced-file`; empty if neither.
pub fn forced_set(inline: Option<&str>, file: Option<&Path>, n: usize) -> Outcome<VertexSet> {
    match (inline, file) {
        (Some(s), _) => parse_ids(s, n),
        (None, Some(p)) => parse_ids(&read_text(p)?, n),
        (None, None) => Ok(VertexSet::new(n)),
    }
}

pub fn ids(set: &VertexSet) -> String {
    set.iter()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// The result block shared by all deciding subcommands.
#[derive(Default)]
pub struct Block {
    pub answer: Option<bool>,
    pub value: Option<usize>,
    pub sets: Vec<(&'static str, String)>,
    pub witnesses: Vec<String>,
    pub stats: Option<(u64, usize)>,
}

impl Block {
    pub fn decision(answer: bool) -> Self {
        Block {
            answer: Some(answer),
            ..Default::default()
        }
    }

    pub fn with_certificate(mut self, label: &'static str, cert: &Certificate) -> Self {
        self.sets.push((label, ids(&cert.solution)));
        for w in cert.witnesses.values() {
            self.witnesses.push(match w {
                Witness::Edge(v, t) => format!("{}->{},{}", v + 1, v + 1, t + 1),
                Witness::Copy(c) => ids(c),
            });
        }
        self
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        if let Some(a) = self.answer {
            let _ = writeln!(out, "result: {}", if a { "YES" } else { "NO" });
        }
        if let Some(v) = self.value {
            let _ = writeln!(out, "value: {v}");
        }
        for (label, s) in &self.sets {
            let _ = writeln!(out, "{label}: {s}");
        }
        for w in &self.witnesses {
            let _ = writeln!(out, "witness: {w}");
        }
        if let Some((nodes, depth)) = self.stats {
            let _ = writeln!(out, "stats: nodes={nodes} depth={depth}");
        }
        out
    }
}
