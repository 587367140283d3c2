mod bench;
mod io;
mod solve;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ext_core::approx::{approx_bipartite, approx_degree};
use ext_core::certify::{
    is_maximal_independent_set, is_minimal_h_cover, is_minimal_vertex_cover,
};
use ext_core::chordal::{
    max_ext_vc_chordal, min_ext_is_value, parse_weights, wmisds_chordal, WeightedGraph,
};
use ext_core::generators::{emit_instance, gen_from_b2sat, gen_maxis_gadget, gen_mcis, parse_cnf};
use ext_core::graph::{chordal_peo, parse_dimacs};
use ext_core::hcover::decide_ext_hcover;
use ext_core::kernel::{apply_rules, kernel_size_report, Rule};
use ext_core::oracle::Oracle;
use ext_core::tree::{find_forbidden_subtree, is_in_t, ColoredTree};
use ext_core::{Error, ExtInstance, Graph, Pattern, VertexSet};
use io::{forced_set, ids, parse_ids, read_graph, read_text, write_text, Block, Failure, Outcome};
use solve::{decide_vc, Algorithm};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "ext", version, about = "Extension problems for vertex cover, independent set and pattern covers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the forced set extends to a minimal solution.
    Decide {
        problem: Problem,
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Algorithm::Auto)]
        algorithm: Algorithm,
        /// Pattern for hcover: k2, k3, p3 or a DIMACS file.
        #[arg(long)]
        pattern: Option<String>,
        /// Print nothing; exit 10 on YES and 11 on NO.
        #[arg(long)]
        quiet: bool,
    },
    /// Largest number of forced vertices kept by a minimal vertex cover.
    Maxext {
        problem: VcOnly,
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Method::Exact)]
        method: Method,
    },
    /// Smallest maximal independent set size containing the forced set.
    Minext {
        problem: IsOnly,
        #[command(flatten)]
        input: Input,
    },
    /// Brute-force reference answers.
    Oracle {
        #[command(subcommand)]
        action: OracleAction,
    },
    /// Build instances from the hardness constructions.
    Generate {
        #[command(subcommand)]
        kind: GenerateKind,
    },
    /// Check a proposed solution against the forced set.
    Verify {
        problem: Problem,
        #[command(flatten)]
        input: Input,
        /// Proposed solution, 1-based ids.
        #[arg(long)]
        set: String,
        #[arg(long)]
        pattern: Option<String>,
        #[arg(long)]
        quiet: bool,
    },
    /// Run Ext VC solvers over many instances and emit CSV.
    Bench(bench::BenchArgs),
    /// Apply the reduction rules and report the kernel.
    Kernel {
        #[command(flatten)]
        input: Input,
        /// Also write the reduction trace to this file.
        #[arg(long)]
        trace_out: Option<PathBuf>,
    },
    /// Minimum weight independent dominating set on a chordal graph.
    Wmisds {
        #[arg(long)]
        graph: PathBuf,
        /// One non-negative weight per line, in vertex order.
        #[arg(long)]
        weights: PathBuf,
    },
    /// Black-and-white tree utilities.
    Tree {
        #[command(subcommand)]
        action: TreeAction,
    },
}

#[derive(Args)]
struct Input {
    #[arg(long)]
    graph: PathBuf,
    /// Forced set as 1-based ids, e.g. "1,4".
    #[arg(long, conflicts_with = "forced_file")]
    forced: Option<String>,
    /// File with one 1-based forced id per line.
    #[arg(long)]
    forced_file: Option<PathBuf>,
}

impl Input {
    fn load(&self) -> Outcome<(Graph, VertexSet)> {
        let g = read_graph(&self.graph)?;
        let u = forced_set(self.forced.as_deref(), self.forced_file.as_deref(), g.n())?;
        Ok((g, u))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Problem {
    Vc,
    Is,
    Hcover,
}

#[derive(Clone, Copy, ValueEnum)]
enum VcOnly {
    Vc,
}

#[derive(Clone, Copy, ValueEnum)]
enum IsOnly {
    Is,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Exact,
    Chordal,
    ApproxBipartite,
    ApproxDegree,
    Oracle,
}

#[derive(Subcommand)]
enum OracleAction {
    /// List every maximal independent set.
    Enumerate {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Decide by enumeration.
    Decide {
        problem: Problem,
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        pattern: Option<String>,
        #[arg(long)]
        quiet: bool,
    },
    /// Max Ext VC optimum by enumeration.
    Opt {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Subcommand)]
enum GenerateKind {
    /// Cubic bipartite Ext VC instance from a (3,B2)-SAT formula.
    B2sat {
        #[arg(long)]
        cnf: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Bipartite Ext VC instance from a multicolored independent set instance.
    Mcis {
        #[arg(long)]
        graph: PathBuf,
        /// One part per line, 1-based ids.
        #[arg(long)]
        parts: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Pendant-copy graph whose Max Ext VC optimum is the independence number.
    MaxisGadget {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum TreeAction {
    /// Test membership of a black-and-white tree in the forbidden class.
    Member {
        /// DIMACS tree plus a "b" line listing black vertices.
        #[arg(long)]
        colored: PathBuf,
    },
    /// Search for a forbidden induced subtree; NO when one exists.
    Forbidden {
        #[command(flatten)]
        input: Input,
    },
}

fn load_pattern(spec: Option<&str>) -> Outcome<Pattern> {
    match spec {
        None => Err(Failure::Io("hcover needs --pattern".into())),
        Some("k2") | Some("K2") => Ok(Pattern::k2()),
        Some("k3") | Some("K3") => Ok(Pattern::k3()),
        Some("p3") | Some("P3") => Ok(Pattern::p3()),
        Some(path) => {
            let text = read_text(Path::new(path))?;
            Ok(Pattern::new(parse_dimacs(&text)?)?)
        }
    }
}

/// Printed output and exit code of a successful run.
struct Report {
    text: String,
    code: u8,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, code: 0 }
    }

    fn decision(block: Block, quiet: bool) -> Self {
        if quiet {
            let code = if block.answer == Some(true) { 10 } else { 11 };
            Report {
                text: String::new(),
                code,
            }
        } else {
            Report::ok(block.render())
        }
    }
}

fn decide(
    problem: Problem,
    input: &Input,
    algorithm: Algorithm,
    pattern: Option<&str>,
) -> Outcome<Block> {
    let (g, u) = input.load()?;
    match problem {
        Problem::Vc => {
            let run = decide_vc(&ExtInstance::vc(g, u), algorithm)?;
            let mut block = Block::decision(run.decision.answer);
            if let Some(c) = &run.decision.certificate {
                block = block.with_certificate("cover", c);
            }
            block.stats = run.stats;
            Ok(block)
        }
        Problem::Is => {
            let inst = ExtInstance::is(g, u);
            let run = decide_vc(&inst.is_to_vc(), algorithm)?;
            let mut block = Block::decision(run.decision.answer);
            if let Some(c) = &run.decision.certificate {
                block.sets.push(("set", ids(&c.solution.complement())));
            }
            block.stats = run.stats;
            Ok(block)
        }
        Problem::Hcover => {
            let h = load_pattern(pattern)?;
            let d = decide_ext_hcover(&g, &h, &u)?;
            let mut block = Block::decision(d.answer);
            for (v, copy) in &d.family {
                block.witnesses.push(format!("{}->{}", v + 1, ids(copy)));
            }
            Ok(block)
        }
    }
}

fn oracle_decide(problem: Problem, input: &Input, pattern: Option<&str>) -> Outcome<Block> {
    let (g, u) = input.load()?;
    let oracle = Oracle::from_env();
    match problem {
        Problem::Vc => {
            let d = oracle.decide_ext_vc(&ExtInstance::vc(g, u))?;
            let mut block = Block::decision(d.answer);
            if let Some(c) = &d.certificate {
                block = block.with_certificate("cover", c);
            }
            Ok(block)
        }
        Problem::Is => {
            let d = oracle.decide_ext_is(&ExtInstance::is(g, u))?;
            let mut block = Block::decision(d.answer);
            if let Some(c) = &d.certificate {
                block.sets.push(("set", ids(&c.solution)));
            }
            Ok(block)
        }
        Problem::Hcover => {
            let h = load_pattern(pattern)?;
            Ok(Block::decision(oracle.decide_ext_hcover(&g, &h, &u)?))
        }
    }
}

fn maxext(input: &Input, method: Method) -> Outcome<Block> {
    let (g, u) = input.load()?;
    let mut block = Block::default();
    match method {
        Method::Chordal => {
            let r = max_ext_vc_chordal(&g, &u)?;
            block.value = Some(r.value);
            block = block.with_certificate("cover", &r.certificate);
        }
        Method::Exact if chordal_peo(&g).is_some() && g.is_independent(&u) => {
            let r = max_ext_vc_chordal(&g, &u)?;
            block.value = Some(r.value);
            block = block.with_certificate("cover", &r.certificate);
        }
        Method::Exact | Method::Oracle => {
            let (value, cover) = Oracle::from_env().max_ext_vc_opt(&g, &u)?;
            block.value = Some(value);
            block.sets.push(("cover", ids(&cover)));
        }
        Method::ApproxBipartite | Method::ApproxDegree => {
            let r = if matches!(method, Method::ApproxBipartite) {
                approx_bipartite(&g, &u)?
            } else {
                approx_degree(&g, &u)?
            };
            block.value = Some(r.value);
            block = block.with_certificate("cover", &r.certificate);
        }
    }
    Ok(block)
}

fn verify(problem: Problem, input: &Input, set: &str, pattern: Option<&str>) -> Outcome<Block> {
    let (g, u) = input.load()?;
    let s = parse_ids(set, g.n())?;
    let ok = match problem {
        Problem::Vc => u.is_subset(&s) && is_minimal_vertex_cover(&g, &s),
        Problem::Is => s.is_subset(&u) && is_maximal_independent_set(&g, &s),
        Problem::Hcover => {
            let h = load_pattern(pattern)?;
            u.is_subset(&s) && is_minimal_h_cover(&g, &h, &s)
        }
    };
    Ok(Block::decision(ok))
}

fn generate(kind: &GenerateKind) -> Outcome<String> {
    let (inst, label, out) = match kind {
        GenerateKind::B2sat { cnf, out } => {
            let f = parse_cnf(&read_text(cnf)?)?;
            (gen_from_b2sat(&f), "b2sat", out)
        }
        GenerateKind::Mcis { graph, parts, out } => {
            let g = read_graph(graph)?;
            let parts = read_text(parts)?
                .lines()
                .filter(|l| !l.trim().is_empty())
                .map(|l| parse_ids(l, g.n()))
                .collect::<Outcome<Vec<_>>>()?;
            (gen_mcis(&g, &parts)?, "mcis", out)
        }
        GenerateKind::MaxisGadget { graph, out } => {
            let (h, u) = gen_maxis_gadget(&read_graph(graph)?);
            (ExtInstance::vc(h, u), "maxis-gadget", out)
        }
    };
    let (dimacs, forced) = emit_instance(&inst, label);
    let gpath = out.with_extension("col");
    let fpath = out.with_extension("forced");
    write_text(&gpath, &dimacs)?;
    write_text(&fpath, &forced)?;
    Ok(format!(
        "graph: {}\nforced: {}\nvalue: {}\n",
        gpath.display(),
        fpath.display(),
        inst.n()
    ))
}

fn kernel(input: &Input, trace_out: Option<&Path>) -> Outcome<String> {
    let (g, u) = input.load()?;
    let inst = ExtInstance::vc(g, u);
    let report = kernel_size_report(&inst)?;
    let red = apply_rules(&inst)?;
    let mut out = String::new();
    if let Some(v) = red.verdict {
        out.push_str(&format!("result: {}\n", if v.answer() { "YES" } else { "NO" }));
    }
    out.push_str(&format!(
        "value: {}\nbound: {}\n",
        report.reduced_n, report.bound
    ));
    let firings = red.trace.firings();
    let parts: Vec<String> = Rule::ALL
        .iter()
        .map(|r| format!("{}={}", r.name(), firings[r.index()]))
        .collect();
    out.push_str(&format!("firings: {}\n", parts.join(" ")));
    if red.verdict.is_none() {
        let set = VertexSet::from_slice(inst.n(), &red.origin);
        out.push_str(&format!("kernel: {}\n", ids(&set)));
    }
    if let Some(p) = trace_out {
        write_text(p, &red.trace.to_text())?;
    }
    Ok(out)
}

fn wmisds(graph: &Path, weights: &Path) -> Outcome<String> {
    let g = read_graph(graph)?;
    let w = parse_weights(&read_text(weights)?, g.n())?;
    let peo = chordal_peo(&g).ok_or(Error::NotChordal)?;
    let (value, set) = wmisds_chordal(&WeightedGraph::new(g, w)?, &peo)?;
    Ok(format!("value: {value}\nset: {}\n", ids(&set)))
}

fn tree(action: &TreeAction) -> Outcome<String> {
    match action {
        TreeAction::Member { colored } => {
            let ct = ColoredTree::parse(&read_text(colored)?)?;
            let member = is_in_t(&ct);
            Ok(format!("result: {}\n", if member { "YES" } else { "NO" }))
        }
        TreeAction::Forbidden { input } => {
            let (g, u) = input.load()?;
            Ok(match find_forbidden_subtree(&g, &u)? {
                Some(sub) => format!("result: NO\nsubtree: {}\n", ids(&sub)),
                None => "result: YES\n".to_string(),
            })
        }
    }
}

fn run(cli: Cli) -> Outcome<Report> {
    Ok(match &cli.command {
        Command::Decide {
            problem,
            input,
            algorithm,
            pattern,
            quiet,
        } => Report::decision(decide(*problem, input, *algorithm, pattern.as_deref())?, *quiet),
        Command::Maxext { input, method, .. } => Report::ok(maxext(input, *method)?.render()),
        Command::Minext { input, .. } => {
            let (g, u) = input.load()?;
            Report::ok(format!("value: {}\n", min_ext_is_value(&g, &u)?))
        }
        Command::Oracle { action } => match action {
            OracleAction::Enumerate { graph } => {
                let g = read_graph(graph)?;
                let mut out = String::new();
                let mut count = 0usize;
                for s in Oracle::from_env().enumerate_maximal_is(&g)? {
                    out.push_str(&format!("set: {}\n", ids(&s)));
                    count += 1;
                }
                out.push_str(&format!("value: {count}\n"));
                Report::ok(out)
            }
            OracleAction::Decide {
                problem,
                input,
                pattern,
                quiet,
            } => Report::decision(oracle_decide(*problem, input, pattern.as_deref())?, *quiet),
            OracleAction::Opt { input } => Report::ok(maxext(input, Method::Oracle)?.render()),
        },
        Command::Generate { kind } => Report::ok(generate(kind)?),
        Command::Verify {
            problem,
            input,
            set,
            pattern,
            quiet,
        } => Report::decision(verify(*problem, input, set, pattern.as_deref())?, *quiet),
        Command::Bench(args) => Report::ok(bench::run(args)?),
        Command::Kernel { input, trace_out } => Report::ok(kernel(input, trace_out.as_deref())?),
        Command::Wmisds { graph, weights } => Report::ok(wmisds(graph, weights)?),
        Command::Tree { action } => Report::ok(tree(action)?),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            print!("{}", report.text);
            ExitCode::from(report.code)
        }
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.exit_code() as u8)
        }
    }
}
