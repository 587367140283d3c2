//! `ext bench`: timing runs over instance files or generated subcubic graphs.

use crate::io::{forced_set, read_graph, Outcome};
use crate::solve::{decide_vc, Algorithm};
use clap::Args;
use ext_core::graph::random::{random_subcubic, random_subset, rng};
use ext_core::ExtInstance;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

#[derive(Args)]
pub struct BenchArgs {
    /// DIMACS graph files; a sibling `.forced` file supplies the forced set.
    instances: Vec<PathBuf>,
    /// Comma-separated solver list.
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Algorithm::Auto])]
    algorithm: Vec<Algorithm>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Also generate this many random subcubic instances.
    #[arg(long, default_value_t = 0)]
    random: usize,
    /// Vertex count of generated instances.
    #[arg(long, default_value_t = 30)]
    size: usize,
    /// Probability that a generated vertex is forced.
    #[arg(long, default_value_t = 0.2)]
    forced_prob: f64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

pub fn run(args: &BenchArgs) -> Outcome<String> {
    let mut jobs: Vec<(String, ExtInstance)> = Vec::new();
    for path in &args.instances {
        let g = read_graph(path)?;
        let fpath = path.with_extension("forced");
        let u = forced_set(None, fpath.exists().then_some(fpath.as_path()), g.n())?;
        jobs.push((path.display().to_string(), ExtInstance::vc(g, u)));
    }
    let mut r = rng(args.seed);
    for i in 0..args.random {
        let g = random_subcubic(args.size, &mut r);
        let u = random_subset(args.size, args.forced_prob, &mut r);
        jobs.push((format!("subcubic-{}-{i}", args.seed), ExtInstance::vc(g, u)));
    }
    let tasks: Vec<(usize, Algorithm)> = (0..jobs.len())
        .flat_map(|j| args.algorithm.iter().map(move |&a| (j, a)))
        .collect();
    let rows: Mutex<Vec<Option<Outcome<String>>>> = Mutex::new((0..tasks.len()).map(|_| None).collect());
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..args.threads.max(1) {
            scope.spawn(|| loop {
                let t = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(j, algorithm)) = tasks.get(t) else {
                    break;
                };
                let (name, inst) = &jobs[j];
                let start = Instant::now();
                let row = decide_vc(inst, algorithm).map(|run| {
                    let micros = start.elapsed().as_micros();
                    format!(
                        "{},{},{},{},{},{},{},{}",
                        name,
                        inst.n(),
                        inst.graph.edge_count(),
                        inst.forced.len(),
                        run.algorithm.name(),
                        if run.decision.answer { "YES" } else { "NO" },
                        run.stats.map_or(String::new(), |s| s.0.to_string()),
                        micros
                    )
                });
                rows.lock().unwrap()[t] = Some(row);
            });
        }
    });
    let mut out = String::from("instance,n,m,|U|,algorithm,decision,nodes,micros\n");
    for row in rows.into_inner().unwrap() {
        out.push_str(&row.expect("every task ran")?);
        out.push('\n');
    }
    Ok(out)
}
