//! `orient-light`: solve, verify, generate and benchmark Min-1-Light instances.

mod bench;
mod json;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use orient_light::generate::InstanceRng;
use orient_light::io::{parse_graph, parse_weights, render_graph, DecimalWeights};
use orient_light::oracle::{brute_force_min_light, OracleBudget};
use orient_light::solver::reduce;
use orient_light::{light_vertices, solve_min_light_weighted, Graph, Orientation};

use crate::json::{SolutionJson, Sidecar};

const BUDGET_VAR: &str = "ORIENT_LIGHT_ORACLE_BUDGET";

#[derive(Parser)]
#[command(name = "orient-light", version, about = "Exact Min-1-Light graph orientation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Orient a graph minimizing the (weighted) number of vertices with out-degree <= 1.
    Solve {
        graph: PathBuf,
        /// Vertex costs, one `v c_v` per line; unlisted vertices cost 1.
        #[arg(long)]
        weights: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        /// Write G' in graph format here, and its bookkeeping to `<path>.json`.
        #[arg(long, value_name = "PATH")]
        dump_reduction: Option<PathBuf>,
    },
    /// Check a JSON solution against an instance.
    Verify {
        graph: PathBuf,
        solution: PathBuf,
        #[arg(long)]
        weights: Option<PathBuf>,
        /// Check only the claimed values, not optimality.
        #[arg(long)]
        no_oracle: bool,
    },
    /// Print a seeded G(n, p) graph.
    Gen {
        n: usize,
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Draw integer vertex costs uniformly from 0..=W.
        #[arg(long, value_name = "W", requires = "weights_out")]
        weights_max: Option<u64>,
        #[arg(long, value_name = "PATH", requires = "weights_max")]
        weights_out: Option<PathBuf>,
    },
    /// Solve generated instances and check the certificate identities.
    Bench {
        /// Semicolon-separated sizes, e.g. "n=50,m=150;n=100,m=300".
        #[arg(default_value = "n=50,m=150;n=100,m=300")]
        schedule: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_name = "W")]
        weights_max: Option<u64>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Mismatch(_) => ExitCode::from(1),
            CliError::Input(_) => ExitCode::from(2),
        }
    }
}

fn input<E: std::fmt::Display>(context: &Path) -> impl Fn(E) -> CliError + '_ {
    move |e| CliError::Input(format!("{}: {e}", context.display()))
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(input(path))
}

fn load(graph: &Path, weights: Option<&Path>) -> Result<(Graph, DecimalWeights), CliError> {
    let g = parse_graph(&read(graph)?).map_err(input(graph))?;
    let w = match weights {
        Some(path) => parse_weights(&read(path)?, g.vertex_count()).map_err(input(path))?,
        None => DecimalWeights::unit(g.vertex_count()),
    };
    Ok((g, w))
}

fn oracle_budget() -> Result<OracleBudget, CliError> {
    match std::env::var(BUDGET_VAR) {
        Ok(text) => OracleBudget::parse(&text).map_err(|e| CliError::Input(format!("{BUDGET_VAR}: {e}"))),
        Err(_) => Ok(OracleBudget::default()),
    }
}

fn solve(
    path: &Path,
    weights: Option<&Path>,
    as_json: bool,
    dump: Option<&Path>,
) -> Result<(), CliError> {
    let (g, w) = load(path, weights)?;
    let solution = solve_min_light_weighted(&g, &w.weights).map_err(input(path))?;

    if let Some(dump) = dump {
        let r = reduce(&g, Some(&w.weights)).map_err(input(path))?;
        fs::write(dump, render_graph(&r.reduced.gprime)).map_err(input(dump))?;
        let sidecar = dump.with_extension(match dump.extension() {
            Some(ext) => format!("{}.json", ext.to_string_lossy()),
            None => "json".to_string(),
        });
        let text = serde_json::to_string_pretty(&Sidecar::new(&r)).expect("serializable");
        fs::write(&sidecar, text).map_err(input(&sidecar))?;
    }

    if as_json {
        let out = SolutionJson::from_solution(&g, &solution, &w);
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    } else {
        println!("objective: {}", w.format(solution.objective));
        let light: Vec<String> = solution.light.iter().map(|v| (v + 1).to_string()).collect();
        println!("light: {}", light.join(" "));
        for (t, h) in solution.orientation.arcs(&g) {
            println!("{} -> {}", t + 1, h + 1);
        }
    }
    Ok(())
}

fn verify(
    path: &Path,
    solution: &Path,
    weights: Option<&Path>,
    no_oracle: bool,
) -> Result<(), CliError> {
    let (g, w) = load(path, weights)?;
    let claimed: SolutionJson = serde_json::from_str(&read(solution)?).map_err(input(solution))?;
    let mismatch = |message: String| CliError::Mismatch(message);

    let mut arcs = Vec::with_capacity(claimed.orientation.len());
    for &[t, h] in &claimed.orientation {
        match (t.checked_sub(1), h.checked_sub(1)) {
            (Some(t), Some(h)) => arcs.push((t, h)),
            _ => return Err(mismatch(format!("arc ({t}, {h}) uses label 0"))),
        }
    }
    let o = Orientation::from_arcs(&g, &arcs).map_err(|e| mismatch(format!("orientation: {e}")))?;

    let light = light_vertices(&g, &o, 1);
    let mut claimed_light: Vec<usize> = claimed.light.iter().map(|v| v.wrapping_sub(1)).collect();
    claimed_light.sort_unstable();
    if claimed_light != light {
        let labels: Vec<usize> = light.iter().map(|v| v + 1).collect();
        return Err(mismatch(format!("light set is {labels:?}, claimed {:?}", claimed.light)));
    }
    let objective = orient_light::light_cost(&g, &o, &w.weights);
    let claimed_objective = w.parse_value(&claimed.objective.to_string()).ok_or_else(|| {
        mismatch(format!("claimed objective {} is not representable", claimed.objective))
    })?;
    if claimed_objective != objective {
        return Err(mismatch(format!(
            "objective is {}, claimed {}",
            w.format(objective),
            claimed.objective
        )));
    }

    if !no_oracle {
        let budget = oracle_budget()?;
        let optimum = if g.edge_count() <= budget.max_edges {
            brute_force_min_light(&g, 1, Some(&w.weights), budget)
                .map_err(input(path))?
                .0
        } else {
            solve_min_light_weighted(&g, &w.weights).map_err(input(path))?.objective
        };
        if objective != optimum {
            return Err(mismatch(format!(
                "objective {} is not optimal; optimum is {}",
                w.format(objective),
                w.format(optimum)
            )));
        }
    }
    println!("ok: objective {}", w.format(objective));
    Ok(())
}

fn generate(
    n: usize,
    p: f64,
    seed: u64,
    weights: Option<(u64, &Path)>,
) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::Input("n must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(CliError::Input(format!("edge probability {p} is outside [0, 1]")));
    }
    let mut rng = InstanceRng::new(seed);
    let g = rng.gnp(n, p);
    print!("{}", render_graph(&g));
    if let Some((max, path)) = weights {
        let w = rng.weights(n, max);
        let text: String = w
            .costs()
            .iter()
            .enumerate()
            .map(|(v, c)| format!("{} {c}\n", v + 1))
            .collect();
        fs::write(path, text).map_err(input(path))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Solve {
            graph,
            weights,
            json,
            dump_reduction,
        } => solve(&graph, weights.as_deref(), json, dump_reduction.as_deref()),
        Command::Verify {
            graph,
            solution,
            weights,
            no_oracle,
        } => verify(&graph, &solution, weights.as_deref(), no_oracle),
        Command::Gen {
            n,
            p,
            seed,
            weights_max,
            weights_out,
        } => generate(n, p, seed, weights_max.zip(weights_out.as_deref())),
        Command::Bench {
            schedule,
            seed,
            weights_max,
        } => bench::run(&schedule, seed, weights_max),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
