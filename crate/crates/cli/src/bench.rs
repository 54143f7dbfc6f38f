use std::thread;

use orient_light::generate::{density_for, InstanceRng};
use orient_light::solver::reduce;
use orient_light::{solve_min_light, solve_min_light_weighted, Graph, SolveError, VertexWeights};

use crate::CliError;

pub struct RunReport {
    pub n: usize,
    pub m: usize,
    pub degree_one: usize,
    pub isolated: usize,
    pub reduced_vertices: usize,
    pub reduced_edges: usize,
    pub reduce_ms: f64,
    pub match_ms: f64,
    pub recover_ms: f64,
    pub objective: i64,
    pub matching_value: i64,
    pub constant: i64,
    pub offset: i64,
    pub identities_hold: bool,
}

fn parse_schedule(text: &str) -> Result<Vec<(usize, usize)>, CliError> {
    let bad = |item: &str| CliError::Input(format!("bad schedule entry {item:?}; expected n=N,m=M"));
    text.split(';')
        .map(str::trim)
        .filter(|item| !item.is_empty())
        .map(|item| {
            let mut n = None;
            let mut m = None;
            for part in item.split(',') {
                let (key, value) = part.split_once('=').ok_or_else(|| bad(item))?;
                let value: usize = value.trim().parse().map_err(|_| bad(item))?;
                match key.trim() {
                    "n" => n = Some(value),
                    "m" => m = Some(value),
                    _ => return Err(bad(item)),
                }
            }
            n.zip(m).ok_or_else(|| bad(item))
        })
        .collect()
}

fn run_one(g: &Graph, w: Option<&VertexWeights<i64>>) -> Result<RunReport, SolveError> {
    let s = match w {
        Some(w) => solve_min_light_weighted(g, w)?,
        None => solve_min_light(g)?,
    };
    let r = reduce(g, w)?;
    let core = &r.core.graph;
    let expected_edges: usize = (0..core.vertex_count())
        .map(|v| core.degree(v))
        .map(|d| d * d - d + 1)
        .sum();
    let c = s.certificate;
    let st = &s.stats;
    let unweighted_constant = w.is_some() || c.constant == 2 * st.core_edges as i64;
    let identities_hold = unweighted_constant
        && st.reduced_vertices == 5 * st.core_edges - 2 * st.core_vertices
        && st.reduced_edges == expected_edges
        && s.core_objective == c.constant - c.matching_value
        && s.objective == c.constant - c.matching_value + c.offset;
    let ms = |d: std::time::Duration| d.as_secs_f64() * 1e3;
    Ok(RunReport {
        n: st.vertices,
        m: st.edges,
        degree_one: st.degree_one,
        isolated: st.isolated,
        reduced_vertices: st.reduced_vertices,
        reduced_edges: st.reduced_edges,
        reduce_ms: ms(st.reduce_time),
        match_ms: ms(st.match_time),
        recover_ms: ms(st.recover_time),
        objective: s.objective,
        matching_value: c.matching_value,
        constant: c.constant,
        offset: c.offset,
        identities_hold,
    })
}

pub fn run(schedule: &str, seed: u64, weights_max: Option<u64>) -> Result<(), CliError> {
    let sizes = parse_schedule(schedule)?;
    let instances: Vec<(Graph, Option<VertexWeights<i64>>)> = sizes
        .iter()
        .enumerate()
        .map(|(i, &(n, m))| {
            let mut rng = InstanceRng::new(seed.wrapping_add(i as u64));
            let g = rng.gnp(n, density_for(n, m));
            let w = weights_max.map(|max| rng.weights(n, max));
            (g, w)
        })
        .collect();

    let results: Vec<Result<RunReport, SolveError>> = thread::scope(|scope| {
        let handles: Vec<_> = instances
            .iter()
            .map(|(g, w)| scope.spawn(move || run_one(g, w.as_ref())))
            .collect();
        handles.into_iter().map(|h| h.join().expect("solver thread panicked")).collect()
    });

    println!(
        "{:>6} {:>6} {:>4} {:>4} {:>7} {:>8} {:>10} {:>10} {:>10} {:>9} {:>9} {:>9} {:>6}  identities",
        "n", "m", "n1", "iso", "|V'|", "|E'|", "reduce_ms", "match_ms", "recover_ms",
        "objective", "w(M)", "constant", "offset"
    );
    let mut failures = 0;
    for result in results {
        let r = result.map_err(|e| CliError::Mismatch(format!("solve failed: {e}")))?;
        failures += usize::from(!r.identities_hold);
        println!(
            "{:>6} {:>6} {:>4} {:>4} {:>7} {:>8} {:>10.3} {:>10.3} {:>10.3} {:>9} {:>9} {:>9} {:>6}  {}",
            r.n, r.m, r.degree_one, r.isolated, r.reduced_vertices, r.reduced_edges,
            r.reduce_ms, r.match_ms, r.recover_ms, r.objective, r.matching_value,
            r.constant, r.offset, if r.identities_hold { "ok" } else { "VIOLATED" }
        );
    }
    if failures > 0 {
        return Err(CliError::Mismatch(format!("{failures} runs violated a certificate identity")));
    }
    Ok(())
}
