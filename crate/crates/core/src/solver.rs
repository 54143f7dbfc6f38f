//! Min-1-Light end to end: pad degree-1 vertices, build `G'`, match, read
//! the orientation off the connecting edges, and map it back.
//!
//! For a min-degree-2 core with `m` edges, every orientation `o` yields a
//! matching of size `2m - |light(o)|` and every maximum matching `M` yields
//! an orientation with at most `2m - |M|` light vertices, so a maximum
//! matching gives an optimal orientation together with a proof of
//! optimality. With costs, `2m` becomes `Q = Σ_v d(v)·c_v` and sizes become
//! weights.

use std::time::{Duration, Instant};

use crate::error::{GraphError, MatchingError, SolveError};
use crate::graph::{light_cost, light_vertices, Direction, Graph, Orientation, VertexWeights};
use crate::matching::{
    extend_to_maximal, is_valid_matching, max_cardinality_matching, max_weight_matching,
    Matching, MatchingVerdict,
};
use crate::reduction::{
    build_gprime, eliminate_degree_one, quotient_q, strip_isolated, CoreGraph,
    CycleAugmentedGraph, ReducedGraph,
};
use crate::scalar::{self, Scalar};

/// `objective = constant - matching_value + offset`.
///
/// `constant` is `2m` (or `Q`) and `matching_value` is `|M|` (or `w(M)`) on
/// the min-degree-2 core; `offset` accounts for isolated vertices and the
/// padding around degree-1 vertices.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Certificate<W> {
    pub matching_value: W,
    pub constant: W,
    pub offset: W,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct PipelineStats {
    pub vertices: usize,
    pub edges: usize,
    pub degree_one: usize,
    pub isolated: usize,
    pub core_vertices: usize,
    pub core_edges: usize,
    pub reduced_vertices: usize,
    pub reduced_edges: usize,
    pub reduce_time: Duration,
    pub match_time: Duration,
    pub recover_time: Duration,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Solution<W> {
    pub orientation: Orientation,
    /// 1-light vertices of the input graph under `orientation`.
    pub light: Vec<usize>,
    pub objective: W,
    /// Light count (or cost) on the core, recounted from the orientation.
    pub core_objective: W,
    pub certificate: Certificate<W>,
    pub stats: PipelineStats,
}

/// `M(Λ)`: selects the tail-side connecting edge of every core edge, extends
/// greedily to a maximal matching, then normalizes every gadget.
///
/// The result has `|M ∩ F_v| = d⁺(v)` for every core vertex and
/// `|M| = 2m - |light(o)|`.
pub fn matching_from_orientation<W: Scalar>(r: &ReducedGraph<W>, o: &Orientation) -> Matching {
    let core = &r.core;
    let mut m = Matching::empty(&r.gprime);
    for e in 0..core.edge_count() {
        let tail = o.tail(core, e);
        m.insert(&r.gprime, r.connecting_edge(tail, e))
            .expect("connecting edges of distinct core edges are disjoint");
    }
    let mut m = extend_to_maximal(&r.gprime, &m);
    for v in 0..core.vertex_count() {
        m = normalize_gadget_matching(r, &m, v).expect("normalization keeps maximality");
    }
    m
}

/// `N_v`: rewrites `m` inside `W_v` so that `W_v ∪ F_v` holds `d(v) - 1`
/// matched edges when at most one connecting edge of `v` is matched, and
/// `d(v)` otherwise. `m` must be a maximal matching of `G'`.
pub fn normalize_gadget_matching<W: Scalar>(
    r: &ReducedGraph<W>,
    m: &Matching,
    v: usize,
) -> Result<Matching, MatchingError> {
    let g = &r.gprime;
    match is_valid_matching(g, m.edges()) {
        MatchingVerdict::Valid => {}
        bad => return Err(MatchingError::Invalid(format!("{bad:?}"))),
    }
    if let Some(e) = m.first_addable_edge(g) {
        return Err(MatchingError::NotMaximal(e));
    }
    let gadget = &r.vertex_gadgets[v];
    let k = gadget
        .connecting_edges
        .iter()
        .filter(|&&e| m.contains(e))
        .count();
    let special = m.contains(gadget.special_edge);

    let mut out = m.clone();
    if k == 0 && !special {
        // Replace the gadget's edges by a perfect matching of W_v.
        for e in gadget.gadget_edges() {
            out.remove(g, e);
        }
        out.insert(g, gadget.special_edge)?;
        for i in 0..gadget.inner.len() {
            out.insert(g, gadget.bipartite_edge(i, i + 2))?;
        }
    } else if k >= 2 && special {
        // Trade g_v for two edges from exposed inner vertices to its ends.
        let exposed: Vec<usize> = (0..gadget.inner.len())
            .filter(|&i| m.is_exposed(gadget.inner[i]))
            .take(2)
            .collect();
        debug_assert_eq!(exposed.len(), 2);
        out.remove(g, gadget.special_edge);
        out.insert(g, gadget.bipartite_edge(exposed[0], 0))?;
        out.insert(g, gadget.bipartite_edge(exposed[1], 1))?;
    }
    Ok(out)
}

/// `Λ(M)`: orients core edge `e = (u, v)` as `u -> v` if `{u'_e, x_e}` is
/// matched, `v -> u` if `{v'_e, x_e}` is, and from the lower id to the
/// higher id if `x_e` is exposed.
pub fn recover_orientation<W: Scalar>(
    r: &ReducedGraph<W>,
    m: &Matching,
) -> Result<Orientation, MatchingError> {
    let core = &r.core;
    let mut directions = Vec::with_capacity(core.edge_count());
    for (e, gadget) in r.edge_gadgets.iter().enumerate() {
        let [first, second] = gadget.connecting_edges.map(|c| m.contains(c));
        let d = match (first, second) {
            (true, true) => return Err(MatchingError::DoublyMatchedConnector(e)),
            (true, false) => Direction::Forward,
            (false, true) => Direction::Backward,
            (false, false) => {
                let (a, b) = core.edge(e);
                if a < b {
                    Direction::Forward
                } else {
                    Direction::Backward
                }
            }
        };
        directions.push(d);
    }
    Ok(Orientation::new(directions))
}

/// Minimizes the number of vertices with out-degree at most one.
pub fn solve_min_light(g: &Graph) -> Result<Solution<i64>, SolveError> {
    pipeline::<i64>(g, None)
}

/// Minimizes the total cost of vertices with out-degree at most one.
///
/// Costs must be nonnegative: with negative costs the problem contains
/// Min-1-Heavy and is NP-hard.
pub fn solve_min_light_weighted<W: Scalar>(
    g: &Graph,
    weights: &VertexWeights<W>,
) -> Result<Solution<W>, SolveError> {
    if let Some(v) = weights.costs().iter().position(|c| c.is_negative()) {
        return Err(GraphError::NegativeWeight(v).into());
    }
    weights.check_for(g)?;
    pipeline(g, Some(weights))
}

/// Every intermediate of the reduction, from the input graph to `G'`.
pub struct Reduction<W> {
    pub padded: CycleAugmentedGraph,
    pub core: CoreGraph,
    /// Costs on core vertices; padding vertices cost 0 with weights, 1 without.
    pub core_weights: VertexWeights<W>,
    pub reduced: ReducedGraph<W>,
}

/// Pads degree-1 vertices, strips isolated ones and builds `G'`.
pub fn reduce<W: Scalar>(
    g: &Graph,
    weights: Option<&VertexWeights<W>>,
) -> Result<Reduction<W>, SolveError> {
    let cost = |v: usize| weights.map_or(W::one(), |w| w.cost(v));
    let padded = eliminate_degree_one(g);
    let core = strip_isolated(&padded.graph);
    let core_costs: Vec<W> = core
        .to_parent
        .iter()
        .map(|&p| match (padded.is_cycle_vertex(p), weights) {
            (true, Some(_)) => W::zero(),
            (true, None) => W::one(),
            (false, _) => cost(p),
        })
        .collect();
    let core_weights = VertexWeights::new(core_costs)?;
    let reduced = build_gprime(&core.graph, Some(&core_weights))?;
    Ok(Reduction {
        padded,
        core,
        core_weights,
        reduced,
    })
}

fn count<W: Scalar>(x: usize) -> W {
    (0..x).fold(W::zero(), |acc, _| acc + W::one())
}

fn pipeline<W: Scalar>(
    g: &Graph,
    weights: Option<&VertexWeights<W>>,
) -> Result<Solution<W>, SolveError> {
    let cost = |v: usize| weights.map_or(W::one(), |w| w.cost(v));
    let mut stats = PipelineStats {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        ..PipelineStats::default()
    };

    let clock = Instant::now();
    let Reduction {
        padded,
        core,
        core_weights,
        reduced,
    } = reduce(g, weights)?;
    stats.degree_one = padded.added_cycles.len();
    stats.isolated = core.isolated.len();
    stats.core_vertices = core.graph.vertex_count();
    stats.core_edges = core.graph.edge_count();
    stats.reduced_vertices = reduced.gprime.vertex_count();
    stats.reduced_edges = reduced.gprime.edge_count();
    stats.reduce_time = clock.elapsed();

    let clock = Instant::now();
    let matching = match weights {
        None => max_cardinality_matching(&reduced.gprime),
        Some(_) => max_weight_matching(&reduced.gprime, &reduced.edge_weights)?,
    };
    stats.match_time = clock.elapsed();

    let clock = Instant::now();
    let core_orientation = recover_orientation(&reduced, &matching)?;
    let core_objective = light_cost(&core.graph, &core_orientation, &core_weights);
    let matching_value = matching.weight(&reduced.edge_weights);
    let constant = quotient_q(&core.graph, &core_weights);
    if core_objective != constant - matching_value {
        return Err(SolveError::Internal(format!(
            "core objective {core_objective:?} differs from certificate {constant:?} - {matching_value:?}"
        )));
    }

    // Original edges keep their ids and endpoint order through padding and
    // isolated-vertex removal.
    let orientation = Orientation::new(core_orientation.directions()[..g.edge_count()].to_vec());
    let light = light_vertices(g, &orientation, 1);
    let objective = scalar::sum(light.iter().map(|&v| cost(v)));
    let offset = objective - (constant - matching_value);

    let isolated_cost = scalar::sum(core.isolated.iter().map(|&v| cost(v)));
    let expected_offset = match weights {
        // each pad holds exactly two light vertices, replacing one always-light leaf
        None => isolated_cost + count(stats.degree_one) - count::<W>(2 * stats.degree_one),
        Some(_) => {
            isolated_cost + scalar::sum(padded.added_cycles.iter().map(|c| cost(c.anchor)))
        }
    };
    if offset != expected_offset {
        return Err(SolveError::Internal(format!(
            "preprocessing offset {offset:?}, expected {expected_offset:?}"
        )));
    }
    stats.recover_time = clock.elapsed();

    Ok(Solution {
        orientation,
        light,
        objective,
        core_objective,
        certificate: Certificate {
            matching_value,
            constant,
            offset,
        },
        stats,
    })
}
