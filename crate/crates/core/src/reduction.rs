//! From an orientation instance to a matching instance.
//!
//! Degree-1 vertices are first padded with a pendant 4-cycle so that every
//! non-isolated vertex has degree at least 2. Each edge `e = {u, v}` of the
//! resulting core then becomes a path `u'_e - x_e - v'_e` and each vertex `v`
//! becomes a gadget `W_v`: `d(v) - 2` inner vertices joined to all `d(v)` port
//! vertices `v'_e`, plus one special edge between two ports. A vertex is heavy
//! (out-degree >= 2) exactly when its gadget together with its connecting
//! edges can host `d(v)` matching edges instead of `d(v) - 1`.

use serde::Serialize;

use crate::error::ReductionError;
use crate::graph::{Graph, VertexWeights};
use crate::scalar::{self, Scalar};

/// A pendant 4-cycle `v - a - b - c - v` attached to a former degree-1 vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PendantCycle {
    pub anchor: usize,
    pub vertices: [usize; 3],
    pub edges: [usize; 4],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleAugmentedGraph {
    pub graph: Graph,
    pub added_cycles: Vec<PendantCycle>,
    /// Vertices `0..original_vertices` and edges `0..original_edges` are
    /// those of the input graph, with unchanged ids.
    pub original_vertices: usize,
    pub original_edges: usize,
}

impl CycleAugmentedGraph {
    pub fn original_edge_ids(&self) -> std::ops::Range<usize> {
        0..self.original_edges
    }

    pub fn is_cycle_vertex(&self, v: usize) -> bool {
        v >= self.original_vertices
    }
}

/// Attaches a 4-cycle at every degree-1 vertex. Isolated vertices are left
/// alone.
pub fn eliminate_degree_one(g: &Graph) -> CycleAugmentedGraph {
    let mut graph = g.clone();
    let mut added_cycles = Vec::new();
    for v in 0..g.vertex_count() {
        if g.degree(v) != 1 {
            continue;
        }
        let vertices = [graph.add_vertex(), graph.add_vertex(), graph.add_vertex()];
        let [a, b, c] = vertices;
        let edges = [(v, a), (a, b), (b, c), (c, v)]
            .map(|(x, y)| graph.add_edge(x, y).expect("fresh vertices"));
        added_cycles.push(PendantCycle {
            anchor: v,
            vertices,
            edges,
        });
    }
    CycleAugmentedGraph {
        graph,
        added_cycles,
        original_vertices: g.vertex_count(),
        original_edges: g.edge_count(),
    }
}

/// A graph with its isolated vertices removed. Edge ids are unchanged.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreGraph {
    pub graph: Graph,
    /// Core vertex -> vertex of the parent graph.
    pub to_parent: Vec<usize>,
    pub isolated: Vec<usize>,
}

pub fn strip_isolated(g: &Graph) -> CoreGraph {
    let mut to_parent = Vec::new();
    let mut isolated = Vec::new();
    let mut index = vec![usize::MAX; g.vertex_count()];
    for v in 0..g.vertex_count() {
        if g.degree(v) == 0 {
            isolated.push(v);
        } else {
            index[v] = to_parent.len();
            to_parent.push(v);
        }
    }
    let graph = Graph::from_edges(
        to_parent.len(),
        g.edges().iter().map(|&(u, v)| (index[u], index[v])),
    )
    .expect("relabelling keeps the graph simple");
    CoreGraph {
        graph,
        to_parent,
        isolated,
    }
}

/// The path `u'_e - x_e - v'_e` that replaces core edge `e = (u, v)`.
///
/// Index 0 refers to the first stored endpoint `u`, index 1 to `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeGadget {
    pub ports: [usize; 2],
    pub connector: usize,
    /// `{u'_e, x_e}` and `{v'_e, x_e}`.
    pub connecting_edges: [usize; 2],
}

/// The gadget `W_v` together with the connecting edges on `v`'s side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexGadget {
    /// `v''_1 .. v''_{d-2}`.
    pub inner: Vec<usize>,
    /// `v'_e` for each incident core edge, in incidence order.
    pub ports: Vec<usize>,
    /// `{inner[i], ports[j]}` is `bipartite_edges[i * ports.len() + j]`.
    pub bipartite_edges: Vec<usize>,
    pub special_edge: usize,
    /// `F_v`, aligned with `ports`.
    pub connecting_edges: Vec<usize>,
}

impl VertexGadget {
    pub fn degree(&self) -> usize {
        self.ports.len()
    }

    pub fn bipartite_edge(&self, inner: usize, port: usize) -> usize {
        self.bipartite_edges[inner * self.ports.len() + port]
    }

    /// `E(W_v)`: bipartite edges followed by the special edge.
    pub fn gadget_edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.bipartite_edges
            .iter()
            .copied()
            .chain(std::iter::once(self.special_edge))
    }

    /// `E(W_v) ∪ F_v`.
    pub fn owned_edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.gadget_edges()
            .chain(self.connecting_edges.iter().copied())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EdgeRole {
    Connecting,
    Bipartite,
    Special,
}

/// The matching instance `G'` with the bookkeeping that ties it to the core.
///
/// Vertex layout: edge triples `(u'_e, x_e, v'_e)` at `3e..3e+3` in edge
/// order, followed by the inner vertices of each gadget in vertex order.
/// Edge layout: `{u'_e, x_e}, {x_e, v'_e}` at `2e, 2e+1`, followed by each
/// vertex's bipartite edges and then its special edge, in vertex order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReducedGraph<T> {
    pub core: Graph,
    pub gprime: Graph,
    pub edge_gadgets: Vec<EdgeGadget>,
    pub vertex_gadgets: Vec<VertexGadget>,
    /// Core vertex `v` with `e ∈ E(W_v) ∪ F_v`, for every `G'` edge `e`.
    pub owner: Vec<usize>,
    pub role: Vec<EdgeRole>,
    pub edge_weights: Vec<T>,
}

impl<T: Scalar> ReducedGraph<T> {
    /// Sum of the weights of the given `G'` edges.
    pub fn weight_of<I: IntoIterator<Item = usize>>(&self, edges: I) -> T {
        scalar::sum(edges.into_iter().map(|e| self.edge_weights[e]))
    }

    /// The port of core vertex `v` on core edge `e`.
    pub fn port(&self, v: usize, e: usize) -> usize {
        self.edge_gadgets[e].ports[self.side(v, e)]
    }

    /// `{v'_e, x_e}`.
    pub fn connecting_edge(&self, v: usize, e: usize) -> usize {
        self.edge_gadgets[e].connecting_edges[self.side(v, e)]
    }

    fn side(&self, v: usize, e: usize) -> usize {
        let (a, b) = self.core.edge(e);
        if a == v {
            0
        } else {
            assert_eq!(b, v, "vertex {v} is not an endpoint of edge {e}");
            1
        }
    }
}

/// Builds `G'` from a core whose vertices all have degree at least 2.
///
/// With `weights`, every edge of `E(W_v) ∪ F_v` gets weight `c_v`; without,
/// every edge gets weight one.
pub fn build_gprime<T: Scalar>(
    core: &Graph,
    weights: Option<&VertexWeights<T>>,
) -> Result<ReducedGraph<T>, ReductionError> {
    for v in 0..core.vertex_count() {
        if core.degree(v) < 2 {
            return Err(ReductionError::DegreeTooSmall {
                vertex: v,
                degree: core.degree(v),
            });
        }
    }
    if let Some(w) = weights {
        w.check_for(core)?;
    }
    let cost = |v: usize| weights.map_or(T::one(), |w| w.cost(v));

    let m = core.edge_count();
    let inner_total: usize = (0..core.vertex_count()).map(|v| core.degree(v) - 2).sum();
    let mut gprime = Graph::new(3 * m + inner_total);
    let mut owner = Vec::new();
    let mut role = Vec::new();
    let mut edge_weights = Vec::new();
    let mut push = |g: &mut Graph, a: usize, b: usize, v: usize, r: EdgeRole| {
        owner.push(v);
        role.push(r);
        edge_weights.push(cost(v));
        g.add_edge(a, b).expect("gadget edges are distinct")
    };

    let mut edge_gadgets = Vec::with_capacity(m);
    for (e, &(u, v)) in core.edges().iter().enumerate() {
        let ports = [3 * e, 3 * e + 2];
        let connector = 3 * e + 1;
        let connecting_edges = [
            push(&mut gprime, ports[0], connector, u, EdgeRole::Connecting),
            push(&mut gprime, connector, ports[1], v, EdgeRole::Connecting),
        ];
        edge_gadgets.push(EdgeGadget {
            ports,
            connector,
            connecting_edges,
        });
    }

    let mut next_inner = 3 * m;
    let mut vertex_gadgets = Vec::with_capacity(core.vertex_count());
    for v in 0..core.vertex_count() {
        let d = core.degree(v);
        let incident = core.incident(v);
        let side = |e: usize| usize::from(core.edge(e).0 != v);
        let ports: Vec<usize> = incident
            .iter()
            .map(|&e| edge_gadgets[e].ports[side(e)])
            .collect();
        let connecting_edges = incident
            .iter()
            .map(|&e| edge_gadgets[e].connecting_edges[side(e)])
            .collect();
        let inner: Vec<usize> = (next_inner..next_inner + d - 2).collect();
        next_inner += d - 2;
        let mut bipartite_edges = Vec::with_capacity((d - 2) * d);
        for &i in &inner {
            for &p in &ports {
                bipartite_edges.push(push(&mut gprime, i, p, v, EdgeRole::Bipartite));
            }
        }
        // Incident edges are sorted, so these are the two smallest edge ids.
        let special_edge = push(&mut gprime, ports[0], ports[1], v, EdgeRole::Special);
        vertex_gadgets.push(VertexGadget {
            inner,
            ports,
            bipartite_edges,
            special_edge,
            connecting_edges,
        });
    }

    Ok(ReducedGraph {
        core: core.clone(),
        gprime,
        edge_gadgets,
        vertex_gadgets,
        owner,
        role,
        edge_weights,
    })
}

/// `Q = Σ_{e={u,v}} (c_u + c_v)`, the weighted analogue of `2m`.
pub fn quotient_q<T: Scalar>(g: &Graph, w: &VertexWeights<T>) -> T {
    scalar::sum(g.edges().iter().map(|&(u, v)| w.cost(u) + w.cost(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::complete;
    use crate::graph::{Direction, Orientation};

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    #[test]
    fn pendant_cycle_counts() {
        let p2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        let aug = eliminate_degree_one(&p2);
        assert_eq!(aug.graph.vertex_count(), 8);
        assert_eq!(aug.graph.edge_count(), 9);

        let aug = eliminate_degree_one(&star(3));
        assert_eq!(aug.graph.vertex_count(), 13);
        assert_eq!(aug.graph.edge_count(), 15);
        assert_eq!(aug.added_cycles.len(), 3);
        for c in &aug.added_cycles {
            assert_eq!(aug.graph.degree(c.anchor), 2 + 1);
            for &x in &c.vertices {
                assert_eq!(aug.graph.degree(x), 2);
            }
        }

        let c4 = cycle(4);
        let aug = eliminate_degree_one(&c4);
        assert!(aug.added_cycles.is_empty());
        assert_eq!(aug.graph, c4);
    }

    #[test]
    fn pendant_cycle_is_idempotent() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (4, 3)]).unwrap();
        let once = eliminate_degree_one(&g);
        let twice = eliminate_degree_one(&once.graph);
        assert!(twice.added_cycles.is_empty());
        assert_eq!(twice.graph, once.graph);
        assert_eq!(once.graph.vertex_count(), 6 + 3);
        // vertex 5 is isolated and passes through
        assert_eq!(once.graph.degree(5), 0);
    }

    #[test]
    fn pendant_cycle_has_at_most_two_heavy() {
        // pendant edge {u, v} plus the cycle on v, all 2^5 orientations
        let mut g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let v = 1;
        let a = g.add_vertex();
        let b = g.add_vertex();
        let c = g.add_vertex();
        for (x, y) in [(v, a), (a, b), (b, c), (c, v)] {
            g.add_edge(x, y).unwrap();
        }
        let mut best = 0;
        for mask in 0u32..32 {
            let dirs = (0..5)
                .map(|e| {
                    if mask >> e & 1 == 0 {
                        Direction::Forward
                    } else {
                        Direction::Backward
                    }
                })
                .collect();
            let out = Orientation::new(dirs).out_degrees(&g);
            let heavy = [v, a, b, c].iter().filter(|&&x| out[x] >= 2).count();
            assert!(heavy <= 2);
            best = best.max(heavy);
        }
        assert_eq!(best, 2);
    }

    #[test]
    fn strip_isolated_keeps_edge_ids() {
        let g = Graph::from_edges(5, [(1, 3), (3, 4)]).unwrap();
        let core = strip_isolated(&g);
        assert_eq!(core.isolated, vec![0, 2]);
        assert_eq!(core.to_parent, vec![1, 3, 4]);
        assert_eq!(core.graph.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn triangle_reduction() {
        let r = build_gprime::<i64>(&complete(3), None).unwrap();
        assert_eq!(r.gprime.vertex_count(), 9);
        assert_eq!(r.gprime.edge_count(), 9);
        for g in &r.vertex_gadgets {
            assert!(g.inner.is_empty());
            assert!(g.bipartite_edges.is_empty());
        }
        assert_eq!(
            r.role.iter().filter(|&&x| x == EdgeRole::Special).count(),
            3
        );
        assert!(r.edge_weights.iter().all(|&w| w == 1));
    }

    #[test]
    fn degree_three_gadget() {
        let r = build_gprime::<i64>(&complete(4), None).unwrap();
        let w = &r.vertex_gadgets[0];
        assert_eq!(w.inner.len() + w.ports.len(), 4);
        assert_eq!(w.gadget_edges().count(), 4);
        assert_eq!(r.gprime.vertex_count(), 5 * 6 - 2 * 4);
    }

    #[test]
    fn four_cycle_sizes() {
        let r = build_gprime::<i64>(&cycle(4), None).unwrap();
        assert_eq!(r.gprime.vertex_count(), 12);
        assert_eq!(r.gprime.edge_count(), 12);
    }

    #[test]
    fn special_edge_uses_two_smallest_incident_edges() {
        let g = complete(4);
        let r = build_gprime::<i64>(&g, None).unwrap();
        for v in 0..4 {
            let (a, b) = r.gprime.edge(r.vertex_gadgets[v].special_edge);
            let inc = g.incident(v);
            assert_eq!((a, b), (r.port(v, inc[0]), r.port(v, inc[1])));
        }
    }

    #[test]
    fn connector_degree_two_and_partition() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let r = build_gprime::<i64>(&g, None).unwrap();
        for eg in &r.edge_gadgets {
            assert_eq!(r.gprime.degree(eg.connector), 2);
        }
        let mut count = vec![0; r.gprime.edge_count()];
        for wv in &r.vertex_gadgets {
            for e in wv.owned_edges() {
                count[e] += 1;
            }
        }
        assert!(count.iter().all(|&c| c == 1));
    }

    #[test]
    fn rejects_low_degree() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            build_gprime::<i64>(&p3, None).unwrap_err(),
            ReductionError::DegreeTooSmall {
                vertex: 0,
                degree: 1
            }
        );
    }

    #[test]
    fn weighted_edges_carry_owner_cost() {
        let g = complete(3);
        let w = VertexWeights::new(vec![5i64, 1, 1]).unwrap();
        let r = build_gprime(&g, Some(&w)).unwrap();
        for (v, wv) in r.vertex_gadgets.iter().enumerate() {
            for e in wv.owned_edges() {
                assert_eq!(r.edge_weights[e], w.cost(v));
            }
        }
        assert_eq!(quotient_q(&g, &w), 14);
        let by_degree: i64 = (0..3).map(|v| g.degree(v) as i64 * w.cost(v)).sum();
        assert_eq!(by_degree, 14);
    }

    #[test]
    fn quotient_trivial_cases() {
        let g = complete(5);
        assert_eq!(quotient_q(&g, &VertexWeights::<i64>::ones(5)), 20);
        assert_eq!(quotient_q(&g, &VertexWeights::uniform(5, 0i64).unwrap()), 0);
    }
}
