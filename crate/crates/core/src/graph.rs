//! Simple undirected graphs, edge orientations and light-vertex accounting.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::scalar::{self, Scalar};

/// A simple undirected graph on the vertices `0..n`.
///
/// Edges keep the endpoint order they were created with; that order only
/// matters as the reference frame for [`Direction`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        let mut seen = HashSet::new();
        for (u, v) in edges {
            g.check_edge(u, v, &seen)?;
            seen.insert((u.min(v), u.max(v)));
            g.push_edge(u, v);
        }
        Ok(g)
    }

    /// Adds the edge `{u, v}` and returns its index.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<usize, GraphError> {
        if u < self.n && v < self.n && u != v && self.find_edge(u, v).is_some() {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        self.check_edge(u, v, &HashSet::new())?;
        Ok(self.push_edge(u, v))
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adjacency.push(Vec::new());
        self.n += 1;
        self.n - 1
    }

    fn check_edge(
        &self,
        u: usize,
        v: usize,
        seen: &HashSet<(usize, usize)>,
    ) -> Result<(), GraphError> {
        if u >= self.n || v >= self.n {
            return Err(GraphError::VertexOutOfRange(u.max(v), self.n));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if seen.contains(&(u.min(v), u.max(v))) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        Ok(())
    }

    fn push_edge(&mut self, u: usize, v: usize) -> usize {
        let e = self.edges.len();
        self.edges.push((u, v));
        self.adjacency[u].push(e);
        self.adjacency[v].push(e);
        e
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Indices of the edges incident to `v`, in increasing order.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// The endpoint of edge `e` that is not `v`.
    pub fn opposite(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().map(move |&e| self.opposite(e, v))
    }

    pub fn find_edge(&self, u: usize, v: usize) -> Option<usize> {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.adjacency[a]
            .iter()
            .copied()
            .find(|&e| self.opposite(e, a) == b)
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }
}

/// Direction of a single edge relative to its stored endpoint order `(a, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    /// `a -> b`
    Forward,
    /// `b -> a`
    Backward,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

/// An orientation assigns a tail to every edge of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Orientation {
    directions: Vec<Direction>,
}

impl Orientation {
    pub fn new(directions: Vec<Direction>) -> Self {
        Orientation { directions }
    }

    /// Every edge points from its first stored endpoint to its second.
    pub fn all_forward(g: &Graph) -> Self {
        Orientation::new(vec![Direction::Forward; g.edge_count()])
    }

    /// Every edge points from its lower-id endpoint to its higher-id endpoint.
    pub fn low_to_high(g: &Graph) -> Self {
        let directions = g
            .edges()
            .iter()
            .map(|&(a, b)| {
                if a < b {
                    Direction::Forward
                } else {
                    Direction::Backward
                }
            })
            .collect();
        Orientation::new(directions)
    }

    /// Builds an orientation from `(tail, head)` arcs, one per edge of `g`, in
    /// any order.
    pub fn from_arcs(g: &Graph, arcs: &[(usize, usize)]) -> Result<Self, GraphError> {
        if arcs.len() != g.edge_count() {
            return Err(GraphError::OrientationShape {
                expected: g.edge_count(),
                found: arcs.len(),
            });
        }
        let mut directions: Vec<Option<Direction>> = vec![None; g.edge_count()];
        for &(tail, head) in arcs {
            if tail >= g.vertex_count() || head >= g.vertex_count() {
                return Err(GraphError::VertexOutOfRange(
                    tail.max(head),
                    g.vertex_count(),
                ));
            }
            let e = g
                .find_edge(tail, head)
                .ok_or(GraphError::NotAnEdge(tail, head))?;
            if directions[e].is_some() {
                return Err(GraphError::DuplicateEdge(tail, head));
            }
            directions[e] = Some(if g.edge(e).0 == tail {
                Direction::Forward
            } else {
                Direction::Backward
            });
        }
        // Counts match and no edge repeats, so every slot is filled.
        Ok(Orientation::new(
            directions.into_iter().map(Option::unwrap).collect(),
        ))
    }

    pub fn len(&self) -> usize {
        self.directions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.directions.is_empty()
    }

    pub fn directions(&self) -> &[Direction] {
        &self.directions
    }

    pub fn direction(&self, e: usize) -> Direction {
        self.directions[e]
    }

    pub fn set(&mut self, e: usize, d: Direction) {
        self.directions[e] = d;
    }

    pub fn tail(&self, g: &Graph, e: usize) -> usize {
        let (a, b) = g.edge(e);
        match self.directions[e] {
            Direction::Forward => a,
            Direction::Backward => b,
        }
    }

    pub fn head(&self, g: &Graph, e: usize) -> usize {
        g.opposite(e, self.tail(g, e))
    }

    /// `(tail, head)` for every edge, in edge order.
    pub fn arcs(&self, g: &Graph) -> Vec<(usize, usize)> {
        (0..g.edge_count())
            .map(|e| (self.tail(g, e), self.head(g, e)))
            .collect()
    }

    /// Out-degree of every vertex.
    pub fn out_degrees(&self, g: &Graph) -> Vec<usize> {
        let mut out = vec![0; g.vertex_count()];
        for e in 0..g.edge_count() {
            out[self.tail(g, e)] += 1;
        }
        out
    }
}

/// Number of edges incident to `v` whose tail is `v`.
pub fn out_degree(g: &Graph, o: &Orientation, v: usize) -> usize {
    g.incident(v)
        .iter()
        .filter(|&&e| o.tail(g, e) == v)
        .count()
}

/// Vertices with out-degree at most `k`, in increasing order.
pub fn light_vertices(g: &Graph, o: &Orientation, k: usize) -> Vec<usize> {
    o.out_degrees(g)
        .into_iter()
        .enumerate()
        .filter_map(|(v, d)| (d <= k).then_some(v))
        .collect()
}

/// Total cost of the 1-light vertices.
pub fn light_cost<T: Scalar>(g: &Graph, o: &Orientation, w: &VertexWeights<T>) -> T {
    scalar::sum(light_vertices(g, o, 1).into_iter().map(|v| w.cost(v)))
}

/// Nonnegative per-vertex costs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VertexWeights<T> {
    costs: Vec<T>,
}

impl<T: Scalar> VertexWeights<T> {
    pub fn new(costs: Vec<T>) -> Result<Self, GraphError> {
        if let Some(v) = costs.iter().position(|c| c.is_negative()) {
            return Err(GraphError::NegativeWeight(v));
        }
        Ok(VertexWeights { costs })
    }

    pub fn uniform(n: usize, cost: T) -> Result<Self, GraphError> {
        Self::new(vec![cost; n])
    }

    pub fn ones(n: usize) -> Self {
        VertexWeights {
            costs: vec![T::one(); n],
        }
    }

    pub fn cost(&self, v: usize) -> T {
        self.costs[v]
    }

    pub fn costs(&self) -> &[T] {
        &self.costs
    }

    pub fn len(&self) -> usize {
        self.costs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.costs.is_empty()
    }

    pub fn check_for(&self, g: &Graph) -> Result<(), GraphError> {
        if self.costs.len() != g.vertex_count() {
            return Err(GraphError::WeightCount {
                expected: g.vertex_count(),
                found: self.costs.len(),
            });
        }
        Ok(())
    }

    /// Multiplies every cost by `factor`.
    pub fn scaled(&self, factor: T) -> Self {
        VertexWeights {
            costs: self.costs.iter().map(|&c| c * factor).collect(),
        }
    }
}
