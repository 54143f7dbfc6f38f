//! Matchings in general graphs.

mod cardinality;
mod weighted;

pub use cardinality::max_cardinality_matching;
pub use weighted::max_weight_matching;

use serde::Serialize;

use crate::error::MatchingError;
use crate::graph::Graph;
use crate::scalar::{self, Scalar};

/// A set of pairwise vertex-disjoint edges, stored both as sorted edge ids
/// and as a per-vertex mate table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Matching {
    edges: Vec<usize>,
    mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn empty(g: &Graph) -> Self {
        Matching {
            edges: Vec::new(),
            mate: vec![None; g.vertex_count()],
        }
    }

    /// Builds a matching from edge ids, checking disjointness.
    pub fn from_edges<I>(g: &Graph, edges: I) -> Result<Self, MatchingError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut m = Matching::empty(g);
        for e in edges {
            m.insert(g, e)?;
        }
        Ok(m)
    }

    /// Builds a matching from a mate table.
    pub fn from_mates(g: &Graph, mate: &[Option<usize>]) -> Result<Self, MatchingError> {
        let mut m = Matching::empty(g);
        for (u, &partner) in mate.iter().enumerate() {
            let Some(v) = partner else { continue };
            if mate.get(v).copied().flatten() != Some(u) {
                return Err(MatchingError::Invalid(format!(
                    "mate table is not symmetric at vertex {u}"
                )));
            }
            if u < v {
                let e = g.find_edge(u, v).ok_or_else(|| {
                    MatchingError::Invalid(format!("{{{u}, {v}}} is not an edge"))
                })?;
                m.insert(g, e)?;
            }
        }
        Ok(m)
    }

    pub fn insert(&mut self, g: &Graph, e: usize) -> Result<(), MatchingError> {
        if e >= g.edge_count() {
            return Err(MatchingError::Invalid(format!("unknown edge {e}")));
        }
        let (u, v) = g.edge(e);
        if let Some(x) = [u, v].into_iter().find(|&x| self.mate[x].is_some()) {
            return Err(MatchingError::Invalid(format!(
                "vertex {x} is covered twice (edge {e})"
            )));
        }
        self.mate[u] = Some(v);
        self.mate[v] = Some(u);
        let pos = self.edges.binary_search(&e).unwrap_err();
        self.edges.insert(pos, e);
        Ok(())
    }

    pub fn remove(&mut self, g: &Graph, e: usize) -> bool {
        match self.edges.binary_search(&e) {
            Ok(pos) => {
                self.edges.remove(pos);
                let (u, v) = g.edge(e);
                self.mate[u] = None;
                self.mate[v] = None;
                true
            }
            Err(_) => false,
        }
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    pub fn mates(&self) -> &[Option<usize>] {
        &self.mate
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn is_exposed(&self, v: usize) -> bool {
        self.mate[v].is_none()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn weight<T: Scalar>(&self, edge_weights: &[T]) -> T {
        scalar::sum(self.edges.iter().map(|&e| edge_weights[e]))
    }

    /// First edge of `g` with both endpoints exposed, if any.
    pub fn first_addable_edge(&self, g: &Graph) -> Option<usize> {
        (0..g.edge_count()).find(|&e| {
            let (u, v) = g.edge(e);
            self.is_exposed(u) && self.is_exposed(v)
        })
    }

    pub fn is_maximal(&self, g: &Graph) -> bool {
        self.first_addable_edge(g).is_none()
    }
}

/// Outcome of [`is_valid_matching`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchingVerdict {
    Valid,
    UnknownEdge(usize),
    RepeatedEdge(usize),
    SharedVertex { vertex: usize, edges: (usize, usize) },
}

impl MatchingVerdict {
    pub fn is_valid(&self) -> bool {
        *self == MatchingVerdict::Valid
    }
}

/// Checks that `edges` is a set of existing, pairwise disjoint edges of `g`.
pub fn is_valid_matching(g: &Graph, edges: &[usize]) -> MatchingVerdict {
    let mut cover: Vec<Option<usize>> = vec![None; g.vertex_count()];
    let mut seen = std::collections::HashSet::new();
    for &e in edges {
        if e >= g.edge_count() {
            return MatchingVerdict::UnknownEdge(e);
        }
        if !seen.insert(e) {
            return MatchingVerdict::RepeatedEdge(e);
        }
        let (u, v) = g.edge(e);
        for x in [u, v] {
            if let Some(f) = cover[x] {
                return MatchingVerdict::SharedVertex {
                    vertex: x,
                    edges: (f, e),
                };
            }
            cover[x] = Some(e);
        }
    }
    MatchingVerdict::Valid
}

/// Greedily adds edges in index order until the matching is maximal.
pub fn extend_to_maximal(g: &Graph, m: &Matching) -> Matching {
    let mut out = m.clone();
    for e in 0..g.edge_count() {
        let (u, v) = g.edge(e);
        if out.is_exposed(u) && out.is_exposed(v) {
            out.insert(g, e).expect("both endpoints exposed");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::complete;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn validity_verdicts() {
        let k3 = complete(3); // edges 0:{0,1} 1:{0,2} 2:{1,2}
        assert!(is_valid_matching(&k3, &[0]).is_valid());
        assert_eq!(
            is_valid_matching(&k3, &[0, 2]),
            MatchingVerdict::SharedVertex {
                vertex: 1,
                edges: (0, 2)
            }
        );
        assert_eq!(is_valid_matching(&k3, &[3]), MatchingVerdict::UnknownEdge(3));
        assert_eq!(is_valid_matching(&k3, &[1, 1]), MatchingVerdict::RepeatedEdge(1));
    }

    #[test]
    fn greedy_extension() {
        let c4 = cycle(4);
        let m = extend_to_maximal(&c4, &Matching::empty(&c4));
        assert_eq!(m.edges(), &[0, 2]);
        assert_eq!(extend_to_maximal(&c4, &m), m);

        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let m = extend_to_maximal(&star, &Matching::empty(&star));
        assert_eq!(m.len(), 1);
        assert!(m.is_maximal(&star));
    }

    #[test]
    fn insert_rejects_conflicts() {
        let k3 = complete(3);
        let mut m = Matching::from_edges(&k3, [0]).unwrap();
        assert!(m.insert(&k3, 2).is_err());
        assert!(m.insert(&k3, 7).is_err());
        assert!(m.remove(&k3, 0));
        assert!(!m.remove(&k3, 0));
        assert!(m.is_empty());
    }

    #[test]
    fn from_mates_checks_symmetry() {
        let k3 = complete(3);
        assert!(Matching::from_mates(&k3, &[Some(1), Some(0), None]).is_ok());
        assert!(Matching::from_mates(&k3, &[Some(1), None, None]).is_err());
    }
}
