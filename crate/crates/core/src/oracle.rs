//! Exhaustive baselines for testing. Deliberately naive: they share no code
//! with the reduction or the matching engines.

use crate::error::OracleError;
use crate::graph::{Direction, Graph, Orientation, VertexWeights};
use crate::matching::Matching;
use crate::scalar::Scalar;

/// Caps on the instance sizes the exhaustive searches accept.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    /// Orientation search enumerates `2^max_edges` orientations at most.
    pub max_edges: usize,
    pub max_matching_edges: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_edges: 20,
            max_matching_edges: 18,
        }
    }
}

impl OracleBudget {
    pub fn new(max_edges: usize, max_matching_edges: usize) -> Result<Self, OracleError> {
        if max_edges == 0 || max_matching_edges == 0 {
            return Err(OracleError::InvalidBudget);
        }
        Ok(OracleBudget {
            max_edges,
            max_matching_edges,
        })
    }

    /// Parses `"E"` or `"E,M"`; a missing `M` keeps the default.
    pub fn parse(text: &str) -> Result<Self, OracleError> {
        let mut parts = text.split(',').map(str::trim);
        let num = |s: Option<&str>| -> Result<Option<usize>, OracleError> {
            s.map(|s| s.parse().map_err(|_| OracleError::InvalidBudget))
                .transpose()
        };
        let default = OracleBudget::default();
        let edges = num(parts.next())?.ok_or(OracleError::InvalidBudget)?;
        let matching = num(parts.next())?.unwrap_or(default.max_matching_edges);
        if parts.next().is_some() {
            return Err(OracleError::InvalidBudget);
        }
        OracleBudget::new(edges, matching)
    }
}

/// Exact optimum of Min-k-Light by trying all `2^m` orientations.
///
/// Orientation `mask` has edge `e` reversed iff bit `e` is set; masks are
/// tried in increasing order and the first optimum is returned. Without
/// weights every vertex costs one.
pub fn brute_force_min_light<W: Scalar>(
    g: &Graph,
    k: usize,
    weights: Option<&VertexWeights<W>>,
    budget: OracleBudget,
) -> Result<(W, Orientation), OracleError> {
    let m = g.edge_count();
    if m > budget.max_edges || m >= 64 {
        return Err(OracleError::BudgetExceeded {
            edges: m,
            budget: budget.max_edges,
        });
    }
    if let Some(w) = weights {
        w.check_for(g)?;
    }
    let n = g.vertex_count();
    let cost: Vec<W> = (0..n)
        .map(|v| weights.map_or(W::one(), |w| w.cost(v)))
        .collect();
    let ends: Vec<(usize, usize)> = g.edges().to_vec();

    // mask 0: every edge points from its first endpoint to its second
    let mut out = vec![0usize; n];
    for &(a, _) in &ends {
        out[a] += 1;
    }
    let mut current = W::zero();
    for v in 0..n {
        if out[v] <= k {
            current = current + cost[v];
        }
    }

    let mut best = current;
    let mut best_mask = 0u64;
    let total: u64 = 1 << m;
    let mut mask = 0u64;
    while best != W::zero() {
        mask += 1;
        if mask == total {
            break;
        }
        // Flipping bits 0..=t where t is the lowest set bit of `mask`.
        let flips = mask.trailing_zeros() as usize;
        for e in 0..=flips {
            let (a, b) = ends[e];
            let (from, to) = if (mask >> e) & 1 == 1 { (a, b) } else { (b, a) };
            // edge e moves from `from -> to` to `to -> from`
            let before_from = out[from] <= k;
            let before_to = out[to] <= k;
            out[from] -= 1;
            out[to] += 1;
            if !before_from && out[from] <= k {
                current = current + cost[from];
            }
            if before_to && out[to] > k {
                current = current - cost[to];
            }
        }
        if current < best {
            best = current;
            best_mask = mask;
        }
    }

    let directions = (0..m)
        .map(|e| {
            if (best_mask >> e) & 1 == 1 {
                Direction::Backward
            } else {
                Direction::Forward
            }
        })
        .collect();
    Ok((best, Orientation::new(directions)))
}

/// Exact maximum (weight, or cardinality without weights) matching by
/// enumerating every set of pairwise disjoint edges.
pub fn brute_force_max_matching<W: Scalar>(
    g: &Graph,
    edge_weights: Option<&[W]>,
    budget: OracleBudget,
) -> Result<(W, Matching), OracleError> {
    let m = g.edge_count();
    if m > budget.max_matching_edges {
        return Err(OracleError::BudgetExceeded {
            edges: m,
            budget: budget.max_matching_edges,
        });
    }
    let weight: Vec<W> = (0..m)
        .map(|e| edge_weights.map_or(W::one(), |w| w[e]))
        .collect();

    struct Enumeration<'a, W> {
        ends: &'a [(usize, usize)],
        weight: &'a [W],
        used: Vec<bool>,
        chosen: Vec<usize>,
        best: W,
        best_set: Vec<usize>,
    }

    impl<W: Scalar> Enumeration<'_, W> {
        fn visit(&mut self, from: usize, value: W) {
            if value > self.best {
                self.best = value;
                self.best_set = self.chosen.clone();
            }
            for e in from..self.ends.len() {
                let (a, b) = self.ends[e];
                if self.used[a] || self.used[b] {
                    continue;
                }
                self.used[a] = true;
                self.used[b] = true;
                self.chosen.push(e);
                self.visit(e + 1, value + self.weight[e]);
                self.chosen.pop();
                self.used[a] = false;
                self.used[b] = false;
            }
        }
    }

    let mut search = Enumeration {
        ends: g.edges(),
        weight: &weight,
        used: vec![false; g.vertex_count()],
        chosen: Vec::new(),
        best: W::zero(),
        best_set: Vec::new(),
    };
    search.visit(0, W::zero());
    let best = search.best;
    let matching = Matching::from_edges(g, search.best_set)
        .expect("enumeration only picks disjoint edges");
    Ok((best, matching))
}
