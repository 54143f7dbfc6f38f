//! Seeded random instances.
//!
//! The generator is PCG-XSL-RR 128/64 (`rand_pcg::Pcg64`) started with
//! state `seed` and stream [`STREAM`]. Pairs `{i, j}`, `i < j`, are visited
//! in lexicographic order; each draws one `u64` `x` and becomes an edge iff
//! `(x >> 11) · 2⁻⁵³ < p`. Weights, when requested, are then drawn for
//! vertices in order as `x mod (max + 1)`. The output therefore depends only
//! on `(n, p, seed, max)`.

use rand::RngCore;
use rand_pcg::Pcg64;

use crate::graph::{Graph, VertexWeights};

pub const STREAM: u128 = 0xa02b_dbf7_bb3c_0a7a_c28f_a16a_64ab_f96d;

pub struct InstanceRng(Pcg64);

impl InstanceRng {
    pub fn new(seed: u64) -> Self {
        InstanceRng(Pcg64::new(seed as u128, STREAM))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `[0, 1)` with 53 bits.
    pub fn next_unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// `x mod bound`; the small modulo bias is accepted for reproducibility.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// `G(n, p)`: every pair is an edge independently with probability `p`.
    pub fn gnp(&mut self, n: usize, p: f64) -> Graph {
        let mut g = Graph::new(n);
        for i in 0..n {
            for j in i + 1..n {
                if self.next_unit() < p {
                    g.add_edge(i, j).expect("pairs are visited once");
                }
            }
        }
        g
    }

    /// Integer costs uniform in `0..=max`.
    pub fn weights(&mut self, n: usize, max: u64) -> VertexWeights<i64> {
        let costs = (0..n).map(|_| self.below(max + 1) as i64).collect();
        VertexWeights::new(costs).expect("nonnegative")
    }
}

/// Edge probability giving about `m` expected edges on `n` vertices.
pub fn density_for(n: usize, m: usize) -> f64 {
    let pairs = n * n.saturating_sub(1) / 2;
    if pairs == 0 {
        0.0
    } else {
        (m as f64 / pairs as f64).min(1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extremes() {
        assert_eq!(InstanceRng::new(1).gnp(5, 0.0).edge_count(), 0);
        assert_eq!(InstanceRng::new(1).gnp(4, 1.0).edge_count(), 6);
    }

    #[test]
    fn deterministic() {
        let a = InstanceRng::new(7).gnp(6, 0.4);
        let b = InstanceRng::new(7).gnp(6, 0.4);
        assert_eq!(a, b);
        let mut r1 = InstanceRng::new(3);
        let mut r2 = InstanceRng::new(3);
        assert_eq!(r1.weights(10, 10), r2.weights(10, 10));
    }

    #[test]
    fn weights_in_range() {
        let w = InstanceRng::new(11).weights(200, 10);
        assert!(w.costs().iter().all(|&c| (0..=10).contains(&c)));
        assert!(w.costs().contains(&0) && w.costs().contains(&10));
    }

    #[test]
    fn density() {
        assert_eq!(density_for(1, 5), 0.0);
        assert!((density_for(100, 300) - 300.0 / 4950.0).abs() < 1e-12);
        assert_eq!(density_for(4, 100), 1.0);
    }
}
