//! Maximum weight matching by Edmonds' primal-dual blossom method, in the
//! O(V³) formulation of Galil (with Gabow's least-slack edge bookkeeping),
//! following the structure of Joris van Rantwijk's reference implementation.
//!
//! Vertices are `0..n`; non-trivial blossoms get ids `n..2n`. Edge `k` has
//! endpoints `2k` and `2k + 1`. Vertex duals and slacks are stored
//! pre-multiplied by two, and the input weights are doubled as well, so for
//! integer weights every quantity the algorithm divides by two stays
//! integral.

use super::{extend_to_maximal, Matching};
use crate::error::MatchingError;
use crate::graph::Graph;
use crate::scalar::Scalar;

const NONE: usize = usize::MAX;

const FREE: u8 = 0;
const S: u8 = 1;
const T: u8 = 2;
const BREADCRUMB: u8 = 4;

struct Blossoms<W> {
    n: usize,
    edges: Vec<(usize, usize, W)>,
    endpoint: Vec<usize>,
    /// Remote endpoints of the edges incident to each vertex.
    neighbend: Vec<Vec<usize>>,
    /// Remote endpoint of the matched edge, or `NONE`.
    mate: Vec<usize>,
    label: Vec<u8>,
    labelend: Vec<usize>,
    inblossom: Vec<usize>,
    blossomparent: Vec<usize>,
    blossomchilds: Vec<Vec<usize>>,
    blossombase: Vec<usize>,
    blossomendps: Vec<Vec<usize>>,
    bestedge: Vec<usize>,
    blossombestedges: Vec<Option<Vec<usize>>>,
    unusedblossoms: Vec<usize>,
    dualvar: Vec<W>,
    allowedge: Vec<bool>,
    queue: Vec<usize>,
}

enum Delta {
    /// Some vertex dual reached zero: optimum.
    VertexDual,
    /// Least-slack edge between an S-vertex and a free vertex.
    SFree(usize),
    /// Least-slack edge between two S-blossoms.
    SS(usize),
    /// T-blossom whose dual reached zero.
    TBlossom(usize),
}

/// Python-style indexing with negative offsets from the end.
fn at(v: &[usize], i: isize) -> usize {
    if i >= 0 {
        v[i as usize]
    } else {
        v[(v.len() as isize + i) as usize]
    }
}

fn min_by<W: Scalar>(values: impl Iterator<Item = W>) -> Option<W> {
    values.fold(None, |acc, x| match acc {
        Some(a) if a <= x => Some(a),
        _ => Some(x),
    })
}

impl<W: Scalar> Blossoms<W> {
    fn new(n: usize, edges: Vec<(usize, usize, W)>) -> Self {
        let m = edges.len();
        let maxweight = min_by(edges.iter().map(|e| W::zero() - e.2))
            .map_or(W::zero(), |x| W::zero() - x);
        let endpoint = (0..2 * m)
            .map(|p| if p % 2 == 0 { edges[p / 2].0 } else { edges[p / 2].1 })
            .collect();
        let mut neighbend = vec![Vec::new(); n];
        for (k, &(i, j, _)) in edges.iter().enumerate() {
            neighbend[i].push(2 * k + 1);
            neighbend[j].push(2 * k);
        }
        let mut blossombase: Vec<usize> = (0..n).collect();
        blossombase.extend(std::iter::repeat_n(NONE, n));
        let mut dualvar = vec![maxweight; n];
        dualvar.extend(std::iter::repeat_n(W::zero(), n));
        Blossoms {
            n,
            edges,
            endpoint,
            neighbend,
            mate: vec![NONE; n],
            label: vec![FREE; 2 * n],
            labelend: vec![NONE; 2 * n],
            inblossom: (0..n).collect(),
            blossomparent: vec![NONE; 2 * n],
            blossomchilds: vec![Vec::new(); 2 * n],
            blossombase,
            blossomendps: vec![Vec::new(); 2 * n],
            bestedge: vec![NONE; 2 * n],
            blossombestedges: vec![None; 2 * n],
            unusedblossoms: (n..2 * n).collect(),
            dualvar,
            allowedge: vec![false; m],
            queue: Vec::new(),
        }
    }

    /// Twice the slack of edge `k` (not valid inside blossoms).
    fn slack(&self, k: usize) -> W {
        let (i, j, wt) = self.edges[k];
        self.dualvar[i] + self.dualvar[j] - W::two() * wt
    }

    fn leaves(&self, b: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![b];
        while let Some(x) = stack.pop() {
            if x < self.n {
                out.push(x);
            } else {
                stack.extend(self.blossomchilds[x].iter().rev());
            }
        }
        out
    }

    /// Labels the top-level blossom containing `w` with `t`, reached through
    /// the edge with remote endpoint `p`.
    fn assign_label(&mut self, w: usize, t: u8, p: usize) {
        let mut w = w;
        let mut t = t;
        let mut p = p;
        loop {
            let b = self.inblossom[w];
            debug_assert!(self.label[w] == FREE && self.label[b] == FREE);
            self.label[w] = t;
            self.label[b] = t;
            self.labelend[w] = p;
            self.labelend[b] = p;
            self.bestedge[w] = NONE;
            self.bestedge[b] = NONE;
            if t == S {
                let leaves = self.leaves(b);
                self.queue.extend(leaves);
                return;
            }
            // T-blossom: its base is matched; its mate becomes S.
            let base = self.blossombase[b];
            debug_assert!(self.mate[base] != NONE);
            let mbase = self.mate[base];
            w = self.endpoint[mbase];
            t = S;
            p = mbase ^ 1;
        }
    }

    /// Traces back from `v` and `w` to find either a new blossom (returns
    /// its base) or an augmenting path (returns `NONE`).
    fn scan_blossom(&mut self, v: usize, w: usize) -> usize {
        let mut path = Vec::new();
        let mut base = NONE;
        let (mut v, mut w) = (v, w);
        while v != NONE || w != NONE {
            let mut b = self.inblossom[v];
            if self.label[b] & BREADCRUMB != 0 {
                base = self.blossombase[b];
                break;
            }
            debug_assert_eq!(self.label[b], S);
            path.push(b);
            self.label[b] = S | BREADCRUMB;
            if self.labelend[b] == NONE {
                v = NONE;
            } else {
                v = self.endpoint[self.labelend[b]];
                b = self.inblossom[v];
                debug_assert_eq!(self.label[b], T);
                v = self.endpoint[self.labelend[b]];
            }
            if w != NONE {
                std::mem::swap(&mut v, &mut w);
            }
        }
        for b in path {
            self.label[b] = S;
        }
        base
    }

    /// Shrinks the cycle closed by S-S edge `k` into a new S-blossom.
    fn add_blossom(&mut self, base: usize, k: usize) {
        let (mut v, mut w, _) = self.edges[k];
        let bb = self.inblossom[base];
        let mut bv = self.inblossom[v];
        let mut bw = self.inblossom[w];
        let b = self.unusedblossoms.pop().expect("at most n blossoms");
        self.blossombase[b] = base;
        self.blossomparent[b] = NONE;
        self.blossomparent[bb] = b;

        let mut childs = Vec::new();
        let mut endps = Vec::new();
        while bv != bb {
            self.blossomparent[bv] = b;
            childs.push(bv);
            endps.push(self.labelend[bv]);
            v = self.endpoint[self.labelend[bv]];
            bv = self.inblossom[v];
        }
        childs.push(bb);
        childs.reverse();
        endps.reverse();
        endps.push(2 * k);
        while bw != bb {
            self.blossomparent[bw] = b;
            childs.push(bw);
            endps.push(self.labelend[bw] ^ 1);
            w = self.endpoint[self.labelend[bw]];
            bw = self.inblossom[w];
        }
        self.blossomchilds[b] = childs;
        self.blossomendps[b] = endps;

        debug_assert_eq!(self.label[bb], S);
        self.label[b] = S;
        self.labelend[b] = self.labelend[bb];
        self.dualvar[b] = W::zero();

        for v in self.leaves(b) {
            if self.label[self.inblossom[v]] == T {
                // T-vertex inside a new S-blossom becomes S.
                self.queue.push(v);
            }
            self.inblossom[v] = b;
        }

        let mut bestedgeto = vec![NONE; 2 * self.n];
        for bv in self.blossomchilds[b].clone() {
            let lists: Vec<usize> = match self.blossombestedges[bv].take() {
                Some(list) => list,
                None => self
                    .leaves(bv)
                    .into_iter()
                    .flat_map(|v| self.neighbend[v].iter().map(|p| p / 2))
                    .collect(),
            };
            for k in lists {
                let (mut i, mut j, _) = self.edges[k];
                if self.inblossom[j] == b {
                    std::mem::swap(&mut i, &mut j);
                }
                let bj = self.inblossom[j];
                if bj != b
                    && self.label[bj] == S
                    && (bestedgeto[bj] == NONE || self.slack(k) < self.slack(bestedgeto[bj]))
                {
                    bestedgeto[bj] = k;
                }
            }
            self.bestedge[bv] = NONE;
        }
        let list: Vec<usize> = bestedgeto.into_iter().filter(|&k| k != NONE).collect();
        let mut best = NONE;
        for &k in &list {
            if best == NONE || self.slack(k) < self.slack(best) {
                best = k;
            }
        }
        self.bestedge[b] = best;
        self.blossombestedges[b] = Some(list);
    }

    fn expand_blossom(&mut self, b: usize, endstage: bool) {
        for s in self.blossomchilds[b].clone() {
            self.blossomparent[s] = NONE;
            if s < self.n {
                self.inblossom[s] = s;
            } else if endstage && self.dualvar[s] == W::zero() {
                self.expand_blossom(s, endstage);
            } else {
                for v in self.leaves(s) {
                    self.inblossom[v] = s;
                }
            }
        }

        if !endstage && self.label[b] == T {
            // Relabel the sub-blossoms of an expanding T-blossom, starting at
            // the one through which it got its label.
            let entrychild = self.inblossom[self.endpoint[self.labelend[b] ^ 1]];
            let childs = self.blossomchilds[b].clone();
            let endps = self.blossomendps[b].clone();
            let mut j = childs.iter().position(|&c| c == entrychild).unwrap() as isize;
            let (jstep, endptrick): (isize, usize) = if j & 1 != 0 {
                j -= childs.len() as isize;
                (1, 0)
            } else {
                (-1, 1)
            };
            let mut p = self.labelend[b];
            while j != 0 {
                let relabel = self.endpoint[p ^ 1];
                self.label[relabel] = FREE;
                let q = at(&endps, j - endptrick as isize) ^ endptrick ^ 1;
                self.label[self.endpoint[q]] = FREE;
                self.assign_label(relabel, T, p);
                self.allowedge[at(&endps, j - endptrick as isize) / 2] = true;
                j += jstep;
                p = at(&endps, j - endptrick as isize) ^ endptrick;
                self.allowedge[p / 2] = true;
                j += jstep;
            }
            let bv = at(&childs, j);
            let x = self.endpoint[p ^ 1];
            self.label[x] = T;
            self.label[bv] = T;
            self.labelend[x] = p;
            self.labelend[bv] = p;
            self.bestedge[bv] = NONE;
            j += jstep;
            while at(&childs, j) != entrychild {
                let bv = at(&childs, j);
                j += jstep;
                if self.label[bv] == S {
                    continue;
                }
                let reached = self
                    .leaves(bv)
                    .into_iter()
                    .find(|&v| self.label[v] != FREE);
                if let Some(v) = reached {
                    debug_assert_eq!(self.label[v], T);
                    debug_assert_eq!(self.inblossom[v], bv);
                    self.label[v] = FREE;
                    let mb = self.endpoint[self.mate[self.blossombase[bv]]];
                    self.label[mb] = FREE;
                    let end = self.labelend[v];
                    self.assign_label(v, T, end);
                }
            }
        }

        self.label[b] = FREE;
        self.labelend[b] = NONE;
        self.blossomchilds[b].clear();
        self.blossomendps[b].clear();
        self.blossombase[b] = NONE;
        self.blossombestedges[b] = None;
        self.bestedge[b] = NONE;
        self.unusedblossoms.push(b);
    }

    /// Flips the alternating path inside blossom `b` between vertex `v` and
    /// the base, making `v` the new base.
    fn augment_blossom(&mut self, b: usize, v: usize) {
        let mut t = v;
        while self.blossomparent[t] != b {
            t = self.blossomparent[t];
        }
        if t >= self.n {
            self.augment_blossom(t, v);
        }
        let i = self.blossomchilds[b].iter().position(|&c| c == t).unwrap();
        let mut j = i as isize;
        let (jstep, endptrick): (isize, usize) = if i & 1 != 0 {
            j -= self.blossomchilds[b].len() as isize;
            (1, 0)
        } else {
            (-1, 1)
        };
        while j != 0 {
            j += jstep;
            let t = at(&self.blossomchilds[b], j);
            let p = at(&self.blossomendps[b], j - endptrick as isize) ^ endptrick;
            if t >= self.n {
                self.augment_blossom(t, self.endpoint[p]);
            }
            j += jstep;
            let t = at(&self.blossomchilds[b], j);
            if t >= self.n {
                self.augment_blossom(t, self.endpoint[p ^ 1]);
            }
            self.mate[self.endpoint[p]] = p ^ 1;
            self.mate[self.endpoint[p ^ 1]] = p;
        }
        self.blossomchilds[b].rotate_left(i);
        self.blossomendps[b].rotate_left(i);
        self.blossombase[b] = self.blossombase[self.blossomchilds[b][0]];
        debug_assert_eq!(self.blossombase[b], v);
    }

    /// Augments along the path through S-S edge `k` between two exposed
    /// vertices.
    fn augment_matching(&mut self, k: usize) {
        let (v, w, _) = self.edges[k];
        for (mut s, mut p) in [(v, 2 * k + 1), (w, 2 * k)] {
            loop {
                let bs = self.inblossom[s];
                debug_assert_eq!(self.label[bs], S);
                if bs >= self.n {
                    self.augment_blossom(bs, s);
                }
                self.mate[s] = p;
                if self.labelend[bs] == NONE {
                    break;
                }
                let t = self.endpoint[self.labelend[bs]];
                let bt = self.inblossom[t];
                debug_assert_eq!(self.label[bt], T);
                s = self.endpoint[self.labelend[bt]];
                let j = self.endpoint[self.labelend[bt] ^ 1];
                debug_assert_eq!(self.blossombase[bt], t);
                if bt >= self.n {
                    self.augment_blossom(bt, j);
                }
                self.mate[j] = self.labelend[bt];
                p = self.labelend[bt] ^ 1;
            }
        }
    }

    fn scan(&mut self, v: usize) -> bool {
        for idx in 0..self.neighbend[v].len() {
            let p = self.neighbend[v][idx];
            let k = p / 2;
            let w = self.endpoint[p];
            if self.inblossom[v] == self.inblossom[w] {
                continue;
            }
            let mut kslack = W::zero();
            if !self.allowedge[k] {
                kslack = self.slack(k);
                if kslack <= W::zero() {
                    self.allowedge[k] = true;
                }
            }
            let bw = self.inblossom[w];
            if self.allowedge[k] {
                if self.label[bw] == FREE {
                    self.assign_label(w, T, p ^ 1);
                } else if self.label[bw] == S {
                    let base = self.scan_blossom(v, w);
                    if base != NONE {
                        self.add_blossom(base, k);
                    } else {
                        self.augment_matching(k);
                        return true;
                    }
                } else if self.label[w] == FREE {
                    debug_assert_eq!(self.label[bw], T);
                    self.label[w] = T;
                    self.labelend[w] = p ^ 1;
                }
            } else if self.label[bw] == S {
                let b = self.inblossom[v];
                if self.bestedge[b] == NONE || kslack < self.slack(self.bestedge[b]) {
                    self.bestedge[b] = k;
                }
            } else if self.label[w] == FREE
                && (self.bestedge[w] == NONE || kslack < self.slack(self.bestedge[w]))
            {
                self.bestedge[w] = k;
            }
        }
        false
    }

    fn choose_delta(&self) -> (W, Delta) {
        let mut delta = min_by(self.dualvar[..self.n].iter().copied()).unwrap_or(W::zero());
        let mut kind = Delta::VertexDual;
        for v in 0..self.n {
            if self.label[self.inblossom[v]] == FREE && self.bestedge[v] != NONE {
                let d = self.slack(self.bestedge[v]);
                if d < delta {
                    delta = d;
                    kind = Delta::SFree(self.bestedge[v]);
                }
            }
        }
        for b in 0..2 * self.n {
            if self.blossomparent[b] == NONE && self.label[b] == S && self.bestedge[b] != NONE {
                let kslack = self.slack(self.bestedge[b]);
                let d = kslack / W::two();
                debug_assert!(d + d == kslack, "odd slack between S-blossoms");
                if d < delta {
                    delta = d;
                    kind = Delta::SS(self.bestedge[b]);
                }
            }
        }
        for b in self.n..2 * self.n {
            if self.blossombase[b] != NONE
                && self.blossomparent[b] == NONE
                && self.label[b] == T
                && self.dualvar[b] < delta
            {
                delta = self.dualvar[b];
                kind = Delta::TBlossom(b);
            }
        }
        (delta, kind)
    }

    fn apply_delta(&mut self, delta: W) {
        for v in 0..self.n {
            match self.label[self.inblossom[v]] {
                S => self.dualvar[v] = self.dualvar[v] - delta,
                T => self.dualvar[v] = self.dualvar[v] + delta,
                _ => {}
            }
        }
        for b in self.n..2 * self.n {
            if self.blossombase[b] != NONE && self.blossomparent[b] == NONE {
                match self.label[b] {
                    S => self.dualvar[b] = self.dualvar[b] + delta,
                    T => self.dualvar[b] = self.dualvar[b] - delta,
                    _ => {}
                }
            }
        }
    }

    /// Runs stages until no augmenting path improves the weight.
    fn solve(&mut self) {
        for _ in 0..self.n {
            self.label.fill(FREE);
            self.bestedge.fill(NONE);
            for b in self.n..2 * self.n {
                self.blossombestedges[b] = None;
            }
            self.allowedge.fill(false);
            self.queue.clear();
            for v in 0..self.n {
                if self.mate[v] == NONE && self.label[self.inblossom[v]] == FREE {
                    self.assign_label(v, S, NONE);
                }
            }

            let mut augmented = false;
            loop {
                while let Some(v) = self.queue.pop() {
                    debug_assert_eq!(self.label[self.inblossom[v]], S);
                    if self.scan(v) {
                        augmented = true;
                        break;
                    }
                }
                if augmented {
                    break;
                }
                let (delta, kind) = self.choose_delta();
                self.apply_delta(delta);
                match kind {
                    Delta::VertexDual => break,
                    Delta::SFree(k) => {
                        self.allowedge[k] = true;
                        let (mut i, j, _) = self.edges[k];
                        if self.label[self.inblossom[i]] == FREE {
                            i = j;
                        }
                        debug_assert_eq!(self.label[self.inblossom[i]], S);
                        self.queue.push(i);
                    }
                    Delta::SS(k) => {
                        self.allowedge[k] = true;
                        let (i, _, _) = self.edges[k];
                        debug_assert_eq!(self.label[self.inblossom[i]], S);
                        self.queue.push(i);
                    }
                    Delta::TBlossom(b) => self.expand_blossom(b, false),
                }
            }
            if !augmented {
                break;
            }
            for b in self.n..2 * self.n {
                if self.blossomparent[b] == NONE
                    && self.blossombase[b] != NONE
                    && self.label[b] == S
                    && self.dualvar[b] == W::zero()
                {
                    self.expand_blossom(b, true);
                }
            }
        }
        #[cfg(debug_assertions)]
        self.verify_optimum();
    }

    /// Complementary slackness check of the final primal/dual pair.
    #[cfg(debug_assertions)]
    fn verify_optimum(&self) {
        for (k, &(i, j, wt)) in self.edges.iter().enumerate() {
            let mut s = self.dualvar[i] + self.dualvar[j] - W::two() * wt;
            let chain = |mut x: usize| {
                let mut c = vec![x];
                while self.blossomparent[x] != NONE {
                    x = self.blossomparent[x];
                    c.push(x);
                }
                c.reverse();
                c
            };
            for (bi, bj) in chain(i).into_iter().zip(chain(j)) {
                if bi != bj {
                    break;
                }
                s = s + W::two() * self.dualvar[bi];
            }
            assert!(s >= W::zero(), "negative slack on edge {k}");
            if self.mate[i] != NONE && self.mate[i] / 2 == k {
                assert!(self.mate[j] / 2 == k);
                assert!(s == W::zero(), "matched edge {k} has slack");
            }
        }
        for v in 0..self.n {
            assert!(self.mate[v] != NONE || self.dualvar[v] == W::zero());
        }
        for b in self.n..2 * self.n {
            if self.blossombase[b] != NONE && self.dualvar[b] > W::zero() {
                assert!(self.blossomendps[b].len() % 2 == 1);
                for &p in self.blossomendps[b].iter().skip(1).step_by(2) {
                    assert!(self.mate[self.endpoint[p]] == p ^ 1);
                    assert!(self.mate[self.endpoint[p ^ 1]] == p);
                }
            }
        }
    }
}

/// A maximum weight matching of `g` for nonnegative `edge_weights`.
///
/// Among matchings of maximum weight the result is maximal: after the
/// primal-dual phase, remaining addable edges (necessarily of weight zero)
/// are added greedily in edge order.
pub fn max_weight_matching<W: Scalar>(
    g: &Graph,
    edge_weights: &[W],
) -> Result<Matching, MatchingError> {
    if edge_weights.len() != g.edge_count() {
        return Err(MatchingError::WeightCount {
            expected: g.edge_count(),
            found: edge_weights.len(),
        });
    }
    if let Some(e) = edge_weights.iter().position(|w| w.is_negative()) {
        return Err(MatchingError::NegativeWeight(e));
    }
    let edges = g
        .edges()
        .iter()
        .zip(edge_weights)
        .map(|(&(u, v), &w)| (u, v, w + w))
        .collect();
    let mut engine = Blossoms::new(g.vertex_count(), edges);
    if g.edge_count() > 0 {
        engine.solve();
    }
    let mate: Vec<Option<usize>> = engine
        .mate
        .iter()
        .map(|&p| (p != NONE).then(|| engine.endpoint[p]))
        .collect();
    let m = Matching::from_mates(g, &mate)?;
    Ok(extend_to_maximal(g, &m))
}
