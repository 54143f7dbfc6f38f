//! Maximum cardinality matching by Edmonds' blossom algorithm.
//!
//! One breadth-first alternating-tree search per exposed vertex. Blossoms are
//! shrunk implicitly: a union-find forest maps every vertex to the base of the
//! outermost blossom containing it, and `link` records, for each odd vertex
//! (and each odd vertex turned even by a contraction), the even vertex it was
//! reached from. That is enough to walk an augmenting path through any nest
//! of blossoms. Total running time is O(V·(V + E)·α).

use std::collections::VecDeque;

use super::Matching;
use crate::graph::Graph;

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Label {
    Free,
    Even,
    Odd,
}

struct Search {
    label: Vec<Label>,
    link: Vec<usize>,
    base: Vec<usize>,
    depth: Vec<usize>,
    queue: VecDeque<usize>,
}

impl Search {
    fn new(n: usize) -> Self {
        Search {
            label: vec![Label::Free; n],
            link: vec![NONE; n],
            base: (0..n).collect(),
            depth: vec![0; n],
            queue: VecDeque::new(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.base[v] != v {
            self.base[v] = self.base[self.base[v]];
            v = self.base[v];
        }
        v
    }

    /// Base of the smallest blossom containing both even vertices `u`, `v`.
    fn lca(&mut self, u: usize, v: usize, mate: &[usize]) -> usize {
        let (mut u, mut v) = (self.find(u), self.find(v));
        while u != v {
            if self.depth[u] < self.depth[v] {
                std::mem::swap(&mut u, &mut v);
            }
            u = self.find(self.link[mate[u]]);
        }
        u
    }

    /// Contracts the tree path from `u` up to the blossom base `b`, with
    /// `v` the even vertex across the bridge edge.
    fn shrink(&mut self, mut u: usize, mut v: usize, b: usize, mate: &[usize]) {
        while self.find(u) != b {
            self.link[u] = v;
            v = mate[u];
            if self.label[v] == Label::Odd {
                self.label[v] = Label::Even;
                self.queue.push_back(v);
            }
            self.base[u] = b;
            self.base[v] = b;
            u = self.link[v];
        }
    }

    /// Grows an alternating tree from the exposed vertex `root` and augments
    /// along the first augmenting path found. Returns whether it augmented.
    fn augment_from(&mut self, g: &Graph, root: usize, mate: &mut [usize]) -> bool {
        self.label.fill(Label::Free);
        self.link.fill(NONE);
        for (v, b) in self.base.iter_mut().enumerate() {
            *b = v;
        }
        self.queue.clear();
        self.label[root] = Label::Even;
        self.depth[root] = 0;
        self.queue.push_back(root);

        while let Some(u) = self.queue.pop_front() {
            for &e in g.incident(u) {
                let v = g.opposite(e, u);
                match self.label[v] {
                    Label::Free => {
                        self.label[v] = Label::Odd;
                        self.link[v] = u;
                        self.depth[v] = self.depth[u] + 1;
                        if mate[v] == NONE {
                            self.flip_path(v, mate);
                            return true;
                        }
                        let w = mate[v];
                        self.label[w] = Label::Even;
                        self.depth[w] = self.depth[u] + 2;
                        self.queue.push_back(w);
                    }
                    Label::Even => {
                        if self.find(u) != self.find(v) {
                            let b = self.lca(u, v, mate);
                            self.shrink(u, v, b, mate);
                            self.shrink(v, u, b, mate);
                        }
                    }
                    Label::Odd => {}
                }
            }
        }
        false
    }

    /// Flips the augmenting path ending at the exposed odd vertex `end`.
    fn flip_path(&self, end: usize, mate: &mut [usize]) {
        let mut x = end;
        let mut y = self.link[end];
        while y != NONE {
            let next = mate[y];
            mate[x] = y;
            mate[y] = x;
            if next == NONE {
                break;
            }
            x = next;
            y = self.link[x];
        }
    }
}

/// A maximum cardinality matching of `g`.
///
/// Deterministic: a greedy pass in edge order seeds the matching, then roots
/// are searched in vertex order and neighbours scanned in incidence order.
pub fn max_cardinality_matching(g: &Graph) -> Matching {
    let n = g.vertex_count();
    let mut mate = vec![NONE; n];
    for &(u, v) in g.edges() {
        if mate[u] == NONE && mate[v] == NONE {
            mate[u] = v;
            mate[v] = u;
        }
    }
    let mut search = Search::new(n);
    for root in 0..n {
        if mate[root] == NONE && g.degree(root) > 0 {
            search.augment_from(g, root, &mut mate);
        }
    }
    let mate: Vec<Option<usize>> = mate
        .into_iter()
        .map(|x| (x != NONE).then_some(x))
        .collect();
    Matching::from_mates(g, &mate).expect("search produces a valid matching")
}
