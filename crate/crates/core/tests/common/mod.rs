#![allow(dead_code)]

use orient_light::generate::InstanceRng;
use orient_light::matching::Matching;
use orient_light::reduction::{eliminate_degree_one, strip_isolated};
use orient_light::Graph;

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, edges).unwrap()
}

/// A random graph with minimum degree at least 2 and no isolated vertices.
pub fn random_core(rng: &mut InstanceRng, max_n: usize, p: f64) -> Graph {
    loop {
        let n = 3 + rng.below((max_n - 2) as u64) as usize;
        let g = rng.gnp(n, p);
        let core = strip_isolated(&eliminate_degree_one(&g).graph).graph;
        if core.vertex_count() > 0 {
            return core;
        }
    }
}

/// A maximal matching built greedily over a random edge order.
pub fn random_maximal_matching(rng: &mut InstanceRng, g: &Graph) -> Matching {
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    for i in (1..order.len()).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        order.swap(i, j);
    }
    let mut m = Matching::empty(g);
    for e in order {
        let (u, v) = g.edge(e);
        if m.is_exposed(u) && m.is_exposed(v) {
            m.insert(g, e).unwrap();
        }
    }
    m
}

/// Looks for an augmenting path by depth-first search over simple
/// alternating paths. Exponential; for small graphs only.
pub fn has_augmenting_path(g: &Graph, mate: &[Option<usize>]) -> bool {
    fn extend(g: &Graph, mate: &[Option<usize>], v: usize, on_path: &mut Vec<bool>) -> bool {
        // v is reached by an unmatched edge; continue via its matched edge
        for w in g.neighbors(v) {
            if on_path[w] || mate[v] == Some(w) {
                continue;
            }
            match mate[w] {
                None => return true,
                Some(x) if !on_path[x] => {
                    on_path[w] = true;
                    on_path[x] = true;
                    if extend(g, mate, x, on_path) {
                        return true;
                    }
                    on_path[w] = false;
                    on_path[x] = false;
                }
                _ => {}
            }
        }
        false
    }
    (0..g.vertex_count()).any(|root| {
        if mate[root].is_some() {
            return false;
        }
        let mut on_path = vec![false; g.vertex_count()];
        on_path[root] = true;
        extend(g, mate, root, &mut on_path)
    })
}
