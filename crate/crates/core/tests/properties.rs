mod common;

use common::*;
use orient_light::generate::InstanceRng;
use orient_light::graph::{light_cost, light_vertices, out_degree};
use orient_light::matching::{extend_to_maximal, max_cardinality_matching, max_weight_matching};
use orient_light::oracle::{brute_force_max_matching, brute_force_min_light, OracleBudget};
use orient_light::reduction::{build_gprime, eliminate_degree_one, quotient_q};
use orient_light::solver::{matching_from_orientation, recover_orientation};
use orient_light::{
    solve_min_light, solve_min_light_weighted, Direction, Graph, Matching, Orientation,
    VertexWeights,
};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn arb_oriented(max_n: usize) -> impl Strategy<Value = (Graph, Orientation)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let m = g.edge_count();
        prop::collection::vec(any::<bool>(), m).prop_map(move |flips| {
            let dirs = flips
                .into_iter()
                .map(|f| if f { Direction::Backward } else { Direction::Forward })
                .collect();
            (g.clone(), Orientation::new(dirs))
        })
    })
}

fn big_budget() -> OracleBudget {
    OracleBudget::new(40, 64).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn out_degrees_sum_to_edge_count((g, o) in arb_oriented(10)) {
        let total: usize = (0..g.vertex_count()).map(|v| out_degree(&g, &o, v)).sum();
        prop_assert_eq!(total, g.edge_count());
    }

    #[test]
    fn light_sets_grow_with_threshold((g, o) in arb_oriented(10), k1 in 0usize..4, dk in 0usize..4) {
        let small = light_vertices(&g, &o, k1);
        let large = light_vertices(&g, &o, k1 + dk);
        prop_assert!(small.iter().all(|v| large.contains(v)));
    }

    #[test]
    fn unit_costs_count_light_vertices((g, o) in arb_oriented(10)) {
        let ones = VertexWeights::<i64>::ones(g.vertex_count());
        prop_assert_eq!(light_cost(&g, &o, &ones) as usize, light_vertices(&g, &o, 1).len());
    }

    #[test]
    fn degree_one_padding_is_idempotent(g in arb_graph(10)) {
        let once = eliminate_degree_one(&g);
        let twice = eliminate_degree_one(&once.graph);
        prop_assert!(twice.added_cycles.is_empty());
        prop_assert_eq!(&twice.graph, &once.graph);
        let n1 = (0..g.vertex_count()).filter(|&v| g.degree(v) == 1).count();
        prop_assert_eq!(once.graph.vertex_count(), g.vertex_count() + 3 * n1);
        prop_assert_eq!(once.graph.edge_count(), g.edge_count() + 4 * n1);
        for v in 0..once.graph.vertex_count() {
            prop_assert!(once.graph.degree(v) != 1);
        }
    }

    #[test]
    fn extension_is_maximal(g in arb_graph(10), seed in any::<u64>()) {
        let mut rng = InstanceRng::new(seed);
        let partial = random_maximal_matching(&mut rng, &g);
        let mut trimmed = Matching::empty(&g);
        for &e in partial.edges().iter().step_by(2) {
            trimmed.insert(&g, e).unwrap();
        }
        let ext = extend_to_maximal(&g, &trimmed);
        prop_assert!(ext.is_maximal(&g));
        prop_assert!(trimmed.edges().iter().all(|&e| ext.contains(e)));
    }

    #[test]
    fn cardinality_engine_leaves_no_augmenting_path(g in arb_graph(10)) {
        let m = max_cardinality_matching(&g);
        prop_assert!(!has_augmenting_path(&g, m.mates()));
    }

    #[test]
    fn weight_engine_matches_enumeration(g in arb_graph(8), seed in any::<u64>()) {
        let mut rng = InstanceRng::new(seed);
        let w: Vec<i64> = (0..g.edge_count()).map(|_| rng.below(11) as i64).collect();
        let m = max_weight_matching(&g, &w).unwrap();
        let (best, _) = brute_force_max_matching(&g, Some(&w[..]), big_budget()).unwrap();
        prop_assert_eq!(m.weight(&w), best);
        prop_assert!(m.is_maximal(&g));
    }

    #[test]
    fn constructed_matching_meets_local_identity(seed in any::<u64>()) {
        let mut rng = InstanceRng::new(seed);
        let core = random_core(&mut rng, 8, 0.5);
        let r = build_gprime::<i64>(&core, None).unwrap();
        let dirs = (0..core.edge_count())
            .map(|_| if rng.below(2) == 0 { Direction::Forward } else { Direction::Backward })
            .collect();
        let o = Orientation::new(dirs);
        let m = matching_from_orientation(&r, &o);
        let out = o.out_degrees(&core);
        for v in 0..core.vertex_count() {
            let k = r.vertex_gadgets[v].connecting_edges.iter().filter(|&&e| m.contains(e)).count();
            prop_assert_eq!(k, out[v]);
        }
        let light = light_vertices(&core, &o, 1).len();
        prop_assert_eq!(m.len(), 2 * core.edge_count() - light);
    }

    #[test]
    fn recovered_orientation_respects_bound(seed in any::<u64>()) {
        let mut rng = InstanceRng::new(seed);
        let core = random_core(&mut rng, 8, 0.5);
        let r = build_gprime::<i64>(&core, None).unwrap();
        let m = max_cardinality_matching(&r.gprime);
        let o = recover_orientation(&r, &m).unwrap();
        let out = o.out_degrees(&core);
        for v in 0..core.vertex_count() {
            let k = r.vertex_gadgets[v].connecting_edges.iter().filter(|&&e| m.contains(e)).count();
            prop_assert!(k <= out[v]);
        }
        prop_assert!(light_vertices(&core, &o, 1).len() <= 2 * core.edge_count() - m.len());
    }

    #[test]
    fn weighted_gadget_edges_carry_owner_cost(seed in any::<u64>()) {
        let mut rng = InstanceRng::new(seed);
        let core = random_core(&mut rng, 9, 0.4);
        let w = rng.weights(core.vertex_count(), 10);
        let r = build_gprime(&core, Some(&w)).unwrap();
        let mut total = 0i64;
        for (v, gadget) in r.vertex_gadgets.iter().enumerate() {
            for e in gadget.owned_edges() {
                prop_assert_eq!(r.edge_weights[e], w.cost(v));
            }
            total += r.weight_of(gadget.connecting_edges.iter().copied());
        }
        // each vertex's connecting edges weigh d(v)·c_v in total
        prop_assert_eq!(total, quotient_q(&core, &w));
    }
}

#[test]
fn unit_weights_agree_with_unweighted_mode() {
    let mut rng = InstanceRng::new(2024);
    for _ in 0..150 {
        let n = 3 + rng.below(8) as usize;
        let g = rng.gnp(n, 0.4);
        let a = solve_min_light(&g).unwrap();
        let b = solve_min_light_weighted(&g, &VertexWeights::ones(n)).unwrap();
        assert_eq!(a.objective, b.objective);
    }
}

#[test]
fn scaling_costs_scales_the_optimum() {
    let mut rng = InstanceRng::new(77);
    for _ in 0..100 {
        let n = 3 + rng.below(6) as usize;
        let g = rng.gnp(n, 0.45);
        let w = rng.weights(n, 10);
        let lambda = 1 + rng.below(5) as i64;
        let scaled = w.scaled(lambda);
        let base = solve_min_light_weighted(&g, &w).unwrap();
        let big = solve_min_light_weighted(&g, &scaled).unwrap();
        assert_eq!(big.objective, lambda * base.objective);

        // optimal orientations coincide: check every orientation on tiny graphs
        if g.edge_count() <= 10 {
            for mask in 0u32..1 << g.edge_count() {
                let dirs = (0..g.edge_count())
                    .map(|e| if mask >> e & 1 == 1 { Direction::Backward } else { Direction::Forward })
                    .collect();
                let o = Orientation::new(dirs);
                let opt_small = light_cost(&g, &o, &w) == base.objective;
                let opt_big = light_cost(&g, &o, &scaled) == big.objective;
                assert_eq!(opt_small, opt_big);
            }
        }
    }
}

#[test]
fn adding_an_edge_moves_optimum_by_at_most_two() {
    let mut rng = InstanceRng::new(5);
    let budget = OracleBudget::new(26, 18).unwrap();
    for _ in 0..100 {
        let n = 3 + rng.below(6) as usize;
        let g = rng.gnp(n, 0.4);
        let missing: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| g.find_edge(u, v).is_none())
            .collect();
        if missing.is_empty() {
            continue;
        }
        let (u, v) = missing[rng.below(missing.len() as u64) as usize];
        let mut h = g.clone();
        h.add_edge(u, v).unwrap();
        let before = solve_min_light(&g).unwrap().objective;
        let after = solve_min_light(&h).unwrap().objective;
        assert!(before - 2 <= after && after <= before + 2);
        assert_eq!(after, brute_force_min_light::<i64>(&h, 1, None, budget).unwrap().0);
    }
}

#[test]
fn oracle_unit_weights_agree_with_unweighted() {
    let mut rng = InstanceRng::new(9);
    for _ in 0..100 {
        let n = 3 + rng.below(6) as usize;
        let g = rng.gnp(n, 0.4);
        let ones = VertexWeights::<i64>::ones(n);
        let a = brute_force_min_light::<i64>(&g, 1, None, OracleBudget::default()).unwrap();
        let b = brute_force_min_light(&g, 1, Some(&ones), OracleBudget::default()).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn odd_cycles_have_floor_half_matchings() {
    for k in 1..=6 {
        assert_eq!(max_cardinality_matching(&cycle(2 * k + 1)).len(), k);
    }
    assert_eq!(max_cardinality_matching(&path(7)).len(), 3);
    assert_eq!(max_cardinality_matching(&petersen()).len(), 5);
}

#[test]
fn equal_weights_match_cardinality() {
    let mut rng = InstanceRng::new(31);
    for _ in 0..100 {
        let n = 2 + rng.below(12) as usize;
        let g = rng.gnp(n, 0.3);
        let w = vec![3i64; g.edge_count()];
        let by_weight = max_weight_matching(&g, &w).unwrap().weight(&w);
        assert_eq!(by_weight, 3 * max_cardinality_matching(&g).len() as i64);
    }
}

#[test]
fn larger_random_reductions_match_brute_force_cardinality() {
    // G' instances are sparse; enumeration stays cheap for small cores.
    let mut rng = InstanceRng::new(99);
    let mut checked = 0;
    while checked < 40 {
        let core = random_core(&mut rng, 5, 0.6);
        let r = build_gprime::<i64>(&core, None).unwrap();
        if r.gprime.edge_count() > 30 {
            continue;
        }
        let (best, _) = brute_force_max_matching::<i64>(&r.gprime, None, big_budget()).unwrap();
        assert_eq!(max_cardinality_matching(&r.gprime).len() as i64, best);
        checked += 1;
    }
}

#[test]
fn fixed_graph_family_star_and_paths() {
    assert_eq!(solve_min_light(&star(5)).unwrap().objective, 5);
    // a path's internal vertices have degree 2, one can be heavy per two edges
    for n in 2..9 {
        let g = path(n);
        let s = solve_min_light(&g).unwrap();
        let oracle = brute_force_min_light::<i64>(&g, 1, None, OracleBudget::default()).unwrap();
        assert_eq!(s.objective, oracle.0);
    }
    let k5 = solve_min_light(&complete(5)).unwrap();
    assert_eq!(k5.objective, brute_force_min_light::<i64>(&complete(5), 1, None, OracleBudget::default()).unwrap().0);
}
