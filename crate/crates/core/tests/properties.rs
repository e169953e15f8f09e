use std::collections::BTreeSet;

use astopo::generators::{generate_ba, generate_glp, waxman_probability, BaConfig, GlpConfig};
use astopo::metrics::{self, SpectrumMode};
use astopo::{DedupPolicy, Graph, ModelConfig, ModelKind, Seed};
use proptest::prelude::*;

/// Arbitrary simple graph on up to `max_n` nodes.
fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, edges)
        })
    })
}

fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_map(|g| {
        // Chain the components together.
        let parts = g.connected_components();
        let mut first = vec![usize::MAX; parts.count()];
        for v in (0..g.node_count()).rev() {
            first[parts.component_id[v]] = v;
        }
        let mut edges: Vec<(usize, usize)> = g.edges().collect();
        edges.extend(first.windows(2).map(|w| (w[0], w[1])));
        Graph::from_edges(g.node_count(), edges)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn degree_sum_and_symmetry(g in graph(25)) {
        prop_assert_eq!(g.degree_sequence().iter().sum::<usize>(), 2 * g.edge_count());
        for u in 0..g.node_count() {
            for &v in g.neighbors(u) {
                prop_assert!(u != v);
                prop_assert!(g.neighbors(v).contains(&u));
            }
            prop_assert!(g.neighbors(u).windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn partition_is_consistent(g in graph(25)) {
        let p = g.connected_components();
        prop_assert_eq!(p.sizes.iter().sum::<usize>(), g.node_count());
        prop_assert!(p.sizes.windows(2).all(|w| w[0] >= w[1]));
        for (u, v) in g.edges() {
            prop_assert_eq!(p.component_id[u], p.component_id[v]);
        }
    }

    #[test]
    fn largest_component_idempotent(g in graph(25)) {
        let once = g.largest_component();
        prop_assert!(once.is_connected());
        prop_assert_eq!(once.largest_component(), once.clone());
        prop_assert_eq!(once.node_count(), g.connected_components().sizes[0]);
    }

    #[test]
    fn labeled_build_is_deterministic(pairs in proptest::collection::vec((0u16..30, 0u16..30), 1..60)) {
        let labeled: Vec<(String, String)> = pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        let first = Graph::from_labeled_edges(&labeled, DedupPolicy::SilentlyMerge);
        let second = Graph::from_labeled_edges(&labeled, DedupPolicy::SilentlyMerge);
        match (first, second) {
            (Ok((a, sa)), Ok((b, sb))) => {
                prop_assert_eq!(&a, &b);
                prop_assert_eq!(sa, sb);
                let distinct: BTreeSet<(u16, u16)> = pairs
                    .iter()
                    .filter(|(x, y)| x != y)
                    .map(|&(x, y)| (x.min(y), x.max(y)))
                    .collect();
                prop_assert_eq!(a.edge_count(), distinct.len());
            }
            (a, b) => prop_assert_eq!(a.is_err(), b.is_err()),
        }
    }

    #[test]
    fn distribution_sums(g in graph(25)) {
        let d = metrics::degree_profile(&g);
        prop_assert!((d.p_k.values().sum::<f64>() - 1.0).abs() < 1e-12);
        prop_assert!(d.knn_norm.values().all(|&v| v > 0.0 && v <= 1.0 + 1e-12));
        if g.node_count() >= 2 {
            let p = metrics::path_stats(&g).unwrap();
            if p.reachable_pairs > 0 {
                prop_assert!((p.p_h.values().sum::<f64>() - 1.0).abs() < 1e-12);
                let mean: f64 = p.p_h.iter().map(|(&h, &q)| h as f64 * q).sum();
                prop_assert!((mean - p.mean).abs() < 1e-9);
                prop_assert_eq!(p.diameter, *p.p_h.keys().last().unwrap());
            }
        }
    }

    #[test]
    fn rich_club_ends_at_density(g in graph(25)) {
        let n = g.node_count();
        prop_assume!(n >= 2);
        let phi = metrics::rich_club(&g).phi;
        let density = 2.0 * g.edge_count() as f64 / (n * (n - 1)) as f64;
        prop_assert!((phi[&n] - density).abs() < 1e-12);
        prop_assert!(phi.values().all(|&v| (0.0..=1.0).contains(&v)));
    }

    #[test]
    fn clustering_bounds(g in graph(25)) {
        let c = metrics::clustering(&g);
        prop_assert!((0.0..=1.0).contains(&c.gamma));
        prop_assert!(c.gamma_literal <= c.gamma + 1e-12);
        prop_assert!(c.c_of_k.iter().all(|(&k, &v)| k >= 2 && (0.0..=1.0).contains(&v)));
    }

    #[test]
    fn assortativity_in_range(g in graph(25)) {
        if let Ok(r) = metrics::assortativity(&g) {
            prop_assert!((-1.0..=1.0).contains(&r));
        }
    }

    #[test]
    fn coreness_and_clique(g in graph(22)) {
        let core = metrics::coreness(&g);
        for v in 0..g.node_count() {
            prop_assert!(core.coreness[v] <= g.degree(v));
        }
        let clique = metrics::top_clique_size(&g, None).unwrap();
        prop_assert!(clique >= 1);
        prop_assert!(clique - 1 <= core.max_core);
    }

    #[test]
    fn betweenness_total_matches_mean_path(g in connected_graph(25)) {
        prop_assume!(g.node_count() >= 3);
        let c = metrics::centrality(&g).unwrap();
        let p = metrics::path_stats(&g).unwrap();
        let total: f64 = c.betweenness.iter().sum();
        let expected = p.reachable_pairs as f64 * (p.mean - 1.0);
        prop_assert!((total - expected).abs() < 1e-7, "{} vs {}", total, expected);
        for v in 0..g.node_count() {
            if g.degree(v) == 1 {
                prop_assert!(c.betweenness[v].abs() < 1e-12);
            }
            let close = c.closeness[v].unwrap();
            prop_assert!(close <= 1.0);
            prop_assert!(close >= 1.0 / ((g.node_count() - 1) * p.diameter) as f64 - 1e-15);
        }
    }

    #[test]
    fn spectrum_invariants(g in graph(30)) {
        prop_assume!(g.node_count() >= 2);
        let eig = metrics::normalized_laplacian_spectrum(&g, SpectrumMode::Full).unwrap().eigenvalues;
        prop_assert!(eig.iter().all(|&l| (-1e-8..=2.0 + 1e-8).contains(&l)));
        prop_assert!(eig[0].abs() < 1e-8);
        let zeros = eig.iter().filter(|l| l.abs() < 1e-8).count();
        prop_assert_eq!(zeros, g.connected_components().count());
        if (0..g.node_count()).all(|v| g.degree(v) > 0) {
            prop_assert!((eig.iter().sum::<f64>() - g.node_count() as f64).abs() < 1e-6);
        }
    }

    #[test]
    fn ba_edge_count(m in 1usize..6, extra in 0usize..4, grow in 0usize..200, seed in any::<u64>()) {
        let m0 = m.max(3) + extra;
        let cfg = BaConfig { n: m0 + grow, m, m0 };
        let g = generate_ba(&cfg, Seed(seed)).unwrap();
        prop_assert_eq!(g.edge_count(), m0 + m * grow);
        prop_assert!(g.is_connected());
    }

    #[test]
    fn glp_pure_growth_edge_count(m in 1usize..4, grow in 0usize..200, seed in any::<u64>()) {
        let base = GlpConfig::new(0);
        let cfg = GlpConfig { n: base.m0.max(m) + grow, m, m0: base.m0.max(m), p_add: 1.0, beta_pref: 0.0 };
        let g = generate_glp(&cfg, Seed(seed)).unwrap();
        prop_assert_eq!(g.edge_count(), cfg.m0 + m * grow);
    }

    #[test]
    fn generators_deterministic(kind_index in 0usize..4, n in 20usize..300, seed in any::<u64>()) {
        // Inet needs thousands of nodes and is covered by the acceptance suite.
        let kind = [ModelKind::Waxman, ModelKind::Ba, ModelKind::Glp, ModelKind::Pfp][kind_index];
        let cfg = ModelConfig::default_for(kind, n);
        let a = cfg.generate(Seed(seed)).unwrap();
        let b = cfg.generate(Seed(seed)).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.node_count(), n);
        prop_assert!(a.is_connected());
    }

    #[test]
    fn edge_list_round_trip(g in graph(25)) {
        prop_assume!(g.edge_count() > 0);
        let mut buf = Vec::new();
        astopo::datasets::write_edge_list(&g, &mut buf).unwrap();
        let back = astopo::datasets::parse_edge_list(buf.as_slice()).unwrap().graph;
        let labelled = |h: &Graph| -> BTreeSet<(String, String)> {
            h.edges().map(|(u, v)| (h.label(u).to_owned(), h.label(v).to_owned())).collect()
        };
        prop_assert_eq!(back.edge_count(), g.edge_count());
        let want = labelled(&g);
        let got: BTreeSet<(String, String)> = labelled(&back)
            .into_iter()
            .map(|(a, b)| if want.contains(&(a.clone(), b.clone())) { (a, b) } else { (b, a) })
            .collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn waxman_kernel_decreasing(alpha in 0.01f64..=1.0, beta in 0.01f64..=1.0, l in 0.1f64..10.0,
                                d1 in 0.0f64..10.0, gap in 1e-3f64..5.0) {
        let near = waxman_probability(alpha, beta, d1, l);
        let far = waxman_probability(alpha, beta, d1 + gap, l);
        prop_assert!(far < near);
        prop_assert!(near <= alpha);
    }
}

#[test]
fn complete_graph_has_zero_betweenness() {
    for n in 2..12 {
        let g = Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))));
        let c = metrics::centrality(&g).unwrap();
        assert!(c.betweenness.iter().all(|&b| b == 0.0));
    }
}

#[test]
fn inet_core_is_a_clique() {
    let cfg = astopo::generators::InetConfig::new(astopo::generators::INET_MIN_NODES);
    let out = astopo::generators::generate_inet_with_core(&cfg, Seed(11)).unwrap();
    let clique = metrics::top_clique_size(&out.graph, None).unwrap();
    assert!(clique >= out.core.len());
}

#[test]
fn parallel_sweeps_are_bit_stable() {
    let g = ModelConfig::default_for(ModelKind::Pfp, 600).generate(Seed(5)).unwrap();
    let first = metrics::centrality(&g).unwrap();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let single = pool.install(|| metrics::centrality(&g).unwrap());
    assert_eq!(first, single);
    let paths = metrics::path_stats(&g).unwrap();
    let paths_single = pool.install(|| metrics::path_stats(&g).unwrap());
    assert_eq!(paths, paths_single);
}
