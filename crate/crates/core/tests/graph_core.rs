mod common;

use oddcolor_core::oracle::{lower_bound_construction, random_ktree, GenSpec};
use oddcolor_core::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Lower-bound construction for k = 2 with ids v1=0, v2=1, u0=2, u1=3, u2=4.
fn construction2() -> Graph {
    lower_bound_construction(2)
}

#[test]
fn build_graph_triangle() {
    let b = build_graph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    assert_eq!(b.graph, Graph::complete(3));
    assert!(!b.had_duplicates());
}

#[test]
fn build_graph_collapses_reversed_duplicate() {
    let b = build_graph(2, &[(0, 1), (1, 0)]).unwrap();
    assert_eq!(b.graph.edge_count(), 1);
    assert!(b.had_duplicates());
}

#[test]
fn build_graph_rejects_bad_ids() {
    assert_eq!(build_graph(2, &[(0, 2)]).unwrap_err(), Error::OutOfRange { id: 2, n: 2 });
    assert_eq!(build_graph(2, &[(1, 1)]).unwrap_err(), Error::SelfLoop(1));
}

#[test]
fn construction_shape() {
    let g = construction2();
    assert_eq!(g.order(), 5);
    assert_eq!(g.edge_count(), 7);
    assert!(g.is_clique(&[0, 1, 2]));
    assert_eq!(g.neighbors(3), &[1, 2]);
    assert_eq!(g.neighbors(4), &[0, 2]);
}

#[test]
fn neighbor_lists_sorted_and_symmetric() {
    let (g, _) = random_ktree(&GenSpec::new(40, 3, 9)).unwrap();
    for v in 0..g.order() {
        let nb = g.neighbors(v);
        assert!(nb.windows(2).all(|w| w[0] < w[1]));
        assert!(nb.iter().all(|&u| g.neighbors(u).contains(&v) && u != v));
    }
}

#[test]
fn recognize_k4_as_3tree() {
    let ord = recognize_ktree(&Graph::complete(4), 3).unwrap();
    assert_eq!(ord.len(), 4);
    assert_eq!(ord.k(), 3);
}

#[test]
fn recognize_construction() {
    let g = construction2();
    let ord = recognize_ktree(&g, 2).unwrap();
    let rebuilt = Graph::from_edges(5, &ord.replay_edges()).unwrap();
    assert_eq!(rebuilt, g);
}

#[test]
fn k4_is_not_a_2tree() {
    assert!(matches!(recognize_ktree(&Graph::complete(4), 2), Err(Error::NotKTree { k: 2, .. })));
}

#[test]
fn recognize_too_small() {
    assert!(matches!(recognize_ktree(&Graph::complete(3), 3), Err(Error::TooSmall { .. })));
}

#[test]
fn recognize_rejects_non_ktrees() {
    // 4-cycle: no simplicial vertex.
    let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
    assert!(recognize_ktree(&c4, 2).is_err());
    // Two triangles sharing a vertex: 2-degenerate but not a 2-tree.
    let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
    assert!(recognize_ktree(&bowtie, 2).is_err());
}

#[test]
fn recognition_agrees_with_brute_force_on_all_small_graphs() {
    for n in 3..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|b| (0..b).map(move |a| (a, b))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let e: Vec<_> = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            let g = Graph::from_edges(n, &e).unwrap();
            for k in 1..=3 {
                if n < k + 1 {
                    continue;
                }
                assert_eq!(recognize_ktree(&g, k).is_ok(), common::brute_is_ktree(n, &e, k), "n={n} k={k} {e:?}");
            }
        }
    }
}

#[test]
fn good_ordering_on_clique() {
    let ord = good_addition_ordering(&Graph::complete(4), 3).unwrap();
    assert_eq!(Graph::complete(4).degree(ord.vertex(0)), 3);
}

#[test]
fn good_ordering_on_fan() {
    // Triangle a=0, b=1, c=2 plus d=3 on b, c.
    let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
    let ord = good_addition_ordering(&g, 2).unwrap();
    assert!([0, 3].contains(&ord.vertex(0)));
}

#[test]
fn good_ordering_on_construction() {
    let g = construction2();
    let ord = good_addition_ordering(&g, 2).unwrap();
    assert!([3, 4].contains(&ord.vertex(0)));
}

#[test]
fn verify_proper_examples() {
    let k3 = Graph::complete(3);
    let c = Coloring::from_colors(vec![1, 2, 3]).unwrap();
    assert_eq!(verify_proper(&k3, &c).unwrap(), None);
    let e = Graph::complete(2);
    let c = Coloring::from_colors(vec![1, 1]).unwrap();
    assert_eq!(verify_proper(&e, &c).unwrap(), Some((0, 1)));
}

#[test]
fn construction_failing_coloring() {
    // φ(v_i) = φ(u_i) = i, φ(u0) = 3.
    let g = construction2();
    let c = Coloring::from_colors(vec![1, 2, 3, 1, 2]).unwrap();
    assert_eq!(verify_proper(&g, &c).unwrap(), None);
    let r = verify_odd(&g, &c).unwrap();
    assert!(!r.all_odd);
    assert_eq!(r.failing(), vec![2]);
    assert_eq!(odd_condition_witness(&g, &c, 2), None);
}

#[test]
fn verify_odd_clique_and_paths() {
    let k3 = Graph::complete(3);
    let r = verify_odd(&k3, &Coloring::from_colors(vec![1, 2, 3]).unwrap()).unwrap();
    assert!(r.all_odd);
    let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    assert!(is_odd_coloring(&path, &Coloring::from_colors(vec![1, 2, 3]).unwrap()));
    let r = verify_odd(&path, &Coloring::from_colors(vec![1, 2, 1]).unwrap()).unwrap();
    assert_eq!(r.failing(), vec![1]);
    assert_eq!(r.entries[0], Witness::Color(2));
}

#[test]
fn verify_odd_rejects_improper_and_exempts_isolated() {
    let e = Graph::complete(2);
    assert_eq!(verify_odd(&e, &Coloring::from_colors(vec![1, 1]).unwrap()).unwrap_err(), Error::NotProper(0, 1));
    let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
    let r = verify_odd(&g, &Coloring::from_colors(vec![1, 2, 1]).unwrap()).unwrap();
    assert_eq!(r.entries[2], Witness::Exempt);
    assert!(r.all_odd);
}

#[test]
fn verifier_agrees_with_brute_force() {
    let g = construction2();
    let e: Vec<_> = g.edges().collect();
    for col in common::all_colorings(5, 4) {
        let c = Coloring::from_colors(col.clone()).unwrap();
        assert_eq!(is_odd_coloring(&g, &c), common::brute_is_odd(5, &e, &col));
    }
}

/// Random proper coloring with at most `palette` colors: greedy over
/// `order`, choosing uniformly among free colors.
fn random_proper(g: &Graph, order: &[usize], palette: u32, rng: &mut ChaCha8Rng) -> Option<Coloring> {
    let mut col = vec![0u32; g.order()];
    for &v in order {
        let free: Vec<u32> = (1..=palette).filter(|c| g.neighbors(v).iter().all(|&u| col[u] != *c)).collect();
        if free.is_empty() {
            return None;
        }
        col[v] = free[rng.gen_range(0..free.len())];
    }
    Coloring::from_colors(col).ok()
}

fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut e = Vec::new();
    for b in 0..n {
        for a in 0..b {
            if rng.gen_bool(p) {
                e.push((a, b));
            }
        }
    }
    Graph::from_edges(n, &e).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn recognize_round_trip(n in 3usize..60, k in 1usize..6, seed in any::<u64>()) {
        prop_assume!(n > k);
        let (g, _) = random_ktree(&GenSpec::new(n, k, seed)).unwrap();
        let ord = recognize_ktree(&g, k).unwrap();
        prop_assert_eq!(Graph::from_edges(n, &ord.replay_edges()).unwrap(), g.clone());
        for i in k + 1..n {
            prop_assert_eq!(ord.back_clique(i).len(), k);
            prop_assert!(g.is_clique(ord.back_clique(i)));
        }
        prop_assert!(g.is_clique(&ord.order()[..=k]));
    }

    #[test]
    fn good_ordering_starts_at_degree_k(n in 3usize..80, k in 1usize..8, seed in any::<u64>()) {
        prop_assume!(n > k);
        let (g, _) = random_ktree(&GenSpec::new(n, k, seed)).unwrap();
        let ord = good_addition_ordering(&g, k).unwrap();
        prop_assert_eq!(g.degree(ord.vertex(0)), k);
        prop_assert_eq!(Graph::from_edges(n, &ord.replay_edges()).unwrap(), g);
    }

    #[test]
    fn odd_degree_vertices_always_witnessed(n in 2usize..25, p in 0.1f64..0.9, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(n, p, &mut rng);
        let order: Vec<usize> = (0..n).collect();
        let c = random_proper(&g, &order, n as u32, &mut rng).unwrap();
        let r = verify_odd(&g, &c).unwrap();
        for v in 0..n {
            if g.degree(v) % 2 == 1 {
                prop_assert!(odd_condition_witness(&g, &c, v).is_some());
                prop_assert!(matches!(r.entries[v], Witness::Color(_)));
            }
        }
    }

    #[test]
    fn low_degree_ktree_vertices_witnessed(n in 3usize..40, k in 1usize..7, seed in any::<u64>()) {
        prop_assume!(n > k);
        let (g, ord) = random_ktree(&GenSpec::new(n, k, seed)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let c = random_proper(&g, ord.order(), (2 * k + 2) as u32, &mut rng).unwrap();
        for v in 0..n {
            if g.degree(v) < 2 * k {
                prop_assert!(odd_condition_witness(&g, &c, v).is_some(), "v={} d={}", v, g.degree(v));
            }
        }
    }

    #[test]
    fn class_sizes_sum_to_degree(n in 3usize..40, seed in any::<u64>()) {
        let (g, ord) = random_ktree(&GenSpec::new(n, 2, seed)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_proper(&g, ord.order(), 6, &mut rng).unwrap();
        for v in 0..n {
            let total: usize = (1..=6u32)
                .map(|x| g.neighbors(v).iter().filter(|&&u| c.color(u) == x).count())
                .sum();
            prop_assert_eq!(total, g.degree(v));
        }
        prop_assert!(verify_odd(&g, &c).is_ok());
    }
}
