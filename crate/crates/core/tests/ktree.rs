mod common;

use common::Plant;
use oddcolor_core::coloring::PartialColoring;
use oddcolor_core::graph::floor_log2;
use oddcolor_core::ktree::*;
use oddcolor_core::oracle::{random_ktree, GenSpec};
use oddcolor_core::*;
use proptest::prelude::*;

fn palette(k: usize) -> usize {
    k + 2 * floor_log2(k) + 3
}

#[test]
fn budget_matches_closed_form() {
    for k in 1..=64 {
        let b = ColorBudget::new(k);
        assert_eq!(b.palette, palette(k), "k={k}");
        assert_eq!(b.r, floor_log2(k) + 1);
    }
    assert_eq!(ColorBudget::new(7).palette, 14);
    assert_eq!(ColorBudget::new(16).palette, 27);
}

#[test]
fn k8_clique_all_distinct() {
    let g = Graph::complete(8);
    let c = color_ktree(&g, 7).unwrap();
    let mut cs = c.colors().to_vec();
    cs.sort();
    assert_eq!(cs, (1..=8).collect::<Vec<u32>>());
    assert!(is_odd_coloring(&g, &c));
}

#[test]
fn small_k_rejected() {
    assert_eq!(color_ktree(&Graph::complete(7), 6).unwrap_err(), Error::KTooSmall { k: 6, min: 7 });
}

#[test]
fn non_ktree_rejected() {
    let g = Graph::from_edges(9, &[(0, 1)]).unwrap();
    assert!(matches!(color_ktree(&g, 7), Err(Error::NotKTree { .. })));
}

#[test]
fn random_7tree_n60() {
    let (g, _) = random_ktree(&GenSpec::new(60, 7, 2024)).unwrap();
    let c = color_ktree(&g, 7).unwrap();
    assert!(c.colors().iter().all(|&x| (1..=14).contains(&x)));
    assert!(verify_odd(&g, &c).unwrap().all_odd);
    assert!(common::brute_is_odd_graph(&g, c.colors()));
}

#[test]
fn random_16tree_n120() {
    let (g, _) = random_ktree(&GenSpec::new(120, 16, 7)).unwrap();
    let c = color_ktree(&g, 16).unwrap();
    assert!(c.colors().iter().all(|&x| (1..=27).contains(&x)));
    assert!(is_odd_coloring(&g, &c));
}

#[test]
fn choose_color_examples() {
    // Star center 0 with leaves 1..=3 colored 5, 5, 5: one odd class, color 5.
    let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
    let mut col = PartialColoring::new(5);
    for v in 1..=3 {
        col.set(v, 5);
    }
    assert_eq!(choose_color_avoiding(&g, &col, &[5, 9], &[0]).unwrap(), 9);
    assert_eq!(choose_color_avoiding(&g, &col, &[3, 9], &[]).unwrap(), 3);
    // Two odd classes: nothing is forbidden.
    col.set(1, 2);
    col.set(2, 4);
    assert_eq!(choose_color_avoiding(&g, &col, &[4, 9], &[0]).unwrap(), 4);
    // Too few candidates for the constrained set.
    assert!(choose_color_avoiding(&g, &col, &[4], &[0, 1]).is_err());
}

#[test]
fn injection_smallest_index_rule() {
    // Root w1=0, w2=1, w3=2 (a triangle), u0=3 on all of it, u1=4 drops w1,
    // u2=5 drops w2.
    let mut p = Plant { n: 3, edges: vec![(0, 1), (0, 2), (1, 2)] };
    let u0 = p.vertex(&[0, 1, 2]);
    let u1 = p.vertex(&[1, 2, u0]);
    let u2 = p.vertex(&[2, u0, u1]);
    let g = p.graph();
    let u = [u0, u1, u2];
    assert_eq!(build_injection(&g, &[0, 1], &u, 2).unwrap(), vec![(0, 1), (1, 2)]);
    assert_eq!(build_injection(&g, &[], &u, 2).unwrap(), vec![]);
    // w3 is adjacent to every u_i, so it cannot be in W̄.
    assert!(build_injection(&g, &[2], &u, 2).is_err());
}

#[test]
fn heavy_branch_is_the_last_big_one() {
    for seed in 0..30 {
        let (g, _) = random_ktree(&GenSpec::new(40, 7, seed)).unwrap();
        let ord = good_addition_ordering(&g, 7).unwrap();
        let r = 3;
        let t = select_heavy_branch(&g, &ord, 7, r).unwrap();
        let size = |i: usize| oddcolor_core::branch::branch_ordering(&g, &ord, i).unwrap().0.len();
        assert!(size(t) >= 7 + r + 1);
        for i in t + 1..g.order() {
            assert!(size(i) < 7 + r + 1);
        }
    }
}

#[test]
fn halving_chain_bound_for_seven() {
    // u1 is adjacent to u0, so it misses a root vertex and |W_0| <= 6;
    // with r = 3 the chain then runs 6, 3, 1, 0 at worst.
    let mut found = false;
    for seed in 0..400 {
        let (g, _) = random_ktree(&GenSpec { n: 60, k: 7, seed, attachment_bias: 0.9 }).unwrap();
        let (_, tr) = color_ktree_traced(&g, 7).unwrap();
        for l in &tr.levels {
            let sizes: Vec<usize> = l.halving.iter().map(|w| w.len()).collect();
            assert!(sizes[0] <= 6, "{sizes:?}");
            if sizes[0] == 6 {
                found = true;
                assert!(sizes[1] <= 3 && sizes[2] <= 1 && sizes[3] == 0, "{sizes:?}");
            }
        }
        if found {
            break;
        }
    }
    assert!(found, "no level with |W0| = 6 in the sample");
}

fn check_trace(g: &Graph, k: usize, c: &Coloring, tr: &KtreeTrace) {
    let b = ColorBudget::new(k);
    assert_eq!(tr.budget, Some(b));
    let mut alive = vec![false; g.order()];
    for &v in &tr.base {
        alive[v] = true;
    }
    for l in &tr.levels {
        let f = &l.frame;
        for &x in &f.u {
            alive[x] = true;
        }
        assert!(f.w_bar.len() <= b.r);
        let targets: Vec<usize> = f.sigma.iter().map(|&(_, i)| i).collect();
        let mut dedup = targets.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), targets.len(), "sigma not injective");
        for &(w, i) in &f.sigma {
            assert!(!g.has_edge(w, f.u[i]));
        }
        assert_eq!(l.halving.len(), b.r + 1);
        for i in 1..=b.r {
            assert!(l.halving[i].len() <= l.halving[i - 1].len() / 2);
        }
        assert!(l.halving[b.r].is_empty());
        let reserved: Vec<u32> = l.reserved.iter().map(|&c| l.permutation[c as usize - 1]).collect();
        assert_eq!(reserved.len(), b.r);
        let mut rs = reserved.clone();
        rs.sort();
        rs.dedup();
        assert_eq!(rs.len(), b.r);
        assert!(!reserved.contains(&c.color(f.u[0])));
        for &x in &f.u[b.r + 1..] {
            assert!(!reserved.contains(&c.color(x)));
        }
        for &x in &f.u[1..] {
            let d = g.neighbors(x).iter().filter(|&&y| alive[y]).count();
            assert!(d < 2 * k, "degree {d} at level t={}", f.t);
        }
    }
}

#[test]
fn trace_replays_deterministically() {
    let (g, _) = random_ktree(&GenSpec::new(90, 8, 3)).unwrap();
    let (c1, t1) = color_ktree_traced(&g, 8).unwrap();
    let (c2, t2) = color_ktree_traced(&g, 8).unwrap();
    assert_eq!(c1, c2);
    assert_eq!(t1, t2);
    check_trace(&g, 8, &c1, &t1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn ktree_colorings_are_odd(
        k in prop::sample::select(vec![7usize, 8, 11, 16]),
        extra in 1usize..200,
        seed in any::<u64>(),
        bias in prop::sample::select(vec![0.1, 0.5, 0.9]),
    ) {
        let spec = GenSpec { n: k + 1 + extra, k, seed, attachment_bias: bias };
        let (g, _) = random_ktree(&spec).unwrap();
        let (c, tr) = color_ktree_traced(&g, k).unwrap();
        prop_assert!(c.colors().iter().all(|&x| x >= 1 && x as usize <= palette(k)));
        prop_assert!(is_odd_coloring(&g, &c));
        check_trace(&g, k, &c, &tr);
    }
}
