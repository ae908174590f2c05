mod common;

use common::Plant;
use oddcolor_core::branch::*;
use oddcolor_core::coloring::PartialColoring;
use oddcolor_core::oracle::{enumerate_small_ktrees, lower_bound_construction, random_ktree, GenSpec};
use oddcolor_core::twotree::*;
use oddcolor_core::*;
use proptest::prelude::*;

fn check(g: &Graph, c: &Coloring) {
    assert!(c.colors().iter().all(|&x| (1..=4).contains(&x)), "{:?}", c.colors());
    assert!(is_odd_coloring(g, c));
    assert!(common::brute_is_odd_graph(g, c.colors()));
}

/// Triangle `0, 1, 2` with an ear on each edge: ears 3 on {0,1}, 4 on
/// {1,2}, 5 on {2,0}. With `outer`, an ear also sits on each of the six
/// edges between a triangle vertex and an ear.
fn decorated_triangle(outer: bool) -> Graph {
    let mut p = Plant::on(&Graph::complete(3));
    let ears = [p.ear2(0, 1), p.ear2(1, 2), p.ear2(2, 0)];
    if outer {
        for (e, (a, b)) in ears.into_iter().zip([(0, 1), (1, 2), (2, 0)]) {
            p.ear2(a, e);
            p.ear2(e, b);
        }
    }
    p.graph()
}

#[test]
fn triangle_gets_three_colors() {
    let g = Graph::complete(3);
    let c = color_2tree(&g).unwrap();
    let mut cs = c.colors().to_vec();
    cs.sort();
    assert_eq!(cs, vec![1, 2, 3]);
}

#[test]
fn construction_needs_and_gets_four() {
    let g = lower_bound_construction(2);
    let c = color_2tree(&g).unwrap();
    check(&g, &c);
    assert_eq!(common::brute_odd_chromatic(&g), 4);
}

#[test]
fn rejects_non_2trees() {
    assert!(color_2tree(&Graph::complete(4)).is_err());
    assert!(color_2tree(&Graph::complete(2)).is_err());
}

#[test]
fn all_small_2trees() {
    let mut total = 0;
    for n in 3..=9 {
        for g in enumerate_small_ktrees(n, 2) {
            let (c, tr) = color_2tree_traced(&g).unwrap();
            check(&g, &c);
            assert!(tr.base.len() <= 4);
            assert_eq!(tr.base.len() + tr.levels.iter().map(|l| l.assigned.len()).sum::<usize>(), n);
            total += 1;
        }
    }
    assert_eq!(total, 1 + 1 + 2 + 5 + 12 + 39 + 136);
}

#[test]
fn decorated_triangle_holds_h010() {
    // u = 2, v = 5 (the ear on {2, 0}), w = 0.
    let g = decorated_triangle(false);
    let h = classify_h2(&g, [2, 5], 0).unwrap();
    assert_eq!(h.kind(), ConfigKind::H2(0, 1, 0));
    h.to_match().validate(&g).unwrap();
    let u = find_unavoidable_2tree(&g).unwrap();
    u.to_match().validate(&g).unwrap();
    check(&g, &color_2tree(&g).unwrap());
}

#[test]
fn doubly_decorated_triangle_holds_h101() {
    let g = decorated_triangle(true);
    assert_eq!(g.order(), 12);
    let h = classify_h2(&g, [2, 5], 0).unwrap();
    assert_eq!(h.kind(), ConfigKind::H2(1, 0, 1));
    h.to_match().validate(&g).unwrap();
    assert!(find_good_hat(&g).is_none());
    let u = find_unavoidable_2tree(&g).unwrap();
    u.to_match().validate(&g).unwrap();
    check(&g, &color_2tree(&g).unwrap());
}

#[test]
fn two_ears_on_an_edge_are_t200() {
    let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
    let Unavoidable2::T(t) = find_unavoidable_2tree(&g).unwrap() else { panic!("expected a T member") };
    assert_eq!(t.kind(), ConfigKind::T2(2, 0, 0));
    assert_eq!(frame_for_t2(t).tag(), CaseTag::T200);
}

#[test]
fn finder_needs_four_vertices() {
    assert!(find_unavoidable_2tree(&Graph::complete(3)).is_err());
}

#[test]
fn case_tag_names() {
    let names: Vec<String> = [
        CaseTag::GoodHat,
        CaseTag::H100,
        CaseTag::H101OrH002,
        CaseTag::T200,
        CaseTag::TWithHat,
        CaseTag::TWithDoubleHat,
    ]
    .iter()
    .map(|t| t.to_string())
    .collect();
    assert_eq!(names, ["GOOD_HAT", "H100", "H101_OR_H002", "T200", "T_B>=1", "T_C>=1"]);
}

/// Every completion of the interior with colors `1..=4`, root fixed to
/// `1, 2`, that is proper and odd everywhere except at `root[0]`.
fn near_odd_completions(g: &Graph, root: [usize; 2], interior: &[usize]) -> Vec<Vec<u32>> {
    let e: Vec<_> = g.edges().collect();
    common::all_colorings(interior.len(), 4)
        .filter_map(|fill| {
            let mut col = vec![0u32; g.order()];
            col[root[0]] = 1;
            col[root[1]] = 2;
            for (&x, &c) in interior.iter().zip(&fill) {
                col[x] = c;
            }
            if e.iter().any(|&(a, b)| col[a] == col[b]) {
                return None;
            }
            let odd = (0..g.order()).filter(|&v| v != root[0]).all(|v| {
                let nb = g.neighbors(v);
                nb.iter().any(|&x| nb.iter().filter(|&&y| col[y] == col[x]).count() % 2 == 1)
            });
            odd.then_some(col)
        })
        .collect()
}

#[test]
fn near_odd_extension_matches_brute_force_on_an_isolated_edge() {
    for which in 0..3 {
        let mut p = Plant::on(&Graph::complete(2));
        let apex = match which {
            0 => p.ear2(0, 1),
            1 => p.hat(0, 1)[0],
            _ => p.double_hat(0, 1)[0],
        };
        let g = p.graph();
        for first in [0, 1] {
            let s = classify2(&g, 0, 1, apex).unwrap().oriented(first);
            let root = s.root();
            let good = near_odd_completions(&g, root, &s.interior());
            assert!(!good.is_empty());
            let mut col = PartialColoring::new(g.order());
            col.set(root[0], 1);
            col.set(root[1], 2);
            extend_near_odd_2tree(&g, &s, &mut col).unwrap();
            let got: Vec<u32> = (0..g.order()).map(|v| col.get(v).unwrap()).collect();
            assert!(good.contains(&got), "which={which} first={first} {got:?}");
        }
    }
}

/// Builds `host + planted`, colors the host, and applies `frame` on top.
fn apply_planted(host: &Graph, p: &Plant, frame: &Frame2) -> Coloring {
    let g = p.graph();
    let base = if host.order() >= 3 {
        color_2tree(host).unwrap().colors().to_vec()
    } else {
        (1..=host.order() as u32).collect()
    };
    let mut col = PartialColoring::new(g.order());
    for (v, &c) in base.iter().enumerate() {
        col.set(v, c);
    }
    let level = apply_case_2tree(&g, &mut col, frame).unwrap();
    assert_eq!(level.case, frame.tag().to_string());
    let c = col.finish(4).unwrap();
    check(&g, &c);
    c
}

/// Plants a configuration for `tag` on the host edge `{a, b}`; `variant`
/// picks among the shapes that share the tag. Returns `None` when the
/// planted shape does not qualify (a hat whose first root vertex has the
/// wrong degree parity).
fn plant_case(host: &Graph, a: usize, b: usize, tag: CaseTag, variant: usize) -> Option<(Plant, Frame2)> {
    let mut p = Plant::on(host);
    let branch = |p: &mut Plant, x: usize, y: usize, kind: usize| -> usize {
        match kind {
            0 => p.ear2(x, y),
            1 => p.hat(x, y)[0],
            _ => p.double_hat(x, y)[0],
        }
    };
    let frame = match tag {
        CaseTag::GoodHat => {
            let u = p.hat(a, b);
            let g = p.graph();
            let d = g.degree(a);
            if d != 4 && d % 2 == 0 {
                return None;
            }
            let Special2::Hat(hat) = classify2(&g, a, b, u[0]).unwrap().oriented(a) else { unreachable!() };
            Frame2::GoodHat { hat, deg_v1: d }
        }
        CaseTag::H100 | CaseTag::H101OrH002 => {
            let u0 = p.ear2(a, b);
            let (s0, s1) = match (tag, variant % 2) {
                (CaseTag::H100, _) => (0, None),
                (_, 0) => (2, Some(0)),
                _ => (2, Some(2)),
            };
            branch(&mut p, a, u0, s0);
            if let Some(k) = s1 {
                branch(&mut p, b, u0, k);
            }
            let h = classify_h2(&p.graph(), [a, b], u0).unwrap();
            frame_for_h2(if variant >= 2 { h.swapped() } else { h }).unwrap()
        }
        _ => {
            let (k0, k1) = match (tag, variant % 3) {
                (CaseTag::T200, _) => (0, 0),
                (CaseTag::TWithHat, v) => (1, v),
                (_, 1) => (2, 2),
                _ => (2, 0),
            };
            let x = branch(&mut p, a, b, k0);
            let y = branch(&mut p, a, b, k1);
            let (x, y) = if variant >= 3 { (y, x) } else { (x, y) };
            frame_for_t2(classify_t2(&p.graph(), [a, b], x, y).unwrap())
        }
    };
    assert_eq!(frame.tag(), tag);
    frame.to_match().validate(&p.graph()).unwrap();
    Some((p, frame))
}

const TAGS: [CaseTag; 6] = [
    CaseTag::GoodHat,
    CaseTag::H100,
    CaseTag::H101OrH002,
    CaseTag::T200,
    CaseTag::TWithHat,
    CaseTag::TWithDoubleHat,
];

#[test]
fn every_case_recipe_extends_a_planted_frame() {
    let mut hits = [0usize; 6];
    for seed in 0..60u64 {
        let n = 2 + seed as usize % 12;
        let host = if n == 2 { Graph::complete(2) } else { random_ktree(&GenSpec::new(n, 2, seed)).unwrap().0 };
        let edges: Vec<_> = host.edges().collect();
        let (a, b) = edges[seed as usize % edges.len()];
        for (i, &tag) in TAGS.iter().enumerate() {
            for variant in 0..6 {
                for (x, y) in [(a, b), (b, a)] {
                    if let Some((p, f)) = plant_case(&host, x, y, tag, variant) {
                        apply_planted(&host, &p, &f);
                        hits[i] += 1;
                    }
                }
            }
        }
    }
    assert!(hits.iter().all(|&h| h > 0), "{hits:?}");
}

#[test]
fn pipeline_reaches_the_common_cases() {
    let mut seen = std::collections::BTreeSet::new();
    for seed in 0..200 {
        for bias in [0.1, 0.5, 0.9] {
            let (g, _) = random_ktree(&GenSpec { n: 60, k: 2, seed, attachment_bias: bias }).unwrap();
            let (c, tr) = color_2tree_traced(&g).unwrap();
            assert!(is_odd_coloring(&g, &c));
            seen.extend(tr.levels.into_iter().map(|l| l.case));
        }
    }
    for t in ["GOOD_HAT", "H100", "T200", "T_B>=1"] {
        assert!(seen.contains(t), "{t} not reached; saw {seen:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_2trees_are_odd_with_four(n in 3usize..150, seed in any::<u64>(), bias in 0.0f64..1.0) {
        let (g, _) = random_ktree(&GenSpec { n, k: 2, seed, attachment_bias: bias }).unwrap();
        let (c, tr) = color_2tree_traced(&g).unwrap();
        prop_assert!(c.colors().iter().all(|&x| (1..=4).contains(&x)));
        prop_assert!(verify_odd(&g, &c).unwrap().all_odd);
        let mut alive = vec![false; g.order()];
        for &v in &tr.base {
            alive[v] = true;
        }
        for l in &tr.levels {
            for &(v, _) in &l.assigned {
                alive[v] = true;
            }
            let mut view = Subgraph::full(&g);
            for v in (0..g.order()).filter(|&v| !alive[v]) {
                view.remove(v);
            }
            prop_assert!(l.config.validate(&view).is_ok());
        }
    }

    #[test]
    fn finder_output_validates(n in 4usize..80, seed in any::<u64>(), bias in 0.0f64..1.0) {
        let (g, _) = random_ktree(&GenSpec { n, k: 2, seed, attachment_bias: bias }).unwrap();
        let u = find_unavoidable_2tree(&g).unwrap();
        prop_assert!(u.to_match().validate(&g).is_ok());
        prop_assert!(!matches!(u.to_match().kind, ConfigKind::Hat | ConfigKind::DoubleHat));
    }

    #[test]
    fn near_odd_extension_on_a_colored_host(n in 3usize..30, seed in any::<u64>(), which in 0usize..3, flip in any::<bool>()) {
        let (host, _) = random_ktree(&GenSpec::new(n, 2, seed)).unwrap();
        let (a, b) = host.edges().nth(seed as usize % host.edge_count()).unwrap();
        let mut p = Plant::on(&host);
        let apex = match which {
            0 => p.ear2(a, b),
            1 => p.hat(a, b)[0],
            _ => p.double_hat(a, b)[0],
        };
        let g = p.graph();
        let s = classify2(&g, a, b, apex).unwrap().oriented(if flip { b } else { a });
        let mut col = PartialColoring::new(g.order());
        for (v, &c) in color_2tree(&host).unwrap().colors().iter().enumerate() {
            col.set(v, c);
        }
        extend_near_odd_2tree(&g, &s, &mut col).unwrap();
        let c = col.finish(4).unwrap();
        let root0 = s.root()[0];
        for v in (0..g.order()).filter(|&v| v != root0) {
            prop_assert!(odd_condition_witness(&g, &c, v).is_some(), "v={}", v);
        }
    }
}
