use typegraph_core::catalogue::{IRREDUCIBLE, REDUCIBLE};
use typegraph_core::colorings::{
    color_aux, color_g1, color_g2, color_gb, color_gb_graph, color_shift_graph, color_typegraph, gb_part, phi_a,
    verify_proper, GbPart,
};
use typegraph_core::dyadic::ceil_log2;
use typegraph_core::graphs::{adjacent_gb, build_gb, build_typegraph, enumerate_vb};
use typegraph_core::{Coloring, GbVertex, OrderType};

fn t(s: &str) -> OrderType {
    s.parse().unwrap()
}

fn palette_of_aux(b: usize, n: u64) -> usize {
    let tokens = enumerate_vb(b, n).map(|v| color_aux(b, n, &v).unwrap()).collect();
    Coloring::from_tokens(tokens).palette_size()
}

#[test]
fn clique_colouring_uses_n_colours() {
    for n in 1..=8u64 {
        let g = build_gb(1, n).unwrap();
        let tokens = g.vertices().iter().map(|v| color_g1(v).unwrap()).collect();
        let c = Coloring::from_tokens(tokens);
        assert!(verify_proper(&g, &c).unwrap().is_proper());
        assert_eq!(c.palette_size() as u64, n);
    }
}

#[test]
fn g2_colouring_is_proper_within_2k_minus_1() {
    for k in 1..=5u32 {
        let g = build_gb(2, 1 << k).unwrap();
        let tokens = g.vertices().iter().map(|v| color_g2(v, k).unwrap()).collect();
        let c = Coloring::from_tokens(tokens);
        assert!(verify_proper(&g, &c).unwrap().is_proper(), "k={k}");
        assert!(c.palette_size() <= 2 * k as usize - 1, "k={k}: {}", c.palette_size());
    }
}

#[test]
fn aux_colourings_are_proper_for_all_sizes() {
    for (b, n) in [(1usize, 7u64), (2, 5), (2, 11), (2, 17), (3, 5), (3, 9), (4, 7)] {
        let g = build_gb(b, n).unwrap();
        let c = color_gb_graph(&g).unwrap();
        assert!(verify_proper(&g, &c).unwrap().is_proper(), "b={b} n={n}");
    }
}

#[test]
fn gb_recursion_is_proper_and_within_the_bound() {
    let b = 3;
    for n in 3..=4u32 {
        let g = build_gb(b, 1 << n).unwrap();
        let tokens = g.vertices().iter().map(|v| color_gb(b, n, v).unwrap()).collect();
        let c = Coloring::from_tokens(tokens);
        assert!(verify_proper(&g, &c).unwrap().is_proper(), "n={n}");
        let bound = (2 * b - 6) + (1 << (2 * b - 3)) * palette_of_aux(b - 1, n as u64);
        assert!(c.palette_size() <= bound, "n={n}: {} > {bound}", c.palette_size());
    }
}

/// Within one signature class of part A, edges map to edges under `φ_A`, and
/// vertices whose image leaves `V_{b−1}(n)` have no neighbours.
fn check_classes(b: usize, n: u32) {
    let top = 1u64 << n;
    let a: Vec<GbVertex> = enumerate_vb(b, top).filter(|v| gb_part(b, v).unwrap() == GbPart::A).collect();
    let sig = |v: &GbVertex| typegraph_core::colorings::class_signature(b, v).unwrap();
    let sigs: Vec<Vec<bool>> = a.iter().map(sig).collect();
    let images: Vec<GbVertex> = a.iter().map(|v| phi_a(b, v).unwrap()).collect();
    let mut edges = 0;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if sigs[i] != sigs[j] || !adjacent_gb(&a[i], &a[j]).unwrap() {
                continue;
            }
            edges += 1;
            let (p, q) = (&images[i], &images[j]);
            assert!(p.is_in_v(n as u64) && q.is_in_v(n as u64), "sentinel vertex with a class neighbour: {:?} {:?}", a[i], a[j]);
            assert!(adjacent_gb(p, q).unwrap(), "{:?} {:?}", a[i], a[j]);
        }
    }
    assert!(edges > 0);
}

#[test]
fn signature_classes_map_homomorphically() {
    check_classes(3, 3);
    check_classes(3, 4);
    check_classes(4, 4);
}

#[test]
fn b_parts_are_independent() {
    for (b, top) in [(4usize, 12u64), (5, 10)] {
        let vs: Vec<GbVertex> = enumerate_vb(b, top).collect();
        for i in 3..=2 * b - 4 {
            let part: Vec<&GbVertex> = vs.iter().filter(|v| gb_part(b, v).unwrap() == GbPart::B(i)).collect();
            assert!(!part.is_empty(), "b={b} B_{i} empty");
            for x in 0..part.len() {
                for y in x + 1..part.len() {
                    assert!(!adjacent_gb(part[x], part[y]).unwrap(), "b={b} B_{i}");
                }
            }
        }
    }
}

#[test]
fn partition_is_exhaustive() {
    let b = 4;
    for v in enumerate_vb(b, 16) {
        let part = gb_part(b, &v).unwrap();
        if let GbPart::B(i) = part {
            assert!((3..=2 * b - 4).contains(&i));
        }
    }
}

#[test]
fn pipeline_colourings_are_proper() {
    for s in IRREDUCIBLE.iter().chain(REDUCIBLE) {
        let tau = t(s);
        for n in tau.width() as u64..=8 {
            let g = build_typegraph(n, &tau).unwrap();
            let c = color_typegraph(n, &tau).unwrap();
            assert!(verify_proper(&g, &c).unwrap().is_proper(), "{s} n={n}");
        }
    }
    let g = build_typegraph(16, &t("132")).unwrap();
    let c = color_typegraph(16, &t("132")).unwrap();
    assert!(verify_proper(&g, &c).unwrap().is_proper());
    assert!(c.palette_size() <= 7);
    let c = color_typegraph(6, &t("12")).unwrap();
    assert_eq!(c.palette_size(), 6);
}

#[test]
fn pipeline_palette_for_the_shift_graph() {
    for n in 2..=20u64 {
        let c = color_typegraph(n, &t("132")).unwrap();
        assert!(c.palette_size() <= 2 * ceil_log2(n).max(1) as usize - 1, "n={n}");
    }
}

#[test]
fn direct_shift_colouring_is_optimal_size() {
    for n in 2..=24u64 {
        let g = build_typegraph(n, &t("132")).unwrap();
        let c = color_shift_graph(n);
        assert!(verify_proper(&g, &c).unwrap().is_proper());
        assert_eq!(c.palette_size(), ceil_log2(n) as usize);
    }
}
