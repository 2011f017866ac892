use typegraph_core::catalogue::{IRREDUCIBLE, REDUCIBLE};
use typegraph_core::graphs::{build_typegraph, GbSpec, TypeGraphSpec};
use typegraph_core::homomorphisms::{
    factor_block_counts, hom_lower, hom_project_map, hom_reducible, hom_upper_map, verify_homomorphism,
};
use typegraph_core::order_types::block_decompose;
use typegraph_core::realizations::{block_overlap_holds, irreducible_overlap_holds, order_type_of};
use typegraph_core::{GraphKind, OrderType, Polarity};

fn t(s: &str) -> OrderType {
    s.parse().unwrap()
}

#[test]
fn lower_maps_are_homomorphisms() {
    for s in IRREDUCIBLE {
        let tau = t(s);
        let b = block_decompose(&tau).unwrap().count() as u64;
        for n in b..=8 {
            let m = hom_lower(&tau, n).unwrap();
            let src = build_typegraph(n, m.source_type().unwrap()).unwrap();
            let dst = TypeGraphSpec { n: n * tau.width() as u64, tau: tau.clone() };
            let r = verify_homomorphism(&src, &dst, &m).unwrap();
            assert!(r.is_homomorphism(), "{s} n={n}: {:?}", r.violations);
            assert_eq!(r.edges_checked, src.edge_count());
            for (_, img) in &m.pairs {
                assert_eq!(img.len(), tau.width());
            }
        }
    }
}

#[test]
fn upper_maps_are_homomorphisms() {
    for s in IRREDUCIBLE {
        let tau = t(s);
        for n in tau.width() as u64..=10 {
            let m = hom_upper_map(&tau, n).unwrap();
            let src = build_typegraph(n, &tau).unwrap();
            let GraphKind::Auxiliary { b, n: tn } = m.target else { panic!("target kind") };
            let r = verify_homomorphism(&src, &GbSpec { b, n: tn }, &m).unwrap();
            assert!(r.is_homomorphism(), "{s} n={n}: {:?}", r.violations);
        }
    }
}

#[test]
fn projections_and_stitched_maps_are_homomorphisms() {
    for s in REDUCIBLE {
        let tau = t(s);
        let factors = tau.factorize();
        let (_, b_star) = factor_block_counts(&tau).unwrap();
        for n in tau.width() as u64..=6 {
            let src = build_typegraph(n, &tau).unwrap();
            for i in 1..=factors.len() {
                let m = hom_project_map(&tau, i, n).unwrap();
                if factors[i - 1].is_trivial() {
                    continue;
                }
                let dst = TypeGraphSpec { n, tau: factors[i - 1].clone() };
                let r = verify_homomorphism(&src, &dst, &m).unwrap();
                assert!(r.is_homomorphism(), "{s} factor {i} n={n}");
            }
            if n >= b_star as u64 {
                let m = hom_reducible(&tau, n).unwrap();
                let src = build_typegraph(n, m.source_type().unwrap()).unwrap();
                let dst = TypeGraphSpec { n: n * tau.width() as u64, tau: tau.clone() };
                let r = verify_homomorphism(&src, &dst, &m).unwrap();
                assert!(r.is_homomorphism(), "{s} n={n}: {:?}", r.violations);
            }
        }
    }
}

#[test]
fn structure_lemmas_hold_on_every_edge() {
    for s in IRREDUCIBLE {
        let tau = t(s);
        let dec = block_decompose(&tau).unwrap();
        let primary = dec.polarity() == Polarity::Primary;
        for n in tau.width() as u64..=10 {
            let g = build_typegraph(n, &tau).unwrap();
            for &(u, v) in g.edges() {
                let (mut x, mut y) = (&g.vertices()[u], &g.vertices()[v]);
                if order_type_of(x, y) != tau {
                    core::mem::swap(&mut x, &mut y);
                }
                if !primary {
                    core::mem::swap(&mut x, &mut y);
                }
                assert!(irreducible_overlap_holds(x, y), "{s} {x:?} {y:?}");
                assert!(block_overlap_holds(&dec, x, y), "{s} {x:?} {y:?}");
            }
        }
    }
}
