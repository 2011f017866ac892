use proptest::prelude::*;
use typegraph_core::catalogue::IRREDUCIBLE;
use typegraph_core::colorings::verify_proper;
use typegraph_core::graphs::{binomial, build_gb, build_typegraph, Graph};
use typegraph_core::homomorphisms::{hom_lower, hom_upper_map, verify_homomorphism};
use typegraph_core::oracle::{dsatur_coloring, exact_chromatic, greedy_coloring, typegraph_chromatic};
use typegraph_core::order_types::block_decompose;
use typegraph_core::{Budget, Error, GraphKind, OrderType};

const BUDGET: Budget = Budget { max_nodes: Some(300_000) };

fn t(s: &str) -> OrderType {
    s.parse().unwrap()
}

fn chi<V>(g: &Graph<V>) -> Option<usize> {
    match exact_chromatic(g, BUDGET) {
        Ok(r) => {
            assert!(verify_proper(g, &r.witness).unwrap().is_proper());
            assert_eq!(r.witness.palette_size(), r.chi);
            assert!(r.chi <= r.greedy_bound && r.clique_bound <= r.chi);
            Some(r.chi)
        }
        Err(Error::BudgetExceeded { .. }) => None,
        Err(e) => panic!("{e}"),
    }
}

#[test]
fn cliques() {
    for n in 1..=8u64 {
        assert_eq!(chi(&build_gb(1, n).unwrap()), Some(n as usize));
        assert_eq!(chi(&build_typegraph(n, &t("12")).unwrap()), Some(n as usize));
    }
}

#[test]
fn shift_graph_of_eight_needs_three_colours() {
    assert_eq!(chi(&build_typegraph(8, &t("132")).unwrap()), Some(3));
}

#[test]
fn monotone_transfer() {
    let mut compared = 0;
    for s in IRREDUCIBLE {
        let tau = t(s);
        let b = block_decompose(&tau).unwrap().count();
        for n in tau.width() as u64..=7 {
            let src = build_typegraph(n, &tau).unwrap();
            let Some(c_src) = typegraph_chromatic(n, &tau, BUDGET, &mut |_| false).ok().map(|r| r.1.chi) else {
                continue;
            };
            // upper map into G_{b−1}(n)
            let m = hom_upper_map(&tau, n).unwrap();
            let GraphKind::Auxiliary { b: tb, n: tn } = m.target else { unreachable!() };
            let dst = build_gb(tb, tn).unwrap();
            if dst.vertex_count() <= 2000 && verify_homomorphism(&src, &dst, &m).unwrap().is_homomorphism() {
                if let Some(c_dst) = chi(&dst) {
                    assert!(c_src <= c_dst, "{s} n={n}: {c_src} > {c_dst}");
                    compared += 1;
                }
            }
            // lower map from the shift-type source into G(nk, τ)
            let target_n = n * tau.width() as u64;
            if n >= b as u64 && binomial(target_n, tau.width()) <= 2000 {
                let m = hom_lower(&tau, n).unwrap();
                let lsrc = build_typegraph(n, m.source_type().unwrap()).unwrap();
                let ldst = build_typegraph(target_n, &tau).unwrap();
                assert!(verify_homomorphism(&lsrc, &ldst, &m).unwrap().is_homomorphism());
                let c_lsrc = typegraph_chromatic(n, m.source_type().unwrap(), BUDGET, &mut |_| false);
                let c_ldst = typegraph_chromatic(target_n, &tau, BUDGET, &mut |_| false);
                if let (Ok((_, a)), Ok((_, b))) = (c_lsrc, c_ldst) {
                    assert!(a.chi <= b.chi, "{s} n={n}");
                    compared += 1;
                }
            }
        }
    }
    assert!(compared > 20, "only {compared} comparisons");
}

fn random_graph() -> impl Strategy<Value = Graph<usize>> {
    (1usize..=12).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let m = pairs.len();
        proptest::sample::subsequence(pairs, 0..=m).prop_map(move |e| Graph::from_edge_list(n, &e).unwrap())
    })
}

proptest! {
    #[test]
    fn exact_is_bounded_by_heuristics(g in random_graph(), seed in any::<u64>()) {
        let r = exact_chromatic(&g, Budget::unlimited()).unwrap();
        prop_assert!(verify_proper(&g, &r.witness).unwrap().is_proper());
        prop_assert_eq!(r.witness.palette_size(), r.chi);
        prop_assert!(r.chi <= dsatur_coloring(&g).palette_size());
        let mut order: Vec<usize> = (0..g.vertex_count()).collect();
        order.rotate_left((seed as usize) % g.vertex_count().max(1));
        let greedy = greedy_coloring(&g, &order).unwrap();
        prop_assert!(verify_proper(&g, &greedy).unwrap().is_proper());
        prop_assert!(r.chi <= greedy.palette_size());
        // no proper colouring with fewer colours: brute force on small graphs
        if g.vertex_count() <= 7 && r.chi > 0 {
            prop_assert!(!colourable(&g, r.chi - 1));
        }
    }
}

fn colourable(g: &Graph<usize>, k: usize) -> bool {
    let n = g.vertex_count();
    let total = (k as u64).pow(n as u32);
    (0..total).any(|mut code| {
        let colors: Vec<u64> = (0..n).map(|_| { let c = code % k as u64; code /= k as u64; c }).collect();
        g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
    })
}
