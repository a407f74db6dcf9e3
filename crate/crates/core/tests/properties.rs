mod common;

use certcheck::io::{parse_triple_parts, write_graph, write_witness, Problem, Witness};
use certcheck::matching::{weight, Label};
use certcheck::oracles::{full_weight, oracle_connected, oracle_gcd, oracle_max_matching_size, oracle_mu};
use certcheck::solvers::{solve_connectivity, solve_gcd, solve_max_matching, solve_shortest_paths};
use certcheck::{
    check, check_gcd, ConnectivityTriple, ExtNat, GcdTriple, Graph, MatchingTriple, Nat, SpTriple, Triple, Verdict,
};
use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_multigraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec((0..n, 0..n), 0..=max_m).prop_map(move |es| Graph::from_pairs(n, &es))
    })
}

fn arb_simple(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>(), 0.0..0.8f64)
        .prop_map(|(n, seed, p)| random_simple_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, p))
}

fn accepted(t: Triple) -> bool {
    check(&t) == Ok(Verdict::Accept)
}

proptest! {
    #[test]
    fn connectivity_solver_is_certified(g in arb_multigraph(9, 14)) {
        let r = solve_connectivity(&g).unwrap();
        prop_assert_eq!(r.output, oracle_connected(&g));
        let t = Triple::Connectivity(ConnectivityTriple { graph: g, connected: r.output, witness: r.witness });
        prop_assert!(accepted(t));
    }

    #[test]
    fn dijkstra_matches_floyd_warshall(g in arb_multigraph(9, 20), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cost = nats((0..g.num_edges()).map(|_| rand::Rng::gen_range(&mut rng, 0..4)));
        let s = rand::Rng::gen_range(&mut rng, 0..g.num_verts);
        let r = solve_shortest_paths(&g, &cost, s).unwrap();
        prop_assert_eq!(&r.output, &oracle_mu(&g, &cost, s));
        let t = Triple::ShortestPaths(SpTriple { graph: g, witness: r.witness });
        prop_assert!(accepted(t));
    }

    #[test]
    fn blossom_matches_enumeration(g in arb_simple(8)) {
        prop_assume!(g.num_edges() <= 20);
        let r = solve_max_matching(&g).unwrap();
        prop_assert_eq!(r.output.len(), oracle_max_matching_size(&g).unwrap());
        let t = Triple::Matching(MatchingTriple { graph: g, witness: r.witness });
        prop_assert!(accepted(t));
    }

    #[test]
    fn cover_weight_equals_recursive_definition(labels in proptest::collection::vec(0usize..8, 1..8)) {
        let n = labels.len();
        let labels: Vec<Label> = labels.into_iter().map(|l| l % n).collect();
        let g = Graph::new(n, vec![]);
        let direct = labels.iter().filter(|&&l| l == 1).count()
            + (2..n).map(|c| labels.iter().filter(|&&l| l == c).count() / 2).sum::<usize>();
        prop_assert_eq!(weight(&g, &labels), direct);
        prop_assert_eq!(full_weight(&labels, n, n.saturating_sub(1)), direct);
    }

    #[test]
    fn shortest_distances_satisfy_the_triangle_inequality(g in arb_multigraph(7, 14), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cost = nats((0..g.num_edges()).map(|_| rand::Rng::gen_range(&mut rng, 0..6)));
        let mu = oracle_mu(&g, &cost, 0);
        prop_assert_eq!(&mu[0], &ExtNat::zero());
        for (i, e) in g.edges.iter().enumerate() {
            prop_assert!(mu[e.trg] <= mu[e.src].plus(&cost[i]));
        }
    }

    #[test]
    fn accepted_gcd_witness_is_the_gcd(a in 0u64..1_000_000, b in 0u64..1_000_000, s in -5i64..5, t in -5i64..5) {
        prop_assume!(a != 0 || b != 0);
        let g = BigInt::from(a) * s + BigInt::from(b) * t;
        let triple = GcdTriple::new(a, b, g.clone(), s, t);
        if check_gcd(&triple).unwrap().is_accept() {
            prop_assert_eq!(g, oracle_gcd(&BigInt::from(a), &BigInt::from(b)));
        }
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        let solved = GcdTriple::from_solution(&a, &b, solve_gcd(&a, &b).unwrap());
        prop_assert_eq!(check_gcd(&solved), Ok(Verdict::Accept));
    }

    #[test]
    fn written_witnesses_parse_back_and_still_check(g in arb_multigraph(7, 12), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cost = nats((0..g.num_edges()).map(|_| rand::Rng::gen_range(&mut rng, 0..1000)));
        let graph_text = write_graph(&g, Some(&cost));

        let r = solve_connectivity(&g).unwrap();
        let t = parse_triple_parts(Problem::Connectivity, &graph_text, &write_witness(&Witness::Connectivity(r.witness))).unwrap();
        prop_assert!(accepted(t));

        let r = solve_shortest_paths(&g, &cost, g.num_verts - 1).unwrap();
        let t = parse_triple_parts(Problem::ShortestPaths, &graph_text, &write_witness(&Witness::ShortestPaths(r.witness))).unwrap();
        prop_assert!(accepted(t));
    }
}

#[test]
fn divisor_spot_checks() {
    for (a, b, g) in [
        (12u64, 18, 6),
        (17, 5, 1),
        (0, 9, 9),
        (9, 0, 9),
        (1 << 40, 1 << 20, 1 << 20),
        (1, 1, 1),
    ] {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        let t = GcdTriple::from_solution(&a, &b, solve_gcd(&a, &b).unwrap());
        assert_eq!(t.g, BigInt::from(g));
        assert_eq!(check_gcd(&t), Ok(Verdict::Accept));
        // a common divisor that is not the greatest has no Bezout coefficients
        if g % 2 == 0 {
            let half = GcdTriple {
                g: BigInt::from(g / 2),
                ..t.clone()
            };
            assert!(!check_gcd(&half).unwrap().is_accept());
        }
    }
}

#[test]
fn huge_costs_stay_exact() {
    let big: Nat = Nat::from(u64::MAX) * Nat::from(u64::MAX);
    let g = Graph::from_pairs(3, &[(0, 1), (1, 2), (0, 2)]);
    let cost = vec![big.clone(), big.clone(), &big * 2u32 + 1u32];
    let r = solve_shortest_paths(&g, &cost, 0).unwrap();
    assert_eq!(r.output[2], ExtNat::Finite(&big * 2u32));
    assert_eq!(r.output, oracle_mu(&g, &cost, 0));
    assert!(accepted(Triple::ShortestPaths(SpTriple {
        graph: g,
        witness: r.witness
    })));
}
