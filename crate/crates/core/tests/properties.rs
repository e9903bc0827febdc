mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use chroma::bounds::{cycle_achromatic, size_upper_bound, Kind};
use chroma::circulant::{CirculantDigraph, CirculantGraph};
use chroma::coloring::{verify_digraph_coloring, verify_edge_coloring, verify_vertex_coloring, EdgeColoring, VertexColoring};
use chroma::numtheory::{classify_residues, odd_primes_up_to};
use chroma::planes::{DifferenceSet, EMBEDDED_TABLE};
use chroma::search::{exact_achromatic, exact_achromatic_index, SearchBudget};

use common::*;

#[test]
fn residues_match_euler_criterion() {
    for p in odd_primes_up_to(1000) {
        let r = classify_residues(p).unwrap();
        let pu = p as u64;
        let expected: Vec<usize> = (1..p).filter(|&x| is_residue(x as u64, pu)).collect();
        assert_eq!(r.qr, expected, "p={p}");
        let all: BTreeSet<usize> = r.qr.iter().chain(&r.nqr).copied().collect();
        assert_eq!(all, (1..p).collect(), "p={p}");
        if p % 4 == 1 {
            assert!(r.qr.iter().all(|&x| r.is_qr(p - x)));
            assert!(r.length_reps.iter().all(|&x| 2 * x < p));
            assert_eq!(r.length_reps.len(), (p - 1) / 4);
        } else {
            assert!(r.qr.iter().all(|&x| r.is_nqr(p - x)));
        }
    }
}

#[test]
fn residues_are_multiplicative() {
    for p in odd_primes_up_to(200) {
        let r = classify_residues(p).unwrap();
        for x in 1..p {
            for y in 1..p {
                let same = r.is_qr(x) == r.is_qr(y);
                assert_eq!(r.is_qr(x * y % p), same, "p={p} x={x} y={y}");
            }
        }
    }
}

#[test]
fn two_is_a_non_residue_exactly_for_3_and_5_mod_8() {
    for p in odd_primes_up_to(1000) {
        let r = classify_residues(p).unwrap();
        assert_eq!(r.is_nqr(2), p % 8 == 3 || p % 8 == 5, "p={p}");
    }
}

#[test]
fn size_bound_matches_counting() {
    for m in (0..2000).chain((0..1_000_000).step_by(997)).chain([999_999, 1_000_000]) {
        assert_eq!(size_upper_bound(m, Kind::Graph), size_bound_naive(m, false), "m={m}");
        assert_eq!(size_upper_bound(m, Kind::Digraph), size_bound_naive(m, true), "m={m}");
    }
}

#[test]
fn table_sets_pass_the_oracle() {
    for &(n, d) in EMBEDDED_TABLE {
        assert!(is_planar_difference_set(d, n));
        let ds = DifferenceSet::new(d, n).unwrap();
        for s in [1, 5, n - 1] {
            assert!(is_planar_difference_set(ds.shift(s).elements(), n));
        }
        assert!(is_planar_difference_set(ds.negate().elements(), n));
        assert_eq!(ds.table_form().elements(), d, "n={n}: table entries are already in table form");
    }
}

#[test]
fn cycle_index_matches_formula() {
    // a cycle is its own line graph
    let budget = SearchBudget::default();
    for n in 3..=12 {
        let g = CirculantGraph::new(n, [1]).unwrap();
        assert_eq!(exact_achromatic_index(&g, &budget).unwrap().value as u64, cycle_achromatic(n as u64), "n={n}");
    }
}

#[test]
fn searched_witnesses_pass_the_oracle() {
    let budget = SearchBudget::default();
    for (n, lengths) in [(6, vec![1, 2]), (7, vec![1, 3]), (9, vec![1, 3]), (10, vec![2, 5])] {
        let g = CirculantGraph::new(n, lengths.iter().copied()).unwrap();
        let r = exact_achromatic(&g, &budget).unwrap();
        assert_eq!(vertex_oracle(n, &lengths, r.witness.assignment()), (true, true));
        assert!(r.value as u64 <= size_upper_bound(g.edge_count() as u64, Kind::Graph));
    }
}

fn graph_instance() -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>)> {
    (3usize..=20)
        .prop_flat_map(|n| {
            let lengths = proptest::collection::btree_set(1..=n / 2, 1..=(n / 2).min(4));
            (Just(n), lengths, 1..=n)
        })
        .prop_flat_map(|(n, lengths, k)| {
            let colors = proptest::collection::vec(0..k, n);
            (Just(n), Just(lengths.into_iter().collect::<Vec<_>>()), colors)
        })
}

fn relabel(colors: &[usize]) -> Vec<usize> {
    // compact to 0..k in order of first appearance so every color is used
    let mut map = std::collections::BTreeMap::new();
    colors
        .iter()
        .map(|&c| {
            let next = map.len();
            *map.entry(c).or_insert(next)
        })
        .collect()
}

proptest! {
    #[test]
    fn adjacency_agrees_with_edges((n, lengths, _) in graph_instance()) {
        let g = CirculantGraph::new(n, lengths.iter().copied()).unwrap();
        let edges: BTreeSet<(usize, usize)> = g.edges().collect();
        prop_assert_eq!(edges.len(), g.edge_count());
        prop_assert_eq!(&edges, &all_edges(n, &lengths));
        for u in 0..n {
            prop_assert_eq!(g.neighbors(u).len(), g.degree());
            for v in 0..n {
                prop_assert_eq!(g.is_adjacent(u, v), adjacent(n, &lengths, u, v));
            }
        }
    }

    #[test]
    fn vertex_verifier_agrees_with_oracle((n, lengths, colors) in graph_instance()) {
        let colors = relabel(&colors);
        let g = CirculantGraph::new(n, lengths.iter().copied()).unwrap();
        let c = VertexColoring::from_assignment(colors.clone()).unwrap();
        let report = verify_vertex_coloring(&g, &c).unwrap();
        prop_assert_eq!((report.proper, report.complete), vertex_oracle(n, &lengths, &colors));
        prop_assert_eq!(report.proper, report.proper_violations.is_empty());
        prop_assert_eq!(report.complete, report.missing_pairs.is_empty());
    }

    #[test]
    fn digraph_verifier_agrees_with_oracle(
        (n, lengths, colors) in (2usize..=14).prop_flat_map(|n| {
            (Just(n), proptest::collection::btree_set(1..n, 1..=3.min(n - 1)), proptest::collection::vec(0..4usize, n))
        })
    ) {
        let colors = relabel(&colors);
        let lengths: Vec<usize> = lengths.into_iter().collect();
        let d = CirculantDigraph::new(n, lengths.iter().copied()).unwrap();
        let report = verify_digraph_coloring(&d, &VertexColoring::from_assignment(colors.clone()).unwrap()).unwrap();
        prop_assert_eq!((report.acyclic == Some(true), report.complete), digraph_oracle(n, &lengths, &colors));
        if let Some(cycle) = &report.monochromatic_cycle_witness {
            let c = colors[cycle[0]];
            for (i, &u) in cycle.iter().enumerate() {
                let v = cycle[(i + 1) % cycle.len()];
                prop_assert!(d.has_arc(u, v));
                prop_assert_eq!(colors[u], c);
            }
        }
    }

    #[test]
    fn edge_verifier_agrees_with_oracle(
        (n, lengths, seed) in (3usize..=12).prop_flat_map(|n| {
            (Just(n), proptest::collection::btree_set(1..=n / 2, 1..=2), proptest::collection::vec(0..6usize, 40))
        })
    ) {
        let lengths: Vec<usize> = lengths.into_iter().collect();
        let g = CirculantGraph::new(n, lengths.iter().copied()).unwrap();
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let raw: Vec<usize> = edges.iter().enumerate().map(|(i, _)| seed[i % seed.len()]).collect();
        let colors = relabel(&raw);
        let k = colors.iter().max().unwrap() + 1;
        let c = EdgeColoring::new(k, edges.iter().copied().zip(colors.iter().copied())).unwrap();
        let report = verify_edge_coloring(&g, &c).unwrap();
        prop_assert_eq!((report.proper, report.complete), edge_oracle(n, &lengths, c.assignment()));
    }

    #[test]
    fn merging_never_breaks_completeness((n, lengths, colors) in graph_instance(), a in 0usize..20, b in 0usize..20) {
        let colors = relabel(&colors);
        let g = CirculantGraph::new(n, lengths.iter().copied()).unwrap();
        let c = VertexColoring::from_assignment(colors).unwrap();
        prop_assume!(c.k() >= 2);
        let (a, b) = (a % c.k(), b % c.k());
        prop_assume!(a != b);
        let before = verify_vertex_coloring(&g, &c).unwrap();
        let merged = c.merge_classes(a, b);
        prop_assert_eq!(merged.k(), c.k() - 1);
        let after = verify_vertex_coloring(&g, &merged).unwrap();
        prop_assert!(!before.complete || after.complete);
        prop_assert!(after.missing_pairs.len() <= before.missing_pairs.len());
    }

    #[test]
    fn size_bound_is_tight(m in 0u64..10_000_000) {
        let k = size_upper_bound(m, Kind::Graph);
        prop_assert!(k * (k - 1) / 2 <= m && (k + 1) * k / 2 > m);
        let k = size_upper_bound(m, Kind::Digraph);
        prop_assert!(k * (k - 1) <= m && (k + 1) * k > m);
    }
}
