mod common;

use proptest::prelude::*;

use common::{partition_exists, partition_ok, s1_reference, to_bools, Adj};
use degpart_core::feasibility::{f_core, is_feasible_pair, is_good, is_meager, is_nice, Threshold};
use degpart_core::io::{parse_instance, serialize_instance, Instance};
use degpart_core::patterns::{classify_book_b3, classify_book_b3_loose, classify_k23, s1_vertices};
use degpart_core::solver::{delta_move, delta_swap, local_search, move_bound, weight, SearchOptions};
use degpart_core::{solve, DemandPair, Graph, HVector, Partition, PatternKind, Side, SolveConfig, Status, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn subset(n: usize) -> impl Strategy<Value = VertexSet> {
    proptest::collection::vec(any::<bool>(), n)
        .prop_map(move |bits| VertexSet::from_ids(n, (0..n).filter(|&u| bits[u])).unwrap())
}

fn values(n: usize, max: u64) -> impl Strategy<Value = Vec<u64>> {
    proptest::collection::vec(0..=max, n)
}

/// Graph, a subset of its vertices, a threshold vector.
fn core_case(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet, Vec<u64>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), subset(n), values(n, 4))
    })
}

fn demand_case(max_n: usize) -> impl Strategy<Value = (Graph, DemandPair)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), values(n, 3), values(n, 3)).prop_map(|(g, a, b)| (g, DemandPair::new(a, b).unwrap()))
    })
}

fn core_is_valid(g: &Graph, x: &VertexSet, f: &[u64], core: &VertexSet) -> bool {
    let adj = Adj::of(g);
    let members = to_bools(core);
    core.is_subset(x) && core.iter().all(|u| adj.deg_in(u, &members) >= f[u])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn core_is_largest_valid_subset((g, x, f) in core_case(10)) {
        let core = f_core(&g, &x, &Threshold(f.clone()));
        prop_assert!(core_is_valid(&g, &x, &f, &core));
        // every valid subset lies inside the core
        let members: Vec<usize> = x.iter().collect();
        for mask in 1u32..1 << members.len() {
            let y = VertexSet::from_ids(g.n(), members.iter().enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &u)| u)).unwrap();
            if core_is_valid(&g, &x, &f, &y) {
                prop_assert!(y.is_subset(&core));
            }
        }
    }

    #[test]
    fn core_is_idempotent_and_monotone((g, x, f) in core_case(12), extra in any::<u64>()) {
        let t = Threshold(f.clone());
        let core = f_core(&g, &x, &t);
        prop_assert_eq!(f_core(&g, &core, &t), core.clone());
        let bigger = x.union(&VertexSet::from_mask(g.n(), extra & ((1 << g.n()) - 1)));
        prop_assert!(core.is_subset(&f_core(&g, &bigger, &t)));
        prop_assert!(f_core(&g, &x, &t.plus_one()).is_subset(&core));
    }

    #[test]
    fn meager_iff_every_subset_has_a_bad_vertex(
        (g, x, a, b, h) in graph(9).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), subset(n), values(n, 3), values(n, 3), proptest::collection::vec(any::<bool>(), n))
        }),
        first in any::<bool>(),
    ) {
        prop_assume!(!x.is_empty());
        let n = g.n();
        let d = DemandPair::new(a.clone(), b.clone()).unwrap();
        let hv = HVector::from_set(&VertexSet::from_ids(n, (0..n).filter(|&u| h[u])).unwrap());
        let side = if first { Side::One } else { Side::Two };
        let adj = Adj::of(&g);
        let bad = |u: usize, members: &[bool]| {
            let deg = adj.deg_in(u, members) as i64;
            if first { deg <= a[u] as i64 } else { deg < b[u] as i64 + i64::from(h[u]) }
        };
        let members: Vec<usize> = x.iter().collect();
        let mut every_subset_bad = true;
        for mask in 1u32..1 << members.len() {
            let mut sub = vec![false; n];
            for (i, &u) in members.iter().enumerate() {
                sub[u] = mask >> i & 1 == 1;
            }
            if !(0..n).any(|u| sub[u] && bad(u, &sub)) {
                every_subset_bad = false;
                break;
            }
        }
        prop_assert_eq!(is_meager(&g, &x, side, &d, &hv).unwrap(), every_subset_bad);
    }

    #[test]
    fn good_sides_are_nice((g, d) in demand_case(10), bits in any::<u64>()) {
        let x = VertexSet::from_mask(g.n(), bits & ((1 << g.n()) - 1));
        prop_assume!(!x.is_empty());
        let h = HVector::zeros(g.n());
        if is_good(&g, &x, Side::One, &d, &h).unwrap() {
            prop_assert!(is_nice(&g, &x, &d.a_threshold().plus_one()).unwrap());
        }
        if is_good(&g, &x, Side::Two, &d, &h).unwrap() {
            prop_assert!(is_nice(&g, &x, &d.b_threshold()).unwrap());
        }
    }

    #[test]
    fn detectors_are_monotone_under_edge_addition(g in graph(8), u in 0usize..8, v in 0usize..8) {
        let (u, v) = (u % g.n(), v % g.n());
        prop_assume!(u != v);
        let h = g.with_edge(u, v).unwrap();
        prop_assert!(classify_book_b3(&g).is_subset(&classify_book_b3(&h)));
        prop_assert!(classify_book_b3_loose(&g).is_subset(&classify_book_b3_loose(&h)));
        prop_assert!(classify_k23(&g).is_subset(&classify_k23(&h)));
        prop_assert!(s1_vertices(&g).is_subset(&s1_vertices(&h)));
    }

    #[test]
    fn book_cover_lies_in_k23_cover_and_loose_cover(g in graph(9)) {
        let strict = classify_book_b3(&g);
        prop_assert!(strict.is_subset(&classify_k23(&g)));
        prop_assert!(strict.is_subset(&classify_book_b3_loose(&g)));
    }

    #[test]
    fn s1_matches_reference(g in graph(9)) {
        prop_assert_eq!(to_bools(&s1_vertices(&g)), s1_reference(&g));
    }

    #[test]
    fn deltas_match_recomputed_weight((g, d) in demand_case(10), bits in any::<u64>(), pick in any::<usize>()) {
        let n = g.n();
        let p = Partition::from_mask(n, bits & ((1 << n) - 1));
        let before = weight(&g, &d, &p).unwrap();
        let u = pick % n;
        let to = if p.x1().contains(u) { Side::Two } else { Side::One };
        let moved = Partition::from_first(if p.x1().contains(u) { p.x1().without(u) } else { p.x1().with(u) });
        prop_assert_eq!(delta_move(&g, &d, &p, u, to).unwrap(), weight(&g, &d, &moved).unwrap() - before);
        if let (Some(x), Some(y)) = (p.x1().iter().nth(pick % n), p.x2().iter().nth(pick / 7 % n)) {
            let swapped = Partition::from_first(p.x1().without(x).with(y));
            prop_assert_eq!(delta_swap(&g, &d, &p, x, y).unwrap(), weight(&g, &d, &swapped).unwrap() - before);
        }
    }

    #[test]
    fn local_search_respects_move_bound((g, d) in demand_case(10), bits in any::<u64>(), hbits in any::<u64>()) {
        let n = g.n();
        let init = Partition::from_mask(n, bits & ((1 << n) - 1));
        let h = HVector::from_set(&VertexSet::from_mask(n, hbits & ((1 << n) - 1)));
        let opts = SearchOptions { budget: usize::MAX, neutral_swaps: 0 };
        let state = local_search(&g, &d, &h, init, &opts);
        prop_assert!(state.moves() <= move_bound(&g, &d));
        prop_assert_eq!(state.omega, weight(&g, &d, &state.partition).unwrap());
        if let Some((a, b)) = &state.pair {
            prop_assert!(is_feasible_pair(&g, a, b, &d));
        }
    }

    #[test]
    fn solve_agrees_with_reference((g, d) in demand_case(9), seed in any::<u64>(), k23 in any::<bool>()) {
        let kind = if k23 { PatternKind::K23 } else { PatternKind::BookB3 };
        let o = solve(&g, &d, kind, &SolveConfig { seed, ..SolveConfig::default() }).unwrap();
        let exists = partition_exists(&g, &d);
        match o.status {
            Status::Found => {
                prop_assert!(exists);
                prop_assert!(partition_ok(&Adj::of(&g), &to_bools(o.partition.unwrap().x1()), &d));
            }
            Status::NoneExists => prop_assert!(!exists),
            Status::Unknown => prop_assert!(false, "oracle fallback should decide n <= 9"),
        }
    }

    #[test]
    fn instances_round_trip(
        (g, d) in demand_case(12),
        labels in proptest::collection::vec("[a-z][a-z0-9_]{0,5}", 12),
        relabel in any::<bool>(),
    ) {
        let mut inst = Instance::new(g, d).unwrap();
        let mut distinct = labels.clone();
        distinct.sort();
        distinct.dedup();
        if relabel && distinct.len() == labels.len() {
            inst.labels = labels[..inst.graph.n()].to_vec();
        }
        let text = serialize_instance(&inst);
        let back = parse_instance(&text, None).unwrap();
        prop_assert_eq!(serialize_instance(&back), text);
        prop_assert_eq!(back, inst);
    }
}

#[test]
fn cycles_have_empty_s1() {
    for k in 3..=12 {
        assert!(s1_vertices(&Graph::cycle(k)).is_empty(), "C{k}");
    }
}
