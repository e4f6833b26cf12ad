use proptest::prelude::*;
use tangle_core::feasibility::connect_wang;
use tangle_core::general::SublistSpace;
use tangle_core::{
    adjacency, apply_list, fibonacci, is_adjacent, is_feasible, list_of_tangle, solve_general, supported_involutions,
    Permutation, SwapList,
};

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|w| Permutation::from_wires(w).unwrap())
}

fn list(n: usize, max: u32) -> impl Strategy<Value = SwapList> {
    let m = n * (n - 1) / 2;
    proptest::collection::vec(0..=max, m).prop_map(move |counts| {
        let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        SwapList::from_counts(n, pairs.zip(counts).map(|((i, j), c)| (i, j, c))).unwrap()
    })
}

/// Number of ways to choose a non-empty set of pairwise disjoint neighbouring pairs.
fn count_matchings(n: usize) -> u64 {
    let mut total = 0;
    for mask in 1u32..(1 << n.saturating_sub(1)) {
        if mask & (mask >> 1) == 0 {
            total += 1;
        }
    }
    total
}

#[test]
fn support_count_small() {
    for n in 1..=10 {
        assert_eq!(count_matchings(n), fibonacci(n as u32 + 1) - 1);
        assert_eq!(supported_involutions(&Permutation::identity(n)).len() as u64, count_matchings(n));
    }
}

proptest! {
    #[test]
    fn support_count_is_independent_of_order(pi in (1usize..=10).prop_flat_map(permutation)) {
        let n = pi.n();
        let eps = supported_involutions(&pi);
        prop_assert_eq!(eps.len() as u64, fibonacci(n as u32 + 1) - 1);
        for e in &eps {
            let sigma = pi.apply(e).unwrap();
            prop_assert_eq!(adjacency(&pi, &sigma), Some(e.clone()));
        }
    }

    #[test]
    fn adjacency_is_symmetric_and_irreflexive(
        (a, b) in (2usize..=7).prop_flat_map(|n| (permutation(n), permutation(n)))
    ) {
        prop_assert!(!is_adjacent(&a, &a));
        prop_assert_eq!(is_adjacent(&a, &b), is_adjacent(&b, &a));
    }

    #[test]
    fn consistency_only_sees_parity(pi in permutation(5), l in list(5, 5)) {
        let raw = apply_list(&pi, &l).unwrap();
        prop_assert_eq!(&raw, &apply_list(&pi, &l.parity_reduce()).unwrap());
        let capped = apply_list(&pi, &l.cap_reduce()).unwrap();
        prop_assert_eq!(raw, capped);
    }

    #[test]
    fn wang_tangle_is_simple_and_short((a, b) in (1usize..=9).prop_flat_map(|n| (permutation(n), permutation(n)))) {
        let t = connect_wang(&a, &b).unwrap();
        prop_assert!(t.height() <= a.n() + 1);
        prop_assert!(t.is_simple());
        prop_assert_eq!(t.first(), &a);
        prop_assert_eq!(t.last(), &b);
        prop_assert_eq!(apply_list(t.first(), &list_of_tangle(&t)).unwrap(), t.last().positions().to_vec());
    }

    #[test]
    fn general_output_respects_bounds(l in (3usize..=5).prop_flat_map(|n| list(n, 2))) {
        let report = solve_general(&l);
        prop_assert_eq!(report.is_feasible(), is_feasible(&l));
        let lambda = SublistSpace::new(&l).unwrap().size() as u64;
        prop_assert!(report.states_explored <= lambda);
        if let Some(t) = report.tangle {
            let h = t.height() as u64 - 1;
            let n = l.n() as u64;
            prop_assert!(2 * l.length() <= n * h);
            prop_assert!(h <= l.length());
            prop_assert_eq!(list_of_tangle(&t), l.clone());
            prop_assert_eq!(apply_list(t.first(), &l).unwrap(), t.last().positions().to_vec());
        }
    }

    #[test]
    fn sublist_indexing_round_trips(l in list(4, 3)) {
        let space = SublistSpace::new(&l).unwrap();
        prop_assert_eq!(space.to_list(space.full_index()), l.clone());
        prop_assert!(space.to_list(0).is_zero());
        prop_assert_eq!(Some(space.size() as u128), l.sublist_count());
    }
}
