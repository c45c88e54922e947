use orbitlattice::{
    downset, intersect, leq, maximal_elements, meet, orbit_dim, rank_matrix, rs, rs_inverse, sigma_of_rank_matrix,
    sigma_of_tableau, tableau_of_sigma, validate, Involution, Permutation, TwoColumnTableau,
};
use proptest::prelude::*;

/// A random involution of `{1..n}` built from a shuffled list of positions.
fn involution(max_n: usize) -> impl Strategy<Value = Involution> {
    (1..=max_n).prop_flat_map(|n| {
        (Just(n), Just((1..=n).collect::<Vec<_>>()).prop_shuffle(), 0..=n / 2).prop_map(|(n, order, k)| {
            let cycles = (0..k).map(|s| (order[2 * s], order[2 * s + 1])).collect();
            Involution::new(n, cycles).unwrap()
        })
    })
}

fn pair(max_n: usize) -> impl Strategy<Value = (Involution, Involution)> {
    (1..=max_n).prop_flat_map(|n| (involution_of(n), involution_of(n)))
}

fn involution_of(n: usize) -> impl Strategy<Value = Involution> {
    (Just((1..=n).collect::<Vec<_>>()).prop_shuffle(), 0..=n / 2).prop_map(move |(order, k)| {
        let cycles = (0..k).map(|s| (order[2 * s], order[2 * s + 1])).collect();
        Involution::new(n, cycles).unwrap()
    })
}

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_matrix_is_valid_and_invertible(s in involution(14)) {
        let r = rank_matrix(&s);
        prop_assert!(validate(&r).valid);
        prop_assert_eq!(sigma_of_rank_matrix(&r).unwrap(), s);
    }

    #[test]
    fn text_and_json_round_trip(s in involution(14)) {
        prop_assert_eq!(Involution::parse(&s.to_string(), Some(s.n())).unwrap(), s.clone());
        let json = serde_json::to_string(&s).unwrap();
        prop_assert_eq!(serde_json::from_str::<Involution>(&json).unwrap(), s);
    }

    #[test]
    fn meet_bounds_every_component((a, b) in pair(8)) {
        let report = intersect(&a, &b).unwrap();
        let m = meet(&rank_matrix(&a), &rank_matrix(&b)).unwrap();
        prop_assert_eq!(&report.meet, &m);
        prop_assert!(!report.components.is_empty());
        for c in report.component_sigmas() {
            let r = rank_matrix(&c);
            prop_assert!(leq(&r, &rank_matrix(&a)).unwrap() && leq(&r, &rank_matrix(&b)).unwrap());
            prop_assert!(orbit_dim(&c) <= orbit_dim(&a).min(orbit_dim(&b)));
        }
        prop_assert_eq!(report.irreducible, report.components.len() == 1);
        prop_assert_eq!(maximal_elements(&downset(&m)), report.component_sigmas());
    }

    #[test]
    fn intersection_is_symmetric((a, b) in pair(8)) {
        let ab = intersect(&a, &b).unwrap();
        let ba = intersect(&b, &a).unwrap();
        prop_assert_eq!(ab.component_sigmas(), ba.component_sigmas());
        prop_assert_eq!(ab.irreducible, ba.irreducible);
    }

    #[test]
    fn rs_is_a_bijection(w in permutation(10)) {
        let (p, q) = rs(&w);
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert_eq!(rs_inverse(&p, &q).unwrap(), w.clone());
        let (pi, qi) = rs(&w.inverse());
        prop_assert_eq!((pi, qi), (q, p));
    }

    #[test]
    fn tableau_involutions_round_trip(col2 in proptest::collection::btree_set(1usize..=14, 0..=7)) {
        let n = 14;
        let col2: Vec<usize> = col2.into_iter().collect();
        if let Ok(t) = TwoColumnTableau::from_second_column(n, col2) {
            let s = sigma_of_tableau(&t);
            prop_assert_eq!(tableau_of_sigma(&s).unwrap(), t.clone());
            prop_assert_eq!(orbit_dim(&s), t.k() * (n - t.k()));
        }
    }
}
