use e2_core::{
    act_row, corrigendum_pair, enumerate_special, is_unimodular, matrix_in_e2, orbit_bfs, pairs_equivalent,
    reduce_pair, trivial_variants, Equivalence, Mat2, Membership, Outcome, QuadInt, RingDesc, SearchParams, UniPair,
};

fn pair(r: RingDesc, a: (i64, i64), b: (i64, i64)) -> UniPair {
    UniPair::new(QuadInt::new(r, a.0, a.1), QuadInt::new(r, b.0, b.1)).unwrap()
}

fn unimodular_pairs(ring: RingDesc, cap: u64) -> Vec<UniPair> {
    let elems = ring.elements_with_norm_at_most(cap);
    elems
        .iter()
        .flat_map(|a| elems.iter().map(move |b| UniPair::new(a.clone(), b.clone()).unwrap()))
        .filter(is_unimodular)
        .collect()
}

#[test]
fn gaussian_orbit_reaches_unit_row() {
    let r = RingDesc::sqrt(1).unwrap();
    let start = pair(r, (2, 1), (1, 0));
    let report = orbit_bfs(&start, &SearchParams::new(25, 4, 10_000, 20).unwrap()).unwrap();
    let target = UniPair::unit_row(r);
    assert!(report.contains(&target));
    let w = report.witness(&target).unwrap();
    assert!(w.len() <= 3);
    assert_eq!(act_row(&start, &w.to_matrix()).unwrap(), target);
}

#[test]
fn unit_row_orbit_contains_its_variants() {
    for r in [RingDesc::sqrt(4).unwrap(), RingDesc::sqrt(5).unwrap(), RingDesc::half(3).unwrap()] {
        let start = UniPair::unit_row(r);
        let report = orbit_bfs(&start, &SearchParams::new(4, 1, 10_000, 6).unwrap()).unwrap();
        for v in trivial_variants(&start) {
            assert!(report.contains(&v), "{v} in {r}");
        }
    }
}

#[test]
fn family_pairs_stay_apart() {
    let r = RingDesc::sqrt(4).unwrap();
    let start = corrigendum_pair(2, 2).unwrap().0;
    let other = corrigendum_pair(2, 4).unwrap().0;
    let report = orbit_bfs(&start, &SearchParams::new(200, 16, 100_000, 30).unwrap()).unwrap();
    assert!(!report.contains(&other));
    assert!(report.frontier_exhausted());
    assert_eq!(other, pair(r, (5, 2), (5, -2)));
}

#[test]
fn witnesses_are_sound() {
    for (start, params) in [
        (pair(RingDesc::sqrt(4).unwrap(), (3, 1), (3, -1)), SearchParams::new(100, 16, 5_000, 10).unwrap()),
        (pair(RingDesc::half(2).unwrap(), (2, 1), (1, 0)), SearchParams::new(30, 9, 5_000, 8).unwrap()),
        (pair(RingDesc::sqrt(5).unwrap(), (1, 0), (0, 0)), SearchParams::new(40, 9, 3_000, 6).unwrap()),
    ] {
        let report = orbit_bfs(&start, &params).unwrap();
        assert!(report.len() > 1);
        for q in report.visited() {
            let w = report.witness(q).unwrap();
            assert_eq!(&act_row(&start, &w.to_matrix()).unwrap(), q);
            assert!(w.len() <= report.depth_of(q).unwrap());
        }
    }
}

#[test]
fn orbit_reports_do_not_depend_on_thread_count() {
    let start = pair(RingDesc::sqrt(4).unwrap(), (3, 1), (3, -1));
    let params = SearchParams::new(200, 16, 1_500, 30).unwrap();
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| orbit_bfs(&start, &params).unwrap().to_json())
    };
    let one = run(1);
    assert_eq!(one, run(4));
    assert_eq!(one, run(7));
    assert_eq!(one["exhausted"], false);
}

fn assert_superset(small: &e2_core::OrbitReport, big: &e2_core::OrbitReport) {
    for q in small.visited() {
        assert!(big.contains(q), "{q} lost when budgets grew");
    }
}

#[test]
fn larger_caps_only_add_states() {
    let start = pair(RingDesc::sqrt(5).unwrap(), (1, 0), (0, 0));
    let budgets = [
        SearchParams::new(20, 4, 1_000_000, 4).unwrap(),
        SearchParams::new(40, 4, 1_000_000, 4).unwrap(),
        SearchParams::new(40, 9, 1_000_000, 4).unwrap(),
        SearchParams::new(40, 9, 1_000_000, 8).unwrap(),
        SearchParams::new(90, 25, 1_000_000, 8).unwrap(),
    ];
    let reports: Vec<_> = budgets.iter().map(|p| orbit_bfs(&start, p).unwrap()).collect();
    for w in reports.windows(2) {
        assert!(w[1].len() > w[0].len());
        assert_superset(&w[0], &w[1]);
    }
}

#[test]
fn larger_state_budget_only_adds_states() {
    let start = pair(RingDesc::sqrt(4).unwrap(), (3, 1), (3, -1));
    let mut prev = None;
    for max_states in [10, 100, 1_000, 5_000] {
        let report = orbit_bfs(&start, &SearchParams::new(400, 16, max_states, 30).unwrap()).unwrap();
        assert_eq!(report.len(), max_states);
        if let Some(prev) = &prev {
            assert_superset(prev, &report);
        }
        prev = Some(report);
    }
}

#[test]
fn orbit_rejects_bad_input() {
    let r = RingDesc::sqrt(4).unwrap();
    let p = SearchParams::default();
    assert!(orbit_bfs(&pair(r, (2, 0), (0, 1)), &p).is_err());
    assert!(SearchParams::new(0, 1, 1, 1).is_err());
}

#[test]
fn equivalence_examples() {
    let r = RingDesc::sqrt(4).unwrap();
    let params = SearchParams::new(200, 16, 50_000, 12).unwrap();
    let p = pair(r, (3, 1), (3, -1));
    assert_eq!(pairs_equivalent(&p, &p, &params).unwrap(), Equivalence::Equivalent(e2_core::ElemWord::empty(r)));

    let v = pair(r, (3, -1), (-3, -1));
    let w = pairs_equivalent(&p, &v, &params).unwrap();
    let w = w.word().expect("variant reachable");
    assert_eq!(act_row(&p, &w.to_matrix()).unwrap(), v);

    let far = pair(r, (5, 2), (5, -2));
    assert_eq!(pairs_equivalent(&p, &far, &params).unwrap(), Equivalence::NotFound);

    let other_ring = UniPair::unit_row(RingDesc::sqrt(5).unwrap());
    assert!(pairs_equivalent(&p, &other_ring, &params).is_err());
    assert!(pairs_equivalent(&p, &pair(r, (2, 0), (0, 1)), &params).is_err());
}

#[test]
fn all_variants_are_pairwise_equivalent() {
    let params = SearchParams::new(400, 16, 20_000, 8).unwrap();
    for (r, a, b) in [
        (RingDesc::sqrt(4).unwrap(), (5, 2), (5, -2)),
        (RingDesc::sqrt(5).unwrap(), (2, 1), (1, 0)),
        (RingDesc::half(3).unwrap(), (2, 1), (1, 1)),
    ] {
        let p = pair(r, a, b);
        assert!(is_unimodular(&p));
        let vs = trivial_variants(&p);
        for x in &vs {
            for y in &vs {
                let found = pairs_equivalent(x, y, &params).unwrap();
                let w = found.word().unwrap_or_else(|| panic!("{x} -> {y} in {r}"));
                assert_eq!(&w.apply(x).unwrap(), y);
            }
        }
    }
    let r = RingDesc::half(4).unwrap();
    let p = enumerate_special(r, 100).into_iter().next().expect("special pair in half:4");
    let vs = trivial_variants(&p);
    for y in &vs {
        let w = pairs_equivalent(&p, y, &params).unwrap();
        assert_eq!(&w.word().unwrap().apply(&p).unwrap(), y);
    }
}

#[test]
fn euclidean_rings_always_reduce() {
    for r in [RingDesc::sqrt(1).unwrap(), RingDesc::sqrt(2).unwrap()] {
        let pairs = unimodular_pairs(r, 100);
        assert!(pairs.len() > 1000);
        for p in pairs {
            let res = reduce_pair(&p).unwrap();
            assert_eq!(res.outcome, Outcome::Reduced, "{p} in {r}");
            assert_eq!(act_row(&p, &res.word.to_matrix()).unwrap(), res.final_pair);
        }
    }
}

#[test]
fn special_pairs_stall_everywhere() {
    for r in [RingDesc::sqrt(4).unwrap(), RingDesc::sqrt(9).unwrap(), RingDesc::sqrt(5).unwrap()] {
        let specials = enumerate_special(r, 200);
        assert!(!specials.is_empty());
        for p in specials {
            let res = reduce_pair(&p).unwrap();
            assert_eq!(res.outcome, Outcome::Stalled);
            assert_eq!(res.final_pair, p);
        }
    }
}

#[test]
fn membership_recovers_products_of_moves() {
    let r = RingDesc::sqrt(5).unwrap();
    let params = SearchParams::new(200, 16, 20_000, 10).unwrap();
    let w = e2_core::ElemWord::parse(r, "U(1);L(-2+1*w);U(3);L(1)").unwrap();
    let m = w.to_matrix();
    let found = matrix_in_e2(&m, &params).unwrap();
    assert_eq!(found.word().expect("member").to_matrix(), m);
}

#[test]
fn conjugate_of_s_is_not_found_but_s_is() {
    let r = RingDesc::sqrt(4).unwrap();
    let params = SearchParams::default();
    let m = Mat2::from_coords(r, [(1, -1), (-2, 0), (-2, 0), (1, 1)]);
    let s = Mat2::s_matrix(r);
    let conj = m.mul(&s).unwrap().mul(&m.inv_sl2().unwrap()).unwrap();
    assert_eq!(conj.top_row(), pair(r, (4, 0), (1, -2)));
    assert_eq!(matrix_in_e2(&conj, &params).unwrap(), Membership::NotFound);
    assert!(matches!(matrix_in_e2(&s, &params).unwrap(), Membership::Word(_)));
}
