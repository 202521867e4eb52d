//! Exhaustive and seeded-random comparisons against the brute-force oracles.

use kdnf::minimize::theorem2_criterion;
use kdnf::{
    absorbs, absorbs_theorem2, check_corollary_shape, check_theorem1_shape, count_monotone_exact, dead_end_dnfs,
    is_monotone, minimize_dnf, monotone_functions, psi_estimate, reduced_dnf, Alphabet, Dnf, ElementaryConjunction,
    Error, KFunction, Metric, Space, ValueOrder, ValueSet,
};
use kdnf_oracle::{oracle_absorbs, oracle_count_monotone, oracle_dead_ends, oracle_is_monotone, oracle_minimize};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn all_functions(s: Space) -> impl Iterator<Item = KFunction> {
    let k = s.k() as u64;
    let count = k.pow(s.size() as u32);
    (0..count).map(move |mut code| {
        let table = (0..s.size())
            .map(|_| {
                let v = (code % k) as u8;
                code /= k;
                v
            })
            .collect();
        KFunction::new(s, table).unwrap()
    })
}

fn random_function(s: Space, rng: &mut ChaCha8Rng) -> KFunction {
    KFunction::new(s, (0..s.size()).map(|_| rng.random_range(0..s.k())).collect()).unwrap()
}

#[test]
fn boolean_minimization_matches_oracle_exhaustively() {
    for n in 1..=3 {
        let s = Space::new(2, n).unwrap();
        for f in all_functions(s) {
            for metric in [Metric::FewestTerms, Metric::LeastTotalRank] {
                let fast = minimize_dnf(&f, metric).unwrap();
                let slow = oracle_minimize(&f, metric).unwrap();
                assert!(fast.optimal);
                assert!(f.is_realized_by(&fast.dnf).unwrap());
                assert_eq!(fast.objective_value, slow.objective_value, "{f:?} {metric}");
                assert_eq!(fast.dnf.canonical(), slow.dnf.canonical(), "{f:?} {metric}");
            }
        }
    }
}

#[test]
fn ternary_minimization_matches_oracle_on_random_functions() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 1..=3 {
        let s = Space::new(3, n).unwrap();
        for _ in 0..60 {
            let f = random_function(s, &mut rng);
            let fast = minimize_dnf(&f, Metric::FewestTerms).unwrap();
            let slow = oracle_minimize(&f, Metric::FewestTerms).unwrap();
            assert_eq!(fast.dnf.canonical(), slow.dnf.canonical(), "{f:?}");
        }
    }
}

#[test]
fn reduced_dnf_realizes_every_small_boolean_function() {
    for n in 1..=3 {
        for f in all_functions(Space::new(2, n).unwrap()) {
            assert!(f.is_realized_by(reduced_dnf(&f).dnf()).unwrap());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let s = Space::new(3, 3).unwrap();
    for _ in 0..500 {
        let f = random_function(s, &mut rng);
        assert!(f.is_realized_by(reduced_dnf(&f).dnf()).unwrap());
    }
}

#[test]
fn dead_ends_match_subset_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut checked = 0;
    for (k, n) in [(2, 2), (2, 3), (3, 2)] {
        let s = Space::new(k, n).unwrap();
        for _ in 0..80 {
            let f = random_function(s, &mut rng);
            let pool = reduced_dnf(&f).into_dnf();
            if pool.len() > 14 {
                continue;
            }
            let fast = dead_end_dnfs(&f, &pool).unwrap();
            let mut fast_sorted: Vec<Dnf> = fast.iter().map(Dnf::canonical).collect();
            fast_sorted.sort_by(|a, b| a.terms().cmp(b.terms()));
            assert_eq!(fast_sorted, oracle_dead_ends(&f, &pool).unwrap(), "{f:?}");

            let best = minimize_dnf(&f, Metric::FewestTerms).unwrap();
            for d in &fast {
                assert!(f.is_realized_by(d).unwrap());
                assert!(best.objective_value <= d.len());
                assert!(d.len() <= pool.len());
            }
            checked += 1;
        }
    }
    assert!(checked >= 150);
}

fn class_s_term(s: Space, rng: &mut ChaCha8Rng, gamma: u8) -> ElementaryConjunction {
    let k = s.alphabet();
    let nonzero_masks = (1u16 << s.k()) - 2;
    let factors = (0..s.n())
        .map(|_| {
            if rng.random_bool(0.4) {
                k.full()
            } else {
                ValueSet::from_bits(rng.random_range(1..=nonzero_masks >> 1) << 1)
            }
        })
        .collect();
    ElementaryConjunction::from_factors(k, factors, gamma).unwrap()
}

#[test]
fn class_s_criterion_is_exact_where_applicable() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut applicable = 0;
    for trial in 0..4000 {
        let (k, n) = [(3, 2), (3, 3), (4, 2)][trial % 3];
        let s = Space::new(k, n).unwrap();
        let ec = class_s_term(s, &mut rng, 1);
        let terms: Vec<_> = (0..rng.random_range(1..=4)).map(|_| class_s_term(s, &mut rng, 1)).collect();
        let truth = oracle_absorbs(s, &terms, &ec).unwrap();
        match absorbs_theorem2(&terms, &ec) {
            Ok(v) => {
                applicable += 1;
                assert_eq!(v, truth, "{ec} by {terms:?}");
                assert_eq!(theorem2_criterion(&terms, &ec).unwrap(), truth);
            }
            Err(Error::NotApplicable { .. }) => {}
            Err(e) => panic!("{e}"),
        }
        let d = Dnf::new(s, terms).unwrap();
        assert_eq!(absorbs(&d, &ec).unwrap(), truth);
    }
    assert!(applicable >= 200, "only {applicable} applicable instances");
}

#[test]
fn covering_pair_check_matches_all_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for (k, n) in [(2, 3), (3, 2), (3, 3), (4, 2)] {
        let s = Space::new(k, n).unwrap();
        let alphabet = s.alphabet();
        for order in [ValueOrder::total(alphabet), ValueOrder::star(alphabet)] {
            for _ in 0..100 {
                let f = random_function(s, &mut rng);
                assert_eq!(is_monotone(&f, &order).unwrap().is_monotone(), oracle_is_monotone(&f, &order).unwrap());
            }
            for f in monotone_functions(n, &order).unwrap().into_iter().take(200) {
                assert!(oracle_is_monotone(&f, &order).unwrap());
            }
        }
    }
}

#[test]
fn monotone_counts_match_table_enumeration() {
    for (k, n) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1)] {
        let a = Alphabet::new(k).unwrap();
        let total = ValueOrder::total(a);
        let star = ValueOrder::star(a);
        let t = count_monotone_exact(n, &total).unwrap();
        let st = count_monotone_exact(n, &star).unwrap();
        assert_eq!(t, oracle_count_monotone(n, &total).unwrap());
        assert_eq!(st, oracle_count_monotone(n, &star).unwrap());
        assert!(st >= t || k == 2, "k={k} n={n}");
    }
}

#[test]
fn monotone_functions_have_the_predicted_reduced_shape() {
    for (k, n) in [(2, 3), (3, 2), (4, 2)] {
        let order = ValueOrder::total(Alphabet::new(k).unwrap());
        for f in monotone_functions(n, &order).unwrap() {
            let report = check_theorem1_shape(&f).unwrap();
            assert!(report.holds(), "{f:?}");
            assert_eq!(report.dead_end_count, 1);
            assert!(check_corollary_shape(&f).unwrap().contiguous_factors);
        }
    }
}

#[test]
fn psi_estimate_matches_closed_form() {
    for k in 2..=6usize {
        for n in 1..=6usize {
            let e = psi_estimate(n, k).unwrap();
            let kf = k as f64;
            let d = (kf - 1.0) / (kf * kf);
            let expect = kf.powi(n as i32) / ((2.0 * std::f64::consts::PI * d).sqrt() * (n as f64).sqrt());
            assert!((e.log2_psi - expect).abs() / expect < 1e-12, "k={k} n={n}");
            assert_eq!(e.d, 2);
            assert!((e.big_d - d).abs() < 1e-15);
        }
    }
}
