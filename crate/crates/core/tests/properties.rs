use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pseudocodeword::classify::{is_bad_awgn, Domain};
use pseudocodeword::decode::{min_sum_decode, ml_decode, sum_product_decode};
use pseudocodeword::fixtures;
use pseudocodeword::graph::{emit_alist, enumerate_codewords, parse_alist, TannerGraph};
use pseudocodeword::lift::{random_lift, realize_pseudocodeword, reduce_lift_codeword, RealizeOutcome};
use pseudocodeword::linalg::{rat, Rational};
use pseudocodeword::polytope::{brute_force_oracle, check_cone_inequalities, enumerate_irreducible, mod2_reduce, Lattice};
use pseudocodeword::stopping::is_stopping_set;
use pseudocodeword::weights::{max_frac_weight, weight, Channel};

fn sparse_graph(max_n: usize) -> impl Strategy<Value = TannerGraph> {
    (3..=max_n).prop_flat_map(|n| {
        let check = proptest::sample::subsequence((0..n).collect::<Vec<_>>(), 2..=n.min(4));
        proptest::collection::vec(check, 1..=4).prop_map(move |cs| TannerGraph::new(n, cs).unwrap())
    })
}

/// Checks each add one or two fresh variables to one existing variable, so
/// the graph stays cycle-free.
fn forest() -> impl Strategy<Value = TannerGraph> {
    proptest::collection::vec((0usize..100, 1usize..=2), 1..=4).prop_map(|steps| {
        let mut n = 1;
        let mut checks = Vec::new();
        for (anchor, fresh) in steps {
            let mut c = vec![anchor % n];
            c.extend(n..n + fresh);
            n += fresh;
            checks.push(c);
        }
        TannerGraph::new(n, checks).unwrap()
    })
}

fn support(p: &[i64]) -> Vec<usize> {
    (0..p.len()).filter(|&i| p[i] > 0).collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 40, ..ProptestConfig::default() })]

    #[test]
    fn alist_round_trip(g in sparse_graph(9)) {
        prop_assert_eq!(parse_alist(&emit_alist(&g)).unwrap(), g);
    }

    #[test]
    fn irreducibles_match_oracle(g in sparse_graph(6)) {
        let set = enumerate_irreducible(&g).unwrap();
        let oracle = brute_force_oracle(&g, Lattice::Parity, 10).unwrap();
        let mut a = set.irreducible.clone();
        let mut b = oracle;
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
        for p in &set.irreducible {
            prop_assert!(check_cone_inequalities(&g, p).unwrap());
            prop_assert!(is_stopping_set(&g, &support(p)));
            prop_assert!(g.is_codeword(&mod2_reduce(&g, p).unwrap()));
        }
    }

    #[test]
    fn lift_codewords_project_to_pseudocodewords(g in sparse_graph(6), degree in 2usize..=3, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let lift = random_lift(&g, degree, &mut rng);
        let cb = enumerate_codewords(&lift.to_tanner()).unwrap();
        for c in cb.words.iter().take(64) {
            let p = reduce_lift_codeword(&lift, c).unwrap();
            prop_assert!(check_cone_inequalities(&g, &p).unwrap());
            prop_assert!(g.parity_ok(&p));
        }
    }

    #[test]
    fn realization_reduces_back(g in sparse_graph(6)) {
        for p in enumerate_irreducible(&g).unwrap().irreducible {
            match realize_pseudocodeword(&g, &p, Some(12)).unwrap() {
                RealizeOutcome::Realized(r) => {
                    let lift = r.lift(&g);
                    prop_assert!(lift.is_codeword(&r.lift_codeword));
                    prop_assert_eq!(reduce_lift_codeword(&lift, &r.lift_codeword).unwrap(), p);
                }
                RealizeOutcome::NotFoundWithinBound { .. } => prop_assert!(false, "irreducible {:?} not realized", p),
            }
        }
    }

    #[test]
    fn iterative_outputs_are_codewords_when_converged(g in sparse_graph(8), llr in proptest::collection::vec(-4.0f64..4.0, 8)) {
        let llr = &llr[..g.n()];
        for out in [min_sum_decode(&g, llr, 30).unwrap(), sum_product_decode(&g, llr, 30).unwrap()] {
            prop_assert_eq!(out.converged, g.is_codeword(&out.hard));
        }
    }

    #[test]
    fn ml_minimizes_cost(g in sparse_graph(8), llr in proptest::collection::vec(-4.0f64..4.0, 8)) {
        let llr = &llr[..g.n()];
        let cb = enumerate_codewords(&g).unwrap();
        let out = ml_decode(&cb, llr);
        let cost = |c: &[u8]| c.iter().zip(llr).map(|(&b, &l)| b as f64 * l).sum::<f64>();
        let best = cost(&out.hard);
        // Brute force over every binary word.
        for m in 0u32..1 << g.n() {
            let x: Vec<u8> = (0..g.n()).map(|i| (m >> i & 1) as u8).collect();
            if g.is_codeword(&x) {
                prop_assert!(best <= cost(&x) + 1e-12);
            }
        }
    }

    #[test]
    fn min_sum_is_ml_on_forests(g in forest(), mags in proptest::collection::vec((0.05f64..3.0, any::<bool>()), 9)) {
        let llr: Vec<f64> = mags[..g.n()].iter().map(|&(m, neg)| if neg { -m } else { m }).collect();
        let llr = &llr[..];
        let cb = enumerate_codewords(&g).unwrap();
        let ml = ml_decode(&cb, llr);
        prop_assume!(!ml.tie);
        let ms = min_sum_decode(&g, llr, 2 * g.n() + 2).unwrap();
        prop_assert_eq!(&ms.hard, &ml.hard);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn max_fractional_bounds_on_hamming_points(coef in proptest::collection::vec(0i64..=3, 45)) {
        let set = enumerate_irreducible(&fixtures::hamming7_a()).unwrap();
        let mut p = vec![0i64; 7];
        for (c, q) in coef.iter().zip(&set.irreducible) {
            for i in 0..7 {
                p[i] += c * q[i];
            }
        }
        prop_assume!(p.iter().any(|&x| x > 0));
        let f = max_frac_weight(&p).unwrap();
        // The BSC side only holds up to one; see the pinned counterexample.
        prop_assert!(weight(&p, Channel::Bsc).unwrap() > &f - rat(1));
        prop_assert!(weight(&p, Channel::Awgn).unwrap() >= f);
        prop_assert!(weight(&p, Channel::Bec).unwrap() >= weight(&p, Channel::Awgn).unwrap());
    }
}

#[test]
fn bsc_weight_can_fall_below_max_fractional_weight() {
    // Top two components 2 + 2 exceed half of 7, so w_BSC = 2e - 1 = 3 < 7/2.
    let p = [0, 0, 1, 1, 2, 1, 2];
    assert!(pseudocodeword::polytope::is_pseudocodeword(&fixtures::hamming7_a(), &p).unwrap());
    assert_eq!(weight(&p, Channel::Bsc).unwrap(), rat(3));
    assert_eq!(max_frac_weight(&p).unwrap(), pseudocodeword::linalg::ratio(7, 2));
}

#[test]
fn bad_witnesses_check_out_by_hand() {
    let g = fixtures::hamming7_a();
    let cb = enumerate_codewords(&g).unwrap();
    for p in enumerate_irreducible(&g).unwrap().irreducible {
        let d = is_bad_awgn(&g, &p).unwrap();
        if let Some(w) = d.witness {
            assert!(matches!(w.domain, Domain::Awgn));
            let dot = |x: &[i64]| x.iter().zip(&w.w).map(|(&a, b)| rat(a) * b).sum::<Rational>();
            assert!(dot(&p) < rat(0));
            for c in cb.nonzero() {
                let c: Vec<i64> = c.iter().map(|&b| b as i64).collect();
                assert!(dot(&c) >= rat(0));
            }
        }
    }
}
