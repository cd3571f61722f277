//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Built with `harness = false`.

use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pseudocodeword::classify::{is_bad_awgn, is_bad_restricted, is_bad_with, verify_witness, BadWitness, Domain};
use pseudocodeword::comptree::{build_tree, consistency_check, for_each_valid_assignment, local_configs, rats};
use pseudocodeword::decode::{code_rate, exhaustive_bsc_sweep, monte_carlo, Algorithm, ChannelModel, Decoder};
use pseudocodeword::fixtures;
use pseudocodeword::graph::{enumerate_codewords, girth, Codebook, TannerGraph};
use pseudocodeword::linalg::{fmt_rat, rat, ratio, Rational};
use pseudocodeword::polytope::{brute_force_oracle, check_cone_inequalities, enumerate_irreducible, mod2_reduce, Lattice};
use pseudocodeword::stopping::{is_stopping_set, s_min};
use pseudocodeword::weights::{feldman_bound, max_frac_weight, min_weight, t_support_bounds, tree_bound, weight, Channel};

struct Outcome {
    pass: bool,
    detail: String,
}

fn run(id: usize, limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let o = f();
    let took = start.elapsed();
    let in_time = limit.is_none_or(|l| took <= l);
    let pass = o.pass && in_time;
    let budget = limit.map_or(String::new(), |l| format!(" (limit {:.0?})", l));
    println!(
        "criterion {id}: {} [{:.2?}{budget}] {}{}",
        if pass { "PASS" } else { "FAIL" },
        took,
        o.detail,
        if in_time { "" } else { "; over time budget" }
    );
    pass
}

fn named() -> Vec<(&'static str, TannerGraph)> {
    vec![
        ("hamming7-a", fixtures::hamming7_a()),
        ("hamming7-b", fixtures::hamming7_b()),
        ("hamming7-c", fixtures::hamming7_c()),
        ("three-cycle", fixtures::three_cycle()),
        ("repetition", fixtures::repetition_cycle()),
        ("repetition-augmented", fixtures::repetition_augmented()),
        ("tree", fixtures::tree_graph()),
        ("fano", fixtures::fano()),
        ("star-ring-5", fixtures::star_ring(5)),
        ("len14-d8", fixtures::len14_d8()),
    ]
}

fn support(p: &[i64]) -> Vec<usize> {
    (0..p.len()).filter(|&i| p[i] > 0).collect()
}

fn criterion1() -> Outcome {
    let g = fixtures::len14_d8();
    let p = fixtures::LEN14_D8_P;
    let cb = enumerate_codewords(&g).unwrap();
    let bsc = weight(&p, Channel::Bsc).unwrap();
    let awgn = weight(&p, Channel::Awgn).unwrap();
    let bad = is_bad_awgn(&g, &p).unwrap().bad;
    let mut w = vec![rat(0); 14];
    w[0] = rat(1);
    w[6] = rat(-1);
    let v = verify_witness(&cb, &p, &w, Domain::Awgn);
    let witness_ok = v.as_ref().is_some_and(|b| b.p_dot_w == rat(-2));
    let pass = bsc == rat(8) && awgn == rat(8) && bad && witness_ok;
    Outcome {
        pass,
        detail: format!(
            "w_BSC={} w_AWGN={} bad={} quoted witness p.w={} min codeword cost={}",
            fmt_rat(&bsc),
            fmt_rat(&awgn),
            bad,
            v.as_ref().map_or("rejected".into(), |b| fmt_rat(&b.p_dot_w)),
            v.as_ref().and_then(|b| b.margin.as_ref()).map_or("-".into(), fmt_rat)
        ),
    }
}

fn criterion2() -> Outcome {
    let (a, b, c) = (fixtures::hamming7_a(), fixtures::hamming7_b(), fixtures::hamming7_c());
    let (sa, sb, sc) = (enumerate_irreducible(&a).unwrap(), enumerate_irreducible(&b).unwrap(), enumerate_irreducible(&c).unwrap());
    let t_ok = sa.t_value == 3 && sb.t_value == 3 && sc.t_value == 3;
    let subset = sb.irreducible.iter().all(|p| check_cone_inequalities(&a, p).unwrap() && check_cone_inequalities(&c, p).unwrap());
    let nc_min = |s: &[Vec<i64>], ch| {
        let nc: Vec<Vec<i64>> = s.iter().filter(|p| p.iter().any(|&x| x > 1)).cloned().collect();
        min_weight(&nc, ch).unwrap()
    };
    let mut mono = true;
    let mut mins = Vec::new();
    for ch in [Channel::Bsc, Channel::Awgn] {
        let (ma, mb) = (nc_min(&sa.irreducible, ch), nc_min(&sb.irreducible, ch));
        // An empty set has minimum +inf.
        mono &= match (&ma, &mb) {
            (Some(x), Some(y)) => y >= x,
            (_, None) => true,
            (None, Some(_)) => false,
        };
        mins.push(format!("{ch:?} A={} B={}", ma.as_ref().map_or("inf".into(), fmt_rat), mb.as_ref().map_or("inf".into(), fmt_rat)));
    }
    Outcome {
        pass: t_ok && subset && mono,
        detail: format!(
            "t(A)={} t(B)={} t(C)={}; B irreducibles cone-valid in A and C: {subset}; min nc weight {}",
            sa.t_value,
            sb.t_value,
            sc.t_value,
            mins.join(", ")
        ),
    }
}

fn criterion3() -> Outcome {
    let sb = exhaustive_bsc_sweep(&fixtures::hamming7_b(), Algorithm::MinSum, 100, 7).unwrap();
    let sa = exhaustive_bsc_sweep(&fixtures::hamming7_a(), Algorithm::MinSum, 100, 1).unwrap();
    let b1 = &sb.rows[1];
    let agree: u64 = sb.rows.iter().map(|r| r.ml_agree).sum();
    let total: u64 = sb.rows.iter().map(|r| r.patterns).sum();
    let a_fail = sa.rows[1].patterns - sa.rows[1].correct;
    Outcome {
        pass: b1.correct == 7 && agree == 128 && total == 128 && a_fail >= 1,
        detail: format!("B weight-1 corrected {}/7, B equals ML on {agree}/{total}; A uncorrected weight-1 patterns {a_fail}", b1.correct),
    }
}

fn criterion4() -> Outcome {
    let cycle = fixtures::repetition_cycle();
    let cb = enumerate_codewords(&cycle).unwrap();
    let dec = Decoder::new(&cycle, Algorithm::MinSum, 10_000).unwrap();
    let l = ChannelModel::bsc_llr(0.1);
    // Patterns where ML itself is tied have no unique ML decision.
    let (mut same, mut untied, mut ties_ms_converged) = (0, 0, 0);
    for m in 0u32..16 {
        let llr: Vec<f64> = (0..4).map(|i| if m >> i & 1 == 1 { -l } else { l }).collect();
        let ml = pseudocodeword::decode::ml_decode(&cb, &llr);
        let ms = dec.decode(&llr);
        if ml.tie {
            ties_ms_converged += u32::from(ms.converged);
        } else {
            untied += 1;
            same += u32::from(ms.hard == ml.hard);
        }
    }
    let only_ones = enumerate_irreducible(&cycle).unwrap().irreducible == vec![vec![1, 1, 1, 1]];
    let aug = fixtures::repetition_augmented();
    let unchanged = enumerate_irreducible(&aug).unwrap().irreducible == vec![vec![1, 1, 1, 1]];

    let target = rats(&[(1, 3), (1, 1), (0, 1), (2, 3)]);
    let search = |iters: usize| {
        let tree = build_tree(&aug, 0, iters).unwrap();
        let copies = tree.check_copies()[&4];
        let mut hit = false;
        let _ = for_each_valid_assignment(&tree, |a| {
            if local_configs(&tree, a).iter().any(|c| c.check == 4 && c.average == target) && !consistency_check(&tree, a, 4).consistent {
                hit = true;
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        });
        (hit, copies, tree.assignment_count())
    };
    let (hit3, copies3, count3) = search(3);
    let (hit2, copies2, _) = search(2);
    Outcome {
        pass: same == untied && only_ones && unchanged && hit3,
        detail: format!(
            "cycle MS=ML on {same}/{untied} patterns with a unique ML decision ({} ML ties, MS converged on {ties_ms_converged}), irreducibles only (1,1,1,1): {only_ones}, augmented unchanged: {unchanged}; \
             inconsistent assignment with u5 = (1/3,1,0,2/3) at depth 3: {hit3} ({count3} assignments, u5 has {copies3} copies); \
             at depth 2: {hit2} (u5 has {copies2} copies)",
            16 - untied
        ),
    }
}

/// Random points of the monoid: nonnegative integer combinations of the
/// irreducibles.
fn random_points(irr: &[Vec<i64>], count: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    let n = irr[0].len();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let terms = rng.gen_range(1..=4);
        let mut p = vec![0i64; n];
        for _ in 0..terms {
            let q = &irr[rng.gen_range(0..irr.len())];
            let k = rng.gen_range(1..=3);
            for i in 0..n {
                p[i] += k * q[i];
            }
        }
        out.push(p);
    }
    out
}

fn criterion5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut v: std::collections::BTreeMap<&str, u64> = Default::default();
    let mut first: Vec<String> = Vec::new();
    let mut note = |v: &mut std::collections::BTreeMap<&'static str, u64>, key: &'static str, what: String| {
        *v.entry(key).or_default() += 1;
        if first.len() < 4 {
            first.push(what);
        }
    };
    let mut checks = 0u64;
    for (name, g) in named() {
        let set = enumerate_irreducible(&g).unwrap();
        let cb = enumerate_codewords(&g).unwrap();
        let smin = s_min(&g).unwrap();
        let t = set.t_value;
        let pts = random_points(&set.irreducible, 1000, &mut rng);
        let wmin_bsc = min_weight(&set.irreducible, Channel::Bsc).unwrap().unwrap();
        let wmin_awgn = min_weight(&set.irreducible, Channel::Awgn).unwrap().unwrap();
        let wmin_frac = set.irreducible.iter().map(|p| max_frac_weight(p).unwrap()).min().unwrap();
        if let Some(s) = smin {
            checks += 2;
            if wmin_bsc > rat(s as i64) || wmin_awgn > rat(s as i64) {
                note(&mut v, "w_min<=s_min", format!("{name}: w_min above s_min"));
            }
        }
        let degs = g.var_degrees();
        if let Some(gi) = girth(&g) {
            let regular = degs.iter().all(|&d| d == degs[0]);
            if regular {
                if let Ok(tb) = tree_bound(degs[0] as u64, gi as u64) {
                    checks += 2;
                    if rat(tb as i64) > wmin_bsc || rat(tb as i64) > wmin_awgn {
                        note(&mut v, "tree_bound", format!("{name}: tree bound {tb} above w_min"));
                    }
                }
            }
            if let Ok(fb) = feldman_bound(g.min_var_degree() as u64, g.min_check_degree() as u64, gi as u64) {
                checks += 1;
                if rat(fb as i64) > wmin_frac {
                    note(&mut v, "feldman_bound", format!("{name}: feldman bound {fb} above {}", fmt_rat(&wmin_frac)));
                }
            }
        }
        for p in pts.iter().chain(&set.irreducible) {
            checks += 1;
            let f = max_frac_weight(p).unwrap();
            let (wb, wa) = (weight(p, Channel::Bsc).unwrap(), weight(p, Channel::Awgn).unwrap());
            if wb < f {
                note(&mut v, "maxfrac_bsc", format!("{name}: {p:?} w_BSC {} < w_maxfrac {}", fmt_rat(&wb), fmt_rat(&f)));
            }
            if wa < f {
                note(&mut v, "maxfrac_awgn", format!("{name}: {p:?} w_AWGN below w_maxfrac"));
            }
            let tp = *p.iter().max().unwrap();
            let sb = t_support_bounds(tp, support(p).len() as i64).unwrap();
            if wa < sb.awgn_lb {
                note(&mut v, "t_support_awgn", format!("{name}: {p:?} AWGN support bound"));
            }
            if wb < sb.bsc_lb {
                note(&mut v, "t_support_bsc", format!("{name}: {p:?} w_BSC {} < |V|/t {}", fmt_rat(&wb), fmt_rat(&sb.bsc_lb)));
            }
            let bad = is_bad_with(&cb, p, Domain::Awgn).unwrap().bad;
            if !bad {
                if let Some(d) = cb.d_min {
                    if wb < rat(d as i64) || wa < rat(d as i64) {
                        note(&mut v, "thm9_good", format!("{name}: good {p:?} below d_min {d}"));
                    }
                }
            } else if let Some(s) = smin {
                let lb = ratio(s as i64, t.max(1));
                if wb < lb || wa < lb {
                    note(&mut v, "thm9_bad", format!("{name}: bad {p:?} w_BSC {} below s_min/t {}", fmt_rat(&wb), fmt_rat(&lb)));
                }
            }
        }
    }
    let total: u64 = v.values().sum();
    let counts: Vec<String> = v.iter().map(|(k, c)| format!("{k}={c}")).collect();
    Outcome {
        pass: total == 0,
        detail: format!(
            "{checks} point/graph checks, violations {total}{}{}",
            if counts.is_empty() { String::new() } else { format!(" [{}]", counts.join(" ")) },
            if first.is_empty() { String::new() } else { format!("; e.g. {}", first.join("; ")) }
        ),
    }
}

fn random_sparse(rng: &mut ChaCha8Rng) -> TannerGraph {
    let n = rng.gen_range(4..=7);
    let m = rng.gen_range(1..=4);
    let checks = (0..m)
        .map(|_| {
            let k = rng.gen_range(2..=n.min(4));
            let mut c: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                c.swap(i, rng.gen_range(0..=i));
            }
            c.truncate(k);
            c.sort_unstable();
            c
        })
        .collect();
    TannerGraph::new(n, checks).unwrap()
}

fn criterion6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut graphs: Vec<(String, TannerGraph)> =
        named().into_iter().filter(|(_, g)| g.n() <= 8).map(|(n, g)| (n.to_string(), g)).collect();
    for k in 0..50 {
        graphs.push((format!("random-{k}"), random_sparse(&mut rng)));
    }
    let mut mismatches = Vec::new();
    let mut elements = 0;
    for (name, g) in &graphs {
        let mut a = enumerate_irreducible(g).unwrap().irreducible;
        let mut b = match brute_force_oracle(g, Lattice::Parity, 12) {
            Ok(b) => b,
            Err(e) => {
                mismatches.push(format!("{name}: oracle {e}"));
                continue;
            }
        };
        a.sort();
        b.sort();
        if a != b {
            mismatches.push(format!("{name}: enumerated {} oracle {}", a.len(), b.len()));
        }
        for p in &a {
            elements += 1;
            if !is_stopping_set(g, &support(p)) || !mod2_reduce(g, p).is_ok_and(|c| g.is_codeword(&c)) {
                mismatches.push(format!("{name}: {p:?} support or parity"));
            }
        }
    }
    Outcome {
        pass: mismatches.is_empty(),
        detail: format!("{} graphs, {elements} irreducibles, mismatches {}{}", graphs.len(), mismatches.len(), if mismatches.is_empty() { String::new() } else { format!(": {}", mismatches.join("; ")) }),
    }
}

/// Recomputes `p·w < 0` and `c·w >= 0` for every nonzero codeword from
/// scratch, plus the domain constraint.
fn recheck(cb: &Codebook, p: &[i64], w: &BadWitness) -> bool {
    let dot = |x: &[i64]| x.iter().zip(&w.w).map(|(&a, b)| rat(a) * b).sum::<Rational>();
    let domain_ok = match w.domain {
        Domain::Bsc => w.w.iter().all(|v| v.abs().is_one()),
        Domain::Tawgn { l } => w.w.iter().all(|v| v.abs() <= rat(l)),
        Domain::Awgn => true,
    };
    domain_ok
        && dot(p) < rat(0)
        && cb.words.iter().filter(|c| c.contains(&1)).all(|c| dot(&c.iter().map(|&b| b as i64).collect::<Vec<_>>()) >= rat(0))
}

fn criterion7() -> Outcome {
    let mut violations = Vec::new();
    let mut counted = [0usize; 3];
    let mut total = 0;
    for (name, g) in [("A", fixtures::hamming7_a()), ("B", fixtures::hamming7_b()), ("C", fixtures::hamming7_c())] {
        let cb = enumerate_codewords(&g).unwrap();
        for p in enumerate_irreducible(&g).unwrap().irreducible {
            total += 1;
            let ds = [
                is_bad_restricted(&g, &p, Domain::Bsc).unwrap(),
                is_bad_restricted(&g, &p, Domain::Tawgn { l: 1 }).unwrap(),
                is_bad_awgn(&g, &p).unwrap(),
            ];
            for (k, d) in ds.iter().enumerate() {
                if d.bad {
                    counted[k] += 1;
                    if !d.witness.as_ref().is_some_and(|w| recheck(&cb, &p, w)) {
                        violations.push(format!("{name} {p:?}: witness {k} fails"));
                    }
                }
            }
            if (ds[0].bad && !ds[1].bad) || (ds[1].bad && !ds[2].bad) {
                violations.push(format!("{name} {p:?}: inclusion broken"));
            }
        }
    }
    Outcome {
        pass: violations.is_empty(),
        detail: format!(
            "{total} irreducibles; bad under BSC {} TAWGN(1) {} AWGN {}; violations {}{}",
            counted[0],
            counted[1],
            counted[2],
            violations.len(),
            if violations.is_empty() { String::new() } else { format!(": {}", violations.join("; ")) }
        ),
    }
}

fn criterion8() -> Outcome {
    let mut rows = Vec::new();
    let mut pass = true;
    for (name, g) in [("A", fixtures::hamming7_a()), ("B", fixtures::hamming7_b())] {
        let dec = Decoder::new(&g, Algorithm::MinSum, 100).unwrap();
        let rate = code_rate(&g).unwrap();
        for snr in [4.0, 6.0, 8.0] {
            let pt = monte_carlo(&g, &dec, ChannelModel::Biawgn { ebn0_db: snr, rate }, 100_000, 2024).unwrap();
            pass &= if name == "A" { pt.detected > 0 } else { pt.detected == 0 };
            rows.push(format!("{name}@{snr}dB det={} fe={}", pt.detected, pt.frame_errors));
        }
    }
    Outcome { pass, detail: format!("1e5 trials, seed 2024: {}", rows.join(", ")) }
}

fn main() {
    let secs = Duration::from_secs;
    let results = [
        run(1, Some(secs(1)), criterion1),
        run(2, Some(secs(300)), criterion2),
        run(3, Some(secs(60)), criterion3),
        run(4, Some(secs(60)), criterion4),
        run(5, None, criterion5),
        run(6, None, criterion6),
        run(7, None, criterion7),
        run(8, Some(secs(600)), criterion8),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("acceptance: {passed}/{} criteria pass", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
