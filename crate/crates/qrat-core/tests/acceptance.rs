//! Acceptance suite: nine end-to-end criteria, one test (and one
//! pass/fail line in the runner output) per criterion.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::One;
use qrat_core::braidcore::{BraidWord, Gen};
use qrat_core::contfrac::{EvenCF, Rational};
use qrat_core::hnauto::{
    apply_braid, bilinear_check, c2_automaton, matrix_route_check, p1, rz_left, rz_right,
};
use qrat_core::qboundary::{
    classify_boundary_point, classify_boundary_point_exact, eval_digits_sharp_exact, order_check,
    q_irrational, tail_limit_check, Approach, BoundaryKind,
};
use qrat_core::qknots::{
    build_quiver, count_closures_bruteforce, count_closures_dp, jones_abs, Family,
};
use qrat_core::qpoly::LaurentPoly;
use qrat_core::qrationals::{
    deform, deform_braid_route, deform_cf_route, matrix_formula_check, Side,
};
use qrat_core::stabmass::{
    boundary_limit, default_probes, degeneracy_check, sample_standard, sss_T, StdStabCond,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rat(r: i64, s: i64) -> Rational {
    Rational::from_i64(r, s)
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// All reduced rationals r/s with |r|, |s| ≤ bound, s ≥ 1 (plus ∞).
fn rationals_up_to(bound: i64) -> Vec<Rational> {
    let mut out = vec![Rational::infinity()];
    for s in 1..=bound {
        for r in -bound..=bound {
            if gcd(r, s) == 1 {
                out.push(rat(r, s));
            }
        }
    }
    out
}

/// All reduced braid words of length ≤ `len` (no letter followed by its
/// inverse).
fn reduced_words(len: usize) -> Vec<BraidWord> {
    let gens = [Gen::S1, Gen::S1Inv, Gen::S2, Gen::S2Inv];
    let mut frontier = vec![BraidWord::identity()];
    let mut all = frontier.clone();
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &frontier {
            for g in gens {
                let nw = w.concat(&BraidWord::new([g]));
                if nw.len() == w.len() + 1 {
                    next.push(nw);
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

#[test]
fn criterion_1_figure_regression() {
    let pinned = [
        ((1, 2), 0.3, 0.2307692308),
        ((1, 3), 0.3, 0.0647482014),
        ((2, 3), 0.3, 0.2805755396),
        ((1, 2), 0.7, 0.4117647059),
    ];
    for ((r, s), q, want) in pinned {
        let (num, den) = deform(&rat(r, s), Side::Sharp).unwrap();
        let value = num.eval_f64(q).unwrap() / den.eval_f64(q).unwrap();
        assert!(
            (value - want).abs() < 1e-8,
            "[{r}/{s}] at q={q}: {value} != {want}"
        );
    }
    println!("criterion 1 (figure regression): PASS");
}

#[test]
fn criterion_2_route_agreement() {
    let mut checked = 0usize;
    for x in rationals_up_to(30) {
        for side in [Side::Sharp, Side::Flat] {
            let braid = deform_braid_route(&x, side).unwrap();
            let cf = deform_cf_route(&x, side).unwrap();
            assert!(braid.fraction_eq(&cf), "route mismatch at {x}");
        }
        if !x.is_infinite() {
            let report = matrix_formula_check(&x).unwrap();
            assert!(report.ok(), "matrix formula fails at {x}");
        }
        checked += 1;
    }
    println!("criterion 2 (route agreement on {checked} rationals): PASS");
}

#[test]
fn criterion_3_rouquier_zimmermann_exhaustive() {
    let aut = c2_automaton();
    let words = reduced_words(8);
    for w in &words {
        let x = apply_braid(&aut, &p1(), w).unwrap();
        let right = rz_right(&x).unwrap();
        let (sn, sd) = deform(&x.label, Side::Sharp).unwrap();
        assert_eq!((right.numer, right.denom), (sn, sd), "occ route at {w}");
        let left = rz_left(&aut, &x).unwrap();
        let (fnum, fden) = deform(&x.label, Side::Flat).unwrap();
        assert_eq!((left.numer, left.denom), (fnum, fden), "hom route at {w}");
    }
    println!(
        "criterion 3 (occ/hom vs deformations on {} words): PASS",
        words.len()
    );
}

#[test]
fn criterion_4_automaton_matrix_cross_validation() {
    let aut = c2_automaton();
    let words = reduced_words(8);
    for w in &words {
        assert!(
            matrix_route_check(&aut, w).unwrap(),
            "matrix route mismatch at {w}"
        );
    }
    println!(
        "criterion 4 (automaton vs matrix route on {} words): PASS",
        words.len()
    );
}

#[test]
fn criterion_5_jones_routes() {
    // Pinned knots.
    assert_eq!(
        jones_abs(&rat(3, 1)).unwrap(),
        LaurentPoly::from_terms(&[(0, 1), (1, 1), (3, 1)])
    );
    assert_eq!(
        jones_abs(&rat(5, 2)).unwrap(),
        LaurentPoly::from_terms(&[(0, 1), (1, 1), (2, 1), (3, 1), (4, 1)])
    );
    // All r/s in (1, ∞) whose H quiver has at most 20 vertices; the
    // vertex count grows with r + s, so r + s ≤ 25 covers the range.
    let mut checked = 0usize;
    for s in 1..=24i64 {
        for r in (s + 1)..=(25 - s) {
            if gcd(r, s) != 1 {
                continue;
            }
            let x = rat(r, s);
            let h = build_quiver(&x, Family::H).unwrap();
            if h.n > 20 {
                continue;
            }
            // jones_abs itself asserts closure counts == R♭ numerator.
            jones_abs(&x).unwrap();
            let dp = count_closures_dp(&h).unwrap();
            let bf = count_closures_bruteforce(&h).unwrap();
            assert_eq!(dp, bf, "DP vs brute force at {x}");
            checked += 1;
        }
    }
    assert!(checked > 50);
    println!("criterion 5 (Jones routes on {checked} knots + pinned cases): PASS");
}

#[test]
fn criterion_6_tail_limits() {
    let bases: &[&[i64]] = &[
        &[],
        &[1, 1],
        &[2, 2],
        &[2, 3],
        &[1, 2, 1, 2],
        &[3, 1, 2, 2],
        &[2, 1, 1, 3],
        &[1, 4],
    ];
    let mut runs = 0usize;
    for digits in bases {
        let cf = EvenCF::from_i64(digits);
        for q in [0.3, 0.5, 0.7] {
            for side in [Approach::Left, Approach::Right] {
                // ∞ is the right edge of the boundary: only the left
                // (increasing) tail sequence exists for the empty base.
                if digits.is_empty() && side == Approach::Right {
                    continue;
                }
                let report = tail_limit_check(&cf, side, q, 60).unwrap();
                let by = report
                    .converged_by
                    .unwrap_or_else(|| panic!("no convergence for {digits:?} at q={q}"));
                assert!(by <= 60, "slow convergence for {digits:?} at q={q}");
                let slack = 4e-15 * (1.0 + report.target.abs());
                for step in &report.steps {
                    assert!(
                        step.error <= step.bound + slack,
                        "bound fails at m={} for {digits:?}, q={q}: {} > {}",
                        step.m,
                        step.error,
                        step.bound
                    );
                }
                runs += 1;
            }
        }
    }
    println!("criterion 6 (tail limits, {runs} runs): PASS");
}

#[test]
fn criterion_7_boundary_classification() {
    // Exact endpoint recovery at q = 3/10.
    let q = BigRational::new(BigInt::from(3), BigInt::from(10));
    let tol = BigRational::new(BigInt::one(), BigInt::from(10u64.pow(12)));
    let mut endpoints = 0usize;
    for x in rationals_up_to(20) {
        if x.is_infinite() {
            continue;
        }
        for side in [Side::Flat, Side::Sharp] {
            let (num, den) = deform(&x, side).unwrap();
            let d = den.eval_rational(&q).unwrap();
            if d == BigRational::from(BigInt::from(0)) {
                continue;
            }
            let p = num.eval_rational(&q).unwrap() / d;
            let class = classify_boundary_point_exact(&p, &q, 64, &tol).unwrap();
            assert_eq!(class.kind, BoundaryKind::IntervalPoint, "at {x}");
            assert_eq!(class.rational, Some(x.clone()), "wrong rational at {x}");
            let want_t = if side == Side::Sharp { 1.0 } else { 0.0 };
            let t = class.t.unwrap();
            assert!((t - want_t).abs() < 1e-9, "t = {t} at {x}");
            endpoints += 1;
        }
    }
    // Quadratic irrationals: eventually periodic digit streams.
    let streams: [Vec<i64>; 10] = [
        vec![1; 80],
        vec![2; 80],
        [1, 2].repeat(40),
        [2, 1].repeat(40),
        vec![3; 80],
        [1, 3].repeat(40),
        [3, 1].repeat(40),
        [2, 3].repeat(40),
        [1, 1, 2, 2].repeat(20),
        [4, 4].repeat(40),
    ];
    // Digit-dense streams converge below f64 resolution at q = 0.3, so
    // the deep prefix is evaluated and classified in exact arithmetic.
    let fine_tol = BigRational::new(BigInt::one(), BigInt::from(10u64).pow(40));
    for digits in &streams {
        let p = eval_digits_sharp_exact(&digits[..60], &q).unwrap();
        let class = classify_boundary_point_exact(&p, &q, 12, &fine_tol).unwrap();
        assert_eq!(class.kind, BoundaryKind::Irrational, "stream {digits:?}");
        assert_eq!(
            class.cf_prefix.unwrap(),
            digits[..12].to_vec(),
            "prefix mismatch for {digits:?}"
        );
    }
    // f64 route on the slow golden stream, as in the module example.
    let (p, _) = q_irrational(0.3, &streams[0], 60).unwrap();
    let class = classify_boundary_point(p, 0.3, 12).unwrap();
    assert_eq!(class.kind, BoundaryKind::Irrational);
    assert_eq!(class.cf_prefix.unwrap(), vec![1i64; 12]);
    println!(
        "criterion 7 (boundary classification, {endpoints} endpoints + 10 irrationals): PASS"
    );
}

#[test]
fn criterion_8_stability_numerics() {
    // Triangle inequalities and the degeneracy dichotomy.
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for q in [0.3, 0.5, 0.7] {
        for _ in 0..1000 {
            let tau = sample_standard(&mut rng);
            let report = degeneracy_check(&tau, q).unwrap();
            for m in report.margins {
                assert!(m >= -1e-12, "triangle inequality violated: {m}");
            }
            if (tau.phi1() - tau.phi2()).abs() > 0.01 {
                assert!(report.strict && !report.sum_equality);
            }
        }
        let degenerate = StdStabCond::new(
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, 2.0),
        )
        .unwrap();
        let report = degeneracy_check(&degenerate, q).unwrap();
        assert!(report.sum_equality && !report.strict);
    }
    // T_{q,c} strictly decreasing on dense grids.
    for q in [0.3, 0.7] {
        for c in [0.5, 1.0, 2.0] {
            let mut prev = f64::INFINITY;
            for k in 0..=1000 {
                let v = sss_T(q, c, k as f64 / 1000.0).unwrap();
                assert!(v < prev, "T not decreasing at q={q}, c={c}, k={k}");
                prev = v;
            }
        }
    }
    // Boundary limit convergence.
    let probes = default_probes();
    for braid in ["", "s1^-2 s2^2", "s2 s1^-1"] {
        let w: BraidWord = braid.parse().unwrap();
        let report = boundary_limit(&w, 0.5, &probes, 60).unwrap();
        assert!(
            *report.distances.last().unwrap() < 1e-6,
            "no convergence for {braid:?}"
        );
    }
    println!("criterion 8 (stability numerics, 3000 samples + limits): PASS");
}

#[test]
fn criterion_9_order_disjointness_bilinearity() {
    // Order and interval disjointness on 1000 random rational pairs.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let sample = |rng: &mut ChaCha8Rng| loop {
        let s = rng.gen_range(1..=40i64);
        let r = rng.gen_range(-40..=40i64);
        if gcd(r, s) == 1 {
            return rat(r, s);
        }
    };
    let mut pairs = 0usize;
    while pairs < 1000 {
        let a = sample(&mut rng);
        let b = sample(&mut rng);
        let (lo, hi) = match a.cmp_extended(&b) {
            std::cmp::Ordering::Less => (a, b),
            std::cmp::Ordering::Greater => (b, a),
            std::cmp::Ordering::Equal => continue,
        };
        for q in [0.3, 0.7] {
            // The whole closed interval of the smaller rational precedes
            // the interval of the larger: order plus disjointness.
            assert!(order_check(&lo, &hi, q).unwrap(), "{lo} vs {hi} at q={q}");
        }
        pairs += 1;
    }
    // Bilinear occ identity (units per term) on random word pairs.
    let aut = c2_automaton();
    let words = reduced_words(6);
    let mut checked = 0usize;
    for _ in 0..200 {
        let wx = &words[rng.gen_range(0..words.len())];
        let wy = &words[rng.gen_range(0..words.len())];
        let x = apply_braid(&aut, &p1(), wx).unwrap();
        let y = apply_braid(&aut, &p1(), wy).unwrap();
        assert!(
            bilinear_check(&aut, &x, &y, 8).unwrap(),
            "bilinearity fails for {wx} / {wy}"
        );
        checked += 1;
    }
    println!(
        "criterion 9 (order on {pairs} pairs, bilinearity on {checked} pairs): PASS"
    );
}
