//! Acceptance gate: one test per criterion, each printing a pass line.
//!
//! Criteria that adjudicate printed formulas allow a "refuted as printed"
//! outcome, in which case the test asserts that the ledger isolates the
//! discrepancy set and documents the correction, rather than a blanket
//! match.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_rational::{BigRational, Ratio};
use num_traits::{ToPrimitive, Zero};

use cruciform::analysis::{occupation_heatmap, sample_many, sample_uniform};
use cruciform::closed_forms::{
    aztec_value, conjecture_value, corollary_value, cruciform_value, elbow_value,
    half_square_value, t_region_value,
};
use cruciform::dualgraph::dual_graph;
use cruciform::engines::{
    count, count_brute, count_kasteleyn, count_transfer, BigCount, Engine,
};
use cruciform::geometry::{
    build_aztec_diamond, build_aztec_rectangle, build_cruciform, build_di_francesco, build_elbow,
    build_half_square, build_rectangle, build_t_region, CruciformParams, Region,
};
use cruciform::verifier::{
    verify_complementation_chain, verify_complementation_counts, verify_conjecture,
    verify_cruciform_formula, verify_divisibility, verify_elbow_formula, verify_intruded_formula,
    verify_reduction_chain, verify_splitting, Status, VerificationReport, Verdict,
};
use cruciform::ExactScaled;

fn pass(id: u32, what: &str) {
    println!("ACCEPTANCE criterion {id:02}: PASS — {what}");
}

fn u(count: &BigCount) -> u64 {
    count.to_u64().expect("fits in u64")
}

fn cruciform_region(m: i64, n: i64, a: i64, b: i64, c: i64, d: i64) -> Region {
    build_cruciform(CruciformParams::new(m, n, a, b, c, d).unwrap()).unwrap()
}

/// Every constructor swept over its valid small parameters, keeping regions
/// of at most `cap` cells, plus all rectangles up to 8x8.
fn corpus(cap: usize) -> Vec<Region> {
    let mut regions = Vec::new();
    for m in 0..=3i64 {
        for n in 0..=3i64 {
            for a in 0..=m.min(3) {
                for c in 0..=m.min(3) {
                    for b in -2..=3i64 {
                        for d in -2..=3i64 {
                            if let Ok(p) = CruciformParams::new(m, n, a, b, c, d) {
                                regions.push(build_cruciform(p).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }
    for n in 1..=4i64 {
        regions.push(build_aztec_diamond(n).unwrap());
        for a in 0..=n {
            if let Ok(r) = build_elbow(n, a, n - a) {
                regions.push(r);
            }
        }
    }
    for m in 0..=6i64 {
        for n in 0..=6i64 {
            if let Ok(r) = build_aztec_rectangle(m, n) {
                regions.push(r);
            }
        }
    }
    for m in 1..=2i64 {
        for n in 0..=2i64 {
            for b in -2..=2i64 {
                for c in 0..=m {
                    for d in -2..=2i64 {
                        if let Ok(r) = build_t_region(m, n, b, c, d) {
                            regions.push(r);
                        }
                    }
                }
            }
        }
    }
    for n in 1..=4i64 {
        regions.push(build_half_square(n).unwrap());
    }
    for n in 1..=3i64 {
        regions.push(build_di_francesco(n).unwrap());
    }
    for w in 1..=8i64 {
        for h in 1..=8i64 {
            regions.push(build_rectangle(w, h).unwrap());
        }
    }
    regions.retain(|r| r.len() <= cap || (r.label().starts_with("rect") && r.len() <= 64));
    regions
}

#[test]
fn criterion_01_engine_agreement() {
    let regions = corpus(40);
    assert!(regions.len() > 100, "corpus too small: {}", regions.len());
    let mut compared = 0usize;
    for region in &regions {
        let reference = count(region, Engine::Auto).unwrap();
        if region.len() <= 40 {
            assert_eq!(
                count_brute(&dual_graph(region)).unwrap(),
                reference,
                "brute disagrees on {}",
                region.label()
            );
            compared += 1;
        }
        if let Ok(t) = count_transfer(region) {
            assert_eq!(t, reference, "transfer disagrees on {}", region.label());
        }
        if region.is_simply_connected() {
            if let Ok(k) = count_kasteleyn(region) {
                assert_eq!(k, reference, "kasteleyn disagrees on {}", region.label());
            }
        }
    }
    pass(1, &format!("{} regions, {} brute-checked, all engines agree", regions.len(), compared));
}

#[test]
fn criterion_02_aztec_diamond_theorem() {
    for n in 1..=6i64 {
        let ad = build_aztec_diamond(n).unwrap();
        let expected = aztec_value(n as u64);
        assert_eq!(count_transfer(&ad).unwrap(), expected, "transfer at n={n}");
        assert_eq!(count_kasteleyn(&ad).unwrap(), expected, "kasteleyn at n={n}");
    }
    pass(2, "count(AD_n) = 2^{n(n+1)/2} for n = 1..6 on two engines");
}

#[test]
fn criterion_03_hand_anchored_counts() {
    let cases: Vec<(Region, u64)> = vec![
        (cruciform_region(1, 1, 1, 0, 0, 0), 8),
        (cruciform_region(1, 1, 0, 1, 1, -1), 4),
        (build_t_region(1, 1, 0, 0, 0).unwrap(), 4),
        (build_elbow(1, 0, 1).unwrap(), 2),
        (build_elbow(2, 1, 1).unwrap(), 32),
        (build_half_square(2).unwrap(), 3),
        (build_di_francesco(2).unwrap(), 4),
    ];
    for (region, expected) in &cases {
        assert_eq!(
            u(&count(region, Engine::Auto).unwrap()),
            *expected,
            "hand anchor for {}",
            region.label()
        );
        assert_eq!(
            u(&count_brute(&dual_graph(region)).unwrap()),
            *expected,
            "brute hand anchor for {}",
            region.label()
        );
    }
    pass(3, "all seven hand-enumerated counts reproduced on two engines");
}

#[test]
fn criterion_04_cruciform_formula_sweep() {
    let report = verify_cruciform_formula();
    assert!(!report.hard_failure, "{:?}", report.notes);
    assert!(report.entries.len() >= 300, "sweep too small");
    match report.verdict {
        Verdict::Confirmed => pass(4, "printed cruciform formula matches all counts"),
        Verdict::RefutedAsPrinted => {
            // the ledger must isolate the discrepancy set and document a
            // correction that covers the whole sweep
            let correction = report
                .notes
                .iter()
                .find(|n| n.contains("candidate correction"))
                .expect("correction note present");
            assert!(
                correction.contains(&format!(
                    "on {} of {} swept tuples",
                    report.entries.len(),
                    report.entries.len()
                )),
                "correction does not cover the sweep: {correction}"
            );
            assert!(report.mismatches() > 0 && report.matches() > 0);
            pass(
                4,
                &format!(
                    "refuted as printed: {} of {} tuples deviate; sign-flip of the (a+c)(b+d)/2 term fixes all",
                    report.mismatches(),
                    report.entries.len()
                ),
            );
        }
        Verdict::Undecided => panic!("cruciform sweep undecided"),
    }
}

#[test]
fn criterion_05_elbow_formula_sweep() {
    let report = verify_elbow_formula();
    assert_eq!(report.verdict, Verdict::Confirmed, "{:?}", report.entries);
    assert_eq!(report.mismatches(), 0);
    // spot-check the formula values directly
    assert_eq!(
        elbow_value(3, 1, 2).unwrap().to_biguint().unwrap(),
        BigUint::from(960u32)
    );
    pass(5, "elbow counts equal the product formula for all a+b = n <= 4");
}

#[test]
fn criterion_06_corollary_identity_and_divisibility() {
    for n in 1..=30i64 {
        assert_eq!(
            corollary_value(n).unwrap(),
            elbow_value(2 * n - 1, n - 1, n).unwrap(),
            "identity at n={n}"
        );
    }
    let divisor = |n: i64| corollary_value(n).unwrap().to_biguint().unwrap();
    assert_eq!(divisor(1), BigUint::from(2u32));
    assert_eq!(divisor(2), BigUint::from(960u32));
    let counts: Vec<BigUint> = (1..=3)
        .map(|n| count(&build_di_francesco(n).unwrap(), Engine::Auto).unwrap())
        .collect();
    assert_eq!(counts[0], BigUint::from(1u32));
    assert_eq!(counts[1], BigUint::from(4u32));
    assert_eq!(counts[2], BigUint::from(60u32));
    for (i, cnt) in counts.iter().enumerate() {
        let n = i as i64 + 1;
        assert!(
            (divisor(n) % cnt).is_zero(),
            "count(T_{n}) does not divide the stated value"
        );
    }
    pass(6, "divisor identity for n <= 30; 1 | 2, 4 | 960, 60 | divisor(3)");
}

#[test]
fn criterion_07_conjectured_counts() {
    let expected = [1u64, 4, 60, 3328, 678912];
    for (i, &want) in expected.iter().enumerate() {
        let n = i as i64 + 1;
        let region = build_di_francesco(n).unwrap();
        assert_eq!(u(&count_transfer(&region).unwrap()), want, "T_{n}");
        assert_eq!(
            conjecture_value(n).unwrap(),
            BigUint::from(want),
            "formula at n={n}"
        );
    }
    pass(7, "count(T_n) = 1, 4, 60, 3328, 678912 for n = 1..5, equal to the conjectured products");
}

#[test]
fn criterion_08_splitting_identity() {
    let report = verify_splitting();
    assert!(!report.hard_failure, "{:?}", report.notes);
    assert_eq!(report.verdict, Verdict::Confirmed, "{:?}", report.entries);
    assert!(report
        .notes
        .iter()
        .any(|n| n.contains("formula-level splitting identity verified on 1407")));
    // direct formula-level instance at larger parameters
    let lhs = cruciform_value(8, 8, 8, 2, 3, 2).unwrap();
    let rhs = t_region_value(8, 8, 2, 3, 2).unwrap() * ExactScaled::pow2(Ratio::from_integer(36));
    assert_eq!(lhs, rhs);
    pass(8, "splitting exact at count level (m,n <= 2) and formula level (m,n <= 8)");
}

#[test]
fn criterion_09_complementation_adjudication() {
    // count-level theorem, brute force as arbiter on small pairs
    let counts = verify_complementation_counts();
    assert_eq!(counts.verdict, Verdict::Confirmed, "{:?}", counts.entries);
    for (t, e) in [
        ((1i64, 1i64, 0i64, 0i64, 0i64, 1i64), -1i64),
        ((1, 1, 1, 0, 0, 0), -2),
        ((2, 1, 1, 1, 0, 0), -2),
    ] {
        let (m, n, a, b, c, d) = t;
        let lhs = count_brute(&dual_graph(&cruciform_region(m, n, a, b, c, d))).unwrap();
        let rhs = count_brute(&dual_graph(&cruciform_region(
            m + 1,
            n - 1,
            a + 1,
            b - 1,
            c + 1,
            d - 1,
        )))
        .unwrap();
        let (lhs_scaled, rhs_scaled) = if e >= 0 {
            (lhs, rhs * BigUint::from(2u32).pow(e as u32))
        } else {
            (lhs * BigUint::from(2u32).pow((-e) as u32), rhs)
        };
        assert_eq!(lhs_scaled, rhs_scaled, "brute arbiter at {t:?}");
    }
    // formula-level chain: the worked pair plus a broad sweep
    let chain = verify_complementation_chain();
    let worked = chain
        .entries
        .iter()
        .find(|e| e.params == "m=9,n=6,a=3,b=4,c=5,d=2")
        .expect("worked pair present");
    assert!(
        worked.formula_pow2.contains("printed: -4"),
        "expected printed step exponent -4, got {}",
        worked.formula_pow2
    );
    assert_eq!(worked.status, Status::Mismatch);
    assert!(chain.entries.len() >= 51, "need >= 50 pairs beyond the worked one");
    assert_eq!(chain.verdict, Verdict::RefutedAsPrinted);
    let locus = chain
        .notes
        .iter()
        .find(|n| n.contains("agree exactly on the locus"))
        .expect("agreement locus note present");
    // (-2)m + (-2)n + 4a + 4c + 6 = 0  <=>  a + c = (m+n-3)/2
    assert!(locus.contains("(-2)*m + (-2)*n + (4)*a + (4)*c + (6)"), "{locus}");
    pass(
        9,
        &format!(
            "count-level step confirmed ({} pairs, brute-arbitered); printed end formula inconsistent with the printed step except on a+c = (m+n-3)/2 ({} pairs)",
            counts.entries.len(),
            chain.entries.len()
        ),
    );
}

#[test]
fn criterion_10_intruded_rectangle_adjudication() {
    let report = verify_intruded_formula();
    assert!(!report.hard_failure, "{:?}", report.notes);
    assert!(report.entries.len() >= 50);
    let known = report
        .entries
        .iter()
        .find(|e| e.params.ends_with("(from m=1,n=0,a=0,b=0,c=0,d=0)"))
        .expect("known mismatch tuple present");
    assert_eq!(known.count, "2");
    assert_eq!(known.status, Status::Mismatch);
    // printed value 16 = 2^4 * 1, engine count 2, ratio 2^3
    assert_eq!(known.formula_pow2, "4");
    assert_eq!(known.formula_rational, "1");
    assert!(known.ratio.contains("2^3"), "ratio should be 2^3, got {}", known.ratio);
    assert_eq!(report.verdict, Verdict::RefutedAsPrinted);
    // the true value is the sign-corrected cruciform formula divided by the
    // telescoped prefactor — the suite cross-checks this on every tuple
    assert!(report
        .notes
        .iter()
        .any(|n| n.contains("equals the graph count on 108 of 108 tuples")));
    // chain itself is count-level exact
    assert_eq!(verify_reduction_chain().verdict, Verdict::Confirmed);
    pass(
        10,
        "printed intruded-rectangle value refuted (16 vs engine 2 at the unit tuple); corrected chain exact on all tuples",
    );
}

#[test]
fn criterion_11_formula_level_invariants() {
    let mut checked = 0usize;
    for m in 0..=12i64 {
        for n in 0..=12i64 {
            for a in 0..=m.min(3) {
                for c in 0..=m.min(3) {
                    for b in -2..=3i64 {
                        let d = m + n - 1 - a - b - c;
                        if CruciformParams::new(m, n, a, b, c, d).is_err() {
                            continue;
                        }
                        let v = cruciform_value(m, n, a, b, c, d).unwrap();
                        // exponent integrality on balanced tuples
                        assert!(
                            v.exponent().is_integer(),
                            "fractional exponent at ({m},{n},{a},{b},{c},{d})"
                        );
                        // half-turn symmetry of the region: (a,b,c,d) -> (c,d,a,b)
                        assert_eq!(v, cruciform_value(m, n, c, d, a, b).unwrap());
                        // mirror symmetry swaps the roles of the axes
                        if b >= 0 && d >= 0 && CruciformParams::new(n, m, b, a, d, c).is_ok() {
                            assert_eq!(v, cruciform_value(n, m, b, a, d, c).unwrap());
                        }
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 1000, "sweep too small: {checked}");
    // Aztec specialization
    for m in 1..=12i64 {
        for a in 0..m {
            let v = cruciform_value(m, 0, a, 0, m - 1 - a, 0).unwrap();
            assert_eq!(v.to_biguint().unwrap(), aztec_value(m as u64));
        }
    }
    pass(
        11,
        &format!("dihedral symmetry, integrality and the 2^{{m(m+1)/2}} specialization on {checked} tuples"),
    );
}

#[test]
fn criterion_12_probabilities_and_sampling() {
    // exact conservation of occupation probabilities
    for region in [build_aztec_diamond(2).unwrap(), build_di_francesco(3).unwrap()] {
        let heatmap = occupation_heatmap(&region);
        let sum: BigRational = heatmap.iter().map(|(_, p)| p.clone()).sum();
        assert_eq!(
            sum,
            BigRational::from_integer((region.len() as i64 / 2).into()),
            "conservation on {}",
            region.label()
        );
    }
    // sampler uniformity on AD_2: 8 tilings, 8000 samples, chi-square
    // df = 7, critical value 24.322 at p = 0.001
    let ad2 = build_aztec_diamond(2).unwrap();
    let samples = sample_many(&ad2, 20240611, 8000);
    assert_eq!(samples.len(), 8000);
    let mut freq = std::collections::BTreeMap::new();
    for t in &samples {
        *freq.entry(t.dominoes.clone()).or_insert(0usize) += 1;
    }
    assert_eq!(freq.len(), 8, "all 8 tilings of AD_2 observed");
    let chi2: f64 = freq
        .values()
        .map(|&obs| {
            let diff = obs as f64 - 1000.0;
            diff * diff / 1000.0
        })
        .sum();
    assert!(chi2 < 24.322, "chi-square statistic {chi2} too large");
    // seed reproducibility
    assert_eq!(sample_many(&ad2, 99, 50), sample_many(&ad2, 99, 50));
    assert_eq!(sample_uniform(&ad2, 7), sample_uniform(&ad2, 7));
    let distinct: BTreeSet<_> = (0..20).map(|s| sample_uniform(&ad2, s).unwrap().dominoes).collect();
    assert!(distinct.len() > 1, "different seeds should vary");
    pass(
        12,
        &format!("conservation exact; uniformity chi-square {chi2:.2} < 24.322; seeds reproducible"),
    );
}

#[test]
fn criterion_13_half_square_diagnostic() {
    // Non-gating adjudication: the printed trigonometric product does not
    // reproduce the exact counts; it is not even integral at n = 1, 2.
    let mut lines = Vec::new();
    for n in 1..=3u32 {
        let region = build_half_square(n as i64).unwrap();
        let cnt = count(&region, Engine::Auto).unwrap();
        let interval = half_square_value(n, 128);
        let count_rational = BigRational::from_integer(cnt.to_i64().unwrap().into());
        let contains_count = interval.lo <= count_rational && count_rational <= interval.hi;
        assert!(
            !contains_count,
            "printed product unexpectedly matches the count at n={n}"
        );
        if n <= 2 {
            assert!(
                interval.unique_integer().is_none(),
                "printed product should be non-integral at n={n}"
            );
        }
        lines.push(format!(
            "n={n}: count {cnt} vs product ~{:.4}",
            interval.midpoint_f64()
        ));
    }
    pass(13, &format!("documented discrepancy ({})", lines.join("; ")));
}

#[test]
fn full_report_is_consistent() {
    // One shared invariant across the gate: the overall report never shows
    // an engine-level failure, and its exit code reflects the printed
    // formula adjudication.
    let report = VerificationReport {
        suites: vec![
            verify_conjecture(),
            verify_divisibility(),
        ],
    };
    assert!(!report.hard_failure());
    assert_eq!(report.exit_code(), 0);
}
