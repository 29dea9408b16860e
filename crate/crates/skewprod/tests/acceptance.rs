//! Acceptance suite: one test per headline criterion, each printing a
//! PASS/FAIL line and enforcing its runtime budget.
//!
//! Run with `cargo test -p skewprod --test acceptance -- --nocapture` to see
//! the lines as they complete.

use std::time::{Duration, Instant};

use skewprod::classify::{run_case, run_examples, run_noncorefree_sym5, run_theorem, CaseReport, RunCfg, TotalBasis};
use skewprod::{catalog, oracle};

fn cfg() -> RunCfg {
    RunCfg::default()
}

fn claim_detail<'a>(report: &'a CaseReport, id: &str) -> &'a str {
    report
        .claims
        .iter()
        .find(|c| c.id == id)
        .map(|c| c.detail.as_str())
        .unwrap_or_else(|| panic!("{}: claim {id} missing", report.id))
}

fn assert_all_claims(report: &CaseReport) {
    for c in &report.claims {
        assert!(c.pass, "{}: claim {} failed: {}", report.id, c.id, c.detail);
    }
}

fn finish(name: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    assert!(
        elapsed < budget,
        "{name}: took {elapsed:?}, budget {budget:?}"
    );
    println!("PASS: {name} ({elapsed:.2?})");
}

#[test]
fn criterion_case1_alt5() {
    let t = Instant::now();
    let r = run_case(1, None, &cfg());
    assert_all_claims(&r);
    assert_eq!(r.total, Some(240));
    assert_eq!(r.total_basis, Some(TotalBasis::Exact));
    assert_eq!(r.class_count, Some(2));
    assert_eq!(r.class_sizes, vec![120, 120]);
    let cert = r.certificate.as_ref().expect("certificate");
    assert_eq!(cert.cycle_length, 11);
    let sig: Vec<(u32, u32)> = cert.signature.iter().map(|(&o, &c)| (o, c)).collect();
    assert_eq!(sig, vec![(2, 3), (3, 4), (5, 4)]);
    finish(
        "case 1: Alt(5) has 240 proper skew morphisms in 2 inverse-paired classes of 120",
        t,
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_case2_m10() {
    let t = Instant::now();
    let r = run_case(2, None, &cfg());
    assert_all_claims(&r);
    assert_eq!(r.total, Some(2880));
    assert_eq!(r.class_sizes, vec![1440, 1440]);
    let cert = r.certificate.as_ref().expect("certificate");
    let sig: Vec<(u32, u32)> = cert.signature.iter().map(|(&o, &c)| (o, c)).collect();
    assert_eq!(sig, vec![(2, 3), (4, 6), (8, 2)]);
    finish(
        "case 2: M10 has 2880 proper skew morphisms with certificate {2:3, 4:6, 8:2}",
        t,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_case3_m22() {
    let t = Instant::now();
    let r = run_case(3, None, &cfg());
    assert_all_claims(&r);
    assert_eq!(r.pair_orbits, Some(2));
    assert_eq!(r.total, Some(1_774_080));
    assert_eq!(r.total_basis, Some(TotalBasis::FormulaBased));
    let axioms = claim_detail(&r, "axioms");
    assert!(
        axioms.contains("Sampled over 1000000 pairs, 0 failures"),
        "unexpected axiom detail: {axioms}"
    );
    let cert = r.certificate.as_ref().expect("certificate");
    let sig: Vec<(u32, u32)> = cert.signature.iter().map(|(&o, &c)| (o, c)).collect();
    assert_eq!(sig, vec![(2, 7), (7, 8), (11, 8)]);
    finish(
        "case 3: M22 has two pair orbits, clean sampled axioms, certificate {2:7, 7:8, 11:8}, total 1774080",
        t,
        Duration::from_secs(600),
    );
}

#[test]
fn criterion_cases_4_and_5() {
    let t = Instant::now();
    for (k, sig_want) in [(4u32, vec![(2, 3), (5, 4)]), (5, vec![(2, 5), (6, 2)])] {
        let r = run_case(k, None, &cfg());
        assert_all_claims(&r);
        assert_eq!(r.class_count, Some(1), "case {k}");
        assert_eq!(r.class_sizes, vec![1440], "case {k}");
        assert_eq!(claim_detail(&r, "aut_order"), "1440");
        let cert = r.certificate.as_ref().expect("certificate");
        let sig: Vec<(u32, u32)> = cert.signature.iter().map(|(&o, &c)| (o, c)).collect();
        assert_eq!(sig, sig_want, "case {k}");
    }
    finish(
        "cases 4-5: Alt(6) and Sym(6) each have a single class of 1440, automorphism groups of order 1440",
        t,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_case6_alt8() {
    let t = Instant::now();
    let r = run_case(6, Some(8), &cfg());
    assert_all_claims(&r);
    assert!(claim_detail(&r, "power_formula").contains("20160"));
    assert_eq!(claim_detail(&r, "injectivity_sampled"), "500");
    assert_eq!(claim_detail(&r, "injectivity_full_alt6"), "(720, 720)");
    assert_eq!(claim_detail(&r, "cycle_set_generates"), "20160");
    assert_eq!(r.total, Some(40_320));
    finish(
        "case 6: Alt(8) power formula over all 20160 elements, printed cycle set generates, injectivity checks clean",
        t,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_case7_sym5_sym7() {
    let t = Instant::now();
    for (n, total) in [(5u32, 120u64), (7, 5040)] {
        let r = run_case(7, Some(n), &cfg());
        assert_all_claims(&r);
        assert_eq!(r.class_count, Some(1), "n = {n}");
        assert_eq!(r.class_sizes, vec![total], "n = {n}");
        assert_eq!(r.total, Some(total), "n = {n}");
        let cert = r.certificate.as_ref().expect("certificate");
        assert_eq!(cert.cycle_length, n as usize + 1);
    }
    finish(
        "case 7: Sym(5) and Sym(7) each have a single class of n!, with the long-cycle-plus-transpositions set generating",
        t,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_noncorefree_sym5() {
    let t = Instant::now();
    let r = run_noncorefree_sym5(&cfg());
    assert_all_claims(&r);
    assert_eq!(r.class_sizes, vec![20, 30, 24, 20]);
    assert_eq!(r.total, Some(94));
    // C4 and C6 admit no complement at all.
    assert!(claim_detail(&r, "c4/no_complement").contains("0 complement"));
    assert!(claim_detail(&r, "c6/no_complement").contains("0 complement"));
    finish(
        "non-core-free Sym(5): classes 20+30+24+20 = 94, no complements over C4/C6, socle restrictions and index-2 conclusions hold",
        t,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_theorem_factorizations() {
    let t = Instant::now();
    let reports = run_theorem(&cfg());
    let ids: Vec<&str> = reports.iter().map(|r| r.id.as_str()).collect();
    for want in [
        "theorem_sym6",
        "theorem_sym7",
        "theorem_sym8",
        "theorem_sym9",
        "theorem_alt7",
        "theorem_alt9",
        "theorem_psl2_11",
        "theorem_m11",
        "theorem_m23",
    ] {
        assert!(ids.contains(&want), "missing line {want}");
    }
    for r in &reports {
        assert_all_claims(r);
    }
    finish(
        "factorisation catalogue: all nine listed lines validate with core-free bases (dual-route cores agree)",
        t,
        Duration::from_secs(180),
    );
}

#[test]
fn criterion_example_families() {
    let t = Instant::now();
    let reports = run_examples(&cfg());
    for r in &reports {
        assert_all_claims(r);
    }
    let sharp3 = reports.iter().find(|r| r.id == "sharp_p3").expect("sharp_p3");
    assert_eq!(claim_detail(sharp3, "socle_centralizer_in_complement"), "2");
    assert_eq!(claim_detail(sharp3, "base_over_socle"), "3");
    for id in ["product_alt5_c3", "product_alt5_c5", "product_alt7_c7"] {
        let r = reports.iter().find(|r| r.id == id).expect(id);
        assert_eq!(claim_detail(r, "socle_centralizer_in_complement"), "1");
    }
    let wreath = reports.iter().find(|r| r.id == "wreath_alt5_sym4").expect("wreath");
    assert_eq!(claim_detail(wreath, "group_order"), "311040000");
    finish(
        "example families: sharpness at p = 3 gives |Z| = 2 = |B/A| - 1, products give |C_G(A)| = m, wreath instance on 20 points validates",
        t,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_oracle_agreement() {
    let t = Instant::now();
    let names = [
        "c2", "c3", "c4", "c5", "c6", "c7", "c8", "c9", "c10", "klein", "s3", "d4", "q8",
        "c2xc4",
    ];
    for name in names {
        let b = catalog::parse_spec(name).expect(name);
        let brute = oracle::brute_enumerate(name, &b).expect(name);
        let pipeline = oracle::pipeline_census(name, &b).expect(name);
        assert!(
            oracle::routes_agree(&brute, &pipeline),
            "{name}: censuses disagree (brute {}, pipeline {})",
            brute.total,
            pipeline.total
        );
        for m in &brute.morphisms {
            assert!(m.kernel_order > 1, "{name}: trivial kernel in census");
            assert!(
                (m.order as usize) < brute.group_order || brute.group_order == 1,
                "{name}: morphism order not below the group order"
            );
        }
    }
    finish(
        "oracle agreement: both censuses coincide on all fourteen tiny groups, kernels nontrivial and orders in range",
        t,
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_deterministic_reports() {
    let t = Instant::now();
    let make = || {
        let config = cfg();
        let case = run_case(1, None, &config);
        skewprod::report::Report::new("case 1", config, vec![case]).to_json()
    };
    let first = make();
    let second = make();
    assert_eq!(first.as_bytes(), second.as_bytes(), "reports differ between runs");
    finish(
        "determinism: identical configuration produces byte-identical JSON",
        t,
        Duration::from_secs(60),
    );
}
