//! The classified factorisations: each listed line is constructed as an
//! explicit pair, validated, and its base is shown core-free with the core
//! computed along two independent routes.

use rayon::prelude::*;

use super::{CaseReport, RunCfg};
use crate::catalog;
use crate::factor::validate_pair;
use crate::group::PermGroup;
use crate::perm::Permutation;

/// One line of the catalogue: the group, its base, and the long cycle or
/// other complement generator.
fn check_line(
    id: &str,
    g: &PermGroup,
    b: &PermGroup,
    y: &Permutation,
    expected_orders: (u64, u64, u64),
    cfg: &RunCfg,
) -> CaseReport {
    let mut report = CaseReport::new(id, "-", "-", y.order() as u32);
    let (want_g, want_b, want_y) = expected_orders;
    report.claim_eq("group_order", g.order(), want_g);
    report.claim_eq("base_order", b.order(), want_b);
    report.claim_eq("complement_order", y.order(), want_y);

    match validate_pair(g, b, y) {
        Ok(pair) => {
            report.claim(
                "pair_validates",
                true,
                "complementary factorisation with core-free cyclic complement",
            );
            let index = g.order() / y.order();
            report.claim(
                "corefree_cyclic_bound",
                y.order() < index,
                format!("{} < {index}", y.order()),
            );
            let _ = pair;
        }
        Err(e) => report.claim("pair_validates", false, e.to_string()),
    }

    // The base is core-free, along two independent routes where affordable.
    match g.core_of(b, cfg.element_cap) {
        Ok(core) => {
            report.claim(
                "base_corefree",
                core.is_trivial(),
                format!("coset-action kernel has order {}", core.order()),
            );
            match g.core_by_fixpoint(b, cfg.element_cap) {
                Ok(core2) => report.claim(
                    "core_routes_agree",
                    core.same_group(&core2),
                    format!("fixpoint route gives order {}", core2.order()),
                ),
                Err(e) => report.claim("core_routes_agree", false, e.to_string()),
            }
        }
        Err(e) => report.claim("base_corefree", false, e.to_string()),
    }
    report
}

/// Runs every line of the factorisation catalogue at desk scale:
/// Sym(n) over Sym(n-1) for 6 <= n <= 9, Alt(n) over Alt(n-1) for odd
/// n in {7, 9}, PSL(2,11) over Alt(5), M11 over M10 and M23 over M22.
pub fn run_theorem(cfg: &RunCfg) -> Vec<CaseReport> {
    let fact = |n: u64| -> u64 { (1..=n).product() };

    // The lines are independent; run them on parallel workers and keep the
    // catalogue order.
    let mut reports: Vec<CaseReport> = (6..=9usize)
        .into_par_iter()
        .map(|n| {
            let g = catalog::symmetric(n).unwrap();
            let b = g.point_stabilizer(n as u16 - 1);
            let y = Permutation::from_cycles(n, &[(0..n as u16).collect()]).unwrap();
            check_line(
                &format!("theorem_sym{n}"),
                &g,
                &b,
                &y,
                (fact(n as u64), fact(n as u64 - 1), n as u64),
                cfg,
            )
        })
        .collect();

    reports.par_extend([7usize, 9].into_par_iter().map(|n| {
        let g = catalog::alternating(n).unwrap();
        let b = g.point_stabilizer(n as u16 - 1);
        let y = Permutation::from_cycles(n, &[(0..n as u16).collect()]).unwrap();
        check_line(
            &format!("theorem_alt{n}"),
            &g,
            &b,
            &y,
            (fact(n as u64) / 2, fact(n as u64 - 1) / 2, n as u64),
            cfg,
        )
    }));

    {
        let g = catalog::psl2(11).unwrap();
        let b = super::find_alt5_in_psl2_11(&g);
        let y = g.gens()[0].clone();
        let mut report = check_line("theorem_psl2_11", &g, &b, &y, (660, 60, 11), cfg);
        // The coset action on the Alt(5) copy is the degree-11 faithful one.
        match g.coset_action(&b) {
            Ok(action) => {
                let faithful = action.is_faithful(cfg.element_cap).unwrap_or(false);
                report.claim(
                    "degree11_faithful_action",
                    action.index() == 11 && faithful,
                    format!("index {}, faithful {faithful}", action.index()),
                );
            }
            Err(e) => report.claim("degree11_faithful_action", false, e.to_string()),
        }
        reports.push(report);
    }

    {
        let g = catalog::mathieu(11).unwrap();
        let b = g.point_stabilizer(10);
        let y = g.gens()[0].clone();
        reports.push(check_line("theorem_m11", &g, &b, &y, (7920, 720, 11), cfg));
    }

    {
        let g = catalog::mathieu(23).unwrap();
        let b = g.point_stabilizer(22);
        let y = g.gens()[0].clone();
        reports.push(check_line(
            "theorem_m23",
            &g,
            &b,
            &y,
            (10_200_960, 443_520, 23),
            cfg,
        ));
    }

    reports
}
