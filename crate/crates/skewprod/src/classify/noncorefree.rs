//! Skew morphisms of Sym(5) whose skew product has core Alt(5): the six
//! candidate twisted extensions, the search for cyclic core-free
//! complements, and the per-extension enumeration with class sizes
//! 20, 30, 24 and 20.

use std::collections::BTreeSet;

use super::{CaseReport, RunCfg, TotalBasis};
use crate::catalog::{
    self, conjugation_on_elements, cyclic_regular, direct_product, monolithic_extension,
    regular_rep, MonolithicExtension,
};
use crate::error::Result;
use crate::factor::{validate_pair, ElementTable};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::skew::{self, automorphism_group_search, conjugation_action};

struct ExtensionCase {
    name: &'static str,
    expected_class_size: Option<u64>,
    ext: MonolithicExtension,
    aut_c: PermGroup,
}

/// Builds the six candidate centraliser types with their involutory twists.
fn build_extensions() -> Result<Vec<ExtensionCase>> {
    let mut cases = Vec::new();

    let inversion = |n: usize| {
        Permutation::from_images(
            (0..n as u16).map(|k| (n as u16 - k) % n as u16).collect(),
        )
        .unwrap()
    };

    for (name, c, expected) in [
        ("c3", 3usize, Some(20u64)),
        ("c4", 4, None),
        ("c5", 5, Some(24)),
        ("c6", 6, None),
    ] {
        let c_reg = cyclic_regular(c)?;
        let sigma = inversion(c);
        let aut_c = automorphism_group_search(&c_reg, 100)?;
        cases.push(ExtensionCase {
            name,
            expected_class_size: expected,
            ext: monolithic_extension(&c_reg, &sigma)?,
            aut_c,
        });
    }

    // Klein group: swap two of the three involutions, fix the third.
    let c2 = cyclic_regular(2)?;
    let (klein, _) = regular_rep(&direct_product(&c2, &c2), 100)?;
    let sigma = Permutation::from_images(vec![0, 2, 1, 3])?;
    let aut_c = automorphism_group_search(&klein, 100)?;
    cases.insert(
        2,
        ExtensionCase {
            name: "c2xc2",
            expected_class_size: Some(30),
            ext: monolithic_extension(&klein, &sigma)?,
            aut_c,
        },
    );

    // Sym(3): conjugation by a transposition.
    let (s3_reg, s3_elements) = regular_rep(&catalog::symmetric(3)?, 100)?;
    let t = Permutation::parse_cycles(3, "(1,2)")?;
    let sigma = conjugation_on_elements(&s3_elements, &t);
    let aut_c = automorphism_group_search(&s3_reg, 100)?;
    cases.push(ExtensionCase {
        name: "sym3",
        expected_class_size: Some(20),
        ext: monolithic_extension(&s3_reg, &sigma)?,
        aut_c,
    });

    Ok(cases)
}

/// The conclusions of the index-two proposition for one extension:
/// `G = C_G(A) ⋊ B` with `|C_G(A)| = |G:B|` bounded by the maximum element
/// order of `B`, and `C_G(A)` has a cyclic subgroup of index at most two.
fn verify_prop_index2(report: &mut CaseReport, name: &str, ext: &MonolithicExtension, cfg: &RunCfg) {
    let g = &ext.group;
    let b = &ext.sym5;
    let a = &ext.alt5;
    let prefix = |s: &str| format!("{name}/{s}");

    report.claim(
        &prefix("socle_normal"),
        g.is_normal(a),
        "the Alt(5) block is normal in the extension",
    );
    // B is a copy of the full automorphism group of A with index 2 over it:
    // |Aut(A)| is computed from scratch on the block subgroup.
    let aut_a = automorphism_group_search(a, cfg.element_cap)
        .map(|x| x.order())
        .unwrap_or(0);
    report.claim(
        &prefix("base_is_full_aut"),
        aut_a == b.order() && b.order() == 2 * a.order(),
        format!("|Aut(A)| = {aut_a} = |B|, |B:A| = 2"),
    );

    let z = g.brute_centralizer(a.gens(), cfg.element_cap).expect("centralizer");
    report.claim(
        &prefix("centralizer_is_block"),
        z.same_group(&ext.c_block),
        format!("C_G(A) has order {}", z.order()),
    );
    let c_order = z.order();
    let meets_trivially = z
        .elements(cfg.element_cap)
        .map(|els| els.iter().all(|e| e.is_identity() || !b.contains(e)))
        .unwrap_or(false);
    report.claim(
        &prefix("complement_splits"),
        meets_trivially && c_order * b.order() == g.order(),
        "C_G(A) meets B trivially and C_G(A)·B = G",
    );
    report.claim_eq(&prefix("centralizer_order_is_index"), c_order, g.order() / b.order());
    let max_order = b
        .elements(cfg.element_cap)
        .map(|els| els.iter().map(|e| e.order()).max().unwrap_or(1))
        .unwrap_or(0);
    report.claim(
        &prefix("centralizer_bounded_by_max_order"),
        c_order <= max_order && max_order == 6,
        format!("|C_G(A)| = {c_order} <= {max_order}"),
    );
    let cyclic_part = z
        .elements(cfg.element_cap)
        .map(|els| els.iter().map(|e| e.order()).max().unwrap_or(1))
        .unwrap_or(0);
    report.claim(
        &prefix("centralizer_nearly_cyclic"),
        2 * cyclic_part >= c_order,
        format!("cyclic subgroup of order {cyclic_part} has index <= 2"),
    );
}

pub fn run_noncorefree_sym5(cfg: &RunCfg) -> CaseReport {
    let mut report = CaseReport::new("noncorefree_sym5", "c ⋊ sym(5)", "sym(5)", 0);
    let extensions = match build_extensions() {
        Ok(e) => e,
        Err(e) => {
            report.claim("extensions_build", false, e.to_string());
            return report;
        }
    };

    let mut total = 0u64;
    let mut class_sizes = Vec::new();

    for case in &extensions {
        let name = case.name;
        let prefix = |s: &str| format!("{name}/{s}");
        let ext = &case.ext;
        let g = &ext.group;
        let b = &ext.sym5;

        // The twist class is canonical: the automorphism group of the
        // centraliser type has a single conjugacy class of involutions.
        let involutions: Vec<Permutation> = case
            .aut_c
            .elements(10_000)
            .expect("tiny")
            .into_iter()
            .filter(|e| e.order() == 2)
            .collect();
        let single_class = if let Some(first) = involutions.first() {
            let orbit = super::conjugation_orbit(first, &case.aut_c);
            involutions.iter().all(|i| orbit.contains(i))
        } else {
            false
        };
        report.claim(
            &prefix("unique_involution_class"),
            single_class,
            format!("{} involutions in one class", involutions.len()),
        );

        report.claim(
            &prefix("core_is_socle"),
            g.core_of(b, cfg.element_cap)
                .map(|c| c.same_group(&ext.alt5))
                .unwrap_or(false),
            "core of Sym(5) in the extension is the Alt(5) block",
        );

        verify_prop_index2(&mut report, name, ext, cfg);

        // Cyclic core-free complements: scan every element of the right
        // order and keep those passing full pair validation.
        let c_order = ext.c_block.order();
        let mut valid: Vec<Permutation> = Vec::new();
        g.for_each_element(cfg.element_cap, |e| {
            if e.order() == c_order && validate_pair(g, b, e).is_ok() {
                valid.push(e.clone());
            }
        })
        .expect("small group");

        match case.expected_class_size {
            None => {
                report.claim(
                    &prefix("no_complement"),
                    valid.is_empty(),
                    format!("{} complement generators found", valid.len()),
                );
                continue;
            }
            Some(expected) => {
                report.claim(
                    &prefix("complement_exists"),
                    !valid.is_empty(),
                    format!("{} complement generators", valid.len()),
                );

                // Up to conjugacy under the normaliser of B, the complement
                // subgroup is unique.
                let normalizer = g.brute_normalizer(b, cfg.element_cap).expect("normalizer");
                let subgroups: BTreeSet<Vec<Permutation>> = valid
                    .iter()
                    .map(|y| {
                        let mut powers: Vec<Permutation> =
                            (0..c_order as i64).map(|k| y.pow(k)).collect();
                        powers.sort_unstable();
                        powers
                    })
                    .collect();
                let reps: Vec<&Vec<Permutation>> = subgroups.iter().collect();
                let rep0 = reps[0];
                let mut orbit: BTreeSet<Vec<Permutation>> = BTreeSet::new();
                let mut queue = vec![rep0.clone()];
                orbit.insert(rep0.clone());
                while let Some(sub) = queue.pop() {
                    for h in normalizer.gens() {
                        let mut conj: Vec<Permutation> =
                            sub.iter().map(|p| p.conjugate_by(h)).collect();
                        conj.sort_unstable();
                        if orbit.insert(conj.clone()) {
                            queue.push(conj);
                        }
                    }
                }
                let unique_class = subgroups.iter().all(|s| orbit.contains(s));
                report.claim(
                    &prefix("unique_complement_class"),
                    unique_class,
                    format!(
                        "{} complement subgroups in one class under the normaliser",
                        subgroups.len()
                    ),
                );

                // Enumerate the induced morphisms from every valid generator.
                let table = ElementTable::build(b, cfg.morphism_cap).expect("table");
                let mut tables: BTreeSet<Vec<u32>> = BTreeSet::new();
                let mut reps_phi = Vec::new();
                for y in &valid {
                    let pair = validate_pair(g, b, y).expect("validates");
                    let phi = pair.induce_with_table(table.clone()).expect("induces");
                    if tables.insert(phi.values.clone()) && reps_phi.is_empty() {
                        reps_phi.push((pair, phi));
                    }
                }
                report.claim_eq(&prefix("morphism_count"), tables.len() as u64, expected);

                let (pair0, phi0) = &reps_phi[0];
                let axioms = phi0.verify_axioms(cfg.axiom_samples, cfg.seed);
                report.claim(
                    &prefix("axioms"),
                    axioms.passed() && phi0.is_proper(),
                    format!("proper, {:?}, {} failures", axioms.mode, axioms.failures),
                );

                // One equivalence class: the orbit of the representative
                // under Aut(Sym(5)) = Inn is exactly the collected set.
                let aut = conjugation_action(&table, b);
                report.claim_eq(&prefix("aut_order"), aut.order(), 120);
                let orbit_tables = skew::equivalence_class_tables(phi0, &aut);
                let orbit_as_vecs: BTreeSet<Vec<u32>> = orbit_tables
                    .iter()
                    .map(|p| p.images().iter().map(|&x| x as u32).collect())
                    .collect();
                report.claim(
                    &prefix("single_class"),
                    orbit_as_vecs == tables,
                    format!("orbit size {}", orbit_as_vecs.len()),
                );
                let centralizer =
                    skew::centralizer_order_in(phi0, &aut, cfg.element_cap).unwrap_or(0);
                report.claim(
                    &prefix("nontrivial_centralizer"),
                    centralizer == 120 / expected && centralizer > 1,
                    format!("centraliser order {centralizer}"),
                );

                // Every morphism restricts to an automorphism of the socle,
                // and the kernel contains it.
                let alt_indices: Vec<u32> = ext
                    .alt5
                    .elements(cfg.element_cap)
                    .expect("small")
                    .iter()
                    .map(|e| table.index_of(e).expect("socle inside base"))
                    .collect();
                let mut all_restrict = true;
                let mut kernel_contains_socle = true;
                for values in &tables {
                    let phi = skew::SkewMorphism::from_value_table(table.clone(), values.clone())
                        .expect("a recorded table is a skew morphism");
                    if !phi
                        .restricts_to_automorphism_of(&ext.alt5, cfg.element_cap)
                        .unwrap_or(false)
                    {
                        all_restrict = false;
                    }
                    if !alt_indices.iter().all(|&i| phi.power(i) == 1) {
                        kernel_contains_socle = false;
                    }
                }
                report.claim(
                    &prefix("restricts_to_socle_automorphism"),
                    all_restrict,
                    "each morphism is an automorphism on the Alt(5) block",
                );
                report.claim(
                    &prefix("kernel_contains_socle"),
                    kernel_contains_socle,
                    "the socle lies in every kernel",
                );

                // Z = C_Y(A) is trivial or smaller than |B/A| = 2.
                let z = PermGroup::new(
                    g.degree(),
                    (1..c_order as i64)
                        .map(|k| pair0.y.pow(k))
                        .filter(|p| ext.alt5.gens().iter().all(|a| p.compose(a) == a.compose(p)))
                        .collect(),
                );
                report.claim(
                    &prefix("complement_centralizes_socle_trivially"),
                    z.is_trivial(),
                    format!("|C_Y(A)| = {} < |B/A| = 2", z.order()),
                );

                total += tables.len() as u64;
                class_sizes.push(tables.len() as u64);
            }
        }
    }

    report.class_count = Some(class_sizes.len() as u64);
    report.class_sizes = class_sizes;
    report.total = Some(total);
    report.total_basis = Some(TotalBasis::Exact);
    report.claim_eq("total", total, 94);

    // Decomposition: 94 here, plus the single core-free class of 120, plus
    // the 120 automorphisms.
    let s5 = catalog::symmetric(5).expect("sym(5)");
    let aut_count = automorphism_group_search(&s5, cfg.element_cap)
        .map(|a| a.order())
        .unwrap_or(0);
    report.claim_eq("automorphism_count", aut_count, 120);
    let corefree = corefree_sym5_count(cfg);
    report.claim_eq("corefree_proper_count", corefree, 120);
    report.claim_eq(
        "grand_decomposition",
        total + corefree + aut_count,
        94 + 120 + 120,
    );
    report
}

/// The core-free count for Sym(5): distinct morphisms induced by the
/// 6-cycles of Sym(6) on the point stabiliser.
fn corefree_sym5_count(cfg: &RunCfg) -> u64 {
    let g = catalog::symmetric(6).expect("sym(6)");
    let b = g.point_stabilizer(5);
    let table = ElementTable::build(&b, cfg.morphism_cap).expect("table");
    let mut tables: BTreeSet<Vec<u32>> = BTreeSet::new();
    g.for_each_element(cfg.element_cap, |e| {
        if e.order() == 6 {
            if let Ok(pair) = validate_pair(&g, &b, e) {
                if let Ok(phi) = pair.induce_with_table(table.clone()) {
                    tables.insert(phi.values);
                }
            }
        }
    })
    .expect("small group");
    tables.len() as u64
}
