//! The example families: the sharpness construction for the centraliser
//! bound, the direct products with arbitrarily large socle centraliser, and
//! the imprimitive wreath instance with a non-simple monolith.

use rayon::prelude::*;

use super::{CaseReport, RunCfg};
use crate::catalog::{
    self, agl1_multiplier, agl1_translation, frobenius_on_line, wreath_imprimitive,
};
use crate::factor::validate_pair;
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Embeds a permutation as the left block of a disjoint union.
fn embed_left(p: &Permutation, extra: usize) -> Permutation {
    let d1 = p.degree();
    let mut images: Vec<u16> = (0..(d1 + extra) as u16).collect();
    for (i, item) in images.iter_mut().enumerate().take(d1) {
        *item = p.apply(i as u16);
    }
    Permutation::from_images(images).unwrap()
}

/// Embeds a permutation as the right block of a disjoint union.
fn embed_right(offset: usize, p: &Permutation) -> Permutation {
    let d2 = p.degree();
    let mut images: Vec<u16> = (0..(offset + d2) as u16).collect();
    for i in 0..d2 {
        images[offset + i] = offset as u16 + p.apply(i as u16);
    }
    Permutation::from_images(images).unwrap()
}

/// The two product identities for a normal subgroup `N <= B` of `G = BY`:
/// `|N| = |BN ∩ Y| · |B ∩ N| = |B ∩ YN| · |Y ∩ N|`. With `N` inside `B`,
/// every ingredient reduces to counts of complement powers, which is checked
/// here together with the reductions' premises.
fn order_identity_claims(
    report: &mut CaseReport,
    prefix: &str,
    g: &PermGroup,
    b: &PermGroup,
    y: &Permutation,
    n_sub: &PermGroup,
) {
    let claim_id = |s: &str| format!("{prefix}/{s}");
    let n_in_b = b.is_supergroup_of(n_sub);
    let n_normal = g.is_normal(n_sub);
    report.claim(
        &claim_id("normal_subgroup_inside_base"),
        n_in_b && n_normal,
        "designated normal subgroup lies in the base",
    );
    let m = y.order();
    let mut in_b = 0u64;
    let mut in_n = 0u64;
    let mut p = Permutation::identity(g.degree());
    for _ in 0..m {
        if b.contains(&p) {
            in_b += 1;
        }
        if n_sub.contains(&p) {
            in_n += 1;
        }
        p = p.compose(y);
    }
    // With N <= B: BN = B, so |BN ∩ Y| counts complement powers inside B,
    // and B ∩ YN = N · {y^k in B}, so |B ∩ YN| = |N| · in_b.
    let n_order = n_sub.order();
    report.claim_eq(&claim_id("order_identity_first"), in_b * n_order, n_order);
    report.claim_eq(
        &claim_id("order_identity_second"),
        (n_order * in_b) * in_n,
        n_order,
    );
}

/// The sharpness family: `G = PΣL(2, 2^p) × AGL(1, p)` with the diagonal
/// base. The centraliser of the socle in the complement has order exactly
/// `p - 1 = |B/A| - 1`.
fn sharp_example(p: usize, cfg: &RunCfg) -> CaseReport {
    let q = 1usize << p;
    let mut report = CaseReport::new(
        &format!("sharp_p{p}"),
        &format!("psigmal2({q}) x agl1({p})"),
        &format!("psigmal2({q}) diagonal"),
        (p * (p - 1)).max(2) as u32,
    );
    let left = catalog::psigmal2(q).expect("psigmal2");
    let right = catalog::agl1(p).expect("agl1");
    let g = catalog::direct_product(&left, &right);
    let d2 = right.degree();

    let psl = catalog::psl2(q).expect("psl2");
    let a_gens: Vec<Permutation> = psl.gens().iter().map(|x| embed_left(x, d2)).collect();
    let a = PermGroup::new(g.degree(), a_gens.clone());
    let frob = embed_left(&frobenius_on_line(q).expect("frobenius"), d2);
    let trans = embed_right(left.degree(), &agl1_translation(p).expect("translation"));
    let diag = frob.compose(&trans);

    let mut b_gens = a_gens;
    b_gens.push(diag);
    let b = PermGroup::new(g.degree(), b_gens);

    let y = if p == 2 {
        frob.clone()
    } else {
        frob.compose(&embed_right(left.degree(), &agl1_multiplier(p).expect("multiplier")))
    };

    let psl_order = psl.order();
    report.claim_eq("group_order", g.order(), left.order() * right.order());
    report.claim_eq("base_order", b.order(), psl_order * p as u64);
    report.claim_eq("socle_order", a.order(), psl_order);
    report.claim_eq("complement_order", y.order(), (p * (p - 1)).max(2) as u64);

    match validate_pair(&g, &b, &y) {
        Ok(_) => report.claim(
            "pair_validates",
            true,
            "G = B·Y with B ∩ Y trivial and Y core-free",
        ),
        Err(e) => report.claim("pair_validates", false, e.to_string()),
    }

    report.claim("socle_normal", g.is_normal(&a), "the PSL block is normal in G");
    // Z = C_Y(A): complement powers commuting with every socle generator.
    let m = y.order();
    let mut z_size = 0u64;
    let mut pw = Permutation::identity(g.degree());
    for _ in 0..m {
        if a.gens().iter().all(|x| pw.compose(x) == x.compose(&pw)) {
            z_size += 1;
        }
        pw = pw.compose(&y);
    }
    report.claim_eq("socle_centralizer_in_complement", z_size, (p - 1) as u64);
    let quotient = b.order() / a.order();
    report.claim_eq("base_over_socle", quotient, p as u64);
    report.claim(
        "bound_sharp",
        z_size + 1 == quotient,
        format!("|Z| = {z_size} = |B/A| - 1"),
    );

    if p >= 3 {
        report.claim("base_not_normal", !g.is_normal(&b), "B is not normal in G");
        match g.core_of(&b, cfg.element_cap) {
            Ok(core) => report.claim(
                "base_core_is_socle",
                core.same_group(&a),
                format!("core order {}", core.order()),
            ),
            Err(e) => report.claim("base_core_is_socle", false, e.to_string()),
        }
    } else {
        report
            .notes
            .push("p = 2: the base is normal in G, the twist has nothing to move".to_string());
    }

    order_identity_claims(&mut report, "socle", &g, &b, &y, &a);
    report
}

/// A direct product `Alt(n) × C_m` with complement generated by `g·c` for an
/// element `g` of odd order `m`: the socle centraliser in the complement is
/// trivial while the one in the whole group has order `m`.
fn centralizer_example(n: usize, g_elt: &Permutation, cfg: &RunCfg) -> CaseReport {
    let m = g_elt.order();
    let mut report = CaseReport::new(
        &format!("product_alt{n}_c{m}"),
        &format!("alt({n}) x c{m}"),
        &format!("alt({n})"),
        m as u32,
    );
    if m.is_multiple_of(2) {
        report.claim("odd_order_element", false, format!("order {m} is even"));
        return report;
    }
    let alt = catalog::alternating(n).expect("alt");
    let cm = catalog::cyclic_regular(m as usize).expect("cyclic");
    let g = catalog::direct_product(&alt, &cm);
    let b = PermGroup::new(
        g.degree(),
        alt.gens().iter().map(|x| embed_left(x, m as usize)).collect(),
    );
    let a = b.clone();
    let y = embed_left(g_elt, m as usize).compose(&embed_right(n, &cm.gens()[0]));
    report.claim_eq("complement_order", y.order(), m);

    match validate_pair(&g, &b, &y) {
        Ok(_) => report.claim("pair_validates", true, "valid pair with core-free complement"),
        Err(e) => report.claim("pair_validates", false, e.to_string()),
    }
    report.claim(
        "base_simple_normal",
        g.is_normal(&b),
        "the alternating factor is normal in the product",
    );

    let mut z_size = 0u64;
    let mut pw = Permutation::identity(g.degree());
    for _ in 0..m {
        if a.gens().iter().all(|x| pw.compose(x) == x.compose(&pw)) {
            z_size += 1;
        }
        pw = pw.compose(&y);
    }
    report.claim_eq("socle_centralizer_in_complement", z_size, 1);

    match g.brute_centralizer(a.gens(), cfg.element_cap) {
        Ok(z) => report.claim_eq("socle_centralizer_in_group", z.order(), m),
        Err(e) => report.claim("socle_centralizer_in_group", false, e.to_string()),
    }

    order_identity_claims(&mut report, "socle", &g, &b, &y, &a);
    report
}

/// The smallest-degree wreath instance: `G = Alt(5) wr Sym(4)` on 20 points
/// with base `Alt(5) wr D4` and a 3-cycle of blocks as complement. The base
/// is monolithic with monolith the product of the block copies.
fn wreath_example(cfg: &RunCfg) -> CaseReport {
    let mut report = CaseReport::new(
        "wreath_alt5_sym4",
        "alt(5) wr sym(4)",
        "alt(5) wr d4",
        3,
    );
    let t = catalog::alternating(5).expect("alt5");
    let h = catalog::symmetric(4).expect("sym4");
    let x = catalog::dihedral(4).expect("d4");
    let g = wreath_imprimitive(&t, &h).expect("wreath");
    let b = wreath_imprimitive(&t, &x).expect("wreath base");
    report.claim_eq("group_order", g.order(), 60u64.pow(4) * 24);
    report.claim_eq("base_order", b.order(), 60u64.pow(4) * 8);

    let three_cycle = Permutation::parse_cycles(4, "(1,2,3)").unwrap();
    let y = catalog::block_permutation(&three_cycle, 5);
    report.claim_eq("complement_order", y.order(), 3);

    match validate_pair(&g, &b, &y) {
        Ok(_) => report.claim("pair_validates", true, "valid pair on 20 points"),
        Err(e) => report.claim("pair_validates", false, e.to_string()),
    }
    report.claim("base_not_normal", !g.is_normal(&b), "the base moves under block swaps");

    // Monolith: the product of the four block copies, normal in the base,
    // with trivial centraliser against the block-permutation part.
    let mut monolith_gens = Vec::new();
    for block in 0..4 {
        for gen in t.gens() {
            monolith_gens.push(catalog::block_embed(gen, block, 4));
        }
    }
    let monolith = PermGroup::new(20, monolith_gens);
    report.claim_eq("monolith_order", monolith.order(), 60u64.pow(4));
    report.claim("monolith_normal_in_base", b.is_normal(&monolith), "T^4 is normal");
    let block_parts: Vec<Permutation> = x
        .gens()
        .iter()
        .map(|p| catalog::block_permutation(p, 5))
        .collect();
    let centralizing = block_parts
        .iter()
        .filter(|p| !p.is_identity())
        .any(|p| monolith.gens().iter().all(|a| p.compose(a) == a.compose(p)));
    report.claim(
        "block_part_centralizes_nothing",
        !centralizing,
        "no nontrivial block permutation centralises the monolith",
    );

    order_identity_claims(&mut report, "monolith", &g, &b, &y, &monolith);
    let _ = cfg;
    report
}

/// Degenerate wreath sanity: a trivial top group gives back the bottom.
fn wreath_degenerate() -> CaseReport {
    let mut report = CaseReport::new("wreath_degenerate", "alt(5) wr 1", "alt(5)", 1);
    let t = catalog::alternating(5).expect("alt5");
    let g = wreath_imprimitive(&t, &PermGroup::trivial(1)).expect("wreath");
    report.claim_eq("group_order", g.order(), 60);
    report.claim_eq("degree", g.degree(), 5);
    report
}

pub fn run_examples(cfg: &RunCfg) -> Vec<CaseReport> {
    // Independent families on parallel workers, assembled in a fixed order.
    let jobs: Vec<Box<dyn Fn() -> CaseReport + Send + Sync>> = vec![
        Box::new(move || sharp_example(2, cfg)),
        Box::new(move || sharp_example(3, cfg)),
        Box::new(move || {
            let g = Permutation::parse_cycles(5, "(1,2,3)").unwrap();
            centralizer_example(5, &g, cfg)
        }),
        Box::new(move || {
            let g = Permutation::parse_cycles(5, "(1,2,3,4,5)").unwrap();
            centralizer_example(5, &g, cfg)
        }),
        Box::new(move || {
            let g = Permutation::parse_cycles(6, "(1,2,3)(4,5,6)").unwrap();
            centralizer_example(6, &g, cfg)
        }),
        Box::new(move || {
            let g = Permutation::parse_cycles(7, "(1,2,3,4,5,6,7)").unwrap();
            centralizer_example(7, &g, cfg)
        }),
        Box::new(move || wreath_example(cfg)),
        Box::new(wreath_degenerate),
    ];
    jobs.par_iter().map(|job| job()).collect()
}
