//! Regular-Cayley-map certificates.
//!
//! A skew morphism yields a regular Cayley map exactly when one of its
//! cycles, as a set of group elements, is closed under inverses and
//! generates the whole group. The certificate records the first such cycle
//! in canonical order together with the multiset of element orders in it.

use std::collections::BTreeMap;

use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::report::CertificateReport;
use crate::skew::SkewMorphism;

/// A cycle of the value table that witnesses a regular Cayley map.
pub struct CycleCertificate {
    /// Element indices along the cycle.
    pub cycle: Vec<u32>,
    pub inverse_closed: bool,
    pub generates_base: bool,
    /// order -> count over the cycle's elements
    pub signature: BTreeMap<u32, u32>,
}

impl CycleCertificate {
    pub fn is_valid(&self) -> bool {
        self.inverse_closed && self.generates_base
    }

    pub fn render(&self, phi: &SkewMorphism) -> CertificateReport {
        CertificateReport {
            cycle_length: self.cycle.len(),
            cycle_elements: self
                .cycle
                .iter()
                .map(|&i| phi.table.perm(i).to_string())
                .collect(),
            inverse_closed: self.inverse_closed,
            generates_base: self.generates_base,
            signature: self.signature.clone(),
        }
    }
}

/// Disjoint cycle decomposition of the value table, in canonical order:
/// sorted by (length, smallest contained element index). Fixed points are
/// included as singleton cycles; the identity is always one of them.
pub fn cycles(phi: &SkewMorphism) -> Vec<Vec<u32>> {
    let n = phi.base_size();
    let mut seen = vec![false; n];
    let mut out: Vec<Vec<u32>> = Vec::new();
    for start in 0..n as u32 {
        if seen[start as usize] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut x = start;
        while !seen[x as usize] {
            seen[x as usize] = true;
            cyc.push(x);
            x = phi.apply(x);
        }
        out.push(cyc);
    }
    out.sort_by_key(|c| (c.len(), c[0]));
    out
}

fn signature_of(phi: &SkewMorphism, cycle: &[u32]) -> BTreeMap<u32, u32> {
    let mut sig = BTreeMap::new();
    for &i in cycle {
        *sig.entry(phi.table.perm(i).order() as u32).or_default() += 1;
    }
    sig
}

fn inverse_closed(phi: &SkewMorphism, cycle: &[u32]) -> bool {
    let set: std::collections::BTreeSet<u32> = cycle.iter().copied().collect();
    cycle
        .iter()
        .all(|&i| set.contains(&phi.table.inv(i)))
}

fn generates_base(phi: &SkewMorphism, cycle: &[u32]) -> bool {
    let degree = phi.table.group.degree();
    let gens: Vec<Permutation> = cycle.iter().map(|&i| phi.table.perm(i).clone()).collect();
    PermGroup::new(degree, gens).order() == phi.table.len() as u64
}

/// The first cycle in canonical order that is inverse-closed and generates
/// the base group, if any. The cheap inverse-closure test runs first; the
/// generation test only fires on closed cycles.
pub fn regular_cayley_certificate(phi: &SkewMorphism) -> Option<CycleCertificate> {
    for cycle in cycles(phi) {
        if !inverse_closed(phi, &cycle) {
            continue;
        }
        if generates_base(phi, &cycle) {
            let signature = signature_of(phi, &cycle);
            return Some(CycleCertificate {
                inverse_closed: true,
                generates_base: true,
                signature,
                cycle,
            });
        }
    }
    None
}

/// The first qualifying cycle in canonical order whose order signature
/// matches `want`. A morphism can have several qualifying cycles with
/// different signatures; this picks out a published one deterministically.
pub fn certificate_with_signature(
    phi: &SkewMorphism,
    want: &BTreeMap<u32, u32>,
) -> Option<CycleCertificate> {
    for cycle in cycles(phi) {
        if cycle.len() != want.values().map(|&c| c as usize).sum::<usize>() {
            continue;
        }
        if &signature_of(phi, &cycle) != want {
            continue;
        }
        if inverse_closed(phi, &cycle) && generates_base(phi, &cycle) {
            let signature = signature_of(phi, &cycle);
            return Some(CycleCertificate {
                inverse_closed: true,
                generates_base: true,
                signature,
                cycle,
            });
        }
    }
    None
}

/// The cycle set of the even-alternating family, written straight from the
/// conjugation formulas: each row is (label, computed product, stated cycle
/// form).
pub fn case6_formula_set(
    n: usize,
    y: &Permutation,
    x: &Permutation,
) -> Vec<(String, Permutation, Permutation)> {
    let nu = n as u16;
    let d = n + 1;
    let cyc = |points: Vec<u16>| {
        Permutation::from_cycles(d, &[points.iter().map(|p| p - 1).collect()]).unwrap()
    };
    let conj = |a: i64, b: i64| y.pow(a).compose(x).compose(&y.pow(b));
    let mut rows = vec![("x".to_string(), x.clone(), x.clone())];
    let mut pts = vec![1u16];
    pts.extend((3..=nu).rev());
    rows.push(("y x y^-2".to_string(), conj(1, -2), cyc(pts)));
    let mut pts = vec![1u16];
    pts.extend(3..=nu);
    rows.push(("y^2 x y^-1".to_string(), conj(2, -1), cyc(pts)));
    let mut pts = vec![1u16, nu];
    pts.extend((2..=nu - 2).rev());
    rows.push(("y^3 x y^-4".to_string(), conj(3, -4), cyc(pts)));
    let mut pts: Vec<u16> = (1..=nu - 2).collect();
    pts.push(nu);
    rows.push(("y^4 x y^-3".to_string(), conj(4, -3), cyc(pts)));
    for k in 5..=n {
        let ku = k as u16;
        let expected = Permutation::from_cycles(
            d,
            &[
                vec![nu - ku + 1, nu - ku + 2],
                vec![nu - ku + 3, nu - ku + 4],
            ],
        )
        .unwrap();
        rows.push((format!("y^{k} x y^-{k}"), conj(k as i64, -(k as i64)), expected));
    }
    rows
}

/// Verification record for the even-alternating cycle set.
pub struct Case6SetReport {
    /// Every computed product matches its stated cycle form.
    pub forms_match: bool,
    /// The set has n + 1 elements and is closed under inverses.
    pub inverse_closed: bool,
    /// `x·y^n x y^-n` is the 5-cycle (1,3,5,4,2).
    pub has_five_cycle: bool,
    /// Order of the group the set generates (n!/2 when it is Alt(n)).
    pub generated_order: u64,
    /// Order generated with the last double transposition removed
    /// (regression guard).
    pub reduced_generated_order: u64,
}

impl Case6SetReport {
    pub fn generates_alt(&self, n: usize) -> bool {
        let half_fact: u64 = (1..=n as u64).product::<u64>() / 2;
        self.generated_order == half_fact
    }
}

/// Builds the cycle set through `(1,2)(3,4)` for the even-alternating family
/// from the conjugation formulas and checks it: the stated cycle forms, the
/// inverse closure, the embedded 5-cycle, and generation of Alt(n).
pub fn verify_case6_cycle_set(n: usize) -> crate::error::Result<Case6SetReport> {
    if !n.is_multiple_of(2) || !(8..=12).contains(&n) {
        return Err(crate::error::GroupError::Invalid(format!(
            "cycle-set check needs even n in 8..=12, got {n}"
        )));
    }
    let y = Permutation::from_cycles(n + 1, &[(0..=n as u16).collect()]).unwrap();
    let x = Permutation::from_cycles(n + 1, &[vec![0, 1], vec![2, 3]]).unwrap();
    let rows = case6_formula_set(n, &y, &x);
    let forms_match = rows.iter().all(|(_, got, want)| got == want);
    let set: std::collections::BTreeSet<Permutation> =
        rows.iter().map(|(_, got, _)| got.clone()).collect();
    let inverse_closed =
        set.len() == n + 1 && set.iter().all(|p| set.contains(&p.inverse()));
    // The product of two set members x and y^n x y^-n is the stated 5-cycle,
    // so the generated subgroup contains it.
    let five = x
        .compose(&y.pow(n as i64))
        .compose(&x)
        .compose(&y.pow(-(n as i64)));
    let has_five_cycle =
        five == Permutation::from_cycles(n + 1, &[vec![0, 2, 4, 3, 1]]).unwrap();
    let generated_order = PermGroup::new(n + 1, set.iter().cloned().collect()).order();
    let mut reduced: Vec<Permutation> = set.iter().cloned().collect();
    let last = &rows.last().unwrap().1;
    reduced.retain(|p| p != last);
    let reduced_generated_order = PermGroup::new(n + 1, reduced).order();
    Ok(Case6SetReport {
        forms_match,
        inverse_closed,
        has_five_cycle,
        generated_order,
        reduced_generated_order,
    })
}

/// Inspects one specific cycle (by a member element index).
pub fn certificate_for_cycle_through(phi: &SkewMorphism, member: u32) -> CycleCertificate {
    let mut cycle = vec![member];
    let mut x = phi.apply(member);
    while x != member {
        cycle.push(x);
        x = phi.apply(x);
    }
    CycleCertificate {
        inverse_closed: inverse_closed(phi, &cycle),
        generates_base: generates_base(phi, &cycle),
        signature: signature_of(phi, &cycle),
        cycle,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::*;
    use crate::factor::{validate_pair, ElementTable};

    #[test]
    fn identity_morphism_has_singleton_cycles() {
        let b = alternating(4).unwrap();
        let table = ElementTable::build(&b, 100).unwrap();
        let n = table.len();
        let phi =
            SkewMorphism::new(table, (0..n as u32).collect(), vec![1; n], 2).unwrap();
        let cs = cycles(&phi);
        assert_eq!(cs.len(), 12);
        assert!(cs.iter().all(|c| c.len() == 1));
        // No singleton generates Alt(4).
        assert!(regular_cayley_certificate(&phi).is_none());
    }

    #[test]
    fn case6_cycle_sets_at_8_and_10() {
        for n in [8usize, 10] {
            let r = verify_case6_cycle_set(n).unwrap();
            assert!(r.forms_match, "n = {n}");
            assert!(r.inverse_closed, "n = {n}");
            assert!(r.has_five_cycle, "n = {n}");
            assert!(r.generates_alt(n), "n = {n}");
        }
        assert!(verify_case6_cycle_set(7).is_err());
        assert!(verify_case6_cycle_set(14).is_err());
    }

    #[test]
    fn cycles_cover_the_base() {
        let s5 = symmetric(5).unwrap();
        let a5 = alternating(5).unwrap();
        let y = crate::perm::Permutation::parse_cycles(5, "(1,2)").unwrap();
        let phi = validate_pair(&s5, &a5, &y).unwrap().induce(1000).unwrap();
        let cs = cycles(&phi);
        let covered: usize = cs.iter().map(|c| c.len()).sum();
        assert_eq!(covered, 60);
        // identity is its own cycle
        assert!(cs.iter().any(|c| c == &vec![0u32]));
    }
}
