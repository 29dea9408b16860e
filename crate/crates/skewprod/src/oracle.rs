//! Independent brute-force censuses of ALL skew morphisms of tiny groups.
//!
//! Two routes that share nothing past the multiplication table:
//!
//! * [`brute_enumerate`] - depth-first construction of bijections fixing the
//!   identity, pruned by the requirement that for every assigned `a` the map
//!   `b -> φ(a)^-1 φ(ab)` still agrees with some power of the partial `φ`;
//! * [`pipeline_census`] - every candidate permutation `y` of the element
//!   set that fixes the identity point and has order below `|B|` is tested
//!   for generating, together with the regular copy of `B`, a group of order
//!   `|B|·|y|` in which `⟨y⟩` is a core-free complement. Surviving `y` are
//!   exactly the skew morphisms.
//!
//! Agreement of the two result sets is the ground truth the factorisation
//! pipeline is checked against.

use serde::Serialize;

use crate::error::{GroupError, Result};
use crate::factor::ElementTable;
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::skew::SkewMorphism;

pub const ORACLE_CAP: usize = 12;

#[derive(Debug, Clone, Serialize)]
pub struct OracleMorphism {
    pub values: Vec<u8>,
    pub powers: Vec<u8>,
    pub order: u32,
    pub kernel_order: u32,
    pub is_automorphism: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleResult {
    pub group: String,
    pub group_order: usize,
    pub total: usize,
    pub proper: usize,
    pub automorphisms: usize,
    pub morphisms: Vec<OracleMorphism>,
}

struct Tables {
    n: usize,
    mul: Vec<u8>,
    inv: Vec<u8>,
}

impl Tables {
    fn build(b: &PermGroup) -> Result<(Tables, std::sync::Arc<ElementTable>)> {
        let table = ElementTable::build(b, ORACLE_CAP as u64)?;
        let n = table.len();
        if n > ORACLE_CAP {
            return Err(GroupError::CapExceeded {
                need: n as u64,
                cap: ORACLE_CAP as u64,
            });
        }
        let mut mul = vec![0u8; n * n];
        for a in 0..n {
            for c in 0..n {
                mul[a * n + c] = table.mul(a as u32, c as u32) as u8;
            }
        }
        let inv = (0..n).map(|a| table.inv(a as u32) as u8).collect();
        Ok((Tables { n, mul, inv }, table))
    }

    #[inline]
    fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.n + b as usize]
    }
}

fn record(table: &std::sync::Arc<ElementTable>, values: &[u8]) -> Result<OracleMorphism> {
    let phi = SkewMorphism::from_value_table(
        table.clone(),
        values.iter().map(|&v| v as u32).collect(),
    )?;
    let report = phi.verify_axioms(0, 0);
    if !report.passed() {
        return Err(GroupError::NotSkew("axiom recheck failed".into()));
    }
    Ok(OracleMorphism {
        values: values.to_vec(),
        powers: phi.powers.iter().map(|&p| p as u8).collect(),
        order: phi.order() as u32,
        kernel_order: phi.kernel_indices().len() as u32,
        is_automorphism: phi.is_automorphism(),
    })
}

fn finish(name: &str, n: usize, mut morphisms: Vec<OracleMorphism>) -> OracleResult {
    morphisms.sort_by(|a, b| a.values.cmp(&b.values));
    morphisms.dedup_by(|a, b| a.values == b.values);
    let proper = morphisms.iter().filter(|m| !m.is_automorphism).count();
    OracleResult {
        group: name.to_string(),
        group_order: n,
        total: morphisms.len(),
        proper,
        automorphisms: morphisms.len() - proper,
        morphisms,
    }
}

/// Depth-first search over bijections `φ` with `φ(identity) = identity`.
///
/// After each assignment, every element `a` with `φ(a)` known must still
/// admit SOME exponent `k` such that `φ^k` (chased through the partial
/// table, treating breaks as wildcards) matches `b -> φ(a)^-1 φ(ab)`
/// wherever both sides are defined. An empty exponent set prunes the branch.
/// Complete assignments are verified exhaustively and the power function is
/// recovered per element.
pub fn brute_enumerate(name: &str, b: &PermGroup) -> Result<OracleResult> {
    let (t, table) = Tables::build(b)?;
    let n = t.n;
    let mut phi: Vec<u8> = vec![u8::MAX; n];
    let mut used = vec![false; n];
    phi[0] = 0;
    used[0] = true;
    let mut found: Vec<OracleMorphism> = Vec::new();
    dfs(&t, &mut phi, &mut used, 1, &mut |values| {
        // Complete assignment: run the full verification independently.
        if let Ok(m) = record(&table, values) {
            found.push(m);
        }
    });
    Ok(finish(name, n, found))
}

fn dfs(t: &Tables, phi: &mut Vec<u8>, used: &mut Vec<bool>, next: usize, sink: &mut dyn FnMut(&[u8])) {
    let n = t.n;
    if next == n {
        sink(phi);
        return;
    }
    for candidate in 0..n as u8 {
        if used[candidate as usize] {
            continue;
        }
        phi[next] = candidate;
        used[candidate as usize] = true;
        if consistent(t, phi) {
            dfs(t, phi, used, next + 1, sink);
        }
        phi[next] = u8::MAX;
        used[candidate as usize] = false;
    }
}

/// For every assigned `a`, is there an exponent `k` in `0..n` such that the
/// partial `φ^k` agrees with `b -> φ(a)^-1 φ(ab)` on every assigned point?
fn consistent(t: &Tables, phi: &[u8]) -> bool {
    let n = t.n;
    'outer: for a in 1..n {
        if phi[a] == u8::MAX {
            continue;
        }
        let fa_inv = t.inv[phi[a] as usize];
        'k: for k in 0..n {
            'b: for b in 1..n {
                if phi[b] == u8::MAX {
                    continue;
                }
                let ab = t.mul(a as u8, b as u8);
                if phi[ab as usize] == u8::MAX {
                    continue;
                }
                let rhs = t.mul(fa_inv, phi[ab as usize]);
                let mut x = b as u8;
                for _ in 0..k {
                    if phi[x as usize] == u8::MAX {
                        // chain breaks: this pair cannot rule k out
                        continue 'b;
                    }
                    x = phi[x as usize];
                }
                if x != rhs {
                    continue 'k;
                }
            }
            continue 'outer; // some k works for this a
        }
        return false;
    }
    true
}

/// Census through skew product groups: candidates are the permutations of
/// the element set fixing the identity point with order strictly below
/// `|B|`; a candidate survives when the group it generates with the
/// regular copy of `B` has order `|B|·|y|` and `⟨y⟩` is core-free in it.
pub fn pipeline_census(name: &str, b: &PermGroup) -> Result<OracleResult> {
    let (t, table) = Tables::build(b)?;
    let n = t.n;
    // Regular copy of B: left translations x -> g^-1 x, a homomorphism under
    // left-to-right composition.
    let regular_gens: Vec<Permutation> = b
        .gens()
        .iter()
        .map(|g| {
            let ginv = g.inverse();
            let images: Vec<u16> = table
                .elements
                .iter()
                .map(|e| table.index_of(&ginv.compose(e)).unwrap() as u16)
                .collect();
            Permutation::from_images(images).unwrap()
        })
        .collect();

    if n == 1 {
        let m = record(&table, &[0])?;
        return Ok(finish(name, 1, vec![m]));
    }
    let mut found: Vec<OracleMorphism> = Vec::new();
    let mut images: Vec<u16> = (0..n as u16).collect();
    permute_rest(&mut images, 1, &mut |perm_images| {
        let y = Permutation::from_images(perm_images.to_vec()).unwrap();
        let ord = y.order();
        if ord >= n as u64 {
            return;
        }
        // Cheap necessary condition before the full order test: for each
        // regular generator, y * λ'_g must land back in the product set
        // λ'(B)·⟨y⟩, i.e. some y-power shift of it is a left translation.
        let y_inv = y.inverse();
        for lg in &regular_gens {
            let mut w = y.compose(lg);
            let mut ok = false;
            for _ in 0..ord {
                if is_left_translation(&t, &w) {
                    ok = true;
                    break;
                }
                w = w.compose(&y_inv);
            }
            if !ok {
                return;
            }
        }
        let mut gens = regular_gens.clone();
        gens.push(y.clone());
        let product = PermGroup::new(n, gens);
        if product.order() != (n as u64) * ord {
            return;
        }
        // ⟨y⟩ core-free in the product: no prime-order subgroup is normal.
        for p in crate::perm::primes_of(ord) {
            let sub_gen = y.pow((ord / p) as i64);
            let powers: Vec<Permutation> = (0..p).map(|k| sub_gen.pow(k as i64)).collect();
            let normal = product
                .gens()
                .iter()
                .all(|g| powers.contains(&sub_gen.conjugate_by(g)));
            if normal {
                return;
            }
        }
        // The survivor is itself a skew morphism; record it with the full
        // axiom recheck.
        let values: Vec<u8> = perm_images.iter().map(|&v| v as u8).collect();
        if let Ok(m) = record(&table, &values) {
            found.push(m);
        }
    });
    Ok(finish(name, n, found))
}

/// Is `v` the left translation `x -> c^-1 x` for some element `c`? Regularity
/// pins `c^-1` as the image of the identity point.
fn is_left_translation(t: &Tables, v: &Permutation) -> bool {
    let c_inv = v.apply(0) as u8;
    (0..t.n as u16).all(|x| v.apply(x) == t.mul(c_inv, x as u8) as u16)
}

/// Enumerates all permutations of `images[start..]` in lexicographic order,
/// invoking the sink on each full array.
fn permute_rest(images: &mut Vec<u16>, start: usize, sink: &mut dyn FnMut(&[u16])) {
    if start + 1 >= images.len() {
        sink(images);
        return;
    }
    let mut rest: Vec<u16> = images[start..].to_vec();
    rest.sort_unstable();
    permute_into(images, start, &mut rest, sink);
}

fn permute_into(
    images: &mut Vec<u16>,
    pos: usize,
    remaining: &mut Vec<u16>,
    sink: &mut dyn FnMut(&[u16]),
) {
    if remaining.is_empty() {
        sink(images);
        return;
    }
    for i in 0..remaining.len() {
        let v = remaining.remove(i);
        images[pos] = v;
        permute_into(images, pos + 1, remaining, sink);
        remaining.insert(i, v);
    }
}

/// Do the two censuses produce identical morphism sets?
pub fn routes_agree(a: &OracleResult, b: &OracleResult) -> bool {
    let va: Vec<&Vec<u8>> = a.morphisms.iter().map(|m| &m.values).collect();
    let vb: Vec<&Vec<u8>> = b.morphisms.iter().map(|m| &m.values).collect();
    va == vb
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::*;

    #[test]
    fn c2_has_only_the_identity() {
        let r = brute_enumerate("c2", &cyclic_regular(2).unwrap()).unwrap();
        assert_eq!(r.total, 1);
        assert_eq!(r.proper, 0);
    }

    #[test]
    fn prime_cyclic_groups_have_only_automorphisms() {
        // p - 1 automorphisms and nothing else.
        for p in [3usize, 5, 7] {
            let r = brute_enumerate(&format!("c{p}"), &cyclic_regular(p).unwrap()).unwrap();
            assert_eq!(r.total, p - 1, "c{p} total");
            assert_eq!(r.proper, 0, "c{p} proper");
            assert!(r.morphisms.iter().all(|m| m.is_automorphism));
        }
    }

    #[test]
    fn censuses_agree_on_c3_and_klein() {
        let c3 = cyclic_regular(3).unwrap();
        let a = brute_enumerate("c3", &c3).unwrap();
        let b = pipeline_census("c3", &c3).unwrap();
        assert_eq!(a.total, 2);
        assert!(routes_agree(&a, &b));

        let klein = parse_spec("klein").unwrap();
        let a = brute_enumerate("klein", &klein).unwrap();
        let b = pipeline_census("klein", &klein).unwrap();
        assert!(routes_agree(&a, &b));
    }

    #[test]
    fn censuses_agree_on_sym3() {
        let s3 = symmetric(3).unwrap();
        let a = brute_enumerate("s3", &s3).unwrap();
        let b = pipeline_census("s3", &s3).unwrap();
        assert!(routes_agree(&a, &b));
        // Sym(3) is complete (Aut = Inn of order 6); any extra entries are
        // proper morphisms.
        assert_eq!(a.morphisms.iter().filter(|m| m.is_automorphism).count(), 6);
    }

    #[test]
    fn c6_has_at_least_its_automorphisms() {
        let c6 = cyclic_regular(6).unwrap();
        let a = brute_enumerate("c6", &c6).unwrap();
        let b = pipeline_census("c6", &c6).unwrap();
        assert!(routes_agree(&a, &b));
        assert!(a.morphisms.iter().filter(|m| m.is_automorphism).count() >= 2);
    }

    #[test]
    fn oracle_invariants_hold() {
        for name in ["c4", "c6", "s3", "d4"] {
            let g = parse_spec(name).unwrap();
            let r = brute_enumerate(name, &g).unwrap();
            for m in &r.morphisms {
                assert!(m.kernel_order > 1, "{name}: trivial kernel");
                assert!((m.order as usize) < r.group_order, "{name}: order too big");
            }
        }
    }
}
