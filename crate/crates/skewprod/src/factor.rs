//! Complementary factorisations `G = B⟨y⟩` and the skew morphisms they
//! induce.
//!
//! For a valid pair, every `g` in `G` factors uniquely as `g = b·y^j` with
//! `b` in `B` and `0 <= j < |Y|`. The exponent is read off the right-coset
//! label of `B·g`: the complement acts regularly on the cosets, so cosets
//! are labelled by exponents. When `B` happens to be the full stabiliser of
//! a point (every case the harness runs at scale), the label of `B·g` is a
//! table lookup on `g(point)`, which is what makes the large tables cheap to
//! build.

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::skew::SkewMorphism;

/// Default cap on the size of a base group whose full morphism table we are
/// willing to materialise.
pub const DEFAULT_MORPHISM_CAP: u64 = 500_000;

/// The sorted element list of a group, giving every element a canonical
/// index. Index 0 is always the identity.
pub struct ElementTable {
    pub group: PermGroup,
    pub elements: Vec<Permutation>,
}

impl ElementTable {
    pub fn build(group: &PermGroup, cap: u64) -> Result<Arc<ElementTable>> {
        let mut elements = group.elements(cap)?;
        elements.sort_unstable();
        Ok(Arc::new(ElementTable {
            group: group.clone(),
            elements,
        }))
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        self.elements.binary_search(p).ok().map(|i| i as u32)
    }

    pub fn perm(&self, i: u32) -> &Permutation {
        &self.elements[i as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.index_of(&self.elements[a as usize].compose(&self.elements[b as usize]))
            .expect("product stays in the group")
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.index_of(&self.elements[a as usize].inverse())
            .expect("inverse stays in the group")
    }

    pub fn identity_index(&self) -> u32 {
        0
    }
}

enum CosetLabeller {
    /// `B` is the full stabiliser of `point`; the coset of `g` is read off
    /// `g(point)` through `table`.
    Point { point: u16, table: Vec<u32> },
    /// Fallback: scan the exponents, testing `g * y^-j` for membership.
    Scan,
}

/// A complementary factorisation `G = B⟨y⟩` with `⟨y⟩` core-free: a skew
/// generating pair for `G`.
pub struct SkewPair {
    pub group: PermGroup,
    pub base: PermGroup,
    pub y: Permutation,
    pub y_order: u32,
    y_powers: Vec<Permutation>,
    y_inv_powers: Vec<Permutation>,
    labeller: CosetLabeller,
}

/// Checks that `(B, y)` is a skew generating pair for `G` and builds the
/// coset labelling.
pub fn validate_pair(group: &PermGroup, base: &PermGroup, y: &Permutation) -> Result<SkewPair> {
    if base.degree() != group.degree() {
        return Err(GroupError::DegreeMismatch(group.degree(), base.degree()));
    }
    if y.degree() != group.degree() {
        return Err(GroupError::DegreeMismatch(group.degree(), y.degree()));
    }
    if !group.is_supergroup_of(base) || !group.contains(y) {
        return Err(GroupError::NotSubgroup);
    }
    let m = y.order();
    if base.order().saturating_mul(m) != group.order() {
        return Err(GroupError::NotComplementary(format!(
            "|B|·|Y| = {}·{} != |G| = {}",
            base.order(),
            m,
            group.order()
        )));
    }
    let mut y_powers = Vec::with_capacity(m as usize);
    let mut acc = Permutation::identity(group.degree());
    for _ in 0..m {
        y_powers.push(acc.clone());
        acc = acc.compose(y);
    }
    for (j, p) in y_powers.iter().enumerate().skip(1) {
        if base.contains(p) {
            return Err(GroupError::NotComplementary(format!(
                "y^{j} lies in B, so B ∩ Y is nontrivial"
            )));
        }
    }
    // Core-freeness of the cyclic complement: a nontrivial core would contain
    // a subgroup of prime order, and subgroups of a cyclic group are
    // characteristic, so it is enough to test the prime-order subgroups for
    // normality under the generators of G.
    for p in crate::perm::primes_of(m) {
        let gen = &y_powers[(m / p) as usize];
        let sub: Vec<&Permutation> = y_powers.iter().step_by((m / p) as usize).collect();
        let normal = group
            .gens()
            .iter()
            .all(|g| sub.iter().any(|s| **s == gen.conjugate_by(g)));
        if normal {
            return Err(GroupError::NotCoreFree(p));
        }
    }
    let y_inv_powers = y_powers.iter().map(|p| p.inverse()).collect();
    let mut pair = SkewPair {
        group: group.clone(),
        base: base.clone(),
        y: y.clone(),
        y_order: m as u32,
        y_powers,
        y_inv_powers,
        labeller: CosetLabeller::Scan,
    };
    if let Some(labeller) = pair.find_point_labeller() {
        pair.labeller = labeller;
    }
    Ok(pair)
}

impl SkewPair {
    /// Looks for a point whose full stabiliser in `G` is exactly `B`; then
    /// right cosets of `B` are labelled by the images of that point.
    fn find_point_labeller(&self) -> Option<CosetLabeller> {
        let degree = self.group.degree();
        'points: for pt in 0..degree as u16 {
            if self.base.gens().iter().any(|g| g.apply(pt) != pt) {
                continue;
            }
            // B fixes pt; it is the full stabiliser iff the orbit of pt has
            // size |G : B| = |Y|.
            let orbit = self.group.orbit(pt);
            if orbit.len() as u64 != self.y_order as u64 {
                continue;
            }
            let mut table = vec![u32::MAX; degree];
            for (j, yj) in self.y_powers.iter().enumerate() {
                let image = yj.apply(pt) as usize;
                if table[image] != u32::MAX {
                    continue 'points;
                }
                table[image] = j as u32;
            }
            return Some(CosetLabeller::Point { point: pt, table });
        }
        None
    }

    /// The exponent label of the right coset `B·g`.
    pub fn coset_label(&self, g: &Permutation) -> Result<u32> {
        match &self.labeller {
            CosetLabeller::Point { point, table } => {
                let j = table[g.apply(*point) as usize];
                if j == u32::MAX {
                    return Err(GroupError::NotInGroup);
                }
                Ok(j)
            }
            CosetLabeller::Scan => {
                for (j, yinv) in self.y_inv_powers.iter().enumerate() {
                    if self.base.contains(&g.compose(yinv)) {
                        return Ok(j as u32);
                    }
                }
                Err(GroupError::NotInGroup)
            }
        }
    }

    /// Factors `g = b·y^j`; `j` is the coset label and `b = g·y^-j`.
    pub fn factor(&self, g: &Permutation) -> Result<(Permutation, u32)> {
        if !self.group.contains(g) {
            return Err(GroupError::NotInGroup);
        }
        let j = self.coset_label(g)?;
        let b = g.compose(&self.y_inv_powers[j as usize]);
        debug_assert!(self.base.contains(&b));
        Ok((b, j))
    }

    pub fn y_power(&self, j: u32) -> &Permutation {
        &self.y_powers[(j % self.y_order) as usize]
    }

    /// Induces the skew morphism of `B`: for every `b`, `y·b = φ(b)·y^{π(b)}`.
    /// Tables are indexed by the canonical element order of `B`.
    pub fn induce(&self, cap: u64) -> Result<SkewMorphism> {
        let table = ElementTable::build(&self.base, cap)?;
        self.induce_with_table(table)
    }

    pub fn induce_with_table(&self, table: Arc<ElementTable>) -> Result<SkewMorphism> {
        let n = table.len();
        let rows: Vec<(u32, u16)> = (0..n)
            .into_par_iter()
            .map(|i| {
                let g = self.y.compose(table.perm(i as u32));
                let j = self.coset_label(&g).expect("y*b lies in G");
                // j = 0 would mean y*b in B, forcing y into B.
                assert!(j != 0, "power function must avoid 0");
                let b_image = g.compose(&self.y_inv_powers[j as usize]);
                let v = table
                    .index_of(&b_image)
                    .expect("phi(b) lies in B for a valid pair");
                (v, j as u16)
            })
            .collect();
        let values = rows.iter().map(|r| r.0).collect();
        let powers = rows.iter().map(|r| r.1).collect();
        SkewMorphism::new(table, values, powers, self.y_order)
    }

    /// The value table induced by an arbitrary element `u` of `Y` (used for
    /// the injectivity property: distinct elements of `Y` induce distinct
    /// tables). The exponent may be 0 here, e.g. for `u` the identity.
    pub fn induced_map_of(&self, u: &Permutation, cap: u64) -> Result<Vec<u32>> {
        let table = ElementTable::build(&self.base, cap)?;
        self.induced_map_of_with_table(u, &table)
    }

    pub fn induced_map_of_with_table(
        &self,
        u: &Permutation,
        table: &ElementTable,
    ) -> Result<Vec<u32>> {
        if !self.y_powers.contains(u) {
            return Err(GroupError::NotInGroup);
        }
        let mut out = Vec::with_capacity(table.len());
        for b in &table.elements {
            let g = u.compose(b);
            let j = self.coset_label(&g)?;
            let b_image = g.compose(&self.y_inv_powers[j as usize]);
            out.push(table.index_of(&b_image).ok_or(GroupError::NotInGroup)?);
        }
        Ok(out)
    }

    /// Fingerprint of the map induced by `u` on a probe set.
    pub fn fingerprint_of(&self, u: &Permutation, table: &ElementTable, probes: usize) -> Vec<u32> {
        let n = table.len();
        let step = (n / probes.min(n)).max(1);
        let mut out = Vec::with_capacity(probes * 2);
        for i in (0..n).step_by(step).take(probes) {
            let g = u.compose(table.perm(i as u32));
            let j = self.coset_label(&g).expect("u*b lies in G");
            let b_image = g.compose(&self.y_inv_powers[j as usize]);
            out.push(table.index_of(&b_image).expect("image in B"));
            out.push(j);
        }
        out
    }

    /// A short fingerprint of the induced morphism: values and exponents on
    /// a fixed probe set of elements. Distinct fingerprints certify distinct
    /// morphisms without materialising full tables.
    pub fn fingerprint(&self, table: &ElementTable, probes: usize) -> Vec<u32> {
        let y = self.y.clone();
        self.fingerprint_of(&y, table, probes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::*;
    use rand::SeedableRng;

    #[test]
    fn sym4_sym3_four_cycle_pair() {
        let s4 = symmetric(4).unwrap();
        let s3 = s4.point_stabilizer(3);
        let y = Permutation::parse_cycles(4, "(1,2,3,4)").unwrap();
        let pair = validate_pair(&s4, &s3, &y).unwrap();
        assert_eq!(pair.y_order, 4);
        // g = identity -> (identity, 0); g = y -> (identity, 1)
        let (b, j) = pair.factor(&Permutation::identity(4)).unwrap();
        assert!(b.is_identity());
        assert_eq!(j, 0);
        let (b, j) = pair.factor(&y).unwrap();
        assert!(b.is_identity());
        assert_eq!(j, 1);
    }

    #[test]
    fn sym5_alt5_transposition_pair() {
        let s5 = symmetric(5).unwrap();
        let a5 = alternating(5).unwrap();
        let y = Permutation::parse_cycles(5, "(1,2)").unwrap();
        let pair = validate_pair(&s5, &a5, &y).unwrap();
        assert_eq!(pair.y_order, 2);
        // B is normal here, so the induced map is conjugation by y.
        let phi = pair.induce(1000).unwrap();
        for (i, b) in phi.table.elements.iter().enumerate() {
            let expect = b.conjugate_by(&y.inverse());
            assert_eq!(phi.table.perm(phi.values[i]), &expect);
        }
        assert!(phi.is_automorphism());
    }

    #[test]
    fn rejects_non_complementary() {
        let s4 = symmetric(4).unwrap();
        let s3 = s4.point_stabilizer(3);
        // order 3 element: |B|·|Y| = 18 != 24
        let y3 = Permutation::parse_cycles(4, "(1,2,3)").unwrap();
        assert!(matches!(
            validate_pair(&s4, &s3, &y3),
            Err(GroupError::NotComplementary(_))
        ));
        // Sym(4) = Alt(4)·⟨(1,2)⟩ is complementary with a core-free complement.
        let a4 = alternating(4).unwrap();
        let t = Permutation::parse_cycles(4, "(1,2)").unwrap();
        assert!(validate_pair(&s4, &a4, &t).is_ok());
    }

    #[test]
    fn corefree_rejection_fires() {
        // In an abelian group every complement is normal, so the core-free
        // requirement must reject C6 = C3 · C2.
        let c6 = cyclic_regular(6).unwrap();
        let y = c6.gens()[0].clone();
        let b = PermGroup::new(6, vec![y.pow(2)]);
        let y3 = y.pow(3);
        assert!(matches!(
            validate_pair(&c6, &b, &y3),
            Err(GroupError::NotCoreFree(2))
        ));
    }

    #[test]
    fn factorization_recomposes_psl2_11() {
        let g = psl2(11).unwrap();
        let b = crate::classify::find_alt5_in_psl2_11(&g);
        let y = g.gens()[0].clone(); // z -> z+1, order 11
        assert_eq!(y.order(), 11);
        let pair = validate_pair(&g, &b, &y).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let x = g.random_element(&mut rng);
            let (b_part, j) = pair.factor(&x).unwrap();
            assert_eq!(b_part.compose(pair.y_power(j)), x);
            assert!(pair.base.contains(&b_part));
        }
    }

    #[test]
    fn unique_factorization_by_full_scan() {
        let s4 = symmetric(4).unwrap();
        let s3 = s4.point_stabilizer(3);
        let y = Permutation::parse_cycles(4, "(1,2,3,4)").unwrap();
        let pair = validate_pair(&s4, &s3, &y).unwrap();
        for g in s4.elements(100).unwrap() {
            let hits: Vec<u32> = (0..4)
                .filter(|&j| pair.base.contains(&g.compose(&pair.y_power(j).inverse())))
                .collect();
            assert_eq!(hits.len(), 1, "unique exponent for {g}");
        }
    }

    #[test]
    fn induced_map_of_identity_is_identity() {
        let s4 = symmetric(4).unwrap();
        let s3 = s4.point_stabilizer(3);
        let y = Permutation::parse_cycles(4, "(1,2,3,4)").unwrap();
        let pair = validate_pair(&s4, &s3, &y).unwrap();
        let id_map = pair.induced_map_of(&Permutation::identity(4), 100).unwrap();
        assert!(id_map.iter().enumerate().all(|(i, &v)| i as u32 == v));
        let y_map = pair.induced_map_of(&y, 100).unwrap();
        let phi = pair.induce(100).unwrap();
        assert_eq!(y_map, phi.values);
        assert!(pair
            .induced_map_of(&Permutation::parse_cycles(4, "(1,2)").unwrap(), 100)
            .is_err());
    }
}
