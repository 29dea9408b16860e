//! Constructors for the concrete groups the harness works with: symmetric,
//! alternating and cyclic groups, projective groups over small fields, the
//! Mathieu groups M11 and M23 (and their point stabilisers M10 and M22),
//! direct products, imprimitive wreath products, and the twisted extensions
//! used by the non-core-free analysis.

use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

pub fn symmetric(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(GroupError::Invalid("symmetric(0)".into()));
    }
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_cycles(n, &[vec![0, 1]])?);
    }
    if n >= 3 {
        gens.push(Permutation::from_cycles(n, &[(0..n as u16).collect()])?);
    }
    Ok(PermGroup::new(n, gens))
}

pub fn alternating(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(GroupError::Invalid("alternating(0)".into()));
    }
    let mut gens = Vec::new();
    if n >= 3 {
        gens.push(Permutation::from_cycles(n, &[vec![0, 1, 2]])?);
    }
    if n >= 4 {
        let long: Vec<u16> = if n % 2 == 1 {
            (0..n as u16).collect()
        } else {
            (1..n as u16).collect()
        };
        gens.push(Permutation::from_cycles(n, &[long])?);
    }
    Ok(PermGroup::new(n, gens))
}

/// The cyclic group of order `n` acting regularly: `⟨(0,1,...,n-1)⟩`.
pub fn cyclic_regular(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(GroupError::Invalid("cyclic_regular(0)".into()));
    }
    if n == 1 {
        return Ok(PermGroup::trivial(1));
    }
    Ok(PermGroup::new(
        n,
        vec![Permutation::from_cycles(n, &[(0..n as u16).collect()])?],
    ))
}

/// Dihedral group of order `2n` in its natural degree-`n` action.
pub fn dihedral(n: usize) -> Result<PermGroup> {
    if n < 3 {
        return Err(GroupError::Invalid(format!("dihedral({n}) needs n >= 3")));
    }
    let rot = Permutation::from_cycles(n, &[(0..n as u16).collect()])?;
    let refl =
        Permutation::from_images((0..n as u16).map(|i| (n as u16 - i) % n as u16).collect())?;
    Ok(PermGroup::new(n, vec![rot, refl]))
}

/// The quaternion group of order 8 in its regular action. Points are the
/// elements 1, -1, i, -i, j, -j, k, -k in that order.
pub fn quaternion() -> PermGroup {
    fn mul(a: usize, b: usize) -> usize {
        // (sign, axis) with axes 1, i, j, k.
        let (sa, xa) = (a % 2, a / 2);
        let (sb, xb) = (b % 2, b / 2);
        let (s, x) = match (xa, xb) {
            (0, x) | (x, 0) => (0, x),
            (x, y) if x == y => (1, 0),
            (1, 2) => (0, 3),
            (2, 1) => (1, 3),
            (2, 3) => (0, 1),
            (3, 2) => (1, 1),
            (3, 1) => (0, 2),
            (1, 3) => (1, 2),
            _ => unreachable!(),
        };
        (s ^ sa ^ sb) + 2 * x
    }
    let by = |b: usize| {
        Permutation::from_images((0..8).map(|a| mul(a, b) as u16).collect()).unwrap()
    };
    PermGroup::new(8, vec![by(2), by(4)])
}

/// A small finite field of order `q`, where `q` is prime or a power of two
/// up to 64. Elements are labelled `0..q`; for binary fields the label is the
/// bit pattern of the polynomial in the fixed basis, so the Frobenius map is
/// reproducible.
pub struct SmallField {
    pub q: usize,
    p: usize,
    irreducible: usize,
}

impl SmallField {
    pub fn new(q: usize) -> Result<SmallField> {
        if q >= 2 && is_prime(q) {
            return Ok(SmallField { q, p: q, irreducible: 0 });
        }
        let irreducible = match q {
            4 => 0b111,      // x^2 + x + 1
            8 => 0b1011,     // x^3 + x + 1
            16 => 0b10011,   // x^4 + x + 1
            32 => 0b100101,  // x^5 + x^2 + 1
            64 => 0b1000011, // x^6 + x + 1
            _ => return Err(GroupError::Invalid(format!("unsupported field order {q}"))),
        };
        Ok(SmallField { q, p: 2, irreducible })
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        if self.p == self.q {
            (a + b) % self.p
        } else {
            a ^ b
        }
    }

    pub fn neg(&self, a: usize) -> usize {
        if self.p == self.q {
            (self.p - a) % self.p
        } else {
            a
        }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        if self.p == self.q {
            return a * b % self.p;
        }
        let (mut a, mut b, mut acc) = (a, b, 0usize);
        while b > 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            a <<= 1;
            if a >= self.q {
                a ^= self.irreducible;
            }
            b >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: usize) -> usize {
        assert!(a != 0, "inverse of zero");
        (1..self.q).find(|&b| self.mul(a, b) == 1).unwrap()
    }

    /// A multiplicative generator.
    pub fn primitive(&self) -> usize {
        (2..self.q)
            .chain(std::iter::once(1))
            .find(|&g| {
                let mut x = g;
                let mut n = 1;
                while x != 1 {
                    x = self.mul(x, g);
                    n += 1;
                }
                n == self.q - 1
            })
            .expect("no primitive element")
    }

    pub fn frobenius(&self, a: usize) -> usize {
        self.mul(a, a)
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Degree of the projective-line action: field points `0..q`, plus the point
/// at infinity labelled `q`.
fn projective_perm(q: usize, f: impl Fn(Option<usize>) -> Option<usize>) -> Permutation {
    let images = (0..=q)
        .map(|i| {
            let z = if i == q { None } else { Some(i) };
            match f(z) {
                None => q as u16,
                Some(w) => w as u16,
            }
        })
        .collect();
    Permutation::from_images(images).unwrap()
}

/// PSL(2, q) acting on the projective line, degree `q + 1`.
pub fn psl2(q: usize) -> Result<PermGroup> {
    let field = SmallField::new(q)?;
    let alpha = field.primitive();
    let square = field.mul(alpha, alpha);
    // z -> z + 1
    let t = projective_perm(q, |z| z.map(|z| field.add(z, 1)));
    // z -> (alpha^2) z, a generator of the squares
    let m = projective_perm(q, |z| z.map(|z| field.mul(square, z)));
    // z -> -1/z
    let s = projective_perm(q, |z| match z {
        None => Some(0),
        Some(0) => None,
        Some(z) => Some(field.neg(field.inv(z))),
    });
    Ok(PermGroup::new(q + 1, vec![t, m, s]))
}

/// PΣL(2, 2^p): PSL(2, 2^p) extended by the Frobenius field automorphism.
pub fn psigmal2(q: usize) -> Result<PermGroup> {
    if !q.is_power_of_two() || q < 4 {
        return Err(GroupError::Invalid(format!(
            "psigmal2 needs a power of two >= 4, got {q}"
        )));
    }
    let field = SmallField::new(q)?;
    let psl = psl2(q)?;
    let mut gens = psl.gens().to_vec();
    gens.push(projective_perm(q, |z| z.map(|z| field.frobenius(z))));
    Ok(PermGroup::new(q + 1, gens))
}

/// The Frobenius permutation of the projective line over F_{2^p}, on its own.
pub fn frobenius_on_line(q: usize) -> Result<Permutation> {
    let field = SmallField::new(q)?;
    Ok(projective_perm(q, |z| z.map(|z| field.frobenius(z))))
}

/// AGL(1, p): all maps `z -> az + b` on F_p, degree `p`, order `p(p-1)`.
pub fn agl1(p: usize) -> Result<PermGroup> {
    if !is_prime(p) {
        return Err(GroupError::Invalid(format!("agl1({p}): not a prime")));
    }
    let t = Permutation::from_images((0..p as u16).map(|z| (z + 1) % p as u16).collect())?;
    if p == 2 {
        return Ok(PermGroup::new(2, vec![t]));
    }
    let field = SmallField::new(p)?;
    let g = field.primitive();
    let m = Permutation::from_images((0..p).map(|z| field.mul(g, z) as u16).collect())?;
    Ok(PermGroup::new(p, vec![t, m]))
}

/// The affine translation `z -> z + 1` on F_p.
pub fn agl1_translation(p: usize) -> Result<Permutation> {
    Permutation::from_images(
        (0..p as u16).map(|z| (z + 1) % p as u16).collect(),
    )
}

/// The multiplication `z -> gz` on F_p by a primitive root.
pub fn agl1_multiplier(p: usize) -> Result<Permutation> {
    let field = SmallField::new(p)?;
    let g = field.primitive();
    Permutation::from_images(
        (0..p).map(|z| field.mul(g, z) as u16).collect(),
    )
}

/// Mathieu groups by degree. The generator data is literal; the test suite
/// recomputes order and transitivity from scratch, so the constructions stand
/// on their own.
pub fn mathieu(n: usize) -> Result<PermGroup> {
    match n {
        11 => {
            let a = Permutation::parse_cycles(11, "(1,2,3,4,5,6,7,8,9,10,11)")?;
            let b = Permutation::parse_cycles(11, "(3,7,11,8)(4,10,5,6)")?;
            Ok(PermGroup::new(11, vec![a, b]))
        }
        23 => {
            let a = Permutation::parse_cycles(
                23,
                "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)",
            )?;
            let b = Permutation::parse_cycles(
                23,
                "(3,17,10,7,9)(5,4,13,14,19)(11,12,23,8,18)(21,16,15,20,22)",
            )?;
            Ok(PermGroup::new(23, vec![a, b]))
        }
        _ => Err(GroupError::Invalid(format!("mathieu({n}) not available"))),
    }
}

pub fn point_stabilizer(g: &PermGroup, point: u16) -> PermGroup {
    g.point_stabilizer(point)
}

/// Disjoint-point direct product.
pub fn direct_product(g1: &PermGroup, g2: &PermGroup) -> PermGroup {
    let (d1, d2) = (g1.degree(), g2.degree());
    let d = d1 + d2;
    let mut gens = Vec::new();
    for g in g1.gens() {
        let mut images: Vec<u16> = (0..d as u16).collect();
        for (i, item) in images.iter_mut().enumerate().take(d1) {
            *item = g.apply(i as u16);
        }
        gens.push(Permutation::from_images(images).unwrap());
    }
    for g in g2.gens() {
        let mut images: Vec<u16> = (0..d as u16).collect();
        for i in 0..d2 {
            images[d1 + i] = d1 as u16 + g.apply(i as u16);
        }
        gens.push(Permutation::from_images(images).unwrap());
    }
    PermGroup::new(d, gens)
}

/// Embeds a degree-`t` permutation into block `block` of `h` blocks.
pub fn block_embed(p: &Permutation, block: usize, blocks: usize) -> Permutation {
    let t = p.degree();
    let d = t * blocks;
    let mut images: Vec<u16> = (0..d as u16).collect();
    for i in 0..t {
        images[block * t + i] = (block * t) as u16 + p.apply(i as u16);
    }
    Permutation::from_images(images).unwrap()
}

/// Lifts a permutation of blocks to the imprimitive action on `t*h` points.
pub fn block_permutation(h_perm: &Permutation, t: usize) -> Permutation {
    let h = h_perm.degree();
    let mut images = vec![0u16; t * h];
    for j in 0..h {
        let tgt = h_perm.apply(j as u16) as usize;
        for i in 0..t {
            images[j * t + i] = (tgt * t + i) as u16;
        }
    }
    Permutation::from_images(images).unwrap()
}

/// Imprimitive wreath product `T wr H` on `t*h` points: a copy of `T` in
/// every block plus the block action of `H`. Order `|T|^h * |H|`.
pub fn wreath_imprimitive(t_grp: &PermGroup, h_grp: &PermGroup) -> Result<PermGroup> {
    let (t, h) = (t_grp.degree(), h_grp.degree());
    if t * h > u16::MAX as usize {
        return Err(GroupError::CapExceeded {
            need: (t * h) as u64,
            cap: u16::MAX as u64,
        });
    }
    let mut gens = Vec::new();
    for block in 0..h {
        for g in t_grp.gens() {
            gens.push(block_embed(g, block, h));
        }
    }
    for g in h_grp.gens() {
        gens.push(block_permutation(g, t));
    }
    Ok(PermGroup::new(t * h, gens))
}

/// The regular representation of a small group: the right-multiplication
/// action on its own sorted element list. Returns the group together with the
/// element labelling (point `i` is `elements[i]`; the identity is point 0).
pub fn regular_rep(g: &PermGroup, cap: u64) -> Result<(PermGroup, Vec<Permutation>)> {
    let mut elements = g.elements(cap)?;
    elements.sort_unstable();
    let n = elements.len();
    let index_of = |p: &Permutation| elements.binary_search(p).expect("closure");
    let mut gens = Vec::new();
    for x in g.gens() {
        let images: Vec<u16> = elements
            .iter()
            .map(|e| index_of(&e.compose(x)) as u16)
            .collect();
        gens.push(Permutation::from_images(images).unwrap());
    }
    Ok((PermGroup::new(n, gens), elements))
}

/// The inversion map `g -> g^-1` as a permutation of the sorted element list.
/// An automorphism exactly when the group is abelian.
pub fn inversion_on_elements(elements: &[Permutation]) -> Permutation {
    let images: Vec<u16> = elements
        .iter()
        .map(|e| elements.binary_search(&e.inverse()).expect("closure") as u16)
        .collect();
    Permutation::from_images(images).unwrap()
}

/// Conjugation `g -> t^-1 g t` as a permutation of the sorted element list.
pub fn conjugation_on_elements(elements: &[Permutation], t: &Permutation) -> Permutation {
    let images: Vec<u16> = elements
        .iter()
        .map(|e| elements.binary_search(&e.conjugate_by(t)).expect("closure") as u16)
        .collect();
    Permutation::from_images(images).unwrap()
}

/// A twisted extension `C ⋊ Sym(5)` on `c + 5` points.
///
/// `c_reg` must act regularly on its `c` points with the identity at point 0,
/// and `sigma` must be an involutory automorphism of it (a permutation fixing
/// point 0 and normalising the regular image). Generators of `C` move only
/// the first block; even generators of the `Sym(5)` block move only the
/// second block; one odd generator additionally applies `sigma` to the first
/// block, so conjugation by the `Sym(5)` copy induces `⟨sigma⟩` on `C`.
pub struct MonolithicExtension {
    pub group: PermGroup,
    /// The `Sym(5)` block subgroup (the factor `B`).
    pub sym5: PermGroup,
    /// The `Alt(5)` block subgroup, normal in the whole group.
    pub alt5: PermGroup,
    /// The `C` block subgroup, equal to the centraliser of `alt5`.
    pub c_block: PermGroup,
}

pub fn monolithic_extension(
    c_reg: &PermGroup,
    sigma: &Permutation,
) -> Result<MonolithicExtension> {
    let c = c_reg.degree();
    if c_reg.order() != c as u64 || !c_reg.is_transitive() {
        return Err(GroupError::Invalid(
            "twist base group must act regularly".into(),
        ));
    }
    if sigma.degree() != c {
        return Err(GroupError::DegreeMismatch(sigma.degree(), c));
    }
    if !sigma.compose(sigma).is_identity() {
        return Err(GroupError::NotAutomorphism("sigma^2 != identity".into()));
    }
    if sigma.apply(0) != 0 {
        return Err(GroupError::NotAutomorphism(
            "sigma must fix the identity point".into(),
        ));
    }
    for g in c_reg.gens() {
        if !c_reg.contains(&g.conjugate_by(sigma)) {
            return Err(GroupError::NotAutomorphism(
                "sigma does not normalise the regular image".into(),
            ));
        }
    }
    let d = c + 5;
    let pt = |i: usize| (c + i) as u16;
    let c_gens: Vec<Permutation> = c_reg
        .gens()
        .iter()
        .map(|g| {
            let mut images: Vec<u16> = (0..d as u16).collect();
            for (i, item) in images.iter_mut().enumerate().take(c) {
                *item = g.apply(i as u16);
            }
            Permutation::from_images(images).unwrap()
        })
        .collect();
    let alt_gens: Vec<Permutation> = [
        vec![pt(0), pt(1), pt(2)],
        vec![pt(0), pt(1), pt(2), pt(3), pt(4)],
    ]
    .iter()
    .map(|cycle| Permutation::from_cycles(d, std::slice::from_ref(cycle)).unwrap())
    .collect();
    // The odd generator: a transposition on the Sym(5) block, with sigma on
    // the C block.
    let mut images: Vec<u16> = (0..d as u16).collect();
    for (i, item) in images.iter_mut().enumerate().take(c) {
        *item = sigma.apply(i as u16);
    }
    images.swap(c, c + 1);
    let odd = Permutation::from_images(images)?;

    let mut g_gens = c_gens.clone();
    g_gens.extend(alt_gens.clone());
    g_gens.push(odd.clone());
    let group = PermGroup::new(d, g_gens);

    let mut b_gens = alt_gens.clone();
    b_gens.push(odd);
    Ok(MonolithicExtension {
        group,
        sym5: PermGroup::new(d, b_gens),
        alt5: PermGroup::new(d, alt_gens),
        c_block: PermGroup::new(d, c_gens),
    })
}

/// Resolves a symbolic group spec such as `alt(7)`, `sym(5)`, `c6`, `d4`,
/// `q8`, `klein`, `c2xc4`, `psl2(11)`, `psigmal2(8)`, `agl1(3)`, `m11`,
/// `m23`, `m10`, `m22`.
pub fn parse_spec(spec: &str) -> Result<PermGroup> {
    let s = spec.trim().to_lowercase();
    let unknown = || GroupError::UnknownSpec(spec.to_string());
    let (name, arg) = match s.find('(') {
        Some(i) if s.ends_with(')') => {
            let n: usize = s[i + 1..s.len() - 1].parse().map_err(|_| unknown())?;
            (&s[..i], Some(n))
        }
        Some(_) => return Err(unknown()),
        None => (s.as_str(), None),
    };
    match (name, arg) {
        ("sym", Some(n)) => symmetric(n),
        ("alt", Some(n)) => alternating(n),
        ("cyclic", Some(n)) | ("c", Some(n)) => cyclic_regular(n),
        ("dihedral", Some(n)) | ("d", Some(n)) => dihedral(n),
        ("psl2", Some(q)) => psl2(q),
        ("psigmal2", Some(q)) => psigmal2(q),
        ("agl1", Some(p)) => agl1(p),
        ("m11", None) => mathieu(11),
        ("m23", None) => mathieu(23),
        ("m10", None) => Ok(mathieu(11)?.point_stabilizer(10)),
        ("m22", None) => Ok(mathieu(23)?.point_stabilizer(22)),
        ("q8", None) => Ok(quaternion()),
        ("klein", None) | ("c2xc2", None) => {
            let c2 = cyclic_regular(2)?;
            Ok(regular_rep(&direct_product(&c2, &c2), 100)?.0)
        }
        ("c2xc4", None) => {
            let p = direct_product(&cyclic_regular(2)?, &cyclic_regular(4)?);
            Ok(regular_rep(&p, 100)?.0)
        }
        ("s3", None) | ("sym3", None) => symmetric(3),
        (other, None) => {
            // compact forms like c5, d4, sym5, alt6, m11
            if let Some(rest) = other.strip_prefix('c') {
                if let Ok(n) = rest.parse() {
                    return cyclic_regular(n);
                }
            }
            if let Some(rest) = other.strip_prefix('d') {
                if let Ok(n) = rest.parse() {
                    return dihedral(n);
                }
            }
            if let Some(rest) = other.strip_prefix("sym") {
                if let Ok(n) = rest.parse() {
                    return symmetric(n);
                }
            }
            if let Some(rest) = other.strip_prefix("alt") {
                if let Ok(n) = rest.parse() {
                    return alternating(n);
                }
            }
            Err(unknown())
        }
        _ => Err(unknown()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Order oracle independent of the stabiliser chain.
    fn bfs_order(degree: usize, gens: &[Permutation]) -> usize {
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut queue = vec![Permutation::identity(degree)];
        seen.insert(queue[0].clone());
        while let Some(p) = queue.pop() {
            for g in gens {
                let q = p.compose(g);
                if seen.insert(q.clone()) {
                    queue.push(q);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn standard_constructor_orders() {
        assert_eq!(symmetric(6).unwrap().order(), 720);
        assert_eq!(alternating(7).unwrap().order(), 2520);
        assert_eq!(cyclic_regular(11).unwrap().order(), 11);
        assert!(cyclic_regular(11).unwrap().is_transitive());
        assert_eq!(dihedral(4).unwrap().order(), 8);
        assert_eq!(quaternion().order(), 8);
        assert!(symmetric(0).is_err());
    }

    #[test]
    fn quaternion_element_orders() {
        let q8 = quaternion();
        let orders: Vec<u64> = q8.elements(10).unwrap().iter().map(|e| e.order()).collect();
        let mut sorted = orders.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 2, 4, 4, 4, 4, 4, 4]);
    }

    #[test]
    fn psl2_orders() {
        // q(q^2 - 1)/gcd(2, q-1)
        assert_eq!(psl2(11).unwrap().order(), 660);
        assert_eq!(psl2(11).unwrap().degree(), 12);
        assert_eq!(psl2(4).unwrap().order(), 60);
        assert_eq!(psl2(8).unwrap().order(), 504);
        assert_eq!(psl2(7).unwrap().order(), 168);
        assert!(psl2(6).is_err());
    }

    #[test]
    fn psl2_order_matches_bfs_oracle() {
        let g = psl2(11).unwrap();
        assert_eq!(bfs_order(g.degree(), g.gens()), 660);
    }

    #[test]
    fn psl2_4_is_the_alternating_group() {
        // Degree 5 and order 60 pin it down as Alt(5) on the nose.
        let g = psl2(4).unwrap();
        assert_eq!(g.degree(), 5);
        assert!(g.same_group(&alternating(5).unwrap()));
    }

    #[test]
    fn psigmal2_8() {
        let g = psigmal2(8).unwrap();
        assert_eq!(g.degree(), 9);
        // 3 * 504, computed independently by closure.
        assert_eq!(bfs_order(g.degree(), g.gens()), 1512);
        assert_eq!(g.order(), 1512);
        let psl = psl2(8).unwrap();
        assert!(g.is_supergroup_of(&psl));
        assert!(g.is_normal(&psl));
    }

    #[test]
    fn psigmal2_4_is_sym5_sized() {
        assert_eq!(psigmal2(4).unwrap().order(), 120);
    }

    #[test]
    fn agl1_orders() {
        assert_eq!(agl1(3).unwrap().order(), 6); // Sym(3)
        assert_eq!(agl1(5).unwrap().order(), 20);
        assert_eq!(agl1(2).unwrap().order(), 2);
        assert!(agl1(4).is_err());
    }

    #[test]
    fn agl1_is_sharply_two_transitive() {
        let g = agl1(5).unwrap();
        // order p(p-1) with a 2-point base: sharply 2-transitive.
        assert_eq!(g.order(), 20);
        let stab = g.point_stabilizer(0);
        assert_eq!(stab.order(), 4);
        assert_eq!(stab.orbit(1).len(), 4);
    }

    #[test]
    fn mathieu_11() {
        let m11 = mathieu(11).unwrap();
        assert_eq!(m11.order(), 7920);
        // Independent enumeration oracle agrees.
        assert_eq!(bfs_order(11, m11.gens()), 7920);
        // 4-transitive: fundamental orbits 11, 10, 9, 8 on a prescribed base.
        let chain = PermGroup::with_base_hint(11, m11.gens().to_vec(), &[0, 1, 2, 3]);
        let sizes = chain.base_orbit_sizes();
        assert_eq!(&sizes[..4], &[11, 10, 9, 8]);
        assert_eq!(chain.order(), 7920);
    }

    #[test]
    fn mathieu_10_point_stabilizer() {
        let m11 = mathieu(11).unwrap();
        let m10 = m11.point_stabilizer(10);
        assert_eq!(m10.order(), 720);
        assert!(m11.is_supergroup_of(&m10));
    }

    #[test]
    fn mathieu_23() {
        let m23 = mathieu(23).unwrap();
        assert_eq!(m23.order(), 10_200_960);
        let chain = PermGroup::with_base_hint(23, m23.gens().to_vec(), &[0, 1, 2, 3]);
        let sizes = chain.base_orbit_sizes();
        assert_eq!(&sizes[..4], &[23, 22, 21, 20]);
        let m22 = m23.point_stabilizer(22);
        assert_eq!(m22.order(), 443_520);
    }

    #[test]
    fn direct_products() {
        let a5 = alternating(5).unwrap();
        let c3 = cyclic_regular(3).unwrap();
        let g = direct_product(&a5, &c3);
        assert_eq!(g.degree(), 8);
        assert_eq!(g.order(), 180);
        let t = PermGroup::trivial(1);
        assert_eq!(direct_product(&a5, &t).order(), 60);
        let big = direct_product(&psigmal2(8).unwrap(), &agl1(3).unwrap());
        assert_eq!(big.order(), 9072);
    }

    #[test]
    fn wreath_products() {
        let c2 = cyclic_regular(2).unwrap();
        let d = wreath_imprimitive(&c2, &c2).unwrap();
        assert_eq!(d.order(), 8); // dihedral of order 8
        let a5 = alternating(5).unwrap();
        let triv = PermGroup::trivial(1);
        assert_eq!(wreath_imprimitive(&a5, &triv).unwrap().order(), 60);
    }

    #[test]
    fn wreath_alt5_sym4() {
        let g = wreath_imprimitive(&alternating(5).unwrap(), &symmetric(4).unwrap()).unwrap();
        assert_eq!(g.degree(), 20);
        assert_eq!(g.order(), 60u64.pow(4) * 24);
    }

    #[test]
    fn regular_rep_of_klein() {
        let c2 = cyclic_regular(2).unwrap();
        let (klein, elements) = regular_rep(&direct_product(&c2, &c2), 100).unwrap();
        assert_eq!(klein.degree(), 4);
        assert_eq!(klein.order(), 4);
        assert!(klein.is_transitive());
        assert!(elements[0].is_identity());
    }

    #[test]
    fn monolithic_extension_c3() {
        let c3 = cyclic_regular(3).unwrap();
        let sigma = Permutation::from_images(vec![0, 2, 1]).unwrap(); // inversion
        let ext = monolithic_extension(&c3, &sigma).unwrap();
        assert_eq!(ext.group.degree(), 8);
        assert_eq!(ext.group.order(), 360);
        assert_eq!(ext.sym5.order(), 120);
        assert!(ext.group.is_normal(&ext.alt5));
        // core of the Sym(5) block is the Alt(5) block
        let core = ext.group.core_of(&ext.sym5, 1000).unwrap();
        assert!(core.same_group(&ext.alt5));
        // centraliser of the Alt(5) block is the C block
        let z = ext
            .group
            .brute_centralizer(ext.alt5.gens(), 1000)
            .unwrap();
        assert!(z.same_group(&ext.c_block));
    }

    #[test]
    fn monolithic_extension_trivial_twist_is_direct_product() {
        let c5 = cyclic_regular(5).unwrap();
        let ext = monolithic_extension(&c5, &Permutation::identity(5)).unwrap();
        assert_eq!(ext.group.order(), 600);
        assert!(ext.group.is_normal(&ext.sym5));
    }

    #[test]
    fn monolithic_extension_rejects_bad_sigma() {
        let c3 = cyclic_regular(3).unwrap();
        let not_inv = Permutation::from_images(vec![1, 2, 0]).unwrap();
        assert!(monolithic_extension(&c3, &not_inv).is_err());
        let c4 = cyclic_regular(4).unwrap();
        let moves_id = Permutation::from_images(vec![1, 0, 3, 2]).unwrap();
        assert!(monolithic_extension(&c4, &moves_id).is_err());
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(parse_spec("alt(7)").unwrap().order(), 2520);
        assert_eq!(parse_spec("sym5").unwrap().order(), 120);
        assert_eq!(parse_spec("c5").unwrap().order(), 5);
        assert_eq!(parse_spec("q8").unwrap().order(), 8);
        assert_eq!(parse_spec("klein").unwrap().order(), 4);
        assert_eq!(parse_spec("c2xc4").unwrap().order(), 8);
        assert_eq!(parse_spec("m10").unwrap().order(), 720);
        assert_eq!(parse_spec("psl2(11)").unwrap().order(), 660);
        assert!(parse_spec("nope(3)").is_err());
    }
}
