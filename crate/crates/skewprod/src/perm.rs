//! Permutations on the points `0..d-1`.
//!
//! The composition convention is fixed for the whole crate: `p.compose(&q)`
//! applies `p` first, so `(p*q)(x) = q(p(x))`. With exponent notation this is
//! the usual right action, `x^(pq) = (x^p)^q`. Conjugation follows suit:
//! `p.conjugate_by(&g)` is `g^-1 * p * g`.

use std::fmt;

use crate::error::{GroupError, Result};

/// A permutation of `0..degree`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from its image list, checking bijectivity.
    pub fn from_images(images: Vec<u16>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &x in &images {
            if (x as usize) >= d || seen[x as usize] {
                return Err(GroupError::NotBijection(d));
            }
            seen[x as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles of
    /// 0-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u16>]) -> Result<Self> {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                let q = cycle[(i + 1) % cycle.len()];
                if p as usize >= degree || q as usize >= degree {
                    return Err(GroupError::BadCycles(
                        format!("{cycle:?}"),
                        format!("point out of range for degree {degree}"),
                    ));
                }
                images[p as usize] = q;
            }
        }
        Permutation::from_images(images)
    }

    /// Parses 1-based cycle notation such as `(1,2,3)(4,5)`. Whitespace and
    /// space-separated points are accepted; `()` is the identity.
    pub fn parse_cycles(degree: usize, s: &str) -> Result<Self> {
        let err = |m: &str| GroupError::BadCycles(s.to_string(), m.to_string());
        let mut cycles: Vec<Vec<u16>> = Vec::new();
        let body = s.trim();
        if body.is_empty() {
            return Err(err("empty string"));
        }
        for chunk in body.split('(').skip(1) {
            let Some(inner) = chunk.split(')').next() else {
                return Err(err("unbalanced parentheses"));
            };
            let inner = inner.trim();
            if inner.is_empty() {
                continue;
            }
            let mut cycle = Vec::new();
            for tok in inner.split([',', ' ']).filter(|t| !t.is_empty()) {
                let p: usize = tok
                    .parse()
                    .map_err(|_| err(&format!("bad point `{tok}`")))?;
                if p == 0 || p > degree {
                    return Err(err(&format!("point {p} out of range 1..={degree}")));
                }
                cycle.push((p - 1) as u16);
            }
            cycles.push(cycle);
        }
        Permutation::from_cycles(degree, &cycles)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: u16) -> u16 {
        self.images[x as usize]
    }

    #[inline]
    pub fn images(&self) -> &[u16] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` then `other`: `(self*other)(x) = other(self(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.degree(),
            other.degree(),
            "compose requires equal degrees"
        );
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u16;
        }
        Permutation { images }
    }

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().compose(self).compose(g)
    }

    pub fn pow(&self, mut n: i64) -> Permutation {
        let d = self.degree();
        let mut base = if n < 0 {
            n = -n;
            self.inverse()
        } else {
            self.clone()
        };
        let mut acc = Permutation::identity(d);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            n >>= 1;
        }
        acc
    }

    /// Order as the lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        let mut order = 1u64;
        for len in self.cycle_lengths() {
            order = lcm(order, len as u64);
        }
        order
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lens = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.images[x] as usize;
            }
            lens.push(len);
        }
        lens
    }

    /// Disjoint cycles (nontrivial ones only), each starting at its smallest
    /// point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<u16>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x as u16);
                x = self.images[x] as usize;
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    pub fn smallest_moved_point(&self) -> Option<u16> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i != x as usize)
            .map(|(i, _)| i as u16)
    }

    /// Is the parity even (an element of the alternating group)?
    pub fn is_even(&self) -> bool {
        let transpositions: usize = self.cycle_lengths().iter().map(|l| l - 1).sum();
        transpositions.is_multiple_of(2)
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Distinct prime divisors.
pub(crate) fn primes_of(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl fmt::Display for Permutation {
    /// 1-based cycle notation, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cyc in cycles {
            write!(f, "(")?;
            for (i, p) in cyc.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(d: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(d, s).unwrap()
    }

    #[test]
    fn compose_is_left_to_right() {
        // 0-based (0,1) then (0,1,2) sends 0 -> 1 -> 2.
        let p = cyc(3, "(1,2)");
        let q = cyc(3, "(1,2,3)");
        assert_eq!(p.compose(&q), cyc(3, "(1,3)"));
    }

    #[test]
    fn identity_law() {
        let q = cyc(5, "(1,4,2)(3,5)");
        assert_eq!(Permutation::identity(5).compose(&q), q);
        assert_eq!(q.compose(&Permutation::identity(5)), q);
    }

    #[test]
    fn inverse_pair_composes_to_identity() {
        let p = cyc(3, "(1,2,3)");
        let q = cyc(3, "(1,3,2)");
        assert!(p.compose(&q).is_identity());
        assert_eq!(p.inverse(), q);
    }

    #[test]
    #[should_panic(expected = "equal degrees")]
    fn compose_degree_mismatch_panics() {
        let p = Permutation::identity(3);
        let q = Permutation::identity(4);
        let _ = p.compose(&q);
    }

    #[test]
    fn from_images_rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn parse_and_display_round_trip() {
        let p = cyc(6, "(1,2,3)(4,5)");
        assert_eq!(p.to_string(), "(1,2,3)(4,5)");
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(3), 4);
        assert_eq!(p.apply(5), 5);
    }

    #[test]
    fn order_and_parity() {
        assert_eq!(cyc(7, "(1,2,3)(4,5)").order(), 6);
        assert!(cyc(5, "(1,2,3)").is_even());
        assert!(!cyc(5, "(1,2)").is_even());
    }

    #[test]
    fn conjugation_relabels_points() {
        // x^(p^g) = (x^{g^-1})^{pg}; a 3-cycle conjugates to a 3-cycle on the
        // image points.
        let p = cyc(5, "(1,2,3)");
        let g = cyc(5, "(1,4)(2,5)");
        assert_eq!(p.conjugate_by(&g), cyc(5, "(4,5,3)"));
    }

    #[test]
    fn pow_matches_repeated_compose() {
        let p = cyc(8, "(1,2,3,4,5,6,7,8)");
        assert_eq!(p.pow(3), p.compose(&p).compose(&p));
        assert_eq!(p.pow(-1), p.inverse());
        assert!(p.pow(8).is_identity());
    }
}
