//! Permutation groups backed by a base and strong generating set.
//!
//! The stabiliser chain is built by a deterministic Schreier–Sims run: base
//! points are the smallest moved point at each level (unless a base prefix is
//! prescribed), and orbits are explored breadth-first with generators in
//! input order, so two runs over the same generators produce identical
//! chains. Everything is immutable once built, and the chain itself is
//! constructed lazily behind a `OnceLock`.

use std::sync::OnceLock;

use rand::Rng;

use crate::error::{GroupError, Result};
use crate::perm::Permutation;

/// Default cap on full element iteration.
pub const DEFAULT_ELEMENT_CAP: u64 = 10_000_000;

/// A finite permutation group given by generators, with a lazily built
/// stabiliser chain providing order, membership and element iteration.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    base_hint: Vec<u16>,
    chain: OnceLock<StabChain>,
}

#[derive(Clone)]
struct StabChain {
    levels: Vec<Level>,
    order: u64,
}

#[derive(Clone)]
struct Level {
    point: u16,
    gens: Vec<Permutation>,
    /// Orbit points in discovery order.
    orbit: Vec<u16>,
    /// For each point of the orbit, an element mapping the base point there.
    transversal: Vec<Option<Permutation>>,
    transversal_inv: Vec<Option<Permutation>>,
}

impl Level {
    fn new(degree: usize, point: u16) -> Self {
        Level {
            point,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: vec![None; degree],
            transversal_inv: vec![None; degree],
        }
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.orbit.clear();
        self.transversal = vec![None; degree];
        self.transversal_inv = vec![None; degree];
        self.orbit.push(self.point);
        self.transversal[self.point as usize] = Some(Permutation::identity(degree));
        self.transversal_inv[self.point as usize] = Some(Permutation::identity(degree));
        let mut head = 0;
        while head < self.orbit.len() {
            let delta = self.orbit[head];
            head += 1;
            let u = self.transversal[delta as usize].clone().unwrap();
            for g in &self.gens {
                let gamma = g.apply(delta);
                if self.transversal[gamma as usize].is_none() {
                    let ug = u.compose(g);
                    self.transversal_inv[gamma as usize] = Some(ug.inverse());
                    self.transversal[gamma as usize] = Some(ug);
                    self.orbit.push(gamma);
                }
            }
        }
    }
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Self {
        Self::with_base_hint(degree, gens, &[])
    }

    /// Like `new`, but the stabiliser chain will start with the given base
    /// points (used to read off point stabilisers).
    pub fn with_base_hint(degree: usize, gens: Vec<Permutation>, base: &[u16]) -> Self {
        for g in &gens {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
        }
        PermGroup {
            degree,
            gens,
            base_hint: base.to_vec(),
            chain: OnceLock::new(),
        }
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Permutation] {
        &self.gens
    }

    fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| build_chain(self.degree, &self.gens, &self.base_hint))
    }

    pub fn order(&self) -> u64 {
        self.chain().order
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn base(&self) -> Vec<u16> {
        self.chain().levels.iter().map(|l| l.point).collect()
    }

    /// Sizes of the fundamental orbits along the stabiliser chain.
    pub fn base_orbit_sizes(&self) -> Vec<usize> {
        self.chain().levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        assert_eq!(p.degree(), self.degree, "degree mismatch in membership test");
        sift(&self.chain().levels, 0, p.clone()).0.is_identity()
    }

    /// Does every generator of `h` sift into `self`?
    pub fn is_supergroup_of(&self, h: &PermGroup) -> bool {
        h.degree == self.degree && h.gens.iter().all(|g| self.contains(g))
    }

    /// Is `h` (a subgroup) normalised by every generator of `self`?
    pub fn is_normal(&self, h: &PermGroup) -> bool {
        assert_eq!(self.degree, h.degree, "degree mismatch");
        self.gens
            .iter()
            .all(|g| h.gens.iter().all(|x| h.contains(&x.conjugate_by(g))))
    }

    pub fn orbit(&self, point: u16) -> Vec<u16> {
        let mut orbit = vec![point];
        let mut seen = vec![false; self.degree];
        seen[point as usize] = true;
        let mut head = 0;
        while head < orbit.len() {
            let delta = orbit[head];
            head += 1;
            for g in &self.gens {
                let gamma = g.apply(delta);
                if !seen[gamma as usize] {
                    seen[gamma as usize] = true;
                    orbit.push(gamma);
                }
            }
        }
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        self.degree > 0 && self.orbit(0).len() == self.degree
    }

    /// The stabiliser of a point, read off a chain whose first base point is
    /// that point: the strong generators at the deeper levels generate it.
    pub fn point_stabilizer(&self, point: u16) -> PermGroup {
        assert!((point as usize) < self.degree, "point out of range");
        let rebased = PermGroup::with_base_hint(self.degree, self.gens.clone(), &[point]);
        let mut stab_gens: Vec<Permutation> = Vec::new();
        for level in rebased.chain().levels.iter().skip(1) {
            for g in &level.gens {
                if !stab_gens.contains(g) {
                    stab_gens.push(g.clone());
                }
            }
        }
        PermGroup::new(self.degree, stab_gens)
    }

    /// Streams every element exactly once, as transversal products, deepest
    /// level first. Orbit points are taken in ascending order so the walk is
    /// reproducible.
    pub fn for_each_element<F: FnMut(&Permutation)>(&self, cap: u64, mut f: F) -> Result<()> {
        let chain = self.chain();
        if chain.order > cap {
            return Err(GroupError::CapExceeded { need: chain.order, cap });
        }
        let levels = &chain.levels;
        let mut sorted_orbits: Vec<Vec<u16>> = levels
            .iter()
            .map(|l| {
                let mut o = l.orbit.clone();
                o.sort_unstable();
                o
            })
            .collect();
        sorted_orbits.reverse(); // deepest first
        let rev_levels: Vec<&Level> = levels.iter().rev().collect();
        let id = Permutation::identity(self.degree);
        rec_elements(&rev_levels, &sorted_orbits, 0, &id, &mut f);
        Ok(())
    }

    /// All elements, capped.
    pub fn elements(&self, cap: u64) -> Result<Vec<Permutation>> {
        let mut out = Vec::with_capacity(self.order().min(cap) as usize);
        self.for_each_element(cap, |p| out.push(p.clone()))?;
        Ok(out)
    }

    /// A uniformly random element: one uniform transversal pick per level.
    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Permutation {
        let chain = self.chain();
        let mut acc = Permutation::identity(self.degree);
        for level in chain.levels.iter().rev() {
            let pt = level.orbit[rng.gen_range(0..level.orbit.len())];
            acc = acc.compose(level.transversal[pt as usize].as_ref().unwrap());
        }
        acc
    }

    /// Right-coset action of the group on the cosets of `h`.
    pub fn coset_action(&self, h: &PermGroup) -> Result<CosetAction> {
        if h.degree != self.degree {
            return Err(GroupError::DegreeMismatch(self.degree, h.degree));
        }
        if !self.is_supergroup_of(h) {
            return Err(GroupError::NotSubgroup);
        }
        let index = self.order() / h.order();
        // Orbit of the base coset under right multiplication by generators.
        let mut reps: Vec<Permutation> = vec![Permutation::identity(self.degree)];
        let mut head = 0;
        while head < reps.len() {
            let r = reps[head].clone();
            head += 1;
            for g in &self.gens {
                let cand = r.compose(g);
                let known = reps.iter().any(|r2| h.contains(&cand.compose(&r2.inverse())));
                if !known {
                    reps.push(cand);
                }
            }
            if reps.len() as u64 > index {
                return Err(GroupError::NotSubgroup);
            }
        }
        if reps.len() as u64 != index {
            return Err(GroupError::NotSubgroup);
        }
        Ok(CosetAction {
            group: self.clone(),
            sub: h.clone(),
            reps,
        })
    }

    /// Core of `h` in `self`: the kernel of the coset action, computed as the
    /// elements of `h` fixing every right coset.
    pub fn core_of(&self, h: &PermGroup, cap: u64) -> Result<PermGroup> {
        let action = self.coset_action(h)?;
        action.kernel(cap)
    }

    /// Second route to the core, sharing nothing with the coset action:
    /// iteratively discard the elements of `h` whose conjugate under some
    /// generator of `self` escapes the surviving set. The fixpoint is closed
    /// under the generators' conjugation, hence normal in the group, and
    /// contains every normal subgroup of the group inside `h`.
    pub fn core_by_fixpoint(&self, h: &PermGroup, cap: u64) -> Result<PermGroup> {
        if !self.is_supergroup_of(h) {
            return Err(GroupError::NotSubgroup);
        }
        let mut survivors = h.elements(cap)?;
        survivors.sort_unstable();
        loop {
            let keep: Vec<Permutation> = survivors
                .iter()
                .filter(|k| {
                    self.gens()
                        .iter()
                        .all(|g| survivors.binary_search(&k.conjugate_by(g)).is_ok())
                })
                .cloned()
                .collect();
            if keep.len() == survivors.len() {
                break;
            }
            survivors = keep;
        }
        Ok(PermGroup::closure_of_elements(self.degree, &survivors))
    }

    /// All elements of `self` normalising `h`, by exhaustive scan.
    pub fn brute_normalizer(&self, h: &PermGroup, cap: u64) -> Result<PermGroup> {
        if !self.is_supergroup_of(h) {
            return Err(GroupError::NotSubgroup);
        }
        let mut collected = PermGroup::new(self.degree, h.gens.to_vec());
        self.for_each_element(cap, |g| {
            if !collected.contains(g)
                && h.gens.iter().all(|x| h.contains(&x.conjugate_by(g)))
            {
                let mut gens = collected.gens.clone();
                gens.push(g.clone());
                collected = PermGroup::new(self.degree, gens);
            }
        })?;
        Ok(collected)
    }

    /// All elements of `self` commuting with every permutation in `set`.
    pub fn brute_centralizer(&self, set: &[Permutation], cap: u64) -> Result<PermGroup> {
        let mut collected = PermGroup::trivial(self.degree);
        self.for_each_element(cap, |g| {
            if !collected.contains(g)
                && set.iter().all(|s| g.compose(s) == s.compose(g))
            {
                let mut gens = collected.gens.clone();
                gens.push(g.clone());
                collected = PermGroup::new(self.degree, gens);
            }
        })?;
        Ok(collected)
    }

    /// The normal closure of a set of elements: close under conjugation by
    /// the group's generators.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> PermGroup {
        let mut closure = PermGroup::closure_of_elements(self.degree, seeds);
        let mut queue: Vec<Permutation> = closure.gens().to_vec();
        while let Some(x) = queue.pop() {
            for g in &self.gens {
                let y = x.conjugate_by(g);
                if !closure.contains(&y) {
                    let mut gens = closure.gens().to_vec();
                    gens.push(y.clone());
                    closure = PermGroup::new(self.degree, gens);
                    queue.push(y);
                }
            }
        }
        closure
    }

    /// Extends a group by extra elements, keeping only those not already
    /// generated. Used to turn large element sets into small generator sets.
    pub fn closure_of_elements(degree: usize, elements: &[Permutation]) -> PermGroup {
        let mut group = PermGroup::trivial(degree);
        for e in elements {
            if !group.contains(e) {
                let mut gens = group.gens.clone();
                gens.push(e.clone());
                group = PermGroup::new(degree, gens);
            }
        }
        group
    }

    /// Same group comparison (mutual containment).
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && self.is_supergroup_of(other)
    }
}

fn rec_elements<F: FnMut(&Permutation)>(
    levels: &[&Level],
    orbits: &[Vec<u16>],
    depth: usize,
    acc: &Permutation,
    f: &mut F,
) {
    if depth == levels.len() {
        f(acc);
        return;
    }
    for &pt in &orbits[depth] {
        let u = levels[depth].transversal[pt as usize].as_ref().unwrap();
        let next = acc.compose(u);
        rec_elements(levels, orbits, depth + 1, &next, f);
    }
}

/// Sifts `g` through the chain starting at `level`; returns the residue and
/// the level at which sifting stopped.
fn sift(levels: &[Level], level: usize, mut g: Permutation) -> (Permutation, usize) {
    for (i, lvl) in levels.iter().enumerate().skip(level) {
        let delta = g.apply(lvl.point);
        match &lvl.transversal_inv[delta as usize] {
            None => return (g, i),
            Some(uinv) => g = g.compose(uinv),
        }
    }
    (g, levels.len())
}

fn build_chain(degree: usize, gens: &[Permutation], base_hint: &[u16]) -> StabChain {
    let mut levels: Vec<Level> = Vec::new();
    let live: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
    if live.is_empty() && base_hint.is_empty() {
        return StabChain { levels, order: 1 };
    }
    let first_point = base_hint.first().copied().unwrap_or_else(|| {
        live.iter()
            .filter_map(|g| g.smallest_moved_point())
            .min()
            .unwrap_or(0)
    });
    let mut level0 = Level::new(degree, first_point);
    level0.gens = live;
    levels.push(level0);
    complete_level(&mut levels, 0, degree, base_hint);
    let order = levels.iter().map(|l| l.orbit.len() as u64).product();
    StabChain { levels, order }
}

/// Deterministic Schreier-Sims: after this returns, every Schreier generator
/// of `level` sifts to the identity through the deeper levels.
fn complete_level(levels: &mut Vec<Level>, level: usize, degree: usize, base_hint: &[u16]) {
    levels[level].rebuild_orbit(degree);
    let mut idx = 0;
    loop {
        // The orbit and generator list at this level are fixed while we work:
        // additions only happen at deeper levels.
        let n_pairs = levels[level].orbit.len() * levels[level].gens.len();
        if idx >= n_pairs {
            break;
        }
        let oi = idx / levels[level].gens.len();
        let gi = idx % levels[level].gens.len();
        idx += 1;
        let delta = levels[level].orbit[oi];
        let schreier = {
            let lvl = &levels[level];
            let u = lvl.transversal[delta as usize].as_ref().unwrap();
            let s = &lvl.gens[gi];
            let gamma = s.apply(delta);
            let uinv = lvl.transversal_inv[gamma as usize].as_ref().unwrap();
            u.compose(s).compose(uinv)
        };
        if schreier.is_identity() {
            continue;
        }
        let (residue, stop) = sift(&levels[level + 1..], 0, schreier);
        let stop = stop + level + 1;
        if residue.is_identity() {
            continue;
        }
        if stop == levels.len() {
            let point = base_hint
                .get(stop)
                .copied()
                .unwrap_or_else(|| residue.smallest_moved_point().unwrap());
            levels.push(Level::new(degree, point));
        }
        for lvl in levels[level + 1..=stop].iter_mut() {
            lvl.gens.push(residue.clone());
        }
        for l in ((level + 1)..=stop).rev() {
            complete_level(levels, l, degree, base_hint);
        }
    }
}

/// The right-coset action of a group on the cosets of a subgroup.
///
/// Cosets are labelled by the index of their representative in `reps`
/// (representative 0 is the subgroup itself, discovered breadth-first).
pub struct CosetAction {
    pub group: PermGroup,
    pub sub: PermGroup,
    pub reps: Vec<Permutation>,
}

impl CosetAction {
    pub fn index(&self) -> usize {
        self.reps.len()
    }

    /// Label of the coset `H*g`.
    pub fn label_of(&self, g: &Permutation) -> Result<usize> {
        for (i, r) in self.reps.iter().enumerate() {
            if self.sub.contains(&g.compose(&r.inverse())) {
                return Ok(i);
            }
        }
        Err(GroupError::NotInGroup)
    }

    /// The permutation of coset labels induced by `g`.
    pub fn permutation_of(&self, g: &Permutation) -> Result<Permutation> {
        let mut images = Vec::with_capacity(self.reps.len());
        for r in &self.reps {
            images.push(self.label_of(&r.compose(g))? as u16);
        }
        Permutation::from_images(images)
    }

    /// Kernel of the action. The kernel fixes the base coset, hence lies in
    /// the subgroup, so a scan over the subgroup's elements suffices: `h` is
    /// in the kernel iff `r*h*r^-1` stays in the subgroup for every coset
    /// representative `r`.
    pub fn kernel(&self, cap: u64) -> Result<PermGroup> {
        let mut kernel_elts = Vec::new();
        self.sub.for_each_element(cap, |h| {
            let fixes_all = self
                .reps
                .iter()
                .all(|r| self.sub.contains(&r.compose(h).compose(&r.inverse())));
            if fixes_all {
                kernel_elts.push(h.clone());
            }
        })?;
        Ok(PermGroup::closure_of_elements(self.group.degree(), &kernel_elts))
    }

    /// Is the action faithful (trivial kernel)?
    pub fn is_faithful(&self, cap: u64) -> Result<bool> {
        Ok(self.kernel(cap)?.is_trivial())
    }
}
