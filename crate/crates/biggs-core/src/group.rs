//! Exact group-theoretic certification via a base and strong generating set:
//! order, membership, transitivity degree, and recognition of alternating,
//! symmetric, and dihedral groups by exact order comparison.
//!
//! The Schreier–Sims construction is deterministic: base points are always the
//! smallest point moved by the current level's generators, and transversals
//! store explicit permutations together with their inverses.
//!
//! Two observations keep the construction fast at symmetric-group scale.
//! First, the transversal-size product of any chain built here is a certified
//! lower bound on the group order (every stored generator lies in the group
//! generated by the level above and fixes the base points above its level),
//! so once the product reaches `N!` — or `N!/2` when every input generator is
//! even, which confines the group to the alternating group — the chain is
//! provably complete and Schreier verification can stop; reaching the exact
//! order also makes sifting a complete membership test. Second, before full
//! verification, a pump pass walks each level's Schreier generators lazily,
//! chasing only the next base point through the three factors, and
//! materializes exactly those that extend the next level's orbit. For chains
//! that do not certify early, the classical deepest-level-first verification
//! runs to completion.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Degrees above this would make explicit transversal permutations too large.
pub const MAX_BSGS_DEGREE: usize = 5000;

const NONE: u32 = u32::MAX;

struct Level {
    point: u32,
    gens: Vec<Permutation>,
    orbit: Vec<u32>,
    transversal: Vec<Option<Permutation>>,
    transversal_inv: Vec<Option<Permutation>>,
    /// Orbit tree: the (point, generator index) pair that discovered each
    /// orbit point. Schreier generators of tree edges are trivial and skipped.
    tree_from: Vec<u32>,
    tree_gen: Vec<u32>,
    /// Verified rectangle: all pairs (orbit index < done_orbit, gen index <
    /// done_gens) have sifted to the identity.
    done_orbit: usize,
    done_gens: usize,
    /// Pump rectangle: pairs already walked by the pre-verification pass.
    pumped_orbit: usize,
    pumped_gens: usize,
}

impl Level {
    fn new(point: u32, degree: usize) -> Level {
        let mut level = Level {
            point,
            gens: Vec::new(),
            orbit: vec![point],
            transversal: vec![None; degree],
            transversal_inv: vec![None; degree],
            tree_from: vec![NONE; degree],
            tree_gen: vec![NONE; degree],
            done_orbit: 0,
            done_gens: 0,
            pumped_orbit: 0,
            pumped_gens: 0,
        };
        level.transversal[point as usize] = Some(Permutation::identity(degree));
        level.transversal_inv[point as usize] = Some(Permutation::identity(degree));
        level
    }

    fn discover(&mut self, p: u32, gi: usize) {
        let q = self.gens[gi].image(p);
        if self.transversal[q as usize].is_none() {
            let t = self.transversal[p as usize]
                .as_ref()
                .expect("orbit point has a representative")
                .compose(&self.gens[gi]);
            self.transversal_inv[q as usize] = Some(t.inverse());
            self.transversal[q as usize] = Some(t);
            self.tree_from[q as usize] = p;
            self.tree_gen[q as usize] = gi as u32;
            self.orbit.push(q);
        }
    }

    /// Add one generator and extend the orbit incrementally.
    fn add_gen(&mut self, g: Permutation) {
        self.gens.push(g);
        let gi = self.gens.len() - 1;
        let pre = self.orbit.len();
        for i in 0..pre {
            let p = self.orbit[i];
            self.discover(p, gi);
        }
        let mut i = pre;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            for gj in 0..self.gens.len() {
                self.discover(p, gj);
            }
            i += 1;
        }
    }
}

/// Base points, strong generators, and explicit transversals: a stabilizer
/// chain giving exact order and membership. Immutable once built.
pub struct Bsgs {
    degree: usize,
    levels: Vec<Level>,
    is_base: Vec<bool>,
}

/// Termination targets: `N!` always bounds the order from above; when every
/// input generator is even the group lies in the alternating group and `N!/2`
/// bounds it instead.
struct OrderTarget {
    bound: BigUint,
    log2_bound: f64,
}

impl OrderTarget {
    fn new(degree: usize, generators: &[Permutation]) -> OrderTarget {
        let all_even = generators.iter().all(|g| g.sign() == 1);
        let mut bound = (1..=degree as u64).fold(BigUint::one(), |acc, k| acc * BigUint::from(k));
        let mut log2_bound: f64 = (1..=degree as u64).map(|k| (k as f64).log2()).sum();
        if all_even && degree >= 2 {
            bound /= BigUint::from(2u32);
            log2_bound -= 1.0;
        }
        OrderTarget { bound, log2_bound }
    }
}

/// Deterministic Schreier–Sims over the given generators.
pub fn schreier_sims(generators: &[Permutation]) -> Result<Bsgs> {
    if generators.is_empty() {
        return Err(Error::Parameter("need at least one generator".into()));
    }
    let degree = generators[0].degree();
    for g in generators {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
    }
    if degree > MAX_BSGS_DEGREE {
        return Err(Error::Capacity(format!(
            "degree {degree} exceeds stabilizer-chain limit {MAX_BSGS_DEGREE}"
        )));
    }

    let mut bsgs = Bsgs {
        degree,
        levels: Vec::new(),
        is_base: vec![false; degree],
    };

    // Seed: each generator joins every level whose base point it fixes, plus
    // the first level whose base point it moves (creating base points as
    // needed so that no nontrivial generator fixes the whole base).
    for g in generators {
        if g.is_identity() || bsgs.levels.iter().any(|l| l.gens.contains(g)) {
            continue;
        }
        let mut l = 0;
        loop {
            if l == bsgs.levels.len() {
                let b = smallest_moved(g).expect("nontrivial");
                bsgs.is_base[b as usize] = true;
                bsgs.levels.push(Level::new(b, degree));
            }
            bsgs.levels[l].add_gen(g.clone());
            if g.image(bsgs.levels[l].point) != bsgs.levels[l].point {
                break;
            }
            l += 1;
        }
    }

    let target = OrderTarget::new(degree, generators);
    if !bsgs.certified(&target) && !bsgs.pump(&target) {
        bsgs.complete(&target);
    }
    Ok(bsgs)
}

fn smallest_moved(g: &Permutation) -> Option<u32> {
    (0..g.degree() as u32).find(|&v| g.image(v) != v)
}

impl Bsgs {
    fn log2_product(&self) -> f64 {
        self.levels
            .iter()
            .map(|l| (l.orbit.len() as f64).log2())
            .sum()
    }

    /// True iff the transversal-size product has provably reached the group
    /// order, which makes the chain a complete strong generating set.
    fn certified(&self, target: &OrderTarget) -> bool {
        (self.log2_product() - target.log2_bound).abs() < 0.25 && self.order() == target.bound
    }

    /// Pre-verification sweeps: for each Schreier generator, look one level
    /// down and materialize it only when it visibly extends the next level's
    /// orbit (or must start a new level). Everything skipped here is caught by
    /// full verification; pumping exists so that the order certificate usually
    /// fires before any sifting happens. Returns true when it fired.
    fn pump(&mut self, target: &OrderTarget) -> bool {
        loop {
            let mut inserted = false;
            let mut l = 0;
            while l < self.levels.len() {
                let orbit_len = self.levels[l].orbit.len();
                let gens_len = self.levels[l].gens.len();
                let (done_o, done_g) =
                    (self.levels[l].pumped_orbit, self.levels[l].pumped_gens);
                for oi in 0..orbit_len {
                    for gi in 0..gens_len {
                        if oi < done_o && gi < done_g {
                            continue;
                        }
                        let level = &self.levels[l];
                        let p = level.orbit[oi];
                        let q = level.gens[gi].image(p);
                        if level.tree_from[q as usize] == p
                            && level.tree_gen[q as usize] == gi as u32
                        {
                            continue;
                        }
                        if let Some((residue, stuck)) = self.pump_walk_direct(l, p, gi, q) {
                            if stuck == self.levels.len() {
                                let b = smallest_moved(&residue).expect("nontrivial");
                                self.is_base[b as usize] = true;
                                self.levels.push(Level::new(b, self.degree));
                            }
                            for m in (l + 1)..=stuck {
                                self.levels[m].add_gen(residue.clone());
                            }
                            inserted = true;
                            if self.certified(target) {
                                return true;
                            }
                        }
                    }
                }
                let level = &mut self.levels[l];
                level.pumped_orbit = orbit_len;
                level.pumped_gens = gens_len;
                l += 1;
            }
            if !inserted {
                return false;
            }
        }
    }

    /// Direct tier: look one level down only. Materializes when the Schreier
    /// generator extends the next orbit or the chain ends here.
    fn pump_walk_direct(
        &self,
        from: usize,
        p: u32,
        gi: usize,
        q: u32,
    ) -> Option<(Permutation, usize)> {
        let level = &self.levels[from];
        if from + 1 < self.levels.len() {
            let b = self.levels[from + 1].point;
            let c = level.transversal_inv[q as usize]
                .as_ref()
                .expect("orbit point")
                .image(level.gens[gi].image(
                    level.transversal[p as usize]
                        .as_ref()
                        .expect("orbit point")
                        .image(b),
                ));
            if self.levels[from + 1].transversal[c as usize].is_some() {
                return None;
            }
            Some((schreier_generator(level, p, gi, q), from + 1))
        } else {
            let s = schreier_generator(level, p, gi, q);
            if s.is_identity() {
                None
            } else {
                Some((s, from + 1))
            }
        }
    }


    /// Full Schreier verification, shallowest level first. A pair whose
    /// Schreier generator does not sift to the identity inserts its residue as
    /// a strong generator (Holt's range: every level from just below the
    /// source down to where sifting stuck) and is re-sifted until clean, so
    /// defects sourced near the top of the chain are repaired before the deep
    /// levels are ever swept. Stops as soon as the order certificate fires.
    fn complete(&mut self, target: &OrderTarget) {
        let mut l = 0;
        while l < self.levels.len() {
            if self.verify_level_to_clean(l, target) {
                return;
            }
            l += 1;
        }
    }

    /// Verify one level completely. Returns true when the order certificate
    /// fired mid-way (the chain is then provably complete).
    fn verify_level_to_clean(&mut self, li: usize, target: &OrderTarget) -> bool {
        let mut scratch = SiftScratch::new(self.degree);
        // Inserts only touch deeper levels, so this level's orbit and
        // generator list are stable here.
        let orbit_len = self.levels[li].orbit.len();
        let gens_len = self.levels[li].gens.len();
        let (done_o, done_g) = (self.levels[li].done_orbit, self.levels[li].done_gens);
        for oi in 0..orbit_len {
            for gi in 0..gens_len {
                if oi < done_o && gi < done_g {
                    continue;
                }
                loop {
                    let level = &self.levels[li];
                    let p = level.orbit[oi];
                    let q = level.gens[gi].image(p);
                    // Tree edges give trivially-identity Schreier generators.
                    if level.tree_from[q as usize] == p
                        && level.tree_gen[q as usize] == gi as u32
                    {
                        break;
                    }
                    let schreier = schreier_generator(level, p, gi, q);
                    let Some((residue, stuck)) =
                        self.sift_internal(li + 1, schreier, &mut scratch)
                    else {
                        break;
                    };
                    if stuck == self.levels.len() {
                        let b = smallest_moved(&residue).expect("nontrivial residue");
                        self.is_base[b as usize] = true;
                        self.levels.push(Level::new(b, self.degree));
                    }
                    for m in (li + 1)..=stuck {
                        self.levels[m].add_gen(residue.clone());
                    }
                    if self.certified(target) {
                        return true;
                    }
                }
            }
        }
        let level = &mut self.levels[li];
        level.done_orbit = orbit_len;
        level.done_gens = gens_len;
        false
    }

    /// Sift from `start` downward. Returns `None` when the residue reaches the
    /// identity, otherwise the residue and the level index where it stuck
    /// (`levels.len()` when it survives the whole chain). Levels whose base
    /// point the residue already fixes are skipped without composing.
    fn sift_internal(
        &self,
        start: usize,
        h: Permutation,
        scratch: &mut SiftScratch,
    ) -> Option<(Permutation, usize)> {
        if h.is_identity() {
            return None;
        }
        scratch.load(&h);
        for l in start..self.levels.len() {
            let level = &self.levels[l];
            let p = scratch.image(level.point);
            if p == level.point {
                continue;
            }
            let tinv = match level.transversal_inv[p as usize].as_ref() {
                None => return Some((scratch.to_permutation(), l)),
                Some(t) => t,
            };
            if scratch.apply_right(tinv) == 0 {
                return None;
            }
        }
        Some((scratch.to_permutation(), self.levels.len()))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Exact group order: the product of the transversal sizes.
    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Strong generators fixing the first `i` base points (level-`i` view of
    /// the stabilizer chain).
    pub fn stabilizer_gens(&self, i: usize) -> &[Permutation] {
        &self.levels[i].gens
    }

    pub fn chain_length(&self) -> usize {
        self.levels.len()
    }

    /// Membership test by sifting: true iff the residue is the identity.
    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, p.degree()));
        }
        let mut scratch = SiftScratch::new(self.degree);
        Ok(self.sift_internal(0, p.clone(), &mut scratch).is_none())
    }

    /// Public sift: the residue after subtracting transversal representatives
    /// and the level where it stuck (chain length when fully sifted; the
    /// residue is then the identity iff `p` is a member).
    pub fn sift(&self, p: &Permutation) -> Result<(Permutation, usize)> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, p.degree()));
        }
        let mut scratch = SiftScratch::new(self.degree);
        match self.sift_internal(0, p.clone(), &mut scratch) {
            None => Ok((Permutation::identity(self.degree), self.levels.len())),
            Some((h, l)) => Ok((h, l)),
        }
    }
}

/// Double-buffered image arrays so sifting never allocates per level.
struct SiftScratch {
    cur: Vec<u32>,
    next: Vec<u32>,
}

impl SiftScratch {
    fn new(degree: usize) -> SiftScratch {
        SiftScratch {
            cur: vec![0; degree],
            next: vec![0; degree],
        }
    }

    fn load(&mut self, p: &Permutation) {
        self.cur.copy_from_slice(p.images());
    }

    #[inline]
    fn image(&self, v: u32) -> u32 {
        self.cur[v as usize]
    }

    /// Replace the current residue by `residue * t`, returning the number of
    /// moved points afterwards.
    fn apply_right(&mut self, t: &Permutation) -> usize {
        let mut moved = 0;
        for (v, out) in self.next.iter_mut().enumerate() {
            let img = t.image(self.cur[v]);
            *out = img;
            moved += usize::from(img != v as u32);
        }
        std::mem::swap(&mut self.cur, &mut self.next);
        moved
    }

    fn to_permutation(&self) -> Permutation {
        Permutation::from_images_unchecked(self.cur.clone())
    }
}

fn schreier_generator(level: &Level, p: u32, gi: usize, q: u32) -> Permutation {
    // u_p * g * u_q^{-1}, fused into one pass.
    let t_p = level.transversal[p as usize].as_ref().expect("orbit point");
    let t_q_inv = level.transversal_inv[q as usize]
        .as_ref()
        .expect("orbit point");
    let g = &level.gens[gi];
    let images: Vec<u32> = t_p
        .images()
        .iter()
        .map(|&v| t_q_inv.image(g.image(v)))
        .collect();
    Permutation::from_images_unchecked(images)
}

/// Transitivity degree flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Transitivity {
    Intransitive,
    Transitive,
    TwoTransitive,
    SharplyTwoTransitive,
}

/// Isomorphism-type verdict from exact order comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GroupType {
    Alternating,
    Symmetric,
    Dihedral,
    Other,
}

#[derive(Debug, Clone)]
pub struct GroupVerdict {
    pub order: BigUint,
    pub group_type: GroupType,
    pub transitivity: Transitivity,
}

/// Transitivity profile of the group behind `bsgs`:
/// transitive iff the first orbit is everything; 2-transitive iff the
/// point stabilizer (the level-1 strong generators) has a single orbit on the
/// remaining points; sharply 2-transitive iff additionally `|G| = N(N-1)`.
pub fn transitivity_profile(bsgs: &Bsgs) -> Transitivity {
    let n = bsgs.degree();
    assert!(n >= 3, "transitivity profile needs degree at least 3");
    if bsgs.chain_length() == 0 || bsgs.orbit_sizes()[0] != n {
        return Transitivity::Intransitive;
    }
    let stab_gens = if bsgs.chain_length() > 1 {
        bsgs.stabilizer_gens(1)
    } else {
        &[]
    };
    let b0 = bsgs.base()[0];
    if orbit_count_excluding(stab_gens, n, b0) != 1 {
        return Transitivity::Transitive;
    }
    let sharp = bsgs.order() == BigUint::from(n) * BigUint::from(n - 1);
    if sharp {
        Transitivity::SharplyTwoTransitive
    } else {
        Transitivity::TwoTransitive
    }
}

fn orbit_count_excluding(gens: &[Permutation], degree: usize, excluded: u32) -> usize {
    if degree <= 1 {
        return 0;
    }
    let mut seen = vec![false; degree];
    seen[excluded as usize] = true;
    let mut count = 0;
    let mut stack = Vec::new();
    for start in 0..degree as u32 {
        if seen[start as usize] {
            continue;
        }
        count += 1;
        seen[start as usize] = true;
        stack.push(start);
        while let Some(v) = stack.pop() {
            for g in gens {
                let u = g.image(v);
                if !seen[u as usize] {
                    seen[u as usize] = true;
                    stack.push(u);
                }
            }
        }
    }
    count
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Recognize the group by exact order comparison: symmetric iff `|G| = N!`,
/// alternating iff `|G| = N!/2` with every generator even, dihedral iff
/// `|G| = 2N` with `N` odd and the two generators presenting a dihedral pair.
pub fn classify_alt_sym(bsgs: &Bsgs, generators: &[Permutation]) -> GroupVerdict {
    let n = bsgs.degree();
    let order = bsgs.order();
    let transitivity = transitivity_profile(bsgs);
    let nf = factorial(n);
    let group_type = if order == nf {
        GroupType::Symmetric
    } else if BigUint::from(2u32) * &order == nf
        && generators.iter().all(|g| g.sign() == 1)
    {
        GroupType::Alternating
    } else if is_dihedral(&order, n, generators) {
        GroupType::Dihedral
    } else {
        GroupType::Other
    };
    GroupVerdict {
        order,
        group_type,
        transitivity,
    }
}

fn is_dihedral(order: &BigUint, n: usize, generators: &[Permutation]) -> bool {
    if n % 2 == 0 || *order != BigUint::from(2 * n) || generators.len() != 2 {
        return false;
    }
    let involutions = generators
        .iter()
        .all(|g| !g.is_identity() && g.compose(g).is_identity());
    involutions && generators[0].compose(&generators[1]).order() == BigUint::from(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::generators;
    use crate::tree::ColoredTree;
    use crate::word::{palindrome_words, rainbow_word, relator_2n};

    fn group_of(c: u32, r: u32) -> (ColoredTree, Vec<Permutation>, Bsgs) {
        let t = ColoredTree::build(c, r).unwrap();
        let gens = generators(&t);
        let bsgs = schreier_sims(&gens).unwrap();
        (t, gens, bsgs)
    }

    #[test]
    fn orders_of_small_groups() {
        let (_, _, b) = group_of(3, 1);
        assert_eq!(b.order(), BigUint::from(24u32));

        let (_, _, b) = group_of(2, 4);
        assert_eq!(b.order(), BigUint::from(18u32));

        let (_, _, b) = group_of(3, 2);
        assert_eq!(b.order(), BigUint::from(3628800u32));
    }

    #[test]
    fn base_starts_at_root() {
        let (_, _, b) = group_of(3, 2);
        assert_eq!(b.base()[0], 0);
    }

    #[test]
    fn membership_examples() {
        let (t, _, b) = group_of(3, 2);
        for w in palindrome_words(&t) {
            assert!(b.contains(&w.evaluate(&t)).unwrap());
        }

        let (_, _, b31) = group_of(3, 1);
        let four_cycle = Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap();
        assert!(b31.contains(&four_cycle).unwrap());

        // The dihedral group of order 10 contains exactly one cyclic subgroup
        // of order 5: the powers of the rotation.
        let (t22, gens22, b22) = group_of(2, 2);
        let rot = gens22[0].compose(&gens22[1]);
        assert!(b22.contains(&rot).unwrap());
        let other_five_cycle = Permutation::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap();
        let mut is_power = false;
        for k in 0..5u64 {
            is_power |= rot.pow(k) == other_five_cycle;
        }
        assert!(!is_power);
        assert!(!b22.contains(&other_five_cycle).unwrap());
        let _ = t22;

        let bad_degree = Permutation::identity(7);
        assert!(b.contains(&bad_degree).is_err());
        let _ = t;
    }

    #[test]
    fn relator_sifts_to_identity() {
        let (t, _, b) = group_of(3, 2);
        let rel = relator_2n(3, 2).unwrap().evaluate(&t);
        let (residue, _) = b.sift(&rel).unwrap();
        assert!(residue.is_identity());
    }

    #[test]
    fn transitivity_examples() {
        let (_, _, b) = group_of(3, 2);
        assert_eq!(transitivity_profile(&b), Transitivity::TwoTransitive);

        let (_, _, b) = group_of(2, 2);
        assert_eq!(transitivity_profile(&b), Transitivity::Transitive);

        let (_, _, b) = group_of(2, 1);
        assert_eq!(
            transitivity_profile(&b),
            Transitivity::SharplyTwoTransitive
        );
    }

    #[test]
    fn classification_examples() {
        let (_, g, b) = group_of(3, 2);
        assert_eq!(classify_alt_sym(&b, &g).group_type, GroupType::Symmetric);

        let (_, g, b) = group_of(4, 2);
        let v = classify_alt_sym(&b, &g);
        assert_eq!(v.group_type, GroupType::Alternating);
        assert_eq!(v.order, factorial(17) / BigUint::from(2u32));

        let (_, g, b) = group_of(2, 3);
        let v = classify_alt_sym(&b, &g);
        assert_eq!(v.group_type, GroupType::Dihedral);
        assert_eq!(v.order, BigUint::from(14u32));
    }

    #[test]
    fn order_divides_factorial_and_is_multiple_of_generator_orders() {
        use num_integer::Integer;
        let (t, gens, b) = group_of(4, 2);
        let order = b.order();
        assert!(factorial(17).is_multiple_of(&order));
        for g in &gens {
            assert!(order.is_multiple_of(&g.order()));
        }
        let rainbow = rainbow_word(4).evaluate(&t);
        assert!(order.is_multiple_of(&rainbow.order()));
        assert_eq!(rainbow.order(), BigUint::from(17u32));
    }

    #[test]
    fn random_products_are_members_and_odd_perms_are_not() {
        let (_, gens, b) = group_of(4, 2);
        let mut p = Permutation::identity(17);
        let mut state = 1u64;
        for _ in 0..100 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            p = p.compose(&gens[(state >> 33) as usize % gens.len()]);
            assert!(b.contains(&p).unwrap());
        }
        // An odd permutation must lie outside the alternating group.
        let transposition = Permutation::from_cycles(17, &[vec![0, 1]]).unwrap();
        assert!(!b.contains(&transposition).unwrap());
    }

    #[test]
    fn star_transpositions_generate_symmetric_group() {
        // Generators (0 i) for i = 1..6 on 7 points.
        let gens: Vec<Permutation> = (1..7u32)
            .map(|i| Permutation::from_cycles(7, &[vec![0, i]]).unwrap())
            .collect();
        let b = schreier_sims(&gens).unwrap();
        assert_eq!(b.order(), factorial(7));
    }

    #[test]
    fn intransitive_and_odd_order_groups() {
        // <(0 1 2), (3 4)> has order 6 but is intransitive on 5 points.
        let a = Permutation::from_cycles(5, &[vec![0, 1, 2]]).unwrap();
        let b = Permutation::from_cycles(5, &[vec![3, 4]]).unwrap();
        let chain = schreier_sims(&[a.clone(), b.clone()]).unwrap();
        assert_eq!(chain.order(), BigUint::from(6u32));
        assert_eq!(transitivity_profile(&chain), Transitivity::Intransitive);
        assert!(chain.contains(&a.compose(&b)).unwrap());
        assert!(!chain
            .contains(&Permutation::from_cycles(5, &[vec![0, 3]]).unwrap())
            .unwrap());

        // A 7-cycle: cyclic of order 7, transitive, not 2-transitive.
        let c7 = Permutation::from_cycles(7, &[vec![0, 1, 2, 3, 4, 5, 6]]).unwrap();
        let chain = schreier_sims(&[c7]).unwrap();
        assert_eq!(chain.order(), BigUint::from(7u32));
        assert_eq!(transitivity_profile(&chain), Transitivity::Transitive);
    }

    #[test]
    fn trivial_and_error_cases() {
        assert!(schreier_sims(&[]).is_err());
        let b = schreier_sims(&[Permutation::identity(5)]).unwrap();
        assert_eq!(b.order(), BigUint::one());
        assert!(!b.contains(&Permutation::from_cycles(5, &[vec![0, 1]]).unwrap()).unwrap());
        let mismatched = vec![Permutation::identity(3), Permutation::identity(4)];
        assert!(schreier_sims(&mismatched).is_err());
    }
}
