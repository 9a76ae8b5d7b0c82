//! Generated permutation groups with exact order and membership queries.
//!
//! The workhorse is a deterministic Schreier–Sims stabilizer chain with
//! first-moved-point base selection and Schreier-vector transversals, so
//! memory stays linear in the orbit sizes. Groups built via [`PermGroup::symmetric`]
//! skip the chain: order, membership and transitivity of the full symmetric
//! group are definitional.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use rand::Rng;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// n! as an exact integer.
pub fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for k in 2..=n {
        acc *= BigUint::from(k);
    }
    acc
}

/// A finite permutation group given by generators.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    backend: Backend,
}

#[derive(Clone, Debug)]
enum Backend {
    /// Stabilizer chain over the listed generators.
    Chain(StabChain),
    /// The full symmetric group on the domain.
    FullSymmetric,
}

impl PermGroup {
    /// Group generated by `generators` on `degree` points.
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<PermGroup> {
        if degree == 0 {
            return Err(Error::EmptyDomain);
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let chain = StabChain::build(degree, &generators);
        Ok(PermGroup {
            degree,
            generators,
            backend: Backend::Chain(chain),
        })
    }

    /// The trivial group on `degree` points.
    pub fn trivial(degree: usize) -> Result<PermGroup> {
        PermGroup::new(degree, Vec::new())
    }

    /// Sym(n), generated by `(0 1)` and the full n-cycle.
    pub fn symmetric(n: usize) -> Result<PermGroup> {
        if n == 0 {
            return Err(Error::EmptyDomain);
        }
        let generators = match n {
            1 => Vec::new(),
            2 => vec![Perm::transposition(2, 0, 1)?],
            _ => vec![Perm::transposition(n, 0, 1)?, Perm::full_cycle(n)],
        };
        Ok(PermGroup {
            degree: n,
            generators,
            backend: Backend::FullSymmetric,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Exact group order.
    pub fn order(&self) -> BigUint {
        match &self.backend {
            Backend::Chain(chain) => chain.order(),
            Backend::FullSymmetric => factorial(self.degree),
        }
    }

    pub fn order_u64(&self) -> Option<u64> {
        u64::try_from(self.order()).ok()
    }

    /// Membership test via sifting.
    pub fn contains(&self, g: &Perm) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: g.degree(),
            });
        }
        Ok(match &self.backend {
            Backend::Chain(chain) => chain.contains(g),
            Backend::FullSymmetric => true,
        })
    }

    /// Orbit of a point under the generators, sorted.
    pub fn orbit(&self, start: usize) -> Vec<usize> {
        let mut seen = BTreeSet::new();
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(p) = queue.pop_front() {
            for g in &self.generators {
                let q = g.apply(p);
                if seen.insert(q) {
                    queue.push_back(q);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// True iff the orbit of point 0 is the whole domain.
    pub fn is_transitive(&self) -> bool {
        match &self.backend {
            Backend::FullSymmetric => true,
            Backend::Chain(_) => self.orbit(0).len() == self.degree,
        }
    }

    /// True iff this is the full symmetric group on its domain.
    pub fn is_symmetric(&self) -> bool {
        match &self.backend {
            Backend::FullSymmetric => true,
            Backend::Chain(_) => self.order() == factorial(self.degree),
        }
    }

    /// Same group: equal degree and order, and every generator of `self`
    /// is a member of `other`.
    pub fn equals(&self, other: &PermGroup) -> Result<bool> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        if self.order() != other.order() {
            return Ok(false);
        }
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All elements by breadth-first closure, sorted. Refuses to run once
    /// the closure exceeds `cap`.
    pub fn elements(&self, cap: u64) -> Result<Vec<Perm>> {
        naive_closure(self.degree, &self.generators, cap)
    }

    /// Uniformly random element, drawn through the stabilizer chain
    /// (a product of one uniformly chosen coset representative per layer).
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Perm {
        match &self.backend {
            Backend::FullSymmetric => {
                let mut images: Vec<usize> = (0..self.degree).collect();
                // Fisher-Yates
                for i in (1..self.degree).rev() {
                    let j = rng.random_range(0..=i);
                    images.swap(i, j);
                }
                Perm::from_images(&images).expect("shuffle is a bijection")
            }
            Backend::Chain(chain) => chain.random_element(self.degree, rng),
        }
    }

    /// Smallest k ≤ `max_k` for which a generating k-tuple is found.
    ///
    /// Exact for tiny groups (exhaustive tuple enumeration) and whenever the
    /// found k meets the structural lower bound max(2, rank of the largest
    /// elementary-abelian C₂ quotient); otherwise the answer is an upper
    /// bound found by seeded random search and is flagged as such.
    pub fn min_generators<R: Rng + ?Sized>(
        &self,
        max_k: usize,
        opts: &MinGenOptions,
        rng: &mut R,
    ) -> Result<MinGenResult> {
        let order = self.order_u64().unwrap_or(u64::MAX);
        if order > opts.max_order {
            return Err(Error::TooLarge {
                what: "minimum-generator search",
                needed: order,
                limit: opts.max_order,
            });
        }
        if order == 1 {
            return Ok(MinGenResult::Found(MinGenOutcome {
                count: 0,
                witness: Vec::new(),
                exact: true,
            }));
        }
        let elements = self.elements(order)?;
        if max_k == 0 {
            return Ok(MinGenResult::NotFound { attempts: 0 });
        }
        // k = 1: a cyclic generator is an element of full order.
        if let Some(g) = elements.iter().find(|g| g.order() == order) {
            return Ok(MinGenResult::Found(MinGenOutcome {
                count: 1,
                witness: vec![g.clone()],
                exact: true,
            }));
        }
        if max_k == 1 {
            return Ok(MinGenResult::NotFound { attempts: 0 });
        }

        // Lower bound: G surjects onto C2^r where r is read off from the
        // subgroup generated by all squares (the quotient by it is the
        // largest elementary-abelian 2-quotient, and d(C2^r) = r).
        let rank = elementary_abelian_two_rank(self.degree, &elements, order)?;
        let lower = rank.max(2);
        let mut attempts_total = 0u64;
        let mut all_exhaustive = true;
        for k in lower..=max_k {
            let tuples = combination_count(order, k as u64);
            if tuples.map(|t| t <= opts.exhaustive_tuples).unwrap_or(false) {
                if let Some(witness) = self.exhaustive_tuple_search(&elements, k, order) {
                    return Ok(MinGenResult::Found(MinGenOutcome {
                        count: k,
                        witness,
                        exact: all_exhaustive || k == lower,
                    }));
                }
                // Exhaustively ruled out: k generators are not enough.
            } else {
                for _ in 0..opts.random_budget {
                    attempts_total += 1;
                    let tuple: Vec<Perm> = (0..k)
                        .map(|_| elements[rng.random_range(0..elements.len())].clone())
                        .collect();
                    if self.tuple_generates(&tuple, order) {
                        return Ok(MinGenResult::Found(MinGenOutcome {
                            count: k,
                            witness: tuple,
                            exact: all_exhaustive || k == lower,
                        }));
                    }
                }
                all_exhaustive = false;
            }
        }
        Ok(MinGenResult::NotFound {
            attempts: attempts_total,
        })
    }

    fn tuple_generates(&self, tuple: &[Perm], order: u64) -> bool {
        let chain = StabChain::build(self.degree, tuple);
        chain.order() == BigUint::from(order)
    }

    fn exhaustive_tuple_search(
        &self,
        elements: &[Perm],
        k: usize,
        order: u64,
    ) -> Option<Vec<Perm>> {
        let mut indices: Vec<usize> = (0..k).collect();
        let n = elements.len();
        if k > n {
            return None;
        }
        loop {
            let tuple: Vec<Perm> = indices.iter().map(|&i| elements[i].clone()).collect();
            if self.tuple_generates(&tuple, order) {
                return Some(tuple);
            }
            // next k-combination of {0..n} in lexicographic order
            let mut pos = k;
            loop {
                if pos == 0 {
                    return None;
                }
                pos -= 1;
                if indices[pos] < n - (k - pos) {
                    indices[pos] += 1;
                    for later in pos + 1..k {
                        indices[later] = indices[later - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
}

/// Tuning knobs for [`PermGroup::min_generators`].
#[derive(Clone, Debug)]
pub struct MinGenOptions {
    /// Refuse groups larger than this (the search materializes all elements).
    pub max_order: u64,
    /// Enumerate k-subsets exhaustively while their count stays below this.
    pub exhaustive_tuples: u64,
    /// Random attempts per k above the exhaustive regime.
    pub random_budget: u64,
}

impl Default for MinGenOptions {
    fn default() -> Self {
        MinGenOptions {
            max_order: 1_000_000,
            exhaustive_tuples: 1 << 20,
            random_budget: 10_000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct MinGenOutcome {
    pub count: usize,
    pub witness: Vec<Perm>,
    /// Whether minimality is certain (exhausted or met the structural lower bound).
    pub exact: bool,
}

#[derive(Clone, Debug)]
pub enum MinGenResult {
    Found(MinGenOutcome),
    NotFound { attempts: u64 },
}

impl MinGenResult {
    pub fn found(&self) -> Option<&MinGenOutcome> {
        match self {
            MinGenResult::Found(outcome) => Some(outcome),
            MinGenResult::NotFound { .. } => None,
        }
    }
}

/// Breadth-first closure of a generating set, capped.
pub fn naive_closure(degree: usize, generators: &[Perm], cap: u64) -> Result<Vec<Perm>> {
    let mut seen = BTreeSet::new();
    seen.insert(Perm::identity(degree));
    let mut queue: VecDeque<Perm> = VecDeque::from([Perm::identity(degree)]);
    while let Some(g) = queue.pop_front() {
        for s in generators {
            let next = g.compose(s)?;
            if seen.len() as u64 >= cap && !seen.contains(&next) {
                return Err(Error::TooLarge {
                    what: "group closure",
                    needed: cap + 1,
                    limit: cap,
                });
            }
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Rank r with G/⟨g² : g ∈ G⟩ ≅ C₂^r, from the materialized element list.
///
/// The quotient by the subgroup generated by all squares has every element
/// of order at most two, hence is elementary abelian; its rank lower-bounds
/// d(G). Used as the exactness certificate in the generator-count search.
fn elementary_abelian_two_rank(degree: usize, elements: &[Perm], order: u64) -> Result<usize> {
    let squares: Vec<Perm> = {
        let set: BTreeSet<Perm> = elements
            .iter()
            .map(|g| g.compose(g).expect("same degree"))
            .collect();
        set.into_iter().collect()
    };
    let v = naive_closure(degree, &squares, order)?;
    let index = order / v.len() as u64;
    debug_assert_eq!(order % v.len() as u64, 0);
    Ok(index.trailing_zeros() as usize)
}

fn combination_count(n: u64, k: u64) -> Option<u64> {
    let mut acc = 1u64;
    for j in 0..k {
        acc = acc.checked_mul(n - j)? / (j + 1);
    }
    Some(acc)
}

/// Deterministic Schreier–Sims stabilizer chain.
#[derive(Clone)]
pub struct StabChain {
    degree: usize,
    layers: Vec<Layer>,
}

#[derive(Clone)]
struct Layer {
    base: usize,
    gens: Vec<Perm>,
    /// Schreier vector: orbit point -> (parent point, generator index).
    /// The base point maps to `None`.
    tree: BTreeMap<usize, Option<(usize, usize)>>,
}

impl Layer {
    fn new(base: usize) -> Layer {
        let mut tree = BTreeMap::new();
        tree.insert(base, None);
        Layer {
            base,
            gens: Vec::new(),
            tree,
        }
    }

    fn orbit_len(&self) -> usize {
        self.tree.len()
    }

    /// Coset representative mapping the base to `point`, if in the orbit.
    fn rep(&self, point: usize, degree: usize) -> Option<Perm> {
        self.tree.get(&point)?;
        let mut path = Vec::new();
        let mut cur = point;
        while let Some(&Some((parent, gi))) = self.tree.get(&cur) {
            path.push(gi);
            cur = parent;
        }
        let mut rep = Perm::identity(degree);
        for &gi in path.iter().rev() {
            rep = rep.compose(&self.gens[gi]).expect("same degree");
        }
        Some(rep)
    }

    fn recompute_tree(&mut self) {
        self.tree.clear();
        self.tree.insert(self.base, None);
        let mut queue = VecDeque::from([self.base]);
        while let Some(p) = queue.pop_front() {
            for (gi, g) in self.gens.iter().enumerate() {
                let q = g.apply(p);
                if let alloc::collections::btree_map::Entry::Vacant(slot) = self.tree.entry(q) {
                    slot.insert(Some((p, gi)));
                    queue.push_back(q);
                }
            }
        }
    }
}

impl StabChain {
    /// Deterministic Schreier–Sims. Layer `l` holds generators of the
    /// pointwise stabilizer of the first `l` base points; a verified layer
    /// has every Schreier generator sifting to the identity through the
    /// deeper chain, which makes the order the product of the orbit sizes.
    pub fn build(degree: usize, generators: &[Perm]) -> StabChain {
        let mut chain = StabChain {
            degree,
            layers: Vec::new(),
        };
        for g in generators {
            if !g.is_identity() {
                chain.place(g.clone());
            }
        }
        chain.complete();
        chain
    }

    pub fn order(&self) -> BigUint {
        let mut acc = BigUint::from(1u32);
        for layer in &self.layers {
            acc *= BigUint::from(layer.orbit_len());
        }
        acc
    }

    pub fn base(&self) -> Vec<usize> {
        self.layers.iter().map(|layer| layer.base).collect()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        let (_, residue) = self.sift(0, g.clone());
        residue.is_identity()
    }

    /// Insert a generator at every level whose base prefix it stabilizes,
    /// opening a new layer if it fixes all current base points.
    fn place(&mut self, g: Perm) {
        let mut l = 0;
        loop {
            if l == self.layers.len() {
                let base = g.first_moved().expect("non-identity generator");
                self.layers.push(Layer::new(base));
                self.layers[l].gens.push(g);
                return;
            }
            let moves_base = g.apply(self.layers[l].base) != self.layers[l].base;
            self.layers[l].gens.push(g.clone());
            if moves_base {
                return;
            }
            l += 1;
        }
    }

    /// Strip `g` through layers from `level` on; returns the level reached
    /// together with the residue.
    fn sift(&self, level: usize, g: Perm) -> (usize, Perm) {
        let mut residue = g;
        let mut l = level;
        while l < self.layers.len() {
            if residue.is_identity() {
                return (l, residue);
            }
            let layer = &self.layers[l];
            let beta = residue.apply(layer.base);
            let Some(rep) = layer.rep(beta, self.degree) else {
                return (l, residue);
            };
            residue = residue.compose(&rep.inverse()).expect("same degree");
            l += 1;
        }
        (l, residue)
    }

    /// Verification loop, deepest level first. Processing level `i` assumes
    /// every deeper level is verified; when a Schreier generator of level
    /// `i` fails to sift, its residue joins levels `i+1..=j` (it stabilizes
    /// their base prefixes) and verification restarts at `j`.
    fn complete(&mut self) {
        if self.layers.is_empty() {
            return;
        }
        let mut i = self.layers.len() - 1;
        'level: loop {
            self.layers[i].recompute_tree();
            let orbit: Vec<usize> = self.layers[i].tree.keys().copied().collect();
            for p in orbit {
                for gi in 0..self.layers[i].gens.len() {
                    let schreier = {
                        let layer = &self.layers[i];
                        let rep_p = layer.rep(p, self.degree).expect("orbit point");
                        let s = &layer.gens[gi];
                        let q = s.apply(p);
                        let rep_q = layer.rep(q, self.degree).expect("orbit is closed");
                        rep_p
                            .compose(s)
                            .and_then(|t| t.compose(&rep_q.inverse()))
                            .expect("same degree")
                    };
                    if schreier.is_identity() {
                        continue;
                    }
                    let (j, residue) = self.sift(i + 1, schreier);
                    if residue.is_identity() {
                        continue;
                    }
                    if j == self.layers.len() {
                        let base = residue.first_moved().expect("non-identity residue");
                        self.layers.push(Layer::new(base));
                    }
                    for m in i + 1..=j {
                        self.layers[m].gens.push(residue.clone());
                    }
                    i = j;
                    continue 'level;
                }
            }
            if i == 0 {
                return;
            }
            i -= 1;
        }
    }

    fn random_element<R: Rng + ?Sized>(&self, degree: usize, rng: &mut R) -> Perm {
        let mut acc = Perm::identity(degree);
        for layer in self.layers.iter().rev() {
            let points: Vec<usize> = layer.tree.keys().copied().collect();
            let p = points[rng.random_range(0..points.len())];
            let rep = layer.rep(p, degree).expect("orbit point");
            acc = acc.compose(&rep).expect("same degree");
        }
        acc
    }
}

impl fmt::Debug for StabChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StabChain[degree {}, base {:?}]", self.degree, self.base())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn s(n: usize) -> PermGroup {
        PermGroup::symmetric(n).unwrap()
    }

    #[test]
    fn symmetric_orders() {
        assert_eq!(s(1).order_u64(), Some(1));
        assert_eq!(s(3).order_u64(), Some(6));
        assert_eq!(s(5).order_u64(), Some(120));
    }

    #[test]
    fn chain_order_matches_naive_closure() {
        let cases: Vec<Vec<Perm>> = vec![
            vec![
                Perm::parse(4, "(0 1)(2 3)").unwrap(),
                Perm::parse(4, "(0 2)(1 3)").unwrap(),
            ],
            vec![
                Perm::parse(4, "(0 1 2)").unwrap(),
                Perm::parse(4, "(1 2 3)").unwrap(),
            ],
            vec![Perm::parse(6, "(0 1 2 3 4 5)").unwrap()],
            vec![
                Perm::parse(5, "(0 1)").unwrap(),
                Perm::full_cycle(5),
            ],
            vec![
                Perm::parse(7, "(0 1)").unwrap(),
                Perm::parse(7, "(2 3 4)").unwrap(),
                Perm::parse(7, "(5 6)").unwrap(),
            ],
        ];
        for gens in cases {
            let degree = gens[0].degree();
            let group = PermGroup::new(degree, gens.clone()).unwrap();
            let closure = naive_closure(degree, &gens, 10_000).unwrap();
            assert_eq!(group.order_u64(), Some(closure.len() as u64));
        }
    }

    #[test]
    fn klein_four_group() {
        let group = PermGroup::new(
            4,
            vec![
                Perm::parse(4, "(0 1)(2 3)").unwrap(),
                Perm::parse(4, "(0 2)(1 3)").unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(group.order_u64(), Some(4));
    }

    #[test]
    fn no_generators_is_trivial() {
        let group = PermGroup::trivial(5).unwrap();
        assert_eq!(group.order_u64(), Some(1));
        assert!(group.contains(&Perm::identity(5)).unwrap());
        assert!(!group.contains(&Perm::parse(5, "(0 1)").unwrap()).unwrap());
    }

    #[test]
    fn alternating_group_rejects_odd_elements() {
        // A4 as closure of two 3-cycles; (0 1) is odd, so outside.
        let a4 = PermGroup::new(
            4,
            vec![
                Perm::parse(4, "(0 1 2)").unwrap(),
                Perm::parse(4, "(1 2 3)").unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(a4.order_u64(), Some(12));
        assert!(!a4.contains(&Perm::parse(4, "(0 1)").unwrap()).unwrap());
        let closure = naive_closure(4, a4.generators(), 100).unwrap();
        assert!(!closure.contains(&Perm::parse(4, "(0 1)").unwrap()));
    }

    #[test]
    fn membership_in_s3() {
        assert!(s(3).contains(&Perm::parse(3, "(0 2)").unwrap()).unwrap());
        let explicit = PermGroup::new(
            3,
            vec![Perm::parse(3, "(0 1)").unwrap(), Perm::full_cycle(3)],
        )
        .unwrap();
        assert!(explicit.contains(&Perm::parse(3, "(0 2)").unwrap()).unwrap());
    }

    #[test]
    fn transitivity() {
        assert!(s(1).is_transitive());
        assert!(s(4).is_transitive());
        let fixing = PermGroup::new(3, vec![Perm::parse(3, "(0 1)").unwrap()]).unwrap();
        assert!(!fixing.is_transitive());
        let cyclic = PermGroup::new(4, vec![Perm::full_cycle(4)]).unwrap();
        assert!(cyclic.is_transitive());
    }

    #[test]
    fn equals_group() {
        let explicit = PermGroup::new(
            3,
            vec![Perm::parse(3, "(0 1)").unwrap(), Perm::parse(3, "(0 1 2)").unwrap()],
        )
        .unwrap();
        assert!(explicit.equals(&s(3)).unwrap());
        assert!(s(3).equals(&explicit).unwrap());
        let a3 = PermGroup::new(3, vec![Perm::parse(3, "(0 1 2)").unwrap()]).unwrap();
        assert!(!a3.equals(&s(3)).unwrap());
        assert!(PermGroup::trivial(2)
            .unwrap()
            .equals(&PermGroup::trivial(2).unwrap())
            .unwrap());
    }

    #[test]
    fn uniformish_random_elements_are_members() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a4 = PermGroup::new(
            4,
            vec![
                Perm::parse(4, "(0 1 2)").unwrap(),
                Perm::parse(4, "(1 2 3)").unwrap(),
            ],
        )
        .unwrap();
        for _ in 0..50 {
            let g = a4.random_element(&mut rng);
            assert!(a4.contains(&g).unwrap());
        }
    }

    #[test]
    fn min_generators_of_small_groups() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let opts = MinGenOptions::default();

        let trivial = PermGroup::trivial(3).unwrap();
        let out = trivial.min_generators(3, &opts, &mut rng).unwrap();
        assert_eq!(out.found().unwrap().count, 0);

        let klein = PermGroup::new(
            4,
            vec![
                Perm::parse(4, "(0 1)(2 3)").unwrap(),
                Perm::parse(4, "(0 2)(1 3)").unwrap(),
            ],
        )
        .unwrap();
        let out = klein.min_generators(3, &opts, &mut rng).unwrap();
        let found = out.found().unwrap();
        assert_eq!(found.count, 2);
        assert!(found.exact);

        for n in 2..=6 {
            let group = PermGroup::new(
                n,
                PermGroup::symmetric(n).unwrap().generators().to_vec(),
            )
            .unwrap();
            let expected = if n == 2 { 1 } else { 2 };
            let out = group.min_generators(3, &opts, &mut rng).unwrap();
            assert_eq!(out.found().unwrap().count, expected, "S_{n}");
        }
    }

    #[test]
    fn min_generators_respects_the_order_guard() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let opts = MinGenOptions {
            max_order: 10,
            ..MinGenOptions::default()
        };
        let group = PermGroup::new(
            4,
            vec![Perm::parse(4, "(0 1)").unwrap(), Perm::full_cycle(4)],
        )
        .unwrap();
        assert!(matches!(
            group.min_generators(3, &opts, &mut rng),
            Err(Error::TooLarge { .. })
        ));
    }
}
