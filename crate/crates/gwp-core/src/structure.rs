//! Structure theory of the product: distinguished subgroups, the θ
//! isomorphism onto a direct power, the conjugation action on that power,
//! and executable decomposition witnesses (semidirect, wreath, chain,
//! antichain) together with generating sets.
//!
//! Witness functions verify their claims exhaustively at desk scale and by
//! seeded sampling above it; every report records how many cases ran.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use rand::Rng;

use crate::error::{Error, Result};
use crate::gwp::{GwpElement, GwpGroup};
use crate::perm::Perm;
use crate::permgroup::PermGroup;
use crate::poset::AncestralSet;

/// Membership defined by trivial tables outside a distinguished part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubgroupSpec {
    /// Elements whose table at `j` is trivial (the paper's L_j).
    TrivialAt { j: usize },
    /// Elements supported only at `i` (the paper's H_i).
    SupportedOnly { i: usize },
    /// Elements trivial outside an ancestral subset (the paper's F̄_J).
    SupportedIn { set: AncestralSet },
    /// Supported at `i` with the only non-trivial entry at the anchor
    /// tuple (the paper's D_i; the anchor is ε_i, by default rank 0,
    /// the lexicographically least tuple).
    Anchored { i: usize, anchor: usize },
}

impl SubgroupSpec {
    pub fn anchored_default(i: usize) -> SubgroupSpec {
        SubgroupSpec::Anchored { i, anchor: 0 }
    }
}

fn check_index(g: &GwpGroup, i: usize) -> Result<()> {
    if i >= g.index_count() {
        return Err(Error::IndexOutOfRange {
            index: i,
            count: g.index_count(),
        });
    }
    Ok(())
}

fn check_set(g: &GwpGroup, set: &AncestralSet) -> Result<()> {
    for &i in set.members() {
        check_index(g, i)?;
    }
    if !g.poset().is_ancestral(set.members()) {
        return Err(Error::NotAncestral);
    }
    Ok(())
}

/// Membership predicate for a subgroup spec.
pub fn subgroup_contains(g: &GwpGroup, spec: &SubgroupSpec, f: &GwpElement) -> Result<bool> {
    let trivial_at = |f: &GwpElement, i: usize| f.table(i).iter().all(Perm::is_identity);
    match spec {
        SubgroupSpec::TrivialAt { j } => {
            check_index(g, *j)?;
            Ok(trivial_at(f, *j))
        }
        SubgroupSpec::SupportedOnly { i } => {
            check_index(g, *i)?;
            Ok((0..g.index_count()).all(|j| j == *i || trivial_at(f, j)))
        }
        SubgroupSpec::SupportedIn { set } => {
            check_set(g, set)?;
            Ok((0..g.index_count()).all(|j| set.contains(j) || trivial_at(f, j)))
        }
        SubgroupSpec::Anchored { i, anchor } => {
            check_index(g, *i)?;
            if *anchor >= g.table_size(*i) {
                return Err(Error::IndexOutOfRange {
                    index: *anchor,
                    count: g.table_size(*i),
                });
            }
            let planted = (0..g.index_count()).all(|j| j == *i || trivial_at(f, j));
            Ok(planted
                && f.table(*i)
                    .iter()
                    .enumerate()
                    .all(|(r, p)| r == *anchor || p.is_identity()))
        }
    }
}

/// A finite generating list for a subgroup spec.
///
/// For H_i this is one planted factor generator per tuple of Δ_{A(i)};
/// for D_i the factor generators planted at the anchor only; F̄_J takes
/// the union over its members, and L_j the union over all other indices
/// (L_j is generated by the H_i with i ≠ j).
pub fn subgroup_generators(g: &GwpGroup, spec: &SubgroupSpec) -> Result<Vec<GwpElement>> {
    match spec {
        SubgroupSpec::SupportedOnly { i } => {
            check_index(g, *i)?;
            let mut out = Vec::new();
            for rank in 0..g.table_size(*i) {
                for s in g.factor(*i).generators() {
                    out.push(g.plant(*i, rank, s.clone())?);
                }
            }
            Ok(out)
        }
        SubgroupSpec::Anchored { i, anchor } => {
            check_index(g, *i)?;
            if *anchor >= g.table_size(*i) {
                return Err(Error::IndexOutOfRange {
                    index: *anchor,
                    count: g.table_size(*i),
                });
            }
            g.factor(*i)
                .generators()
                .iter()
                .map(|s| g.plant(*i, *anchor, s.clone()))
                .collect()
        }
        SubgroupSpec::SupportedIn { set } => {
            check_set(g, set)?;
            let mut out = Vec::new();
            for &i in set.members() {
                out.extend(subgroup_generators(g, &SubgroupSpec::SupportedOnly { i })?);
            }
            Ok(out)
        }
        SubgroupSpec::TrivialAt { j } => {
            check_index(g, *j)?;
            let mut out = Vec::new();
            for i in 0..g.index_count() {
                if i != *j {
                    out.extend(subgroup_generators(g, &SubgroupSpec::SupportedOnly { i })?);
                }
            }
            Ok(out)
        }
    }
}

/// Order of the subgroup by counting tables.
pub fn subgroup_order(g: &GwpGroup, spec: &SubgroupSpec) -> Result<BigUint> {
    let power = |i: usize, copies: usize| -> BigUint {
        let mut acc = BigUint::from(1u32);
        for _ in 0..copies {
            acc *= g.factor(i).order();
        }
        acc
    };
    match spec {
        SubgroupSpec::SupportedOnly { i } => {
            check_index(g, *i)?;
            Ok(power(*i, g.table_size(*i)))
        }
        SubgroupSpec::Anchored { i, anchor } => {
            check_index(g, *i)?;
            if *anchor >= g.table_size(*i) {
                return Err(Error::IndexOutOfRange {
                    index: *anchor,
                    count: g.table_size(*i),
                });
            }
            Ok(g.factor(*i).order())
        }
        SubgroupSpec::SupportedIn { set } => {
            check_set(g, set)?;
            let mut acc = BigUint::from(1u32);
            for &i in set.members() {
                acc *= power(i, g.table_size(i));
            }
            Ok(acc)
        }
        SubgroupSpec::TrivialAt { j } => {
            check_index(g, *j)?;
            let mut acc = BigUint::from(1u32);
            for i in 0..g.index_count() {
                if i != *j {
                    acc *= power(i, g.table_size(i));
                }
            }
            Ok(acc)
        }
    }
}

// ---- the θ isomorphism and the action on direct powers ---------------------

/// An element of the direct power G_i^{Δ_{A(i)}}, entries by tuple rank.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FactorTuple {
    pub index: usize,
    pub entries: Vec<Perm>,
}

/// Read off the `i`-table of an element supported only at `i`.
pub fn theta(g: &GwpGroup, i: usize, f: &GwpElement) -> Result<FactorTuple> {
    if !subgroup_contains(g, &SubgroupSpec::SupportedOnly { i }, f)? {
        return Err(Error::NotInSubgroup);
    }
    Ok(FactorTuple {
        index: i,
        entries: f.table(i).to_vec(),
    })
}

/// Rebuild the element of H_i with the given table.
pub fn theta_inverse(g: &GwpGroup, t: &FactorTuple) -> Result<GwpElement> {
    check_index(g, t.index)?;
    if t.entries.len() != g.table_size(t.index) {
        return Err(Error::ShapeMismatch);
    }
    let mut tables: Vec<Vec<Perm>> = (0..g.index_count())
        .map(|j| vec![Perm::identity(g.domains()[j]); g.table_size(j)])
        .collect();
    tables[t.index] = t.entries.clone();
    g.element_from_tables(tables)
}

/// Pointwise product in the direct power.
pub fn tuple_compose(a: &FactorTuple, b: &FactorTuple) -> Result<FactorTuple> {
    if a.index != b.index || a.entries.len() != b.entries.len() {
        return Err(Error::ShapeMismatch);
    }
    Ok(FactorTuple {
        index: a.index,
        entries: a
            .entries
            .iter()
            .zip(&b.entries)
            .map(|(x, y)| x.compose(y))
            .collect::<Result<_>>()?,
    })
}

/// Right action of the group on the direct power: the entry at δ of the
/// result is the entry of `t` at δ·(f⁻¹ projected to A(i)).
pub fn conj_action(g: &GwpGroup, t: &FactorTuple, f: &GwpElement) -> Result<FactorTuple> {
    check_index(g, t.index)?;
    if t.entries.len() != g.table_size(t.index) {
        return Err(Error::ShapeMismatch);
    }
    let inv = g.invert(f)?;
    let i = t.index;
    let mut entries = Vec::with_capacity(t.entries.len());
    for rank in 0..t.entries.len() {
        let tuple = g.upset_unrank(i, rank);
        let moved = g.act_on_tuple(g.upset(i), &tuple, &inv);
        entries.push(t.entries[g.upset_rank(i, &moved)].clone());
    }
    Ok(FactorTuple { index: i, entries })
}

// ---- semidirect decomposition at a minimal index ----------------------------

/// Split f = h · f̄ with h supported only at the minimal index `i` and f̄
/// trivial at `i` (the lift of the projection away from `i`).
pub fn factorize_minimal(
    g: &GwpGroup,
    i: usize,
    f: &GwpElement,
) -> Result<(GwpElement, GwpElement)> {
    check_index(g, i)?;
    if !g.poset().minimal_elements().contains(&i) {
        return Err(Error::NotMinimal {
            label: String::from(g.poset().label(i)),
        });
    }
    let rest = g.poset().ancestral(&g.complement_of(i))?;
    let f_bar = g.embed_element(&rest, &g.project_element(f, &rest)?)?;
    let h = g.multiply(f, &g.invert(&f_bar)?)?;
    Ok((h, f_bar))
}

#[derive(Clone, Debug)]
pub struct SemidirectReport {
    pub bottom_label: String,
    pub part_order: BigUint,
    pub rest_order: BigUint,
    pub orders_multiply: bool,
    pub factorization_ok: bool,
    pub normality_ok: bool,
    pub intersection_trivial: bool,
    pub exhaustive: bool,
    pub cases: u64,
}

impl SemidirectReport {
    pub fn all_ok(&self) -> bool {
        self.orders_multiply
            && self.factorization_ok
            && self.normality_ok
            && self.intersection_trivial
    }
}

/// Verify F = H_i ⋊ F̄_J for a minimal index: trivial intersection, unique
/// reconstruction f = h·f̄, normality of H_i, and |H_i|·|F̄_J| = |F|.
pub fn semidirect_witness<R: Rng + ?Sized>(
    g: &GwpGroup,
    i: usize,
    samples: u64,
    rng: &mut R,
) -> Result<SemidirectReport> {
    check_index(g, i)?;
    if !g.poset().minimal_elements().contains(&i) {
        return Err(Error::NotMinimal {
            label: String::from(g.poset().label(i)),
        });
    }
    let rest = g.poset().ancestral(&g.complement_of(i))?;
    let h_spec = SubgroupSpec::SupportedOnly { i };
    let rest_spec = SubgroupSpec::SupportedIn { set: rest.clone() };

    let part_order = subgroup_order(g, &h_spec)?;
    let rest_order = subgroup_order(g, &rest_spec)?;
    let orders_multiply = &part_order * &rest_order == g.theoretical_order();

    let pool: Vec<GwpElement> = match g.elements() {
        Ok(all) => all,
        Err(_) => (0..samples).map(|_| g.random_element(rng)).collect(),
    };
    let exhaustive = g
        .theoretical_order_u64()
        .map(|o| o <= g.limits().max_enumeration)
        .unwrap_or(false);

    let mut factorization_ok = true;
    let mut intersection_trivial = true;
    for f in &pool {
        let (h, f_bar) = factorize_minimal(g, i, f)?;
        if !subgroup_contains(g, &h_spec, &h)?
            || !subgroup_contains(g, &rest_spec, &f_bar)?
            || g.multiply(&h, &f_bar)? != *f
        {
            factorization_ok = false;
        }
        if subgroup_contains(g, &h_spec, f)?
            && subgroup_contains(g, &rest_spec, f)?
            && !f.is_identity()
        {
            intersection_trivial = false;
        }
    }

    let mut normality_ok = true;
    let h_gens = subgroup_generators(g, &h_spec)?;
    for f in &pool {
        for h in &h_gens {
            if !subgroup_contains(g, &h_spec, &g.conjugate(h, f)?)? {
                normality_ok = false;
            }
        }
    }

    Ok(SemidirectReport {
        bottom_label: String::from(g.poset().label(i)),
        part_order,
        rest_order,
        orders_multiply,
        factorization_ok,
        normality_ok,
        intersection_trivial,
        exhaustive,
        cases: pool.len() as u64,
    })
}

/// ⟨H_i, H_j⟩ = H_i × H_j for distinct minimal indices: generators commute
/// pairwise, the intersection is trivial, and (when the faithful image is
/// within bounds) the join's order is the product of the two orders.
pub fn h_pair_direct_check(g: &GwpGroup, i: usize, j: usize) -> Result<bool> {
    for &x in &[i, j] {
        if !g.poset().minimal_elements().contains(&x) {
            return Err(Error::NotMinimal {
                label: String::from(g.poset().label(x)),
            });
        }
    }
    if i == j {
        return Err(Error::NotDistinct {
            label: String::from(g.poset().label(i)),
        });
    }
    let gens_i = subgroup_generators(g, &SubgroupSpec::SupportedOnly { i })?;
    let gens_j = subgroup_generators(g, &SubgroupSpec::SupportedOnly { i: j })?;
    for a in &gens_i {
        for b in &gens_j {
            if g.multiply(a, b)? != g.multiply(b, a)? {
                return Ok(false);
            }
        }
    }
    let product = subgroup_order(g, &SubgroupSpec::SupportedOnly { i })?
        * subgroup_order(g, &SubgroupSpec::SupportedOnly { i: j })?;
    if let Ok(image) = g.permutation_group(&[gens_i, gens_j].concat())
        && image.order() != product
    {
        return Ok(false);
    }
    Ok(true)
}

// ---- the standalone wreath product -----------------------------------------

/// G_i ≀ F_J built independently of the ambient product: a base tuple of
/// |Δ_{A(i)}| permutations of Δ_i together with a top element of F_J, with
/// the top acting on base slots through its projection to A(i).
#[derive(Clone, Debug)]
pub struct WreathProduct {
    bottom_label: String,
    base_degree: usize,
    copies: usize,
    /// Domain sizes along A(i), for slot ranking.
    copy_domains: Vec<usize>,
    /// A(i) re-indexed inside the top group's poset.
    upset_in_top: Vec<usize>,
    top: GwpGroup,
    base_factor: PermGroup,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct WreathElement {
    pub base: Vec<Perm>,
    pub top: GwpElement,
}

impl WreathProduct {
    /// Wreath product over the minimal index `i` of the ambient group.
    pub fn over_minimal(g: &GwpGroup, i: usize) -> Result<WreathProduct> {
        check_index(g, i)?;
        if !g.poset().minimal_elements().contains(&i) {
            return Err(Error::NotMinimal {
                label: String::from(g.poset().label(i)),
            });
        }
        let rest = g.poset().ancestral(&g.complement_of(i))?;
        let top = g.restrict(&rest)?;
        let upset_in_top = g
            .upset(i)
            .iter()
            .map(|&j| top.poset().index_of(g.poset().label(j)))
            .collect::<Result<Vec<usize>>>()?;
        Ok(WreathProduct {
            bottom_label: String::from(g.poset().label(i)),
            base_degree: g.domains()[i],
            copies: g.table_size(i),
            copy_domains: g.upset(i).iter().map(|&j| g.domains()[j]).collect(),
            upset_in_top,
            top,
            base_factor: g.factor(i).clone(),
        })
    }

    pub fn bottom_label(&self) -> &str {
        &self.bottom_label
    }

    pub fn copies(&self) -> usize {
        self.copies
    }

    pub fn top(&self) -> &GwpGroup {
        &self.top
    }

    pub fn order(&self) -> BigUint {
        let mut acc = self.top.theoretical_order();
        for _ in 0..self.copies {
            acc *= self.base_factor.order();
        }
        acc
    }

    pub fn identity(&self) -> WreathElement {
        WreathElement {
            base: vec![Perm::identity(self.base_degree); self.copies],
            top: self.top.identity(),
        }
    }

    fn slot_tuple(&self, rank: usize) -> Vec<usize> {
        let mut tuple = vec![0usize; self.copy_domains.len()];
        let mut rest = rank;
        for pos in (0..self.copy_domains.len()).rev() {
            tuple[pos] = rest % self.copy_domains[pos];
            rest /= self.copy_domains[pos];
        }
        tuple
    }

    fn slot_rank(&self, tuple: &[usize]) -> usize {
        let mut rank = 0usize;
        for (pos, &c) in tuple.iter().enumerate() {
            rank = rank * self.copy_domains[pos] + c;
        }
        rank
    }

    /// Image of a slot under a top element (the action on Δ_{A(i)}).
    fn move_slot(&self, rank: usize, top: &GwpElement) -> usize {
        let tuple = self.slot_tuple(rank);
        let moved = self.top.act_on_tuple(&self.upset_in_top, &tuple, top);
        self.slot_rank(&moved)
    }

    /// Wreath multiplication: (t₁, f₁)(t₂, f₂) = (t₁ · t₂^{f₁⁻¹}, f₁f₂),
    /// so the base slot δ of the product is t₁[δ] followed by t₂[δ·f₁].
    pub fn multiply(&self, a: &WreathElement, b: &WreathElement) -> Result<WreathElement> {
        if a.base.len() != self.copies || b.base.len() != self.copies {
            return Err(Error::ShapeMismatch);
        }
        let mut base = Vec::with_capacity(self.copies);
        for rank in 0..self.copies {
            let moved = self.move_slot(rank, &a.top);
            base.push(a.base[rank].compose(&b.base[moved])?);
        }
        Ok(WreathElement {
            base,
            top: self.top.multiply(&a.top, &b.top)?,
        })
    }

    /// The isomorphism candidate F → G_i ≀ F_J: split f = h·f̄ at the
    /// bottom index, read the base tuple off h and project f̄ to the top.
    pub fn from_ambient(&self, g: &GwpGroup, i: usize, f: &GwpElement) -> Result<WreathElement> {
        let (h, f_bar) = factorize_minimal(g, i, f)?;
        let tuple = theta(g, i, &h)?;
        let rest = g.poset().ancestral(&g.complement_of(i))?;
        Ok(WreathElement {
            base: tuple.entries,
            top: g.project_element(&f_bar, &rest)?,
        })
    }
}

#[derive(Clone, Debug)]
pub struct WreathReport {
    pub bottom_label: String,
    pub copies: usize,
    pub order_matches: bool,
    pub injective: bool,
    pub homomorphism_ok: bool,
    pub exhaustive: bool,
    pub cases: u64,
    /// When the bottom is the unique minimal element: the top action on
    /// the base slots is faithful.
    pub faithful_top: Option<bool>,
    /// When the bottom is incomparable to everything else: the wreath
    /// degenerates to a direct factor.
    pub direct_factor: Option<bool>,
}

impl WreathReport {
    pub fn all_ok(&self) -> bool {
        self.order_matches
            && self.injective
            && self.homomorphism_ok
            && self.faithful_top.unwrap_or(true)
            && self.direct_factor.unwrap_or(true)
    }
}

/// Check F ≅ G_i ≀_{Δ_{A(i)}} F_J for a minimal index `i`: order equality,
/// injectivity of the explicit map, and the homomorphism law (exhaustive
/// while |F| stays within the enumeration limit, sampled otherwise).
pub fn wreath_witness<R: Rng + ?Sized>(
    g: &GwpGroup,
    i: usize,
    samples: u64,
    rng: &mut R,
) -> Result<WreathReport> {
    let w = WreathProduct::over_minimal(g, i)?;
    let order_matches = w.order() == g.theoretical_order();

    let exhaustive = g
        .theoretical_order_u64()
        .map(|o| o <= g.limits().max_enumeration)
        .unwrap_or(false);
    let pool: Vec<GwpElement> = if exhaustive {
        g.elements()?
    } else {
        (0..samples).map(|_| g.random_element(rng)).collect()
    };

    let mut injective = true;
    if exhaustive {
        let mut images = alloc::collections::BTreeSet::new();
        for f in &pool {
            images.insert(w.from_ambient(g, i, f)?);
        }
        injective = images.len() == pool.len();
    } else {
        for pair in pool.chunks(2) {
            if let [a, b] = pair
                && a != b
                && w.from_ambient(g, i, a)? == w.from_ambient(g, i, b)?
            {
                injective = false;
            }
        }
    }

    let mut homomorphism_ok = true;
    let mut cases = 0u64;
    if exhaustive && pool.len() as u64 * pool.len() as u64 <= 1_100_000 {
        for a in &pool {
            for b in &pool {
                let lhs = w.from_ambient(g, i, &g.multiply(a, b)?)?;
                let rhs = w.multiply(&w.from_ambient(g, i, a)?, &w.from_ambient(g, i, b)?)?;
                if lhs != rhs {
                    homomorphism_ok = false;
                }
                cases += 1;
            }
        }
    } else {
        for _ in 0..samples {
            let a = g.random_element(rng);
            let b = g.random_element(rng);
            let lhs = w.from_ambient(g, i, &g.multiply(&a, &b)?)?;
            let rhs = w.multiply(&w.from_ambient(g, i, &a)?, &w.from_ambient(g, i, &b)?)?;
            if lhs != rhs {
                homomorphism_ok = false;
            }
            cases += 1;
        }
    }

    let unique_minimal = g.poset().minimal_elements() == vec![i];
    let faithful_top = if unique_minimal {
        // A(i) = J here, and the top acts on the slots exactly as F_J acts
        // on Δ_J; faithfulness means distinct top elements move the slots
        // differently.
        let mut ok = g.upset(i).len() == g.index_count() - 1;
        if let Ok(top_elements) = w.top.elements() {
            let mut seen = alloc::collections::BTreeSet::new();
            for t in &top_elements {
                let images: Vec<usize> = (0..w.copies).map(|r| w.move_slot(r, t)).collect();
                if !seen.insert(images) {
                    ok = false;
                }
            }
        }
        Some(ok)
    } else {
        None
    };

    let isolated = g.upset(i).is_empty() && g.poset().minimal_elements().contains(&i);
    let direct_factor = if isolated && g.index_count() > 1 {
        // Base entries must commute with everything supported elsewhere.
        let rest = g.poset().ancestral(&g.complement_of(i))?;
        let h_gens = subgroup_generators(g, &SubgroupSpec::SupportedOnly { i })?;
        let rest_gens = subgroup_generators(g, &SubgroupSpec::SupportedIn { set: rest })?;
        let mut ok = true;
        for a in &h_gens {
            for b in &rest_gens {
                if g.multiply(a, b)? != g.multiply(b, a)? {
                    ok = false;
                }
            }
        }
        Some(ok)
    } else {
        None
    };

    Ok(WreathReport {
        bottom_label: w.bottom_label.clone(),
        copies: w.copies,
        order_matches,
        injective,
        homomorphism_ok,
        exhaustive,
        cases,
        faithful_top,
        direct_factor,
    })
}

// ---- recursive decomposition description -------------------------------------

/// How the product splits, peeling minimal elements.
#[derive(Clone, Debug)]
pub enum Decomposition {
    /// A single factor G_i.
    Factor {
        label: String,
        domain: usize,
        order: BigUint,
    },
    /// Direct product of the parts (antichain).
    Direct {
        parts: Vec<Decomposition>,
        order: BigUint,
    },
    /// G_i ≀ (rest) over the copies Δ_{A(i)}.
    Wreath {
        bottom_label: String,
        bottom_domain: usize,
        copies: usize,
        rest: Box<Decomposition>,
        order: BigUint,
    },
}

impl Decomposition {
    pub fn order(&self) -> &BigUint {
        match self {
            Decomposition::Factor { order, .. } => order,
            Decomposition::Direct { order, .. } => order,
            Decomposition::Wreath { order, .. } => order,
        }
    }
}

/// Recursive decomposition: an antichain flattens to a direct product,
/// otherwise the least minimal element splits off as a wreath bottom.
pub fn decompose(g: &GwpGroup) -> Result<Decomposition> {
    if g.index_count() == 1 {
        return Ok(Decomposition::Factor {
            label: String::from(g.poset().label(0)),
            domain: g.domains()[0],
            order: g.factor(0).order(),
        });
    }
    if g.poset().is_antichain() {
        let parts: Vec<Decomposition> = (0..g.index_count())
            .map(|i| Decomposition::Factor {
                label: String::from(g.poset().label(i)),
                domain: g.domains()[i],
                order: g.factor(i).order(),
            })
            .collect();
        return Ok(Decomposition::Direct {
            parts,
            order: g.theoretical_order(),
        });
    }
    let i = g.poset().minimal_elements()[0];
    let rest = g.poset().ancestral(&g.complement_of(i))?;
    let sub = decompose(&g.restrict(&rest)?)?;
    Ok(Decomposition::Wreath {
        bottom_label: String::from(g.poset().label(i)),
        bottom_domain: g.domains()[i],
        copies: g.table_size(i),
        rest: Box::new(sub),
        order: g.theoretical_order(),
    })
}

/// Iterated wreath description of a chain (bottom-first).
pub fn chain_decompose(g: &GwpGroup) -> Result<Decomposition> {
    if !g.poset().is_chain() {
        return Err(Error::WrongPosetShape { expected: "chain" });
    }
    decompose(g)
}

/// Flat direct-product description of an antichain.
pub fn antichain_decompose(g: &GwpGroup) -> Result<Decomposition> {
    if !g.poset().is_antichain() {
        return Err(Error::WrongPosetShape {
            expected: "antichain",
        });
    }
    decompose(g)
}

/// Run the wreath witness at every level of the recursive decomposition.
pub fn verify_decomposition<R: Rng + ?Sized>(
    g: &GwpGroup,
    samples: u64,
    rng: &mut R,
) -> Result<Vec<WreathReport>> {
    let mut reports = Vec::new();
    let mut current = g.clone();
    while current.index_count() > 1 && !current.poset().is_antichain() {
        let i = current.poset().minimal_elements()[0];
        reports.push(wreath_witness(&current, i, samples, rng)?);
        let rest = current.poset().ancestral(&current.complement_of(i))?;
        current = current.restrict(&rest)?;
    }
    Ok(reports)
}

// ---- generating sets -----------------------------------------------------------

/// Generators of the whole product from the supported-only subgroups.
pub fn generating_set_h(g: &GwpGroup) -> Result<Vec<GwpElement>> {
    let mut out = Vec::new();
    for i in 0..g.index_count() {
        out.extend(subgroup_generators(g, &SubgroupSpec::SupportedOnly { i })?);
    }
    Ok(out)
}

/// Generators of the whole product from the anchored subgroups; requires
/// every factor transitive.
pub fn generating_set_d(g: &GwpGroup) -> Result<Vec<GwpElement>> {
    for i in 0..g.index_count() {
        if !g.factor(i).is_transitive() {
            return Err(Error::IntransitiveFactor {
                label: String::from(g.poset().label(i)),
            });
        }
    }
    let mut out = Vec::new();
    for i in 0..g.index_count() {
        out.extend(subgroup_generators(g, &SubgroupSpec::anchored_default(i))?);
    }
    Ok(out)
}

/// H_i = ⟨(D_i)^f : f ∈ F̄_J⟩ for a minimal index whose overhead factors
/// are transitive, by exhaustive conjugation and closure at desk scale.
pub fn conjugate_generation_check(g: &GwpGroup, i: usize) -> Result<bool> {
    check_index(g, i)?;
    if !g.poset().minimal_elements().contains(&i) {
        return Err(Error::NotMinimal {
            label: String::from(g.poset().label(i)),
        });
    }
    for &j in g.upset(i) {
        if !g.factor(j).is_transitive() {
            return Err(Error::IntransitiveFactor {
                label: String::from(g.poset().label(j)),
            });
        }
    }
    let rest = g.poset().ancestral(&g.complement_of(i))?;
    let rest_group = g.restrict(&rest)?;
    let rest_elements = rest_group.elements()?;
    let d_gens = subgroup_generators(g, &SubgroupSpec::anchored_default(i))?;

    let mut conjugates = Vec::new();
    for f_sub in &rest_elements {
        let f = g.embed_element(&rest, f_sub)?;
        for d in &d_gens {
            conjugates.push(g.conjugate(d, &f)?);
        }
    }
    let target = subgroup_order(g, &SubgroupSpec::SupportedOnly { i })?;
    let cap = u64::try_from(&target).map_err(|_| Error::TooLarge {
        what: "conjugate closure",
        needed: u64::MAX,
        limit: g.limits().max_enumeration,
    })?;
    let closure = g.closure(&conjugates, cap.max(1) * 2)?;
    if BigUint::from(closure.len()) != target {
        return Ok(false);
    }
    for f in &closure {
        if !subgroup_contains(g, &SubgroupSpec::SupportedOnly { i }, f)? {
            return Ok(false);
        }
    }
    Ok(true)
}
