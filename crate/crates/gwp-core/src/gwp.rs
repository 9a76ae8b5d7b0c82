//! The generalised wreath product of permutation groups over a finite poset.
//!
//! An element is a family of tables, one per poset index `i`: a total map
//! from Δ_{A(i)} (tuples over the up-set of `i`) into the factor group G_i.
//! Tables are dense arrays indexed by the lexicographic rank of the tuple,
//! with the canonical index order (sorted labels) restricted to A(i) and the
//! first listed index most significant. An empty up-set contributes the
//! single empty tuple, so maximal indices carry exactly one permutation.
//!
//! Multiplication, inversion, the action on Δ = ∏Δ_i, projections along
//! ancestral subsets and the faithful permutation image all live here.
//! Everything that enumerates Δ or the whole group is guarded by [`Limits`].

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use rand::Rng;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::permgroup::PermGroup;
use crate::poset::{AncestralSet, Poset};

/// Enumeration guards. Operations refuse instances beyond these bounds
/// instead of running unbounded.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Largest |Δ| for which the faithful image is materialized.
    pub max_points: u64,
    /// Largest |F| for which full element enumeration is allowed.
    pub max_enumeration: u64,
    /// Largest total table size (Σ |Δ_{A(i)}|) accepted at construction.
    pub max_table_entries: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_points: 5_000,
            max_enumeration: 10_000,
            max_table_entries: 1_000_000,
        }
    }
}

/// Choice of factor group over a domain.
#[derive(Clone, Debug)]
pub enum FactorSpec {
    /// The full symmetric group on the domain (the default).
    Symmetric,
    /// The group generated by the listed permutations.
    Explicit(Vec<Perm>),
}

/// The ambient product: poset, per-index domains and factor groups.
#[derive(Clone, Debug)]
pub struct GwpGroup {
    poset: Poset,
    domains: Vec<usize>,
    factors: Vec<PermGroup>,
    /// A(i) as sorted index lists.
    upsets: Vec<Vec<usize>>,
    /// |Δ_{A(i)}| per index; 1 when the up-set is empty.
    table_sizes: Vec<usize>,
    limits: Limits,
}

/// One element of the product: per-index total tables Δ_{A(i)} → G_i.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GwpElement {
    tables: Vec<Vec<Perm>>,
}

impl GwpElement {
    /// Table of index `i`, indexed by tuple rank.
    pub fn table(&self, i: usize) -> &[Perm] {
        &self.tables[i]
    }

    pub fn is_identity(&self) -> bool {
        self.tables
            .iter()
            .all(|table| table.iter().all(Perm::is_identity))
    }

    /// Indices whose table is not identically trivial.
    pub fn support(&self) -> Vec<usize> {
        self.tables
            .iter()
            .enumerate()
            .filter(|(_, table)| !table.iter().all(Perm::is_identity))
            .map(|(i, _)| i)
            .collect()
    }
}

/// A point of Δ = ∏Δ_i, one coordinate per poset index in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    coords: Vec<usize>,
}

impl Point {
    pub fn coords(&self) -> &[usize] {
        &self.coords
    }
}

impl GwpGroup {
    pub fn new(poset: Poset, domains: Vec<usize>, factors: Vec<FactorSpec>) -> Result<GwpGroup> {
        GwpGroup::with_limits(poset, domains, factors, Limits::default())
    }

    pub fn with_limits(
        poset: Poset,
        domains: Vec<usize>,
        factors: Vec<FactorSpec>,
        limits: Limits,
    ) -> Result<GwpGroup> {
        let n = poset.len();
        if domains.len() != n || factors.len() != n {
            return Err(Error::ShapeMismatch);
        }
        let mut groups = Vec::with_capacity(n);
        for (i, spec) in factors.into_iter().enumerate() {
            if domains[i] == 0 {
                return Err(Error::EmptyDomain);
            }
            let group = match spec {
                FactorSpec::Symmetric => PermGroup::symmetric(domains[i])?,
                FactorSpec::Explicit(gens) => PermGroup::new(domains[i], gens)?,
            };
            groups.push(group);
        }
        let mut upsets = Vec::with_capacity(n);
        let mut table_sizes = Vec::with_capacity(n);
        let mut total: u64 = 0;
        for i in 0..n {
            let upset = poset.up_set(i)?.members().to_vec();
            let mut size: u64 = 1;
            for &j in &upset {
                size = size.checked_mul(domains[j] as u64).ok_or(Error::TooLarge {
                    what: "element table",
                    needed: u64::MAX,
                    limit: limits.max_table_entries,
                })?;
            }
            total = total.saturating_add(size);
            if total > limits.max_table_entries {
                return Err(Error::TooLarge {
                    what: "element tables",
                    needed: total,
                    limit: limits.max_table_entries,
                });
            }
            upsets.push(upset);
            table_sizes.push(size as usize);
        }
        Ok(GwpGroup {
            poset,
            domains,
            factors: groups,
            upsets,
            table_sizes,
            limits,
        })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn index_count(&self) -> usize {
        self.poset.len()
    }

    pub fn domains(&self) -> &[usize] {
        &self.domains
    }

    pub fn factor(&self, i: usize) -> &PermGroup {
        &self.factors[i]
    }

    pub fn upset(&self, i: usize) -> &[usize] {
        &self.upsets[i]
    }

    /// |Δ_{A(i)}|.
    pub fn table_size(&self, i: usize) -> usize {
        self.table_sizes[i]
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// ∏ |G_i| ^ |Δ_{A(i)}|, the order of the product by counting tables.
    pub fn theoretical_order(&self) -> BigUint {
        let mut acc = BigUint::from(1u32);
        for i in 0..self.index_count() {
            acc *= pow_biguint(&self.factors[i].order(), self.table_sizes[i] as u64);
        }
        acc
    }

    pub fn theoretical_order_u64(&self) -> Option<u64> {
        u64::try_from(self.theoretical_order()).ok()
    }

    /// |Δ| if it fits in `u64`.
    pub fn point_count(&self) -> Option<u64> {
        let mut acc: u64 = 1;
        for &d in &self.domains {
            acc = acc.checked_mul(d as u64)?;
        }
        Some(acc)
    }

    // ---- tuple bookkeeping -------------------------------------------------

    /// Rank of a tuple over the up-set of `i` (row-major, first index most
    /// significant).
    pub fn upset_rank(&self, i: usize, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.upsets[i].len());
        let mut rank = 0usize;
        for (pos, &j) in self.upsets[i].iter().enumerate() {
            rank = rank * self.domains[j] + tuple[pos];
        }
        rank
    }

    pub fn upset_unrank(&self, i: usize, rank: usize) -> Vec<usize> {
        let upset = &self.upsets[i];
        let mut tuple = vec![0usize; upset.len()];
        let mut rest = rank;
        for pos in (0..upset.len()).rev() {
            let d = self.domains[upset[pos]];
            tuple[pos] = rest % d;
            rest /= d;
        }
        tuple
    }

    /// Rank of the A(j)-projection of a tuple indexed by the sorted host
    /// index list. Requires A(j) ⊆ host, which holds whenever the host set
    /// is ancestral and contains j.
    fn project_rank(&self, j: usize, host: &[usize], coords: &[usize]) -> usize {
        let mut rank = 0usize;
        for &k in &self.upsets[j] {
            let pos = host.binary_search(&k).expect("up-set inside host set");
            rank = rank * self.domains[k] + coords[pos];
        }
        rank
    }

    /// Image of a tuple over an ancestral index list under `f`, coordinate
    /// `j` moving by the permutation `f_j(tuple restricted to A(j))`.
    pub fn act_on_tuple(&self, host: &[usize], coords: &[usize], f: &GwpElement) -> Vec<usize> {
        host.iter()
            .enumerate()
            .map(|(pos, &j)| {
                let r = self.project_rank(j, host, coords);
                f.tables[j][r].apply(coords[pos])
            })
            .collect()
    }

    // ---- element construction ----------------------------------------------

    fn check_element(&self, f: &GwpElement) -> Result<()> {
        if f.tables.len() != self.index_count() {
            return Err(Error::ShapeMismatch);
        }
        for i in 0..self.index_count() {
            if f.tables[i].len() != self.table_sizes[i] {
                return Err(Error::ShapeMismatch);
            }
            for perm in &f.tables[i] {
                if perm.degree() != self.domains[i] {
                    return Err(Error::ShapeMismatch);
                }
            }
        }
        Ok(())
    }

    fn check_point(&self, point: &Point) -> Result<()> {
        if point.coords.len() != self.index_count() {
            return Err(Error::PointMismatch);
        }
        for (i, &c) in point.coords.iter().enumerate() {
            if c >= self.domains[i] {
                return Err(Error::CoordinateOutOfRange {
                    value: c,
                    size: self.domains[i],
                });
            }
        }
        Ok(())
    }

    /// The identity: every table entry is the identity permutation.
    pub fn identity(&self) -> GwpElement {
        GwpElement {
            tables: (0..self.index_count())
                .map(|i| vec![Perm::identity(self.domains[i]); self.table_sizes[i]])
                .collect(),
        }
    }

    pub fn element_from_tables(&self, tables: Vec<Vec<Perm>>) -> Result<GwpElement> {
        let f = GwpElement { tables };
        self.check_element(&f)?;
        Ok(f)
    }

    /// Element with a single non-trivial entry: `perm` at tuple rank `rank`
    /// of index `i`.
    pub fn plant(&self, i: usize, rank: usize, perm: Perm) -> Result<GwpElement> {
        if i >= self.index_count() {
            return Err(Error::IndexOutOfRange {
                index: i,
                count: self.index_count(),
            });
        }
        if rank >= self.table_sizes[i] {
            return Err(Error::IndexOutOfRange {
                index: rank,
                count: self.table_sizes[i],
            });
        }
        let mut f = self.identity();
        if perm.degree() != self.domains[i] {
            return Err(Error::DegreeMismatch {
                left: self.domains[i],
                right: perm.degree(),
            });
        }
        f.tables[i][rank] = perm;
        Ok(f)
    }

    pub fn point(&self, coords: Vec<usize>) -> Result<Point> {
        let point = Point { coords };
        self.check_point(&point)?;
        Ok(point)
    }

    // ---- group operations ----------------------------------------------------

    /// Product per the defining rule: the table of the product at `(i, ω)`
    /// is `f_i(ω)` followed by `h_i(ω · f_{A(i)})`.
    pub fn multiply(&self, f: &GwpElement, h: &GwpElement) -> Result<GwpElement> {
        self.check_element(f)?;
        self.check_element(h)?;
        let mut tables = Vec::with_capacity(self.index_count());
        for i in 0..self.index_count() {
            let mut table = Vec::with_capacity(self.table_sizes[i]);
            for rank in 0..self.table_sizes[i] {
                let omega = self.upset_unrank(i, rank);
                let moved = self.act_on_tuple(&self.upsets[i], &omega, f);
                let h_entry = &h.tables[i][self.upset_rank(i, &moved)];
                table.push(f.tables[i][rank].compose(h_entry)?);
            }
            tables.push(table);
        }
        Ok(GwpElement { tables })
    }

    /// Inverse, built top-down: indices are processed with all ancestors
    /// first, so the inverse's up-set tables are already final when the
    /// entry at `(i, γ)` reads `f_i(γ · f_{A(i)}^{-1})⁻¹`.
    pub fn invert(&self, f: &GwpElement) -> Result<GwpElement> {
        self.check_element(f)?;
        let mut inv = self.identity();
        for &i in &self.poset.descending_order() {
            for rank in 0..self.table_sizes[i] {
                let gamma = self.upset_unrank(i, rank);
                let moved = self.act_on_tuple(&self.upsets[i], &gamma, &inv);
                inv.tables[i][rank] = f.tables[i][self.upset_rank(i, &moved)].inverse();
            }
        }
        Ok(inv)
    }

    /// Conjugate `h` by `f` (right conjugation, `f⁻¹ h f`).
    pub fn conjugate(&self, h: &GwpElement, f: &GwpElement) -> Result<GwpElement> {
        let inv = self.invert(f)?;
        self.multiply(&self.multiply(&inv, h)?, f)
    }

    /// The natural action of `f` on a point of Δ.
    pub fn act(&self, point: &Point, f: &GwpElement) -> Result<Point> {
        self.check_point(point)?;
        self.check_element(f)?;
        let host: Vec<usize> = (0..self.index_count()).collect();
        Ok(Point {
            coords: self.act_on_tuple(&host, &point.coords, f),
        })
    }

    // ---- projections -----------------------------------------------------------

    /// The product over an ancestral subset, same labels and factors.
    pub fn restrict(&self, set: &AncestralSet) -> Result<GwpGroup> {
        if !self.poset.is_ancestral(set.members()) {
            return Err(Error::NotAncestral);
        }
        let poset = self.poset.restrict(set.members())?;
        let domains = set.members().iter().map(|&i| self.domains[i]).collect();
        let factors = set.members().iter().map(|&i| self.factors[i].clone()).collect();
        let mut restricted = GwpGroup {
            poset,
            domains,
            factors,
            upsets: Vec::new(),
            table_sizes: Vec::new(),
            limits: self.limits,
        };
        for new_i in 0..restricted.poset.len() {
            let upset = restricted.poset.up_set(new_i)?.members().to_vec();
            let size = upset
                .iter()
                .map(|&j| restricted.domains[j])
                .product::<usize>();
            restricted.upsets.push(upset);
            restricted.table_sizes.push(size.max(1));
        }
        Ok(restricted)
    }

    /// Natural projection of an element onto the restricted product.
    /// Tables survive verbatim: the up-set of any member of an ancestral
    /// subset is the same computed in the whole poset or in the subset.
    pub fn project_element(&self, f: &GwpElement, set: &AncestralSet) -> Result<GwpElement> {
        self.check_element(f)?;
        if !self.poset.is_ancestral(set.members()) {
            return Err(Error::NotAncestral);
        }
        Ok(GwpElement {
            tables: set.members().iter().map(|&i| f.tables[i].clone()).collect(),
        })
    }

    /// Embed an element of the restricted product back as the member of
    /// this group that is trivial outside the subset.
    pub fn embed_element(&self, set: &AncestralSet, sub: &GwpElement) -> Result<GwpElement> {
        if sub.tables.len() != set.len() {
            return Err(Error::ShapeMismatch);
        }
        let mut f = self.identity();
        for (pos, &i) in set.members().iter().enumerate() {
            if sub.tables[pos].len() != self.table_sizes[i] {
                return Err(Error::ShapeMismatch);
            }
            f.tables[i] = sub.tables[pos].clone();
        }
        self.check_element(&f)?;
        Ok(f)
    }

    /// Coordinate restriction of a point to an arbitrary index subset.
    pub fn project_point(&self, point: &Point, members: &[usize]) -> Result<Vec<usize>> {
        self.check_point(point)?;
        members
            .iter()
            .map(|&i| {
                if i >= self.index_count() {
                    Err(Error::IndexOutOfRange {
                        index: i,
                        count: self.index_count(),
                    })
                } else {
                    Ok(point.coords[i])
                }
            })
            .collect()
    }

    /// γ ∼_J δ: equality of the J-projections.
    pub fn equiv(&self, a: &Point, b: &Point, set: &AncestralSet) -> Result<bool> {
        self.check_point(a)?;
        self.check_point(b)?;
        Ok(set
            .members()
            .iter()
            .all(|&i| a.coords[i] == b.coords[i]))
    }

    /// Membership in the kernel of the projection that forgets everything
    /// outside `kernel_of`: trivial tables at every index of `kernel_of`.
    pub fn kernel_contains(&self, f: &GwpElement, kernel_of: &AncestralSet) -> Result<bool> {
        self.check_element(f)?;
        if !self.poset.is_ancestral(kernel_of.members()) {
            return Err(Error::NotAncestral);
        }
        Ok(kernel_of
            .members()
            .iter()
            .all(|&i| f.tables[i].iter().all(Perm::is_identity)))
    }

    // ---- enumeration and the faithful image -----------------------------------

    /// Every point of Δ in lexicographic order (first index most significant).
    pub fn points(&self) -> Result<Vec<Point>> {
        let count = self.point_count().ok_or(Error::TooLarge {
            what: "point enumeration",
            needed: u64::MAX,
            limit: self.limits.max_points,
        })?;
        if count > self.limits.max_points {
            return Err(Error::TooLarge {
                what: "point enumeration",
                needed: count,
                limit: self.limits.max_points,
            });
        }
        let mut out = Vec::with_capacity(count as usize);
        let mut coords = vec![0usize; self.index_count()];
        loop {
            out.push(Point {
                coords: coords.clone(),
            });
            let mut pos = self.index_count();
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                coords[pos] += 1;
                if coords[pos] < self.domains[pos] {
                    break;
                }
                coords[pos] = 0;
            }
        }
    }

    pub fn point_rank(&self, point: &Point) -> Result<usize> {
        self.check_point(point)?;
        let mut rank = 0usize;
        for (i, &c) in point.coords.iter().enumerate() {
            rank = rank * self.domains[i] + c;
        }
        Ok(rank)
    }

    /// The permutation δ ↦ δ·f on the lexicographic enumeration of Δ.
    /// This map is an injective homomorphism into Sym(Δ).
    pub fn as_permutation(&self, f: &GwpElement) -> Result<Perm> {
        self.check_element(f)?;
        let points = self.points()?;
        let mut images = Vec::with_capacity(points.len());
        for point in &points {
            let moved = self.act(point, f)?;
            images.push(self.point_rank(&moved)?);
        }
        Perm::from_images(&images)
    }

    /// Faithful image of a set of elements as a permutation group on Δ.
    pub fn permutation_group(&self, elements: &[GwpElement]) -> Result<PermGroup> {
        let degree = self.point_count().ok_or(Error::TooLarge {
            what: "faithful image",
            needed: u64::MAX,
            limit: self.limits.max_points,
        })? as usize;
        let images = elements
            .iter()
            .map(|f| self.as_permutation(f))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(degree, images)
    }

    /// All group elements by odometer over table slots, guarded by
    /// `limits.max_enumeration`. The order of the result is deterministic.
    pub fn elements(&self) -> Result<Vec<GwpElement>> {
        let total = self.theoretical_order();
        let cap = BigUint::from(self.limits.max_enumeration);
        if total > cap {
            return Err(Error::TooLarge {
                what: "group enumeration",
                needed: self.limits.max_enumeration + 1,
                limit: self.limits.max_enumeration,
            });
        }
        let mut factor_elements = Vec::with_capacity(self.index_count());
        for i in 0..self.index_count() {
            factor_elements.push(self.factors[i].elements(self.limits.max_enumeration)?);
        }
        // One digit per (index, tuple-rank) slot.
        let mut slots = Vec::new();
        for i in 0..self.index_count() {
            for rank in 0..self.table_sizes[i] {
                slots.push((i, rank));
            }
        }
        let mut digits = vec![0usize; slots.len()];
        let mut out = Vec::new();
        loop {
            let mut f = self.identity();
            for (slot, &(i, rank)) in slots.iter().enumerate() {
                f.tables[i][rank] = factor_elements[i][digits[slot]].clone();
            }
            out.push(f);
            let mut pos = slots.len();
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < factor_elements[slots[pos].0].len() {
                    break;
                }
                digits[pos] = 0;
            }
        }
    }

    /// Breadth-first closure of a set of elements under multiplication,
    /// capped; the result is sorted and deterministic.
    pub fn closure(&self, generators: &[GwpElement], cap: u64) -> Result<Vec<GwpElement>> {
        for f in generators {
            self.check_element(f)?;
        }
        let mut seen = alloc::collections::BTreeSet::new();
        seen.insert(self.identity());
        let mut queue = alloc::collections::VecDeque::from([self.identity()]);
        while let Some(f) = queue.pop_front() {
            for s in generators {
                let next = self.multiply(&f, s)?;
                if seen.len() as u64 >= cap && !seen.contains(&next) {
                    return Err(Error::TooLarge {
                        what: "element closure",
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

    /// All indices except `i`, in canonical order.
    pub fn complement_of(&self, i: usize) -> Vec<usize> {
        (0..self.index_count()).filter(|&j| j != i).collect()
    }

    /// Uniformly random element: every table slot is an independent
    /// uniformly random factor element.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> GwpElement {
        let mut f = self.identity();
        for i in 0..self.index_count() {
            for rank in 0..self.table_sizes[i] {
                f.tables[i][rank] = self.factors[i].random_element(rng);
            }
        }
        f
    }

    /// True iff every factor is the full symmetric group on its domain.
    pub fn all_factors_symmetric(&self) -> bool {
        self.factors.iter().all(PermGroup::is_symmetric)
    }

    pub fn all_factors_transitive(&self) -> bool {
        self.factors.iter().all(PermGroup::is_transitive)
    }

    // ---- text form -------------------------------------------------------------

    /// Canonical text form: non-trivial entries per index in canonical
    /// order, e.g. `{ a: [0] -> (0 1); b: [] -> (0 2 1) }`. The identity
    /// prints as `{}`.
    pub fn format_element(&self, f: &GwpElement) -> String {
        use core::fmt::Write;
        let mut parts: Vec<String> = Vec::new();
        for i in 0..self.index_count() {
            let mut assigns: Vec<String> = Vec::new();
            for rank in 0..self.table_sizes[i] {
                let perm = &f.tables[i][rank];
                if perm.is_identity() {
                    continue;
                }
                let tuple = self.upset_unrank(i, rank);
                let mut s = String::from("[");
                for (pos, c) in tuple.iter().enumerate() {
                    if pos > 0 {
                        s.push(' ');
                    }
                    let _ = write!(s, "{c}");
                }
                let _ = write!(s, "] -> {perm}");
                assigns.push(s);
            }
            if !assigns.is_empty() {
                parts.push(alloc::format!(
                    "{}: {}",
                    self.poset.label(i),
                    assigns.join(", ")
                ));
            }
        }
        if parts.is_empty() {
            String::from("{}")
        } else {
            alloc::format!("{{ {} }}", parts.join("; "))
        }
    }

    /// Parse the text form produced by [`GwpGroup::format_element`].
    /// Omitted entries default to the identity.
    pub fn parse_element(&self, text: &str) -> Result<GwpElement> {
        let text = text.trim();
        let inner = text
            .strip_prefix('{')
            .and_then(|rest| rest.strip_suffix('}'))
            .ok_or_else(|| Error::Parse {
                msg: String::from("element must be enclosed in braces"),
            })?
            .trim();
        let mut f = self.identity();
        if inner.is_empty() {
            return Ok(f);
        }
        for part in inner.split(';') {
            let part = part.trim();
            let (label, assigns) = part.split_once(':').ok_or_else(|| Error::Parse {
                msg: alloc::format!("expected `label: entries` in `{part}`"),
            })?;
            let i = self.poset.index_of(label.trim())?;
            for assign in assigns.split(',') {
                let assign = assign.trim();
                let (tuple_text, perm_text) =
                    assign.split_once("->").ok_or_else(|| Error::Parse {
                        msg: alloc::format!("expected `[tuple] -> perm` in `{assign}`"),
                    })?;
                let tuple_text = tuple_text.trim();
                let body = tuple_text
                    .strip_prefix('[')
                    .and_then(|rest| rest.strip_suffix(']'))
                    .ok_or_else(|| Error::Parse {
                        msg: alloc::format!("expected a bracketed tuple in `{assign}`"),
                    })?;
                let mut tuple = Vec::new();
                for token in body.split_whitespace() {
                    tuple.push(token.parse::<usize>().map_err(|_| Error::Parse {
                        msg: alloc::format!("invalid coordinate `{token}`"),
                    })?);
                }
                if tuple.len() != self.upsets[i].len() {
                    return Err(Error::Parse {
                        msg: alloc::format!(
                            "tuple for `{label}` must have {} coordinates",
                            self.upsets[i].len()
                        ),
                    });
                }
                for (pos, &c) in tuple.iter().enumerate() {
                    let d = self.domains[self.upsets[i][pos]];
                    if c >= d {
                        return Err(Error::CoordinateOutOfRange { value: c, size: d });
                    }
                }
                let perm = Perm::parse(self.domains[i], perm_text.trim())?;
                let rank = self.upset_rank(i, &tuple);
                f.tables[i][rank] = perm;
            }
        }
        Ok(f)
    }
}

fn pow_biguint(base: &BigUint, mut exp: u64) -> BigUint {
    let mut acc = BigUint::from(1u32);
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= &sq;
        }
        exp >>= 1;
        if exp > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    /// Chain a < b with two-point domains and symmetric factors, |F| = 8.
    fn chain2() -> GwpGroup {
        let poset = Poset::from_covers(&["a", "b"], &[("a", "b")]).unwrap();
        GwpGroup::new(poset, vec![2, 2], vec![FactorSpec::Symmetric, FactorSpec::Symmetric])
            .unwrap()
    }

    fn flip(n: usize) -> Perm {
        Perm::transposition(n, 0, 1).unwrap()
    }

    /// The spec's chain element: bottom table [(0 1), ()], top (0 1).
    fn sample_f(g: &GwpGroup) -> GwpElement {
        g.element_from_tables(vec![
            vec![flip(2), Perm::identity(2)],
            vec![flip(2)],
        ])
        .unwrap()
    }

    fn sample_h(g: &GwpGroup) -> GwpElement {
        g.element_from_tables(vec![
            vec![Perm::identity(2), flip(2)],
            vec![Perm::identity(2)],
        ])
        .unwrap()
    }

    #[test]
    fn theoretical_orders() {
        assert_eq!(chain2().theoretical_order_u64(), Some(8));

        let anti = Poset::antichain(&["a", "b"]).unwrap();
        let anti = GwpGroup::new(
            anti,
            vec![2, 2],
            vec![FactorSpec::Symmetric, FactorSpec::Symmetric],
        )
        .unwrap();
        assert_eq!(anti.theoretical_order_u64(), Some(4));

        let pyramid = Poset::from_covers(&["i", "j", "k"], &[("i", "k"), ("j", "k")]).unwrap();
        let pyramid = GwpGroup::new(pyramid, vec![2, 2, 2], vec![
            FactorSpec::Symmetric,
            FactorSpec::Symmetric,
            FactorSpec::Symmetric,
        ])
        .unwrap();
        assert_eq!(pyramid.theoretical_order_u64(), Some(32));
    }

    #[test]
    fn identity_is_neutral_and_fixes_points() {
        let g = chain2();
        let e = g.identity();
        let f = sample_f(&g);
        assert_eq!(g.multiply(&e, &f).unwrap(), f);
        assert_eq!(g.multiply(&f, &e).unwrap(), f);
        for point in g.points().unwrap() {
            assert_eq!(g.act(&point, &e).unwrap(), point);
        }
        let full = g.poset().full_set();
        assert!(g.project_element(&e, &full).unwrap().is_identity());
    }

    #[test]
    fn multiply_matches_the_faithful_image() {
        let g = chain2();
        let f = sample_f(&g);
        let h = sample_h(&g);
        let t = g.multiply(&f, &h).unwrap();
        // Oracle: composition of the two faithful images on all 4 points.
        let expected = g
            .as_permutation(&f)
            .unwrap()
            .compose(&g.as_permutation(&h).unwrap())
            .unwrap();
        assert_eq!(g.as_permutation(&t).unwrap(), expected);
        // Frozen table form: ω t_a = (ω f_a)(ω f_{A(a)} h_a) kills both
        // bottom entries and leaves the top transposition.
        let expected_tables = g
            .element_from_tables(vec![
                vec![Perm::identity(2), Perm::identity(2)],
                vec![flip(2)],
            ])
            .unwrap();
        assert_eq!(t, expected_tables);
    }

    #[test]
    fn antichain_multiplication_is_coordinatewise() {
        let poset = Poset::antichain(&["a", "b"]).unwrap();
        let g = GwpGroup::new(
            poset,
            vec![2, 3],
            vec![FactorSpec::Symmetric, FactorSpec::Symmetric],
        )
        .unwrap();
        let f = g
            .element_from_tables(vec![vec![flip(2)], vec![Perm::parse(3, "(0 1 2)").unwrap()]])
            .unwrap();
        let h = g
            .element_from_tables(vec![vec![flip(2)], vec![Perm::parse(3, "(0 1)").unwrap()]])
            .unwrap();
        let t = g.multiply(&f, &h).unwrap();
        assert_eq!(t.table(0)[0], Perm::identity(2));
        assert_eq!(
            t.table(1)[0],
            Perm::parse(3, "(0 1 2)")
                .unwrap()
                .compose(&Perm::parse(3, "(0 1)").unwrap())
                .unwrap()
        );
    }

    #[test]
    fn action_example_from_the_definition() {
        let g = chain2();
        // f_b = (0 1), f_a(0) = (), f_a(1) = (0 1)
        let f = g
            .element_from_tables(vec![
                vec![Perm::identity(2), flip(2)],
                vec![flip(2)],
            ])
            .unwrap();
        let start = g.point(vec![0, 0]).unwrap();
        let moved = g.act(&start, &f).unwrap();
        assert_eq!(moved.coords(), &[0, 1]);
    }

    #[test]
    fn inverse_laws() {
        let g = chain2();
        assert!(g.invert(&g.identity()).unwrap().is_identity());
        for f in g.elements().unwrap() {
            let inv = g.invert(&f).unwrap();
            assert!(g.multiply(&f, &inv).unwrap().is_identity());
            assert!(g.multiply(&inv, &f).unwrap().is_identity());
            assert_eq!(
                g.as_permutation(&inv).unwrap(),
                g.as_permutation(&f).unwrap().inverse()
            );
        }
    }

    #[test]
    fn antichain_inverse_is_coordinatewise() {
        let poset = Poset::antichain(&["a", "b"]).unwrap();
        let g = GwpGroup::new(
            poset,
            vec![3, 3],
            vec![FactorSpec::Symmetric, FactorSpec::Symmetric],
        )
        .unwrap();
        let f = g
            .element_from_tables(vec![
                vec![Perm::parse(3, "(0 1 2)").unwrap()],
                vec![Perm::parse(3, "(0 2)").unwrap()],
            ])
            .unwrap();
        let inv = g.invert(&f).unwrap();
        assert_eq!(inv.table(0)[0], Perm::parse(3, "(0 1 2)").unwrap().inverse());
        assert_eq!(inv.table(1)[0], Perm::parse(3, "(0 2)").unwrap());
    }

    #[test]
    fn faithful_image_is_injective_on_the_whole_group() {
        let g = chain2();
        let elements = g.elements().unwrap();
        assert_eq!(elements.len(), 8);
        let mut images = alloc::collections::BTreeSet::new();
        for f in &elements {
            images.insert(g.as_permutation(f).unwrap());
        }
        assert_eq!(images.len(), 8);
    }

    #[test]
    fn image_group_order_matches_theoretical_order() {
        let g = chain2();
        let image = g.permutation_group(&g.elements().unwrap()).unwrap();
        assert_eq!(image.order_u64(), Some(8));
    }

    #[test]
    fn projection_is_compatible_with_the_action() {
        let g = chain2();
        let top = g.poset().ancestral(&[1]).unwrap();
        let restricted = g.restrict(&top).unwrap();
        for f in g.elements().unwrap() {
            let pf = g.project_element(&f, &top).unwrap();
            for point in g.points().unwrap() {
                let lhs = restricted
                    .act(
                        &restricted
                            .point(g.project_point(&point, top.members()).unwrap())
                            .unwrap(),
                        &pf,
                    )
                    .unwrap();
                let rhs = g
                    .project_point(&g.act(&point, &f).unwrap(), top.members())
                    .unwrap();
                assert_eq!(lhs.coords(), rhs.as_slice());
            }
        }
    }

    #[test]
    fn projection_to_everything_and_nothing() {
        let g = chain2();
        let f = sample_f(&g);
        let full = g.poset().full_set();
        assert_eq!(g.project_element(&f, &full).unwrap(), f);
        let empty = g.poset().empty_set();
        let trivial = g.project_element(&f, &empty).unwrap();
        assert_eq!(trivial.tables.len(), 0);
        assert!(g.project_element(&f, &empty).unwrap().is_identity());
        // The bottom alone is not ancestral in a chain.
        assert!(g.poset().ancestral(&[0]).is_err());
    }

    #[test]
    fn kernel_of_the_top_projection_has_four_members() {
        let g = chain2();
        let top = g.poset().ancestral(&[1]).unwrap();
        let in_kernel: Vec<GwpElement> = g
            .elements()
            .unwrap()
            .into_iter()
            .filter(|f| g.kernel_contains(f, &top).unwrap())
            .collect();
        assert_eq!(in_kernel.len(), 4);
    }

    #[test]
    fn equivalence_by_projection() {
        let g = chain2();
        let top = g.poset().ancestral(&[1]).unwrap();
        let empty = g.poset().empty_set();
        let p = g.point(vec![0, 1]).unwrap();
        let q = g.point(vec![1, 1]).unwrap();
        let r = g.point(vec![1, 0]).unwrap();
        assert!(g.equiv(&p, &p, &top).unwrap());
        assert!(g.equiv(&p, &q, &top).unwrap());
        assert!(!g.equiv(&p, &r, &top).unwrap());
        assert!(g.equiv(&p, &r, &empty).unwrap());
    }

    #[test]
    fn element_text_round_trip() {
        let g = chain2();
        for f in g.elements().unwrap() {
            let text = g.format_element(&f);
            let back = g.parse_element(&text).unwrap();
            assert_eq!(back, f, "round trip through `{text}`");
        }
        assert_eq!(g.format_element(&g.identity()), "{}");
        let f = sample_f(&g);
        assert_eq!(g.format_element(&f), "{ a: [0] -> (0 1); b: [] -> (0 1) }");
    }

    #[test]
    fn parse_element_rejects_malformed_text() {
        let g = chain2();
        assert!(g.parse_element("a: [0] -> (0 1)").is_err());
        assert!(g.parse_element("{ z: [0] -> (0 1) }").is_err());
        assert!(g.parse_element("{ a: [0 0] -> (0 1) }").is_err());
        assert!(g.parse_element("{ a: [5] -> (0 1) }").is_err());
        assert!(g.parse_element("{ a: [0] (0 1) }").is_err());
    }

    #[test]
    fn enumeration_respects_the_guard() {
        let poset = Poset::from_covers(&["a", "b"], &[("a", "b")]).unwrap();
        let g = GwpGroup::with_limits(
            poset,
            vec![2, 2],
            vec![FactorSpec::Symmetric, FactorSpec::Symmetric],
            Limits {
                max_enumeration: 7,
                ..Limits::default()
            },
        )
        .unwrap();
        assert!(matches!(g.elements(), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn elements_of_wrong_shape_are_rejected() {
        let g = chain2();
        let other = GwpGroup::new(
            Poset::antichain(&["a", "b"]).unwrap(),
            vec![2, 2],
            vec![FactorSpec::Symmetric, FactorSpec::Symmetric],
        )
        .unwrap();
        let f = other.identity();
        assert!(matches!(g.multiply(&f, &f), Err(Error::ShapeMismatch)));
    }

    #[test]
    fn restriction_preserves_table_layout() {
        let poset =
            Poset::from_covers(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let g = GwpGroup::new(poset, vec![2, 3, 2], vec![
            FactorSpec::Symmetric,
            FactorSpec::Symmetric,
            FactorSpec::Symmetric,
        ])
        .unwrap();
        let upper = g.poset().ancestral(&[1, 2]).unwrap();
        let restricted = g.restrict(&upper).unwrap();
        assert_eq!(restricted.table_size(0), 2, "A(b) = {{c}} keeps |Δ_c| = 2");
        assert_eq!(restricted.table_size(1), 1);
        assert_eq!(
            restricted.theoretical_order(),
            BigUint::from(6u32 * 6 * 2)
        );
        assert_eq!(restricted.poset().labels()[0], "b".to_string());
    }
}
