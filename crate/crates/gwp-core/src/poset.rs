//! Finite strict partial orders over string labels.
//!
//! Posets are built from covering relations; the transitive closure is
//! computed up front and validated (irreflexive, antisymmetric). Labels are
//! kept in sorted order and all iteration downstream follows that order, so
//! every derived structure is deterministic.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A finite strict partial order on labelled elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    /// Row-major n×n matrix; `lt[a*n+b]` iff a < b (strictly).
    lt: Vec<bool>,
}

/// An upward-closed subset of a poset, stored as sorted indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct AncestralSet {
    members: Vec<usize>,
}

impl AncestralSet {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }
}

/// The five isomorphism classes of posets on two or three elements,
/// with a witness assignment of roles to concrete indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SmallPosetClass {
    /// Totally ordered; `order` lists indices from bottom to top.
    Chain { order: Vec<usize> },
    /// No comparable pair.
    Antichain,
    /// One bottom below two incomparable elements (b < t₀, b < t₁, t₀ ⊥ t₁).
    Triangle { bottom: usize, tops: [usize; 2] },
    /// Two incomparable elements below one top (b₀ < t, b₁ < t, b₀ ⊥ b₁).
    Pyramid { bottoms: [usize; 2], top: usize },
    /// One comparable pair plus an element incomparable to both.
    ChainPlusIsolated {
        low: usize,
        high: usize,
        isolated: usize,
    },
    /// Not a poset on two or three elements.
    NotSmall,
}

impl Poset {
    /// Build from labels and covering relations `(low, high)`.
    ///
    /// Labels are sorted into canonical order; duplicate labels, unknown
    /// labels in covers, and cyclic covers are rejected.
    pub fn from_covers<S: AsRef<str>>(labels: &[S], covers: &[(S, S)]) -> Result<Poset> {
        let mut sorted: Vec<String> = labels.iter().map(|l| l.as_ref().to_string()).collect();
        sorted.sort();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateLabel {
                    label: pair[0].clone(),
                });
            }
        }
        let n = sorted.len();
        let mut lt = vec![false; n * n];
        let index = |label: &str| -> Result<usize> {
            sorted
                .binary_search_by(|probe| probe.as_str().cmp(label))
                .map_err(|_| Error::UnknownLabel {
                    label: label.to_string(),
                })
        };
        for (low, high) in covers {
            let a = index(low.as_ref())?;
            let b = index(high.as_ref())?;
            if a == b {
                return Err(Error::CyclicCovers {
                    label: low.as_ref().to_string(),
                });
            }
            lt[a * n + b] = true;
        }
        // Transitive closure (Floyd–Warshall on the boolean matrix).
        for k in 0..n {
            for a in 0..n {
                if lt[a * n + k] {
                    for b in 0..n {
                        if lt[k * n + b] {
                            lt[a * n + b] = true;
                        }
                    }
                }
            }
        }
        for a in 0..n {
            if lt[a * n + a] {
                return Err(Error::CyclicCovers {
                    label: sorted[a].clone(),
                });
            }
        }
        Ok(Poset { labels: sorted, lt })
    }

    /// Poset with no relations.
    pub fn antichain<S: AsRef<str>>(labels: &[S]) -> Result<Poset> {
        Poset::from_covers(labels, &[])
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .binary_search_by(|probe| probe.as_str().cmp(label))
            .map_err(|_| Error::UnknownLabel {
                label: label.to_string(),
            })
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                count: self.len(),
            });
        }
        Ok(())
    }

    /// Strict comparison i < j.
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.lt[i * self.len() + j]
    }

    /// Neither i < j nor j < i; rejects i = j.
    pub fn incomparable(&self, i: usize, j: usize) -> Result<bool> {
        self.check_index(i)?;
        self.check_index(j)?;
        if i == j {
            return Err(Error::NotDistinct {
                label: self.labels[i].clone(),
            });
        }
        Ok(!self.lt(i, j) && !self.lt(j, i))
    }

    /// The up-set A(i) = { j : j > i }.
    pub fn up_set(&self, i: usize) -> Result<AncestralSet> {
        self.check_index(i)?;
        Ok(AncestralSet {
            members: (0..self.len()).filter(|&j| self.lt(i, j)).collect(),
        })
    }

    /// True iff `members` is upward closed.
    pub fn is_ancestral(&self, members: &[usize]) -> bool {
        members.iter().all(|&j| {
            (0..self.len()).all(|i| !self.lt(j, i) || members.contains(&i))
        })
    }

    /// Validate and canonicalize an ancestral subset.
    pub fn ancestral(&self, members: &[usize]) -> Result<AncestralSet> {
        let mut sorted: Vec<usize> = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &i in &sorted {
            self.check_index(i)?;
        }
        if !self.is_ancestral(&sorted) {
            return Err(Error::NotAncestral);
        }
        Ok(AncestralSet { members: sorted })
    }

    /// The whole index set as an ancestral set.
    pub fn full_set(&self) -> AncestralSet {
        AncestralSet {
            members: (0..self.len()).collect(),
        }
    }

    pub fn empty_set(&self) -> AncestralSet {
        AncestralSet {
            members: Vec::new(),
        }
    }

    /// Complement of a set of minimal elements (or any downward-closed set)
    /// is ancestral; the general complement is validated.
    pub fn complement(&self, set: &AncestralSet) -> Vec<usize> {
        (0..self.len()).filter(|i| !set.contains(*i)).collect()
    }

    /// Elements with nothing below them, in label order.
    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| !self.lt(j, i)))
            .collect()
    }

    /// Elements with nothing above them, in label order.
    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| !self.lt(i, j)))
            .collect()
    }

    pub fn is_chain(&self) -> bool {
        (0..self.len()).all(|i| (i + 1..self.len()).all(|j| self.lt(i, j) || self.lt(j, i)))
    }

    pub fn is_antichain(&self) -> bool {
        (0..self.len()).all(|i| (i + 1..self.len()).all(|j| !self.lt(i, j) && !self.lt(j, i)))
    }

    /// Indices sorted bottom to top when the poset is a chain.
    pub fn chain_order(&self) -> Result<Vec<usize>> {
        if !self.is_chain() {
            return Err(Error::WrongPosetShape { expected: "chain" });
        }
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| {
            if a == b {
                core::cmp::Ordering::Equal
            } else if self.lt(a, b) {
                core::cmp::Ordering::Less
            } else {
                core::cmp::Ordering::Greater
            }
        });
        Ok(order)
    }

    /// A linear extension listing every element after all its ancestors
    /// (maximal elements first), deterministic in label order.
    pub fn descending_order(&self) -> Vec<usize> {
        let n = self.len();
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        while order.len() < n {
            for i in 0..n {
                if !placed[i] && (0..n).all(|j| !self.lt(i, j) || placed[j]) {
                    placed[i] = true;
                    order.push(i);
                }
            }
        }
        order
    }

    /// Classify posets on two or three elements up to isomorphism.
    pub fn classify_small(&self) -> SmallPosetClass {
        match self.len() {
            2 => {
                if self.is_chain() {
                    SmallPosetClass::Chain {
                        order: self.chain_order().expect("checked chain"),
                    }
                } else {
                    SmallPosetClass::Antichain
                }
            }
            3 => {
                if self.is_chain() {
                    return SmallPosetClass::Chain {
                        order: self.chain_order().expect("checked chain"),
                    };
                }
                if self.is_antichain() {
                    return SmallPosetClass::Antichain;
                }
                let relations: Vec<(usize, usize)> = (0..3)
                    .flat_map(|a| (0..3).map(move |b| (a, b)))
                    .filter(|&(a, b)| self.lt(a, b))
                    .collect();
                match relations.as_slice() {
                    [(low, high)] => {
                        let isolated = (0..3).find(|i| i != low && i != high).expect("three");
                        SmallPosetClass::ChainPlusIsolated {
                            low: *low,
                            high: *high,
                            isolated,
                        }
                    }
                    [(a, b), (c, d)] if a == c => SmallPosetClass::Triangle {
                        bottom: *a,
                        tops: [*b.min(d), *b.max(d)],
                    },
                    [(a, b), (c, d)] if b == d => SmallPosetClass::Pyramid {
                        bottoms: [*a.min(c), *a.max(c)],
                        top: *b,
                    },
                    _ => unreachable!("a 3-element poset has 0..3 strict relations"),
                }
            }
            _ => SmallPosetClass::NotSmall,
        }
    }

    /// Restriction to a subset of indices, keeping labels. The indices of
    /// the restricted poset follow the same canonical label order.
    pub fn restrict(&self, members: &[usize]) -> Result<Poset> {
        for &i in members {
            self.check_index(i)?;
        }
        let labels: Vec<String> = members.iter().map(|&i| self.labels[i].clone()).collect();
        let mut covers = Vec::new();
        for &a in members {
            for &b in members {
                if self.lt(a, b) {
                    covers.push((self.labels[a].clone(), self.labels[b].clone()));
                }
            }
        }
        Poset::from_covers(&labels, &covers)
    }

    /// All ancestral subsets, for exhaustive desk-scale checks.
    pub fn ancestral_subsets(&self) -> Vec<AncestralSet> {
        let n = self.len();
        assert!(n <= 16, "ancestral_subsets is an exhaustive helper");
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            if self.is_ancestral(&members) {
                out.push(AncestralSet { members });
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> Poset {
        Poset::from_covers(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap()
    }

    #[test]
    fn up_sets() {
        let p = chain3();
        let a = p.index_of("a").unwrap();
        assert_eq!(p.up_set(a).unwrap().members(), &[1, 2]);
        let anti = Poset::antichain(&["a", "b"]).unwrap();
        assert!(anti.up_set(0).unwrap().is_empty());
        let pyramid =
            Poset::from_covers(&["i", "j", "k"], &[("i", "k"), ("j", "k")]).unwrap();
        let i = pyramid.index_of("i").unwrap();
        let k = pyramid.index_of("k").unwrap();
        assert_eq!(pyramid.up_set(i).unwrap().members(), &[k]);
    }

    #[test]
    fn transitive_closure_is_applied() {
        let p = chain3();
        assert!(p.lt(0, 2), "a < c through b");
    }

    #[test]
    fn ancestral_checks() {
        let p = Poset::from_covers(&["a", "b"], &[("a", "b")]).unwrap();
        assert!(p.is_ancestral(&[1]));
        assert!(!p.is_ancestral(&[0]));
        assert!(p.is_ancestral(&[0, 1]));
        assert!(p.is_ancestral(&[]));
        assert!(p.ancestral(&[0]).is_err());
    }

    #[test]
    fn minimal_and_maximal() {
        assert_eq!(chain3().minimal_elements(), vec![0]);
        assert_eq!(chain3().maximal_elements(), vec![2]);
        assert_eq!(
            Poset::antichain(&["a", "b", "c"]).unwrap().minimal_elements(),
            vec![0, 1, 2]
        );
        let triangle =
            Poset::from_covers(&["i", "j", "k"], &[("i", "j"), ("i", "k")]).unwrap();
        assert_eq!(triangle.minimal_elements(), vec![triangle.index_of("i").unwrap()]);
    }

    #[test]
    fn incomparability() {
        let anti = Poset::antichain(&["a", "b"]).unwrap();
        assert!(anti.incomparable(0, 1).unwrap());
        let p = Poset::from_covers(&["a", "b"], &[("a", "b")]).unwrap();
        assert!(!p.incomparable(0, 1).unwrap());
        assert!(p.incomparable(0, 0).is_err());
        let wrdi = Poset::from_covers(&["i", "j", "k"], &[("i", "k")]).unwrap();
        let j = wrdi.index_of("j").unwrap();
        let k = wrdi.index_of("k").unwrap();
        assert!(wrdi.incomparable(j, k).unwrap());
    }

    #[test]
    fn chain_and_antichain_predicates() {
        assert!(chain3().is_chain());
        assert!(!chain3().is_antichain());
        let anti = Poset::antichain(&["x", "y"]).unwrap();
        assert!(anti.is_antichain());
        assert!(!anti.is_chain());
        let pyramid =
            Poset::from_covers(&["i", "j", "k"], &[("i", "k"), ("j", "k")]).unwrap();
        assert!(!pyramid.is_chain());
        assert!(!pyramid.is_antichain());
    }

    #[test]
    fn classification_of_small_posets() {
        assert!(matches!(
            Poset::from_covers(&["i", "j"], &[("i", "j")]).unwrap().classify_small(),
            SmallPosetClass::Chain { .. }
        ));
        assert!(matches!(
            Poset::antichain(&["i", "j"]).unwrap().classify_small(),
            SmallPosetClass::Antichain
        ));
        let pyramid =
            Poset::from_covers(&["i", "j", "k"], &[("i", "k"), ("j", "k")]).unwrap();
        assert!(matches!(
            pyramid.classify_small(),
            SmallPosetClass::Pyramid { .. }
        ));
        let triangle =
            Poset::from_covers(&["i", "j", "k"], &[("i", "j"), ("i", "k")]).unwrap();
        assert!(matches!(
            triangle.classify_small(),
            SmallPosetClass::Triangle { .. }
        ));
        let wrdi = Poset::from_covers(&["i", "j", "k"], &[("i", "k")]).unwrap();
        assert!(matches!(
            wrdi.classify_small(),
            SmallPosetClass::ChainPlusIsolated { .. }
        ));
        let four = Poset::antichain(&["a", "b", "c", "d"]).unwrap();
        assert_eq!(four.classify_small(), SmallPosetClass::NotSmall);
    }

    #[test]
    fn rejects_cycles_and_duplicates() {
        assert!(Poset::from_covers(&["a", "b"], &[("a", "b"), ("b", "a")]).is_err());
        assert!(Poset::from_covers(&["a", "a"], &[]).is_err());
        assert!(Poset::from_covers(&["a"], &[("a", "z")]).is_err());
    }

    #[test]
    fn descending_order_lists_ancestors_first() {
        let p = chain3();
        let order = p.descending_order();
        for (pos, &i) in order.iter().enumerate() {
            for &j in &order[pos + 1..] {
                assert!(!p.lt(i, j), "descendant {j} listed after ancestor {i}");
            }
        }
        assert_eq!(order, vec![2, 1, 0]);
    }

    #[test]
    fn restriction_keeps_relations() {
        let p = chain3();
        let restricted = p.restrict(&[1, 2]).unwrap();
        assert!(restricted.is_chain());
        assert_eq!(restricted.labels(), &["b".to_string(), "c".to_string()]);
    }
}
