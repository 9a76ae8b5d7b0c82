//! Finite permutations on `{0, …, n-1}` with cycle-notation input and output.
//!
//! Points are acted on the right: `g.apply(p)` is the image of `p`, and
//! [`Perm::compose`] multiplies left-to-right, so `a.compose(&b)` applies
//! `a` first. This is the single composition convention used everywhere in
//! this workspace.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest supported domain size. Images are stored as `u16`.
pub const MAX_DEGREE: usize = u16::MAX as usize;

/// A permutation of `{0, …, n-1}` in image-table form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    /// The identity on `n` points.
    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (0..n).map(|p| p as u16).collect(),
        }
    }

    /// Build from an image table; `images[p]` is the image of `p`.
    pub fn from_images(images: &[usize]) -> Result<Perm> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(Error::DegreeTooLarge {
                degree: n,
                max: MAX_DEGREE,
            });
        }
        let mut seen = vec![false; n];
        for &img in images {
            if img >= n || seen[img] {
                return Err(Error::InvalidImages);
            }
            seen[img] = true;
        }
        Ok(Perm {
            images: images.iter().map(|&p| p as u16).collect(),
        })
    }

    /// Build from disjoint-or-not cycles, applied left to right.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        let mut result = Perm::identity(n);
        for cycle in cycles {
            let mut images: Vec<usize> = (0..n).collect();
            for (pos, &p) in cycle.iter().enumerate() {
                let q = cycle[(pos + 1) % cycle.len()];
                if p >= n || q >= n {
                    return Err(Error::IndexOutOfRange {
                        index: p.max(q),
                        count: n,
                    });
                }
                images[p] = q;
            }
            result = result.compose(&Perm::from_images(&images)?)?;
        }
        Ok(result)
    }

    /// The transposition `(a b)` on `n` points.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Perm> {
        if a >= n || b >= n || a == b {
            return Err(Error::IndexOutOfRange {
                index: a.max(b),
                count: n,
            });
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Perm::from_images(&images)
    }

    /// The full cycle `(0 1 … n-1)`.
    pub fn full_cycle(n: usize) -> Perm {
        let images: Vec<u16> = (0..n).map(|p| ((p + 1) % n.max(1)) as u16).collect();
        Perm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a point under the right action.
    #[inline]
    pub fn apply(&self, p: usize) -> usize {
        self.images[p] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &q)| p as u16 == q)
    }

    /// Left-to-right product: the result maps `p` to `b.apply(a.apply(p))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Perm {
            images: self
                .images
                .iter()
                .map(|&q| other.images[q as usize])
                .collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u16; self.images.len()];
        for (p, &q) in self.images.iter().enumerate() {
            images[q as usize] = p as u16;
        }
        Perm { images }
    }

    /// Least point moved by this permutation, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(p, &q)| p as u16 != q)
            .map(|(p, _)| p)
    }

    /// Parity as an element of C₂: 0 for even, 1 for odd.
    ///
    /// Computed from the cycle type: a cycle of length ℓ contributes ℓ−1.
    pub fn sign(&self) -> u8 {
        let mut parity = 0usize;
        let mut seen = vec![false; self.images.len()];
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                len += 1;
                p = self.images[p] as usize;
            }
            parity += len - 1;
        }
        (parity % 2) as u8
    }

    /// Multiplicative order (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        let mut ord = 1u64;
        let mut seen = vec![false; self.images.len()];
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                len += 1;
                p = self.images[p] as usize;
            }
            ord = lcm(ord, len);
        }
        ord
    }

    /// Non-trivial cycles, each rotated to start at its least point and
    /// sorted by that point. This is the canonical printed form.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut seen = vec![false; self.images.len()];
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Parse cycle notation such as `(0 1)(2 3)`; the identity is `()`.
    ///
    /// The degree cannot be recovered from the text, so it is supplied.
    pub fn parse(n: usize, text: &str) -> Result<Perm> {
        let text = text.trim();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text;
        if rest.is_empty() {
            return Err(Error::Parse {
                msg: String::from("empty permutation; the identity is written `()`"),
            });
        }
        while !rest.is_empty() {
            let Some(open) = rest.find('(') else {
                return Err(Error::Parse {
                    msg: alloc::format!("expected `(` in permutation near `{rest}`"),
                });
            };
            if !rest[..open].trim().is_empty() {
                return Err(Error::Parse {
                    msg: alloc::format!("unexpected text before cycle: `{}`", &rest[..open]),
                });
            }
            let Some(close) = rest[open..].find(')') else {
                return Err(Error::Parse {
                    msg: String::from("unclosed cycle"),
                });
            };
            let body = &rest[open + 1..open + close];
            let mut cycle = Vec::new();
            for token in body.split_whitespace() {
                let p: usize = token.parse().map_err(|_| Error::Parse {
                    msg: alloc::format!("invalid point `{token}`"),
                })?;
                if p >= n {
                    return Err(Error::Parse {
                        msg: alloc::format!("point {p} out of range for degree {n}"),
                    });
                }
                if cycle.contains(&p) {
                    return Err(Error::Parse {
                        msg: alloc::format!("point {p} repeated within a cycle"),
                    });
                }
                cycle.push(p);
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
            rest = rest[open + close + 1..].trim_start();
        }
        Perm::from_cycles(n, &cycles)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (pos, p) in cycle.iter().enumerate() {
                if pos > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}: {}]", self.degree(), self)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn compose_is_left_to_right() {
        // (0 1) then (1 2): 0 -> 1 -> 2, 1 -> 0 -> 0, 2 -> 2 -> 1.
        let a = Perm::parse(3, "(0 1)").unwrap();
        let b = Perm::parse(3, "(1 2)").unwrap();
        let t = a.compose(&b).unwrap();
        assert_eq!(t, Perm::from_images(&[2, 0, 1]).unwrap());
        assert_eq!(t.to_string(), "(0 2 1)");
    }

    #[test]
    fn involution_squares_to_identity() {
        let a = Perm::parse(2, "(0 1)").unwrap();
        assert!(a.compose(&a).unwrap().is_identity());
    }

    #[test]
    fn identity_is_neutral() {
        let a = Perm::parse(4, "(0 2 3)").unwrap();
        let e = Perm::identity(4);
        assert_eq!(a.compose(&e).unwrap(), a);
        assert_eq!(e.compose(&a).unwrap(), a);
    }

    #[test]
    fn inverse_cancels() {
        let a = Perm::from_images(&[0, 2, 1, 4, 7, 8, 3, 5, 6]).unwrap();
        assert!(a.compose(&a.inverse()).unwrap().is_identity());
        assert!(a.inverse().compose(&a).unwrap().is_identity());
    }

    #[test]
    fn sign_of_small_permutations() {
        assert_eq!(Perm::identity(5).sign(), 0);
        assert_eq!(Perm::parse(5, "(0 1)").unwrap().sign(), 1);
        assert_eq!(Perm::parse(5, "(0 1 2)").unwrap().sign(), 0);
        assert_eq!(Perm::parse(5, "(0 1)(2 3)").unwrap().sign(), 0);
    }

    #[test]
    fn display_round_trip() {
        for text in ["()", "(0 1)", "(0 1)(2 3)", "(0 2 1)", "(1 4)(2 3 5)"] {
            let p = Perm::parse(6, text).unwrap();
            assert_eq!(p.to_string(), text);
            assert_eq!(Perm::parse(6, &p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Perm::parse(3, "").is_err());
        assert!(Perm::parse(3, "(0 3)").is_err());
        assert!(Perm::parse(3, "(0 0)").is_err());
        assert!(Perm::parse(3, "0 1").is_err());
        assert!(Perm::parse(3, "(0 1").is_err());
    }

    #[test]
    fn from_images_rejects_non_bijections() {
        assert!(Perm::from_images(&[0, 0]).is_err());
        assert!(Perm::from_images(&[2, 1]).is_err());
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let a = Perm::identity(3);
        let b = Perm::identity(4);
        assert!(matches!(
            a.compose(&b),
            Err(Error::DegreeMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn element_order() {
        assert_eq!(Perm::identity(4).order(), 1);
        assert_eq!(Perm::parse(6, "(0 1)(2 3 4)").unwrap().order(), 6);
        assert_eq!(Perm::full_cycle(5).order(), 5);
    }
}
