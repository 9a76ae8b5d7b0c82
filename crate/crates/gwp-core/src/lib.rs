//! Generalised wreath products of finite permutation groups over a finite
//! poset: construction, structure theory, and certification that the
//! minimum number of generators of the product over symmetric groups equals
//! the number of poset elements.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the command
//! line front end live in the companion `gwp-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod gwp;
pub mod perm;
pub mod permgroup;
pub mod poset;
pub mod mingen;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
pub use gwp::{FactorSpec, GwpElement, GwpGroup, Limits, Point};
pub use perm::Perm;
pub use permgroup::{MinGenOptions, MinGenOutcome, MinGenResult, PermGroup, StabChain};
pub use mingen::{CertReport, GenSearchOptions, SignVector, Verdict};
pub use poset::{AncestralSet, Poset, SmallPosetClass};
pub use verify::{CheckBudget, CheckOutcome, CheckStatus, CorpusItem, CorpusScope};
