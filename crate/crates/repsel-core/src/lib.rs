//! Core algorithms for selecting a small, representative subset of ranking
//! metrics.
//!
//! Given `n` metrics that each rank the same `m` alternatives, this crate
//! selects subsets that provably preserve rank information from the full
//! set. Two guarantees are supported, each parameterized by how much
//! information loss the caller tolerates:
//!
//! - *positional representation* (group size `g`): every alternative ranked
//!   in the top `r` by at least `l * g` metrics stays in the top `r` for at
//!   least `l` selected metrics,
//! - *positional proportionality* (tolerance `eps`): for every alternative
//!   and every rank cutoff, the fraction of selected metrics agreeing is
//!   within `eps` of the fraction in the full set.
//!
//! Both properties generalize from rank-derived constraints to arbitrary
//! metric groups. Selectors come in three flavors: a polynomial-time greedy
//! cover ([`greedy`]), an exact minimum-size search ([`exact`]), and
//! randomized sampling ([`sampling`]). [`generators`] builds worst-case and
//! random instances for stress tests.
//!
//! All proportionality comparisons use exact rational arithmetic
//! ([`Rational`]); no verdict ever depends on floating point.
//!
//! The crate is `no_std` (with `alloc`); IO and file formats live in the
//! companion `repsel` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod exact;
pub mod generators;
pub mod greedy;
pub mod profile;
pub mod properties;
pub mod rational;
pub mod sampling;
mod selection;

pub use profile::{MissingPolicy, Orientation, PreferenceProfile, ScoreTable, TiePolicy};
pub use properties::{
    Certificate, ConstraintId, CumulativeCounts, Group, GroupCollection, PropertySpec,
    ScoreVector, Violation,
};
pub use rational::Rational;
pub use selection::Selection;
