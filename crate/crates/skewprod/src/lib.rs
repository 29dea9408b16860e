//! Exact computation with skew morphisms of finite groups.
//!
//! A skew morphism of a group `B` is a bijection `φ` of `B` fixing the
//! identity for which `φ(ab) = φ(a)·φ^{π(a)}(b)` for some power function
//! `π : B -> Z`. These maps are exactly what complementary factorisations
//! `G = B⟨y⟩` with a core-free cyclic complement induce, and this crate works
//! with them on that level: honest permutation groups, exact orders via
//! stabiliser chains, and full value/power tables.
//!
//! The crate has three layers:
//!
//! * group machinery — [`perm::Permutation`], [`group::PermGroup`] with a
//!   deterministic base-and-strong-generating-set construction, coset
//!   actions, cores, and brute-force normalisers and centralisers;
//! * the skew calculus — [`factor`] (complementary factorisations and the
//!   induced tables), [`skew`] (axioms, kernels, equivalence, skew product
//!   reconstruction), [`cayley`] (regular Cayley map certificates), and
//!   [`oracle`] (independent censuses of all skew morphisms of tiny groups);
//! * the verification harness — [`classify`] reproduces an enumeration of
//!   proper skew morphisms of specific simple and almost simple base groups,
//!   claim by claim, with machine-checkable reports.

pub mod catalog;
pub mod cayley;
pub mod classify;
pub mod error;
pub mod factor;
pub mod group;
pub mod oracle;
pub mod perm;
pub mod report;
pub mod skew;

pub use error::{GroupError, Result};
pub use group::{CosetAction, PermGroup, DEFAULT_ELEMENT_CAP};
pub use perm::Permutation;
