//! Keeps the book honest: every chapter is included as a doc comment, so
//! `cargo test --doc` compiles and runs each fenced Rust snippet. A chapter
//! that drifts from the library breaks the build.
//!
//! The chapters live in `book/` at the workspace root and render with
//! `mdbook build book`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/permutations.md")]
pub mod permutations {}

#[doc = include_str!("../../../book/src/groups.md")]
pub mod groups {}

#[doc = include_str!("../../../book/src/catalog.md")]
pub mod catalog {}

#[doc = include_str!("../../../book/src/skew-morphisms.md")]
pub mod skew_morphisms {}

#[doc = include_str!("../../../book/src/cayley-maps.md")]
pub mod cayley_maps {}

#[doc = include_str!("../../../book/src/census.md")]
pub mod census {}

#[doc = include_str!("../../../book/src/harness.md")]
pub mod harness {}
