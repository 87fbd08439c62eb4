//! The chapters of the mdbook guide in `book/`, included here so that every
//! code sample in the book is compiled and run by `cargo test --doc`. The
//! rendered book and the published docs share one source of truth.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/series.md")]
pub mod series {}

#[doc = include_str!("../../../book/src/umbral.md")]
pub mod umbral {}

#[doc = include_str!("../../../book/src/families.md")]
pub mod families {}

#[doc = include_str!("../../../book/src/identities.md")]
pub mod identities {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
