//! The guide in `book/`, compiled so that its snippets run as doctests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}

#[doc = include_str!("../../../book/src/algebroids.md")]
pub mod algebroids {}

#[doc = include_str!("../../../book/src/representations.md")]
pub mod representations {}

#[doc = include_str!("../../../book/src/phase_spaces.md")]
pub mod phase_spaces {}

#[doc = include_str!("../../../book/src/multivectors.md")]
pub mod multivectors {}

#[doc = include_str!("../../../book/src/cohomology.md")]
pub mod cohomology {}

#[doc = include_str!("../../../book/src/deformations.md")]
pub mod deformations {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
