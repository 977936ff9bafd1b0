//! Increasing tableaux and their exact dynamics: promotion and
//! evacuation, growth diagrams, lattice-path and noncrossing-partition
//! encodings, flagged standard tableaux, tropical friezes, and an
//! exhaustive cyclic-sieving verifier over arbitrary-precision
//! arithmetic.
//!
//! ```
//! use inctab::dynamics::promote;
//! use inctab::tableau::IncreasingTableau;
//!
//! let t = IncreasingTableau::new(vec![vec![1, 2, 4], vec![3, 4, 5]])?;
//! assert_eq!(promote(&t).rows(), &[vec![1, 3, 4], vec![2, 4, 5]]);
//! # Ok::<(), inctab::tableau::InvalidTableau>(())
//! ```

pub mod dynamics;
pub mod enumerate;
pub mod examples;
pub mod flag;
pub mod frieze;
pub mod json;
pub mod noncrossing;
pub mod qpoly;
pub mod render;
pub mod shape;
pub mod sieving;
pub mod tableau;
pub mod words;

pub use shape::{BoxCoord, PartitionShape};
pub use tableau::{IncreasingTableau, ShapeChain};

/// Runs every code block of the guide under `cargo test --doc`, one
/// module per chapter so a failure names its source.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/tableaux.md")]
    mod tableaux {}
    #[doc = include_str!("../../../book/src/promotion.md")]
    mod promotion {}
    #[doc = include_str!("../../../book/src/paths-and-words.md")]
    mod paths_and_words {}
    #[doc = include_str!("../../../book/src/bijections.md")]
    mod bijections {}
    #[doc = include_str!("../../../book/src/friezes.md")]
    mod friezes {}
    #[doc = include_str!("../../../book/src/sieving.md")]
    mod sieving {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
