//! Exact computations on section rings of finite covers of projective space
//! whose pushforward of the structure sheaf splits as a sum of line bundles.
//!
//! All arithmetic is over the rationals and exact. The crate is `no_std` and
//! needs only `alloc`.

#![cfg_attr(not(test), no_std)]

#[macro_use]
extern crate alloc;

pub mod algebra;
pub mod curve;
pub mod cy3;
pub mod error;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod ring;
pub mod sections;
pub mod surface;

pub use algebra::{CoverAlgebra, MuMode, MuProfile, MuTarget, SplitBundle};
pub use error::{Error, Result};
pub use matrix::RationalMatrix;
pub use poly::{Monomial, UniPoly};
pub use rational::Rational;
pub use ring::{GeneratorProfile, GradedCover, GradedPiece};
pub use sections::{BlockSpace, SectionSpace};
pub use surface::{DivisorClass, RuledSurface};
