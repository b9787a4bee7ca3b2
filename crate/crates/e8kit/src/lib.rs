//! Exact and numeric construction of the complex exceptional Lie algebra e8
//! from the exceptional Jordan algebra and the Freudenthal space, together
//! with its order-four automorphism and the verification suites built on top.

#![allow(clippy::needless_range_loop, clippy::large_enum_variant)]

pub mod scalar;
pub mod space;
pub mod octonion;
pub mod jordan;
pub mod error;
pub mod linalg;
pub mod lie;
pub mod freudenthal;
pub mod e8;
pub mod spin10;
pub mod subalgebra;
pub mod dims;
pub mod wspace;
pub mod orbits;
pub mod report;

pub use error::{Error, Result};
