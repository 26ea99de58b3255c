//! Exact-arithmetic toolkit for decorated ideal triangulations of punctured
//! surfaces: classical Kashaev/shear/lambda-length coordinate changes, the
//! quantum torus algebras attached to a triangulation, and machine checks of
//! the structural identities relating them (move relations, exact sequences,
//! bivector pushforward, pentagon, and the a = q^-2, b = q^3 compatibility
//! conditions), all over exact rationals and cyclotomic fields.

pub mod coords;
pub mod error;
pub mod exchange;
pub mod fixtures;
pub mod linmaps;
pub mod matq;
pub mod rat;
pub mod search;
pub mod surface;

pub use error::{Error, Result};
