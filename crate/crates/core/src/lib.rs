//! Exact (co)homology of finite-dimensional Leibniz algebras.
//!
//! A Leibniz algebra `g` is given by structure constants. The crate builds
//! the free graded Lie algebra `F_Lie g[1]` with its differential `∂`, the
//! Loday complex, the dg Lie algebra `DR g[1]`, the anti-cyclic
//! Loday–Pirashvili cochains, and the coadjoint double `g ⋉ g*`.
//!
//! Everything is generic over [`Scalar`]; [`Rational`] is the default.

pub mod algebra;
pub mod catalog;
pub mod chain;
pub mod cochain;
pub mod error;
pub mod free_lie;
pub mod linalg;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;

pub type Algebra = algebra::LeibnizAlgebra<Rational>;
pub type Tensor = free_lie::TensorElement<Rational>;
pub type Lie = free_lie::LieElement<Rational>;
pub type Form = algebra::BilinearForm<Rational>;
pub type RationalCochain = cochain::Cochain<Rational>;
pub type RationalMatrix = linalg::SparseMatrix<Rational>;
