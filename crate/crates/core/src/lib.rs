//! Symplectic groups over Hermitian matrix algebras and coordinates for
//! maximal framed representations of punctured surface groups.
//!
//! The algebras are `Mat(n, R)`, `Mat(n, C)` and `Mat(n, H)` with the
//! conjugate-transpose anti-involution. The crate is `no_std` with `alloc`;
//! the `std` feature only forwards to the dependencies.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod lines;
pub mod parametrization;
pub mod realization;
pub mod surface;
pub mod symplectic;

pub use algebra::{sample, sample_with, AlgebraDescriptor, AlgebraElement, GroundRing, SampleKind, DEFAULT_TOL};
pub use error::{Error, Result};
pub use lines::IsotropicLine;
pub use parametrization::{CoordinateVector, EdgeId, FramedRepresentation, LocalSystem};
pub use surface::{FundamentalPolygon, GammaGraph, PolygonSpec, SurfaceDescriptor};
pub use symplectic::{Mat2, SymplecticElement};
