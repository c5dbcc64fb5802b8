//! Exact-arithmetic toolkit for ascending HNN extensions.
//!
//! The library instantiates, on concrete group families, the standard
//! constructions around properly ascending HNN extensions
//! `<B, t | tBt^-1 ⊂ B>`: canonical-form arithmetic for the families
//! themselves, the coset-representative/free-semigroup witness pipeline,
//! certified exponential growth lower bounds, the cyclic `Z[t]`-module
//! stability analysis, and the failure of subgroup separability in finite
//! symmetric-group quotients.
//!
//! Everything is exact: arbitrary-precision integers throughout, no
//! floating point except in the (clearly diagnostic) growth-rate report.
//!
//! The crate is `no_std` + `alloc`; IO, parsing and the CLI live in the
//! companion crate `ascent-lab`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod cyclic_module;
pub mod freewords;
pub mod group;
pub mod growth;
pub mod laurent;
pub mod matrix;
pub mod nadic;
pub mod quotients;
pub mod snf;
pub mod stallings;
pub mod witness;

pub use laurent::LaurentPolynomial;
pub use matrix::IntegerMatrix;
pub use nadic::NAdicFraction;
pub use snf::SmithDecomposition;
