//! Exact computer algebra for experimental design.
//!
//! A design is a finite list of rational points. Everything here flows from
//! its vanishing ideal: Groebner bases under arbitrary monomial term orders,
//! saturated polynomial models (quotient bases), aliasing of polynomial
//! effects, indicator functions of fractions, Hilbert series, and the
//! algebraic fan of a design together with its state polytope and
//! corner-cut/linear-aberration diagnostics.
//!
//! All coefficients are arbitrary-precision rationals; there is no floating
//! point anywhere in the kernel, so every result is exact and reproducible.

pub mod alias;
pub mod design;
mod error;
pub mod fan;
pub mod groebner;
pub mod hilbert;
pub mod indicator;
pub mod linalg;
pub mod lp;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod polynomial;
pub mod rational;
pub mod report;
pub mod staircase;
pub mod vars;

pub use error::Error;
pub use monomial::Monomial;
pub use order::TermOrder;
pub use polynomial::Polynomial;
pub use staircase::Staircase;
pub use vars::Vars;

pub type Result<T> = std::result::Result<T, Error>;
