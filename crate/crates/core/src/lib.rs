//! Exact q,ζ-expansions of weak Jacobi forms, the heat and Serre operators,
//! and modular differential equations with vanishing certificates.
//!
//! All arithmetic is exact over the rationals. Exponents are stored in
//! integer units: `q`-exponents in 24ths (`n24`), `ζ`-exponents in halves
//! (`l2`), and weights and indices doubled (`weight2`, `index2`).

pub mod catalog;
pub mod error;
pub mod linalg;
pub mod mde;
pub mod operators;
pub mod ring;
pub mod series;

pub use catalog::{form, CatalogEntry, Parity};
pub use error::{Error, Result};
pub use operators::{heat, heat_k, iterate, q_derivative, serre, OperatorChain};
pub use ring::{basis, certify_zero, coordinates, vanishing_bound, JacobiBasis, Verdict, ZeroCertificate};
pub use series::{QZSeries, Rational};
