//! Exact algebra for subvarieties of weighted projective space: Gröbner bases,
//! Hilbert series and quasi-polynomials, weighted determinantal scrolls, curves in
//! weighted threefolds, and parameterizations of 1-generic curves.

pub mod arith;
pub mod betti;
pub mod cli;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod lowdim;
pub mod param;
pub mod ring;
pub mod scroll;
pub mod upoly;

pub use arith::{fmt_q, parse_q, Q};
pub use error::{Result, WpsError};
