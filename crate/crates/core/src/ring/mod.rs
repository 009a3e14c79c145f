//! Weighted polynomial rings, ideals and graded matrices.

pub mod ideal;
pub mod io;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod weights;

pub use ideal::Ideal;
pub use io::RingDocument;
pub use matrix::{GradedMatrix, MatrixProfile};
pub use parse::VarTable;
pub use poly::{Monomial, Polynomial};
pub use weights::WeightSystem;

use crate::error::Result;

/// Σ e_i w_i for a monomial in `S(w)`.
pub fn weighted_degree(m: &Monomial, w: &WeightSystem) -> Result<u64> {
    m.weighted_degree(w.weights())
}

/// Common weighted degree of all terms, if any.
pub fn homogeneous_degree(f: &Polynomial, w: &WeightSystem) -> Result<Option<u64>> {
    f.homogeneous_degree(w.weights())
}

pub fn minors(m: &GradedMatrix, size: usize) -> Result<Ideal> {
    m.minors(size)
}

pub fn profile_of(m: &GradedMatrix) -> Result<MatrixProfile> {
    m.profile_of()
}
