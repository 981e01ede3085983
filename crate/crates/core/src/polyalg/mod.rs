//! Dense univariate polynomials, matrices over scalars and polynomials, and root
//! extraction for split squarefree polynomials.

mod matrix;
mod poly;
mod roots;

use thiserror::Error;

pub use matrix::{vandermonde, Matrix, RingElement};
pub use poly::Poly;
pub use roots::{roots_in_field, split_distinct_roots};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("division leaves a remainder")]
    InexactDivision,
    #[error("cannot parse polynomial `{0}`")]
    Parse(String),
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular")]
    Singular,
}
