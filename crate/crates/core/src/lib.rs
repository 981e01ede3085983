//! Exact Wronski maps on `Gr(m, m+p)` and their `GW(k)`-valued degrees.
//!
//! Everything is computed exactly over `Q` or an odd prime field. The modules build
//! on each other in order: scalars, polynomials and matrices, Grassmannian points and
//! Plücker coordinates, the Wronskian and its local chart representation, quadratic
//! form classes, and finally local and global degrees.

pub mod degrees;
pub mod grassmann;
pub mod gwforms;
pub mod instance;
pub mod polyalg;
pub mod scalars;
pub mod tableaux;
pub mod wronski;


pub use polyalg::{Matrix, Poly};
pub use scalars::{FieldSpec, Scalar, SquareClass};
