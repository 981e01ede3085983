//! Local and global `A^1`-degrees of the Wronski map.

mod fiber;
mod global;
mod local;
mod sample;

use thiserror::Error;

use crate::grassmann::GrassmannError;
use crate::gwforms::GwError;
use crate::polyalg::PolyError;
use crate::scalars::{FieldSpec, ScalarError};
use crate::wronski::WronskiError;

pub use fiber::{fiber_enumerate, fiber_pencil_2x2, scan_size, DEFAULT_SCAN_BUDGET};
pub use global::{full_fiber_targets, global_degree, sample_global, GlobalDegreeReport};
pub use local::{
    adapt_basis, adapt_basis_with, constant_c, jacobian_at_zero, jacobian_det_at_zero, jacobian_sign, local_degree,
    local_degree_in_chart, matrix_b, matrix_b_wronskians, osculating_in_chart, LocalIndexReport,
};
pub use sample::{
    apolar_dual, canonical_targets, collect_instances, composition_instance, enumerate_instances, sample_instance, simple_instances,
    transport, SampleMode, DEFAULT_RATIONAL_BUDGET, RATIONAL_BOX,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DegreesError {
    #[error("chart is not centered at a fiber point (F(0) has entry {0})")]
    NotAZero(String),
    #[error("fiber point is not a simple zero; local degrees at non-simple zeros are not supported")]
    NonSimple,
    #[error("the scalars s_i are not pairwise distinct")]
    RepeatedScalars,
    #[error("(m+p-1)! = {0}! is not invertible in {1}")]
    CharacteristicTooSmall(usize, FieldSpec),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("scan needs more than the budget of {0} chart points")]
    BudgetExceeded(u64),
    #[error("no split instance for this field size")]
    NoSplitInstance,
    #[error(transparent)]
    Grassmann(#[from] GrassmannError),
    #[error(transparent)]
    Linalg(#[from] PolyError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Gw(#[from] GwError),
}

impl From<WronskiError> for DegreesError {
    fn from(e: WronskiError) -> Self {
        match e {
            WronskiError::RepeatedScalars => DegreesError::RepeatedScalars,
            WronskiError::CharacteristicTooSmall(n, f) => DegreesError::CharacteristicTooSmall(n, f),
            WronskiError::NotAZero(s) => DegreesError::NotAZero(s),
            WronskiError::Grassmann(g) => DegreesError::Grassmann(g),
            WronskiError::Linalg(l) => DegreesError::Linalg(l),
            other => DegreesError::Unsupported(other.to_string()),
        }
    }
}
