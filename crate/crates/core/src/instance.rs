//! JSON instance files.
//!
//! ```json
//! {"field": "Fp:7", "m": 2, "p": 2,
//!  "basis": ["1", "t", "t^2", "t^3"],
//!  "x": [["1", "0"], ["3", "2"]],
//!  "s": ["1", "2", "4", "5"]}
//! ```
//!
//! `basis` defaults to the monomials, `x` to the chart center, and `s` may be omitted
//! by subcommands that compute it.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grassmann::{chart_point, Chart, GrassmannError, Subspace};
use crate::polyalg::{Matrix, Poly, PolyError};
use crate::scalars::{FieldSpec, Scalar, ScalarError};
use crate::wronski::{WronskiError, WronskiInstance};

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("malformed instance file: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Grassmann(#[from] GrassmannError),
    #[error(transparent)]
    Wronski(#[from] WronskiError),
    #[error("instance file is missing `{0}`")]
    Missing(&'static str),
    #[error("instance file has m = {m}, p = {p}; {what}")]
    Shape { m: usize, p: usize, what: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub field: String,
    pub m: usize,
    pub p: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<String>>,
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self, InstanceError> {
        let file: InstanceFile = serde_json::from_str(text)?;
        if file.m == 0 || file.p == 0 {
            return Err(InstanceError::Shape { m: file.m, p: file.p, what: "both must be positive".into() });
        }
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    pub fn field_spec(&self) -> Result<FieldSpec, InstanceError> {
        Ok(self.field.parse()?)
    }

    pub fn chart(&self) -> Result<Chart, InstanceError> {
        let field = self.field_spec()?;
        match &self.basis {
            None => Ok(Chart::standard(field, self.m, self.p)),
            Some(polys) => {
                let basis = polys.iter().map(|t| Poly::parse_in(field, t)).collect::<Result<Vec<_>, _>>()?;
                Ok(Chart::new(field, self.m, self.p, basis)?)
            }
        }
    }

    pub fn x_matrix(&self) -> Result<Matrix<Scalar>, InstanceError> {
        let field = self.field_spec()?;
        let Some(rows) = &self.x else {
            return Ok(Matrix::zeros(field, self.m, self.p));
        };
        if rows.len() != self.m || rows.iter().any(|r| r.len() != self.p) {
            return Err(InstanceError::Shape { m: self.m, p: self.p, what: "x must be an m x p matrix".into() });
        }
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|v| Scalar::parse_in(field, v)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix::from_rows(parsed)?)
    }

    pub fn s_list(&self) -> Result<Option<Vec<Scalar>>, InstanceError> {
        let field = self.field_spec()?;
        self.s
            .as_ref()
            .map(|s| s.iter().map(|v| Scalar::parse_in(field, v)).collect::<Result<Vec<_>, _>>())
            .transpose()
            .map_err(InstanceError::from)
    }

    /// The plane `W = chart_point(chart, x)`.
    pub fn subspace(&self) -> Result<Subspace, InstanceError> {
        Ok(chart_point(&self.chart()?, &self.x_matrix()?)?)
    }

    /// A complete, validated instance; requires `s`.
    pub fn to_instance(&self) -> Result<WronskiInstance, InstanceError> {
        let s = self.s_list()?.ok_or(InstanceError::Missing("s"))?;
        Ok(WronskiInstance::new(self.chart()?, s, self.subspace()?)?)
    }

    pub fn from_instance(inst: &WronskiInstance) -> Result<Self, InstanceError> {
        let x = inst.chart.coordinates(&inst.w)?;
        Ok(InstanceFile {
            field: inst.field.to_string(),
            m: inst.m,
            p: inst.p,
            basis: Some(inst.chart.basis().iter().map(Poly::to_string).collect()),
            x: Some(x.row_vecs().iter().map(|r| r.iter().map(Scalar::to_bare_string).collect()).collect()),
            s: Some(inst.s_list.iter().map(Scalar::to_bare_string).collect()),
        })
    }
}
