//! The Wronskian, its `Γ(s)` form, the section `σ`, and the chart-local
//! representation `F = (F_1, …, F_{mp})` together with the affine maps it factors
//! through on the big cell.

use serde::Serialize;
use thiserror::Error;

use crate::grassmann::{chart_point, gamma_derivative, Chart, GrassmannError, Subspace};
use crate::polyalg::{vandermonde, Matrix, Poly, PolyError};
use crate::scalars::{factorial_invertible, FieldSpec, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WronskiError {
    #[error("expected {expected} values, got {got}")]
    Length { expected: usize, got: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("(m+p-1)! = {0}! is not invertible in {1}")]
    CharacteristicTooSmall(usize, FieldSpec),
    #[error("the scalars s_i are not pairwise distinct")]
    RepeatedScalars,
    #[error("W is not in the big cell")]
    NotInBigCell,
    #[error("W is not a zero of the section (Wr(W)({0}) != 0)")]
    NotAZero(String),
    #[error(transparent)]
    Grassmann(#[from] GrassmannError),
    #[error(transparent)]
    Linalg(#[from] PolyError),
}

/// `∏_{i=1}^{m-1} i!`, the top Wronski coefficient on the standard chart.
pub fn factorial_product(field: FieldSpec, m: usize) -> Scalar {
    (1..m).fold(field.one(), |acc, i| acc * Scalar::factorial(field, i as u64))
}

/// `det[f_j^{(i-1)}]` for `i, j = 1..m`.
pub fn wronskian(fs: &[Poly]) -> Poly {
    assert!(!fs.is_empty(), "Wronskian of an empty family");
    let m = fs.len();
    let derivs: Vec<Vec<Poly>> = fs.iter().map(|f| (0..m).map(|i| f.derivative(i)).collect()).collect();
    Matrix::from_fn(m, m, |i, j| derivs[j][i].clone())
        .det()
        .expect("square")
}

/// Wronskian of the generators of `w` (defined up to the scale of the spanning matrix).
pub fn wronskian_of(w: &Subspace) -> Poly {
    wronskian(&w.polys())
}

/// The `(m+p) × m` matrix whose `j`-th column holds the coefficients of
/// `γ^{(j-1)}(s)`; entry `(r, j)` (0-based) is `r!/(r-j)! · s^{r-j}`.
pub fn gamma_matrix(s: &Scalar, m: usize, p: usize) -> Matrix<Scalar> {
    let cols: Vec<Vec<Scalar>> = (0..m).map(|j| gamma_derivative(s, j, m + p)).collect();
    Matrix::from_fn(m + p, m, |r, j| cols[j][r].clone())
}

/// `det(M · Γ(s))` for an `m × (m+p)` coefficient matrix `M`.
pub fn wr_via_gamma(coeffs: &Matrix<Scalar>, s: &Scalar) -> Result<Scalar, WronskiError> {
    let m = coeffs.rows();
    if m == 0 || coeffs.cols() < m {
        return Err(WronskiError::Dimension(format!("{}x{} coefficient matrix", m, coeffs.cols())));
    }
    let gamma = gamma_matrix(s, m, coeffs.cols() - m);
    Ok(coeffs.mul(&gamma)?.det()?)
}

/// Whether `deg Wr(W) = mp`.
pub fn in_big_cell(w: &Subspace) -> bool {
    let m = w.plane_dim();
    let p = w.ambient_dim() - m;
    wronskian_of(w).degree() == Some(m * p)
}

/// `Wr(W)(s_ℓ)` for every `ℓ`.
pub fn section_values(w: &Subspace, s_list: &[Scalar]) -> Vec<Scalar> {
    let wr = wronskian_of(w);
    s_list.iter().map(|s| wr.eval(s)).collect()
}

/// `F_ℓ(x) = Wr(ẽ_{p+1}(x), …, ẽ_{m+p}(x))(s_ℓ)` on a chart.
#[derive(Clone, Debug)]
pub struct LocalSection {
    chart: Chart,
    s_list: Vec<Scalar>,
}

impl LocalSection {
    pub fn new(chart: Chart, s_list: Vec<Scalar>) -> Result<Self, WronskiError> {
        let mp = chart.m() * chart.p();
        if s_list.len() != mp {
            return Err(WronskiError::Length { expected: mp, got: s_list.len() });
        }
        Ok(LocalSection { chart, s_list })
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn s_list(&self) -> &[Scalar] {
        &self.s_list
    }

    pub fn eval(&self, x: &Matrix<Scalar>) -> Result<Vec<Scalar>, WronskiError> {
        let wr = wronskian(&self.chart.moving_basis(x)?);
        Ok(self.s_list.iter().map(|s| wr.eval(s)).collect())
    }

    /// `∂F_ℓ/∂x_{γ,k}` at `x`, by substituting `x_{γ,k} ↦ x_{γ,k} + ε`, expanding the
    /// `m × m` derivative matrix at `s_ℓ` as a polynomial in `ε`, and reading off the
    /// linear coefficient. `gamma` and `k` are 1-based.
    pub fn partial(&self, x: &Matrix<Scalar>, gamma: usize, k: usize, ell: usize) -> Result<Scalar, WronskiError> {
        let (m, p) = (self.chart.m(), self.chart.p());
        if !(1..=m).contains(&gamma) || !(1..=p).contains(&k) || !(1..=m * p).contains(&ell) {
            return Err(WronskiError::Dimension(format!("partial index ({gamma},{k};{ell})")));
        }
        let field = self.chart.field();
        let s = &self.s_list[ell - 1];
        let moving = self.chart.moving_basis(x)?;
        let e_k = &self.chart.basis()[k - 1];
        // Entry (i, j) = ẽ_j^{(i)}(s) + ε·[j = γ]·e_k^{(i)}(s), a polynomial in ε.
        let mat = Matrix::from_fn(m, m, |i, j| {
            let base = moving[j].derivative(i).eval(s);
            let slope = if j + 1 == gamma { e_k.derivative(i).eval(s) } else { field.zero() };
            Poly::new(field, vec![base, slope])
        });
        Ok(mat.det()?.coeff(1))
    }

    /// The `mp × mp` Jacobian at `x`; row `(γ,k)` in γ-major order, column `ℓ`.
    pub fn jacobian(&self, x: &Matrix<Scalar>) -> Result<Matrix<Scalar>, WronskiError> {
        let (m, p) = (self.chart.m(), self.chart.p());
        let mut rows = Vec::with_capacity(m * p);
        for gamma in 1..=m {
            for k in 1..=p {
                rows.push(
                    (1..=m * p)
                        .map(|ell| self.partial(x, gamma, k, ell))
                        .collect::<Result<Vec<_>, _>>()?,
                );
            }
        }
        Ok(Matrix::from_rows(rows)?)
    }

    /// The monic-normalized affine Wronski map `U → A^{mp}`: the coefficients
    /// `h_0, …, h_{mp-1}` of `Wr(ẽ(x)) / h_{mp}`. Requires a monic chart.
    pub fn wronski_affine(&self, x: &Matrix<Scalar>) -> Result<Vec<Scalar>, WronskiError> {
        self.chart.require_monic()?;
        let (m, p) = (self.chart.m(), self.chart.p());
        let wr = wronskian(&self.chart.moving_basis(x)?);
        let top = wr.coeff(m * p);
        debug_assert_eq!(top, factorial_product(self.chart.field(), m));
        let inv = top.inv().ok_or(WronskiError::NotInBigCell)?;
        Ok((0..m * p).map(|i| wr.coeff(i) * &inv).collect())
    }

    /// `tr_s ∘ ev_s ∘ V_{m,p} ∘ Wr|_U` evaluated at `x`.
    pub fn diagram_composite(&self, x: &Matrix<Scalar>) -> Result<Vec<Scalar>, WronskiError> {
        let (m, p) = (self.chart.m(), self.chart.p());
        let a = self.wronski_affine(x)?;
        let v = scale_map_v(self.chart.field(), m, p, &a)?;
        let e = ev_map(&self.s_list, &v)?;
        tr_map(&self.s_list, m, p, &e)
    }
}

fn check_len(expected: usize, got: usize) -> Result<(), WronskiError> {
    if expected != got {
        return Err(WronskiError::Length { expected, got });
    }
    Ok(())
}

/// `V_{m,p}`: multiply every coordinate by `∏_{i=1}^{m-1} i!`.
pub fn scale_map_v(field: FieldSpec, m: usize, p: usize, v: &[Scalar]) -> Result<Vec<Scalar>, WronskiError> {
    check_len(m * p, v.len())?;
    let c = factorial_product(field, m);
    Ok(v.iter().map(|a| a * &c).collect())
}

/// `ev_s`: the coefficients `a_0..a_{mp-1}` of a polynomial of degree below `mp` to
/// its values at `s_1..s_{mp}`.
pub fn ev_map(s_list: &[Scalar], coeffs: &[Scalar]) -> Result<Vec<Scalar>, WronskiError> {
    check_len(s_list.len(), coeffs.len())?;
    let Some(first) = coeffs.first() else {
        return Ok(Vec::new());
    };
    let f = Poly::new(first.field(), coeffs.to_vec());
    Ok(s_list.iter().map(|s| f.eval(s)).collect())
}

/// `tr_s`: add `∏ i! · s_ℓ^{mp}` to the `ℓ`-th coordinate.
pub fn tr_map(s_list: &[Scalar], m: usize, p: usize, v: &[Scalar]) -> Result<Vec<Scalar>, WronskiError> {
    check_len(m * p, v.len())?;
    check_len(m * p, s_list.len())?;
    let Some(first) = s_list.first() else {
        return Ok(Vec::new());
    };
    let c = factorial_product(first.field(), m);
    Ok(v.iter()
        .zip(s_list)
        .map(|(a, s)| a + &(&c * &s.pow((m * p) as u64)))
        .collect())
}

/// Jacobian of `ev_s`: entry `(i, j)` is `∂ev_j/∂a_{i-1} = s_j^{i-1}`.
pub fn ev_jacobian(s_list: &[Scalar]) -> Matrix<Scalar> {
    let n = s_list.len();
    Matrix::from_fn(n, n, |i, j| s_list[j].pow(i as u64))
}

/// A fiber point of the section for a fixed target `s_1, …, s_{mp}`.
#[derive(Clone, Debug, Serialize)]
pub struct WronskiInstance {
    pub field: FieldSpec,
    pub m: usize,
    pub p: usize,
    #[serde(serialize_with = "serialize_chart")]
    pub chart: Chart,
    #[serde(serialize_with = "serialize_scalars")]
    pub s_list: Vec<Scalar>,
    pub w: Subspace,
}

fn serialize_chart<S: serde::Serializer>(chart: &Chart, ser: S) -> Result<S::Ok, S::Error> {
    ser.collect_seq(chart.basis().iter().map(Poly::to_string))
}

pub(crate) fn serialize_scalars<S: serde::Serializer>(v: &[Scalar], ser: S) -> Result<S::Ok, S::Error> {
    ser.collect_seq(v.iter().map(Scalar::to_bare_string))
}

impl WronskiInstance {
    /// Validates the hypotheses: `(m+p-1)!` invertible, distinct `s_i`, `W` in the big
    /// cell and a zero of the section.
    pub fn new(chart: Chart, s_list: Vec<Scalar>, w: Subspace) -> Result<Self, WronskiError> {
        let (field, m, p) = (chart.field(), chart.m(), chart.p());
        if !factorial_invertible((m + p - 1) as u64, field) {
            return Err(WronskiError::CharacteristicTooSmall(m + p - 1, field));
        }
        check_len(m * p, s_list.len())?;
        if vandermonde(field, &s_list).is_zero() {
            return Err(WronskiError::RepeatedScalars);
        }
        if w.plane_dim() != m || w.ambient_dim() != m + p {
            return Err(WronskiError::Dimension(format!("W is not a {m}-plane in k^{}", m + p)));
        }
        if !in_big_cell(&w) {
            return Err(WronskiError::NotInBigCell);
        }
        let wr = wronskian_of(&w);
        if let Some(s) = s_list.iter().find(|s| !wr.eval(s).is_zero()) {
            return Err(WronskiError::NotAZero(s.to_string()));
        }
        Ok(WronskiInstance { field, m, p, chart, s_list, w })
    }

    /// Instance at the chart point `x` of the standard chart.
    pub fn at_standard_point(field: FieldSpec, m: usize, p: usize, x: &Matrix<Scalar>, s_list: Vec<Scalar>) -> Result<Self, WronskiError> {
        let chart = Chart::standard(field, m, p);
        let w = chart_point(&chart, x)?;
        WronskiInstance::new(chart, s_list, w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rational;

    fn mono(k: usize) -> Poly {
        Poly::monomial(Q.one(), k)
    }

    #[test]
    fn wronskian_examples() {
        assert_eq!(wronskian(&[mono(0), mono(1)]), Poly::one(Q));
        assert_eq!(wronskian(&[mono(2), mono(3)]), mono(4));
        assert_eq!(wronskian(&[mono(1), mono(2), mono(3)]), Poly::monomial(Scalar::from_int(Q, 2), 3));
        assert!(wronskian(&[mono(2), mono(2).scale(&Scalar::from_int(Q, 5))]).is_zero());
    }

    #[test]
    fn gamma_form() {
        let s0 = Q.zero();
        let g = gamma_matrix(&s0, 3, 2);
        for r in 0..5 {
            for j in 0..3 {
                let expect = if r == j { Scalar::factorial(Q, j as u64) } else { Q.zero() };
                assert_eq!(g.get(r, j), &expect);
            }
        }
        let s = Scalar::from_int(Q, 3);
        let g = gamma_matrix(&s, 2, 2);
        assert_eq!(g.column(0), vec![Q.one(), s.clone(), s.pow(2), s.pow(3)]);

        let center = Matrix::from_int_rows(Q, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert!(wr_via_gamma(&center, &s0).unwrap().is_zero());
        let f = Matrix::from_int_rows(Q, &[&[1, 2, 0, 5]]);
        assert_eq!(wr_via_gamma(&f, &s).unwrap(), Poly::from_ints(Q, &[1, 2, 0, 5]).eval(&s));
    }

    #[test]
    fn big_cell() {
        let center = Subspace::from_polys(Q, &[mono(2), mono(3)], 4).unwrap();
        assert!(in_big_cell(&center));
        let low = Subspace::from_polys(Q, &[mono(0), mono(1)], 4).unwrap();
        assert!(!in_big_cell(&low));
    }

    #[test]
    fn section_at_center() {
        let center = Subspace::from_polys(Q, &[mono(1), mono(2), mono(3)], 4).unwrap();
        let s: Vec<Scalar> = (1..=3).map(|v| Scalar::from_int(Q, v)).collect();
        let vals = section_values(&center, &s);
        for (v, si) in vals.iter().zip(&s) {
            assert_eq!(v, &(Scalar::from_int(Q, 2) * si.pow(3)));
        }
    }

    #[test]
    fn affine_maps() {
        assert_eq!(factorial_product(Q, 2), Q.one());
        assert_eq!(factorial_product(Q, 4), Scalar::from_int(Q, 12));
        let v: Vec<Scalar> = (1..=4).map(|i| Scalar::from_int(Q, i)).collect();
        assert_eq!(scale_map_v(Q, 2, 2, &v).unwrap(), v);
        let s: Vec<Scalar> = [0, 2, 5, 7].iter().map(|&i| Scalar::from_int(Q, i)).collect();
        assert_eq!(ev_map(&s, &v).unwrap()[0], v[0]);
        assert_eq!(ev_jacobian(&s).det().unwrap(), vandermonde(Q, &s));
        assert!(tr_map(&s, 2, 3, &v).is_err());
    }

    #[test]
    fn epsilon_partials_are_row_replacements() {
        let chart = Chart::standard(Q, 2, 2);
        let s: Vec<Scalar> = [1, 2, 3, 4].iter().map(|&i| Scalar::from_int(Q, i)).collect();
        let sec = LocalSection::new(chart.clone(), s.clone()).unwrap();
        let x = Matrix::from_int_rows(Q, &[&[1, -2], &[3, 0]]);
        let moving = chart.moving_basis(&x).unwrap();
        for gamma in 1..=2 {
            for k in 1..=2 {
                let mut rows = moving.clone();
                rows[gamma - 1] = chart.basis()[k - 1].clone();
                let wr = wronskian(&rows);
                for ell in 1..=4 {
                    assert_eq!(sec.partial(&x, gamma, k, ell).unwrap(), wr.eval(&s[ell - 1]));
                }
            }
        }
    }
}
