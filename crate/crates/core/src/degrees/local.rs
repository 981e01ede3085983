use serde::Serialize;

use crate::grassmann::{distinguished_multiindex, plucker, Chart, Subspace};
use crate::gwforms::GwClass;
use crate::polyalg::{vandermonde, Matrix, Poly};
use crate::scalars::{factorial_invertible, square_class, FieldSpec, Scalar};
use crate::wronski::{factorial_product, serialize_scalars, wronskian, LocalSection};

use super::DegreesError;

/// A chart centered at `w`: `e_{p+1..m+p}` are the rows of the echelon form of `w`
/// with pivots taken from the top degree down, and `e_{1..p}` are the monomials in
/// the non-pivot positions, in increasing degree.
pub fn adapt_basis(w: &Subspace) -> Result<Chart, DegreesError> {
    let m = w.plane_dim();
    let n = w.ambient_dim();
    let field = w.field();
    let (echelon, pivots_rev) = w.reflect().basis().rref();
    let rows: Vec<Poly> = (0..m)
        .rev()
        .map(|i| Poly::new(field, (0..n).map(|j| echelon.get(i, n - 1 - j).clone()).collect()))
        .collect();
    let pivots: Vec<usize> = pivots_rev.iter().map(|&c| n - 1 - c).collect();
    adapt_basis_with(w, (0..n).filter(|c| !pivots.contains(c)).map(|c| Poly::monomial(field.one(), c)).collect(), rows)
}

/// A chart centered at `w` with a caller-chosen complement `e_1..e_p` and spanning
/// polynomials `e_{p+1..m+p}` of `w`.
pub fn adapt_basis_with(w: &Subspace, complement: Vec<Poly>, span: Vec<Poly>) -> Result<Chart, DegreesError> {
    let m = w.plane_dim();
    let p = w.ambient_dim() - m;
    let field = w.field();
    if span.len() != m || !Subspace::from_polys(field, &span, m + p)?.same_space(w) {
        return Err(DegreesError::Unsupported("span polynomials do not span W".into()));
    }
    let mut basis = complement;
    basis.extend(span);
    Ok(Chart::new(field, m, p, basis)?)
}

/// `∏_{i<j}(s_j - s_i) · (∏_{i=1}^{m-1} i!)^{mp} · (-1)^{m(m-1)p/2}`.
pub fn constant_c(field: FieldSpec, m: usize, p: usize, s_list: &[Scalar]) -> Scalar {
    let mp = (m * p) as u64;
    vandermonde(field, s_list)
        * factorial_product(field, m).pow(mp)
        * Scalar::sign_power(field, (m * (m - 1) / 2 * p) as u64)
}

/// `(-1)^{m(m-1)p/2}`, the ratio between the Jacobian and `det 𝓑`.
pub fn jacobian_sign(field: FieldSpec, m: usize, p: usize) -> Scalar {
    Scalar::sign_power(field, (m * (m - 1) / 2 * p) as u64)
}

/// Determinant of `(∂F_ℓ/∂x_{γ,k})|_0` for a chart centered at a fiber point.
pub fn jacobian_det_at_zero(chart: &Chart, s_list: &[Scalar]) -> Result<Scalar, DegreesError> {
    Ok(jacobian_at_zero(chart, s_list)?.det()?)
}

/// The Jacobian matrix itself (rows `(γ,k)` γ-major, columns `ℓ`).
pub fn jacobian_at_zero(chart: &Chart, s_list: &[Scalar]) -> Result<Matrix<Scalar>, DegreesError> {
    let section = LocalSection::new(chart.clone(), s_list.to_vec())?;
    let zero = Matrix::zeros(chart.field(), chart.m(), chart.p());
    if let Some(v) = section.eval(&zero)?.iter().find(|v| !v.is_zero()) {
        return Err(DegreesError::NotAZero(v.to_string()));
    }
    Ok(section.jacobian(&zero)?)
}

/// `F_m(s)` in the cobasis dual to the chart basis: row `j` holds `e_r^{(j)}(s)`.
pub fn osculating_in_chart(chart: &Chart, s: &Scalar) -> Matrix<Scalar> {
    let derivs: Vec<Vec<Scalar>> = chart
        .basis()
        .iter()
        .map(|e| (0..chart.m()).map(|j| e.derivative(j).eval(s)).collect())
        .collect();
    Matrix::from_fn(chart.m(), chart.m() + chart.p(), |j, r| derivs[r][j].clone())
}

/// `𝓑`: row `(γ,k)` (γ-major), column `ℓ`, entry `z_{α(γ,k)}(F_m(s_ℓ))` with `F_m(s_ℓ)`
/// written in the chart's cobasis.
pub fn matrix_b(chart: &Chart, s_list: &[Scalar]) -> Result<Matrix<Scalar>, DegreesError> {
    let (m, p) = (chart.m(), chart.p());
    if s_list.len() != m * p {
        return Err(DegreesError::Unsupported(format!("need {} scalars, got {}", m * p, s_list.len())));
    }
    let flags = s_list
        .iter()
        .map(|s| Subspace::new(osculating_in_chart(chart, s)))
        .collect::<Result<Vec<_>, _>>()?;
    let mut rows = Vec::with_capacity(m * p);
    for gamma in 1..=m {
        for k in 1..=p {
            let alpha = distinguished_multiindex(gamma, k, m, p)?;
            rows.push(flags.iter().map(|f| plucker(f, &alpha)).collect::<Result<Vec<_>, _>>()?);
        }
    }
    Ok(Matrix::from_rows(rows)?)
}

/// The same entries computed as `Wr(e_k, e_{p+1}, …, ê_{p+γ}, …, e_{m+p})(s_ℓ)`.
pub fn matrix_b_wronskians(chart: &Chart, s_list: &[Scalar]) -> Result<Matrix<Scalar>, DegreesError> {
    let (m, p) = (chart.m(), chart.p());
    let e = chart.basis();
    let mut rows = Vec::with_capacity(m * p);
    for gamma in 1..=m {
        for k in 1..=p {
            let mut fs = vec![e[k - 1].clone()];
            fs.extend((1..=m).filter(|&i| i != gamma).map(|i| e[p + i - 1].clone()));
            let wr = wronskian(&fs);
            rows.push(s_list.iter().map(|s| wr.eval(s)).collect());
        }
    }
    Ok(Matrix::from_rows(rows)?)
}

/// Local index data at a simple fiber point.
#[derive(Clone, Debug, Serialize)]
pub struct LocalIndexReport {
    pub w: Subspace,
    #[serde(serialize_with = "serialize_scalars")]
    pub s_list: Vec<Scalar>,
    #[serde(serialize_with = "serialize_scalar")]
    pub jacobian_det: Scalar,
    #[serde(serialize_with = "serialize_scalar")]
    pub det_b: Scalar,
    #[serde(serialize_with = "serialize_scalar")]
    pub constant_c: Scalar,
    pub degree_direct: GwClass,
    pub degree_formula: GwClass,
    /// Square classes of the two degrees agree.
    pub agrees: bool,
    /// `jacobian_det = (-1)^{m(m-1)p/2} det 𝓑` exactly.
    pub scalar_identity: bool,
}

fn serialize_scalar<S: serde::Serializer>(v: &Scalar, ser: S) -> Result<S::Ok, S::Error> {
    ser.serialize_str(&v.to_bare_string())
}

/// Local degree of the Wronski map at `w` for the target `s_list`, computed directly
/// from the Jacobian and through `⟨C · det 𝓑⟩`, in the chart [`adapt_basis`].
pub fn local_degree(w: &Subspace, s_list: &[Scalar]) -> Result<LocalIndexReport, DegreesError> {
    local_degree_in_chart(&adapt_basis(w)?, s_list)
}

pub fn local_degree_in_chart(chart: &Chart, s_list: &[Scalar]) -> Result<LocalIndexReport, DegreesError> {
    let (field, m, p) = (chart.field(), chart.m(), chart.p());
    if !factorial_invertible((m + p - 1) as u64, field) {
        return Err(DegreesError::CharacteristicTooSmall(m + p - 1, field));
    }
    let w = crate::grassmann::chart_point(chart, &Matrix::zeros(field, m, p))?;
    let jacobian_det = jacobian_det_at_zero(chart, s_list)?;
    if jacobian_det.is_zero() {
        return Err(DegreesError::NonSimple);
    }
    let det_b = matrix_b(chart, s_list)?.det()?;
    let constant_c = constant_c(field, m, p, s_list);
    if constant_c.is_zero() {
        return Err(DegreesError::RepeatedScalars);
    }
    let mp = (m * p) as u64;
    let direct = vandermonde(field, s_list) * factorial_product(field, m).pow(mp) * &jacobian_det;
    let formula = &constant_c * &det_b;
    let scalar_identity = jacobian_det == jacobian_sign(field, m, p) * &det_b;
    let agrees = !formula.is_zero() && square_class(&direct)? == square_class(&formula)?;
    Ok(LocalIndexReport {
        w,
        s_list: s_list.to_vec(),
        degree_direct: GwClass::rank_one(direct)?,
        degree_formula: if formula.is_zero() { GwClass::zero(field) } else { GwClass::rank_one(formula)? },
        jacobian_det,
        det_b,
        constant_c,
        agrees,
        scalar_identity,
    })
}
