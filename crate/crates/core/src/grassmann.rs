//! Points of `Gr(m, m+p)` inside `k_{m+p-1}[t]`, moving-basis charts, Plücker
//! coordinates, the two osculating flags of the rational normal curve, and Grassmann
//! duality.
//!
//! Vectors are coefficient rows in the monomial basis `1, t, …, t^{m+p-1}`. Covectors
//! use the same coordinates through the monomial dot product, so a covector plane is
//! also just a [`Subspace`]. All multiindices are 1-based.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polyalg::{Matrix, Poly, PolyError};
use crate::scalars::{FieldSpec, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrassmannError {
    #[error("multiindex {entries:?} is not strictly increasing within 1..={bound}")]
    BadMultiIndex { entries: Vec<usize>, bound: usize },
    #[error("multiindex of length {got} used where length {expected} is required")]
    IndexLength { expected: usize, got: usize },
    #[error("spanning matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("ambient dimensions differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("chart coordinates must be {m}x{p}")]
    Shape { m: usize, p: usize },
    #[error("base basis is not a basis of k_{{{0}}}[t]")]
    NotABasis(usize),
    #[error("e_{0} is not monic of degree {1}")]
    NotMonic(usize, usize),
    #[error("subspace is not in the chart (distinguished minor vanishes)")]
    NotInChart,
    #[error("index ({0}, {1}) out of range")]
    Range(usize, usize),
    #[error(transparent)]
    Linalg(#[from] PolyError),
}

/// A strictly increasing sequence of indices in `1..=bound`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    pub fn new(entries: Vec<usize>, bound: usize) -> Result<Self, GrassmannError> {
        let ok = entries.windows(2).all(|w| w[0] < w[1])
            && entries.first().map_or(true, |&a| a >= 1)
            && entries.last().map_or(true, |&b| b <= bound);
        if !ok {
            return Err(GrassmannError::BadMultiIndex { entries, bound });
        }
        Ok(MultiIndex(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// 0-based column positions.
    pub fn columns(&self) -> Vec<usize> {
        self.0.iter().map(|a| a - 1).collect()
    }

    /// The complementary indices in `1..=n`.
    pub fn complement(&self, n: usize) -> MultiIndex {
        MultiIndex((1..=n).filter(|i| !self.0.contains(i)).collect())
    }

    /// All `k`-subsets of `1..=n` in lexicographic order.
    pub fn all(n: usize, k: usize) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(k);
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
            if cur.len() == k {
                out.push(MultiIndex(cur.clone()));
                return;
            }
            for i in start..=n {
                if n - i + 1 < k - cur.len() {
                    break;
                }
                cur.push(i);
                rec(i + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(1, n, k, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `α* = sorted(m+p+1 - α^c)` for `α` of length `m`.
pub fn dual_multiindex(alpha: &MultiIndex, m: usize, p: usize) -> Result<MultiIndex, GrassmannError> {
    if alpha.len() != m {
        return Err(GrassmannError::IndexLength { expected: m, got: alpha.len() });
    }
    let n = m + p;
    let mut entries: Vec<usize> = alpha.complement(n).0.iter().map(|c| n + 1 - c).collect();
    entries.sort_unstable();
    MultiIndex::new(entries, n)
}

/// `α(γ,k) = (k, p+1, …, p+m)` with `p+γ` removed.
pub fn distinguished_multiindex(gamma: usize, k: usize, m: usize, p: usize) -> Result<MultiIndex, GrassmannError> {
    if !(1..=m).contains(&gamma) || !(1..=p).contains(&k) {
        return Err(GrassmannError::Range(gamma, k));
    }
    let mut entries = vec![k];
    entries.extend((p + 1..=p + m).filter(|&c| c != p + gamma));
    MultiIndex::new(entries, m + p)
}

/// A subspace of `k^n` given by a full-rank spanning matrix (one row per generator).
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    basis: Matrix<Scalar>,
}

impl Subspace {
    /// Requires at least one generator and full row rank.
    pub fn new(basis: Matrix<Scalar>) -> Result<Self, GrassmannError> {
        if basis.rows() == 0 || basis.cols() == 0 {
            return Err(GrassmannError::RankDeficient { rank: 0, expected: basis.rows().max(1) });
        }
        let rank = basis.rank();
        if rank != basis.rows() {
            return Err(GrassmannError::RankDeficient { rank, expected: basis.rows() });
        }
        Ok(Subspace { basis })
    }

    /// Span of polynomials of degree below `ambient`.
    pub fn from_polys(field: FieldSpec, polys: &[Poly], ambient: usize) -> Result<Self, GrassmannError> {
        let rows: Vec<Vec<Scalar>> = polys
            .iter()
            .map(|f| {
                if f.degree().is_some_and(|d| d >= ambient) {
                    Err(GrassmannError::AmbientMismatch(f.degree().unwrap_or(0) + 1, ambient))
                } else {
                    Ok(f.coeff_vector(ambient))
                }
            })
            .collect::<Result<_, _>>()?;
        if rows.is_empty() {
            return Err(GrassmannError::RankDeficient { rank: 0, expected: 1 });
        }
        let sub = Subspace::new(Matrix::from_rows(rows)?)?;
        debug_assert_eq!(sub.field(), field);
        Ok(sub)
    }

    /// The whole space `k^n`.
    pub fn full(field: FieldSpec, n: usize) -> Self {
        Subspace { basis: Matrix::identity(field, n) }
    }

    pub fn basis(&self) -> &Matrix<Scalar> {
        &self.basis
    }

    pub fn plane_dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.get(0, 0).field()
    }

    /// Generators as polynomials.
    pub fn polys(&self) -> Vec<Poly> {
        let field = self.field();
        (0..self.plane_dim())
            .map(|i| Poly::new(field, self.basis.row(i).to_vec()))
            .collect()
    }

    /// Same row space (possibly different spanning matrices).
    pub fn same_space(&self, other: &Subspace) -> bool {
        self.ambient_dim() == other.ambient_dim()
            && self.plane_dim() == other.plane_dim()
            && self.basis.vstack(&other.basis).map(|s| s.rank()) == Ok(self.plane_dim())
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let row = Matrix::from_rows(vec![v.to_vec()]).expect("one row");
        self.basis.vstack(&row).map(|s| s.rank()) == Ok(self.plane_dim())
    }

    /// Canonical spanning matrix: reduced row echelon form.
    pub fn rref(&self) -> Subspace {
        Subspace { basis: self.basis.rref().0 }
    }

    /// Image under the coordinate reversal `e_i ↦ e_{n+1-i}` (`t^r ↦ t^{n-1-r}`).
    pub fn reflect(&self) -> Subspace {
        let n = self.ambient_dim();
        Subspace { basis: Matrix::from_fn(self.plane_dim(), n, |i, j| self.basis.get(i, n - 1 - j).clone()) }
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace{}", self.basis)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let polys: Vec<String> = self.polys().iter().map(Poly::to_string).collect();
        write!(f, "span{{{}}}", polys.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
struct SubspaceRecord {
    field: FieldSpec,
    ambient: usize,
    rows: Vec<Vec<String>>,
}

impl Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SubspaceRecord {
            field: self.field(),
            ambient: self.ambient_dim(),
            rows: self
                .basis
                .row_vecs()
                .iter()
                .map(|r| r.iter().map(Scalar::to_bare_string).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Subspace {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let rec = SubspaceRecord::deserialize(deserializer)?;
        let rows = rec
            .rows
            .iter()
            .map(|r| {
                if r.len() != rec.ambient {
                    return Err(D::Error::custom("row length differs from ambient dimension"));
                }
                r.iter()
                    .map(|s| Scalar::parse_in(rec.field, s).map_err(D::Error::custom))
                    .collect()
            })
            .collect::<Result<Vec<Vec<Scalar>>, _>>()?;
        let basis = Matrix::from_rows(rows).map_err(D::Error::custom)?;
        Subspace::new(basis).map_err(D::Error::custom)
    }
}

/// `z_α(W)`: the minor of the spanning matrix on the columns `α`.
pub fn plucker(w: &Subspace, alpha: &MultiIndex) -> Result<Scalar, GrassmannError> {
    if alpha.len() != w.plane_dim() {
        return Err(GrassmannError::IndexLength { expected: w.plane_dim(), got: alpha.len() });
    }
    if alpha.entries().last().is_some_and(|&a| a > w.ambient_dim()) {
        return Err(GrassmannError::BadMultiIndex { entries: alpha.0.clone(), bound: w.ambient_dim() });
    }
    Ok(w.basis.select_columns(&alpha.columns()).det()?)
}

/// All Plücker coordinates in lexicographic order of `α`.
pub fn plucker_vector(w: &Subspace) -> Vec<Scalar> {
    MultiIndex::all(w.ambient_dim(), w.plane_dim())
        .iter()
        .map(|a| plucker(w, a).expect("index in range"))
        .collect()
}

/// Projective equality of two coordinate vectors: both nonzero and all 2x2
/// cross-products agree.
pub fn proportional(a: &[Scalar], b: &[Scalar]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let Some(k) = a.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    if b[k].is_zero() {
        return false;
    }
    a.iter().zip(b).all(|(ai, bi)| &a[k] * bi == &b[k] * ai)
}

/// A moving-basis chart: base polynomials `e_1, …, e_{m+p}` and the affine cell
/// `x ↦ span{e_{p+i} + Σ_j x_{ij} e_j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    field: FieldSpec,
    m: usize,
    p: usize,
    basis: Vec<Poly>,
    /// Row `r` holds the monomial coefficients of `e_{r+1}`.
    change: Matrix<Scalar>,
}

impl Chart {
    pub fn new(field: FieldSpec, m: usize, p: usize, basis: Vec<Poly>) -> Result<Self, GrassmannError> {
        let n = m + p;
        if basis.len() != n || basis.iter().any(|e| e.degree().is_some_and(|d| d >= n)) {
            return Err(GrassmannError::NotABasis(n - 1));
        }
        let change = Matrix::from_rows(basis.iter().map(|e| e.coeff_vector(n)).collect())?;
        if change.rank() != n {
            return Err(GrassmannError::NotABasis(n - 1));
        }
        Ok(Chart { field, m, p, basis, change })
    }

    /// The monomial basis; its center is `span{t^p, …, t^{m+p-1}}` (the big cell).
    pub fn standard(field: FieldSpec, m: usize, p: usize) -> Self {
        let basis = (0..m + p).map(|r| Poly::monomial(field.one(), r)).collect();
        Chart::new(field, m, p, basis).expect("monomials form a basis")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    pub fn change_matrix(&self) -> &Matrix<Scalar> {
        &self.change
    }

    /// Checks that `e_{p+i}` is monic of degree `p+i-1`, the normalization under which
    /// the top Wronski coefficient is `∏ i!` on the whole chart.
    pub fn require_monic(&self) -> Result<(), GrassmannError> {
        for i in 1..=self.m {
            let e = &self.basis[self.p + i - 1];
            if e.degree() != Some(self.p + i - 1) || !e.leading_coeff().is_one() {
                return Err(GrassmannError::NotMonic(self.p + i, self.p + i - 1));
            }
        }
        Ok(())
    }

    fn check_shape(&self, x: &Matrix<Scalar>) -> Result<(), GrassmannError> {
        if x.rows() != self.m || x.cols() != self.p {
            return Err(GrassmannError::Shape { m: self.m, p: self.p });
        }
        Ok(())
    }

    /// `ẽ_{p+i}(x) = e_{p+i} + Σ_j x_{ij} e_j` for `i = 1..m`.
    pub fn moving_basis(&self, x: &Matrix<Scalar>) -> Result<Vec<Poly>, GrassmannError> {
        self.check_shape(x)?;
        Ok((0..self.m)
            .map(|i| {
                (0..self.p).fold(self.basis[self.p + i].clone(), |acc, j| {
                    &acc + &self.basis[j].scale(x.get(i, j))
                })
            })
            .collect())
    }

    /// Coordinates of `w` in this chart, i.e. the unique `x` with
    /// `chart_point(x) = w`.
    pub fn coordinates(&self, w: &Subspace) -> Result<Matrix<Scalar>, GrassmannError> {
        if w.ambient_dim() != self.m + self.p || w.plane_dim() != self.m {
            return Err(GrassmannError::AmbientMismatch(w.ambient_dim(), self.m + self.p));
        }
        let local = w.basis.mul(&self.change.inverse()?)?;
        let right: Vec<usize> = (self.p..self.p + self.m).collect();
        let left: Vec<usize> = (0..self.p).collect();
        let r_inv = local
            .select_columns(&right)
            .inverse()
            .map_err(|_| GrassmannError::NotInChart)?;
        Ok(r_inv.mul(&local.select_columns(&left))?)
    }

    /// `w` written in the chart's base basis (rows are `e`-coordinates).
    pub fn local_subspace(&self, w: &Subspace) -> Result<Subspace, GrassmannError> {
        Subspace::new(w.basis.mul(&self.change.inverse()?)?)
    }
}

/// `RowSpace([x | I_m])` in the chart basis, returned in monomial coordinates.
pub fn chart_point(chart: &Chart, x: &Matrix<Scalar>) -> Result<Subspace, GrassmannError> {
    let polys = chart.moving_basis(x)?;
    Subspace::from_polys(chart.field, &polys, chart.m + chart.p)
}

/// `x_{ij}` recovered from Plücker coordinates taken in the chart basis:
/// `x_{ij} = (-1)^{i-1} z_{α(i,j)} / z_{(p+1,…,p+m)}`.
///
/// The ratio makes the answer independent of the spanning matrix; when that matrix
/// is normalized to `[x | I]` the denominator is 1.
pub fn xij_from_plucker(chart: &Chart, w: &Subspace, i: usize, j: usize) -> Result<Scalar, GrassmannError> {
    let (m, p) = (chart.m, chart.p);
    let local = chart.local_subspace(w)?;
    let top = MultiIndex::new((p + 1..=p + m).collect(), m + p)?;
    let denom = plucker(&local, &top)?;
    if denom.is_zero() {
        return Err(GrassmannError::NotInChart);
    }
    let alpha = distinguished_multiindex(i, j, m, p)?;
    let sign = Scalar::sign_power(chart.field, (i - 1) as u64);
    Ok(sign * plucker(&local, &alpha)? / denom)
}

/// Coefficient row of `γ^{(j)}(s) = Σ_{r≥j} r!/(r-j)! s^{r-j} t^r` in `k_{n-1}[t]`.
pub fn gamma_derivative(s: &Scalar, j: usize, n: usize) -> Vec<Scalar> {
    let field = s.field();
    (0..n)
        .map(|r| {
            if r < j {
                field.zero()
            } else {
                let falling = (r - j + 1..=r).fold(field.one(), |acc, k| acc * Scalar::from_int(field, k as i64));
                falling * s.pow((r - j) as u64)
            }
        })
        .collect()
}

/// `F_i(s) = span{γ(s), γ'(s), …, γ^{(i-1)}(s)}`.
pub fn osculating_f(s: &Scalar, i: usize, m: usize, p: usize) -> Result<Subspace, GrassmannError> {
    let n = m + p;
    if !(1..=n).contains(&i) {
        return Err(GrassmannError::Range(i, n));
    }
    let rows = (0..i).map(|j| gamma_derivative(s, j, n)).collect();
    Subspace::new(Matrix::from_rows(rows)?)
}

/// `E_i(s) = span{(t-s)^{m+p-1}, …, (t-s)^{m+p-i}}`, the polynomials vanishing to
/// order at least `m+p-i` at `s`.
pub fn flag_e(s: &Scalar, i: usize, m: usize, p: usize) -> Result<Subspace, GrassmannError> {
    let n = m + p;
    if !(1..=n).contains(&i) {
        return Err(GrassmannError::Range(i, n));
    }
    let lin = Poly::linear_root(s);
    let mut power = Poly::one(s.field());
    let mut all = Vec::with_capacity(n);
    for _ in 0..n {
        all.push(power.clone());
        power = &power * &lin;
    }
    let gens: Vec<Poly> = (n - i..n).rev().map(|e| all[e].clone()).collect();
    Subspace::from_polys(s.field(), &gens, n)
}

/// The vectors killed by every covector of `wstar` under the monomial dot product.
pub fn annihilator(wstar: &Subspace) -> Result<Subspace, GrassmannError> {
    let ns = wstar.basis.nullspace(wstar.field());
    if ns.rows() == 0 {
        return Err(GrassmannError::RankDeficient { rank: wstar.plane_dim(), expected: 0 });
    }
    Subspace::new(ns)
}

/// Whether `w ∩ e ≠ 0`.
pub fn intersects_nontrivially(w: &Subspace, e: &Subspace) -> Result<bool, GrassmannError> {
    if w.ambient_dim() != e.ambient_dim() {
        return Err(GrassmannError::AmbientMismatch(w.ambient_dim(), e.ambient_dim()));
    }
    Ok(w.basis.vstack(&e.basis)?.rank() < w.plane_dim() + e.plane_dim())
}

/// The two coordinate vectors related by Grassmann duality, indexed by `α`:
/// `z_α(W*)` and `(-1)^{|α|} z_{α*}(R·ann(W*))`, where `R` reverses the monomial order
/// so that the complement `α^c` becomes the dual multiindex `α*`. The two vectors are
/// projectively equal.
pub fn duality_vectors(wstar: &Subspace) -> Result<(Vec<Scalar>, Vec<Scalar>), GrassmannError> {
    let m = wstar.plane_dim();
    let n = wstar.ambient_dim();
    let p = n - m;
    let ann = annihilator(wstar)?.reflect();
    let field = wstar.field();
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for alpha in MultiIndex::all(n, m) {
        lhs.push(plucker(wstar, &alpha)?);
        let dual = dual_multiindex(&alpha, m, p)?;
        rhs.push(Scalar::sign_power(field, alpha.sum() as u64) * plucker(&ann, &dual)?);
    }
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rational;

    fn mi(v: &[usize], n: usize) -> MultiIndex {
        MultiIndex::new(v.to_vec(), n).unwrap()
    }

    #[test]
    fn dual_multiindex_examples() {
        assert_eq!(dual_multiindex(&mi(&[1, 4], 5), 2, 3).unwrap(), mi(&[1, 3, 4], 5));
        assert_eq!(dual_multiindex(&mi(&[3, 4], 4), 2, 2).unwrap(), mi(&[3, 4], 4));
        for a in MultiIndex::all(5, 2) {
            let d = dual_multiindex(&a, 2, 3).unwrap();
            assert_eq!(dual_multiindex(&d, 3, 2).unwrap(), a);
        }
    }

    #[test]
    fn distinguished_examples() {
        assert_eq!(distinguished_multiindex(1, 2, 2, 3).unwrap(), mi(&[2, 5], 5));
        assert_eq!(distinguished_multiindex(2, 1, 2, 2).unwrap(), mi(&[1, 3], 4));
        assert_eq!(distinguished_multiindex(2, 2, 3, 2).unwrap(), mi(&[2, 3, 5], 5));
        assert!(distinguished_multiindex(0, 1, 2, 2).is_err());
        assert!(distinguished_multiindex(1, 3, 2, 2).is_err());
    }

    #[test]
    fn chart_point_examples() {
        let chart = Chart::standard(Q, 2, 2);
        let x0 = Matrix::zeros(Q, 2, 2);
        let center = chart_point(&chart, &x0).unwrap();
        let expected = Subspace::from_polys(Q, &[Poly::from_ints(Q, &[0, 0, 1]), Poly::from_ints(Q, &[0, 0, 0, 1])], 4).unwrap();
        assert!(center.same_space(&expected));

        let x = Matrix::from_int_rows(Q, &[&[1, 0], &[0, 0]]);
        let w = chart_point(&chart, &x).unwrap();
        assert_eq!(w.basis(), &Matrix::from_int_rows(Q, &[&[1, 0, 1, 0], &[0, 0, 0, 1]]));
        assert_eq!(plucker(&w, &mi(&[1, 4], 4)).unwrap(), Q.one());
        assert_eq!(xij_from_plucker(&chart, &w, 1, 1).unwrap(), Q.one());
        assert_eq!(chart.coordinates(&w).unwrap(), x);
        assert!(matches!(chart_point(&chart, &Matrix::zeros(Q, 1, 2)), Err(GrassmannError::Shape { .. })));
    }

    #[test]
    fn plucker_at_center() {
        let chart = Chart::standard(Q, 2, 3);
        let center = chart_point(&chart, &Matrix::zeros(Q, 2, 3)).unwrap();
        assert_eq!(plucker(&center, &mi(&[4, 5], 5)).unwrap(), Q.one());
        assert!(plucker(&center, &mi(&[1, 5], 5)).unwrap().is_zero());
        assert!(plucker(&center, &mi(&[1, 2, 3], 5)).is_err());
    }

    #[test]
    fn flags() {
        let zero = Q.zero();
        let f1 = osculating_f(&zero, 1, 2, 2).unwrap();
        assert!(f1.same_space(&Subspace::from_polys(Q, &[Poly::one(Q)], 4).unwrap()));
        let f2 = osculating_f(&zero, 2, 2, 2).unwrap();
        assert!(f2.same_space(&Subspace::from_polys(Q, &[Poly::one(Q), Poly::from_ints(Q, &[0, 1])], 4).unwrap()));
        let s = Scalar::from_int(Q, 3);
        assert_eq!(osculating_f(&s, 4, 2, 2).unwrap().plane_dim(), 4);
        let e2 = flag_e(&s, 2, 2, 2).unwrap();
        assert_eq!(e2.plane_dim(), 2);
        for f in e2.polys() {
            let (_, r) = f.div_rem(&Poly::from_roots(Q.one(), &[s.clone(), s.clone()])).unwrap();
            assert!(r.is_zero());
        }
        assert!(flag_e(&s, 4, 2, 2).unwrap().same_space(&Subspace::full(Q, 4)));
    }

    #[test]
    fn annihilator_and_intersections() {
        let phis = Subspace::new(Matrix::from_int_rows(Q, &[&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0]])).unwrap();
        let ann = annihilator(&phis).unwrap();
        let expected = Subspace::new(Matrix::from_int_rows(Q, &[&[0, 0, 1, 0, 0], &[0, 0, 0, 1, 0], &[0, 0, 0, 0, 1]])).unwrap();
        assert!(ann.same_space(&expected));
        assert!(intersects_nontrivially(&phis, &phis).unwrap());
        assert!(!intersects_nontrivially(&phis, &ann).unwrap());
        let (a, b) = duality_vectors(&phis).unwrap();
        assert!(proportional(&a, &b));
    }

    #[test]
    fn subspace_serde_round_trip() {
        let w = Subspace::new(Matrix::from_int_rows(FieldSpec::Prime(7), &[&[1, 0, 3, 0], &[0, 0, 5, 1]])).unwrap();
        let text = serde_json::to_string(&w).unwrap();
        assert_eq!(text, r#"{"field":"Fp:7","ambient":4,"rows":[["1","0","3","0"],["0","0","5","1"]]}"#);
        let back: Subspace = serde_json::from_str(&text).unwrap();
        assert_eq!(back, w);
    }
}
