use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalars::{FieldSpec, Scalar};

use super::{Poly, PolyError};

/// Commutative ring elements that know their own zero and one and support exact
/// division, which is all fraction-free elimination needs.
pub trait RingElement: Clone + PartialEq + fmt::Debug
where
    for<'a> &'a Self: Add<&'a Self, Output = Self>
        + Sub<&'a Self, Output = Self>
        + Mul<&'a Self, Output = Self>
        + Neg<Output = Self>,
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_element(&self) -> bool;
    /// `self / d`, where the caller guarantees divisibility.
    fn div_exact(&self, d: &Self) -> Self;
}

impl RingElement for Scalar {
    fn zero_like(&self) -> Self {
        self.field().zero()
    }
    fn one_like(&self) -> Self {
        self.field().one()
    }
    fn is_zero_element(&self) -> bool {
        self.is_zero()
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

impl RingElement for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero(self.field())
    }
    fn one_like(&self) -> Self {
        Poly::one(self.field())
    }
    fn is_zero_element(&self) -> bool {
        self.is_zero()
    }
    fn div_exact(&self, d: &Self) -> Self {
        Poly::div_exact(self, d).expect("fraction-free step divides exactly")
    }
}

/// Below this size determinants use cofactor expansion, at and above it Bareiss
/// elimination.
pub const COFACTOR_LIMIT: usize = 6;

/// Row-major rectangular matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, PolyError> {
        if data.len() != rows * cols {
            return Err(PolyError::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, PolyError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(PolyError::Dimension("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// The submatrix on the given (0-based) columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Matrix::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), self.cols, |i, j| self.get(rows[i], j).clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self, PolyError> {
        if self.rows != other.rows {
            return Err(PolyError::Dimension("hstack row counts differ".into()));
        }
        Ok(Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    /// `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Result<Self, PolyError> {
        if self.cols != other.cols {
            return Err(PolyError::Dimension("vstack column counts differ".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, data })
    }
}

impl<T> Matrix<T>
where
    T: RingElement,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T> + Neg<Output = T>,
{
    pub fn mul(&self, rhs: &Self) -> Result<Self, PolyError> {
        if self.cols != rhs.rows {
            return Err(PolyError::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        if self.cols == 0 {
            return Err(PolyError::Dimension("empty inner dimension".into()));
        }
        Ok(Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = self.get(i, 0) * rhs.get(0, j);
            for k in 1..self.cols {
                acc = &acc + &(self.get(i, k) * rhs.get(k, j));
            }
            acc
        }))
    }

    /// Exact determinant: cofactor expansion below size 6, Bareiss elimination otherwise.
    pub fn det(&self) -> Result<T, PolyError> {
        self.check_square()?;
        if self.rows < COFACTOR_LIMIT {
            self.det_cofactor()
        } else {
            self.det_bareiss()
        }
    }

    fn check_square(&self) -> Result<(), PolyError> {
        if self.rows != self.cols || self.rows == 0 {
            return Err(PolyError::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(())
    }

    /// Laplace expansion along the first row.
    pub fn det_cofactor(&self) -> Result<T, PolyError> {
        self.check_square()?;
        let cols: Vec<usize> = (0..self.cols).collect();
        Ok(self.cofactor_rec(0, &cols))
    }

    fn cofactor_rec(&self, row: usize, cols: &[usize]) -> T {
        if cols.len() == 1 {
            return self.get(row, cols[0]).clone();
        }
        if cols.len() == 2 {
            let a = self.get(row, cols[0]) * self.get(row + 1, cols[1]);
            let b = self.get(row, cols[1]) * self.get(row + 1, cols[0]);
            return &a - &b;
        }
        let mut acc = self.get(row, cols[0]).zero_like();
        let mut rest = Vec::with_capacity(cols.len() - 1);
        for (k, &c) in cols.iter().enumerate() {
            let entry = self.get(row, c);
            if entry.is_zero_element() {
                continue;
            }
            rest.clear();
            rest.extend(cols.iter().copied().filter(|&x| x != c));
            let term = entry * &self.cofactor_rec(row + 1, &rest);
            acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    /// Fraction-free (Bareiss) elimination with row pivoting.
    pub fn det_bareiss(&self) -> Result<T, PolyError> {
        self.check_square()?;
        let n = self.rows;
        let mut a = self.clone();
        let mut negate = false;
        let mut prev = self.get(0, 0).one_like();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero_element() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero_element()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        negate = !negate;
                    }
                    None => return Ok(prev.zero_like()),
                }
            }
            let pivot = a.get(k, k).clone();
            for i in k + 1..n {
                let aik = a.get(i, k).clone();
                for j in k + 1..n {
                    let num = &(a.get(i, j) * &pivot) - &(&aik * a.get(k, j));
                    a.set(i, j, num.div_exact(&prev));
                }
                a.set(i, k, prev.zero_like());
            }
            prev = pivot;
        }
        let d = a.get(n - 1, n - 1).clone();
        Ok(if negate { -&d } else { d })
    }
}

impl Matrix<Scalar> {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| field.zero())
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { field.one() } else { field.zero() })
    }

    pub fn from_int_rows(field: FieldSpec, rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from_int(field, v)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(i) = (r..self.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            a.swap_rows(i, r);
            let inv = a.get(r, c).inv().expect("nonzero pivot");
            for j in 0..self.cols {
                let v = a.get(r, j) * &inv;
                a.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || a.get(i, c).is_zero() {
                    continue;
                }
                let f = a.get(i, c).clone();
                for j in 0..self.cols {
                    let v = a.get(i, j) - &(&f * a.get(r, j));
                    a.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : self · v = 0}`, one vector per row of the result.
    pub fn nullspace(&self, field: FieldSpec) -> Matrix<Scalar> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        Matrix::from_fn(free.len(), self.cols, |k, j| {
            let f = free[k];
            if j == f {
                field.one()
            } else if let Some(pi) = pivots.iter().position(|&pc| pc == j) {
                -r.get(pi, f)
            } else {
                field.zero()
            }
        })
    }

    pub fn inverse(&self) -> Result<Self, PolyError> {
        if self.rows != self.cols {
            return Err(PolyError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let field = self.get(0, 0).field();
        let aug = self.hstack(&Matrix::identity(field, n))?;
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(PolyError::Singular);
        }
        Ok(Matrix::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }

    /// `self · v` for a column vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(v[0].field().zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| &self.data[i * self.cols..(i + 1) * self.cols]))
            .finish()
    }
}

/// `∏_{i<j} (s_j - s_i)`.
pub fn vandermonde(field: FieldSpec, s: &[Scalar]) -> Scalar {
    let mut acc = field.one();
    for j in 0..s.len() {
        for i in 0..j {
            acc *= &(&s[j] - &s[i]);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rational;

    #[test]
    fn det_examples() {
        assert_eq!(Matrix::identity(Q, 3).det().unwrap(), Q.one());
        let t = Poly::from_ints(Q, &[0, 1]);
        let m = Matrix::from_rows(vec![vec![Poly::one(Q), t.clone()], vec![Poly::zero(Q), Poly::one(Q)]]).unwrap();
        assert_eq!(m.det().unwrap(), Poly::one(Q));
        let m = Matrix::from_rows(vec![
            vec![Poly::from_ints(Q, &[0, 0, 1]), Poly::from_ints(Q, &[0, 0, 0, 1])],
            vec![Poly::from_ints(Q, &[0, 2]), Poly::from_ints(Q, &[0, 0, 3])],
        ])
        .unwrap();
        assert_eq!(m.det().unwrap(), Poly::from_ints(Q, &[0, 0, 0, 0, 1]));
        let rect = Matrix::zeros(Q, 2, 3);
        assert!(matches!(rect.det(), Err(PolyError::NotSquare { .. })));
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let m = Matrix::from_fn(6, 6, |i, j| Scalar::from_int(Q, ((i * 7 + j * 3) % 5) as i64 - 2 + (i == j) as i64));
        assert_eq!(m.det_bareiss().unwrap(), m.det_cofactor().unwrap());
        let p = Matrix::from_fn(5, 5, |i, j| Poly::from_ints(Q, &[(i + j) as i64 % 3, (i * j) as i64 % 4 - 1]));
        assert_eq!(p.det_bareiss().unwrap(), p.det_cofactor().unwrap());
    }

    #[test]
    fn vandermonde_examples() {
        let s = |v: &[i64]| v.iter().map(|&x| Scalar::from_int(Q, x)).collect::<Vec<_>>();
        assert_eq!(vandermonde(Q, &s(&[0, 1])), Q.one());
        assert_eq!(vandermonde(Q, &s(&[1, 2, 3])), Scalar::from_int(Q, 2));
        assert!(vandermonde(Q, &s(&[4, 4, 1])).is_zero());
    }

    #[test]
    fn linear_algebra() {
        let a = Matrix::from_int_rows(Q, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ns = a.nullspace(Q);
        assert_eq!(ns.rows(), 1);
        assert!(a.apply(ns.row(0)).iter().all(Scalar::is_zero));
        let b = Matrix::from_int_rows(Q, &[&[2, 1], &[1, 1]]);
        let bi = b.inverse().unwrap();
        assert_eq!(b.mul(&bi).unwrap(), Matrix::identity(Q, 2));
        assert_eq!(a.inverse(), Err(PolyError::Singular));
    }
}
