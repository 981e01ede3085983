use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalars::{FieldSpec, Scalar, ScalarError};

use super::PolyError;

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `t^i`.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients and
/// two polynomials are equal iff their coefficient vectors are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: FieldSpec, coeffs: Vec<Scalar>) -> Self {
        for c in &coeffs {
            assert_eq!(c.field(), field, "coefficient from another field");
        }
        let mut p = Poly { field, coeffs };
        p.trim();
        p
    }

    pub fn from_ints(field: FieldSpec, coeffs: &[i64]) -> Self {
        Poly::new(field, coeffs.iter().map(|&c| Scalar::from_int(field, c)).collect())
    }

    pub fn zero(field: FieldSpec) -> Self {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn one(field: FieldSpec) -> Self {
        Poly::constant(field.one())
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::new(c.field(), vec![c])
    }

    /// `c · t^k`.
    pub fn monomial(c: Scalar, k: usize) -> Self {
        let field = c.field();
        let mut coeffs = vec![field.zero(); k];
        coeffs.push(c);
        Poly::new(field, coeffs)
    }

    /// The linear polynomial `t - s`.
    pub fn linear_root(s: &Scalar) -> Self {
        Poly::new(s.field(), vec![-s, s.field().one()])
    }

    /// `c · ∏ (t - s_i)`.
    pub fn from_roots(c: Scalar, roots: &[Scalar]) -> Self {
        roots
            .iter()
            .fold(Poly::constant(c), |acc, s| &acc * &Poly::linear_root(s))
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Scalar::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Coefficients `c_0..c_{n-1}`, zero padded; panics if the degree is `n` or more.
    pub fn coeff_vector(&self, n: usize) -> Vec<Scalar> {
        assert!(self.coeffs.len() <= n, "degree {:?} does not fit in {n} coefficients", self.degree());
        (0..n).map(|i| self.coeff(i)).collect()
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn eval(&self, s: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * s) + c)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Formal `order`-th derivative.
    pub fn derivative(&self, order: usize) -> Poly {
        if order == 0 {
            return self.clone();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(order)
            .map(|(i, c)| {
                // i (i-1) ... (i-order+1)
                let falling = (i - order + 1..=i)
                    .fold(self.field.one(), |acc, k| acc * Scalar::from_int(self.field, k as i64));
                c * &falling
            })
            .collect();
        Poly::new(self.field, coeffs)
    }

    /// `f(a t + b)`.
    pub fn compose_affine(&self, a: &Scalar, b: &Scalar) -> Poly {
        let inner = Poly::new(self.field, vec![b.clone(), a.clone()]);
        self.coeffs.iter().rev().fold(Poly::zero(self.field), |acc, c| {
            &(&acc * &inner) + &Poly::constant(c.clone())
        })
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading_coeff().inv().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    /// Euclidean division, `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly), PolyError> {
        if d.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let dn = d.coeffs.len() - 1;
        let lead_inv = d.leading_coeff().inv().expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        if r.len() <= dn {
            return Ok((Poly::zero(self.field), self.clone()));
        }
        let mut q = vec![self.field.zero(); r.len() - dn];
        for k in (0..q.len()).rev() {
            let c = &r[k + dn] * &lead_inv;
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    let t = &c * dj;
                    r[k + j] -= &t;
                }
            }
            q[k] = c;
        }
        r.truncate(dn);
        Ok((Poly::new(self.field, q), Poly::new(self.field, r)))
    }

    /// Quotient of an exact division; errors when the remainder is nonzero.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly, PolyError> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(PolyError::InexactDivision);
        }
        Ok(q)
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b nonzero");
            a = b;
            b = r.monic();
        }
        a
    }

    /// Whether `gcd(f, f')` is constant. Zero is not squarefree.
    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative(1)).is_constant()
    }

    /// Parse `c0 + c1*t + ... + ck*t^k`. Terms may come in any order, repeat, or be
    /// omitted; coefficients use the scalar grammar without a `mod` suffix.
    pub fn parse_in(field: FieldSpec, text: &str) -> Result<Poly, PolyError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(PolyError::Parse(text.to_string()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'^' | b'*' | b'+' | b'-' | b'(') {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);

        let mut acc = Poly::zero(field);
        for term in terms {
            acc = &acc + &parse_term(field, term).map_err(|_| PolyError::Parse(text.to_string()))?;
        }
        Ok(acc)
    }
}

fn parse_term(field: FieldSpec, term: &str) -> Result<Poly, ScalarError> {
    let bad = || ScalarError::Parse(term.to_string());
    let (sign, body) = match term.as_bytes().first() {
        Some(b'+') => (1, &term[1..]),
        Some(b'-') => (-1, &term[1..]),
        _ => (1, term),
    };
    let (coef_text, power) = match body.find('t') {
        None => (body, 0usize),
        Some(pos) => {
            let coef = body[..pos].strip_suffix('*').unwrap_or(&body[..pos]);
            let rest = &body[pos + 1..];
            let power = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')
                    .ok_or_else(bad)?
                    .parse::<usize>()
                    .map_err(|_| bad())?
            };
            (coef, power)
        }
    };
    let coef_text = coef_text.trim_start_matches('(').trim_end_matches(')');
    let coef = if coef_text.is_empty() {
        if power == 0 {
            return Err(bad());
        }
        field.one()
    } else {
        Scalar::parse_in(field, coef_text)?
    };
    let coef = if sign < 0 { -coef } else { coef };
    Ok(Poly::monomial(coef, power))
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut text = c.to_bare_string();
            let negative = text.starts_with('-');
            if negative {
                text.remove(0);
            }
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            match (i, text.as_str()) {
                (0, _) => write!(f, "{text}")?,
                (1, "1") => write!(f, "t")?,
                (_, "1") => write!(f, "t^{i}")?,
                (1, _) => write!(f, "{text}*t")?,
                _ => write!(f, "{text}*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({self})", self.field)
    }
}

fn add_poly(a: &Poly, b: &Poly) -> Poly {
    assert_eq!(a.field, b.field, "field mismatch in polynomial arithmetic");
    let n = a.coeffs.len().max(b.coeffs.len());
    Poly::new(a.field, (0..n).map(|i| a.coeff(i) + b.coeff(i)).collect())
}

fn sub_poly(a: &Poly, b: &Poly) -> Poly {
    assert_eq!(a.field, b.field, "field mismatch in polynomial arithmetic");
    let n = a.coeffs.len().max(b.coeffs.len());
    Poly::new(a.field, (0..n).map(|i| a.coeff(i) - b.coeff(i)).collect())
}

fn mul_poly(a: &Poly, b: &Poly) -> Poly {
    assert_eq!(a.field, b.field, "field mismatch in polynomial arithmetic");
    if a.is_zero() || b.is_zero() {
        return Poly::zero(a.field);
    }
    let mut out = vec![a.field.zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    Poly::new(a.field, out)
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                $imp(self, rhs)
            }
        }
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                $imp(&self, &rhs)
            }
        }
    };
}

poly_binop!(Add, add, add_poly);
poly_binop!(Sub, sub, sub_poly);
poly_binop!(Mul, mul, mul_poly);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}
