//! Exact scalars over `Q` and odd prime fields.
//!
//! A [`Scalar`] carries its field with it. Rationals are reduced fractions with a
//! positive denominator, residues live in `[0, p)`, so structural equality is
//! equality of field elements. Arithmetic between scalars of different fields
//! is a programming error and panics.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest modulus accepted for prime fields; products of two residues fit in a `u64`.
pub const MAX_MODULUS: u64 = 1 << 31;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("square class of zero undefined")]
    ZeroSquareClass,
    #[error("{0} is not an odd prime below 2^31")]
    NotOddPrime(u64),
    #[error("cannot parse scalar `{0}`")]
    Parse(String),
    #[error("cannot parse field descriptor `{0}` (expected `Q` or `Fp:<p>`)")]
    FieldParse(String),
    #[error("scalar in {found} where {expected} was expected")]
    FieldMismatch { expected: FieldSpec, found: FieldSpec },
    #[error("division by zero")]
    DivisionByZero,
}

/// The ground field: the rationals or `F_p` for an odd prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    /// `F_p`, rejecting 2, composites and moduli that would overflow residue products.
    pub fn prime(p: u64) -> Result<Self, ScalarError> {
        if p % 2 == 0 || p >= MAX_MODULUS || !is_prime_u64(p) {
            return Err(ScalarError::NotOddPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => p,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }

    pub fn zero(self) -> Scalar {
        Scalar::from_int(self, 0)
    }

    pub fn one(self) -> Scalar {
        Scalar::from_int(self, 1)
    }

    /// All elements in canonical order (`0, 1, …, p-1`); `None` over `Q`.
    pub fn elements(self) -> Option<impl Iterator<Item = Scalar>> {
        match self {
            FieldSpec::Rational => None,
            FieldSpec::Prime(p) => Some((0..p).map(move |v| Scalar::residue(v, p))),
        }
    }

    /// Number of elements, `None` over `Q`.
    pub fn order(self) -> Option<u64> {
        match self {
            FieldSpec::Rational => None,
            FieldSpec::Prime(p) => Some(p),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Q" || s == "QQ" {
            return Ok(FieldSpec::Rational);
        }
        let digits = s
            .strip_prefix("Fp:")
            .or_else(|| s.strip_prefix("GF:"))
            .or_else(|| s.strip_prefix("F"))
            .ok_or_else(|| ScalarError::FieldParse(s.to_string()))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| ScalarError::FieldParse(s.to_string()))?;
        FieldSpec::prime(p)
    }
}

impl TryFrom<String> for FieldSpec {
    type Error = ScalarError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<FieldSpec> for String {
    fn from(f: FieldSpec) -> String {
        f.to_string()
    }
}

/// Whether `n!` is a unit in `field`.
pub fn factorial_invertible(n: u64, field: FieldSpec) -> bool {
    match field {
        FieldSpec::Rational => true,
        FieldSpec::Prime(p) => p > n,
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

/// An exact element of `Q` or `F_p` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

impl Scalar {
    pub fn from_int(field: FieldSpec, n: i64) -> Self {
        match field {
            FieldSpec::Rational => Scalar(Repr::Rational(BigRational::from_integer(n.into()))),
            FieldSpec::Prime(p) => Scalar::residue(n.rem_euclid(p as i64) as u64, p),
        }
    }

    pub fn from_bigint(field: FieldSpec, n: &BigInt) -> Self {
        match field {
            FieldSpec::Rational => Scalar(Repr::Rational(BigRational::from_integer(n.clone()))),
            FieldSpec::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar::residue(r.to_u64().expect("residue fits"), p)
            }
        }
    }

    /// `num / den` in `field`; fails when `den` vanishes in the field.
    pub fn from_ratio(field: FieldSpec, num: i64, den: i64) -> Result<Self, ScalarError> {
        let d = Scalar::from_int(field, den);
        Scalar::from_int(field, num).checked_div(&d)
    }

    pub fn rational(q: BigRational) -> Self {
        Scalar(Repr::Rational(q))
    }

    /// Residue class of `value` modulo `p`; `p` is trusted to be a valid modulus.
    pub fn residue(value: u64, p: u64) -> Self {
        Scalar(Repr::Residue { value: value % p, modulus: p })
    }

    pub fn field(&self) -> FieldSpec {
        match &self.0 {
            Repr::Rational(_) => FieldSpec::Rational,
            Repr::Residue { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rational(q) => Some(q),
            Repr::Residue { .. } => None,
        }
    }

    pub fn residue_value(&self) -> Option<u64> {
        match &self.0 {
            Repr::Rational(_) => None,
            Repr::Residue { value, .. } => Some(*value),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_zero(),
            Repr::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_one(),
            Repr::Residue { value, .. } => *value == 1,
        }
    }

    /// Sign over `Q` (`-1`, `0`, `1`); `None` over prime fields.
    pub fn signum(&self) -> Option<i32> {
        match &self.0 {
            Repr::Rational(q) => Some(if q.is_zero() {
                0
            } else if q.is_positive() {
                1
            } else {
                -1
            }),
            Repr::Residue { .. } => None,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Rational(q) => Scalar(Repr::Rational(q.recip())),
            Repr::Residue { value, modulus } => {
                Scalar::residue(pow_mod(*value, modulus - 2, *modulus), *modulus)
            }
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        let inv = rhs.inv().ok_or(ScalarError::DivisionByZero)?;
        Ok(self * &inv)
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// A square root in the same field, if one exists.
    pub fn sqrt(&self) -> Option<Scalar> {
        match &self.0 {
            Repr::Rational(q) => {
                if q.is_negative() {
                    return None;
                }
                let n = q.numer().magnitude();
                let d = q.denom().magnitude();
                let (rn, rd) = (n.sqrt(), d.sqrt());
                (&rn * &rn == *n && &rd * &rd == *d).then(|| {
                    Scalar::rational(BigRational::new(BigInt::from(rn), BigInt::from(rd)))
                })
            }
            Repr::Residue { value, modulus } => {
                tonelli_shanks(*value, *modulus).map(|r| Scalar::residue(r, *modulus))
            }
        }
    }

    /// `(-1)^k` in this scalar's field.
    pub fn sign_power(field: FieldSpec, k: u64) -> Scalar {
        Scalar::from_int(field, if k % 2 == 0 { 1 } else { -1 })
    }

    /// `n!` as a field element.
    pub fn factorial(field: FieldSpec, n: u64) -> Scalar {
        (1..=n).fold(field.one(), |acc, i| acc * Scalar::from_int(field, i as i64))
    }

    /// Parse in a known field. Accepts `a`, `-a`, `a/b`, and `r mod p` when `p` matches.
    pub fn parse_in(field: FieldSpec, s: &str) -> Result<Scalar, ScalarError> {
        let text = s.trim();
        if let Some((lhs, rhs)) = text.split_once("mod") {
            let p: u64 = rhs
                .trim()
                .parse()
                .map_err(|_| ScalarError::Parse(s.to_string()))?;
            let found = FieldSpec::prime(p)?;
            if found != field {
                return Err(ScalarError::FieldMismatch {
                    expected: field,
                    found,
                });
            }
            return Scalar::parse_in(field, lhs);
        }
        let q: BigRational = if let Some((n, d)) = text.split_once('/') {
            let n: BigInt = n
                .trim()
                .parse()
                .map_err(|_| ScalarError::Parse(s.to_string()))?;
            let d: BigInt = d
                .trim()
                .parse()
                .map_err(|_| ScalarError::Parse(s.to_string()))?;
            if d.is_zero() {
                return Err(ScalarError::DivisionByZero);
            }
            BigRational::new(n, d)
        } else {
            let n: BigInt = text
                .parse()
                .map_err(|_| ScalarError::Parse(s.to_string()))?;
            BigRational::from_integer(n)
        };
        match field {
            FieldSpec::Rational => Ok(Scalar::rational(q)),
            FieldSpec::Prime(_) => {
                Scalar::from_bigint(field, q.numer()).checked_div(&Scalar::from_bigint(field, q.denom()))
            }
        }
    }

    /// Text form without the field suffix: `a/b` (or `a`) over `Q`, the residue over `F_p`.
    pub fn to_bare_string(&self) -> String {
        match &self.0 {
            Repr::Rational(q) => {
                if q.is_integer() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
            Repr::Residue { value, .. } => value.to_string(),
        }
    }

    fn expect_same_field(&self, other: &Scalar) {
        if self.field() != other.field() {
            panic!(
                "field mismatch in scalar arithmetic: {} vs {}",
                self.field(),
                other.field()
            );
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(_) => write!(f, "{}", self.to_bare_string()),
            Repr::Residue { value, modulus } => write!(f, "{value} mod {modulus}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Scalar {
    type Err = ScalarError;

    /// `r mod p` parses into `F_p`, anything else into `Q`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let field = match s.split_once("mod") {
            Some((_, p)) => {
                let p: u64 = p.trim().parse().map_err(|_| ScalarError::Parse(s.to_string()))?;
                FieldSpec::prime(p)?
            }
            None => FieldSpec::Rational,
        };
        Scalar::parse_in(field, s)
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by value over `Q`, by least nonnegative representative over `F_p`.
/// Scalars from different fields are ordered by field first.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => a.cmp(b),
            (
                Repr::Residue { value: a, modulus: p },
                Repr::Residue { value: b, modulus: q },
            ) => p.cmp(q).then(a.cmp(b)),
            (Repr::Rational(_), Repr::Residue { .. }) => Ordering::Less,
            (Repr::Residue { .. }, Repr::Rational(_)) => Ordering::Greater,
        }
    }
}

fn add_impl(a: &Scalar, b: &Scalar) -> Scalar {
    a.expect_same_field(b);
    match (&a.0, &b.0) {
        (Repr::Rational(x), Repr::Rational(y)) => Scalar(Repr::Rational(x + y)),
        (Repr::Residue { value: x, modulus }, Repr::Residue { value: y, .. }) => {
            Scalar::residue((x + y) % modulus, *modulus)
        }
        _ => unreachable!(),
    }
}

fn sub_impl(a: &Scalar, b: &Scalar) -> Scalar {
    a.expect_same_field(b);
    match (&a.0, &b.0) {
        (Repr::Rational(x), Repr::Rational(y)) => Scalar(Repr::Rational(x - y)),
        (Repr::Residue { value: x, modulus }, Repr::Residue { value: y, .. }) => {
            Scalar::residue((x + modulus - y) % modulus, *modulus)
        }
        _ => unreachable!(),
    }
}

fn mul_impl(a: &Scalar, b: &Scalar) -> Scalar {
    a.expect_same_field(b);
    match (&a.0, &b.0) {
        (Repr::Rational(x), Repr::Rational(y)) => Scalar(Repr::Rational(x * y)),
        (Repr::Residue { value: x, modulus }, Repr::Residue { value: y, .. }) => {
            Scalar::residue(x * y % modulus, *modulus)
        }
        _ => unreachable!(),
    }
}

fn div_impl(a: &Scalar, b: &Scalar) -> Scalar {
    a.checked_div(b).expect("division by zero scalar")
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $imp(self, rhs)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $imp(&self, &rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $imp(&self, rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $imp(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);
forward_binop!(Div, div, div_impl);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = add_impl(self, rhs);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = sub_impl(self, rhs);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = mul_impl(self, rhs);
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Rational(q) => Scalar(Repr::Rational(-q)),
            Repr::Residue { value, modulus } => Scalar::residue(modulus - value, *modulus),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

// ---------------------------------------------------------------------------
// Square classes
// ---------------------------------------------------------------------------

/// An element of `k^× / (k^×)^2`.
///
/// Over `Q` the tag is a sign together with the squarefree part of
/// `numerator · denominator`. Over `F_p` it records residue/non-residue with the least
/// positive non-residue as the canonical representative.
///
/// Equality over `Q` is decided by testing whether the product of the two kernels is a
/// perfect square, so it stays exact even when a huge kernel could not be fully
/// factored (see [`square_class`]).
#[derive(Clone, Debug)]
pub enum SquareClass {
    Rational { negative: bool, kernel: BigUint },
    Prime { modulus: u64, square: bool },
}

impl SquareClass {
    /// The canonical scalar representing this class.
    pub fn representative(&self) -> Scalar {
        match self {
            SquareClass::Rational { negative, kernel } => {
                let n = BigInt::from_biguint(if *negative { Sign::Minus } else { Sign::Plus }, kernel.clone());
                Scalar::rational(BigRational::from_integer(n))
            }
            SquareClass::Prime { modulus, square } => {
                if *square {
                    Scalar::residue(1, *modulus)
                } else {
                    Scalar::residue(least_non_residue(*modulus), *modulus)
                }
            }
        }
    }

    pub fn is_trivial(&self) -> bool {
        match self {
            SquareClass::Rational { negative, kernel } => !negative && is_perfect_square(kernel),
            SquareClass::Prime { square, .. } => *square,
        }
    }

    /// Class of the product.
    pub fn mul(&self, other: &SquareClass) -> SquareClass {
        match (self, other) {
            (
                SquareClass::Rational { negative: a, kernel: x },
                SquareClass::Rational { negative: b, kernel: y },
            ) => SquareClass::Rational {
                negative: a != b,
                kernel: squarefree_kernel(&(x * y)),
            },
            (
                SquareClass::Prime { modulus, square: a },
                SquareClass::Prime { square: b, .. },
            ) => SquareClass::Prime {
                modulus: *modulus,
                square: a == b,
            },
            _ => panic!("square classes from different fields"),
        }
    }
}

impl PartialEq for SquareClass {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (
                SquareClass::Rational { negative: a, kernel: x },
                SquareClass::Rational { negative: b, kernel: y },
            ) => a == b && (x == y || is_perfect_square(&(x * y))),
            (
                SquareClass::Prime { modulus: p, square: a },
                SquareClass::Prime { modulus: q, square: b },
            ) => p == q && a == b,
            _ => false,
        }
    }
}

impl Eq for SquareClass {}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SquareClass::Rational { negative, kernel } => {
                write!(f, "{}{}", if *negative { "-" } else { "+" }, kernel)
            }
            SquareClass::Prime { .. } => write!(f, "{}", self.representative()),
        }
    }
}

/// Square class of a nonzero scalar.
pub fn square_class(a: &Scalar) -> Result<SquareClass, ScalarError> {
    if a.is_zero() {
        return Err(ScalarError::ZeroSquareClass);
    }
    Ok(match &a.0 {
        Repr::Rational(q) => {
            let n = q.numer().magnitude() * q.denom().magnitude();
            SquareClass::Rational {
                negative: q.is_negative(),
                kernel: squarefree_kernel(&n),
            }
        }
        Repr::Residue { value, modulus } => SquareClass::Prime {
            modulus: *modulus,
            square: pow_mod(*value, (modulus - 1) / 2, *modulus) == 1,
        },
    })
}

/// Whether `a` is a nonzero square in its field.
pub fn is_square(a: &Scalar) -> bool {
    square_class(a).map(|c| c.is_trivial()).unwrap_or(false)
}

pub(crate) fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Square root of `a` modulo an odd prime `p`.
fn tonelli_shanks(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    let mut q = p - 1;
    let mut s = 0;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = least_non_residue(p);
    let mut c = pow_mod(z, q, p);
    let mut r = pow_mod(a, (q + 1) / 2, p);
    let mut t = pow_mod(a, q, p);
    let mut m = s;
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = tt * tt % p;
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        r = r * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    Some(r)
}

/// Least positive quadratic non-residue modulo an odd prime.
pub fn least_non_residue(p: u64) -> u64 {
    (2..p)
        .find(|&a| pow_mod(a, (p - 1) / 2, p) == p - 1)
        .expect("odd prime has a non-residue")
}

pub(crate) fn is_perfect_square(n: &BigUint) -> bool {
    let r = n.sqrt();
    &r * &r == *n
}

const TRIAL_BOUND: u32 = 1 << 16;

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_BOUND as usize;
        let mut sieve = vec![true; n + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i <= n {
            if sieve[i] {
                let mut j = i * i;
                while j <= n {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        (0..=n).filter(|&i| sieve[i]).map(|i| i as u32).collect()
    })
}

/// Squarefree part of `n > 0`.
///
/// Trial division removes every prime below 2^16; the cofactor is then split with
/// Pollard's rho when composite. A cofactor that resists splitting is kept whole, which
/// only loses canonicity (never correctness of [`SquareClass`] equality).
pub(crate) fn squarefree_kernel(n: &BigUint) -> BigUint {
    let mut rest = n.clone();
    let mut kernel = BigUint::one();
    for &p in small_primes() {
        let p = BigUint::from(p);
        if &p * &p > rest {
            break;
        }
        let mut odd = false;
        loop {
            let (q, r) = rest.div_rem(&p);
            if !r.is_zero() {
                break;
            }
            rest = q;
            odd = !odd;
        }
        if odd {
            kernel *= &p;
        }
    }
    kernel * large_kernel(rest)
}

fn large_kernel(n: BigUint) -> BigUint {
    if n.is_one() || is_perfect_square(&n) {
        return BigUint::one();
    }
    let bound = BigUint::from(TRIAL_BOUND);
    // All prime factors exceed the trial bound here, so anything below its cube is
    // a prime or a product of two distinct primes.
    if n < &bound * &bound * &bound || is_probable_prime(&n) {
        return n;
    }
    match pollard_rho(&n) {
        Some(d) => {
            let other = &n / &d;
            let g = d.gcd(&other);
            if g.is_one() {
                large_kernel(d) * large_kernel(other)
            } else {
                // n = g^2 * (d/g) * (other/g)
                large_kernel(&d / &g) * large_kernel(&other / &g)
            }
        }
        None => n,
    }
}

fn is_probable_prime(n: &BigUint) -> bool {
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    let n_minus_one = n - &one;
    let mut d = n_minus_one.clone();
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let a = BigUint::from(a);
        if a >= *n {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigUint) -> Option<BigUint> {
    let one = BigUint::one();
    for c in 1u32..8 {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        for _ in 0..200_000 {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            let d = diff.gcd(n);
            if d == *n {
                break;
            }
            if d != one {
                return Some(d);
            }
        }
    }
    None
}
