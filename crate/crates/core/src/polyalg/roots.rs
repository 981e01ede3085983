//! Roots in the ground field.
//!
//! Over small `F_p` every element is tried; for large `p` the roots are split out of
//! `gcd(f, t^p - t)` by random-shift gcds (Cantor–Zassenhaus). Over `Q` the polynomial is reduced modulo a
//! small prime `q` of good reduction, its roots mod `q` are Hensel lifted far enough
//! to exceed a root bound, and each lifted candidate is checked exactly. This finds
//! every rational root without factoring any coefficient.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalars::{is_prime_u64, FieldSpec, Scalar};

use super::{Poly, PolyError};

/// If `f = c·∏(t - s_i)` with `deg f` distinct `s_i` in the field, the sorted roots.
pub fn split_distinct_roots(f: &Poly) -> Result<Option<Vec<Scalar>>, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if !f.is_squarefree() {
        return Ok(None);
    }
    let roots = roots_in_field(f)?;
    Ok((roots.len() == n).then_some(roots))
}

/// All distinct roots of `f` in its field, sorted canonically.
pub fn roots_in_field(f: &Poly) -> Result<Vec<Scalar>, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if f.is_constant() {
        return Ok(Vec::new());
    }
    let mut roots = match f.field() {
        FieldSpec::Prime(q) if q <= SCAN_LIMIT => f
            .field()
            .elements()
            .expect("finite field")
            .filter(|s| f.eval(s).is_zero())
            .collect(),
        FieldSpec::Prime(q) => {
            let t = Poly::monomial(f.field().one(), 1);
            let frob = pow_mod_poly(&t, q, f)?;
            let mut out = Vec::new();
            split_linear(&f.gcd(&(&frob - &t)), q, 0, &mut out)?;
            out
        }
        FieldSpec::Rational => {
            let g = f.gcd(&f.derivative(1));
            let sqfree = f.div_exact(&g)?;
            rational_roots(&sqfree)
        }
    };
    roots.sort();
    Ok(roots)
}

/// Largest field size for which roots are found by trying every element.
const SCAN_LIMIT: u64 = 1 << 12;

/// `base^e mod modulus`.
fn pow_mod_poly(base: &Poly, mut e: u64, modulus: &Poly) -> Result<Poly, PolyError> {
    let mut result = Poly::one(base.field());
    let mut b = base.div_rem(modulus)?.1;
    while e > 0 {
        if e & 1 == 1 {
            result = (&result * &b).div_rem(modulus)?.1;
        }
        b = (&b * &b).div_rem(modulus)?.1;
        e >>= 1;
    }
    Ok(result)
}

/// Roots of a monic product of distinct linear factors over `F_q`. Shifts `a` are
/// tried in order, so the result is deterministic.
fn split_linear(g: &Poly, q: u64, mut shift: u64, out: &mut Vec<Scalar>) -> Result<(), PolyError> {
    let field = g.field();
    match g.degree() {
        None | Some(0) => return Ok(()),
        Some(1) => {
            out.push(-&(g.coeff(0) / &g.coeff(1)));
            return Ok(());
        }
        _ => {}
    }
    loop {
        shift += 1;
        let lin = Poly::new(field, vec![Scalar::residue(shift % q, q), field.one()]);
        let h = &pow_mod_poly(&lin, (q - 1) / 2, g)? - &Poly::one(field);
        let d = g.gcd(&h);
        let dd = d.degree().unwrap_or(0);
        if dd > 0 && Some(dd) < g.degree() {
            split_linear(&d, q, shift, out)?;
            return split_linear(&g.div_exact(&d)?.monic(), q, shift, out);
        }
    }
}

/// Integer coefficients of a positive multiple of `f` (a rational polynomial).
fn integer_coeffs(f: &Poly) -> Vec<BigInt> {
    let lcm = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.as_rational().expect("rational").denom()));
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| {
            let q = c.as_rational().expect("rational");
            q.numer() * (&lcm / q.denom())
        })
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &content).collect()
}

fn eval_mod(coeffs: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

fn inverse_mod(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Distinct rational roots of a squarefree rational polynomial.
fn rational_roots(f: &Poly) -> Vec<Scalar> {
    let a = integer_coeffs(f);
    let n = a.len() - 1;
    let lead = a[n].clone();
    let q = good_prime(&a);
    let fq = FieldSpec::Prime(q);
    let reduced = Poly::new(fq, a.iter().map(|c| Scalar::from_bigint(fq, c)).collect());
    let mod_roots: Vec<u64> = (0..q).filter(|&r| reduced.eval(&Scalar::residue(r, q)).is_zero()).collect();

    // Any rational root r = u/v has v | lead, so lead·r is an integer of absolute value
    // at most |lead| + max|a_i| by the Cauchy bound.
    let max_coeff = a.iter().map(|c| c.abs()).max().expect("nonempty");
    let bound = lead.abs() + max_coeff;
    let target = &bound * 2 + 1;

    let deriv: Vec<BigInt> = (1..=n).map(|i| &a[i] * BigInt::from(i)).collect();
    let big_q = BigInt::from(q);
    let mut found = Vec::new();
    for r0 in mod_roots {
        let mut modulus = big_q.clone();
        let mut r = BigInt::from(r0);
        while modulus < target {
            modulus = &modulus * &modulus;
            let fr = eval_mod(&a, &r, &modulus);
            let dr = eval_mod(&deriv, &r, &modulus);
            let inv = inverse_mod(&dr, &modulus).expect("simple root mod q stays simple");
            r = (r - fr * inv).mod_floor(&modulus);
        }
        let mut c = (&lead * &r).mod_floor(&modulus);
        if &c * 2 > modulus {
            c -= &modulus;
        }
        let cand = num_rational::BigRational::new(c, lead.clone());
        let s = Scalar::rational(cand);
        if f.eval(&s).is_zero() {
            found.push(s);
        }
    }
    found
}

/// A prime not dividing the leading coefficient for which the reduction stays
/// squarefree. Primes start at 101 so the root scan is cheap but not degenerate.
fn good_prime(a: &[BigInt]) -> u64 {
    let lead = a.last().expect("nonempty");
    let mut q = 101u64;
    loop {
        if is_prime_u64(q) && !(lead % BigInt::from(q)).is_zero() {
            let fq = FieldSpec::Prime(q);
            let reduced = Poly::new(fq, a.iter().map(|c| Scalar::from_bigint(fq, c)).collect());
            if reduced.is_squarefree() {
                return q;
            }
        }
        q += 2;
        assert!(q < crate::scalars::MAX_MODULUS, "no prime of good reduction below 2^31");
    }
}
