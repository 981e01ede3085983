#![allow(dead_code)]

use proptest::prelude::*;
use wronski_core::grassmann::Subspace;
use wronski_core::{FieldSpec, Matrix, Poly, Scalar};

pub const Q: FieldSpec = FieldSpec::Rational;
pub const F7: FieldSpec = FieldSpec::Prime(7);
pub const F11: FieldSpec = FieldSpec::Prime(11);

pub fn field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![Just(Q), Just(F7), Just(F11), Just(FieldSpec::Prime(1_000_003))]
}

pub fn scalar_in(field: FieldSpec) -> BoxedStrategy<Scalar> {
    match field {
        FieldSpec::Rational => (-40i64..=40, 1i64..=12)
            .prop_map(move |(n, d)| Scalar::from_ratio(field, n, d).unwrap())
            .boxed(),
        FieldSpec::Prime(q) => (0..q).prop_map(move |v| Scalar::residue(v, q)).boxed(),
    }
}

pub fn scalars_in(field: FieldSpec, n: usize) -> BoxedStrategy<Vec<Scalar>> {
    proptest::collection::vec(scalar_in(field), n).boxed()
}

pub fn poly_in(field: FieldSpec, max_len: usize) -> BoxedStrategy<Poly> {
    proptest::collection::vec(scalar_in(field), 0..=max_len)
        .prop_map(move |c| Poly::new(field, c))
        .boxed()
}

pub fn matrix_in(field: FieldSpec, rows: usize, cols: usize) -> BoxedStrategy<Matrix<Scalar>> {
    scalars_in(field, rows * cols)
        .prop_map(move |v| Matrix::new(rows, cols, v).unwrap())
        .boxed()
}

/// A random `m`-plane in `k^n`, or `None` if the drawn matrix is rank deficient.
pub fn subspace_in(field: FieldSpec, m: usize, n: usize) -> BoxedStrategy<Option<Subspace>> {
    matrix_in(field, m, n).prop_map(|a| Subspace::new(a).ok()).boxed()
}

pub fn distinct(v: &[Scalar]) -> bool {
    v.iter().enumerate().all(|(i, a)| v[..i].iter().all(|b| a != b))
}
