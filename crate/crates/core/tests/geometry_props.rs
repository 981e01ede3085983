mod common;

use common::*;
use proptest::prelude::*;
use wronski_core::grassmann::{
    chart_point, distinguished_multiindex, duality_vectors, intersects_nontrivially, osculating_f, flag_e, plucker,
    plucker_vector, proportional, xij_from_plucker, Chart, MultiIndex, Subspace,
};
use wronski_core::wronski::{
    gamma_matrix, in_big_cell, section_values, wr_via_gamma, wronskian, wronskian_of, LocalSection,
};
use wronski_core::{FieldSpec, Matrix, Scalar};

fn shape() -> impl Strategy<Value = (FieldSpec, usize, usize)> {
    (prop_oneof![Just(Q), Just(F11)], 1usize..=3, 1usize..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn plucker_is_basis_independent(((_, _, _), w, g) in shape().prop_flat_map(|(f, m, p)| (Just((f, m, p)), subspace_in(f, m, m + p), matrix_in(f, m, m)))) {
        let Some(w) = w else { return Ok(()) };
        let det = g.det().unwrap();
        prop_assume!(!det.is_zero());
        let moved = Subspace::new(g.mul(w.basis()).unwrap()).unwrap();
        prop_assert!(moved.same_space(&w));
        let scaled: Vec<Scalar> = plucker_vector(&w).iter().map(|z| z * &det).collect();
        prop_assert_eq!(plucker_vector(&moved), scaled);
        // The Wronskian scales by the same determinant.
        prop_assert_eq!(wronskian_of(&moved), wronskian_of(&w).scale(&det));
    }

    #[test]
    fn plucker_relations_in_gr_2_4(w in prop_oneof![Just(Q), Just(F11)].prop_flat_map(|f| subspace_in(f, 2, 4))) {
        let Some(w) = w else { return Ok(()) };
        let z = plucker_vector(&w);
        // z12 z34 - z13 z24 + z14 z23 = 0
        prop_assert!((&(&(&z[0] * &z[5]) - &(&z[1] * &z[4])) + &(&z[2] * &z[3])).is_zero());
    }

    #[test]
    fn chart_coordinates_round_trip(((f, m, p), x) in shape().prop_flat_map(|(f, m, p)| (Just((f, m, p)), matrix_in(f, m, p)))) {
        let chart = Chart::standard(f, m, p);
        let w = chart_point(&chart, &x).unwrap();
        prop_assert_eq!(&chart.coordinates(&w).unwrap(), &x);
        for i in 1..=m {
            for j in 1..=p {
                prop_assert_eq!(&xij_from_plucker(&chart, &w, i, j).unwrap(), x.get(i - 1, j - 1));
            }
        }
        prop_assert!(in_big_cell(&w));
    }

    #[test]
    fn gamma_determinant_form(((f, m, p), a, s) in shape().prop_flat_map(|(f, m, p)| (Just((f, m, p)), matrix_in(f, m, m + p), scalar_in(f)))) {
        let direct = wronskian(&(0..m).map(|i| wronski_core::Poly::new(f, a.row(i).to_vec())).collect::<Vec<_>>()).eval(&s);
        prop_assert_eq!(wr_via_gamma(&a, &s).unwrap(), direct.clone());
        prop_assert_eq!(a.mul(&gamma_matrix(&s, m, p)).unwrap().det().unwrap(), direct);
    }

    #[test]
    fn zeros_of_the_wronskian_meet_the_dual_flag(((_, m, p), w, s) in shape().prop_flat_map(|(f, m, p)| (Just((f, m, p)), subspace_in(f, m, m + p), scalar_in(f)))) {
        let Some(w) = w else { return Ok(()) };
        // Wr(W)(s) = 0 iff W meets E_p(s) nontrivially.
        let e = flag_e(&s, p, m, p).unwrap();
        prop_assert_eq!(wronskian_of(&w).eval(&s).is_zero(), intersects_nontrivially(&w, &e).unwrap());
        prop_assert_eq!(osculating_f(&s, m, m, p).unwrap().plane_dim(), m);
    }

    #[test]
    fn grassmann_duality(w in shape().prop_flat_map(|(f, m, p)| subspace_in(f, m, m + p))) {
        let Some(w) = w else { return Ok(()) };
        prop_assume!(w.plane_dim() < w.ambient_dim());
        let (lhs, rhs) = duality_vectors(&w).unwrap();
        prop_assert!(proportional(&lhs, &rhs));
    }

    #[test]
    fn partials_are_affine_differences(((f, m, p), x, s) in shape().prop_flat_map(|(f, m, p)| (Just((f, m, p)), matrix_in(f, m, p), scalars_in(f, m * p)))) {
        // F_l is affine in each single chart coordinate, so the ε-expansion partial equals
        // the forward difference F(x + E_{γk}) - F(x).
        prop_assume!(distinct(&s));
        let section = LocalSection::new(Chart::standard(f, m, p), s).unwrap();
        let base = section.eval(&x).unwrap();
        for gamma in 1..=m {
            for k in 1..=p {
                let mut bumped = x.clone();
                bumped.set(gamma - 1, k - 1, x.get(gamma - 1, k - 1) + &f.one());
                let moved = section.eval(&bumped).unwrap();
                for ell in 1..=m * p {
                    prop_assert_eq!(section.partial(&x, gamma, k, ell).unwrap(), &moved[ell - 1] - &base[ell - 1]);
                }
            }
        }
    }

    #[test]
    fn diagram_commutes(((f, m, p), x, s) in shape().prop_flat_map(|(f, m, p)| (Just((f, m, p)), matrix_in(f, m, p), scalars_in(f, m * p)))) {
        prop_assume!(distinct(&s));
        let section = LocalSection::new(Chart::standard(f, m, p), s).unwrap();
        prop_assert_eq!(section.diagram_composite(&x).unwrap(), section.eval(&x).unwrap());
        prop_assert_eq!(section.wronski_affine(&x).unwrap().len(), m * p);
    }
}

#[test]
fn section_vanishes_exactly_on_the_fiber() {
    let chart = Chart::standard(Q, 2, 2);
    let x = Matrix::from_int_rows(Q, &[&[1, 2], &[0, -1]]);
    let w = chart_point(&chart, &x).unwrap();
    let wr = wronskian_of(&w);
    let on: Vec<Scalar> = (0..4).map(|i| Scalar::from_int(Q, i)).collect();
    let values = section_values(&w, &on);
    for (s, v) in on.iter().zip(&values) {
        assert_eq!(v, &wr.eval(s));
    }
}

#[test]
fn distinguished_multiindices_cover_the_chart() {
    // α(γ,k) for the standard chart picks out exactly the coordinate x_{γk} up to sign.
    let (m, p) = (2, 3);
    let mut seen = Vec::new();
    for gamma in 1..=m {
        for k in 1..=p {
            let a = distinguished_multiindex(gamma, k, m, p).unwrap();
            assert_eq!(a.len(), m);
            seen.push(a);
        }
    }
    seen.sort_by_key(|a| a.entries().to_vec());
    seen.dedup();
    assert_eq!(seen.len(), m * p);
    let top = MultiIndex::new(vec![4, 5], 5).unwrap();
    let center = chart_point(&Chart::standard(Q, m, p), &Matrix::zeros(Q, m, p)).unwrap();
    assert!(plucker(&center, &top).unwrap().is_one());
}
