mod common;

use common::*;
use wronski_core::degrees::{
    adapt_basis, adapt_basis_with, constant_c, enumerate_instances, fiber_enumerate, fiber_pencil_2x2, global_degree,
    jacobian_det_at_zero, local_degree, local_degree_in_chart, matrix_b, matrix_b_wronskians, osculating_in_chart,
    sample_instance, simple_instances, DegreesError, SampleMode,
};
use wronski_core::grassmann::{chart_point, Chart, Subspace};
use wronski_core::gwforms::HyperbolicVerdict;
use wronski_core::polyalg::split_distinct_roots;
use wronski_core::scalars::square_class;
use wronski_core::wronski::{section_values, wronskian, wronskian_of, LocalSection};
use wronski_core::{FieldSpec, Matrix, Poly, Scalar};

fn ints(field: FieldSpec, v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&a| Scalar::from_int(field, a)).collect()
}

#[test]
fn adapt_basis_examples() {
    let center = chart_point(&Chart::standard(Q, 2, 3), &Matrix::zeros(Q, 2, 3)).unwrap();
    let chart = adapt_basis(&center).unwrap();
    for (k, e) in chart.basis().iter().enumerate() {
        assert_eq!(e, &Poly::monomial(Q.one(), k));
    }

    let w = Subspace::from_polys(Q, &[Poly::from_ints(Q, &[1, 0, 1]), Poly::from_ints(Q, &[0, 0, 0, 1])], 4).unwrap();
    let chart = adapt_basis(&w).unwrap();
    let expected = [
        Poly::from_ints(Q, &[1]),
        Poly::from_ints(Q, &[0, 1]),
        Poly::from_ints(Q, &[1, 0, 1]),
        Poly::from_ints(Q, &[0, 0, 0, 1]),
    ];
    assert_eq!(chart.basis(), &expected);
    assert!(chart_point(&chart, &Matrix::zeros(Q, 2, 2)).unwrap().same_space(&w));
    assert!(!chart.change_matrix().det().unwrap().is_zero());
}

#[test]
fn constant_examples() {
    assert_eq!(constant_c(Q, 2, 2, &ints(Q, &[0, 1, 2, 3])), Scalar::from_int(Q, 12));
    // m = 2: the sign is (-1)^p.
    let s = ints(Q, &[0, 1, 2, 3, 4, 5]);
    let v = wronski_core::polyalg::vandermonde(Q, &s);
    assert_eq!(constant_c(Q, 2, 3, &s), -v);
    assert!(constant_c(Q, 2, 2, &ints(Q, &[0, 1, 1, 3])).is_zero());
}

#[test]
fn matrix_b_for_lines() {
    // m = 1: B[(1,k), l] = e_k(s_l).
    let w = Subspace::from_polys(Q, &[Poly::from_ints(Q, &[2, 1, 0, 1])], 4).unwrap();
    let chart = adapt_basis(&w).unwrap();
    let s = ints(Q, &[1, 2, 3]);
    let b = matrix_b(&chart, &s).unwrap();
    for k in 0..3 {
        for (l, sl) in s.iter().enumerate() {
            assert_eq!(b.get(k, l), &chart.basis()[k].eval(sl));
        }
    }
}

#[test]
fn matrix_b_at_the_standard_center() {
    // m = p = 2, e_r = t^{r-1}: B[(γ,k), l] = Wr(t^{k-1}, t^{other})(s_l).
    let chart = Chart::standard(Q, 2, 2);
    let s = ints(Q, &[1, 2, 3, 5]);
    let b = matrix_b(&chart, &s).unwrap();
    let mono = |k: usize| Poly::monomial(Q.one(), k);
    for gamma in 1..=2 {
        let other = if gamma == 1 { 3 } else { 2 };
        for k in 1..=2 {
            let wr = wronskian(&[mono(k - 1), mono(other)]);
            for (l, sl) in s.iter().enumerate() {
                assert_eq!(b.get((gamma - 1) * 2 + k - 1, l), &wr.eval(sl));
            }
        }
    }
}

#[test]
fn matrix_b_reality_check_for_m_2() {
    // Row l of F_2(s_l) is (a_l; b_l) with a = e(s_l), b = e'(s_l); the distinguished minors
    // are a_k b_top - a_top b_k with top = p+2 for γ = 1 and p+1 for γ = 2.
    for field in [Q, F11] {
        for inst in simple_instances(field, 2, 3, 3, 5).unwrap() {
            let chart = adapt_basis(&inst.w).unwrap();
            let b = matrix_b(&chart, &inst.s_list).unwrap();
            let p = 3;
            for (l, s) in inst.s_list.iter().enumerate() {
                let f = osculating_in_chart(&chart, s);
                for gamma in 1..=2 {
                    let top = if gamma == 1 { p + 1 } else { p };
                    for k in 0..p {
                        let expect = &(f.get(0, k) * f.get(1, top)) - &(f.get(0, top) * f.get(1, k));
                        assert_eq!(b.get((gamma - 1) * p + k, l), &expect);
                    }
                }
            }
        }
    }
}

#[test]
fn matrix_b_two_ways() {
    for field in [Q, F7, F11] {
        for (m, p) in [(1, 3), (2, 2), (2, 3), (3, 2)] {
            for inst in simple_instances(field, m, p, 3, 11).unwrap_or_default() {
                let chart = adapt_basis(&inst.w).unwrap();
                assert_eq!(matrix_b(&chart, &inst.s_list).unwrap(), matrix_b_wronskians(&chart, &inst.s_list).unwrap());
            }
        }
    }
}

/// Independent oracle: `F_ℓ` is affine in each chart coordinate, so the Jacobian at a
/// fiber point is `F_ℓ(E_{γk})` with `E_{γk}` a matrix unit.
fn jacobian_by_matrix_units(chart: &Chart, s: &[Scalar]) -> Matrix<Scalar> {
    let (field, m, p) = (chart.field(), chart.m(), chart.p());
    let section = LocalSection::new(chart.clone(), s.to_vec()).unwrap();
    let mut rows = Vec::new();
    for gamma in 0..m {
        for k in 0..p {
            let mut e = Matrix::zeros(field, m, p);
            e.set(gamma, k, field.one());
            rows.push(section.eval(&e).unwrap());
        }
    }
    Matrix::from_rows(rows).unwrap()
}

#[test]
fn jacobian_against_independent_expansion() {
    let f7 = FieldSpec::Prime(7);
    for seed in 0..5 {
        let Some(inst) = sample_instance(f7, 2, 3, SampleMode::Random { seed, budget: 50_000 }).unwrap() else {
            continue;
        };
        let chart = adapt_basis(&inst.w).unwrap();
        let oracle = jacobian_by_matrix_units(&chart, &inst.s_list);
        assert_eq!(jacobian_det_at_zero(&chart, &inst.s_list).unwrap(), oracle.det_cofactor().unwrap());
    }
    for inst in simple_instances(Q, 2, 2, 5, 3).unwrap() {
        let chart = adapt_basis(&inst.w).unwrap();
        let oracle = jacobian_by_matrix_units(&chart, &inst.s_list);
        assert_eq!(jacobian_det_at_zero(&chart, &inst.s_list).unwrap(), oracle.det_cofactor().unwrap());
    }
}

#[test]
fn local_degree_agrees_on_sampled_instances() {
    for field in [F7, F11, Q] {
        for (m, p) in [(2, 3), (3, 2)] {
            for inst in simple_instances(field, m, p, 6, 2).unwrap() {
                let r = local_degree(&inst.w, &inst.s_list).unwrap();
                assert!(r.agrees && r.scalar_identity, "{field} ({m},{p})");
                assert_eq!(r.degree_formula.rank(), 1);
                assert!(section_values(&inst.w, &inst.s_list).iter().all(Scalar::is_zero));
            }
        }
    }
}

#[test]
fn local_degree_rejects_bad_input() {
    let f7 = FieldSpec::Prime(7);
    // Every split instance of Gr(2,4) over F_7 is a double point of its fiber.
    let inst = enumerate_instances(f7, 2, 2, 10_000).unwrap().pop().unwrap();
    assert_eq!(local_degree(&inst.w, &inst.s_list).unwrap_err(), DegreesError::NonSimple);
    // Not a zero.
    let w = chart_point(&Chart::standard(Q, 2, 2), &Matrix::from_int_rows(Q, &[&[1, 0], &[0, 1]])).unwrap();
    assert!(matches!(local_degree(&w, &ints(Q, &[1, 2, 3, 4])), Err(DegreesError::NotAZero(_))));
    // Characteristic too small for (m+p-1)!.
    let f5 = FieldSpec::Prime(5);
    let w5 = chart_point(&Chart::standard(f5, 3, 3), &Matrix::zeros(f5, 3, 3)).unwrap();
    let s5: Vec<Scalar> = (0..9).map(|v| Scalar::residue(v % 5, 5)).collect();
    assert!(matches!(local_degree(&w5, &s5), Err(DegreesError::CharacteristicTooSmall(5, _))));
}

/// Change of basis inside `W` by `A` and of the complement by `C` multiplies the local
/// degree by `⟨det(A)^p det(C)^m⟩`; for `m`, `p` even the class is basis independent.
#[test]
fn basis_dependence_law() {
    for field in [F11, Q] {
        for (m, p) in [(2, 2), (2, 3), (3, 2)] {
            for inst in simple_instances(field, m, p, 4, 9).unwrap() {
                let base = adapt_basis(&inst.w).unwrap();
                let reference = local_degree_in_chart(&base, &inst.s_list).unwrap();
                let e = base.basis().to_vec();
                let (comp, span) = (e[..p].to_vec(), e[p..].to_vec());
                let c = Scalar::from_int(field, 2);
                let d = Scalar::from_int(field, 3);
                let mut span2 = span.clone();
                span2[0] = &span[0].scale(&c) + &span[m - 1].scale(&d);
                if m == 1 {
                    span2[0] = span[0].scale(&c);
                }
                let mut comp2 = comp.clone();
                comp2[0] = &comp[0].scale(&d) + &span[0];
                let chart = adapt_basis_with(&inst.w, comp2, span2).unwrap();
                let moved = local_degree_in_chart(&chart, &inst.s_list).unwrap();
                // det A = c and det C = d (mod W).
                let factor = c.pow(p as u64) * d.pow(m as u64);
                let lhs = square_class(&moved.degree_formula.generators()[0]).unwrap();
                let rhs = square_class(&(&reference.degree_formula.generators()[0] * &factor)).unwrap();
                assert_eq!(lhs, rhs, "{field} ({m},{p})");
                if m % 2 == 0 && p % 2 == 0 {
                    assert_eq!(lhs, square_class(&reference.degree_formula.generators()[0]).unwrap());
                }
            }
        }
    }
}

#[test]
fn fiber_scan_and_pencil_agree_over_small_fields() {
    for q in [7u64, 11] {
        let field = FieldSpec::Prime(q);
        let mut targets = 0;
        for a in 0..q {
            for b in a + 1..q {
                for c in b + 1..q {
                    for d in c + 1..q {
                        let s: Vec<Scalar> = [a, b, c, d].iter().map(|&v| Scalar::residue(v, q)).collect();
                        let scan = fiber_enumerate(field, 2, 2, &s, 10_000).unwrap();
                        let (pencil, _) = fiber_pencil_2x2(field, &s).unwrap();
                        assert!(scan.len() <= 2);
                        assert_eq!(scan.len(), pencil.len());
                        for w in &pencil {
                            assert!(scan.iter().any(|v| v.same_space(w)));
                        }
                        targets += 1;
                    }
                }
            }
        }
        assert_eq!(targets, (q * (q - 1) * (q - 2) * (q - 3) / 24) as usize);
    }
}

#[test]
fn sampled_point_is_in_its_fiber() {
    let field = F11;
    for seed in 0..4 {
        let inst = sample_instance(field, 2, 3, SampleMode::Random { seed, budget: 100_000 }).unwrap().unwrap();
        let fiber = fiber_enumerate(field, 2, 3, &inst.s_list, 100_000).unwrap();
        assert!(fiber.iter().any(|w| w.same_space(&inst.w)));
        assert!(fiber.len() <= 5);
    }
}

#[test]
fn global_degree_over_f11_and_q() {
    let field = F11;
    let inst = simple_instances(field, 2, 2, 1, 4).unwrap().pop().unwrap();
    let report = global_degree(field, 2, 2, &inst.s_list, 10_000).unwrap();
    if report.all_simple {
        assert_eq!(report.sum.rank(), report.rational_count);
    }
    if report.rational_count == 2 && report.all_simple {
        assert_eq!(report.verdict, Some(HyperbolicVerdict::True));
    }
    let q_inst = simple_instances(Q, 2, 2, 1, 4).unwrap().pop().unwrap();
    let q_report = global_degree(Q, 2, 2, &q_inst.s_list, 0).unwrap();
    if q_report.rational_count == 2 && q_report.all_simple {
        assert_eq!(q_report.signature, Some(0));
    }
    assert!(q_report.fiber_points.iter().any(|w| w.same_space(&q_inst.w)));
    assert!(matches!(global_degree(Q, 2, 3, &q_inst.s_list, 0), Err(DegreesError::Unsupported(_))));
}

#[test]
fn odd_parity_has_no_verdict() {
    let inst = simple_instances(F11, 2, 3, 1, 0).unwrap().pop().unwrap();
    let report = global_degree(F11, 2, 3, &inst.s_list, 100_000).unwrap();
    assert!(report.verdict.is_none());
    assert!(report.diagnostics.iter().any(|d| d.contains("even")));
    assert!(report.rational_count <= report.expected_count);
}

#[test]
fn wronskian_of_sample_is_split() {
    let inst = simple_instances(Q, 3, 2, 1, 0).unwrap().pop().unwrap();
    let roots = split_distinct_roots(&wronskian_of(&inst.w)).unwrap().unwrap();
    assert_eq!(roots, inst.s_list);
}
