//! Sum of local degrees over a whole fiber, compared with `(n_C/2)·H`.

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::grassmann::Subspace;
use crate::gwforms::{GwClass, HyperbolicVerdict};
use crate::scalars::{FieldSpec, Scalar};
use crate::tableaux::n_complex;
use crate::wronski::serialize_scalars;

use super::fiber::{fiber_enumerate, fiber_pencil_2x2};
use super::local::{local_degree, LocalIndexReport};
use super::sample::{canonical_targets, collect_instances, sample_instance, SampleMode};
use super::DegreesError;

#[derive(Clone, Debug, Serialize)]
pub struct GlobalDegreeReport {
    pub field: FieldSpec,
    pub m: usize,
    pub p: usize,
    #[serde(serialize_with = "serialize_scalars")]
    pub s_list: Vec<Scalar>,
    pub fiber_points: Vec<Subspace>,
    pub all_simple: bool,
    pub rational_count: usize,
    pub expected_count: usize,
    pub sum: GwClass,
    /// Comparison of `sum` with `(n_C/2)·H`; withheld unless the fiber is split and simple
    /// and `m`, `p` are both even.
    pub verdict: Option<HyperbolicVerdict>,
    pub signature: Option<i64>,
    pub local: Vec<LocalIndexReport>,
    pub diagnostics: Vec<String>,
}

/// Enumerate the fiber over `s_list` and add up the local degrees.
///
/// Over `F_q` the fiber is found by exhaustive scan; over `Q` only `m = p = 2` is
/// supported.
pub fn global_degree(field: FieldSpec, m: usize, p: usize, s_list: &[Scalar], budget: u64) -> Result<GlobalDegreeReport, DegreesError> {
    let expected_count = n_complex(m as u64, p as u64).to_usize().unwrap_or(usize::MAX);
    let mut diagnostics = Vec::new();
    let mut all_simple = true;
    let fiber_points = match field {
        FieldSpec::Prime(_) => fiber_enumerate(field, m, p, s_list, budget)?,
        FieldSpec::Rational if (m, p) == (2, 2) => {
            let (points, double) = fiber_pencil_2x2(field, s_list)?;
            if double {
                all_simple = false;
                diagnostics.push("fiber has a double point: degenerate instance".into());
            }
            points
        }
        FieldSpec::Rational => {
            return Err(DegreesError::Unsupported("fibers over Q are only computed for m = p = 2".into()));
        }
    };
    let mut sum = GwClass::zero(field);
    let mut local = Vec::new();
    for w in &fiber_points {
        match local_degree(w, s_list) {
            Ok(report) => {
                sum = sum.add(&report.degree_direct)?;
                local.push(report);
            }
            Err(DegreesError::NonSimple) => {
                all_simple = false;
                diagnostics.push(format!("non-simple fiber point {w}: degenerate instance"));
            }
            Err(e) => return Err(e),
        }
    }
    let rational_count = fiber_points.len();
    if rational_count < expected_count {
        diagnostics.push(format!(
            "only {rational_count} of {expected_count} fiber points are rational: non-split fiber, resample sList"
        ));
    }
    let even = m % 2 == 0 && p % 2 == 0;
    if !even {
        diagnostics.push("m and p are not both even: the Wronski map is not relatively orientable, no verdict".into());
    }
    let verdict = (even && all_simple && rational_count == expected_count)
        .then(|| sum.equals_hyperbolic_multiple(expected_count / 2));
    Ok(GlobalDegreeReport {
        field,
        m,
        p,
        s_list: s_list.to_vec(),
        fiber_points,
        all_simple,
        rational_count,
        expected_count,
        signature: sum.signature(),
        sum,
        verdict,
        local,
        diagnostics,
    })
}

/// Targets whose fiber is split with all points simple, i.e. reports with a verdict.
/// Over `F_q` every `mp`-subset is tried in lexicographic order (orbit representatives
/// first); over `Q` targets come from [`collect_instances`].
pub fn full_fiber_targets(field: FieldSpec, m: usize, p: usize, want: usize, seed: u64, budget: u64) -> Result<Vec<GlobalDegreeReport>, DegreesError> {
    let mut out = Vec::new();
    let mut tried: Vec<Vec<Scalar>> = Vec::new();
    let mut consider = |s_list: Vec<Scalar>, out: &mut Vec<GlobalDegreeReport>| -> Result<(), DegreesError> {
        let mut key = s_list.clone();
        key.sort();
        if tried.contains(&key) {
            return Ok(());
        }
        tried.push(key);
        let report = global_degree(field, m, p, &s_list, budget)?;
        if report.all_simple && report.rational_count == report.expected_count {
            out.push(report);
        }
        Ok(())
    };
    match field {
        FieldSpec::Prime(q) => {
            let reps = canonical_targets(q, m * p);
            for rep in &reps {
                for a in 1..q {
                    for b in 0..q {
                        if out.len() >= want {
                            return Ok(out);
                        }
                        let s = rep.iter().map(|&v| Scalar::residue((a * v + b) % q, q)).collect();
                        consider(s, &mut out)?;
                    }
                }
            }
        }
        FieldSpec::Rational => {
            for inst in collect_instances(field, m, p, 4 * want, seed)? {
                if out.len() >= want {
                    break;
                }
                consider(inst.s_list, &mut out)?;
            }
        }
    }
    Ok(out)
}

/// Resample split targets until one has a full, simple fiber (`--sample`).
pub fn sample_global(field: FieldSpec, m: usize, p: usize, seed: u64, budget: u64) -> Result<GlobalDegreeReport, DegreesError> {
    if let FieldSpec::Prime(_) = field {
        for attempt in 0..64u64 {
            let mode = SampleMode::Random { seed: seed.wrapping_add(attempt), budget: 10_000 };
            if let Some(inst) = sample_instance(field, m, p, mode)? {
                let report = global_degree(field, m, p, &inst.s_list, budget)?;
                if report.verdict.is_some() {
                    return Ok(report);
                }
            }
        }
    }
    full_fiber_targets(field, m, p, 1, seed, budget)?
        .pop()
        .ok_or(DegreesError::NoSplitInstance)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hyperbolic_over_f11() {
        let f11 = FieldSpec::Prime(11);
        let reports = full_fiber_targets(f11, 2, 2, 3, 0, 1_000).unwrap();
        assert_eq!(reports.len(), 3);
        for r in reports {
            assert_eq!(r.verdict, Some(HyperbolicVerdict::True));
            assert_eq!(r.sum.rank(), 2);
        }
    }

    #[test]
    fn non_split_target_is_diagnosed() {
        let f11 = FieldSpec::Prime(11);
        let s: Vec<Scalar> = (0..4).map(|v| Scalar::residue(v, 11)).collect();
        let r = global_degree(f11, 2, 2, &s, 1_000).unwrap();
        if r.rational_count < 2 {
            assert!(r.verdict.is_none());
            assert!(r.diagnostics.iter().any(|d| d.contains("resample")));
        }
    }
}
