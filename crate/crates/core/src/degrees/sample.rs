//! Split instances: a plane `W` in the big cell whose Wronskian has `mp` distinct
//! roots in the ground field.
//!
//! The basic sampler draws chart coordinates and keeps `W` when `Wr(W)` splits.
//! Over `Q` that rarely happens for `mp > 4`, so [`collect_instances`] also uses
//! three constructions that preserve splitting: affine reparametrization of `t`,
//! the family `span{f², g²}` for `m = 2`, and the apolar dual `Gr(m, n) → Gr(n-m, n)`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::grassmann::{chart_point, Chart, Subspace};
use crate::polyalg::{split_distinct_roots, Matrix, Poly};
use crate::scalars::{factorial_invertible, FieldSpec, Scalar};
use crate::wronski::{in_big_cell, wronskian_of, WronskiInstance};

use super::fiber::{fiber_enumerate, DEFAULT_SCAN_BUDGET};
use super::local::local_degree;
use super::DegreesError;

/// Chart coordinates over `Q` are drawn from integers in `[-RATIONAL_BOX, RATIONAL_BOX]`.
pub const RATIONAL_BOX: i64 = 5;
/// Draws per call to [`sample_instance`] over `Q`.
pub const DEFAULT_RATIONAL_BUDGET: u64 = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleMode {
    /// Independent uniform draws (the box over `Q`, all of `F_q` otherwise).
    Random { seed: u64, budget: u64 },
    /// Chart points of `F_q` in lexicographic order starting at `start`.
    Scan { start: u64, budget: u64 },
}

fn instance_from_point(field: FieldSpec, m: usize, p: usize, x: &Matrix<Scalar>) -> Result<Option<WronskiInstance>, DegreesError> {
    let chart = Chart::standard(field, m, p);
    let w = chart_point(&chart, x)?;
    let wr = wronskian_of(&w);
    if wr.degree() != Some(m * p) {
        return Ok(None);
    }
    match split_distinct_roots(&wr)? {
        Some(roots) => Ok(Some(WronskiInstance::new(chart, roots, w)?)),
        None => Ok(None),
    }
}

/// First split instance found by drawing points of the standard chart.
pub fn sample_instance(field: FieldSpec, m: usize, p: usize, mode: SampleMode) -> Result<Option<WronskiInstance>, DegreesError> {
    if !factorial_invertible((m + p - 1) as u64, field) {
        return Err(DegreesError::CharacteristicTooSmall(m + p - 1, field));
    }
    match mode {
        SampleMode::Random { seed, budget } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..budget {
                let x = Matrix::from_fn(m, p, |_, _| match field {
                    FieldSpec::Rational => Scalar::from_int(field, rng.gen_range(-RATIONAL_BOX..=RATIONAL_BOX)),
                    FieldSpec::Prime(q) => Scalar::residue(rng.gen_range(0..q), q),
                });
                if let Some(inst) = instance_from_point(field, m, p, &x)? {
                    return Ok(Some(inst));
                }
            }
            Ok(None)
        }
        SampleMode::Scan { start, budget } => {
            let FieldSpec::Prime(q) = field else {
                return Err(DegreesError::Unsupported("sequential scans need a finite field".into()));
            };
            let total = q.checked_pow((m * p) as u32).unwrap_or(u64::MAX);
            for idx in (start..total).take(budget as usize) {
                let mut rest = idx;
                let x = Matrix::from_fn(m, p, |_, _| {
                    let v = rest % q;
                    rest /= q;
                    Scalar::residue(v, q)
                });
                if let Some(inst) = instance_from_point(field, m, p, &x)? {
                    return Ok(Some(inst));
                }
            }
            if start == 0 && budget >= total {
                return Err(DegreesError::NoSplitInstance);
            }
            Ok(None)
        }
    }
}

/// `(W, S) ↦ (W∘φ, φ^{-1}(S))` for `φ(t) = a t + b`: `Wr(W∘φ)(t) = a^{m(m-1)/2} Wr(W)(φ(t))`.
pub fn transport(inst: &WronskiInstance, a: &Scalar, b: &Scalar) -> Result<WronskiInstance, DegreesError> {
    if a.is_zero() {
        return Err(DegreesError::Unsupported("affine map with a = 0".into()));
    }
    let polys: Vec<Poly> = inst.w.polys().iter().map(|f| f.compose_affine(a, b)).collect();
    let w = Subspace::from_polys(inst.field, &polys, inst.m + inst.p)?;
    let s_list = inst.s_list.iter().map(|s| (s - b) / a).collect();
    Ok(WronskiInstance::new(Chart::standard(inst.field, inst.m, inst.p), s_list, w)?)
}

/// `span{f², g²}` in `Gr(2, 5)` with `f = (t-u)² - r1²(t-v)²`, `g = (t-u)² - r2²(t-v)²`.
/// Since `Wr(f², g²) = 2fg·Wr(f, g)` and `Wr(f, g) ∝ (t-u)(t-v)`, the Wronskian vanishes at
/// `u`, `v` and `(u ∓ r_i v)/(1 ∓ r_i)`.
pub fn composition_instance(field: FieldSpec, u: &Scalar, v: &Scalar, r1: &Scalar, r2: &Scalar) -> Result<Option<WronskiInstance>, DegreesError> {
    let a = Poly::linear_root(u);
    let b = Poly::linear_root(v);
    let (a2, b2) = (&a * &a, &b * &b);
    let f = &a2 - &b2.scale(&(r1 * r1));
    let g = &a2 - &b2.scale(&(r2 * r2));
    let w = match Subspace::from_polys(field, &[&f * &f, &g * &g], 5) {
        Ok(w) => w,
        Err(_) => return Ok(None),
    };
    if !in_big_cell(&w) {
        return Ok(None);
    }
    match split_distinct_roots(&wronskian_of(&w))? {
        Some(roots) => Ok(Some(WronskiInstance::new(Chart::standard(field, 2, 3), roots, w)?)),
        None => Ok(None),
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

/// Orthogonal complement under the `SL_2`-invariant pairing
/// `⟨f, g⟩ = Σ_k (-1)^k f_k g_{N-k} / C(N, k)` on `k_N[t]`. Apolar duals have
/// proportional Wronskians, so split instances of `Gr(m, n)` give split instances of
/// `Gr(n-m, n)` over the same target.
pub fn apolar_dual(w: &Subspace) -> Result<Subspace, DegreesError> {
    let field = w.field();
    let n = w.ambient_dim();
    let big_n = n - 1;
    if !factorial_invertible(big_n as u64, field) {
        return Err(DegreesError::CharacteristicTooSmall(big_n, field));
    }
    let weights: Vec<Scalar> = (0..n)
        .map(|k| Scalar::sign_power(field, k as u64) / Scalar::from_bigint(field, &binomial(big_n, k)))
        .collect();
    // ⟨f, g⟩ = Σ_j g_j · (f_{N-j} (-1)^{N-j} / C(N, j)); collect the covector of each row of W.
    let covectors = Matrix::from_fn(w.plane_dim(), n, |i, j| {
        w.basis().get(i, big_n - j) * &weights[big_n - j]
    });
    Ok(Subspace::new(covectors.nullspace(field))?)
}

fn dual_instance(inst: &WronskiInstance) -> Result<Option<WronskiInstance>, DegreesError> {
    let dual = apolar_dual(&inst.w)?;
    if !in_big_cell(&dual) {
        return Ok(None);
    }
    let (m, p) = (dual.plane_dim(), inst.m);
    Ok(WronskiInstance::new(Chart::standard(inst.field, m, p), inst.s_list.clone(), dual).ok())
}

/// One representative of each `AGL_1(F_q)`-orbit of `k`-subsets of `F_q`.
pub fn canonical_targets(q: u64, k: usize) -> Vec<Vec<u64>> {
    let affine = |set: &[u64], a: u64, b: u64| {
        let mut out: Vec<u64> = set.iter().map(|&s| (a * s + b) % q).collect();
        out.sort_unstable();
        out
    };
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    let mut subset: Vec<u64> = (0..k as u64).collect();
    if k as u64 > q {
        return reps;
    }
    loop {
        if !seen.contains(&subset) {
            reps.push(subset.clone());
            for a in 1..q {
                for b in 0..q {
                    seen.insert(affine(&subset, a, b));
                }
            }
        }
        // next k-subset in lexicographic order
        let Some(i) = (0..k).rev().find(|&i| subset[i] < q - (k - i) as u64) else {
            break;
        };
        subset[i] += 1;
        for j in i + 1..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
    reps
}

fn instance_key(inst: &WronskiInstance) -> (Vec<Scalar>, String) {
    let mut s = inst.s_list.clone();
    s.sort();
    (s, inst.w.rref().to_string())
}

/// Every split instance over `F_q`: the fiber over each orbit representative,
/// transported by all of `AGL_1(F_q)`. `None` when the scans exceed `budget`.
pub fn enumerate_instances(field: FieldSpec, m: usize, p: usize, budget: u64) -> Result<Vec<WronskiInstance>, DegreesError> {
    let FieldSpec::Prime(q) = field else {
        return Err(DegreesError::Unsupported("exhaustive enumeration needs a finite field".into()));
    };
    if !factorial_invertible((m + p - 1) as u64, field) {
        return Err(DegreesError::CharacteristicTooSmall(m + p - 1, field));
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for target in canonical_targets(q, m * p) {
        let s_list: Vec<Scalar> = target.iter().map(|&v| Scalar::residue(v, q)).collect();
        for w in fiber_enumerate(field, m, p, &s_list, budget)? {
            let base = WronskiInstance::new(Chart::standard(field, m, p), s_list.clone(), w)?;
            for a in 1..q {
                for b in 0..q {
                    let moved = transport(&base, &Scalar::residue(a, q), &Scalar::residue(b, q))?;
                    if seen.insert(instance_key(&moved)) {
                        out.push(moved);
                    }
                }
            }
        }
    }
    Ok(out)
}

fn rational_seeds(m: usize, p: usize, seed: u64, rounds: u64) -> Result<Vec<WronskiInstance>, DegreesError> {
    let q = FieldSpec::Rational;
    let mut seeds = Vec::new();
    for r in 0..rounds {
        let mode = SampleMode::Random { seed: seed.wrapping_add(r), budget: DEFAULT_RATIONAL_BUDGET };
        if let Some(inst) = sample_instance(q, m, p, mode)? {
            seeds.push(inst);
        }
    }
    let int = |v: i64| Scalar::from_int(q, v);
    if (m, p) == (2, 3) || (m, p) == (3, 2) {
        for (r1, r2) in [(2, 3), (2, 5), (3, 5), (2, 7), (3, 4), (4, 5)] {
            if let Some(inst) = composition_instance(q, &int(0), &int(1), &int(r1), &int(r2))? {
                if (m, p) == (2, 3) {
                    seeds.push(inst);
                } else if let Some(dual) = dual_instance(&inst)? {
                    seeds.push(dual);
                }
            }
        }
    }
    Ok(seeds)
}

/// Up to `count` distinct split instances. Over `F_q` all instances are enumerated
/// (within `DEFAULT_SCAN_BUDGET` per target) and a seeded random subset is returned.
/// Over `Q` the sampler's hits and the constructions above are spread out by affine
/// reparametrization.
pub fn collect_instances(field: FieldSpec, m: usize, p: usize, count: usize, seed: u64) -> Result<Vec<WronskiInstance>, DegreesError> {
    match field {
        FieldSpec::Prime(_) => {
            let mut all = enumerate_instances(field, m, p, DEFAULT_SCAN_BUDGET)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut picked = Vec::new();
            while picked.len() < count && !all.is_empty() {
                picked.push(all.swap_remove(rng.gen_range(0..all.len())));
            }
            Ok(picked)
        }
        FieldSpec::Rational => {
            let seeds = rational_seeds(m, p, seed, if m * p <= 4 { 12 } else { 3 })?;
            let mut seen = BTreeSet::new();
            let mut out = Vec::new();
            for s in &seeds {
                if seen.insert(instance_key(s)) {
                    out.push(s.clone());
                }
            }
            let mut maps = Vec::new();
            for (an, ad) in [(1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (3, 1), (-1, 2), (3, 2)] {
                for b in -2..=2 {
                    maps.push((an, ad, b));
                }
            }
            'outer: for (an, ad, b) in maps {
                for s in &seeds {
                    if out.len() >= count {
                        break 'outer;
                    }
                    let a = Scalar::from_ratio(field, an, ad)?;
                    let moved = transport(s, &a, &Scalar::from_int(field, b))?;
                    if seen.insert(instance_key(&moved)) {
                        out.push(moved);
                    }
                }
            }
            out.truncate(count);
            Ok(out)
        }
    }
}

/// Up to `count` instances whose fiber point is a simple zero.
pub fn simple_instances(field: FieldSpec, m: usize, p: usize, count: usize, seed: u64) -> Result<Vec<WronskiInstance>, DegreesError> {
    let pool = collect_instances(field, m, p, usize::MAX, seed)?;
    let mut out = Vec::new();
    for inst in pool {
        if out.len() >= count {
            break;
        }
        match local_degree(&inst.w, &inst.s_list) {
            Ok(_) => out.push(inst),
            Err(DegreesError::NonSimple) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wronski::section_values;

    #[test]
    fn chart_center_is_rejected() {
        let f7 = FieldSpec::Prime(7);
        let x = Matrix::zeros(f7, 2, 2);
        assert!(instance_from_point(f7, 2, 2, &x).unwrap().is_none());
    }

    #[test]
    fn scan_finds_instance_over_f7() {
        let f7 = FieldSpec::Prime(7);
        let inst = sample_instance(f7, 2, 2, SampleMode::Scan { start: 0, budget: 7u64.pow(4) }).unwrap().unwrap();
        assert!(section_values(&inst.w, &inst.s_list).iter().all(Scalar::is_zero));
    }

    #[test]
    fn composition_family_splits() {
        let q = FieldSpec::Rational;
        let int = |v| Scalar::from_int(q, v);
        let inst = composition_instance(q, &int(0), &int(1), &int(2), &int(3)).unwrap().unwrap();
        let mut expected: Vec<Scalar> = vec![
            int(0),
            int(1),
            int(2),
            Scalar::from_ratio(q, 2, 3).unwrap(),
            Scalar::from_ratio(q, 3, 2).unwrap(),
            Scalar::from_ratio(q, 3, 4).unwrap(),
        ];
        expected.sort();
        assert_eq!(inst.s_list, expected);
    }

    #[test]
    fn apolar_dual_preserves_wronskian() {
        let q = FieldSpec::Rational;
        let int = |v| Scalar::from_int(q, v);
        let inst = composition_instance(q, &int(0), &int(1), &int(2), &int(5)).unwrap().unwrap();
        let dual = apolar_dual(&inst.w).unwrap();
        assert_eq!(dual.plane_dim(), 3);
        assert_eq!(wronskian_of(&dual).monic(), wronskian_of(&inst.w).monic());
    }

    #[test]
    fn orbit_representatives() {
        assert_eq!(canonical_targets(11, 9).len(), 1);
        assert_eq!(canonical_targets(7, 2).len(), 1);
        assert!(canonical_targets(5, 6).is_empty());
    }

    #[test]
    fn transport_is_exact() {
        let f11 = FieldSpec::Prime(11);
        let inst = sample_instance(f11, 2, 2, SampleMode::Random { seed: 3, budget: 5000 }).unwrap().unwrap();
        let moved = transport(&inst, &Scalar::residue(3, 11), &Scalar::residue(5, 11)).unwrap();
        assert!(section_values(&moved.w, &moved.s_list).iter().all(Scalar::is_zero));
    }
}
