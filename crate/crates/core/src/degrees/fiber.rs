//! Fibers of the Wronski map over a fixed target.
//!
//! Over `F_q` the whole fiber lies in the standard chart, and `F_ℓ(x)` is affine in
//! each row of `x` separately. So the scan runs over the first `m-1` rows
//! (`q^{(m-1)p}` choices) and solves a linear system for the last row. Over `Q` the
//! case `m = p = 2` is solved exactly: the fiber is a line in Plücker space meeting
//! the Klein quadric.

use crate::grassmann::{chart_point, distinguished_multiindex, Chart, MultiIndex, Subspace};
use crate::polyalg::{vandermonde, Matrix};
use crate::scalars::{factorial_invertible, FieldSpec, Scalar};
use crate::wronski::{section_values, wronskian_of};

use super::DegreesError;

/// Default cap on the number of scanned partial chart points.
pub const DEFAULT_SCAN_BUDGET: u64 = 50_000_000;

fn check_target(field: FieldSpec, m: usize, p: usize, s_list: &[Scalar]) -> Result<(), DegreesError> {
    if !factorial_invertible((m + p - 1) as u64, field) {
        return Err(DegreesError::CharacteristicTooSmall(m + p - 1, field));
    }
    if s_list.len() != m * p {
        return Err(DegreesError::Unsupported(format!("need {} scalars, got {}", m * p, s_list.len())));
    }
    if s_list.iter().any(|s| s.field() != field) {
        return Err(DegreesError::Unsupported("target scalars from another field".into()));
    }
    if vandermonde(field, s_list).is_zero() {
        return Err(DegreesError::RepeatedScalars);
    }
    Ok(())
}

/// Number of partial chart points [`fiber_enumerate`] visits.
pub fn scan_size(q: u64, m: usize, p: usize) -> Option<u64> {
    q.checked_pow(((m - 1) * p) as u32)
}

fn det_mod(mut a: Vec<Vec<u64>>, q: u64) -> u64 {
    let n = a.len();
    let mut det = 1u64;
    for c in 0..n {
        let Some(r) = (c..n).find(|&r| a[r][c] != 0) else {
            return 0;
        };
        if r != c {
            a.swap(r, c);
            det = (q - det) % q;
        }
        det = det * a[c][c] % q;
        let inv = crate::scalars::pow_mod(a[c][c], q - 2, q);
        for r in c + 1..n {
            let f = a[r][c] * inv % q;
            if f == 0 {
                continue;
            }
            for k in c..n {
                a[r][k] = (a[r][k] + q - f * a[c][k] % q) % q;
            }
        }
    }
    det
}

/// Solutions of `A y = b` over `F_q` (all of them, enumerating free variables).
fn solve_mod(mut a: Vec<Vec<u64>>, mut b: Vec<u64>, q: u64) -> Vec<Vec<u64>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(i) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(i, r);
        b.swap(i, r);
        let inv = crate::scalars::pow_mod(a[r][c], q - 2, q);
        for k in 0..cols {
            a[r][k] = a[r][k] * inv % q;
        }
        b[r] = b[r] * inv % q;
        for i in 0..rows {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for k in 0..cols {
                    a[i][k] = (a[i][k] + q - f * a[r][k] % q) % q;
                }
                b[i] = (b[i] + q - f * b[r] % q) % q;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if b[r..].iter().any(|&v| v != 0) {
        return Vec::new();
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let count = q.pow(free.len() as u32);
    (0..count)
        .map(|mut idx| {
            let mut y = vec![0u64; cols];
            for &f in &free {
                y[f] = idx % q;
                idx /= q;
            }
            for (pi, &pc) in pivots.iter().enumerate() {
                let mut v = b[pi];
                for &f in &free {
                    v = (v + q - a[pi][f] * y[f] % q) % q;
                }
                y[pc] = v;
            }
            y
        })
        .collect()
}

/// All rational points of the fiber over `s_list`, by exhaustive scan of the
/// standard chart. Requires `q^{(m-1)p} <= budget`.
pub fn fiber_enumerate(field: FieldSpec, m: usize, p: usize, s_list: &[Scalar], budget: u64) -> Result<Vec<Subspace>, DegreesError> {
    let FieldSpec::Prime(q) = field else {
        return Err(DegreesError::Unsupported("exhaustive fiber scans need a finite field".into()));
    };
    check_target(field, m, p, s_list)?;
    let total = scan_size(q, m, p).filter(|&t| t <= budget).ok_or(DegreesError::BudgetExceeded(budget))?;
    let n = m + p;
    let s: Vec<u64> = s_list.iter().map(|v| v.residue_value().expect("residue")).collect();

    // d[l][r][j] = (t^r)^{(j)}(s_l) mod q
    let d: Vec<Vec<Vec<u64>>> = s
        .iter()
        .map(|&sl| {
            (0..n)
                .map(|r| {
                    (0..m)
                        .map(|j| {
                            if r < j {
                                return 0;
                            }
                            let falling = (r - j + 1..=r).fold(1u64, |acc, k| acc * k as u64 % q);
                            falling * crate::scalars::pow_mod(sl, (r - j) as u64, q) % q
                        })
                        .collect()
                })
                .collect()
        })
        .collect();

    let chart = Chart::standard(field, m, p);
    let rows = m * p;
    let mut fixed = vec![0u64; (m - 1) * p];
    let mut cols = vec![0u64; (m - 1) * m];
    let mut minor = vec![0u64; (m - 1) * (m - 1)];
    let mut cof = vec![0u64; m];
    // Augmented system [A | b], one row per s_l.
    let mut system = vec![0u64; rows * (p + 1)];
    let mut scratch = system.clone();
    let mut found = Vec::new();
    for idx in 0..total {
        let mut rest = idx;
        for v in fixed.iter_mut() {
            *v = rest % q;
            rest /= q;
        }
        for (l, dl) in d.iter().enumerate() {
            // Derivative columns of the first m-1 moving basis vectors at s_l.
            for i in 0..m - 1 {
                for j in 0..m {
                    let mut v = dl[p + i][j];
                    for k in 0..p {
                        v = (v + fixed[i * p + k] * dl[k][j]) % q;
                    }
                    cols[i * m + j] = v;
                }
            }
            // det(cols | v) = cof · v, expanding along the last column.
            for (j, c) in cof.iter_mut().enumerate() {
                let mut r2 = 0;
                for r in (0..m).filter(|&r| r != j) {
                    for i in 0..m - 1 {
                        minor[r2 * (m - 1) + i] = cols[i * m + r];
                    }
                    r2 += 1;
                }
                let mdet = small_det(&mut minor, m - 1, q);
                *c = if (j + m - 1) % 2 == 0 { mdet } else { (q - mdet) % q };
            }
            let dot = |r: usize| (0..m).fold(0u64, |acc, j| (acc + cof[j] * dl[r][j]) % q);
            let row = &mut system[l * (p + 1)..(l + 1) * (p + 1)];
            for (k, v) in row.iter_mut().take(p).enumerate() {
                *v = dot(k);
            }
            row[p] = (q - dot(p + m - 1)) % q;
        }
        scratch.copy_from_slice(&system);
        if !consistent(&mut scratch, rows, p, q) {
            continue;
        }
        let a = system.chunks(p + 1).map(|r| r[..p].to_vec()).collect();
        let b = system.chunks(p + 1).map(|r| r[p]).collect();
        for y in solve_mod(a, b, q) {
            let x = Matrix::from_fn(m, p, |i, j| {
                let v = if i + 1 < m { fixed[i * p + j] } else { y[j] };
                Scalar::residue(v, q)
            });
            let w = chart_point(&chart, &x)?;
            debug_assert!(section_values(&w, s_list).iter().all(Scalar::is_zero));
            found.push(w);
        }
    }
    Ok(found)
}

/// Determinant of the leading `n × n` block of `buf` (row-major), destroying it.
fn small_det(buf: &mut [u64], n: usize, q: u64) -> u64 {
    match n {
        0 => 1,
        1 => buf[0],
        2 => (buf[0] * buf[3] % q + q - buf[1] * buf[2] % q) % q,
        _ => det_mod((0..n).map(|i| buf[i * n..(i + 1) * n].to_vec()).collect(), q),
    }
}

/// Whether the augmented `rows × (cols+1)` system has a solution; destroys `sys`.
fn consistent(sys: &mut [u64], rows: usize, cols: usize, q: u64) -> bool {
    let w = cols + 1;
    let mut r = 0;
    for c in 0..cols {
        let Some(i) = (r..rows).find(|&i| sys[i * w + c] != 0) else {
            continue;
        };
        for k in 0..w {
            sys.swap(i * w + k, r * w + k);
        }
        let inv = crate::scalars::pow_mod(sys[r * w + c], q - 2, q);
        for i in r + 1..rows {
            let f = sys[i * w + c] * inv % q;
            if f != 0 {
                for k in c..w {
                    sys[i * w + k] = (sys[i * w + k] + q - f * sys[r * w + k] % q) % q;
                }
            }
        }
        r += 1;
    }
    (r..rows).all(|i| sys[i * w + cols] == 0)
}

/// `z_α(Γ(s))` for every `α` of size 2 in `1..=4`, lexicographic.
fn gamma_minors(s: &Scalar) -> Vec<Scalar> {
    let g = crate::wronski::gamma_matrix(s, 2, 2);
    MultiIndex::all(4, 2)
        .iter()
        .map(|a| g.transpose().select_columns(&a.columns()).det().expect("2x2"))
        .collect()
}

/// Klein quadric `z12 z34 - z13 z24 + z14 z23` on lexicographic coordinates.
fn klein(z: &[Scalar]) -> Scalar {
    &(&z[0] * &z[5]) - &(&z[1] * &z[4]) + &z[2] * &z[3]
}

/// Fiber of `Gr(2,4) → P^4` over `s_list` in any field: by Cauchy–Binet
/// `Wr(W)(s) = Σ_α z_α(W) z_α(Γ(s))`, so the fiber is the line cut out by four
/// linear forms in `P^5` intersected with the Klein quadric. Returns the rational
/// points and whether the fiber has a double point.
pub fn fiber_pencil_2x2(field: FieldSpec, s_list: &[Scalar]) -> Result<(Vec<Subspace>, bool), DegreesError> {
    check_target(field, 2, 2, s_list)?;
    let eqs = Matrix::from_rows(s_list.iter().map(gamma_minors).collect())?;
    let line = eqs.nullspace(field);
    if line.rows() != 2 {
        return Err(DegreesError::Unsupported(format!("degenerate target: solution space of dimension {}", line.rows())));
    }
    let u = line.row(0).to_vec();
    let v = line.row(1).to_vec();
    let a = klein(&u);
    let c = klein(&v);
    let uv: Vec<Scalar> = u.iter().zip(&v).map(|(x, y)| x + y).collect();
    let b = klein(&uv) - &a - &c;
    // Roots [λ:μ] of a λ² + b λμ + c μ².
    let mut params: Vec<(Scalar, Scalar)> = Vec::new();
    let mut double = false;
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return Err(DegreesError::Unsupported("line lies on the Klein quadric".into()));
    }
    if a.is_zero() {
        params.push((field.one(), field.zero()));
        if b.is_zero() {
            double = true;
        } else {
            params.push((-&c, b.clone()));
        }
    } else {
        let disc = &(&b * &b) - &(Scalar::from_int(field, 4) * &a * &c);
        if disc.is_zero() {
            double = true;
        }
        if let Some(r) = disc.sqrt() {
            let two_a = Scalar::from_int(field, 2) * &a;
            params.push((&(-&b) + &r, two_a.clone()));
            if !disc.is_zero() {
                params.push((&(-&b) - &r, two_a));
            }
        }
    }
    let chart = Chart::standard(field, 2, 2);
    let top = MultiIndex::new(vec![3, 4], 4)?;
    let top_pos = MultiIndex::all(4, 2).iter().position(|a| *a == top).expect("present");
    let mut points = Vec::new();
    for (lam, mu) in params {
        let z: Vec<Scalar> = u.iter().zip(&v).map(|(x, y)| &(&lam * x) + &(&mu * y)).collect();
        if z[top_pos].is_zero() {
            // Outside the big cell; cannot happen for distinct targets.
            return Err(DegreesError::Unsupported("fiber point outside the big cell".into()));
        }
        let x = Matrix::from_fn(2, 2, |i, j| {
            let alpha = distinguished_multiindex(i + 1, j + 1, 2, 2).expect("in range");
            let pos = MultiIndex::all(4, 2).iter().position(|a| *a == alpha).expect("present");
            Scalar::sign_power(field, i as u64) * &z[pos] / &z[top_pos]
        });
        let w = chart_point(&chart, &x)?;
        if section_values(&w, s_list).iter().any(|v| !v.is_zero()) || wronskian_of(&w).degree() != Some(4) {
            return Err(DegreesError::Unsupported("pencil point failed verification".into()));
        }
        points.push(w);
    }
    Ok((points, double))
}
