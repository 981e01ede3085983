//! Degree counts: Schubert's number `n_C`, the real count `n_R`, and standard Young
//! tableaux of rectangular shape as an independent check of `n_C`.

use std::collections::BTreeMap;
use std::fmt::Write;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

fn product_of_factorials(args: impl IntoIterator<Item = i64>) -> Option<BigUint> {
    args.into_iter()
        .try_fold(BigUint::one(), |acc, a| (a >= 0).then(|| acc * factorial(a as u64)))
}

/// `1!2!⋯(p-1)! (mp)! / (m!(m+1)!⋯(m+p-1)!)`.
pub fn n_complex(m: u64, p: u64) -> BigUint {
    assert!(m >= 1 && p >= 1, "n_complex needs m, p >= 1");
    let num = (1..p).fold(factorial(m * p), |acc, i| acc * factorial(i));
    let den = (m..m + p).fold(BigUint::one(), |acc, i| acc * factorial(i));
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

/// The closed formula for `n_R` evaluated literally. `None` when some factorial
/// argument is negative (which happens for `p > m + 1`).
pub fn n_real_formula(m: u64, p: u64) -> Option<BigUint> {
    assert!(m >= 1 && p >= 1, "n_real needs m, p >= 1");
    if (m + p) % 2 == 0 {
        return Some(BigUint::zero());
    }
    let (mi, pi) = (m as i64, p as i64);
    // 1!⋯(p-1)! · (m-1)!(m-2)!⋯(m-p+1)! · (mp/2)!
    let num = product_of_factorials((1..pi).chain((1..pi).map(|k| mi - k)).chain([mi * pi / 2]))?;
    // (m-p+2)!(m-p+4)!⋯(m+p-2)! · ((m-p+1)/2)!((m-p+3)/2)!⋯((m+p-1)/2)!
    let steps = (0..pi - 1).map(|k| mi - pi + 2 + 2 * k);
    let halves = (0..pi).map(|k| (mi - pi + 1) / 2 + k);
    let den = product_of_factorials(steps.chain(halves))?;
    let (q, r) = num.div_rem(&den);
    r.is_zero().then_some(q)
}

/// `n_R(m, p)`, using `n_R(m,p) = n_R(p,m)` when the literal formula is undefined.
/// `None` only if neither orientation is evaluable.
pub fn n_real(m: u64, p: u64) -> Option<BigUint> {
    n_real_formula(m, p).or_else(|| n_real_formula(p, m))
}

/// Standard Young tableaux of the `m × p` rectangle by the hook length formula.
pub fn syt_count(m: u64, p: u64) -> BigUint {
    let mut hooks = BigUint::one();
    for i in 0..m {
        for j in 0..p {
            hooks *= (m - 1 - i) + (p - 1 - j) + 1;
        }
    }
    factorial(m * p) / hooks
}

/// Standard Young tableaux of the `m × p` rectangle by enumerating every filling,
/// placing `1, 2, …` one cell at a time.
pub fn syt_count_brute_force(m: usize, p: usize) -> u64 {
    fn rec(rows: &mut [usize], p: usize, remaining: usize) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut total = 0;
        for r in 0..rows.len() {
            let fits = rows[r] < p && (r == 0 || rows[r - 1] > rows[r]);
            if fits {
                rows[r] += 1;
                total += rec(rows, p, remaining - 1);
                rows[r] -= 1;
            }
        }
        total
    }
    let mut rows = vec![0; m];
    rec(&mut rows, p, m * p)
}

/// `(m, p) ↦ (n_C, n_R)`.
#[derive(Clone, Debug, Default, Serialize)]
pub struct DegreeCountTable {
    pub ms: Vec<u64>,
    pub ps: Vec<u64>,
    #[serde(serialize_with = "serialize_entries")]
    pub entries: BTreeMap<(u64, u64), (BigUint, Option<BigUint>)>,
}

fn serialize_entries<S: serde::Serializer>(
    entries: &BTreeMap<(u64, u64), (BigUint, Option<BigUint>)>,
    ser: S,
) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Cell {
        m: u64,
        p: u64,
        n_complex: String,
        n_real: Option<String>,
    }
    ser.collect_seq(entries.iter().map(|(&(m, p), (c, r))| Cell {
        m,
        p,
        n_complex: c.to_string(),
        n_real: r.as_ref().map(BigUint::to_string),
    }))
}

impl DegreeCountTable {
    pub fn build(ms: impl IntoIterator<Item = u64>, ps: impl IntoIterator<Item = u64>) -> Self {
        let ms: Vec<u64> = ms.into_iter().collect();
        let ps: Vec<u64> = ps.into_iter().collect();
        let mut entries = BTreeMap::new();
        for &m in &ms {
            for &p in &ps {
                entries.insert((m, p), (n_complex(m, p), n_real(m, p)));
            }
        }
        DegreeCountTable { ms, ps, entries }
    }

    /// Grid with rows indexed by `p` and columns by `m`.
    pub fn render(&self, title: &str, pick: impl Fn(&(BigUint, Option<BigUint>)) -> String) -> String {
        let cells: Vec<Vec<String>> = self
            .ps
            .iter()
            .map(|&p| self.ms.iter().map(|&m| pick(&self.entries[&(m, p)])).collect())
            .collect();
        let width = cells
            .iter()
            .flatten()
            .map(String::len)
            .chain(self.ms.iter().map(|m| m.to_string().len()))
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        let _ = writeln!(out, "{title}");
        let _ = write!(out, "p\\m |");
        for m in &self.ms {
            let _ = write!(out, " {m:>width$}");
        }
        out.push('\n');
        let _ = writeln!(out, "{}", "-".repeat(5 + (width + 1) * self.ms.len()));
        for (p, row) in self.ps.iter().zip(&cells) {
            let _ = write!(out, "{p:>3} |");
            for c in row {
                let _ = write!(out, " {c:>width$}");
            }
            out.push('\n');
        }
        out
    }

    pub fn render_complex(&self) -> String {
        self.render("n_C", |(c, _)| c.to_string())
    }

    pub fn render_real(&self) -> String {
        self.render("n_R", |(_, r)| r.as_ref().map_or_else(|| "?".to_string(), BigUint::to_string))
    }
}
