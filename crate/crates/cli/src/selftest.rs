//! Property suites behind `wronski selftest`, sized by level and seeded.

use std::fmt::Write;

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wronski_core::degrees::{self, DegreesError};
use wronski_core::grassmann::{duality_vectors, proportional, Chart, Subspace};
use wronski_core::polyalg::vandermonde;
use wronski_core::scalars::factorial_invertible;
use wronski_core::tableaux::{n_complex, syt_count, syt_count_brute_force};
use wronski_core::wronski::{ev_jacobian, factorial_product, wr_via_gamma, wronskian, wronskian_of, LocalSection};
use wronski_core::{FieldSpec, Matrix, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Level {
    /// `mp <= 4`.
    Quick,
    /// `mp <= 9`.
    Full,
}

impl Level {
    fn max_mp(self) -> usize {
        match self {
            Level::Quick => 4,
            Level::Full => 9,
        }
    }

    fn samples(self) -> usize {
        match self {
            Level::Quick => 10,
            Level::Full => 30,
        }
    }
}

pub struct Suite {
    name: String,
    checks: usize,
    failures: Vec<String>,
    skipped: Vec<String>,
}

pub struct Summary {
    level: Level,
    seed: u64,
    suites: Vec<Suite>,
}

impl Summary {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(|s| s.failures.is_empty())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "selftest level {:?}, seed {}", self.level, self.seed);
        for s in &self.suites {
            let status = if s.failures.is_empty() { "PASS" } else { "FAIL" };
            let _ = write!(out, "[{status}] {}: {} checks", s.name, s.checks);
            if !s.skipped.is_empty() {
                let _ = write!(out, ", skipped {}", s.skipped.join("; "));
            }
            for f in &s.failures {
                let _ = write!(out, "\n    {f}");
            }
            out.push('\n');
        }
        let _ = write!(out, "{}", if self.all_passed() { "all suites passed" } else { "FAILURES" });
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "level": format!("{:?}", self.level).to_lowercase(),
            "seed": self.seed,
            "passed": self.all_passed(),
            "suites": self.suites.iter().map(|s| serde_json::json!({
                "name": s.name,
                "checks": s.checks,
                "failures": s.failures,
                "skipped": s.skipped,
            })).collect::<Vec<_>>(),
        })
    }
}

fn scalar(rng: &mut ChaCha8Rng, field: FieldSpec) -> Scalar {
    match field {
        FieldSpec::Rational => Scalar::from_ratio(field, rng.gen_range(-7..=7), rng.gen_range(1..=3)).expect("nonzero denominator"),
        FieldSpec::Prime(q) => Scalar::residue(rng.gen_range(0..q), q),
    }
}

fn matrix(rng: &mut ChaCha8Rng, field: FieldSpec, rows: usize, cols: usize) -> Matrix<Scalar> {
    Matrix::from_fn(rows, cols, |_, _| scalar(rng, field))
}

fn distinct(rng: &mut ChaCha8Rng, field: FieldSpec, k: usize) -> Option<Vec<Scalar>> {
    if field.order().is_some_and(|q| (k as u64) > q) {
        return None;
    }
    let mut out: Vec<Scalar> = Vec::new();
    while out.len() < k {
        let s = scalar(rng, field);
        if !out.contains(&s) {
            out.push(s);
        }
    }
    Some(out)
}

fn shapes(level: Level) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for m in 1..=level.max_mp() {
        for p in 1..=level.max_mp() {
            if m * p <= level.max_mp() {
                v.push((m, p));
            }
        }
    }
    v
}

const FIELDS: [FieldSpec; 3] = [FieldSpec::Rational, FieldSpec::Prime(7), FieldSpec::Prime(11)];

fn suite(name: &str) -> Suite {
    Suite { name: name.to_string(), checks: 0, failures: Vec::new(), skipped: Vec::new() }
}

fn record(s: &mut Suite, ok: bool, what: impl FnOnce() -> String) {
    s.checks += 1;
    if !ok {
        s.failures.push(what());
    }
}

fn counts(level: Level) -> Suite {
    let mut s = suite("tableaux oracle");
    let max = if level == Level::Quick { 4 } else { 6 };
    for m in 1..=max {
        for p in 1..=max {
            record(&mut s, syt_count(m, p) == n_complex(m, p), || format!("hook length ({m},{p})"));
            if m * p <= 10 {
                let brute = syt_count_brute_force(m as usize, p as usize);
                record(&mut s, n_complex(m, p) == brute.into(), || format!("brute force ({m},{p})"));
            }
        }
    }
    s
}

fn wronski_identities(level: Level, rng: &mut ChaCha8Rng) -> Suite {
    let mut s = suite("Wronskian as determinant, leading coefficient");
    for field in FIELDS {
        for (m, p) in shapes(level) {
            if !factorial_invertible((m + p - 1) as u64, field) {
                s.skipped.push(format!("{field} ({m},{p})"));
                continue;
            }
            for _ in 0..level.samples() {
                let a = matrix(rng, field, m, m + p);
                let t = scalar(rng, field);
                if let Ok(w) = Subspace::new(a.clone()) {
                    let ok = wr_via_gamma(&a, &t).is_ok_and(|v| v == wronskian_of(&w).eval(&t));
                    record(&mut s, ok, || format!("det(M Gamma) {field} ({m},{p})"));
                }
                let x = matrix(rng, field, m, p);
                let wr = wronskian(&Chart::standard(field, m, p).moving_basis(&x).expect("shape"));
                record(&mut s, wr.coeff(m * p) == factorial_product(field, m) && wr.degree() == Some(m * p), || {
                    format!("leading coefficient {field} ({m},{p})")
                });
            }
        }
    }
    s
}

fn duality(level: Level, rng: &mut ChaCha8Rng) -> Suite {
    let mut s = suite("Grassmann duality");
    for field in FIELDS {
        for (m, p) in shapes(level) {
            for _ in 0..level.samples() {
                if let Ok(w) = Subspace::new(matrix(rng, field, m, m + p)) {
                    let ok = duality_vectors(&w).is_ok_and(|(a, b)| proportional(&a, &b));
                    record(&mut s, ok, || format!("{field} ({m},{p})"));
                }
            }
        }
    }
    s
}

fn diagram(level: Level, rng: &mut ChaCha8Rng) -> Suite {
    let mut s = suite("diagram commutation, evaluation Jacobian");
    for field in FIELDS {
        for (m, p) in shapes(level) {
            if !factorial_invertible((m + p - 1) as u64, field) {
                continue;
            }
            let Some(_) = distinct(rng, field, m * p) else {
                s.skipped.push(format!("{field} ({m},{p})"));
                continue;
            };
            for _ in 0..level.samples() {
                let s_list = distinct(rng, field, m * p).expect("checked above");
                let section = LocalSection::new(Chart::standard(field, m, p), s_list.clone()).expect("valid");
                let x = matrix(rng, field, m, p);
                let ok = section.diagram_composite(&x).ok() == section.eval(&x).ok();
                record(&mut s, ok, || format!("diagram {field} ({m},{p})"));
                let ok = ev_jacobian(&s_list).det().ok() == Some(vandermonde(field, &s_list));
                record(&mut s, ok, || format!("ev Jacobian {field} ({m},{p})"));
            }
        }
    }
    s
}

fn local_index(level: Level, seed: u64) -> Suite {
    let mut s = suite("local index formula");
    let per_config = if level == Level::Quick { 3 } else { 10 };
    for field in FIELDS {
        for (m, p) in shapes(level) {
            if m > 3 || p > 3 || !factorial_invertible((m + p - 1) as u64, field) {
                continue;
            }
            match degrees::simple_instances(field, m, p, per_config, seed) {
                Ok(insts) if insts.is_empty() => s.skipped.push(format!("{field} ({m},{p}): no simple split instance")),
                Ok(insts) => {
                    for inst in insts {
                        let ok = degrees::local_degree(&inst.w, &inst.s_list).is_ok_and(|r| r.agrees && r.scalar_identity);
                        record(&mut s, ok, || format!("{field} ({m},{p}) at {}", inst.w));
                    }
                }
                Err(DegreesError::BudgetExceeded(_)) => s.skipped.push(format!("{field} ({m},{p}): scan budget")),
                Err(e) => s.failures.push(format!("{field} ({m},{p}): {e}")),
            }
        }
    }
    s
}

fn global(level: Level, seed: u64) -> Suite {
    let mut s = suite("global degree m = p = 2");
    let want = if level == Level::Quick { 3 } else { 10 };
    for field in [FieldSpec::Prime(11), FieldSpec::Prime(13), FieldSpec::Rational] {
        match degrees::full_fiber_targets(field, 2, 2, want, seed, 1_000_000) {
            Ok(reports) => {
                for r in reports {
                    let ok = r.verdict.is_some_and(|v| v != wronski_core::gwforms::HyperbolicVerdict::False)
                        && (field.is_finite() || r.signature == Some(0));
                    record(&mut s, ok, || format!("{field} target {:?}", r.s_list));
                }
            }
            Err(e) => s.failures.push(format!("{field}: {e}")),
        }
    }
    s
}

pub fn run(level: Level, seed: u64) -> Summary {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let suites = vec![
        counts(level),
        wronski_identities(level, &mut rng),
        duality(level, &mut rng),
        diagram(level, &mut rng),
        local_index(level, seed),
        global(level, seed),
    ];
    Summary { level, seed, suites }
}
