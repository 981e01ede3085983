use std::fmt::Write;

use wronski_core::degrees::{GlobalDegreeReport, LocalIndexReport};
use wronski_core::grassmann::Subspace;
use wronski_core::{Poly, Scalar};

fn join(v: &[Scalar]) -> String {
    v.iter().map(Scalar::to_bare_string).collect::<Vec<_>>().join(", ")
}

pub fn wronskian(w: &Subspace, wr: &Poly, big_cell: bool, roots: Option<&[Scalar]>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "W        = {w}");
    let _ = writeln!(out, "Wr(W)(t) = {wr}");
    let degree = wr.degree().map_or_else(|| "-inf".to_string(), |d| d.to_string());
    let _ = writeln!(out, "degree   = {degree}{}", if big_cell { " (big cell)" } else { "" });
    match roots {
        Some(r) => {
            let _ = write!(out, "split with distinct roots: {}", join(r));
        }
        None => {
            let _ = write!(out, "not split with distinct roots");
        }
    }
    out
}

pub fn local(r: &LocalIndexReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "W             = {}", r.w);
    let _ = writeln!(out, "s             = {}", join(&r.s_list));
    let _ = writeln!(out, "C             = {}", r.constant_c.to_bare_string());
    let _ = writeln!(out, "det B         = {}", r.det_b.to_bare_string());
    let _ = writeln!(out, "det Jacobian  = {}", r.jacobian_det.to_bare_string());
    let _ = writeln!(out, "direct degree = {}", r.degree_direct);
    let _ = writeln!(out, "<C det B>     = {}", r.degree_formula);
    let _ = writeln!(out, "scalar identity Jac = sign * det B: {}", r.scalar_identity);
    let _ = write!(out, "agrees: {}", r.agrees);
    out
}

pub fn global(r: &GlobalDegreeReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "field {}, (m, p) = ({}, {}), s = {}", r.field, r.m, r.p, join(&r.s_list));
    let _ = writeln!(out, "fiber: {} rational of {} expected, all simple: {}", r.rational_count, r.expected_count, r.all_simple);
    for w in &r.fiber_points {
        let l = r.local.iter().find(|l| l.w.same_space(w));
        let deg = l.map_or_else(|| "non-simple".to_string(), |l| l.degree_direct.to_string());
        let _ = writeln!(out, "  {w}  local degree {deg}");
    }
    let _ = writeln!(out, "sum: {}", r.sum.render());
    if let Some(sig) = r.signature {
        let _ = writeln!(out, "signature: {sig}");
    }
    match r.verdict {
        Some(v) => {
            let _ = write!(out, "{}, verdict {v}", r.sum.render());
        }
        None => {
            let _ = write!(out, "verdict withheld");
        }
    }
    for d in &r.diagnostics {
        let _ = write!(out, "\nnote: {d}");
    }
    out
}
