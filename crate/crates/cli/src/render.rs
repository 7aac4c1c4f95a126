//! Plain-text rendering of a [`RunReport`].

use std::fmt::Write;

use crate::report::*;

pub fn render(report: &RunReport) -> String {
    let mut out = String::new();
    // Writing into a String cannot fail.
    let w = &mut out;
    if let Some(v) = &report.verdict {
        let _ = match &v.signature {
            Some(s) => writeln!(w, "verdict: {} (signature {s})", v.status),
            None => writeln!(w, "verdict: {}", v.status),
        };
        for r in &v.reasons {
            let _ = writeln!(w, "  reason: {r}");
        }
    }
    for h in &report.hypotheses {
        let _ = writeln!(w, "  [{}] {}: {}", h.status, h.name, h.detail);
    }
    match &report.result {
        ResultJson::Hypersurface(s) | ResultJson::CiFreerank(s) => signature(w, s),
        ResultJson::Quotient(q) => quotient(w, q),
        ResultJson::Groebner(g) => {
            let _ = writeln!(w, "Groebner basis ({} pair reductions):", g.pair_reductions);
            for p in &g.basis {
                let _ = writeln!(w, "  {p}");
            }
        }
        ResultJson::Nf(nf) => {
            let _ = writeln!(w, "normal form: {}", nf.remainder);
            let _ = writeln!(w, "member: {}", nf.member);
            for (g, c) in nf.generators.iter().zip(&nf.cofactors) {
                let _ = writeln!(w, "  ({c}) * ({g})");
            }
        }
        ResultJson::Dim(d) => {
            let _ = writeln!(w, "Krull dimension: {}", d.dimension);
        }
        ResultJson::Hilbert(h) => {
            let _ = writeln!(w, "Hilbert series: {}", h.series);
            let _ = writeln!(w, "values: {}", h.values.join(", "));
        }
        ResultJson::Verify(v) => {
            for s in &v.steps {
                let mark = if s.ok { "ok" } else { "FAILED" };
                let _ = writeln!(w, "  {mark:6} {}: {}", s.name, s.detail);
            }
            let _ = writeln!(w, "{} report: {}", v.report_kind, if v.ok { "verified" } else { "NOT verified" });
        }
    }
    for warning in &report.warnings {
        let _ = writeln!(w, "warning: {warning}");
    }
    out
}

fn freerank(w: &mut String, label: &str, f: &FreeRankJson) {
    let _ = writeln!(w, "{label}: freerank {} ({})", f.verdict, f.method);
}

fn signature(w: &mut String, s: &SignatureJson) {
    if let Some(j) = &s.jacobian {
        let _ = writeln!(w, "Jacobian:");
        for row in j {
            let _ = writeln!(w, "  [{}]", row.join(", "));
        }
    }
    if let Some(c) = &s.omega_column_test {
        let members: Vec<String> = c
            .columns
            .iter()
            .map(|col| format!("{}:{}", s.ring.variables[col.column], if col.member { "member" } else { "fails" }))
            .collect();
        freerank(w, "Omega", c);
        if !members.is_empty() {
            let _ = writeln!(w, "  columns {}", members.join(" "));
        }
    }
    if let Some(c) = &s.omega_syzygy_test {
        freerank(w, "Omega", c);
    }
    for c in &s.sym_checks {
        freerank(
            w,
            &format!("Sym^{} Omega ({} generators, {} relations)", c.q, c.generators, c.relations),
            &c.freerank,
        );
    }
}

fn quotient(w: &mut String, q: &QuotientJson) {
    let _ = writeln!(w, "group of order {} acting on k^{}", q.order, q.group.n);
    if let Some(m) = &q.molien {
        let _ = writeln!(w, "Molien series: {}", m.rational_function);
        let head: Vec<&str> = m.coefficients.iter().take(11).map(String::as_str).collect();
        let _ = writeln!(w, "a_0..: {}", head.join(", "));
    }
    if !q.table.is_empty() {
        let _ = writeln!(w, "{:>6}  {:>12}  {:>12}", "N", "ratio", "error");
        for r in &q.table {
            let _ = writeln!(w, "{:>6}  {:>12.8}  {:>12.3e}", r.degree, r.ratio_approx, r.error_approx);
        }
    }
}
