use std::fmt::Write as _;

use bisyl_core::suite::CriterionResult;
use bisyl_core::{FuzzReport, PolyStats, QuotientReport, VerificationReport, Witness};

/// Any report a command can produce.
#[derive(Debug)]
pub enum Report {
    Verification(VerificationReport),
    Quotient(Box<QuotientReport>),
    Fuzz(FuzzReport),
}

impl Report {
    pub fn pass(&self) -> bool {
        match self {
            Report::Verification(r) => r.pass,
            Report::Quotient(r) => r.pass,
            Report::Fuzz(r) => r.pass(),
        }
    }

    pub fn to_json(&self) -> String {
        let v = match self {
            Report::Verification(r) => serde_json::to_string(r),
            Report::Quotient(r) => serde_json::to_string(r),
            Report::Fuzz(r) => serde_json::to_string(r),
        };
        v.expect("reports serialize")
    }

    /// One summary line, plus witness lines on failure.
    pub fn human(&self) -> String {
        let mut s = String::new();
        let status = if self.pass() { "PASS" } else { "FAIL" };
        match self {
            Report::Verification(r) => {
                let _ = write!(s, "{status} {} n={} k={}", r.check.as_str(), r.n, r.k);
                if let Some([n, p, m]) = r.dims {
                    let _ = write!(s, " dims=({n},{p},{m})");
                }
                if let Some(stats) = &r.stats {
                    let _ = write!(s, "  [{}]", stats_text(stats));
                }
                let _ = writeln!(s, "  ({} ms, symbolic)", r.elapsed_ms);
                witness_lines(&mut s, r.witness.as_ref());
            }
            Report::Quotient(r) => {
                let _ = write!(s, "{status} quotient {} n={} k={}", r.mode.as_str(), r.n, r.k);
                let _ = write!(s, "  det W [{}]", stats_text(&r.detw_stats));
                let _ = write!(s, "  divisor [{}]", stats_text(&r.divisor_stats));
                if let Some(q) = &r.stats {
                    let _ = write!(s, "  quotient [{}]", stats_text(q));
                }
                if let Some(u) = &r.unconstrained_detw_stats {
                    let _ = write!(s, "  unconstrained det W [{}]", stats_text(u));
                }
                let _ = writeln!(s, "  ({} ms)", r.elapsed_ms);
                witness_lines(&mut s, r.witness.as_ref());
            }
            Report::Fuzz(r) => {
                let p = &r.plan;
                let kind = if r.control.is_some() { "control" } else { "fuzz" };
                let _ = write!(
                    s,
                    "{status} {kind} {} n={} k={}  {} of {} trials fail  (seed {}, bound {}",
                    p.theorem.as_str(),
                    p.n,
                    p.k,
                    r.failures,
                    p.trials,
                    p.seed,
                    p.bound
                );
                if let Some(c) = r.control {
                    if c.vacuous {
                        s.push_str(", vacuous");
                    }
                    if c.escalated {
                        s.push_str(", escalated");
                    }
                }
                let _ = writeln!(s, ", {} ms, {})", r.elapsed_ms, r.evidence);
                // A control's failures are expected; only show real ones.
                if r.control.is_none() {
                    witness_lines(&mut s, r.first_failure.as_ref());
                }
            }
        }
        s
    }
}

fn stats_text(stats: &PolyStats) -> String {
    let degree = stats.degree.map_or_else(|| "-".to_owned(), |d| d.to_string());
    format!(
        "{} monomials, degree {degree}, content {}",
        stats.monomials, stats.content
    )
}

fn witness_lines(s: &mut String, witness: Option<&Witness>) {
    let Some(w) = witness else { return };
    let _ = writeln!(s, "  witness: {}", w.description);
    if let Some(t) = w.trial {
        let _ = writeln!(s, "    trial {t}");
    }
    if let Some((rows, cols)) = &w.subsets {
        let _ = writeln!(s, "    I = {rows}, J = {cols}");
    }
    for (name, text) in &w.matrices {
        let _ = writeln!(s, "    {name}:");
        for line in text.lines() {
            let _ = writeln!(s, "      {line}");
        }
    }
    for (name, value) in &w.values {
        let _ = writeln!(s, "    {name} = {value}");
    }
}

pub fn criterion_line(r: &CriterionResult) -> String {
    let status = if r.pass { "PASS" } else { "FAIL" };
    format!(
        "{:>2} {status}  {:<42} {:>8} ms  {}\n",
        r.id, r.name, r.elapsed_ms, r.detail
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use bisyl_core::{CheckKind, IndexSet};

    #[test]
    fn failures_show_their_witness() {
        let rows = IndexSet::new(3, vec![1, 2]).unwrap();
        let r = VerificationReport {
            check: CheckKind::Griolv,
            n: 3,
            k: 2,
            mode: None,
            dims: None,
            pass: false,
            stats: None,
            witness: Some(
                Witness::new("entry differs")
                    .with_subsets(&rows, &rows)
                    .with_matrix("A", "1 1 int\n7\n")
                    .with_value("lhs", 3),
            ),
            elapsed_ms: 5,
        };
        let text = Report::Verification(r).human();
        assert_eq!(
            text,
            "FAIL griolv n=3 k=2  (5 ms, symbolic)\n  witness: entry differs\n    I = {1,2}, J = {1,2}\n    A:\n      1 1 int\n      7\n    lhs = 3\n"
        );
    }

    #[test]
    fn criterion_lines_are_fixed_width() {
        let r = CriterionResult {
            id: 3,
            name: "x",
            pass: true,
            detail: "ok".into(),
            elapsed_ms: 12,
        };
        assert_eq!(
            criterion_line(&r),
            format!(" 3 PASS  x{}       12 ms  ok\n", " ".repeat(41))
        );
    }
}
