//! Text and JSON rendering.

use std::io::{self, Write};

use monocurve::cmcheck::{CMVerdict, Certificate, Method};
use monocurve::families::MemberReport;
use monocurve::report::{AnalysisReport, Timings};
use serde::{Deserialize, Serialize};

/// What `analyze --json` prints: the deterministic report and, apart from
/// it, the wall-clock timings.
#[derive(Debug, Serialize, Deserialize, schemars::JsonSchema)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub report: AnalysisReport,
    pub timings: Timings,
}

/// Header of the sweep CSV, in column order.
pub const SWEEP_COLUMNS: [&str; 14] = [
    "n1",
    "n2",
    "n3",
    "n4",
    "case",
    "mu",
    "num_mingens",
    "symmetric",
    "gorenstein_case",
    "complete_intersection",
    "cm",
    "cm_method",
    "nondecreasing",
    "numerator",
];

fn method(m: &Method) -> String {
    match m {
        Method::HerzogOracle => "exhaustive check".into(),
        Method::ClosedForm { case } => format!("closed form, Gorenstein case {case}"),
        Method::AppendixPredicate { case } => format!("case {case} predicate"),
        Method::CaseOneSufficient => "case 1 sufficient conditions".into(),
    }
}

fn write_verdict(w: &mut impl Write, label: &str, v: &CMVerdict) -> io::Result<()> {
    writeln!(w, "{label:<20}{} ({})", v.is_cm, method(&v.method))?;
    match &v.certificate {
        Certificate::Violation(x) => writeln!(
            w,
            "{:<20}x2^{} x3^{} x4^{} in degree {} has length {} > 1 + {}",
            "",
            x.v[0],
            x.v[1],
            x.v[2],
            x.degree,
            x.v.iter().sum::<u32>(),
            x.max_len_rest
        ),
        Certificate::BoxExhausted { monomials } => writeln!(w, "{:<20}{monomials} monomials checked", ""),
        Certificate::Trace { lines } => {
            for l in lines {
                writeln!(w, "{:<20}{l}", "")?;
            }
            Ok(())
        }
    }
}

pub fn write_report(w: &mut impl Write, r: &AnalysisReport, t: &Timings) -> io::Result<()> {
    let [n1, n2, n3, n4] = r.generators;
    writeln!(w, "{:<20}{n1} {n2} {n3} {n4}", "generators")?;
    let s = &r.semigroup;
    writeln!(w, "{:<20}{} (Frobenius number {}, {} gaps)", "symmetric", s.symmetric, s.frobenius, s.gaps)?;
    let tr = &r.toric;
    let [a1, a2, a3, a4] = tr.a_values;
    writeln!(w, "{:<20}{} (a = {a1} {a2} {a3} {a4}, mu = {})", "case", tr.case, tr.mu)?;
    writeln!(w, "{:<20}{}", "minimal generators", tr.minimal_generators.len())?;
    for g in &tr.minimal_generators {
        writeln!(w, "  {:<36}degree {}", g.binomial, g.degree)?;
    }
    for (name, set) in [("I", &tr.i_set), ("R", &tr.r_set), ("unclassified", &tr.unclassified)] {
        if !set.is_empty() {
            writeln!(w, "{:<20}{}", name, set.join(", "))?;
        }
    }
    for a in &tr.anomalies {
        writeln!(w, "{:<20}{a}", "note")?;
    }
    if let Some(g) = &r.gorenstein {
        writeln!(w, "{:<20}case {} ({})", "gorenstein", g.case, g.closed_form.branch)?;
        // a decisive closed form is printed with its verdict below
        let shown = g.closed_form.verdict.is_none();
        for c in g.closed_form.checks.iter().filter(|_| shown) {
            writeln!(w, "{:<20}{}: {} <= {} {}", "", c.label, c.lhs, c.rhs, if c.holds { "holds" } else { "fails" })?;
        }
    }
    match &r.cm.verdict {
        Some(v) => write_verdict(w, "cohen-macaulay", v)?,
        None => writeln!(w, "{:<20}undecided", "cohen-macaulay")?,
    }
    if let Some(f) = &r.cm.fast_path {
        if r.cm.verdict.as_ref() != Some(f) {
            write_verdict(w, "criterion", f)?;
        }
    }
    if let Some(h) = &r.hilbert {
        writeln!(w, "{:<20}{}", "tangent cone ideal", h.tangent_cone_leading_ideal.join(", "))?;
        writeln!(w, "{:<20}({}) / (1 - t)", "hilbert series", h.reduced_numerator_text)?;
        let vals: Vec<String> = h.hf_values.iter().map(ToString::to_string).collect();
        writeln!(w, "{:<20}{}", "hilbert function", vals.join(" "))?;
        writeln!(w, "{:<20}{}", "non-decreasing", h.nondecreasing)?;
    }
    writeln!(
        w,
        "{:<20}semigroup {:.1} ms, toric {:.1} ms, cm {:.1} ms, hilbert {:.1} ms",
        "timings", t.semigroup_ms, t.toric_ms, t.cm_ms, t.hilbert_ms
    )
}

pub fn write_member(w: &mut impl Write, r: &MemberReport) -> io::Result<()> {
    match r {
        MemberReport::Rejected { family, parameter, reason } => {
            writeln!(w, "{family} {parameter}: rejected ({reason})")
        }
        MemberReport::Verified { family, parameter, gens, checks } => {
            let ok = checks.iter().all(|c| c.ok);
            writeln!(
                w,
                "{family} {parameter}: ({}, {}, {}, {}) {}",
                gens[0],
                gens[1],
                gens[2],
                gens[3],
                if ok { "verified" } else { "MISMATCH" }
            )?;
            for c in checks {
                if c.ok {
                    writeln!(w, "  ok    {}: {}", c.name, c.found)?;
                } else {
                    writeln!(w, "  FAIL  {}: expected {}, found {}", c.name, c.expected, c.found)?;
                }
            }
            Ok(())
        }
    }
}
