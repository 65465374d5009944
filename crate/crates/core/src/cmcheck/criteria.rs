//! Closed-form Cohen-Macaulay criteria for Gorenstein curves, as explicit
//! inequalities between the exponents `a_i`, `a_ij` of the generators.
//!
//! In some sub-branches the inequalities are only necessary; there a
//! failure proves the tangent cone is not Cohen-Macaulay and success leaves
//! the question open.

use serde::{Deserialize, Serialize};

use crate::gorenstein::{GorensteinCase, GorensteinData};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[cfg_attr(feature = "schema", derive(schemars::JsonSchema))]
pub struct InequalityCheck {
    pub label: String,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

impl InequalityCheck {
    fn le(label: &str, lhs: i64, rhs: i64) -> Self {
        InequalityCheck { label: label.to_string(), lhs, rhs, holds: lhs <= rhs }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[cfg_attr(feature = "schema", derive(schemars::JsonSchema))]
pub struct ClosedFormOutcome {
    pub case: GorensteinCase,
    /// Which sub-branch of the case applied.
    pub branch: String,
    /// `false` when the inequalities are necessary but not sufficient.
    pub characterizing: bool,
    pub checks: Vec<InequalityCheck>,
    /// `Some(cm)` when the inequalities decide; `None` otherwise.
    pub verdict: Option<bool>,
}

impl ClosedFormOutcome {
    pub fn trace(&self) -> Vec<String> {
        let mut out = vec![format!("case {} ({})", self.case, self.branch)];
        out.extend(self.checks.iter().map(|c| {
            format!("{}: {} <= {} {}", c.label, c.lhs, c.rhs, if c.holds { "holds" } else { "fails" })
        }));
        out
    }
}

fn outcome(case: GorensteinCase, branch: &str, characterizing: bool, checks: Vec<InequalityCheck>) -> ClosedFormOutcome {
    let all = checks.iter().all(|c| c.holds);
    let verdict = if characterizing { Some(all) } else if all { None } else { Some(false) };
    ClosedFormOutcome { case, branch: branch.to_string(), characterizing, checks, verdict }
}

pub fn closed_form_criterion(d: &GorensteinData) -> ClosedFormOutcome {
    let a = |i: usize| d.a_(i);
    let b = |i: usize, j: usize| d.a2(i, j);
    let le = InequalityCheck::le;
    match d.case {
        GorensteinCase::OneA => outcome(
            d.case,
            "single condition",
            true,
            vec![le("a2 <= a21 + a24", a(2), b(2, 1) + b(2, 4))],
        ),
        GorensteinCase::OneB => {
            let c1 = le("a2 <= a21 + a23", a(2), b(2, 1) + b(2, 3));
            let c2 = le("a42 + a13 <= a21 + a34", b(4, 2) + b(1, 3), b(2, 1) + b(3, 4));
            let c3_alt = le("a3 + a13 <= a1 + a32 + a34 - a14", a(3) + b(1, 3), a(1) + b(3, 2) + b(3, 4) - b(1, 4));
            if b(4, 2) <= b(3, 2) {
                let c3 = if b(3, 4) < b(1, 4) {
                    le("a3 + a13 <= a21 + a32 - a42 + 2 a34", a(3) + b(1, 3), b(2, 1) + b(3, 2) - b(4, 2) + 2 * b(3, 4))
                } else {
                    c3_alt
                };
                outcome(d.case, "a42 <= a32", true, vec![c1, c2, c3])
            } else if b(1, 4) <= b(3, 4) {
                outcome(d.case, "a32 < a42, a14 <= a34", true, vec![c1, c2, c3_alt])
            } else {
                outcome(d.case, "a32 < a42, a34 < a14", false, vec![c1, c2, c3_alt])
            }
        }
        GorensteinCase::TwoA => {
            let c1 = le("a3 <= a31 + a34", a(3), b(3, 1) + b(3, 4));
            let c2 = le("a12 + a34 <= a41 + a23", b(1, 2) + b(3, 4), b(4, 1) + b(2, 3));
            let c3_alt = le("a2 + a12 <= a1 + a23 - a13 + a24", a(2) + b(1, 2), a(1) + b(2, 3) - b(1, 3) + b(2, 4));
            if b(3, 4) <= b(2, 4) {
                let c3 = if b(2, 3) < b(1, 3) {
                    le("a2 + a12 <= a41 + 2 a23 + a24 - a34", a(2) + b(1, 2), b(4, 1) + 2 * b(2, 3) + b(2, 4) - b(3, 4))
                } else {
                    c3_alt
                };
                outcome(d.case, "a34 <= a24", true, vec![c1, c2, c3])
            } else if b(1, 3) <= b(2, 3) {
                outcome(d.case, "a24 < a34, a13 <= a23", true, vec![c1, c2, c3_alt])
            } else {
                outcome(d.case, "a24 < a34, a23 < a13", false, vec![c1, c2, c3_alt])
            }
        }
        GorensteinCase::TwoB => {
            let c1 = le("a2 <= a21 + a24", a(2), b(2, 1) + b(2, 4));
            let c2_alt = le("a3 + a13 <= a1 + a32 - a12 + a34", a(3) + b(1, 3), a(1) + b(3, 2) - b(1, 2) + b(3, 4));
            if b(2, 4) <= b(3, 4) {
                let c2 = if b(3, 2) < b(1, 2) {
                    le("a3 + a13 <= a41 + 2 a32 + a34 - a24", a(3) + b(1, 3), b(4, 1) + 2 * b(3, 2) + b(3, 4) - b(2, 4))
                } else {
                    c2_alt
                };
                outcome(d.case, "a24 <= a34", true, vec![c1, c2])
            } else if b(1, 2) <= b(3, 2) {
                outcome(d.case, "a34 < a24, a12 <= a32", true, vec![c1, c2_alt])
            } else {
                outcome(d.case, "a34 < a24, a32 < a12", false, vec![c1, c2_alt])
            }
        }
        GorensteinCase::ThreeA => outcome(
            d.case,
            "two conditions",
            true,
            vec![
                le("a2 <= a21 + a23", a(2), b(2, 1) + b(2, 3)),
                le("a3 <= a31 + a34", a(3), b(3, 1) + b(3, 4)),
            ],
        ),
        GorensteinCase::ThreeB => {
            let c1 = le("a12 + a43 <= a31 + a24", b(1, 2) + b(4, 3), b(3, 1) + b(2, 4));
            let c2_alt = le("a2 + a12 <= a1 + a23 + a24 - a14", a(2) + b(1, 2), a(1) + b(2, 3) + b(2, 4) - b(1, 4));
            if b(4, 3) <= b(2, 3) {
                let c2 = if b(2, 4) < b(1, 4) {
                    le("a2 + a12 <= a31 + 2 a24 + a23 - a43", a(2) + b(1, 2), b(3, 1) + 2 * b(2, 4) + b(2, 3) - b(4, 3))
                } else {
                    c2_alt
                };
                outcome(d.case, "a43 <= a23", true, vec![c1, c2])
            } else if b(1, 4) <= b(2, 4) {
                outcome(d.case, "a23 < a43, a14 <= a24", true, vec![c1, c2_alt])
            } else {
                outcome(d.case, "a23 < a43, a24 < a14", false, vec![c1, c2_alt])
            }
        }
    }
}
