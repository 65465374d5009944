//! Structural Cohen-Macaulay predicates by case.
//!
//! Each predicate assumes the minimal generators split as `S u I u R` in the
//! shapes recorded by the case report; when they do not, it returns `None`
//! and the oracle decides. Conditions of the form "every monomial in a
//! region is good" are evaluated on the region intersected with the box,
//! which is exact since monomials outside the box are always good.

use std::collections::HashMap;

use super::{CMVerdict, Certificate, Method, Thresholds};
use crate::monomial::ExponentVector;
use crate::toric::{CaseLabel, CaseReport};

/// Bounds on `(v2, v3, v4)`: `lo <= v < hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Region {
    lo: [u64; 3],
    hi: [u64; 3],
}

impl Region {
    fn all() -> Self {
        Region { lo: [0; 3], hi: [u64::MAX; 3] }
    }

    /// `v_var < k` for a zero-based variable index `var` in `1..4`.
    fn below(mut self, var: usize, k: u32) -> Self {
        self.hi[var - 1] = self.hi[var - 1].min(k as u64);
        self
    }

    fn at_least(mut self, var: usize, k: u32) -> Self {
        self.lo[var - 1] = self.lo[var - 1].max(k as u64);
        self
    }

    fn describe(&self) -> String {
        let mut parts = Vec::new();
        for k in 0..3 {
            if self.lo[k] > 0 {
                parts.push(format!("v{} >= {}", k + 2, self.lo[k]));
            }
            if self.hi[k] != u64::MAX {
                parts.push(format!("v{} < {}", k + 2, self.hi[k]));
            }
        }
        if parts.is_empty() {
            "all monomials".into()
        } else {
            parts.join(", ")
        }
    }
}

struct Ctx<'a> {
    th: &'a Thresholds,
    report: &'a CaseReport,
    cache: HashMap<Region, bool>,
    trace: Vec<String>,
}

impl<'a> Ctx<'a> {
    fn new(th: &'a Thresholds, report: &'a CaseReport) -> Self {
        Ctx { th, report, cache: HashMap::new(), trace: Vec::new() }
    }

    fn region_good(&mut self, r: Region) -> bool {
        if let Some(&ok) = self.cache.get(&r) {
            return ok;
        }
        let bad = self.th.first_bad_in(r.lo, r.hi);
        let ok = bad.is_none();
        match bad {
            None => self.trace.push(format!("every monomial with {} is good", r.describe())),
            Some(v) => self.trace.push(format!(
                "monomial x2^{} x3^{} x4^{} with {} is not good",
                v.v[0],
                v.v[1],
                v.v[2],
                r.describe()
            )),
        }
        self.cache.insert(r, ok);
        ok
    }

    /// Every `M - N` in `I` with `x1 | M` has `deg N <= deg M`.
    fn cond_i(&mut self) -> bool {
        let bad = self
            .report
            .i_set
            .iter()
            .find(|p| p.m.contains_var(0) && p.n.total_degree() > p.m.total_degree());
        match bad {
            None => {
                self.trace.push("every element of I with x1 in M has deg N <= deg M".into());
                true
            }
            Some(p) => {
                self.trace.push(format!("I element {} - {} has deg N > deg M", p.m, p.n));
                false
            }
        }
    }

    /// Every `M - N` in `R` (`x1 | M`) has `N` good.
    fn cond_r(&mut self) -> bool {
        let th = self.th;
        let bad = self.report.r_set.iter().find(|p| !th.is_good(tail3(&p.n)));
        match bad {
            None => {
                self.trace.push("every element of R has a good N".into());
                true
            }
            Some(p) => {
                self.trace.push(format!("R element {} - {} has N not good", p.m, p.n));
                false
            }
        }
    }

    fn verdict(self, is_cm: bool, method: Method) -> Option<CMVerdict> {
        Some(CMVerdict { is_cm, method, certificate: Certificate::Trace { lines: self.trace } })
    }
}

fn tail3(e: &ExponentVector) -> [u32; 3] {
    [e.0[1], e.0[2], e.0[3]]
}

/// Predicate for the cases with coincident critical degrees (2a to 4b).
/// Returns `None` in case 1, in the degenerate case, when the generators do
/// not have the expected shape, or when `x1` is not in the coincident pair
/// of case 4.
pub fn appendix_predicates(th: &Thresholds, report: &CaseReport) -> Option<CMVerdict> {
    if !report.is_fully_classified() {
        return None;
    }
    let a = report.a_values;
    let method = Method::AppendixPredicate { case: report.case };
    let mut ctx = Ctx::new(th, report);
    let class_of = |v: usize| report.classes.iter().find(|c| c.contains(&v)).unwrap();
    match report.case {
        CaseLabel::TwoA | CaseLabel::TwoB => {
            let pair = class_of(0);
            let i = *pair.iter().find(|&&v| v != 0)?;
            let other = report.classes.iter().find(|c| !c.contains(&0))?;
            let (j, k) = (other[0].min(other[1]), other[0].max(other[1]));
            if report.case == CaseLabel::TwoA {
                corollary_line(&mut ctx, report, i, j);
            }
            let c_i = ctx.cond_i();
            let c_r = ctx.cond_r();
            let region = Region::all().below(i, a[i]).at_least(j, a[j]).below(k, a[k]);
            let c_box = ctx.region_good(region);
            ctx.verdict(c_i && c_r && c_box, method)
        }
        CaseLabel::TwoC => {
            ctx.trace.push("all four critical degrees coincide".into());
            ctx.verdict(true, method)
        }
        CaseLabel::Three => {
            let odd = report.classes.iter().find(|c| c.len() == 1)?[0];
            if odd == 0 {
                let c_i = ctx.cond_i();
                let c_box = ctx.region_good(Region::all().at_least(1, a[1]));
                ctx.verdict(c_i && c_box, method)
            } else {
                let triple = report.classes.iter().find(|c| c.len() == 3)?;
                let mut rest: Vec<usize> = triple.iter().copied().filter(|&v| v != 0).collect();
                rest.sort_unstable();
                let c_box = ctx.region_good(Region::all().below(rest[0], a[rest[0]]).below(rest[1], a[rest[1]]));
                ctx.verdict(c_box, method)
            }
        }
        CaseLabel::FourA | CaseLabel::FourB => {
            let pair = report.classes.iter().find(|c| c.len() == 2)?;
            if !pair.contains(&0) {
                return None;
            }
            let i = *pair.iter().find(|&&v| v != 0)?;
            let c_box = ctx.region_good(Region::all().below(i, a[i]));
            ctx.verdict(c_box, method)
        }
        CaseLabel::One | CaseLabel::Degenerate => None,
    }
}

/// Records the sufficient bound `a_j <= u1 + u_i` when the mixed critical
/// binomial sits in the degree of the pair without `x1`.
fn corollary_line(ctx: &mut Ctx<'_>, report: &CaseReport, i: usize, j: usize) {
    let dj = report.critical_degrees[j];
    for (b, &d) in report.minimal_generators.iter().zip(&report.generator_degrees) {
        if d != dj {
            continue;
        }
        for (p, q) in [(b.plus, b.minus), (b.minus, b.plus)] {
            if p == ExponentVector::pure_power(j, report.a_values[j]) && q.support() == (1 | 1 << i) {
                let rhs = q.0[0] + q.0[i];
                ctx.trace.push(format!(
                    "mixed critical binomial {} - {}: a{} = {} {} u1 + u{} = {}",
                    p,
                    q,
                    j + 1,
                    report.a_values[j],
                    if report.a_values[j] <= rhs { "<=" } else { ">" },
                    i + 1,
                    rhs
                ));
            }
        }
    }
}

/// Sufficient conditions in case 1, tried for every choice of critical
/// partners `x2^{a2} - x^v`, `x3^{a3} - x^w`, `x4^{a4} - x^z`. Never
/// concludes that the tangent cone is not Cohen-Macaulay.
pub fn case1_sufficient(th: &Thresholds, report: &CaseReport) -> Option<CMVerdict> {
    if report.case != CaseLabel::One || !report.is_fully_classified() {
        return None;
    }
    let a = report.a_values;
    let p = &report.critical_partners;
    let mut ctx = Ctx::new(th, report);
    let mut cond_i_cache: Option<bool> = None;
    for v in &p[1] {
        for w in &p[2] {
            for z in &p[3] {
                let (v1, w1, z1) = (v.contains_var(0), w.contains_var(0), z.contains_var(0));
                let dv = a[1] as u64 <= v.total_degree();
                let dw = a[2] as u64 <= w.total_degree();
                let mut cond_i = |ctx: &mut Ctx<'_>| *cond_i_cache.get_or_insert_with(|| ctx.cond_i());
                let (label, ok) = match (v1, w1, z1) {
                    (true, true, true) => ("A(i)", dv && dw && cond_i(&mut ctx)),
                    (true, true, false) => {
                        ("A(ii)", dv && dw && ctx.region_good(Region::all().below(1, a[1]).below(2, a[2])))
                    }
                    (true, false, true) => {
                        ("A(iii)", dv && ctx.region_good(Region::all().below(1, a[1]).below(3, a[3])))
                    }
                    (true, false, false) => ("A(iv)", dv && ctx.region_good(Region::all().below(1, a[1]))),
                    (false, true, true) => (
                        "B(i)",
                        dw && cond_i(&mut ctx)
                            && ctx.region_good(Region::all().at_least(1, a[1]).below(2, a[2]).below(3, a[3])),
                    ),
                    (false, true, false) => ("B(ii)", dw && ctx.region_good(Region::all().below(2, a[2]))),
                    (false, false, true) => ("B(iii)", ctx.region_good(Region::all().below(3, a[3]))),
                    (false, false, false) => continue,
                };
                if ok {
                    ctx.trace.push(format!("partners v = {v}, w = {w}, z = {z}: branch {label} applies"));
                    return ctx.verdict(true, Method::CaseOneSufficient);
                }
            }
        }
    }
    None
}
