//! Parametric families with closed-form generators.
//!
//! * `e41`: `n = (m^3+m^2-m, m^3+2m^2+m-1, m^3+3m^2+2m-2, m^3+4m^2+3m-2)`,
//!   `m >= 2`; Gorenstein, case 1a, Cohen-Macaulay tangent cone.
//! * `gi`: `n = (10+6t, 17+9t, 22+6t, 28+12t)`, `t >= 0` with `gcd = 1`;
//!   Gorenstein with Cohen-Macaulay tangent cone. For `t >= 2` the second and
//!   third generators swap places after sorting, which changes the normal
//!   form of the generators.
//! * `e43`: `n = (2m+1, 2m+3, 2m^2+m-2, 2m^2+m-1)`, `m >= 4`; Gorenstein,
//!   case 2b, non-Cohen-Macaulay tangent cone with a non-decreasing Hilbert
//!   function and an explicit tangent cone ideal.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cmcheck::{decide, DecideOptions};
use crate::error::{Error, Result};
use crate::gorenstein::{gorenstein_data, GorensteinCase};
use crate::grobner::{tangent_cone, DEFAULT_STEP_BUDGET};
use crate::hilbert::{is_nondecreasing, reduced_numerator, IntPolynomial, MonomialIdeal};
use crate::monomial::{canonical_set, Binomial, ExponentVector};
use crate::semigroup::{GeneratorTuple, MembershipTables};
use crate::toric::analyze_toric;

/// Generators of members are kept below this bound.
pub const MAX_N4: u64 = 5000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyId {
    E41,
    Gi,
    E43,
}

impl FamilyId {
    pub fn min_parameter(self) -> u64 {
        match self {
            FamilyId::E41 => 2,
            FamilyId::Gi => 0,
            FamilyId::E43 => 4,
        }
    }

    /// Name of the parameter on the command line.
    pub fn parameter_name(self) -> &'static str {
        match self {
            FamilyId::Gi => "t",
            _ => "m",
        }
    }

    /// Generator tuple for parameter `p`, before validation.
    pub fn tuple(self, p: u64) -> [u64; 4] {
        match self {
            FamilyId::E41 => [
                p * p * p + p * p - p,
                p * p * p + 2 * p * p + p - 1,
                p * p * p + 3 * p * p + 2 * p - 2,
                p * p * p + 4 * p * p + 3 * p - 2,
            ],
            FamilyId::Gi => [10 + 6 * p, 17 + 9 * p, 22 + 6 * p, 28 + 12 * p],
            FamilyId::E43 => [2 * p + 1, 2 * p + 3, 2 * p * p + p - 2, 2 * p * p + p - 1],
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyId::E41 => "e41",
            FamilyId::Gi => "gi",
            FamilyId::E43 => "e43",
        })
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e41" => Ok(FamilyId::E41),
            "gi" => Ok(FamilyId::Gi),
            "e43" => Ok(FamilyId::E43),
            _ => Err(Error::InvalidInput(format!("unknown family `{s}` (expected e41, gi or e43)"))),
        }
    }
}

/// What the closed forms predict for one member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectations {
    pub generators: Vec<Binomial>,
    pub gorenstein_case: Option<GorensteinCase>,
    pub is_cm: bool,
    pub nondecreasing: bool,
    /// Reduced Hilbert numerator.
    pub reduced_numerator: Option<IntPolynomial>,
    /// Generators of the tangent cone ideal.
    pub tangent_cone_ideal: Option<MonomialIdeal>,
}

fn mono(pairs: &[(usize, u64)]) -> ExponentVector {
    let mut e = [0u32; 4];
    for &(v, k) in pairs {
        e[v - 1] += k as u32;
    }
    ExponentVector(e)
}

fn bin(p: &[(usize, u64)], q: &[(usize, u64)]) -> Binomial {
    Binomial::new(mono(p), mono(q)).expect("distinct terms")
}

/// The tuple and expected properties of member `p`, or an error when `p` is
/// out of range or the tuple is not admissible.
pub fn instantiate(family: FamilyId, p: u64) -> Result<(GeneratorTuple, Expectations)> {
    if p < family.min_parameter() {
        return Err(Error::InvalidInput(format!(
            "{family} needs {} >= {}",
            family.parameter_name(),
            family.min_parameter()
        )));
    }
    let n = family.tuple(p);
    if n[3] > MAX_N4 {
        return Err(Error::InvalidInput(format!("{family} member {p} has n4 = {} > {MAX_N4}", n[3])));
    }
    let g = GeneratorTuple::new(n)?;
    let m = p;
    let exp = match family {
        FamilyId::E41 => Expectations {
            generators: vec![
                bin(&[(1, m + 3)], &[(3, 1), (4, m - 1)]),
                bin(&[(2, m + 2)], &[(1, m + 2), (4, 1)]),
                bin(&[(3, m)], &[(1, 1), (2, m)]),
                bin(&[(4, m)], &[(2, 2), (3, m - 1)]),
                bin(&[(1, m + 2), (3, m - 1)], &[(2, m), (4, m - 1)]),
            ],
            gorenstein_case: Some(GorensteinCase::OneA),
            is_cm: true,
            nondecreasing: true,
            reduced_numerator: None,
            tangent_cone_ideal: None,
        },
        FamilyId::Gi => {
            let t = p;
            let swapped = n[1] > n[2];
            let generators = if swapped {
                vec![
                    bin(&[(1, t + 5)], &[(2, t + 1), (4, 1)]),
                    bin(&[(2, t + 2)], &[(1, t + 1), (3, 2)]),
                    bin(&[(3, 4)], &[(1, 4), (4, 1)]),
                    bin(&[(4, 2)], &[(2, 1), (3, 2)]),
                    bin(&[(1, 4), (2, 1)], &[(3, 2), (4, 1)]),
                ]
            } else {
                vec![
                    bin(&[(1, t + 5)], &[(3, t + 1), (4, 1)]),
                    bin(&[(2, 4)], &[(1, 4), (4, 1)]),
                    bin(&[(3, t + 2)], &[(1, t + 1), (2, 2)]),
                    bin(&[(4, 2)], &[(2, 2), (3, 1)]),
                    bin(&[(1, 4), (3, 1)], &[(2, 2), (4, 1)]),
                ]
            };
            Expectations {
                generators,
                gorenstein_case: Some(if swapped { GorensteinCase::ThreeA } else { GorensteinCase::OneA }),
                is_cm: true,
                nondecreasing: true,
                reduced_numerator: None,
                tangent_cone_ideal: None,
            }
        }
        FamilyId::E43 => {
            // 1 + 3t + t^2 + ... + t^m + t^{m+2} + t^{m+4} + t^{m+5} + ... + t^{2m}
            let m_ = m as usize;
            let mut h = vec![0i64; 2 * m_ + 1];
            h[0] = 1;
            h[1] = 3;
            for (k, c) in h.iter_mut().enumerate().skip(2) {
                if k <= m_ || k == m_ + 2 || k >= m_ + 4 {
                    *c = 1;
                }
            }
            let ideal = MonomialIdeal::new(vec![
                mono(&[(2, 1), (3, 1)]),
                mono(&[(3, 2)]),
                mono(&[(1, 1), (4, 1)]),
                mono(&[(3, 1), (4, 1)]),
                mono(&[(4, 2)]),
                mono(&[(2, m), (4, 1)]),
                mono(&[(1, m + 2), (3, 1)]),
                mono(&[(2, 2 * m + 1)]),
            ]);
            Expectations {
                generators: vec![
                    bin(&[(1, m + 1)], &[(2, 1), (3, 1)]),
                    bin(&[(2, m)], &[(1, 1), (4, 1)]),
                    bin(&[(3, 2)], &[(2, m - 1), (4, 1)]),
                    bin(&[(4, 2)], &[(1, m), (3, 1)]),
                    bin(&[(1, m), (2, m - 1)], &[(3, 1), (4, 1)]),
                ],
                gorenstein_case: Some(GorensteinCase::TwoB),
                is_cm: false,
                nondecreasing: true,
                reduced_numerator: Some(IntPolynomial::new(h)),
                tangent_cone_ideal: Some(ideal),
            }
        }
    };
    Ok((g, exp))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberCheck {
    pub name: String,
    pub expected: String,
    pub found: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum MemberReport {
    Verified { family: FamilyId, parameter: u64, gens: [u64; 4], checks: Vec<MemberCheck> },
    Rejected { family: FamilyId, parameter: u64, reason: String },
}

impl MemberReport {
    /// `false` only when a check ran and failed.
    pub fn all_ok(&self) -> bool {
        match self {
            MemberReport::Verified { checks, .. } => checks.iter().all(|c| c.ok),
            MemberReport::Rejected { .. } => true,
        }
    }
}

fn check(name: &str, expected: impl fmt::Display, found: impl fmt::Display, ok: bool) -> MemberCheck {
    MemberCheck { name: name.into(), expected: expected.to_string(), found: found.to_string(), ok }
}

fn join<T: fmt::Display>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// Computes member `p` and compares it with the closed forms. A parameter
/// whose tuple fails validation (for instance `gcd > 1`) is reported as
/// rejected rather than as an error.
pub fn verify_member(family: FamilyId, p: u64, opts: &DecideOptions) -> Result<MemberReport> {
    let (g, exp) = match instantiate(family, p) {
        Ok(x) => x,
        Err(Error::InvalidInput(reason)) if p >= family.min_parameter() && family.tuple(p)[3] <= MAX_N4 => {
            return Ok(MemberReport::Rejected { family, parameter: p, reason });
        }
        Err(e) => return Err(e),
    };
    let tables = MembershipTables::for_tuple(&g)?;
    let symmetric = tables.is_symmetric()?;
    let toric = analyze_toric(&g, DEFAULT_STEP_BUDGET)?;
    let r = &toric.report;
    let mut checks = Vec::new();

    let found = canonical_set(&r.minimal_generators);
    let want = canonical_set(&exp.generators);
    checks.push(check("minimal generators", join(&exp.generators), join(&r.minimal_generators), found == want));
    checks.push(check("symmetric", true, symmetric, symmetric));

    let gor = gorenstein_data(&g, r, symmetric);
    if let Some(case) = exp.gorenstein_case {
        let got = gor.as_ref().map(|d| d.case.to_string()).unwrap_or_else(|| "none".into());
        checks.push(check("gorenstein case", case, &got, gor.as_ref().map(|d| d.case) == Some(case)));
    }

    let decision = decide(&g, &tables, r, gor.as_ref(), opts)?;
    let cm = decision.verdict.as_ref().map(|v| v.is_cm);
    checks.push(check(
        "cohen-macaulay tangent cone",
        exp.is_cm,
        cm.map_or("undecided".to_string(), |c| c.to_string()),
        cm == Some(exp.is_cm),
    ));
    if let Some(cf) = &decision.closed_form {
        if let Some(v) = cf.verdict {
            checks.push(check("closed form agrees", exp.is_cm, v, v == exp.is_cm));
        }
    }

    let tc = tangent_cone(&r.minimal_generators, DEFAULT_STEP_BUDGET)?;
    let nd = is_nondecreasing(&tc.leading_ideal, crate::report::DEFAULT_HORIZON)?;
    checks.push(check("non-decreasing Hilbert function", exp.nondecreasing, nd.nondecreasing, nd.nondecreasing == exp.nondecreasing));
    if let Some(h) = &exp.reduced_numerator {
        let got = reduced_numerator(&tc.leading_ideal, 1)?;
        checks.push(check("reduced Hilbert numerator", h, &got, &got == h));
        let nonneg = got.coeffs().iter().all(|&c| c >= 0);
        checks.push(check("nonnegative numerator", true, nonneg, nonneg));
        let h1 = got.eval_at_one();
        checks.push(check("h(1) = n1", g.n(0), h1, h1 == g.n(0) as i64));
    }
    if let Some(ideal) = &exp.tangent_cone_ideal {
        let monomial = tc.is_monomial();
        checks.push(check(
            "tangent cone ideal",
            ideal,
            &tc.leading_ideal,
            monomial && &tc.leading_ideal == ideal,
        ));
    }
    Ok(MemberReport::Verified { family, parameter: p, gens: *g.gens(), checks })
}
