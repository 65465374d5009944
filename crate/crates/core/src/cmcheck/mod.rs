//! Cohen-Macaulayness of the tangent cone.
//!
//! The tangent cone `G = gr_m(k[S])` is Cohen-Macaulay exactly when every
//! monomial `M = x2^v2 x3^v3 x4^v4` whose degree `m` lies in `n1 + S` is
//! *good*: `v2 + v3 + v4 <= 1 + maxlen(m - n1)`. It suffices to test
//! `v_i < b_i = n1 / gcd(n1, n_i)`; a monomial outside that box is always
//! good because `x_i^{b_i}` has the same degree as a longer power of `x1`.
//!
//! The exhaustive box sweep is the oracle. The faster routes (closed forms
//! for Gorenstein curves, structural predicates by case, sufficient
//! conditions in case 1) are cross-checked against it.

pub mod appendix;
pub mod criteria;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gorenstein::{GorensteinCase, GorensteinData};
use crate::par::{self, Exec};
use crate::semigroup::{GeneratorTuple, MembershipTables};
use crate::toric::{CaseLabel, CaseReport};

pub use appendix::{appendix_predicates, case1_sufficient};
pub use criteria::{closed_form_criterion, ClosedFormOutcome, InequalityCheck};

/// Default time limit for the oracle.
pub const DEFAULT_ORACLE_TIMEOUT: Duration = Duration::from_secs(300);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[cfg_attr(feature = "schema", derive(schemars::JsonSchema))]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Method {
    HerzogOracle,
    ClosedForm { case: GorensteinCase },
    AppendixPredicate { case: CaseLabel },
    CaseOneSufficient,
}

/// A monomial that is not good.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[cfg_attr(feature = "schema", derive(schemars::JsonSchema))]
pub struct Violation {
    /// `(v2, v3, v4)`.
    pub v: [u32; 3],
    pub degree: u64,
    /// `maxlen(degree - n1)`.
    pub max_len_rest: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[cfg_attr(feature = "schema", derive(schemars::JsonSchema))]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Violation(Violation),
    BoxExhausted { monomials: u64 },
    Trace { lines: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[cfg_attr(feature = "schema", derive(schemars::JsonSchema))]
pub struct CMVerdict {
    pub is_cm: bool,
    pub method: Method,
    pub certificate: Certificate,
}

/// `thr[m] = 1 + maxlen(m - n1)` when `m - n1` lies in `S`, else
/// `i32::MAX` (no condition).
#[derive(Clone, Debug)]
pub struct Thresholds {
    gens: [u64; 4],
    box_bounds: [u64; 3],
    thr: Vec<i32>,
}

impl Thresholds {
    pub fn new(g: &GeneratorTuple, tables: &MembershipTables) -> Result<Self> {
        let top = g.box_max_degree()?;
        tables.ensure_covers(top.saturating_sub(g.n(0)))?;
        let n1 = g.n(0) as usize;
        let raw = tables.raw_max_len();
        let thr = (0..=top as usize)
            .map(|m| if m >= n1 && raw[m - n1] >= 0 { raw[m - n1] + 1 } else { i32::MAX })
            .collect();
        Ok(Thresholds { gens: *g.gens(), box_bounds: g.box_bounds(), thr })
    }

    /// Goodness of `x2^v2 x3^v3 x4^v4`.
    pub fn is_good(&self, v: [u32; 3]) -> bool {
        if (0..3).any(|k| v[k] as u64 >= self.box_bounds[k]) {
            return true;
        }
        let m = self.degree(v);
        (v[0] + v[1] + v[2]) as i64 <= self.thr[m as usize] as i64
    }

    #[inline]
    fn degree(&self, v: [u32; 3]) -> u64 {
        v[0] as u64 * self.gens[1] + v[1] as u64 * self.gens[2] + v[2] as u64 * self.gens[3]
    }

    fn violation(&self, v: [u32; 3]) -> Violation {
        let degree = self.degree(v);
        Violation { v, degree, max_len_rest: (self.thr[degree as usize] - 1) as u32 }
    }

    pub fn box_bounds(&self) -> [u64; 3] {
        self.box_bounds
    }

    /// First bad monomial with `lo_k <= v_k < hi_k` (clipped to the box),
    /// scanning `v4` outermost and `v2` innermost.
    pub fn first_bad_in(&self, lo: [u64; 3], hi: [u64; 3]) -> Option<Violation> {
        let hi: [u64; 3] = std::array::from_fn(|k| hi[k].min(self.box_bounds[k]));
        for v4 in lo[2]..hi[2] {
            if let Some(v) = self.scan_slice(v4, lo, hi) {
                return Some(v);
            }
        }
        None
    }

    #[inline]
    fn scan_slice(&self, v4: u64, lo: [u64; 3], hi: [u64; 3]) -> Option<Violation> {
        let (n2, n3, n4) = (self.gens[1] as usize, self.gens[2] as usize, self.gens[3] as usize);
        for v3 in lo[1]..hi[1] {
            let base = v3 as usize * n3 + v4 as usize * n4;
            let len0 = (v3 + v4) as i64;
            let mut m = base + lo[0] as usize * n2;
            for v2 in lo[0]..hi[0] {
                if len0 + v2 as i64 > self.thr[m] as i64 {
                    return Some(self.violation([v2 as u32, v3 as u32, v4 as u32]));
                }
                m += n2;
            }
        }
        None
    }
}

/// `good(M)` for `M = x2^v2 x3^v3 x4^v4`.
pub fn good_monomial(g: &GeneratorTuple, tables: &MembershipTables, v: [u32; 3]) -> Result<bool> {
    let b = g.box_bounds();
    if (0..3).any(|k| v[k] as u64 >= b[k]) {
        return Ok(true);
    }
    let m = v[0] as u64 * g.n(1) + v[1] as u64 * g.n(2) + v[2] as u64 * g.n(3);
    if m < g.n(0) {
        return Ok(true);
    }
    tables.ensure_covers(m - g.n(0))?;
    Ok(match tables.max_len(m - g.n(0)) {
        None => true,
        Some(l) => (v[0] + v[1] + v[2]) as u64 <= l as u64 + 1,
    })
}

/// Exhaustive sweep of the box. The reported violation is the first in the
/// order `v4` outer, `v3`, `v2` inner, whatever the execution mode.
pub fn herzog_oracle(th: &Thresholds, exec: Exec, deadline: Option<Instant>) -> Result<CMVerdict> {
    let b = th.box_bounds();
    let hit = par::find_first(exec, 0..b[2], |v4| {
        if deadline.is_some_and(|d| Instant::now() > d) {
            return Some(Err(Error::Budget("oracle time limit reached".into())));
        }
        th.scan_slice(v4, [0, 0, 0], b).map(Ok)
    });
    let monomials = b[0] * b[1] * b[2];
    match hit {
        Some(Err(e)) => Err(e),
        Some(Ok(v)) => Ok(CMVerdict {
            is_cm: false,
            method: Method::HerzogOracle,
            certificate: Certificate::Violation(v),
        }),
        None => Ok(CMVerdict {
            is_cm: true,
            method: Method::HerzogOracle,
            certificate: Certificate::BoxExhausted { monomials },
        }),
    }
}

#[derive(Clone, Debug)]
pub struct DecideOptions {
    pub skip_oracle: bool,
    pub timeout: Option<Duration>,
    pub exec: Exec,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions { skip_oracle: false, timeout: Some(DEFAULT_ORACLE_TIMEOUT), exec: Exec::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[cfg_attr(feature = "schema", derive(schemars::JsonSchema))]
#[serde(rename_all = "snake_case")]
pub enum OracleStatus {
    Completed,
    Skipped,
    TimedOut,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision {
    /// The authoritative verdict: the oracle's when it ran, otherwise the
    /// fast route's; `None` when neither is available.
    pub verdict: Option<CMVerdict>,
    pub oracle: OracleStatus,
    /// Verdict of the fast route alone, when it applies.
    pub fast_path: Option<CMVerdict>,
    /// Closed-form details for Gorenstein curves.
    pub closed_form: Option<ClosedFormOutcome>,
}

/// The fast-route verdict: closed form for Gorenstein curves, otherwise the
/// structural predicate of the case, or the case 1 sufficient conditions.
pub fn fast_path(
    th: &Thresholds,
    report: &CaseReport,
    gorenstein: Option<&GorensteinData>,
) -> (Option<CMVerdict>, Option<ClosedFormOutcome>) {
    if let Some(d) = gorenstein {
        let cf = closed_form_criterion(d);
        let v = cf.verdict.map(|is_cm| CMVerdict {
            is_cm,
            method: Method::ClosedForm { case: d.case },
            certificate: Certificate::Trace { lines: cf.trace() },
        });
        if v.is_some() {
            return (v, Some(cf));
        }
        let rest = appendix_or_case1(th, report);
        return (rest, Some(cf));
    }
    (appendix_or_case1(th, report), None)
}

fn appendix_or_case1(th: &Thresholds, report: &CaseReport) -> Option<CMVerdict> {
    if report.case == CaseLabel::One {
        case1_sufficient(th, report)
    } else {
        appendix_predicates(th, report)
    }
}

/// Runs the oracle (unless skipped) and the applicable fast route, and
/// reports an invariant violation if they disagree.
pub fn decide(
    g: &GeneratorTuple,
    tables: &MembershipTables,
    report: &CaseReport,
    gorenstein: Option<&GorensteinData>,
    opts: &DecideOptions,
) -> Result<Decision> {
    let th = Thresholds::new(g, tables)?;
    let (fast, closed_form) = fast_path(&th, report, gorenstein);
    let (oracle_verdict, status) = if opts.skip_oracle {
        (None, OracleStatus::Skipped)
    } else {
        let deadline = opts.timeout.map(|t| Instant::now() + t);
        match herzog_oracle(&th, opts.exec, deadline) {
            Ok(v) => (Some(v), OracleStatus::Completed),
            Err(Error::Budget(msg)) => {
                if fast.is_none() {
                    return Err(Error::Budget(msg));
                }
                (None, OracleStatus::TimedOut)
            }
            Err(e) => return Err(e),
        }
    };
    if let (Some(o), Some(f)) = (&oracle_verdict, &fast) {
        if o.is_cm != f.is_cm {
            return Err(Error::Invariant(format!(
                "oracle says cm = {} but {:?} says cm = {} for {:?}",
                o.is_cm,
                f.method,
                f.is_cm,
                g.gens()
            )));
        }
    }
    Ok(Decision { verdict: oracle_verdict.or_else(|| fast.clone()), oracle: status, fast_path: fast, closed_form })
}
