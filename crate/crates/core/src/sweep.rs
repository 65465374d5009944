//! Batch analysis over every tuple in a range.

use serde::{Deserialize, Serialize};

use crate::cmcheck::Method;
use crate::crosscheck::tuples_in_range;
use crate::error::Result;
use crate::par::{self, Exec};
use crate::report::{analyze, AnalyzeOptions};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SweepFilter {
    pub gorenstein_only: bool,
    pub non_cm_only: bool,
    pub nondecreasing_only: bool,
}

impl SweepFilter {
    pub fn accepts(&self, row: &SweepRow) -> bool {
        (!self.gorenstein_only || !row.gorenstein_case.is_empty())
            && (!self.non_cm_only || row.cm == "false")
            && (!self.nondecreasing_only || row.nondecreasing == "true")
    }
}

/// One CSV row. Undecided or skipped values are empty strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n1: u64,
    pub n2: u64,
    pub n3: u64,
    pub n4: u64,
    pub case: String,
    pub mu: usize,
    pub num_mingens: usize,
    pub symmetric: bool,
    pub gorenstein_case: String,
    pub complete_intersection: bool,
    pub cm: String,
    pub cm_method: String,
    pub nondecreasing: String,
    pub numerator: String,
}

fn method_name(m: &Method) -> String {
    match m {
        Method::HerzogOracle => "oracle".into(),
        Method::ClosedForm { case } => format!("closed_form_{case}"),
        Method::AppendixPredicate { case } => format!("predicate_{case}"),
        Method::CaseOneSufficient => "case1_sufficient".into(),
    }
}

pub fn sweep_row(n: [u64; 4], opts: &AnalyzeOptions) -> Result<SweepRow> {
    let (r, _) = analyze(n, opts)?;
    let [n1, n2, n3, n4] = r.generators;
    Ok(SweepRow {
        n1,
        n2,
        n3,
        n4,
        case: r.toric.case.to_string(),
        mu: r.toric.mu,
        num_mingens: r.toric.minimal_generators.len(),
        symmetric: r.semigroup.symmetric,
        gorenstein_case: r.gorenstein.as_ref().map(|g| g.case.to_string()).unwrap_or_default(),
        complete_intersection: r.toric.complete_intersection,
        cm: r.cm.is_cm.map(|b| b.to_string()).unwrap_or_default(),
        cm_method: r.cm.verdict.as_ref().map(|v| method_name(&v.method)).unwrap_or_default(),
        nondecreasing: r.hilbert.as_ref().map(|h| h.nondecreasing.to_string()).unwrap_or_default(),
        numerator: r.hilbert.as_ref().map(|h| h.reduced_numerator_text.clone()).unwrap_or_default(),
    })
}

/// Rows for every tuple `lo <= n1 < ... < n4 <= hi` with `gcd = 1` that
/// pass `filter`, in lexicographic order of the tuple. Tuples are analysed
/// in parallel under `exec`; each analysis itself runs sequentially.
pub fn sweep(lo: u64, hi: u64, filter: SweepFilter, opts: &AnalyzeOptions, exec: Exec) -> Result<Vec<SweepRow>> {
    let tuples = tuples_in_range(lo, hi);
    let inner = AnalyzeOptions { exec: Exec::Sequential, ..opts.clone() };
    let rows = par::map(exec, &tuples, |&n| sweep_row(n, &inner));
    let mut out = Vec::new();
    for row in rows {
        let row = row?;
        if filter.accepts(&row) {
            out.push(row);
        }
    }
    Ok(out)
}
