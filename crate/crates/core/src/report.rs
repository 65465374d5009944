//! The full analysis of one tuple and its serialisable report.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::cmcheck::{decide, CMVerdict, ClosedFormOutcome, DecideOptions, OracleStatus};
use crate::error::Result;
use crate::gorenstein::{gorenstein_data, GorensteinCase};
use crate::grobner::{tangent_cone, DEFAULT_STEP_BUDGET};
use crate::hilbert::{is_nondecreasing, reduced_numerator};
use crate::par::Exec;
use crate::semigroup::{GeneratorTuple, MembershipTables, DEFAULT_TABLE_CAP};
use crate::toric::{analyze_toric, CaseLabel};

/// Bumped whenever the report layout changes.
pub const SCHEMA_VERSION: u32 = 1;

pub const DEFAULT_HORIZON: usize = 20;

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub horizon: usize,
    pub skip_oracle: bool,
    pub timeout: Option<Duration>,
    pub exec: Exec,
    pub table_cap: u64,
    pub step_budget: u64,
    /// Skip the tangent cone and Hilbert series.
    pub skip_hilbert: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        let d = DecideOptions::default();
        AnalyzeOptions {
            horizon: DEFAULT_HORIZON,
            skip_oracle: d.skip_oracle,
            timeout: d.timeout,
            exec: d.exec,
            table_cap: DEFAULT_TABLE_CAP,
            step_budget: DEFAULT_STEP_BUDGET,
            skip_hilbert: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[cfg_attr(feature = "schema", derive(schemars::JsonSchema))]
#[serde(deny_unknown_fields)]
pub struct SemigroupSummary {
    pub frobenius: i64,
    pub symmetric: bool,
    pub gaps: u64,
    pub apery_set: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[cfg_attr(feature = "schema", derive(schemars::JsonSchema))]
#[serde(deny_unknown_fields)]
pub struct GeneratorEntry {
    pub binomial: String,
    /// Exponents of the two terms, `plus - minus`.
    pub plus: [u32; 4],
    pub minus: [u32; 4],
    pub degree: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[cfg_attr(feature = "schema", derive(schemars::JsonSchema))]
#[serde(deny_unknown_fields)]
pub struct ToricSummary {
    pub case: CaseLabel,
    pub a_values: [u32; 4],
    pub critical_degrees: [u64; 4],
    pub mu: usize,
    pub minimal_generators: Vec<GeneratorEntry>,
    pub complete_intersection: bool,
    pub s_set: Vec<String>,
    pub i_set: Vec<String>,
    pub r_set: Vec<String>,
    pub unclassified: Vec<String>,
    pub anomalies: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[cfg_attr(feature = "schema", derive(schemars::JsonSchema))]
#[serde(deny_unknown_fields)]
pub struct GorensteinSummary {
    pub case: GorensteinCase,
    pub aij: [[u32; 4]; 4],
    pub generators: Vec<String>,
    pub closed_form: ClosedFormOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[cfg_attr(feature = "schema", derive(schemars::JsonSchema))]
#[serde(deny_unknown_fields)]
pub struct CmSummary {
    pub is_cm: Option<bool>,
    pub verdict: Option<CMVerdict>,
    pub oracle: OracleStatus,
    pub fast_path: Option<CMVerdict>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[cfg_attr(feature = "schema", derive(schemars::JsonSchema))]
#[serde(deny_unknown_fields)]
pub struct HilbertSummary {
    pub tangent_cone_leading_ideal: Vec<String>,
    pub tangent_cone_is_monomial: bool,
    /// Coefficients of `p(t)` with `HS = p(t) / (1 - t)^4`.
    pub numerator: Vec<i64>,
    /// Coefficients of `h(t)` with `HS = h(t) / (1 - t)`.
    pub reduced_numerator: Vec<i64>,
    pub reduced_numerator_text: String,
    pub hf_values: Vec<i64>,
    pub nondecreasing: bool,
    pub first_drop: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[cfg_attr(feature = "schema", derive(schemars::JsonSchema))]
#[serde(deny_unknown_fields)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub input: [u64; 4],
    pub generators: [u64; 4],
    pub original_order: [usize; 4],
    pub semigroup: SemigroupSummary,
    pub toric: ToricSummary,
    pub gorenstein: Option<GorensteinSummary>,
    pub cm: CmSummary,
    pub hilbert: Option<HilbertSummary>,
}

/// Wall-clock time per stage, kept apart from the deterministic report.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[cfg_attr(feature = "schema", derive(schemars::JsonSchema))]
pub struct Timings {
    pub semigroup_ms: f64,
    pub toric_ms: f64,
    pub cm_ms: f64,
    pub hilbert_ms: f64,
}

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

pub fn analyze(input: [u64; 4], opts: &AnalyzeOptions) -> Result<(AnalysisReport, Timings)> {
    let mut timings = Timings::default();
    let g = GeneratorTuple::new(input)?;

    let t = Instant::now();
    let tables = MembershipTables::build(&g, g.default_table_limit()?, opts.table_cap)?;
    let semigroup = SemigroupSummary {
        frobenius: tables.frobenius()?,
        symmetric: tables.is_symmetric()?,
        gaps: tables.gap_count()?,
        apery_set: tables.apery_set()?,
    };
    timings.semigroup_ms = ms(t);

    let t = Instant::now();
    let toric = analyze_toric(&g, opts.step_budget)?;
    let r = &toric.report;
    let gor = gorenstein_data(&g, r, semigroup.symmetric);
    let toric_summary = ToricSummary {
        case: r.case,
        a_values: r.a_values,
        critical_degrees: r.critical_degrees,
        mu: r.mu,
        minimal_generators: r
            .minimal_generators
            .iter()
            .zip(&r.generator_degrees)
            .map(|(b, &d)| GeneratorEntry { binomial: b.to_string(), plus: b.plus.0, minus: b.minus.0, degree: d })
            .collect(),
        complete_intersection: r.num_generators() == 3,
        s_set: r.s_set.iter().map(ToString::to_string).collect(),
        i_set: r.i_set.iter().map(|p| p.binomial().to_string()).collect(),
        r_set: r.r_set.iter().map(|p| p.binomial().to_string()).collect(),
        unclassified: r.unclassified.iter().map(ToString::to_string).collect(),
        anomalies: r.anomalies.clone(),
    };
    timings.toric_ms = ms(t);

    let t = Instant::now();
    let dopts = DecideOptions { skip_oracle: opts.skip_oracle, timeout: opts.timeout, exec: opts.exec };
    let decision = decide(&g, &tables, r, gor.as_ref(), &dopts)?;
    let gorenstein = match (&gor, &decision.closed_form) {
        (Some(d), Some(cf)) => Some(GorensteinSummary {
            case: d.case,
            aij: d.aij,
            generators: d.generators.iter().map(ToString::to_string).collect(),
            closed_form: cf.clone(),
        }),
        _ => None,
    };
    let cm = CmSummary {
        is_cm: decision.verdict.as_ref().map(|v| v.is_cm),
        verdict: decision.verdict.clone(),
        oracle: decision.oracle,
        fast_path: decision.fast_path.clone(),
    };
    timings.cm_ms = ms(t);

    let t = Instant::now();
    let hilbert = if opts.skip_hilbert {
        None
    } else {
        let tc = tangent_cone(&r.minimal_generators, opts.step_budget)?;
        let numerator = tc.leading_ideal.numerator()?;
        let h = reduced_numerator(&tc.leading_ideal, 1)?;
        let nd = is_nondecreasing(&tc.leading_ideal, opts.horizon)?;
        Some(HilbertSummary {
            tangent_cone_leading_ideal: tc.leading_ideal.generators().iter().map(ToString::to_string).collect(),
            tangent_cone_is_monomial: tc.is_monomial(),
            numerator: numerator.coeffs().to_vec(),
            reduced_numerator: h.coeffs().to_vec(),
            reduced_numerator_text: h.to_string(),
            hf_values: nd.values[..=opts.horizon.min(nd.values.len() - 1)].to_vec(),
            nondecreasing: nd.nondecreasing,
            first_drop: nd.first_drop,
        })
    };
    timings.hilbert_ms = ms(t);

    let report = AnalysisReport {
        schema_version: SCHEMA_VERSION,
        input,
        generators: *g.gens(),
        original_order: g.original_order(),
        semigroup,
        toric: toric_summary,
        gorenstein,
        cm,
        hilbert,
    };
    Ok((report, timings))
}
