//! Acceptance suite: one PASS/FAIL line per criterion, then a single
//! assertion that all of them passed.

use std::time::{Duration, Instant};

use monocurve::cmcheck::{closed_form_criterion, herzog_oracle, ClosedFormOutcome, Thresholds};
use monocurve::cmcheck::{decide, DecideOptions, OracleStatus};
use monocurve::crosscheck::{cross_check, tuples_in_range, CrossCheck};
use monocurve::families::{verify_member, FamilyId, MemberReport};
use monocurve::gorenstein::{gorenstein_data, GorensteinCase, GorensteinData};
use monocurve::grobner::{verify_prop_lexinf, DEFAULT_STEP_BUDGET};
use monocurve::monomial::{canonical_set, Binomial};
use monocurve::par::{self, Exec};
use monocurve::semigroup::{GeneratorTuple, MembershipTables};
use monocurve::toric::{analyze_toric, CaseReport};

type Outcome = Result<String, String>;

fn bins(s: &[&str]) -> Vec<Binomial> {
    s.iter().map(|x| x.parse().unwrap()).collect()
}

struct Example {
    g: GeneratorTuple,
    tables: MembershipTables,
    report: CaseReport,
    gor: Option<GorensteinData>,
}

fn example(n: [u64; 4]) -> Result<Example, String> {
    let g = GeneratorTuple::new(n).map_err(|e| e.to_string())?;
    let tables = MembershipTables::for_tuple(&g).map_err(|e| e.to_string())?;
    let symmetric = tables.is_symmetric().map_err(|e| e.to_string())?;
    let report = analyze_toric(&g, DEFAULT_STEP_BUDGET).map_err(|e| e.to_string())?.report;
    let gor = gorenstein_data(&g, &report, symmetric);
    Ok(Example { g, tables, report, gor })
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn oracle_cm(e: &Example) -> Result<(bool, Duration), String> {
    let t = Instant::now();
    let th = Thresholds::new(&e.g, &e.tables).map_err(|x| x.to_string())?;
    let v = herzog_oracle(&th, Exec::default(), Some(Instant::now() + Duration::from_secs(300)))
        .map_err(|x| x.to_string())?;
    Ok((v.is_cm, t.elapsed()))
}

fn closed_form(e: &Example, case: GorensteinCase) -> Result<ClosedFormOutcome, String> {
    let d = e.gor.as_ref().ok_or("not recognised as Gorenstein")?;
    ensure(d.case == case, format!("Gorenstein case {} instead of {case}", d.case))?;
    Ok(closed_form_criterion(d))
}

fn has_check(cf: &ClosedFormOutcome, lhs: i64, rhs: i64) -> bool {
    cf.checks.iter().any(|c| c.lhs == lhs && c.rhs == rhs && c.holds)
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let e = example([1199, 2051, 2352, 3032])?;
    let cf = closed_form(&e, GorensteinCase::OneB)?;
    let fast = t.elapsed();
    let expected = bins(&[
        "x1^16 - x3^3*x4^4",
        "x2^19 - x1^7*x3^13",
        "x3^16 - x2^8*x4^7",
        "x4^11 - x1^9*x2^11",
        "x1^7*x4^7 - x2^11*x3^3",
    ]);
    ensure(
        canonical_set(&e.report.minimal_generators) == canonical_set(&expected),
        "minimal generators differ",
    )?;
    ensure(cf.verdict == Some(true), format!("closed form verdict {:?}", cf.verdict))?;
    ensure(fast < Duration::from_secs(1), format!("criterion path took {fast:?}"))?;
    let (cm, slow) = oracle_cm(&e)?;
    ensure(cm, "oracle says not CM")?;
    ensure(slow < Duration::from_secs(300), format!("oracle took {slow:?}"))?;
    Ok(format!("case 1b, 5 generators, CM by both; criterion {fast:.2?}, oracle {slow:.2?}"))
}

fn criterion_2() -> Outcome {
    let e = example([627, 1546, 1662, 3377])?;
    let cf = closed_form(&e, GorensteinCase::TwoA)?;
    ensure(cf.verdict == Some(true), "closed form does not give CM")?;
    ensure(has_check(&cf, 28, 29), "inequality 28 <= 29 not reproduced")?;
    ensure(oracle_cm(&e)?.0, "oracle says not CM")?;
    Ok("case 2a, CM by both, a2 + a12 = 28 <= 29".into())
}

fn criterion_3() -> Outcome {
    let e = example([813, 1032, 1240, 1835])?;
    let cf = closed_form(&e, GorensteinCase::TwoB)?;
    ensure(cf.verdict == Some(true), "closed form does not give CM")?;
    ensure(has_check(&cf, 19, 20), "inequality 19 <= 20 not reproduced")?;
    ensure(oracle_cm(&e)?.0, "oracle says not CM")?;
    Ok("case 2b, CM by both, 19 <= 20".into())
}

fn criterion_4() -> Outcome {
    let opts = DecideOptions::default();
    let e = example([30, 34, 42, 51])?;
    let r = &e.report;
    ensure(r.num_generators() == 3, format!("{} generators", r.num_generators()))?;
    ensure(r.i_set.is_empty() && r.r_set.is_empty(), "I or R not empty")?;
    let d = decide(&e.g, &e.tables, r, None, &opts).map_err(|x| x.to_string())?;
    ensure(d.verdict.is_some_and(|v| v.is_cm), "(30,34,42,51) not CM")?;

    let e = example([49, 63, 65, 78])?;
    let f = bins(&[
        "x1^9 - x2^7",
        "x3^6 - x4^5",
        "x1^2*x4^2 - x2^3*x3",
        "x1^3*x2^2 - x3^3*x4",
        "x1^5*x4 - x2*x3^4",
        "x1*x2^5 - x3^2*x4^3",
        "x1^5*x3^2 - x2*x4^4",
        "x1^8*x2 - x3*x4^5",
        "x1^2*x3^5 - x2^3*x4^3",
        "x1^7*x3 - x2^4*x4^2",
        "x1^4*x3^4 - x2^6*x4",
    ]);
    let r = &e.report;
    ensure(canonical_set(&r.minimal_generators) == canonical_set(&f), "11 generators differ")?;
    let i: Vec<Binomial> = r.i_set.iter().map(|p| p.binomial()).collect();
    let want_i: Vec<Binomial> = [3, 4, 5, 6, 7, 9, 10, 11].iter().map(|&k| f[k - 1]).collect();
    ensure(canonical_set(&i) == canonical_set(&want_i), "I differs")?;
    let rr: Vec<Binomial> = r.r_set.iter().map(|p| p.binomial()).collect();
    ensure(canonical_set(&rr) == canonical_set(&[f[7]]), "R differs")?;
    let d = decide(&e.g, &e.tables, r, None, &opts).map_err(|x| x.to_string())?;
    ensure(d.verdict.is_some_and(|v| v.is_cm), "(49,63,65,78) not CM")?;
    ensure(d.fast_path.is_some_and(|v| v.is_cm), "case 2b predicate did not decide CM")?;
    Ok("3 generators with I = R = {}; 11 generators with I = {f3..f7, f9..f11}, R = {f8}; both CM".into())
}

fn member_ok(f: FamilyId, p: u64) -> Result<MemberReport, String> {
    let r = verify_member(f, p, &DecideOptions::default()).map_err(|e| format!("{f} {p}: {e}"))?;
    if let MemberReport::Verified { checks, .. } = &r {
        if let Some(c) = checks.iter().find(|c| !c.ok) {
            return Err(format!("{f} {p}: {} expected {} found {}", c.name, c.expected, c.found));
        }
    }
    Ok(r)
}

fn criterion_5() -> Outcome {
    let t = Instant::now();
    for m in 4..=8 {
        let r = member_ok(FamilyId::E43, m)?;
        let MemberReport::Verified { checks, gens, .. } = &r else {
            return Err(format!("e43 {m} rejected"));
        };
        for name in ["closed form agrees", "tangent cone ideal", "reduced Hilbert numerator", "h(1) = n1"] {
            ensure(checks.iter().any(|c| c.name == name), format!("e43 {m}: no `{name}` check"))?;
        }
        // the exhaustive check must have run too
        let e = example(*gens)?;
        let d = decide(&e.g, &e.tables, &e.report, e.gor.as_ref(), &DecideOptions::default())
            .map_err(|x| x.to_string())?;
        ensure(d.oracle == OracleStatus::Completed, format!("e43 {m}: oracle {:?}", d.oracle))?;
    }
    let took = t.elapsed();
    ensure(took < Duration::from_secs(10), format!("took {took:?}"))?;
    Ok(format!("m = 4..8 not CM, symmetric, I_* and numerator match, h(1) = 2m+1 ({took:.2?})"))
}

fn criterion_6() -> Outcome {
    for m in 2..=5 {
        member_ok(FamilyId::E41, m)?;
    }
    for t in [0, 2] {
        if let MemberReport::Rejected { reason, .. } = member_ok(FamilyId::Gi, t)? {
            return Err(format!("gi {t} rejected: {reason}"));
        }
    }
    match member_ok(FamilyId::Gi, 1)? {
        MemberReport::Rejected { reason, .. } if reason.contains("is 2") => {}
        r => return Err(format!("gi 1 not rejected with gcd 2: {r:?}")),
    }
    Ok("e41 m = 2..5 and gi t = 0, 2 Gorenstein and CM; gi t = 1 rejected (gcd 2)".into())
}

fn criterion_7(grid: &[CrossCheck], took: Duration) -> Outcome {
    let failed: Vec<&CrossCheck> = grid.iter().filter(|c| !c.passed()).collect();
    for c in failed.iter().take(10) {
        println!("    {:?}: {:?}", c.gens, c.failures);
    }
    ensure(failed.is_empty(), format!("{} of {} tuples failed", failed.len(), grid.len()))?;
    ensure(took < Duration::from_secs(900), format!("grid took {took:?}"))?;
    let decided = grid.iter().filter(|c| c.closed_form.is_some() || c.predicate.is_some()).count();
    Ok(format!("{} tuples, {decided} decided by a criterion, 0 violations ({took:.1?})", grid.len()))
}

fn criterion_8(grid: &[CrossCheck]) -> Outcome {
    let mut checked = 0;
    for c in grid.iter().filter(|c| c.gorenstein.is_some()) {
        ensure(c.lexinf == Some(true), format!("{:?}: S-pairs do not reduce to zero", c.gens))?;
        checked += 1;
    }
    for n in [[1199, 2051, 2352, 3032], [627, 1546, 1662, 3377], [813, 1032, 1240, 1835]] {
        let e = example(n)?;
        let d = e.gor.as_ref().ok_or(format!("{n:?} not Gorenstein"))?;
        let ok = verify_prop_lexinf(&d.generators, d.case.lexinf_perm()).map_err(|x| x.to_string())?;
        ensure(ok, format!("{n:?}: S-pairs do not reduce to zero"))?;
        checked += 1;
    }
    Ok(format!("{checked} Gorenstein instances, all S-pairs reduce to zero"))
}

#[test]
fn acceptance() {
    let mut results: Vec<(u32, Outcome)> = vec![
        (1, criterion_1()),
        (2, criterion_2()),
        (3, criterion_3()),
        (4, criterion_4()),
        (5, criterion_5()),
        (6, criterion_6()),
    ];
    let t = Instant::now();
    let tuples = tuples_in_range(1, 60);
    let grid = par::map(Exec::default(), &tuples, |&n| cross_check(n));
    let took = t.elapsed();
    results.push((7, criterion_7(&grid, took)));
    results.push((8, criterion_8(&grid)));

    for (k, r) in &results {
        match r {
            Ok(msg) => println!("criterion {k}: PASS  {msg}"),
            Err(msg) => println!("criterion {k}: FAIL  {msg}"),
        }
    }
    let failed: Vec<u32> = results.iter().filter(|(_, r)| r.is_err()).map(|(k, _)| *k).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
