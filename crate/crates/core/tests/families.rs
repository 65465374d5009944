use monocurve::cmcheck::DecideOptions;
use monocurve::families::{instantiate, verify_member, FamilyId, MemberReport};
use monocurve::Error;

fn verify(f: FamilyId, p: u64) -> MemberReport {
    let r = verify_member(f, p, &DecideOptions::default()).unwrap();
    if let MemberReport::Verified { checks, .. } = &r {
        if let Some(c) = checks.iter().find(|c| !c.ok) {
            panic!("{f} {p}: {} expected {} found {}", c.name, c.expected, c.found);
        }
    }
    r
}

#[test]
fn e41_first_member_is_10_17_22_28() {
    let (g, e) = instantiate(FamilyId::E41, 2).unwrap();
    assert_eq!(g.gens(), &[10, 17, 22, 28]);
    assert_eq!(e.generators.len(), 5);
}

#[test]
fn e41_members_verify() {
    for m in 2..=5 {
        assert!(matches!(verify(FamilyId::E41, m), MemberReport::Verified { .. }));
    }
}

#[test]
fn e43_members_verify() {
    let (g, _) = instantiate(FamilyId::E43, 4).unwrap();
    assert_eq!(g.gens(), &[9, 11, 34, 35]);
    for m in 4..=10 {
        assert!(matches!(verify(FamilyId::E43, m), MemberReport::Verified { .. }));
    }
}

#[test]
fn gi_members() {
    let (g, _) = instantiate(FamilyId::Gi, 2).unwrap();
    assert_eq!(g.gens(), &[22, 34, 35, 52]);
    for t in [0, 2, 4, 6] {
        assert!(matches!(verify(FamilyId::Gi, t), MemberReport::Verified { .. }), "t = {t}");
    }
    match verify(FamilyId::Gi, 1) {
        MemberReport::Rejected { reason, .. } => assert!(reason.contains("is 2"), "{reason}"),
        r => panic!("t = 1 accepted: {r:?}"),
    }
}

#[test]
fn gi_odd_parameters_have_even_gcd() {
    for t in (1..40).step_by(2) {
        assert!(matches!(instantiate(FamilyId::Gi, t), Err(Error::InvalidInput(_))));
    }
}

#[test]
fn parameter_ranges() {
    assert!(instantiate(FamilyId::E41, 1).is_err());
    assert!(instantiate(FamilyId::E43, 3).is_err());
    assert!(verify_member(FamilyId::E43, 3, &DecideOptions::default()).is_err());
    assert!(instantiate(FamilyId::E41, 16).is_err());
    assert!(instantiate(FamilyId::E41, 15).is_ok());
}
