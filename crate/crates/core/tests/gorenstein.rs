use monocurve::gorenstein::{
    apery_standard_monomials, gorenstein_data, standard_monomial_degrees, structure_frame, GorensteinCase,
    GorensteinData,
};
use monocurve::grobner::{verify_prop_lexinf, DEFAULT_STEP_BUDGET};
use monocurve::hilbert::MonomialIdeal;
use monocurve::monomial::{Binomial, ExponentVector};
use monocurve::semigroup::{GeneratorTuple, MembershipTables};
use monocurve::toric::analyze_toric;

fn detect(n: [u64; 4]) -> (GeneratorTuple, Option<GorensteinData>) {
    let g = GeneratorTuple::new(n).unwrap();
    let t = MembershipTables::for_tuple(&g).unwrap();
    let r = analyze_toric(&g, DEFAULT_STEP_BUDGET).unwrap().report;
    let d = gorenstein_data(&g, &r, t.is_symmetric().unwrap());
    (g, d)
}

const GORENSTEIN: [[u64; 4]; 5] =
    [[1199, 2051, 2352, 3032], [627, 1546, 1662, 3377], [813, 1032, 1240, 1835], [10, 17, 22, 28], [9, 11, 34, 35]];

#[test]
fn exponents_of_the_1b_example() {
    let (_, d) = detect([1199, 2051, 2352, 3032]);
    let d = d.unwrap();
    assert_eq!(d.case, GorensteinCase::OneB);
    assert_eq!(d.a, [16, 19, 16, 11]);
    assert_eq!(
        [d.a2(2, 1), d.a2(3, 2), d.a2(4, 2), d.a2(1, 4), d.a2(3, 4), d.a2(1, 3)],
        [7, 8, 11, 4, 7, 3]
    );
}

#[test]
fn exponents_of_the_2a_example() {
    let (_, d) = detect([627, 1546, 1662, 3377]);
    let d = d.unwrap();
    assert_eq!(d.case, GorensteinCase::TwoA);
    assert_eq!((d.a_(1), d.a_(2)), (18, 25));
    assert_eq!([d.a2(2, 4), d.a2(3, 4), d.a2(1, 2), d.a2(1, 3), d.a2(2, 3)], [8, 3, 3, 4, 7]);
    // the displayed generator x3^11 - x1^13 x4^3 gives a31 = 13
    assert_eq!(d.a2(3, 1) + d.a2(3, 4), 16);
}

#[test]
fn other_cases() {
    assert_eq!(detect([813, 1032, 1240, 1835]).1.unwrap().case, GorensteinCase::TwoB);
    assert_eq!(detect([9, 11, 34, 35]).1.unwrap().case, GorensteinCase::TwoB);
    assert_eq!(detect([10, 17, 22, 28]).1.unwrap().case, GorensteinCase::OneA);
    assert_eq!(detect([22, 34, 35, 52]).1.unwrap().case, GorensteinCase::ThreeA);
}

#[test]
fn non_gorenstein_examples() {
    // complete intersection
    assert!(detect([30, 34, 42, 51]).1.is_none());
    // eleven generators
    assert!(detect([49, 63, 65, 78]).1.is_none());
}

#[test]
fn structure_identities() {
    for n in GORENSTEIN {
        let (g, d) = detect(n);
        let d = d.unwrap();
        assert!(structure_frame(&g, &d.a, &d.aij).is_some(), "{n:?}");
    }
    let (g, d) = detect([813, 1032, 1240, 1835]);
    let d = d.unwrap();
    let mut aij = d.aij;
    aij[1][0] += 1;
    assert!(structure_frame(&g, &d.a, &aij).is_none());
}

#[test]
fn case_1a_avoidance_monomials() {
    let (_, d) = detect([10, 17, 22, 28]);
    let d = d.unwrap();
    let e = |v: [u32; 4]| ExponentVector(v);
    let (a13, a14, a32) = (d.a2(1, 3) as u32, d.a2(1, 4) as u32, d.a2(3, 2) as u32);
    let want = MonomialIdeal::new(vec![
        e([0, 0, a13, a14]),
        e([0, d.a[1], 0, 0]),
        e([0, 0, d.a[2], 0]),
        e([0, 0, 0, d.a[3]]),
        e([0, a32, 0, a14]),
    ]);
    assert_eq!(apery_standard_monomials(&d), want);
}

#[test]
fn standard_monomials_give_the_apery_set() {
    for n in GORENSTEIN.into_iter().chain([[22, 34, 35, 52], [13, 15, 76, 77]]) {
        let (g, d) = detect(n);
        let d = d.unwrap();
        let degrees = standard_monomial_degrees(&g, &apery_standard_monomials(&d));
        let mut apery = MembershipTables::for_tuple(&g).unwrap().apery_set().unwrap();
        apery.sort_unstable();
        assert_eq!(degrees.len() as u64, g.n(0), "{n:?}");
        assert_eq!(degrees, apery, "{n:?}");
    }
}

#[test]
fn generators_are_a_local_standard_basis() {
    for n in GORENSTEIN {
        let (_, d) = detect(n);
        let d = d.unwrap();
        assert!(verify_prop_lexinf(&d.generators, d.case.lexinf_perm()).unwrap(), "{n:?}");
    }
}

#[test]
fn perturbed_f5_is_not_a_standard_basis() {
    let (_, d) = detect([813, 1032, 1240, 1835]);
    let d = d.unwrap();
    let mut gens = d.generators;
    let f5 = gens[4];
    gens[4] = Binomial::new(f5.plus.mul(&ExponentVector([1, 0, 0, 0])), f5.minus).unwrap();
    assert!(!verify_prop_lexinf(&gens, d.case.lexinf_perm()).unwrap());
}
