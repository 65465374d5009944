use monocurve::grobner::DEFAULT_STEP_BUDGET;
use monocurve::monomial::{canonical_set, Binomial};
use monocurve::semigroup::GeneratorTuple;
use monocurve::toric::lattice::{is_kernel_basis, kernel_basis};
use monocurve::toric::{analyze_toric, is_indispensable_binomial, CaseLabel};

fn bins(s: &[&str]) -> Vec<Binomial> {
    s.iter().map(|x| x.parse().unwrap()).collect()
}

fn analyze(n: [u64; 4]) -> monocurve::toric::ToricAnalysis {
    analyze_toric(&GeneratorTuple::new(n).unwrap(), DEFAULT_STEP_BUDGET).unwrap()
}

#[test]
fn gorenstein_example_with_indispensable_generators() {
    let t = analyze([1199, 2051, 2352, 3032]);
    let expected = bins(&[
        "x1^16 - x3^3*x4^4",
        "x2^19 - x1^7*x3^13",
        "x3^16 - x2^8*x4^7",
        "x4^11 - x1^9*x2^11",
        "x1^7*x4^7 - x2^11*x3^3",
    ]);
    assert_eq!(canonical_set(&t.report.minimal_generators), canonical_set(&expected));
    assert_eq!(t.report.case, CaseLabel::One);
    let g = GeneratorTuple::new([1199, 2051, 2352, 3032]).unwrap();
    for b in &expected {
        assert!(is_indispensable_binomial(&g, b), "{b}");
    }
}

#[test]
fn three_generator_example() {
    let t = analyze([30, 34, 42, 51]);
    let expected = bins(&["x1^7 - x3^5", "x2^3 - x4^2", "x2^3 - x1^2*x3"]);
    assert_eq!(canonical_set(&t.report.minimal_generators), canonical_set(&expected));
    assert_eq!(t.report.case, CaseLabel::TwoA);
    assert_eq!(t.report.mu, 3);
    assert!(t.report.i_set.is_empty());
    assert!(t.report.r_set.is_empty());
}

#[test]
fn eleven_generator_example() {
    let t = analyze([49, 63, 65, 78]);
    let r = &t.report;
    assert_eq!(r.case, CaseLabel::TwoB);
    assert_eq!(r.a_values, [9, 7, 6, 5]);
    assert_eq!(r.num_generators(), 11);
    assert_eq!(canonical_set(&r.s_set), canonical_set(&bins(&["x1^9 - x2^7", "x3^6 - x4^5"])));
    let i_expected = bins(&[
        "x1^2*x4^2 - x2^3*x3",
        "x1^3*x2^2 - x3^3*x4",
        "x1^5*x4 - x2*x3^4",
        "x1*x2^5 - x3^2*x4^3",
        "x1^5*x3^2 - x2*x4^4",
        "x1^2*x3^5 - x2^3*x4^3",
        "x1^7*x3 - x2^4*x4^2",
        "x1^4*x3^4 - x2^6*x4",
    ]);
    let i_found: Vec<Binomial> = r.i_set.iter().map(|p| p.binomial()).collect();
    assert_eq!(canonical_set(&i_found), canonical_set(&i_expected));
    let r_found: Vec<Binomial> = r.r_set.iter().map(|p| p.binomial()).collect();
    assert_eq!(canonical_set(&r_found), canonical_set(&bins(&["x1^8*x2 - x3*x4^5"])));
    assert!(r.unclassified.is_empty());
}

#[test]
fn symmetric_five_generator_example() {
    let t = analyze([10, 17, 22, 28]);
    let expected = bins(&[
        "x1^5 - x3*x4",
        "x2^4 - x1^4*x4",
        "x3^2 - x1*x2^2",
        "x4^2 - x2^2*x3",
        "x1^4*x3 - x2^2*x4",
    ]);
    assert_eq!(canonical_set(&t.report.minimal_generators), canonical_set(&expected));
}

#[test]
fn saturation_and_fiber_agree_on_small_tuples() {
    for n in [[5, 6, 7, 9], [6, 7, 8, 11], [7, 9, 11, 13], [4, 5, 6, 7], [3, 5, 7, 11]] {
        let t = analyze(n);
        assert!(!t.saturation.generators.is_empty(), "{n:?}");
        let g = GeneratorTuple::new(n).unwrap();
        let basis = kernel_basis(g.gens()).unwrap();
        assert!(is_kernel_basis(g.gens(), &basis));
    }
}
