//! Gorenstein non-complete-intersection monomial curves.
//!
//! `I(C)` is then minimally generated by four critical binomials
//! `f_i = x_i^{a_i} - x_j^{a_ij} x_k^{a_ik}` and one further binomial `f5`.
//! With `n1 < n2 < n3 < n4` fixed, the variables appearing in the critical
//! binomials follow one of six patterns (cases 1a to 3b below), each with a
//! determined `f5`. Here `a_ij` is the exponent of `x_j` in `f_i`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::hilbert::MonomialIdeal;
use crate::monomial::{Binomial, ExponentVector};
use crate::semigroup::GeneratorTuple;
use crate::toric::CaseReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[cfg_attr(feature = "schema", derive(schemars::JsonSchema))]
pub enum GorensteinCase {
    #[serde(rename = "1a")]
    OneA,
    #[serde(rename = "1b")]
    OneB,
    #[serde(rename = "2a")]
    TwoA,
    #[serde(rename = "2b")]
    TwoB,
    #[serde(rename = "3a")]
    ThreeA,
    #[serde(rename = "3b")]
    ThreeB,
}

pub const ALL_CASES: [GorensteinCase; 6] = [
    GorensteinCase::OneA,
    GorensteinCase::OneB,
    GorensteinCase::TwoA,
    GorensteinCase::TwoB,
    GorensteinCase::ThreeA,
    GorensteinCase::ThreeB,
];

impl fmt::Display for GorensteinCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GorensteinCase::OneA => "1a",
            GorensteinCase::OneB => "1b",
            GorensteinCase::TwoA => "2a",
            GorensteinCase::TwoB => "2b",
            GorensteinCase::ThreeA => "3a",
            GorensteinCase::ThreeB => "3b",
        })
    }
}

impl GorensteinCase {
    /// For each variable `i` (one-based), the two variables of its partner.
    pub fn partner_pattern(self) -> [[usize; 2]; 4] {
        match self {
            GorensteinCase::OneA => [[3, 4], [1, 4], [1, 2], [2, 3]],
            GorensteinCase::OneB => [[3, 4], [1, 3], [2, 4], [1, 2]],
            GorensteinCase::TwoA => [[2, 3], [3, 4], [1, 4], [1, 2]],
            GorensteinCase::TwoB => [[2, 3], [1, 4], [2, 4], [1, 3]],
            GorensteinCase::ThreeA => [[2, 4], [1, 3], [1, 4], [2, 3]],
            GorensteinCase::ThreeB => [[2, 4], [3, 4], [1, 2], [1, 3]],
        }
    }

    /// Variable order (zero-based, most significant first) under which the
    /// five generators form a standard basis for the local lexicographic
    /// order.
    pub fn lexinf_perm(self) -> [usize; 4] {
        match self {
            GorensteinCase::TwoA | GorensteinCase::ThreeB => [0, 2, 1, 3],
            _ => [0, 1, 2, 3],
        }
    }
}

/// A recognised Gorenstein curve with its exponent data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinData {
    pub case: GorensteinCase,
    pub a: [u32; 4],
    /// `aij[i][j]` is the exponent of `x_{j+1}` in `f_{i+1}`.
    pub aij: [[u32; 4]; 4],
    /// `f1..f5` in the normal form of the case.
    pub generators: [Binomial; 5],
    /// Assignment of the variables of the general structure theorem
    /// (frame position to variable index, zero-based) under which its
    /// arithmetic relations were checked.
    pub frame: [usize; 4],
}

impl GorensteinData {
    /// `a_i` with a one-based index.
    #[inline]
    pub fn a_(&self, i: usize) -> i64 {
        self.a[i - 1] as i64
    }

    /// `a_ij` with one-based indices.
    #[inline]
    pub fn a2(&self, i: usize, j: usize) -> i64 {
        self.aij[i - 1][j - 1] as i64
    }
}

fn f5_for(case: GorensteinCase, aij: &[[u32; 4]; 4]) -> Binomial {
    let a = |i: usize, j: usize| aij[i - 1][j - 1];
    let m = |pairs: [(usize, u32); 2]| {
        let mut e = [0u32; 4];
        for (v, k) in pairs {
            e[v - 1] = k;
        }
        ExponentVector(e)
    };
    let (plus, minus) = match case {
        GorensteinCase::OneA => (m([(1, a(2, 1)), (3, a(4, 3))]), m([(2, a(3, 2)), (4, a(1, 4))])),
        GorensteinCase::OneB => (m([(1, a(2, 1)), (4, a(3, 4))]), m([(2, a(4, 2)), (3, a(1, 3))])),
        GorensteinCase::TwoA => (m([(1, a(4, 1)), (3, a(2, 3))]), m([(2, a(1, 2)), (4, a(3, 4))])),
        GorensteinCase::TwoB => (m([(1, a(4, 1)), (2, a(3, 2))]), m([(3, a(1, 3)), (4, a(2, 4))])),
        GorensteinCase::ThreeA => (m([(1, a(3, 1)), (2, a(4, 2))]), m([(3, a(2, 3)), (4, a(1, 4))])),
        GorensteinCase::ThreeB => (m([(1, a(3, 1)), (4, a(2, 4))]), m([(2, a(1, 2)), (3, a(4, 3))])),
    };
    Binomial { plus, minus }
}

/// Recognises the Gorenstein pattern from the minimal generators. Returns
/// `None` unless `S` is symmetric with exactly five minimal generators in
/// one of the six normal forms.
pub fn gorenstein_data(g: &GeneratorTuple, report: &CaseReport, symmetric: bool) -> Option<GorensteinData> {
    if !symmetric || report.minimal_generators.len() != 5 {
        return None;
    }
    let a = report.a_values;
    let mut aij = [[0u32; 4]; 4];
    let mut crit: [Option<Binomial>; 4] = [None; 4];
    let mut rest = Vec::new();
    for b in &report.minimal_generators {
        let mut matched = false;
        for (p, q) in [(b.plus, b.minus), (b.minus, b.plus)] {
            if p.support().count_ones() == 1 && q.support().count_ones() == 2 {
                let i = p.support().trailing_zeros() as usize;
                if p.0[i] == a[i] && crit[i].is_none() {
                    crit[i] = Some(Binomial { plus: p, minus: q });
                    aij[i] = q.0;
                    matched = true;
                    break;
                }
            }
        }
        if !matched {
            rest.push(*b);
        }
    }
    if crit.iter().any(Option::is_none) || rest.len() != 1 {
        return None;
    }
    let pattern: [[usize; 2]; 4] = std::array::from_fn(|i| {
        let s = aij[i];
        let vars: Vec<usize> = (0..4).filter(|&j| s[j] > 0).map(|j| j + 1).collect();
        [vars[0], vars[1]]
    });
    let case = ALL_CASES.into_iter().find(|c| c.partner_pattern() == pattern)?;
    let f5 = f5_for(case, &aij);
    if !f5.same_up_to_sign(&rest[0]) {
        return None;
    }
    let frame = structure_frame(g, &a, &aij)?;
    let generators = [crit[0].unwrap(), crit[1].unwrap(), crit[2].unwrap(), crit[3].unwrap(), f5];
    Some(GorensteinData { case, a, aij, generators, frame })
}

/// Finds the relabelling `sigma` under which the critical binomials read
/// `x_A^{.} - x_C x_D`, `x_B - x_A x_D`, `x_C - x_A x_B`, `x_D - x_B x_C`
/// and checks the arithmetic identities for the generators:
/// `n_A = A2 A3 A14 + A32 A13 A24` and its three companions, with
/// `A_i = sum_j A_ji` and `0 < A_ij < A_j`.
pub fn structure_frame(g: &GeneratorTuple, a: &[u32; 4], aij: &[[u32; 4]; 4]) -> Option<[usize; 4]> {
    const FRAME: [[usize; 2]; 4] = [[2, 3], [0, 3], [0, 1], [1, 2]];
    for sigma in permutations4() {
        let fits = (0..4).all(|k| {
            let want = [sigma[FRAME[k][0]], sigma[FRAME[k][1]]];
            let row = aij[sigma[k]];
            (0..4).all(|j| (row[j] > 0) == want.contains(&j))
        });
        if !fits {
            continue;
        }
        let big = |k: usize| a[sigma[k]] as i128;
        let small = |k: usize, l: usize| aij[sigma[k]][sigma[l]] as i128;
        let sums_ok = big(0) == small(1, 0) + small(2, 0)
            && big(1) == small(2, 1) + small(3, 1)
            && big(2) == small(0, 2) + small(3, 2)
            && big(3) == small(0, 3) + small(1, 3);
        let bounds_ok = (0..4).all(|k| (0..4).all(|l| small(k, l) == 0 || small(k, l) < big(l)));
        let n = |k: usize| g.n(sigma[k]) as i128;
        let rel_ok = n(0) == big(1) * big(2) * small(0, 3) + small(2, 1) * small(0, 2) * small(1, 3)
            && n(1) == big(2) * big(3) * small(1, 0) + small(2, 0) * small(3, 2) * small(1, 3)
            && n(2) == big(0) * big(3) * small(2, 1) + small(0, 3) * small(3, 1) * small(2, 0)
            && n(3) == big(0) * big(1) * small(3, 2) + small(3, 1) * small(1, 0) * small(0, 2);
        if sums_ok && bounds_ok && rel_ok {
            return Some(sigma);
        }
    }
    None
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    if a != b && a != c && a != d && b != c && b != d && c != d {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

/// Monomials in `x2, x3, x4` whose complement in that ring is the set of
/// standard monomials of `k[x2, x3, x4]` modulo the leading ideal of
/// `I(C) + <x1>`; their S-degrees form the Apéry set with respect to `n1`.
pub fn apery_standard_monomials(d: &GorensteinData) -> MonomialIdeal {
    let m = |pairs: &[(usize, i64)]| {
        let mut e = [0u32; 4];
        for &(v, k) in pairs {
            e[v - 1] = k as u32;
        }
        ExponentVector(e)
    };
    let (a2, a3, a4) = (d.a_(2), d.a_(3), d.a_(4));
    let a = |i, j| d.a2(i, j);
    let powers = [m(&[(2, a2)]), m(&[(3, a3)]), m(&[(4, a4)])];
    let (first, last) = match d.case {
        GorensteinCase::OneA => (m(&[(3, a(1, 3)), (4, a(1, 4))]), m(&[(2, a(3, 2)), (4, a(1, 4))])),
        GorensteinCase::OneB => (m(&[(3, a(1, 3)), (4, a(1, 4))]), m(&[(2, a(4, 2)), (3, a(1, 3))])),
        GorensteinCase::TwoA => (m(&[(2, a(1, 2)), (3, a(1, 3))]), m(&[(2, a(1, 2)), (4, a(3, 4))])),
        GorensteinCase::TwoB => (m(&[(2, a(1, 2)), (3, a(1, 3))]), m(&[(3, a(1, 3)), (4, a(2, 4))])),
        GorensteinCase::ThreeA => (m(&[(2, a(1, 2)), (4, a(1, 4))]), m(&[(3, a(2, 3)), (4, a(1, 4))])),
        GorensteinCase::ThreeB => (m(&[(2, a(1, 2)), (4, a(1, 4))]), m(&[(2, a(1, 2)), (3, a(4, 3))])),
    };
    let mut gens = vec![first];
    gens.extend(powers);
    gens.push(last);
    MonomialIdeal::new(gens)
}

/// S-degrees of the standard monomials (in `x2, x3, x4`) outside `ideal`,
/// sorted. The ideal must contain a power of each of `x2, x3, x4`.
pub fn standard_monomial_degrees(g: &GeneratorTuple, ideal: &MonomialIdeal) -> Vec<u64> {
    let bound = |i: usize| {
        ideal
            .generators()
            .iter()
            .filter(|e| e.support() == 1 << i)
            .map(|e| e.0[i])
            .min()
            .unwrap_or(0)
    };
    let mut out = Vec::new();
    for x2 in 0..bound(1) {
        for x3 in 0..bound(2) {
            for x4 in 0..bound(3) {
                let e = ExponentVector([0, x2, x3, x4]);
                if !ideal.contains(&e) {
                    out.push(e.weighted_degree(g.gens()));
                }
            }
        }
    }
    out.sort_unstable();
    out
}
