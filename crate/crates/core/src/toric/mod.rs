//! The toric ideal `I(C)`: critical binomials, minimal generators by two
//! independent routes, and the case classification by coincident critical
//! degrees.

pub mod fiber;
pub mod lattice;
pub mod saturation;

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Binomial, ExponentVector};
use crate::semigroup::{
    count_factorizations, factorizations_in, GeneratorTuple, DEFAULT_FACTORIZATION_CAP,
};

pub use fiber::{minimal_generators_fiber, FiberGenerators};
pub use saturation::{ideals_coincide, toric_generators_saturation, SaturationResult};

/// `a_i`: least positive integer with `a_i n_i` in the semigroup generated by
/// the other three generators.
pub fn a_values(g: &GeneratorTuple) -> [u32; 4] {
    let gens = *g.gens();
    std::array::from_fn(|i| {
        // a_i <= n_j / gcd(n_i, n_j) for every j != i
        let cap = (0..4).filter(|&j| j != i).map(|j| gens[j] / gens[i].gcd(&gens[j])).min().unwrap();
        let others: Vec<usize> = (0..4).filter(|&j| j != i).map(|j| gens[j] as usize).collect();
        let limit = (cap * gens[i]) as usize;
        let mut member = vec![false; limit + 1];
        member[0] = true;
        let ni = gens[i] as usize;
        for s in 1..=limit {
            member[s] = others.iter().any(|&n| n <= s && member[s - n]);
            if s % ni == 0 && member[s] {
                return (s / ni) as u32;
            }
        }
        unreachable!("a_i is bounded by n_j / gcd(n_i, n_j)")
    })
}

/// Every critical binomial `x_i^{a_i} - x^u` of `x_i` (all factorizations `u`
/// of `a_i n_i` avoiding `x_i`).
pub fn critical_binomials(g: &GeneratorTuple, a: &[u32; 4], i: usize) -> Result<Vec<Binomial>> {
    let d = a[i] as u64 * g.n(i);
    let mask = 0b1111 & !(1u8 << i);
    let partners = factorizations_in(g.gens(), d, mask, DEFAULT_FACTORIZATION_CAP)?;
    Ok(partners
        .into_iter()
        .filter_map(|u| Binomial::new(ExponentVector::pure_power(i, a[i]), u))
        .collect())
}

/// A binomial is indispensable when its degree has exactly the two fiber
/// elements given by its terms.
pub fn is_indispensable_binomial(g: &GeneratorTuple, b: &Binomial) -> bool {
    match b.homogeneous_degree(g.gens()) {
        Some(d) => b.plus.is_coprime(&b.minus) && count_factorizations(g.gens(), d, 3) == 2,
        None => false,
    }
}

/// A monomial is indispensable when it is a minimal generator of the ideal
/// spanned by all monomials with a non-singleton fiber.
pub fn is_indispensable_monomial(g: &GeneratorTuple, m: &ExponentVector) -> bool {
    let gens = g.gens();
    let d = m.weighted_degree(gens);
    if count_factorizations(gens, d, 2) < 2 {
        return false;
    }
    (0..4).filter(|&i| m.contains_var(i)).all(|i| count_factorizations(gens, d - gens[i], 2) == 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[cfg_attr(feature = "schema", derive(schemars::JsonSchema))]
pub enum CaseLabel {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "2a")]
    TwoA,
    #[serde(rename = "2b")]
    TwoB,
    #[serde(rename = "2c")]
    TwoC,
    #[serde(rename = "3")]
    Three,
    #[serde(rename = "4a")]
    FourA,
    #[serde(rename = "4b")]
    FourB,
    /// Some generator is redundant (`a_i = 1`).
    #[serde(rename = "degenerate")]
    Degenerate,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseLabel::One => "1",
            CaseLabel::TwoA => "2a",
            CaseLabel::TwoB => "2b",
            CaseLabel::TwoC => "2c",
            CaseLabel::Three => "3",
            CaseLabel::FourA => "4a",
            CaseLabel::FourB => "4b",
            CaseLabel::Degenerate => "degenerate",
        })
    }
}

/// A generator `M - N` where `M = x_i^u x_j^v` (`0 < u < a_i`, `0 < v < a_j`)
/// and `N` is an indispensable monomial in the two other variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairedGenerator {
    pub m: ExponentVector,
    pub n: ExponentVector,
}

impl PairedGenerator {
    pub fn binomial(&self) -> Binomial {
        Binomial::new(self.m, self.n).expect("distinct terms")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case: CaseLabel,
    pub a_values: [u32; 4],
    /// `a_i n_i`.
    pub critical_degrees: [u64; 4],
    /// Variables grouped by equal critical degree, ascending degree.
    pub classes: Vec<Vec<usize>>,
    /// For each variable, every `u` with `x_i^{a_i} - x^u` critical.
    pub critical_partners: [Vec<ExponentVector>; 4],
    /// Minimal number of generators of the ideal of all critical binomials.
    pub mu: usize,
    /// Minimal generators in critical degrees.
    pub s_set: Vec<Binomial>,
    pub i_set: Vec<PairedGenerator>,
    /// Full-support generators splitting the pair of equal critical degree
    /// from the other two variables; `m` is the side containing `x1`.
    pub r_set: Vec<PairedGenerator>,
    pub unclassified: Vec<Binomial>,
    pub minimal_generators: Vec<Binomial>,
    pub generator_degrees: Vec<u64>,
    pub anomalies: Vec<String>,
}

impl CaseReport {
    pub fn num_generators(&self) -> usize {
        self.minimal_generators.len()
    }

    /// Whether the generators split into the sets the case theorems expect.
    pub fn is_fully_classified(&self) -> bool {
        self.unclassified.is_empty() && self.anomalies.is_empty()
    }
}

/// Everything computed about `I(C)` for one tuple.
#[derive(Clone, Debug)]
pub struct ToricAnalysis {
    pub report: CaseReport,
    pub saturation: SaturationResult,
    pub fiber: FiberGenerators,
}

/// Minimal generators, the saturation cross-check and the case report.
pub fn analyze_toric(g: &GeneratorTuple, budget: u64) -> Result<ToricAnalysis> {
    let a = a_values(g);
    let crit_deg: [u64; 4] = std::array::from_fn(|i| a[i] as u64 * g.n(i));
    let saturation = toric_generators_saturation(g, budget)?;
    let sat_max = saturation
        .generators
        .iter()
        .map(|b| b.plus.weighted_degree(g.gens()))
        .max()
        .unwrap_or(0);
    let bound = (2 * crit_deg.iter().max().unwrap()).max(sat_max);
    let fiber = minimal_generators_fiber(g, &a, bound)?;
    if !ideals_coincide(g, &fiber.generators, &saturation.generators, budget)? {
        return Err(Error::Invariant(format!(
            "saturation and fiber generators of {:?} span different ideals",
            g.gens()
        )));
    }
    let report = classify_generators(g, &a, &fiber)?;
    Ok(ToricAnalysis { report, saturation, fiber })
}

/// The case report alone.
pub fn classify(g: &GeneratorTuple, budget: u64) -> Result<CaseReport> {
    Ok(analyze_toric(g, budget)?.report)
}

fn classify_generators(g: &GeneratorTuple, a: &[u32; 4], fiber: &FiberGenerators) -> Result<CaseReport> {
    let crit_deg: [u64; 4] = std::array::from_fn(|i| a[i] as u64 * g.n(i));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = (0..4).collect();
    order.sort_by_key(|&i| (crit_deg[i], i));
    for i in order {
        match classes.last_mut() {
            Some(c) if crit_deg[c[0]] == crit_deg[i] => c.push(i),
            _ => classes.push(vec![i]),
        }
    }
    let mut critical_partners: [Vec<ExponentVector>; 4] = Default::default();
    for i in 0..4 {
        critical_partners[i] = critical_binomials(g, a, i)?.into_iter().map(|b| b.minus).collect();
    }
    let mu = critical_ideal_mu(g, a, &crit_deg)?;
    let mut anomalies = Vec::new();
    let mut sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
    sizes.sort_unstable_by(|x, y| y.cmp(x));
    let case = if a.contains(&1) {
        CaseLabel::Degenerate
    } else {
        match sizes.as_slice() {
            [1, 1, 1, 1] => CaseLabel::One,
            [4] => CaseLabel::TwoC,
            [3, 1] => CaseLabel::Three,
            [2, 2] => match mu {
                3 => CaseLabel::TwoA,
                2 => CaseLabel::TwoB,
                _ => {
                    anomalies.push(format!("two coincident pairs with mu(C_A) = {mu}"));
                    if mu > 3 { CaseLabel::TwoA } else { CaseLabel::TwoB }
                }
            },
            [2, 1, 1] => match mu {
                4 => CaseLabel::FourA,
                3 => CaseLabel::FourB,
                _ => {
                    anomalies.push(format!("one coincident pair with mu(C_A) = {mu}"));
                    if mu > 4 { CaseLabel::FourA } else { CaseLabel::FourB }
                }
            },
            _ => unreachable!("partitions of four"),
        }
    };

    let is_critical_degree = |d: u64| crit_deg.contains(&d);
    let mut s_set = Vec::new();
    let mut rest = Vec::new();
    for (b, &d) in fiber.generators.iter().zip(&fiber.degrees) {
        if is_critical_degree(d) {
            s_set.push(*b);
        } else {
            rest.push(*b);
        }
    }
    if s_set.len() != mu && case != CaseLabel::Degenerate {
        anomalies.push(format!(
            "{} minimal generators in critical degrees but mu(C_A) = {mu}",
            s_set.len()
        ));
    }

    // the pair whose split defines R
    let split_pair: Option<u8> = match case {
        CaseLabel::TwoA | CaseLabel::TwoB => {
            classes.iter().find(|c| c.contains(&0)).map(|c| c.iter().fold(0u8, |m, &i| m | 1 << i))
        }
        CaseLabel::FourB => {
            classes.iter().find(|c| c.len() == 2).map(|c| c.iter().fold(0u8, |m, &i| m | 1 << i))
        }
        _ => None,
    };

    let mut i_set = Vec::new();
    let mut r_set = Vec::new();
    let mut unclassified = Vec::new();
    for b in rest {
        if let Some(p) = as_paired(g, a, &b) {
            i_set.push(p);
            continue;
        }
        if let Some(pair) = split_pair {
            if b.has_full_support() {
                let (m, n) = if b.plus.contains_var(0) { (b.plus, b.minus) } else { (b.minus, b.plus) };
                let sp = b.plus.support();
                if sp == pair || sp == 0b1111 & !pair {
                    r_set.push(PairedGenerator { m, n });
                    continue;
                }
            }
        }
        unclassified.push(b);
    }

    Ok(CaseReport {
        case,
        a_values: *a,
        critical_degrees: crit_deg,
        classes,
        critical_partners,
        mu,
        s_set,
        i_set,
        r_set,
        unclassified,
        minimal_generators: fiber.generators.clone(),
        generator_degrees: fiber.degrees.clone(),
        anomalies,
    })
}

fn as_paired(g: &GeneratorTuple, a: &[u32; 4], b: &Binomial) -> Option<PairedGenerator> {
    if !b.has_full_support() {
        return None;
    }
    for (m, n) in [(b.plus, b.minus), (b.minus, b.plus)] {
        if m.support().count_ones() != 2 || n.support().count_ones() != 2 {
            continue;
        }
        let below = (0..4).filter(|&i| m.contains_var(i)).all(|i| m.0[i] < a[i]);
        if below && is_indispensable_monomial(g, &n) {
            return Some(PairedGenerator { m, n });
        }
    }
    None
}

/// Minimal number of generators of `C_A`, the ideal of all critical
/// binomials, from the fiber graphs in the critical degrees.
fn critical_ideal_mu(g: &GeneratorTuple, a: &[u32; 4], crit_deg: &[u64; 4]) -> Result<usize> {
    let mut all: Vec<(u64, Binomial)> = Vec::new();
    for i in 0..4 {
        for b in critical_binomials(g, a, i)? {
            all.push((crit_deg[i], b));
        }
    }
    let mut degrees: Vec<u64> = crit_deg.to_vec();
    degrees.sort_unstable();
    degrees.dedup();
    let mut mu = 0;
    for &d in &degrees {
        let fiber = factorizations_in(g.gens(), d, 0b1111, DEFAULT_FACTORIZATION_CAP)?;
        let index: HashMap<ExponentVector, usize> = fiber.iter().enumerate().map(|(k, m)| (*m, k)).collect();
        let mut parent: Vec<usize> = (0..fiber.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        let mut classes = fiber.len();
        let union = |p: &mut Vec<usize>, x: usize, y: usize, classes: &mut usize| {
            let (rx, ry) = (find(p, x), find(p, y));
            if rx != ry {
                p[rx] = ry;
                *classes -= 1;
            }
        };
        for (k, m) in fiber.iter().enumerate() {
            for (_, b) in all.iter().filter(|(e, _)| *e < d) {
                for (from, to) in [(b.plus, b.minus), (b.minus, b.plus)] {
                    if let Some(q) = m.checked_div(&from) {
                        let target = q.mul(&to);
                        let t = *index.get(&target).ok_or_else(|| {
                            Error::Invariant(format!("move leaves the fiber of degree {d}"))
                        })?;
                        union(&mut parent, k, t, &mut classes);
                    }
                }
            }
        }
        let before = classes;
        for (_, b) in all.iter().filter(|(e, _)| *e == d) {
            union(&mut parent, index[&b.plus], index[&b.minus], &mut classes);
        }
        mu += before - classes;
    }
    Ok(mu)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tuple(n: [u64; 4]) -> GeneratorTuple {
        GeneratorTuple::new(n).unwrap()
    }

    /// Brute-force a_i from the definition.
    fn brute_a(n: [u64; 4], i: usize) -> u32 {
        (1u32..)
            .find(|&k| {
                let d = k as u64 * n[i];
                let others: Vec<u64> = (0..4).filter(|&j| j != i).map(|j| n[j]).collect();
                (0..=d / others[0]).any(|x| {
                    (0..=d / others[1]).any(|y| {
                        let r = d as i64 - (x * others[0] + y * others[1]) as i64;
                        r >= 0 && r as u64 % others[2] == 0
                    })
                })
            })
            .unwrap()
    }

    #[test]
    fn a_values_match_brute_force() {
        for n in [[10, 17, 22, 28], [1199, 2051, 2352, 3032], [30, 34, 42, 51], [49, 63, 65, 78], [5, 6, 7, 9]] {
            let g = tuple(n);
            let a = a_values(&g);
            for i in 0..4 {
                assert_eq!(a[i], brute_a(n, i), "{n:?} index {i}");
            }
        }
        assert_eq!(a_values(&tuple([1199, 2051, 2352, 3032])), [16, 19, 16, 11]);
        assert_eq!(a_values(&tuple([30, 34, 42, 51])), [7, 3, 5, 2]);
    }

    #[test]
    fn indispensability() {
        let g = tuple([1199, 2051, 2352, 3032]);
        assert!(is_indispensable_binomial(&g, &"x1^16 - x3^3*x4^4".parse().unwrap()));
        let h = tuple([30, 34, 42, 51]);
        assert!(!is_indispensable_binomial(&h, &"x2^3 - x4^2".parse().unwrap()));
        assert!(is_indispensable_monomial(&h, &"x4^2".parse().unwrap()));
    }
}
