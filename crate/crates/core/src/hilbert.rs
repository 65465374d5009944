//! Monomial ideals and Hilbert series.
//!
//! The Hilbert series of `k[x1..x4]/I` is `p(t) / (1 - t)^4`. The numerator
//! is computed by peeling one generator at a time,
//! `p(<J, x^u>) = p(J) - t^|u| p(J : x^u)`, with memoisation. Inclusion and
//! exclusion over the generators gives an independent second route.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::ExponentVector;

/// Inclusion and exclusion is refused above this many generators.
pub const INCLUSION_EXCLUSION_MAX_GENS: usize = 16;

/// Recursion cap for the peeling recursion (number of memoised ideals).
pub const NUMERATOR_MEMO_CAP: usize = 2_000_000;

/// A monomial ideal given by its minimal generators, sorted by total degree
/// and then by exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Minimalises and sorts `gens`.
    pub fn new(mut gens: Vec<ExponentVector>) -> Self {
        gens.sort_by_key(|e| (e.total_degree(), *e));
        gens.dedup();
        let mut minimal: Vec<ExponentVector> = Vec::with_capacity(gens.len());
        for g in gens {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        MonomialIdeal { gens: minimal }
    }

    pub fn zero() -> Self {
        MonomialIdeal { gens: Vec::new() }
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &ExponentVector) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `I : x^u`, generated by `g / gcd(g, x^u)`.
    pub fn colon_by_monomial(&self, u: &ExponentVector) -> MonomialIdeal {
        MonomialIdeal::new(self.gens.iter().map(|g| g.colon(u)).collect())
    }

    /// Numerator `p(t)` of the Hilbert series of `k[x1..x4]/I`.
    pub fn numerator(&self) -> Result<IntPolynomial> {
        let mut memo: HashMap<Vec<ExponentVector>, IntPolynomial> = HashMap::new();
        numerator_rec(&self.gens, &mut memo)
    }

    /// The same numerator by inclusion and exclusion over subsets of the
    /// generators: `p(t) = sum_F (-1)^|F| t^|lcm F|`.
    pub fn numerator_inclusion_exclusion(&self) -> Result<IntPolynomial> {
        let k = self.gens.len();
        if k > INCLUSION_EXCLUSION_MAX_GENS {
            return Err(Error::Budget(format!(
                "inclusion-exclusion over {k} generators (limit {INCLUSION_EXCLUSION_MAX_GENS})"
            )));
        }
        let mut coeffs: Vec<i64> = vec![0; 1];
        // lcm of each subset, built from the subset without its top bit
        let mut lcms = vec![ExponentVector::ONE; 1 << k];
        for mask in 0usize..(1 << k) {
            if mask > 0 {
                let top = usize::BITS - 1 - mask.leading_zeros();
                let rest = mask & !(1 << top);
                lcms[mask] = lcms[rest].lcm(&self.gens[top as usize]);
            }
            let d = lcms[mask].total_degree() as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, 0);
            }
            if mask.count_ones() % 2 == 0 {
                coeffs[d] += 1;
            } else {
                coeffs[d] -= 1;
            }
        }
        Ok(IntPolynomial::new(coeffs))
    }

    /// `HF(0..=horizon)` by counting standard monomials degree by degree.
    pub fn hf_values(&self, horizon: usize) -> Vec<u64> {
        let mut out = Vec::with_capacity(horizon + 1);
        for d in 0..=horizon as u32 {
            let mut count = 0u64;
            for a in 0..=d {
                for b in 0..=d - a {
                    for c in 0..=d - a - b {
                        let m = ExponentVector([a, b, c, d - a - b - c]);
                        if !self.contains(&m) {
                            count += 1;
                        }
                    }
                }
            }
            out.push(count);
        }
        out
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}

fn numerator_rec(
    gens: &[ExponentVector],
    memo: &mut HashMap<Vec<ExponentVector>, IntPolynomial>,
) -> Result<IntPolynomial> {
    if let Some(p) = base_case(gens) {
        return Ok(p);
    }
    if let Some(p) = memo.get(gens) {
        return Ok(p.clone());
    }
    if memo.len() >= NUMERATOR_MEMO_CAP {
        return Err(Error::Budget("Hilbert numerator recursion cap reached".into()));
    }
    let (last, rest) = gens.split_last().unwrap();
    let p_rest = numerator_rec(rest, memo)?;
    let colon = MonomialIdeal::new(rest.iter().map(|g| g.colon(last)).collect());
    let p_colon = numerator_rec(&colon.gens, memo)?;
    let p = p_rest.sub(&p_colon.shift(last.total_degree() as usize));
    memo.insert(gens.to_vec(), p.clone());
    Ok(p)
}

/// Pairwise coprime generators: `p = prod (1 - t^|g|)`.
fn base_case(gens: &[ExponentVector]) -> Option<IntPolynomial> {
    let mut seen = 0u8;
    for g in gens {
        let s = g.support();
        if s & seen != 0 {
            return None;
        }
        seen |= s;
    }
    let mut p = IntPolynomial::one();
    for g in gens {
        p = p.mul(&IntPolynomial::one().sub(&IntPolynomial::one().shift(g.total_degree() as usize)));
    }
    Some(p)
}

/// Polynomial with integer coefficients, `coeffs[i]` at `t^i`, no trailing
/// zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![1] }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| self.coeffs.get(i).copied().unwrap_or(0) - other.coeffs.get(i).copied().unwrap_or(0))
            .collect();
        IntPolynomial::new(c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| self.coeffs.get(i).copied().unwrap_or(0) + other.coeffs.get(i).copied().unwrap_or(0))
            .collect();
        IntPolynomial::new(c)
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![0; k];
        c.extend_from_slice(&self.coeffs);
        IntPolynomial { coeffs: c }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::new(Vec::new());
        }
        let mut c = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPolynomial::new(c)
    }

    /// Exact division by `(1 - t)^k`; `None` if the division leaves a
    /// remainder.
    pub fn div_one_minus_t_pow(&self, k: usize) -> Option<Self> {
        let mut p = self.clone();
        for _ in 0..k {
            if p.eval_at_one() != 0 {
                return None;
            }
            // p = (1 - t) q  =>  q_i = sum_{j <= i} p_j
            let mut acc = 0;
            let mut q: Vec<i64> = p
                .coeffs
                .iter()
                .map(|&c| {
                    acc += c;
                    acc
                })
                .collect();
            q.pop();
            p = IntPolynomial::new(q);
        }
        Some(p)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => f.write_str("t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{i}")?,
                _ => write!(f, "{a}t^{i}")?,
            }
        }
        Ok(())
    }
}

/// `p(t)` with `HS = p(t) / (1 - t)^dim`.
pub fn reduced_numerator(ideal: &MonomialIdeal, dim: usize) -> Result<IntPolynomial> {
    if dim > 4 {
        return Err(Error::Precondition(format!("dimension {dim} exceeds 4")));
    }
    let p = ideal.numerator()?;
    p.div_one_minus_t_pow(4 - dim).ok_or_else(|| {
        Error::Precondition(format!("Hilbert numerator {p} is not divisible by (1 - t)^{}", 4 - dim))
    })
}

/// Whether the Hilbert function of `k[x1..x4]/I` is non-decreasing, for an
/// ideal of Krull dimension one.
///
/// A nonnegative reduced numerator settles the question at once; otherwise
/// the function is compared term by term up to one past the numerator degree
/// (beyond that it is constant).
pub fn is_nondecreasing(ideal: &MonomialIdeal, horizon: usize) -> Result<NondecreasingReport> {
    let h = reduced_numerator(ideal, 1)?;
    let nonnegative = h.coeffs().iter().all(|&c| c >= 0);
    let stop = horizon.max(h.degree().unwrap_or(0) + 1);
    let values = hf_from_numerator(&h, stop);
    let first_drop = values.windows(2).position(|w| w[1] < w[0]).map(|k| k + 1);
    Ok(NondecreasingReport {
        nondecreasing: first_drop.is_none(),
        nonnegative_numerator: nonnegative,
        first_drop,
        values,
    })
}

/// `HF(0..=horizon)` from a reduced numerator of a dimension one ring:
/// `HF(k) = h_0 + ... + h_k`.
pub fn hf_from_numerator(h: &IntPolynomial, horizon: usize) -> Vec<i64> {
    let mut acc = 0i64;
    (0..=horizon)
        .map(|k| {
            acc += h.coeffs().get(k).copied().unwrap_or(0);
            acc
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NondecreasingReport {
    pub nondecreasing: bool,
    pub nonnegative_numerator: bool,
    /// Smallest `k` with `HF(k) < HF(k - 1)`.
    pub first_drop: Option<usize>,
    pub values: Vec<i64>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(s: &[&str]) -> MonomialIdeal {
        MonomialIdeal::new(s.iter().map(|m| m.parse().unwrap()).collect())
    }

    #[test]
    fn minimalisation() {
        let i = mi(&["x1^2", "x1^3*x2", "x2*x3", "x1^2"]);
        assert_eq!(i.len(), 2);
        assert!(i.contains(&"x1^5".parse().unwrap()));
        assert!(!i.contains(&"x1*x2".parse().unwrap()));
    }

    #[test]
    fn numerator_of_simple_ideals() {
        // k[x1..x4]/<x1> has series 1/(1-t)^3
        let p = mi(&["x1"]).numerator().unwrap();
        assert_eq!(p.coeffs(), &[1, -1]);
        let i = mi(&["x1^2", "x1*x2", "x2^3"]);
        assert_eq!(i.numerator().unwrap(), i.numerator_inclusion_exclusion().unwrap());
        assert_eq!(MonomialIdeal::zero().numerator().unwrap(), IntPolynomial::one());
    }

    #[test]
    fn colon() {
        let i = mi(&["x1^2*x2", "x3^2", "x2*x4"]);
        let c = i.colon_by_monomial(&"x1*x2".parse().unwrap());
        assert_eq!(c, mi(&["x1", "x3^2", "x4"]));
    }

    #[test]
    fn hf_counts_agree_with_series() {
        let i = mi(&["x1^2", "x1*x2", "x2^3", "x3*x4^2", "x3^2"]);
        let p = i.numerator().unwrap();
        // expand p / (1 - t)^4 directly
        let n = 12;
        let mut series = vec![0i64; n + 1];
        for (d, &c) in p.coeffs().iter().enumerate() {
            for k in 0..=n {
                if d + k <= n {
                    let binom = ((k + 1) * (k + 2) * (k + 3) / 6) as i64;
                    series[d + k] += c * binom;
                }
            }
        }
        let counted: Vec<i64> = i.hf_values(n).into_iter().map(|v| v as i64).collect();
        assert_eq!(series, counted);
    }

    #[test]
    fn division_by_one_minus_t() {
        let p = IntPolynomial::new(vec![1, -1]).mul(&IntPolynomial::new(vec![1, -1])).mul(&IntPolynomial::new(vec![1, 2, 1]));
        assert_eq!(p.div_one_minus_t_pow(2).unwrap().coeffs(), &[1, 2, 1]);
        assert!(IntPolynomial::new(vec![1, 1]).div_one_minus_t_pow(1).is_none());
        assert_eq!(IntPolynomial::new(vec![1, 3, 0, -1]).to_string(), "1 + 3t - t^3");
    }
}
