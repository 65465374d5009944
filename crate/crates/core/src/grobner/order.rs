//! Monomial orders on `k[x1..x4]`, global and local.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::monomial::ExponentVector;

/// A monomial order. Each permutation lists variables (zero-based) from the
/// most significant to the least significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OrderSpec {
    /// Lexicographic, `x_{perm[0]} > x_{perm[1]} > ...`.
    Lex { perm: [usize; 4] },
    /// Reverse of `Lex`: `x^u > x^v` iff `x^u <_lex x^v`. Local (`1 > x_i`).
    LexInf { perm: [usize; 4] },
    /// Lower total degree first, ties broken by `Lex`. Local.
    NegDegreeLex { perm: [usize; 4] },
    /// Total degree first, ties broken by `Lex`.
    GradedLex { perm: [usize; 4] },
    /// Graded reverse lexicographic; `perm[3]` is the smallest variable.
    GradedRevlex { perm: [usize; 4] },
    /// Weight `w . u` first, ties broken reverse lexicographically with
    /// `perm[3]` smallest.
    WeightedRevlex { weights: [u64; 4], perm: [usize; 4] },
}

pub const IDENTITY: [usize; 4] = [0, 1, 2, 3];

impl OrderSpec {
    pub fn lex() -> Self {
        OrderSpec::Lex { perm: IDENTITY }
    }

    pub fn lex_inf(perm: [usize; 4]) -> Self {
        OrderSpec::LexInf { perm }
    }

    pub fn neg_degree_lex() -> Self {
        OrderSpec::NegDegreeLex { perm: IDENTITY }
    }

    pub fn grevlex() -> Self {
        OrderSpec::GradedRevlex { perm: IDENTITY }
    }

    /// Weighted reverse lexicographic order with `x_last` the smallest
    /// variable, as used when saturating by `x_last`.
    pub fn weighted_revlex_last(weights: [u64; 4], last: usize) -> Self {
        let mut perm = [0usize; 4];
        let mut k = 0;
        for i in 0..4 {
            if i != last {
                perm[k] = i;
                k += 1;
            }
        }
        perm[3] = last;
        OrderSpec::WeightedRevlex { weights, perm }
    }

    /// Local orders have `1 > x_i` for every variable.
    pub fn is_local(&self) -> bool {
        matches!(self, OrderSpec::LexInf { .. } | OrderSpec::NegDegreeLex { .. })
    }

    /// `Greater` means `u > v`.
    #[inline]
    pub fn compare(&self, u: &ExponentVector, v: &ExponentVector) -> Ordering {
        match self {
            OrderSpec::Lex { perm } => lex(perm, u, v),
            OrderSpec::LexInf { perm } => lex(perm, v, u),
            OrderSpec::NegDegreeLex { perm } => v
                .total_degree()
                .cmp(&u.total_degree())
                .then_with(|| lex(perm, u, v)),
            OrderSpec::GradedLex { perm } => u
                .total_degree()
                .cmp(&v.total_degree())
                .then_with(|| lex(perm, u, v)),
            OrderSpec::GradedRevlex { perm } => u
                .total_degree()
                .cmp(&v.total_degree())
                .then_with(|| revlex(perm, u, v)),
            OrderSpec::WeightedRevlex { weights, perm } => u
                .weighted_degree(weights)
                .cmp(&v.weighted_degree(weights))
                .then_with(|| revlex(perm, u, v)),
        }
    }
}

#[inline]
fn lex(perm: &[usize; 4], u: &ExponentVector, v: &ExponentVector) -> Ordering {
    for &i in perm {
        match u.0[i].cmp(&v.0[i]) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

#[inline]
fn revlex(perm: &[usize; 4], u: &ExponentVector, v: &ExponentVector) -> Ordering {
    for &i in perm.iter().rev() {
        match u.0[i].cmp(&v.0[i]) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}
