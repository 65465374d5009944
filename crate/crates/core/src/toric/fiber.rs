//! Minimal generators of `I(C)` from the fibers of the degree map.
//!
//! The fiber of `s` is the set of monomials of S-degree `s`. Two monomials
//! are adjacent when they share a variable; if the fiber graph of `s` has
//! `k(s)` connected components, minimal generating sets have exactly
//! `k(s) - 1` binomials of degree `s`.
//!
//! Components only depend on which supports occur in the fiber: monomials
//! with the same support are adjacent, and two supports are adjacent when
//! they intersect. A monomial with support exactly `T` exists in degree `s`
//! iff `s - sum_{i in T} n_i` lies in `<n_i : i in T>`, so fifteen subset
//! membership tables give `k(s)` for every `s` up to the bound. Only the
//! degrees with `k(s) >= 2` are enumerated explicitly.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Binomial, ExponentVector};
use crate::semigroup::{factorizations_in, GeneratorTuple, DEFAULT_FACTORIZATION_CAP, DEFAULT_TABLE_CAP};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberGenerators {
    pub generators: Vec<Binomial>,
    /// S-degree of each generator.
    pub degrees: Vec<u64>,
    /// Degrees with more than one fiber component, ascending.
    pub betti_degrees: Vec<u64>,
    pub degree_bound: u64,
}

/// Number of connected components for each set of present supports. Bit
/// `T - 1` of the index is set when support `T` (a nonempty subset of the
/// four variables) occurs.
fn component_counts() -> &'static [u8] {
    static TABLE: OnceLock<Vec<u8>> = OnceLock::new();
    TABLE.get_or_init(|| (0u32..1 << 15).map(|present| support_groups(present as u16).len() as u8).collect())
}

/// Unions of intersecting supports: each entry is the variable set covered
/// by one component.
fn support_groups(present: u16) -> Vec<u8> {
    let mut groups: Vec<u8> = Vec::new();
    for t in 1u8..16 {
        if present & (1 << (t - 1)) == 0 {
            continue;
        }
        let mut merged = t;
        groups.retain(|&g| {
            if g & merged != 0 {
                merged |= g;
                false
            } else {
                true
            }
        });
        // a merge can make earlier groups intersect the union
        loop {
            let before = groups.len();
            groups.retain(|&g| {
                if g & merged != 0 {
                    merged |= g;
                    false
                } else {
                    true
                }
            });
            if groups.len() == before {
                break;
            }
        }
        groups.push(merged);
    }
    groups
}

/// Minimal generators with S-degree at most `degree_bound`.
///
/// `a` are the least exponents with `a_i n_i` in the semigroup of the other
/// generators; they select preferred representatives (the pure powers
/// `x_i^{a_i}`) so that the generators in critical degrees are critical
/// binomials.
pub fn minimal_generators_fiber(
    g: &GeneratorTuple,
    a: &[u32; 4],
    degree_bound: u64,
) -> Result<FiberGenerators> {
    let requested = (degree_bound + 1).saturating_mul(15);
    if requested > DEFAULT_TABLE_CAP {
        return Err(Error::TableTooLarge { requested, cap: DEFAULT_TABLE_CAP });
    }
    let gens = *g.gens();
    let len = degree_bound as usize + 1;
    // sg[T][s]: s in <n_i : i in T>
    let mut present: Vec<Vec<bool>> = vec![Vec::new(); 16];
    for t in 1usize..16 {
        let members: Vec<usize> = (0..4).filter(|&i| t & (1 << i) != 0).map(|i| gens[i] as usize).collect();
        let mut sg = vec![false; len];
        sg[0] = true;
        for s in 1..len {
            sg[s] = members.iter().any(|&n| n <= s && sg[s - n]);
        }
        let shift: usize = members.iter().sum();
        let mut p = vec![false; len];
        if shift < len {
            p[shift..].copy_from_slice(&sg[..len - shift]);
        }
        present[t] = p;
    }
    let counts = component_counts();
    let mut generators = Vec::new();
    let mut degrees = Vec::new();
    let mut betti_degrees = Vec::new();
    for s in 1..len {
        let mut bits = 0u16;
        for t in 1usize..16 {
            if present[t][s] {
                bits |= 1 << (t - 1);
            }
        }
        if counts[bits as usize] < 2 {
            continue;
        }
        let groups = support_groups(bits);
        let fiber = factorizations_in(&gens, s as u64, 0b1111, DEFAULT_FACTORIZATION_CAP)?;
        let reps = representatives(&fiber, &groups, a);
        betti_degrees.push(s as u64);
        let center = center_index(&reps, a);
        for (k, rep) in reps.iter().enumerate() {
            if k == center {
                continue;
            }
            let b = Binomial::new(reps[center], *rep)
                .ok_or_else(|| Error::Invariant(format!("equal representatives in degree {s}")))?;
            generators.push(b);
            degrees.push(s as u64);
        }
    }
    Ok(FiberGenerators { generators, degrees, betti_degrees, degree_bound })
}

fn is_critical_power(m: &ExponentVector, a: &[u32; 4]) -> Option<usize> {
    let s = m.support();
    if s.count_ones() != 1 {
        return None;
    }
    let i = s.trailing_zeros() as usize;
    (m.0[i] == a[i]).then_some(i)
}

/// One representative per component: a critical pure power if there is
/// one, otherwise a monomial of largest support, then smallest total degree,
/// then largest exponent vector.
fn representatives(fiber: &[ExponentVector], groups: &[u8], a: &[u32; 4]) -> Vec<ExponentVector> {
    let key = |m: &ExponentVector| {
        (
            is_critical_power(m, a).is_some(),
            m.support().count_ones(),
            std::cmp::Reverse(m.total_degree()),
            *m,
        )
    };
    let mut reps: Vec<ExponentVector> = groups
        .iter()
        .map(|&grp| {
            *fiber
                .iter()
                .filter(|m| m.support() & grp != 0)
                .max_by_key(|m| key(m))
                .expect("every support group has a monomial")
        })
        .collect();
    reps.sort_by_key(|m| std::cmp::Reverse(key(m)));
    reps
}

/// The star center: the critical pure power of the smallest variable, or the
/// first representative.
fn center_index(reps: &[ExponentVector], a: &[u32; 4]) -> usize {
    reps.iter()
        .enumerate()
        .filter_map(|(k, m)| is_critical_power(m, a).map(|i| (i, k)))
        .min()
        .map_or(0, |(_, k)| k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn support_components() {
        // supports {x1}, {x2}: two components
        assert_eq!(support_groups(0b11).len(), 2);
        // {x1}, {x2}, {x1,x2}: one component
        assert_eq!(support_groups(0b111).len(), 1);
        // {x1}, {x4}, {x2,x3}
        let bits = (1 << 0) | (1 << 7) | (1 << 5);
        assert_eq!(support_groups(bits).len(), 3);
        // {x1,x2}, {x3,x4}, {x2,x3} chain into one
        let bits = (1 << 2) | (1 << 11) | (1 << 5);
        assert_eq!(support_groups(bits).len(), 1);
        assert_eq!(component_counts()[bits as usize], 1);
    }
}
