//! Numerical semigroups `S = <n1, n2, n3, n4>`.
//!
//! Membership and maximal factorization length are tabulated by dynamic
//! programming up to a limit chosen by the caller. The default limit covers
//! every degree the Cohen-Macaulay oracle can touch.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::ExponentVector;

/// Largest table (number of entries) built unless the caller raises it.
pub const DEFAULT_TABLE_CAP: u64 = 1 << 28;

/// Cap on the number of factorizations enumerated for a single degree.
pub const DEFAULT_FACTORIZATION_CAP: usize = 1_000_000;

/// Four pairwise distinct positive integers with `gcd = 1`, sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorTuple {
    gens: [u64; 4],
    original_order: [usize; 4],
    box_bounds: [u64; 3],
}

impl GeneratorTuple {
    /// Validates and sorts `input`.
    pub fn new(input: [u64; 4]) -> Result<Self> {
        if input.contains(&0) {
            return Err(Error::InvalidInput("generators must be positive".into()));
        }
        let mut idx = [0usize, 1, 2, 3];
        idx.sort_by_key(|&i| input[i]);
        let gens: [u64; 4] = std::array::from_fn(|k| input[idx[k]]);
        if gens.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(format!("duplicate generators in {input:?}")));
        }
        let g = gens.iter().fold(0u64, |acc, &n| acc.gcd(&n));
        if g != 1 {
            return Err(Error::InvalidInput(format!("gcd of {input:?} is {g}, expected 1")));
        }
        let mut original_order = [0usize; 4];
        for (sorted_pos, &input_pos) in idx.iter().enumerate() {
            original_order[input_pos] = sorted_pos;
        }
        let n1 = gens[0];
        let box_bounds = std::array::from_fn(|k| n1 / n1.gcd(&gens[k + 1]));
        Ok(GeneratorTuple { gens, original_order, box_bounds })
    }

    #[inline]
    pub fn gens(&self) -> &[u64; 4] {
        &self.gens
    }

    /// `n_{i+1}` (zero-based index).
    #[inline]
    pub fn n(&self, i: usize) -> u64 {
        self.gens[i]
    }

    /// `original_order[input_position] = sorted_position`.
    pub fn original_order(&self) -> [usize; 4] {
        self.original_order
    }

    /// `b_i = n1 / gcd(n1, n_i)` for `i = 2, 3, 4`. Since `x_i^{b_i}` is
    /// congruent to a power of `x1`, exponents `v_i < b_i` suffice in the
    /// Cohen-Macaulay test.
    pub fn box_bounds(&self) -> [u64; 3] {
        self.box_bounds
    }

    /// Largest S-degree of a monomial in the box, `sum (b_i - 1) n_i`.
    pub fn box_max_degree(&self) -> Result<u64> {
        let mut acc = 0u64;
        for k in 0..3 {
            let t = (self.box_bounds[k] - 1)
                .checked_mul(self.gens[k + 1])
                .ok_or(Error::Overflow("computing the box degree"))?;
            acc = acc.checked_add(t).ok_or(Error::Overflow("computing the box degree"))?;
        }
        Ok(acc)
    }

    /// Default membership table limit: box degree plus `n1`.
    pub fn default_table_limit(&self) -> Result<u64> {
        self.box_max_degree()?
            .checked_add(self.gens[0])
            .ok_or(Error::Overflow("computing the table limit"))
    }
}

/// Membership in `S` and maximal factorization length, for `0..=limit`.
#[derive(Clone, Debug)]
pub struct MembershipTables {
    gens: [u64; 4],
    /// `-1` marks a gap.
    max_len: Vec<i32>,
}

impl MembershipTables {
    /// Tables up to the tuple's default limit.
    pub fn for_tuple(g: &GeneratorTuple) -> Result<Self> {
        Self::build(g, g.default_table_limit()?, DEFAULT_TABLE_CAP)
    }

    pub fn build(g: &GeneratorTuple, limit: u64, cap: u64) -> Result<Self> {
        let requested = limit.saturating_add(1);
        if requested > cap || usize::try_from(requested).is_err() {
            return Err(Error::TableTooLarge { requested, cap });
        }
        let len = requested as usize;
        let gens = *g.gens();
        let mut max_len = vec![-1i32; len];
        max_len[0] = 0;
        let ns: [usize; 4] = gens.map(|n| n as usize);
        for m in 1..len {
            let mut best = -1i32;
            for &n in &ns {
                if n <= m {
                    let prev = max_len[m - n];
                    if prev >= 0 && prev + 1 > best {
                        best = prev + 1;
                    }
                }
            }
            max_len[m] = best;
        }
        Ok(MembershipTables { gens, max_len })
    }

    #[inline]
    pub fn limit(&self) -> u64 {
        self.max_len.len() as u64 - 1
    }

    #[inline]
    pub fn covers(&self, m: u64) -> bool {
        m <= self.limit()
    }

    pub fn ensure_covers(&self, m: u64) -> Result<()> {
        if self.covers(m) {
            Ok(())
        } else {
            Err(Error::TableRange { needed: m, limit: self.limit() })
        }
    }

    /// Membership of `m` in `S`. Panics if `m` exceeds the limit.
    #[inline]
    pub fn in_s(&self, m: u64) -> bool {
        self.max_len[m as usize] >= 0
    }

    /// Longest factorization of `m`, or `None` for a gap. Panics if `m`
    /// exceeds the limit.
    #[inline]
    pub fn max_len(&self, m: u64) -> Option<u32> {
        let v = self.max_len[m as usize];
        (v >= 0).then_some(v as u32)
    }

    pub(crate) fn raw_max_len(&self) -> &[i32] {
        &self.max_len
    }

    /// Apéry set of `S` with respect to `n1`, sorted ascending.
    pub fn apery_set(&self) -> Result<Vec<u64>> {
        let n1 = self.gens[0] as usize;
        let mut found = vec![u64::MAX; n1];
        let mut remaining = n1;
        for (m, &l) in self.max_len.iter().enumerate() {
            if l >= 0 && found[m % n1] == u64::MAX {
                found[m % n1] = m as u64;
                remaining -= 1;
                if remaining == 0 {
                    break;
                }
            }
        }
        if remaining > 0 {
            return Err(Error::TableRange { needed: self.limit() + 1, limit: self.limit() });
        }
        found.sort_unstable();
        Ok(found)
    }

    /// Frobenius number `max(Ap(S, n1)) - n1`; `-1` when `S = N`.
    pub fn frobenius(&self) -> Result<i64> {
        let ap = self.apery_set()?;
        Ok(*ap.last().unwrap() as i64 - self.gens[0] as i64)
    }

    /// `S` is symmetric when `z in S` exactly when `F - z` is not.
    pub fn is_symmetric(&self) -> Result<bool> {
        let f = self.frobenius()?;
        if f < 0 {
            return Ok(true);
        }
        let f = f as u64;
        Ok((0..=f).all(|z| self.in_s(z) != self.in_s(f - z)))
    }

    /// Number of gaps (positive integers outside `S`).
    pub fn gap_count(&self) -> Result<u64> {
        let f = self.frobenius()?;
        if f < 0 {
            return Ok(0);
        }
        Ok((1..=f as u64).filter(|&z| !self.in_s(z)).count() as u64)
    }
}

/// Every `u` with `u . n = m`, in lexicographic order of `(u4, u3, u2)`.
pub fn factorizations(g: &GeneratorTuple, m: u64, cap: usize) -> Result<Vec<ExponentVector>> {
    factorizations_in(g.gens(), m, 0b1111, cap)
}

/// Factorizations of `m` using only the variables in `mask`.
pub(crate) fn factorizations_in(
    gens: &[u64; 4],
    m: u64,
    mask: u8,
    cap: usize,
) -> Result<Vec<ExponentVector>> {
    let mut out = Vec::new();
    let lim = |i: usize, rest: u64| if mask & (1 << i) != 0 { rest / gens[i] } else { 0 };
    for u4 in 0..=lim(3, m) {
        let r4 = m - u4 * gens[3];
        for u3 in 0..=lim(2, r4) {
            let r3 = r4 - u3 * gens[2];
            for u2 in 0..=lim(1, r3) {
                let r2 = r3 - u2 * gens[1];
                let u1 = if mask & 1 != 0 && r2 % gens[0] == 0 {
                    r2 / gens[0]
                } else if r2 == 0 {
                    0
                } else {
                    continue;
                };
                if out.len() == cap {
                    return Err(Error::Budget(format!(
                        "more than {cap} factorizations of {m}"
                    )));
                }
                let conv = |x: u64| {
                    u32::try_from(x).map_err(|_| Error::Overflow("enumerating factorizations"))
                };
                out.push(ExponentVector([conv(u1)?, conv(u2)?, conv(u3)?, conv(u4)?]));
            }
        }
    }
    Ok(out)
}

/// Number of factorizations of `m`, stopping early once `stop` is reached.
pub(crate) fn count_factorizations(gens: &[u64; 4], m: u64, stop: usize) -> usize {
    let mut count = 0;
    for u4 in 0..=m / gens[3] {
        let r4 = m - u4 * gens[3];
        for u3 in 0..=r4 / gens[2] {
            let r3 = r4 - u3 * gens[2];
            for u2 in 0..=r3 / gens[1] {
                if (r3 - u2 * gens[1]) % gens[0] == 0 {
                    count += 1;
                    if count >= stop {
                        return count;
                    }
                }
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force over all exponent vectors; independent of the tables.
    fn brute_max_len(gens: &[u64; 4], m: u64) -> Option<u32> {
        let mut best = None;
        for u4 in 0..=m / gens[3] {
            for u3 in 0..=m / gens[2] {
                for u2 in 0..=m / gens[1] {
                    let d = u2 * gens[1] + u3 * gens[2] + u4 * gens[3];
                    if d <= m && (m - d) % gens[0] == 0 {
                        let l = (u2 + u3 + u4 + (m - d) / gens[0]) as u32;
                        best = Some(best.map_or(l, |b: u32| b.max(l)));
                    }
                }
            }
        }
        best
    }

    #[test]
    fn validation() {
        assert!(GeneratorTuple::new([4, 6, 8, 10]).is_err());
        assert!(GeneratorTuple::new([3, 3, 5, 7]).is_err());
        assert!(GeneratorTuple::new([0, 3, 5, 7]).is_err());
        let g = GeneratorTuple::new([28, 10, 22, 17]).unwrap();
        assert_eq!(g.gens(), &[10, 17, 22, 28]);
        assert_eq!(g.original_order(), [3, 0, 2, 1]);
        assert_eq!(g.box_bounds(), [10, 5, 5]);
    }

    #[test]
    fn tables_match_brute_force() {
        let g = GeneratorTuple::new([10, 17, 22, 28]).unwrap();
        let t = MembershipTables::build(&g, 200, DEFAULT_TABLE_CAP).unwrap();
        for m in 0..=200 {
            assert_eq!(t.max_len(m), brute_max_len(g.gens(), m), "m = {m}");
        }
        assert!(t.in_s(27));
        assert!(!t.in_s(16));
        assert_eq!(t.max_len(50), Some(5));
    }

    #[test]
    fn apery_frobenius_symmetry() {
        let g = GeneratorTuple::new([10, 17, 22, 28]).unwrap();
        let t = MembershipTables::for_tuple(&g).unwrap();
        let ap = t.apery_set().unwrap();
        let brute: Vec<u64> = {
            let mut v: Vec<u64> = (0..10u64)
                .map(|r| (0..).map(|k| r + 10 * k).find(|&m| brute_max_len(g.gens(), m).is_some()).unwrap())
                .collect();
            v.sort();
            v
        };
        assert_eq!(ap, brute);
        assert_eq!(t.frobenius().unwrap(), *brute.last().unwrap() as i64 - 10);
        assert!(t.is_symmetric().unwrap());
        // symmetric exactly when the gap count is (F + 1) / 2
        assert_eq!(2 * t.gap_count().unwrap(), (t.frobenius().unwrap() + 1) as u64);

        let h = GeneratorTuple::new([9, 11, 34, 35]).unwrap();
        let t = MembershipTables::for_tuple(&h).unwrap();
        let f = t.frobenius().unwrap();
        let gaps = t.gap_count().unwrap();
        assert_eq!(t.is_symmetric().unwrap(), 2 * gaps == (f + 1) as u64);
    }

    #[test]
    fn small_semigroup() {
        let g = GeneratorTuple::new([2, 3, 5, 7]).unwrap();
        let t = MembershipTables::for_tuple(&g).unwrap();
        assert_eq!(t.frobenius().unwrap(), 1);
        assert!(t.is_symmetric().unwrap());
    }

    #[test]
    fn table_cap_is_enforced() {
        let g = GeneratorTuple::new([10, 17, 22, 28]).unwrap();
        assert!(matches!(
            MembershipTables::build(&g, 1000, 100),
            Err(Error::TableTooLarge { .. })
        ));
    }

    #[test]
    fn factorization_enumeration() {
        let g = GeneratorTuple::new([10, 17, 22, 28]).unwrap();
        let f = factorizations(&g, 68, 100).unwrap();
        assert_eq!(f, vec![ExponentVector([0, 4, 0, 0]), ExponentVector([4, 0, 0, 1])]);
        assert_eq!(count_factorizations(g.gens(), 68, 10), 2);
        for u in &f {
            assert_eq!(u.weighted_degree(g.gens()), 68);
        }
        assert!(factorizations(&g, 16, 10).unwrap().is_empty());
        assert!(matches!(factorizations(&g, 680, 3), Err(Error::Budget(_))));
        let only_34 = factorizations_in(g.gens(), 50, 0b1100, 10).unwrap();
        assert_eq!(only_34, vec![ExponentVector([0, 0, 1, 1])]);
    }
}
