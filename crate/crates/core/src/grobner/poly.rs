//! Monomials and pure-difference binomials as Gröbner basis elements.
//!
//! Every S-polynomial and every reduction step of such elements is again a
//! monomial, a pure-difference binomial or zero, so the engine never needs
//! coefficients. The overall sign of a binomial is irrelevant for ideal
//! membership and is not tracked.

use std::cmp::Ordering;

use super::order::OrderSpec;
use crate::monomial::{Binomial, ExponentVector};

/// A nonzero element `x^lead` or `x^lead - x^tail` with `lead > tail`.
/// Unlike [`Binomial`] the two terms may share a common factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Poly {
    Monomial(ExponentVector),
    Binomial { lead: ExponentVector, tail: ExponentVector },
}

impl Poly {
    /// `x^a - x^b` oriented by `order`; `None` when the terms cancel.
    #[inline]
    pub fn binomial(a: ExponentVector, b: ExponentVector, order: &OrderSpec) -> Option<Poly> {
        match order.compare(&a, &b) {
            Ordering::Greater => Some(Poly::Binomial { lead: a, tail: b }),
            Ordering::Less => Some(Poly::Binomial { lead: b, tail: a }),
            Ordering::Equal => None,
        }
    }

    pub fn from_binomial(b: &Binomial, order: &OrderSpec) -> Poly {
        Poly::binomial(b.plus, b.minus, order).expect("binomial terms are distinct")
    }

    #[inline]
    pub fn lead(&self) -> ExponentVector {
        match *self {
            Poly::Monomial(m) => m,
            Poly::Binomial { lead, .. } => lead,
        }
    }

    #[inline]
    pub fn tail(&self) -> Option<ExponentVector> {
        match *self {
            Poly::Monomial(_) => None,
            Poly::Binomial { tail, .. } => Some(tail),
        }
    }

    /// Largest total degree among the terms minus the total degree of the
    /// leading term.
    #[inline]
    pub fn ecart(&self) -> u64 {
        match *self {
            Poly::Monomial(_) => 0,
            Poly::Binomial { lead, tail } => {
                tail.total_degree().saturating_sub(lead.total_degree())
            }
        }
    }

    /// The coprime binomial `x^lead - x^tail` after removing the common
    /// factor, or `None` for a monomial.
    pub fn to_binomial(&self) -> Option<Binomial> {
        match *self {
            Poly::Monomial(_) => None,
            Poly::Binomial { lead, tail } => Binomial::new(lead, tail),
        }
    }

    /// Lowest-degree form: the sum of the terms of minimal total degree.
    pub fn lowest_form(&self) -> Poly {
        match *self {
            Poly::Monomial(_) => *self,
            Poly::Binomial { lead, tail } => match lead.total_degree().cmp(&tail.total_degree()) {
                Ordering::Less => Poly::Monomial(lead),
                Ordering::Greater => Poly::Monomial(tail),
                Ordering::Equal => *self,
            },
        }
    }

    /// The same element re-oriented under another order.
    pub fn reoriented(&self, order: &OrderSpec) -> Poly {
        match *self {
            Poly::Monomial(_) => *self,
            Poly::Binomial { lead, tail } => Poly::binomial(lead, tail, order).unwrap(),
        }
    }
}

impl std::fmt::Display for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Poly::Monomial(m) => write!(f, "{m}"),
            Poly::Binomial { lead, tail } => write!(f, "{lead} - {tail}"),
        }
    }
}

/// S-polynomial of `f` and `g`; `None` when it vanishes.
#[inline]
pub fn spoly(f: &Poly, g: &Poly, order: &OrderSpec) -> Option<Poly> {
    let l = f.lead().lcm(&g.lead());
    let shift = |p: &Poly| p.tail().map(|t| l.div_unchecked(&p.lead()).mul(&t));
    match (shift(f), shift(g)) {
        (None, None) => None,
        (Some(a), None) | (None, Some(a)) => Some(Poly::Monomial(a)),
        (Some(a), Some(b)) => Poly::binomial(a, b, order),
    }
}

/// One reduction step `h - (lead h / lead t) t`. Requires `lead t | lead h`.
#[inline]
pub fn reduce_step(h: &Poly, t: &Poly, order: &OrderSpec) -> Option<Poly> {
    debug_assert!(t.lead().divides(&h.lead()));
    let replaced = t.tail().map(|tt| h.lead().div_unchecked(&t.lead()).mul(&tt));
    match (replaced, h.tail()) {
        (None, None) => None,
        (Some(a), None) | (None, Some(a)) => Some(Poly::Monomial(a)),
        (Some(a), Some(b)) => Poly::binomial(a, b, order),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spoly_of_binomials() {
        let o = OrderSpec::lex();
        let f = Poly::binomial(ExponentVector([2, 0, 0, 0]), ExponentVector([0, 1, 0, 0]), &o).unwrap();
        let g = Poly::binomial(ExponentVector([1, 1, 0, 0]), ExponentVector([0, 0, 1, 0]), &o).unwrap();
        // lcm = x1^2 x2: x2 * x2 - x1 * x3
        let s = spoly(&f, &g, &o).unwrap();
        assert_eq!(s.lead(), ExponentVector([1, 0, 1, 0]));
        assert_eq!(s.tail(), Some(ExponentVector([0, 2, 0, 0])));
        assert_eq!(spoly(&f, &f, &o), None);
    }

    #[test]
    fn ecart_and_lowest_form() {
        let o = OrderSpec::neg_degree_lex();
        let f = Poly::binomial(ExponentVector([3, 0, 0, 0]), ExponentVector([0, 1, 0, 0]), &o).unwrap();
        assert_eq!(f.lead(), ExponentVector([0, 1, 0, 0]));
        assert_eq!(f.ecart(), 2);
        assert_eq!(f.lowest_form(), Poly::Monomial(ExponentVector([0, 1, 0, 0])));
    }
}
