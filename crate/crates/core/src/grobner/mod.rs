//! Gröbner and standard bases of binomial ideals.
//!
//! Global orders use Buchberger's algorithm with the product and chain
//! criteria and return the reduced basis. Local orders use Mora's normal
//! form with écart and return a minimal standard basis.

pub mod order;
pub mod poly;

use std::collections::HashSet;

pub use order::OrderSpec;
pub use poly::Poly;

use crate::error::{Error, Result};
use crate::hilbert::MonomialIdeal;
use crate::monomial::{Binomial, ExponentVector};
use poly::{reduce_step, spoly};

/// Default cap on reduction steps plus processed pairs.
pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

/// A Gröbner basis (global order) or standard basis (local order).
#[derive(Clone, Debug)]
pub struct StandardBasis {
    pub order: OrderSpec,
    pub elements: Vec<Poly>,
}

struct Steps {
    used: u64,
    budget: u64,
}

impl Steps {
    fn new(budget: u64) -> Self {
        Steps { used: 0, budget }
    }

    #[inline]
    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.budget {
            Err(Error::Budget(format!("standard basis exceeded {} steps", self.budget)))
        } else {
            Ok(())
        }
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` under a global
/// order.
pub fn buchberger(gens: &[Poly], order: OrderSpec, budget: u64) -> Result<StandardBasis> {
    if order.is_local() {
        return Err(Error::Precondition("Buchberger's algorithm needs a global order".into()));
    }
    let mut steps = Steps::new(budget);
    let mut basis: Vec<Poly> = Vec::new();
    let mut pending: Vec<(usize, usize)> = Vec::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();

    let add = |h: Poly,
               basis: &mut Vec<Poly>,
               pending: &mut Vec<(usize, usize)>,
               pending_set: &mut HashSet<(usize, usize)>| {
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            if !g.lead().is_coprime(&h.lead()) {
                pending.push((i, k));
                pending_set.insert((i, k));
            }
        }
        basis.push(h);
    };

    for p in gens {
        if let Some(h) = top_reduce(p.reoriented(&order), &basis, &order, &mut steps)? {
            add(h, &mut basis, &mut pending, &mut pending_set);
        }
    }

    while !pending.is_empty() {
        steps.tick()?;
        // normal strategy: smallest lcm first
        let mut best = 0;
        let mut best_lcm = lcm_of(&basis, pending[0]);
        for (idx, &pr) in pending.iter().enumerate().skip(1) {
            let l = lcm_of(&basis, pr);
            if order.compare(&l, &best_lcm) == std::cmp::Ordering::Less {
                best = idx;
                best_lcm = l;
            }
        }
        let (i, j) = pending.swap_remove(best);
        pending_set.remove(&(i, j));
        if chain_criterion(&basis, i, j, &best_lcm, &pending_set) {
            continue;
        }
        let Some(s) = spoly(&basis[i], &basis[j], &order) else { continue };
        if let Some(h) = top_reduce(s, &basis, &order, &mut steps)? {
            add(h, &mut basis, &mut pending, &mut pending_set);
        }
    }

    let elements = reduce_basis(basis, &order, &mut steps)?;
    Ok(StandardBasis { order, elements })
}

fn lcm_of(basis: &[Poly], (i, j): (usize, usize)) -> ExponentVector {
    basis[i].lead().lcm(&basis[j].lead())
}

fn chain_criterion(
    basis: &[Poly],
    i: usize,
    j: usize,
    l: &ExponentVector,
    pending: &HashSet<(usize, usize)>,
) -> bool {
    let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
    basis.iter().enumerate().any(|(k, g)| {
        k != i
            && k != j
            && g.lead().divides(l)
            && !pending.contains(&key(i, k))
            && !pending.contains(&key(j, k))
    })
}

fn find_divisor<'a>(basis: &'a [Poly], m: &ExponentVector) -> Option<&'a Poly> {
    basis.iter().find(|g| g.lead().divides(m))
}

/// Reduces the leading term until it is not divisible by any leading term.
fn top_reduce(
    mut h: Poly,
    basis: &[Poly],
    order: &OrderSpec,
    steps: &mut Steps,
) -> Result<Option<Poly>> {
    loop {
        let Some(g) = find_divisor(basis, &h.lead()) else { return Ok(Some(h)) };
        steps.tick()?;
        match reduce_step(&h, g, order) {
            Some(r) => h = r,
            None => return Ok(None),
        }
    }
}

/// Normal form of a monomial; `None` when it lies in the monomial part.
fn nf_monomial(
    mut m: ExponentVector,
    basis: &[Poly],
    steps: &mut Steps,
) -> Result<Option<ExponentVector>> {
    loop {
        let Some(g) = find_divisor(basis, &m) else { return Ok(Some(m)) };
        steps.tick()?;
        match g.tail() {
            Some(t) => m = m.div_unchecked(&g.lead()).mul(&t),
            None => return Ok(None),
        }
    }
}

/// Drops elements with redundant leading terms and reduces tails.
fn reduce_basis(basis: Vec<Poly>, order: &OrderSpec, steps: &mut Steps) -> Result<Vec<Poly>> {
    let mut sorted = basis;
    sorted.sort_by(|a, b| order.compare(&a.lead(), &b.lead()));
    let mut minimal: Vec<Poly> = Vec::new();
    for p in sorted {
        if !minimal.iter().any(|q| q.lead().divides(&p.lead())) {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for p in &minimal {
        let r = match p.tail() {
            None => *p,
            Some(t) => match nf_monomial(t, &minimal, steps)? {
                Some(t2) => Poly::Binomial { lead: p.lead(), tail: t2 },
                None => Poly::Monomial(p.lead()),
            },
        };
        out.push(r);
    }
    Ok(out)
}

impl StandardBasis {
    /// Full normal form modulo a Gröbner basis for a global order.
    pub fn normal_form(&self, p: &Poly) -> Result<Option<Poly>> {
        if self.order.is_local() {
            return mora_normal_form(p, &self.elements, self.order, DEFAULT_STEP_BUDGET);
        }
        let mut steps = Steps::new(DEFAULT_STEP_BUDGET);
        let a = nf_monomial(p.lead(), &self.elements, &mut steps)?;
        let b = match p.tail() {
            Some(t) => nf_monomial(t, &self.elements, &mut steps)?,
            None => None,
        };
        Ok(match (a, b) {
            (None, None) => None,
            (Some(x), None) | (None, Some(x)) => Some(Poly::Monomial(x)),
            (Some(x), Some(y)) => Poly::binomial(x, y, &self.order),
        })
    }

    pub fn contains_binomial(&self, b: &Binomial) -> Result<bool> {
        Ok(self.normal_form(&Poly::from_binomial(b, &self.order))?.is_none())
    }

    pub fn leading_monomials(&self) -> Vec<ExponentVector> {
        self.elements.iter().map(Poly::lead).collect()
    }
}

/// Mora's weak normal form of `h` with respect to `basis` (any order).
pub fn mora_normal_form(
    h: &Poly,
    basis: &[Poly],
    order: OrderSpec,
    budget: u64,
) -> Result<Option<Poly>> {
    let mut steps = Steps::new(budget);
    mora_nf(*h, basis, &order, &mut steps)
}

fn mora_nf(
    mut h: Poly,
    basis: &[Poly],
    order: &OrderSpec,
    steps: &mut Steps,
) -> Result<Option<Poly>> {
    let mut extra: Vec<Poly> = Vec::new();
    loop {
        let lm = h.lead();
        let mut best: Option<Poly> = None;
        for t in basis.iter().chain(extra.iter()) {
            if t.lead().divides(&lm) && best.is_none_or(|b| t.ecart() < b.ecart()) {
                best = Some(*t);
                if t.ecart() == 0 {
                    break;
                }
            }
        }
        let Some(t) = best else { return Ok(Some(h)) };
        steps.tick()?;
        if t.ecart() > h.ecart() {
            extra.push(h);
        }
        match reduce_step(&h, &t, order) {
            Some(r) => h = r,
            None => return Ok(None),
        }
    }
}

/// Minimal standard basis under any order, using Mora's normal form.
pub fn mora_standard_basis(gens: &[Poly], order: OrderSpec, budget: u64) -> Result<StandardBasis> {
    let mut steps = Steps::new(budget);
    let mut basis: Vec<Poly> = gens.iter().map(|p| p.reoriented(&order)).collect();
    let mut pending: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.push((i, j));
        }
    }
    while !pending.is_empty() {
        steps.tick()?;
        let mut best = 0;
        let mut best_key = pair_key(&basis, pending[0]);
        for (idx, &pr) in pending.iter().enumerate().skip(1) {
            let key = pair_key(&basis, pr);
            if key < best_key {
                best = idx;
                best_key = key;
            }
        }
        let (i, j) = pending.swap_remove(best);
        let Some(s) = spoly(&basis[i], &basis[j], &order) else { continue };
        if let Some(h) = mora_nf(s, &basis, &order, &mut steps)? {
            let k = basis.len();
            pending.extend((0..k).map(|i| (i, k)));
            basis.push(h);
        }
    }
    let mut sorted = basis;
    sorted.sort_by(|a, b| order.compare(&b.lead(), &a.lead()));
    let mut minimal: Vec<Poly> = Vec::new();
    for p in sorted {
        if !minimal.iter().any(|q| q.lead().divides(&p.lead())) {
            minimal.push(p);
        }
    }
    Ok(StandardBasis { order, elements: minimal })
}

fn pair_key(basis: &[Poly], (i, j): (usize, usize)) -> (u64, usize, usize) {
    (basis[i].lead().lcm(&basis[j].lead()).total_degree(), j, i)
}

/// Whether `gens` is a standard basis under the local lexicographic order
/// for `perm`: every S-polynomial has Mora normal form zero.
pub fn verify_prop_lexinf(gens: &[Binomial], perm: [usize; 4]) -> Result<bool> {
    let order = OrderSpec::lex_inf(perm);
    let polys: Vec<Poly> = gens.iter().map(|b| Poly::from_binomial(b, &order)).collect();
    let mut steps = Steps::new(DEFAULT_STEP_BUDGET);
    for j in 0..polys.len() {
        for i in 0..j {
            if let Some(s) = spoly(&polys[i], &polys[j], &order) {
                if mora_nf(s, &polys, &order, &mut steps)?.is_some() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Lowest-degree forms of the elements of a standard basis under a
/// degree-compatible local order; they generate the tangent cone ideal.
pub fn lowest_forms_ideal(sb: &StandardBasis) -> Result<Vec<Poly>> {
    if !matches!(sb.order, OrderSpec::NegDegreeLex { .. }) {
        return Err(Error::Precondition(
            "lowest forms need a standard basis under a negative degree order".into(),
        ));
    }
    Ok(sb.elements.iter().map(Poly::lowest_form).collect())
}

/// Monomial ideal generated by the leading monomials.
pub fn leading_term_ideal(sb: &StandardBasis) -> MonomialIdeal {
    MonomialIdeal::new(sb.leading_monomials())
}

/// Tangent cone data for the ideal generated by `gens`.
#[derive(Clone, Debug)]
pub struct TangentCone {
    /// Standard basis under the negative degree order.
    pub standard_basis: StandardBasis,
    /// Reduced Gröbner basis of the lowest forms under the matching graded
    /// order.
    pub forms_basis: StandardBasis,
    /// Leading ideal of the tangent cone ideal.
    pub leading_ideal: MonomialIdeal,
}

impl TangentCone {
    /// Whether the tangent cone ideal is generated by monomials.
    pub fn is_monomial(&self) -> bool {
        self.forms_basis.elements.iter().all(|p| matches!(p, Poly::Monomial(_)))
    }
}

pub fn tangent_cone(gens: &[Binomial], budget: u64) -> Result<TangentCone> {
    let local = OrderSpec::neg_degree_lex();
    let polys: Vec<Poly> = gens.iter().map(|b| Poly::from_binomial(b, &local)).collect();
    let sb = mora_standard_basis(&polys, local, budget)?;
    let forms = lowest_forms_ideal(&sb)?;
    let graded = OrderSpec::GradedLex { perm: order::IDENTITY };
    let forms_basis = buchberger(&forms, graded, budget)?;
    let leading_ideal = leading_term_ideal(&forms_basis);
    let direct = leading_term_ideal(&sb);
    if direct != leading_ideal {
        return Err(Error::Invariant(format!(
            "leading ideal of the standard basis {direct} differs from that of the lowest forms {leading_ideal}"
        )));
    }
    Ok(TangentCone { standard_basis: sb, forms_basis, leading_ideal })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> Binomial {
        s.parse().unwrap()
    }

    fn polys(bs: &[&str], o: &OrderSpec) -> Vec<Poly> {
        bs.iter().map(|s| Poly::from_binomial(&b(s), o)).collect()
    }

    #[test]
    fn twisted_cubic_grevlex() {
        // <t^3, t^2 s, t s^2, s^3> in three variables (x4 unused)
        let o = OrderSpec::grevlex();
        let g = polys(&["x1*x3 - x2^2", "x2*x3 - x1*x4", "x1*x2 - x3*x4"], &o);
        let gb = buchberger(&g, o, 10_000).unwrap();
        for p in &g {
            assert!(gb.normal_form(p).unwrap().is_none());
        }
        // every S-pair of the output reduces to zero
        for i in 0..gb.elements.len() {
            for j in 0..i {
                if let Some(s) = spoly(&gb.elements[i], &gb.elements[j], &o) {
                    assert!(gb.normal_form(&s).unwrap().is_none());
                }
            }
        }
    }

    #[test]
    fn reduced_basis_is_order_canonical() {
        let o = OrderSpec::lex();
        let g1 = polys(&["x1^2 - x2", "x2^2 - x3"], &o);
        let g2 = polys(&["x1^2 - x2", "x1^4 - x3", "x2^2 - x3"], &o);
        let a = buchberger(&g1, o, 10_000).unwrap();
        let b2 = buchberger(&g2, o, 10_000).unwrap();
        let mut ea = a.elements.clone();
        let mut eb = b2.elements.clone();
        ea.sort_by_key(|p| (p.lead(), p.tail()));
        eb.sort_by_key(|p| (p.lead(), p.tail()));
        assert_eq!(ea, eb);
    }

    #[test]
    fn budget_is_enforced() {
        let o = OrderSpec::grevlex();
        let g = polys(&["x1^5 - x2^3", "x1^3*x2 - x3^2", "x1^2*x3 - x4^3"], &o);
        assert!(matches!(buchberger(&g, o, 3), Err(Error::Budget(_))));
    }

    #[test]
    fn mora_tangent_cone_of_plane_cusp() {
        // y^2 - x^3 has tangent cone y^2
        let gens = [b("x2^2 - x1^3")];
        let tc = tangent_cone(&gens, 1000).unwrap();
        assert_eq!(tc.leading_ideal.generators(), &[ExponentVector([0, 2, 0, 0])]);
    }

    #[test]
    fn mora_normal_form_local() {
        let o = OrderSpec::neg_degree_lex();
        // in the local ring x1 - x1^2 = x1 (1 - x1) is associated to x1
        let basis = vec![Poly::binomial(ExponentVector([1, 0, 0, 0]), ExponentVector([2, 0, 0, 0]), &o).unwrap()];
        let h = Poly::Monomial(ExponentVector([3, 0, 0, 0]));
        assert_eq!(mora_normal_form(&h, &basis, o, 100).unwrap(), None);
    }
}
