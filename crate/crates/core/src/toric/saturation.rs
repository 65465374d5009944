//! `I(C)` as the saturation of a lattice basis ideal.
//!
//! `I(C) = I_B : (x1 x2 x3 x4)^inf` where `I_B` is generated by the
//! binomials of a lattice basis. Saturating by one variable: compute the
//! reduced Gröbner basis under an S-graded reverse lexicographic order in
//! which that variable is smallest, then divide every element by the
//! largest power of the variable dividing it.

use crate::error::{Error, Result};
use crate::grobner::{buchberger, OrderSpec, Poly, StandardBasis};
use crate::monomial::{Binomial, ExponentVector};
use crate::semigroup::GeneratorTuple;

use super::lattice::kernel_basis;

#[derive(Clone, Debug)]
pub struct SaturationResult {
    /// Coprime binomials generating `I(C)`.
    pub generators: Vec<Binomial>,
    /// Reduced Gröbner basis of `I(C)` under the order of the last step.
    pub groebner: StandardBasis,
}

/// The binomial `x^{v+} - x^{v-}` of a lattice vector.
pub fn lattice_binomial(v: &[i64; 4]) -> Result<Binomial> {
    let conv = |x: i64| u32::try_from(x).map_err(|_| Error::Overflow("building lattice binomials"));
    let mut plus = [0u32; 4];
    let mut minus = [0u32; 4];
    for i in 0..4 {
        if v[i] > 0 {
            plus[i] = conv(v[i])?;
        } else {
            minus[i] = conv(-v[i])?;
        }
    }
    Binomial::from_arrays(plus, minus).ok_or_else(|| Error::Invariant("zero lattice vector".into()))
}

pub fn toric_generators_saturation(g: &GeneratorTuple, budget: u64) -> Result<SaturationResult> {
    let gens = *g.gens();
    let basis = kernel_basis(&gens)?;
    let mut current: Vec<Poly> = Vec::new();
    let first = OrderSpec::weighted_revlex_last(gens, 0);
    for v in &basis {
        current.push(Poly::from_binomial(&lattice_binomial(v)?, &first));
    }
    let mut last_gb = None;
    for var in 0..4 {
        let order = OrderSpec::weighted_revlex_last(gens, var);
        let gb = buchberger(&current, order, budget)?;
        let divided: Vec<Poly> = gb
            .elements
            .iter()
            .map(|p| divide_out(p, var, &order))
            .collect::<Result<_>>()?;
        current = divided.clone();
        last_gb = Some(StandardBasis { order, elements: divided });
    }
    let groebner = last_gb.expect("four saturation steps");
    let mut generators: Vec<Binomial> = groebner
        .elements
        .iter()
        .map(|p| p.to_binomial().ok_or_else(|| Error::Invariant("monomial in a toric ideal".into())))
        .collect::<Result<_>>()?;
    generators.sort();
    generators.dedup();
    Ok(SaturationResult { generators, groebner })
}

fn divide_out(p: &Poly, var: usize, order: &OrderSpec) -> Result<Poly> {
    match *p {
        Poly::Monomial(_) => Err(Error::Invariant("monomial in a lattice ideal".into())),
        Poly::Binomial { lead, tail } => {
            let k = lead.0[var].min(tail.0[var]);
            let d = ExponentVector::pure_power(var, k);
            Poly::binomial(lead.div_unchecked(&d), tail.div_unchecked(&d), order)
                .ok_or_else(|| Error::Invariant("saturation produced zero".into()))
        }
    }
}

/// Whether two binomial sets generate the same ideal, by reducing each set
/// modulo a Gröbner basis of the other.
pub fn ideals_coincide(g: &GeneratorTuple, a: &[Binomial], b: &[Binomial], budget: u64) -> Result<bool> {
    let order = OrderSpec::WeightedRevlex { weights: *g.gens(), perm: crate::grobner::order::IDENTITY };
    let to_polys = |v: &[Binomial]| v.iter().map(|x| Poly::from_binomial(x, &order)).collect::<Vec<_>>();
    let ga = buchberger(&to_polys(a), order, budget)?;
    for x in b {
        if !ga.contains_binomial(x)? {
            return Ok(false);
        }
    }
    let gb = buchberger(&to_polys(b), order, budget)?;
    for x in a {
        if !gb.contains_binomial(x)? {
            return Ok(false);
        }
    }
    Ok(true)
}
