use std::cmp::Ordering;

use num_traits::Zero;

use super::{Coeff, Monomial, MonomialOrder, Polynomial};
use crate::{Error, Result};

/// Outcome of the multivariate division algorithm:
/// `f = Σ quotients[i]·divisors[i] + remainder`, and no monomial of the
/// remainder is divisible by any divisor's leading monomial.
#[derive(Clone, Debug)]
pub struct DivisionResult {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Term list sorted descending under a fixed order.
struct Work<'a> {
    order: &'a MonomialOrder,
    terms: Vec<(Monomial, Coeff)>,
}

impl<'a> Work<'a> {
    fn from_poly(p: &Polynomial, order: &'a MonomialOrder) -> Self {
        let mut terms: Vec<(Monomial, Coeff)> = p.terms().to_vec();
        terms.sort_by(|a, b| order.cmp_monomials(&b.0, &a.0));
        Work { order, terms }
    }

    /// `self -= c·m·other` where `other` is sorted under the same order.
    fn sub_scaled(&mut self, m: &Monomial, c: &Coeff, other: &[(Monomial, Coeff)]) {
        let mut out = Vec::with_capacity(self.terms.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.len() {
            let om = other[j].0.mul(m);
            match self.order.cmp_monomials(&self.terms[i].0, &om) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((om, -(&other[j].1 * c)));
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = &self.terms[i].1 - &(&other[j].1 * c);
                    if !coeff.is_zero() {
                        out.push((om, coeff));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        for (mm, cc) in &other[j..] {
            out.push((mm.mul(m), -(cc * c)));
        }
        self.terms = out;
    }
}

/// Multivariate division of `f` by `divisors` under `order`.
pub fn divide(f: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Result<DivisionResult> {
    let ring = f.ring();
    if order.nvars() != ring.num_vars() {
        return Err(Error::Dimension(format!(
            "order on {} variables in a ring with {}",
            order.nvars(),
            ring.num_vars()
        )));
    }
    for d in divisors {
        if !f.same_ring(d) {
            return Err(Error::RingMismatch("division across rings".into()));
        }
        if d.is_zero() {
            return Err(Error::InvalidInput("zero divisor in division".into()));
        }
    }

    let sorted: Vec<Vec<(Monomial, Coeff)>> = divisors
        .iter()
        .map(|d| {
            let mut t = d.terms().to_vec();
            t.sort_by(|a, b| order.cmp_monomials(&b.0, &a.0));
            t
        })
        .collect();
    let leads: Vec<(&Monomial, &Coeff)> =
        sorted.iter().map(|t| (&t[0].0, &t[0].1)).collect();

    let mut p = Work::from_poly(f, order);
    let mut quot: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); divisors.len()];
    let mut rem: Vec<(Monomial, Coeff)> = Vec::new();

    'outer: while let Some((lm, lc)) = p.terms.first().cloned() {
        for (i, (dm, dc)) in leads.iter().enumerate() {
            if dm.divides(&lm) {
                let m = dm.divide_into(&lm).unwrap();
                let c = &lc / *dc;
                quot[i].push((m.clone(), c.clone()));
                p.sub_scaled(&m, &c, &sorted[i]);
                continue 'outer;
            }
        }
        rem.push((lm, lc));
        p.terms.remove(0);
    }

    Ok(DivisionResult {
        quotients: quot
            .into_iter()
            .map(|t| Polynomial::from_terms(ring, t))
            .collect(),
        remainder: Polynomial::from_terms(ring, rem),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::PolyRing;

    #[test]
    fn exact_division() {
        let r = PolyRing::new(vec!["x", "y"]).unwrap();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let f = &x.pow(2) * &y;
        let res = divide(&f, &[x.clone()], r.default_order()).unwrap();
        assert!(res.remainder.is_zero());
        assert_eq!(res.quotients[0], &x * &y);
    }

    #[test]
    fn substitution_remainder() {
        // x^2 + y^2 mod (x - y) leaves 2 y^2 under lex(x>y)
        let r = PolyRing::with_order(vec!["x", "y"], MonomialOrder::lex(2)).unwrap();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let f = &x.pow(2) + &y.pow(2);
        let res = divide(&f, &[&x - &y], r.default_order()).unwrap();
        assert_eq!(res.remainder, y.pow(2).scale(&Coeff::from_integer(2.into())));
        // re-expansion reproduces f
        let back = &(&res.quotients[0] * &(&x - &y)) + &res.remainder;
        assert_eq!(back, f);
    }

    #[test]
    fn self_reduction() {
        let r = PolyRing::new(vec!["x", "y"]).unwrap();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let f = &(&x * &y) + &y.pow(3);
        let res = divide(&f, &[f.clone()], r.default_order()).unwrap();
        assert!(res.remainder.is_zero());
        assert!(res.quotients[0].is_one());
    }

    #[test]
    fn zero_divisor_rejected() {
        let r = PolyRing::new(vec!["x"]).unwrap();
        let x = Polynomial::var(&r, 0);
        assert!(divide(&x, &[Polynomial::zero(&r)], r.default_order()).is_err());
    }
}
