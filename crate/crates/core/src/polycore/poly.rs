use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::{coeff_to_string, Coeff, Monomial, MonomialOrder, RingRef};
use crate::{Error, Result};

/// A sparse polynomial: nonzero terms sorted descending in the ring's
/// default order. Two polynomials are equal iff their rings agree and
/// their term lists agree.
#[derive(Clone)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.terms == other.terms
    }
}
impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &RingRef) -> Self {
        Polynomial::constant(ring, Coeff::one())
    }

    pub fn constant(ring: &RingRef, c: Coeff) -> Self {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(Monomial::one(ring.num_vars()), c)] }
    }

    pub fn from_int(ring: &RingRef, n: i64) -> Self {
        Polynomial::constant(ring, Coeff::from_integer(n.into()))
    }

    pub fn var(ring: &RingRef, index: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.num_vars(), index), Coeff::one())],
        }
    }

    pub fn var_named(ring: &RingRef, name: &str) -> Result<Self> {
        let i = ring
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Polynomial::var(ring, i))
    }

    /// Normalizes arbitrary terms: merges duplicates, drops zeros, sorts.
    pub fn from_terms(ring: &RingRef, terms: Vec<(Monomial, Coeff)>) -> Self {
        let mut map: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.len(), ring.num_vars());
            let entry = map.entry(m).or_insert_with(Coeff::zero);
            *entry += c;
        }
        let mut terms: Vec<(Monomial, Coeff)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = ring.default_order().clone();
        terms.sort_by(|a, b| order.cmp_monomials(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn same_ring(&self, other: &Polynomial) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// Leading term under the ring's default order.
    pub fn leading(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    /// Leading term under an arbitrary order.
    pub fn leading_under(&self, order: &MonomialOrder) -> Option<(&Monomial, &Coeff)> {
        if *order == *self.ring.default_order() {
            return self.leading();
        }
        self.terms
            .iter()
            .max_by(|a, b| order.cmp_monomials(&a.0, &b.0))
            .map(|(m, c)| (m, c))
    }

    fn check_ring(&self, other: &Polynomial, op: &str) -> Result<()> {
        if !self.same_ring(other) {
            return Err(Error::RingMismatch(format!(
                "{op} between rings [{}] and [{}]",
                self.ring.var_names().join(","),
                other.ring.var_names().join(",")
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other, "add")?;
        Ok(self.merged(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other, "sub")?;
        Ok(self.merged(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other, "mul")?;
        let mut map: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let entry = map.entry(m).or_insert_with(Coeff::zero);
                *entry += ca * cb;
            }
        }
        Ok(Polynomial::from_terms(&self.ring, map.into_iter().collect()))
    }

    /// Merge-add of two canonically sorted term lists (`negate` subtracts).
    fn merged(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let order = self.ring.default_order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match order.cmp_monomials(&self.terms[i].0, &other.terms[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let (m, c) = &other.terms[j];
                    out.push((m.clone(), if negate { -c } else { c.clone() }));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let (m, ca) = &self.terms[i];
                    let cb = &other.terms[j].1;
                    let c = if negate { ca - cb } else { ca + cb };
                    if !c.is_zero() {
                        out.push((m.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        for (m, c) in &other.terms[j..] {
            out.push((m.clone(), if negate { -c } else { c.clone() }));
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// `self * c * m` for a single term.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(mm, cc)| (mm.mul(m), cc * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.checked_mul(self).expect("same ring");
        }
        acc
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exps()[var] > 0)
            .map(|(m, c)| {
                let e = m.exps()[var];
                let mut exps = m.exps().to_vec();
                exps[var] -= 1;
                (Monomial::from_exps(exps), c * Coeff::from_integer(e.into()))
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Makes the leading coefficient 1 (no-op on zero).
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = Coeff::one() / c.clone();
                self.scale(&inv)
            }
        }
    }

    /// Embeds into a ring containing this one; `var_map[i]` gives the
    /// index of source variable `i` in the target ring.
    pub fn embed(&self, target: &RingRef, var_map: &[usize]) -> Polynomial {
        let n = target.num_vars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.embed(n, var_map), c.clone()))
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Embeds by matching variable names; every source variable must
    /// exist in the target ring.
    pub fn embed_by_name(&self, target: &RingRef) -> Result<Polynomial> {
        let map: Vec<usize> = self
            .ring
            .var_names()
            .iter()
            .map(|v| {
                target
                    .var_index(v)
                    .ok_or_else(|| Error::UnknownVariable(format!("`{v}` missing in target ring")))
            })
            .collect::<Result<_>>()?;
        Ok(self.embed(target, &map))
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial add: ring mismatch")
    }
}
impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial sub: ring mismatch")
    }
}
impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial mul: ring mismatch")
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text form: terms descending in the default order,
    /// coefficients as `num/den`, monomials as `x^2*y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = monomial_string(&self.ring, m);
            if mono.is_empty() {
                write!(f, "{}", coeff_to_string(&abs))?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", coeff_to_string(&abs))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

fn monomial_string(ring: &RingRef, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 1 {
            parts.push(ring.var_name(i).to_string());
        } else if e > 1 {
            parts.push(format!("{}^{}", ring.var_name(i), e));
        }
    }
    parts.join("*")
}
