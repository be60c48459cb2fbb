use std::fmt;
use std::sync::OnceLock;

use super::groebner::{groebner_basis, normal_form};
use crate::polycore::{MonomialOrder, PolyRing, Polynomial, RingRef};
use crate::{Error, Result};

/// An ideal of a polynomial ring: a generator list plus a memoized
/// reduced Gröbner basis for the ring's default order.
///
/// The memo fills at most once; recomputation is idempotent because the
/// reduced basis is unique per (ideal, order), so concurrent readers can
/// never observe disagreeing bases.
#[derive(Clone)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Polynomial>,
    gb_default: OnceLock<Vec<Polynomial>>,
}

impl Ideal {
    pub fn new(ring: &RingRef, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            if **g.ring() != **ring {
                return Err(Error::RingMismatch("ideal generator from another ring".into()));
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), gens, gb_default: OnceLock::new() })
    }

    pub fn zero(ring: &RingRef) -> Ideal {
        Ideal { ring: ring.clone(), gens: Vec::new(), gb_default: OnceLock::new() }
    }

    pub fn unit(ring: &RingRef) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: vec![Polynomial::one(ring)],
            gb_default: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    fn check_ring(&self, other: &Ideal, op: &str) -> Result<()> {
        if **self.ring() != **other.ring() {
            return Err(Error::RingMismatch(format!("{op} of ideals in different rings")));
        }
        Ok(())
    }

    /// Reduced Gröbner basis for the ring's default order (memoized).
    pub fn groebner(&self) -> &[Polynomial] {
        self.gb_default
            .get_or_init(|| groebner_basis(&self.gens, self.ring.default_order()))
    }

    /// Reduced Gröbner basis for an arbitrary order.
    pub fn groebner_under(&self, order: &MonomialOrder) -> Vec<Polynomial> {
        if order == self.ring.default_order() {
            return self.groebner().to_vec();
        }
        groebner_basis(&self.gens, order)
    }

    /// Normal form of `f` against the default-order basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if **f.ring() != **self.ring() {
            return Err(Error::RingMismatch("normal form across rings".into()));
        }
        Ok(normal_form(f, self.groebner(), self.ring.default_order()))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other, "containment")?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal equality via the canonical reduced bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other, "equality")?;
        Ok(self.groebner() == other.groebner())
    }

    pub fn is_zero(&self) -> bool {
        self.groebner().is_empty()
    }

    pub fn is_unit(&self) -> bool {
        let gb = self.groebner();
        gb.len() == 1 && gb[0].is_one()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other, "sum")?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other, "product")?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a * b);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// Intersection by the elimination trick: eliminate a fresh `t` from
    /// `t·I + (1−t)·J`.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other, "intersection")?;
        let tname = self.ring.fresh_name("t");
        let big = self.ring.extended(&[tname])?;
        let n = self.ring.num_vars();
        let var_map: Vec<usize> = (0..n).collect();
        let t = Polynomial::var(&big, n);
        let one_minus_t = &Polynomial::one(&big) - &t;
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(&g.embed(&big, &var_map) * &t);
        }
        for h in &other.gens {
            gens.push(&h.embed(&big, &var_map) * &one_minus_t);
        }
        let elim = MonomialOrder::block(n + 1, &[n])?;
        let gb = groebner_basis(&gens, &elim);
        let kept: Vec<Polynomial> = gb
            .into_iter()
            .filter(|p| p.terms().iter().all(|(m, _)| m.exps()[n] == 0))
            .map(|p| restrict(&p, &self.ring, &var_map))
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// Ideal quotient `(I : f)`, computed as `(I ∩ ⟨f⟩)/f`.
    pub fn quotient(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::InvalidInput("ideal quotient by zero".into()));
        }
        if **f.ring() != **self.ring() {
            return Err(Error::RingMismatch("quotient across rings".into()));
        }
        let fi = Ideal::new(&self.ring, vec![f.clone()])?;
        let meet = self.intersection(&fi)?;
        let mut gens = Vec::new();
        for g in meet.gens() {
            let d = crate::polycore::divide(g, &[f.clone()], self.ring.default_order())?;
            debug_assert!(d.remainder.is_zero(), "intersection element not divisible");
            gens.push(d.quotients[0].clone());
        }
        Ideal::new(&self.ring, gens)
    }

    /// Saturation `(I : f^∞)` by iterated quotient until stable.
    pub fn saturation(&self, f: &Polynomial) -> Result<Ideal> {
        let mut cur = self.clone();
        loop {
            let next = cur.quotient(f)?;
            if next.equals(&cur)? {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Saturation by the Rabinowitsch trick: eliminate `t` from
    /// `I + ⟨1 − t·f⟩`. Kept as an independent route to cross-check the
    /// iterated quotient.
    pub fn saturation_ttrick(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::InvalidInput("saturation by zero".into()));
        }
        let tname = self.ring.fresh_name("t");
        let big = self.ring.extended(&[tname])?;
        let n = self.ring.num_vars();
        let var_map: Vec<usize> = (0..n).collect();
        let t = Polynomial::var(&big, n);
        let mut gens: Vec<Polynomial> =
            self.gens.iter().map(|g| g.embed(&big, &var_map)).collect();
        gens.push(&Polynomial::one(&big) - &(&t * &f.embed(&big, &var_map)));
        let elim = MonomialOrder::block(n + 1, &[n])?;
        let gb = groebner_basis(&gens, &elim);
        let kept: Vec<Polynomial> = gb
            .into_iter()
            .filter(|p| p.terms().iter().all(|(m, _)| m.exps()[n] == 0))
            .map(|p| restrict(&p, &self.ring, &var_map))
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// Generators of `I ∩ ℚ[vars ∖ eliminated]`, inside the same ring.
    pub fn eliminate(&self, vars: &[&str]) -> Result<Ideal> {
        let mut idxs = Vec::new();
        for v in vars {
            let i = self
                .ring
                .var_index(v)
                .ok_or_else(|| Error::UnknownVariable((*v).to_string()))?;
            idxs.push(i);
        }
        if idxs.is_empty() {
            return Ok(self.clone());
        }
        let order = MonomialOrder::block(self.ring.num_vars(), &idxs)?;
        let gb = groebner_basis(&self.gens, &order);
        let kept: Vec<Polynomial> = gb
            .into_iter()
            .filter(|p| {
                p.terms()
                    .iter()
                    .all(|(m, _)| idxs.iter().all(|&i| m.exps()[i] == 0))
            })
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// Canonical serialization: the reduced default-order basis in text
    /// form, sorted as strings.
    pub fn serialized(&self) -> Vec<String> {
        let mut out: Vec<String> = self.groebner().iter().map(|p| p.to_string()).collect();
        out.sort();
        out
    }

    /// Embeds the generators into a superring by variable name.
    pub fn embed_by_name(&self, target: &RingRef) -> Result<Ideal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.embed_by_name(target))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }
}

/// Drops trailing variables of `p` (all exponents must vanish off `var_map`).
fn restrict(p: &Polynomial, small: &RingRef, var_map: &[usize]) -> Polynomial {
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut exps = vec![0u32; small.num_vars()];
            for (i, &t) in var_map.iter().enumerate() {
                exps[i] = m.exps()[t];
            }
            (crate::polycore::Monomial::from_exps(exps), c.clone())
        })
        .collect();
    Polynomial::from_terms(small, terms)
}

/// `f` is a nonzerodivisor on `R/I`, i.e. `(I : f) = I`.
pub fn is_nonzerodivisor(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::InvalidInput("nonzerodivisor test on zero".into()));
    }
    ideal.quotient(f)?.equals(ideal)
}

/// Multiplicative inverse of `f` modulo `modulus`, when one exists.
pub fn invert_mod(f: &Polynomial, modulus: &Ideal) -> Option<Polynomial> {
    let ring = modulus.ring();
    let zname = ring.fresh_name("z");
    let big = ring.extended(&[zname]).ok()?;
    let n = ring.num_vars();
    let var_map: Vec<usize> = (0..n).collect();
    let z = Polynomial::var(&big, n);
    let mut gens: Vec<Polynomial> = modulus.gens().iter().map(|g| g.embed(&big, &var_map)).collect();
    gens.push(&(&z * &f.embed(&big, &var_map)) - &Polynomial::one(&big));
    let elim = MonomialOrder::block(n + 1, &[n]).ok()?;
    let gb = groebner_basis(&gens, &elim);
    let nf = normal_form(&z, &gb, &elim);
    if nf.terms().iter().any(|(m, _)| m.exps()[n] != 0) {
        return None;
    }
    let h = restrict(&nf, ring, &var_map);
    let check = &(&h * f) - &Polynomial::one(ring);
    match modulus.contains(&check) {
        Ok(true) => Some(h),
        _ => None,
    }
}

/// `g / f` modulo `modulus`, when `f` divides `g` there: returns `h` with
/// `g ≡ h·f (mod modulus)`. Exact on ideals saturated with respect to `f`.
pub fn divide_mod(g: &Polynomial, f: &Polynomial, modulus: &Ideal) -> Option<Polynomial> {
    if f.is_zero() {
        return None;
    }
    let ring = modulus.ring();
    let zname = ring.fresh_name("z");
    let big = ring.extended(&[zname]).ok()?;
    let n = ring.num_vars();
    let var_map: Vec<usize> = (0..n).collect();
    let z = Polynomial::var(&big, n);
    let mut gens: Vec<Polynomial> = modulus.gens().iter().map(|m| m.embed(&big, &var_map)).collect();
    gens.push(&(&z * &f.embed(&big, &var_map)) - &Polynomial::one(&big));
    let elim = MonomialOrder::block(n + 1, &[n]).ok()?;
    let gb = groebner_basis(&gens, &elim);
    let nf = normal_form(&(&z * &g.embed(&big, &var_map)), &gb, &elim);
    if nf.terms().iter().any(|(m, _)| m.exps()[n] != 0) {
        return None;
    }
    let h = restrict(&nf, ring, &var_map);
    let check = &(&h * f) - g;
    match modulus.contains(&check) {
        Ok(true) => Some(h),
        _ => None,
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Ideal({})",
            self.gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")
        )
    }
}

/// Convenience: an ideal from text generators.
pub fn ideal_from_strs(ring: &RingRef, gens: &[&str]) -> Result<Ideal> {
    let gens = gens
        .iter()
        .map(|s| crate::polycore::parse_polynomial(ring, s))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, gens)
}

#[allow(dead_code)]
fn _assert_ring_eq(a: &PolyRing, b: &PolyRing) -> bool {
    a == b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::parse_polynomial;

    fn ring2() -> RingRef {
        PolyRing::new(vec!["x", "y"]).unwrap()
    }

    fn p(r: &RingRef, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    #[test]
    fn membership() {
        let r = ring2();
        let i = ideal_from_strs(&r, &["x", "y"]).unwrap();
        assert!(i.contains(&p(&r, "x + y")).unwrap());
        let sq = ideal_from_strs(&r, &["x^2"]).unwrap();
        assert!(!sq.contains(&p(&r, "x")).unwrap());
    }

    #[test]
    fn unit_scaling_equality() {
        let r = ring2();
        let a = ideal_from_strs(&r, &["x - 1"]).unwrap();
        let b = ideal_from_strs(&r, &["2*x - 2"]).unwrap();
        assert!(a.equals(&b).unwrap());
    }

    #[test]
    fn sums_and_products() {
        let r = ring2();
        let ix = ideal_from_strs(&r, &["x"]).unwrap();
        let iy = ideal_from_strs(&r, &["y"]).unwrap();
        assert!(ix
            .product(&iy)
            .unwrap()
            .equals(&ideal_from_strs(&r, &["x*y"]).unwrap())
            .unwrap());
        assert!(ix
            .sum(&iy)
            .unwrap()
            .equals(&ideal_from_strs(&r, &["x", "y"]).unwrap())
            .unwrap());
        // sum of equal divisors multiplies ideals
        let d = ideal_from_strs(&r, &["x"]).unwrap();
        assert!(d
            .product(&d)
            .unwrap()
            .equals(&ideal_from_strs(&r, &["x^2"]).unwrap())
            .unwrap());
    }

    #[test]
    fn intersections() {
        let r = ring2();
        let ix = ideal_from_strs(&r, &["x"]).unwrap();
        let iy = ideal_from_strs(&r, &["y"]).unwrap();
        let meet = ix.intersection(&iy).unwrap();
        assert!(meet.equals(&ideal_from_strs(&r, &["x*y"]).unwrap()).unwrap());
        // idempotence
        let i = ideal_from_strs(&r, &["x^2 - y"]).unwrap();
        assert!(i.intersection(&i).unwrap().equals(&i).unwrap());
        // nested
        let sq = ideal_from_strs(&r, &["x^2"]).unwrap();
        assert!(sq.intersection(&ix).unwrap().equals(&sq).unwrap());
    }

    #[test]
    fn quotients_and_saturation() {
        let r = ring2();
        let ixy = ideal_from_strs(&r, &["x*y"]).unwrap();
        let x = p(&r, "x");
        assert!(ixy
            .quotient(&x)
            .unwrap()
            .equals(&ideal_from_strs(&r, &["y"]).unwrap())
            .unwrap());
        // y is a nonzerodivisor mod (x)
        let ix = ideal_from_strs(&r, &["x"]).unwrap();
        assert!(ix
            .quotient(&p(&r, "y"))
            .unwrap()
            .equals(&ix)
            .unwrap());
        // sat((x^2 y, x y^2), x) = (y), cross-checked with the t-trick
        let i = ideal_from_strs(&r, &["x^2*y", "x*y^2"]).unwrap();
        let sat = i.saturation(&x).unwrap();
        assert!(sat.equals(&ideal_from_strs(&r, &["y"]).unwrap()).unwrap());
        let sat2 = i.saturation_ttrick(&x).unwrap();
        assert!(sat.equals(&sat2).unwrap());
        // idempotence of saturation
        assert!(sat.saturation(&x).unwrap().equals(&sat).unwrap());
    }

    #[test]
    fn quotient_by_zero_is_an_error() {
        let r = ring2();
        let i = ideal_from_strs(&r, &["x"]).unwrap();
        assert!(i.quotient(&Polynomial::zero(&r)).is_err());
    }

    #[test]
    fn elimination() {
        let r = ring2();
        // eliminate y from (y - x^2): the projection of a graph is everything
        let i = ideal_from_strs(&r, &["y - x^2"]).unwrap();
        assert!(i.eliminate(&["y"]).unwrap().is_zero());
        // empty elimination is the identity
        let ix = ideal_from_strs(&r, &["x"]).unwrap();
        assert!(ix.eliminate(&[]).unwrap().equals(&ix).unwrap());
        // unknown variable
        assert!(ix.eliminate(&["q"]).is_err());
    }

    #[test]
    fn elimination_matches_resultant() {
        // eliminate u from (u x - y, u y - x^3): resultant is y^2 - x^4
        let r = PolyRing::new(vec!["u", "x", "y"]).unwrap();
        let i = ideal_from_strs(&r, &["u*x - y", "u*y - x^3"]).unwrap();
        let e = i.eliminate(&["u"]).unwrap();
        let expect = ideal_from_strs(&r, &["y^2 - x^4"]).unwrap();
        // the elimination ideal can be the saturation-refined closure of the
        // resultant; both directions are checked on generators
        assert!(e.contains_ideal(&expect).unwrap());
    }

    #[test]
    fn nonzerodivisor_checks() {
        let r = ring2();
        let iy = ideal_from_strs(&r, &["y"]).unwrap();
        assert!(is_nonzerodivisor(&p(&r, "x"), &iy).unwrap());
        let ixy = ideal_from_strs(&r, &["x*y"]).unwrap();
        assert!(!is_nonzerodivisor(&p(&r, "x"), &ixy).unwrap());
        assert!(is_nonzerodivisor(&p(&r, "1"), &ixy).unwrap());
        assert!(is_nonzerodivisor(&Polynomial::one(&r), &Ideal::zero(&r)).unwrap());
        assert!(is_nonzerodivisor(&Polynomial::zero(&r), &iy).is_err());
    }

    #[test]
    fn inverse_and_exact_division_mod() {
        let r = ring2();
        // x is invertible mod (x*y - 1): inverse is y
        let m = ideal_from_strs(&r, &["x*y - 1"]).unwrap();
        let inv = invert_mod(&p(&r, "x"), &m).unwrap();
        assert!(m.contains(&(&(&inv * &p(&r, "x")) - &Polynomial::one(&r))).unwrap());
        // x is not invertible mod (y)
        assert!(invert_mod(&p(&r, "x"), &ideal_from_strs(&r, &["y"]).unwrap()).is_none());
        // u = t/x mod (u x - t)
        let r3 = PolyRing::new(vec!["x", "t", "u"]).unwrap();
        let md = ideal_from_strs(&r3, &["u*x - t"]).unwrap();
        let h = divide_mod(&p(&r3, "t"), &p(&r3, "x"), &md).unwrap();
        assert!(md.contains(&(&(&h * &p(&r3, "x")) - &p(&r3, "t"))).unwrap());
        assert!(divide_mod(&p(&r3, "x"), &p(&r3, "t"), &md).is_none());
    }

    #[test]
    fn serialization_is_sorted_text() {
        let r = ring2();
        let i = ideal_from_strs(&r, &["y", "x"]).unwrap();
        assert_eq!(i.serialized(), vec!["x".to_string(), "y".to_string()]);
    }
}
