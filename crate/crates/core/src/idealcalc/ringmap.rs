use super::Ideal;
use crate::polycore::{Polynomial, RingRef};
use crate::{Error, Result};

/// A ℚ-algebra map between (quotients of) polynomial rings: one target
/// image per source variable, optionally into a quotient by
/// `target_modulus`. Application reduces to normal form when a modulus
/// is present.
#[derive(Clone, Debug)]
pub struct RingMap {
    source: RingRef,
    target: RingRef,
    images: Vec<Polynomial>,
    target_modulus: Option<Ideal>,
}

impl RingMap {
    pub fn new(
        source: &RingRef,
        target: &RingRef,
        images: Vec<Polynomial>,
        target_modulus: Option<Ideal>,
    ) -> Result<RingMap> {
        if images.len() != source.num_vars() {
            return Err(Error::Dimension(format!(
                "{} images for {} source variables",
                images.len(),
                source.num_vars()
            )));
        }
        for im in &images {
            if **im.ring() != **target {
                return Err(Error::RingMismatch("image outside the target ring".into()));
            }
        }
        if let Some(m) = &target_modulus {
            if **m.ring() != **target {
                return Err(Error::RingMismatch("modulus outside the target ring".into()));
            }
        }
        Ok(RingMap { source: source.clone(), target: target.clone(), images, target_modulus })
    }

    pub fn identity(ring: &RingRef) -> RingMap {
        let images = (0..ring.num_vars()).map(|i| Polynomial::var(ring, i)).collect();
        RingMap { source: ring.clone(), target: ring.clone(), images, target_modulus: None }
    }

    /// The variable-inclusion map into a superring, matching by name.
    pub fn inclusion(source: &RingRef, target: &RingRef, modulus: Option<Ideal>) -> Result<RingMap> {
        let images = source
            .var_names()
            .iter()
            .map(|v| Polynomial::var_named(target, v))
            .collect::<Result<Vec<_>>>()?;
        RingMap::new(source, target, images, modulus)
    }

    pub fn source(&self) -> &RingRef {
        &self.source
    }

    pub fn target(&self) -> &RingRef {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn target_modulus(&self) -> Option<&Ideal> {
        self.target_modulus.as_ref()
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if **f.ring() != *self.source {
            return Err(Error::RingMismatch("applying a ring map to a foreign element".into()));
        }
        let mut acc = Polynomial::zero(&self.target);
        for (m, c) in f.terms() {
            let mut term = Polynomial::constant(&self.target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    term = &term * &self.images[i].pow(e);
                }
            }
            acc = &acc + &term;
        }
        match &self.target_modulus {
            Some(m) => m.normal_form(&acc),
            None => Ok(acc),
        }
    }

    /// Image ideal: generated by the images of the generators, plus the
    /// target modulus when present.
    pub fn pullback_ideal(&self, ideal: &Ideal) -> Result<Ideal> {
        if **ideal.ring() != *self.source {
            return Err(Error::RingMismatch("pullback of a foreign ideal".into()));
        }
        let mut gens = Vec::new();
        for g in ideal.gens() {
            gens.push(self.apply(g)?);
        }
        if let Some(m) = &self.target_modulus {
            gens.extend(m.gens().iter().cloned());
        }
        Ideal::new(&self.target, gens)
    }

    /// Composition `other ∘ self` (apply `self`, then `other`).
    pub fn then(&self, other: &RingMap) -> Result<RingMap> {
        if *self.target != *other.source {
            return Err(Error::RingMismatch("composing maps with mismatched middle ring".into()));
        }
        let images = self
            .images
            .iter()
            .map(|im| other.apply(im))
            .collect::<Result<Vec<_>>>()?;
        RingMap::new(&self.source, &other.target, images, other.target_modulus.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::idealcalc::ideal_from_strs;
    use crate::polycore::{parse_polynomial, PolyRing};

    #[test]
    fn image_of_generators() {
        // x↦t, y↦0 : pullback of (x,y) is (t)
        let src = PolyRing::new(vec!["x", "y"]).unwrap();
        let tgt = PolyRing::new(vec!["t"]).unwrap();
        let phi = RingMap::new(
            &src,
            &tgt,
            vec![Polynomial::var(&tgt, 0), Polynomial::zero(&tgt)],
            None,
        )
        .unwrap();
        let i = ideal_from_strs(&src, &["x", "y"]).unwrap();
        let img = phi.pullback_ideal(&i).unwrap();
        assert!(img.equals(&ideal_from_strs(&tgt, &["t"]).unwrap()).unwrap());
    }

    #[test]
    fn identity_map_fixes_ideals() {
        let r = PolyRing::new(vec!["x", "y"]).unwrap();
        let id = RingMap::identity(&r);
        let i = ideal_from_strs(&r, &["x^2 - y"]).unwrap();
        assert!(id.pullback_ideal(&i).unwrap().equals(&i).unwrap());
    }

    #[test]
    fn quotient_target_reduces() {
        // x ↦ t in Q[t]/(t): image of x is 0
        let src = PolyRing::new(vec!["x"]).unwrap();
        let tgt = PolyRing::new(vec!["t"]).unwrap();
        let modulus = ideal_from_strs(&tgt, &["t"]).unwrap();
        let phi = RingMap::new(&src, &tgt, vec![Polynomial::var(&tgt, 0)], Some(modulus)).unwrap();
        let img = phi.apply(&parse_polynomial(&src, "x^2 + x").unwrap()).unwrap();
        assert!(img.is_zero());
    }
}
