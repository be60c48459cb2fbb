//! Conormal presentations I/I² over chart quotient rings.

use super::subscheme::ClosedSubscheme;
use crate::idealcalc::{syzygies, Ideal};
use crate::polycore::Polynomial;
use crate::Result;

/// A presentation of the conormal module I/I² on one chart: module
/// generators (the minimal ideal generators) and relation rows, already
/// reduced modulo I. A presentation with no surviving relations is free.
#[derive(Clone, Debug)]
pub struct ConormalPresentation {
    pub generators: Vec<Polynomial>,
    pub relations: Vec<Vec<Polynomial>>,
}

impl ConormalPresentation {
    /// `Some(rank)` when the presentation visibly splits (all syzygies
    /// land in I, e.g. for regular-sequence generators).
    pub fn free_rank(&self) -> Option<usize> {
        if self.relations.is_empty() {
            Some(self.generators.len())
        } else {
            None
        }
    }
}

/// Presentation of I/I² for a subscheme on one chart: generators are the
/// minimal chart generators modulo relations; relation rows are the
/// syzygies of (generators, chart relations) projected to the generator
/// coordinates and reduced modulo I. Zero rows are dropped.
pub fn conormal_presentation(sub: &ClosedSubscheme, chart: usize) -> Result<ConormalPresentation> {
    let c = sub.ambient().chart(chart);
    let gens = sub.min_gens(chart)?;
    let k = gens.len();
    if k == 0 {
        return Ok(ConormalPresentation { generators: gens, relations: Vec::new() });
    }
    let mut all = gens.clone();
    all.extend(c.relations.gens().iter().cloned());
    let syz = syzygies(&all, c.ring.default_order())?;
    let full = sub.ideal(chart);
    let _ = Ideal::zero(&c.ring);
    let mut rows = Vec::new();
    for row in syz {
        let mut reduced = Vec::with_capacity(k);
        let mut nonzero = false;
        for v in row.into_iter().take(k) {
            let nf = full.normal_form(&v)?;
            if !nf.is_zero() {
                nonzero = true;
            }
            reduced.push(nf);
        }
        if nonzero {
            rows.push(reduced);
        }
    }
    // deduplicate rows for a stable report
    rows.sort_by_key(|r| r.iter().map(|p| p.to_string()).collect::<Vec<_>>());
    rows.dedup();
    Ok(ConormalPresentation { generators: gens, relations: rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::affine_space;

    #[test]
    fn origin_in_the_plane_is_free_of_rank_two() {
        let a2 = affine_space(2).unwrap();
        let origin = ClosedSubscheme::from_strs(&a2, &[&["x", "y"]]).unwrap();
        let pres = conormal_presentation(&origin, 0).unwrap();
        assert_eq!(pres.free_rank(), Some(2));
    }

    #[test]
    fn principal_divisor_is_free_of_rank_one() {
        let a2 = affine_space(2).unwrap();
        let d = ClosedSubscheme::from_strs(&a2, &[&["x*y"]]).unwrap();
        let pres = conormal_presentation(&d, 0).unwrap();
        assert_eq!(pres.free_rank(), Some(1));
    }

    #[test]
    fn non_lci_presentation_survives() {
        // (x^2, x y): the syzygy y·x^2 − x·(x y) = 0 does not die mod I
        let a2 = affine_space(2).unwrap();
        let s = ClosedSubscheme::from_strs(&a2, &[&["x^2", "x*y"]]).unwrap();
        let pres = conormal_presentation(&s, 0).unwrap();
        assert_eq!(pres.generators.len(), 2);
        assert!(pres.free_rank().is_none());
    }
}
