use std::fmt;
use std::sync::Arc;

use crate::idealcalc::{Ideal, RingMap};
use crate::polycore::{Polynomial, RingRef};
use crate::{Error, Result};

/// One affine piece `Spec(ring/relations)` of an atlas.
#[derive(Clone, Debug)]
pub struct Chart {
    pub label: String,
    pub ring: RingRef,
    pub relations: Ideal,
}

impl Chart {
    pub fn new(label: impl Into<String>, ring: &RingRef, relations: Ideal) -> Result<Chart> {
        if **relations.ring() != **ring {
            return Err(Error::RingMismatch("chart relations in a foreign ring".into()));
        }
        Ok(Chart { label: label.into(), ring: ring.clone(), relations })
    }

    /// The chart is empty when its relations are the unit ideal.
    pub fn is_empty(&self) -> bool {
        self.relations.is_unit()
    }

    /// The canonical localization at `mult`: the chart ring plus one
    /// inverse variable `inv` with relation `inv·mult − 1`.
    pub fn localized(&self, mult: &Polynomial) -> Result<(RingRef, Ideal, usize)> {
        let name = self.ring.fresh_name("inv");
        let big = self.ring.extended(&[name])?;
        let n = self.ring.num_vars();
        let var_map: Vec<usize> = (0..n).collect();
        let inv = Polynomial::var(&big, n);
        let mut gens: Vec<Polynomial> = self
            .relations
            .gens()
            .iter()
            .map(|g| g.embed(&big, &var_map))
            .collect();
        gens.push(&(&inv * &mult.embed(&big, &var_map)) - &Polynomial::one(&big));
        Ok((big.clone(), Ideal::new(&big, gens)?, n))
    }
}

/// A distinguished-open gluing: chart `left` localized at `left_mult` is
/// identified with chart `right` localized at `right_mult`. The two ring
/// maps run between the canonical localizations (which carry one extra
/// inverse variable each) and must be mutually inverse modulo relations.
#[derive(Clone, Debug)]
pub struct Gluing {
    pub left: usize,
    pub right: usize,
    pub left_mult: Polynomial,
    pub right_mult: Polynomial,
    pub left_to_right: RingMap,
    pub right_to_left: RingMap,
}

impl Gluing {
    /// Builds a gluing from variable images. `left_images` gives, for each
    /// variable of the left chart and then for its inverse variable, the
    /// image in the right localization; `right_images` symmetrically.
    pub fn build(
        charts: &[Chart],
        left: usize,
        right: usize,
        left_mult: Polynomial,
        right_mult: Polynomial,
        left_images: Vec<Polynomial>,
        right_images: Vec<Polynomial>,
    ) -> Result<Gluing> {
        let (lring, lrel, _) = charts[left].localized(&left_mult)?;
        let (rring, rrel, _) = charts[right].localized(&right_mult)?;
        let left_to_right = RingMap::new(&lring, &rring, left_images, Some(rrel))?;
        let right_to_left = RingMap::new(&rring, &lring, right_images, Some(lrel))?;
        Ok(Gluing { left, right, left_mult, right_mult, left_to_right, right_to_left })
    }

    /// Mutual-inverse and well-definedness checks, as failure notes.
    pub fn verify(&self, charts: &[Chart]) -> Result<Vec<String>> {
        let mut notes = Vec::new();
        let (lring, lrel, _) = charts[self.left].localized(&self.left_mult)?;
        let (rring, rrel, _) = charts[self.right].localized(&self.right_mult)?;
        // relations map to relations
        for g in charts[self.left].relations.gens() {
            let img = self.left_to_right.apply(&g.embed_by_name(&lring)?)?;
            if !rrel.contains(&img)? {
                notes.push(format!(
                    "gluing {}~{}: left relation `{}` does not map into right relations",
                    charts[self.left].label, charts[self.right].label, g
                ));
            }
        }
        for g in charts[self.right].relations.gens() {
            let img = self.right_to_left.apply(&g.embed_by_name(&rring)?)?;
            if !lrel.contains(&img)? {
                notes.push(format!(
                    "gluing {}~{}: right relation `{}` does not map into left relations",
                    charts[self.left].label, charts[self.right].label, g
                ));
            }
        }
        // round trips are the identity
        for i in 0..lring.num_vars() {
            let v = Polynomial::var(&lring, i);
            let back = self.right_to_left.apply(&self.left_to_right.apply(&v)?)?;
            if !lrel.contains(&(&back - &v))? {
                notes.push(format!(
                    "gluing {}~{}: `{}` does not round-trip",
                    charts[self.left].label,
                    charts[self.right].label,
                    lring.var_name(i)
                ));
            }
        }
        for i in 0..rring.num_vars() {
            let v = Polynomial::var(&rring, i);
            let back = self.left_to_right.apply(&self.right_to_left.apply(&v)?)?;
            if !rrel.contains(&(&back - &v))? {
                notes.push(format!(
                    "gluing {}~{}: `{}` does not round-trip (right)",
                    charts[self.left].label,
                    charts[self.right].label,
                    rring.var_name(i)
                ));
            }
        }
        Ok(notes)
    }
}

#[derive(Debug)]
struct AtlasInner {
    charts: Vec<Chart>,
    gluings: Vec<Gluing>,
}

/// A scheme presented as finitely many charts with distinguished-open
/// gluings. Cheap to clone; equality is structural.
#[derive(Clone, Debug)]
pub struct Atlas {
    inner: Arc<AtlasInner>,
}

impl PartialEq for Atlas {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.inner, &other.inner) {
            return true;
        }
        if self.charts().len() != other.charts().len() {
            return false;
        }
        self.charts().iter().zip(other.charts()).all(|(a, b)| {
            a.label == b.label && *a.ring == *b.ring && a.relations.gens() == b.relations.gens()
        })
    }
}

impl Atlas {
    pub fn new(charts: Vec<Chart>, gluings: Vec<Gluing>) -> Result<Atlas> {
        for g in &gluings {
            if g.left >= charts.len() || g.right >= charts.len() {
                return Err(Error::InvalidInput("gluing references a missing chart".into()));
            }
        }
        Ok(Atlas { inner: Arc::new(AtlasInner { charts, gluings }) })
    }

    pub fn single(chart: Chart) -> Atlas {
        Atlas::new(vec![chart], Vec::new()).expect("single chart")
    }

    pub fn charts(&self) -> &[Chart] {
        &self.inner.charts
    }

    pub fn chart(&self, i: usize) -> &Chart {
        &self.inner.charts[i]
    }

    pub fn gluings(&self) -> &[Gluing] {
        &self.inner.gluings
    }

    pub fn is_empty(&self) -> bool {
        self.charts().iter().all(|c| c.is_empty())
    }

    pub fn chart_by_label(&self, label: &str) -> Option<usize> {
        self.charts().iter().position(|c| c.label == label)
    }

    /// Checks every recorded gluing; empty result means coherent.
    pub fn verify_gluings(&self) -> Result<Vec<String>> {
        let mut notes = Vec::new();
        for g in self.gluings() {
            notes.extend(g.verify(self.charts())?);
        }
        Ok(notes)
    }

    /// Sub-atlas on the given charts, keeping internal gluings.
    pub fn restrict_to_charts(&self, keep: &[usize]) -> Result<Atlas> {
        let mut index = vec![None; self.charts().len()];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = Some(new);
        }
        let charts = keep.iter().map(|&i| self.chart(i).clone()).collect();
        let gluings = self
            .gluings()
            .iter()
            .filter_map(|g| {
                let l = index[g.left]?;
                let r = index[g.right]?;
                let mut ng = g.clone();
                ng.left = l;
                ng.right = r;
                Some(ng)
            })
            .collect();
        Atlas::new(charts, gluings)
    }

    /// Same atlas with the relation ideal of each chart enlarged by the
    /// corresponding entry; gluing data is reused verbatim.
    pub fn with_relations(&self, extra: &[Ideal]) -> Result<Atlas> {
        if extra.len() != self.charts().len() {
            return Err(Error::Dimension("one ideal per chart required".into()));
        }
        let charts = self
            .charts()
            .iter()
            .zip(extra)
            .map(|(c, e)| {
                let rel = c.relations.sum(e)?;
                Chart::new(c.label.clone(), &c.ring, rel)
            })
            .collect::<Result<Vec<_>>>()?;
        Atlas::new(charts, self.gluings().to_vec())
    }

    /// Drops empty charts (unit relations), reindexing gluings.
    pub fn drop_empty_charts(&self) -> Result<Atlas> {
        let keep: Vec<usize> = (0..self.charts().len())
            .filter(|&i| !self.chart(i).is_empty())
            .collect();
        self.restrict_to_charts(&keep)
    }
}

impl fmt::Display for Atlas {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.charts() {
            writeln!(
                f,
                "chart {} : vars [{}], relations [{}]",
                c.label,
                c.ring.var_names().join(", "),
                c.relations.serialized().join(", ")
            )?;
        }
        for g in self.gluings() {
            writeln!(
                f,
                "gluing {} ~ {} at ({} | {})",
                self.chart(g.left).label,
                self.chart(g.right).label,
                g.left_mult,
                g.right_mult
            )?;
        }
        Ok(())
    }
}
