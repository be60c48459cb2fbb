use super::atlas::Atlas;
use crate::idealcalc::{is_nonzerodivisor, Ideal};
use crate::polycore::Polynomial;
use crate::{Error, Result};

/// A closed subscheme of an atlas: one ideal per chart, each containing
/// the chart relations. Chartwise ideals must agree on overlaps, which
/// [`ClosedSubscheme::verify_compatible`] checks.
#[derive(Clone, Debug)]
pub struct ClosedSubscheme {
    ambient: Atlas,
    ideals: Vec<Ideal>,
}

impl ClosedSubscheme {
    /// Builds a subscheme; chart relations are added to each given ideal.
    pub fn new(ambient: &Atlas, ideals: Vec<Ideal>) -> Result<ClosedSubscheme> {
        if ideals.len() != ambient.charts().len() {
            return Err(Error::Dimension(format!(
                "{} ideals for {} charts",
                ideals.len(),
                ambient.charts().len()
            )));
        }
        let ideals = ambient
            .charts()
            .iter()
            .zip(ideals)
            .map(|(c, i)| {
                if **i.ring() != *c.ring {
                    return Err(Error::RingMismatch(format!(
                        "ideal for chart {} lives in a foreign ring",
                        c.label
                    )));
                }
                i.sum(&c.relations)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ClosedSubscheme { ambient: ambient.clone(), ideals })
    }

    /// From textual generators, one list per chart.
    pub fn from_strs(ambient: &Atlas, gens: &[&[&str]]) -> Result<ClosedSubscheme> {
        if gens.len() != ambient.charts().len() {
            return Err(Error::Dimension("one generator list per chart".into()));
        }
        let ideals = ambient
            .charts()
            .iter()
            .zip(gens)
            .map(|(c, g)| crate::idealcalc::ideal_from_strs(&c.ring, g))
            .collect::<Result<Vec<_>>>()?;
        ClosedSubscheme::new(ambient, ideals)
    }

    /// The whole space: the zero ideal in every chart.
    pub fn whole(ambient: &Atlas) -> ClosedSubscheme {
        let ideals = ambient.charts().iter().map(|c| c.relations.clone()).collect();
        ClosedSubscheme { ambient: ambient.clone(), ideals }
    }

    /// The empty subscheme: the unit ideal in every chart.
    pub fn empty(ambient: &Atlas) -> ClosedSubscheme {
        let ideals = ambient.charts().iter().map(|c| Ideal::unit(&c.ring)).collect();
        ClosedSubscheme { ambient: ambient.clone(), ideals }
    }

    pub fn ambient(&self) -> &Atlas {
        &self.ambient
    }

    pub fn ideal(&self, chart: usize) -> &Ideal {
        &self.ideals[chart]
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.iter().all(|i| i.is_unit())
    }

    /// Subscheme equality: chartwise ideal equality over the same ambient.
    pub fn same_subscheme(&self, other: &ClosedSubscheme) -> Result<bool> {
        self.check_ambient(other, "subscheme comparison")?;
        for (a, b) in self.ideals.iter().zip(&other.ideals) {
            if !a.equals(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_ambient(&self, other: &ClosedSubscheme, op: &str) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::RingMismatch(format!("{op}: ambient atlases differ")));
        }
        Ok(())
    }

    /// Scheme-theoretic intersection: chartwise ideal sum.
    pub fn intersect(&self, other: &ClosedSubscheme) -> Result<ClosedSubscheme> {
        self.check_ambient(other, "intersect")?;
        let ideals = self
            .ideals
            .iter()
            .zip(&other.ideals)
            .map(|(a, b)| a.sum(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(ClosedSubscheme { ambient: self.ambient.clone(), ideals })
    }

    /// Sum of closed immersions, modeled by the chartwise product ideal
    /// (plus relations).
    pub fn add_closed(&self, other: &ClosedSubscheme) -> Result<ClosedSubscheme> {
        self.check_ambient(other, "add_closed")?;
        let ideals = self
            .ideals
            .iter()
            .zip(&other.ideals)
            .zip(self.ambient.charts())
            .map(|((a, b), c)| a.product(b)?.sum(&c.relations))
            .collect::<Result<Vec<_>>>()?;
        Ok(ClosedSubscheme { ambient: self.ambient.clone(), ideals })
    }

    /// Union of closed immersions (the excessive-square pushout),
    /// modeled by the chartwise ideal intersection.
    pub fn union(&self, other: &ClosedSubscheme) -> Result<ClosedSubscheme> {
        self.check_ambient(other, "union")?;
        let ideals = self
            .ideals
            .iter()
            .zip(&other.ideals)
            .map(|(a, b)| a.intersection(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(ClosedSubscheme { ambient: self.ambient.clone(), ideals })
    }

    /// Containment `self ⊆ other` of subschemes: `I_other ⊆ I_self`.
    pub fn contained_in(&self, other: &ClosedSubscheme) -> Result<bool> {
        self.check_ambient(other, "containment")?;
        for (mine, theirs) in self.ideals.iter().zip(&other.ideals) {
            if !mine.contains_ideal(theirs)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Divisor subtraction `self − d`: the chartwise ideal quotient by the
    /// divisor generator. Requires `d ⊆ self` chartwise.
    pub fn subtract_divisor(&self, d: &Divisor) -> Result<ClosedSubscheme> {
        self.check_ambient(d.subscheme(), "subtract_divisor")?;
        for (chart, (mine, theirs)) in self.ideals.iter().zip(d.subscheme().ideals()).enumerate() {
            if !theirs.contains_ideal(mine)? {
                return Err(Error::NotASubdivisor(format!(
                    "divisor not contained in the subscheme on chart {}",
                    self.ambient.chart(chart).label
                )));
            }
        }
        let ideals = self
            .ideals
            .iter()
            .zip(d.gens())
            .map(|(i, g)| i.quotient(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(ClosedSubscheme { ambient: self.ambient.clone(), ideals })
    }

    /// Minimal generators of the chart ideal modulo the chart relations:
    /// the reduced basis, with elements that die in the chart quotient
    /// dropped, then greedily filtered (ascending by leading monomial) so
    /// no kept generator lies in the ideal spanned by the earlier ones
    /// plus relations. Deterministic.
    pub fn min_gens(&self, chart: usize) -> Result<Vec<Polynomial>> {
        let c = self.ambient.chart(chart);
        let mut cands: Vec<Polynomial> = Vec::new();
        for g in self.ideals[chart].groebner() {
            if !c.relations.contains(g)? {
                cands.push(g.clone());
            }
        }
        // ascending by leading monomial in the default order
        cands.reverse();
        let mut kept: Vec<Polynomial> = Vec::new();
        for g in cands {
            let mut gens = c.relations.gens().to_vec();
            gens.extend(kept.iter().cloned());
            let span = Ideal::new(&c.ring, gens)?;
            if !span.contains(&g)? {
                kept.push(g);
            }
        }
        // prune: drop any generator lying in the span of the others
        // (a later, larger generator can absorb an earlier one through
        // the relations)
        let mut i = 0;
        while i < kept.len() {
            let mut gens = c.relations.gens().to_vec();
            gens.extend(kept.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()));
            let span = Ideal::new(&c.ring, gens)?;
            if span.contains(&kept[i])? {
                kept.remove(i);
            } else {
                i += 1;
            }
        }
        Ok(kept)
    }

    /// The subscheme as an atlas in its own right: chart relations are
    /// enlarged by the subscheme ideals, empty charts dropped, gluings
    /// inherited.
    pub fn as_atlas(&self) -> Result<Atlas> {
        self.ambient.with_relations(&self.ideals)?.drop_empty_charts()
    }

    /// Checks chartwise compatibility on overlaps: for every gluing, the
    /// two restrictions agree after localization (saturation by the
    /// multiplier). Returns failure notes.
    pub fn verify_compatible(&self) -> Result<Vec<String>> {
        let mut notes = Vec::new();
        for g in self.ambient.gluings() {
            let lchart = self.ambient.chart(g.left);
            let (lring, lrel, _) = lchart.localized(&g.left_mult)?;
            let mult_l = g.left_mult.embed_by_name(&lring)?;
            // my ideal, localized
            let mine = self.ideals[g.left]
                .embed_by_name(&lring)?
                .sum(&lrel)?
                .saturation(&mult_l)?;
            // the other side, pulled through the transition
            let rchart = self.ambient.chart(g.right);
            let (rring, _, _) = rchart.localized(&g.right_mult)?;
            let mut pulled_gens = Vec::new();
            for gen in self.ideals[g.right].gens() {
                let img = g.right_to_left.apply(&gen.embed_by_name(&rring)?)?;
                pulled_gens.push(img);
            }
            let pulled = Ideal::new(&lring, pulled_gens)?
                .sum(&lrel)?
                .saturation(&mult_l)?;
            if !mine.equals(&pulled)? {
                notes.push(format!(
                    "subscheme ideals disagree on overlap {} ~ {}",
                    lchart.label, rchart.label
                ));
            }
        }
        Ok(notes)
    }
}

/// An effective Cartier divisor: a subscheme cut out chartwise by one
/// generator that is a nonzerodivisor modulo the chart relations.
#[derive(Clone, Debug)]
pub struct Divisor {
    sub: ClosedSubscheme,
    gens: Vec<Polynomial>,
}

impl Divisor {
    /// Divisor from one generator per chart; validates principality
    /// (trivially true by construction) and the nonzerodivisor condition.
    pub fn new(ambient: &Atlas, gens: Vec<Polynomial>) -> Result<Divisor> {
        if gens.len() != ambient.charts().len() {
            return Err(Error::Dimension("one divisor generator per chart".into()));
        }
        let mut ideals = Vec::new();
        for (c, g) in ambient.charts().iter().zip(&gens) {
            if **g.ring() != *c.ring {
                return Err(Error::RingMismatch(format!(
                    "divisor generator on chart {} lives in a foreign ring",
                    c.label
                )));
            }
            if g.is_zero() {
                return Err(Error::InvalidInput(format!(
                    "zero divisor generator on chart {}",
                    c.label
                )));
            }
            if !c.is_empty() && !is_nonzerodivisor(g, &c.relations)? {
                return Err(Error::InvalidInput(format!(
                    "divisor generator `{}` is a zerodivisor on chart {}",
                    g, c.label
                )));
            }
            ideals.push(Ideal::new(&c.ring, vec![g.clone()])?);
        }
        let sub = ClosedSubscheme::new(ambient, ideals)?;
        Ok(Divisor { sub, gens })
    }

    pub fn from_strs(ambient: &Atlas, gens: &[&str]) -> Result<Divisor> {
        let gens = ambient
            .charts()
            .iter()
            .zip(gens)
            .map(|(c, s)| crate::polycore::parse_polynomial(&c.ring, s))
            .collect::<Result<Vec<_>>>()?;
        Divisor::new(ambient, gens)
    }

    /// Checks that a subscheme is cut out by the given generators.
    pub fn from_subscheme(sub: &ClosedSubscheme, gens: Vec<Polynomial>) -> Result<Divisor> {
        let d = Divisor::new(sub.ambient(), gens)?;
        if !d.sub.same_subscheme(sub)? {
            return Err(Error::InvalidInput(
                "subscheme is not principal on the given generators".into(),
            ));
        }
        Ok(d)
    }

    pub fn subscheme(&self) -> &ClosedSubscheme {
        &self.sub
    }

    pub fn ambient(&self) -> &Atlas {
        self.sub.ambient()
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn gen(&self, chart: usize) -> &Polynomial {
        &self.gens[chart]
    }

    /// Empty divisor (unit generator in every chart).
    pub fn is_empty(&self) -> bool {
        self.sub.is_empty()
    }

    /// Sum of divisors: the product of generators chartwise.
    pub fn add(&self, other: &Divisor) -> Result<Divisor> {
        if self.ambient() != other.ambient() {
            return Err(Error::RingMismatch("divisor sum: ambient atlases differ".into()));
        }
        let gens = self
            .gens
            .iter()
            .zip(&other.gens)
            .map(|(a, b)| a * b)
            .collect();
        Divisor::new(self.ambient(), gens)
    }

    pub fn as_atlas(&self) -> Result<Atlas> {
        self.sub.as_atlas()
    }
}
