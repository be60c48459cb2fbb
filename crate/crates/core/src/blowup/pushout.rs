//! Pushout-blowups of excessive squares: the three-step tower
//! `Bl_{Bl_{E_W·first}((E_first X)_W)} Bl_{Bl_W·second} Bl_first X` with
//! its three strict exceptional divisors.

use super::blow::blow_up;
use super::excessive::{excessive_check_square, ExcessiveSquare};
use super::poset::StepLog;
use super::transform::{divisor_transform, strict_transform, total_transform, StrictMode};
use crate::geom::{Atlas, ClosedSubscheme, Divisor};
use crate::idealcalc::Ideal;
use crate::polycore::Polynomial;
use crate::{Error, Result};

/// Which leg of the square is blown up first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PushoutOrder {
    ZFirst,
    YFirst,
}

/// The pushout-blowup: the final atlas with the strict exceptional
/// divisors over Y, Z and W.
#[derive(Clone, Debug)]
pub struct PushoutBlowupResult {
    pub atlas: Atlas,
    pub e_y: Divisor,
    pub e_z: Divisor,
    pub e_w: Divisor,
    pub order: PushoutOrder,
    /// Per final chart, the chart of the original ambient it lies over.
    pub orig_chart: Vec<usize>,
    pub tower: Vec<StepLog>,
}

pub fn pushout_blow_up(sq: &ExcessiveSquare, order: PushoutOrder) -> Result<PushoutBlowupResult> {
    if !excessive_check_square(sq)? {
        return Err(Error::InvalidDiagram("the square is not excessive".into()));
    }
    let (first, second) = match order {
        PushoutOrder::ZFirst => (&sq.z, &sq.y),
        PushoutOrder::YFirst => (&sq.y, &sq.z),
    };

    let mut tower = Vec::new();

    // Step 1: blow up the first leg.
    let b1 = blow_up(&sq.ambient, first)?;
    tower.push(super_log("step1", &b1));
    let e1 = b1.exceptional.clone();

    // Step 2: blow up the strict transform of the second leg (its blowup
    // along W, realized inside the tower).
    let second_strict = strict_transform(&b1, second, StrictMode::Saturate)?;
    let b2 = blow_up(&b1.result, &second_strict)?;
    tower.push(super_log("step2", &b2));
    let e2 = b2.exceptional.clone();
    let e1 = divisor_transform(&b2, &e1)?;

    // Step 3: blow up the strict transform of the first exceptional
    // restricted over W.
    let e1_over_w = {
        let w_total = total_transform(&b1, &sq.w)?;
        // before step 2: (exceptional of step 1) ∩ (preimage of W)
        let before: ClosedSubscheme = b1.exceptional.subscheme().intersect(&w_total)?;
        strict_transform(&b2, &before, StrictMode::Saturate)?
    };
    let b3 = blow_up(&b2.result, &e1_over_w)?;
    tower.push(super_log("step3", &b3));
    let e_w = b3.exceptional.clone();
    let e2 = divisor_transform(&b3, &e2)?;
    let e1 = divisor_transform(&b3, &e1)?;

    let orig_chart: Vec<usize> = b3
        .source_chart
        .iter()
        .map(|&c2| b1.source_chart[b2.source_chart[c2]])
        .collect();

    let (e_z, e_y) = match order {
        PushoutOrder::ZFirst => (e1, e2),
        PushoutOrder::YFirst => (e2, e1),
    };

    Ok(PushoutBlowupResult { atlas: b3.result, e_y, e_z, e_w, order, orig_chart, tower })
}

fn super_log(label: &str, b: &super::blow::BlowupResult) -> StepLog {
    StepLog {
        center_label: label.to_string(),
        center_gens: b
            .source
            .charts()
            .iter()
            .zip(&b.center_gens)
            .map(|(c, gens)| (c.label.clone(), gens.iter().map(|g| g.to_string()).collect()))
            .collect(),
    }
}

impl PushoutBlowupResult {
    /// The three surjectivity conditions of the defining cube, as
    /// chartwise ideal equalities:
    /// `I_Y·O = (e_y·e_w)`, `I_Z·O = (e_z·e_w)`, and
    /// `I_{Y⊔_W Z}·O = (e_y·e_z·e_w)` with the pushout modeled by the
    /// ideal intersection. Returns failure notes.
    pub fn verify_cube_conditions(&self, sq: &ExcessiveSquare) -> Result<Vec<String>> {
        let mut notes = Vec::new();
        let union = sq.y.union(&sq.z)?;
        let conds: [(&str, &ClosedSubscheme, Vec<&Divisor>); 3] = [
            ("Y", &sq.y, vec![&self.e_y, &self.e_w]),
            ("Z", &sq.z, vec![&self.e_z, &self.e_w]),
            ("Y⊔Z", &union, vec![&self.e_y, &self.e_z, &self.e_w]),
        ];
        for (name, sub, divisors) in conds {
            for (fc, chart) in self.atlas.charts().iter().enumerate() {
                let pulled = sub
                    .ideal(self.orig_chart[fc])
                    .embed_by_name(&chart.ring)?
                    .sum(&chart.relations)?;
                let mut prod = Polynomial::one(&chart.ring);
                for d in &divisors {
                    prod = &prod * d.gen(fc);
                }
                let expect = Ideal::new(&chart.ring, vec![prod])?.sum(&chart.relations)?;
                if !pulled.equals(&expect)? {
                    notes.push(format!(
                        "cube condition for {name} fails on chart {}",
                        chart.label
                    ));
                }
            }
        }
        Ok(notes)
    }

    /// Which pairs of strict exceptionals meet, and in how many charts:
    /// the incidence fingerprint compared across recipe orders.
    pub fn incidence(&self) -> Result<Vec<(String, usize)>> {
        let named: [(&str, &Divisor); 3] =
            [("E'Y", &self.e_y), ("E'Z", &self.e_z), ("E'W", &self.e_w)];
        let mut out = Vec::new();
        for i in 0..3 {
            for j in (i + 1)..3 {
                let meet = named[i].1.subscheme().intersect(named[j].1.subscheme())?;
                let charts = meet
                    .ideals()
                    .iter()
                    .filter(|ideal| !ideal.is_unit())
                    .count();
                out.push((format!("{}∩{}", named[i].0, named[j].0), charts));
            }
        }
        let triple = self
            .e_y
            .subscheme()
            .intersect(self.e_z.subscheme())?
            .intersect(self.e_w.subscheme())?;
        out.push((
            "E'Y∩E'Z∩E'W".to_string(),
            triple.ideals().iter().filter(|i| !i.is_unit()).count(),
        ));
        Ok(out)
    }
}
