//! Iterated blowups of excessive lattice diagrams.

use std::collections::BTreeMap;

use super::blow::{blow_up, BlowupResult};
use super::lattice::{excessive_check_lattice, PosetDiagram};
use super::transform::{divisor_transform, strict_transform, StrictMode};
use crate::geom::{Atlas, ClosedSubscheme, Divisor};
use crate::{Error, Result};

/// One step of an iterated blowup tower, for reports.
#[derive(Clone, Debug)]
pub struct StepLog {
    pub center_label: String,
    /// Per source chart: (chart label, center generators).
    pub center_gens: Vec<(String, Vec<String>)>,
}

/// The result of blowing up a lattice diagram along a linear extension:
/// the final atlas, one strict exceptional divisor per element below the
/// top, composite exceptionals (total pullbacks of the centers), and the
/// tower log.
#[derive(Clone, Debug)]
pub struct PosetBlowupResult {
    pub atlas: Atlas,
    /// Elements of Π = L∖{top} in the order they were blown up.
    pub order_used: Vec<usize>,
    /// Strict exceptional divisors, keyed by lattice element index.
    pub strict_exceptionals: BTreeMap<usize, Divisor>,
    /// Total pullbacks of the diagram subschemes, keyed by element index.
    pub composite_exceptionals: BTreeMap<usize, ClosedSubscheme>,
    /// Per final chart, the chart of the original ambient it lies over.
    pub orig_chart: Vec<usize>,
    pub tower: Vec<StepLog>,
}

impl PosetBlowupResult {
    pub fn strict_exceptional(&self, element: usize) -> &Divisor {
        &self.strict_exceptionals[&element]
    }
}

fn log_step(label: &str, b: &BlowupResult) -> StepLog {
    StepLog {
        center_label: label.to_string(),
        center_gens: b
            .source
            .charts()
            .iter()
            .zip(&b.center_gens)
            .map(|(c, gens)| {
                (c.label.clone(), gens.iter().map(|g| g.to_string()).collect())
            })
            .collect(),
    }
}

/// Blows up the diagram along the deterministic linear extension of
/// Π = L∖{top}, ascending by (rank, element index). At each step the
/// current strict transform of the element's subscheme is blown up;
/// earlier exceptionals are carried forward as divisor strict transforms.
pub fn poset_blow_up(d: &PosetDiagram) -> Result<PosetBlowupResult> {
    if !excessive_check_lattice(d)? {
        return Err(Error::InvalidDiagram("the lattice diagram is not excessive".into()));
    }
    let top = d.lattice.maximum();
    let mut order: Vec<usize> = (0..d.lattice.len()).filter(|&p| p != top).collect();
    order.sort_by_key(|&p| (d.lattice.rank(p), p));

    let mut atlas = d.ambient.clone();
    let mut orig_chart: Vec<usize> = (0..atlas.charts().len()).collect();
    let mut transforms: BTreeMap<usize, ClosedSubscheme> =
        order.iter().map(|&p| (p, d.assign[p].clone())).collect();
    let mut exceptionals: BTreeMap<usize, Divisor> = BTreeMap::new();
    let mut tower = Vec::new();

    for (step, &p) in order.iter().enumerate() {
        let center = transforms[&p].clone();
        let b = blow_up(&atlas, &center)?;
        tower.push(log_step(d.lattice.name(p), &b));
        orig_chart = b.source_chart.iter().map(|&s| orig_chart[s]).collect();
        for &q in order.iter().skip(step + 1) {
            let t = strict_transform(&b, &transforms[&q], StrictMode::Saturate)?;
            transforms.insert(q, t);
        }
        for e in exceptionals.values_mut() {
            *e = divisor_transform(&b, e)?;
        }
        exceptionals.insert(p, b.exceptional.clone());
        atlas = b.result.clone();
    }

    // composite exceptionals: total pullbacks of the original subschemes
    let mut composite = BTreeMap::new();
    for &p in &order {
        let mut ideals = Vec::new();
        for (fc, chart) in atlas.charts().iter().enumerate() {
            ideals.push(d.assign[p].ideal(orig_chart[fc]).embed_by_name(&chart.ring)?);
        }
        composite.insert(p, ClosedSubscheme::new(&atlas, ideals)?);
    }

    Ok(PosetBlowupResult {
        atlas,
        order_used: order,
        strict_exceptionals: exceptionals,
        composite_exceptionals: composite,
        orig_chart,
        tower,
    })
}

/// Each composite exceptional ideal (the total pullback of its center)
/// equals the product of the strict exceptional ideals below it,
/// chartwise. Returns failure notes.
pub fn verify_poset_products(d: &PosetDiagram, r: &PosetBlowupResult) -> Result<Vec<String>> {
    let mut notes = Vec::new();
    for &p in &r.order_used {
        let composite = &r.composite_exceptionals[&p];
        for (fc, chart) in r.atlas.charts().iter().enumerate() {
            let mut prod = crate::polycore::Polynomial::one(&chart.ring);
            for &q in &r.order_used {
                if d.lattice.leq(q, p) {
                    prod = &prod * r.strict_exceptionals[&q].gen(fc);
                }
            }
            let expect = crate::idealcalc::Ideal::new(&chart.ring, vec![prod])?
                .sum(&chart.relations)?;
            if !expect.equals(composite.ideal(fc))? {
                notes.push(format!(
                    "composite exceptional over `{}` is not the product of strict ones on chart {}",
                    d.lattice.name(p),
                    chart.label
                ));
            }
        }
    }
    Ok(notes)
}

/// Incomparable strict exceptionals are disjoint (unit ideal sums),
/// chartwise. Returns failure notes.
pub fn verify_poset_disjointness(d: &PosetDiagram, r: &PosetBlowupResult) -> Result<Vec<String>> {
    let mut notes = Vec::new();
    for &p in &r.order_used {
        for &q in &r.order_used {
            if p < q && !d.lattice.leq(p, q) && !d.lattice.leq(q, p) {
                let sum = r.strict_exceptionals[&p]
                    .subscheme()
                    .intersect(r.strict_exceptionals[&q].subscheme())?;
                if !sum.is_empty() {
                    notes.push(format!(
                        "strict exceptionals over `{}` and `{}` are not disjoint",
                        d.lattice.name(p),
                        d.lattice.name(q)
                    ));
                }
            }
        }
    }
    Ok(notes)
}

/// Both structural claims of the representability theorem.
pub fn verify_poset_structure(d: &PosetDiagram, r: &PosetBlowupResult) -> Result<Vec<String>> {
    let mut notes = verify_poset_products(d, r)?;
    notes.extend(verify_poset_disjointness(d, r)?);
    Ok(notes)
}
