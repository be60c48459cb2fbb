//! Total and strict transforms through a blowup.

use super::blow::BlowupResult;
use crate::geom::{ClosedSubscheme, Divisor};
use crate::idealcalc::{divide_mod, invert_mod};
use crate::Result;

/// Strict-transform strategies: the classical saturation, or a single
/// divisor subtraction (one ideal quotient by the exceptional).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrictMode {
    QuotientOnce,
    Saturate,
}

/// Total transform: the pullback of the subscheme ideal along the
/// projection, chart by chart.
pub fn total_transform(b: &BlowupResult, z: &ClosedSubscheme) -> Result<ClosedSubscheme> {
    let mut ideals = Vec::new();
    for (rc, chart) in b.result.charts().iter().enumerate() {
        let src = b.source_chart[rc];
        ideals.push(z.ideal(src).embed_by_name(&chart.ring)?);
    }
    ClosedSubscheme::new(&b.result, ideals)
}

/// Strict transform of `z` through the blowup.
pub fn strict_transform(
    b: &BlowupResult,
    z: &ClosedSubscheme,
    mode: StrictMode,
) -> Result<ClosedSubscheme> {
    let total = total_transform(b, z)?;
    match mode {
        StrictMode::QuotientOnce => total.subtract_divisor(&b.exceptional),
        StrictMode::Saturate => {
            let ideals = total
                .ideals()
                .iter()
                .zip(b.exceptional.gens())
                .map(|(i, g)| i.saturation(g))
                .collect::<Result<Vec<_>>>()?;
            ClosedSubscheme::new(&b.result, ideals)
        }
    }
}

/// Strict transform of a divisor: the pulled-back generator divided by
/// the exceptional generator as often as it exactly divides. Stays a
/// divisor with an explicit generator.
pub fn divisor_transform(b: &BlowupResult, d: &Divisor) -> Result<Divisor> {
    let mut gens = Vec::new();
    for (rc, chart) in b.result.charts().iter().enumerate() {
        let src = b.source_chart[rc];
        let mut g = d.gen(src).embed_by_name(&chart.ring)?;
        let exc = b.exceptional.gen(rc);
        if invert_mod(exc, &chart.relations).is_none() {
            let mut steps = 0;
            while let Some(h) = divide_mod(&g, exc, &chart.relations) {
                g = h;
                steps += 1;
                if steps > 64 {
                    return Err(crate::Error::InvalidInput(
                        "divisor transform does not stabilize".into(),
                    ));
                }
            }
        }
        gens.push(chart.relations.normal_form(&g)?.monic_or_self());
    }
    Divisor::new(&b.result, gens)
}

trait MonicOrSelf {
    fn monic_or_self(self) -> Self;
}
impl MonicOrSelf for crate::polycore::Polynomial {
    fn monic_or_self(self) -> Self {
        if self.is_zero() {
            self
        } else {
            self.monic()
        }
    }
}

/// Multiplicity data for conormal twists: how many times the exceptional
/// generator divides each pulled-back center generator, per chart.
pub fn division_multiplicities(
    b: &BlowupResult,
    gens_per_source: &[Vec<crate::polycore::Polynomial>],
) -> Result<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    for (rc, chart) in b.result.charts().iter().enumerate() {
        let src = b.source_chart[rc];
        let exc = b.exceptional.gen(rc);
        let mut row = Vec::new();
        for g in &gens_per_source[src] {
            let mut g = g.embed_by_name(&chart.ring)?;
            let mut mult = 0u32;
            if invert_mod(exc, &chart.relations).is_none() {
                while let Some(h) = divide_mod(&g, exc, &chart.relations) {
                    g = h;
                    mult += 1;
                    if mult > 64 {
                        break;
                    }
                }
            }
            row.push(mult);
        }
        out.push(row);
    }
    Ok(out)
}
