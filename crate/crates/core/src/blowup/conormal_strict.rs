//! Conormal presentations of strict transforms in excessive squares.

use super::blow::BlowupResult;
use super::excessive::{excessive_check_square, ExcessiveSquare};
use super::transform::{division_multiplicities, strict_transform, StrictMode};
use crate::geom::{conormal_presentation, ClosedSubscheme, ConormalPresentation};
use crate::{Error, Result};

/// The conormal data of the strict transform of Z inside Bl_Y X: the
/// strict transform itself, a conormal presentation per chart, and the
/// exceptional-division multiplicities of the pulled-back generators of
/// I_Z (the visible trace of the exceptional twist).
#[derive(Clone, Debug)]
pub struct StrictConormal {
    pub strict: ClosedSubscheme,
    pub per_chart: Vec<ConormalPresentation>,
    /// Per result chart, per minimal generator of I_Z on the chart below:
    /// how often the exceptional generator divides its pullback.
    pub twist_multiplicities: Vec<Vec<u32>>,
}

/// For an excessive square and the blowup of X along Y, presents the
/// conormal module of the strict transform of Z chart by chart.
pub fn conormal_of_strict_transform(
    sq: &ExcessiveSquare,
    b: &BlowupResult,
) -> Result<StrictConormal> {
    if !excessive_check_square(sq)? {
        return Err(Error::InvalidDiagram("the square is not excessive".into()));
    }
    if b.source != sq.ambient || !b.center.same_subscheme(&sq.y)? {
        return Err(Error::InvalidDiagram(
            "the blowup is not the blowup of the square's lower-left leg".into(),
        ));
    }
    let strict = strict_transform(b, &sq.z, StrictMode::Saturate)?;
    let per_chart = (0..b.result.charts().len())
        .map(|c| conormal_presentation(&strict, c))
        .collect::<Result<Vec<_>>>()?;
    let z_gens = (0..sq.ambient.charts().len())
        .map(|c| sq.z.min_gens(c))
        .collect::<Result<Vec<_>>>()?;
    let twist_multiplicities = division_multiplicities(b, &z_gens)?;
    Ok(StrictConormal { strict, per_chart, twist_multiplicities })
}
