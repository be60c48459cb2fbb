//! Excessivity checks: the classical (ideal-generation) shadow.

use crate::geom::{Atlas, ClosedSubscheme};
use crate::{Error, Result};

/// A commutative square of closed immersions
///
/// ```text
///   W ──> Z
///   │     │
///   v     v
///   Y ──> X
/// ```
///
/// with the containments validated at construction.
#[derive(Clone, Debug)]
pub struct ExcessiveSquare {
    pub ambient: Atlas,
    pub w: ClosedSubscheme,
    pub z: ClosedSubscheme,
    pub y: ClosedSubscheme,
}

impl ExcessiveSquare {
    pub fn new(
        ambient: &Atlas,
        w: ClosedSubscheme,
        z: ClosedSubscheme,
        y: ClosedSubscheme,
    ) -> Result<ExcessiveSquare> {
        for (name, sub) in [("W", &w), ("Z", &z), ("Y", &y)] {
            if sub.ambient() != ambient {
                return Err(Error::InvalidDiagram(format!("{name} lives on a different atlas")));
            }
        }
        if !w.contained_in(&z)? {
            return Err(Error::InvalidDiagram("W is not contained in Z".into()));
        }
        if !w.contained_in(&y)? {
            return Err(Error::InvalidDiagram("W is not contained in Y".into()));
        }
        Ok(ExcessiveSquare { ambient: ambient.clone(), w, z, y })
    }

    /// The square with Y and Z swapped.
    pub fn transposed(&self) -> ExcessiveSquare {
        ExcessiveSquare {
            ambient: self.ambient.clone(),
            w: self.w.clone(),
            z: self.y.clone(),
            y: self.z.clone(),
        }
    }
}

/// Classical excessivity of the square: the restriction of I_Y to Z
/// generates I_{W/Z}, chartwise `I_Y + I_Z = I_W` (and symmetrically,
/// which the same equality covers).
pub fn excessive_check_square(sq: &ExcessiveSquare) -> Result<bool> {
    for chart in 0..sq.ambient.charts().len() {
        let sum = sq.y.ideal(chart).sum(sq.z.ideal(chart))?;
        if !sum.equals(sq.w.ideal(chart))? {
            return Ok(false);
        }
    }
    Ok(true)
}
