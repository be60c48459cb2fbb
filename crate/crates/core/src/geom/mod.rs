//! Chart-atlas model of schemes.
//!
//! An [`Atlas`] is a finite list of affine charts with distinguished-open
//! gluings; [`ClosedSubscheme`]s carry one ideal per chart and
//! [`Divisor`]s are chartwise principal with nonzerodivisor witnesses.
//! Standard spaces, twisted-sum bundles, open complements, conormal
//! presentations and candidate-isomorphism checking live here too.

mod atlas;
mod bundle;
mod complement;
mod compose;
mod conormal;
mod iso;
mod spaces;
mod subscheme;

pub use atlas::{Atlas, Chart, Gluing};
pub use bundle::{bundle_proj, bundle_total, ProjBundle, TotalSpace, TwistedSum};
pub use complement::{open_complement_divisor, open_complement_family};
pub use compose::{close_gluings, compose_gluings};

pub(crate) mod compose_support {
    pub(crate) use super::compose::clear_denominator;
}
pub use conormal::{conormal_presentation, ConormalPresentation};
pub use iso::{check_iso, check_morphism, ChartPairing, Correspondence, IsoReport, MorphismData};
pub use spaces::{
    affine_names, affine_space, affine_with, product, projective_space, BaseSpace, ProductAtlas,
};
pub use subscheme::{ClosedSubscheme, Divisor};
