//! The blowup engine: Rees-algebra charts, exceptional divisors, total
//! and strict transforms, excessivity checks, poset blowups of lattice
//! diagrams, and pushout-blowups of excessive squares.

mod blow;
mod conormal_strict;
mod excessive;
mod lattice;
mod poset;
mod pushout;
mod transform;

pub use blow::{blow_up, BlowupResult};
pub use conormal_strict::{conormal_of_strict_transform, StrictConormal};
pub use excessive::{excessive_check_square, ExcessiveSquare};
pub use lattice::{excessive_check_lattice, Lattice, PosetDiagram};
pub use poset::{
    poset_blow_up, verify_poset_disjointness, verify_poset_products, verify_poset_structure,
    PosetBlowupResult, StepLog,
};
pub use pushout::{pushout_blow_up, PushoutBlowupResult, PushoutOrder};
pub use transform::{
    division_multiplicities, divisor_transform, strict_transform, total_transform, StrictMode,
};
