//! Gröbner-basis engine and the ideal calculus.
//!
//! [`Ideal`] carries generators plus a memoized reduced basis; the
//! operations here (sum, product, intersection, quotient, saturation,
//! elimination, nonzerodivisor test, pullback along [`RingMap`]s) are the
//! algorithmic content behind every closed-immersion manipulation in the
//! rest of the crate.

mod groebner;
mod ideal;
mod ringmap;
mod syzygy;

pub use groebner::{groebner_basis, is_groebner, normal_form, reduce_basis, s_polynomial};
pub use ideal::{divide_mod, ideal_from_strs, invert_mod, is_nonzerodivisor, Ideal};
pub use ringmap::RingMap;
pub use syzygy::syzygies;
