//! A symbolic kernel for chart-level blowup calculus over the rationals.
//!
//! The crate models schemes as finite chart atlases with distinguished-open
//! gluings, and provides exact machinery to compute and verify blowup
//! identities on concrete polynomial examples:
//!
//! * [`polycore`] — exact multivariate polynomial arithmetic over ℚ with
//!   pluggable monomial orders and the multivariate division algorithm.
//! * [`idealcalc`] — Gröbner bases (Buchberger) and the ideal calculus:
//!   sums, products, intersections, quotients, saturations, elimination,
//!   nonzerodivisor tests and pullbacks along ring maps.
//! * [`geom`] — chart atlases, closed subschemes, divisors, twisted-sum
//!   bundles V(E) and P(E), open complements, conormal presentations and
//!   candidate-isomorphism checking.
//! * [`blowup`] — Rees-algebra blowup charts, total and strict transforms,
//!   excessivity checks, poset blowups of lattice diagrams and
//!   pushout-blowups of excessive squares.
//! * [`deform`] — deformation-to-the-normal-cone spaces: single, multiple
//!   (poset tower) and composite (four pushout-blowups).
//! * [`catalog`] — the registered identity checks, runnable one by one or
//!   as a suite, with machine-readable reports.
//!
//! Everything is immutable and pure; chartwise work can run in parallel,
//! capped by the `BLOWUP_CALC_THREADS` environment variable.

pub mod blowup;
pub mod catalog;
pub mod deform;
mod error;
pub mod geom;
pub mod idealcalc;
pub mod par;
pub mod polycore;
pub mod report;

pub use error::{Error, Result};
