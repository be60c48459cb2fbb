//! Exact multivariate polynomial arithmetic over ℚ.
//!
//! Coefficients are arbitrary-precision rationals ([`Coeff`]), always reduced
//! to lowest terms with positive denominator. Polynomials are sparse term
//! lists kept sorted descending in their ring's default monomial order, so
//! equal polynomials have equal representations and serialization is stable.

mod divide;
mod monomial;
mod order;
mod parse;
mod poly;
mod ring;

pub use divide::{divide, DivisionResult};
pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind};
pub use parse::parse_polynomial;
pub use poly::Polynomial;
pub use ring::{PolyRing, RingRef};

/// Coefficient field: arbitrary-precision rationals.
pub type Coeff = num_rational::BigRational;

/// Renders a coefficient as `num` or `num/den`.
pub fn coeff_to_string(c: &Coeff) -> String {
    use num_traits::One;
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}
