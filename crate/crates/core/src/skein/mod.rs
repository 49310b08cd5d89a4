//! Kauffman bracket evaluation, colored brackets, classical polynomials and the
//! surgery-presentation invariant.

mod bracket;
mod classical;
mod colored;

pub use bracket::{bracket_until, kauffman_bracket, loop_value, naive_bracket};
pub use classical::{
    alexander_polynomial, finite_type_filters, finite_type_from, framing_factor, jones_from_bracket,
    jones_polynomial,
};
pub use colored::{
    cable_brackets, chebyshev, colored_bracket, colored_bracket_at, colored_bracket_from_cables,
    normalized_colored_jones_at, omega_bracket, omega_bracket_at, omega_coefficients, rt_invariant,
    rt_invariant_at, ChebyshevColor,
};
