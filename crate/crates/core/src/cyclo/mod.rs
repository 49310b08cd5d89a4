//! Exact arithmetic in Q(ζ_4r) for odd r, and the constants of the SO(3) theory.

mod field;
mod laurent;
mod level;
mod scalar;

pub use field::{cyclotomic_poly, field, CycloField};
pub use laurent::LaurentPoly;
pub use level::{embed_a, eta, kappa, quantum_int, sqrt_minus_r, Level};
pub use scalar::CycloScalar;
