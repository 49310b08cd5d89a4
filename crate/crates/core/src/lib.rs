//! Exact SO(3) Witten–Reshetikhin–Turaev invariants of knot surgeries, and
//! obstructions to purely cosmetic surgeries built on them.
//!
//! The crate is layered bottom-up:
//!
//! * [`cyclo`]: exact arithmetic in Q(ζ_4r) and the level constants [n], η_r, κ_r.
//! * [`knot`]: PD-code diagrams, framed links, cables and census records.
//! * [`skein`]: Kauffman bracket evaluation, colored brackets, Jones/Alexander
//!   polynomials and the surgery-presentation invariant.
//! * [`tqft`]: the torus TQFT, extended mapping classes and surgery formulas.
//! * [`obstruction`]: the finite obstruction sets F_r and per-knot verdicts.
//! * [`census`]: batch screening of knot tables.

pub mod census;
pub mod cyclo;
pub mod error;
pub mod knot;
pub mod obstruction;
pub mod skein;
pub mod tqft;

pub use error::{Error, Result};
