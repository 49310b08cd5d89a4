//! Obstructions to purely cosmetic surgery pairs.

mod fr;
mod slopes;
mod verdict;

pub use fr::{
    check_prime_level, f_r_set, f_r_set_at, f_r_vectors, fr_hits, fr_orthogonality_report, unknot_orthogonality,
    zeta5_from_jones, zeta5_test, FrLabel,
};
pub use slopes::{candidate_slopes, unrestricted_slopes, SlopeFamily};
pub use verdict::{
    full_verdict, Conclusion, Filter, LevelHits, LevelResidues, ObstructionVerdict, Screen, Stage, Survivor,
    ALL_FILTERS,
};
