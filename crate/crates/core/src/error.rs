use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("level must be an odd integer >= 3, got {0}")]
    InvalidLevel(i64),

    #[error("level must be an odd prime >= 5, got {0}")]
    InvalidPrimeLevel(i64),

    #[error("Galois twist {twist} is not coprime to 2r = {two_r}")]
    InvalidTwist { twist: i64, two_r: i64 },

    #[error("scalars live at different levels ({0} vs {1})")]
    LevelMismatch(u32, u32),

    #[error("color {color} out of range 1..={max}")]
    ColorOutOfRange { color: usize, max: usize },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("arc {arc} appears {count} times (expected exactly 2)")]
    ArcMultiplicity { arc: u32, count: usize },

    #[error("inconsistent orientation along the component through arc {0}")]
    Orientation(u32),

    #[error("expected a one-component diagram, found {0} components")]
    NotAKnot(usize),

    #[error("framing list has {got} entries but the link has {expected} components")]
    FramingCount { expected: usize, got: usize },

    #[error("slope {p}/{q} is not reduced")]
    InvalidSlope { p: i64, q: i64 },

    #[error("computation exceeded its time budget")]
    Timeout,

    #[error("invalid run configuration: {0}")]
    Config(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}
