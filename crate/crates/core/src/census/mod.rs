//! Batch screening of knot tables.

mod cache;
mod constants;
mod run;

pub use cache::CableStore;
pub use constants::show_constants;
pub use run::{run, run_csv, run_records, summarize, MalformedEntry, Report, RunConfig, RunSettings, Summary};
