//! Oriented link diagrams in PD form, framed links, blackboard cabling and knot tables.

mod cable;
mod diagram;
mod framed;
mod record;

pub(crate) use diagram::UnionFind;
pub use cable::{cable, cable_components};
pub use diagram::{parse_pd, ArcEnds, PlanarDiagram, Slot};
pub use framed::{one_over_k_presentation, signature, FramedLink};
pub use record::{bundled_csv, bundled_table, read_records, KnotRecord, MalformedRow};
