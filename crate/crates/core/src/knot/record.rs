use std::io::Read;

use serde::Deserialize;

use super::diagram::{parse_pd, PlanarDiagram};
use crate::error::{Error, Result};

const BUNDLED: &str = include_str!("../../data/prime_knots_le9.csv");

/// One row of a knot table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    pub pd: PlanarDiagram,
    pub crossing_number: u32,
    pub genus: Option<u32>,
    pub thickness: Option<u32>,
    pub prime: Option<bool>,
}

#[derive(Deserialize)]
struct Row {
    name: String,
    pd: String,
    crossings: u32,
    genus: Option<u32>,
    thickness: Option<u32>,
    prime: Option<bool>,
}

/// A row that could not be turned into a [`KnotRecord`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MalformedRow {
    pub line: u64,
    pub name: Option<String>,
    pub error: String,
}

impl KnotRecord {
    fn from_row(row: Row) -> Result<Self> {
        let pd = if row.pd.trim().is_empty() { PlanarDiagram::unknot() } else { parse_pd(&row.pd)? };
        if pd.component_count() != 1 {
            return Err(Error::NotAKnot(pd.component_count()));
        }
        Ok(Self {
            name: row.name,
            pd,
            crossing_number: row.crossings,
            genus: row.genus,
            thickness: row.thickness,
            prime: row.prime,
        })
    }
}

/// Read `name,pd,crossings,genus,thickness,prime` rows. Empty optional cells are `None`;
/// an empty PD is the unknot. Bad rows are collected rather than aborting the read.
pub fn read_records<R: Read>(input: R) -> Result<(Vec<KnotRecord>, Vec<MalformedRow>)> {
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(input);
    let mut good = Vec::new();
    let mut bad = Vec::new();
    for result in reader.records() {
        let raw = match result {
            Ok(r) => r,
            Err(e) if e.is_io_error() => return Err(e.into()),
            Err(e) => {
                let line = e.position().map_or(0, |p| p.line());
                bad.push(MalformedRow { line, name: None, error: e.to_string() });
                continue;
            }
        };
        let line = raw.position().map_or(0, |p| p.line());
        let name = raw.get(0).map(str::to_string);
        match raw.deserialize::<Row>(None).map_err(Error::from).and_then(KnotRecord::from_row) {
            Ok(rec) => good.push(rec),
            Err(e) => bad.push(MalformedRow { line, name, error: e.to_string() }),
        }
    }
    Ok((good, bad))
}

/// The bundled table of prime knots with at most nine crossings.
pub fn bundled_table() -> Vec<KnotRecord> {
    let (good, bad) = read_records(BUNDLED.as_bytes()).expect("bundled table is readable");
    assert!(bad.is_empty(), "bundled table has malformed rows: {bad:?}");
    good
}

pub fn bundled_csv() -> &'static str {
    BUNDLED
}
