use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::cyclo::LaurentPoly;
use crate::error::{Error, Result};
use crate::knot::KnotRecord;

/// Symbolic cable brackets keyed by knot name and PD code. They are level independent,
/// so one store serves runs at any set of levels.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CableStore {
    entries: BTreeMap<String, Vec<Vec<(i64, String)>>>,
}

fn key(rec: &KnotRecord) -> String {
    format!("{}|{}", rec.name, rec.pd.to_pd_string())
}

fn encode(p: &LaurentPoly) -> Vec<(i64, String)> {
    p.terms().map(|(e, c)| (e, c.to_string())).collect()
}

fn decode(terms: &[(i64, String)]) -> Result<LaurentPoly> {
    let mut p = LaurentPoly::zero();
    for (e, c) in terms {
        let c: BigInt = c
            .parse()
            .map_err(|_| Error::Invariant(format!("cache holds a non-integer coefficient {c:?}")))?;
        p.add_term(*e, c);
    }
    Ok(p)
}

impl CableStore {
    /// Load from `path`, or start empty when the file does not exist yet.
    pub fn load(path: &Path) -> Result<Self> {
        if !path.exists() {
            return Ok(Self::default());
        }
        Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        fs::write(path, serde_json::to_string(self)?)?;
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Cached brackets for at least `depth + 1` cables, if present.
    pub fn get(&self, rec: &KnotRecord, depth: usize) -> Result<Option<Vec<LaurentPoly>>> {
        match self.entries.get(&key(rec)) {
            Some(v) if v.len() > depth => v.iter().map(|t| decode(t)).collect::<Result<_>>().map(Some),
            _ => Ok(None),
        }
    }

    pub fn insert(&mut self, rec: &KnotRecord, cables: &[LaurentPoly]) {
        let k = key(rec);
        if self.entries.get(&k).map_or(true, |v| v.len() < cables.len()) {
            self.entries.insert(k, cables.iter().map(encode).collect());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::bundled_table;
    use crate::skein::cable_brackets;

    #[test]
    fn round_trip() {
        let rec = &bundled_table()[0];
        let cables = cable_brackets(&rec.pd, 2).unwrap();
        let mut store = CableStore::default();
        store.insert(rec, &cables);
        assert_eq!(store.get(rec, 2).unwrap().unwrap(), cables);
        assert!(store.get(rec, 3).unwrap().is_none());

        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cables.json");
        store.save(&path).unwrap();
        assert_eq!(CableStore::load(&path).unwrap(), store);
        assert!(CableStore::load(&dir.path().join("missing.json")).unwrap().is_empty());
    }
}
