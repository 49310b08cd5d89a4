use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::fr::{check_prime_level, f_r_vectors, fr_hits, zeta5_from_jones, FrLabel};
use super::slopes::{candidate_slopes, unrestricted_slopes, SlopeFamily};
use crate::cyclo::{LaurentPoly, Level};
use crate::error::{Error, Result};
use crate::knot::{cable, KnotRecord};
use crate::skein::{alexander_polynomial, bracket_until, finite_type_from, jones_from_bracket};
use crate::tqft::{knot_vector_from_cables, TqftVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Filter {
    FiniteType,
    Slopes,
    Zeta5,
    Fr,
}

pub const ALL_FILTERS: [Filter; 4] = [Filter::FiniteType, Filter::Slopes, Filter::Zeta5, Filter::Fr];

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Filter::FiniteType => "finite_type",
            Filter::Slopes => "slopes",
            Filter::Zeta5 => "zeta5",
            Filter::Fr => "fr",
        })
    }
}

impl FromStr for Filter {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        ALL_FILTERS
            .into_iter()
            .find(|f| f.to_string() == s.trim())
            .ok_or_else(|| format!("unknown filter {s:?} (expected finite_type, zeta5, fr or slopes)"))
    }
}

/// The step of the screening that ruled a knot out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Prime,
    Delta2,
    Jones3,
    Slopes,
    Zeta5,
    Fr,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::Prime => "prime",
            Stage::Delta2 => "delta2",
            Stage::Jones3 => "jones3",
            Stage::Slopes => "slopes",
            Stage::Zeta5 => "zeta5",
            Stage::Fr => "fr",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelHits {
    pub r: u32,
    pub labels: Vec<FrLabel>,
}

/// Residues of k mod r still allowed for the unbounded {±1/k} family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelResidues {
    pub r: u32,
    pub residues: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Survivor {
    pub family: SlopeFamily,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub k_mod: Vec<LevelResidues>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Conclusion {
    Excluded { by: Stage },
    Residual { survivors: Vec<Survivor> },
    Skipped { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionVerdict {
    pub name: String,
    pub filters_applied: Vec<Filter>,
    pub delta2: Option<i64>,
    pub jones3: Option<i64>,
    pub zeta5_trivial: Option<bool>,
    pub candidate_slopes: Vec<SlopeFamily>,
    pub fr_orthogonal_hits: Vec<LevelHits>,
    pub conclusion: Conclusion,
}

impl ObstructionVerdict {
    pub fn is_excluded(&self) -> bool {
        matches!(self.conclusion, Conclusion::Excluded { .. })
    }

    pub fn is_residual(&self) -> bool {
        matches!(self.conclusion, Conclusion::Residual { .. })
    }

    pub fn excluded_by(&self) -> Option<Stage> {
        match self.conclusion {
            Conclusion::Excluded { by } => Some(by),
            _ => None,
        }
    }
}

/// Screening setup shared by every knot of a run: levels with their F_r tables,
/// selected filters and the per-knot time budget.
#[derive(Clone, Debug)]
pub struct Screen {
    filters: BTreeSet<Filter>,
    levels: Vec<(Level, Vec<(FrLabel, TqftVector)>)>,
    timeout: Option<Duration>,
}

impl Screen {
    pub fn new(levels: &[u32], filters: &[Filter], twist: i64) -> Result<Self> {
        let mut tables = Vec::new();
        for &r in levels {
            check_prime_level(r)?;
            let level = Level::with_twist(r, twist)?;
            let set = f_r_vectors(&level);
            tables.push((level, set));
        }
        Ok(Self { filters: filters.iter().copied().collect(), levels: tables, timeout: None })
    }

    pub fn with_timeout(mut self, timeout: Option<Duration>) -> Self {
        self.timeout = timeout;
        self
    }

    pub fn filters(&self) -> Vec<Filter> {
        self.filters.iter().copied().collect()
    }

    pub fn levels(&self) -> Vec<u32> {
        self.levels.iter().map(|(l, _)| l.r()).collect()
    }

    fn uses(&self, f: Filter) -> bool {
        self.filters.contains(&f)
    }

    /// Highest cable needed: the knot itself for the Jones polynomial, m - 1 copies for Z_r(E_K).
    pub fn cable_depth(&self) -> usize {
        let fr = if self.uses(Filter::Fr) {
            self.levels.iter().map(|(l, _)| l.colors() - 1).max().unwrap_or(0)
        } else {
            0
        };
        fr.max(1)
    }

    /// Brackets of the 0..=depth cables of the record's diagram, within the time budget.
    pub fn cables(&self, rec: &KnotRecord) -> Result<Vec<LaurentPoly>> {
        let deadline = self.timeout.map(|t| Instant::now() + t);
        (0..=self.cable_depth())
            .map(|n| bracket_until(&cable(&rec.pd, n)?, deadline))
            .collect()
    }

    pub fn verdict(&self, rec: &KnotRecord) -> Result<ObstructionVerdict> {
        match self.cables(rec) {
            Ok(cables) => self.verdict_from_cables(rec, &cables),
            Err(Error::Timeout) => Ok(self.skipped(rec, "timeout")),
            Err(e) => Err(e),
        }
    }

    fn skipped(&self, rec: &KnotRecord, reason: &str) -> ObstructionVerdict {
        ObstructionVerdict {
            name: rec.name.clone(),
            filters_applied: self.filters(),
            delta2: None,
            jones3: None,
            zeta5_trivial: None,
            candidate_slopes: Vec::new(),
            fr_orthogonal_hits: Vec::new(),
            conclusion: Conclusion::Skipped { reason: reason.into() },
        }
    }

    pub fn verdict_from_cables(&self, rec: &KnotRecord, cables: &[LaurentPoly]) -> Result<ObstructionVerdict> {
        if cables.len() <= self.cable_depth() {
            return Err(Error::Invariant(format!(
                "{} cable brackets supplied, {} needed",
                cables.len(),
                self.cable_depth() + 1
            )));
        }
        let d = &rec.pd;
        let jones = jones_from_bracket(d, &cables[1])?;
        let alex = alexander_polynomial(d)?;
        let (delta2, jones3) = finite_type_from(&alex, &jones);
        let zeta5 = zeta5_from_jones(&jones);
        let candidates = if self.uses(Filter::Slopes) { candidate_slopes(rec) } else { unrestricted_slopes() };

        let mut hits = Vec::new();
        if self.uses(Filter::Fr) {
            for (level, set) in &self.levels {
                let z = knot_vector_from_cables(cables, d.writhe(), level)?;
                hits.push(LevelHits { r: level.r(), labels: fr_hits(&z, set)? });
            }
        }

        let conclusion = self.conclude(rec, delta2, jones3, zeta5, &candidates, &hits);
        Ok(ObstructionVerdict {
            name: rec.name.clone(),
            filters_applied: self.filters(),
            delta2: Some(delta2),
            jones3: Some(jones3),
            zeta5_trivial: Some(zeta5),
            candidate_slopes: candidates,
            fr_orthogonal_hits: hits,
            conclusion,
        })
    }

    fn conclude(
        &self,
        rec: &KnotRecord,
        delta2: i64,
        jones3: i64,
        zeta5: bool,
        candidates: &[SlopeFamily],
        hits: &[LevelHits],
    ) -> Conclusion {
        let excluded = |by| Conclusion::Excluded { by };
        if rec.prime == Some(false) {
            return excluded(Stage::Prime);
        }
        if self.uses(Filter::FiniteType) {
            if delta2 != 0 {
                return excluded(Stage::Delta2);
            }
            if jones3 != 0 {
                return excluded(Stage::Jones3);
            }
        }
        let mut survivors: Vec<Survivor> =
            candidates.iter().map(|&family| Survivor { family, k_mod: Vec::new() }).collect();
        if survivors.is_empty() {
            return excluded(Stage::Slopes);
        }
        if self.uses(Filter::Zeta5) && !zeta5 {
            restrict(&mut survivors, 5, &[]);
            if survivors.is_empty() {
                return excluded(Stage::Zeta5);
            }
        }
        for h in hits {
            restrict(&mut survivors, h.r, &h.labels);
        }
        if survivors.is_empty() {
            return excluded(Stage::Fr);
        }
        Conclusion::Residual { survivors }
    }
}

/// Drop the slope pairs that level r rules out, given the F_r labels orthogonal to Z_r(E_K).
/// Pairs {±1/k} with r | k are never touched.
fn restrict(survivors: &mut Vec<Survivor>, r: u32, hits: &[FrLabel]) {
    survivors.retain_mut(|s| match s.family {
        SlopeFamily::Two => hits.contains(&FrLabel::Two),
        SlopeFamily::OneOver(k) => FrLabel::for_k(k, r).map_or(true, |l| hits.contains(&l)),
        SlopeFamily::AllOneOver => {
            let allowed: Vec<u32> = (0..r)
                .filter(|&res| FrLabel::for_k(res as u64, r).map_or(true, |l| hits.contains(&l)))
                .collect();
            match s.k_mod.iter_mut().find(|x| x.r == r) {
                Some(prev) => prev.residues.retain(|x| allowed.contains(x)),
                None => s.k_mod.push(LevelResidues { r, residues: allowed }),
            }
            true
        }
    });
}

/// Screen one record with every filter at the given levels.
pub fn full_verdict(rec: &KnotRecord, levels: &[u32]) -> Result<ObstructionVerdict> {
    Screen::new(levels, &ALL_FILTERS, 1)?.verdict(rec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::{parse_pd, PlanarDiagram};

    fn record(name: &str, pd: &str, c: u32, genus: Option<u32>, th: Option<u32>) -> KnotRecord {
        KnotRecord {
            name: name.into(),
            pd: if pd.is_empty() { PlanarDiagram::unknot() } else { parse_pd(pd).unwrap() },
            crossing_number: c,
            genus,
            thickness: th,
            prime: Some(true),
        }
    }

    #[test]
    fn trefoil_is_excluded_by_both_gates() {
        let t = record("3_1", "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]", 3, Some(1), Some(0));
        let v = full_verdict(&t, &[5]).unwrap();
        assert_eq!(v.delta2, Some(2));
        assert_eq!(v.excluded_by(), Some(Stage::Delta2));
        assert!(v.candidate_slopes.is_empty());

        let only_slopes = Screen::new(&[5], &[Filter::Slopes], 1).unwrap().verdict(&t).unwrap();
        assert_eq!(only_slopes.excluded_by(), Some(Stage::Slopes));
    }

    #[test]
    fn unknot_stays_residual() {
        let u = record("0_1", "", 0, None, None);
        let v = full_verdict(&u, &[5, 7]).unwrap();
        assert!(v.is_residual());
        assert_eq!(v.zeta5_trivial, Some(true));
        assert_eq!(v.fr_orthogonal_hits[0].labels.len(), 3);
        assert_eq!(v.fr_orthogonal_hits[1].labels.len(), 4);
    }

    #[test]
    fn zeta5_alone_leaves_multiples_of_five() {
        let t = record("3_1", "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]", 3, None, None);
        let v = Screen::new(&[5], &[Filter::Zeta5], 1).unwrap().verdict(&t).unwrap();
        let Conclusion::Residual { survivors } = v.conclusion else { panic!("{v:?}") };
        assert_eq!(
            survivors,
            vec![Survivor { family: SlopeFamily::AllOneOver, k_mod: vec![LevelResidues { r: 5, residues: vec![0] }] }]
        );
    }

    #[test]
    fn restriction_by_residue() {
        let mut s = vec![
            Survivor { family: SlopeFamily::Two, k_mod: vec![] },
            Survivor { family: SlopeFamily::OneOver(2), k_mod: vec![] },
            Survivor { family: SlopeFamily::OneOver(6), k_mod: vec![] },
            Survivor { family: SlopeFamily::OneOver(7), k_mod: vec![] },
            Survivor { family: SlopeFamily::AllOneOver, k_mod: vec![] },
        ];
        restrict(&mut s, 7, &[FrLabel::OneOver(1)]);
        let fams: Vec<_> = s.iter().map(|x| x.family).collect();
        assert_eq!(fams, vec![SlopeFamily::OneOver(6), SlopeFamily::OneOver(7), SlopeFamily::AllOneOver]);
        assert_eq!(s[2].k_mod, vec![LevelResidues { r: 7, residues: vec![0, 1, 6] }]);
    }

    #[test]
    fn timeout_is_reported() {
        let t = record("3_1", "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]", 3, Some(1), Some(0));
        let screen = Screen::new(&[5], &ALL_FILTERS, 1).unwrap().with_timeout(Some(Duration::ZERO));
        let v = screen.verdict(&t).unwrap();
        assert!(matches!(v.conclusion, Conclusion::Skipped { .. }));
    }

    #[test]
    fn filter_names_round_trip() {
        for f in ALL_FILTERS {
            assert_eq!(f.to_string().parse::<Filter>().unwrap(), f);
        }
        assert!("zeta7".parse::<Filter>().is_err());
    }
}
