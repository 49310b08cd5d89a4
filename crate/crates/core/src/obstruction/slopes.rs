use std::fmt;

use serde::{Serialize, Serializer};

use crate::knot::KnotRecord;

/// A pair of opposite slopes that could still be a purely cosmetic pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SlopeFamily {
    Two,
    OneOver(u64),
    /// Every {±1/k}, k ≥ 1, when no bound on k is available.
    AllOneOver,
}

impl fmt::Display for SlopeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlopeFamily::Two => f.write_str("±2"),
            SlopeFamily::OneOver(k) => write!(f, "±1/{k}"),
            SlopeFamily::AllOneOver => f.write_str("±1/k"),
        }
    }
}

impl Serialize for SlopeFamily {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Candidates when nothing is known about the knot.
pub fn unrestricted_slopes() -> Vec<SlopeFamily> {
    vec![SlopeFamily::Two, SlopeFamily::AllOneOver]
}

/// Largest k allowed by k ≤ (th + 2g) / (2g(g-1)), with th ≤ c/2 when the thickness is missing.
fn one_over_k_bound(genus: u32, thickness: Option<u32>, crossings: u32) -> u64 {
    let g = genus as u64;
    // work with 2·th so the c/2 fallback stays integral
    let th2 = thickness.map_or(crossings as u64, |t| 2 * t as u64);
    (th2 + 4 * g) / (4 * g * (g - 1))
}

/// Slope pairs left open by genus, thickness and primeness data.
pub fn candidate_slopes(rec: &KnotRecord) -> Vec<SlopeFamily> {
    if rec.prime == Some(false) {
        return Vec::new();
    }
    match rec.genus {
        Some(1) => Vec::new(),
        Some(g) if g >= 2 => {
            let mut out = Vec::new();
            if g == 2 {
                out.push(SlopeFamily::Two);
            }
            let bound = one_over_k_bound(g, rec.thickness, rec.crossing_number);
            out.extend((1..=bound).map(SlopeFamily::OneOver));
            out
        }
        _ if rec.thickness == Some(0) => vec![SlopeFamily::Two, SlopeFamily::OneOver(1)],
        _ => unrestricted_slopes(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::PlanarDiagram;

    fn rec(genus: Option<u32>, thickness: Option<u32>, crossings: u32) -> KnotRecord {
        KnotRecord {
            name: "k".into(),
            pd: PlanarDiagram::unknot(),
            crossing_number: crossings,
            genus,
            thickness,
            prime: Some(true),
        }
    }

    #[test]
    fn genus_one_and_composites_are_empty() {
        assert!(candidate_slopes(&rec(Some(1), Some(0), 3)).is_empty());
        let mut r = rec(Some(2), Some(0), 8);
        r.prime = Some(false);
        assert!(candidate_slopes(&r).is_empty());
    }

    #[test]
    fn thin_knots() {
        assert_eq!(candidate_slopes(&rec(Some(2), Some(0), 5)), vec![SlopeFamily::Two, SlopeFamily::OneOver(1)]);
        assert!(candidate_slopes(&rec(Some(3), Some(0), 7)).is_empty());
        assert_eq!(candidate_slopes(&rec(None, Some(0), 9)), vec![SlopeFamily::Two, SlopeFamily::OneOver(1)]);
    }

    #[test]
    fn bound_arithmetic() {
        // (2 + 6) / 12 < 1 and genus 3 rules out ±2
        assert!(candidate_slopes(&rec(Some(3), Some(2), 9)).is_empty());
        // (1 + 4) / 4 = 1.25
        assert_eq!(candidate_slopes(&rec(Some(2), Some(1), 8)), vec![SlopeFamily::Two, SlopeFamily::OneOver(1)]);
        // fallback th ≤ c/2 = 10 gives (10 + 4) / 4 = 3.5
        assert_eq!(
            candidate_slopes(&rec(Some(2), None, 20)),
            vec![SlopeFamily::Two, SlopeFamily::OneOver(1), SlopeFamily::OneOver(2), SlopeFamily::OneOver(3)]
        );
    }

    #[test]
    fn unknown_genus_is_unbounded() {
        assert_eq!(candidate_slopes(&rec(None, None, 9)), unrestricted_slopes());
        assert_eq!(candidate_slopes(&rec(Some(0), Some(1), 0)), unrestricted_slopes());
        assert_eq!(SlopeFamily::AllOneOver.to_string(), "±1/k");
    }
}
