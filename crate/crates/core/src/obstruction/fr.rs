use std::fmt;

use serde::{Serialize, Serializer};

use crate::cyclo::{LaurentPoly, Level};
use crate::error::{Error, Result};
use crate::knot::PlanarDiagram;
use crate::skein::jones_polynomial;
use crate::tqft::{hermitian, knot_vector, one_over_k_vector, rho_s, two_vector, TqftVector};

/// Label of an element of F_r: the pair of slopes it compares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FrLabel {
    /// {±1/k} for a representative 1 ≤ k ≤ (r-1)/2.
    OneOver(u32),
    /// {±2}.
    Two,
}

impl FrLabel {
    /// The label governing the pair {±1/k} at level r, or `None` when r divides k.
    pub fn for_k(k: u64, r: u32) -> Option<Self> {
        let l = (k % r as u64) as u32;
        if l == 0 {
            None
        } else {
            Some(FrLabel::OneOver(l.min(r - l)))
        }
    }
}

impl fmt::Display for FrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrLabel::OneOver(k) => write!(f, "±1/{k}"),
            FrLabel::Two => f.write_str("±2"),
        }
    }
}

impl Serialize for FrLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Accept only odd primes r ≥ 5.
pub fn check_prime_level(r: u32) -> Result<()> {
    if r < 5 || !is_prime(r) {
        return Err(Error::InvalidPrimeLevel(r as i64));
    }
    Ok(())
}

/// The obstruction vectors at any odd level, with no primality check:
/// ρ(ST^kS)f₁ - ρ(ST^{-k}S)f₁ for 1 ≤ k ≤ (r-1)/2, and κ^{-2}ρ(T^{-2}S)f₁ - ρ(T²S)f₁.
///
/// Pairing Z_r(E_K) against these gives Z(1/k) - Z(-1/k) and κ(Z(2) - Z(-2)).
pub fn f_r_vectors(level: &Level) -> Vec<(FrLabel, TqftVector)> {
    let m = level.colors() as i64;
    let mut out: Vec<_> = (1..=m)
        .map(|k| {
            let v = one_over_k_vector(k, level).sub(&one_over_k_vector(-k, level)).expect("same level");
            (FrLabel::OneOver(k as u32), v)
        })
        .collect();
    let two = two_vector(-1, level)
        .scale(&level.kappa().pow(-2))
        .sub(&two_vector(1, level))
        .expect("same level");
    out.push((FrLabel::Two, two));
    out
}

pub fn f_r_set(r: u32) -> Result<Vec<(FrLabel, TqftVector)>> {
    check_prime_level(r)?;
    Ok(f_r_vectors(&Level::new(r)?))
}

/// [`f_r_set`] at an already constructed (possibly Galois-twisted) level.
pub fn f_r_set_at(level: &Level) -> Result<Vec<(FrLabel, TqftVector)>> {
    check_prime_level(level.r())?;
    Ok(f_r_vectors(level))
}

/// Whether the unknot complement vector ρ(S)f₁ is orthogonal to all of F_r.
pub fn unknot_orthogonality(r: u32) -> Result<bool> {
    let level = Level::new(r)?;
    let set = f_r_set_at(&level)?;
    let u = rho_s(&level).apply(&TqftVector::basis(&level, 1));
    for (_, f) in &set {
        if !hermitian(&u, f)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Labels of the elements of `set` exactly orthogonal to `z`.
pub fn fr_hits(z: &TqftVector, set: &[(FrLabel, TqftVector)]) -> Result<Vec<FrLabel>> {
    let mut hits = Vec::new();
    for (label, f) in set {
        if hermitian(z, f)?.is_zero() {
            hits.push(*label);
        }
    }
    Ok(hits)
}

pub fn fr_orthogonality_report(k: &PlanarDiagram, r: u32) -> Result<Vec<FrLabel>> {
    check_prime_level(r)?;
    let level = Level::new(r)?;
    fr_hits(&knot_vector(k, &level)?, &f_r_vectors(&level))
}

/// J_K(ζ₅) = 1, decided exactly. Every primitive fifth root gives the same answer.
pub fn zeta5_test(k: &PlanarDiagram) -> Result<bool> {
    Ok(zeta5_from_jones(&jones_polynomial(k)?))
}

pub fn zeta5_from_jones(jones: &LaurentPoly) -> bool {
    // A_5 = ζ₂₀², so t = A⁻⁴ = ζ₂₀⁻⁸ is a primitive fifth root of unity
    jones.eval_zeta_power(5, -8).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::parse_pd;

    #[test]
    fn sizes_and_nonvanishing() {
        for r in [5u32, 7, 11, 13] {
            let set = f_r_set(r).unwrap();
            assert_eq!(set.len() as u32, (r + 1) / 2);
            assert!(set.iter().all(|(_, v)| !v.is_zero()), "r = {r}");
        }
    }

    #[test]
    fn level_three_degenerates() {
        let lvl = Level::new(3).unwrap();
        assert!(f_r_vectors(&lvl).iter().all(|(_, v)| v.is_zero()));
        assert!(matches!(f_r_set(3), Err(Error::InvalidPrimeLevel(3))));
        assert!(matches!(f_r_set(9), Err(Error::InvalidPrimeLevel(9))));
        assert!(matches!(f_r_set(15), Err(Error::InvalidPrimeLevel(15))));
    }

    #[test]
    fn unknot_is_orthogonal() {
        for r in [5u32, 7, 11] {
            assert!(unknot_orthogonality(r).unwrap());
        }
        let all: Vec<_> = f_r_set(7).unwrap().into_iter().map(|(l, _)| l).collect();
        assert_eq!(fr_orthogonality_report(&PlanarDiagram::unknot(), 7).unwrap(), all);
    }

    #[test]
    fn labels_by_residue() {
        assert_eq!(FrLabel::for_k(1, 5), Some(FrLabel::OneOver(1)));
        assert_eq!(FrLabel::for_k(4, 5), Some(FrLabel::OneOver(1)));
        assert_eq!(FrLabel::for_k(8, 5), Some(FrLabel::OneOver(2)));
        assert_eq!(FrLabel::for_k(10, 5), None);
        assert_eq!(FrLabel::OneOver(3).to_string(), "±1/3");
        assert_eq!(FrLabel::Two.to_string(), "±2");
    }

    #[test]
    fn zeta5_examples() {
        assert!(zeta5_test(&PlanarDiagram::unknot()).unwrap());
        let trefoil = parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]").unwrap();
        assert!(!zeta5_test(&trefoil).unwrap());
        assert!(!zeta5_test(&trefoil.mirror()).unwrap());
    }
}
