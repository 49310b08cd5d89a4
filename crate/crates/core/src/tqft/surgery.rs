use num_integer::Integer;

use super::extended::{word_times_f1, ExtendedClass, Generator};
use super::vector::{hermitian, TqftVector};
use crate::cyclo::{CycloScalar, LaurentPoly, Level};
use crate::error::{Error, Result};
use crate::knot::PlanarDiagram;
use crate::skein::{cable_brackets, colored_bracket_from_cables};

/// Z_r(E_K) = η_r (⟨K, e_1⟩, …, ⟨K, e_m⟩) for the Seifert-framed knot.
pub fn knot_vector(k: &PlanarDiagram, level: &Level) -> Result<TqftVector> {
    let cables = cable_brackets(k, level.colors() - 1)?;
    knot_vector_from_cables(&cables, k.writhe(), level)
}

/// [`knot_vector`] from symbolic cable brackets; `cables` must reach m - 1 copies.
pub fn knot_vector_from_cables(cables: &[LaurentPoly], writhe: i64, level: &Level) -> Result<TqftVector> {
    let entries = (1..=level.colors())
        .map(|i| Ok(level.eta() * &colored_bracket_from_cables(cables, writhe, i, level)?))
        .collect::<Result<Vec<_>>>()?;
    TqftVector::new(level, entries)
}

/// Which continued fraction to use when turning a slope into a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expansion {
    /// p/q = a₁ - 1/(a₂ - 1/(…)) with a₁ = ⌈p/q⌉.
    Ceiling,
    /// The same shape with a₁ = ⌊p/q⌋.
    Floor,
}

/// φ = T^{a₁} S T^{a₂} S ⋯ T^{a_n} S, sending the meridian to the line of p·a + q·b.
/// ∞ gives the empty word.
pub fn slope_word(p: i64, q: i64, expansion: Expansion) -> Result<Vec<Generator>> {
    if p.gcd(&q) != 1 {
        return Err(Error::InvalidSlope { p, q });
    }
    let (mut p, mut q) = if q < 0 { (-p, -q) } else { (p, q) };
    let mut word = Vec::new();
    if q == 0 {
        return Ok(word);
    }
    let mut first = true;
    loop {
        let a = if first && expansion == Expansion::Floor { Integer::div_floor(&p, &q) } else { Integer::div_ceil(&p, &q) };
        first = false;
        let g = if a >= 0 { Generator::T } else { Generator::Tinv };
        word.extend(std::iter::repeat(g).take(a.unsigned_abs() as usize));
        word.push(Generator::S);
        // p/q = a - 1/x with x = q / (aq - p)
        let den = a * q - p;
        if den == 0 {
            break;
        }
        let (np, nq) = if den > 0 { (q, den) } else { (-q, -den) };
        p = np;
        q = nq;
    }
    Ok(word)
}

fn sign_of_slope(p: i64, q: i64) -> i64 {
    if q == 0 {
        0
    } else {
        (p * q).signum()
    }
}

/// Z_r(E_K(p/q), 0). The boundary torus is read from the solid-torus side, so the filling of
/// slope s on the knot exterior is κ^{-sign(-s)}⟨⟨Z_r(E_K), ρ(φ_{-s}, 0) f₁⟩⟩.
pub fn surgery_invariant(k: &PlanarDiagram, p: i64, q: i64, level: &Level) -> Result<CycloScalar> {
    let z = knot_vector(k, level)?;
    surgery_from_vector(&z, p, q, level, Expansion::Ceiling)
}

pub fn surgery_from_vector(
    z: &TqftVector,
    p: i64,
    q: i64,
    level: &Level,
    expansion: Expansion,
) -> Result<CycloScalar> {
    let word = slope_word(-p, q, expansion)?;
    let m = ExtendedClass::from_word(&word).weight();
    // ρ(φ, 0) = κ^{-m}·ρ(word); anti-linearity turns κ^{-m} into κ^{m}
    let v = word_times_f1(&word, level);
    let pairing = hermitian(z, &v)?;
    Ok(&pairing * &level.kappa().pow(m + sign_of_slope(p, q)))
}

/// ρ(S T^{k} S) f₁.
pub fn one_over_k_vector(k: i64, level: &Level) -> TqftVector {
    let mut word = vec![Generator::S];
    let g = if k >= 0 { Generator::T } else { Generator::Tinv };
    word.extend(std::iter::repeat(g).take(k.unsigned_abs() as usize));
    word.push(Generator::S);
    word_times_f1(&word, level)
}

/// ρ(T^{±2} S) f₁.
pub fn two_vector(sign: i64, level: &Level) -> TqftVector {
    let g = if sign > 0 { Generator::T } else { Generator::Tinv };
    word_times_f1(&[g, g, Generator::S], level)
}

/// Z_r(E_K(1/k), 0) = ⟨⟨Z_r(E_K), ρ(S T^{k} S) f₁⟩⟩.
pub fn one_over_k_invariant(k: &PlanarDiagram, kk: i64, level: &Level) -> Result<CycloScalar> {
    hermitian(&knot_vector(k, level)?, &one_over_k_vector(kk, level))
}

/// Z_r(E_K(±2), 0) = κ^{±1}⟨⟨Z_r(E_K), ρ(T^{∓2} S) f₁⟩⟩.
pub fn two_invariant(k: &PlanarDiagram, sign: i64, level: &Level) -> Result<CycloScalar> {
    let s = sign.signum();
    if s == 0 {
        return Err(Error::InvalidSlope { p: 0, q: 1 });
    }
    let pairing = hermitian(&knot_vector(k, level)?, &two_vector(-s, level))?;
    Ok(&pairing * &level.kappa().pow(s))
}
