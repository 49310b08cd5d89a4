use crate::cyclo::{CycloScalar, LaurentPoly, Level};
use crate::error::{Error, Result};
use crate::knot::{cable, cable_components, FramedLink, PlanarDiagram};

use super::bracket::kauffman_bracket;

/// A polynomial in z, coefficient of z^d at index d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChebyshevColor {
    coeffs: Vec<i64>,
}

impl ChebyshevColor {
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, d: usize) -> i64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }
}

/// e_i with e_1 = 1, e_2 = z, e_{i+1} = z·e_i - e_{i-1}.
pub fn chebyshev(i: usize) -> ChebyshevColor {
    assert!(i >= 1, "Chebyshev colors start at 1");
    let (mut prev, mut cur) = (vec![0i64], vec![1i64]);
    for _ in 1..i {
        let mut next = vec![0i64; cur.len() + 1];
        for (d, &c) in cur.iter().enumerate() {
            next[d + 1] += c;
        }
        for (d, &c) in prev.iter().enumerate() {
            next[d] -= c;
        }
        prev = cur;
        cur = next;
    }
    ChebyshevColor { coeffs: cur }
}

/// Symbolic brackets of the blackboard d-cables of a knot, d = 0..=max_copies.
/// These do not depend on the level.
pub fn cable_brackets(d: &PlanarDiagram, max_copies: usize) -> Result<Vec<LaurentPoly>> {
    if d.component_count() != 1 {
        return Err(Error::NotAKnot(d.component_count()));
    }
    (0..=max_copies).map(|n| Ok(kauffman_bracket(&cable(d, n)?))).collect()
}

/// ⟨K, e_i⟩ at A_r from precomputed cable brackets, with the zero-winding framing:
/// the blackboard value is divided by the twist eigenvalue of e_i once per unit of writhe.
pub fn colored_bracket_from_cables(
    cables: &[LaurentPoly],
    writhe: i64,
    color: usize,
    level: &Level,
) -> Result<CycloScalar> {
    check_color(color, level)?;
    let e = chebyshev(color);
    let mut acc = level.zero();
    for (d, &c) in e.coeffs().iter().enumerate() {
        if c != 0 {
            let v = cables[d].eval_zeta_power(level.r(), level.a_exponent());
            acc = &acc + &(&v * &level.int(c));
        }
    }
    let twist = level.twist_eigenvalue(color as i64).pow(-writhe);
    Ok(&acc * &twist)
}

/// ⟨K, e_i⟩(A_r) for the Seifert-framed knot.
pub fn colored_bracket(d: &PlanarDiagram, color: usize, r: u32) -> Result<CycloScalar> {
    colored_bracket_at(d, color, &Level::new(r)?)
}

pub fn colored_bracket_at(d: &PlanarDiagram, color: usize, level: &Level) -> Result<CycloScalar> {
    check_color(color, level)?;
    let cables = cable_brackets(d, color - 1)?;
    colored_bracket_from_cables(&cables, d.writhe(), color, level)
}

/// J_{K,n} at the root: (-1)^{n-1}⟨K, e_n⟩ / [n].
pub fn normalized_colored_jones_at(d: &PlanarDiagram, n: usize, r: u32) -> Result<CycloScalar> {
    let level = Level::new(r)?;
    let b = colored_bracket_at(d, n, &level)?;
    Ok(normalize_colored(&b, n, &level))
}

pub(crate) fn normalize_colored(bracket: &CycloScalar, n: usize, level: &Level) -> CycloScalar {
    let q = level.quantum_int(n as i64).inverse().expect("[n] is nonzero in range");
    let v = bracket * &q;
    if n % 2 == 1 {
        v
    } else {
        -v
    }
}

fn check_color(color: usize, level: &Level) -> Result<()> {
    if color == 0 || color > level.colors() {
        return Err(Error::ColorOutOfRange { color, max: level.colors() });
    }
    Ok(())
}

/// Ω_d: the coefficient of z^d in ω = Σ (-1)^{i-1}[i] e_i, for d = 0..m-1.
pub fn omega_coefficients(level: &Level) -> Vec<CycloScalar> {
    let m = level.colors();
    let w = level.omega_weights();
    (0..m)
        .map(|d| {
            let mut acc = level.zero();
            for (i, wi) in w.iter().enumerate() {
                let c = chebyshev(i + 1).coeff(d);
                if c != 0 {
                    acc = &acc + &(wi * &level.int(c));
                }
            }
            acc
        })
        .collect()
}

/// ⟨L, ω, …, ω⟩ at A_r, with each framing realized by curls on the blackboard diagram.
pub fn omega_bracket(l: &FramedLink, r: u32) -> Result<CycloScalar> {
    Ok(omega_bracket_at(l, &Level::new(r)?))
}

pub fn omega_bracket_at(l: &FramedLink, level: &Level) -> CycloScalar {
    let (d, index) = l.blackboard_with_index();
    let n = index.len();
    let omega = omega_coefficients(level);
    let m = omega.len();
    let mut total = level.zero();
    let mut copies = vec![0usize; n];
    loop {
        let mut weight = level.one();
        for &c in &copies {
            weight = &weight * &omega[c];
        }
        if !weight.is_zero() {
            let mut placed = vec![0usize; n];
            for (c, &k) in copies.iter().enumerate() {
                placed[index[c]] = k;
            }
            let b = kauffman_bracket(&cable_components(&d, &placed));
            total = &total + &(&weight * &b.eval_zeta_power(level.r(), level.a_exponent()));
        }
        // odometer over {0..m-1}^n
        let mut pos = 0;
        while pos < n {
            copies[pos] += 1;
            if copies[pos] < m {
                break;
            }
            copies[pos] = 0;
            pos += 1;
        }
        if pos == n {
            break;
        }
    }
    total
}

/// Z_r(S³(L), weight) = κ^{σ(L) - weight} η^{1+n(L)} ⟨L, ω, …, ω⟩.
pub fn rt_invariant(l: &FramedLink, weight: i64, r: u32) -> Result<CycloScalar> {
    Ok(rt_invariant_at(l, weight, &Level::new(r)?))
}

pub fn rt_invariant_at(l: &FramedLink, weight: i64, level: &Level) -> CycloScalar {
    let sigma = l.signature();
    let n = l.component_count() as i64;
    let z = &level.eta().pow(1 + n) * &omega_bracket_at(l, level);
    &z * &level.kappa().pow(sigma - weight)
}
