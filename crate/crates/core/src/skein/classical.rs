use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use super::bracket::{kauffman_bracket, loop_value};
use crate::cyclo::LaurentPoly;
use crate::error::{Error, Result};
use crate::knot::{PlanarDiagram, UnionFind};

/// (-A³)^k as a Laurent polynomial in A.
pub fn framing_factor(k: i64) -> LaurentPoly {
    let sign = if k % 2 == 0 { 1 } else { -1 };
    LaurentPoly::monomial(sign, 3 * k)
}

/// Jones polynomial in t = A⁻⁴, normalized so the unknot has value 1.
pub fn jones_polynomial(d: &PlanarDiagram) -> Result<LaurentPoly> {
    jones_from_bracket(d, &kauffman_bracket(d))
}

/// Jones polynomial from an already computed bracket of `d`.
pub fn jones_from_bracket(d: &PlanarDiagram, bracket: &LaurentPoly) -> Result<LaurentPoly> {
    if d.component_count() != 1 {
        return Err(Error::NotAKnot(d.component_count()));
    }
    let f = &framing_factor(-d.writhe()) * bracket;
    let v = f
        .div_exact(&loop_value())
        .ok_or_else(|| Error::Invariant("bracket of a knot not divisible by the loop value".into()))?;
    v.compress_exponents(-4)
        .ok_or_else(|| Error::Invariant("knot bracket exponents not divisible by 4".into()))
}

/// Symmetrized Alexander polynomial with Δ(1) = 1, from the Wirtinger presentation.
pub fn alexander_polynomial(d: &PlanarDiagram) -> Result<LaurentPoly> {
    if d.component_count() != 1 {
        return Err(Error::NotAKnot(d.component_count()));
    }
    let n = d.crossing_count();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut uf = UnionFind::default();
    for x in d.crossings() {
        uf.union(x[1], x[3]);
    }
    let mut gens: Vec<u32> = d.arc_labels().map(|a| uf.find(a)).collect();
    gens.sort_unstable();
    gens.dedup();
    if gens.len() != n {
        return Err(Error::Invariant(format!("{} over-arcs for {} crossings", gens.len(), n)));
    }
    let col = |uf: &mut UnionFind, a: u32| gens.binary_search(&uf.find(a)).unwrap();

    let t = LaurentPoly::var();
    let one = LaurentPoly::one();
    let one_minus_t = &one - &t;
    let mut m = vec![vec![LaurentPoly::zero(); n]; n];
    for (row, (x, &s)) in d.crossings().iter().zip(d.signs()).enumerate() {
        let (o, i, k) = (col(&mut uf, x[1]), col(&mut uf, x[0]), col(&mut uf, x[2]));
        let (ci, ck) = if s > 0 { (t.clone(), -&one) } else { (-&one, t.clone()) };
        m[row][o] = &m[row][o] + &one_minus_t;
        m[row][i] = &m[row][i] + &ci;
        m[row][k] = &m[row][k] + &ck;
    }
    m.pop();
    for row in m.iter_mut() {
        row.pop();
    }
    let det = bareiss_det(m)?;
    if det.is_zero() {
        return Err(Error::Invariant("degenerate Alexander matrix".into()));
    }
    let (lo, hi) = (det.min_degree().unwrap(), det.max_degree().unwrap());
    if (lo + hi) % 2 != 0 {
        return Err(Error::Invariant("Alexander polynomial has odd span".into()));
    }
    let sym = det.shift(-(lo + hi) / 2);
    let at_one = sym.eval_int(1).unwrap();
    if at_one.abs() != BigInt::one() {
        return Err(Error::Invariant(format!("Alexander polynomial has Δ(1) = {at_one}")));
    }
    Ok(sym.scale(&at_one))
}

/// Fraction-free determinant over Z[t, t⁻¹].
fn bareiss_det(mut m: Vec<Vec<LaurentPoly>>) -> Result<LaurentPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut sign = BigInt::one();
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return Ok(LaurentPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num
                    .div_exact(&prev)
                    .ok_or_else(|| Error::Invariant("inexact Bareiss step".into()))?;
            }
        }
        prev = m[k][k].clone();
    }
    Ok(m[n - 1][n - 1].scale(&sign))
}

/// (Δ″(1), J‴(1)): the two finite-type quantities that vanish for knots with purely
/// cosmetic surgeries.
pub fn finite_type_filters(d: &PlanarDiagram) -> Result<(i64, i64)> {
    let alex = alexander_polynomial(d)?;
    let jones = jones_polynomial(d)?;
    Ok(finite_type_from(&alex, &jones))
}

pub fn finite_type_from(alexander: &LaurentPoly, jones: &LaurentPoly) -> (i64, i64) {
    let a2 = alexander.derivative_at_one(2).to_i64().expect("Δ″(1) fits in i64");
    let j3 = jones.derivative_at_one(3).to_i64().expect("J‴(1) fits in i64");
    (a2, j3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::parse_pd;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn unknot() {
        let u = PlanarDiagram::unknot();
        assert_eq!(jones_polynomial(&u).unwrap(), LaurentPoly::one());
        assert_eq!(alexander_polynomial(&u).unwrap(), LaurentPoly::one());
        assert_eq!(finite_type_filters(&u).unwrap(), (0, 0));
        let kink = parse_pd("[[1,1,2,2]]").unwrap();
        assert_eq!(jones_polynomial(&kink).unwrap(), LaurentPoly::one());
        assert_eq!(alexander_polynomial(&kink).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn trefoil_both_chiralities() {
        let left = parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]").unwrap();
        let jl = jones_polynomial(&left).unwrap();
        assert_eq!(jl, p(&[(-4, -1), (-3, 1), (-1, 1)]));
        assert_eq!(jones_polynomial(&left.mirror()).unwrap(), jl.substitute_power(-1));
        let alex = alexander_polynomial(&left).unwrap();
        assert_eq!(alex, p(&[(1, 1), (0, -1), (-1, 1)]));
        assert_eq!(alexander_polynomial(&left.mirror()).unwrap(), alex);
        assert_eq!(finite_type_filters(&left).unwrap().0, 2);
    }

    #[test]
    fn figure_eight() {
        let d = parse_pd("[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]").unwrap();
        assert_eq!(alexander_polynomial(&d).unwrap(), p(&[(1, -1), (0, 3), (-1, -1)]));
        assert_eq!(jones_polynomial(&d).unwrap(), p(&[(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)]));
    }

    #[test]
    fn links_are_rejected() {
        let hopf = parse_pd("[[1,3,2,4],[3,1,4,2]]").unwrap();
        assert!(matches!(jones_polynomial(&hopf), Err(Error::NotAKnot(2))));
        assert!(matches!(alexander_polynomial(&hopf), Err(Error::NotAKnot(2))));
    }
}
