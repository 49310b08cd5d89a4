use num_integer::Integer;

use crate::error::{Error, Result};
use crate::knot::signature;

/// A line in H₁(T²; Q) spanned by the primitive vector p·a + q·b, where a is the
/// meridian and b the longitude. Stored with q > 0, or (1, 0) for the meridian.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QQLine {
    p: i64,
    q: i64,
}

impl QQLine {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidSlope { p, q });
        }
        let (p, q) = if q < 0 || (q == 0 && p < 0) { (-p, -q) } else { (p, q) };
        Ok(Self { p, q })
    }

    /// The meridian a.
    pub fn meridian() -> Self {
        Self { p: 1, q: 0 }
    }

    /// The longitude b.
    pub fn longitude() -> Self {
        Self { p: 0, q: 1 }
    }

    /// The line through an arbitrary nonzero vector.
    pub fn through(v: [i64; 2]) -> Self {
        let g = v[0].gcd(&v[1]);
        assert!(g != 0, "zero vector spans no line");
        Self::new(v[0] / g, v[1] / g).expect("reduced")
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn vector(&self) -> [i64; 2] {
        [self.p, self.q]
    }
}

/// Intersection form with ω(a, b) = 1.
pub fn omega(x: [i64; 2], y: [i64; 2]) -> i64 {
    x[0] * y[1] - x[1] * y[0]
}

/// Maslov index of three lines: 0 if two coincide, otherwise sign(αβ·ω(x, y)) where z = αx + βy.
pub fn maslov(x: QQLine, y: QQLine, z: QQLine) -> i64 {
    if x == y || y == z || x == z {
        return 0;
    }
    let (x, y, z) = (x.vector(), y.vector(), z.vector());
    // Cramer: α = ω(z, y)/ω(x, y), β = ω(x, z)/ω(x, y)
    let w = omega(x, y);
    let prod = omega(z, y) * omega(x, z) * w;
    prod.signum()
}

/// Maslov index as the signature of the form B(u, v) = ω(u₁, v₂) on the space of triples
/// (u₁, u₂, u₃) ∈ L₁ × L₂ × L₃ with u₁ + u₂ + u₃ = 0.
pub fn maslov_signature(x: QQLine, y: QQLine, z: QQLine) -> i64 {
    let gens = [x.vector(), y.vector(), z.vector()];
    let kernel = integer_kernel(&gens);
    let n = kernel.len();
    let mut form = vec![vec![0i64; n]; n];
    for (i, u) in kernel.iter().enumerate() {
        for (j, v) in kernel.iter().enumerate() {
            let u1 = [u[0] * gens[0][0], u[0] * gens[0][1]];
            let v2 = [v[1] * gens[1][0], v[1] * gens[1][1]];
            let v1 = [v[0] * gens[0][0], v[0] * gens[0][1]];
            let u2 = [u[1] * gens[1][0], u[1] * gens[1][1]];
            form[i][j] = omega(u1, v2) + omega(v1, u2);
        }
    }
    signature(&form)
}

/// Basis of {c ∈ Z³ : Σ cᵢ gᵢ = 0}.
fn integer_kernel(g: &[[i64; 2]; 3]) -> Vec<[i64; 3]> {
    // rows of the 2×3 matrix
    let r0 = [g[0][0], g[1][0], g[2][0]];
    let r1 = [g[0][1], g[1][1], g[2][1]];
    let cross = [
        r0[1] * r1[2] - r0[2] * r1[1],
        r0[2] * r1[0] - r0[0] * r1[2],
        r0[0] * r1[1] - r0[1] * r1[0],
    ];
    if cross != [0, 0, 0] {
        return vec![cross];
    }
    // rank one: every generator lies on the same line; pick a nonzero row
    let row = if r0 != [0, 0, 0] { r0 } else { r1 };
    let mut basis = Vec::new();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let mut v = [0i64; 3];
        v[i] = row[j];
        v[j] = -row[i];
        if v != [0, 0, 0] && basis.len() < 2 {
            let independent = basis.iter().all(|b: &[i64; 3]| {
                let c = [
                    b[1] * v[2] - b[2] * v[1],
                    b[2] * v[0] - b[0] * v[2],
                    b[0] * v[1] - b[1] * v[0],
                ];
                c != [0, 0, 0]
            });
            if independent {
                basis.push(v);
            }
        }
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn l(p: i64, q: i64) -> QQLine {
        QQLine::new(p, q).unwrap()
    }

    #[test]
    fn examples() {
        let (a, b) = (QQLine::meridian(), QQLine::longitude());
        assert_eq!(maslov(a, b, a), 0);
        assert_eq!(maslov(a, b, l(-1, 1)), -1);
        assert_eq!(maslov_signature(a, a, b), 0);
        assert_eq!(maslov_signature(a, b, b), 0);
        assert_eq!(maslov_signature(b, b, b), 0);
        for (p, q) in [(1i64, 1i64), (-1, 1), (5, 2), (-3, 7), (1, -4)] {
            let s = (p * q).signum();
            assert_eq!(maslov(b, a, l(p, q)), -s, "{p}/{q}");
        }
    }

    #[test]
    fn lines_are_up_to_sign() {
        assert_eq!(l(1, -2), l(-1, 2));
        assert_eq!(l(-1, 0), QQLine::meridian());
        assert!(matches!(QQLine::new(2, 4), Err(Error::InvalidSlope { p: 2, q: 4 })));
        assert!(QQLine::new(0, 0).is_err());
    }

    proptest! {
        #[test]
        fn sign_rule_agrees_with_signature(
            x in (-20i64..20, -20i64..20), y in (-20i64..20, -20i64..20), z in (-20i64..20, -20i64..20)
        ) {
            prop_assume!(x != (0, 0) && y != (0, 0) && z != (0, 0));
            let (x, y, z) = (QQLine::through([x.0, x.1]), QQLine::through([y.0, y.1]), QQLine::through([z.0, z.1]));
            prop_assert_eq!(maslov(x, y, z), maslov_signature(x, y, z));
        }

        #[test]
        fn cyclic_and_antisymmetric(
            x in (-9i64..9, 1i64..9), y in (-9i64..9, 1i64..9), z in (-9i64..9, 1i64..9)
        ) {
            let (x, y, z) = (QQLine::through([x.0, x.1]), QQLine::through([y.0, y.1]), QQLine::through([z.0, z.1]));
            prop_assert_eq!(maslov(x, y, z), maslov(y, z, x));
            prop_assert_eq!(maslov(x, y, z), -maslov(y, x, z));
        }
    }
}
