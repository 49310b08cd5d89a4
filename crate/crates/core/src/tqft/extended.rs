use std::fmt;

use super::line::{maslov, QQLine};
use super::vector::{Matrix, TqftVector};
use crate::cyclo::Level;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    S,
    T,
    Tinv,
}

impl Generator {
    pub fn matrix(self) -> [[i64; 2]; 2] {
        match self {
            Generator::S => [[0, -1], [1, 0]],
            Generator::T => [[1, 1], [0, 1]],
            Generator::Tinv => [[1, -1], [0, 1]],
        }
    }
}

fn mul(x: [[i64; 2]; 2], y: [[i64; 2]; 2]) -> [[i64; 2]; 2] {
    let mut out = [[0i64; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    out
}

fn apply(m: [[i64; 2]; 2], v: [i64; 2]) -> [i64; 2] {
    [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
}

/// An element (f, n) of the central extension of SL(2, Z), with f recorded as a word.
///
/// The weight is the one given by the composition law
/// (f, n)∘(g, m) = (fg, n + m + μ(L, fL, fgL)) for L the meridian line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedClass {
    word: Vec<Generator>,
    weight: i64,
}

impl ExtendedClass {
    pub fn new(word: Vec<Generator>, weight: i64) -> Self {
        Self { word, weight }
    }

    pub fn identity() -> Self {
        Self::new(Vec::new(), 0)
    }

    pub fn generator(g: Generator) -> Self {
        Self::new(vec![g], 0)
    }

    /// g₁ ∘ g₂ ∘ … with every generator at weight 0.
    pub fn from_word(word: &[Generator]) -> Self {
        word.iter()
            .fold(Self::identity(), |acc, &g| acc.compose(&Self::generator(g)))
    }

    /// T^k as a product of T or T⁻¹ at weight 0.
    pub fn t_power(k: i64) -> Self {
        let g = if k >= 0 { Generator::T } else { Generator::Tinv };
        Self::from_word(&vec![g; k.unsigned_abs() as usize])
    }

    pub fn word(&self) -> &[Generator] {
        &self.word
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        self.word.iter().fold([[1, 0], [0, 1]], |m, g| mul(m, g.matrix()))
    }

    pub fn compose(&self, other: &Self) -> Self {
        let f = self.matrix();
        let fg = mul(f, other.matrix());
        let a = [1, 0];
        let mu = maslov(QQLine::meridian(), QQLine::through(apply(f, a)), QQLine::through(apply(fg, a)));
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Self::new(word, self.weight + other.weight + mu)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| acc.compose(self))
    }

    /// Image of the meridian line.
    pub fn meridian_image(&self) -> QQLine {
        QQLine::through(apply(self.matrix(), [1, 0]))
    }

    /// Weight carried by the plain word, i.e. of [`ExtendedClass::from_word`].
    pub fn word_weight(&self) -> i64 {
        Self::from_word(&self.word).weight
    }
}

impl fmt::Display for ExtendedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: String = self
            .word
            .iter()
            .map(|g| match g {
                Generator::S => "S",
                Generator::T => "T",
                Generator::Tinv => "t",
            })
            .collect();
        write!(f, "({}, {})", if w.is_empty() { "Id" } else { &w }, self.weight)
    }
}

/// ρ(T) = diag((-A)^{i²-1}).
pub fn rho_t(level: &Level) -> Matrix {
    let m = level.colors();
    Matrix::from_fn(level, m, |i, j| {
        if i == j {
            level.twist_eigenvalue(i as i64 + 1)
        } else {
            level.zero()
        }
    })
}

pub fn rho_t_inv(level: &Level) -> Matrix {
    let m = level.colors();
    Matrix::from_fn(level, m, |i, j| {
        if i == j {
            level.twist_eigenvalue(i as i64 + 1).inverse().unwrap()
        } else {
            level.zero()
        }
    })
}

/// ρ(S)_{ji} = η (-1)^{i+j} [ij].
pub fn rho_s(level: &Level) -> Matrix {
    let m = level.colors();
    Matrix::from_fn(level, m, |i, j| {
        let (a, b) = (i as i64 + 1, j as i64 + 1);
        let q = level.quantum_int(a * b);
        let v = level.eta() * &q;
        if (a + b) % 2 == 0 {
            v
        } else {
            -v
        }
    })
}

pub fn rho_generator(g: Generator, level: &Level) -> Matrix {
    match g {
        Generator::S => rho_s(level),
        Generator::T => rho_t(level),
        Generator::Tinv => rho_t_inv(level),
    }
}

/// ρ(f, n) = ρ(g₁)⋯ρ(g_k)·κ^{n - μ(word)}, with ρ((Id, 1)) = κ·Id.
pub fn rho(e: &ExtendedClass, level: &Level) -> Matrix {
    let m = word_product(e.word(), level);
    let shift = e.weight() - e.word_weight();
    m.scale(&level.kappa().pow(shift))
}

/// ρ(g₁)⋯ρ(g_k) without any central correction.
pub fn word_product(word: &[Generator], level: &Level) -> Matrix {
    let (s, t, ti) = (rho_s(level), rho_t(level), rho_t_inv(level));
    word.iter().fold(Matrix::identity(level), |acc, g| {
        let x = match g {
            Generator::S => &s,
            Generator::T => &t,
            Generator::Tinv => &ti,
        };
        acc.mul(x)
    })
}

/// ρ(word)·f₁ computed right to left on the vector, avoiding matrix products.
pub fn word_times_f1(word: &[Generator], level: &Level) -> TqftVector {
    let (s, t, ti) = (rho_s(level), rho_t(level), rho_t_inv(level));
    word.iter().rev().fold(TqftVector::basis(level, 1), |v, g| {
        let x = match g {
            Generator::S => &s,
            Generator::T => &t,
            Generator::Tinv => &ti,
        };
        x.apply(&v)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    fn s() -> ExtendedClass {
        ExtendedClass::generator(S)
    }

    #[test]
    fn weights_of_surgery_words() {
        for k in -6i64..=6 {
            let e = s().compose(&ExtendedClass::t_power(-k)).compose(&s());
            assert_eq!(e.weight(), k.signum(), "k = {k}");
            assert_eq!(e.meridian_image(), QQLine::new(1, k).unwrap());
        }
        for k in [-2i64, 2] {
            let e = ExtendedClass::t_power(k).compose(&s());
            assert_eq!(e.weight(), 0);
        }
        let s4 = s().pow(4);
        assert_eq!(s4.matrix(), [[1, 0], [0, 1]]);
        assert_eq!(s4.weight(), 0);
    }

    #[test]
    fn st_cubed() {
        let st = ExtendedClass::from_word(&[S, T]);
        let e = st.pow(3);
        assert_eq!(e.matrix(), [[-1, 0], [0, -1]]);
        assert_eq!(e.weight(), -1);
        assert_eq!(e, ExtendedClass::from_word(&[S, T, S, T, S, T]));
    }

    #[test]
    fn composition_is_associative() {
        let words = [vec![S, T, T], vec![Tinv, S], vec![T, S, Tinv, Tinv, S], vec![S, S, T]];
        for x in &words {
            for y in &words {
                for z in &words {
                    let (a, b, c) = (ExtendedClass::from_word(x), ExtendedClass::from_word(y), ExtendedClass::from_word(z));
                    assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
                }
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(ExtendedClass::from_word(&[S, Tinv, S]).to_string(), "(StS, 1)");
        assert_eq!(ExtendedClass::identity().to_string(), "(Id, 0)");
    }
}
