use std::fmt;

use crate::cyclo::{CycloScalar, Level};
use crate::error::{Error, Result};

/// A vector of the torus space at level r, in the orthonormal basis f_1, …, f_m.
#[derive(Clone, PartialEq, Eq)]
pub struct TqftVector {
    r: u32,
    entries: Vec<CycloScalar>,
}

impl TqftVector {
    pub fn new(level: &Level, entries: Vec<CycloScalar>) -> Result<Self> {
        if entries.len() != level.colors() {
            return Err(Error::ColorOutOfRange { color: entries.len(), max: level.colors() });
        }
        if let Some(bad) = entries.iter().find(|e| e.level() != level.r()) {
            return Err(Error::LevelMismatch(bad.level(), level.r()));
        }
        Ok(Self { r: level.r(), entries })
    }

    /// f_i, 1-based.
    pub fn basis(level: &Level, i: usize) -> Self {
        let entries = (1..=level.colors()).map(|j| if j == i { level.one() } else { level.zero() }).collect();
        Self { r: level.r(), entries }
    }

    pub fn level(&self) -> u32 {
        self.r
    }

    pub fn entries(&self) -> &[CycloScalar] {
        &self.entries
    }

    pub fn scale(&self, c: &CycloScalar) -> Self {
        Self { r: self.r, entries: self.entries.iter().map(|e| e * c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.r != other.r {
            return Err(Error::LevelMismatch(self.r, other.r));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(Self { r: self.r, entries })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(CycloScalar::is_zero)
    }

    /// Entry texts, for fixtures.
    pub fn serialize(&self) -> Vec<String> {
        self.entries.iter().map(CycloScalar::serialize).collect()
    }
}

impl fmt::Debug for TqftVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.entries).finish()
    }
}

/// ⟨⟨u, v⟩⟩ = Σ u_i · conj(v_i), anti-linear in v.
pub fn hermitian(u: &TqftVector, v: &TqftVector) -> Result<CycloScalar> {
    if u.r != v.r {
        return Err(Error::LevelMismatch(u.r, v.r));
    }
    let mut acc = CycloScalar::zero(u.r)?;
    for (a, b) in u.entries.iter().zip(&v.entries) {
        acc = &acc + &(a * &b.conjugate());
    }
    Ok(acc)
}

/// Square matrix over Q(ζ_4r) acting on column vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    r: u32,
    rows: Vec<Vec<CycloScalar>>,
}

impl Matrix {
    pub fn from_fn(level: &Level, n: usize, mut f: impl FnMut(usize, usize) -> CycloScalar) -> Self {
        Self { r: level.r(), rows: (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect() }
    }

    pub fn identity(level: &Level) -> Self {
        Self::from_fn(level, level.colors(), |i, j| if i == j { level.one() } else { level.zero() })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &CycloScalar {
        &self.rows[i][j]
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.size();
        let zero = CycloScalar::zero(self.r).unwrap();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(zero.clone(), |acc, k| {
                            if self.rows[i][k].is_zero() || other.rows[k][j].is_zero() {
                                acc
                            } else {
                                &acc + &(&self.rows[i][k] * &other.rows[k][j])
                            }
                        })
                    })
                    .collect()
            })
            .collect();
        Self { r: self.r, rows }
    }

    pub fn pow(&self, n: u32) -> Self {
        let level_one = CycloScalar::one(self.r).unwrap();
        let zero = CycloScalar::zero(self.r).unwrap();
        let id = Self {
            r: self.r,
            rows: (0..self.size())
                .map(|i| (0..self.size()).map(|j| if i == j { level_one.clone() } else { zero.clone() }).collect())
                .collect(),
        };
        (0..n).fold(id, |acc, _| acc.mul(self))
    }

    pub fn scale(&self, c: &CycloScalar) -> Self {
        Self { r: self.r, rows: self.rows.iter().map(|row| row.iter().map(|x| x * c).collect()).collect() }
    }

    pub fn apply(&self, v: &TqftVector) -> TqftVector {
        let zero = CycloScalar::zero(self.r).unwrap();
        let entries = self
            .rows
            .iter()
            .map(|row| {
                row.iter().zip(&v.entries).fold(zero.clone(), |acc, (a, b)| {
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        &acc + &(a * b)
                    }
                })
            })
            .collect();
        TqftVector { r: self.r, entries }
    }

    pub fn is_scalar(&self, c: &CycloScalar) -> bool {
        self.rows.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, x)| if i == j { x == c } else { x.is_zero() })
        })
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.rows).finish()
    }
}
