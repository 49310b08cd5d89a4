use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::CycloScalar;

/// Integer Laurent polynomial in one formal variable.
///
/// The variable is contextual (A for brackets, t for Jones/Alexander).
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Add `c·x^e` in place.
    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// (exponent, coefficient) pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiply by x^k.
    pub fn shift(&self, k: i64) -> Self {
        Self { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute x ↦ x^k (k may be negative).
    pub fn substitute_power(&self, k: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, c)| (e * k, c.clone())))
    }

    /// Substitute x ↦ x^{1/k}; every exponent must be divisible by k.
    pub fn compress_exponents(&self, k: i64) -> Option<Self> {
        if self.terms.keys().any(|e| e % k != 0) {
            return None;
        }
        Some(Self { terms: self.terms.iter().map(|(&e, c)| (e / k, c.clone())).collect() })
    }

    pub fn eval_int(&self, x: i64) -> Option<BigInt> {
        if x == 0 && self.min_degree().is_some_and(|d| d < 0) {
            return None;
        }
        let mut acc = BigInt::zero();
        for (&e, c) in &self.terms {
            let mut v = c.clone();
            if e >= 0 {
                v *= BigInt::from(x).pow(e as u32);
                acc += v;
            } else {
                let d = BigInt::from(x).pow((-e) as u32);
                if !(&v % &d).is_zero() {
                    return None;
                }
                acc += v / d;
            }
        }
        Some(acc)
    }

    /// n-th derivative evaluated at x = 1, exactly.
    pub fn derivative_at_one(&self, n: u32) -> BigInt {
        let mut acc = BigInt::zero();
        for (&e, c) in &self.terms {
            let mut falling = BigInt::one();
            for j in 0..n as i64 {
                falling *= e - j;
            }
            acc += c * falling;
        }
        acc
    }

    /// Evaluate at an arbitrary nonzero field element.
    pub fn eval(&self, x: &CycloScalar) -> CycloScalar {
        let f = x.field().clone();
        let mut acc = CycloScalar::zero_in(f.clone());
        let inv = if self.min_degree().is_some_and(|d| d < 0) {
            Some(x.inverse().expect("evaluating a Laurent polynomial at zero"))
        } else {
            None
        };
        for (&e, c) in &self.terms {
            let base = if e < 0 { inv.as_ref().unwrap().pow(-e) } else { x.pow(e) };
            acc = &acc + &base.scale(c);
        }
        acc
    }

    /// Evaluate at x = ζ_4r^s, summing residues directly.
    pub fn eval_zeta_power(&self, r: u32, s: i64) -> CycloScalar {
        let f = super::field::field(r).expect("valid level");
        let mut num = vec![BigInt::zero(); f.degree()];
        for (&e, c) in &self.terms {
            for (a, p) in num.iter_mut().zip(f.power(e * s)) {
                if !p.is_zero() {
                    *a += c * p;
                }
            }
        }
        CycloScalar::from_coeffs(r, &num, BigInt::one()).expect("valid level")
    }

    /// Exact quotient when `d` divides `self` in Z[x, x^{-1}].
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        let (dlo, dhi) = (d.min_degree()?, d.max_degree()?);
        let lead = d.coeff(dhi);
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some(hi) = rem.max_degree() {
            let lo = rem.min_degree().unwrap();
            if hi - lo < dhi - dlo {
                return None;
            }
            let (q, r) = rem.coeff(hi).div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            let mono = LaurentPoly::monomial(q, hi - dhi);
            rem = &rem - &(&mono * d);
            quot = &quot + &mono;
        }
        Some(quot)
    }

    /// Render with the given variable name, highest degree first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}
