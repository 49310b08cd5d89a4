use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{field, CycloField};
use crate::error::{Error, Result};

/// An exact element of Q(ζ_4r), stored as `num(ζ) / den` with `num` reduced
/// modulo Φ_4r, `den > 0` and `gcd(den, content(num)) = 1`.
///
/// The normal form is canonical, so `==` is field equality.
#[derive(Clone)]
pub struct CycloScalar {
    field: Arc<CycloField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycloScalar {
    fn from_parts(field: Arc<CycloField>, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut s = Self { field, num, den };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -std::mem::take(c);
            }
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
    }

    pub fn zero(r: u32) -> Result<Self> {
        Ok(Self::zero_in(field(r)?))
    }

    pub fn one(r: u32) -> Result<Self> {
        Ok(Self::from_int_in(field(r)?, 1))
    }

    pub fn from_int(r: u32, n: i64) -> Result<Self> {
        Ok(Self::from_int_in(field(r)?, n))
    }

    pub(crate) fn zero_in(field: Arc<CycloField>) -> Self {
        let d = field.degree();
        Self { field, num: vec![BigInt::zero(); d], den: BigInt::one() }
    }

    pub(crate) fn from_int_in(field: Arc<CycloField>, n: i64) -> Self {
        Self::from_bigint_in(field, BigInt::from(n))
    }

    pub(crate) fn from_bigint_in(field: Arc<CycloField>, n: BigInt) -> Self {
        let mut s = Self::zero_in(field);
        s.num[0] = n;
        s
    }

    /// The rational number `n / d` (d ≠ 0).
    pub fn rational(r: u32, n: i64, d: i64) -> Result<Self> {
        assert!(d != 0, "zero denominator");
        let f = field(r)?;
        let mut s = Self::zero_in(f);
        s.num[0] = BigInt::from(n);
        s.den = BigInt::from(d);
        s.normalize();
        Ok(s)
    }

    /// ζ_4r^k.
    pub fn zeta_pow(r: u32, k: i64) -> Result<Self> {
        Ok(Self::zeta_pow_in(field(r)?, k))
    }

    pub(crate) fn zeta_pow_in(field: Arc<CycloField>, k: i64) -> Self {
        let num = field.power(k).to_vec();
        Self { field, num, den: BigInt::one() }
    }

    /// Build from a coefficient list in the power basis 1, ζ, ζ², … (any length).
    pub fn from_coeffs(r: u32, coeffs: &[BigInt], den: BigInt) -> Result<Self> {
        let f = field(r)?;
        let mut acc = vec![BigInt::zero(); f.degree()];
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (a, p) in acc.iter_mut().zip(f.power(k as i64)) {
                *a += c * p;
            }
        }
        if den.is_zero() {
            return Err(Error::Parse { pos: 0, msg: "zero denominator".into() });
        }
        Ok(Self::from_parts(f, acc, den))
    }

    pub fn level(&self) -> u32 {
        self.field.level()
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    /// Residue coefficients, low to high, length deg Φ_4r.
    pub fn numerator(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// `Some(q)` when the element is rational.
    pub fn as_rational(&self) -> Option<(BigInt, BigInt)> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some((self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    fn check_level(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.level() == other.level(),
            "{}",
            Error::LevelMismatch(self.level(), other.level())
        );
    }

    /// Apply the Galois automorphism ζ ↦ ζ^j (gcd(j, 4r) = 1).
    pub fn galois(&self, j: i64) -> Self {
        let f = &self.field;
        let mut acc = vec![BigInt::zero(); f.degree()];
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (a, p) in acc.iter_mut().zip(f.power(j * k as i64)) {
                *a += c * p;
            }
        }
        Self { field: f.clone(), num: acc, den: self.den.clone() }
    }

    /// Complex conjugation, ζ ↦ ζ^{-1}.
    pub fn conjugate(&self) -> Self {
        self.galois(-1)
    }

    pub fn scale(&self, n: &BigInt) -> Self {
        let num = self.num.iter().map(|c| c * n).collect();
        Self::from_parts(self.field.clone(), num, self.den.clone())
    }

    /// Multiplicative inverse via the product of the non-trivial conjugates.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let mut prod = Self::from_int_in(self.field.clone(), 1);
        for &j in self.field.units() {
            if j != 1 {
                prod = &prod * &self.galois(j as i64);
            }
        }
        let norm = &prod * self;
        let (n, d) = norm.as_rational().expect("field norm must be rational");
        // x^{-1} = prod / N(x), with N(x) = n/d
        Some(Self::from_parts(
            self.field.clone(),
            prod.num.iter().map(|c| c * &d).collect(),
            &prod.den * n,
        ))
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 {
            self.inverse().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut e = e.unsigned_abs();
        let mut acc = Self::from_int_in(self.field.clone(), 1);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    /// Numeric image under the default embedding ζ_4r ↦ e^{2πi/4r}, in double precision.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.field.order() as f64;
        let den = self.den.to_f64().unwrap_or(f64::INFINITY);
        let mut z = Complex64::new(0.0, 0.0);
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n;
            z += Complex64::from_polar(1.0, theta) * c.to_f64().unwrap_or(f64::NAN);
        }
        z / den
    }

    /// Canonical text form `(c_0, c_1, …)/den @ 4r`.
    pub fn serialize(&self) -> String {
        let body: Vec<String> = self.num.iter().map(ToString::to_string).collect();
        format!("({})/{} @ {}", body.join(", "), self.den, self.field.order())
    }

    /// Inverse of [`serialize`](Self::serialize).
    pub fn parse(text: &str) -> Result<Self> {
        let err = |pos: usize, msg: &str| Error::Parse { pos, msg: msg.to_string() };
        let t = text.trim();
        let open = t.find('(').ok_or_else(|| err(0, "expected '('"))?;
        let close = t.find(')').ok_or_else(|| err(t.len(), "expected ')'"))?;
        let rest = &t[close + 1..];
        let slash = rest.find('/').ok_or_else(|| err(close + 1, "expected '/'"))?;
        let at = rest.find('@').ok_or_else(|| err(close + 1, "expected '@'"))?;
        let den: BigInt = rest[slash + 1..at]
            .trim()
            .parse()
            .map_err(|_| err(close + 1 + slash, "bad denominator"))?;
        let order: u32 = rest[at + 1..]
            .trim()
            .parse()
            .map_err(|_| err(close + 1 + at, "bad order"))?;
        if order % 4 != 0 {
            return Err(err(close + 1 + at, "order must be 4r"));
        }
        let coeffs = t[open + 1..close]
            .split(',')
            .map(|s| s.trim().parse::<BigInt>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| err(open + 1, "bad coefficient"))?;
        let s = Self::from_coeffs(order / 4, &coeffs, den)?;
        if coeffs.len() != s.field.degree() {
            return Err(err(open + 1, "coefficient count must equal deg Φ_4r"));
        }
        Ok(s)
    }
}

impl PartialEq for CycloScalar {
    fn eq(&self, other: &Self) -> bool {
        self.level() == other.level() && self.den == other.den && self.num == other.num
    }
}

impl Eq for CycloScalar {}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let z = self.to_complex();
        write!(f, "{} ≈ {:.6}{:+.6}i", self.serialize(), z.re, z.im)
    }
}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

impl<'a> Add<&'a CycloScalar> for &'a CycloScalar {
    type Output = CycloScalar;
    fn add(self, rhs: &CycloScalar) -> CycloScalar {
        self.check_level(rhs);
        let num = self
            .num
            .iter()
            .zip(&rhs.num)
            .map(|(a, b)| a * &rhs.den + b * &self.den)
            .collect();
        CycloScalar::from_parts(self.field.clone(), num, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a CycloScalar> for &'a CycloScalar {
    type Output = CycloScalar;
    fn sub(self, rhs: &CycloScalar) -> CycloScalar {
        self + &(-rhs)
    }
}

impl Neg for &CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        CycloScalar {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl<'a> Mul<&'a CycloScalar> for &'a CycloScalar {
    type Output = CycloScalar;
    fn mul(self, rhs: &CycloScalar) -> CycloScalar {
        self.check_level(rhs);
        let f = &self.field;
        let d = f.degree();
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut acc: Vec<BigInt> = prod.drain(..d).collect();
        for (k, c) in prod.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (a, p) in acc.iter_mut().zip(f.power((k + d) as i64)) {
                *a += &c * p;
            }
        }
        CycloScalar::from_parts(f.clone(), acc, &self.den * &rhs.den)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycloScalar> for CycloScalar {
            type Output = CycloScalar;
            fn $m(self, rhs: CycloScalar) -> CycloScalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycloScalar> for CycloScalar {
            type Output = CycloScalar;
            fn $m(self, rhs: &CycloScalar) -> CycloScalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<CycloScalar> for &'a CycloScalar {
            type Output = CycloScalar;
            fn $m(self, rhs: CycloScalar) -> CycloScalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        -&self
    }
}
