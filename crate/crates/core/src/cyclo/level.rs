use std::sync::Arc;

use num_integer::Integer;

use super::field::{field, CycloField};
use super::scalar::CycloScalar;
use crate::error::{Error, Result};

/// Constants of the SO(3) theory at an odd level r, for the root A_r = ζ_4r^{2e}.
///
/// `e` is the Galois twist; e = 1 gives A_r = e^{iπ/r} under the default embedding.
#[derive(Clone, Debug)]
pub struct Level {
    r: u32,
    twist: i64,
    field: Arc<CycloField>,
    a: CycloScalar,
    a_inv: CycloScalar,
    sqrt_minus_r: CycloScalar,
    eta: CycloScalar,
    kappa: CycloScalar,
}

impl Level {
    pub fn new(r: u32) -> Result<Self> {
        Self::with_twist(r, 1)
    }

    pub fn with_twist(r: u32, twist: i64) -> Result<Self> {
        let field = field(r)?;
        let two_r = 2 * r as i64;
        if twist.gcd(&two_r) != 1 {
            return Err(Error::InvalidTwist { twist, two_r });
        }
        let a = CycloScalar::zeta_pow_in(field.clone(), 2 * twist);
        let a_inv = CycloScalar::zeta_pow_in(field.clone(), -2 * twist);
        let sqrt_minus_r = gauss_sqrt_minus_r(&field);

        let mut lvl = Self {
            r,
            twist,
            field: field.clone(),
            a,
            a_inv,
            sqrt_minus_r: sqrt_minus_r.clone(),
            eta: CycloScalar::zero_in(field.clone()),
            kappa: CycloScalar::zero_in(field),
        };
        let num = &lvl.a_pow(2) - &lvl.a_pow(-2);
        lvl.eta = &num * &sqrt_minus_r.inverse().expect("sqrt(-r) is nonzero");
        let mut sum = CycloScalar::zero_in(lvl.field.clone());
        for i in 1..=lvl.colors() as i64 {
            let qi = lvl.quantum_int(i);
            sum = &sum + &(&lvl.twist_eigenvalue(i).inverse().unwrap() * &(&qi * &qi));
        }
        lvl.kappa = &lvl.eta * &sum;
        Ok(lvl)
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    /// m = (r-1)/2, the dimension of the torus space.
    pub fn colors(&self) -> usize {
        (self.r as usize - 1) / 2
    }

    pub fn a(&self) -> &CycloScalar {
        &self.a
    }

    pub fn a_inv(&self) -> &CycloScalar {
        &self.a_inv
    }

    /// A_r^k as a ζ-power.
    pub fn a_pow(&self, k: i64) -> CycloScalar {
        CycloScalar::zeta_pow_in(self.field.clone(), 2 * self.twist * k)
    }

    /// Exponent s with A_r = ζ_4r^s, for evaluating polynomials in A.
    pub fn a_exponent(&self) -> i64 {
        2 * self.twist
    }

    pub fn zero(&self) -> CycloScalar {
        CycloScalar::zero_in(self.field.clone())
    }

    pub fn one(&self) -> CycloScalar {
        CycloScalar::from_int_in(self.field.clone(), 1)
    }

    pub fn int(&self, n: i64) -> CycloScalar {
        CycloScalar::from_int_in(self.field.clone(), n)
    }

    /// [n] = (A^{2n} - A^{-2n}) / (A^2 - A^{-2}), summed as A^{2(n-1)} + A^{2(n-3)} + … + A^{-2(n-1)}.
    pub fn quantum_int(&self, n: i64) -> CycloScalar {
        if n < 0 {
            return -self.quantum_int(-n);
        }
        let mut acc = self.zero();
        for j in 0..n {
            acc = &acc + &self.a_pow(2 * (n - 1 - 2 * j));
        }
        acc
    }

    /// (-A)^{i²-1}: the twist eigenvalue of the color e_i, i.e. the diagonal of ρ(T).
    pub fn twist_eigenvalue(&self, i: i64) -> CycloScalar {
        let e = i * i - 1;
        let v = self.a_pow(e);
        if e % 2 == 0 {
            v
        } else {
            -v
        }
    }

    pub fn sqrt_minus_r(&self) -> &CycloScalar {
        &self.sqrt_minus_r
    }

    pub fn eta(&self) -> &CycloScalar {
        &self.eta
    }

    pub fn kappa(&self) -> &CycloScalar {
        &self.kappa
    }

    /// The ω weights (-1)^{i-1}[i], i = 1..m.
    pub fn omega_weights(&self) -> Vec<CycloScalar> {
        (1..=self.colors() as i64)
            .map(|i| {
                let q = self.quantum_int(i);
                if i % 2 == 1 {
                    q
                } else {
                    -q
                }
            })
            .collect()
    }
}

/// √(-r) from the quadratic Gauss sum, on the branch with positive imaginary part.
fn gauss_sqrt_minus_r(field: &Arc<CycloField>) -> CycloScalar {
    let r = field.level() as i64;
    let mut g = CycloScalar::zero_in(field.clone());
    for k in 0..r {
        // ζ_r = ζ_4r^4
        g = &g + &CycloScalar::zeta_pow_in(field.clone(), 4 * ((k * k) % r));
    }
    // g² = r when r ≡ 1 (mod 4), -r when r ≡ 3 (mod 4)
    if r % 4 == 1 {
        g = &g * &CycloScalar::zeta_pow_in(field.clone(), r); // i = ζ_4r^r
    }
    if g.to_complex().im < 0.0 {
        g = -g;
    }
    debug_assert_eq!(&g * &g, CycloScalar::from_int_in(field.clone(), -r));
    g
}

/// A_r = ζ_4r^{2e} at level r.
pub fn embed_a(r: u32, e: i64) -> Result<CycloScalar> {
    Ok(Level::with_twist(r, e)?.a().clone())
}

pub fn quantum_int(n: i64, r: u32) -> Result<CycloScalar> {
    Ok(Level::new(r)?.quantum_int(n))
}

pub fn sqrt_minus_r(r: u32) -> Result<CycloScalar> {
    Ok(Level::new(r)?.sqrt_minus_r().clone())
}

pub fn eta(r: u32) -> Result<CycloScalar> {
    Ok(Level::new(r)?.eta().clone())
}

pub fn kappa(r: u32) -> Result<CycloScalar> {
    Ok(Level::new(r)?.kappa().clone())
}
