use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};

/// The cyclotomic field Q(ζ) with ζ a primitive 4r-th root of unity.
///
/// Elements are stored as integer residues modulo Φ_4r (see [`CycloScalar`](super::CycloScalar)).
/// The context caches the reductions of every power ζ^k, 0 ≤ k < 4r, so that
/// multiplication and Galois actions never need polynomial division.
#[derive(Debug)]
pub struct CycloField {
    level: u32,
    order: u32,
    modulus: Vec<i64>,
    powers: Vec<Vec<BigInt>>,
    units: Vec<u32>,
}

impl CycloField {
    fn build(level: u32) -> Self {
        let order = 4 * level;
        let modulus = cyclotomic_poly(order as usize);
        let degree = modulus.len() - 1;

        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..order {
            powers.push(cur.iter().map(|&c| BigInt::from(c)).collect());
            // multiply by x and reduce by the monic modulus
            let top = cur[degree - 1];
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1] - top * modulus[i];
            }
            cur[0] = -top * modulus[0];
        }

        let units = (1..order).filter(|k| k.gcd(&order) == 1).collect();
        Self { level, order, modulus, powers, units }
    }

    /// The odd level r.
    pub fn level(&self) -> u32 {
        self.level
    }

    /// 4r, the order of the generator ζ.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// deg Φ_4r.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Coefficients of Φ_4r, low to high.
    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    /// Residue of ζ^k for any integer k.
    pub fn power(&self, k: i64) -> &[BigInt] {
        &self.powers[k.rem_euclid(self.order as i64) as usize]
    }

    /// Exponents j with gcd(j, 4r) = 1, i.e. the Galois group.
    pub fn units(&self) -> &[u32] {
        &self.units
    }
}

/// Shared field context for level `r`. Contexts are built once and cached.
pub fn field(r: u32) -> Result<Arc<CycloField>> {
    if r < 3 || r % 2 == 0 {
        return Err(Error::InvalidLevel(r as i64));
    }
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloField>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("cyclotomic field cache poisoned");
    Ok(guard
        .entry(r)
        .or_insert_with(|| Arc::new(CycloField::build(r)))
        .clone())
}

/// Φ_n by the recursive quotient (x^n - 1) / ∏_{d | n, d < n} Φ_d.
pub fn cyclotomic_poly(n: usize) -> Vec<i64> {
    assert!(n >= 1);
    let mut num = vec![0i64; n + 1];
    num[0] = -1;
    num[n] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = div_monic(&num, &cyclotomic_poly(d));
        }
    }
    num
}

fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    debug_assert_eq!(den[dn], 1);
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    quot
}
