use std::fmt::Write;

use crate::cyclo::{CycloScalar, Level};
use crate::error::Result;
use crate::obstruction::{check_prime_level, f_r_vectors};
use crate::tqft::{rho_s, rho_t, Matrix};

fn line(out: &mut String, label: &str, x: &CycloScalar) {
    let z = x.to_complex();
    writeln!(out, "{label} = {x}  ≈ {:.6}{:+.6}i", z.re, z.im).unwrap();
}

fn matrix(out: &mut String, name: &str, m: &Matrix) {
    writeln!(out, "{name}:").unwrap();
    for i in 0..m.size() {
        for j in 0..m.size() {
            line(out, &format!("  [{},{}]", i + 1, j + 1), m.entry(i, j));
        }
    }
}

/// Text dump of the level-r constants: quantum integers, η, κ, ρ(S), ρ(T) and F_r,
/// each exact with a floating-point image under the default embedding.
pub fn show_constants(r: u32, twist: i64) -> Result<String> {
    let level = Level::with_twist(r, twist)?;
    let mut out = String::new();
    writeln!(out, "level r = {r}, twist e = {twist}, colors m = {}", level.colors()).unwrap();
    line(&mut out, "A", level.a());
    for n in 1..=level.colors() as i64 {
        line(&mut out, &format!("[{n}]"), &level.quantum_int(n));
    }
    line(&mut out, "eta", level.eta());
    line(&mut out, "kappa", level.kappa());
    writeln!(out, "kappa^(4r) = 1: {}", level.kappa().pow(4 * r as i64).is_one()).unwrap();
    matrix(&mut out, "rho(S)", &rho_s(&level));
    matrix(&mut out, "rho(T)", &rho_t(&level));
    match check_prime_level(r) {
        Ok(()) => {
            let set = f_r_vectors(&level);
            writeln!(out, "F_{r}: {} vectors", set.len()).unwrap();
            for (label, v) in &set {
                writeln!(out, "  {label}:").unwrap();
                for (i, x) in v.entries().iter().enumerate() {
                    line(&mut out, &format!("    f_{}", i + 1), x);
                }
            }
        }
        Err(e) => writeln!(out, "F_{r}: not defined ({e})").unwrap(),
    }
    Ok(out)
}
