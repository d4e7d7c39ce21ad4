//! Ramanujan sums c_q(n) = Σ_{(p,q)=1} exp(2iπ·pn/q).

use std::f64::consts::TAU;

use num_complex::Complex64;
use num_integer::Integer;

use super::functions::{euler_totient, moebius};
use crate::error::{Error, Result};

/// Exact Ramanujan sum via Hölder's formula
/// c_q(n) = μ(q₁)·φ(q)/φ(q₁) with q₁ = q / gcd(q, n).
///
/// `n` is reduced modulo `q` first, and gcd(q, 0) = q, so c_q(0) = φ(q).
pub fn ramanujan_sum(q: u64, n: i64) -> i64 {
    assert!(q > 0, "ramanujan_sum needs q >= 1");
    let r = n.rem_euclid(q as i64) as u64;
    let g = if r == 0 { q } else { q.gcd(&r) };
    let q1 = q / g;
    moebius(q1) as i64 * (euler_totient(q) / euler_totient(q1)) as i64
}

/// Ramanujan sums for one modulus evaluated from the defining character sum.
///
/// Holds the coprime residues and a table of q-th roots of unity so repeated
/// evaluation over n only does table lookups. This is the independent check
/// on [`ramanujan_sum`]; it never touches the Möbius or totient routines.
#[derive(Debug, Clone)]
pub struct RamanujanOracle {
    q: u64,
    coprime: Vec<u64>,
    roots: Vec<Complex64>,
}

impl RamanujanOracle {
    pub fn new(q: u64) -> Self {
        assert!(q > 0, "modulus must be positive");
        let coprime = (0..q).filter(|&p| p.gcd(&q) == 1).collect();
        let roots = (0..q).map(|k| Complex64::from_polar(1.0, TAU * k as f64 / q as f64)).collect();
        Self { q, coprime, roots }
    }

    /// The unrounded complex sum.
    pub fn sum(&self, n: i64) -> Complex64 {
        let r = n.rem_euclid(self.q as i64) as u128;
        let q = self.q as u128;
        self.coprime.iter().map(|&p| self.roots[((p as u128 * r) % q) as usize]).sum()
    }

    /// Rounds the character sum to the nearest integer, failing when the
    /// imaginary part or the rounding residue reaches 1e-9·φ(q).
    pub fn eval(&self, n: i64) -> Result<i64> {
        let z = self.sum(n);
        let bound = 1e-9 * self.coprime.len() as f64;
        let rounded = z.re.round();
        if z.im.abs() >= bound || (z.re - rounded).abs() >= bound {
            return Err(Error::OracleFailure(format!(
                "c_{}({n}) = {} + {}i does not round cleanly",
                self.q, z.re, z.im
            )));
        }
        Ok(rounded as i64)
    }
}

/// Ramanujan sum from its definition as a sum of primitive characters.
pub fn ramanujan_sum_bruteforce(q: u64, n: i64) -> Result<i64> {
    RamanujanOracle::new(q).eval(n)
}
