//! Kloosterman pairs p·p̄ ≡ −1 (mod q) and the paired exponential sums
//! k_q(n, l) = Σ exp[(2iπ/q)(p·n − p̄·l)].

use std::f64::consts::TAU;

use num_complex::Complex64;
use num_integer::Integer;

use crate::error::{domain, Result};

/// A coprime residue `p` and its partner `p̄ = −p⁻¹ mod q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KloostermanPair {
    pub p: u64,
    pub pbar: u64,
    pub q: u64,
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 0 {
        return None;
    }
    let ext = (a as i128 % m as i128).extended_gcd(&(m as i128));
    (ext.gcd == 1).then(|| ext.x.rem_euclid(m as i128) as u64)
}

/// All Kloosterman pairs modulo `q ≥ 2`, sorted by `p`; there are φ(q) of them.
pub fn kloosterman_pairs(q: u64) -> Result<Vec<KloostermanPair>> {
    if q < 2 {
        return Err(domain("kloosterman_pairs needs q >= 2"));
    }
    Ok((1..q)
        .filter_map(|p| {
            let inv = mod_inverse(p, q)?;
            Some(KloostermanPair { p, pbar: (q - inv) % q, q })
        })
        .collect())
}

/// Value of a Kloosterman sum.
///
/// The sum is a real algebraic integer but generally not a rational one, so
/// the integer view is only offered when the value sits within 1e-9 of one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KloostermanValue {
    pub value: Complex64,
}

impl KloostermanValue {
    pub const INTEGER_TOLERANCE: f64 = 1e-9;

    pub fn integer(&self) -> Option<i64> {
        let r = self.value.re.round();
        let close =
            (self.value.re - r).abs() < Self::INTEGER_TOLERANCE && self.value.im.abs() < Self::INTEGER_TOLERANCE;
        close.then_some(r as i64)
    }
}

/// Precomputed pairs and roots of unity for repeated evaluation at one `q`.
#[derive(Debug, Clone)]
pub struct KloostermanTable {
    q: u64,
    pairs: Vec<KloostermanPair>,
    roots: Vec<Complex64>,
}

impl KloostermanTable {
    pub fn new(q: u64) -> Result<Self> {
        let pairs = kloosterman_pairs(q)?;
        let roots = (0..q).map(|k| Complex64::from_polar(1.0, TAU * k as f64 / q as f64)).collect();
        Ok(Self { q, pairs, roots })
    }

    pub fn pairs(&self) -> &[KloostermanPair] {
        &self.pairs
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    /// Root of unity exp(2iπ·k/q) for any integer k.
    pub fn root(&self, k: i128) -> Complex64 {
        self.roots[k.rem_euclid(self.q as i128) as usize]
    }

    pub fn sum(&self, n: i64, l: i64) -> KloostermanValue {
        let value = self.pairs.iter().map(|pr| self.root(pr.p as i128 * n as i128 - pr.pbar as i128 * l as i128)).sum();
        KloostermanValue { value }
    }
}

/// Kloosterman sum k_q(n, l) over the pairs of [`kloosterman_pairs`].
pub fn kloosterman_sum(q: u64, n: i64, l: i64) -> Result<KloostermanValue> {
    Ok(KloostermanTable::new(q)?.sum(n, l))
}
