//! Classical arithmetic functions.
//!
//! All functions take `n ≥ 1` and panic on zero, the way integer routines in
//! `num-integer` treat out-of-domain input. Use [`factorize`] directly when the
//! error should be recoverable.

use num_integer::Integer;

use super::factor::{factorize, pow_mod, FactoredInteger};
use crate::error::{domain, Error, Result};

fn factored(n: u64) -> FactoredInteger {
    factorize(n).unwrap_or_else(|e| panic!("arithmetic function of {n}: {e}"))
}

/// Euler's totient φ(n).
pub fn euler_totient(n: u64) -> u64 {
    factored(n).totient()
}

/// Möbius function μ(n).
pub fn moebius(n: u64) -> i8 {
    let f = factored(n);
    if !f.is_squarefree() {
        0
    } else if f.factors().len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Von Mangoldt function Λ(n): `ln p` for `n = p^r`, zero otherwise.
pub fn mangoldt(n: u64) -> f64 {
    match factored(n).prime_power() {
        Some((p, _)) => (p as f64).ln(),
        None => 0.0,
    }
}

/// Modified Mangoldt function b(n) = Λ(n)·φ(n)/n.
pub fn mangoldt_b(n: u64) -> f64 {
    let f = factored(n);
    match f.prime_power() {
        // φ(p^r)/p^r = (p − 1)/p
        Some((p, _)) => (p as f64).ln() * (p - 1) as f64 / p as f64,
        None => 0.0,
    }
}

/// Carmichael's λ(n): the exponent of the unit group (Z/nZ)*.
pub fn carmichael_lambda(n: u64) -> u64 {
    carmichael_of(&factored(n))
}

fn carmichael_of(f: &FactoredInteger) -> u64 {
    f.factors().iter().fold(1u64, |acc, &(p, e)| {
        let part = match (p, e) {
            (2, 1) => 1,
            (2, 2) => 2,
            (2, e) => 1 << (e - 2),
            (p, e) => p.pow(e - 1) * (p - 1),
        };
        acc.lcm(&part)
    })
}

/// Multiplicative order of `g` modulo `q`, or `None` when `gcd(g, q) ≠ 1`.
pub fn multiplicative_order(g: u64, q: u64) -> Option<u64> {
    assert!(q > 0, "modulus must be positive");
    if q == 1 {
        return Some(1);
    }
    if g.gcd(&q) != 1 {
        return None;
    }
    let lambda = carmichael_lambda(q);
    let mut order = lambda;
    for &(r, _) in factored(lambda).factors() {
        while order % r == 0 && pow_mod(g, order / r, q) == 1 {
            order /= r;
        }
    }
    Some(order)
}

/// Whether (Z/qZ)* is cyclic: q ∈ {1, 2, 4, p^r, 2p^r} for an odd prime p.
pub fn has_primitive_root(q: u64) -> bool {
    let f = factored(q);
    match f.factors() {
        [] => true,
        [(2, e)] => *e <= 2,
        [(_, _)] => true,
        [(2, 1), (_, _)] => true,
        _ => false,
    }
}

/// Smallest primitive root modulo `q ≥ 2`, or `None` when the unit group is
/// not cyclic.
pub fn primitive_root(q: u64) -> Option<u64> {
    assert!(q >= 2, "primitive_root needs q >= 2");
    if !has_primitive_root(q) {
        return None;
    }
    let phi = euler_totient(q);
    let phi_primes: Vec<u64> = factored(phi).primes().collect();
    (1..q).find(|&g| g.gcd(&q) == 1 && phi_primes.iter().all(|&r| pow_mod(g, phi / r, q) != 1))
}

/// The cycle of powers `g^α mod q` for α = 1..2·period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleTable {
    g: u64,
    q: u64,
    powers: Vec<u64>,
    period: u64,
}

impl CycleTable {
    pub fn base(&self) -> u64 {
        self.g
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    /// `powers()[α − 1] = g^α mod q`.
    pub fn powers(&self) -> &[u64] {
        &self.powers
    }

    /// Multiplicative order of the base.
    pub fn period(&self) -> u64 {
        self.period
    }
}

/// Powers of `g` modulo `q` over two full periods.
pub fn power_cycle(g: u64, q: u64) -> Result<CycleTable> {
    if q < 2 {
        return Err(domain("power_cycle needs q >= 2"));
    }
    let period = multiplicative_order(g, q).ok_or(Error::NotCoprime { value: g, modulus: q })?;
    let mut powers = Vec::with_capacity(2 * period as usize);
    let mut x = 1u64;
    for _ in 0..2 * period {
        x = super::factor::mul_mod(x, g % q, q);
        powers.push(x);
    }
    Ok(CycleTable { g, q, powers, period })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_order(g: u64, q: u64) -> u64 {
        let mut x = g % q;
        let mut k = 1;
        while x != 1 % q {
            x = x * g % q;
            k += 1;
        }
        k
    }

    #[test]
    fn totient_examples() {
        assert_eq!(euler_totient(1), 1);
        assert_eq!(euler_totient(7), 6);
        assert_eq!(euler_totient(9), 6);
        assert_eq!(euler_totient(12), 4);
        for n in 1..=300u64 {
            let count = (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64;
            assert_eq!(euler_totient(n), count, "n = {n}");
        }
    }

    #[test]
    fn moebius_examples() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(12), 0);
        assert_eq!(moebius(30), -1);
        assert_eq!(moebius(6), 1);
        assert_eq!(moebius(7), -1);
    }

    #[test]
    fn mangoldt_examples() {
        let ln2 = 2f64.ln();
        assert_eq!(mangoldt(1), 0.0);
        assert!((mangoldt(8) - ln2).abs() < 1e-15);
        assert_eq!(mangoldt(6), 0.0);
        assert!((mangoldt(7) - 7f64.ln()).abs() < 1e-15);

        assert_eq!(mangoldt_b(1), 0.0);
        assert!((mangoldt_b(4) - 0.5 * ln2).abs() < 1e-15);
        assert!((mangoldt_b(9) - 2.0 / 3.0 * 3f64.ln()).abs() < 1e-15);
        for n in 1..=200u64 {
            let expected = mangoldt(n) * euler_totient(n) as f64 / n as f64;
            assert!((mangoldt_b(n) - expected).abs() < 1e-14, "n = {n}");
        }
    }

    #[test]
    fn carmichael_examples() {
        assert_eq!(carmichael_lambda(1), 1);
        assert_eq!(carmichael_lambda(8), 2);
        assert_eq!(carmichael_lambda(7), 6);
        assert_eq!(carmichael_lambda(15), 4);
    }

    #[test]
    fn carmichael_is_max_unit_order() {
        for q in 2..=400u64 {
            let max_order = (1..q).filter(|g| g.gcd(&q) == 1).map(|g| brute_order(g, q)).max().unwrap();
            assert_eq!(carmichael_lambda(q), max_order, "q = {q}");
        }
    }

    #[test]
    fn primitive_root_examples() {
        assert_eq!(primitive_root(7), Some(3));
        assert_eq!(primitive_root(9), Some(2));
        assert_eq!(primitive_root(8), None);
        assert_eq!(primitive_root(2), Some(1));
        assert_eq!(primitive_root(4), Some(3));
        assert_eq!(primitive_root(18), Some(5));
        assert_eq!(primitive_root(15), None);
    }

    #[test]
    fn primitive_root_order_equals_totient() {
        for q in 2..=300u64 {
            let phi = euler_totient(q);
            match primitive_root(q) {
                Some(g) => {
                    assert_eq!(brute_order(g, q), phi, "q = {q}");
                    assert_eq!(carmichael_lambda(q), phi, "q = {q}");
                }
                None => {
                    assert!(carmichael_lambda(q) < phi, "q = {q}");
                    let brute = (1..q).any(|g| g.gcd(&q) == 1 && brute_order(g, q) == phi);
                    assert!(!brute, "q = {q} has a primitive root");
                }
            }
        }
    }

    #[test]
    fn reference_cycle_tables() {
        let t = power_cycle(3, 7).unwrap();
        assert_eq!(t.period(), 6);
        assert_eq!(&t.powers()[..8], &[3, 2, 6, 4, 5, 1, 3, 2]);
        let t = power_cycle(2, 9).unwrap();
        assert_eq!(t.period(), 6);
        assert_eq!(&t.powers()[..8], &[2, 4, 8, 7, 5, 1, 2, 4]);
        let t = power_cycle(3, 8).unwrap();
        assert_eq!(t.period(), 2);
        assert_eq!(t.powers(), &[3, 1, 3, 1]);
    }

    #[test]
    fn power_cycle_rejects_non_units() {
        assert_eq!(power_cycle(2, 8), Err(Error::NotCoprime { value: 2, modulus: 8 }));
        assert!(power_cycle(1, 1).is_err());
    }
}
