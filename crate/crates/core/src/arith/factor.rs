//! Integer factorization for 64-bit inputs.
//!
//! Inputs up to [`SIEVE_LIMIT`] are factored by walking a smallest-prime-factor
//! table that is built once on first use. Larger inputs go through trial
//! division by small primes, a deterministic Miller–Rabin test and Brent's
//! variant of Pollard's rho.

use std::sync::OnceLock;

use crate::error::{domain, Result};

/// Upper bound of the smallest-prime-factor table.
#[cfg(not(target_arch = "wasm32"))]
pub const SIEVE_LIMIT: u64 = 10_000_000;
#[cfg(target_arch = "wasm32")]
pub const SIEVE_LIMIT: u64 = 1 << 20;

/// Largest accepted input, 2^63 − 1.
pub const MAX_INPUT: u64 = i64::MAX as u64;

static SPF: OnceLock<Vec<u32>> = OnceLock::new();

fn smallest_prime_factors() -> &'static [u32] {
    SPF.get_or_init(|| {
        let limit = SIEVE_LIMIT as usize;
        let mut spf = vec![0u32; limit + 1];
        let mut primes: Vec<u32> = Vec::with_capacity(700_000);
        for i in 2..=limit {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
            }
            let si = spf[i];
            for &p in &primes {
                let m = p as usize * i;
                if p > si || m > limit {
                    break;
                }
                spf[m] = p;
            }
        }
        spf
    })
}

/// A positive integer together with its prime factorization.
///
/// Primes are strictly increasing and exponents are at least one; the empty
/// factor list represents 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactoredInteger {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl FactoredInteger {
    pub fn value(&self) -> u64 {
        self.value
    }

    /// `(prime, exponent)` pairs in increasing prime order.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// `Some((p, r))` when the value is `p^r` with `r ≥ 1`.
    pub fn prime_power(&self) -> Option<(u64, u32)> {
        match self.factors.as_slice() {
            [single] => Some(*single),
            _ => None,
        }
    }

    /// Euler's totient computed multiplicatively from the factorization.
    pub fn totient(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e - 1) * (p - 1)).product()
    }
}

/// Factors `n` into primes.
///
/// Rejects `n = 0` and inputs above 2^63 − 1.
pub fn factorize(n: u64) -> Result<FactoredInteger> {
    if n == 0 {
        return Err(domain("cannot factor 0"));
    }
    if n > MAX_INPUT {
        return Err(domain(format!("{n} exceeds the supported bound 2^63 - 1")));
    }
    let mut factors = Vec::new();
    if n <= SIEVE_LIMIT {
        let spf = smallest_prime_factors();
        let mut m = n as usize;
        while m > 1 {
            let p = spf[m] as usize;
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            factors.push((p as u64, e));
        }
    } else {
        let mut primes = Vec::new();
        let mut m = n;
        for p in (2u64..1000).filter(|&p| is_small_prime(p)) {
            if p * p > m {
                break;
            }
            while m % p == 0 {
                m /= p;
                primes.push(p);
            }
        }
        if m > 1 {
            split_into(m, &mut primes);
        }
        primes.sort_unstable();
        for p in primes {
            match factors.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => factors.push((p, 1)),
            }
        }
    }
    Ok(FactoredInteger { value: n, factors })
}

fn is_small_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn split_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(n);
    split_into(d, out);
    split_into(n / d, out);
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Returns a nontrivial factor of the odd composite `n`.
fn pollard_brent(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let gcd = num_integer::gcd::<u64>;
    for c in 1..n {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut y, m) = (2u64, 128u64);
        let (mut g, mut r, mut q) = (1u64, 1u64, 1u64);
        let (mut x, mut ys) = (y, y);
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!("composite {n} has a factor")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_factor(mut n: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        let mut d = 2;
        while d * d <= n {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            if e > 0 {
                out.push((d, e));
            }
            d += 1;
        }
        if n > 1 {
            out.push((n, 1));
        }
        out
    }

    #[test]
    fn small_values() {
        assert!(factorize(1).unwrap().factors().is_empty());
        assert_eq!(factorize(12).unwrap().factors(), &[(2, 2), (3, 1)]);
        assert_eq!(factorize(0), Err(crate::Error::Domain("cannot factor 0".into())));
    }

    #[test]
    fn mersenne_61_is_prime() {
        let m61 = (1u64 << 61) - 1;
        assert!(is_prime(m61));
        assert_eq!(factorize(m61).unwrap().factors(), &[(m61, 1)]);
    }

    #[test]
    fn rejects_values_above_bound() {
        assert!(factorize(u64::MAX).is_err());
        assert!(factorize(MAX_INPUT).is_ok());
    }

    #[test]
    fn sieve_matches_trial_division() {
        for n in (1..5000).chain(SIEVE_LIMIT - 200..=SIEVE_LIMIT) {
            assert_eq!(factorize(n).unwrap().factors(), naive_factor(n).as_slice(), "n = {n}");
        }
    }

    #[test]
    fn large_semiprimes_and_powers() {
        let cases: [(u64, &[(u64, u32)]); 5] = [
            (1_000_000_007 * 998_244_353, &[(998_244_353, 1), (1_000_000_007, 1)]),
            (2_147_483_647 * 2_147_483_629, &[(2_147_483_629, 1), (2_147_483_647, 1)]),
            (3u64.pow(39), &[(3, 39)]),
            (2u64.pow(62), &[(2, 62)]),
            (600_851_475_143, &[(71, 1), (839, 1), (1471, 1), (6857, 1)]),
        ];
        for (n, expected) in cases {
            let f = factorize(n).unwrap();
            assert_eq!(f.factors(), expected, "n = {n}");
            let product: u64 = f.factors().iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(product, n);
        }
    }

    #[test]
    fn primality_edge_cases() {
        for n in [0u64, 1, 4, 561, 1105, 3_215_031_751, 3_825_123_056_546_413_051] {
            assert!(!is_prime(n), "{n}");
        }
        for n in [2u64, 3, 37, 41, 1_000_000_007, 18_446_744_073_709_551_557] {
            assert!(is_prime(n), "{n}");
        }
    }
}
