use std::io::{self, Write};

use crate::arith::{carmichael_lambda, mangoldt, mangoldt_b};
use crate::error::{domain, Result};
use crate::fmt::sig12;

/// Exponent of the power-law normalization applied to the cumulative
/// Carmichael sum.
pub const CARMICHAEL_EXPONENT: f64 = 1.90;

/// A finite real sequence `x(1), …, x(N)` with a label.
#[derive(Debug, Clone, PartialEq)]
pub struct ArithmeticSequence {
    label: String,
    values: Vec<f64>,
}

impl ArithmeticSequence {
    /// Fails on an empty sequence or a non-finite value.
    pub fn new(label: impl Into<String>, values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(domain("a sequence needs at least one value"));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(domain(format!("value at n = {} is not finite", i + 1)));
        }
        Ok(Self { label: label.into(), values })
    }

    /// Builds `x(n) = f(n)` for `n = 1..=len`.
    pub fn from_fn(label: impl Into<String>, len: usize, f: impl FnMut(u64) -> f64) -> Result<Self> {
        Self::new(label, (1..=len as u64).map(f).collect())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `x(n)` for `1 ≤ n ≤ N`.
    pub fn get(&self, n: u64) -> Option<f64> {
        let i = usize::try_from(n).ok()?.checked_sub(1)?;
        self.values.get(i).copied()
    }

    /// Writes `n,value` rows under a header.
    pub fn write_csv<W: Write>(&self, out: &mut W) -> io::Result<()> {
        writeln!(out, "n,value")?;
        for (i, v) in self.values.iter().enumerate() {
            writeln!(out, "{},{}", i + 1, sig12(*v))?;
        }
        Ok(())
    }
}

/// ψ(t) = Σ_{n ≤ t} Λ(n).
pub fn psi_cumulative(t: u64) -> f64 {
    (1..=t).map(mangoldt).sum()
}

/// ε(t) = ψ(t)/t − 1.
pub fn epsilon(t: u64) -> f64 {
    assert!(t >= 1, "epsilon needs t >= 1");
    psi_cumulative(t) / t as f64 - 1.0
}

/// B(t) = Σ_{n ≤ t} b(n) with b(n) = Λ(n)φ(n)/n.
pub fn b_cumulative(t: u64) -> f64 {
    (1..=t).map(mangoldt_b).sum()
}

/// ε_B(t) = B(t)/t − 1.
pub fn epsilon_b(t: u64) -> f64 {
    assert!(t >= 1, "epsilon_b needs t >= 1");
    b_cumulative(t) / t as f64 - 1.0
}

fn cumulative_error(label: &str, len: usize, term: fn(u64) -> f64) -> Result<ArithmeticSequence> {
    let mut acc = 0.0;
    ArithmeticSequence::from_fn(label, len, |t| {
        acc += term(t);
        acc / t as f64 - 1.0
    })
}

/// ε(1), …, ε(len) by a single cumulative scan.
pub fn epsilon_series(len: usize) -> Result<ArithmeticSequence> {
    cumulative_error("epsilon", len, mangoldt)
}

/// ε_B(1), …, ε_B(len) by a single cumulative scan.
pub fn epsilon_b_series(len: usize) -> Result<ArithmeticSequence> {
    cumulative_error("epsilon_b", len, mangoldt_b)
}

/// b(1), …, b(len).
pub fn mangoldt_b_series(len: usize) -> Result<ArithmeticSequence> {
    ArithmeticSequence::from_fn("mangoldt_b", len, mangoldt_b)
}

/// `(Σ_{n ≤ t} λ(n)) / t^1.90` for `t = 1..=tmax`.
pub fn carmichael_normalized(tmax: u64) -> Result<ArithmeticSequence> {
    if tmax < 2 {
        return Err(domain("carmichael_normalized needs tmax >= 2"));
    }
    let mut acc = 0u64;
    ArithmeticSequence::from_fn("carmichael_normalized", tmax as usize, |t| {
        acc += carmichael_lambda(t);
        acc as f64 / (t as f64).powf(CARMICHAEL_EXPONENT)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psi_small_values() {
        assert_eq!(psi_cumulative(1), 0.0);
        assert_eq!(epsilon(1), -1.0);
        let (l2, l3, l5, l7) = (2f64.ln(), 3f64.ln(), 5f64.ln(), 7f64.ln());
        assert!((psi_cumulative(10) - (3.0 * l2 + 2.0 * l3 + l5 + l7)).abs() < 1e-12);
    }

    #[test]
    fn b_small_values() {
        assert_eq!(b_cumulative(1), 0.0);
        let expected = 0.5 * 2f64.ln() + 2.0 / 3.0 * 3f64.ln() + 0.5 * 2f64.ln();
        assert!((b_cumulative(4) - expected).abs() < 1e-14);
    }

    #[test]
    fn series_match_pointwise() {
        let e = epsilon_series(200).unwrap();
        let eb = epsilon_b_series(200).unwrap();
        for t in [1u64, 2, 17, 100, 200] {
            assert!((e.get(t).unwrap() - epsilon(t)).abs() < 1e-12);
            assert!((eb.get(t).unwrap() - epsilon_b(t)).abs() < 1e-12);
        }
        assert_eq!(e.get(0), None);
        assert_eq!(e.get(201), None);
    }

    #[test]
    fn prime_number_theorem_regime() {
        assert!(epsilon_series(1_000_000).unwrap().get(1_000_000).unwrap().abs() < 0.01);
    }

    #[test]
    fn carmichael_small_values() {
        let s = carmichael_normalized(8).unwrap();
        assert_eq!(s.get(1), Some(1.0));
        let total = (1 + 1 + 2 + 2 + 4 + 2 + 6 + 2) as f64;
        assert!((s.get(8).unwrap() - total / 8f64.powf(1.9)).abs() < 1e-15);
        assert!(carmichael_normalized(1).is_err());
    }

    #[test]
    fn rejects_bad_values() {
        assert!(ArithmeticSequence::new("x", vec![]).is_err());
        assert!(ArithmeticSequence::new("x", vec![1.0, f64::NAN]).is_err());
    }

    #[test]
    fn csv_layout() {
        let s = ArithmeticSequence::new("x", vec![0.5, 1.0 / 3.0]).unwrap();
        let mut out = Vec::new();
        s.write_csv(&mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "n,value\n1,0.5\n2,0.333333333333\n");
    }
}
