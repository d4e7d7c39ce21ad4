use std::collections::BTreeMap;

use super::ArithmeticSequence;
use crate::arith::{euler_totient, moebius, ramanujan_sum};
use crate::error::{domain, Result};
use crate::par::map_ordered;

/// Ramanujan–Fourier coefficients `a_q` for `q = 1..=qmax`.
#[derive(Debug, Clone, PartialEq)]
pub struct RftSpectrum {
    pub coefficients: BTreeMap<u64, f64>,
    /// Number of samples the estimator used.
    pub samples: usize,
}

impl RftSpectrum {
    pub fn get(&self, q: u64) -> Option<f64> {
        self.coefficients.get(&q).copied()
    }
}

/// Finite-sample estimator `a_q = (1/(φ(q)·N))·Σ_{n=1}^{N} x(n)·c_q(n)`.
pub fn rft_coefficient(x: &ArithmeticSequence, q: u64) -> Result<f64> {
    let n = x.len();
    if q == 0 {
        return Err(domain("rft_coefficient needs q >= 1"));
    }
    if (n as u64) < q {
        return Err(domain(format!("rft_coefficient needs at least q = {q} samples, got {n}")));
    }
    let period: Vec<f64> = (0..q as i64).map(|k| ramanujan_sum(q, k) as f64).collect();
    let total: f64 = x.values().iter().enumerate().map(|(i, v)| v * period[(i + 1) % q as usize]).sum();
    Ok(total / (euler_totient(q) as f64 * n as f64))
}

/// Coefficients `a_1, …, a_qmax` of one sequence.
pub fn rft_spectrum(x: &ArithmeticSequence, qmax: u64) -> Result<RftSpectrum> {
    if qmax == 0 {
        return Err(domain("rft_spectrum needs qmax >= 1"));
    }
    let qs: Vec<u64> = (1..=qmax).collect();
    let values = map_ordered(&qs, |&q| rft_coefficient(x, q));
    let coefficients = qs.into_iter().zip(values).map(|(q, v)| v.map(|v| (q, v))).collect::<Result<_>>()?;
    Ok(RftSpectrum { coefficients, samples: x.len() })
}

/// Partial sum `Σ_{q=1}^{Q} μ(q)/φ(q)·c_q(n)` of the expansion of b(n).
pub fn hardy_expansion_partial(n: u64, big_q: u64) -> f64 {
    assert!(n >= 1 && big_q >= 1, "hardy_expansion_partial needs n, Q >= 1");
    (1..=big_q)
        .filter_map(|q| {
            let mu = moebius(q);
            (mu != 0).then(|| mu as f64 / euler_totient(q) as f64 * ramanujan_sum(q, n as i64) as f64)
        })
        .sum()
}
