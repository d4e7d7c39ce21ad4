//! Phase expectation values, variances and pair correlations of the pure
//! phase state `u_n = q^(−1/2)·exp(i·n·β)`.
//!
//! Expectation values are evaluated as literal double sums over the chosen
//! index window. The double sums are real by symmetry; the imaginary part that
//! survives in floating point is returned alongside the value so callers can
//! check it.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use num_integer::Integer;

use super::operators::{check_dimension, phase_state, ramanujan_diagonals};
use super::{ComplexMatrix, IndexRange};
use crate::arith::{mangoldt, KloostermanTable};
use crate::error::{Error, Result};

/// Window used by the locked-state operators unless a caller picks another.
pub const DEFAULT_LOCKED_RANGE: IndexRange = IndexRange::Full;
/// Window used by the pairs correlation unless a caller picks another.
pub const DEFAULT_PAIRS_RANGE: IndexRange = IndexRange::Totient;

/// Largest imaginary residue tolerated on the locked expectation.
pub const LOCKED_IMAG_TOLERANCE: f64 = 1e-9;
/// Largest imaginary residue tolerated on the pairs expectation.
pub const PAIRS_IMAG_TOLERANCE: f64 = 1e-8;

/// Total coprime probability below which the locked distribution is treated as
/// empty and its variance reported as zero.
pub const EMPTY_DISTRIBUTION_MASS: f64 = 1e-12;

/// The pure phase state `|f⟩` with amplitudes `q^(−1/2)·exp(i·n·β)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PurePhaseState {
    pub q: u64,
    pub beta: f64,
}

impl PurePhaseState {
    pub fn new(q: u64, beta: f64) -> Self {
        Self { q, beta }
    }

    /// The first `len` amplitudes `u_0, …, u_{len−1}`.
    pub fn amplitudes(&self, len: usize) -> Vec<Complex64> {
        let norm = (self.q as f64).sqrt().recip();
        (0..len).map(|n| Complex64::from_polar(norm, n as f64 * self.beta)).collect()
    }

    /// `|⟨θ_p|f⟩|²` for every `p = 0..q`, by direct inner products.
    pub fn phase_probabilities(&self) -> Vec<f64> {
        let len = self.q as usize;
        let f = self.amplitudes(len);
        (0..self.q)
            .map(|p| {
                let theta = phase_state(self.q, p, len);
                theta.iter().zip(&f).map(|(t, u)| t.conj() * u).sum::<Complex64>().norm_sqr()
            })
            .collect()
    }
}

fn beta_phases(beta: f64, len: usize) -> Vec<Complex64> {
    let span = len as i64 - 1;
    (-span..=span).map(|k| Complex64::from_polar(1.0, beta * k as f64)).collect()
}

/// `(π/q²)·Σ_{n,l} c_q(l − n)·exp[iβ(n − l)]` as a complex number.
pub fn locked_expectation_sum(q: u64, beta: f64, range: IndexRange) -> Result<Complex64> {
    check_dimension(q, 2)?;
    let len = range.len(q);
    let c = ramanujan_diagonals(q, len);
    let e = beta_phases(beta, len);
    let off = len - 1;
    let mut acc = Complex64::new(0.0, 0.0);
    for n in 0..len {
        for l in 0..len {
            acc += c[l + off - n] * e[n + off - l];
        }
    }
    Ok(acc * (PI / (q * q) as f64))
}

/// Expectation of the phase-locking operator in the pure phase state.
///
/// Fails when the imaginary residue of the double sum reaches
/// [`LOCKED_IMAG_TOLERANCE`].
pub fn phase_expectation_locked(q: u64, beta: f64, range: IndexRange) -> Result<f64> {
    let z = locked_expectation_sum(q, beta, range)?;
    if z.im.abs() >= LOCKED_IMAG_TOLERANCE {
        return Err(Error::OracleFailure(format!("locked expectation at q = {q} has imaginary part {}", z.im)));
    }
    Ok(z.re)
}

/// Modified Ramanujan sum `c̃_q(n) = Σ_{(p,q)=1} (p/q)²·exp(2iπ·np/q)`, by
/// direct summation over `p ∈ [0, q)`.
pub fn modified_ramanujan_sum(q: u64, n: i64) -> Complex64 {
    assert!(q > 0, "modulus must be positive");
    let r = n.rem_euclid(q as i64) as u64;
    (0..q)
        .filter(|p| p.gcd(&q) == 1)
        .map(|p| {
            let w = (p as f64 / q as f64).powi(2);
            Complex64::from_polar(w, TAU * ((p * r) % q) as f64 / q as f64)
        })
        .sum()
}

/// Modified expectation `(π/q²)·Σ_{n,l} c̃_q(l − n)·exp[iβ(n − l)]`, real part.
pub fn modified_expectation_locked(q: u64, beta: f64, range: IndexRange) -> Result<f64> {
    check_dimension(q, 2)?;
    let len = range.len(q);
    let span = len as i64 - 1;
    let ct: Vec<Complex64> = (-span..=span).map(|d| modified_ramanujan_sum(q, d)).collect();
    let e = beta_phases(beta, len);
    let off = len - 1;
    let mut acc = Complex64::new(0.0, 0.0);
    for n in 0..len {
        for l in 0..len {
            acc += ct[l + off - n] * e[n + off - l];
        }
    }
    Ok(acc.re * PI / (q * q) as f64)
}

/// Phase variance of the locked states, by definition and by the two closed
/// forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VarianceReport {
    /// `Σ_p (θ_p − ⟨θ⟩)²·P_p / Σ_p P_p` over coprime `p`, with `θ_p = 2πp/q`
    /// and `P_p = |⟨θ_p|f⟩|²`. Zero when the distribution is empty.
    pub definitional: f64,
    /// Total coprime probability `Σ_p P_p`.
    pub locked_mass: f64,
    /// Compact closed form `4⟨Θ̃⟩ + (⟨Θ⟩²/π)(⟨Θ⟩ − 2π)`.
    pub compact_closed_form: f64,
    /// `4π⟨Θ̃⟩ − 2⟨Θ⟩² + ⟨Θ⟩³/π`, the term-by-term expansion.
    pub expanded_closed_form: f64,
}

impl VarianceReport {
    pub fn is_degenerate(&self) -> bool {
        self.locked_mass < EMPTY_DISTRIBUTION_MASS
    }
}

/// Locked phase variance of the pure phase state.
///
/// The definitional value does not depend on `range`; the closed forms use
/// the window for their double sums.
pub fn phase_variance_locked(q: u64, beta: f64, range: IndexRange) -> Result<VarianceReport> {
    check_dimension(q, 2)?;
    let probs = PurePhaseState::new(q, beta).phase_probabilities();
    let locked: Vec<(f64, f64)> =
        (0..q).filter(|p| p.gcd(&q) == 1).map(|p| (TAU * p as f64 / q as f64, probs[p as usize])).collect();
    let mass: f64 = locked.iter().map(|&(_, w)| w).sum();
    let definitional = if mass < EMPTY_DISTRIBUTION_MASS {
        0.0
    } else {
        let mean = locked.iter().map(|&(t, w)| t * w).sum::<f64>() / mass;
        locked.iter().map(|&(t, w)| (t - mean).powi(2) * w).sum::<f64>() / mass
    };

    let m = locked_expectation_sum(q, beta, range)?.re;
    let mt = modified_expectation_locked(q, beta, range)?;
    Ok(VarianceReport {
        definitional,
        locked_mass: mass,
        compact_closed_form: 4.0 * mt + m * m / PI * (m - 2.0 * PI),
        expanded_closed_form: 4.0 * PI * mt - 2.0 * m * m + m.powi(3) / PI,
    })
}

/// Generalized Kloosterman sum `k̃_q(n, l) = Σ_{p,p̄} p·exp[(2iπ/q)(p − p̄)(l − n)]`.
pub fn generalized_kloosterman_sum(q: u64, n: i64, l: i64) -> Result<Complex64> {
    let table = KloostermanTable::new(q)?;
    Ok(generalized_from_table(&table, l as i128 - n as i128))
}

fn generalized_from_table(table: &KloostermanTable, d: i128) -> Complex64 {
    table.pairs().iter().map(|pr| table.root((pr.p as i128 - pr.pbar as i128) * d) * pr.p as f64).sum()
}

/// `(2π/q²)·Σ_{n,l} k̃_q(n, l)·exp[iβ(n − l)]` as a complex number.
pub fn pairs_expectation_sum(q: u64, beta: f64, range: IndexRange) -> Result<Complex64> {
    check_dimension(q, 2)?;
    let table = KloostermanTable::new(q)?;
    // k̃ depends on l − n only through its residue mod q
    let kt: Vec<Complex64> = (0..q as i128).map(|d| generalized_from_table(&table, d)).collect();
    let len = range.len(q);
    let e = beta_phases(beta, len);
    let off = len - 1;
    let mut acc = Complex64::new(0.0, 0.0);
    for n in 0..len {
        for l in 0..len {
            let d = (l as i64 - n as i64).rem_euclid(q as i64) as usize;
            acc += kt[d] * e[n + off - l];
        }
    }
    Ok(acc * (TAU / (q * q) as f64))
}

/// Phase expectation for Kloosterman pairs.
///
/// Fails when the imaginary residue reaches [`PAIRS_IMAG_TOLERANCE`].
pub fn phase_expectation_pairs(q: u64, beta: f64, range: IndexRange) -> Result<f64> {
    let z = pairs_expectation_sum(q, beta, range)?;
    if z.im.abs() >= PAIRS_IMAG_TOLERANCE {
        return Err(Error::OracleFailure(format!("pairs expectation at q = {q} has imaginary part {}", z.im)));
    }
    Ok(z.re)
}

/// Pair correlation `Σ_{p,p̄} θ_p⟨f|π_p π_p̄|f⟩` built from explicit
/// window-restricted projectors `π_p = |θ_p⟩⟨θ_p|`.
///
/// The product of the two projectors is taken entrywise, `q²·(π_p ∘ π_p̄ᵀ)`,
/// whose elements are `exp[(2iπ/q)(p − p̄)(n − l)]`. An ordinary operator
/// product would vanish for `p ≠ p̄` in the full window and does not reproduce
/// the generalized Kloosterman double sum.
pub fn pairs_expectation_from_projectors(q: u64, beta: f64, range: IndexRange) -> Result<Complex64> {
    check_dimension(q, 2)?;
    let table = KloostermanTable::new(q)?;
    let len = range.len(q);
    let f = PurePhaseState::new(q, beta).amplitudes(len);
    let qf = q as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for pair in table.pairs() {
        let a = phase_state(q, pair.p, len);
        let b = phase_state(q, pair.pbar, len);
        let pi_p = ComplexMatrix::outer(&a, &a);
        let pi_pbar = ComplexMatrix::outer(&b, &b);
        let product = pi_p.hadamard(&pi_pbar.transpose()).scale(qf * qf);
        let theta_p = TAU * pair.p as f64 / qf;
        acc += product.expectation(&f) * theta_p;
    }
    Ok(acc)
}

/// `π·Λ(q)/ln q`: π at primes, π/r at `p^r`, zero elsewhere.
pub fn mangoldt_fit(q: u64) -> f64 {
    assert!(q >= 2, "mangoldt_fit needs q >= 2");
    PI * mangoldt(q) / (q as f64).ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{euler_totient, is_prime};

    #[test]
    fn locked_expectation_examples() {
        let v = phase_expectation_locked(2, 1.0, IndexRange::Full).unwrap();
        assert!((v - PI / 2.0 * (1.0 - 1f64.cos())).abs() < 1e-14, "{v}");
        for q in (2..60).filter(|&q| is_prime(q)) {
            assert!(phase_expectation_locked(q, 0.0, IndexRange::Full).unwrap().abs() < 1e-12);
        }
    }

    #[test]
    fn locked_expectation_is_pi_times_coprime_mass() {
        for q in 2..=40 {
            for beta in [0.3, 1.0, 2.5] {
                let probs = PurePhaseState::new(q, beta).phase_probabilities();
                let mass: f64 = (0..q).filter(|p| p.gcd(&q) == 1).map(|p| probs[p as usize]).sum();
                let v = phase_expectation_locked(q, beta, IndexRange::Full).unwrap();
                assert!((v - PI * mass).abs() < 1e-11, "q = {q}");
            }
        }
    }

    #[test]
    fn probabilities_sum_to_one() {
        for q in [2u64, 7, 30] {
            let total: f64 = PurePhaseState::new(q, 0.7).phase_probabilities().iter().sum();
            assert!((total - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn variance_of_single_state_is_zero() {
        for beta in [0.0, 0.4, 1.0, 3.0] {
            assert_eq!(phase_variance_locked(2, beta, IndexRange::Full).unwrap().definitional, 0.0);
        }
    }

    #[test]
    fn variance_q5_term_by_term() {
        let beta = 1.0f64;
        let prob = |p: u64| {
            let x = TAU * p as f64 / 5.0 - beta;
            ((5.0 * x / 2.0).sin() / (x / 2.0).sin()).powi(2) / 25.0
        };
        let w: Vec<(f64, f64)> = (1..5).map(|p| (TAU * p as f64 / 5.0, prob(p))).collect();
        let m: f64 = w.iter().map(|x| x.1).sum();
        let mean = w.iter().map(|x| x.0 * x.1).sum::<f64>() / m;
        let var = w.iter().map(|x| (x.0 - mean).powi(2) * x.1).sum::<f64>() / m;
        let report = phase_variance_locked(5, beta, IndexRange::Full).unwrap();
        assert!((report.definitional - var).abs() < 1e-12);
        assert!((report.locked_mass - m).abs() < 1e-12);
    }

    #[test]
    fn expanded_closed_form_is_unnormalized_variance_about_expectation() {
        // Full window: ⟨Θ⟩ = π·mass and 4π⟨Θ̃⟩ = Σ θ_p² P_p, so the expansion is
        // Σ_p (θ_p − ⟨Θ⟩)² P_p with ΣθP replaced by ⟨Θ⟩.
        for q in [3u64, 8, 11] {
            let beta = 0.8;
            let r = phase_variance_locked(q, beta, IndexRange::Full).unwrap();
            let probs = PurePhaseState::new(q, beta).phase_probabilities();
            let second: f64 = (0..q)
                .filter(|p| p.gcd(&q) == 1)
                .map(|p| (TAU * p as f64 / q as f64).powi(2) * probs[p as usize])
                .sum();
            let mt = modified_expectation_locked(q, beta, IndexRange::Full).unwrap();
            assert!((4.0 * PI * mt - second).abs() < 1e-10);
            assert!(r.expanded_closed_form.is_finite() && r.compact_closed_form.is_finite());
        }
    }

    #[test]
    fn variance_is_two_pi_periodic() {
        for q in [3u64, 10, 13, 21] {
            for beta in [0.0, 0.5, 1.0, PI] {
                let a = phase_variance_locked(q, beta, IndexRange::Full).unwrap().definitional;
                let b = phase_variance_locked(q, beta + TAU, IndexRange::Full).unwrap().definitional;
                assert!((a - b).abs() < 1e-9, "q = {q}, beta = {beta}");
            }
        }
    }

    #[test]
    fn pairs_small_cases() {
        // q = 2: the single pair (1, 1) makes k̃ ≡ 1
        for beta in [0.0, 1.0, 2.0] {
            for range in IndexRange::ALL {
                let len = range.len(2) as f64;
                let direct: f64 = (0..range.len(2))
                    .flat_map(|n| (0..range.len(2)).map(move |l| (n as f64 - l as f64) * beta))
                    .map(f64::cos)
                    .sum();
                let v = phase_expectation_pairs(2, beta, range).unwrap();
                assert!((v - TAU / 4.0 * direct).abs() < 1e-12, "len {len}");
            }
        }
        for beta in [0.0, 1.0] {
            assert!(phase_expectation_pairs(5, beta, DEFAULT_PAIRS_RANGE).unwrap().is_finite());
        }
    }

    #[test]
    fn pairs_q3_enumeration() {
        // pairs (1, 2) and (2, 1); window n, l ∈ {0, 1}
        let beta = 0.9f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (p, pbar) in [(1i64, 2i64), (2, 1)] {
            for n in 0..2i64 {
                for l in 0..2i64 {
                    let phase = TAU / 3.0 * ((p - pbar) * (l - n)) as f64 + beta * (n - l) as f64;
                    acc += Complex64::from_polar(p as f64, phase);
                }
            }
        }
        let expected = acc * (TAU / 9.0);
        let formula = pairs_expectation_sum(3, beta, IndexRange::Totient).unwrap();
        let projectors = pairs_expectation_from_projectors(3, beta, IndexRange::Totient).unwrap();
        assert!((formula - expected).norm() < 1e-12);
        assert!((projectors - expected).norm() < 1e-9);
    }

    #[test]
    fn generalized_sum_matches_table_route() {
        let direct = generalized_kloosterman_sum(7, 1, 4).unwrap();
        let table = KloostermanTable::new(7).unwrap();
        let mut acc = Complex64::new(0.0, 0.0);
        for pr in table.pairs() {
            let k = (pr.p as i64 - pr.pbar as i64) * 3;
            acc += Complex64::from_polar(pr.p as f64, TAU * k as f64 / 7.0);
        }
        assert!((direct - acc).norm() < 1e-12);
    }

    #[test]
    fn modified_sum_weights() {
        let z = modified_ramanujan_sum(6, 0);
        assert!((z.re - (1.0 + 25.0) / 36.0).abs() < 1e-15);
        assert!(z.im.abs() < 1e-15);
    }

    #[test]
    fn mangoldt_fit_examples() {
        assert!((mangoldt_fit(7) - PI).abs() < 1e-15);
        assert!((mangoldt_fit(8) - PI / 3.0).abs() < 1e-14);
        assert_eq!(mangoldt_fit(6), 0.0);
        assert_eq!(euler_totient(6), 2);
    }
}
