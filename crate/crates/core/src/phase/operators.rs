//! Phase states, phase-locked projectors, phase operators and commutators.
//!
//! Matrix elements are indexed by number states `|n⟩`. The locked projector
//! has elements `(1/q)·c_q(n − l)` and the pairs projector `(1/q)·k_q(n, l)`.
//! In the full window the locked projector is exactly
//! `Σ_{(p,q)=1} |θ_p⟩⟨θ_p|`; the truncated windows keep only the leading
//! block and lose idempotency.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use super::{ComplexMatrix, IndexRange};
use crate::arith::{ramanujan_sum, KloostermanTable};
use crate::error::{domain, Result};

/// Largest dimension accepted by the phase operators.
pub const MAX_DIMENSION: u64 = 4096;

pub(crate) fn check_dimension(q: u64, min: u64) -> Result<()> {
    if q < min {
        return Err(domain(format!("dimension q = {q} is below {min}")));
    }
    if q > MAX_DIMENSION {
        return Err(domain(format!("dimension q = {q} exceeds {MAX_DIMENSION}")));
    }
    Ok(())
}

/// Quantum Fourier transform, `κ_pn = q^(−1/2)·exp(2iπ·pn/q)` at row `n`,
/// column `p`. Column `p` is the phase state `|θ_p⟩`.
pub fn qft_matrix(q: u64) -> Result<ComplexMatrix> {
    check_dimension(q, 1)?;
    let norm = (q as f64).sqrt().recip();
    Ok(ComplexMatrix::from_fn(q as usize, |n, p| {
        let k = (n as u64 * p as u64) % q;
        Complex64::from_polar(norm, TAU * k as f64 / q as f64)
    }))
}

/// Phase state `|θ_p⟩` in the number basis, truncated to the first `len`
/// components.
pub fn phase_state(q: u64, p: u64, len: usize) -> Vec<Complex64> {
    let norm = (q as f64).sqrt().recip();
    (0..len as u64).map(|n| Complex64::from_polar(norm, TAU * ((p * n) % q) as f64 / q as f64)).collect()
}

/// Ramanujan sums `c_q(d)` for `d ∈ (−len, len)`, indexed by `d + len − 1`.
pub(crate) fn ramanujan_diagonals(q: u64, len: usize) -> Vec<f64> {
    let span = len as i64 - 1;
    (-span..=span).map(|d| ramanujan_sum(q, d) as f64).collect()
}

/// Projector onto the phase-locked states, `(1/q)·c_q(n − l)`.
pub fn locked_projector(q: u64, range: IndexRange) -> Result<ComplexMatrix> {
    check_dimension(q, 2)?;
    let len = range.len(q);
    let c = ramanujan_diagonals(q, len);
    let inv_q = 1.0 / q as f64;
    Ok(ComplexMatrix::from_real_fn(len, |n, l| c[n + len - 1 - l] * inv_q))
}

/// Projector over Kloosterman pairs, `(1/q)·k_q(n, l)`.
pub fn pairs_projector(q: u64, range: IndexRange) -> Result<ComplexMatrix> {
    check_dimension(q, 2)?;
    let table = KloostermanTable::new(q)?;
    let inv_q = 1.0 / q as f64;
    Ok(ComplexMatrix::from_fn(range.len(q), |n, l| table.sum(n as i64, l as i64).value * inv_q))
}

/// Phase-locking operator `Θ^lock = π·P^lock`.
pub fn phase_lock_operator(q: u64, range: IndexRange) -> Result<ComplexMatrix> {
    Ok(locked_projector(q, range)?.scale(PI))
}

/// Phase operator for Kloosterman pairs, `Θ^pairs = π·P^pairs`.
pub fn pairs_phase_operator(q: u64, range: IndexRange) -> Result<ComplexMatrix> {
    Ok(pairs_projector(q, range)?.scale(PI))
}

/// Phase–number commutator `[Θ^lock, N]` with elements
/// `(π/q)·(l − n)·c_q(n − l)`.
pub fn commutator_lock(q: u64, range: IndexRange) -> Result<ComplexMatrix> {
    check_dimension(q, 2)?;
    let len = range.len(q);
    let c = ramanujan_diagonals(q, len);
    let scale = PI / q as f64;
    Ok(ComplexMatrix::from_real_fn(len, |n, l| scale * (l as f64 - n as f64) * c[n + len - 1 - l]))
}

/// Phase–number commutator `[Θ^pairs, N]` with elements
/// `(π/q)·(l − n)·k_q(n, l)`.
pub fn commutator_pairs(q: u64, range: IndexRange) -> Result<ComplexMatrix> {
    check_dimension(q, 2)?;
    let table = KloostermanTable::new(q)?;
    let scale = PI / q as f64;
    Ok(ComplexMatrix::from_fn(range.len(q), |n, l| {
        table.sum(n as i64, l as i64).value * (scale * (l as f64 - n as f64))
    }))
}
