use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{domain, Error, Result};

/// Truncated explicit formula for ε(t) = ψ(t)/t − 1:
///
/// `t·ε(t) = −ln 2π − ½·ln(1 − t⁻²) − Σ_γ 2·Re(t^ρ/ρ)`, `ρ = ½ + iγ`.
///
/// `zeros` holds the ordinates γ of the nontrivial zeros in the upper half
/// plane; each one stands for a conjugate pair.
pub fn explicit_formula_epsilon(t: u64, zeros: &[f64]) -> Result<f64> {
    if t < 2 {
        return Err(domain("explicit_formula_epsilon needs t >= 2"));
    }
    let tf = t as f64;
    let ln_t = tf.ln();
    let smooth = -TAU.ln() - 0.5 * (1.0 - tf.powi(-2)).ln();
    let oscillating: f64 = zeros
        .iter()
        .map(|&gamma| {
            let rho = Complex64::new(0.5, gamma);
            2.0 * ((rho * ln_t).exp() / rho).re
        })
        .sum();
    Ok((smooth - oscillating) / tf)
}

/// Reads zero ordinates, one positive decimal per line. Blank lines and text
/// after `#` are ignored.
pub fn parse_zeros(text: &str) -> Result<Vec<f64>> {
    let mut zeros = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let value: f64 =
            line.parse().map_err(|_| Error::Parse { line: i + 1, message: format!("not a number: {line:?}") })?;
        if !(value.is_finite() && value > 0.0) {
            return Err(Error::Parse { line: i + 1, message: format!("expected a positive ordinate, got {line}") });
        }
        zeros.push(value);
    }
    Ok(zeros)
}
