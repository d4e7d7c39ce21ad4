use std::f64::consts::{PI, TAU};
use std::io::{self, Write};

use num_complex::Complex64;

use super::zeta::{ln_gamma, zeta_complex};
use crate::error::{domain, Result};
use crate::fmt::sig12;

/// Largest grid step used to unwrap the scattering phase.
pub const MAX_GRID_STEP: f64 = 0.01;

/// Largest wavenumber accepted by the scattering routines.
const MAX_K: f64 = 50.0;

/// `Z(s) = ζ(s)/ζ(s + 1)`.
pub fn zeta_quotient(s: Complex64) -> Result<Complex64> {
    Ok(zeta_complex(s)? / zeta_complex(s + 1.0)?)
}

fn check_k(k: f64) -> Result<()> {
    if !(k > 0.0 && k <= MAX_K) {
        return Err(domain(format!("wavenumber must lie in (0, {MAX_K}]")));
    }
    Ok(())
}

fn wrap(x: f64) -> f64 {
    let r = (x + PI).rem_euclid(TAU) - PI;
    if r == -PI {
        PI
    } else {
        r
    }
}

/// `θ(k) = ½·arg Z(2ik)` on the grid `k_j = j·step`, `j = 1..=n`, unwrapped
/// by continuing each argument onto the branch nearest its predecessor.
pub fn scattering_phase_curve(k_max: f64, step: f64) -> Result<Vec<(f64, f64)>> {
    check_k(k_max)?;
    if !(step > 0.0 && step <= MAX_GRID_STEP) {
        return Err(domain(format!("grid step must lie in (0, {MAX_GRID_STEP}]")));
    }
    let n = (k_max / step * (1.0 - 1e-12)).ceil() as usize;
    let mut out = Vec::with_capacity(n);
    let mut previous: Option<f64> = None;
    for j in 1..=n {
        let k = (j as f64 * step).min(k_max);
        let arg = zeta_quotient(Complex64::new(0.0, 2.0 * k))?.arg();
        let unwrapped = match previous {
            None => arg,
            Some(p) => p + wrap(arg - p),
        };
        previous = Some(unwrapped);
        out.push((k, 0.5 * unwrapped));
    }
    Ok(out)
}

/// Unwrapped `θ(k)` for `0 < k ≤ 50`, continued from small k on a grid of
/// step at most [`MAX_GRID_STEP`] that ends exactly at `k`.
pub fn scattering_phase(k: f64) -> Result<f64> {
    check_k(k)?;
    let n = (k / MAX_GRID_STEP).ceil().max(1.0);
    let curve = scattering_phase_curve(k, k / n)?;
    Ok(curve.last().expect("nonempty grid").1)
}

/// Completed reflection coefficient `√π·Γ(ik)/Γ(½ + ik)·Z(2ik)`, which has
/// unit modulus.
pub fn scattering_matrix(k: f64) -> Result<Complex64> {
    check_k(k)?;
    // Γ(ik) = Γ(1 + ik)/(ik)
    let ik = Complex64::new(0.0, k);
    let ln_ratio = ln_gamma(ik + 1.0)? - ik.ln() - ln_gamma(ik + 0.5)?;
    Ok(ln_ratio.exp() * PI.sqrt() * zeta_quotient(ik * 2.0)?)
}

/// Writes `k,theta` rows under a header.
pub fn write_phase_csv<W: Write>(curve: &[(f64, f64)], out: &mut W) -> io::Result<()> {
    writeln!(out, "k,theta")?;
    for &(k, theta) in curve {
        writeln!(out, "{},{}", sig12(k), sig12(theta))?;
    }
    Ok(())
}
