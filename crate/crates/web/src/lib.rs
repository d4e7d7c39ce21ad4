//! WebAssembly bindings for the browser demo: Ford circles of a Farey
//! sequence, the locked phase expectation against q, and spectra of
//! arithmetic sequences with their fitted log-log slope.
//!
//! Each binding wraps a plain function that is also usable and testable
//! outside the browser.

use std::f64::consts::TAU;

use arithphase::hyperbolic::{farey_sequence, ford_tangent};
use arithphase::phase::{mangoldt_fit, phase_expectation_locked, IndexRange};
use arithphase::signal::{carmichael_normalized, epsilon_b_series, loglog_slope_fit, periodogram};
use wasm_bindgen::prelude::*;

/// Largest Farey order drawn by the demo.
pub const MAX_ORDER: u32 = 60;
/// Largest dimension swept by the demo.
pub const MAX_Q: u32 = 200;
/// Largest spectrum length computed by the demo.
pub const MAX_SAMPLES: u32 = 1 << 16;

/// Ford circles of the Farey sequence of `order`, flattened as
/// `[x, y, r, q]` per circle in ascending order of `x`.
pub fn ford_circle_data(order: u32) -> Result<Vec<f64>, String> {
    if !(1..=MAX_ORDER).contains(&order) {
        return Err(format!("order must lie in 1..={MAX_ORDER}"));
    }
    let fractions = farey_sequence(order as i64).map_err(|e| e.to_string())?;
    Ok(fractions
        .iter()
        .flat_map(|f| {
            let r = 1.0 / (2.0 * (f.q() * f.q()) as f64);
            [f.to_f64(), r, r, f.q() as f64]
        })
        .collect())
}

/// Number of tangent pairs among neighbouring Farey fractions of `order`,
/// checked in exact arithmetic.
pub fn tangent_neighbour_count(order: u32) -> Result<u32, String> {
    if !(1..=MAX_ORDER).contains(&order) {
        return Err(format!("order must lie in 1..={MAX_ORDER}"));
    }
    let fractions = farey_sequence(order as i64).map_err(|e| e.to_string())?;
    let mut count = 0;
    for w in fractions.windows(2) {
        if ford_tangent(w[0], w[1]).map_err(|e| e.to_string())? {
            count += 1;
        }
    }
    Ok(count)
}

/// Locked expectation and `π·Λ(q)/ln q` for `q = 2..=qmax`, flattened as
/// `[value, mangoldt_fit]` per q.
pub fn expectation_data(beta: f64, qmax: u32, window: &str) -> Result<Vec<f64>, String> {
    if !(2..=MAX_Q).contains(&qmax) {
        return Err(format!("qmax must lie in 2..={MAX_Q}"));
    }
    if !beta.is_finite() {
        return Err("beta must be finite".into());
    }
    let range: IndexRange = window.parse().map_err(|e: arithphase::Error| e.to_string())?;
    let mut out = Vec::with_capacity(2 * qmax as usize);
    for q in 2..=qmax as u64 {
        out.push(phase_expectation_locked(q, beta, range).map_err(|e| e.to_string())?);
        out.push(mangoldt_fit(q));
    }
    Ok(out)
}

/// Locked expectation against β on `points` equally spaced values in
/// `[0, 2π]`.
pub fn expectation_beta_data(q: u32, points: u32, window: &str) -> Result<Vec<f64>, String> {
    if !(2..=MAX_Q).contains(&q) || !(2..=2000).contains(&points) {
        return Err(format!("need 2 <= q <= {MAX_Q} and 2 <= points <= 2000"));
    }
    let range: IndexRange = window.parse().map_err(|e: arithphase::Error| e.to_string())?;
    (0..points)
        .map(|i| {
            let beta = TAU * i as f64 / (points - 1) as f64;
            phase_expectation_locked(q as u64, beta, range).map_err(|e| e.to_string())
        })
        .collect()
}

/// Periodogram with its octave-averaged log-log fit.
#[wasm_bindgen]
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    freqs: Vec<f64>,
    powers: Vec<f64>,
    slope: f64,
    slope_stderr: f64,
    intercept: f64,
    fit_lo: f64,
    fit_hi: f64,
}

#[wasm_bindgen]
impl Spectrum {
    #[wasm_bindgen(getter)]
    pub fn freqs(&self) -> Vec<f64> {
        self.freqs.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn powers(&self) -> Vec<f64> {
        self.powers.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn slope(&self) -> f64 {
        self.slope
    }

    #[wasm_bindgen(getter)]
    pub fn slope_stderr(&self) -> f64 {
        self.slope_stderr
    }

    #[wasm_bindgen(getter)]
    pub fn intercept(&self) -> f64 {
        self.intercept
    }

    #[wasm_bindgen(getter)]
    pub fn fit_lo(&self) -> f64 {
        self.fit_lo
    }

    #[wasm_bindgen(getter)]
    pub fn fit_hi(&self) -> f64 {
        self.fit_hi
    }
}

/// Spectrum of `epsilon_b` or `carmichael` over `samples` terms, fitted over
/// `[4/N, 0.25]`.
pub fn spectrum_data(sequence: &str, samples: u32) -> Result<Spectrum, String> {
    if !(64..=MAX_SAMPLES).contains(&samples) {
        return Err(format!("samples must lie in 64..={MAX_SAMPLES}"));
    }
    let x = match sequence {
        "epsilon_b" => epsilon_b_series(samples as usize),
        "carmichael" => carmichael_normalized(samples as u64),
        other => return Err(format!("unknown sequence {other:?}")),
    }
    .map_err(|e| e.to_string())?;
    let s = periodogram(&x).map_err(|e| e.to_string())?;
    let fitted = loglog_slope_fit(&s, 4.0 / samples as f64, 0.25).map_err(|e| e.to_string())?;
    let fit = fitted.fit.expect("slope was fitted");
    Ok(Spectrum {
        freqs: fitted.freqs,
        powers: fitted.powers,
        slope: fit.slope,
        slope_stderr: fit.slope_stderr,
        intercept: fit.intercept,
        fit_lo: fit.f_lo,
        fit_hi: fit.f_hi,
    })
}

#[wasm_bindgen]
pub fn ford_circles(order: u32) -> Result<Vec<f64>, JsError> {
    ford_circle_data(order).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn tangent_neighbours(order: u32) -> Result<u32, JsError> {
    tangent_neighbour_count(order).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn expectation_vs_q(beta: f64, qmax: u32, window: &str) -> Result<Vec<f64>, JsError> {
    expectation_data(beta, qmax, window).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn expectation_vs_beta(q: u32, points: u32, window: &str) -> Result<Vec<f64>, JsError> {
    expectation_beta_data(q, points, window).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn spectrum(sequence: &str, samples: u32) -> Result<Spectrum, JsError> {
    spectrum_data(sequence, samples).map_err(|e| JsError::new(&e))
}
