//! Arithmetic sequences and their spectra: cumulative Mangoldt sums, the
//! Ramanujan–Fourier transform, periodograms with log–log slope fits, the
//! normalized Carmichael sequence and the explicit formula for ψ.

mod explicit;
mod rft;
mod sequence;
mod spectrum;

pub use explicit::{explicit_formula_epsilon, parse_zeros};
pub use rft::{hardy_expansion_partial, rft_coefficient, rft_spectrum, RftSpectrum};
pub use sequence::{
    b_cumulative, carmichael_normalized, epsilon, epsilon_b, epsilon_b_series, epsilon_series, mangoldt_b_series,
    psi_cumulative, ArithmeticSequence, CARMICHAEL_EXPONENT,
};
pub use spectrum::{loglog_slope_fit, periodogram, SlopeFit, SpectrumEstimate, MIN_FIT_BINS, MIN_SAMPLES};
