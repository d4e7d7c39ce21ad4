use rustfft::num_complex::Complex;
use rustfft::FftPlanner;

use super::ArithmeticSequence;
use crate::error::{domain, Result};

/// Shortest sequence accepted by [`periodogram`].
pub const MIN_SAMPLES: usize = 64;
/// Fewest periodogram bins a fit band must contain.
pub const MIN_FIT_BINS: usize = 16;

/// Least-squares line through the octave-averaged log–log spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlopeFit {
    pub slope: f64,
    pub slope_stderr: f64,
    pub intercept: f64,
    pub f_lo: f64,
    pub f_hi: f64,
    /// Number of octave points entering the regression.
    pub points: usize,
}

/// One-sided periodogram at the Fourier frequencies `k/N`, `k = 1..=N/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumEstimate {
    pub freqs: Vec<f64>,
    pub powers: Vec<f64>,
    /// Length of the analysed sequence.
    pub samples: usize,
    /// Filled by [`loglog_slope_fit`].
    pub fit: Option<SlopeFit>,
}

impl SpectrumEstimate {
    /// Power summed over the two-sided spectrum divided by N, which equals
    /// the population variance of the analysed sequence.
    pub fn total_power(&self) -> f64 {
        let n = self.samples;
        let doubled: f64 =
            self.powers.iter().enumerate().map(|(i, p)| if n % 2 == 0 && i + 1 == n / 2 { *p } else { 2.0 * p }).sum();
        doubled / n as f64
    }
}

/// Mean-removed periodogram `|X_k|²/N` from one full-length FFT.
pub fn periodogram(x: &ArithmeticSequence) -> Result<SpectrumEstimate> {
    let n = x.len();
    if n < MIN_SAMPLES {
        return Err(domain(format!("periodogram needs at least {MIN_SAMPLES} samples, got {n}")));
    }
    let mean = x.values().iter().sum::<f64>() / n as f64;
    let mut buf: Vec<Complex<f64>> = x.values().iter().map(|v| Complex::new(v - mean, 0.0)).collect();
    FftPlanner::new().plan_fft_forward(n).process(&mut buf);
    let half = n / 2;
    let freqs = (1..=half).map(|k| k as f64 / n as f64).collect();
    let powers = buf[1..=half].iter().map(|z| z.norm_sqr() / n as f64).collect();
    Ok(SpectrumEstimate { freqs, powers, samples: n, fit: None })
}

/// Fits `log10 P` against `log10 f` over `[f_lo, f_hi]`.
///
/// Bins are grouped into octaves `[f_lo·2^j, f_lo·2^(j+1))`; each octave
/// contributes the mean of its `log10 f` and the `log10` of its mean power.
pub fn loglog_slope_fit(s: &SpectrumEstimate, f_lo: f64, f_hi: f64) -> Result<SpectrumEstimate> {
    if !(f_lo > 0.0 && f_lo < f_hi) {
        return Err(domain(format!("invalid fit band [{f_lo}, {f_hi}]")));
    }
    let band: Vec<(f64, f64)> =
        s.freqs.iter().zip(&s.powers).filter(|(f, _)| **f >= f_lo && **f <= f_hi).map(|(f, p)| (*f, *p)).collect();
    if band.len() < MIN_FIT_BINS {
        return Err(domain(format!(
            "fit band [{f_lo}, {f_hi}] holds {} bins, at least {MIN_FIT_BINS} needed",
            band.len()
        )));
    }
    if band.iter().any(|&(_, p)| p <= 0.0) {
        return Err(domain("fit band contains a zero-power bin"));
    }
    let mut points: Vec<(f64, f64)> = Vec::new();
    let mut start = 0;
    while start < band.len() {
        let octave = (band[start].0 / f_lo).log2().floor();
        let upper = f_lo * 2f64.powf(octave + 1.0);
        let end = start + band[start..].iter().take_while(|(f, _)| *f < upper).count();
        let bins = &band[start..end];
        let k = bins.len() as f64;
        let log_f = bins.iter().map(|(f, _)| f.log10()).sum::<f64>() / k;
        let mean_p = bins.iter().map(|(_, p)| p).sum::<f64>() / k;
        points.push((log_f, mean_p.log10()));
        start = end;
    }
    if points.len() < 2 {
        return Err(domain("fit band spans less than two octaves"));
    }
    let (slope, intercept, slope_stderr) = ordinary_least_squares(&points);
    let fit = SlopeFit { slope, slope_stderr, intercept, f_lo, f_hi, points: points.len() };
    Ok(SpectrumEstimate { fit: Some(fit), ..s.clone() })
}

fn ordinary_least_squares(points: &[(f64, f64)]) -> (f64, f64, f64) {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let stderr = if points.len() > 2 {
        let rss: f64 = points.iter().map(|p| (p.1 - intercept - slope * p.0).powi(2)).sum();
        (rss / (n - 2.0) / sxx).sqrt()
    } else {
        0.0
    };
    (slope, intercept, stderr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn synthetic(n: usize, exponent: f64) -> SpectrumEstimate {
        let freqs: Vec<f64> = (1..=n / 2).map(|k| k as f64 / n as f64).collect();
        let powers = freqs.iter().map(|f| f.powf(exponent)).collect();
        SpectrumEstimate { freqs, powers, samples: n, fit: None }
    }

    #[test]
    fn recovers_synthetic_slopes() {
        let n = 1 << 14;
        for exponent in [0.0, -1.0, -2.0] {
            let fit = loglog_slope_fit(&synthetic(n, exponent), 4.0 / n as f64, 0.25).unwrap().fit.unwrap();
            assert!((fit.slope - exponent).abs() < 0.05, "{exponent}: {}", fit.slope);
        }
    }

    #[test]
    fn white_noise_is_flat() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let x = ArithmeticSequence::from_fn("noise", 1 << 14, |_| rng.gen_range(-1.0..1.0)).unwrap();
        let s = periodogram(&x).unwrap();
        let fit = loglog_slope_fit(&s, 4.0 / s.samples as f64, 0.5).unwrap().fit.unwrap();
        assert!(fit.slope.abs() < 0.1, "{}", fit.slope);
    }

    #[test]
    fn sinusoid_has_single_peak() {
        let n = 256;
        let x = ArithmeticSequence::from_fn("sine", n, |t| (std::f64::consts::TAU * 16.0 * t as f64 / n as f64).sin())
            .unwrap();
        let s = periodogram(&x).unwrap();
        let peak = s.powers.iter().enumerate().max_by(|a, b| a.1.total_cmp(b.1)).unwrap().0;
        assert_eq!(s.freqs[peak], 16.0 / n as f64);
        let rest: f64 = s.powers.iter().enumerate().filter(|(i, _)| *i != peak).map(|(_, p)| p).sum();
        assert!(rest < 1e-12 * s.powers[peak]);
    }

    #[test]
    fn parseval() {
        for n in [64usize, 101, 1000] {
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            let x = ArithmeticSequence::from_fn("noise", n, |_| rng.gen::<f64>()).unwrap();
            let mean = x.values().iter().sum::<f64>() / n as f64;
            let var = x.values().iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n as f64;
            let s = periodogram(&x).unwrap();
            assert!((s.total_power() - var).abs() < 1e-6 * var, "n = {n}");
        }
    }

    #[test]
    fn rejects_short_input_and_thin_bands() {
        let x = ArithmeticSequence::new("x", vec![1.0; 63]).unwrap();
        assert!(periodogram(&x).is_err());
        let s = synthetic(1024, -1.0);
        assert!(loglog_slope_fit(&s, 0.1, 0.1 + 10.0 / 1024.0).is_err());
        assert!(loglog_slope_fit(&s, 0.3, 0.2).is_err());
    }
}
