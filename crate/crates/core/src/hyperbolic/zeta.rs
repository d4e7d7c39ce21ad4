use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{domain, Error, Result};

/// Largest `|Im s|` accepted by [`zeta_complex`].
pub const MAX_ZETA_IMAG: f64 = 100.0;

/// Bernoulli numbers B_2, B_4, …, B_30.
const BERNOULLI: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

/// Riemann zeta function by Euler–Maclaurin summation with `N = 30 + ⌈|t|⌉`
/// terms and 15 Bernoulli corrections.
pub fn zeta_complex(s: Complex64) -> Result<Complex64> {
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole);
    }
    if !(s.re.is_finite() && s.im.is_finite()) || s.im.abs() > MAX_ZETA_IMAG {
        return Err(domain(format!("zeta_complex needs |Im s| <= {MAX_ZETA_IMAG}")));
    }
    let n = 30 + s.im.abs().ceil() as u32;
    let nf = n as f64;
    let mut sum: Complex64 = (1..n).map(|k| (-s * (k as f64).ln()).exp()).sum();
    let n_pow = (-s * nf.ln()).exp();
    sum += n_pow * nf / (s - 1.0) + n_pow * 0.5;
    // term_k = B_2k/(2k)! · s(s+1)…(s+2k−2) · N^(−s−2k+1)
    let mut rising = s;
    let mut factorial = 2.0;
    let mut power = n_pow / nf;
    for (k, b) in BERNOULLI.iter().enumerate() {
        if k > 0 {
            let j = 2.0 * k as f64;
            rising *= (s + j - 1.0) * (s + j);
            factorial *= (j + 1.0) * (j + 2.0);
            power /= nf * nf;
        }
        sum += rising * power * (*b / factorial);
    }
    Ok(sum)
}

/// Stirling coefficients B_2k / (2k(2k − 1)) for k = 1..8.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

/// A logarithm of Γ(z) for `Re z > 0`, continuous in `z` and equal to the
/// principal `ln Γ` on the positive axis.
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if z.re.is_nan() || z.re <= 0.0 || !z.im.is_finite() {
        return Err(domain("ln_gamma needs Re z > 0"));
    }
    let mut shift = Complex64::new(0.0, 0.0);
    let mut w = z;
    while w.re < 15.0 {
        shift += w.ln();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut p = inv;
    for c in STIRLING {
        series += p * c;
        p *= inv2;
    }
    Ok((w - 0.5) * w.ln() - w + 0.5 * TAU.ln() + series - shift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn real_values() {
        assert!((zeta_complex(c(2.0, 0.0)).unwrap().re - PI * PI / 6.0).abs() < 1e-12);
        assert!((zeta_complex(c(0.0, 0.0)).unwrap().re + 0.5).abs() < 1e-12);
        assert!((zeta_complex(c(-1.0, 0.0)).unwrap().re + 1.0 / 12.0).abs() < 1e-12);
        assert!((zeta_complex(c(4.0, 0.0)).unwrap().re - PI.powi(4) / 90.0).abs() < 1e-12);
        assert_eq!(zeta_complex(c(1.0, 0.0)), Err(Error::Pole));
        assert!(zeta_complex(c(0.5, 101.0)).is_err());
    }

    #[test]
    fn reference_values() {
        // independent arbitrary-precision evaluations
        let cases = [
            (c(-1.0, 30.0), c(-9.053313030982576, 0.5005711562355252)),
            (c(3.0, -100.0), c(1.0957985734149973, 0.02846424977922695)),
            (c(0.3, 77.7), c(0.03373110293472981, 1.1716142770062723)),
            (c(2.0, 50.0), c(0.7739509331566907, 0.1259447158263342)),
            (c(-0.5, 0.5), c(-0.14075746062427946, -0.15807638184744655)),
        ];
        for (s, expected) in cases {
            let z = zeta_complex(s).unwrap();
            assert!((z - expected).norm() < 1e-10 * expected.norm(), "{s}: {z} vs {expected}");
        }
    }

    #[test]
    fn first_zero() {
        let z = zeta_complex(c(0.5, 14.134725)).unwrap();
        assert!(z.norm() < 1e-4);
        assert!((z - c(1.7674298e-8, -1.1102029e-7)).norm() < 1e-12);
    }

    #[test]
    fn conjugate_symmetry() {
        for s in [c(0.5, 20.0), c(-0.7, 3.3), c(2.5, 99.0)] {
            let a = zeta_complex(s).unwrap();
            let b = zeta_complex(s.conj()).unwrap();
            assert!((a - b.conj()).norm() < 1e-12 * a.norm().max(1.0));
        }
    }

    #[test]
    fn gamma_values() {
        assert!(ln_gamma(c(1.0, 0.0)).unwrap().norm() < 1e-14);
        assert!((ln_gamma(c(0.5, 0.0)).unwrap().re - PI.sqrt().ln()).abs() < 1e-14);
        assert!((ln_gamma(c(10.0, 0.0)).unwrap().re - 362880f64.ln()).abs() < 1e-12);
        // |Γ(iy)|² = π/(y·sinh πy) along Re z → 0⁺ via Γ(1 + iy) = iy·Γ(iy)
        let y = 2.5f64;
        let g = ln_gamma(c(1.0, y)).unwrap().exp();
        assert!((g.norm_sqr() - PI * y / (PI * y).sinh()).abs() < 1e-13);
        assert!(ln_gamma(c(0.0, 1.0)).is_err());
    }
}
