//! Figure datasets. Each job has a fixed CSV schema, documented defaults for
//! every parameter and a `# params:` comment line recording the values used.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::io::Write;

use arithphase::arith::{euler_totient, moebius};
use arithphase::fmt::sig12;
use arithphase::hyperbolic::{farey_sequence, scattering_phase_curve, write_ford_csv, write_phase_csv};
use arithphase::phase::{
    mangoldt_fit, phase_expectation_locked, phase_expectation_pairs, phase_variance_locked, IndexRange,
};
use arithphase::signal::{
    carmichael_normalized, epsilon_b_series, loglog_slope_fit, mangoldt_b_series, periodogram, rft_spectrum,
    ArithmeticSequence,
};
use clap::ValueEnum;
use rayon::prelude::*;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum)]
pub enum FigureId {
    /// Periodogram of the modified Mangoldt error term with its fitted slope
    Fig1,
    /// Ramanujan-Fourier coefficients of b(n) against mu(q)/phi(q)
    Fig2,
    /// Ford circles of a Farey sequence
    Fig3,
    /// Scattering phase theta(k)
    Fig4,
    /// Locked phase expectation against q at two values of beta
    Fig5,
    /// Locked phase expectation against beta for q = 13 and q = 15
    Fig6,
    /// Locked phase variance against q at two values of beta
    Fig7,
    /// Kloosterman-pair phase expectation against q
    Fig8,
    /// Normalized cumulative Carmichael lambda
    Fig9,
    /// Periodogram of the normalized Carmichael sequence with its fitted slope
    Fig10,
}

impl FigureId {
    pub const ALL: [FigureId; 10] = [
        Self::Fig1,
        Self::Fig2,
        Self::Fig3,
        Self::Fig4,
        Self::Fig5,
        Self::Fig6,
        Self::Fig7,
        Self::Fig8,
        Self::Fig9,
        Self::Fig10,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Self::Fig1 => "fig1",
            Self::Fig2 => "fig2",
            Self::Fig3 => "fig3",
            Self::Fig4 => "fig4",
            Self::Fig5 => "fig5",
            Self::Fig6 => "fig6",
            Self::Fig7 => "fig7",
            Self::Fig8 => "fig8",
            Self::Fig9 => "fig9",
            Self::Fig10 => "fig10",
        }
    }

    /// CSV header row.
    pub fn columns(&self) -> &'static str {
        match self {
            Self::Fig1 | Self::Fig10 => "freq,power",
            Self::Fig2 => "q,rft_b,mu_over_phi",
            Self::Fig3 => arithphase::hyperbolic::FORD_CSV_HEADER,
            Self::Fig4 => "k,theta",
            Self::Fig5 | Self::Fig7 => "q,value_beta_a,value_beta_b,mangoldt_fit",
            Self::Fig6 => "beta,value_q13,value_q15",
            Self::Fig8 => "q,pairs_beta0,pairs_beta1",
            Self::Fig9 => "t,normalized_sum",
        }
    }

    fn defaults(&self) -> Vec<(&'static str, ParamValue)> {
        use ParamValue::{Int, Real, Window};
        match self {
            Self::Fig1 => vec![("n", Int(1 << 16)), ("fit_lo_bin", Int(4)), ("fit_hi", Real(0.25))],
            Self::Fig2 => vec![("n", Int(100_000)), ("qmax", Int(30))],
            Self::Fig3 => vec![("order", Int(7))],
            Self::Fig4 => vec![("kmax", Real(25.0)), ("step", Real(0.01))],
            Self::Fig5 => vec![
                ("qmin", Int(2)),
                ("qmax", Int(100)),
                ("beta_a", Real(0.0)),
                ("beta_b", Real(1.0)),
                ("window", Window(IndexRange::Totient)),
            ],
            Self::Fig6 => vec![
                ("beta_min", Real(0.0)),
                ("beta_max", Real(TAU)),
                ("points", Int(501)),
                ("window", Window(IndexRange::Totient)),
            ],
            Self::Fig7 => vec![("qmin", Int(3)), ("qmax", Int(100)), ("beta_a", Real(1.0)), ("beta_b", Real(PI))],
            Self::Fig8 => vec![
                ("qmin", Int(2)),
                ("qmax", Int(100)),
                ("beta_a", Real(0.0)),
                ("beta_b", Real(1.0)),
                ("window", Window(IndexRange::Totient)),
            ],
            Self::Fig9 => vec![("tmax", Int(1 << 14))],
            Self::Fig10 => vec![("tmax", Int(1 << 14)), ("fit_lo_bin", Int(4)), ("fit_hi", Real(0.25))],
        }
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ParamValue {
    Int(u64),
    Real(f64),
    Window(IndexRange),
}

impl ParamValue {
    fn parse_like(&self, key: &str, raw: &str) -> Result<Self, CliError> {
        let bad = |what: &str| CliError::Usage(format!("parameter {key} expects {what}, got {raw:?}"));
        Ok(match self {
            Self::Int(_) => Self::Int(raw.parse().map_err(|_| bad("a nonnegative integer"))?),
            Self::Real(_) => {
                let v = if raw == "pi" { PI } else { raw.parse().map_err(|_| bad("a real number"))? };
                if !f64::is_finite(v) {
                    return Err(bad("a finite real number"));
                }
                Self::Real(v)
            }
            Self::Window(_) => Self::Window(raw.parse().map_err(|_| bad("full, totient or totient_inclusive"))?),
        })
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Int(v) => write!(f, "{v}"),
            Self::Real(v) => f.write_str(&sig12(*v)),
            Self::Window(w) => write!(f, "{w}"),
        }
    }
}

/// A figure together with its fully resolved parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureJob {
    pub figure: FigureId,
    params: Vec<(&'static str, ParamValue)>,
}

impl FigureJob {
    /// Applies `key=value` overrides to the figure defaults; unknown keys and
    /// malformed values are usage errors.
    pub fn new(figure: FigureId, overrides: &[(String, String)]) -> Result<Self, CliError> {
        let mut params = figure.defaults();
        for (key, raw) in overrides {
            let slot = params.iter_mut().find(|(k, _)| k == key).ok_or_else(|| {
                let known: Vec<&str> = figure.defaults().iter().map(|(k, _)| *k).collect();
                CliError::Usage(format!("unknown parameter {key:?} for {figure}; known: {}", known.join(", ")))
            })?;
            slot.1 = slot.1.parse_like(key, raw)?;
        }
        Ok(Self { figure, params })
    }

    pub fn params(&self) -> &[(&'static str, ParamValue)] {
        &self.params
    }

    fn get(&self, key: &str) -> ParamValue {
        self.params.iter().find(|(k, _)| *k == key).map(|(_, v)| *v).expect("declared parameter")
    }

    fn int(&self, key: &str) -> u64 {
        match self.get(key) {
            ParamValue::Int(v) => v,
            other => unreachable!("{key} is {other:?}"),
        }
    }

    fn real(&self, key: &str) -> f64 {
        match self.get(key) {
            ParamValue::Real(v) => v,
            other => unreachable!("{key} is {other:?}"),
        }
    }

    fn window(&self, key: &str) -> IndexRange {
        match self.get(key) {
            ParamValue::Window(v) => v,
            other => unreachable!("{key} is {other:?}"),
        }
    }

    /// The `# params:` comment line.
    pub fn params_line(&self) -> String {
        let mut line = format!("# params: figure={}", self.figure);
        for (k, v) in &self.params {
            line.push_str(&format!(" {k}={v}"));
        }
        line
    }

    fn q_range(&self) -> Result<Vec<u64>, CliError> {
        let (qmin, qmax) = (self.int("qmin"), self.int("qmax"));
        if qmin < 2 || qmax < qmin {
            return Err(CliError::Usage(format!("need 2 <= qmin <= qmax, got {qmin}..{qmax}")));
        }
        Ok((qmin..=qmax).collect())
    }
}

type Row = Result<String, arithphase::Error>;

fn sweep(qs: &[u64], f: impl Fn(u64) -> Row + Sync + Send) -> Result<Vec<String>, CliError> {
    let rows: Vec<Row> = qs.par_iter().map(|&q| f(q)).collect();
    rows.into_iter().map(|r| r.map_err(CliError::from)).collect()
}

fn spectrum_rows<W: Write>(x: &ArithmeticSequence, lo_bin: u64, hi: f64, out: &mut W) -> Result<(), CliError> {
    let s = periodogram(x)?;
    let n = s.samples as f64;
    let fitted = loglog_slope_fit(&s, lo_bin as f64 / n, hi)?;
    writeln!(out, "freq,power")?;
    for (f, p) in fitted.freqs.iter().zip(&fitted.powers) {
        writeln!(out, "{},{}", sig12(*f), sig12(*p))?;
    }
    let fit = fitted.fit.expect("slope was fitted");
    writeln!(
        out,
        "# fit: slope={} slope_stderr={} intercept={} f_lo={} f_hi={} points={}",
        sig12(fit.slope),
        sig12(fit.slope_stderr),
        sig12(fit.intercept),
        sig12(fit.f_lo),
        sig12(fit.f_hi),
        fit.points
    )?;
    Ok(())
}

fn as_len(n: u64) -> Result<usize, CliError> {
    usize::try_from(n).map_err(|_| CliError::Usage(format!("{n} is too large")))
}

/// Writes the dataset of `job` to `out`.
pub fn run_figure<W: Write>(job: &FigureJob, out: &mut W) -> Result<(), CliError> {
    writeln!(out, "{}", job.params_line())?;
    match job.figure {
        FigureId::Fig1 => {
            let x = epsilon_b_series(as_len(job.int("n"))?)?;
            spectrum_rows(&x, job.int("fit_lo_bin"), job.real("fit_hi"), out)?;
        }
        FigureId::Fig10 => {
            let x = carmichael_normalized(job.int("tmax"))?;
            spectrum_rows(&x, job.int("fit_lo_bin"), job.real("fit_hi"), out)?;
        }
        FigureId::Fig2 => {
            let b = mangoldt_b_series(as_len(job.int("n"))?)?;
            let spectrum = rft_spectrum(&b, job.int("qmax"))?;
            writeln!(out, "{}", job.figure.columns())?;
            for (&q, &a) in &spectrum.coefficients {
                let reference = moebius(q) as f64 / euler_totient(q) as f64;
                writeln!(out, "{q},{},{}", sig12(a), sig12(reference))?;
            }
        }
        FigureId::Fig3 => {
            let order = i64::try_from(job.int("order")).map_err(|_| CliError::Usage("order is too large".into()))?;
            write_ford_csv(&farey_sequence(order)?, out)?;
        }
        FigureId::Fig4 => {
            write_phase_csv(&scattering_phase_curve(job.real("kmax"), job.real("step"))?, out)?;
        }
        FigureId::Fig5 => {
            let (a, b, w) = (job.real("beta_a"), job.real("beta_b"), job.window("window"));
            let rows = sweep(&job.q_range()?, |q| {
                let va = phase_expectation_locked(q, a, w)?;
                let vb = phase_expectation_locked(q, b, w)?;
                Ok(format!("{q},{},{},{}", sig12(va), sig12(vb), sig12(mangoldt_fit(q))))
            })?;
            write_rows(job, rows, out)?;
        }
        FigureId::Fig6 => {
            let (lo, hi, w) = (job.real("beta_min"), job.real("beta_max"), job.window("window"));
            let points = job.int("points");
            if points < 2 || hi <= lo {
                return Err(CliError::Usage("fig6 needs points >= 2 and beta_max > beta_min".into()));
            }
            let idx: Vec<u64> = (0..points).collect();
            let rows = sweep(&idx, |i| {
                let beta = lo + (hi - lo) * i as f64 / (points - 1) as f64;
                let v13 = phase_expectation_locked(13, beta, w)?;
                let v15 = phase_expectation_locked(15, beta, w)?;
                Ok(format!("{},{},{}", sig12(beta), sig12(v13), sig12(v15)))
            })?;
            write_rows(job, rows, out)?;
        }
        FigureId::Fig7 => {
            let (a, b) = (job.real("beta_a"), job.real("beta_b"));
            let rows = sweep(&job.q_range()?, |q| {
                let va = phase_variance_locked(q, a, IndexRange::Full)?.definitional;
                let vb = phase_variance_locked(q, b, IndexRange::Full)?.definitional;
                Ok(format!("{q},{},{},{}", sig12(va), sig12(vb), sig12(mangoldt_fit(q))))
            })?;
            write_rows(job, rows, out)?;
        }
        FigureId::Fig8 => {
            let (a, b, w) = (job.real("beta_a"), job.real("beta_b"), job.window("window"));
            let rows = sweep(&job.q_range()?, |q| {
                let va = phase_expectation_pairs(q, a, w)?;
                let vb = phase_expectation_pairs(q, b, w)?;
                Ok(format!("{q},{},{}", sig12(va), sig12(vb)))
            })?;
            write_rows(job, rows, out)?;
        }
        FigureId::Fig9 => {
            let x = carmichael_normalized(job.int("tmax"))?;
            writeln!(out, "{}", job.figure.columns())?;
            for (i, v) in x.values().iter().enumerate() {
                writeln!(out, "{},{}", i + 1, sig12(*v))?;
            }
        }
    }
    Ok(())
}

fn write_rows<W: Write>(job: &FigureJob, rows: Vec<String>, out: &mut W) -> Result<(), CliError> {
    writeln!(out, "{}", job.figure.columns())?;
    for row in rows {
        writeln!(out, "{row}")?;
    }
    Ok(())
}
