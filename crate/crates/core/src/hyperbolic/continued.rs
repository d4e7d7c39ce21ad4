use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{domain, Error, Result};

/// Deepest expansion produced by [`cf_expand_real`].
pub const MAX_REAL_DEPTH: usize = 64;
/// Remainder below which [`cf_expand_real`] stops.
pub const REAL_REMAINDER_FLOOR: f64 = 1e-12;

/// A fraction `p/q` in lowest terms with `q ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedFraction {
    p: i64,
    q: i64,
}

impl ReducedFraction {
    /// Reduces `p/q`; a negative denominator moves its sign to the numerator.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(domain("zero denominator"));
        }
        if p == i64::MIN || q == i64::MIN {
            return Err(Error::Overflow("fraction normalization"));
        }
        let g = p.gcd(&q);
        let s = q.signum();
        Ok(Self { p: s * p / g, q: s * q / g })
    }

    /// Caller guarantees `gcd(p, q) = 1` and `q ≥ 1`.
    pub(crate) fn from_coprime(p: i64, q: i64) -> Self {
        debug_assert!(q >= 1 && p.gcd(&q) == 1, "{p}/{q} is not reduced");
        Self { p, q }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn to_f64(&self) -> f64 {
        self.p as f64 / self.q as f64
    }

    pub fn to_ratio(&self) -> Ratio<i128> {
        Ratio::new_raw(self.p as i128, self.q as i128)
    }
}

impl fmt::Display for ReducedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// Partial quotients `[a0; a1, a2, …]` with `a0 ≥ 0` and `a_i ≥ 1` after the
/// first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    quotients: Vec<i64>,
}

impl ContinuedFraction {
    pub fn new(quotients: Vec<i64>) -> Result<Self> {
        match quotients.split_first() {
            None => Err(domain("a continued fraction needs at least one quotient")),
            Some((&a0, _)) if a0 < 0 => Err(domain("leading quotient must be nonnegative")),
            Some((_, rest)) if rest.iter().any(|&a| a < 1) => {
                Err(domain("partial quotients after the first must be positive"))
            }
            _ => Ok(Self { quotients }),
        }
    }

    pub fn quotients(&self) -> &[i64] {
        &self.quotients
    }

    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }

    /// Canonical form: no trailing quotient 1 unless the expansion is `[1]`.
    pub fn is_canonical(&self) -> bool {
        self.quotients.len() == 1 || self.quotients.last() != Some(&1)
    }

    /// Exact value of the expansion.
    pub fn value(&self) -> Result<ReducedFraction> {
        Ok(convergents(self)?.last().expect("nonempty expansion").fraction)
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.quotients[0])?;
        for (i, a) in self.quotients[1..].iter().enumerate() {
            write!(f, "{}{a}", if i == 0 { ";" } else { "," })?;
        }
        write!(f, "]")
    }
}

/// Expansion of `p/q ≥ 0` by the Euclidean algorithm, in canonical form.
pub fn cf_expand(p: i64, q: i64) -> Result<ContinuedFraction> {
    if q < 1 {
        return Err(domain("cf_expand needs q >= 1"));
    }
    if p < 0 {
        return Err(domain("cf_expand needs p >= 0"));
    }
    let (mut a, mut b) = (p, q);
    let mut quotients = Vec::new();
    while b != 0 {
        quotients.push(a / b);
        (a, b) = (b, a % b);
    }
    Ok(ContinuedFraction { quotients })
}

/// Expansion of a nonnegative real number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealExpansion {
    pub cf: ContinuedFraction,
    /// Set when a remainder fell below [`REAL_REMAINDER_FLOOR`] before the
    /// requested depth was reached.
    pub truncated: bool,
}

/// First `depth` partial quotients of `x ≥ 0`, `1 ≤ depth ≤ 64`.
pub fn cf_expand_real(x: f64, depth: usize) -> Result<RealExpansion> {
    if !(x.is_finite() && x >= 0.0) {
        return Err(domain("cf_expand_real needs a finite x >= 0"));
    }
    if depth == 0 || depth > MAX_REAL_DEPTH {
        return Err(domain(format!("depth must lie in 1..={MAX_REAL_DEPTH}")));
    }
    if x >= i64::MAX as f64 {
        return Err(Error::Overflow("real continued fraction"));
    }
    let mut quotients = Vec::with_capacity(depth);
    let mut r = x;
    let mut truncated = false;
    while quotients.len() < depth {
        let a = r.floor();
        quotients.push(a as i64);
        let frac = r - a;
        if quotients.len() == depth {
            break;
        }
        if frac < REAL_REMAINDER_FLOOR {
            truncated = true;
            break;
        }
        r = frac.recip();
        if r >= i64::MAX as f64 {
            truncated = true;
            break;
        }
    }
    Ok(RealExpansion { cf: ContinuedFraction { quotients }, truncated })
}

/// A convergent `p_i/q_i` and its determinant `p_i·q_{i−1} − p_{i−1}·q_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Convergent {
    pub fraction: ReducedFraction,
    pub determinant: i64,
}

fn checked_step(a: i64, x1: i64, x0: i64) -> Result<i64> {
    a.checked_mul(x1).and_then(|v| v.checked_add(x0)).ok_or(Error::Overflow("convergents"))
}

/// Convergents from the products of `[[a_i, 1], [1, 0]]`, seeded with
/// `p_{−1}/q_{−1} = 1/0`. The determinant of the i-th convergent is
/// `(−1)^(i−1)`.
pub fn convergents(cf: &ContinuedFraction) -> Result<Vec<Convergent>> {
    let (mut p0, mut q0, mut p1, mut q1) = (0i64, 1i64, 1i64, 0i64);
    let mut out = Vec::with_capacity(cf.len());
    for &a in cf.quotients() {
        let (p, q) = (checked_step(a, p1, p0)?, checked_step(a, q1, q0)?);
        (p0, q0, p1, q1) = (p1, q1, p, q);
        let determinant = (p1 as i128 * q0 as i128 - p0 as i128 * q1 as i128) as i64;
        out.push(Convergent { fraction: ReducedFraction::from_coprime(p1, q1), determinant });
    }
    Ok(out)
}

/// Edges of the resonance basin around `[prefix…, a]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasinEdges {
    /// `[a0; …, a_i, a]`.
    pub nu1: ReducedFraction,
    /// `[a0; …, a_i − 1, 1, a]`.
    pub nu2: ReducedFraction,
    /// `|ν₁ − ν₂|`.
    pub width: Ratio<i128>,
    /// Denominator of the prefix's last convergent.
    pub q_i: i64,
    /// Denominator of ν₁.
    pub q_a: i64,
}

/// Builds both basin edges by exact matrix products.
///
/// When `a_i = 1` with `i ≥ 1` the zero quotient of ν₂ is absorbed into its
/// neighbour; the one unusable prefix is `[0]`.
pub fn basin_edges(prefix: &ContinuedFraction, a: i64) -> Result<BasinEdges> {
    if a < 1 {
        return Err(domain("basin_edges needs a >= 1"));
    }
    let qs = prefix.quotients();
    if qs == [0] {
        return Err(domain("the prefix [0] has no second expansion"));
    }
    let mut extended = qs.to_vec();
    extended.push(a);
    let nu1_conv = convergents(&ContinuedFraction { quotients: extended })?;
    let nu1 = nu1_conv.last().expect("nonempty").fraction;
    let q_i = nu1_conv[nu1_conv.len() - 2].fraction.q();

    let mut dual = qs.to_vec();
    *dual.last_mut().expect("nonempty") -= 1;
    dual.extend([1, a]);
    // matrix products stay unimodular with a zero quotient in the middle
    let (mut p0, mut q0, mut p1, mut q1) = (0i64, 1i64, 1i64, 0i64);
    for &x in &dual {
        let (p, q) = (checked_step(x, p1, p0)?, checked_step(x, q1, q0)?);
        (p0, q0, p1, q1) = (p1, q1, p, q);
    }
    let nu2 = ReducedFraction::new(p1, q1)?;
    let diff = nu1.to_ratio() - nu2.to_ratio();
    let width = if *diff.numer() < 0 { -diff } else { diff };
    Ok(BasinEdges { nu1, nu2, width, q_i, q_a: nu1.q() })
}

/// `(2a + 1) / (q_a·((2a + 1)·q_i − q_a))`, the basin width in terms of the
/// denominators of the prefix convergent and of ν₁.
pub fn basin_width_closed_form(q_i: i64, q_a: i64, a: i64) -> Ratio<i128> {
    let m = 2 * a as i128 + 1;
    Ratio::new(m, q_a as i128 * (m * q_i as i128 - q_a as i128))
}

/// A fraction passing the resonance inequality and its detuning `μ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Resonance {
    pub fraction: ReducedFraction,
    /// `μ = q·|ν − p/q|`.
    pub mu: f64,
}

/// All reduced `p/q` with `q ≤ qmax` and `q·|ν − p/q| ≤ cutoff_ratio`,
/// sorted by `μ` then by `q`.
pub fn resonance_filter(nu: f64, cutoff_ratio: f64, qmax: i64) -> Result<Vec<Resonance>> {
    if !(cutoff_ratio > 0.0 && cutoff_ratio < 1.0) {
        return Err(domain("cutoff ratio must lie in (0, 1)"));
    }
    if !nu.is_finite() || qmax < 1 {
        return Err(domain("resonance_filter needs a finite ν and qmax >= 1"));
    }
    let mut out = Vec::new();
    for q in 1..=qmax {
        let x = q as f64 * nu;
        let lo = x.floor() as i64;
        for p in [lo, lo + 1] {
            let mu = (x - p as f64).abs();
            if mu <= cutoff_ratio && p.gcd(&q) == 1 {
                out.push(Resonance { fraction: ReducedFraction::from_coprime(p, q), mu });
            }
        }
    }
    out.sort_by(|a, b| {
        a.mu.total_cmp(&b.mu).then(a.fraction.q.cmp(&b.fraction.q)).then(a.fraction.p.cmp(&b.fraction.p))
    });
    Ok(out)
}
