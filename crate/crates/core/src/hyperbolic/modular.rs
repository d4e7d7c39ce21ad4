use num_complex::Complex64;
use num_integer::Integer;

use crate::error::{domain, Result};

/// Integer Möbius map `z ↦ (a·z + b)/(c·z + d)` with `ad − bc = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModularMap {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl ModularMap {
    pub const IDENTITY: Self = Self { a: 1, b: 0, c: 0, d: 1 };

    /// Fails unless `ad − bc = 1`.
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let det = a as i128 * d as i128 - b as i128 * c as i128;
        if det != 1 {
            return Err(domain(format!("determinant is {det}, not 1")));
        }
        Ok(Self { a, b, c, d })
    }

    /// A map with first column `(p, q)`, `q ≥ 1`, `gcd(p, q) = 1`; it sends
    /// the cusp at infinity to `p/q`.
    pub fn from_column(p: i64, q: i64) -> Result<Self> {
        if q < 1 {
            return Err(domain("from_column needs q >= 1"));
        }
        let ext = p.extended_gcd(&q);
        if ext.gcd != 1 {
            return Err(domain(format!("{p} and {q} are not coprime")));
        }
        // p·x + q·y = 1, so the second column is (−y, x)
        Self::new(p, -ext.y, q, ext.x)
    }

    pub fn entries(&self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

/// Image of a point of the upper half plane.
pub fn mobius_apply(m: &ModularMap, z: Complex64) -> Result<Complex64> {
    if z.im.is_nan() || z.im <= 0.0 {
        return Err(domain("mobius_apply needs Im z > 0"));
    }
    let [a, b, c, d] = m.entries().map(|x| x as f64);
    Ok((z * a + b) / (z * c + d))
}
