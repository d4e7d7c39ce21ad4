use std::io::{self, Write};

use num_rational::Ratio;

use super::ReducedFraction;
use crate::error::{domain, Error, Result};

/// Largest denominator and numerator magnitude accepted by [`ford_tangent`].
pub const MAX_FORD_DENOMINATOR: i64 = 1 << 15;

/// Header of the Ford-circle CSV export.
pub const FORD_CSV_HEADER: &str = "p,q,center_x_num,center_x_den,center_y_num,center_y_den,radius_num,radius_den";

/// Farey sequence of the given order: reduced `p/q` in `[0, 1]` with
/// `q ≤ order`, ascending.
pub fn farey_sequence(order: i64) -> Result<Vec<ReducedFraction>> {
    if order < 1 {
        return Err(domain("farey_sequence needs order >= 1"));
    }
    let (mut a, mut b, mut c, mut d) = (0i64, 1i64, 1i64, order);
    let mut out = vec![ReducedFraction::from_coprime(0, 1)];
    while c <= order {
        let k = (order + b) / d;
        (a, b, c, d) = (c, d, k * c - a, k * d - b);
        out.push(ReducedFraction::from_coprime(a, b));
    }
    Ok(out)
}

/// The circle tangent to the real axis at `p/q` with radius `1/(2q²)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FordCircle {
    pub fraction: ReducedFraction,
    pub center_x: Ratio<i128>,
    pub center_y: Ratio<i128>,
    pub radius: Ratio<i128>,
}

pub fn ford_circle(f: ReducedFraction) -> FordCircle {
    let r = Ratio::new(1, 2 * f.q() as i128 * f.q() as i128);
    FordCircle { fraction: f, center_x: f.to_ratio(), center_y: r, radius: r }
}

fn check_bounds(f: ReducedFraction) -> Result<()> {
    if f.q() > MAX_FORD_DENOMINATOR || f.p().abs() > MAX_FORD_DENOMINATOR {
        return Err(Error::Overflow("ford_tangent"));
    }
    Ok(())
}

/// Whether the Ford circles of two distinct fractions touch: the squared
/// distance of their centres equals the squared sum of their radii.
///
/// Both sides are brought over the common denominator `4·q1⁴·q2⁴` and compared
/// as integers.
pub fn ford_tangent(f1: ReducedFraction, f2: ReducedFraction) -> Result<bool> {
    check_bounds(f1)?;
    check_bounds(f2)?;
    let (p1, q1, p2, q2) = (f1.p() as i128, f1.q() as i128, f2.p() as i128, f2.q() as i128);
    let (s1, s2) = (q1 * q1, q2 * q2);
    let det = p1 * q2 - p2 * q1;
    // dx² = det²/(s1·s2), dy = (s2 − s1)/(2·s1·s2), r1 + r2 = (s1 + s2)/(2·s1·s2)
    let distance_sq = 4 * det * det * s1 * s2 + (s2 - s1) * (s2 - s1);
    let radius_sum_sq = (s1 + s2) * (s1 + s2);
    Ok(distance_sq == radius_sum_sq)
}

/// Writes one row per fraction under [`FORD_CSV_HEADER`].
pub fn write_ford_csv<W: Write>(fractions: &[ReducedFraction], out: &mut W) -> io::Result<()> {
    writeln!(out, "{FORD_CSV_HEADER}")?;
    for &f in fractions {
        let c = ford_circle(f);
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            f.p(),
            f.q(),
            c.center_x.numer(),
            c.center_x.denom(),
            c.center_y.numer(),
            c.center_y.denom(),
            c.radius.numer(),
            c.radius.denom()
        )?;
    }
    Ok(())
}
