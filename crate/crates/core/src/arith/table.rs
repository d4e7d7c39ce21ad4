//! Bulk tabulation of arithmetic functions to CSV.

use std::fmt;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::str::FromStr;

use super::{carmichael_lambda, euler_totient, mangoldt, mangoldt_b, moebius, ramanujan_sum, KloostermanTable};
use crate::error::{domain, Error};
use crate::fmt::sig12;

/// A tabulated function. The modular sums carry their fixed modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFunction {
    Totient,
    Moebius,
    Mangoldt,
    MangoldtB,
    Carmichael,
    Ramanujan { q: u64 },
    Kloosterman { q: u64 },
}

impl TableFunction {
    pub const NAMES: [&'static str; 7] =
        ["totient", "moebius", "mangoldt", "mangoldt_b", "carmichael", "ramanujan", "kloosterman"];

    /// Parses a function name, attaching the modulus for the modular sums.
    pub fn from_name(name: &str, q: Option<u64>) -> crate::Result<Self> {
        let needs_q = |q: Option<u64>| {
            q.filter(|&q| q >= 1).ok_or_else(|| domain(format!("table '{name}' needs a modulus q >= 1")))
        };
        Ok(match name {
            "totient" => Self::Totient,
            "moebius" => Self::Moebius,
            "mangoldt" => Self::Mangoldt,
            "mangoldt_b" => Self::MangoldtB,
            "carmichael" => Self::Carmichael,
            "ramanujan" => Self::Ramanujan { q: needs_q(q)? },
            "kloosterman" => {
                let q = needs_q(q)?;
                if q < 2 {
                    return Err(domain("kloosterman table needs q >= 2"));
                }
                Self::Kloosterman { q }
            }
            other => return Err(domain(format!("unknown table function '{other}'"))),
        })
    }

    /// Smallest admissible argument.
    pub fn min_argument(&self) -> u64 {
        match self {
            Self::Ramanujan { .. } | Self::Kloosterman { .. } => 0,
            _ => 1,
        }
    }
}

impl FromStr for TableFunction {
    type Err = Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        Self::from_name(s, None)
    }
}

impl fmt::Display for TableFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Totient => f.write_str("totient"),
            Self::Moebius => f.write_str("moebius"),
            Self::Mangoldt => f.write_str("mangoldt"),
            Self::MangoldtB => f.write_str("mangoldt_b"),
            Self::Carmichael => f.write_str("carmichael"),
            Self::Ramanujan { q } => write!(f, "ramanujan(q={q})"),
            Self::Kloosterman { q } => write!(f, "kloosterman(q={q})"),
        }
    }
}

/// Writes `function` over `range` as CSV with a header row.
///
/// Single-argument functions emit `n,value`. Kloosterman sums emit one row per
/// `(n, l)` in `range × range` with columns `n,l,re,im,integer`, the last left
/// empty when the sum is not an integer.
pub fn tabulate<W: Write>(function: TableFunction, range: RangeInclusive<u64>, out: &mut W) -> io::Result<()> {
    if *range.start() < function.min_argument() {
        return Err(io::Error::new(
            io::ErrorKind::InvalidInput,
            format!("{function} is defined from {}", function.min_argument()),
        ));
    }
    match function {
        TableFunction::Kloosterman { q } => {
            let table =
                KloostermanTable::new(q).map_err(|e| io::Error::new(io::ErrorKind::InvalidInput, e.to_string()))?;
            writeln!(out, "n,l,re,im,integer")?;
            for n in range.clone() {
                for l in range.clone() {
                    let v = table.sum(n as i64, l as i64);
                    let int = v.integer().map(|k| k.to_string()).unwrap_or_default();
                    writeln!(out, "{n},{l},{},{},{int}", sig12(v.value.re), sig12(v.value.im))?;
                }
            }
        }
        _ => {
            writeln!(out, "n,value")?;
            for n in range {
                let value = match function {
                    TableFunction::Totient => euler_totient(n).to_string(),
                    TableFunction::Moebius => moebius(n).to_string(),
                    TableFunction::Mangoldt => sig12(mangoldt(n)),
                    TableFunction::MangoldtB => sig12(mangoldt_b(n)),
                    TableFunction::Carmichael => carmichael_lambda(n).to_string(),
                    TableFunction::Ramanujan { q } => ramanujan_sum(q, n as i64).to_string(),
                    TableFunction::Kloosterman { .. } => unreachable!(),
                };
                writeln!(out, "{n},{value}")?;
            }
        }
    }
    Ok(())
}
