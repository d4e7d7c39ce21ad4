use std::fmt;
use std::str::FromStr;

use crate::arith::euler_totient;
use crate::error::{domain, Error};

/// Which number-state indices `n, l` a matrix or double sum runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum IndexRange {
    /// `0..q`, the whole Hilbert space.
    #[default]
    Full,
    /// `0..φ(q)`, exclusive.
    Totient,
    /// `0..=φ(q)`.
    TotientInclusive,
}

impl IndexRange {
    pub const ALL: [IndexRange; 3] = [Self::Full, Self::Totient, Self::TotientInclusive];

    /// Number of indices in the window for dimension `q`.
    pub fn len(self, q: u64) -> usize {
        match self {
            Self::Full => q as usize,
            Self::Totient => euler_totient(q) as usize,
            Self::TotientInclusive => euler_totient(q) as usize + 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Full => "full",
            Self::Totient => "totient",
            Self::TotientInclusive => "totient_inclusive",
        }
    }
}

impl fmt::Display for IndexRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IndexRange {
    type Err = Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        Self::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| domain(format!("unknown index range '{s}' (full, totient, totient_inclusive)")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lengths() {
        assert_eq!(IndexRange::Full.len(6), 6);
        assert_eq!(IndexRange::Totient.len(6), 2);
        assert_eq!(IndexRange::TotientInclusive.len(6), 3);
        assert_eq!(IndexRange::TotientInclusive.len(2), 2);
        for r in IndexRange::ALL {
            assert_eq!(r.to_string().parse::<IndexRange>(), Ok(r));
        }
        assert!("half".parse::<IndexRange>().is_err());
    }
}
