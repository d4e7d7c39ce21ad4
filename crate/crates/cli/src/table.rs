use std::io::Write;

use arithphase::arith::{tabulate, TableFunction};

use crate::CliError;

/// Tabulates `function` for arguments `min..=max` under a `# params:` line.
pub fn run_table<W: Write>(function: TableFunction, min: Option<u64>, max: u64, out: &mut W) -> Result<(), CliError> {
    let min = min.unwrap_or(function.min_argument());
    if min < function.min_argument() {
        return Err(CliError::Usage(format!("{function} is defined from {}", function.min_argument())));
    }
    if max < min {
        return Err(CliError::Usage(format!("empty range {min}..={max}")));
    }
    writeln!(out, "# params: function={function} min={min} max={max}")?;
    tabulate(function, min..=max, out)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(function: TableFunction, max: u64) -> String {
        let mut out = Vec::new();
        run_table(function, None, max, &mut out).unwrap();
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn totient_rows() {
        let text = run(TableFunction::Totient, 10);
        let rows: Vec<&str> = text.lines().skip(2).collect();
        assert_eq!(rows, ["1,1", "2,1", "3,2", "4,2", "5,4", "6,2", "7,6", "8,4", "9,6", "10,4"]);
    }

    #[test]
    fn ramanujan_rows() {
        let text = run(TableFunction::Ramanujan { q: 6 }, 6);
        let values: Vec<&str> = text.lines().skip(2).map(|l| l.split(',').nth(1).unwrap()).collect();
        assert_eq!(values, ["2", "1", "-1", "-2", "-1", "1", "2"]);
    }

    #[test]
    fn carmichael_last_row() {
        assert_eq!(run(TableFunction::Carmichael, 8).lines().last(), Some("8,2"));
    }

    #[test]
    fn rejects_bad_ranges() {
        let mut out = Vec::new();
        assert!(matches!(run_table(TableFunction::Totient, Some(0), 5, &mut out), Err(CliError::Usage(_))));
        assert!(matches!(run_table(TableFunction::Totient, Some(6), 5, &mut out), Err(CliError::Usage(_))));
    }
}
