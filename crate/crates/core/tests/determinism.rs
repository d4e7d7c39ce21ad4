use arithphase::phase::{phase_expectation_locked, IndexRange};
use arithphase::signal::{mangoldt_b_series, rft_spectrum};

#[test]
fn parallel_sweeps_are_bit_reproducible() {
    let b = mangoldt_b_series(20_000).unwrap();
    let first = rft_spectrum(&b, 40).unwrap();
    for _ in 0..3 {
        let again = rft_spectrum(&b, 40).unwrap();
        for (x, y) in first.coefficients.values().zip(again.coefficients.values()) {
            assert_eq!(x.to_bits(), y.to_bits());
        }
    }
    let a: Vec<u64> = (2..60).map(|q| phase_expectation_locked(q, 1.0, IndexRange::Full).unwrap().to_bits()).collect();
    let b: Vec<u64> = (2..60).map(|q| phase_expectation_locked(q, 1.0, IndexRange::Full).unwrap().to_bits()).collect();
    assert_eq!(a, b);
}
