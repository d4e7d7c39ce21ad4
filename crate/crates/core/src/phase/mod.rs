//! Quantum phase operators built from Ramanujan and Kloosterman sums.

mod expectation;
mod matrix;
mod operators;
mod window;

pub use expectation::{
    generalized_kloosterman_sum, locked_expectation_sum, mangoldt_fit, modified_expectation_locked,
    modified_ramanujan_sum, pairs_expectation_from_projectors, pairs_expectation_sum, phase_expectation_locked,
    phase_expectation_pairs, phase_variance_locked, PurePhaseState, VarianceReport, DEFAULT_LOCKED_RANGE,
    DEFAULT_PAIRS_RANGE, EMPTY_DISTRIBUTION_MASS, LOCKED_IMAG_TOLERANCE, PAIRS_IMAG_TOLERANCE,
};
pub use matrix::{ComplexMatrix, MatrixFlags};
pub use operators::{
    commutator_lock, commutator_pairs, locked_projector, pairs_phase_operator, pairs_projector, phase_lock_operator,
    phase_state, qft_matrix, MAX_DIMENSION,
};
pub use window::IndexRange;
