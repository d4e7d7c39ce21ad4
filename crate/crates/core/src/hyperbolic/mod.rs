//! Continued fractions, resonance basins, Farey and Ford geometry, modular
//! maps, the Adler phase-locking equation, the complex zeta function and the
//! scattering phase on the modular surface.
//!
//! Fractions, Farey sequences and Ford circles are handled in exact integer
//! and rational arithmetic; floating point appears only in the resonance
//! filter, the ODE and the zeta work.

mod adler;
mod continued;
mod farey;
mod modular;
mod scattering;
mod zeta;

pub use adler::{adler_solve, Trajectory};
pub use continued::{
    basin_edges, basin_width_closed_form, cf_expand, cf_expand_real, convergents, resonance_filter, BasinEdges,
    ContinuedFraction, Convergent, RealExpansion, ReducedFraction, Resonance, MAX_REAL_DEPTH, REAL_REMAINDER_FLOOR,
};
pub use farey::{
    farey_sequence, ford_circle, ford_tangent, write_ford_csv, FordCircle, FORD_CSV_HEADER, MAX_FORD_DENOMINATOR,
};
pub use modular::{mobius_apply, ModularMap};
pub use scattering::{
    scattering_matrix, scattering_phase, scattering_phase_curve, write_phase_csv, zeta_quotient, MAX_GRID_STEP,
};
pub use zeta::{ln_gamma, zeta_complex, MAX_ZETA_IMAG};
