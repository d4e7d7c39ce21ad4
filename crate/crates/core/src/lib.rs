//! Arithmetic of phase locking.
//!
//! The crate is organized in four layers that build on each other:
//!
//! - [`arith`]: exact number-theoretic kernels (factorization, totient,
//!   Möbius, Mangoldt, Carmichael lambda, Ramanujan and Kloosterman sums,
//!   primitive roots and power cycles).
//! - [`phase`]: dense complex matrices for the quantum Fourier transform,
//!   phase-locked projectors, phase operators, commutators, and the phase
//!   expectation values and variances of pure phase states.
//! - [`signal`]: arithmetical sequences and their analysis: cumulative
//!   Mangoldt sums, the Ramanujan–Fourier transform, periodograms and
//!   log-log slope fits, and the truncated explicit formula.
//! - [`hyperbolic`]: continued fractions, resonance basins, Farey and Ford
//!   geometry in exact rational arithmetic, modular maps, the Adler
//!   phase-locking equation, the complex zeta function and the scattering
//!   phase on the modular surface.
//!
//! Everything is a pure function of its inputs. Integer-valued objects stay
//! exact integers; only logarithmic, trigonometric and spectral quantities are
//! floating point.

pub mod arith;
mod error;
pub mod fmt;
pub mod hyperbolic;
mod par;
pub mod phase;
pub mod signal;

pub use error::{Error, Result};
