//! Simulation engine for a two-level system driven by a linearly polarized
//! laser pulse of arbitrary strength, shape and duration.
//!
//! Everything is dimensionless: time is the carrier phase `tau = omega*t`,
//! the drive strength is `x = Omega_R/omega`, the level splitting is
//! `y = omega_21/omega`, and spectra live on `z = omega_detected/omega`.
//!
//! The engine splits every carrier half-cycle into `K` slices, holds the
//! drive constant at each slice midpoint, and advances the projective
//! amplitude pair through the closed-form slice propagator ([`advance_slice`]).
//! Population inversion, induced dipole and the coherently emitted field are
//! closed-form inside each slice, as are their Fourier transforms, so spectra
//! are assembled analytically per slice ([`dipole_spectrum`],
//! [`field_spectrum`]) instead of by FFT.
//!
//! The [`oracle`] module carries an independent fixed-step RK4 integration of
//! the underlying amplitude and ratio equations, used by the test suites to
//! validate the slice engine.

pub mod oracle;
pub mod propagator;
pub mod pulse;
pub mod spectrum;

pub use oracle::{
    compare_series, integrate_amplitudes, integrate_riccati, swa_scenario, AmplitudeOracle,
    OracleConfig, OracleError, RiccatiOracle, SeriesComparison,
};
pub use propagator::{
    advance_slice, dipole_series, emitted_field_series, inversion_series, propagate,
    propagate_with_drives, SeriesKind, SliceState, TimeSeries, DEFAULT_SAMPLES_PER_SLICE,
};
pub use pulse::{
    area_to_strength, default_window_cycles, effective_rabi, slice_drive, strength_to_area,
    PulseError, PulseShape, PulseSpec, SliceGrid,
};
pub use spectrum::{
    dipole_spectrum, field_spectrum, find_peaks, harmonic_heights, phase_scan, slice_kernel,
    FrequencyGrid, HarmonicHeight, Peak, SpectrumError, SpectrumSeries,
};

/// Complex double, the amplitude scalar used throughout.
pub type C64 = num_complex::Complex64;
