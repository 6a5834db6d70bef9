//! Numerical tolerances and limits used across the crate.
//!
//! All thresholds live here so that tests, the verification suites and the
//! simulation agree on the same numbers.

/// Largest register the dense simulator accepts. The protocol needs at most
/// 5 qubits (4 particles + 1 ancilla); one qubit of headroom for tests.
pub const REGISTER_CAP: usize = 6;

/// Normalization and probability-sum tolerance for publicly returned states.
/// Double precision leaves plenty of headroom at 32 amplitudes.
pub const NORM_TOL: f64 = 1e-10;

/// Unitarity tolerance: ‖U†U − I‖_max for gate-flagged operators.
pub const GATE_TOL: f64 = 1e-12;

/// Probability below which a branch is treated as impossible. Normalizing
/// residuals below this level would amplify numerical noise.
pub const PROB_CUTOFF: f64 = 1e-14;

/// Magnitude-difference tolerance for treating two amplitudes as tied,
/// also used by the Ψ-branch case classification.
pub const TIE_TOL: f64 = 1e-12;

/// A branch state with Bell fidelity at or above `1 − BELL_SKIP_TOL` is
/// already maximally entangled and skips the filtering stage.
pub const BELL_SKIP_TOL: f64 = 1e-12;
