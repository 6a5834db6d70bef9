//! Entanglement diagnostics for two-qubit pure states.
//!
//! All formulas are closed-form for pure states: the Schmidt coefficients
//! are the singular values of the 2×2 amplitude matrix, concurrence is
//! `2|a₀₀a₁₁ − a₀₁a₁₀|`, and the single-pair purification probability is
//! `2λ_min²`.

use crate::bell::{bell_vector, BellOutcome};
use crate::statevec::StateVector;

/// Schmidt coefficients of a two-qubit pure state, λ_max ≥ λ_min ≥ 0 with
/// λ_max² + λ_min² = 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SchmidtPair {
    pub lambda_max: f64,
    pub lambda_min: f64,
}

fn assert_two_qubits(s: &StateVector) {
    assert_eq!(s.n_qubits(), 2, "analysis functions take two-qubit states");
}

/// Determinant of the amplitude matrix M[i][j] = ⟨ij|s⟩.
fn amp_det(s: &StateVector) -> f64 {
    (s.amp(0) * s.amp(3) - s.amp(1) * s.amp(2)).norm()
}

/// Singular values of the 2×2 amplitude matrix, by the closed form
/// λ±² = (1 ± √(1 − 4·det²))/2 for a normalized state.
pub fn schmidt_coefficients(s: &StateVector) -> SchmidtPair {
    assert_two_qubits(s);
    let det = amp_det(s);
    let disc = (1.0 - 4.0 * det * det).max(0.0).sqrt();
    SchmidtPair {
        lambda_max: ((1.0 + disc) / 2.0).sqrt(),
        lambda_min: ((1.0 - disc) / 2.0).max(0.0).sqrt(),
    }
}

/// Concurrence of a pure two-qubit state: 0 for products, 1 for Bell states.
pub fn concurrence(s: &StateVector) -> f64 {
    assert_two_qubits(s);
    2.0 * amp_det(s)
}

/// Optimal probability of converting the state into a Bell pair by local
/// filtering: `2·λ_min²`.
pub fn single_pair_purification_prob(s: &StateVector) -> f64 {
    let schmidt = schmidt_coefficients(s);
    2.0 * schmidt.lambda_min * schmidt.lambda_min
}

/// Largest squared overlap with any of the four Bell vectors.
pub fn bell_fidelity(s: &StateVector) -> f64 {
    assert_two_qubits(s);
    BellOutcome::ALL
        .iter()
        .map(|&kind| s.inner(&bell_vector(kind)).norm_sqr())
        .fold(0.0, f64::max)
}
