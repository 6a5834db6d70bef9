//! Bell basis and the exact four-outcome Bell measurement.
//!
//! The measurement is enumerated exhaustively — all four outcomes with their
//! exact probabilities and post-measurement states. Sampling from the
//! distribution lives in [`crate::protocol`].
//!
//! For two equal input pairs with Schmidt pair (α, β), each Φ± outcome
//! occurs with probability (|α|⁴+|β|⁴)/2 and each Ψ± outcome with
//! probability |αβ|² — the per-outcome values, fixed here by brute-force
//! enumeration.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::statevec::{Amplitude, StateVecError, StateVector};

/// The four Bell measurement outcomes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BellOutcome {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl BellOutcome {
    /// Fixed enumeration order used everywhere a branch list appears.
    pub const ALL: [BellOutcome; 4] = [
        BellOutcome::PhiPlus,
        BellOutcome::PhiMinus,
        BellOutcome::PsiPlus,
        BellOutcome::PsiMinus,
    ];

    pub fn label(self) -> &'static str {
        match self {
            BellOutcome::PhiPlus => "PhiPlus",
            BellOutcome::PhiMinus => "PhiMinus",
            BellOutcome::PsiPlus => "PsiPlus",
            BellOutcome::PsiMinus => "PsiMinus",
        }
    }

    pub fn index(self) -> usize {
        match self {
            BellOutcome::PhiPlus => 0,
            BellOutcome::PhiMinus => 1,
            BellOutcome::PsiPlus => 2,
            BellOutcome::PsiMinus => 3,
        }
    }
}

/// The normalized two-qubit probe state of a Bell outcome:
/// Φ± = (|00⟩ ± |11⟩)/√2, Ψ± = (|01⟩ ± |10⟩)/√2.
pub fn bell_vector(kind: BellOutcome) -> StateVector {
    let h = Amplitude::new(FRAC_1_SQRT_2, 0.0);
    let z = Amplitude::ZERO;
    let amps = match kind {
        BellOutcome::PhiPlus => vec![h, z, z, h],
        BellOutcome::PhiMinus => vec![h, z, z, -h],
        BellOutcome::PsiPlus => vec![z, h, h, z],
        BellOutcome::PsiMinus => vec![z, h, -h, z],
    };
    StateVector::from_amps_unchecked(2, amps)
}

/// One enumerated branch of a Bell measurement.
#[derive(Clone, Debug)]
pub struct BellBranch {
    pub outcome: BellOutcome,
    pub probability: f64,
    /// State of the remaining qubits; absent for (near-)impossible branches.
    pub post_state: Option<StateVector>,
}

/// Measures qubits (qi, qj) in the Bell basis, returning all four branches
/// in [`BellOutcome::ALL`] order. Probabilities sum to 1.
pub fn bell_measure_exact(
    s: &StateVector,
    qi: usize,
    qj: usize,
) -> Result<[BellBranch; 4], StateVecError> {
    let targets = [qi, qj];
    BellOutcome::ALL
        .map(|outcome| {
            let (probability, post_state) = s.project_onto(&bell_vector(outcome), &targets)?;
            Ok(BellBranch {
                outcome,
                probability,
                post_state,
            })
        })
        .into_iter()
        .collect::<Result<Vec<_>, _>>()
        .map(|v| <[BellBranch; 4]>::try_from(v).expect("four outcomes"))
}
