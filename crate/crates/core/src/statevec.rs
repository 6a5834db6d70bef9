//! Dense state vectors for small qubit registers.
//!
//! Qubits are numbered from 1, left to right in the ket: in an n-qubit
//! register, qubit k contributes bit `2^(n−k)` to the amplitude index, so
//! qubit 1 is the most significant bit and `|q₁q₂…qₙ⟩` reads off directly as
//! a binary index. Values are immutable; every operation returns a fresh
//! state.

use num_complex::Complex64;
use thiserror::Error;

use crate::tol::{GATE_TOL, NORM_TOL, PROB_CUTOFF, REGISTER_CAP};

/// Complex amplitude. `re`/`im` are plain `f64`; every stored amplitude must
/// be finite.
pub type Amplitude = Complex64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StateVecError {
    #[error("register of {requested} qubits exceeds the cap of {cap}")]
    RegisterOverflow { requested: usize, cap: usize },
    #[error("expected {expected} amplitudes, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("amplitudes must be finite")]
    NonFinite,
    #[error("squared norm {norm_sqr} is not 1 within {NORM_TOL}")]
    NotNormalized { norm_sqr: f64 },
    #[error("operator defect ‖U†U − I‖_max = {defect} exceeds {GATE_TOL}")]
    NonUnitary { defect: f64 },
    #[error("operator arity must be 1 or 2, got {0}")]
    BadArity(usize),
    #[error("operator is not flagged as a gate")]
    NotAGate,
    #[error("qubit index {qubit} out of range for {n_qubits} qubits (qubits are 1-based)")]
    QubitOutOfRange { qubit: usize, n_qubits: usize },
    #[error("target qubits must be distinct")]
    DuplicateTarget,
    #[error("operator arity {arity} does not match {targets} target qubits")]
    ArityMismatch { arity: usize, targets: usize },
    #[error("probe has {probe_qubits} qubits but {targets} targets were given")]
    ProbeMismatch { probe_qubits: usize, targets: usize },
}

/// Normalized state of an n-qubit register.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amps: Vec<Amplitude>,
}

impl StateVector {
    /// Builds a state from explicit amplitudes, which must be finite and
    /// normalized within [`NORM_TOL`].
    pub fn new(n_qubits: usize, amps: Vec<Amplitude>) -> Result<Self, StateVecError> {
        if n_qubits == 0 || n_qubits > REGISTER_CAP {
            return Err(StateVecError::RegisterOverflow {
                requested: n_qubits,
                cap: REGISTER_CAP,
            });
        }
        let dim = 1usize << n_qubits;
        if amps.len() != dim {
            return Err(StateVecError::DimensionMismatch {
                expected: dim,
                got: amps.len(),
            });
        }
        if !amps.iter().all(|a| a.re.is_finite() && a.im.is_finite()) {
            return Err(StateVecError::NonFinite);
        }
        let norm_sqr: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > NORM_TOL {
            return Err(StateVecError::NotNormalized { norm_sqr });
        }
        Ok(Self { n_qubits, amps })
    }

    /// Computational basis state `|index⟩` of an n-qubit register.
    pub fn basis(n_qubits: usize, index: usize) -> Self {
        assert!(n_qubits >= 1 && n_qubits <= REGISTER_CAP, "register cap");
        let dim = 1usize << n_qubits;
        assert!(index < dim, "basis index out of range");
        let mut amps = vec![Amplitude::ZERO; dim];
        amps[index] = Amplitude::ONE;
        Self { n_qubits, amps }
    }

    /// Internal constructor for amplitudes known to be normalized.
    pub(crate) fn from_amps_unchecked(n_qubits: usize, amps: Vec<Amplitude>) -> Self {
        debug_assert_eq!(amps.len(), 1 << n_qubits);
        Self { n_qubits, amps }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amps(&self) -> &[Amplitude] {
        &self.amps
    }

    pub fn amp(&self, index: usize) -> Amplitude {
        self.amps[index]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Bit of `qubit` (1-based) within amplitude `index`.
    pub fn qubit_bit(&self, index: usize, qubit: usize) -> usize {
        debug_assert!(qubit >= 1 && qubit <= self.n_qubits);
        (index >> (self.n_qubits - qubit)) & 1
    }

    /// `|⟨other|self⟩|` squared is `overlap.norm_sqr()`; both states must
    /// have the same register size.
    pub fn inner(&self, other: &StateVector) -> Amplitude {
        assert_eq!(self.n_qubits, other.n_qubits, "register size mismatch");
        self.amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| b.conj() * a)
            .sum()
    }

    /// Tensor product; `self`'s qubits occupy the high-order positions of
    /// the combined register.
    pub fn tensor(&self, other: &StateVector) -> Result<StateVector, StateVecError> {
        let n = self.n_qubits + other.n_qubits;
        if n > REGISTER_CAP {
            return Err(StateVecError::RegisterOverflow {
                requested: n,
                cap: REGISTER_CAP,
            });
        }
        let dim2 = 1usize << other.n_qubits;
        let mut amps = vec![Amplitude::ZERO; 1 << n];
        for (i, a) in self.amps.iter().enumerate() {
            for (j, b) in other.amps.iter().enumerate() {
                amps[(i << other.n_qubits) | j] = a * b;
            }
        }
        debug_assert_eq!(amps.len(), (1 << self.n_qubits) * dim2);
        Ok(StateVector { n_qubits: n, amps })
    }

    /// Applies a gate to the given target qubits (1-based, distinct), leaving
    /// every other qubit untouched.
    ///
    /// See [`LocalOperator`] for the operator basis convention: `targets[0]`
    /// is the least significant bit of the operator basis index.
    pub fn apply_local(
        &self,
        u: &LocalOperator,
        targets: &[usize],
    ) -> Result<StateVector, StateVecError> {
        if !u.is_gate {
            return Err(StateVecError::NotAGate);
        }
        self.check_targets(targets)?;
        if targets.len() != u.arity {
            return Err(StateVecError::ArityMismatch {
                arity: u.arity,
                targets: targets.len(),
            });
        }
        let sub_dim = 1usize << u.arity;
        // masks[k] selects the register bit of targets[k]
        let masks: Vec<usize> = targets
            .iter()
            .map(|&q| 1usize << (self.n_qubits - q))
            .collect();
        let all_mask: usize = masks.iter().sum();
        let mut amps = self.amps.clone();
        for base in 0..self.amps.len() {
            if base & all_mask != 0 {
                continue;
            }
            let pos = |sub: usize| {
                let mut i = base;
                for (k, mask) in masks.iter().enumerate() {
                    if (sub >> k) & 1 == 1 {
                        i |= mask;
                    }
                }
                i
            };
            let group: Vec<Amplitude> = (0..sub_dim).map(|sub| amps[pos(sub)]).collect();
            for (row, slot) in (0..sub_dim).map(pos).enumerate() {
                amps[slot] = (0..sub_dim).map(|col| u.entry(row, col) * group[col]).sum();
            }
        }
        Ok(StateVector {
            n_qubits: self.n_qubits,
            amps,
        })
    }

    /// Projects the target qubits onto `probe` and removes them.
    ///
    /// Returns the outcome probability (squared norm of the partial inner
    /// product) and the normalized post-measurement state of the remaining
    /// qubits, which keep their relative order. Probabilities below
    /// [`PROB_CUTOFF`] yield `None` for the residual.
    pub fn project_onto(
        &self,
        probe: &StateVector,
        targets: &[usize],
    ) -> Result<(f64, Option<StateVector>), StateVecError> {
        self.check_targets(targets)?;
        let m = targets.len();
        if probe.n_qubits != m {
            return Err(StateVecError::ProbeMismatch {
                probe_qubits: probe.n_qubits,
                targets: m,
            });
        }
        let n_rem = self.n_qubits - m;
        let mut residual = vec![Amplitude::ZERO; 1 << n_rem];
        for (i, amp) in self.amps.iter().enumerate() {
            // probe qubit j (1-based) sits on register qubit targets[j-1]
            let mut probe_idx = 0usize;
            for (j, &q) in targets.iter().enumerate() {
                probe_idx |= self.qubit_bit(i, q) << (m - 1 - j);
            }
            let mut rem_idx = 0usize;
            for q in 1..=self.n_qubits {
                if !targets.contains(&q) {
                    rem_idx = (rem_idx << 1) | self.qubit_bit(i, q);
                }
            }
            residual[rem_idx] += probe.amps[probe_idx].conj() * amp;
        }
        let probability: f64 = residual.iter().map(|a| a.norm_sqr()).sum();
        if n_rem == 0 || probability < PROB_CUTOFF {
            return Ok((probability, None));
        }
        let scale = probability.sqrt().recip();
        for a in &mut residual {
            *a *= scale;
        }
        Ok((probability, Some(StateVector::from_amps_unchecked(n_rem, residual))))
    }

    fn check_targets(&self, targets: &[usize]) -> Result<(), StateVecError> {
        for (k, &q) in targets.iter().enumerate() {
            if q < 1 || q > self.n_qubits {
                return Err(StateVecError::QubitOutOfRange {
                    qubit: q,
                    n_qubits: self.n_qubits,
                });
            }
            if targets[..k].contains(&q) {
                return Err(StateVecError::DuplicateTarget);
            }
        }
        Ok(())
    }
}

/// One- or two-qubit operator in dense form.
///
/// Basis convention for the entries: basis index `b` of the operator space
/// has bit `k` equal to the value of `targets[k]`, i.e. **the first target is
/// the least significant bit**. For a two-qubit operator on targets `(t, a)`
/// the columns are therefore ordered `{|0_t 0_a⟩, |1_t 0_a⟩, |0_t 1_a⟩,
/// |1_t 1_a⟩}`. This matches the basis in which the filtering unitaries are
/// written.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalOperator {
    arity: usize,
    is_gate: bool,
    /// Row-major `2^arity × 2^arity`.
    entries: Vec<Amplitude>,
}

impl LocalOperator {
    /// Builds a gate-flagged operator; fails unless it is unitary within
    /// [`GATE_TOL`].
    pub fn gate(arity: usize, entries: Vec<Amplitude>) -> Result<Self, StateVecError> {
        let op = Self::linear(arity, entries)?;
        let defect = op.unitary_defect();
        if defect > GATE_TOL {
            return Err(StateVecError::NonUnitary { defect });
        }
        Ok(Self { is_gate: true, ..op })
    }

    /// Builds an operator without the gate flag (rejected by
    /// [`StateVector::apply_local`]).
    pub fn linear(arity: usize, entries: Vec<Amplitude>) -> Result<Self, StateVecError> {
        if arity != 1 && arity != 2 {
            return Err(StateVecError::BadArity(arity));
        }
        let dim = 1usize << arity;
        if entries.len() != dim * dim {
            return Err(StateVecError::DimensionMismatch {
                expected: dim * dim,
                got: entries.len(),
            });
        }
        if !entries.iter().all(|a| a.re.is_finite() && a.im.is_finite()) {
            return Err(StateVecError::NonFinite);
        }
        Ok(Self {
            arity,
            is_gate: false,
            entries,
        })
    }

    pub fn identity(arity: usize) -> Self {
        let dim = 1usize << arity;
        let mut entries = vec![Amplitude::ZERO; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = Amplitude::ONE;
        }
        Self {
            arity,
            is_gate: true,
            entries,
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        1 << self.arity
    }

    pub fn is_gate(&self) -> bool {
        self.is_gate
    }

    pub fn entry(&self, row: usize, col: usize) -> Amplitude {
        self.entries[row * self.dim() + col]
    }

    /// ‖U†U − I‖_max.
    pub fn unitary_defect(&self) -> f64 {
        let dim = self.dim();
        let mut defect = 0f64;
        for i in 0..dim {
            for j in 0..dim {
                let mut dot = Amplitude::ZERO;
                for k in 0..dim {
                    dot += self.entry(k, i).conj() * self.entry(k, j);
                }
                let target = if i == j { Amplitude::ONE } else { Amplitude::ZERO };
                defect = defect.max((dot - target).norm());
            }
        }
        defect
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use num_complex::Complex64;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Amplitude {
        Complex64::new(re, im)
    }

    fn r(re: f64) -> Amplitude {
        Complex64::new(re, 0.0)
    }

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    fn bell_phi_plus() -> StateVector {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        StateVector::new(2, vec![r(h), r(0.0), r(0.0), r(h)]).unwrap()
    }

    #[test]
    fn tensor_of_basis_states() {
        let zero = StateVector::basis(1, 0);
        let prod = zero.tensor(&zero).unwrap();
        assert_eq!(prod.n_qubits(), 2);
        assert_eq!(prod.amps(), &[r(1.0), r(0.0), r(0.0), r(0.0)]);
    }

    #[test]
    fn tensor_puts_left_factor_on_high_bits() {
        // (|00⟩+|11⟩)/√2 ⊗ |0⟩ lives on indices 0 and 6 of the 8-vector.
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let prod = bell_phi_plus().tensor(&StateVector::basis(1, 0)).unwrap();
        for (idx, amp) in prod.amps().iter().enumerate() {
            let expected = if idx == 0 || idx == 6 { h } else { 0.0 };
            assert_close(amp.re, expected, 1e-15);
            assert_close(amp.im, 0.0, 1e-15);
        }
    }

    #[test]
    fn tensor_of_two_pairs_matches_nested_loop_oracle() {
        // (α|00⟩+β|11⟩) ⊗ (a|00⟩+b|11⟩) with α²=0.8, a²=0.7.
        let (alpha, beta) = (0.8f64.sqrt(), 0.2f64.sqrt());
        let (a, b) = (0.7f64.sqrt(), 0.3f64.sqrt());
        let p12 = StateVector::new(2, vec![r(alpha), r(0.0), r(0.0), r(beta)]).unwrap();
        let p34 = StateVector::new(2, vec![r(a), r(0.0), r(0.0), r(b)]).unwrap();
        let prod = p12.tensor(&p34).unwrap();

        let nested = oracle::tensor_nested(p12.amps(), p34.amps());
        for (x, y) in prod.amps().iter().zip(nested.iter()) {
            assert_close((x - y).norm(), 0.0, 1e-15);
        }

        // Direct expansion: nonzero only at 0, 3, 12, 15.
        assert_close(prod.amp(0).re, 0.74833147735478827, 1e-12);
        assert_close(prod.amp(3).re, 0.48989794855663559, 1e-12);
        assert_close(prod.amp(12).re, 0.37416573867739417, 1e-12);
        assert_close(prod.amp(15).re, 0.24494897427831780, 1e-12);
        let sum: f64 = [0, 3, 12, 15].iter().map(|&i| prod.amp(i).norm_sqr()).sum();
        assert_close(sum, 1.0, 1e-12);
    }

    #[test]
    fn tensor_respects_register_cap() {
        let s4 = bell_phi_plus().tensor(&bell_phi_plus()).unwrap();
        let err = s4.tensor(&s4).unwrap_err();
        assert!(matches!(err, StateVecError::RegisterOverflow { requested: 8, .. }));
    }

    #[test]
    fn identity_leaves_state_alone() {
        let s = bell_phi_plus();
        let out = s.apply_local(&LocalOperator::identity(1), &[2]).unwrap();
        assert_eq!(out, s);
    }

    #[test]
    fn bit_flip_on_qubit_one_moves_msb() {
        let x = LocalOperator::gate(1, vec![r(0.0), r(1.0), r(1.0), r(0.0)]).unwrap();
        let out = StateVector::basis(2, 0).apply_local(&x, &[1]).unwrap();
        // |00⟩ → |10⟩, index 0 → 2 under the qubit-1-is-MSB convention.
        assert_eq!(out.amp(2), r(1.0));
        assert_eq!(out.amp(0), r(0.0));
    }

    #[test]
    fn apply_local_rejects_bad_inputs() {
        let s = bell_phi_plus();
        let x = LocalOperator::gate(1, vec![r(0.0), r(1.0), r(1.0), r(0.0)]).unwrap();
        assert!(matches!(
            s.apply_local(&x, &[3]),
            Err(StateVecError::QubitOutOfRange { qubit: 3, .. })
        ));
        assert!(matches!(
            s.apply_local(&x, &[1, 1]),
            Err(StateVecError::ArityMismatch { .. })
        ));
        let not_gate = LocalOperator::linear(1, vec![r(1.0), r(0.0), r(0.0), r(2.0)]).unwrap();
        assert!(matches!(s.apply_local(&not_gate, &[1]), Err(StateVecError::NotAGate)));
        assert!(matches!(
            LocalOperator::gate(1, vec![r(1.0), r(0.0), r(0.0), r(2.0)]),
            Err(StateVecError::NonUnitary { .. })
        ));
    }

    #[test]
    fn duplicate_targets_rejected() {
        let s = bell_phi_plus().tensor(&StateVector::basis(1, 0)).unwrap();
        let u = LocalOperator::identity(2);
        assert!(matches!(
            s.apply_local(&u, &[2, 2]),
            Err(StateVecError::DuplicateTarget)
        ));
    }

    #[test]
    fn apply_local_matches_dense_embedding_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xA11CE);
        for n in 2..=5usize {
            for _ in 0..100 {
                let s = crate::verify::random_state(n, &mut rng);
                let arity = if n >= 2 && rand::Rng::random_bool(&mut rng, 0.5) { 2 } else { 1 };
                let u = crate::verify::random_gate(arity, &mut rng);
                let targets = crate::verify::random_targets(n, arity, &mut rng);
                let fast = s.apply_local(&u, &targets).unwrap();
                let dense = oracle::embed_operator(&u, &targets, n);
                let slow = oracle::apply_dense(&dense, s.amps());
                for (x, y) in fast.amps().iter().zip(slow.iter()) {
                    assert!((x - y).norm() <= 1e-12, "mismatch at n={n}");
                }
                assert_close(fast.norm_sqr(), 1.0, NORM_TOL);
            }
        }
    }

    #[test]
    fn project_basis_probe() {
        let (p, residual) = StateVector::basis(2, 0)
            .project_onto(&StateVector::basis(1, 0), &[1])
            .unwrap();
        assert_close(p, 1.0, 1e-15);
        assert_eq!(residual.unwrap(), StateVector::basis(1, 0));
    }

    #[test]
    fn project_bell_state_born_rule() {
        let (p, residual) = bell_phi_plus()
            .project_onto(&StateVector::basis(1, 0), &[1])
            .unwrap();
        assert_close(p, 0.5, 1e-15);
        assert_eq!(residual.unwrap(), StateVector::basis(1, 0));
    }

    #[test]
    fn project_two_pairs_onto_phi_plus() {
        // Equal pairs with α² = 0.8 projected onto Φ⁺ at qubits (2,3).
        let (alpha, beta) = (0.8f64.sqrt(), 0.2f64.sqrt());
        let pair = StateVector::new(2, vec![r(alpha), r(0.0), r(0.0), r(beta)]).unwrap();
        let full = pair.tensor(&pair).unwrap();
        let (p, residual) = full.project_onto(&bell_phi_plus(), &[2, 3]).unwrap();
        assert_close(p, 0.34, 1e-12);
        let res = residual.unwrap();
        let norm = (0.8f64.powi(2) + 0.2f64.powi(2)).sqrt();
        assert_close(res.amp(0).re, 0.8 / norm, 1e-12);
        assert_close(res.amp(3).re, 0.2 / norm, 1e-12);
        assert_close(res.amp(1).norm(), 0.0, 1e-15);
        assert_close(res.amp(2).norm(), 0.0, 1e-15);
    }

    #[test]
    fn projection_probabilities_complete_over_basis_probes() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xBEEF);
        for _ in 0..50 {
            let s = crate::verify::random_state(4, &mut rng);
            let mut total = 0.0;
            for idx in 0..4 {
                let probe = StateVector::basis(2, idx);
                let (p, residual) = s.project_onto(&probe, &[2, 4]).unwrap();
                total += p;
                if let Some(res) = residual {
                    assert_close(res.norm_sqr(), 1.0, NORM_TOL);
                    assert_eq!(res.n_qubits(), 2);
                }
            }
            assert_close(total, 1.0, NORM_TOL);
        }
    }

    #[test]
    fn tiny_probability_yields_absent_residual() {
        let s = StateVector::basis(2, 0);
        let (p, residual) = s.project_onto(&StateVector::basis(1, 1), &[1]).unwrap();
        assert!(p < PROB_CUTOFF);
        assert!(residual.is_none());
    }

    #[test]
    fn probe_arity_mismatch_rejected() {
        let s = bell_phi_plus();
        let err = s.project_onto(&bell_phi_plus(), &[1]).unwrap_err();
        assert!(matches!(err, StateVecError::ProbeMismatch { .. }));
    }

    #[test]
    fn constructor_rejects_bad_vectors() {
        assert!(matches!(
            StateVector::new(2, vec![r(1.0); 3]),
            Err(StateVecError::DimensionMismatch { .. })
        ));
        assert!(matches!(
            StateVector::new(1, vec![r(0.6), r(0.6)]),
            Err(StateVecError::NotNormalized { .. })
        ));
        assert!(matches!(
            StateVector::new(1, vec![c(f64::NAN, 0.0), r(0.0)]),
            Err(StateVecError::NonFinite)
        ));
        assert!(matches!(
            StateVector::new(7, vec![r(1.0); 128]),
            Err(StateVecError::RegisterOverflow { .. })
        ));
    }

    #[test]
    fn identity_has_zero_defect() {
        assert_eq!(LocalOperator::identity(2).unitary_defect(), 0.0);
    }
}
