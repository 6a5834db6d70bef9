//! One-shot entanglement purification by swapping and local filtering.
//!
//! Two non-maximally entangled qubit pairs (1,2) and (3,4) are connected by a
//! Bell measurement on qubits 2 and 3 (entanglement swapping). Each of the
//! four measurement branches leaves qubits 1 and 4 in a two-term state, which
//! a Procrustean filter — a unitary on qubit 1 plus a fresh ancilla, followed
//! by an ancilla measurement — converts into a maximally entangled Bell pair
//! with the optimal probability. The total success probability over the whole
//! tree is `2·min(β², b²)`, where β² and b² are the smaller Schmidt weights of
//! the two input pairs.
//!
//! The crate keeps three independent routes to every number it reports:
//!
//! * [`protocol::run_exact`] — the production path, enumerating all branches
//!   through [`statevec`] primitives;
//! * [`oracle`] — a brute-force dense pipeline (full 5-qubit register,
//!   embedded 32×32 operators, explicit projectors) sharing no simulation
//!   code with the production path;
//! * [`protocol::run_sampled`] — seeded Monte Carlo over the exact tree.
//!
//! [`verify`] bundles the cross-checks into the suites behind the
//! `entswap verify` CLI subcommand.

pub mod analysis;
pub mod bell;
pub mod cli;
pub mod filter;
pub mod oracle;
pub mod protocol;
pub mod report;
pub mod statevec;
pub mod tol;
pub mod verify;

pub use statevec::{Amplitude, LocalOperator, StateVector};
