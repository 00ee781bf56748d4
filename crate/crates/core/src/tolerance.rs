//! Numeric thresholds used across the crate, in one place.
//!
//! Two regimes at desk scale (2–4 qubits, tensors with a handful of axes):
//! algebraic identities between two double-precision computation routes hold
//! to ~1e-15 per entry, so 1e-12 leaves three orders of headroom; decision
//! thresholds (rank, determinant, projector) sit at 1e-9 so that genuinely
//! tiny-but-nonzero structure is still detected.

/// Per-entry absolute tolerance for algebraic identities between two
/// computation routes (ordered vs. brute-force contraction, teleport vs.
/// network, swap vs. its oracle).
pub const ALGEBRAIC: f64 = 1e-12;

/// Threshold for rank-style decisions: singular values, determinant
/// magnitude in entanglement detection, and the `PP = P` projector check.
pub const RANK: f64 = 1e-9;

/// Allowed deviation of a state vector's norm from 1 at construction.
pub const NORM: f64 = 1e-9;

/// A measurement branch with probability below this is treated as
/// impossible.
pub const BRANCH: f64 = 1e-12;
