//! Finite topological spaces welded to quantum tensor networks.
//!
//! The crate has two halves that meet in [`augment`]:
//!
//! * a combinatorial half: finite spaces as minimal-open tables
//!   ([`space`]), the two spaces a graph generates ([`graph`]), the Heyting
//!   algebra of opens ([`heyting`]), and the augmentation of a space by
//!   entanglement-link points ([`augment`]);
//! * a numeric half: dense complex tensors and network contraction
//!   ([`tensor`], [`network`]) and small-scale pure-state algebra:
//!   teleportation, entanglement swapping, GHZ/W measurement ([`quantum`]).
//!
//! Numeric code is generic over the real scalar ([`scalar::Real`]); the
//! aliases below pin `f32` and `f64` versions. JSON schemas and DOT export
//! for every type live in [`json`] and [`dot`].

pub mod augment;
mod bits;
pub mod dot;
pub mod error;
pub mod graph;
pub mod heyting;
pub mod json;
mod linalg;
pub mod network;
pub mod quantum;
pub mod scalar;
pub mod space;
pub mod tensor;
pub mod tolerance;

pub use error::{Error, Result};
pub use scalar::Real;

/// `f64` tensor.
pub type Tensor64 = tensor::Tensor<f64>;
/// `f32` tensor.
pub type Tensor32 = tensor::Tensor<f32>;
/// `f64` tensor network.
pub type TensorNetwork64 = network::TensorNetwork<f64>;
/// `f32` tensor network.
pub type TensorNetwork32 = network::TensorNetwork<f32>;
/// `f64` pure state.
pub type PureState64 = quantum::PureState<f64>;
/// `f32` pure state.
pub type PureState32 = quantum::PureState<f32>;
/// `f64` two-qubit state matrix.
pub type TwoQubitMatrix64 = quantum::TwoQubitMatrix<f64>;
/// `f32` two-qubit state matrix.
pub type TwoQubitMatrix32 = quantum::TwoQubitMatrix<f32>;
/// `f64` augmented space.
pub type AugmentedSpace64 = augment::AugmentedSpace<f64>;
/// `f32` augmented space.
pub type AugmentedSpace32 = augment::AugmentedSpace<f32>;
/// `f64` entanglement link.
pub type EntanglementLink64 = augment::EntanglementLink<f64>;
