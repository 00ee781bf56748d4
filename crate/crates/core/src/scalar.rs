//! Real scalar abstraction for the numeric half of the crate.
//!
//! Tensor and quantum-state code is generic over the underlying float so the
//! same algorithms run in `f32` and `f64`; the crate root exports concrete
//! aliases for both. Topological types carry no scalars and are unaffected.

use std::fmt;

use num_traits::{Float, FromPrimitive, NumAssign};

/// Real floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float + FromPrimitive + NumAssign + fmt::Debug + fmt::Display + Default + Send + Sync + 'static
{
    /// Converts an `f64` tolerance or literal into `Self`.
    fn from_f64_lossy(x: f64) -> Self {
        Self::from_f64(x).expect("f64 constant representable in scalar type")
    }
}

impl Real for f32 {}
impl Real for f64 {}
