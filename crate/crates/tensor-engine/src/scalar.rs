//! Element-type abstraction over `f32` and `f64`.

use std::fmt::{Debug, Display};

/// Floating-point element type usable by the tape.
///
/// `f32` is the training dtype; `f64` exists so finite-difference gradient
/// checks are free of rounding noise.
pub trait Scalar:
    num_traits::Float
    + num_traits::FromPrimitive
    + num_traits::ToPrimitive
    + std::iter::Sum
    + Default
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Size of the little-endian encoding, in bytes.
    const BYTES: usize;
    /// Tag stored in checkpoint headers (4 = f32, 8 = f64).
    const DTYPE_TAG: u8;

    fn erf(self) -> Self;

    fn from_f(v: f64) -> Self {
        <Self as num_traits::NumCast>::from(v).expect("f64 -> scalar cast")
    }

    fn to_f(self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self).expect("scalar -> f64 cast")
    }

    fn write_le(self, out: &mut Vec<u8>);
    fn read_le(bytes: &[u8]) -> Self;
}

impl Scalar for f32 {
    const BYTES: usize = 4;
    const DTYPE_TAG: u8 = 4;

    fn erf(self) -> Self {
        libm::erff(self)
    }

    fn write_le(self, out: &mut Vec<u8>) {
        out.extend_from_slice(&self.to_le_bytes());
    }

    fn read_le(bytes: &[u8]) -> Self {
        f32::from_le_bytes(bytes[..4].try_into().unwrap())
    }
}

impl Scalar for f64 {
    const BYTES: usize = 8;
    const DTYPE_TAG: u8 = 8;

    fn erf(self) -> Self {
        libm::erf(self)
    }

    fn write_le(self, out: &mut Vec<u8>) {
        out.extend_from_slice(&self.to_le_bytes());
    }

    fn read_le(bytes: &[u8]) -> Self {
        f64::from_le_bytes(bytes[..8].try_into().unwrap())
    }
}
