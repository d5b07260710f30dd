//! Dense-tensor library with reverse-mode automatic differentiation.
//!
//! Tensors are flat row-major buffers plus shape metadata, recorded as nodes
//! on a [`Tape`] (a Wengert list). Every operation eagerly computes its output
//! and records enough context to replay the chain rule in reverse. Calling
//! [`Tensor::backward`] on a scalar populates the gradient of every reachable
//! tensor that requires one, accumulating across fan-out.
//!
//! The element type is generic over [`Scalar`] (`f32` for training paths,
//! `f64` for finite-difference gradient checks). All kernels are
//! single-threaded and deterministic: the same inputs produce bit-identical
//! outputs across runs.

mod conv;
mod elementwise;
mod error;
mod grad_check;
mod linear;
pub mod macs;
mod norm;
mod op;
mod pool;
mod reduce;
mod scalar;
mod shape_ops;
mod softmax;
mod tape;

pub use error::{Result, TensorError};
pub use grad_check::{grad_check, max_rel_err, rel_err, GradCheckReport};
pub use norm::RunningStats;
pub use pool::PoolKind;
pub use scalar::Scalar;
pub use shape_ops::concat;
pub use tape::{Tape, Tensor};

use std::io::Write as _;
use std::path::Path;

/// Debug dump: first line is the shape, then one value per line in row-major
/// order.
pub fn dump_tensor<S: Scalar>(t: &Tensor<S>, path: &Path) -> std::io::Result<()> {
    let mut f = std::io::BufWriter::new(std::fs::File::create(path)?);
    let shape: Vec<String> = t.shape().iter().map(|d| d.to_string()).collect();
    writeln!(f, "{}", shape.join(" "))?;
    for v in t.data().iter() {
        writeln!(f, "{v}")?;
    }
    Ok(())
}
