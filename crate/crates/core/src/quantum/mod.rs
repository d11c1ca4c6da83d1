//! The calculational language: kets, bras, operators and the Dirac product.
//!
//! All amplitudes are stored in the `{|z+⟩, |z−⟩}` basis with `|z+⟩ = (1, 0)`.
//! Units have `ħ = 1`; the library exposes the Pauli operators `σ`, so the
//! spin component operators are `S = σ / 2`.

mod algebra;
mod dynamics;
mod states;
mod value;

pub use algebra::{dagger, Bra, Dagger, Ket, Operator};
pub use dynamics::{probability, rotation_operator, time_ev};
pub use states::{nm, np, projector, sn, sx, sy, sz, xm, xp, ym, yp, zm, zp};
pub use value::{NonsenseProduct, Sort, Value};

use thiserror::Error;

/// Complex scalar, the field everything is built over.
pub type C = num_complex::Complex64;

/// Angles are plain `f64` radians.
pub type Radians = f64;

/// Tolerance used to decide whether a ket is normalized for the Born rule.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-6;

/// Tolerance used to decide whether a Hamiltonian is Hermitian.
pub const HERMITIAN_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuantumError {
    #[error("non-finite amplitude in {0}")]
    NonFinite(&'static str),
    #[error("{what} is not normalized (norm {norm})")]
    NotNormalized { what: &'static str, norm: f64 },
    #[error("Hamiltonian is not Hermitian (residual {0:e})")]
    NotHermitian(f64),
    #[error("time step must be positive and finite, got {0}")]
    BadTimeStep(f64),
}
