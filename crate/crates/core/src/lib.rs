//! Spin-1/2 quantum mechanics workbench.
//!
//! Two languages live here. The calculational one ([`quantum`]) works with
//! kets, bras and operators joined by a single sorted Dirac product. The
//! laboratory one ([`beamstack`]) describes Stern-Gerlach apparatus as
//! operations on a stack of beams: split, filter, recombine, apply a uniform
//! magnetic field, drop and flip. [`simple`] is the pure-state version of the
//! laboratory built directly on the calculational layer, and [`script`] turns
//! laboratory sessions into runnable text files.

pub mod axis;
pub mod batch;
pub mod beamstack;
pub mod quantum;
pub mod script;
pub mod simple;

pub use axis::{Axis, Sign};
pub use beamstack::{BeamStack, StackError};
pub use quantum::{Bra, Ket, Operator, QuantumError, Radians, C};
