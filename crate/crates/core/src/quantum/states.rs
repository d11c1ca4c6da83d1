//! Named spin-1/2 states and observables.

use std::f64::consts::FRAC_1_SQRT_2;

use super::{Bra, Ket, Operator, Radians, C};
use crate::quantum::Dagger;

const R: f64 = FRAC_1_SQRT_2;

pub fn zp() -> Ket {
    Ket::from_real(1.0, 0.0)
}

pub fn zm() -> Ket {
    Ket::from_real(0.0, 1.0)
}

pub fn xp() -> Ket {
    Ket::from_real(R, R)
}

pub fn xm() -> Ket {
    Ket::from_real(R, -R)
}

pub fn yp() -> Ket {
    Ket::new(C::new(R, 0.0), C::new(0.0, R))
}

pub fn ym() -> Ket {
    Ket::new(C::new(R, 0.0), C::new(0.0, -R))
}

/// Spin up along the direction with polar angle `theta` and azimuth `phi`:
/// `cos(θ/2)|z+⟩ + e^{iφ} sin(θ/2)|z−⟩`.
pub fn np(theta: Radians, phi: Radians) -> Ket {
    let half = theta / 2.0;
    Ket::new(C::new(half.cos(), 0.0), C::from_polar(half.sin(), phi))
}

/// Spin down along `(theta, phi)`: `sin(θ/2)|z+⟩ − e^{iφ} cos(θ/2)|z−⟩`.
pub fn nm(theta: Radians, phi: Radians) -> Ket {
    let half = theta / 2.0;
    Ket::new(C::new(half.sin(), 0.0), -C::from_polar(half.cos(), phi))
}

pub fn sx() -> Operator {
    let one = C::new(1.0, 0.0);
    let zero = C::new(0.0, 0.0);
    Operator::new([[zero, one], [one, zero]])
}

pub fn sy() -> Operator {
    let i = C::new(0.0, 1.0);
    let zero = C::new(0.0, 0.0);
    Operator::new([[zero, -i], [i, zero]])
}

pub fn sz() -> Operator {
    let one = C::new(1.0, 0.0);
    let zero = C::new(0.0, 0.0);
    Operator::new([[one, zero], [zero, -one]])
}

/// Pauli operator along `(theta, phi)`, `|n+⟩⟨n+| − |n−⟩⟨n−|` written out
/// in closed form.
pub fn sn(theta: Radians, phi: Radians) -> Operator {
    let (s, c) = theta.sin_cos();
    Operator::new([
        [C::new(c, 0.0), C::from_polar(s, -phi)],
        [C::from_polar(s, phi), C::new(-c, 0.0)],
    ])
}

/// Projector `|k⟩⟨k|`.
pub fn projector(k: Ket) -> Operator {
    let b: Bra = k.dagger();
    k * b
}
