//! The simplified laboratory: one beam at a time, as an unnormalized ket.
//!
//! A [`Beam`]'s intensity is the squared norm of its amplitude. There is no
//! oven beam here; every beam is pure, as if it had already passed through
//! some splitter. Splitters return `(plus, minus)` and recombiners take
//! `(plus_port, minus_port)`, so `recombine(split(b)) == b`.

use crate::axis::{Axis, Sign};
use crate::quantum::{self, nm, np, projector, rotation_operator, Ket, Radians};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Beam(Ket);

impl Beam {
    pub fn new(amp: Ket) -> Self {
        Beam(amp)
    }

    /// No particles at all.
    pub fn zero() -> Self {
        Beam(Ket::zero())
    }

    pub fn amplitude(&self) -> Ket {
        self.0
    }

    pub fn xp() -> Self {
        Beam(quantum::xp())
    }

    pub fn xm() -> Self {
        Beam(quantum::xm())
    }

    pub fn yp() -> Self {
        Beam(quantum::yp())
    }

    pub fn ym() -> Self {
        Beam(quantum::ym())
    }

    pub fn zp() -> Self {
        Beam(quantum::zp())
    }

    pub fn zm() -> Self {
        Beam(quantum::zm())
    }

    pub fn intensity(&self) -> f64 {
        self.0.norm_sqr()
    }

    pub fn split(&self, theta: Radians, phi: Radians) -> (Beam, Beam) {
        (
            Beam(projector(np(theta, phi)) * self.0),
            Beam(projector(nm(theta, phi)) * self.0),
        )
    }

    pub fn split_along(&self, axis: Axis) -> (Beam, Beam) {
        let (theta, phi) = axis.angles();
        self.split(theta, phi)
    }

    pub fn split_x(&self) -> (Beam, Beam) {
        self.split_along(Axis::X)
    }

    pub fn split_y(&self) -> (Beam, Beam) {
        self.split_along(Axis::Y)
    }

    pub fn split_z(&self) -> (Beam, Beam) {
        self.split_along(Axis::Z)
    }

    pub fn filter(&self, axis: Axis, sign: Sign) -> Beam {
        let (plus, minus) = self.split_along(axis);
        match sign {
            Sign::Plus => plus,
            Sign::Minus => minus,
        }
    }

    pub fn xp_filter(&self) -> Beam {
        self.filter(Axis::X, Sign::Plus)
    }

    pub fn xm_filter(&self) -> Beam {
        self.filter(Axis::X, Sign::Minus)
    }

    pub fn yp_filter(&self) -> Beam {
        self.filter(Axis::Y, Sign::Plus)
    }

    pub fn ym_filter(&self) -> Beam {
        self.filter(Axis::Y, Sign::Minus)
    }

    pub fn zp_filter(&self) -> Beam {
        self.filter(Axis::Z, Sign::Plus)
    }

    pub fn zm_filter(&self) -> Beam {
        self.filter(Axis::Z, Sign::Minus)
    }

    pub fn apply_b_field(&self, theta: Radians, phi: Radians, omega: Radians) -> Beam {
        Beam(rotation_operator(theta, phi, omega) * self.0)
    }

    pub fn apply_b_field_along(&self, axis: Axis, omega: Radians) -> Beam {
        let (theta, phi) = axis.angles();
        self.apply_b_field(theta, phi, omega)
    }

    pub fn apply_b_field_x(&self, omega: Radians) -> Beam {
        self.apply_b_field_along(Axis::X, omega)
    }

    pub fn apply_b_field_y(&self, omega: Radians) -> Beam {
        self.apply_b_field_along(Axis::Y, omega)
    }

    pub fn apply_b_field_z(&self, omega: Radians) -> Beam {
        self.apply_b_field_along(Axis::Z, omega)
    }

    pub fn max_abs_diff(&self, other: &Beam) -> f64 {
        self.0.max_abs_diff(&other.0)
    }
}

/// Coherently merge the matching components of `(plus_port, minus_port)`.
pub fn recombine(theta: Radians, phi: Radians, (plus, minus): (Beam, Beam)) -> Beam {
    Beam(projector(np(theta, phi)) * plus.0 + projector(nm(theta, phi)) * minus.0)
}

pub fn recombine_along(axis: Axis, pair: (Beam, Beam)) -> Beam {
    let (theta, phi) = axis.angles();
    recombine(theta, phi, pair)
}

pub fn recombine_x(pair: (Beam, Beam)) -> Beam {
    recombine_along(Axis::X, pair)
}

pub fn recombine_y(pair: (Beam, Beam)) -> Beam {
    recombine_along(Axis::Y, pair)
}

pub fn recombine_z(pair: (Beam, Beam)) -> Beam {
    recombine_along(Axis::Z, pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::C;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

    // z+ beam at the intensity a z+ filter passes from the oven
    fn half_zp() -> Beam {
        Beam::new(C::new(FRAC_1_SQRT_2, 0.0) * quantum::zp())
    }

    #[test]
    fn unit_beams() {
        for b in [
            Beam::xp(),
            Beam::xm(),
            Beam::yp(),
            Beam::ym(),
            Beam::zp(),
            Beam::zm(),
        ] {
            assert!((b.intensity() - 1.0).abs() < 1e-12);
        }
        assert_eq!(Beam::zero().intensity(), 0.0);
    }

    #[test]
    fn splitting_a_z_beam() {
        let (up, down) = Beam::zp().split_z();
        assert_eq!(up, Beam::zp());
        assert_eq!(down.intensity(), 0.0);
        let (a, b) = Beam::zp().split_x();
        assert!((a.intensity() - 0.5).abs() < 1e-15);
        assert!((b.intensity() - 0.5).abs() < 1e-15);
        let (z0, z1) = Beam::zero().split_y();
        assert_eq!((z0.intensity(), z1.intensity()), (0.0, 0.0));
        let n = Beam::new(np(2.1, -0.6));
        let (plus, minus) = n.split(2.1, -0.6);
        assert!((plus.intensity() - 1.0).abs() < 1e-12);
        assert!(minus.intensity() < 1e-24);
    }

    #[test]
    fn filter_cascade() {
        assert_eq!(Beam::zp().zp_filter().zm_filter().intensity(), 0.0);
        assert!((Beam::zp().xp_filter().intensity() - 0.5).abs() < 1e-15);
        let through = half_zp().zp_filter().xp_filter().zm_filter();
        assert!((through.intensity() - 0.125).abs() < 1e-15);
        assert!(Beam::xp().xp_filter().max_abs_diff(&Beam::xp()) < 1e-15);
    }

    #[test]
    fn experiment_four_and_swapped_ports() {
        let pair = half_zp().split_x();
        let merged = recombine_x(pair);
        assert!((merged.intensity() - 0.5).abs() < 1e-15);
        let (up, down) = merged.split_z();
        assert!((up.intensity() - 0.5).abs() < 1e-15);
        assert!(down.intensity() < 1e-30);
        let swapped = recombine_x((pair.1, pair.0));
        assert!(swapped.intensity() < 1e-30);
    }

    #[test]
    fn field_rotations() {
        assert_eq!(Beam::xm().apply_b_field_z(0.0), Beam::xm());
        let rotated = Beam::zp().apply_b_field_y(FRAC_PI_2);
        assert!((rotated.xp_filter().intensity() - 1.0).abs() < 1e-12);
        let b = Beam::new(quantum::np(0.4, 1.7));
        let flipped = b.apply_b_field_x(2.0 * PI);
        assert!(flipped.amplitude().max_abs_diff(&-b.amplitude()) < 1e-12);
    }
}
