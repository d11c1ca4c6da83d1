//! Born-rule probabilities, spin rotations and Schrödinger evolution.

use super::{Dagger, Ket, Operator, QuantumError, Radians, C};
use super::{HERMITIAN_TOLERANCE, NORMALIZATION_TOLERANCE};

/// Probability of finding `state` in `outcome`: `|⟨outcome|state⟩|²`.
///
/// Both kets must be normalized to within [`NORMALIZATION_TOLERANCE`].
pub fn probability(outcome: &Ket, state: &Ket) -> Result<f64, QuantumError> {
    check_normalized(outcome, "outcome ket")?;
    check_normalized(state, "state ket")?;
    Ok((outcome.dagger() * *state).norm_sqr())
}

fn check_normalized(k: &Ket, what: &'static str) -> Result<(), QuantumError> {
    if !k.is_finite() {
        return Err(QuantumError::NonFinite(what));
    }
    let norm = k.norm();
    if (norm - 1.0).abs() > NORMALIZATION_TOLERANCE {
        return Err(QuantumError::NotNormalized { what, norm });
    }
    Ok(())
}

/// Spin rotation by `omega` about the `(theta, phi)` axis,
/// `exp(−i ω σn / 2) = cos(ω/2) I − i sin(ω/2) σn`.
///
/// A rotation by `2π` is `−I`; only `4π` returns to the identity.
pub fn rotation_operator(theta: Radians, phi: Radians, omega: Radians) -> Operator {
    let (s, c) = (omega / 2.0).sin_cos();
    C::new(c, 0.0) * Operator::identity() + C::new(0.0, -s) * super::sn(theta, phi)
}

/// Advance `psi` by one step `dt` under the Hamiltonian `h` (`ħ = 1`).
///
/// Uses the Cayley form `(I + i dt H/2)⁻¹ (I − i dt H/2)`, which is unitary
/// for Hermitian `H` and agrees with `exp(−i dt H)` to second order.
pub fn time_ev(dt: f64, h: &Operator, psi: &Ket) -> Result<Ket, QuantumError> {
    if !(dt.is_finite() && dt > 0.0) {
        return Err(QuantumError::BadTimeStep(dt));
    }
    if !h.is_finite() {
        return Err(QuantumError::NonFinite("Hamiltonian"));
    }
    let residual = h.hermiticity_residual();
    if residual > HERMITIAN_TOLERANCE {
        return Err(QuantumError::NotHermitian(residual));
    }
    if !psi.is_finite() {
        return Err(QuantumError::NonFinite("state ket"));
    }
    let half = C::new(0.0, dt / 2.0) * *h;
    let backward = Operator::identity() + half;
    let forward = Operator::identity() - half;
    // det(I + i dt H/2) = Π(1 + i dt λ/2) never vanishes for real λ.
    let inverse = backward
        .inverse()
        .expect("Cayley denominator is invertible for Hermitian H");
    Ok(inverse * (forward * *psi))
}
