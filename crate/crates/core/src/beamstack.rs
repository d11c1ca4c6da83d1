//! The laboratory language: a stack of beams.
//!
//! The whole stack is one density operator on the joint spin ⊗ path space.
//! With `B` beams the basis index of spin `s` (0 = z+, 1 = z−) on path `j`
//! is `s·B + j`; path 0 is the bottom of the stack and path `B−1` the top.
//! Keeping a single joint operator, rather than one state per beam, retains
//! the coherences between beams. Those coherences are what lets a recombiner
//! undo a splitter, and what makes a `2π` field rotation on one branch
//! visible downstream.
//!
//! Every operation is a map `ρ ↦ K ρ K†` with `K` assembled from per-path
//! spin blocks, followed by re-symmetrization. Intensities are absolute: the
//! oven beam has intensity 1 and nothing renormalizes.

use std::fmt;

use nalgebra::DMatrix;
use thiserror::Error;

use crate::axis::{Axis, Sign};
use crate::quantum::{nm, np, projector, rotation_operator, Ket, Operator, Radians, C};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum StackError {
    #[error("no beam to drop")]
    NoBeamToDrop,
    #[error("no beam to split")]
    NoBeamToSplit,
    #[error("no beam")]
    NoBeam,
    #[error("need two beams to flip")]
    NeedTwoToFlip,
    #[error("need two beams to recombine")]
    NeedTwoToRecombine,
}

impl StackError {
    /// Short machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            StackError::NoBeamToDrop | StackError::NoBeamToSplit | StackError::NoBeam => "no-beam",
            StackError::NeedTwoToFlip | StackError::NeedTwoToRecombine => "need-two-beams",
        }
    }
}

/// One block of a path-space transfer: spin operator `spin` carries
/// amplitude from old path `from` to new path `to`.
struct Route {
    to: usize,
    from: usize,
    spin: Operator,
}

impl Route {
    fn straight(path: usize) -> Route {
        Route {
            to: path,
            from: path,
            spin: Operator::identity(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BeamStack {
    beams: usize,
    rho: DMatrix<C>,
}

impl Default for BeamStack {
    fn default() -> Self {
        Self::empty()
    }
}

impl BeamStack {
    pub fn empty() -> Self {
        BeamStack {
            beams: 0,
            rho: DMatrix::zeros(0, 0),
        }
    }

    /// The unpolarized beam leaving the oven: spin state `I/2`, intensity 1.
    pub fn random_beam() -> Self {
        Self::empty().push_random()
    }

    /// A stack in the pure joint state `Σⱼ |kets[j]⟩ ⊗ |j⟩`. Each ket's squared
    /// norm is that beam's intensity.
    pub fn from_pure(kets: &[Ket]) -> Self {
        let beams = kets.len();
        let mut psi = DMatrix::<C>::zeros(2 * beams, 1);
        for (j, k) in kets.iter().enumerate() {
            let [up, down] = k.amps();
            psi[(j, 0)] = up;
            psi[(beams + j, 0)] = down;
        }
        let rho = &psi * psi.adjoint();
        Self::settled(beams, rho)
    }

    /// Wrap an explicit joint density operator. Returns `None` unless `rho`
    /// is `2B × 2B` and Hermitian within `1e-10`.
    pub fn from_density(beams: usize, rho: DMatrix<C>) -> Option<Self> {
        if rho.nrows() != 2 * beams || rho.ncols() != 2 * beams {
            return None;
        }
        let residual = (&rho - rho.adjoint()).camax();
        if residual.is_nan() || residual > 1e-10 {
            return None;
        }
        Some(Self::settled(beams, rho))
    }

    fn settled(beams: usize, rho: DMatrix<C>) -> Self {
        let rho = (&rho + rho.adjoint()).scale(0.5);
        BeamStack { beams, rho }
    }

    pub fn beam_count(&self) -> usize {
        self.beams
    }

    pub fn is_empty(&self) -> bool {
        self.beams == 0
    }

    /// Joint density operator in the `s·B + j` ordering.
    pub fn density(&self) -> &DMatrix<C> {
        &self.rho
    }

    fn index(&self, spin: usize, path: usize) -> usize {
        spin * self.beams + path
    }

    /// Per-beam intensities, bottom of the stack first.
    pub fn intensities(&self) -> Vec<f64> {
        (0..self.beams).map(|j| self.intensity(j)).collect()
    }

    fn intensity(&self, path: usize) -> f64 {
        let up = self.index(0, path);
        let down = self.index(1, path);
        self.rho[(up, up)].re + self.rho[(down, down)].re
    }

    pub fn total_intensity(&self) -> f64 {
        self.rho.trace().re
    }

    /// Unnormalized spin density of one beam, `⟨j|ρ|j⟩`.
    pub fn beam_state(&self, path: usize) -> Option<Operator> {
        if path >= self.beams {
            return None;
        }
        let (u, d) = (self.index(0, path), self.index(1, path));
        Some(Operator::new([
            [self.rho[(u, u)], self.rho[(u, d)]],
            [self.rho[(d, u)], self.rho[(d, d)]],
        ]))
    }

    /// `‖ρ − ρ†‖∞` over entries.
    pub fn hermiticity_residual(&self) -> f64 {
        if self.beams == 0 {
            return 0.0;
        }
        (&self.rho - self.rho.adjoint()).camax()
    }

    /// Smallest eigenvalue of ρ; `0` for the empty stack.
    pub fn min_eigenvalue(&self) -> f64 {
        if self.beams == 0 {
            return 0.0;
        }
        self.rho
            .clone()
            .symmetric_eigenvalues()
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }

    fn transform(&self, beams: usize, routes: &[Route]) -> BeamStack {
        let mut k = DMatrix::<C>::zeros(2 * beams, 2 * self.beams);
        for route in routes {
            for s_out in 0..2 {
                for s_in in 0..2 {
                    k[(s_out * beams + route.to, self.index(s_in, route.from))] +=
                        route.spin.get(s_out, s_in);
                }
            }
        }
        let rho = &k * &self.rho * k.adjoint();
        Self::settled(beams, rho)
    }

    /// Push a fresh oven beam on top, incoherent with everything below.
    pub fn push_random(&self) -> BeamStack {
        let old = self.beams;
        let beams = old + 1;
        let mut rho = DMatrix::<C>::zeros(2 * beams, 2 * beams);
        for s in 0..2 {
            for j in 0..old {
                for t in 0..2 {
                    for k in 0..old {
                        rho[(s * beams + j, t * beams + k)] =
                            self.rho[(self.index(s, j), self.index(t, k))];
                    }
                }
            }
            rho[(s * beams + old, s * beams + old)] = C::new(0.5, 0.0);
        }
        BeamStack { beams, rho }
    }

    /// Remove the top beam together with all of its coherences.
    pub fn drop_beam(&self) -> Result<BeamStack, StackError> {
        if self.beams == 0 {
            return Err(StackError::NoBeamToDrop);
        }
        let routes: Vec<Route> = (0..self.beams - 1).map(Route::straight).collect();
        Ok(self.transform(self.beams - 1, &routes))
    }

    /// Swap the top two beams.
    pub fn flip_beams(&self) -> Result<BeamStack, StackError> {
        if self.beams < 2 {
            return Err(StackError::NeedTwoToFlip);
        }
        let top = self.beams - 1;
        let mut routes: Vec<Route> = (0..top - 1).map(Route::straight).collect();
        routes.push(Route {
            to: top - 1,
            from: top,
            spin: Operator::identity(),
        });
        routes.push(Route {
            to: top,
            from: top - 1,
            spin: Operator::identity(),
        });
        Ok(self.transform(self.beams, &routes))
    }

    /// Replace the top beam by its `n+` and `n−` components; `n−` ends up on
    /// top.
    pub fn split(&self, theta: Radians, phi: Radians) -> Result<BeamStack, StackError> {
        if self.beams == 0 {
            return Err(StackError::NoBeamToSplit);
        }
        let top = self.beams - 1;
        let mut routes: Vec<Route> = (0..top).map(Route::straight).collect();
        routes.push(Route {
            to: top,
            from: top,
            spin: projector(np(theta, phi)),
        });
        routes.push(Route {
            to: top + 1,
            from: top,
            spin: projector(nm(theta, phi)),
        });
        Ok(self.transform(self.beams + 1, &routes))
    }

    pub fn split_along(&self, axis: Axis) -> Result<BeamStack, StackError> {
        let (theta, phi) = axis.angles();
        self.split(theta, phi)
    }

    pub fn split_x(&self) -> Result<BeamStack, StackError> {
        self.split_along(Axis::X)
    }

    pub fn split_y(&self) -> Result<BeamStack, StackError> {
        self.split_along(Axis::Y)
    }

    pub fn split_z(&self) -> Result<BeamStack, StackError> {
        self.split_along(Axis::Z)
    }

    /// Split and discard one output: `drop ∘ split` keeps `n+`,
    /// `drop ∘ flip ∘ split` keeps `n−`.
    pub fn filter(&self, axis: Axis, sign: Sign) -> Result<BeamStack, StackError> {
        let split = self.split_along(axis)?;
        let kept = match sign {
            Sign::Plus => split,
            Sign::Minus => split.flip_beams()?,
        };
        kept.drop_beam()
    }

    pub fn xp_filter(&self) -> Result<BeamStack, StackError> {
        self.filter(Axis::X, Sign::Plus)
    }

    pub fn xm_filter(&self) -> Result<BeamStack, StackError> {
        self.filter(Axis::X, Sign::Minus)
    }

    pub fn yp_filter(&self) -> Result<BeamStack, StackError> {
        self.filter(Axis::Y, Sign::Plus)
    }

    pub fn ym_filter(&self) -> Result<BeamStack, StackError> {
        self.filter(Axis::Y, Sign::Minus)
    }

    pub fn zp_filter(&self) -> Result<BeamStack, StackError> {
        self.filter(Axis::Z, Sign::Plus)
    }

    pub fn zm_filter(&self) -> Result<BeamStack, StackError> {
        self.filter(Axis::Z, Sign::Minus)
    }

    /// Merge the top two beams. The second-from-top beam enters the `n+`
    /// port and the top beam the `n−` port, mirroring `split`'s output
    /// order. Components arriving at the wrong port are lost.
    pub fn recombine(&self, theta: Radians, phi: Radians) -> Result<BeamStack, StackError> {
        if self.beams < 2 {
            return Err(StackError::NeedTwoToRecombine);
        }
        let merged = self.beams - 2;
        let mut routes: Vec<Route> = (0..merged).map(Route::straight).collect();
        routes.push(Route {
            to: merged,
            from: merged,
            spin: projector(np(theta, phi)),
        });
        routes.push(Route {
            to: merged,
            from: merged + 1,
            spin: projector(nm(theta, phi)),
        });
        Ok(self.transform(self.beams - 1, &routes))
    }

    pub fn recombine_along(&self, axis: Axis) -> Result<BeamStack, StackError> {
        let (theta, phi) = axis.angles();
        self.recombine(theta, phi)
    }

    pub fn recombine_x(&self) -> Result<BeamStack, StackError> {
        self.recombine_along(Axis::X)
    }

    pub fn recombine_y(&self) -> Result<BeamStack, StackError> {
        self.recombine_along(Axis::Y)
    }

    pub fn recombine_z(&self) -> Result<BeamStack, StackError> {
        self.recombine_along(Axis::Z)
    }

    /// Uniform field along `(theta, phi)` on the top beam; `omega` lumps
    /// field strength and duration into a precession angle.
    pub fn apply_b_field(
        &self,
        theta: Radians,
        phi: Radians,
        omega: Radians,
    ) -> Result<BeamStack, StackError> {
        if self.beams == 0 {
            return Err(StackError::NoBeam);
        }
        let top = self.beams - 1;
        let mut routes: Vec<Route> = (0..top).map(Route::straight).collect();
        routes.push(Route {
            to: top,
            from: top,
            spin: rotation_operator(theta, phi, omega),
        });
        Ok(self.transform(self.beams, &routes))
    }

    pub fn apply_b_field_along(&self, axis: Axis, omega: Radians) -> Result<BeamStack, StackError> {
        let (theta, phi) = axis.angles();
        self.apply_b_field(theta, phi, omega)
    }

    pub fn apply_b_field_x(&self, omega: Radians) -> Result<BeamStack, StackError> {
        self.apply_b_field_along(Axis::X, omega)
    }

    pub fn apply_b_field_y(&self, omega: Radians) -> Result<BeamStack, StackError> {
        self.apply_b_field_along(Axis::Y, omega)
    }

    pub fn apply_b_field_z(&self, omega: Radians) -> Result<BeamStack, StackError> {
        self.apply_b_field_along(Axis::Z, omega)
    }

    /// Largest entry-wise distance between two stacks of equal size.
    pub fn max_abs_diff(&self, other: &BeamStack) -> Option<f64> {
        if self.beams != other.beams {
            return None;
        }
        if self.beams == 0 {
            return Some(0.0);
        }
        Some((&self.rho - &other.rho).camax())
    }
}

/// Render an intensity the way the stack printer does. Tiny negative
/// rounding noise shows as `0.0`; `round` fixes the number of decimals.
pub fn format_intensity(value: f64, round: Option<usize>) -> String {
    let v = if value <= 0.0 { 0.0 } else { value };
    match round {
        Some(digits) => format!("{v:.digits$}"),
        None => format!("{v:?}"),
    }
}

/// Lines of the form `Beam of intensity X`, bottom of the stack first.
pub fn render_intensities(intensities: &[f64], round: Option<usize>) -> String {
    let mut out = String::new();
    for &i in intensities {
        out.push_str("Beam of intensity ");
        out.push_str(&format_intensity(i, round));
        out.push('\n');
    }
    out
}

impl fmt::Display for BeamStack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_intensities(&self.intensities(), None))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::{xp, zp};

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn random_beam_is_maximally_mixed() {
        let s = BeamStack::random_beam();
        assert_eq!(s.intensities(), vec![1.0]);
        let spin = s.beam_state(0).unwrap();
        assert!(spin.max_abs_diff(&(C::new(0.5, 0.0) * Operator::identity())) < 1e-15);
    }

    #[test]
    fn experiment_one_transcript() {
        let s = BeamStack::random_beam();
        let s = s.split_z().unwrap();
        assert_eq!(s.intensities(), vec![0.5, 0.5]);
        let s = s.drop_beam().unwrap();
        assert_eq!(s.intensities(), vec![0.5]);
        let s = s.split_z().unwrap();
        assert!(close(&s.intensities(), &[0.5, 0.0], 1e-15));
        assert_eq!(
            s.to_string(),
            "Beam of intensity 0.5\nBeam of intensity 0.0\n"
        );
    }

    #[test]
    fn empty_stack_errors() {
        let e = BeamStack::empty();
        assert!(e.intensities().is_empty());
        assert_eq!(e.drop_beam(), Err(StackError::NoBeamToDrop));
        assert_eq!(e.split_x(), Err(StackError::NoBeamToSplit));
        assert_eq!(e.apply_b_field_z(1.0), Err(StackError::NoBeam));
        let one = BeamStack::random_beam();
        assert_eq!(one.flip_beams(), Err(StackError::NeedTwoToFlip));
        assert_eq!(one.recombine_z(), Err(StackError::NeedTwoToRecombine));
        assert_eq!(StackError::NeedTwoToFlip.code(), "need-two-beams");
    }

    #[test]
    fn dropping_the_only_beam_leaves_an_empty_matrix() {
        let s = BeamStack::random_beam().drop_beam().unwrap();
        assert_eq!(s.beam_count(), 0);
        assert_eq!(s.density().shape(), (0, 0));
        assert_eq!(s.total_intensity(), 0.0);
    }

    #[test]
    fn flip_is_an_involution() {
        let s = BeamStack::random_beam()
            .split_x()
            .unwrap()
            .apply_b_field_y(0.7)
            .unwrap();
        let twice = s.flip_beams().unwrap().flip_beams().unwrap();
        assert!(s.max_abs_diff(&twice).unwrap() <= 1e-12);
    }

    #[test]
    fn split_of_eigenstate_sends_everything_down_the_plus_path() {
        let s = BeamStack::from_pure(&[np(1.3, 0.4)])
            .split(1.3, 0.4)
            .unwrap();
        assert!(close(&s.intensities(), &[1.0, 0.0], 1e-12));
    }

    #[test]
    fn push_random_is_incoherent() {
        let s = BeamStack::from_pure(&[zp(), xp()]).push_random();
        assert!(close(&s.intensities(), &[1.0, 1.0, 1.0], 1e-15));
        assert!(s.min_eigenvalue() >= -1e-12);
    }

    #[test]
    fn from_density_validates_shape() {
        assert!(BeamStack::from_density(1, DMatrix::zeros(3, 3)).is_none());
        let mut skew = DMatrix::<C>::zeros(2, 2);
        skew[(0, 1)] = C::new(1.0, 0.0);
        assert!(BeamStack::from_density(1, skew).is_none());
    }

    #[test]
    fn display_formatting() {
        assert_eq!(format_intensity(1.0, None), "1.0");
        assert_eq!(
            format_intensity(0.25000000000000006, None),
            "0.25000000000000006"
        );
        assert_eq!(format_intensity(-1e-17, None), "0.0");
        assert_eq!(format_intensity(-0.0, None), "0.0");
        assert_eq!(format_intensity(0.25000000000000006, Some(3)), "0.250");
    }
}
