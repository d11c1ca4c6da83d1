use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::C;

/// A spin-1/2 state vector (column).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Ket([C; 2]);

/// A dual vector (row). Amplitudes are stored already conjugated, so
/// `bra * ket` is a plain sum of products.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bra([C; 2]);

/// A linear operator on the spin space, stored row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Operator([[C; 2]; 2]);

impl Ket {
    pub const fn new(up: C, down: C) -> Self {
        Ket([up, down])
    }

    pub fn from_real(up: f64, down: f64) -> Self {
        Ket([C::new(up, 0.0), C::new(down, 0.0)])
    }

    pub const fn zero() -> Self {
        Ket([C::new(0.0, 0.0); 2])
    }

    pub fn amps(&self) -> [C; 2] {
        self.0
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0[0].norm_sqr() + self.0[1].norm_sqr()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }

    /// Largest component-wise distance to `other`.
    pub fn max_abs_diff(&self, other: &Ket) -> f64 {
        (0..2)
            .map(|i| (self.0[i] - other.0[i]).norm())
            .fold(0.0, f64::max)
    }
}

impl Bra {
    pub const fn new(left: C, right: C) -> Self {
        Bra([left, right])
    }

    pub fn amps(&self) -> [C; 2] {
        self.0
    }

    pub fn max_abs_diff(&self, other: &Bra) -> f64 {
        (0..2)
            .map(|i| (self.0[i] - other.0[i]).norm())
            .fold(0.0, f64::max)
    }
}

impl Operator {
    pub const fn new(rows: [[C; 2]; 2]) -> Self {
        Operator(rows)
    }

    pub const fn identity() -> Self {
        let one = C::new(1.0, 0.0);
        let zero = C::new(0.0, 0.0);
        Operator([[one, zero], [zero, one]])
    }

    pub const fn zero() -> Self {
        Operator([[C::new(0.0, 0.0); 2]; 2])
    }

    pub fn rows(&self) -> [[C; 2]; 2] {
        self.0
    }

    pub fn get(&self, row: usize, col: usize) -> C {
        self.0[row][col]
    }

    pub fn trace(&self) -> C {
        self.0[0][0] + self.0[1][1]
    }

    pub fn determinant(&self) -> C {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|c| c.is_finite())
    }

    pub fn max_abs_diff(&self, other: &Operator) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..2 {
            for c in 0..2 {
                worst = worst.max((self.0[r][c] - other.0[r][c]).norm());
            }
        }
        worst
    }

    /// `‖A − A†‖∞`, zero for a Hermitian operator.
    pub fn hermiticity_residual(&self) -> f64 {
        self.max_abs_diff(&self.dagger())
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_residual() <= tol
    }

    /// Inverse, or `None` when the determinant vanishes.
    pub fn inverse(&self) -> Option<Operator> {
        let det = self.determinant();
        if det.norm() == 0.0 {
            return None;
        }
        let [[a, b], [c, d]] = self.0;
        Some(Operator([[d / det, -b / det], [-c / det, a / det]]))
    }
}

/// The adjoint operation: kets become bras and back, operators become
/// their adjoints and scalars their conjugates.
pub trait Dagger {
    type Output;
    fn dagger(&self) -> Self::Output;
}

impl Dagger for C {
    type Output = C;
    fn dagger(&self) -> C {
        self.conj()
    }
}

impl Dagger for Ket {
    type Output = Bra;
    fn dagger(&self) -> Bra {
        Bra([self.0[0].conj(), self.0[1].conj()])
    }
}

impl Dagger for Bra {
    type Output = Ket;
    fn dagger(&self) -> Ket {
        Ket([self.0[0].conj(), self.0[1].conj()])
    }
}

impl Dagger for Operator {
    type Output = Operator;
    fn dagger(&self) -> Operator {
        let m = &self.0;
        Operator([
            [m[0][0].conj(), m[1][0].conj()],
            [m[0][1].conj(), m[1][1].conj()],
        ])
    }
}

pub fn dagger<T: Dagger>(x: &T) -> T::Output {
    x.dagger()
}

// The Dirac product. Each of the twelve meaningful sort pairs is a `Mul`
// impl; the four meaningless ones (ket·ket, ket·operator, bra·bra,
// operator·bra) have no impl and fail to compile. `C * C` is the scalar
// product provided by num-complex.

impl Mul<Ket> for C {
    type Output = Ket;
    fn mul(self, k: Ket) -> Ket {
        Ket([self * k.0[0], self * k.0[1]])
    }
}

impl Mul<Bra> for C {
    type Output = Bra;
    fn mul(self, b: Bra) -> Bra {
        Bra([self * b.0[0], self * b.0[1]])
    }
}

impl Mul<Operator> for C {
    type Output = Operator;
    fn mul(self, a: Operator) -> Operator {
        let m = a.0;
        Operator([
            [self * m[0][0], self * m[0][1]],
            [self * m[1][0], self * m[1][1]],
        ])
    }
}

impl Mul<C> for Ket {
    type Output = Ket;
    fn mul(self, z: C) -> Ket {
        z * self
    }
}

/// Outer product.
impl Mul<Bra> for Ket {
    type Output = Operator;
    fn mul(self, b: Bra) -> Operator {
        let k = self.0;
        let b = b.0;
        Operator([[k[0] * b[0], k[0] * b[1]], [k[1] * b[0], k[1] * b[1]]])
    }
}

impl Mul<C> for Bra {
    type Output = Bra;
    fn mul(self, z: C) -> Bra {
        z * self
    }
}

/// Inner product.
impl Mul<Ket> for Bra {
    type Output = C;
    fn mul(self, k: Ket) -> C {
        self.0[0] * k.0[0] + self.0[1] * k.0[1]
    }
}

impl Mul<Operator> for Bra {
    type Output = Bra;
    fn mul(self, a: Operator) -> Bra {
        let b = self.0;
        let m = a.0;
        Bra([
            b[0] * m[0][0] + b[1] * m[1][0],
            b[0] * m[0][1] + b[1] * m[1][1],
        ])
    }
}

impl Mul<C> for Operator {
    type Output = Operator;
    fn mul(self, z: C) -> Operator {
        z * self
    }
}

impl Mul<Ket> for Operator {
    type Output = Ket;
    fn mul(self, k: Ket) -> Ket {
        let m = self.0;
        let k = k.0;
        Ket([
            m[0][0] * k[0] + m[0][1] * k[1],
            m[1][0] * k[0] + m[1][1] * k[1],
        ])
    }
}

impl Mul<Operator> for Operator {
    type Output = Operator;
    fn mul(self, rhs: Operator) -> Operator {
        let a = self.0;
        let b = rhs.0;
        let mut out = [[C::new(0.0, 0.0); 2]; 2];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                *cell = a[r][0] * b[0][c] + a[r][1] * b[1][c];
            }
        }
        Operator(out)
    }
}

macro_rules! vector_space {
    ($ty:ident) => {
        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                $ty([self.0[0] + rhs.0[0], self.0[1] + rhs.0[1]])
            }
        }

        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                $ty([self.0[0] - rhs.0[0], self.0[1] - rhs.0[1]])
            }
        }

        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty([-self.0[0], -self.0[1]])
            }
        }
    };
}

vector_space!(Ket);
vector_space!(Bra);

impl Add for Operator {
    type Output = Operator;
    fn add(self, rhs: Operator) -> Operator {
        let (a, b) = (self.0, rhs.0);
        Operator([
            [a[0][0] + b[0][0], a[0][1] + b[0][1]],
            [a[1][0] + b[1][0], a[1][1] + b[1][1]],
        ])
    }
}

impl Sub for Operator {
    type Output = Operator;
    fn sub(self, rhs: Operator) -> Operator {
        self + -rhs
    }
}

impl Neg for Operator {
    type Output = Operator;
    fn neg(self) -> Operator {
        C::new(-1.0, 0.0) * self
    }
}

impl fmt::Display for Ket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})|z+⟩ + ({})|z−⟩", self.0[0], self.0[1])
    }
}

impl fmt::Display for Bra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})⟨z+| + ({})⟨z−|", self.0[0], self.0[1])
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            m[0][0], m[0][1], m[1][0], m[1][1]
        )
    }
}
