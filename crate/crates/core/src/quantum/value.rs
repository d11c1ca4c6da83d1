use std::fmt;

use thiserror::Error;

use super::{Bra, Dagger, Ket, Operator, C};

/// The four sorts of the calculational language.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sort {
    Scalar,
    Ket,
    Bra,
    Operator,
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sort::Scalar => "C",
            Sort::Ket => "Ket",
            Sort::Bra => "Bra",
            Sort::Operator => "Operator",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("nonsense product: {left} <> {right}")]
pub struct NonsenseProduct {
    pub left: Sort,
    pub right: Sort,
}

/// A value of any sort, for callers that only know sorts at run time
/// (interpreters, generated test cases).
///
/// Statically typed code should multiply [`Ket`], [`Bra`], [`Operator`] and
/// [`C`] directly, where meaningless products are compile errors:
///
/// ```
/// use sglab_core::quantum::{dagger, sz, zm, zp, C, Value};
/// let bracket: C = dagger(&zp()) * sz() * zp();
/// assert_eq!(bracket, C::new(1.0, 0.0));
/// let projector = zm() * dagger(&zm());
/// assert_eq!(projector * zp(), C::new(0.0, 0.0) * zp());
///
/// let bad = Value::from(zp()).dirac(Value::from(zp()));
/// assert_eq!(bad.unwrap_err().to_string(), "nonsense product: Ket <> Ket");
/// ```
///
/// ```compile_fail
/// use sglab_core::quantum::{xp, yp};
/// let _ = xp() * yp(); // ket · ket
/// ```
///
/// ```compile_fail
/// use sglab_core::quantum::{sx, xp};
/// let _ = xp() * sx(); // ket · operator
/// ```
///
/// ```compile_fail
/// use sglab_core::quantum::{dagger, xp, yp};
/// let _ = dagger(&xp()) * dagger(&yp()); // bra · bra
/// ```
///
/// ```compile_fail
/// use sglab_core::quantum::{dagger, sx, yp};
/// let _ = sx() * dagger(&yp()); // operator · bra
/// ```
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Value {
    Scalar(C),
    Ket(Ket),
    Bra(Bra),
    Operator(Operator),
}

impl Value {
    pub fn sort(&self) -> Sort {
        match self {
            Value::Scalar(_) => Sort::Scalar,
            Value::Ket(_) => Sort::Ket,
            Value::Bra(_) => Sort::Bra,
            Value::Operator(_) => Sort::Operator,
        }
    }

    /// The Dirac product, dispatched on the sorts of both operands.
    pub fn dirac(self, rhs: Value) -> Result<Value, NonsenseProduct> {
        use Value::*;
        Ok(match (self, rhs) {
            (Scalar(a), Scalar(b)) => Scalar(a * b),
            (Scalar(a), Ket(b)) => Ket(a * b),
            (Scalar(a), Bra(b)) => Bra(a * b),
            (Scalar(a), Operator(b)) => Operator(a * b),
            (Ket(a), Scalar(b)) => Ket(a * b),
            (Ket(a), Bra(b)) => Operator(a * b),
            (Bra(a), Scalar(b)) => Bra(a * b),
            (Bra(a), Ket(b)) => Scalar(a * b),
            (Bra(a), Operator(b)) => Bra(a * b),
            (Operator(a), Scalar(b)) => Operator(a * b),
            (Operator(a), Ket(b)) => Ket(a * b),
            (Operator(a), Operator(b)) => Operator(a * b),
            (l, r) => {
                return Err(NonsenseProduct {
                    left: l.sort(),
                    right: r.sort(),
                })
            }
        })
    }

    pub fn dagger(&self) -> Value {
        match self {
            Value::Scalar(z) => Value::Scalar(z.dagger()),
            Value::Ket(k) => Value::Bra(k.dagger()),
            Value::Bra(b) => Value::Ket(b.dagger()),
            Value::Operator(a) => Value::Operator(a.dagger()),
        }
    }

    /// Component-wise distance; `None` when the sorts differ.
    pub fn max_abs_diff(&self, other: &Value) -> Option<f64> {
        match (self, other) {
            (Value::Scalar(a), Value::Scalar(b)) => Some((a - b).norm()),
            (Value::Ket(a), Value::Ket(b)) => Some(a.max_abs_diff(b)),
            (Value::Bra(a), Value::Bra(b)) => Some(a.max_abs_diff(b)),
            (Value::Operator(a), Value::Operator(b)) => Some(a.max_abs_diff(b)),
            _ => None,
        }
    }
}

impl From<C> for Value {
    fn from(z: C) -> Self {
        Value::Scalar(z)
    }
}

impl From<Ket> for Value {
    fn from(k: Ket) -> Self {
        Value::Ket(k)
    }
}

impl From<Bra> for Value {
    fn from(b: Bra) -> Self {
        Value::Bra(b)
    }
}

impl From<Operator> for Value {
    fn from(a: Operator) -> Self {
        Value::Operator(a)
    }
}
