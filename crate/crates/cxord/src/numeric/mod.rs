//! Scalar arithmetic tower and univariate polynomial toolkit.
//!
//! Two numeric tracks back every computation in this crate:
//!
//! * [`Rad`] — exact arithmetic in the field obtained by adjoining square
//!   roots of squarefree positive integers to the rationals. All catalog
//!   constants (rationals, `sqrt(2)/2`, `-1 - sqrt(5) + 2*sqrt(2)`, ...)
//!   live here and every sign query is decided exactly.
//! * `f64` — floating point with an explicit sign tolerance `tau`; sign
//!   queries inside the `tau`-band answer [`Sign::Indeterminate`] instead
//!   of guessing.
//!
//! The rest of the crate is generic over [`Scalar`], with the two concrete
//! instantiations aliased at the crate root.

pub mod parse;
pub mod poly;
pub mod radical;
pub mod roots;

use num_rational::BigRational;
use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

pub use poly::Polynomial;
pub use radical::Rad;
pub use roots::{IsolatedRoot, NonNegative, RootError};

/// Outcome of a sign query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
    /// Float mode only: the value is within the sign tolerance.
    Indeterminate,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Positive => Sign::Negative,
            other => other,
        }
    }

    pub fn is_zero(self) -> bool {
        matches!(self, Sign::Zero)
    }

    pub fn is_known_nonzero(self) -> bool {
        matches!(self, Sign::Negative | Sign::Positive)
    }
}

/// The scalar interface required by measures, orderings and the catalog.
///
/// `EXACT = true` promises that equality and signs are decided exactly and
/// that arithmetic is lossless; the tolerance argument of [`Scalar::sign`]
/// is ignored in that case.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn from_rational(r: &BigRational) -> Self;
    /// Lower an exact radical value into this scalar type.
    fn from_rad(r: &Rad) -> Self;

    fn is_zero(&self) -> bool;
    /// Sign with tolerance; `tol` is ignored when `EXACT`.
    fn sign(&self, tol: &Self) -> Sign;
    /// Total order used for sorting breakpoints and atoms.
    fn cmp_total(&self, other: &Self) -> Ordering;
    fn to_f64(&self) -> f64;
    fn abs(&self) -> Self;

    fn min_of(a: Self, b: Self) -> Self {
        if a.cmp_total(&b) == Ordering::Greater {
            b
        } else {
            a
        }
    }

    fn max_of(a: Self, b: Self) -> Self {
        if a.cmp_total(&b) == Ordering::Less {
            b
        } else {
            a
        }
    }

    fn half(self) -> Self {
        self / Self::from_int(2)
    }

    /// Magnitude below which a computed difference of quantities of the
    /// given scale is attributed to arithmetic rounding and treated as an
    /// exact zero. Exact scalars have no dust.
    fn equality_dust(_scale: &Self) -> Self {
        Self::zero()
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_int(n: i64) -> Self {
        n as f64
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn from_rational(r: &BigRational) -> Self {
        radical::rational_to_f64(r)
    }
    fn from_rad(r: &Rad) -> Self {
        r.to_f64()
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn sign(&self, tol: &Self) -> Sign {
        if *self == 0.0 {
            Sign::Zero
        } else if self.abs() <= *tol {
            Sign::Indeterminate
        } else if *self > 0.0 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    fn cmp_total(&self, other: &Self) -> Ordering {
        self.total_cmp(other)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn equality_dust(scale: &Self) -> Self {
        // 2^-40 relative: far above accumulated f64 roundoff for the
        // short closed-form sums used here, far below any meaningful gap
        scale * 9.094947017729282e-13
    }
}

impl Scalar for Rad {
    const EXACT: bool = true;

    fn zero() -> Self {
        Rad::zero()
    }
    fn one() -> Self {
        Rad::one()
    }
    fn from_int(n: i64) -> Self {
        Rad::from_int(n)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Rad::from_ratio(num, den)
    }
    fn from_rational(r: &BigRational) -> Self {
        Rad::from_rational(r.clone())
    }
    fn from_rad(r: &Rad) -> Self {
        r.clone()
    }

    fn is_zero(&self) -> bool {
        Rad::is_zero(self)
    }

    fn sign(&self, _tol: &Self) -> Sign {
        match self.sign_exact() {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    fn cmp_total(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).sign_exact()
    }

    fn to_f64(&self) -> f64 {
        Rad::to_f64(self)
    }

    fn abs(&self) -> Self {
        if self.sign_exact() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }
}
