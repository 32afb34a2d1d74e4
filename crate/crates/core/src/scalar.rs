//! Real scalar abstraction shared by every module.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point type the numerics are generic over: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Sum + Debug + Display + LowerExp + Default + Send + Sync + 'static
{
    /// Converts an `f64` literal into this type.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    /// Smallest off-diagonal Frobenius norm the eigensolver can reasonably
    /// drive to, relative to the matrix norm.
    fn jacobi_threshold() -> Self;
}

impl Real for f32 {
    fn jacobi_threshold() -> Self {
        4.0 * f32::EPSILON
    }
}

impl Real for f64 {
    fn jacobi_threshold() -> Self {
        1e-13
    }
}

/// Complex scalar over a [`Real`].
pub type Scalar<T> = Complex<T>;

#[cfg(test)]
pub(crate) fn c<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::lit(re), T::lit(im))
}

pub(crate) fn is_finite<T: Real>(z: Complex<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}
