//! Real scalar abstraction for the numerical kernels.
//!
//! Everything in this crate is generic over the underlying real float type;
//! complex entries are `num_complex::Complex<T>`. The crate root exports
//! `f64`-based aliases, which is what the CLI and the verification suites
//! use.

use num_complex::Complex;
use num_traits::{Float, FromPrimitive, NumAssign};
use std::fmt::{Debug, Display};
use std::iter::Sum;

/// Real floating-point scalar: `f32` or `f64`.
pub trait Scalar:
    Float + FromPrimitive + NumAssign + Sum + Debug + Display + Default + Send + Sync + 'static
{
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Complex number over the scalar `T`.
pub type C<T> = Complex<T>;

/// Convert an `f64` constant into the scalar type.
///
/// Panics only if `T` cannot represent any `f64` at all, which cannot happen
/// for the provided impls.
#[inline]
pub fn real<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("f64 constant must convert into the scalar type")
}

/// Complex constant from a `(re, im)` pair of `f64`s.
#[inline]
pub fn cplx<T: Scalar>(re: f64, im: f64) -> C<T> {
    Complex::new(real(re), real(im))
}
