use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating point type the numerical code is generic over (`f32` or `f64`).
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// Smallest magnitude fed into `ln` when a power has a negative exponent.
    const POW_FLOOR: f64;
}

impl Scalar for f64 {
    const POW_FLOOR: f64 = 1e-300;
}

impl Scalar for f32 {
    const POW_FLOOR: f64 = 1e-37;
}

#[inline]
pub(crate) fn lit<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("literal representable in scalar type")
}

#[inline]
pub(crate) fn from_usize<T: Scalar>(x: usize) -> T {
    T::from_usize(x).expect("integer representable in scalar type")
}

/// `x^p` for `x >= 0`. Zero stays zero for positive exponents; for negative
/// exponents the base is clamped away from zero.
#[inline]
pub(crate) fn powr<T: Scalar>(x: T, p: T) -> T {
    if p == T::zero() {
        return T::one();
    }
    if x <= T::zero() {
        if p > T::zero() {
            return T::zero();
        }
        return (p * lit::<T>(T::POW_FLOOR).ln()).exp();
    }
    if p == T::one() {
        return x;
    }
    let floor = lit::<T>(T::POW_FLOOR);
    let base = if p < T::zero() && x < floor { floor } else { x };
    base.powf(p)
}

/// `n!` as a scalar.
pub(crate) fn factorial<T: Scalar>(n: usize) -> T {
    (1..=n).fold(T::one(), |acc, i| acc * from_usize::<T>(i))
}

/// Binomial coefficient with exact integer arithmetic.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
