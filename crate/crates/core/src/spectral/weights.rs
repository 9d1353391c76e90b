use crate::error::{Error, Result};
use crate::scalar::{lit, powr, Scalar};

/// Nonnegative vertex weights of unit alpha-norm.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector<T = f64> {
    alpha: T,
    values: Vec<T>,
}

/// Tolerance on `sum w_i^alpha = 1`.
pub(crate) fn norm_tolerance<T: Scalar>() -> T {
    lit::<T>(1e-12).max(T::epsilon() * lit(64.0))
}

pub(crate) fn alpha_mass<T: Scalar>(alpha: T, values: &[T]) -> T {
    values.iter().map(|&v| powr(v, alpha)).sum()
}

impl<T: Scalar> WeightVector<T> {
    /// Wrap weights that already have unit alpha-norm.
    pub fn new(alpha: T, values: Vec<T>) -> Result<Self> {
        check_alpha(alpha)?;
        check_entries(&values)?;
        let mass = alpha_mass(alpha, &values);
        if (mass - T::one()).abs() > norm_tolerance::<T>() {
            return Err(Error::BadParams(format!(
                "weights have sum w^alpha = {mass}, expected 1"
            )));
        }
        Ok(WeightVector { alpha, values })
    }

    /// Scale nonnegative, not-all-zero weights onto the unit alpha-sphere.
    pub fn normalized(alpha: T, mut values: Vec<T>) -> Result<Self> {
        check_alpha(alpha)?;
        check_entries(&values)?;
        let mass = alpha_mass(alpha, &values);
        if mass <= T::zero() {
            return Err(Error::BadParams("cannot normalize the zero vector".into()));
        }
        let scale = powr(mass, -T::one() / alpha);
        for v in &mut values {
            *v = *v * scale;
        }
        Ok(WeightVector { alpha, values })
    }

    pub fn uniform(alpha: T, n: usize) -> Result<Self> {
        WeightVector::normalized(alpha, vec![T::one(); n])
    }

    pub(crate) fn from_parts_unchecked(alpha: T, values: Vec<T>) -> Self {
        WeightVector { alpha, values }
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `sum w_i^alpha`, equal to one up to rounding.
    pub fn alpha_mass(&self) -> T {
        alpha_mass(self.alpha, &self.values)
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }
}

pub(crate) fn check_alpha<T: Scalar>(alpha: T) -> Result<()> {
    if !(alpha >= T::one()) || !alpha.is_finite() {
        return Err(Error::BadAlpha(alpha.to_f64().unwrap_or(f64::NAN)));
    }
    Ok(())
}

fn check_entries<T: Scalar>(values: &[T]) -> Result<()> {
    if values.iter().any(|v| !(*v >= T::zero()) || !v.is_finite()) {
        return Err(Error::BadParams("weights must be finite and nonnegative".into()));
    }
    Ok(())
}
