//! Truncated power series, the dual-number algebra `C`, and boxed convolutions.
//!
//! A series of order `N` stores the coefficients of `z, z², ..., z^N`; there is
//! no constant term. Type-B series have coefficients in `C`.

mod boxconv;
mod dual;
mod multiplicative;
mod text;

use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::scalar::{random_scalar, Scalar};

pub use boxconv::{boxconv_a, boxconv_a_dual, boxconv_b, boxconv_b_inverse, boxconv_b_second_terms, boxed_convolution};
pub use dual::{dual_mul, DualScalar};
pub use multiplicative::{
    bridge_check_a, bridge_check_b, bridge_check_b_full_group, u_alpha_a, u_alpha_b, u_function_a, u_function_b,
    BridgeReport, BRIDGE_BOUND,
};
pub use text::{parse_series_a, parse_series_b};

/// Commutative ring with exact equality, used as a coefficient domain.
pub trait Ring: Clone + PartialEq + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> {}

impl<T> Ring for T where T: Clone + PartialEq + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T> {}

/// Truncated series `Σ_{n=1}^{N} c_n zⁿ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series<T> {
    coeffs: Vec<T>,
}

/// Series with rational coefficients.
pub type SeriesA = Series<Scalar>;
/// Series with coefficients in `C`.
pub type SeriesB = Series<DualScalar>;

impl<T: Ring> Series<T> {
    pub fn new(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain("a series needs order at least 1".into()));
        }
        Ok(Series { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `zⁿ`, one-based.
    pub fn coeff(&self, n: usize) -> &T {
        &self.coeffs[n - 1]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Drops every coefficient above `order`.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order == 0 || order > self.order() {
            return Err(Error::Domain(format!("cannot truncate order {} to {order}", self.order())));
        }
        Ok(Series { coeffs: self.coeffs[..order].to_vec() })
    }

    /// The series `z`, unit of the boxed convolution.
    pub fn delta(order: usize) -> Result<Self> {
        Self::new((1..=order).map(|n| if n == 1 { T::one() } else { T::zero() }).collect())
    }

    /// `Σ zⁿ`.
    pub fn zeta(order: usize) -> Result<Self> {
        Self::new(vec![T::one(); order])
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        same_order(self, other)?;
        Ok(Series { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect() })
    }
}

impl SeriesB {
    pub fn from_parts(first: &SeriesA, second: &SeriesA) -> Result<Self> {
        same_order(first, second)?;
        Self::new(first.coeffs.iter().zip(&second.coeffs).map(|(a, b)| DualScalar::new(a.clone(), b.clone())).collect())
    }

    /// The series of first components.
    pub fn first(&self) -> SeriesA {
        Series { coeffs: self.coeffs.iter().map(|c| c.prime.clone()).collect() }
    }

    /// The series of second components.
    pub fn second(&self) -> SeriesA {
        Series { coeffs: self.coeffs.iter().map(|c| c.double_prime.clone()).collect() }
    }
}

pub(crate) fn same_order<T, U>(f: &Series<T>, g: &Series<U>) -> Result<()> {
    if f.coeffs.len() == g.coeffs.len() {
        Ok(())
    } else {
        Err(Error::Domain(format!("series orders differ: {} and {}", f.coeffs.len(), g.coeffs.len())))
    }
}

/// Series of order `order` with small random rational coefficients.
pub fn random_series_a<R: Rng + ?Sized>(order: usize, rng: &mut R) -> Result<SeriesA> {
    Series::new((0..order).map(|_| random_scalar(rng)).collect())
}

/// Series of order `order` with small random rational coefficients in both components.
pub fn random_series_b<R: Rng + ?Sized>(order: usize, rng: &mut R) -> Result<SeriesB> {
    Series::new((0..order).map(|_| DualScalar::new(random_scalar(rng), random_scalar(rng))).collect())
}
