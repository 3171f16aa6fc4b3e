use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use num_traits::{One, Zero};

/// Element `(α′, α″)` of the algebra `C = ℚ[x]/(x²)` with
/// `(α′, α″)(β′, β″) = (α′β′, α′β″ + α″β′)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualScalar {
    pub prime: Scalar,
    pub double_prime: Scalar,
}

impl DualScalar {
    pub fn new(prime: Scalar, double_prime: Scalar) -> Self {
        DualScalar { prime, double_prime }
    }

    /// `(v, 0)`.
    pub fn real(v: Scalar) -> Self {
        DualScalar { prime: v, double_prime: Scalar::zero() }
    }

    /// `(a, b)⁻¹ = (1/a, -b/a²)`, defined when `a ≠ 0`.
    pub fn inverse(&self) -> Result<Self> {
        if self.prime.is_zero() {
            return Err(Error::NotInvertible(format!("{self} has zero first component")));
        }
        let inv = self.prime.recip();
        let dp = -(&self.double_prime * &inv * &inv);
        Ok(DualScalar { prime: inv, double_prime: dp })
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = DualScalar::one();
        for _ in 0..exp {
            acc = dual_mul(&acc, self);
        }
        acc
    }
}

/// The product of `C`.
pub fn dual_mul(x: &DualScalar, y: &DualScalar) -> DualScalar {
    DualScalar { prime: &x.prime * &y.prime, double_prime: &x.prime * &y.double_prime + &x.double_prime * &y.prime }
}

impl Add for DualScalar {
    type Output = DualScalar;
    fn add(self, rhs: DualScalar) -> DualScalar {
        DualScalar { prime: self.prime + rhs.prime, double_prime: self.double_prime + rhs.double_prime }
    }
}

impl Sub for DualScalar {
    type Output = DualScalar;
    fn sub(self, rhs: DualScalar) -> DualScalar {
        DualScalar { prime: self.prime - rhs.prime, double_prime: self.double_prime - rhs.double_prime }
    }
}

impl Neg for DualScalar {
    type Output = DualScalar;
    fn neg(self) -> DualScalar {
        DualScalar { prime: -self.prime, double_prime: -self.double_prime }
    }
}

impl Mul for DualScalar {
    type Output = DualScalar;
    fn mul(self, rhs: DualScalar) -> DualScalar {
        dual_mul(&self, &rhs)
    }
}

impl Zero for DualScalar {
    fn zero() -> Self {
        DualScalar::real(Scalar::zero())
    }
    fn is_zero(&self) -> bool {
        self.prime.is_zero() && self.double_prime.is_zero()
    }
}

impl One for DualScalar {
    fn one() -> Self {
        DualScalar::real(Scalar::one())
    }
}

impl fmt::Display for DualScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.prime, self.double_prime)
    }
}
