//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Exact rational number used for every coefficient in the crate.
pub type Scalar = BigRational;

/// Builds `num/den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Builds an integer scalar.
pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let t = text.trim().trim_matches('"');
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| Error::Parse(format!("`{text}` is not a rational number")))?;
    let den: BigInt = den.parse().map_err(|_| Error::Parse(format!("`{text}` is not a rational number")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("`{text}` has a zero denominator")));
    }
    Ok(Scalar::new(num, den))
}

/// Small random rational with numerator in `-9..=9` and denominator in `1..=5`.
pub fn random_scalar<R: Rng + ?Sized>(rng: &mut R) -> Scalar {
    ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

/// Random rational that is never zero.
pub fn random_nonzero_scalar<R: Rng + ?Sized>(rng: &mut R) -> Scalar {
    loop {
        let s = random_scalar(rng);
        if !s.is_zero() {
            return s;
        }
    }
}

/// `base^exp` by repeated multiplication.
pub fn pow(base: &Scalar, exp: usize) -> Scalar {
    let mut acc = Scalar::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}
