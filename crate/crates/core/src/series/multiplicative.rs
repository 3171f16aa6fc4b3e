use num_traits::One;

use super::{boxconv_a, boxconv_b, DualScalar, SeriesA, SeriesB};
use crate::cayley::{convolve_at, interval, GroupFunction, MarkedElement, Permutation, SignedPermutation};
use crate::error::{Error, Result};
use crate::scalar::{pow, Scalar};

/// Largest rank accepted by the bridge checks; `|W_5| = 3840`.
pub const BRIDGE_BOUND: usize = 5;

/// `u_α(t) = Π_m α_m^{k_m(t)}` where `k_m(t)` counts orbits of size `m`.
pub fn u_alpha_a(alpha: &[Scalar], t: &Permutation) -> Result<Scalar> {
    if alpha.len() < t.rank() {
        return Err(Error::Domain(format!("need {} coefficients, got {}", t.rank(), alpha.len())));
    }
    let census = t.census();
    Ok(census.k.iter().enumerate().fold(Scalar::one(), |acc, (m, &k)| acc * pow(&alpha[m], k)))
}

/// `u_α(τ) = Π_m (α′_m)^{k_m(τ)} (α″_m)^{l_m(τ)}`.
pub fn u_alpha_b(alpha: &[DualScalar], tau: &SignedPermutation) -> Result<Scalar> {
    if alpha.len() < tau.rank() {
        return Err(Error::Domain(format!("need {} coefficients, got {}", tau.rank(), alpha.len())));
    }
    let census = tau.census();
    let mut acc = Scalar::one();
    for (m, a) in alpha.iter().take(tau.rank()).enumerate() {
        acc *= pow(&a.prime, census.k[m]) * pow(&a.double_prime, census.l[m]);
    }
    Ok(acc)
}

/// `u_α` tabulated on all of `S_n`.
pub fn u_function_a(alpha: &[Scalar], n: usize) -> Result<GroupFunction<Permutation>> {
    let values = Permutation::all_elements(n)
        .into_iter()
        .map(|t| u_alpha_a(alpha, &t).map(|v| (t, v)))
        .collect::<Result<Vec<_>>>()?;
    let mut f = GroupFunction::zero(n);
    for (t, v) in values {
        f.set(t, v)?;
    }
    Ok(f)
}

/// `u_α` tabulated on all of `W_n`.
pub fn u_function_b(alpha: &[DualScalar], n: usize) -> Result<GroupFunction<SignedPermutation>> {
    let values = SignedPermutation::all_elements(n)
        .into_iter()
        .map(|t| u_alpha_b(alpha, &t).map(|v| (t, v)))
        .collect::<Result<Vec<_>>>()?;
    let mut f = GroupFunction::zero(n);
    for (t, v) in values {
        f.set(t, v)?;
    }
    Ok(f)
}

/// Outcome of comparing `u_α ∗_r u_β` with `u_γ` on a set of group elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeReport<G> {
    pub checked: usize,
    /// First element where the two sides differ, with both values.
    pub mismatch: Option<(G, Scalar, Scalar)>,
}

impl<G> BridgeReport<G> {
    pub fn holds(&self) -> bool {
        self.mismatch.is_none()
    }
}

fn check_rank(n: usize) -> Result<()> {
    if n == 0 || n > BRIDGE_BOUND {
        Err(Error::Domain(format!("rank {n} is outside 1..={BRIDGE_BOUND}")))
    } else {
        Ok(())
    }
}

fn compare<G: MarkedElement>(
    u: &GroupFunction<G>,
    v: &GroupFunction<G>,
    w: &GroupFunction<G>,
    points: Vec<G>,
) -> Result<BridgeReport<G>> {
    let checked = points.len();
    for tau in points {
        let lhs = convolve_at(u, v, &tau)?;
        let rhs = w.get(&tau);
        if lhs != rhs {
            return Ok(BridgeReport { checked, mismatch: Some((tau, lhs, rhs)) });
        }
    }
    Ok(BridgeReport { checked, mismatch: None })
}

/// Compares `u_α ∗_r u_β` with `u_γ`, `γ = α ⍟^(A) β`, on all of `S_n`.
pub fn bridge_check_a(alpha: &SeriesA, beta: &SeriesA, n: usize) -> Result<BridgeReport<Permutation>> {
    check_rank(n)?;
    let (a, b) = (alpha.truncate(n)?, beta.truncate(n)?);
    let gamma = boxconv_a(&a, &b)?;
    let u = u_function_a(a.coeffs(), n)?;
    let v = u_function_a(b.coeffs(), n)?;
    let w = u_function_a(gamma.coeffs(), n)?;
    compare(&u, &v, &w, Permutation::all_elements(n))
}

/// Compares `u_α ∗_r u_β` with `u_γ`, `γ = α ⍟^(B) β`, on the interval `[ε, ω]` of `W_n`.
pub fn bridge_check_b(alpha: &SeriesB, beta: &SeriesB, n: usize) -> Result<BridgeReport<SignedPermutation>> {
    check_rank(n)?;
    let (a, b) = (alpha.truncate(n)?, beta.truncate(n)?);
    let gamma = boxconv_b(&a, &b)?;
    let u = u_function_b(a.coeffs(), n)?;
    let v = u_function_b(b.coeffs(), n)?;
    let w = u_function_b(gamma.coeffs(), n)?;
    compare(&u, &v, &w, interval(&SignedPermutation::long_cycle(n)?))
}

/// Same comparison on every element of `W_n`; expected to fail off `[ε, ω]`.
pub fn bridge_check_b_full_group(alpha: &SeriesB, beta: &SeriesB, n: usize) -> Result<BridgeReport<SignedPermutation>> {
    check_rank(n)?;
    let (a, b) = (alpha.truncate(n)?, beta.truncate(n)?);
    let gamma = boxconv_b(&a, &b)?;
    let u = u_function_b(a.coeffs(), n)?;
    let v = u_function_b(b.coeffs(), n)?;
    let w = u_function_b(gamma.coeffs(), n)?;
    compare(&u, &v, &w, SignedPermutation::all_elements(n))
}
