use num_traits::{One, Zero};

use super::{same_order, DualScalar, Ring, Series, SeriesA, SeriesB};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_nca, enumerate_ncb, zero_block, NcPartitionB, NonCrossing, Side};
use crate::scalar::Scalar;

fn block_product<T: Ring>(coeffs: &[T], sizes: impl IntoIterator<Item = usize>) -> T {
    sizes.into_iter().fold(T::one(), |acc, s| acc * coeffs[s - 1].clone())
}

/// `γ_m = Σ_{p ∈ NC^(A)(m)} Π_{F ∈ p} α_{|F|} Π_{E ∈ Kr(p)} β_{|E|}` for `m = 1..N`, over any commutative ring.
pub fn boxed_convolution<T: Ring>(f: &[T], g: &[T]) -> Result<Vec<T>> {
    if f.len() != g.len() {
        return Err(Error::Domain(format!("series orders differ: {} and {}", f.len(), g.len())));
    }
    (1..=f.len())
        .map(|m| {
            let mut acc = T::zero();
            for p in enumerate_nca(m)? {
                let kr = p.kreweras(Side::Right);
                acc = acc + block_product(f, p.block_sizes()) * block_product(g, kr.block_sizes());
            }
            Ok(acc)
        })
        .collect()
}

/// Boxed convolution of type A.
pub fn boxconv_a(f: &SeriesA, g: &SeriesA) -> Result<SeriesA> {
    same_order(f, g)?;
    Series::new(boxed_convolution(f.coeffs(), g.coeffs())?)
}

/// The type-A boxed convolution with coefficients multiplied in `C`.
pub fn boxconv_a_dual(f: &SeriesB, g: &SeriesB) -> Result<SeriesB> {
    same_order(f, g)?;
    Series::new(boxed_convolution(f.coeffs(), g.coeffs())?)
}

/// Contribution of one `π ∈ NC^(B)(m)` to the second component of `f ⍟^(B) g`.
fn second_term(f: &[DualScalar], g: &[DualScalar], pi: &NcPartitionB) -> Scalar {
    let kr = pi.kreweras(Side::Right);
    let mut acc = Scalar::one();
    for x in pi.block_pairs() {
        acc *= &f[x.len() - 1].prime;
    }
    for y in kr.block_pairs() {
        acc *= &g[y.len() - 1].prime;
    }
    match (zero_block(pi), zero_block(&kr)) {
        (Some(z), _) => acc * &f[z.len() / 2 - 1].double_prime,
        (None, Some(z)) => acc * &g[z.len() / 2 - 1].double_prime,
        (None, None) => unreachable!("exactly one of π and Kr(π) has a zero-block"),
    }
}

/// Boxed convolution of type B by direct summation over `NC^(A)(m)` and `NC^(B)(m)`.
///
/// First components use the type-A sum. Second components sum over `π ∈ NC^(B)(m)`:
/// a zero-block of `π` contributes an `α″`, a zero-block of `Kr(π)` contributes a `β″`,
/// and every other pair of blocks contributes an `α′` or `β′`.
pub fn boxconv_b(f: &SeriesB, g: &SeriesB) -> Result<SeriesB> {
    same_order(f, g)?;
    let first = boxed_convolution(f.first().coeffs(), g.first().coeffs())?;
    let mut out = Vec::with_capacity(f.order());
    for (m, prime) in (1..=f.order()).zip(first) {
        let mut second = Scalar::zero();
        for pi in enumerate_ncb(m)? {
            second += second_term(f.coeffs(), g.coeffs(), &pi);
        }
        out.push(DualScalar::new(prime, second));
    }
    Series::new(out)
}

/// The individual contributions of `NC^(B)(m)` to the second component of `(f ⍟^(B) g)_m`.
pub fn boxconv_b_second_terms(f: &SeriesB, g: &SeriesB, m: usize) -> Result<Vec<(NcPartitionB, Scalar)>> {
    same_order(f, g)?;
    if m == 0 || m > f.order() {
        return Err(Error::Domain(format!("order {m} is outside 1..={}", f.order())));
    }
    Ok(enumerate_ncb(m)?
        .map(|pi| {
            let t = second_term(f.coeffs(), g.coeffs(), &pi);
            (pi, t)
        })
        .collect())
}

/// The series `g` with `f ⍟^(B) g = Δ′`, solved one coefficient at a time.
///
/// The only term of `(f ⍟ g)_m` involving `β_m` is `α_1^m β_m`, so `f` is
/// invertible exactly when `α′_1 ≠ 0`.
pub fn boxconv_b_inverse(f: &SeriesB) -> Result<SeriesB> {
    let lead = f.coeff(1).inverse()?;
    let mut g: Vec<DualScalar> = vec![DualScalar::zero(); f.order()];
    g[0] = lead.clone();
    for m in 2..=f.order() {
        let fm = Series::new(f.coeffs()[..m].to_vec())?;
        let gm = Series::new(g[..m].to_vec())?;
        let partial = boxconv_b(&fm, &gm)?.coeff(m).clone();
        g[m - 1] = -partial * lead.pow(m);
    }
    Series::new(g)
}
