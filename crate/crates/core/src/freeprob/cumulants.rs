use num_traits::{One, Zero};

use super::{LinkingElement, Pair, Slot, SpaceA, SpaceB};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_nca, NonCrossing};
use crate::scalar::Scalar;
use crate::series::{DualScalar, Ring, Series, SeriesB};

/// Cumulants of every sub-tuple of an `n`-tuple, indexed by bit mask.
///
/// `moment(idx)` returns the moment of the sub-tuple at positions `idx`; the
/// cumulant of a sub-tuple is its moment minus the block products over every
/// other non-crossing partition of it.
fn cumulant_table<T: Ring>(n: usize, mut moment: impl FnMut(&[usize]) -> Result<T>) -> Result<Vec<T>> {
    if n == 0 {
        return Err(Error::Domain("cumulants need at least one argument".into()));
    }
    if n > 16 {
        return Err(Error::Domain(format!("{n} arguments is beyond the supported 16")));
    }
    let mut proper: Vec<Vec<Vec<Vec<usize>>>> = vec![Vec::new()];
    for k in 1..=n {
        proper.push(enumerate_nca(k)?.filter(|p| p.blno() > 1).map(|p| p.position_blocks().to_vec()).collect());
    }
    let mut masks: Vec<usize> = (1..1usize << n).collect();
    masks.sort_by_key(|m| m.count_ones());
    let mut table = vec![T::zero(); 1 << n];
    for mask in masks {
        let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let mut acc = moment(&idx)?;
        for p in &proper[idx.len()] {
            let term = p.iter().fold(T::one(), |t, block| {
                let sub = block.iter().fold(0usize, |m, &j| m | 1 << idx[j]);
                t * table[sub].clone()
            });
            acc = acc - term;
        }
        table[mask] = acc;
    }
    Ok(table)
}

fn product_of<S: SpaceA>(space: &S, args: &[&S::Elem]) -> S::Elem {
    args.iter().fold(space.unit(), |acc, a| space.mul(&acc, a))
}

/// Free cumulant `κ_n(a_1, ..., a_n)`.
pub fn cumulant_a<S: SpaceA>(space: &S, args: &[S::Elem]) -> Result<Scalar> {
    let table = cumulant_table(args.len(), |idx| {
        let sub: Vec<&S::Elem> = idx.iter().map(|&i| &args[i]).collect();
        space.phi(&product_of(space, &sub))
    })?;
    Ok(table.last().cloned().unwrap())
}

fn slot_product<S: SpaceB>(space: &S, slots: &[&Slot<S::Elem, S::Vector>]) -> Result<Slot<S::Elem, S::Vector>> {
    let mut acc: Slot<S::Elem, S::Vector> = Slot::Alg(space.unit());
    for s in slots {
        acc = match (acc, s) {
            (Slot::Alg(a), Slot::Alg(b)) => Slot::Alg(space.mul(&a, b)),
            (Slot::Alg(a), Slot::Vector(x)) => Slot::Vector(space.act(&a, x, &space.unit())),
            (Slot::Vector(x), Slot::Alg(b)) => Slot::Vector(space.act(&space.unit(), &x, b)),
            (Slot::Vector(_), Slot::Vector(_)) => {
                return Err(Error::Domain("at most one argument may be a vector".into()))
            }
        };
    }
    Ok(acc)
}

fn slot_moment<S: SpaceB>(space: &S, s: &Slot<S::Elem, S::Vector>) -> Result<Scalar> {
    match s {
        Slot::Alg(a) => space.phi(a),
        Slot::Vector(x) => space.f(x),
    }
}

/// Cumulant with at most one vector argument: `κ_n` when all slots are algebra
/// elements, `κ′_n` when one slot holds a vector. The vector's block uses `f`.
pub fn mixed_cumulant<S: SpaceB>(space: &S, slots: &[Slot<S::Elem, S::Vector>]) -> Result<Scalar> {
    if slots.iter().filter(|s| matches!(s, Slot::Vector(_))).count() > 1 {
        return Err(Error::Domain("at most one argument may be a vector".into()));
    }
    let table = cumulant_table(slots.len(), |idx| {
        let sub: Vec<&Slot<S::Elem, S::Vector>> = idx.iter().map(|&i| &slots[i]).collect();
        slot_moment(space, &slot_product(space, &sub)?)
    })?;
    Ok(table.last().cloned().unwrap())
}

/// `κ′_n(a_1, ..., a_{m-1}, ξ, a_{m+1}, ..., a_n)` with the vector at one-based position `m`.
///
/// `args` holds the `n - 1` algebra arguments in order.
pub fn cumulant_a_prime<S: SpaceB>(space: &S, m: usize, args: &[S::Elem], xi: &S::Vector) -> Result<Scalar> {
    let n = args.len() + 1;
    if m == 0 || m > n {
        return Err(Error::Domain(format!("vector position {m} is outside 1..={n}")));
    }
    let mut slots: Vec<Slot<S::Elem, S::Vector>> = args.iter().cloned().map(Slot::Alg).collect();
    slots.insert(m - 1, Slot::Vector(xi.clone()));
    mixed_cumulant(space, &slots)
}

/// `(a_1, ξ_1) ⋯ (a_n, ξ_n) = (a_1⋯a_n, Σ_m a_1⋯a_{m-1} ξ_m a_{m+1}⋯a_n)`.
pub fn linking_product<S: SpaceB>(space: &S, pairs: &[Pair<S>]) -> Pair<S> {
    pairs.iter().fold(LinkingElement::new(space.unit(), space.zero_vector()), |acc, p| {
        let xi = space.vadd(&space.act(&acc.a, &p.xi, &space.unit()), &space.act(&space.unit(), &acc.xi, &p.a));
        LinkingElement::new(space.mul(&acc.a, &p.a), xi)
    })
}

/// `E(a, ξ) = (φ(a), f(ξ))`.
pub fn expectation<S: SpaceB>(space: &S, pair: &Pair<S>) -> Result<DualScalar> {
    Ok(DualScalar::new(space.phi(&pair.a)?, space.f(&pair.xi)?))
}

fn cumulant_b_table<S: SpaceB>(space: &S, pairs: &[Pair<S>]) -> Result<Vec<DualScalar>> {
    cumulant_table(pairs.len(), |idx| {
        let sub: Vec<Pair<S>> = idx.iter().map(|&i| pairs[i].clone()).collect();
        expectation(space, &linking_product(space, &sub))
    })
}

/// Type-B cumulant, by inverting the moment formula in the dual numbers.
pub fn cumulant_b<S: SpaceB>(space: &S, pairs: &[Pair<S>]) -> Result<DualScalar> {
    Ok(cumulant_b_table(space, pairs)?.last().cloned().unwrap())
}

/// Type-B cumulant assembled as `(κ_n(a_1..a_n), Σ_m κ′_n(a_1, .., ξ_m, .., a_n))`.
pub fn cumulant_b_componentwise<S: SpaceB>(space: &S, pairs: &[Pair<S>]) -> Result<DualScalar> {
    let algebra: Vec<S::Elem> = pairs.iter().map(|p| p.a.clone()).collect();
    let first = cumulant_a(space, &algebra)?;
    let mut second = Scalar::zero();
    for (m, pair) in pairs.iter().enumerate() {
        let mut rest = algebra.clone();
        rest.remove(m);
        second += cumulant_a_prime(space, m + 1, &rest, &pair.xi)?;
    }
    Ok(DualScalar::new(first, second))
}

/// `m_n = Σ_{p ∈ NC(n)} Π_{F ∈ p} κ_{|F|}` for `n = 1..N`.
pub fn moments_from_cumulants_a(kappa: &[Scalar]) -> Result<Vec<Scalar>> {
    (1..=kappa.len())
        .map(|n| {
            Ok(enumerate_nca(n)?
                .map(|p| p.block_sizes().iter().fold(Scalar::one(), |acc, &s| acc * &kappa[s - 1]))
                .fold(Scalar::zero(), |acc, t| acc + t))
        })
        .collect()
}

/// Inverse of [`moments_from_cumulants_a`] for the moments of a single element.
pub fn cumulants_from_moments_a(moments: &[Scalar]) -> Result<Vec<Scalar>> {
    let mut kappa: Vec<Scalar> = Vec::with_capacity(moments.len());
    for n in 1..=moments.len() {
        let mut acc = moments[n - 1].clone();
        for p in enumerate_nca(n)?.filter(|p| p.blno() > 1) {
            acc -= p.block_sizes().iter().fold(Scalar::one(), |t, &s| t * &kappa[s - 1]);
        }
        kappa.push(acc);
    }
    Ok(kappa)
}

/// Moment series `Σ E((a, ξ)ⁿ) zⁿ` up to order `order`.
pub fn moment_series_b<S: SpaceB>(space: &S, pair: &Pair<S>, order: usize) -> Result<SeriesB> {
    let mut power = LinkingElement::new(space.unit(), space.zero_vector());
    let mut coeffs = Vec::with_capacity(order);
    for _ in 0..order {
        power = linking_product(space, &[power, pair.clone()]);
        coeffs.push(expectation(space, &power)?);
    }
    Series::new(coeffs)
}

/// R-transform `Σ κ^(B)_n((a, ξ), ..., (a, ξ)) zⁿ` up to order `order`.
pub fn r_transform_b<S: SpaceB>(space: &S, pair: &Pair<S>, order: usize) -> Result<SeriesB> {
    let copies = vec![pair.clone(); order];
    let table = cumulant_b_table(space, &copies)?;
    Series::new((1..=order).map(|k| table[(1 << k) - 1].clone()).collect())
}
