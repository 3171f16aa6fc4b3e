use super::{leq, MarkedElement, SignedPermutation};
use crate::error::{Error, Result};
use crate::partitions::{binomial, catalan};

/// Cycle factorization of type B: `τ = τ_1 ⋯ τ_k` with commuting factors on
/// disjoint inversion-invariant supports.
///
/// Supports of the form `X ∪ -X` (non-invariant orbit pairs) come first, then
/// the invariant orbits; within each group they are ordered by least element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleFactorizationB {
    pub factors: Vec<SignedPermutation>,
    pub supports: Vec<Vec<i32>>,
    /// Whether the support is a single invariant orbit.
    pub invariant: Vec<bool>,
}

pub fn cycle_factorization_b(tau: &SignedPermutation) -> Result<CycleFactorizationB> {
    if tau.is_identity() {
        return Err(Error::Domain("the identity has no cycle factorization".into()));
    }
    let mut pairs = Vec::new();
    let mut invariant = Vec::new();
    for o in tau.orbits().into_iter().filter(|o| o.len() > 1) {
        if tau.is_invariant_orbit(o[0]) {
            invariant.push(o);
        } else if !pairs.iter().any(|y: &Vec<i32>| y.contains(&o[0])) {
            let mut y = o.clone();
            y.extend(o.iter().map(|x| -x));
            pairs.push(y);
        }
    }
    let mut out = CycleFactorizationB { factors: Vec::new(), supports: Vec::new(), invariant: Vec::new() };
    for (support, inv) in pairs.into_iter().map(|y| (y, false)).chain(invariant.into_iter().map(|z| (z, true))) {
        out.factors.push(tau.restrict(&support)?);
        out.supports.push(support);
        out.invariant.push(inv);
    }
    Ok(out)
}

/// Shape of one factor of `[ε, τ]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    /// A copy of `NC^(A)(m)`, from an orbit pair `{X, -X}` with `|X| = m`.
    A(usize),
    /// A copy of `NC^(B)(m)`, from an invariant orbit with `2m` points.
    B(usize),
}

impl FactorKind {
    /// Cardinality of the factor lattice.
    pub fn cardinality(self) -> u128 {
        match self {
            FactorKind::A(m) => catalan(m),
            FactorKind::B(m) => binomial(2 * m, m),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalFactor {
    pub support: Vec<i32>,
    pub kind: FactorKind,
}

/// Splits `[ε, τ]` for `ε ≠ τ ≤ ω` into a product of type-A lattices and at most one type-B lattice.
pub fn interval_factorize(tau: &SignedPermutation) -> Result<Vec<IntervalFactor>> {
    let omega = SignedPermutation::long_cycle(tau.rank())?;
    if !leq(tau, &omega)? {
        return Err(Error::Domain(format!("{tau} is not below the long cycle ω")));
    }
    let fac = cycle_factorization_b(tau)?;
    Ok(fac
        .supports
        .into_iter()
        .zip(fac.invariant)
        .map(|(support, inv)| {
            let m = support.len() / 2;
            let kind = if inv { FactorKind::B(m) } else { FactorKind::A(m) };
            IntervalFactor { support, kind }
        })
        .collect())
}
