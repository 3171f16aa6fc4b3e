use std::collections::HashMap;

use num_traits::Zero;

use super::{interval, MarkedElement};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Finitely supported scalar function on `S_n` or `W_n`; absent keys are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFunction<G: MarkedElement> {
    rank: usize,
    values: HashMap<G, Scalar>,
}

impl<G: MarkedElement> GroupFunction<G> {
    pub fn zero(rank: usize) -> Self {
        GroupFunction { rank, values: HashMap::new() }
    }

    /// The indicator of the identity, unit of `∗_r`.
    pub fn delta(rank: usize) -> Self {
        let mut f = Self::zero(rank);
        f.values.insert(G::identity(rank), Scalar::from_integer(1.into()));
        f
    }

    /// Tabulates `f` on the given elements.
    pub fn from_fn<I, F>(rank: usize, elements: I, mut f: F) -> Result<Self>
    where
        I: IntoIterator<Item = G>,
        F: FnMut(&G) -> Scalar,
    {
        let mut out = Self::zero(rank);
        for g in elements {
            let v = f(&g);
            out.set(g, v)?;
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, g: &G) -> Scalar {
        self.values.get(g).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn set(&mut self, g: G, v: Scalar) -> Result<()> {
        if g.rank() != self.rank {
            return Err(Error::Domain(format!("element of rank {} in a function on rank {}", g.rank(), self.rank)));
        }
        if v.is_zero() {
            self.values.remove(&g);
        } else {
            self.values.insert(g, v);
        }
        Ok(())
    }

    /// Non-zero entries.
    pub fn iter(&self) -> impl Iterator<Item = (&G, &Scalar)> {
        self.values.iter()
    }

    pub fn support_len(&self) -> usize {
        self.values.len()
    }
}

fn same_group<G: MarkedElement>(u: &GroupFunction<G>, v: &GroupFunction<G>) -> Result<()> {
    if u.rank == v.rank {
        Ok(())
    } else {
        Err(Error::Domain(format!("functions on groups of rank {} and {}", u.rank, v.rank)))
    }
}

/// `(u ∗_r v)(a) = Σ u(b)·v(c)` over all factorizations `a = bc` with `|b| + |c| = |a|`.
pub fn restricted_convolution<G: MarkedElement>(
    u: &GroupFunction<G>,
    v: &GroupFunction<G>,
) -> Result<GroupFunction<G>> {
    same_group(u, v)?;
    let mut acc: HashMap<G, Scalar> = HashMap::new();
    for (b, ub) in u.iter() {
        let lb = b.word_length();
        for (c, vc) in v.iter() {
            let a = b.compose(c)?;
            if a.word_length() == lb + c.word_length() {
                *acc.entry(a).or_insert_with(Scalar::zero) += ub * vc;
            }
        }
    }
    let mut out = GroupFunction::zero(u.rank);
    for (a, x) in acc {
        out.set(a, x)?;
    }
    Ok(out)
}

/// `(u ∗_r v)(a) = Σ_{b ∈ [e, a]} u(b)·v(b⁻¹a)`, evaluated at a single point.
pub fn convolve_at<G: MarkedElement>(u: &GroupFunction<G>, v: &GroupFunction<G>, a: &G) -> Result<Scalar> {
    same_group(u, v)?;
    let mut acc = Scalar::zero();
    for b in interval(a) {
        let ub = u.get(&b);
        if !ub.is_zero() {
            acc += ub * v.get(&b.inverse().compose(a)?);
        }
    }
    Ok(acc)
}
