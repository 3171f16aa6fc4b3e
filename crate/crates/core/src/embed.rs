//! Order isomorphisms between non-crossing partition lattices and intervals in
//! `S_n` and `W_n`: each block `{a_1 < ... < a_k}` becomes the cycle `(a_1, ..., a_k)`.

use crate::cayley::{leq, MarkedElement, Permutation, SignedPermutation};
use crate::error::{Error, Result};
use crate::partitions::{NcPartitionA, NcPartitionB, NonCrossing};

/// `c = (1,...,n)` in `S_n`, `ω = (1,...,n,-1,...,-n)` and `γ = (1,...,n)(-1,...,-n)` in `W_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinguishedElements {
    pub n: usize,
    pub c: Permutation,
    pub omega: SignedPermutation,
    pub gamma: SignedPermutation,
}

impl DistinguishedElements {
    pub fn new(n: usize) -> Result<Self> {
        Ok(DistinguishedElements {
            n,
            c: Permutation::long_cycle(n)?,
            omega: SignedPermutation::long_cycle(n)?,
            gamma: SignedPermutation::paired_long_cycle(n)?,
        })
    }
}

pub fn iota_a(p: &NcPartitionA) -> Permutation {
    let cycles: Vec<Vec<usize>> = p.blocks().into_iter().map(|b| b.into_iter().map(|x| x as usize).collect()).collect();
    Permutation::from_cycles(p.n(), &cycles).expect("blocks form a partition")
}

/// Blocks are read in the order `1 < ... < n < -1 < ... < -n`.
pub fn iota_b(pi: &NcPartitionB) -> SignedPermutation {
    SignedPermutation::from_cycles(pi.n(), &pi.blocks()).expect("inversion-invariant partition")
}

/// `ι(ι_o(p))` where `ι_o(p) = {F_1, ..., F_k, -F_1, ..., -F_k}`.
pub fn iota_gamma(p: &NcPartitionA) -> SignedPermutation {
    let mut cycles = p.blocks();
    cycles.extend(p.blocks().into_iter().map(|b| b.into_iter().map(|x| -x).collect::<Vec<_>>()));
    SignedPermutation::from_cycles(p.n(), &cycles).expect("blocks form a partition")
}

/// Partition into the orbits of `σ`, for `σ ∈ [e, c]`.
pub fn iota_inverse_a(sigma: &Permutation) -> Result<NcPartitionA> {
    let c = Permutation::long_cycle(sigma.rank())?;
    if !leq(sigma, &c)? {
        return Err(Error::Domain(format!("{sigma} is not in [e, c]")));
    }
    let blocks: Vec<Vec<i32>> = sigma.orbits().into_iter().map(|o| o.into_iter().map(|x| x as i32).collect()).collect();
    NcPartitionA::new(sigma.rank(), &blocks)
}

/// Partition into the orbits of `τ`, for `τ ∈ [ε, ω]`.
pub fn iota_inverse_b(tau: &SignedPermutation) -> Result<NcPartitionB> {
    let omega = SignedPermutation::long_cycle(tau.rank())?;
    if !leq(tau, &omega)? {
        return Err(Error::Domain(format!("{tau} is not in [ε, ω]")));
    }
    NcPartitionB::new(tau.rank(), &tau.orbits())
}
