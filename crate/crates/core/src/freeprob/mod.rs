//! Non-commutative probability spaces of types A and B, their cumulants, and
//! free independence.
//!
//! A type-B space is `(A, φ, V, f)` with a two-sided action of `A` on `V`.
//! Pairs `(a, ξ) ∈ A × V` multiply as `(a, ξ)(b, η) = (ab, aη + ξb)` and have
//! expectation `E(a, ξ) = (φ(a), f(ξ))` in the dual numbers.

mod cumulants;
mod formal;
mod freeness;
mod matrix;

use std::fmt;

use crate::error::Result;
use crate::scalar::Scalar;

pub use cumulants::{
    cumulant_a, cumulant_a_prime, cumulant_b, cumulant_b_componentwise, cumulants_from_moments_a, expectation,
    linking_product, mixed_cumulant, moment_series_b, moments_from_cumulants_a, r_transform_b,
};
pub use formal::{
    FormalElem, FormalSpaceB, FormalVector, Letter, MomentEntry, PairEntry, Prescription, SpaceDescription, Word,
};
pub use freeness::{
    free_independence_moment_check, make_free_pair, mixed_cumulant_check, r_sum_product, FreePair, FreenessCertificate,
    FreenessReport, Probes,
};
pub use matrix::{Matrix, MatrixSpaceA};

/// Unital algebra with a normalized linear functional `φ`.
pub trait SpaceA {
    type Elem: Clone + fmt::Debug;

    fn unit(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, c: &Scalar, a: &Self::Elem) -> Self::Elem;
    fn phi(&self, a: &Self::Elem) -> Result<Scalar>;

    /// `a - φ(a)·I`.
    fn center(&self, a: &Self::Elem) -> Result<Self::Elem> {
        let m = self.phi(a)?;
        Ok(self.add(a, &self.scale(&-m, &self.unit())))
    }
}

/// Type-B space: a [`SpaceA`] together with a bimodule `V` and a linear functional `f` on it.
pub trait SpaceB: SpaceA {
    type Vector: Clone + fmt::Debug;

    fn zero_vector(&self) -> Self::Vector;
    fn vadd(&self, x: &Self::Vector, y: &Self::Vector) -> Self::Vector;
    fn vscale(&self, c: &Scalar, x: &Self::Vector) -> Self::Vector;
    /// `a·ξ·b`.
    fn act(&self, a: &Self::Elem, xi: &Self::Vector, b: &Self::Elem) -> Self::Vector;
    fn f(&self, xi: &Self::Vector) -> Result<Scalar>;
}

/// Argument of a cumulant that may hold either an algebra element or a vector.
#[derive(Clone, Debug)]
pub enum Slot<A, V> {
    Alg(A),
    Vector(V),
}

/// Element `(a, ξ)` of the linking algebra `A × V`.
#[derive(Clone, Debug)]
pub struct LinkingElement<A, V> {
    pub a: A,
    pub xi: V,
}

impl<A, V> LinkingElement<A, V> {
    pub fn new(a: A, xi: V) -> Self {
        LinkingElement { a, xi }
    }
}

/// Shorthand for the linking elements of a space.
pub type Pair<S> = LinkingElement<<S as SpaceA>::Elem, <S as SpaceB>::Vector>;
