//! Marked groups `(S_n, T_n)` and `(W_n, R_n)`.
//!
//! `T_n` is the set of transpositions. `R_n` consists of the reflections
//! `(i, -i)` and the elements `(i, j)(-i, -j)` with `|i| ≠ |j|`. Products
//! compose right to left: `(a·b)(x) = a(b(x))`.

mod factor;
mod function;
mod perm;
mod signed;
mod text;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;

use crate::error::Result;

pub use factor::{cycle_factorization_b, interval_factorize, CycleFactorizationB, FactorKind, IntervalFactor};
pub use function::{convolve_at, restricted_convolution, GroupFunction};
pub use perm::{CensusA, Permutation};
pub use signed::{CensusB, SignedPermutation};
pub use text::{parse_cycles, parse_permutation, parse_signed_permutation};

/// Element of a marked group with its generating set and word length.
pub trait MarkedElement: Clone + Eq + Hash + fmt::Debug + fmt::Display {
    /// The `n` of `S_n` or `W_n`.
    fn rank(&self) -> usize;
    fn identity(n: usize) -> Self;
    /// `(self·other)(x) = self(other(x))`.
    fn compose(&self, other: &Self) -> Result<Self>;
    fn inverse(&self) -> Self;
    /// Length of a shortest word in the generators.
    fn word_length(&self) -> usize;
    fn generators(n: usize) -> Vec<Self>;
    fn is_generator(&self) -> bool;
    /// Cover test from the orbit structure of `self` and `self⁻¹·b`.
    fn covers(&self, b: &Self) -> Result<bool>;
    /// Every element of the group, for exhaustive checks at small rank.
    fn all_elements(n: usize) -> Vec<Self>;

    fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank())
    }
}

/// Orbits of a permutation of `0..len`, each listed along the permutation from its least point.
pub(crate) fn orbits_of(images: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; images.len()];
    let mut out = Vec::new();
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            orbit.push(x);
            x = images[x];
        }
        out.push(orbit);
    }
    out
}

/// `a ≤ b` iff `|a| + |a⁻¹b| = |b|`.
pub fn leq<G: MarkedElement>(a: &G, b: &G) -> Result<bool> {
    let rest = a.inverse().compose(b)?;
    Ok(a.word_length() + rest.word_length() == b.word_length())
}

/// Cover test `a ≤ b` and `|b| = |a| + 1`.
pub fn covers_by_length<G: MarkedElement>(a: &G, b: &G) -> Result<bool> {
    Ok(b.word_length() == a.word_length() + 1 && leq(a, b)?)
}

/// Free-function form of [`MarkedElement::covers`].
pub fn covers<G: MarkedElement>(a: &G, b: &G) -> Result<bool> {
    a.covers(b)
}

/// The interval `[e, b]`, found by walking up covers from `e` inside `{c : c ≤ b}`.
///
/// Elements come out in order of non-decreasing length.
pub fn interval<G: MarkedElement>(b: &G) -> Vec<G> {
    let n = b.rank();
    let top = b.word_length();
    let gens = G::generators(n);
    let e = G::identity(n);
    let mut seen: HashSet<G> = HashSet::from([e.clone()]);
    let mut queue = VecDeque::from([e]);
    let mut out = Vec::new();
    while let Some(a) = queue.pop_front() {
        let len = a.word_length();
        if len < top {
            for r in &gens {
                let c = &a.compose(r).expect("same rank");
                if c.word_length() == len + 1 && !seen.contains(c) && leq(c, b).expect("same rank") {
                    seen.insert(c.clone());
                    queue.push_back(c.clone());
                }
            }
        }
        out.push(a);
    }
    out
}

/// Distance from the identity in the Cayley graph, for every element of the group.
pub fn cayley_distances<G: MarkedElement>(n: usize) -> HashMap<G, usize> {
    let gens = G::generators(n);
    let e = G::identity(n);
    let mut dist = HashMap::from([(e.clone(), 0)]);
    let mut queue = VecDeque::from([e]);
    while let Some(a) = queue.pop_front() {
        let d = dist[&a];
        for r in &gens {
            let c = a.compose(r).expect("same rank");
            if !dist.contains_key(&c) {
                dist.insert(c.clone(), d + 1);
                queue.push_back(c);
            }
        }
    }
    dist
}
