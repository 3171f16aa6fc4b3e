use std::fmt;
use std::ops::Mul;

use super::perm::{all_arrangements, orbit_index};
use super::{orbits_of, MarkedElement};
use crate::error::{Error, Result};
use crate::partitions::GroundOrder;

/// Signed permutation of `[±n]`: a bijection with `τ(-i) = -τ(i)`.
///
/// Stored as a permutation of the `2n` positions of the order `1 < ... < n < -1 < ... < -n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    n: usize,
    images: Vec<usize>,
}

/// Orbit statistics of a signed permutation.
///
/// `k[m - 1]` counts pairs `{X, -X}` of non-invariant orbits with `|X| = m`,
/// fixed points included. `l[m - 1]` counts invariant orbits with `|Z| = 2m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusB {
    pub k: Vec<usize>,
    pub l: Vec<usize>,
}

impl SignedPermutation {
    /// Builds from the signed images `τ(1), ..., τ(n)`.
    pub fn new(images: &[i32]) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::Domain("n must be at least 1".into()));
        }
        let g = GroundOrder::B(n);
        let mut full = vec![0; 2 * n];
        for (i, &t) in images.iter().enumerate() {
            let p = g.position(t).ok_or_else(|| Error::Domain(format!("{t} is not in [±{n}]")))?;
            full[i] = p;
            full[i + n] = g.negate(p);
        }
        Self::from_positions(n, full)
    }

    fn from_positions(n: usize, images: Vec<usize>) -> Result<Self> {
        let g = GroundOrder::B(n);
        let mut seen = vec![false; 2 * n];
        for (x, &y) in images.iter().enumerate() {
            if y >= 2 * n || seen[y] {
                return Err(Error::Domain("images do not form a bijection of [±n]".into()));
            }
            seen[y] = true;
            if images[g.negate(x)] != g.negate(y) {
                return Err(Error::Domain("map does not commute with x ↦ -x".into()));
            }
        }
        Ok(SignedPermutation { n, images })
    }

    /// Product of disjoint signed cycles; the list must already be closed under negation.
    pub fn from_cycles(n: usize, cycles: &[Vec<i32>]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("n must be at least 1".into()));
        }
        let g = GroundOrder::B(n);
        let mut images: Vec<usize> = (0..2 * n).collect();
        let mut touched = vec![false; 2 * n];
        for cyc in cycles {
            for (i, &x) in cyc.iter().enumerate() {
                let p = g.position(x).ok_or_else(|| Error::Domain(format!("{x} is not in [±{n}]")))?;
                if touched[p] {
                    return Err(Error::Domain(format!("{x} appears in two cycles")));
                }
                touched[p] = true;
                images[p] = g
                    .position(cyc[(i + 1) % cyc.len()])
                    .ok_or_else(|| Error::Domain(format!("{} is not in [±{n}]", cyc[(i + 1) % cyc.len()])))?;
            }
        }
        Self::from_positions(n, images)
    }

    /// The reflection `(i, -i)`.
    pub fn sign_change(n: usize, i: i32) -> Result<Self> {
        Self::from_cycles(n, &[vec![i, -i]])
    }

    /// The element `(i, j)(-i, -j)` with `|i| ≠ |j|`.
    pub fn paired_transposition(n: usize, i: i32, j: i32) -> Result<Self> {
        if i.abs() == j.abs() {
            return Err(Error::Domain("(i,j)(-i,-j) needs |i| ≠ |j|".into()));
        }
        Self::from_cycles(n, &[vec![i, j], vec![-i, -j]])
    }

    /// `ω = (1, ..., n, -1, ..., -n)`.
    pub fn long_cycle(n: usize) -> Result<Self> {
        let cyc: Vec<i32> = (1..=n as i32).chain((1..=n as i32).map(|x| -x)).collect();
        Self::from_cycles(n, &[cyc])
    }

    /// `γ = (1, ..., n)(-1, ..., -n)`.
    pub fn paired_long_cycle(n: usize) -> Result<Self> {
        let pos: Vec<i32> = (1..=n as i32).collect();
        let neg: Vec<i32> = pos.iter().map(|x| -x).collect();
        Self::from_cycles(n, &[pos, neg])
    }

    fn ground(&self) -> GroundOrder {
        GroundOrder::B(self.n)
    }

    /// `τ(x)` for `x ∈ [±n]`. Panics outside the ground set.
    pub fn apply(&self, x: i32) -> i32 {
        let g = self.ground();
        g.label(self.images[g.position(x).expect("label in [±n]")])
    }

    /// Signed images of `1, ..., n`.
    pub fn images(&self) -> Vec<i32> {
        let g = self.ground();
        self.images[..self.n].iter().map(|&p| g.label(p)).collect()
    }

    /// Images of all `2n` positions of the ground order.
    pub fn position_images(&self) -> &[usize] {
        &self.images
    }

    /// Orbits as signed cycles, each starting at its least element in the ground order.
    pub fn orbits(&self) -> Vec<Vec<i32>> {
        let g = self.ground();
        orbits_of(&self.images).into_iter().map(|o| o.into_iter().map(|p| g.label(p)).collect()).collect()
    }

    /// Whether the orbit through `x` equals its own negative.
    pub fn is_invariant_orbit(&self, x: i32) -> bool {
        let g = self.ground();
        let idx = orbit_index(&self.images);
        let p = g.position(x).expect("label in [±n]");
        idx[p] == idx[g.negate(p)]
    }

    /// Number of orbits `Z` with `Z = -Z`.
    pub fn invariant_orbit_count(&self) -> usize {
        let g = self.ground();
        orbits_of(&self.images).iter().filter(|o| o.contains(&g.negate(o[0]))).count()
    }

    pub fn census(&self) -> CensusB {
        let g = self.ground();
        let mut k = vec![0; self.n];
        let mut l = vec![0; self.n];
        for o in orbits_of(&self.images) {
            if o.contains(&g.negate(o[0])) {
                l[o.len() / 2 - 1] += 1;
            } else {
                k[o.len() - 1] += 1;
            }
        }
        // each non-invariant orbit was seen together with its negative
        k.iter_mut().for_each(|c| *c /= 2);
        CensusB { k, l }
    }

    /// Acts as `self` on `support` and fixes everything else.
    ///
    /// `support` must be a union of orbits closed under negation.
    pub fn restrict(&self, support: &[i32]) -> Result<Self> {
        let g = self.ground();
        let mut inside = vec![false; 2 * self.n];
        for &x in support {
            inside[g.position_or_err(x)?] = true;
        }
        let mut images: Vec<usize> = (0..2 * self.n).collect();
        for x in 0..2 * self.n {
            if inside[x] {
                if !inside[self.images[x]] {
                    return Err(Error::Domain("support is not a union of orbits".into()));
                }
                images[x] = self.images[x];
            }
        }
        Self::from_positions(self.n, images)
    }

    fn moved_orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(&self.images).into_iter().filter(|o| o.len() > 1).collect()
    }
}

impl MarkedElement for SignedPermutation {
    fn rank(&self) -> usize {
        self.n
    }

    fn identity(n: usize) -> Self {
        SignedPermutation { n, images: (0..2 * n).collect() }
    }

    fn compose(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Domain(format!("cannot compose elements of W_{} and W_{}", self.n, other.n)));
        }
        Ok(SignedPermutation { n: self.n, images: other.images.iter().map(|&x| self.images[x]).collect() })
    }

    fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        SignedPermutation { n: self.n, images: inv }
    }

    fn word_length(&self) -> usize {
        let g = self.ground();
        let noninvariant = orbits_of(&self.images).iter().filter(|o| !o.contains(&g.negate(o[0]))).count();
        self.n - noninvariant / 2
    }

    fn generators(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for i in 1..=n as i32 {
            out.push(Self::sign_change(n, i).expect("valid reflection"));
        }
        for i in 1..=n as i32 {
            for j in i + 1..=n as i32 {
                out.push(Self::paired_transposition(n, i, j).expect("valid generator"));
                out.push(Self::paired_transposition(n, i, -j).expect("valid generator"));
            }
        }
        out
    }

    fn is_generator(&self) -> bool {
        let g = self.ground();
        let moved = self.moved_orbits();
        match moved.as_slice() {
            [o] => o.len() == 2 && o[1] == g.negate(o[0]),
            [a, b] => a.len() == 2 && b.len() == 2 && a[0] % self.n != a[1] % self.n,
            _ => false,
        }
    }

    fn covers(&self, b: &Self) -> Result<bool> {
        let rho = self.inverse().compose(b)?;
        if !rho.is_generator() {
            return Ok(false);
        }
        let g = self.ground();
        let neg = |p: usize| g.negate(p);
        let orbit = orbit_index(&self.images);
        let same = |x: usize, y: usize| orbit[x] == orbit[y];
        let moved = rho.moved_orbits();
        if moved.len() == 1 {
            let i = moved[0][0];
            return Ok(!same(i, neg(i)));
        }
        let (i, j) = (moved[0][0], moved[0][1]);
        let labelings = [(i, j), (j, i), (neg(i), neg(j)), (neg(j), neg(i))];
        let case_b = labelings.iter().any(|&(x, y)| same(x, neg(x)) && !same(y, neg(y)));
        let pts = [i, j, neg(i), neg(j)];
        let case_c = (0..4).all(|s| (s + 1..4).all(|t| !same(pts[s], pts[t])));
        let case_d = labelings.iter().any(|&(x, y)| same(x, neg(y)) && !same(x, neg(x)));
        Ok(case_b || case_c || case_d)
    }

    fn all_elements(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for arrangement in all_arrangements(n) {
            for signs in 0..(1usize << n) {
                let images: Vec<i32> = arrangement
                    .iter()
                    .enumerate()
                    .map(|(i, &a)| {
                        let v = a as i32 + 1;
                        if signs >> i & 1 == 1 {
                            -v
                        } else {
                            v
                        }
                    })
                    .collect();
                out.push(Self::new(&images).expect("valid signed permutation"));
            }
        }
        out
    }
}

impl Mul for &SignedPermutation {
    type Output = SignedPermutation;
    /// Panics when the ranks differ; use [`MarkedElement::compose`] to get an error instead.
    fn mul(self, rhs: &SignedPermutation) -> SignedPermutation {
        self.compose(rhs).expect("signed permutations of equal rank")
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<Vec<i64>> =
            self.orbits().into_iter().filter(|o| o.len() > 1).map(|o| o.into_iter().map(i64::from).collect()).collect();
        super::text::write_cycles(f, &cycles)
    }
}
