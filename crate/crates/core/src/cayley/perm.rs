use std::fmt;
use std::ops::Mul;

use super::{orbits_of, MarkedElement};
use crate::error::{Error, Result};

/// Permutation of `[n]`, stored as zero-based images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

/// Orbit counts of a permutation: `k[m - 1]` orbits of size `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusA {
    pub k: Vec<usize>,
}

impl Permutation {
    /// Builds from one-based images `t(1), ..., t(n)`.
    pub fn new(images: &[usize]) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::Domain("n must be at least 1".into()));
        }
        let zero: Vec<usize> = images.iter().map(|&x| x.wrapping_sub(1)).collect();
        Self::from_zero_based(zero)
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::Domain("images do not form a bijection".into()));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Product of the given disjoint cycles, one-based.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("n must be at least 1".into()));
        }
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cyc in cycles {
            for (i, &x) in cyc.iter().enumerate() {
                if x == 0 || x > n {
                    return Err(Error::Domain(format!("{x} is not in [{n}]")));
                }
                if touched[x - 1] {
                    return Err(Error::Domain(format!("{x} appears in two cycles")));
                }
                touched[x - 1] = true;
                images[x - 1] = cyc[(i + 1) % cyc.len()] - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// The transposition `(i, j)` in `S_n`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        Self::from_cycles(n, &[vec![i, j]])
    }

    /// The long cycle `(1, 2, ..., n)`.
    pub fn long_cycle(n: usize) -> Result<Self> {
        Self::from_cycles(n, &[(1..=n).collect()])
    }

    /// `t(i)` for one-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// One-based image array.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    /// Orbits as one-based cycles, each starting at its least element, sorted by that element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(&self.images).into_iter().map(|o| o.into_iter().map(|x| x + 1).collect()).collect()
    }

    pub fn census(&self) -> CensusA {
        let mut k = vec![0; self.images.len()];
        for o in orbits_of(&self.images) {
            k[o.len() - 1] += 1;
        }
        CensusA { k }
    }
}

impl MarkedElement for Permutation {
    fn rank(&self) -> usize {
        self.images.len()
    }

    fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    fn compose(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::Domain(format!("cannot compose elements of S_{} and S_{}", self.rank(), other.rank())));
        }
        Ok(Permutation { images: other.images.iter().map(|&x| self.images[x]).collect() })
    }

    fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    fn word_length(&self) -> usize {
        self.rank() - orbits_of(&self.images).len()
    }

    fn generators(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                out.push(Self::transposition(n, i, j).expect("valid transposition"));
            }
        }
        out
    }

    fn is_generator(&self) -> bool {
        let moved: Vec<usize> = (0..self.rank()).filter(|&i| self.images[i] != i).collect();
        moved.len() == 2
    }

    fn covers(&self, b: &Self) -> Result<bool> {
        let rho = self.inverse().compose(b)?;
        let moved: Vec<usize> = (0..rho.rank()).filter(|&i| rho.images[i] != i).collect();
        if moved.len() != 2 {
            return Ok(false);
        }
        let orbit = orbit_index(&self.images);
        Ok(orbit[moved[0]] != orbit[moved[1]])
    }

    fn all_elements(n: usize) -> Vec<Self> {
        all_arrangements(n).into_iter().map(|images| Permutation { images }).collect()
    }
}

/// Orbit number of each point.
pub(crate) fn orbit_index(images: &[usize]) -> Vec<usize> {
    let mut idx = vec![0; images.len()];
    for (k, o) in orbits_of(images).iter().enumerate() {
        for &x in o {
            idx[x] = k;
        }
    }
    idx
}

/// All arrangements of `0..n` in lexicographic order.
pub(crate) fn all_arrangements(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { return out };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    /// Panics when the ranks differ; use [`MarkedElement::compose`] to get an error instead.
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs).expect("permutations of equal rank")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<Vec<i64>> = self
            .orbits()
            .into_iter()
            .filter(|o| o.len() > 1)
            .map(|o| o.into_iter().map(|x| x as i64).collect())
            .collect();
        super::text::write_cycles(f, &cycles)
    }
}
