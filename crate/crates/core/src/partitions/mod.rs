//! Non-crossing partitions of types A and B.
//!
//! A type-A partition lives on `[n] = {1 < ... < n}`. A type-B partition lives
//! on `[±n] = {1 < ... < n < -1 < ... < -n}`, is non-crossing for that order and
//! is invariant under `x ↦ -x`. Both are stored as blocks of positions in the
//! ground order, in canonical form: blocks sorted by their least element, each
//! block sorted ascending.

mod abs;
mod ground;
mod ops;
mod search;
mod text;

use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;

use crate::error::{Error, Result};

pub use abs::{abs_fiber, abs_map, zero_block};
pub use ground::GroundOrder;
pub use ops::Side;
pub use text::{parse_blocks, AnyPartition, PartitionRecord};

/// Behaviour shared by [`NcPartitionA`] and [`NcPartitionB`].
pub trait NonCrossing: Clone + Eq + Hash + fmt::Debug + fmt::Display + Sized {
    /// Ground order for rank `n`.
    fn ground_for(n: usize) -> GroundOrder;

    /// Wraps canonical position blocks without checking them.
    #[doc(hidden)]
    fn from_canonical(n: usize, blocks: Vec<Vec<usize>>) -> Self;

    fn ground(&self) -> GroundOrder;

    /// Blocks as positions in the ground order.
    fn position_blocks(&self) -> &[Vec<usize>];

    fn n(&self) -> usize {
        self.ground().n()
    }

    /// Number of blocks.
    fn blno(&self) -> usize {
        self.position_blocks().len()
    }

    /// Blocks as labels, in canonical order.
    fn blocks(&self) -> Vec<Vec<i32>> {
        let g = self.ground();
        self.position_blocks().iter().map(|b| b.iter().map(|&p| g.label(p)).collect()).collect()
    }

    fn block_sizes(&self) -> Vec<usize> {
        self.position_blocks().iter().map(Vec::len).collect()
    }

    /// The partition into singletons.
    fn bottom(n: usize) -> Result<Self> {
        let g = Self::ground_for(n).check_nonzero()?;
        Ok(Self::from_canonical(n, (0..g.len()).map(|x| vec![x]).collect()))
    }

    /// The one-block partition.
    fn top(n: usize) -> Result<Self> {
        let g = Self::ground_for(n).check_nonzero()?;
        Ok(Self::from_canonical(n, vec![(0..g.len()).collect()]))
    }

    /// `Kr` for [`Side::Right`], `Kr′` for [`Side::Left`].
    fn kreweras(&self, side: Side) -> Self {
        let blocks = ops::kreweras(self.position_blocks(), self.ground().len(), side);
        Self::from_canonical(self.n(), blocks)
    }

    fn meet(&self, other: &Self) -> Result<Self> {
        same_rank(self, other)?;
        let blocks = ops::meet(self.position_blocks(), other.position_blocks(), self.ground().len());
        Ok(Self::from_canonical(self.n(), blocks))
    }

    fn join(&self, other: &Self) -> Result<Self> {
        same_rank(self, other)?;
        let blocks = ops::join(self.position_blocks(), other.position_blocks(), self.ground().len());
        Ok(Self::from_canonical(self.n(), blocks))
    }

    /// Refinement order: every block of `self` lies in a block of `other`.
    fn refines(&self, other: &Self) -> Result<bool> {
        same_rank(self, other)?;
        Ok(ops::refines(self.position_blocks(), other.position_blocks(), self.ground().len()))
    }
}

fn same_rank<P: NonCrossing>(p: &P, q: &P) -> Result<()> {
    if p.n() == q.n() {
        Ok(())
    } else {
        Err(Error::Domain(format!("partitions of {} and {} cannot be compared", p.ground(), q.ground())))
    }
}

/// Non-crossing partition of `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NcPartitionA {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

/// Inversion-invariant non-crossing partition of `[±n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NcPartitionB {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

fn positions_from_labels(g: GroundOrder, blocks: &[Vec<i32>]) -> Result<Vec<Vec<usize>>> {
    let pos = blocks
        .iter()
        .map(|b| b.iter().map(|&l| g.position_or_err(l)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    ops::owners(&pos, g.len())?;
    Ok(ops::canonicalize(pos))
}

fn require_noncrossing(g: GroundOrder, blocks: &[Vec<usize>]) -> Result<()> {
    if ops::is_noncrossing(blocks, g.len())? {
        Ok(())
    } else {
        Err(Error::Structural(format!("blocks cross in the order of {g}")))
    }
}

impl NcPartitionA {
    /// Validates and canonicalizes a block list over `[n]`.
    pub fn new(n: usize, blocks: &[Vec<i32>]) -> Result<Self> {
        let g = GroundOrder::A(n).check_nonzero()?;
        let blocks = positions_from_labels(g, blocks)?;
        require_noncrossing(g, &blocks)?;
        Ok(NcPartitionA { n, blocks })
    }
}

impl NcPartitionB {
    /// Validates and canonicalizes a block list over `[±n]`.
    pub fn new(n: usize, blocks: &[Vec<i32>]) -> Result<Self> {
        let g = GroundOrder::B(n).check_nonzero()?;
        let blocks = positions_from_labels(g, blocks)?;
        require_noncrossing(g, &blocks)?;
        let owner = ops::owners(&blocks, g.len())?;
        for b in &blocks {
            let image = owner[g.negate(b[0])];
            if b.len() != blocks[image].len() || b.iter().any(|&x| owner[g.negate(x)] != image) {
                return Err(Error::Structural("partition is not invariant under x ↦ -x".into()));
            }
        }
        Ok(NcPartitionB { n, blocks })
    }

    /// Blocks other than the zero-block, one representative per pair `{X, -X}`:
    /// the member whose least position is smaller.
    pub fn block_pairs(&self) -> Vec<&[usize]> {
        let g = self.ground();
        self.blocks
            .iter()
            .filter(|b| {
                let m = b.iter().map(|&x| g.negate(x)).min().unwrap();
                b[0] < m
            })
            .map(Vec::as_slice)
            .collect()
    }
}

impl NonCrossing for NcPartitionA {
    fn ground_for(n: usize) -> GroundOrder {
        GroundOrder::A(n)
    }
    fn from_canonical(n: usize, blocks: Vec<Vec<usize>>) -> Self {
        NcPartitionA { n, blocks }
    }
    fn ground(&self) -> GroundOrder {
        GroundOrder::A(self.n)
    }
    fn position_blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }
}

impl NonCrossing for NcPartitionB {
    fn ground_for(n: usize) -> GroundOrder {
        GroundOrder::B(n)
    }
    fn from_canonical(n: usize, blocks: Vec<Vec<usize>>) -> Self {
        NcPartitionB { n, blocks }
    }
    fn ground(&self) -> GroundOrder {
        GroundOrder::B(self.n)
    }
    fn position_blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }
}

/// Checks a block list over the given ground order for crossings.
pub fn is_noncrossing(blocks: &[Vec<i32>], order: GroundOrder) -> Result<bool> {
    let g = order.check_nonzero()?;
    let pos = positions_from_labels(g, blocks)?;
    ops::is_noncrossing(&pos, g.len())
}

/// Lazy stream over all partitions of one type and rank.
pub struct NcEnumeration<P> {
    n: usize,
    search: search::Search,
    _marker: PhantomData<P>,
}

impl<P: NonCrossing> Iterator for NcEnumeration<P> {
    type Item = P;
    fn next(&mut self) -> Option<P> {
        self.search.next().map(|b| P::from_canonical(self.n, b))
    }
}

/// All of `NC^(A)(n)`, in lexicographic order of restricted-growth strings.
pub fn enumerate_nca(n: usize) -> Result<NcEnumeration<NcPartitionA>> {
    GroundOrder::A(n).check_nonzero()?;
    Ok(NcEnumeration { n, search: search::Search::new(n, None), _marker: PhantomData })
}

/// All of `NC^(B)(n)`, in lexicographic order of restricted-growth strings over `[±n]`.
pub fn enumerate_ncb(n: usize) -> Result<NcEnumeration<NcPartitionB>> {
    GroundOrder::B(n).check_nonzero()?;
    Ok(NcEnumeration { n, search: search::Search::new(2 * n, Some(n)), _marker: PhantomData })
}

/// Free-function form of [`NonCrossing::kreweras`].
pub fn kreweras<P: NonCrossing>(p: &P, side: Side) -> P {
    p.kreweras(side)
}

pub fn meet<P: NonCrossing>(p: &P, q: &P) -> Result<P> {
    p.meet(q)
}

pub fn join<P: NonCrossing>(p: &P, q: &P) -> Result<P> {
    p.join(q)
}

pub fn refinement_leq<P: NonCrossing>(p: &P, q: &P) -> Result<bool> {
    p.refines(q)
}

/// Catalan number `C(2n,n)/(n+1)`.
pub fn catalan(n: usize) -> u128 {
    binomial(2 * n, n) / (n as u128 + 1)
}

/// Binomial coefficient.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}
