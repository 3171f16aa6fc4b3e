//! Non-crossing partitions of types A and B, the Cayley-graph picture of
//! `S_n` and the hyperoctahedral group `W_n`, boxed convolutions over the dual
//! numbers, and cumulants and free independence in type-B probability spaces.
//!
//! All arithmetic is exact over [`Scalar`] (arbitrary-precision rationals).

pub mod cayley;
pub mod embed;
pub mod error;
pub mod freeprob;
pub mod partitions;
pub mod scalar;
pub mod series;
pub mod verify;

pub use cayley::{GroupFunction, MarkedElement, Permutation, SignedPermutation};
pub use embed::DistinguishedElements;
pub use error::{Error, Result};
pub use freeprob::{FormalSpaceB, LinkingElement, MatrixSpaceA, SpaceA, SpaceB};
pub use partitions::{GroundOrder, NcPartitionA, NcPartitionB, NonCrossing, Side};
pub use scalar::Scalar;
pub use series::{DualScalar, Series, SeriesA, SeriesB};
