use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Totally ordered ground set of a partition.
///
/// `A(n)` is `1 < 2 < ... < n`. `B(n)` is `1 < ... < n < -1 < ... < -n`.
/// Elements are addressed by their position in this order, starting at 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroundOrder {
    A(usize),
    B(usize),
}

impl GroundOrder {
    pub fn n(self) -> usize {
        match self {
            GroundOrder::A(n) | GroundOrder::B(n) => n,
        }
    }

    /// Number of points in the ground set.
    pub fn len(self) -> usize {
        match self {
            GroundOrder::A(n) => n,
            GroundOrder::B(n) => 2 * n,
        }
    }

    pub fn is_empty(self) -> bool {
        self.len() == 0
    }

    pub fn is_type_b(self) -> bool {
        matches!(self, GroundOrder::B(_))
    }

    /// Position of a label, if it belongs to the ground set.
    pub fn position(self, label: i32) -> Option<usize> {
        let n = self.n() as i64;
        let l = label as i64;
        match self {
            GroundOrder::A(_) if (1..=n).contains(&l) => Some((l - 1) as usize),
            GroundOrder::B(_) if (1..=n).contains(&l) => Some((l - 1) as usize),
            GroundOrder::B(_) if (1..=n).contains(&-l) => Some((n - l - 1) as usize),
            _ => None,
        }
    }

    pub(crate) fn position_or_err(self, label: i32) -> Result<usize> {
        self.position(label).ok_or_else(|| Error::Structural(format!("{label} is not an element of {self}")))
    }

    /// Label at a position.
    pub fn label(self, pos: usize) -> i32 {
        let n = self.n();
        if pos < n {
            pos as i32 + 1
        } else {
            -((pos - n) as i32 + 1)
        }
    }

    /// Position of `-x` given the position of `x` (type B only; identity in type A).
    pub fn negate(self, pos: usize) -> usize {
        match self {
            GroundOrder::A(_) => pos,
            GroundOrder::B(n) => (pos + n) % (2 * n),
        }
    }

    pub(crate) fn check_nonzero(self) -> Result<Self> {
        if self.n() == 0 {
            Err(Error::Domain("n must be at least 1".into()))
        } else {
            Ok(self)
        }
    }
}

impl std::fmt::Display for GroundOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroundOrder::A(n) => write!(f, "[{n}]"),
            GroundOrder::B(n) => write!(f, "[±{n}]"),
        }
    }
}
