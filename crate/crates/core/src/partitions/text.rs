use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{GroundOrder, NcPartitionA, NcPartitionB, NonCrossing};
use crate::error::{Error, Result};

fn write_blocks(f: &mut fmt::Formatter<'_>, blocks: &[Vec<i32>]) -> fmt::Result {
    f.write_str("{")?;
    for (i, b) in blocks.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        f.write_str("(")?;
        for (j, x) in b.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")?;
    }
    f.write_str("}")
}

impl fmt::Display for NcPartitionA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_blocks(f, &self.blocks())
    }
}

impl fmt::Display for NcPartitionB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_blocks(f, &self.blocks())
    }
}

/// Parses `{(1,2),(3,4)}` into raw label blocks. Whitespace is ignored.
pub fn parse_blocks(text: &str) -> Result<Vec<Vec<i32>>> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = s
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| Error::Parse(format!("`{text}` must be enclosed in braces")))?;
    let mut blocks = Vec::new();
    let mut rest = inner;
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| Error::Parse(format!("expected `(` in `{text}`")))?;
        let close = body.find(')').ok_or_else(|| Error::Parse(format!("unbalanced parentheses in `{text}`")))?;
        let block = body[..close]
            .split(',')
            .map(|t| t.parse::<i32>().map_err(|_| Error::Parse(format!("`{t}` is not an integer"))))
            .collect::<Result<Vec<_>>>()?;
        blocks.push(block);
        rest = &body[close + 1..];
        if let Some(r) = rest.strip_prefix(',') {
            if r.is_empty() {
                return Err(Error::Parse(format!("trailing comma in `{text}`")));
            }
            rest = r;
        } else if !rest.is_empty() {
            return Err(Error::Parse(format!("expected `,` between blocks in `{text}`")));
        }
    }
    if blocks.is_empty() {
        return Err(Error::Domain("the empty partition is not supported".into()));
    }
    Ok(blocks)
}

fn rank_of(blocks: &[Vec<i32>]) -> usize {
    blocks.iter().flatten().map(|x| x.unsigned_abs() as usize).max().unwrap_or(0)
}

impl FromStr for NcPartitionA {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let blocks = parse_blocks(s)?;
        NcPartitionA::new(rank_of(&blocks), &blocks)
    }
}

impl FromStr for NcPartitionB {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let blocks = parse_blocks(s)?;
        NcPartitionB::new(rank_of(&blocks), &blocks)
    }
}

/// A partition of either type, as read from text or JSON.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyPartition {
    A(NcPartitionA),
    B(NcPartitionB),
}

impl FromStr for AnyPartition {
    type Err = Error;
    /// Literals containing a negative label are read as type B.
    fn from_str(s: &str) -> Result<Self> {
        let blocks = parse_blocks(s)?;
        let n = rank_of(&blocks);
        if blocks.iter().flatten().any(|&x| x < 0) {
            NcPartitionB::new(n, &blocks).map(AnyPartition::B)
        } else {
            NcPartitionA::new(n, &blocks).map(AnyPartition::A)
        }
    }
}

impl fmt::Display for AnyPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyPartition::A(p) => p.fmt(f),
            AnyPartition::B(p) => p.fmt(f),
        }
    }
}

/// JSON shape `{"n":4,"type":"A","blocks":[[1,2],[3,4]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionRecord {
    pub n: usize,
    #[serde(rename = "type")]
    pub kind: String,
    pub blocks: Vec<Vec<i32>>,
}

impl<P: NonCrossing> From<&P> for PartitionRecord {
    fn from(p: &P) -> Self {
        let kind = match p.ground() {
            GroundOrder::A(_) => "A",
            GroundOrder::B(_) => "B",
        };
        PartitionRecord { n: p.n(), kind: kind.into(), blocks: p.blocks() }
    }
}

impl From<&AnyPartition> for PartitionRecord {
    fn from(p: &AnyPartition) -> Self {
        match p {
            AnyPartition::A(p) => p.into(),
            AnyPartition::B(p) => p.into(),
        }
    }
}

impl TryFrom<PartitionRecord> for AnyPartition {
    type Error = Error;
    fn try_from(r: PartitionRecord) -> Result<Self> {
        match r.kind.as_str() {
            "A" => NcPartitionA::new(r.n, &r.blocks).map(AnyPartition::A),
            "B" => NcPartitionB::new(r.n, &r.blocks).map(AnyPartition::B),
            other => Err(Error::Parse(format!("unknown partition type `{other}`"))),
        }
    }
}
