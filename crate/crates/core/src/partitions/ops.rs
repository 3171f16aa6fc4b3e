//! Position-level algorithms shared by both partition types.

use crate::error::{Error, Result};

/// Which interleaved order defines the complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `1 < 1̄ < 2 < 2̄ < ...`, giving `Kr`.
    Right,
    /// `1̄ < 1 < 2̄ < 2 < ...`, giving `Kr′`.
    Left,
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(len: usize) -> Self {
        UnionFind { parent: (0..len).collect() }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    pub(crate) fn classes(mut self) -> Vec<Vec<usize>> {
        let len = self.parent.len();
        let mut slot = vec![usize::MAX; len];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0..len {
            let r = self.find(x);
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(x);
        }
        out
    }
}

/// Sorts each block and orders blocks by their minimum.
pub(crate) fn canonicalize(mut blocks: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort_unstable_by_key(|b| b[0]);
    blocks
}

/// Checks that `blocks` is a partition of `0..len` and returns the owning block of each point.
pub(crate) fn owners(blocks: &[Vec<usize>], len: usize) -> Result<Vec<usize>> {
    let mut owner = vec![usize::MAX; len];
    for (i, b) in blocks.iter().enumerate() {
        if b.is_empty() {
            return Err(Error::Structural("empty block".into()));
        }
        for &x in b {
            if x >= len {
                return Err(Error::Structural(format!("position {x} outside ground set")));
            }
            if owner[x] != usize::MAX {
                return Err(Error::Structural(format!("position {x} occurs twice")));
            }
            owner[x] = i;
        }
    }
    if let Some(x) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(Error::Structural(format!("position {x} is not covered")));
    }
    Ok(owner)
}

/// Returns a pair of crossing blocks, if any.
pub(crate) fn find_crossing(blocks: &[Vec<usize>], owner: &[usize]) -> Option<(usize, usize)> {
    let last: Vec<usize> = blocks.iter().map(|b| *b.iter().max().unwrap()).collect();
    let mut seen = vec![false; blocks.len()];
    let mut stack: Vec<usize> = Vec::new();
    for (x, &b) in owner.iter().enumerate() {
        if seen[b] {
            let top = *stack.last().unwrap();
            if top != b {
                return Some((b, top));
            }
        } else {
            seen[b] = true;
            stack.push(b);
        }
        if last[b] == x {
            stack.pop();
        }
    }
    None
}

pub(crate) fn is_noncrossing(blocks: &[Vec<usize>], len: usize) -> Result<bool> {
    let owner = owners(blocks, len)?;
    Ok(find_crossing(blocks, &owner).is_none())
}

/// Kreweras complement on positions `0..len`.
pub(crate) fn kreweras(blocks: &[Vec<usize>], len: usize, side: Side) -> Vec<Vec<usize>> {
    let owner = owners(blocks, len).expect("valid partition");
    let lo: Vec<usize> = blocks.iter().map(|b| b[0]).collect();
    let hi: Vec<usize> = blocks.iter().map(|b| *b.last().unwrap()).collect();
    let is_union = |l: usize, r: usize| {
        (l..=r).all(|x| {
            let b = owner[x];
            lo[b] >= l && hi[b] <= r
        })
    };
    let mut uf = UnionFind::new(len);
    for i in 0..len {
        for j in i + 1..len {
            let (l, r) = match side {
                Side::Right => (i + 1, j),
                Side::Left => (i, j - 1),
            };
            if is_union(l, r) {
                uf.union(i, j);
            }
        }
    }
    canonicalize(uf.classes())
}

pub(crate) fn meet(p: &[Vec<usize>], q: &[Vec<usize>], len: usize) -> Vec<Vec<usize>> {
    let op = owners(p, len).expect("valid partition");
    let oq = owners(q, len).expect("valid partition");
    let mut uf = UnionFind::new(len);
    let mut first = std::collections::HashMap::new();
    for x in 0..len {
        let key = (op[x], oq[x]);
        match first.get(&key) {
            Some(&y) => uf.union(x, y),
            None => {
                first.insert(key, x);
            }
        }
    }
    canonicalize(uf.classes())
}

pub(crate) fn join(p: &[Vec<usize>], q: &[Vec<usize>], len: usize) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(len);
    for b in p.iter().chain(q) {
        for w in b.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    let mut blocks = canonicalize(uf.classes());
    loop {
        let owner = owners(&blocks, len).expect("valid partition");
        match find_crossing(&blocks, &owner) {
            None => return blocks,
            Some((a, b)) => {
                let (a, b) = (a.min(b), a.max(b));
                let moved = blocks.remove(b);
                blocks[a].extend(moved);
                blocks = canonicalize(blocks);
            }
        }
    }
}

/// Every block of `p` lies inside a block of `q`.
pub(crate) fn refines(p: &[Vec<usize>], q: &[Vec<usize>], len: usize) -> bool {
    let oq = owners(q, len).expect("valid partition");
    p.iter().all(|b| b.iter().all(|&x| oq[x] == oq[b[0]]))
}
