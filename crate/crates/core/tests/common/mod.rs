#![allow(dead_code)]

use std::collections::BTreeSet;

use typeb::{NcPartitionA, NcPartitionB, NonCrossing, Scalar};

pub type Blocks = BTreeSet<BTreeSet<i32>>;

/// All set partitions of `0..m` via restricted growth strings.
pub fn set_partitions(m: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(i: usize, m: usize, rgs: &mut Vec<usize>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == m {
            let k = rgs.iter().max().map_or(0, |&x| x + 1);
            let mut blocks = vec![Vec::new(); k];
            for (pos, &b) in rgs.iter().enumerate() {
                blocks[b].push(pos);
            }
            out.push(blocks);
            return;
        }
        let next = rgs.iter().max().map_or(0, |&x| x + 1);
        for b in 0..=next {
            rgs.push(b);
            go(i + 1, m, rgs, out);
            rgs.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, &mut Vec::new(), &mut out);
    out
}

/// `true` if some `a < b < c < d` has `a ~ c`, `b ~ d` in two different blocks.
pub fn crosses(blocks: &[Vec<usize>]) -> bool {
    let m: usize = blocks.iter().map(Vec::len).sum();
    let mut owner = vec![0; m];
    for (i, b) in blocks.iter().enumerate() {
        for &x in b {
            owner[x] = i;
        }
    }
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                for d in c + 1..m {
                    if owner[a] == owner[c] && owner[b] == owner[d] && owner[a] != owner[b] {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Labels of the type-B ground order `1 < ... < n < -1 < ... < -n`.
pub fn labels_b(n: usize) -> Vec<i32> {
    (1..=n as i32).chain((1..=n as i32).map(|x| -x)).collect()
}

pub fn to_labels(blocks: &[Vec<usize>], labels: &[i32]) -> Blocks {
    blocks.iter().map(|b| b.iter().map(|&p| labels[p]).collect()).collect()
}

pub fn set_of<P: NonCrossing>(p: &P) -> Blocks {
    p.blocks().into_iter().map(|b| b.into_iter().collect()).collect()
}

pub fn is_invariant(p: &Blocks) -> bool {
    p.iter().all(|b| p.contains(&b.iter().map(|x| -x).collect()))
}

/// Non-crossing partitions of `[n]` by filtering every set partition.
pub fn brute_nca(n: usize) -> Vec<Blocks> {
    let labels: Vec<i32> = (1..=n as i32).collect();
    set_partitions(n).into_iter().filter(|b| !crosses(b)).map(|b| to_labels(&b, &labels)).collect()
}

/// Inversion-invariant non-crossing partitions of `[±n]` by filtering every set partition.
pub fn brute_ncb(n: usize) -> Vec<Blocks> {
    let labels = labels_b(n);
    set_partitions(2 * n)
        .into_iter()
        .filter(|b| !crosses(b))
        .map(|b| to_labels(&b, &labels))
        .filter(is_invariant)
        .collect()
}

pub fn refines(p: &Blocks, q: &Blocks) -> bool {
    p.iter().all(|b| q.iter().any(|c| b.is_subset(c)))
}

/// Kreweras complement as the largest `q` with `p ∪ q̄` non-crossing on the
/// interleaved order `x_1 < x̄_1 < x_2 < x̄_2 < ...` (right) or
/// `x̄_1 < x_1 < x̄_2 < x_2 < ...` (left), where `order` lists the `x_i`.
pub fn brute_kreweras(p: &Blocks, order: &[i32], candidates: &[Blocks], left: bool) -> Blocks {
    let m = order.len();
    let pos = |x: i32| order.iter().position(|&y| y == x).unwrap();
    let (own, bar) = if left { (1, 0) } else { (0, 1) };
    let valid: Vec<&Blocks> = candidates
        .iter()
        .filter(|q| {
            let mut blocks: Vec<Vec<usize>> = p.iter().map(|b| b.iter().map(|&x| 2 * pos(x) + own).collect()).collect();
            blocks.extend(q.iter().map(|b| b.iter().map(|&x| 2 * pos(x) + bar).collect()));
            debug_assert_eq!(blocks.iter().map(Vec::len).sum::<usize>(), 2 * m);
            !crosses(&blocks)
        })
        .collect();
    let best = *valid.iter().min_by_key(|q| q.len()).unwrap();
    assert!(valid.iter().all(|q| refines(q, best)), "no largest complement");
    best.clone()
}

pub fn nca(n: usize, blocks: &[&[i32]]) -> NcPartitionA {
    NcPartitionA::new(n, &blocks.iter().map(|b| b.to_vec()).collect::<Vec<_>>()).unwrap()
}

pub fn ncb(n: usize, blocks: &[&[i32]]) -> NcPartitionB {
    NcPartitionB::new(n, &blocks.iter().map(|b| b.to_vec()).collect::<Vec<_>>()).unwrap()
}

pub fn q(num: i64, den: i64) -> Scalar {
    typeb::scalar::ratio(num, den)
}
