use super::{ops, GroundOrder, NcPartitionA, NcPartitionB, NonCrossing, Side};

/// The block `X` with `X = -X`, if present.
pub fn zero_block(pi: &NcPartitionB) -> Option<Vec<i32>> {
    let g = pi.ground();
    pi.position_blocks().iter().find(|b| b.contains(&g.negate(b[0]))).map(|b| b.iter().map(|&x| g.label(x)).collect())
}

/// Replaces every block by its set of absolute values.
pub fn abs_map(pi: &NcPartitionB) -> NcPartitionA {
    let n = pi.n();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for b in pi.position_blocks() {
        let mut a: Vec<usize> = b.iter().map(|&x| x % n).collect();
        a.sort_unstable();
        a.dedup();
        if !blocks.contains(&a) {
            blocks.push(a);
        }
    }
    let blocks = ops::canonicalize(blocks);
    debug_assert!(ops::is_noncrossing(&blocks, n).unwrap_or(false));
    NcPartitionA::from_canonical(n, blocks)
}

/// The `n + 1` type-B partitions with absolute value `p`.
///
/// The first `blno(p)` entries turn a block of `p` into a zero-block; the
/// remaining ones turn a block of `Kr(p)` into the zero-block of the complement.
pub fn abs_fiber(p: &NcPartitionA) -> Vec<NcPartitionB> {
    let mut out: Vec<NcPartitionB> = (0..p.blno()).map(|i| lift(p, i)).collect();
    let kr = p.kreweras(Side::Right);
    out.extend((0..kr.blno()).map(|i| lift(&kr, i).kreweras(Side::Left)));
    out
}

/// The unique element of the fiber over `p` whose zero-block covers block `zero` of `p`.
fn lift(p: &NcPartitionA, zero: usize) -> NcPartitionB {
    let n = p.n();
    let g = GroundOrder::B(n);
    let mut z: Vec<usize> = p.position_blocks()[zero].iter().flat_map(|&x| [x, x + n]).collect();
    z.sort_unstable();
    let arc = |y: usize| match z.iter().rposition(|&w| w < y) {
        Some(k) => k,
        None => z.len() - 1,
    };
    let mut blocks = vec![z.clone()];
    for (i, f) in p.position_blocks().iter().enumerate() {
        if i == zero {
            continue;
        }
        let home = arc(f[0]);
        let x: Vec<usize> = (0..2 * n).filter(|&y| f.contains(&(y % n)) && arc(y) == home).collect();
        debug_assert_eq!(x.len(), f.len());
        blocks.push(x.iter().map(|&y| g.negate(y)).collect());
        blocks.push(x);
    }
    let blocks = ops::canonicalize(blocks);
    debug_assert!(ops::is_noncrossing(&blocks, 2 * n).unwrap_or(false));
    NcPartitionB::from_canonical(n, blocks)
}
