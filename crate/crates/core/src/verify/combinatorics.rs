use std::collections::{HashMap, HashSet};

use super::{Outcome, Resolved};
use crate::cayley::{cayley_distances, covers_by_length, interval, leq, MarkedElement, Permutation, SignedPermutation};
use crate::embed::{iota_a as iota_of_a, iota_b as iota_of_b, iota_inverse_a, iota_inverse_b, DistinguishedElements};
use crate::error::Result;
use crate::partitions::{
    abs_fiber, abs_map, binomial, catalan, enumerate_nca, enumerate_ncb, zero_block, NcPartitionA, NcPartitionB,
    NonCrossing, Side,
};

pub(crate) fn cardinalities(p: &Resolved) -> Result<Outcome> {
    let mut out = Outcome::default();
    for k in 1..=p.n {
        let a = enumerate_nca(k)?.count() as u128;
        if !out.check(a == catalan(k), || format!("|NC^(A)({k})| = {a}, expected {}", catalan(k))) {
            return Ok(out);
        }
        let b = enumerate_ncb(k)?.count() as u128;
        if !out.check(b == binomial(2 * k, k), || format!("|NC^(B)({k})| = {b}, expected {}", binomial(2 * k, k))) {
            return Ok(out);
        }
    }
    out.summary = format!("counts match for k = 1..{}", p.n);
    Ok(out)
}

pub(crate) fn abs_cover(p: &Resolved) -> Result<Outcome> {
    let n = p.n;
    let mut out = Outcome::default();
    let mut fibers: HashMap<NcPartitionA, HashSet<NcPartitionB>> = HashMap::new();
    for pi in enumerate_ncb(n)? {
        fibers.entry(abs_map(&pi)).or_default().insert(pi);
    }
    for q in enumerate_nca(n)? {
        let fiber = fibers.remove(&q).unwrap_or_default();
        if !out.check(fiber.len() == n + 1, || format!("fiber of {q} has {} elements", fiber.len())) {
            return Ok(out);
        }
        let listed = abs_fiber(&q);
        let as_set: HashSet<NcPartitionB> = listed.iter().cloned().collect();
        if !out.check(as_set.len() == listed.len() && as_set == fiber, || {
            format!("abs_fiber({q}) lists {} partitions, preimage has {}", listed.len(), fiber.len())
        }) {
            return Ok(out);
        }
    }
    if let Some(pi) = fibers.values().flat_map(|f| f.iter()).next() {
        out.check(false, || format!("Abs({pi}) is not a non-crossing partition of [{n}]"));
        return Ok(out);
    }
    out.summary = format!("fibers all size {}", n + 1);
    Ok(out)
}

pub(crate) fn kreweras(p: &Resolved) -> Result<Outcome> {
    let mut out = Outcome::default();
    for k in 1..=p.n {
        for q in enumerate_nca(k)? {
            let kr = q.kreweras(Side::Right);
            let ok = kr.kreweras(Side::Left) == q
                && q.kreweras(Side::Left).kreweras(Side::Right) == q
                && q.blno() + kr.blno() == k + 1;
            if !out.check(ok, || format!("Kreweras identities fail at {q} (Kr = {kr})")) {
                return Ok(out);
            }
        }
        for pi in enumerate_ncb(k)? {
            let kr = pi.kreweras(Side::Right);
            let ok = kr.kreweras(Side::Left) == pi
                && pi.kreweras(Side::Left).kreweras(Side::Right) == pi
                && pi.blno() + kr.blno() == 2 * k + 1
                && zero_block(&pi).is_some() != zero_block(&kr).is_some()
                && abs_map(&kr) == abs_map(&pi).kreweras(Side::Right);
            if !out.check(ok, || format!("Kreweras identities fail at {pi} (Kr = {kr})")) {
                return Ok(out);
            }
        }
    }
    out.summary = format!("all identities hold for k = 1..{}", p.n);
    Ok(out)
}

pub(crate) fn iota_a(p: &Resolved) -> Result<Outcome> {
    let mut out = Outcome::default();
    for k in 1..=p.n {
        let c = DistinguishedElements::new(k)?.c;
        let parts: Vec<NcPartitionA> = enumerate_nca(k)?.collect();
        let images: Vec<Permutation> = parts.iter().map(iota_of_a).collect();
        let target: HashSet<Permutation> = interval(&c).into_iter().collect();
        let got: HashSet<Permutation> = images.iter().cloned().collect();
        if !out.check(got.len() == parts.len() && got == target, || format!("iota(NC^(A)({k})) is not [e, c]")) {
            return Ok(out);
        }
        for (q, s) in parts.iter().zip(&images) {
            let ok = iota_inverse_a(s)? == *q && iota_of_a(&q.kreweras(Side::Right)) == s.inverse().compose(&c)?;
            if !out.check(ok, || format!("iota inverse or iota(Kr p) = iota(p)^-1 c fails at {q}")) {
                return Ok(out);
            }
        }
        for (q1, s1) in parts.iter().zip(&images) {
            for (q2, s2) in parts.iter().zip(&images) {
                let (r, l) = (q1.refines(q2)?, leq(s1, s2)?);
                if !out.check(r == l, || format!("{q1} <= {q2} is {r} but iota order gives {l}")) {
                    return Ok(out);
                }
            }
        }
    }
    out.summary = format!("order isomorphism onto [e, c] for k = 1..{}", p.n);
    Ok(out)
}

pub(crate) fn iota_b(p: &Resolved) -> Result<Outcome> {
    let mut out = Outcome::default();
    for k in 1..=p.n {
        let omega = DistinguishedElements::new(k)?.omega;
        let parts: Vec<NcPartitionB> = enumerate_ncb(k)?.collect();
        let images: Vec<SignedPermutation> = parts.iter().map(iota_of_b).collect();
        let target: HashSet<SignedPermutation> = interval(&omega).into_iter().collect();
        let got: HashSet<SignedPermutation> = images.iter().cloned().collect();
        if !out.check(got.len() == parts.len() && got == target, || format!("iota(NC^(B)({k})) is not [e, omega]")) {
            return Ok(out);
        }
        for (pi, t) in parts.iter().zip(&images) {
            let kr = iota_of_b(&pi.kreweras(Side::Right));
            let ok = iota_inverse_b(t)? == *pi
                && kr == t.inverse().compose(&omega)?
                && t.word_length() + kr.word_length() == k;
            if !out.check(ok, || {
                format!(
                    "at {pi}: |iota(pi)| = {}, |iota(Kr pi)| = {}, iota(Kr pi) = {kr}",
                    t.word_length(),
                    kr.word_length()
                )
            }) {
                return Ok(out);
            }
        }
        for (q1, s1) in parts.iter().zip(&images) {
            for (q2, s2) in parts.iter().zip(&images) {
                let (r, l) = (q1.refines(q2)?, leq(s1, s2)?);
                if !out.check(r == l, || format!("{q1} <= {q2} is {r} but iota order gives {l}")) {
                    return Ok(out);
                }
            }
        }
    }
    out.summary = format!("order isomorphism onto [e, omega] for k = 1..{}", p.n);
    Ok(out)
}

fn lengths_match<G: MarkedElement>(n: usize, out: &mut Outcome) -> bool {
    let dist = cayley_distances::<G>(n);
    let total = G::all_elements(n).len();
    if !out.check(dist.len() == total, || format!("Cayley graph reaches {} of {total} elements", dist.len())) {
        return false;
    }
    dist.iter()
        .all(|(g, &d)| out.check(g.word_length() == d, || format!("|{g}| = {} but distance is {d}", g.word_length())))
}

pub(crate) fn length_bfs(p: &Resolved) -> Result<Outcome> {
    let mut out = Outcome::default();
    if lengths_match::<Permutation>(p.n, &mut out) && lengths_match::<SignedPermutation>(p.n, &mut out) {
        out.summary = format!("lengths equal distances on S_{0} and W_{0}", p.n);
    }
    Ok(out)
}

fn covers_match<G: MarkedElement>(n: usize, out: &mut Outcome) -> Result<bool> {
    let all = G::all_elements(n);
    for a in &all {
        for b in &all {
            let (s, l) = (a.covers(b)?, covers_by_length(a, b)?);
            if !out.check(s == l, || format!("{a} covered by {b}: structural {s}, by length {l}")) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub(crate) fn covers(p: &Resolved) -> Result<Outcome> {
    let mut out = Outcome::default();
    if covers_match::<SignedPermutation>(p.n, &mut out)? && covers_match::<Permutation>(p.n, &mut out)? {
        out.summary = format!("cover tests agree on W_{0} and S_{0}", p.n);
    }
    Ok(out)
}
