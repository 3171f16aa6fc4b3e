use std::fmt;

use num_traits::Zero;

use super::cumulants::{cumulant_b, mixed_cumulant, r_transform_b};
use super::{FormalSpaceB, LinkingElement, Pair, Slot, SpaceB};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::series::SeriesB;

/// Test elements of one component of a space: algebra elements and vectors.
///
/// The `k`-th algebra probe and the `k`-th vector probe form the `k`-th marked pair.
pub struct Probes<S: SpaceB> {
    pub algebra: Vec<S::Elem>,
    pub vectors: Vec<S::Vector>,
}

impl<S: SpaceB> Clone for Probes<S> {
    fn clone(&self) -> Self {
        Probes { algebra: self.algebra.clone(), vectors: self.vectors.clone() }
    }
}

impl<S: SpaceB> fmt::Debug for Probes<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Probes").field("algebra", &self.algebra).field("vectors", &self.vectors).finish()
    }
}

impl<S: SpaceB> Probes<S> {
    pub fn new(algebra: Vec<S::Elem>, vectors: Vec<S::Vector>) -> Self {
        Probes { algebra, vectors }
    }

    pub fn pairs(&self) -> Vec<Pair<S>> {
        self.algebra.iter().zip(&self.vectors).map(|(a, x)| LinkingElement::new(a.clone(), x.clone())).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum CheckKind {
    Cumulants,
    Moments,
}

/// Outcome of a freeness check: how many identities were tested up to which
/// depth, and the first one that failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessReport {
    kind: CheckKind,
    pub depth: usize,
    pub checked: usize,
    pub witness: Option<String>,
}

impl FreenessReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    /// Certificate of freeness up to `depth`; only a passing cumulant check yields one.
    pub fn certificate(&self) -> Option<FreenessCertificate> {
        (self.kind == CheckKind::Cumulants && self.passed()).then_some(FreenessCertificate { depth: self.depth })
    }
}

/// Proof that [`mixed_cumulant_check`] passed up to a depth.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FreenessCertificate {
    depth: usize,
}

impl FreenessCertificate {
    pub fn depth(&self) -> usize {
        self.depth
    }
}

/// All sequences of length `len` over `0..base`.
fn tuples(base: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = if base == 0 && len > 0 { 0 } else { base.pow(len as u32) };
    (0..total).map(move |mut code| {
        let mut t = vec![0; len];
        for slot in t.iter_mut().rev() {
            *slot = code % base;
            code /= base;
        }
        t
    })
}

fn all_same(comps: &[usize]) -> bool {
    comps.windows(2).all(|w| w[0] == w[1])
}

fn label(comps: &[usize]) -> String {
    comps.iter().map(|c| (c + 1).to_string()).collect::<Vec<_>>().join(",")
}

/// Checks that every mixed cumulant of the probes vanishes for `2 <= n <= depth`:
/// type-A cumulants of algebra probes, type-A′ cumulants with one vector probe in
/// any slot, and type-B cumulants of the marked pairs.
pub fn mixed_cumulant_check<S: SpaceB>(space: &S, probes: &[Probes<S>], depth: usize) -> Result<FreenessReport> {
    let alg: Vec<(usize, &S::Elem)> =
        probes.iter().enumerate().flat_map(|(c, p)| p.algebra.iter().map(move |a| (c, a))).collect();
    let vecs: Vec<(usize, &S::Vector)> =
        probes.iter().enumerate().flat_map(|(c, p)| p.vectors.iter().map(move |x| (c, x))).collect();
    let pairs: Vec<(usize, Pair<S>)> =
        probes.iter().enumerate().flat_map(|(c, p)| p.pairs().into_iter().map(move |q| (c, q))).collect();
    let mut report = FreenessReport { kind: CheckKind::Cumulants, depth, checked: 0, witness: None };
    for n in 2..=depth {
        for t in tuples(alg.len(), n) {
            let comps: Vec<usize> = t.iter().map(|&i| alg[i].0).collect();
            if all_same(&comps) {
                continue;
            }
            let slots: Vec<_> = t.iter().map(|&i| Slot::Alg(alg[i].1.clone())).collect();
            let k = mixed_cumulant(space, &slots)?;
            report.checked += 1;
            if !k.is_zero() {
                report.witness = Some(format!("κ_{n} on components ({}) is {k}", label(&comps)));
                return Ok(report);
            }
        }
        for t in tuples(alg.len(), n - 1) {
            for (vc, x) in &vecs {
                for m in 0..n {
                    let mut comps: Vec<usize> = t.iter().map(|&i| alg[i].0).collect();
                    comps.insert(m, *vc);
                    if all_same(&comps) {
                        continue;
                    }
                    let mut slots: Vec<_> = t.iter().map(|&i| Slot::Alg(alg[i].1.clone())).collect();
                    slots.insert(m, Slot::Vector((*x).clone()));
                    let k = mixed_cumulant(space, &slots)?;
                    report.checked += 1;
                    if !k.is_zero() {
                        report.witness = Some(format!(
                            "κ′_{n} on components ({}) with the vector in slot {} is {k}",
                            label(&comps),
                            m + 1
                        ));
                        return Ok(report);
                    }
                }
            }
        }
        for t in tuples(pairs.len(), n) {
            let comps: Vec<usize> = t.iter().map(|&i| pairs[i].0).collect();
            if all_same(&comps) {
                continue;
            }
            let args: Vec<Pair<S>> = t.iter().map(|&i| pairs[i].1.clone()).collect();
            let k = cumulant_b(space, &args)?;
            report.checked += 1;
            if !k.is_zero() {
                report.witness = Some(format!("κ^B_{n} on components ({}) is {k}", label(&comps)));
                return Ok(report);
            }
        }
    }
    Ok(report)
}

/// Checks the defining moment conditions of freeness with centered algebra probes:
/// alternating products have `φ = 0` up to length `depth`, and
/// `f(a_m⋯a_1 ξ b_1⋯b_n)` is `0` for `m ≠ n` and
/// `δ_{i_1 j_1}⋯δ_{i_n j_n} φ(a_1 b_1)⋯φ(a_n b_n) f(ξ)` for `m = n`, whenever
/// consecutive components in `i_m, ..., i_1, h, j_1, ..., j_n` differ and `m + n <= depth`.
pub fn free_independence_moment_check<S: SpaceB>(
    space: &S,
    probes: &[Probes<S>],
    depth: usize,
) -> Result<FreenessReport> {
    let mut alg: Vec<(usize, S::Elem)> = Vec::new();
    for (c, p) in probes.iter().enumerate() {
        for a in &p.algebra {
            alg.push((c, space.center(a)?));
        }
    }
    let vecs: Vec<(usize, &S::Vector)> =
        probes.iter().enumerate().flat_map(|(c, p)| p.vectors.iter().map(move |x| (c, x))).collect();
    let mut report = FreenessReport { kind: CheckKind::Moments, depth, checked: 0, witness: None };
    let alternating = |comps: &[usize]| comps.windows(2).all(|w| w[0] != w[1]);
    for n in 2..=depth {
        for t in tuples(alg.len(), n) {
            let comps: Vec<usize> = t.iter().map(|&i| alg[i].0).collect();
            if !alternating(&comps) {
                continue;
            }
            let prod = t.iter().fold(space.unit(), |acc, &i| space.mul(&acc, &alg[i].1));
            let v = space.phi(&prod)?;
            report.checked += 1;
            if !v.is_zero() {
                report.witness = Some(format!("alternating product on components ({}) has moment {v}", label(&comps)));
                return Ok(report);
            }
        }
    }
    for total in 1..=depth {
        for m in 0..=total {
            let n = total - m;
            for left in tuples(alg.len(), m) {
                for right in tuples(alg.len(), n) {
                    for (h, x) in &vecs {
                        // left holds a_1..a_m, applied in the order a_m⋯a_1
                        let mut comps: Vec<usize> = left.iter().rev().map(|&i| alg[i].0).collect();
                        comps.push(*h);
                        comps.extend(right.iter().map(|&i| alg[i].0));
                        if !alternating(&comps) {
                            continue;
                        }
                        let a = left.iter().rev().fold(space.unit(), |acc, &i| space.mul(&acc, &alg[i].1));
                        let b = right.iter().fold(space.unit(), |acc, &i| space.mul(&acc, &alg[i].1));
                        let got = space.f(&space.act(&a, x, &b))?;
                        let expected = if m != n {
                            Scalar::zero()
                        } else {
                            let mut e = space.f(x)?;
                            for (&i, &j) in left.iter().zip(&right) {
                                if alg[i].0 != alg[j].0 {
                                    e = Scalar::zero();
                                    break;
                                }
                                e *= space.phi(&space.mul(&alg[i].1, &alg[j].1))?;
                            }
                            e
                        };
                        report.checked += 1;
                        if got != expected {
                            report.witness =
                                Some(format!("f on components ({}) is {got}, expected {expected}", label(&comps)));
                            return Ok(report);
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Formal space holding two free marked pairs with prescribed R-transforms.
#[derive(Clone, Debug)]
pub struct FreePair {
    pub space: FormalSpaceB,
    pub pairs: [Pair<FormalSpaceB>; 2],
}

impl FreePair {
    /// One probe set per pair: its algebra element and its vector.
    pub fn probes(&self) -> Vec<Probes<FormalSpaceB>> {
        self.pairs.iter().map(|p| Probes::new(vec![p.a.clone()], vec![p.xi.clone()])).collect()
    }
}

/// Space with free pairs `(a1, x1)`, `(a2, x2)` whose R-transforms are `r1` and `r2`
/// truncated to `order`; moments are available up to degree `2·order`.
pub fn make_free_pair(r1: &SeriesB, r2: &SeriesB, order: usize) -> Result<FreePair> {
    if order == 0 {
        return Err(Error::Domain("order must be positive".into()));
    }
    let components = [
        ("a1".to_string(), Some("x1".to_string()), r1.truncate(order)?),
        ("a2".to_string(), Some("x2".to_string()), r2.truncate(order)?),
    ];
    let space = FormalSpaceB::from_cumulants(&components, 2 * order)?;
    let pairs = [
        LinkingElement::new(space.generator("a1")?, space.vector_generator("x1")?),
        LinkingElement::new(space.generator("a2")?, space.vector_generator("x2")?),
    ];
    Ok(FreePair { space, pairs })
}

/// R-transforms of `X + Y` and `XY` for marked pairs certified free up to `order`.
pub fn r_sum_product<S: SpaceB>(
    space: &S,
    x: &Pair<S>,
    y: &Pair<S>,
    order: usize,
    certificate: FreenessCertificate,
) -> Result<(SeriesB, SeriesB)> {
    if certificate.depth < order {
        return Err(Error::Precondition(format!(
            "freeness is certified to depth {}, order {order} needs at least that depth",
            certificate.depth
        )));
    }
    let sum = LinkingElement::new(space.add(&x.a, &y.a), space.vadd(&x.xi, &y.xi));
    let product = super::linking_product(space, &[x.clone(), y.clone()]);
    Ok((r_transform_b(space, &sum, order)?, r_transform_b(space, &product, order)?))
}

impl fmt::Display for FreenessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "free up to depth {} ({} identities checked)", self.depth, self.checked),
            Some(w) => write!(f, "not free: {w}"),
        }
    }
}
