use std::collections::HashMap;

use num_traits::{One, Zero};
use rand::Rng;

use super::{Outcome, Resolved};
use crate::error::{Error, Result};
use crate::freeprob::{
    cumulant_a, cumulant_a_prime, cumulant_b, cumulant_b_componentwise, cumulants_from_moments_a, expectation,
    free_independence_moment_check, linking_product, make_free_pair, mixed_cumulant, mixed_cumulant_check,
    moment_series_b, moments_from_cumulants_a, r_sum_product, r_transform_b, FormalElem, FormalSpaceB, FormalVector,
    FreePair, LinkingElement, Pair, Probes, Slot, SpaceA, SpaceB,
};
use crate::partitions::{enumerate_nca, zero_block, NonCrossing};
use crate::scalar::{int, random_nonzero_scalar, random_scalar, Scalar};
use crate::series::{
    boxconv_a, boxconv_b, boxconv_b_inverse, boxconv_b_second_terms, random_series_b, DualScalar, Series, SeriesA,
    SeriesB,
};

type FSlot = Slot<FormalElem, FormalVector>;
type FPair = Pair<FormalSpaceB>;

fn word(space: &FormalSpaceB, text: &str) -> Result<Scalar> {
    space.moment(&space.parse_word(text)?)
}

/// `c_0·I + Σ c_i a_i` with random coefficients.
fn random_elem(space: &FormalSpaceB, rng: &mut impl Rng) -> Result<FormalElem> {
    let mut e = space.scale(&random_scalar(rng), &space.unit());
    for name in space.algebra_names() {
        e = space.add(&e, &space.scale(&random_scalar(rng), &space.generator(name)?));
    }
    Ok(e)
}

/// `Σ c_j x_j` with random coefficients, not all zero.
fn random_vector(space: &FormalSpaceB, rng: &mut impl Rng) -> Result<FormalVector> {
    let mut v = space.zero_vector();
    for (j, name) in space.vector_names().iter().enumerate() {
        let c = if j == 0 { random_nonzero_scalar(rng) } else { random_scalar(rng) };
        v = space.vadd(&v, &space.vscale(&c, &space.vector_generator(name)?));
    }
    Ok(v)
}

fn random_slots(space: &FormalSpaceB, n: usize, vector_at: Option<usize>, rng: &mut impl Rng) -> Result<Vec<FSlot>> {
    (0..n)
        .map(|i| {
            Ok(if Some(i) == vector_at {
                Slot::Vector(random_vector(space, rng)?)
            } else {
                Slot::Alg(random_elem(space, rng)?)
            })
        })
        .collect()
}

fn random_pairs(space: &FormalSpaceB, n: usize, rng: &mut impl Rng) -> Result<Vec<FPair>> {
    (0..n).map(|_| Ok(LinkingElement::new(random_elem(space, rng)?, random_vector(space, rng)?))).collect()
}

fn slot_mul(space: &FormalSpaceB, x: &FSlot, y: &FSlot) -> Result<FSlot> {
    Ok(match (x, y) {
        (Slot::Alg(a), Slot::Alg(b)) => Slot::Alg(space.mul(a, b)),
        (Slot::Alg(a), Slot::Vector(v)) => Slot::Vector(space.act(a, v, &space.unit())),
        (Slot::Vector(v), Slot::Alg(b)) => Slot::Vector(space.act(&space.unit(), v, b)),
        _ => return Err(Error::Domain("two vectors in one product".into())),
    })
}

fn slot_combination(space: &FormalSpaceB, c: &Scalar, x: &FSlot, d: &Scalar, y: &FSlot) -> Result<FSlot> {
    Ok(match (x, y) {
        (Slot::Alg(a), Slot::Alg(b)) => Slot::Alg(space.add(&space.scale(c, a), &space.scale(d, b))),
        (Slot::Vector(u), Slot::Vector(v)) => Slot::Vector(space.vadd(&space.vscale(c, u), &space.vscale(d, v))),
        _ => return Err(Error::Domain("mixed slot kinds".into())),
    })
}

fn explicit_formulas(p: &Resolved, rng: &mut impl Rng, out: &mut Outcome) -> Result<bool> {
    for s in 0..p.samples {
        let sp = FormalSpaceB::random_moments(3, 2, 3, rng)?;
        let m = |t: &str| word(&sp, t);
        let (a1, a2, a3) = (sp.generator("a1")?, sp.generator("a2")?, sp.generator("a3")?);
        let (x1, x2) = (sp.vector_generator("x1")?, sp.vector_generator("x2")?);
        let two = int(2);
        let checks: Vec<(&str, Scalar, Scalar)> = vec![
            ("kappa_1(a1)", cumulant_a(&sp, std::slice::from_ref(&a1))?, m("a1")?),
            ("kappa_2(a1,a2)", cumulant_a(&sp, &[a1.clone(), a2.clone()])?, m("a1 a2")? - m("a1")? * m("a2")?),
            (
                "kappa_3(a1,a2,a3)",
                cumulant_a(&sp, &[a1.clone(), a2.clone(), a3.clone()])?,
                m("a1 a2 a3")? - m("a1")? * m("a2 a3")? - m("a2")? * m("a1 a3")? - m("a1 a2")? * m("a3")?
                    + &two * m("a1")? * m("a2")? * m("a3")?,
            ),
            (
                "kappa'_{2;1}(x1,a1)",
                cumulant_a_prime(&sp, 1, std::slice::from_ref(&a1), &x1)?,
                m("x1 a1")? - m("x1")? * m("a1")?,
            ),
            (
                "kappa'_{2;2}(a1,x1)",
                cumulant_a_prime(&sp, 2, std::slice::from_ref(&a1), &x1)?,
                m("a1 x1")? - m("a1")? * m("x1")?,
            ),
            (
                "kappa'_{3;2}(a1,x1,a2)",
                cumulant_a_prime(&sp, 2, &[a1.clone(), a2.clone()], &x1)?,
                m("a1 x1 a2")? - m("a1")? * m("x1 a2")? - m("x1")? * m("a1 a2")? - m("a1 x1")? * m("a2")?
                    + &two * m("a1")? * m("x1")? * m("a2")?,
            ),
        ];
        for (name, got, want) in checks {
            if !out.check(got == want, || format!("sample {s}: {name} = {got}, formula gives {want}")) {
                return Ok(false);
            }
        }
        let p1 = LinkingElement::new(a1.clone(), x1.clone());
        let p2 = LinkingElement::new(a2.clone(), x2.clone());
        let k1 = cumulant_b(&sp, std::slice::from_ref(&p1))?;
        if !out.check(k1 == DualScalar::new(m("a1")?, m("x1")?), || format!("sample {s}: kappa^B_1 = {k1}")) {
            return Ok(false);
        }
        let k2 = cumulant_b(&sp, &[p1, p2])?;
        let want = DualScalar::new(
            m("a1 a2")? - m("a1")? * m("a2")?,
            m("a1 x2")? - m("a1")? * m("x2")? + m("x1 a2")? - m("x1")? * m("a2")?,
        );
        if !out.check(k2 == want, || format!("sample {s}: kappa^B_2 = {k2}, formula gives {want}")) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn round_trips(p: &Resolved, rng: &mut impl Rng, out: &mut Outcome) -> Result<bool> {
    const N: usize = 6;
    for s in 0..p.samples {
        let sp = FormalSpaceB::random_moments(1, 0, N, rng)?;
        let a = sp.generator("a1")?;
        let moments: Vec<Scalar> =
            (1..=N).map(|k| sp.phi(&sp.word_elem(&vec!["a1"; k].join(" "))?)).collect::<Result<_>>()?;
        let kappa: Vec<Scalar> = (1..=N).map(|k| cumulant_a(&sp, &vec![a.clone(); k])).collect::<Result<_>>()?;
        let ok = cumulants_from_moments_a(&moments)? == kappa && moments_from_cumulants_a(&kappa)? == moments;
        if !out.check(ok, || format!("sample {s}: moments {moments:?} and cumulants {kappa:?} do not round trip")) {
            return Ok(false);
        }

        let sp = FormalSpaceB::random_moments(2, 1, N, rng)?;
        let pairs = random_pairs(&sp, N, rng)?;
        let elems: Vec<FormalElem> = pairs.iter().map(|q| q.a.clone()).collect();
        let mut memo_a: HashMap<Vec<usize>, Scalar> = HashMap::new();
        let mut memo_b: HashMap<Vec<usize>, DualScalar> = HashMap::new();
        for q in enumerate_nca(N)? {
            for block in q.position_blocks() {
                if !memo_a.contains_key(block) {
                    let args: Vec<FormalElem> = block.iter().map(|&i| elems[i].clone()).collect();
                    memo_a.insert(block.clone(), cumulant_a(&sp, &args)?);
                    let args: Vec<FPair> = block.iter().map(|&i| pairs[i].clone()).collect();
                    memo_b.insert(block.clone(), cumulant_b(&sp, &args)?);
                }
            }
        }
        let (mut sum_a, mut sum_b) = (Scalar::zero(), DualScalar::zero());
        for q in enumerate_nca(N)? {
            sum_a += q.position_blocks().iter().fold(Scalar::one(), |t, b| t * &memo_a[b]);
            sum_b = sum_b + q.position_blocks().iter().fold(DualScalar::one(), |t, b| t * memo_b[b].clone());
        }
        let want_a = sp.phi(&elems.iter().fold(sp.unit(), |t, e| sp.mul(&t, e)))?;
        let want_b = expectation(&sp, &linking_product(&sp, &pairs))?;
        let ok = sum_a == want_a && sum_b == want_b;
        if !out.check(ok, || {
            format!("sample {s}: summing cumulants over NC({N}) gives {sum_a}, {sum_b}; moments are {want_a}, {want_b}")
        }) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn componentwise(p: &Resolved, rng: &mut impl Rng, out: &mut Outcome) -> Result<bool> {
    let sp = FormalSpaceB::random_moments(2, 2, p.order, rng)?;
    for n in 1..=p.order {
        for s in 0..p.samples {
            let pairs = random_pairs(&sp, n, rng)?;
            let (rec, comp) = (cumulant_b(&sp, &pairs)?, cumulant_b_componentwise(&sp, &pairs)?);
            if !out.check(rec == comp, || format!("n = {n}, sample {s}: recursion {rec}, componentwise {comp}")) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn products_as_arguments(p: &Resolved, rng: &mut impl Rng, out: &mut Outcome) -> Result<bool> {
    let sp = FormalSpaceB::random_moments(2, 1, p.order, rng)?;
    for n in 2..=p.order {
        let separating: Vec<Vec<Vec<usize>>> =
            enumerate_nca(n)?.filter(|q| q.blno() == 2).map(|q| q.position_blocks().to_vec()).collect();
        for vector_at in std::iter::once(None).chain((0..n).map(Some)) {
            let slots = random_slots(&sp, n, vector_at, rng)?;
            let full = mixed_cumulant(&sp, &slots)?;
            for r in 0..n - 1 {
                let mut merged = slots[..r].to_vec();
                merged.push(slot_mul(&sp, &slots[r], &slots[r + 1])?);
                merged.extend(slots[r + 2..].iter().cloned());
                let lhs = mixed_cumulant(&sp, &merged)?;
                let mut rhs = full.clone();
                for blocks in &separating {
                    if blocks.iter().any(|b| b.contains(&r) && b.contains(&(r + 1))) {
                        continue;
                    }
                    let mut term = Scalar::one();
                    for b in blocks {
                        let sub: Vec<FSlot> = b.iter().map(|&i| slots[i].clone()).collect();
                        term *= mixed_cumulant(&sp, &sub)?;
                    }
                    rhs += term;
                }
                if !out.check(lhs == rhs, || {
                    format!("n = {n}, vector at {vector_at:?}, r = {}: merged cumulant {lhs}, expansion {rhs}", r + 1)
                }) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn scalar_arguments(p: &Resolved, rng: &mut impl Rng, out: &mut Outcome) -> Result<bool> {
    let sp = FormalSpaceB::random_moments(2, 1, p.order, rng)?;
    for n in 2..=p.order {
        for vector_at in std::iter::once(None).chain((0..n).map(Some)) {
            for r in (0..n).filter(|&r| Some(r) != vector_at) {
                let mut slots = random_slots(&sp, n, vector_at, rng)?;
                slots[r] = Slot::Alg(sp.scale(&random_nonzero_scalar(rng), &sp.unit()));
                let k = mixed_cumulant(&sp, &slots)?;
                if !out.check(k.is_zero(), || {
                    format!("n = {n}, vector at {vector_at:?}, scalar at {}: cumulant is {k}", r + 1)
                }) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn multilinearity(p: &Resolved, rng: &mut impl Rng, out: &mut Outcome) -> Result<bool> {
    let sp = FormalSpaceB::random_moments(2, 2, p.order, rng)?;
    for n in 1..=p.order {
        for vector_at in std::iter::once(None).chain((0..n).map(Some)) {
            let slots = random_slots(&sp, n, vector_at, rng)?;
            let other = random_slots(&sp, n, vector_at, rng)?;
            for s in 0..n {
                let (c, d) = (random_scalar(rng), random_scalar(rng));
                let mut mixed = slots.clone();
                mixed[s] = slot_combination(&sp, &c, &slots[s], &d, &other[s])?;
                let mut swapped = slots.clone();
                swapped[s] = other[s].clone();
                let lhs = mixed_cumulant(&sp, &mixed)?;
                let rhs = &c * mixed_cumulant(&sp, &slots)? + &d * mixed_cumulant(&sp, &swapped)?;
                if !out.check(lhs == rhs, || format!("n = {n}, slot {}: {lhs} != {rhs}", s + 1)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

pub(crate) fn cumulants(p: &Resolved) -> Result<Outcome> {
    let mut rng = p.rng();
    let mut out = Outcome::default();
    let _ = explicit_formulas(p, &mut rng, &mut out)?
        && round_trips(p, &mut rng, &mut out)?
        && componentwise(p, &mut rng, &mut out)?
        && products_as_arguments(p, &mut rng, &mut out)?
        && scalar_arguments(p, &mut rng, &mut out)?
        && multilinearity(p, &mut rng, &mut out)?;
    if !out.failed() {
        out.summary = format!("all cumulant identities hold up to n = {}", p.order);
    }
    Ok(out)
}

/// `M = R ⍟^(B) ζ′` and `R = M ⍟^(B) ζ′⁻¹` for one pair.
fn moment_relation(sp: &FormalSpaceB, pair: &FPair, n: usize, label: &str, out: &mut Outcome) -> Result<bool> {
    let zeta = SeriesB::zeta(n)?;
    let m = moment_series_b(sp, pair, n)?;
    let r = r_transform_b(sp, pair, n)?;
    let conv = boxconv_b(&r, &zeta)?;
    if !out.check(conv == m, || format!("{label}: M = {m}, R box zeta' = {conv}")) {
        return Ok(false);
    }
    let back = boxconv_b(&m, &boxconv_b_inverse(&zeta)?)?;
    Ok(out.check(back == r, || format!("{label}: R = {r}, M box zeta'^-1 = {back}")))
}

/// Each `NC^(B)(k)` term of the second component of `(R ⍟ ζ′)_k` against its reading in cumulants.
fn terms_by_partition(sp: &FormalSpaceB, pair: &FPair, k: usize, label: &str, out: &mut Outcome) -> Result<bool> {
    let r = r_transform_b(sp, pair, k)?;
    let kappa_a = |len: usize| cumulant_a(sp, &vec![pair.a.clone(); len]);
    let kappa_prime = |len: usize| -> Result<Scalar> {
        (1..=len).try_fold(Scalar::zero(), |acc, m| {
            Ok(acc + cumulant_a_prime(sp, m, &vec![pair.a.clone(); len - 1], &pair.xi)?)
        })
    };
    let mut total = Scalar::zero();
    for (pi, term) in boxconv_b_second_terms(&r, &SeriesB::zeta(k)?, k)? {
        let expected = match zero_block(&pi) {
            Some(z) => {
                let mut e = kappa_prime(z.len() / 2)?;
                for b in pi.block_pairs() {
                    e *= kappa_a(b.len())?;
                }
                e
            }
            None => Scalar::zero(),
        };
        if !out.check(term == expected, || {
            format!("{label}, order {k}: term of {pi} is {term}, cumulants give {expected}")
        }) {
            return Ok(false);
        }
        total += term;
    }
    let x_power = linking_product(sp, &vec![pair.clone(); k]);
    let f = sp.f(&x_power.xi)?;
    Ok(out.check(total == f, || format!("{label}, order {k}: terms sum to {total}, moment is {f}")))
}

pub(crate) fn moment_transform(p: &Resolved) -> Result<Outcome> {
    let mut rng = p.rng();
    let mut out = Outcome::default();
    let n = p.order;
    for s in 0..p.samples {
        let sp = FormalSpaceB::random_moments(1, 1, 2 * n, &mut rng)?;
        let (a, x) = (sp.generator("a1")?, sp.vector_generator("x1")?);
        let a2 = sp.add(&sp.mul(&a, &a), &sp.scale(&int(2), &sp.unit()));
        let x2 = sp.vadd(&sp.act(&a, &x, &sp.unit()), &sp.vscale(&int(-3), &sp.act(&sp.unit(), &x, &a)));
        let candidates = [
            ("(a, x)", LinkingElement::new(a.clone(), x.clone())),
            ("(a^2 + 2, ax - 3xa)", LinkingElement::new(a2, x2)),
            ("(a, 0)", LinkingElement::new(a.clone(), sp.zero_vector())),
        ];
        for (name, pair) in &candidates {
            if !moment_relation(&sp, pair, n, &format!("sample {s}, pair {name}"), &mut out)? {
                return Ok(out);
            }
        }
        let (m, r) = (moment_series_b(&sp, &candidates[2].1, n)?, r_transform_b(&sp, &candidates[2].1, n)?);
        let ok =
            r.second().coeffs().iter().all(Zero::is_zero) && m.first() == boxconv_a(&r.first(), &SeriesA::zeta(n)?)?;
        if !out.check(ok, || format!("sample {s}: type-A specialization fails, M = {m}, R = {r}")) {
            return Ok(out);
        }
        let pair = &candidates[0].1;
        let (k1, kp1) = (cumulant_a(&sp, std::slice::from_ref(&a))?, cumulant_a_prime(&sp, 1, &[], &x)?);
        let expansion = cumulant_a_prime(&sp, 1, std::slice::from_ref(&a), &x)?
            + cumulant_a_prime(&sp, 2, std::slice::from_ref(&a), &x)?
            + &kp1 * &k1
            + &k1 * &kp1;
        let f2 = word(&sp, "a1 x1")? + word(&sp, "x1 a1")?;
        if !out.check(expansion == f2, || format!("sample {s}: f(ax + xa) = {f2}, order-2 expansion {expansion}")) {
            return Ok(out);
        }
        for k in 1..=3.min(n) {
            if !terms_by_partition(&sp, pair, k, &format!("sample {s}"), &mut out)? {
                return Ok(out);
            }
        }
        let fp = make_free_pair(&random_series_b(n, &mut rng)?, &random_series_b(n, &mut rng)?, n)?;
        let sum = LinkingElement::new(
            fp.space.add(&fp.pairs[0].a, &fp.pairs[1].a),
            fp.space.vadd(&fp.pairs[0].xi, &fp.pairs[1].xi),
        );
        for (name, pair) in [("pair 1", &fp.pairs[0]), ("pair 2", &fp.pairs[1]), ("sum", &sum)] {
            if !moment_relation(&fp.space, pair, n, &format!("sample {s}, free {name}"), &mut out)? {
                return Ok(out);
            }
        }
    }
    out.summary = format!("M = R box zeta' for {} spaces at order {n}", p.samples);
    Ok(out)
}

fn random_free_pair(order: usize, rng: &mut impl Rng) -> Result<(SeriesB, SeriesB, FreePair)> {
    let (r1, r2) = (random_series_b(order, rng)?, random_series_b(order, rng)?);
    let fp = make_free_pair(&r1, &r2, order)?;
    Ok((r1, r2, fp))
}

const PERTURBED_WORDS: [&str; 5] = ["a1 x2", "x1 a2", "a1 a2", "a2 x1 a2", "a1 a2 a1 a2"];

pub(crate) fn freeness(p: &Resolved) -> Result<Outcome> {
    let mut rng = p.rng();
    let mut out = Outcome::default();
    let depth = p.order;
    for s in 0..p.samples {
        let (r1, r2, fp) = random_free_pair(depth, &mut rng)?;
        let c = mixed_cumulant_check(&fp.space, &fp.probes(), depth)?;
        let m = free_independence_moment_check(&fp.space, &fp.probes(), depth)?;
        if !out.check(c.passed() && m.passed(), || {
            format!("free sample {s} (R1 = {r1}, R2 = {r2}): cumulants {c}; moments {m}")
        }) {
            return Ok(out);
        }
        for (j, r) in [&r1, &r2].into_iter().enumerate() {
            let got = r_transform_b(&fp.space, &fp.pairs[j], depth)?;
            if !out
                .check(got == *r, || format!("free sample {s}: pair {} has R-transform {got}, prescribed {r}", j + 1))
            {
                return Ok(out);
            }
        }
    }
    for (s, w) in PERTURBED_WORDS.iter().enumerate() {
        let (_, _, fp) = random_free_pair(depth, &mut rng)?;
        let value = word(&fp.space, w)? + Scalar::one();
        let bad = fp.space.with_override(w, value)?;
        let c = mixed_cumulant_check(&bad, &fp.probes(), depth)?;
        let m = free_independence_moment_check(&bad, &fp.probes(), depth)?;
        if !out
            .check(!c.passed() && !m.passed(), || format!("perturbed sample {s} at `{w}`: cumulants {c}; moments {m}"))
        {
            return Ok(out);
        }
    }
    let (r1, r2) = (random_series_b(depth, &mut rng)?, random_series_b(depth, &mut rng)?);
    let components = [("a1".to_string(), None, r1), ("a2".to_string(), None, r2)];
    let sp = FormalSpaceB::from_cumulants(&components, 2 * depth)?;
    let probes: Vec<Probes<FormalSpaceB>> =
        vec![Probes::new(vec![sp.generator("a1")?], vec![]), Probes::new(vec![sp.generator("a2")?], vec![])];
    for (label, space) in [
        ("type-A free", sp.clone()),
        ("type-A perturbed", sp.with_override("a1 a2", word(&sp, "a1 a2")? + Scalar::one())?),
    ] {
        let c = mixed_cumulant_check(&space, &probes, depth)?;
        let m = free_independence_moment_check(&space, &probes, depth)?;
        let expect_free = label == "type-A free";
        if !out.check(c.passed() == expect_free && m.passed() == expect_free, || {
            format!("{label}: cumulants {c}; moments {m}")
        }) {
            return Ok(out);
        }
    }
    out.summary = format!(
        "verdicts agree on {} free, {} perturbed and 2 type-A instances at depth {depth}",
        p.samples,
        PERTURBED_WORDS.len()
    );
    Ok(out)
}

pub(crate) fn free_transforms(p: &Resolved) -> Result<Outcome> {
    let mut rng = p.rng();
    let mut out = Outcome::default();
    let n = p.order;
    let mut unit_pair = vec![DualScalar::new(Scalar::one(), Scalar::one())];
    unit_pair.resize(n, DualScalar::zero());
    let mut real_pair = vec![DualScalar::real(Scalar::one())];
    real_pair.resize(n, DualScalar::zero());
    let mut cases = vec![("fixed".to_string(), Series::new(unit_pair)?, Series::new(real_pair)?)];
    for s in 0..p.samples {
        cases.push((format!("sample {s}"), random_series_b(n, &mut rng)?, random_series_b(n, &mut rng)?));
    }
    for (label, r1, r2) in cases {
        let fp = make_free_pair(&r1, &r2, n)?;
        let report = mixed_cumulant_check(&fp.space, &fp.probes(), n)?;
        let Some(cert) = report.certificate() else {
            out.check(false, || format!("{label}: pairs are not free: {report}"));
            return Ok(out);
        };
        let (sum, product) = r_sum_product(&fp.space, &fp.pairs[0], &fp.pairs[1], n, cert)?;
        let want_sum = r1.checked_add(&r2)?;
        if !out.check(sum == want_sum, || format!("{label}: R of the sum is {sum}, R1 + R2 = {want_sum}")) {
            return Ok(out);
        }
        let want_product = boxconv_b(&r1, &r2)?;
        if !out.check(product == want_product, || {
            format!("{label}: R of the product is {product}, R1 box R2 = {want_product}")
        }) {
            return Ok(out);
        }
        let type_a = boxconv_a(&r1.first(), &r2.first())?;
        if !out
            .check(product.first() == type_a, || format!("{label}: first components {} vs {type_a}", product.first()))
        {
            return Ok(out);
        }
        let joint = linking_product(&fp.space, &[fp.pairs[0].clone(), fp.pairs[1].clone()]);
        let m = moment_series_b(&fp.space, &joint, n)?;
        let m2 = moment_series_b(&fp.space, &fp.pairs[1], n)?;
        let via = boxconv_b(&r1, &m2)?;
        if !out.check(m == via, || format!("{label}: M = {m}, R1 box M2 = {via}")) {
            return Ok(out);
        }
        if n > 1 {
            let shallow = mixed_cumulant_check(&fp.space, &fp.probes(), n - 1)?.certificate().unwrap();
            let refused =
                matches!(r_sum_product(&fp.space, &fp.pairs[0], &fp.pairs[1], n, shallow), Err(Error::Precondition(_)));
            if !out.check(refused, || format!("{label}: a depth {} certificate was accepted at order {n}", n - 1)) {
                return Ok(out);
            }
        }
    }
    out.summary = format!("sum and product R-transforms match at order {n}");
    Ok(out)
}
