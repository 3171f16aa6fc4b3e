use num_traits::Zero;

use super::{Outcome, Resolved};
use crate::cayley::{leq, SignedPermutation};
use crate::error::{Error, Result};
use crate::scalar::{int, random_nonzero_scalar, Scalar};
use crate::series::{
    boxconv_a, boxconv_a_dual, boxconv_b, boxconv_b_inverse, bridge_check_a, bridge_check_b, bridge_check_b_full_group,
    random_series_a, random_series_b, DualScalar, Series, SeriesB,
};

pub(crate) fn bridge(p: &Resolved) -> Result<Outcome> {
    let mut rng = p.rng();
    let mut out = Outcome::default();
    for s in 0..p.samples {
        let (a, b) = (random_series_a(p.n, &mut rng)?, random_series_a(p.n, &mut rng)?);
        let rep = bridge_check_a(&a, &b, p.n)?;
        if !out.check(rep.holds(), || format!("sample {s}: alpha = {a}, beta = {b}, mismatch {:?}", rep.mismatch)) {
            return Ok(out);
        }
        let (a, b) = (random_series_b(p.n, &mut rng)?, random_series_b(p.n, &mut rng)?);
        let rep = bridge_check_b(&a, &b, p.n)?;
        if !out.check(rep.holds(), || {
            let (t, l, r) = rep.mismatch.clone().unwrap();
            format!("sample {s}: alpha = {a}, beta = {b}, at {t}: convolution {l}, multiplicative {r}")
        }) {
            return Ok(out);
        }
    }
    out.summary = format!("{} sample pairs agree on S_{1} and on [e, omega] in W_{1}", p.samples, p.n);
    Ok(out)
}

fn random_nonzero_series_b(order: usize, rng: &mut impl rand::Rng) -> Result<SeriesB> {
    Series::new((0..order).map(|_| DualScalar::new(random_nonzero_scalar(rng), random_nonzero_scalar(rng))).collect())
}

pub(crate) fn bridge_negative(p: &Resolved) -> Result<Outcome> {
    let mut rng = p.rng();
    let mut out = Outcome::default();
    let omega = SignedPermutation::long_cycle(p.n)?;
    for s in 0..p.samples {
        let (a, b) = (random_nonzero_series_b(p.n, &mut rng)?, random_nonzero_series_b(p.n, &mut rng)?);
        let rep = bridge_check_b_full_group(&a, &b, p.n)?;
        let off_interval = match &rep.mismatch {
            Some((t, _, _)) => !leq(t, &omega)?,
            None => false,
        };
        if !out.check(off_interval, || {
            format!("sample {s}: alpha = {a}, beta = {b} satisfy the identity on all of W_{}", p.n)
        }) {
            return Ok(out);
        }
    }
    out.summary = format!("every sample violates the identity outside [e, omega] in W_{}", p.n);
    Ok(out)
}

pub(crate) fn boxconv_b_dual(p: &Resolved) -> Result<Outcome> {
    let mut rng = p.rng();
    let mut out = Outcome::default();
    for s in 0..p.samples {
        let (f, g) = (random_series_b(p.order, &mut rng)?, random_series_b(p.order, &mut rng)?);
        let (lit, dual) = (boxconv_b(&f, &g)?, boxconv_a_dual(&f, &g)?);
        if !out.check(lit == dual, || format!("sample {s}: f = {f}, g = {g}: NC^(B) sum {lit}, dual {dual}")) {
            return Ok(out);
        }
    }
    out.summary = format!("{} samples agree to order {}", p.samples, p.order);
    Ok(out)
}

pub(crate) fn boxconv_b_algebra(p: &Resolved) -> Result<Outcome> {
    let mut rng = p.rng();
    let mut out = Outcome::default();
    let n = p.order;
    let delta = SeriesB::delta(n)?;
    let zeta = SeriesB::zeta(n)?;
    let zeta_inv = boxconv_b_inverse(&zeta)?;
    let ok = boxconv_b(&zeta, &zeta_inv)? == delta && boxconv_b(&zeta_inv, &zeta)? == delta;
    if !out.check(ok, || format!("zeta' inverse {zeta_inv} does not invert zeta'")) {
        return Ok(out);
    }
    for s in 0..p.samples {
        let f = random_series_b(n, &mut rng)?;
        let g = random_series_b(n, &mut rng)?;
        let h = random_series_b(n, &mut rng)?;
        let left = boxconv_b(&boxconv_b(&f, &g)?, &h)?;
        let right = boxconv_b(&f, &boxconv_b(&g, &h)?)?;
        if !out.check(left == right, || format!("sample {s}: ({f} box {g}) box {h} = {left}, other grouping {right}")) {
            return Ok(out);
        }
        let ok = boxconv_b(&f, &delta)? == f && boxconv_b(&delta, &f)? == f;
        if !out.check(ok, || format!("sample {s}: Delta' is not a unit for {f}")) {
            return Ok(out);
        }
        let round = boxconv_b(&boxconv_b(&f, &zeta)?, &zeta_inv)?;
        if !out.check(round == f, || format!("sample {s}: zeta' does not cancel from {f} box zeta'")) {
            return Ok(out);
        }
        let mut coeffs = f.coeffs().to_vec();
        coeffs[0] = DualScalar::new(random_nonzero_scalar(&mut rng), coeffs[0].double_prime.clone());
        let inv_source = Series::new(coeffs)?;
        let inv = boxconv_b_inverse(&inv_source)?;
        let ok = boxconv_b(&inv_source, &inv)? == delta && boxconv_b(&inv, &inv_source)? == delta;
        if !out.check(ok, || format!("sample {s}: inverse {inv} of {inv_source} fails")) {
            return Ok(out);
        }
        let mut coeffs = f.coeffs().to_vec();
        coeffs[0] = DualScalar::new(Scalar::zero(), coeffs[0].double_prime.clone());
        let singular = Series::new(coeffs)?;
        let refused = matches!(boxconv_b_inverse(&singular), Err(Error::NotInvertible(_)));
        if !out.check(refused, || format!("sample {s}: {singular} has a zero leading coefficient but was inverted")) {
            return Ok(out);
        }
    }
    out.summary = format!("{} triples at order {n}", p.samples);
    Ok(out)
}

pub(crate) fn boxconv_a_closed_forms(p: &Resolved) -> Result<Outcome> {
    let mut rng = p.rng();
    let mut out = Outcome::default();
    for s in 0..p.samples {
        let (a, b) = (random_series_a(3, &mut rng)?, random_series_a(3, &mut rng)?);
        let g = boxconv_a(&a, &b)?;
        let (a1, a2, a3) = (a.coeff(1), a.coeff(2), a.coeff(3));
        let (b1, b2, b3) = (b.coeff(1), b.coeff(2), b.coeff(3));
        let expected =
            [a1 * b1, a2 * b1 * b1 + a1 * a1 * b2, a3 * b1 * b1 * b1 + int(3) * a1 * a2 * b1 * b2 + a1 * a1 * a1 * b3];
        if !out.check(g.coeffs() == expected, || format!("sample {s}: {a} box {b} = {g}")) {
            return Ok(out);
        }
    }
    out.summary = format!("closed forms hold at {} random points", p.samples);
    Ok(out)
}
