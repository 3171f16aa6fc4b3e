use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use typeb::freeprob::{
    cumulant_a, cumulant_a_prime, cumulant_b, cumulant_b_componentwise, cumulants_from_moments_a, expectation,
    free_independence_moment_check, linking_product, make_free_pair, mixed_cumulant, mixed_cumulant_check,
    moment_series_b, moments_from_cumulants_a, r_sum_product, r_transform_b, FormalSpaceB, Matrix, MatrixSpaceA,
    Probes, Slot,
};
use typeb::scalar::{int, random_scalar};
use typeb::series::{boxconv_b, boxconv_b_inverse, parse_series_b, random_series_b};
use typeb::{DualScalar, Error, LinkingElement, Scalar, SeriesB, SpaceA, SpaceB};

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(23)
}

fn random_space(bound: usize) -> FormalSpaceB {
    FormalSpaceB::random_moments(2, 2, bound, &mut rng()).unwrap()
}

#[test]
fn matrix_cumulants() {
    let space = MatrixSpaceA::new(2);
    let a = Matrix::from_rows(&[vec![1, 0], vec![0, -1]]).unwrap();
    let got: Vec<Scalar> = (1..=4).map(|n| cumulant_a(&space, &vec![a.clone(); n]).unwrap()).collect();
    assert_eq!(got, vec![int(0), int(1), int(0), int(-1)]);

    let space = MatrixSpaceA::new(3);
    let m1 = Matrix::from_rows(&[vec![1, 2, 0], vec![0, -1, 3], vec![2, 0, 1]]).unwrap();
    let m2 = Matrix::from_rows(&[vec![0, 1, 1], vec![1, 0, -2], vec![4, 1, 0]]).unwrap();
    let m3 = Matrix::from_rows(&[vec![2, 0, -1], vec![1, 1, 0], vec![0, 3, 1]]).unwrap();
    let phi = |xs: &[&Matrix]| space.phi(&xs.iter().fold(space.unit(), |acc, x| space.mul(&acc, x))).unwrap();
    assert_eq!(cumulant_a(&space, std::slice::from_ref(&m1)).unwrap(), phi(&[&m1]));
    assert_eq!(cumulant_a(&space, &[m1.clone(), m2.clone()]).unwrap(), phi(&[&m1, &m2]) - phi(&[&m1]) * phi(&[&m2]));
    let want = phi(&[&m1, &m2, &m3])
        - phi(&[&m1]) * phi(&[&m2, &m3])
        - phi(&[&m2]) * phi(&[&m1, &m3])
        - phi(&[&m3]) * phi(&[&m1, &m2])
        + int(2) * phi(&[&m1]) * phi(&[&m2]) * phi(&[&m3]);
    assert_eq!(cumulant_a(&space, &[m1, m2, m3]).unwrap(), want);
    assert!(matches!(cumulant_a(&space, &[]), Err(Error::Domain(_))));
}

#[test]
fn moment_cumulant_examples() {
    let semicircle = moments_from_cumulants_a(&[int(0), int(1), int(0), int(0), int(0), int(0)]).unwrap();
    assert_eq!(semicircle, vec![int(0), int(1), int(0), int(2), int(0), int(5)]);
    let point = moments_from_cumulants_a(&[int(1), int(0), int(0), int(0)]).unwrap();
    assert!(point.iter().all(|m| *m == int(1)));
    let mut r = rng();
    let kappa: Vec<Scalar> = (0..6).map(|_| random_scalar(&mut r)).collect();
    assert_eq!(cumulants_from_moments_a(&moments_from_cumulants_a(&kappa).unwrap()).unwrap(), kappa);
}

#[test]
fn linking_product_examples() {
    let s = random_space(3);
    let p1 = LinkingElement::new(s.generator("a1").unwrap(), s.vector_generator("x1").unwrap());
    let p2 = LinkingElement::new(s.generator("a2").unwrap(), s.vector_generator("x2").unwrap());
    let single = linking_product(&s, std::slice::from_ref(&p1));
    assert_eq!((single.a, single.xi), (p1.a.clone(), p1.xi.clone()));
    let unit = LinkingElement::new(s.unit(), s.zero_vector());
    let left = linking_product(&s, &[unit, p1.clone()]);
    assert_eq!((left.a, left.xi), (p1.a.clone(), p1.xi.clone()));
    let prod = linking_product(&s, &[p1.clone(), p2.clone()]);
    assert_eq!(prod.a, s.word_elem("a1 a2").unwrap());
    assert_eq!(prod.xi, s.vadd(&s.word_vector("a1 x2").unwrap(), &s.word_vector("x1 a2").unwrap()));
    assert_eq!(
        expectation(&s, &prod).unwrap(),
        DualScalar::new(
            s.phi(&s.word_elem("a1 a2").unwrap()).unwrap(),
            s.f(&s.word_vector("a1 x2").unwrap()).unwrap() + s.f(&s.word_vector("x1 a2").unwrap()).unwrap()
        )
    );
}

#[test]
fn low_order_type_b_formulas() {
    let s = random_space(4);
    let phi = |w: &str| s.phi(&s.word_elem(w).unwrap()).unwrap();
    let f = |w: &str| s.f(&s.word_vector(w).unwrap()).unwrap();
    let (a1, a2) = (s.generator("a1").unwrap(), s.generator("a2").unwrap());
    let (x1, x2) = (s.vector_generator("x1").unwrap(), s.vector_generator("x2").unwrap());

    assert_eq!(cumulant_a_prime(&s, 1, std::slice::from_ref(&a2), &x1).unwrap(), f("x1 a2") - f("x1") * phi("a2"));
    assert_eq!(cumulant_a_prime(&s, 2, std::slice::from_ref(&a1), &x2).unwrap(), f("a1 x2") - phi("a1") * f("x2"));
    let want = f("a1 x1 a2") - phi("a1") * f("x1 a2") - f("a1 x1") * phi("a2") - phi("a1 a2") * f("x1")
        + int(2) * phi("a1") * f("x1") * phi("a2");
    assert_eq!(cumulant_a_prime(&s, 2, &[a1.clone(), a2.clone()], &x1).unwrap(), want);

    let p1 = LinkingElement::new(a1.clone(), x1.clone());
    let p2 = LinkingElement::new(a2.clone(), x2.clone());
    assert_eq!(cumulant_b(&s, std::slice::from_ref(&p1)).unwrap(), DualScalar::new(phi("a1"), f("x1")));
    let k2 = cumulant_b(&s, &[p1.clone(), p2.clone()]).unwrap();
    assert_eq!(k2.prime, phi("a1 a2") - phi("a1") * phi("a2"));
    assert_eq!(k2.double_prime, f("a1 x2") - phi("a1") * f("x2") + f("x1 a2") - f("x1") * phi("a2"));

    for n in 1..=4 {
        let args: Vec<_> = (0..n).map(|i| if i % 3 == 1 { p2.clone() } else { p1.clone() }).collect();
        assert_eq!(cumulant_b(&s, &args).unwrap(), cumulant_b_componentwise(&s, &args).unwrap());
    }
}

#[test]
fn scalar_arguments_kill_cumulants() {
    let s = random_space(4);
    let a1 = s.generator("a1").unwrap();
    let x1 = s.vector_generator("x1").unwrap();
    let c = s.scale(&int(3), &s.unit());
    for n in 2..=4 {
        for m in 1..=n {
            for pos in 0..n - 1 {
                let mut args = vec![a1.clone(); n - 1];
                args[pos] = c.clone();
                assert!(cumulant_a_prime(&s, m, &args, &x1).unwrap().is_zero());
            }
        }
        let mut args = vec![a1.clone(); n];
        args[0] = c.clone();
        assert!(cumulant_a(&s, &args).unwrap().is_zero());
    }
}

#[test]
fn formal_space_errors() {
    let s = random_space(3);
    let long = s.parse_word("a1 a1 a1 a1").unwrap();
    assert!(matches!(s.moment(&long), Err(Error::BeyondDegreeBound { bound: 3, .. })));
    assert!(matches!(s.parse_word("x1 a1 x2"), Err(Error::Domain(_))));
    assert!(matches!(s.parse_word("a9"), Err(Error::Parse(_))));
    let (a1, x1, x2) =
        (s.generator("a1").unwrap(), s.vector_generator("x1").unwrap(), s.vector_generator("x2").unwrap());
    let two = [Slot::Vector(x1.clone()), Slot::Alg(a1.clone()), Slot::Vector(x2)];
    assert!(matches!(mixed_cumulant(&s, &two), Err(Error::Domain(_))));
    assert!(matches!(cumulant_a_prime(&s, 3, std::slice::from_ref(&a1), &x1), Err(Error::Domain(_))));
    assert!(matches!(cumulant_a_prime(&s, 0, &[a1], &x1), Err(Error::Domain(_))));
    let partial = FormalSpaceB::from_moments(vec!["a".into()], vec!["x".into()], 1, &[("a".to_string(), int(1))]);
    assert!(matches!(partial, Err(Error::MissingMoment(w)) if w == "x"));
}

#[test]
fn json_spaces() {
    let table = r#"{"algebra":["a"],"degree_bound":2,"moments":[
        {"word":"a","value":1},{"word":"x","value":"1/2"},{"word":"a a","value":3},
        {"word":"a x","value":2},{"word":"x a","value":-1}]}"#;
    let s = FormalSpaceB::from_json(table).unwrap();
    assert_eq!(s.vector_names(), ["x"]);
    assert_eq!(s.f(&s.word_vector("x").unwrap()).unwrap(), Scalar::new(1.into(), 2.into()));
    let again = FormalSpaceB::from_description(&s.describe()).unwrap();
    assert_eq!(again.describe(), s.describe());

    let pairs = r#"{"degree_bound":6,"pairs":[{"pair":1,"R":[[1,1],[0,0]]},{"pair":2,"R":[["1","0"],[0,0]]}]}"#;
    let s = FormalSpaceB::from_json(pairs).unwrap();
    assert_eq!(s.algebra_names(), ["a_1", "a_2"]);
    assert_eq!(s.prescriptions().unwrap().len(), 2);
    let p = LinkingElement::new(s.generator("a_1").unwrap(), s.vector_generator("x_1").unwrap());
    assert_eq!(r_transform_b(&s, &p, 3).unwrap(), parse_series_b("[[1,1],[0,0],[0,0]]").unwrap());
    assert!(matches!(FormalSpaceB::from_json("{"), Err(Error::Parse(_))));
}

#[test]
fn free_pair_construction() {
    let mut r = rng();
    let (r1, r2) = (random_series_b(5, &mut r).unwrap(), random_series_b(5, &mut r).unwrap());
    let fp = make_free_pair(&r1, &r2, 5).unwrap();
    assert_eq!(r_transform_b(&fp.space, &fp.pairs[0], 5).unwrap(), r1);
    assert_eq!(r_transform_b(&fp.space, &fp.pairs[1], 5).unwrap(), r2);
    let report = mixed_cumulant_check(&fp.space, &fp.probes(), 4).unwrap();
    assert!(report.passed(), "{report}");
    assert!(free_independence_moment_check(&fp.space, &fp.probes(), 4).unwrap().passed());

    let m = moment_series_b(&fp.space, &fp.pairs[0], 5).unwrap();
    let zeta = SeriesB::zeta(5).unwrap();
    assert_eq!(m, boxconv_b(&r1, &zeta).unwrap());
    assert_eq!(boxconv_b(&m, &boxconv_b_inverse(&zeta).unwrap()).unwrap(), r1);

    let f = |w: &str| fp.space.f(&fp.space.word_vector(w).unwrap()).unwrap();
    let phi = |w: &str| fp.space.phi(&fp.space.word_elem(w).unwrap()).unwrap();
    assert_eq!(f("a1 x2"), phi("a1") * f("x2"));
    let bad = fp.space.with_override("a1 x2", phi("a1") * f("x2") + int(1)).unwrap();
    let probes: Vec<Probes<FormalSpaceB>> =
        fp.pairs.iter().map(|p| Probes::new(vec![p.a.clone()], vec![p.xi.clone()])).collect();
    let report = mixed_cumulant_check(&bad, &probes, 3).unwrap();
    assert!(!report.passed());
    assert!(report.witness.is_some() && report.certificate().is_none());
    assert!(!free_independence_moment_check(&bad, &probes, 3).unwrap().passed());
}

#[test]
fn sum_and_product_transforms() {
    let r1 = parse_series_b("[[1,1],[0,0],[0,0],[0,0],[0,0]]").unwrap();
    let r2 = parse_series_b("[[1,0],[0,0],[0,0],[0,0],[0,0]]").unwrap();
    let fp = make_free_pair(&r1, &r2, 5).unwrap();
    let cert = mixed_cumulant_check(&fp.space, &fp.probes(), 5).unwrap().certificate().unwrap();
    assert_eq!(cert.depth(), 5);
    let (sum, product) = r_sum_product(&fp.space, &fp.pairs[0], &fp.pairs[1], 5, cert).unwrap();
    assert_eq!(sum, r1.checked_add(&r2).unwrap());
    assert_eq!(product, parse_series_b("[[1,1],[0,0],[0,0],[0,0],[0,0]]").unwrap());

    let shallow = mixed_cumulant_check(&fp.space, &fp.probes(), 3).unwrap().certificate().unwrap();
    assert!(matches!(r_sum_product(&fp.space, &fp.pairs[0], &fp.pairs[1], 5, shallow), Err(Error::Precondition(_))));
    assert!(free_independence_moment_check(&fp.space, &fp.probes(), 3).unwrap().certificate().is_none());
}

#[test]
fn random_sum_and_product_transforms() {
    let mut r = rng();
    let (r1, r2) = (random_series_b(4, &mut r).unwrap(), random_series_b(4, &mut r).unwrap());
    let fp = make_free_pair(&r1, &r2, 4).unwrap();
    let cert = mixed_cumulant_check(&fp.space, &fp.probes(), 4).unwrap().certificate().unwrap();
    let (sum, product) = r_sum_product(&fp.space, &fp.pairs[0], &fp.pairs[1], 4, cert).unwrap();
    assert_eq!(sum, r1.checked_add(&r2).unwrap());
    assert_eq!(product, boxconv_b(&r1, &r2).unwrap());
    assert_eq!(product.first(), typeb::series::boxconv_a(&r1.first(), &r2.first()).unwrap());
    let m = moment_series_b(&fp.space, &linking_product(&fp.space, &[fp.pairs[0].clone(), fp.pairs[1].clone()]), 4)
        .unwrap();
    let m2 = moment_series_b(&fp.space, &fp.pairs[1], 4).unwrap();
    assert_eq!(m, boxconv_b(&r1, &m2).unwrap());
}
