use std::collections::{HashMap, HashSet, VecDeque};

use typeb::cayley::{
    cayley_distances, covers_by_length, cycle_factorization_b, interval, interval_factorize, leq, parse_permutation,
    parse_signed_permutation, restricted_convolution, FactorKind, GroupFunction,
};
use typeb::scalar::{int, random_scalar};
use typeb::{Error, MarkedElement, Permutation, SignedPermutation};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Signed images of `1..n`, composed as `(a·b)(x) = a(b(x))`.
fn apply(p: &[i32], x: i32) -> i32 {
    x.signum() * p[x.unsigned_abs() as usize - 1]
}

fn compose(a: &[i32], b: &[i32]) -> Vec<i32> {
    (1..=a.len() as i32).map(|x| apply(a, apply(b, x))).collect()
}

fn reflections(n: usize, signed: bool) -> Vec<Vec<i32>> {
    let id: Vec<i32> = (1..=n as i32).collect();
    let mut out = Vec::new();
    for i in 0..n {
        if signed {
            let mut r = id.clone();
            r[i] = -r[i];
            out.push(r);
        }
        for j in i + 1..n {
            let mut r = id.clone();
            r.swap(i, j);
            out.push(r.clone());
            if signed {
                out.push(r.iter().enumerate().map(|(k, &v)| if k == i || k == j { -v } else { v }).collect());
            }
        }
    }
    out
}

fn bfs(n: usize, signed: bool) -> HashMap<Vec<i32>, usize> {
    let gens = reflections(n, signed);
    let id: Vec<i32> = (1..=n as i32).collect();
    let mut dist = HashMap::from([(id.clone(), 0)]);
    let mut queue = VecDeque::from([id]);
    while let Some(a) = queue.pop_front() {
        let d = dist[&a];
        for r in &gens {
            let c = compose(&a, r);
            if !dist.contains_key(&c) {
                dist.insert(c.clone(), d + 1);
                queue.push_back(c);
            }
        }
    }
    dist
}

#[test]
fn word_length_is_bfs_distance() {
    for n in 1..=4 {
        let dist = bfs(n, false);
        assert_eq!(dist.len(), (1..=n).product::<usize>());
        for (img, d) in &dist {
            let images: Vec<usize> = img.iter().map(|&x| x as usize).collect();
            assert_eq!(Permutation::new(&images).unwrap().word_length(), *d, "{img:?}");
        }
        assert_eq!(cayley_distances::<Permutation>(n).len(), dist.len());
    }
    for n in 1..=3 {
        let dist = bfs(n, true);
        assert_eq!(dist.len(), (1..=n).product::<usize>() << n);
        for (img, d) in &dist {
            assert_eq!(SignedPermutation::new(img).unwrap().word_length(), *d, "{img:?}");
        }
        assert_eq!(SignedPermutation::generators(n).len(), n * n);
    }
}

#[test]
fn composition_convention() {
    let a = parse_permutation("(1,2)(3,4)", 4).unwrap();
    let c = Permutation::long_cycle(4).unwrap();
    assert_eq!(a.compose(&c).unwrap().to_string(), "(2,4)");
    let e = Permutation::identity(4);
    assert_eq!(a.compose(&e).unwrap(), a);
    assert_eq!(e.compose(&a).unwrap(), a);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let all = SignedPermutation::all_elements(3);
    for _ in 0..50 {
        use rand::seq::SliceRandom;
        let (x, y) = (all.choose(&mut rng).unwrap(), all.choose(&mut rng).unwrap());
        let lhs = x.compose(y).unwrap().inverse();
        assert_eq!(lhs, y.inverse().compose(&x.inverse()).unwrap());
        for v in 1..=3 {
            assert_eq!(x.compose(y).unwrap().apply(v), x.apply(y.apply(v)));
        }
    }
    let small = SignedPermutation::identity(2);
    assert!(matches!(small.compose(&all[0]), Err(Error::Domain(_))));
}

#[test]
fn word_length_examples() {
    assert_eq!(Permutation::identity(5).word_length(), 0);
    assert_eq!(SignedPermutation::identity(5).word_length(), 0);
    let t = parse_permutation("(1,3,4)(2,6)(5)", 6).unwrap();
    assert_eq!(t.word_length(), 3);
    let tau = parse_signed_permutation("(1,-1)(2,-2)", 2).unwrap();
    assert_eq!(tau.word_length(), 2);
}

#[test]
fn order_examples() {
    let all = SignedPermutation::all_elements(3);
    let e = SignedPermutation::identity(3);
    for b in &all {
        assert!(leq(&e, b).unwrap());
        for a in &all {
            if leq(a, b).unwrap() {
                assert!(a.word_length() <= b.word_length());
            }
        }
    }
    let gamma = SignedPermutation::paired_long_cycle(2).unwrap();
    let omega = SignedPermutation::long_cycle(2).unwrap();
    assert_eq!(gamma.compose(&SignedPermutation::sign_change(2, 2).unwrap()).unwrap(), omega);
    assert!(leq(&gamma, &omega).unwrap());
}

#[test]
fn covers_examples() {
    for n in 1..=3 {
        let e = SignedPermutation::identity(n);
        for r in SignedPermutation::generators(n) {
            assert!(e.covers(&r).unwrap());
        }
        let e = Permutation::identity(n);
        for r in Permutation::generators(n) {
            assert!(e.covers(&r).unwrap());
        }
    }
    // a non-invariant orbit X containing 1 and -2 splits into two invariant orbits
    let a = parse_signed_permutation("(1,-2)(-1,2)", 2).unwrap();
    let r = SignedPermutation::paired_transposition(2, 1, 2).unwrap();
    let b = a.compose(&r).unwrap();
    assert_eq!(b.invariant_orbit_count(), 2);
    assert!(a.covers(&b).unwrap());
    let all = SignedPermutation::all_elements(3);
    for x in &all {
        for y in &all {
            assert_eq!(x.covers(y).unwrap(), covers_by_length(x, y).unwrap(), "{x} {y}");
        }
    }
}

#[test]
fn interval_examples() {
    assert_eq!(interval(&Permutation::identity(4)), vec![Permutation::identity(4)]);
    assert_eq!(interval(&Permutation::long_cycle(4).unwrap()).len(), 14);
    assert_eq!(interval(&SignedPermutation::long_cycle(2).unwrap()).len(), 6);
    let omega = SignedPermutation::long_cycle(3).unwrap();
    let iv = interval(&omega);
    let brute: HashSet<SignedPermutation> =
        SignedPermutation::all_elements(3).into_iter().filter(|t| leq(t, &omega).unwrap()).collect();
    assert_eq!(iv.iter().cloned().collect::<HashSet<_>>(), brute);
    assert!(iv.windows(2).all(|w| w[0].word_length() <= w[1].word_length()));
}

#[test]
fn census_examples() {
    assert_eq!(Permutation::identity(4).census().k, vec![4, 0, 0, 0]);
    let omega = SignedPermutation::long_cycle(2).unwrap().census();
    assert_eq!((omega.k, omega.l), (vec![0, 0], vec![0, 1]));
    let tau = parse_signed_permutation("(1,-1)(2,-2)", 2).unwrap().census();
    assert_eq!((tau.k, tau.l), (vec![0, 0], vec![2, 0]));
    let pair = parse_signed_permutation("(1,-2)(2,-1)", 3).unwrap().census();
    assert_eq!((pair.k, pair.l), (vec![1, 1, 0], vec![0, 0, 0]));
}

#[test]
fn cycle_factorization_examples() {
    let omega = SignedPermutation::long_cycle(3).unwrap();
    assert_eq!(cycle_factorization_b(&omega).unwrap().factors, vec![omega.clone()]);
    let tau = parse_signed_permutation("(1,-1)(2,-2)", 2).unwrap();
    let f = cycle_factorization_b(&tau).unwrap();
    let got: HashSet<_> = f.factors.iter().cloned().collect();
    let want =
        HashSet::from([SignedPermutation::sign_change(2, 1).unwrap(), SignedPermutation::sign_change(2, 2).unwrap()]);
    assert_eq!(got, want);
    assert_eq!(f.factors.iter().map(|t| t.word_length()).sum::<usize>(), 2);
    assert!(matches!(cycle_factorization_b(&SignedPermutation::identity(2)), Err(Error::Domain(_))));
    for t in interval(&omega).into_iter().filter(|t| !t.is_identity()) {
        let f = cycle_factorization_b(&t).unwrap();
        assert_eq!(f.factors.iter().map(|x| x.word_length()).sum::<usize>(), t.word_length(), "{t}");
        let product = f.factors.iter().fold(SignedPermutation::identity(3), |acc, x| acc.compose(x).unwrap());
        assert_eq!(product, t);
    }
}

#[test]
fn interval_factorization_predicts_sizes() {
    let n = 4;
    let omega = SignedPermutation::long_cycle(n).unwrap();
    let f = interval_factorize(&omega).unwrap();
    assert_eq!(f.len(), 1);
    assert_eq!(f[0].kind, FactorKind::B(n));
    let gamma = SignedPermutation::paired_long_cycle(n).unwrap();
    let f = interval_factorize(&gamma).unwrap();
    assert_eq!(f.iter().map(|x| x.kind).collect::<Vec<_>>(), vec![FactorKind::A(n)]);
    for t in interval(&omega).into_iter().filter(|t| !t.is_identity()) {
        let predicted: u128 = interval_factorize(&t).unwrap().iter().map(|x| x.kind.cardinality()).product();
        assert_eq!(interval(&t).len() as u128, predicted, "{t}");
    }
    let outside =
        SignedPermutation::sign_change(n, 1).unwrap().compose(&SignedPermutation::sign_change(n, 2).unwrap()).unwrap();
    assert!(matches!(interval_factorize(&outside), Err(Error::Domain(_))));
}

#[test]
fn restricted_convolution_examples() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let all = Permutation::all_elements(3);
    let u = GroupFunction::from_fn(3, all.clone(), |_| random_scalar(&mut rng)).unwrap();
    let v = GroupFunction::from_fn(3, all.clone(), |_| random_scalar(&mut rng)).unwrap();
    let w = restricted_convolution(&u, &v).unwrap();
    let e = Permutation::identity(3);
    assert_eq!(w.get(&e), u.get(&e) * v.get(&e));
    for x in Permutation::generators(3) {
        assert_eq!(w.get(&x), u.get(&e) * v.get(&x) + u.get(&x) * v.get(&e));
    }
    assert_eq!(restricted_convolution(&u, &GroupFunction::delta(3)).unwrap(), u);
    assert_eq!(restricted_convolution(&GroupFunction::delta(3), &u).unwrap(), u);
    let mut f = GroupFunction::zero(3);
    f.set(e.clone(), int(0)).unwrap();
    assert_eq!(f.support_len(), 0);
}

#[test]
fn parsing_round_trips() {
    for t in SignedPermutation::all_elements(3) {
        assert_eq!(parse_signed_permutation(&t.to_string(), 3).unwrap(), t);
    }
    for t in Permutation::all_elements(4) {
        assert_eq!(parse_permutation(&t.to_string(), 4).unwrap(), t);
    }
    assert!(parse_permutation("(1,2", 3).is_err());
    assert!(parse_permutation("(1,5)", 3).is_err());
}
