use std::collections::HashSet;

use typeb::cayley::{interval, interval_factorize, leq, MarkedElement};
use typeb::embed::{iota_a, iota_b, iota_gamma, iota_inverse_a, iota_inverse_b};
use typeb::partitions::{enumerate_nca, enumerate_ncb, refinement_leq};
use typeb::{
    DistinguishedElements, Error, NcPartitionA, NcPartitionB, NonCrossing, Permutation, Side, SignedPermutation,
};

#[test]
fn distinguished_elements() {
    for n in 1..=5 {
        let d = DistinguishedElements::new(n).unwrap();
        assert_eq!(d.c.word_length(), n - 1);
        assert_eq!(d.omega.word_length(), n);
        assert!(leq(&d.gamma, &d.omega).unwrap());
    }
}

#[test]
fn iota_examples() {
    for n in 1..=4 {
        let d = DistinguishedElements::new(n).unwrap();
        assert_eq!(iota_a(&NcPartitionA::bottom(n).unwrap()), Permutation::identity(n));
        assert_eq!(iota_a(&NcPartitionA::top(n).unwrap()), d.c);
        assert_eq!(iota_b(&NcPartitionB::bottom(n).unwrap()), SignedPermutation::identity(n));
        assert_eq!(iota_b(&NcPartitionB::top(n).unwrap()), d.omega);
        assert_eq!(iota_gamma(&NcPartitionA::top(n).unwrap()), d.gamma);
        assert_eq!(iota_gamma(&NcPartitionA::bottom(n).unwrap()), SignedPermutation::identity(n));
        assert_eq!(iota_inverse_a(&Permutation::identity(n)).unwrap(), NcPartitionA::bottom(n).unwrap());
        assert_eq!(iota_inverse_a(&d.c).unwrap(), NcPartitionA::top(n).unwrap());
    }
    let p: NcPartitionA = "{(1,2),(3,4)}".parse().unwrap();
    assert_eq!(iota_a(&p).to_string(), "(1,2)(3,4)");
    let c = Permutation::long_cycle(4).unwrap();
    let kr = iota_a(&p).inverse().compose(&c).unwrap();
    assert_eq!(kr.to_string(), "(2,4)");
    assert_eq!(iota_a(&p.kreweras(Side::Right)), kr);
    let pi: NcPartitionB = "{(1,2,-1,-2),(3,4),(-3,-4)}".parse().unwrap();
    let want = SignedPermutation::from_cycles(4, &[vec![1, 2, -1, -2], vec![3, 4], vec![-3, -4]]).unwrap();
    assert_eq!(iota_b(&pi), want);
}

#[test]
fn iota_inverse_rejects_elements_outside_the_interval() {
    let t = Permutation::from_cycles(4, &[vec![1, 3, 2]]).unwrap();
    assert!(matches!(iota_inverse_a(&t), Err(Error::Domain(_))));
    let tau = SignedPermutation::from_cycles(2, &[vec![1, -1], vec![2, -2]]).unwrap();
    assert!(matches!(iota_inverse_b(&tau), Err(Error::Domain(_))));
}

#[test]
fn type_a_order_isomorphism() {
    for n in 1..=5 {
        let all: Vec<NcPartitionA> = enumerate_nca(n).unwrap().collect();
        let c = Permutation::long_cycle(n).unwrap();
        let image: HashSet<Permutation> = all.iter().map(iota_a).collect();
        assert_eq!(image, interval(&c).into_iter().collect::<HashSet<_>>());
        for p in &all {
            let s = iota_a(p);
            assert_eq!(&iota_inverse_a(&s).unwrap(), p);
            assert_eq!(iota_a(&p.kreweras(Side::Right)), s.inverse().compose(&c).unwrap());
            assert_eq!(iota_a(&p.kreweras(Side::Left)), c.compose(&s.inverse()).unwrap());
            for q in &all {
                assert_eq!(refinement_leq(p, q).unwrap(), leq(&s, &iota_a(q)).unwrap(), "{p} {q}");
            }
        }
    }
}

#[test]
fn type_b_order_isomorphism() {
    for n in 1..=4 {
        let all: Vec<NcPartitionB> = enumerate_ncb(n).unwrap().collect();
        let omega = SignedPermutation::long_cycle(n).unwrap();
        let image: HashSet<SignedPermutation> = all.iter().map(iota_b).collect();
        assert_eq!(image, interval(&omega).into_iter().collect::<HashSet<_>>());
        for pi in &all {
            let t = iota_b(pi);
            assert_eq!(&iota_inverse_b(&t).unwrap(), pi);
            let kr = iota_b(&pi.kreweras(Side::Right));
            assert_eq!(t.compose(&kr).unwrap(), omega);
            assert_eq!(t.word_length() + kr.word_length(), n);
            if n <= 3 {
                for q in &all {
                    assert_eq!(refinement_leq(pi, q).unwrap(), leq(&t, &iota_b(q)).unwrap(), "{pi} {q}");
                }
            }
        }
    }
}

#[test]
fn gamma_interval_is_type_a() {
    for n in 1..=4 {
        let gamma = SignedPermutation::paired_long_cycle(n).unwrap();
        let image: HashSet<SignedPermutation> = enumerate_nca(n).unwrap().map(|p| iota_gamma(&p)).collect();
        assert_eq!(image, interval(&gamma).into_iter().collect::<HashSet<_>>(), "n = {n}");
    }
}

#[test]
fn factors_reassemble_the_element() {
    let omega = SignedPermutation::long_cycle(4).unwrap();
    for t in interval(&omega).into_iter().filter(|t| !t.is_identity()) {
        let factors = interval_factorize(&t).unwrap();
        let product = factors
            .iter()
            .map(|f| t.restrict(&f.support).unwrap())
            .fold(SignedPermutation::identity(4), |acc, x| acc.compose(&x).unwrap());
        assert_eq!(product, t);
        let mut seen = HashSet::new();
        for f in &factors {
            assert!(f.support.iter().all(|x| seen.insert(*x)), "overlapping supports for {t}");
        }
    }
}
