use berge_core::quad::{
    berge_realizable, berge_realizable_both, canonical_rep, enumerate_preimages, factorize,
    fibonacci, is_prime, qconj, qmul, qnorm, unit_pow_omega, QuadInt, QuadRing,
};
use berge_core::{Sign, StandardParam};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn ring() -> impl Strategy<Value = QuadRing> {
    prop_oneof![Just(QuadRing::Plus), Just(QuadRing::Minus)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn norm_is_multiplicative(ring in ring(), b in -3000i64..3000, c in -3000i64..3000,
                              d in -3000i64..3000, e in -3000i64..3000) {
        let x = QuadInt::new(ring, b, c);
        let y = QuadInt::new(ring, d, e);
        prop_assert_eq!(qnorm(&qmul(&x, &y).unwrap()), qnorm(&x) * qnorm(&y));
        prop_assert_eq!(qnorm(&qconj(&x)), qnorm(&x));
        prop_assert_eq!(qconj(&qconj(&x)), x);
    }

    #[test]
    fn factorization_reconstructs(n in 1u64..u64::MAX / 2) {
        let f = factorize(n);
        let mut prod = 1u128;
        let mut last = 1;
        for &(q, e) in &f.factors {
            prop_assert!(q > last);
            prop_assert!(e >= 1);
            prop_assert!(is_prime(q));
            last = q;
            prod *= (q as u128).pow(e);
        }
        prop_assert_eq!(prod, n as u128);
    }
}

#[test]
fn primality_against_sieve() {
    let limit = 200_000usize;
    let mut sieve = vec![true; limit];
    sieve[0] = false;
    sieve[1] = false;
    for i in 2..limit {
        if sieve[i] {
            for j in (i * i..limit).step_by(i) {
                sieve[j] = false;
            }
        }
    }
    for (n, &p) in sieve.iter().enumerate() {
        assert_eq!(is_prime(n as u64), p, "{n}");
    }
}

#[test]
fn strong_pseudoprimes_are_composite() {
    for n in [2047u64, 1_373_653, 25_326_001, 3_215_031_751, 2_152_302_898_747, 3_825_123_056_546_413_051] {
        assert!(!is_prime(n), "{n}");
    }
}

#[test]
fn norm_of_standard_elements_is_the_coefficient() {
    for par in StandardParam::all_up_to(10_000) {
        let (m, n) = (par.m() as i64, par.n() as i64);
        let x = match par.sign() {
            Sign::Plus => QuadInt::new(QuadRing::Plus, m, n),
            Sign::Minus => QuadInt::new(QuadRing::Minus, m + n, n),
        };
        assert_eq!(qnorm(&x) as u64, par.p(), "{par}");
    }
}

#[test]
fn fibonacci_powers_of_omega() {
    let w = QuadInt::omega(QuadRing::Minus);
    let w_inv = unit_pow_omega(QuadRing::Minus, -1);
    assert_eq!(qmul(&w, &w_inv).unwrap(), QuadInt::new(QuadRing::Minus, 1, 0));
    let mut up = QuadInt::new(QuadRing::Minus, 1, 0);
    let mut down = up;
    for k in 0..=40i64 {
        let a = |i: i64| fibonacci(i) as i64;
        assert_eq!(up, QuadInt::new(QuadRing::Minus, a(k - 1), a(k)), "k = {k}");
        assert_eq!(down, QuadInt::new(QuadRing::Minus, a(-k - 1), a(-k)), "k = -{k}");
        assert_eq!(fibonacci(-k), if k % 2 == 0 { -fibonacci(k) } else { fibonacci(k) });
        up = qmul(&up, &w).unwrap();
        down = qmul(&down, &w_inv).unwrap();
    }
}

#[test]
fn realizability_agrees_with_brute_force() {
    for p in 2..=10_000u64 {
        for sign in Sign::both() {
            let r = berge_realizable(p, sign);
            let pre = enumerate_preimages(p, sign);
            assert_eq!(r.realizable, !pre.is_empty(), "p = {p} {sign}");
            if r.realizable {
                assert_eq!(r.count, pre.len() as u64, "p = {p} {sign}");
            }
        }
        let both = !enumerate_preimages(p, Sign::Plus).is_empty()
            && !enumerate_preimages(p, Sign::Minus).is_empty();
        assert_eq!(berge_realizable_both(p), both, "p = {p}");
    }
}

#[test]
fn canonical_rep_survives_scrambling() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for par in StandardParam::all_up_to(2000) {
        let (m, n) = (par.m() as i64, par.n() as i64);
        let (ring, x) = match par.sign() {
            Sign::Plus => (QuadRing::Plus, QuadInt::new(QuadRing::Plus, m, n)),
            Sign::Minus => (QuadRing::Minus, QuadInt::new(QuadRing::Minus, m + n, n)),
        };
        for _ in 0..10 {
            let k = rng.gen_range(-8..=8);
            let mut u = unit_pow_omega(ring, k);
            if rng.gen_bool(0.5) {
                u = QuadInt::new(ring, -u.b, -u.c);
            }
            let base = if rng.gen_bool(0.5) { qconj(&x) } else { x };
            let y = qmul(&base, &u).unwrap();
            assert_eq!(canonical_rep(&y), Ok((par.m(), par.n())), "{par} scrambled to {y}");
        }
    }
}
