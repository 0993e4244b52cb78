use berge_core::arith::gcd;
use berge_core::dual::{
    alexander_dual, berge_plus_description, dual_alexander_sum, find_saito_parameters, SaitoDescription,
};
use berge_core::knot::alexander_berge;
use berge_core::{Error, Sign, StandardParam};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn closed_form_reproduces_plus_family() {
    for par in StandardParam::all_up_to(500) {
        if par.sign() != Sign::Plus {
            continue;
        }
        let d = berge_plus_description(&par).unwrap();
        assert!(alexander_dual(&d).unwrap().doteq_eq(&alexander_berge(&par).unwrap()), "{par}");
        assert!(d.satisfies_square_congruence(), "{par}");
    }
}

#[test]
fn search_survivors_are_symmetric() {
    for par in StandardParam::all_up_to(200) {
        let ks = find_saito_parameters(&par).unwrap();
        assert!(!ks.is_empty(), "{par}");
        for &k in &ks {
            assert!(ks.contains(&(par.p() - k)), "{par}: {k}");
        }
    }
}

#[test]
fn shared_factor_breaks_divisibility() {
    let mut rng = StdRng::seed_from_u64(62);
    let mut tried = 0;
    while tried < 300 {
        let p = rng.gen_range(4..300u64);
        let k = rng.gen_range(2..p);
        let q = rng.gen_range(1..p);
        if gcd(k, p) == 1 || gcd(q, p) != 1 {
            continue;
        }
        tried += 1;
        assert_eq!(dual_alexander_sum(p, q as i64, k), Err(Error::NotDivisible), "({p},{q},{k})");
        assert!(SaitoDescription::new(p, q as i64, k).is_err());
    }
}

#[test]
fn dual_polynomials_are_normalized_at_one() {
    for p in [7u64, 11, 13, 19] {
        for q in 1..p {
            for k in 1..p {
                let d = alexander_dual(&SaitoDescription::new(p, q as i64, k).unwrap()).unwrap();
                assert_eq!(d.eval_at_one().magnitude(), &1u8.into(), "({p},{q},{k})");
            }
        }
    }
}
