use orbitcat::field::Field;
use orbitcat::graded::{check_omega, functor_q, smash};
use orbitcat::orbit::{check_covering, identity_adjuster, OrbitCategory};
use orbitcat::random::{random_graded, RandomShape};
use proptest::prelude::*;

fn shape() -> RandomShape {
    RandomShape { max_vertices: 5, ..RandomShape::default() }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn omega_is_a_graded_equivalence(seed in 0u64..10_000, r in 2usize..=3) {
        let b = random_graded(seed, Field::Rationals, r, shape());
        b.verify().unwrap();
        let s = smash(&b);
        s.cat.verify().unwrap();
        prop_assert_eq!(s.cat.total_dim(), b.cat.total_dim() * r);
        prop_assert!(s.action.is_free());
        let orbit = OrbitCategory::new(&s.cat, &s.action).unwrap();
        let rep = check_omega(&b, &s, &orbit);
        prop_assert!(rep.all(), "{:?}", rep);
    }

    #[test]
    fn forgetful_functor_is_a_covering(seed in 0u64..10_000, r in 2usize..=3) {
        let b = random_graded(seed, Field::Prime(3), r, shape());
        let s = smash(&b);
        let q = functor_q(&b, &s);
        q.verify(&s.cat, &b.cat).unwrap();
        let phi = identity_adjuster(&b.cat, &s.action, &q);
        let (rep, dense) = check_covering(&s.cat, &b.cat, &s.action, &q, &phi, seed);
        prop_assert!(rep.is_precovering(), "{:?}", rep.failures);
        prop_assert!(dense);
    }
}
