use orbitcat::category::PathCategory;
use orbitcat::field::Field;
use orbitcat::graded::{check_epsilon, grade_orbit, smash};
use orbitcat::modules::*;
use orbitcat::orbit::{check_covering, orbit1, orbit2, CatGAction, OrbitCategory};
use orbitcat::random::{random_cyclic_action, random_module, RandomShape};
use orbitcat::skew::{dimension_oracle, SkewPresentation};
use proptest::prelude::*;

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rationals), Just(Field::Prime(2)), Just(Field::Prime(3))]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn orbit_dimensions_agree(seed in 0u64..10_000, k in fields()) {
        let (act, g) = random_cyclic_action(seed, k, 2 + (seed % 2) as usize, RandomShape::default());
        let pc = PathCategory::new(&act.algebra, 10).unwrap();
        let (_, total) = dimension_oracle(&act, &g, 10).unwrap();
        prop_assert_eq!(total, pc.cat.total_dim() * g.len());
        let sk = SkewPresentation::new(&act).to_algebra(14).unwrap();
        prop_assert_eq!(sk.dim(12).unwrap(), total);
        let ga = CatGAction::from_monoid_action(&pc, &act, g);
        ga.verify(&pc.cat).unwrap();
        let o1 = orbit1(&pc.cat, &ga);
        let o2 = orbit2(&pc.cat, &ga);
        o1.verify().unwrap();
        o2.verify().unwrap();
        prop_assert_eq!(o1.total_dim(), total);
        prop_assert_eq!(o2.total_dim(), total);
        let oc = OrbitCategory::new(&pc.cat, &ga).unwrap();
        oc.cat.verify().unwrap();
        prop_assert_eq!(oc.cat.total_dim(), total);
        let p = oc.functor_p(&pc.cat, &ga);
        p.verify(&pc.cat, &oc.cat).unwrap();
        let (rep, dense) = check_covering(&pc.cat, &oc.cat, &ga, &p, &oc.adjuster(&pc.cat, &ga), seed);
        prop_assert!(rep.is_precovering(), "{:?}", rep.failures);
        prop_assert!(dense);
        let s1 = oc.functor_s1(&pc.cat, &ga, &o1);
        s1.verify(&oc.cat, &o1).unwrap();
        prop_assert!(s1.is_fully_faithful(&oc.cat, &o1));
        let p2 = oc.functor_p2(&pc.cat, &ga, &o2);
        p2.verify(&o2, &oc.cat).unwrap();
        prop_assert!(p2.is_fully_faithful(&o2, &oc.cat));
    }

    #[test]
    fn liberalization_is_free(seed in 0u64..10_000, k in fields()) {
        let (act, g) = random_cyclic_action(seed, k, 2 + (seed % 2) as usize, RandomShape::default());
        let pc = PathCategory::new(&act.algebra, 10).unwrap();
        let ga = CatGAction::from_monoid_action(&pc, &act, g);
        let oc = OrbitCategory::new(&pc.cat, &ga).unwrap();
        let gr = grade_orbit(&oc, &ga);
        gr.verify().unwrap();
        let s = smash(&gr);
        s.cat.verify().unwrap();
        prop_assert_eq!(s.cat.total_dim(), oc.cat.total_dim() * ga.len());
        let rep = check_epsilon(&pc.cat, &ga, &oc, &gr, &s);
        prop_assert!(rep.all(), "{:?}", rep);
    }

    #[test]
    fn pushdown_properties(seed in 0u64..10_000, k in fields()) {
        let (act, g) = random_cyclic_action(seed, k, 2 + (seed % 2) as usize, RandomShape::default());
        let pc = PathCategory::new(&act.algebra, 10).unwrap();
        let ga = CatGAction::from_monoid_action(&pc, &act, g);
        let c = &pc.cat;
        let oc = OrbitCategory::new(c, &ga).unwrap();
        let gr = grade_orbit(&oc, &ga);
        let x = random_module(c, seed);
        let y = random_module(c, seed.wrapping_add(7));
        x.verify(c).unwrap();
        y.verify(c).unwrap();
        let px = pushdown(c, &ga, &oc, &x);
        px.module.verify(&oc.cat).unwrap();
        px.verify(&gr).unwrap();
        let r = check_module_precovering(c, &ga, &oc, &x, &y);
        prop_assert!(r.bijective(), "{:?}", r);
        let ge = check_graded_full_faithful(c, &ga, &oc, &x, &y);
        prop_assert!(ge.full && ge.faithful_dims && ge.block_witness);
        let n = random_module(&oc.cat, seed.wrapping_add(11));
        let th = check_theta(c, &ga, &oc, &x, &n);
        prop_assert!(th.ok(), "{:?}", th);
        let (m1, _) = density_certificate(c, &ga, &oc, &px).unwrap();
        prop_assert_eq!(m1.dims, x.dims.clone());
        let pu = pullup(&oc.functor_p(c, &ga), c, &n);
        let psi = canonical_adjuster(c, &ga, &oc, &n);
        prop_assert_eq!(check_g_invariant_module(c, &ga, &pu, Some(&psi)).unwrap(), InvarianceVerdict::Valid);
        for a in 0..ga.len() {
            for b in 0..ga.len() {
                let lhs = twist(c, &ga, a, &twist(c, &ga, b, &x));
                prop_assert_eq!(lhs, twist(c, &ga, ga.mul(a, b), &x));
            }
        }
    }
}
