use orbitcat::action::MonoidAction;
use orbitcat::category::PathCategory;
use orbitcat::field::Field;
use orbitcat::graded::{grade_orbit, smash};
use orbitcat::idempotents::{basic, crt_split, represent, skew_category};
use orbitcat::monoid::{FiniteMonoid, MonoidElement, MonoidPresentation};
use orbitcat::orbit::{orbit1, orbit2, CatGAction, OrbitCategory};
use orbitcat::presentation::AlgebraPresentation;
use orbitcat::quiver::{Element, Quiver};
use orbitcat::skew::SkewPresentation;

fn setup(k: Field) -> (MonoidAction, FiniteMonoid) {
    let mut q = Quiver::new();
    for v in ["1", "2", "2'", "3", "3'"] {
        q.add_vertex(v).unwrap();
    }
    q.add_arrow("a", 0, 1).unwrap();
    q.add_arrow("a'", 0, 2).unwrap();
    q.add_arrow("b", 1, 3).unwrap();
    q.add_arrow("b'", 2, 4).unwrap();
    let arrow = |i: usize| Element::path(k, q.arrow_path(i));
    let maps = vec![vec![arrow(1), arrow(0), arrow(3), arrow(2)]];
    let a = AlgebraPresentation::new(k, q.clone(), vec![], 8).unwrap();
    let m = MonoidPresentation::new(
        vec!["g".into()],
        vec![(MonoidElement::Word(vec![0, 0]), MonoidElement::identity())],
        false,
    )
    .unwrap();
    let g = FiniteMonoid::from_presentation(&m, 8, 100).unwrap();
    let act = MonoidAction::new(a, m, vec![vec![Some(0), Some(2), Some(1), Some(4), Some(3)]], maps).unwrap();
    act.validate(Some(&g)).unwrap();
    (act, g)
}

#[test]
fn classical_pipeline() {
    let k = Field::Rationals;
    let (act, g) = setup(k);
    let sp = SkewPresentation::new(&act);
    let alg = sp.to_algebra(12).unwrap();
    assert_eq!(alg.dim(10).unwrap(), 22);
    let pc = PathCategory::new(&act.algebra, 8).unwrap();
    let ga = CatGAction::from_monoid_action(&pc, &act, g);
    ga.verify(&pc.cat).unwrap();
    let o1 = orbit1(&pc.cat, &ga);
    let o2 = orbit2(&pc.cat, &ga);
    o1.verify().unwrap();
    o2.verify().unwrap();
    assert_eq!(o1.total_dim(), 22);
    assert_eq!(o2.total_dim(), 22);
    let oc = OrbitCategory::new(&pc.cat, &ga).unwrap();
    oc.cat.verify().unwrap();
    let b = basic(&o1, 1, false);
    assert_eq!(b.representatives, vec![0, 1, 3]);
    assert_eq!(b.cat.total_dim(), 9);
    let r = represent(&b.cat, 6).unwrap();
    let shown: Vec<String> = r.presentation.relations.iter().map(|e| r.presentation.fmt_element(e)).collect();
    println!("{:?} {:?}", r.presentation.quiver.arrows(), shown);
    // split the unit loop at 1
    let t = b.cat.basis_vec(0, 0, 1);
    let es = crt_split(&b.cat, 0, &t).unwrap();
    assert_eq!(es.len(), 2);
    let sk = skew_category(&pc.cat, &ga, &[(0, es)], 1, false).unwrap();
    assert_eq!(sk.cat.num_objects(), 4);
    assert_eq!(sk.cat.total_dim(), 9);
    let r = represent(&sk.cat, 6).unwrap();
    println!("{:?} {:?}", r.presentation.quiver.arrows(), r.presentation.relations);
    assert_eq!(r.presentation.quiver.num_arrows(), 3);
    assert!(r.presentation.relations.is_empty());
    let gr = grade_orbit(&oc, &ga);
    gr.verify().unwrap();
    let bg = gr.full_subcategory(&[0, 1, 3]);
    let s = smash(&bg);
    assert_eq!(s.cat.num_objects(), 6);
    assert_eq!(s.cat.total_dim(), 18);
}

#[test]
fn classical_modules() {
    use orbitcat::modules::*;
    let k = Field::Rationals;
    let (act, g) = setup(k);
    let pc = PathCategory::new(&act.algebra, 8).unwrap();
    let ga = CatGAction::from_monoid_action(&pc, &act, g);
    let c = &pc.cat;
    let oc = OrbitCategory::new(c, &ga).unwrap();
    let gr = grade_orbit(&oc, &ga);
    let s2 = Representation::simple(&act.algebra, 1).to_module(&pc);
    s2.verify(c).unwrap();
    let reg = Module::regular(c);
    reg.verify(c).unwrap();
    let pd = pushdown(c, &ga, &oc, &s2);
    pd.module.verify(&oc.cat).unwrap();
    pd.verify(&gr).unwrap();
    assert_eq!(pd.module.dims, vec![0, 1, 1, 0, 0]);
    let pr = pushdown(c, &ga, &oc, &reg);
    pr.module.verify(&oc.cat).unwrap();
    pr.verify(&gr).unwrap();
    let mods = [s2.clone(), reg.clone(), Module::representable(c, 3)];
    for x in &mods {
        for y in &mods {
            let r = check_module_precovering(c, &ga, &oc, x, y);
            assert!(r.bijective(), "{r:?}");
            let ge = check_graded_full_faithful(c, &ga, &oc, x, y);
            assert!(ge.full && ge.faithful_dims && ge.block_witness, "{ge:?}");
        }
        let oreg = Module::regular(&oc.cat);
        let th = check_theta(c, &ga, &oc, x, &oreg);
        assert!(th.ok(), "{th:?}");
    }
    let (m1, _) = density_certificate(c, &ga, &oc, &pr).unwrap();
    assert_eq!(m1.dims, reg.dims);
    let oreg = Module::regular(&oc.cat);
    let pu = pullup(&oc.functor_p(c, &ga), c, &oreg);
    pu.verify(c).unwrap();
    let psi = canonical_adjuster(c, &ga, &oc, &oreg);
    assert_eq!(check_g_invariant_module(c, &ga, &pu, Some(&psi)).unwrap(), InvarianceVerdict::Valid);
    assert_eq!(check_g_invariant_module(c, &ga, &pu, None).unwrap(), InvarianceVerdict::Unverifiable);
    let tw = twist(c, &ga, 1, &twist(c, &ga, 1, &s2));
    assert_eq!(tw, s2);
}
