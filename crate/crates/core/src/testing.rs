//! Shared inputs for unit tests.

use alloc::vec;

use crate::action::MonoidAction;
use crate::category::PathCategory;
use crate::field::Field;
use crate::monoid::FiniteMonoid;
use crate::orbit::{CatGAction, OrbitCategory};
use crate::presentation::AlgebraPresentation;
use crate::quiver::{Element, Quiver};
use crate::random::cyclic_group;

/// `1 -> 2 -> 3` and `1 -> 2' -> 3'` with `g` swapping the branches.
pub fn doubled_a3(k: Field) -> (MonoidAction, FiniteMonoid) {
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
    let (m, g) = cyclic_group(2);
    let act = MonoidAction::new(a, m, vec![vec![Some(0), Some(2), Some(1), Some(4), Some(3)]], maps).unwrap();
    (act, g)
}

pub struct Pipeline {
    pub pc: PathCategory,
    pub ga: CatGAction,
    pub oc: OrbitCategory,
}

pub fn pipeline(k: Field) -> Pipeline {
    let (act, g) = doubled_a3(k);
    let pc = PathCategory::new(&act.algebra, 8).unwrap();
    let ga = CatGAction::from_monoid_action(&pc, &act, g);
    let oc = OrbitCategory::new(&pc.cat, &ga).unwrap();
    Pipeline { pc, ga, oc }
}
