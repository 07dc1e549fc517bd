//! Actions of a finitely presented monoid on a presented algebra, given on generators.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::monoid::{FiniteMonoid, MonoidElement, MonoidPresentation};
use crate::presentation::AlgebraPresentation;
use crate::quiver::{Element, Path};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ActionError {
    #[error("generator {generator} sends arrow {arrow} to an element of the wrong type")]
    BadType { generator: String, arrow: String },
    #[error("generator {generator} does not kill relation {relation}")]
    RelationNotKilled { generator: String, relation: String },
    #[error("monoid relation {relation} fails on {witness}")]
    NotAHomomorphism { relation: String, witness: String },
    #[error("action data has wrong shape: {0}")]
    Shape(String),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ActionReport {
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct MonoidAction {
    pub algebra: AlgebraPresentation,
    pub monoid: MonoidPresentation,
    /// `vertex_maps[g][x]`, `None` for the zero object.
    pub vertex_maps: Vec<Vec<Option<usize>>>,
    /// `arrow_maps[g][a]`, an element of `A(g t(a), g h(a))`.
    pub arrow_maps: Vec<Vec<Element>>,
}

impl MonoidAction {
    pub fn new(
        algebra: AlgebraPresentation,
        monoid: MonoidPresentation,
        vertex_maps: Vec<Vec<Option<usize>>>,
        arrow_maps: Vec<Vec<Element>>,
    ) -> Result<Self, ActionError> {
        let ng = monoid.generators.len();
        let (nv, na) = (algebra.quiver.num_vertices(), algebra.quiver.num_arrows());
        if vertex_maps.len() != ng || arrow_maps.len() != ng {
            return Err(ActionError::Shape(format!("expected data for {ng} generators")));
        }
        if vertex_maps.iter().any(|m| m.len() != nv) || arrow_maps.iter().any(|m| m.len() != na) {
            return Err(ActionError::Shape(String::from("every generator needs an image for each vertex and arrow")));
        }
        let arrow_maps = arrow_maps
            .into_iter()
            .map(|m| m.into_iter().map(|e| algebra.reduce(&e)).collect())
            .collect();
        Ok(MonoidAction {
            algebra,
            monoid,
            vertex_maps,
            arrow_maps,
        })
    }

    pub fn num_generators(&self) -> usize {
        self.monoid.generators.len()
    }

    pub fn gen_vertex(&self, g: usize, v: usize) -> Option<usize> {
        self.vertex_maps[g][v]
    }

    pub fn vertex_image(&self, w: &MonoidElement, v: usize) -> Option<usize> {
        match w {
            MonoidElement::Zero => None,
            MonoidElement::Word(w) => w.iter().rev().try_fold(v, |x, &g| self.gen_vertex(g, x)),
        }
    }

    pub fn apply_gen(&self, g: usize, e: &Element) -> Element {
        let img = e.substitute(&|v| self.gen_vertex(g, v), &|a| self.arrow_maps[g][a].clone());
        self.algebra.reduce(&img)
    }

    pub fn apply(&self, w: &MonoidElement, e: &Element) -> Element {
        match w {
            MonoidElement::Zero => Element::zero(self.algebra.field),
            MonoidElement::Word(w) => w.iter().rev().fold(e.clone(), |x, &g| self.apply_gen(g, &x)),
        }
    }

    fn typed(&self, e: &Element, src: Option<usize>, dst: Option<usize>) -> bool {
        match (src, dst) {
            (Some(s), Some(t)) => e.terms().all(|(p, _)| p.source == s && p.target == t),
            _ => e.is_zero(),
        }
    }

    /// Checks the action is well defined; with `finite` also compares all element pairs.
    pub fn validate(&self, finite: Option<&FiniteMonoid>) -> Result<ActionReport, ActionError> {
        let q = &self.algebra.quiver;
        for g in 0..self.num_generators() {
            for (a, ar) in q.arrows().iter().enumerate() {
                if !self.typed(&self.arrow_maps[g][a], self.gen_vertex(g, ar.tail), self.gen_vertex(g, ar.head)) {
                    return Err(ActionError::BadType {
                        generator: self.monoid.generators[g].clone(),
                        arrow: ar.label.clone(),
                    });
                }
            }
            for r in &self.algebra.relations {
                if !self.apply_gen(g, r).is_zero() {
                    return Err(ActionError::RelationNotKilled {
                        generator: self.monoid.generators[g].clone(),
                        relation: q.fmt_element(r),
                    });
                }
            }
        }
        for (u, v) in &self.monoid.relations {
            let rel = format!("{} = {}", self.monoid.fmt(u), self.monoid.fmt(v));
            for x in 0..q.num_vertices() {
                if self.vertex_image(u, x) != self.vertex_image(v, x) {
                    return Err(ActionError::NotAHomomorphism {
                        relation: rel,
                        witness: format!("vertex {}", q.vertex(x)),
                    });
                }
            }
            for a in 0..q.num_arrows() {
                let e = self.algebra.arrow(a);
                if self.apply(u, &e) != self.apply(v, &e) {
                    return Err(ActionError::NotAHomomorphism {
                        relation: rel,
                        witness: format!("arrow {}", q.arrow(a).label),
                    });
                }
            }
        }
        let mut report = ActionReport::default();
        if let Some(fm) = finite {
            let sig = |w: &MonoidElement| -> (Vec<Option<usize>>, Vec<Element>) {
                (
                    (0..q.num_vertices()).map(|x| self.vertex_image(w, x)).collect(),
                    (0..q.num_arrows()).map(|a| self.apply(w, &self.algebra.arrow(a))).collect(),
                )
            };
            let sigs: Vec<_> = fm.elements.iter().map(sig).collect();
            for i in 0..sigs.len() {
                for j in i + 1..sigs.len() {
                    if sigs[i] == sigs[j] {
                        report.warnings.push(format!(
                            "elements {} and {} act identically",
                            fm.name(i),
                            fm.name(j)
                        ));
                    }
                }
            }
        }
        Ok(report)
    }

    /// Image of a path under a monoid element, in normal form.
    pub fn apply_path(&self, w: &MonoidElement, p: &Path) -> Element {
        self.apply(w, &self.algebra.element_of(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::quiver::Quiver;
    use crate::random::cyclic_group;
    use alloc::vec;

    /// One vertex with a loop `x`, `x^3 = 0`.
    fn loop_algebra(k: Field) -> AlgebraPresentation {
        let mut q = Quiver::new();
        q.add_vertex("1").unwrap();
        let x = q.add_arrow("x", 0, 0).unwrap();
        let xe = Element::path(k, q.arrow_path(x));
        let cube = xe.compose(&xe).compose(&xe);
        AlgebraPresentation::new(k, q, vec![cube], 8).unwrap()
    }

    fn with_image(k: Field, image: impl Fn(&Element) -> Element) -> Result<MonoidAction, ActionError> {
        let a = loop_algebra(k);
        let x = a.arrow(0);
        let (m, _) = cyclic_group(2);
        MonoidAction::new(a, m, vec![vec![Some(0)]], vec![vec![image(&x)]])
    }

    #[test]
    fn sign_change_is_an_involution() {
        let k = Field::Rationals;
        let act = with_image(k, |x| x.scale(&-k.one())).unwrap();
        let (_, g) = cyclic_group(2);
        assert!(act.validate(Some(&g)).unwrap().warnings.is_empty());
    }

    #[test]
    fn non_involutions_are_rejected() {
        let k = Field::Rationals;
        let two = k.one() + k.one();
        let act = with_image(k, |x| x.scale(&two)).unwrap();
        assert!(matches!(act.validate(None), Err(ActionError::NotAHomomorphism { .. })));
    }

    #[test]
    fn relations_must_be_killed() {
        let k = Field::Rationals;
        let act = with_image(k, |x| x.add(&Element::path(k, Path::trivial(0)))).unwrap();
        assert!(matches!(act.validate(None), Err(ActionError::RelationNotKilled { .. })));
    }

    #[test]
    fn trivial_action_is_flagged_as_not_faithful() {
        let k = Field::Prime(3);
        let act = with_image(k, |x| x.clone()).unwrap();
        let (_, g) = cyclic_group(2);
        assert_eq!(act.validate(Some(&g)).unwrap().warnings.len(), 1);
    }

    #[test]
    fn apply_composes_generators() {
        let k = Field::Prime(2);
        let act = with_image(k, |x| x.add(&x.compose(x))).unwrap();
        act.validate(None).unwrap();
        let x = act.algebra.arrow(0);
        assert_eq!(act.apply(&MonoidElement::generator(0), &x), x.add(&x.compose(&x)));
        assert_eq!(act.apply(&MonoidElement::Word(vec![0, 0]), &x), x);
        assert!(act.apply(&MonoidElement::Zero, &x).is_zero());
    }
}
