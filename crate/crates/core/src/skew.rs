//! Presentation of the skew category of a monoid action by generators and relations.
//!
//! New arrows `(g,x): x -> gx` are added for each generator `g` and each vertex `x`
//! with `gx` nonzero.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::action::MonoidAction;
use crate::field::Field;
use crate::monoid::{FiniteMonoid, MonoidElement};
use crate::presentation::{AlgebraPresentation, PresentationError};
use crate::quiver::{Element, Path, Quiver};
use crate::rewrite::RewriteSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RelationFamily {
    /// Relations of the original algebra.
    Original,
    /// `(g,y)*a - g(a)*(g,x)` for `a: x -> y`.
    Commutation,
    /// `pi(u,x) - pi(v,x)` for monoid relations `u = v`.
    Monoid,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaggedRelation {
    pub family: RelationFamily,
    /// Index of the monoid relation, for the `Monoid` family.
    pub origin: Option<usize>,
    pub lhs: Element,
    pub rhs: Element,
    /// `lhs - rhs`.
    pub relation: Element,
}

impl TaggedRelation {
    fn new(family: RelationFamily, origin: Option<usize>, lhs: Element, rhs: Element) -> Self {
        let relation = lhs.sub(&rhs);
        TaggedRelation { family, origin, lhs, rhs, relation }
    }
}

#[derive(Clone, Debug)]
pub struct SkewPresentation {
    pub field: Field,
    pub quiver: Quiver,
    pub relations: Vec<TaggedRelation>,
    /// `(generator, vertex)` for each arrow past the original ones.
    pub new_arrows: Vec<(usize, usize)>,
    pub original_arrows: usize,
}

#[derive(Clone, Debug, thiserror::Error)]
pub enum SkewError {
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error("substitution `{0}` is not a change of one arrow")]
    BadSubstitution(String),
}

pub fn skew_arrow_label(act: &MonoidAction, g: usize, x: usize) -> String {
    format!("({},{})", act.monoid.generators[g], act.algebra.quiver.vertex(x))
}

/// The quiver `Q'` and the `(g, x)` data of its new arrows.
pub fn build_skew_quiver(act: &MonoidAction) -> (Quiver, Vec<(usize, usize)>) {
    let mut q = act.algebra.quiver.clone();
    let mut new = Vec::new();
    for g in 0..act.num_generators() {
        for x in 0..q.num_vertices() {
            if let Some(gx) = act.gen_vertex(g, x) {
                q.add_arrow(&skew_arrow_label(act, g, x), x, gx)
                    .expect("skew arrow labels are unique");
                new.push((g, x));
            }
        }
    }
    (q, new)
}

impl SkewPresentation {
    pub fn new(act: &MonoidAction) -> Self {
        let k = act.algebra.field;
        let (quiver, new_arrows) = build_skew_quiver(act);
        let n0 = act.algebra.quiver.num_arrows();
        let mut sp = SkewPresentation {
            field: k,
            quiver,
            relations: Vec::new(),
            new_arrows,
            original_arrows: n0,
        };
        for r in &act.algebra.relations {
            sp.relations.push(TaggedRelation::new(RelationFamily::Original, None, r.clone(), Element::zero(k)));
        }
        let q0 = &act.algebra.quiver;
        for g in 0..act.num_generators() {
            for (a, ar) in q0.arrows().iter().enumerate() {
                let Some(gy) = sp.skew_arrow(g, ar.head) else {
                    continue;
                };
                let lhs = Element::path(k, q0.arrow_path(a)).then(&Element::path(k, sp.quiver.arrow_path(gy)));
                let rhs = match sp.skew_arrow(g, ar.tail) {
                    Some(gx) => Element::path(k, sp.quiver.arrow_path(gx)).then(&act.arrow_maps[g][a]),
                    None => Element::zero(k),
                };
                sp.relations.push(TaggedRelation::new(RelationFamily::Commutation, None, lhs, rhs));
            }
        }
        for (ri, (u, v)) in act.monoid.relations.iter().enumerate() {
            for x in 0..q0.num_vertices() {
                let t = TaggedRelation::new(RelationFamily::Monoid, Some(ri), sp.pi(act, u, x), sp.pi(act, v, x));
                if !t.relation.is_zero() {
                    sp.relations.push(t);
                }
            }
        }
        sp
    }

    /// Index in `Q'` of the arrow `(g, x)`.
    pub fn skew_arrow(&self, g: usize, x: usize) -> Option<usize> {
        self.new_arrows
            .iter()
            .position(|&(h, y)| h == g && y == x)
            .map(|i| self.original_arrows + i)
    }

    /// `pi(w, x)`: the path `(g_t, ...)*...*(g_1, x)`, `e_x` for the empty word, 0 if some step dies.
    pub fn pi(&self, act: &MonoidAction, w: &MonoidElement, x: usize) -> Element {
        let k = self.field;
        let MonoidElement::Word(w) = w else {
            return Element::zero(k);
        };
        let mut p = Path::trivial(x);
        let mut at = x;
        for &g in w.iter().rev() {
            let Some(a) = self.skew_arrow(g, at) else {
                return Element::zero(k);
            };
            p = p.then(&self.quiver.arrow_path(a)).unwrap();
            at = act.gen_vertex(g, at).unwrap();
        }
        Element::path(k, p)
    }

    pub fn plain_relations(&self) -> Vec<Element> {
        self.relations.iter().map(|t| t.relation.clone()).collect()
    }

    pub fn to_algebra(&self, bound: usize) -> Result<AlgebraPresentation, PresentationError> {
        AlgebraPresentation::new(self.field, self.quiver.clone(), self.plain_relations(), bound)
    }

    pub fn to_algebra_lenient(&self, bound: usize) -> Result<AlgebraPresentation, PresentationError> {
        AlgebraPresentation::new_lenient(self.field, self.quiver.clone(), self.plain_relations(), bound)
    }
}

/// Predicted `dim (A/G)(x, y)` for all pairs, as `[x][y]`, and the total.
pub fn dimension_oracle(act: &MonoidAction, g: &FiniteMonoid, max_len: usize) -> Result<(Vec<Vec<usize>>, usize), PresentationError> {
    let basis = act.algebra.basis(max_len)?;
    let n = act.algebra.quiver.num_vertices();
    let mut dims = alloc::vec![alloc::vec![0usize; n]; n];
    for el in &g.elements {
        let image: Vec<Option<usize>> = (0..n).map(|x| act.vertex_image(el, x)).collect();
        for mu in &basis {
            // at most one preimage of t(mu) under this element
            let pre: Vec<usize> = (0..n).filter(|&x| image[x] == Some(mu.source)).collect();
            debug_assert!(pre.len() <= 1, "element acts non-injectively on vertices");
            for x in pre {
                dims[x][mu.target] += 1;
            }
        }
    }
    let total = dims.iter().flatten().sum();
    Ok((dims, total))
}

/// Drops relations that already lie in the ideal of the others (checked by completion up to `bound`).
pub fn remove_redundant(field: Field, relations: &[Element], bound: usize) -> Vec<Element> {
    let mut keep: Vec<Element> = relations.iter().filter(|r| !r.is_zero()).cloned().collect();
    let mut i = keep.len();
    while i > 0 {
        i -= 1;
        let others: Vec<Element> = keep.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, r)| r.clone()).collect();
        if let Ok(sys) = RewriteSystem::complete(field, &others, bound) {
            if sys.reduce(&keep[i]).is_zero() {
                keep.remove(i);
            }
        }
    }
    keep
}

/// Replaces arrow `a` by a new arrow `new_label` defined by `expr = c*a + rest`, where `rest`
/// does not involve `a`. Relations are rewritten through `a = (new - rest)/c`.
pub fn substitute_arrow(
    quiver: &Quiver,
    relations: &[Element],
    new_label: &str,
    expr: &Element,
) -> Result<(Quiver, Vec<Element>), SkewError> {
    let k = expr.field();
    let bad = || SkewError::BadSubstitution(format!("{new_label} = {}", quiver.fmt_element(expr)));
    let mut chosen = None;
    for (p, c) in expr.terms() {
        if p.len() != 1 {
            continue;
        }
        let a = p.arrows[0];
        let elsewhere = expr.terms().any(|(q, _)| q != p && q.arrows.contains(&a));
        if !elsewhere {
            chosen = Some((a, c.clone()));
            break;
        }
    }
    let (a, c) = chosen.ok_or_else(bad)?;
    let (s, t) = expr.endpoints().ok_or_else(bad)?;
    let ar = quiver.arrow(a);
    if (ar.tail, ar.head) != (s, t) {
        return Err(bad());
    }
    let mut q = Quiver::new();
    for v in quiver.vertices() {
        q.add_vertex(v).unwrap();
    }
    for (i, b) in quiver.arrows().iter().enumerate() {
        let label = if i == a { new_label } else { b.label.as_str() };
        q.add_arrow(label, b.tail, b.head).map_err(|_| bad())?;
    }
    let x = Element::path(k, q.arrow_path(a));
    let rest = expr.sub(&Element::term(c.clone(), quiver.arrow_path(a)));
    let image = x.sub(&rest).scale(&c.inv().unwrap());
    let rels = relations
        .iter()
        .map(|r| {
            r.substitute(&|v| Some(v), &|b| {
                if b == a {
                    image.clone()
                } else {
                    Element::path(k, q.arrow_path(b))
                }
            })
        })
        .filter(|r| !r.is_zero())
        .collect();
    Ok((q, rels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::cyclic_group;
    use alloc::vec;

    /// `k[x]/(x^3)` over GF(2) with `g(x) = x + x^2`.
    fn involution() -> (MonoidAction, FiniteMonoid) {
        let k = Field::Prime(2);
        let mut q = Quiver::new();
        q.add_vertex("1").unwrap();
        q.add_arrow("x", 0, 0).unwrap();
        let x = Element::path(k, q.arrow_path(0));
        let a = AlgebraPresentation::new(k, q, vec![x.compose(&x).compose(&x)], 8).unwrap();
        let (m, g) = cyclic_group(2);
        let img = x.add(&x.compose(&x));
        (MonoidAction::new(a, m, vec![vec![Some(0)]], vec![vec![img]]).unwrap(), g)
    }

    #[test]
    fn one_relation_per_family_and_generator() {
        let (act, g) = involution();
        let sp = SkewPresentation::new(&act);
        assert_eq!(sp.quiver.num_arrows(), 2);
        assert_eq!(sp.quiver.arrow(1).label, "(g,1)");
        let fams: Vec<RelationFamily> = sp.relations.iter().map(|t| t.family).collect();
        assert_eq!(fams, vec![RelationFamily::Original, RelationFamily::Commutation, RelationFamily::Monoid]);
        assert_eq!(sp.relations[2].origin, Some(0));
        let (_, total) = dimension_oracle(&act, &g, 8).unwrap();
        assert_eq!(total, 6);
        assert_eq!(sp.to_algebra(12).unwrap().dim(12).unwrap(), total);
    }

    #[test]
    fn pi_walks_the_new_arrows() {
        let (act, _) = involution();
        let sp = SkewPresentation::new(&act);
        let k = sp.field;
        let y = Element::path(k, sp.quiver.arrow_path(1));
        assert_eq!(sp.pi(&act, &MonoidElement::Word(vec![0, 0]), 0), y.compose(&y));
        assert_eq!(sp.pi(&act, &MonoidElement::identity(), 0), Element::path(k, Path::trivial(0)));
        assert!(sp.pi(&act, &MonoidElement::Zero, 0).is_zero());
    }

    #[test]
    fn substitution_shifts_the_group_loop() {
        let (act, _) = involution();
        let sp = SkewPresentation::new(&act);
        let k = sp.field;
        let y = Element::path(k, sp.quiver.arrow_path(1));
        let e = Element::path(k, Path::trivial(0));
        let (q, rels) = substitute_arrow(&sp.quiver, &sp.plain_relations(), "u", &y.sub(&e)).unwrap();
        assert_eq!(q.arrow(1).label, "u");
        let u = Element::path(k, q.arrow_path(1));
        // (u + 1)^2 = 1 in characteristic 2
        assert!(rels.contains(&u.compose(&u)));
        let not_an_arrow = y.compose(&y);
        assert!(substitute_arrow(&sp.quiver, &sp.plain_relations(), "v", &not_an_arrow).is_err());
    }

    #[test]
    fn redundant_relations_are_dropped() {
        let (act, _) = involution();
        let x = act.algebra.arrow(0);
        let sq = x.compose(&x);
        let kept = remove_redundant(act.algebra.field, &[sq.clone(), sq.compose(&x)], 8);
        assert_eq!(kept, vec![sq]);
    }
}
