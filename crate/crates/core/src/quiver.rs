//! Quivers, paths and linear combinations of paths.
//!
//! A [`Path`] stores its arrows in traversal order (first arrow first). Written products
//! follow composition order, so `b*a` is the path that runs `a` and then `b`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::field::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum QuiverError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow `{0}`")]
    DuplicateArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub label: String,
    pub tail: usize,
    pub head: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: &str) -> Result<usize, QuiverError> {
        if self.vertex_index(label).is_some() {
            return Err(QuiverError::DuplicateVertex(label.into()));
        }
        self.vertices.push(label.into());
        Ok(self.vertices.len() - 1)
    }

    pub fn add_arrow(&mut self, label: &str, tail: usize, head: usize) -> Result<usize, QuiverError> {
        if self.arrow_index(label).is_some() {
            return Err(QuiverError::DuplicateArrow(label.into()));
        }
        for v in [tail, head] {
            if v >= self.vertices.len() {
                return Err(QuiverError::UnknownVertex(format!("#{v}")));
            }
        }
        self.arrows.push(Arrow {
            label: label.into(),
            tail,
            head,
        });
        Ok(self.arrows.len() - 1)
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_path(&self, a: usize) -> Path {
        let ar = &self.arrows[a];
        Path {
            source: ar.tail,
            target: ar.head,
            arrows: alloc::vec![a],
        }
    }

    /// Path from a traversal-order arrow list; `None` if the arrows do not chain.
    pub fn path_of(&self, arrows: &[usize]) -> Option<Path> {
        let first = self.arrows.get(*arrows.first()?)?;
        let mut at = first.tail;
        for &a in arrows {
            let ar = self.arrows.get(a)?;
            if ar.tail != at {
                return None;
            }
            at = ar.head;
        }
        Some(Path {
            source: first.tail,
            target: at,
            arrows: arrows.to_vec(),
        })
    }

    pub fn fmt_path(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            return format!("e_{}", self.vertices[p.source]);
        }
        let names: Vec<&str> = p.arrows.iter().rev().map(|&a| self.arrows[a].label.as_str()).collect();
        names.join("*")
    }

    pub fn fmt_element(&self, e: &Element) -> String {
        if e.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (p, c)) in e.terms().rev().enumerate() {
            let (neg, mag) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&format!("{mag} "));
            }
            out.push_str(&self.fmt_path(p));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

#[allow(clippy::len_without_is_empty)]
impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `next`, i.e. the composite `next * self`.
    pub fn then(&self, next: &Path) -> Option<Path> {
        if self.target != next.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&next.arrows);
        Some(Path {
            source: self.source,
            target: next.target,
            arrows,
        })
    }

    /// Written product `self * first`.
    pub fn compose(&self, first: &Path) -> Option<Path> {
        first.then(self)
    }
}

impl Ord for Path {
    fn cmp(&self, o: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&o.arrows.len())
            .then_with(|| self.arrows.cmp(&o.arrows))
            .then_with(|| self.source.cmp(&o.source))
            .then_with(|| self.target.cmp(&o.target))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Finite linear combination of paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    field: Field,
    terms: BTreeMap<Path, Scalar>,
}

impl Element {
    pub fn zero(field: Field) -> Self {
        Element {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn path(field: Field, p: Path) -> Self {
        Self::term(field.one(), p)
    }

    pub fn term(c: Scalar, p: Path) -> Self {
        let mut e = Self::zero(c.field());
        e.add_term(p, c);
        e
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Path, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, p: &Path) -> Scalar {
        self.terms.get(p).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn leading(&self) -> Option<(&Path, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Path::len).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, p: Path, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&p) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&p);
                }
            }
            None => {
                self.terms.insert(p, c);
            }
        }
    }

    pub fn add(&self, o: &Element) -> Element {
        let mut r = self.clone();
        for (p, c) in &o.terms {
            r.add_term(p.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Element) -> Element {
        self.add(&o.scale(&-&self.field.one()))
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero(self.field);
        }
        Element {
            field: self.field,
            terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect(),
        }
    }

    /// `self` followed by `next` (the written product `next * self`).
    pub fn then(&self, next: &Element) -> Element {
        let mut r = Element::zero(self.field);
        for (p, a) in &self.terms {
            for (q, b) in &next.terms {
                if let Some(pq) = p.then(q) {
                    r.add_term(pq, a * b);
                }
            }
        }
        r
    }

    /// Written product `self * first`.
    pub fn compose(&self, first: &Element) -> Element {
        first.then(self)
    }

    /// `pre` then `self` then `post`, for paths.
    pub fn wrap(&self, pre: &Path, post: &Path) -> Element {
        let mut r = Element::zero(self.field);
        for (p, c) in &self.terms {
            if let Some(x) = pre.then(p).and_then(|x| x.then(post)) {
                r.add_term(x, c.clone());
            }
        }
        r
    }

    /// Common source and target of all terms, if any.
    pub fn endpoints(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let st = (first.source, first.target);
        it.all(|p| (p.source, p.target) == st).then_some(st)
    }

    /// Splits into pieces `e_y * self * e_x` with uniform endpoints.
    pub fn split_uniform(&self) -> Vec<Element> {
        let mut parts: BTreeMap<(usize, usize), Element> = BTreeMap::new();
        for (p, c) in &self.terms {
            parts
                .entry((p.source, p.target))
                .or_insert_with(|| Element::zero(self.field))
                .add_term(p.clone(), c.clone());
        }
        parts.into_values().collect()
    }

    /// Maps each arrow to an element and multiplies out; trivial paths go through `vertex`.
    pub fn substitute(
        &self,
        vertex: &dyn Fn(usize) -> Option<usize>,
        arrow: &dyn Fn(usize) -> Element,
    ) -> Element {
        let mut r = Element::zero(self.field);
        for (p, c) in &self.terms {
            let mut img = if p.is_trivial() {
                match vertex(p.source) {
                    Some(v) => Element::path(self.field, Path::trivial(v)),
                    None => Element::zero(self.field),
                }
            } else {
                arrow(p.arrows[0])
            };
            for &a in p.arrows.iter().skip(1) {
                if img.is_zero() {
                    break;
                }
                img = img.then(&arrow(a));
            }
            r = r.add(&img.scale(c));
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_arrows() -> Quiver {
        let mut q = Quiver::new();
        for v in ["1", "2", "3"] {
            q.add_vertex(v).unwrap();
        }
        q.add_arrow("a", 0, 1).unwrap();
        q.add_arrow("b", 1, 2).unwrap();
        q
    }

    #[test]
    fn composition_order() {
        let q = two_arrows();
        let a = q.arrow_path(0);
        let b = q.arrow_path(1);
        let ba = b.compose(&a).unwrap();
        assert_eq!(ba.source, 0);
        assert_eq!(ba.target, 2);
        assert_eq!(q.fmt_path(&ba), "b*a");
        assert!(a.compose(&b).is_none());
    }

    #[test]
    fn path_order_is_length_first() {
        let q = two_arrows();
        let e = Path::trivial(2);
        let b = q.arrow_path(1);
        let ba = q.path_of(&[0, 1]).unwrap();
        assert!(e < b && b < ba);
        assert!(q.arrow_path(0) < b);
    }

    #[test]
    fn element_arithmetic() {
        let k = Field::Rationals;
        let q = two_arrows();
        let a = Element::path(k, q.arrow_path(0));
        let b = Element::path(k, q.arrow_path(1));
        let x = a.add(&Element::path(k, Path::trivial(0)));
        let y = b.compose(&x);
        assert_eq!(q.fmt_element(&y), "b*a");
        assert!(x.sub(&x).is_zero());
        assert_eq!(q.fmt_element(&x.scale(&k.int(-2))), "-2 a - 2 e_1");
    }
}
