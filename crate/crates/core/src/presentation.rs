//! Algebras given by a quiver with relations.

use alloc::string::String;
use alloc::vec::Vec;

use crate::field::Field;
use crate::quiver::{Element, Path, Quiver};
use crate::rewrite::{RewriteError, RewriteSystem};

#[derive(Clone, Debug, thiserror::Error)]
pub enum PresentationError {
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error("algebra has irreducible paths longer than {0}")]
    InfiniteDimensional(usize),
    #[error("relation {0} mixes fields")]
    WrongField(String),
}

#[derive(Clone, Debug)]
pub struct AlgebraPresentation {
    pub field: Field,
    pub quiver: Quiver,
    pub relations: Vec<Element>,
    pub bound: usize,
    system: RewriteSystem,
}

impl AlgebraPresentation {
    /// Completes the relations; fails with `Incomplete` unless completion closes within `bound`.
    pub fn new(field: Field, quiver: Quiver, relations: Vec<Element>, bound: usize) -> Result<Self, PresentationError> {
        let system = RewriteSystem::complete(field, &relations, bound)?;
        Ok(Self::with_system(field, quiver, relations, bound, system))
    }

    /// Accepts a truncated completion.
    pub fn new_lenient(field: Field, quiver: Quiver, relations: Vec<Element>, bound: usize) -> Result<Self, PresentationError> {
        let system = RewriteSystem::complete_lenient(field, &relations, bound)?;
        Ok(Self::with_system(field, quiver, relations, bound, system))
    }

    fn with_system(field: Field, quiver: Quiver, relations: Vec<Element>, bound: usize, system: RewriteSystem) -> Self {
        AlgebraPresentation {
            field,
            quiver,
            relations,
            bound,
            system,
        }
    }

    pub fn system(&self) -> &RewriteSystem {
        &self.system
    }

    pub fn is_confluent(&self) -> bool {
        self.system.is_confluent()
    }

    pub fn normal_form(&self, e: &Element) -> Result<Element, PresentationError> {
        Ok(self.system.normal_form(e)?)
    }

    /// Normal form without the truncation guard.
    pub fn reduce(&self, e: &Element) -> Element {
        self.system.reduce(e)
    }

    pub fn arrow(&self, a: usize) -> Element {
        Element::path(self.field, self.quiver.arrow_path(a))
    }

    pub fn idempotent(&self, v: usize) -> Element {
        Element::path(self.field, Path::trivial(v))
    }

    pub fn element_of(&self, p: &Path) -> Element {
        Element::path(self.field, p.clone())
    }

    /// Irreducible paths, i.e. a basis when the system is confluent.
    pub fn basis(&self, max_len: usize) -> Result<Vec<Path>, PresentationError> {
        let starts: Vec<Path> = (0..self.quiver.num_vertices()).map(Path::trivial).collect();
        let q = &self.quiver;
        let next = |v: usize| -> Vec<(usize, usize)> {
            q.arrows()
                .iter()
                .enumerate()
                .filter(|(_, a)| a.tail == v)
                .map(|(i, a)| (i, a.head))
                .collect()
        };
        let (paths, more) = self.system.irreducible_paths(&starts, &next, max_len);
        if more {
            return Err(PresentationError::InfiniteDimensional(max_len));
        }
        Ok(paths)
    }

    /// Basis paths with given source and target.
    pub fn hom_basis(&self, x: usize, y: usize, max_len: usize) -> Result<Vec<Path>, PresentationError> {
        Ok(self
            .basis(max_len)?
            .into_iter()
            .filter(|p| p.source == x && p.target == y)
            .collect())
    }

    pub fn dim(&self, max_len: usize) -> Result<usize, PresentationError> {
        Ok(self.basis(max_len)?.len())
    }

    pub fn fmt_element(&self, e: &Element) -> String {
        self.quiver.fmt_element(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_algebra_of_a3() {
        let k = Field::Rationals;
        let mut q = Quiver::new();
        for v in ["1", "2", "3"] {
            q.add_vertex(v).unwrap();
        }
        q.add_arrow("a", 0, 1).unwrap();
        q.add_arrow("b", 1, 2).unwrap();
        let free = AlgebraPresentation::new(k, q.clone(), Vec::new(), 8).unwrap();
        assert_eq!(free.dim(10).unwrap(), 6);
        let ba = free.arrow(1).compose(&free.arrow(0));
        let quot = AlgebraPresentation::new(k, q, alloc::vec![ba], 8).unwrap();
        assert_eq!(quot.dim(10).unwrap(), 5);
        assert_eq!(quot.hom_basis(0, 2, 10).unwrap().len(), 0);
    }

    #[test]
    fn loop_without_relations_is_infinite() {
        let mut q = Quiver::new();
        q.add_vertex("1").unwrap();
        q.add_arrow("x", 0, 0).unwrap();
        let a = AlgebraPresentation::new(Field::Rationals, q, Vec::new(), 4).unwrap();
        assert!(matches!(a.dim(6), Err(PresentationError::InfiniteDimensional(6))));
    }
}
