//! Finite k-linear categories stored by structure constants, and linear functors between them.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::field::{Field, Scalar};
use crate::linalg::{add_scaled, unit_vec, zero_vec, Matrix, Span, Vector};
use crate::presentation::{AlgebraPresentation, PresentationError};
use crate::quiver::{Element, Path};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CategoryError {
    #[error("composition is not associative at {0}")]
    NotAssociative(String),
    #[error("identity law fails at {0}")]
    Identity(String),
    #[error("functor fails at {0}")]
    NotFunctorial(String),
    #[error("{0}")]
    Mismatch(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinCategory {
    pub field: Field,
    pub objects: Vec<String>,
    labels: Vec<Vec<String>>,
    table: Vec<Vec<Vector>>,
    ids: Vec<Vector>,
}

impl LinCategory {
    /// Builds the category from basis labels, basis compositions `compose(x, y, z, i, j) = g_i f_j`
    /// for `f_j` in `(x, y)` and `g_i` in `(y, z)`, and identities.
    pub fn build(
        field: Field,
        objects: Vec<String>,
        labels: Vec<Vec<String>>,
        mut compose: impl FnMut(usize, usize, usize, usize, usize) -> Vector,
        ids: Vec<Vector>,
    ) -> Self {
        let n = objects.len();
        assert_eq!(labels.len(), n * n, "labels must be indexed by object pairs");
        let mut table = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (dxy, dyz) = (labels[x * n + y].len(), labels[y * n + z].len());
                    let mut t = Vec::with_capacity(dxy * dyz);
                    for i in 0..dyz {
                        for j in 0..dxy {
                            let v = compose(x, y, z, i, j);
                            debug_assert_eq!(v.len(), labels[x * n + z].len());
                            t.push(v);
                        }
                    }
                    table.push(t);
                }
            }
        }
        LinCategory {
            field,
            objects,
            labels,
            table,
            ids,
        }
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn dim(&self, x: usize, y: usize) -> usize {
        self.labels[x * self.num_objects() + y].len()
    }

    pub fn labels(&self, x: usize, y: usize) -> &[String] {
        &self.labels[x * self.num_objects() + y]
    }

    pub fn total_dim(&self) -> usize {
        self.labels.iter().map(Vec::len).sum()
    }

    pub fn identity(&self, x: usize) -> &Vector {
        &self.ids[x]
    }

    pub fn zero(&self, x: usize, y: usize) -> Vector {
        zero_vec(self.field, self.dim(x, y))
    }

    pub fn basis_vec(&self, x: usize, y: usize, i: usize) -> Vector {
        unit_vec(self.field, self.dim(x, y), i)
    }

    /// `g_i * f_j` for basis elements.
    pub fn compose_basis(&self, x: usize, y: usize, z: usize, i: usize, j: usize) -> &Vector {
        let n = self.num_objects();
        &self.table[(x * n + y) * n + z][i * self.dim(x, y) + j]
    }

    /// `g * f` for `f` in `(x, y)` and `g` in `(y, z)`.
    pub fn compose(&self, x: usize, y: usize, z: usize, g: &[Scalar], f: &[Scalar]) -> Vector {
        let mut out = self.zero(x, z);
        for (i, gi) in g.iter().enumerate() {
            if gi.is_zero() {
                continue;
            }
            for (j, fj) in f.iter().enumerate() {
                if fj.is_zero() {
                    continue;
                }
                add_scaled(&mut out, &(gi * fj), self.compose_basis(x, y, z, i, j));
            }
        }
        out
    }

    /// Checks identities and associativity on all basis triples.
    pub fn verify(&self) -> Result<(), CategoryError> {
        let n = self.num_objects();
        for x in 0..n {
            for y in 0..n {
                for j in 0..self.dim(x, y) {
                    let f = self.basis_vec(x, y, j);
                    if self.compose(x, y, y, self.identity(y), &f) != f || self.compose(x, x, y, &f, self.identity(x)) != f {
                        return Err(CategoryError::Identity(format!("{} -> {} #{j}", self.objects[x], self.objects[y])));
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for w in 0..n {
                        for a in 0..self.dim(x, y) {
                            for b in 0..self.dim(y, z) {
                                let ba = self.compose_basis(x, y, z, b, a);
                                for c in 0..self.dim(z, w) {
                                    let left = self.compose(x, z, w, &self.basis_vec(z, w, c), ba);
                                    let cb = self.compose_basis(y, z, w, c, b);
                                    let right = self.compose(x, y, w, cb, &self.basis_vec(x, y, a));
                                    if left != right {
                                        return Err(CategoryError::NotAssociative(format!(
                                            "{} -> {} -> {} -> {}",
                                            self.objects[x], self.objects[y], self.objects[z], self.objects[w]
                                        )));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Full subcategory on `objs`, in the given order.
    pub fn full_subcategory(&self, objs: &[usize]) -> LinCategory {
        let m = objs.len();
        let mut labels = Vec::with_capacity(m * m);
        for &x in objs {
            for &y in objs {
                labels.push(self.labels(x, y).to_vec());
            }
        }
        LinCategory::build(
            self.field,
            objs.iter().map(|&x| self.objects[x].clone()).collect(),
            labels,
            |x, y, z, i, j| self.compose_basis(objs[x], objs[y], objs[z], i, j).clone(),
            objs.iter().map(|&x| self.ids[x].clone()).collect(),
        )
    }

    /// Solves for a two-sided inverse of `f: x -> y`.
    pub fn inverse_of(&self, x: usize, y: usize, f: &[Scalar]) -> Option<Vector> {
        let (dyx, dxx, dyy) = (self.dim(y, x), self.dim(x, x), self.dim(y, y));
        let mut cols = Vec::with_capacity(dyx);
        for i in 0..dyx {
            let g = self.basis_vec(y, x, i);
            let mut c = self.compose(x, y, x, &g, f);
            c.extend(self.compose(y, x, y, f, &g));
            cols.push(c);
        }
        let mut rhs = self.identity(x).clone();
        rhs.extend(self.identity(y).iter().cloned());
        if dyx == 0 {
            return if dxx + dyy == 0 { Some(Vec::new()) } else { None };
        }
        Matrix::from_cols(self.field, dxx + dyy, &cols).solve(&rhs)
    }

    pub fn is_iso(&self, x: usize, y: usize, f: &[Scalar]) -> bool {
        self.inverse_of(x, y, f).is_some()
    }

    pub fn fmt_morphism(&self, x: usize, y: usize, f: &[Scalar]) -> String {
        let mut out = String::new();
        for (i, c) in f.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            match (out.is_empty(), neg) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            if !mag.is_one() {
                out.push_str(&format!("{mag} "));
            }
            out.push_str(&self.labels(x, y)[i]);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// A presented algebra viewed as a category, with its path basis.
#[derive(Clone, Debug)]
pub struct PathCategory {
    pub cat: LinCategory,
    pub paths: Vec<Vec<Path>>,
    index: BTreeMap<Path, usize>,
}

impl PathCategory {
    pub fn new(a: &AlgebraPresentation, max_len: usize) -> Result<Self, PresentationError> {
        let n = a.quiver.num_vertices();
        let basis = a.basis(max_len)?;
        let mut paths = alloc::vec![Vec::new(); n * n];
        for p in basis {
            paths[p.source * n + p.target].push(p);
        }
        let mut index = BTreeMap::new();
        for ps in &paths {
            for (i, p) in ps.iter().enumerate() {
                index.insert(p.clone(), i);
            }
        }
        let labels = paths.iter().map(|ps| ps.iter().map(|p| a.quiver.fmt_path(p)).collect()).collect();
        let k = a.field;
        let coords = |e: &Element, x: usize, z: usize| -> Vector {
            let mut v = zero_vec(k, paths[x * n + z].len());
            for (p, c) in e.terms() {
                v[index[p]] = c.clone();
            }
            v
        };
        let cat = LinCategory::build(
            k,
            a.quiver.vertices().to_vec(),
            labels,
            |x, y, z, i, j| {
                let f = &paths[x * n + y][j];
                let g = &paths[y * n + z][i];
                let e = a.reduce(&Element::path(k, f.then(g).unwrap()));
                coords(&e, x, z)
            },
            (0..n).map(|x| unit_vec(k, paths[x * n + x].len(), index[&Path::trivial(x)])).collect(),
        );
        Ok(PathCategory { cat, paths, index })
    }

    /// Coordinates of a normal-form element lying in `(x, y)`.
    pub fn coords(&self, x: usize, y: usize, e: &Element) -> Option<Vector> {
        let mut v = self.cat.zero(x, y);
        for (p, c) in e.terms() {
            if p.source != x || p.target != y {
                return None;
            }
            v[*self.index.get(p)?] = c.clone();
        }
        Some(v)
    }

    pub fn element(&self, x: usize, y: usize, v: &[Scalar]) -> Element {
        let n = self.cat.num_objects();
        let mut e = Element::zero(self.cat.field);
        for (p, c) in self.paths[x * n + y].iter().zip(v) {
            e.add_term(p.clone(), c.clone());
        }
        e
    }
}

/// A linear functor given on objects and by one matrix per Hom space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinFunctor {
    pub objects: Vec<usize>,
    /// `maps[x * n + y]` sends `(x, y)` into `(Fx, Fy)`.
    pub maps: Vec<Matrix>,
}

impl LinFunctor {
    pub fn build(src: &LinCategory, tgt: &LinCategory, objects: Vec<usize>, mut f: impl FnMut(usize, usize, usize) -> Vector) -> Self {
        let n = src.num_objects();
        let mut maps = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let cols: Vec<Vector> = (0..src.dim(x, y)).map(|i| f(x, y, i)).collect();
                maps.push(Matrix::from_cols(src.field, tgt.dim(objects[x], objects[y]), &cols));
            }
        }
        LinFunctor { objects, maps }
    }

    pub fn apply(&self, x: usize, y: usize, v: &[Scalar]) -> Vector {
        let n = self.objects.len();
        self.maps[x * n + y].mul_vec(v)
    }

    /// Checks identities and composition on basis pairs.
    pub fn verify(&self, src: &LinCategory, tgt: &LinCategory) -> Result<(), CategoryError> {
        let n = src.num_objects();
        for x in 0..n {
            if self.apply(x, x, src.identity(x)) != *tgt.identity(self.objects[x]) {
                return Err(CategoryError::NotFunctorial(format!("identity of {}", src.objects[x])));
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for j in 0..src.dim(x, y) {
                        let fj = self.apply(x, y, &src.basis_vec(x, y, j));
                        for i in 0..src.dim(y, z) {
                            let gi = self.apply(y, z, &src.basis_vec(y, z, i));
                            let lhs = self.apply(x, z, src.compose_basis(x, y, z, i, j));
                            let rhs = tgt.compose(self.objects[x], self.objects[y], self.objects[z], &gi, &fj);
                            if lhs != rhs {
                                return Err(CategoryError::NotFunctorial(format!(
                                    "{} -> {} -> {}",
                                    src.objects[x], src.objects[y], src.objects[z]
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// True when every Hom map is bijective.
    pub fn is_fully_faithful(&self, src: &LinCategory, tgt: &LinCategory) -> bool {
        let n = src.num_objects();
        (0..n).all(|x| {
            (0..n).all(|y| {
                let m = &self.maps[x * n + y];
                src.dim(x, y) == tgt.dim(self.objects[x], self.objects[y]) && m.rank() == src.dim(x, y)
            })
        })
    }
}

/// Coordinates of vectors against a fixed basis of a subspace.
#[derive(Clone, Debug)]
pub struct Coordinates {
    span: Span,
}

impl Coordinates {
    pub fn new(field: Field, ambient: usize, basis: &[Vector]) -> Self {
        let span = Span::from_vectors(field, ambient, basis);
        assert_eq!(span.rank(), basis.len(), "basis vectors must be independent");
        Coordinates { span }
    }

    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        self.span.coords(v)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.span.contains(v)
    }

    pub fn len(&self) -> usize {
        self.span.rank()
    }

    pub fn is_empty(&self) -> bool {
        self.span.rank() == 0
    }
}

#[cfg(test)]
mod tests {
    use crate::field::Field;
    use crate::testing::doubled_a3;

    #[test]
    fn path_category_of_a_tree() {
        let (act, _) = doubled_a3(Field::Rationals);
        let pc = super::PathCategory::new(&act.algebra, 8).unwrap();
        let c = &pc.cat;
        c.verify().unwrap();
        assert_eq!(c.total_dim(), 11);
        assert_eq!((c.dim(0, 3), c.dim(3, 0), c.dim(1, 4)), (1, 0, 0));
        // b after a is the path 1 -> 3
        let (a, b) = (c.basis_vec(0, 1, 0), c.basis_vec(1, 3, 0));
        assert_eq!(c.compose(0, 1, 3, &b, &a), c.basis_vec(0, 3, 0));
        assert_eq!(c.labels(0, 3)[0], "b*a");
        assert!(c.is_iso(2, 2, c.identity(2)));
        assert!(!c.is_iso(0, 1, &a));
    }

    #[test]
    fn full_subcategories_keep_composition() {
        let (act, _) = doubled_a3(Field::Prime(5));
        let c = super::PathCategory::new(&act.algebra, 8).unwrap().cat;
        let s = c.full_subcategory(&[0, 3]);
        s.verify().unwrap();
        assert_eq!(s.objects, ["1", "3"]);
        assert_eq!(s.total_dim(), 3);
    }
}
