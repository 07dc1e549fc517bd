//! Finite-dimensional right modules (contravariant functors to vector spaces),
//! pullup, pushdown, twists and the adjunction between pushdown and pullup.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::category::{LinCategory, LinFunctor, PathCategory};
use crate::field::{Field, Scalar};
use crate::graded::GradedCategory;
use crate::linalg::{is_zero_vec, unit_vec, Matrix, Span, Vector};
use crate::orbit::{CatGAction, OrbitCategory};
use crate::presentation::AlgebraPresentation;
use crate::quiver::{Element, Path};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ModuleError {
    #[error("module is not a functor: {0}")]
    NotFunctorial(String),
    #[error("relation {0} does not act as zero")]
    RelationNotKilled(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invariance adjuster is invalid: {0}")]
    AdjusterInvalid(String),
}

/// A module over a finite linear category: `maps[x * n + y][i]` is `M(f_i): M(y) -> M(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module {
    pub field: Field,
    pub dims: Vec<usize>,
    pub maps: Vec<Vec<Matrix>>,
}

/// A module morphism, one matrix `X(x) -> Y(x)` per object.
pub type ModuleMap = Vec<Matrix>;

impl Module {
    pub fn num_objects(&self) -> usize {
        self.dims.len()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// `M(f)` for `f` in `C(x, y)` given in coordinates.
    pub fn apply(&self, x: usize, y: usize, f: &[Scalar]) -> Matrix {
        let n = self.num_objects();
        let mut m = Matrix::zeros(self.field, self.dims[x], self.dims[y]);
        for (c, b) in f.iter().zip(&self.maps[x * n + y]) {
            if !c.is_zero() {
                m = m.add(&b.scaled(c));
            }
        }
        m
    }

    pub fn verify(&self, c: &LinCategory) -> Result<(), ModuleError> {
        let n = c.num_objects();
        if self.dims.len() != n {
            return Err(ModuleError::Shape(format!("{} spaces for {n} objects", self.dims.len())));
        }
        for x in 0..n {
            for y in 0..n {
                let ms = &self.maps[x * n + y];
                if ms.len() != c.dim(x, y) || ms.iter().any(|m| m.rows != self.dims[x] || m.cols != self.dims[y]) {
                    return Err(ModuleError::Shape(format!("maps for ({}, {})", c.objects[x], c.objects[y])));
                }
            }
            if self.apply(x, x, c.identity(x)) != Matrix::identity(self.field, self.dims[x]) {
                return Err(ModuleError::NotFunctorial(format!("identity of {}", c.objects[x])));
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for i in 0..c.dim(y, z) {
                        for j in 0..c.dim(x, y) {
                            let gf = self.apply(x, z, c.compose_basis(x, y, z, i, j));
                            let prod = self.maps[x * n + y][j].mul(&self.maps[y * n + z][i]);
                            if gf != prod {
                                return Err(ModuleError::NotFunctorial(format!(
                                    "{} -> {} -> {}",
                                    c.objects[x], c.objects[y], c.objects[z]
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The representable module `C(-, z)`.
    pub fn representable(c: &LinCategory, z: usize) -> Self {
        let n = c.num_objects();
        let k = c.field;
        let dims = (0..n).map(|x| c.dim(x, z)).collect();
        let mut maps = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                maps.push(
                    (0..c.dim(x, y))
                        .map(|i| {
                            let cols: Vec<Vector> = (0..c.dim(y, z)).map(|j| c.compose_basis(x, y, z, j, i).clone()).collect();
                            Matrix::from_cols(k, c.dim(x, z), &cols)
                        })
                        .collect(),
                );
            }
        }
        Module { field: k, dims, maps }
    }

    /// `C(-, z)` summed over all objects.
    pub fn regular(c: &LinCategory) -> Self {
        let parts: Vec<Module> = (0..c.num_objects()).map(|z| Module::representable(c, z)).collect();
        Module::direct_sum(c, &parts)
    }

    pub fn zero(c: &LinCategory) -> Self {
        let n = c.num_objects();
        let k = c.field;
        let mut maps = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                maps.push(vec![Matrix::zeros(k, 0, 0); c.dim(x, y)]);
            }
        }
        Module { field: k, dims: vec![0; n], maps }
    }

    pub fn direct_sum(c: &LinCategory, parts: &[Module]) -> Self {
        let n = c.num_objects();
        let k = c.field;
        if parts.is_empty() {
            return Module::zero(c);
        }
        let dims: Vec<usize> = (0..n).map(|x| parts.iter().map(|p| p.dims[x]).sum()).collect();
        let mut maps = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                maps.push(
                    (0..c.dim(x, y))
                        .map(|i| block_diagonal(k, &parts.iter().map(|p| p.maps[x * n + y][i].clone()).collect::<Vec<_>>()))
                        .collect(),
                );
            }
        }
        Module { field: k, dims, maps }
    }
}

pub fn block_diagonal(k: Field, blocks: &[Matrix]) -> Matrix {
    let rows = blocks.iter().map(|b| b.rows).sum();
    let cols = blocks.iter().map(|b| b.cols).sum();
    let mut m = Matrix::zeros(k, rows, cols);
    let (mut r0, mut c0) = (0, 0);
    for b in blocks {
        for i in 0..b.rows {
            for j in 0..b.cols {
                m.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
        r0 += b.rows;
        c0 += b.cols;
    }
    m
}

fn sub_block(m: &Matrix, r0: usize, rows: usize, c0: usize, cols: usize) -> Matrix {
    let mut out = Matrix::zeros(m.field, rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            out.set(i, j, m.get(r0 + i, c0 + j).clone());
        }
    }
    out
}

fn put_block(m: &mut Matrix, r0: usize, c0: usize, b: &Matrix) {
    for i in 0..b.rows {
        for j in 0..b.cols {
            m.set(r0 + i, c0 + j, b.get(i, j).clone());
        }
    }
}

/// A representation of a quiver: `arrows[a]` is `M(a): M(head) -> M(tail)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub field: Field,
    pub dims: Vec<usize>,
    pub arrows: Vec<Matrix>,
}

impl Representation {
    pub fn simple(a: &AlgebraPresentation, v: usize) -> Self {
        let q = &a.quiver;
        let dims: Vec<usize> = (0..q.num_vertices()).map(|x| usize::from(x == v)).collect();
        let arrows = q.arrows().iter().map(|ar| Matrix::zeros(a.field, dims[ar.tail], dims[ar.head])).collect();
        Representation { field: a.field, dims, arrows }
    }

    /// `M(p) = M(a_1) M(a_2) ... M(a_k)` for `p` traversing `a_1` first.
    pub fn eval_path(&self, p: &Path) -> Matrix {
        let mut m = Matrix::identity(self.field, self.dims[p.source]);
        for &ar in &p.arrows {
            m = m.mul(&self.arrows[ar]);
        }
        m
    }

    pub fn eval(&self, e: &Element) -> Option<Matrix> {
        let (s, t) = e.endpoints()?;
        let mut m = Matrix::zeros(self.field, self.dims[s], self.dims[t]);
        for (p, c) in e.terms() {
            m = m.add(&self.eval_path(p).scaled(c));
        }
        Some(m)
    }

    pub fn check_relations(&self, a: &AlgebraPresentation) -> Result<(), ModuleError> {
        let q = &a.quiver;
        if self.dims.len() != q.num_vertices() || self.arrows.len() != q.num_arrows() {
            return Err(ModuleError::Shape(String::from("one space per vertex and one matrix per arrow")));
        }
        for (ar, m) in q.arrows().iter().zip(&self.arrows) {
            if m.rows != self.dims[ar.tail] || m.cols != self.dims[ar.head] {
                return Err(ModuleError::Shape(format!("matrix of {}", ar.label)));
            }
        }
        for r in &a.relations {
            for piece in r.split_uniform() {
                if let Some(m) = self.eval(&piece) {
                    if !m.is_zero() {
                        return Err(ModuleError::RelationNotKilled(q.fmt_element(r)));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_module(&self, pc: &PathCategory) -> Module {
        let maps = pc
            .paths
            .iter()
            .map(|ps| ps.iter().map(|p| self.eval_path(p)).collect())
            .collect();
        Module {
            field: self.field,
            dims: self.dims.clone(),
            maps,
        }
    }

    pub fn from_module(a: &AlgebraPresentation, pc: &PathCategory, m: &Module) -> Self {
        let arrows = a
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, ar)| {
                let v = pc.coords(ar.tail, ar.head, &a.reduce(&a.arrow(i))).expect("arrow lies in its Hom space");
                m.apply(ar.tail, ar.head, &v)
            })
            .collect();
        Representation {
            field: m.field,
            dims: m.dims.clone(),
            arrows,
        }
    }
}

fn hom_unknowns(x: &Module, y: &Module) -> (Vec<usize>, usize) {
    let mut offs = Vec::with_capacity(x.dims.len());
    let mut total = 0;
    for (dx, dy) in x.dims.iter().zip(&y.dims) {
        offs.push(total);
        total += dx * dy;
    }
    (offs, total)
}

fn unflatten(x: &Module, y: &Module, offs: &[usize], v: &[Scalar]) -> ModuleMap {
    (0..x.dims.len())
        .map(|o| {
            let (dx, dy) = (x.dims[o], y.dims[o]);
            let mut m = Matrix::zeros(x.field, dy, dx);
            for r in 0..dy {
                for c in 0..dx {
                    m.set(r, c, v[offs[o] + r * dx + c].clone());
                }
            }
            m
        })
        .collect()
}

pub fn flatten(t: &ModuleMap) -> Vector {
    t.iter().flat_map(|m| m.entries().to_vec()).collect()
}

/// Basis of `Hom(X, Y)`: families `t_x` with `t_x X(f) = Y(f) t_y`.
pub fn hom(c: &LinCategory, x: &Module, y: &Module) -> Vec<ModuleMap> {
    let n = c.num_objects();
    let k = c.field;
    let (offs, total) = hom_unknowns(x, y);
    if total == 0 {
        return Vec::new();
    }
    let mut rows: Vec<Vector> = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for i in 0..c.dim(a, b) {
                let xf = &x.maps[a * n + b][i];
                let yf = &y.maps[a * n + b][i];
                // (t_a X(f) - Y(f) t_b)[r][s], r < dY(a), s < dX(b)
                for r in 0..y.dims[a] {
                    for s in 0..x.dims[b] {
                        let mut row = crate::linalg::zero_vec(k, total);
                        for m in 0..x.dims[a] {
                            let e = xf.get(m, s);
                            if !e.is_zero() {
                                row[offs[a] + r * x.dims[a] + m] += e;
                            }
                        }
                        for m in 0..y.dims[b] {
                            let e = yf.get(r, m);
                            if !e.is_zero() {
                                row[offs[b] + m * x.dims[b] + s] -= e;
                            }
                        }
                        if !is_zero_vec(&row) {
                            rows.push(row);
                        }
                    }
                }
            }
        }
    }
    let sols = if rows.is_empty() {
        (0..total).map(|i| unit_vec(k, total, i)).collect()
    } else {
        Matrix::from_rows(k, total, &rows).nullspace()
    };
    sols.iter().map(|v| unflatten(x, y, &offs, v)).collect()
}

pub fn is_morphism(c: &LinCategory, x: &Module, y: &Module, t: &ModuleMap) -> bool {
    let n = c.num_objects();
    if t.len() != n || (0..n).any(|o| t[o].rows != y.dims[o] || t[o].cols != x.dims[o]) {
        return false;
    }
    (0..n).all(|a| {
        (0..n).all(|b| (0..c.dim(a, b)).all(|i| t[a].mul(&x.maps[a * n + b][i]) == y.maps[a * n + b][i].mul(&t[b])))
    })
}

/// `F.N = N o F`.
pub fn pullup(f: &LinFunctor, src: &LinCategory, n_mod: &Module) -> Module {
    let n = src.num_objects();
    let dims = (0..n).map(|x| n_mod.dims[f.objects[x]]).collect();
    let mut maps = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            maps.push(
                (0..src.dim(x, y))
                    .map(|i| n_mod.apply(f.objects[x], f.objects[y], &f.apply(x, y, &src.basis_vec(x, y, i))))
                    .collect(),
            );
        }
    }
    Module {
        field: n_mod.field,
        dims,
        maps,
    }
}

/// `^a X = X o A_{a^-1}`.
pub fn twist(c: &LinCategory, g: &CatGAction, a: usize, x: &Module) -> Module {
    let n = c.num_objects();
    let ai = g.inv(a);
    let obj: Vec<usize> = (0..n).map(|o| g.obj(ai, o).unwrap()).collect();
    let dims = obj.iter().map(|&o| x.dims[o]).collect();
    let mut maps = Vec::with_capacity(n * n);
    for p in 0..n {
        for q in 0..n {
            maps.push(
                (0..c.dim(p, q))
                    .map(|i| x.apply(obj[p], obj[q], &g.act(ai, p, q, &c.basis_vec(p, q, i)).unwrap()))
                    .collect(),
            );
        }
    }
    Module { field: x.field, dims, maps }
}

/// A module with a decomposition `M(x) = sum_a M^a(x)` into coordinate blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedModule {
    pub module: Module,
    /// `components[x][a]`: basis of `M^a(x)` inside `M(x)`.
    pub components: Vec<Vec<Vec<Vector>>>,
}

impl GradedModule {
    /// `M(f)` sends `M^a(y)` into `M^{ab}(x)` for `f: x -> y` of degree `b`.
    pub fn verify(&self, b: &GradedCategory) -> Result<(), ModuleError> {
        let n = b.cat.num_objects();
        let k = b.cat.field;
        let m = b.group.len();
        for x in 0..n {
            let all: Vec<Vector> = self.components[x].iter().flatten().cloned().collect();
            if all.len() != self.module.dims[x] || Span::from_vectors(k, self.module.dims[x], &all).rank() != all.len() {
                return Err(ModuleError::Shape(format!("components do not decompose M({})", b.cat.objects[x])));
            }
        }
        for x in 0..n {
            for y in 0..n {
                for (deg, f) in &b.homogeneous[x * n + y] {
                    let mf = self.module.apply(x, y, f);
                    for a in 0..m {
                        let tgt = Span::from_vectors(k, self.module.dims[x], &self.components[x][b.group.mul(a, *deg)]);
                        for v in &self.components[y][a] {
                            if !tgt.contains(&mf.mul_vec(v)) {
                                return Err(ModuleError::Shape(format!(
                                    "degree {} morphism {} -> {} breaks the grading",
                                    b.group.name(*deg),
                                    b.cat.objects[x],
                                    b.cat.objects[y]
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_degree_preserving(&self, other: &GradedModule, t: &ModuleMap) -> bool {
        let k = self.module.field;
        (0..self.module.dims.len()).all(|x| {
            self.components[x].iter().zip(&other.components[x]).all(|(src, tgt)| {
                let sp = Span::from_vectors(k, other.module.dims[x], tgt);
                src.iter().all(|v| sp.contains(&t[x].mul_vec(v)))
            })
        })
    }
}

/// Offsets of the blocks `X(ax)` inside `(P.X)(x)`.
pub fn pushdown_offsets(g: &CatGAction, x: &Module, o: usize) -> Vec<usize> {
    let mut offs = Vec::with_capacity(g.len());
    let mut t = 0;
    for a in 0..g.len() {
        offs.push(t);
        t += x.dims[g.obj(a, o).unwrap()];
    }
    offs
}

/// `(P.X)(x) = sum_a X(ax)` with `(P.X)(f)` having blocks `X(f_{b,a})`, graded by `a`.
pub fn pushdown(c: &LinCategory, g: &CatGAction, orbit: &OrbitCategory, x: &Module) -> GradedModule {
    let n = c.num_objects();
    let k = c.field;
    let m = g.len();
    let obj = |a: usize, o: usize| g.obj(a, o).unwrap();
    let dims: Vec<usize> = (0..n).map(|o| (0..m).map(|a| x.dims[obj(a, o)]).sum()).collect();
    let offs: Vec<Vec<usize>> = (0..n).map(|o| pushdown_offsets(g, x, o)).collect();
    let mut maps = Vec::with_capacity(n * n);
    for p in 0..n {
        for q in 0..n {
            let lay = orbit.layout(p, q);
            maps.push(
                orbit.matrices[p * n + q]
                    .iter()
                    .map(|v| {
                        let mut mat = Matrix::zeros(k, dims[p], dims[q]);
                        for a in 0..m {
                            for b in 0..m {
                                let blk = x.apply(obj(a, p), obj(b, q), lay.block(v, b, a));
                                put_block(&mut mat, offs[p][a], offs[q][b], &blk);
                            }
                        }
                        mat
                    })
                    .collect(),
            );
        }
    }
    let components = (0..n)
        .map(|o| {
            (0..m)
                .map(|a| (0..x.dims[obj(a, o)]).map(|i| unit_vec(k, dims[o], offs[o][a] + i)).collect())
                .collect()
        })
        .collect();
    GradedModule {
        module: Module { field: k, dims, maps },
        components,
    }
}

/// `P.u = sum_a u_{ax}`.
pub fn pushdown_morphism(c: &LinCategory, g: &CatGAction, u: &ModuleMap) -> ModuleMap {
    (0..c.num_objects())
        .map(|o| block_diagonal(c.field, &(0..g.len()).map(|a| u[g.obj(a, o).unwrap()].clone()).collect::<Vec<_>>()))
        .collect()
}

/// `(theta t)_x = t_{x,1}`.
pub fn theta(c: &LinCategory, g: &CatGAction, x: &Module, t: &ModuleMap) -> ModuleMap {
    let one = g.identity();
    (0..c.num_objects())
        .map(|o| {
            let offs = pushdown_offsets(g, x, o);
            sub_block(&t[o], 0, t[o].rows, offs[one], x.dims[g.obj(one, o).unwrap()])
        })
        .collect()
}

/// `(theta^-1 f)_x = (Y(phi_{a,x}) f_{ax})_a`.
pub fn theta_inv(c: &LinCategory, g: &CatGAction, orbit: &OrbitCategory, x: &Module, y: &Module, f: &ModuleMap) -> ModuleMap {
    let phi = orbit.adjuster(c, g);
    (0..c.num_objects())
        .map(|o| {
            let offs = pushdown_offsets(g, x, o);
            let total: usize = (0..g.len()).map(|a| x.dims[g.obj(a, o).unwrap()]).sum();
            let mut t = Matrix::zeros(c.field, y.dims[o], total);
            for a in 0..g.len() {
                let ao = g.obj(a, o).unwrap();
                let blk = y.apply(o, ao, &phi[a][o]).mul(&f[ao]);
                put_block(&mut t, 0, offs[a], &blk);
            }
            t
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaReport {
    pub dim_left: usize,
    pub dim_right: usize,
    pub round_trips: bool,
    pub morphisms: bool,
}

impl ThetaReport {
    pub fn ok(&self) -> bool {
        self.dim_left == self.dim_right && self.round_trips && self.morphisms
    }
}

/// Checks `theta` and `theta^-1` on Hom bases of `Hom(P.X, Y)` and `Hom(X, P^.Y)`.
pub fn check_theta(c: &LinCategory, g: &CatGAction, orbit: &OrbitCategory, x: &Module, y: &Module) -> ThetaReport {
    let p = orbit.functor_p(c, g);
    let px = pushdown(c, g, orbit, x).module;
    let py = pullup(&p, c, y);
    let left = hom(&orbit.cat, &px, y);
    let right = hom(c, x, &py);
    let mut round = true;
    let mut morph = true;
    for t in &left {
        let f = theta(c, g, x, t);
        morph &= is_morphism(c, x, &py, &f);
        round &= theta_inv(c, g, orbit, x, y, &f) == *t;
    }
    for f in &right {
        let t = theta_inv(c, g, orbit, x, y, f);
        morph &= is_morphism(&orbit.cat, &px, y, &t);
        round &= theta(c, g, x, &t) == *f;
    }
    ThetaReport {
        dim_left: left.len(),
        dim_right: right.len(),
        round_trips: round,
        morphisms: morph,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePrecoverReport {
    /// `sum_a dim Hom(X, ^a Y)`.
    pub source_dim: usize,
    /// `dim Hom(P.X, P.Y)`.
    pub target_dim: usize,
    pub rank: usize,
    pub images_are_morphisms: bool,
}

impl ModulePrecoverReport {
    pub fn bijective(&self) -> bool {
        self.images_are_morphisms && self.source_dim == self.rank && self.rank == self.target_dim
    }
}

/// The map `sum_a Hom(X, ^a Y) -> Hom(P.X, P.Y)` through `Hom(X, P^.P.Y)`.
pub fn check_module_precovering(c: &LinCategory, g: &CatGAction, orbit: &OrbitCategory, x: &Module, y: &Module) -> ModulePrecoverReport {
    let k = c.field;
    let n = c.num_objects();
    let px = pushdown(c, g, orbit, x).module;
    let pyg = pushdown(c, g, orbit, y);
    let py = &pyg.module;
    let target = hom(&orbit.cat, &px, py);
    let mut images = Vec::new();
    let mut ok = true;
    for a in 0..g.len() {
        let ty = twist(c, g, a, y);
        let ai = g.inv(a);
        for u in hom(c, x, &ty) {
            // u_x lands in Y(a^-1 x), the a^-1 block of (P.Y)(x)
            let v: ModuleMap = (0..n)
                .map(|o| {
                    let offs = pushdown_offsets(g, y, o);
                    let mut m = Matrix::zeros(k, py.dims[o], x.dims[o]);
                    put_block(&mut m, offs[ai], 0, &u[o]);
                    m
                })
                .collect();
            let t = theta_inv(c, g, orbit, x, py, &v);
            ok &= is_morphism(&orbit.cat, &px, py, &t);
            images.push(flatten(&t));
        }
    }
    let width = images.first().map_or(0, |v| v.len());
    let rank = Span::from_vectors(k, width, &images).rank();
    ModulePrecoverReport {
        source_dim: images.len(),
        target_dim: target.len(),
        rank,
        images_are_morphisms: ok,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedEquivalenceReport {
    /// Every degree-preserving `g: P.X -> P.X'` equals `P.f` with `f_x = g_{1,x}`.
    pub full: bool,
    /// `dim Hom(X, X')` equals the dimension of degree-preserving maps.
    pub faithful_dims: bool,
    /// `g_{1,ax} = g_{a,x}` on the diagonal blocks of every degree-preserving `g`.
    pub block_witness: bool,
    /// Number of degree-preserving basis maps examined.
    pub samples: usize,
}

fn degree_preserving(c: &LinCategory, g: &CatGAction, x: &Module, x2: &Module, maps: &[ModuleMap]) -> Vec<ModuleMap> {
    let k = c.field;
    let n = c.num_objects();
    if maps.is_empty() {
        return Vec::new();
    }
    let m = g.len();
    // coordinates of the off-diagonal blocks as linear functionals on the basis
    let mut rows: Vec<Vector> = Vec::new();
    for o in 0..n {
        let so = pushdown_offsets(g, x, o);
        let to = pushdown_offsets(g, x2, o);
        for a in 0..m {
            for b in 0..m {
                if a == b {
                    continue;
                }
                let (rd, cd) = (x2.dims[g.obj(b, o).unwrap()], x.dims[g.obj(a, o).unwrap()]);
                for r in 0..rd {
                    for s in 0..cd {
                        rows.push(maps.iter().map(|t| t[o].get(to[b] + r, so[a] + s).clone()).collect());
                    }
                }
            }
        }
    }
    let combos = if rows.is_empty() {
        (0..maps.len()).map(|i| unit_vec(k, maps.len(), i)).collect()
    } else {
        Matrix::from_rows(k, maps.len(), &rows).nullspace()
    };
    combos
        .iter()
        .map(|co| {
            (0..n)
                .map(|o| {
                    let mut acc = Matrix::zeros(k, maps[0][o].rows, maps[0][o].cols);
                    for (ci, t) in co.iter().zip(maps) {
                        if !ci.is_zero() {
                            acc = acc.add(&t[o].scaled(ci));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Fullness and faithfulness of `P.` onto degree-preserving maps, on one sample pair.
pub fn check_graded_full_faithful(c: &LinCategory, g: &CatGAction, orbit: &OrbitCategory, x: &Module, x2: &Module) -> GradedEquivalenceReport {
    let px = pushdown(c, g, orbit, x).module;
    let px2 = pushdown(c, g, orbit, x2).module;
    let all = hom(&orbit.cat, &px, &px2);
    let dp = degree_preserving(c, g, x, x2, &all);
    let one = g.identity();
    let mut full = true;
    let mut block_witness = true;
    let diag = |gm: &ModuleMap, a: usize, o: usize| {
        let ao = g.obj(a, o).unwrap();
        sub_block(&gm[o], pushdown_offsets(g, x2, o)[a], x2.dims[ao], pushdown_offsets(g, x, o)[a], x.dims[ao])
    };
    for gm in &dp {
        for o in 0..c.num_objects() {
            for a in 0..g.len() {
                block_witness &= diag(gm, a, o) == diag(gm, one, g.obj(a, o).unwrap());
            }
        }
        let f: ModuleMap = (0..c.num_objects())
            .map(|o| {
                let so = pushdown_offsets(g, x, o);
                let to = pushdown_offsets(g, x2, o);
                let oo = g.obj(one, o).unwrap();
                sub_block(&gm[o], to[one], x2.dims[oo], so[one], x.dims[oo])
            })
            .collect();
        full &= is_morphism(c, x, x2, &f) && pushdown_morphism(c, g, &f) == *gm;
    }
    GradedEquivalenceReport {
        full,
        faithful_dims: hom(c, x, x2).len() == dp.len(),
        block_witness,
        samples: dp.len(),
    }
}

/// `M(x) = N^1(x)` with `M(f) = N(Pf)` restricted.
pub fn degree_one_part(c: &LinCategory, g: &CatGAction, orbit: &OrbitCategory, nm: &GradedModule) -> Result<Module, ModuleError> {
    let k = c.field;
    let n = c.num_objects();
    let one = g.identity();
    let p = orbit.functor_p(c, g);
    let spans: Vec<Span> = (0..n)
        .map(|o| Span::from_vectors(k, nm.module.dims[o], &nm.components[o][one]))
        .collect();
    let dims = (0..n).map(|o| nm.components[o][one].len()).collect();
    let mut maps = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let mut ms = Vec::new();
            for i in 0..c.dim(x, y) {
                let nf = nm.module.apply(x, y, &p.apply(x, y, &c.basis_vec(x, y, i)));
                let mut cols = Vec::new();
                for v in &nm.components[y][one] {
                    let img = nf.mul_vec(v);
                    cols.push(spans[x].coords(&img).ok_or_else(|| {
                        ModuleError::Shape(format!("N(Pf) leaves N^1 at {} -> {}", c.objects[x], c.objects[y]))
                    })?);
                }
                ms.push(Matrix::from_cols(k, nm.components[x][one].len(), &cols));
            }
            maps.push(ms);
        }
    }
    Ok(Module { field: k, dims, maps })
}

/// Builds `M = N^1` and the isomorphism `F: P.M -> N` with blocks `N(phi_{a,x})` restricted to `N^1(ax)`.
pub fn density_certificate(c: &LinCategory, g: &CatGAction, orbit: &OrbitCategory, nm: &GradedModule) -> Result<(Module, ModuleMap), ModuleError> {
    let k = c.field;
    let n = c.num_objects();
    let one = g.identity();
    let m1 = degree_one_part(c, g, orbit, nm)?;
    let phi = orbit.adjuster(c, g);
    let pm = pushdown(c, g, orbit, &m1);
    let mut f = Vec::with_capacity(n);
    for o in 0..n {
        let offs = pushdown_offsets(g, &m1, o);
        let mut mat = Matrix::zeros(k, nm.module.dims[o], pm.module.dims[o]);
        for a in 0..g.len() {
            let ao = g.obj(a, o).unwrap();
            let np = nm.module.apply(o, ao, &phi[a][o]);
            let cols: Vec<Vector> = nm.components[ao][one].iter().map(|v| np.mul_vec(v)).collect();
            let blk = Matrix::from_cols(k, nm.module.dims[o], &cols);
            put_block(&mut mat, 0, offs[a], &blk);
        }
        f.push(mat);
    }
    let ok = is_morphism(&orbit.cat, &pm.module, &nm.module, &f)
        && f.iter().all(|t| t.rows == t.cols && t.inverse().is_some())
        && pm.is_degree_preserving(nm, &f);
    if !ok {
        return Err(ModuleError::Shape(String::from("density map is not a graded isomorphism")));
    }
    Ok((m1, f))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvarianceVerdict {
    Valid,
    Unverifiable,
}

/// `psi[a][x]: M(x) -> M(ax)` must be invertible, natural (`psi_{a,x} M(f) = M(af) psi_{a,y}`)
/// and satisfy `psi_{b,ax} psi_{a,x} = psi_{ba,x}`, `psi_{1,x} = id`.
pub fn check_g_invariant_module(c: &LinCategory, g: &CatGAction, m: &Module, psi: Option<&[Vec<Matrix>]>) -> Result<InvarianceVerdict, ModuleError> {
    let Some(psi) = psi else {
        return Ok(InvarianceVerdict::Unverifiable);
    };
    let n = c.num_objects();
    let bad = |s: String| Err(ModuleError::AdjusterInvalid(s));
    for a in 0..g.len() {
        for x in 0..n {
            let ax = g.obj(a, x).unwrap();
            let p = &psi[a][x];
            if p.rows != m.dims[ax] || p.cols != m.dims[x] || p.inverse().is_none() {
                return bad(format!("psi[{}, {}] is not invertible", g.name(a), c.objects[x]));
            }
        }
        for x in 0..n {
            for y in 0..n {
                let (ax, ay) = (g.obj(a, x).unwrap(), g.obj(a, y).unwrap());
                for i in 0..c.dim(x, y) {
                    let lhs = psi[a][x].mul(&m.maps[x * n + y][i]);
                    let af = g.act(a, x, y, &c.basis_vec(x, y, i)).unwrap();
                    let rhs = m.apply(ax, ay, &af).mul(&psi[a][y]);
                    if lhs != rhs {
                        return bad(format!("psi[{}] is not natural at {} -> {}", g.name(a), c.objects[x], c.objects[y]));
                    }
                }
            }
        }
    }
    for x in 0..n {
        if psi[g.identity()][x] != Matrix::identity(m.field, m.dims[x]) {
            return bad(format!("psi[1, {}] is not the identity", c.objects[x]));
        }
        for a in 0..g.len() {
            for b in 0..g.len() {
                let ax = g.obj(a, x).unwrap();
                if psi[b][ax].mul(&psi[a][x]) != psi[g.mul(b, a)][x] {
                    return bad(format!("cocycle fails for {}, {} at {}", g.name(b), g.name(a), c.objects[x]));
                }
            }
        }
    }
    Ok(InvarianceVerdict::Valid)
}

/// The adjuster of `P^.N`: `psi_{a,x} = N(phi_{a^-1, ax})`.
pub fn canonical_adjuster(c: &LinCategory, g: &CatGAction, orbit: &OrbitCategory, nm: &Module) -> Vec<Vec<Matrix>> {
    let phi = orbit.adjuster(c, g);
    (0..g.len())
        .map(|a| {
            let ai = g.inv(a);
            (0..c.num_objects())
                .map(|x| {
                    let ax = g.obj(a, x).unwrap();
                    nm.apply(ax, x, &phi[ai][ax])
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::random_module;
    use crate::testing::pipeline;

    #[test]
    fn yoneda_dimensions() {
        let p = pipeline(Field::Rationals);
        let c = &p.pc.cat;
        let reps: Vec<Module> = (0..5).map(|z| Module::representable(c, z)).collect();
        for x in 0..5 {
            reps[x].verify(c).unwrap();
            for y in 0..5 {
                assert_eq!(hom(c, &reps[x], &reps[y]).len(), c.dim(x, y));
            }
        }
        assert_eq!(Module::regular(c).total_dim(), 11);
    }

    #[test]
    fn twisting_permutes_representables() {
        let p = pipeline(Field::Prime(7));
        let (c, g) = (&p.pc.cat, &p.ga);
        let a = (0..g.len()).find(|&a| a != g.identity()).unwrap();
        for z in 0..5 {
            let pz = Module::representable(c, z);
            let t = twist(c, g, a, &pz);
            t.verify(c).unwrap();
            assert_eq!(t.dims, Module::representable(c, g.obj(a, z).unwrap()).dims);
            assert_eq!(twist(c, g, a, &t), pz);
            assert_eq!(twist(c, g, g.identity(), &pz), pz);
        }
    }

    #[test]
    fn pushdown_of_the_regular_module() {
        let p = pipeline(Field::Rationals);
        let (c, g, oc) = (&p.pc.cat, &p.ga, &p.oc);
        let reg = Module::regular(c);
        let pd = pushdown(c, g, oc, &reg);
        pd.module.verify(&oc.cat).unwrap();
        assert_eq!(pd.module.total_dim(), 2 * reg.total_dim());
        for x in 0..5 {
            assert_eq!(pushdown_offsets(g, &reg, x).len(), 2);
        }
    }

    #[test]
    fn adjunction_and_precovering_on_random_modules() {
        let p = pipeline(Field::Prime(3));
        let (c, g, oc) = (&p.pc.cat, &p.ga, &p.oc);
        for seed in 0..4 {
            let x = random_module(c, seed);
            let y = random_module(c, seed + 100);
            x.verify(c).unwrap();
            let m = random_module(&oc.cat, seed);
            assert!(check_theta(c, g, oc, &x, &m).ok());
            assert!(check_module_precovering(c, g, oc, &x, &y).bijective());
            let ge = check_graded_full_faithful(c, g, oc, &x, &y);
            assert!(ge.full && ge.faithful_dims && ge.block_witness);
        }
    }

    #[test]
    fn pullups_are_invariant() {
        let p = pipeline(Field::Rationals);
        let (c, g, oc) = (&p.pc.cat, &p.ga, &p.oc);
        let nm = random_module(&oc.cat, 5);
        let m = pullup(&oc.functor_p(c, g), c, &nm);
        let psi = canonical_adjuster(c, g, oc, &nm);
        assert_eq!(check_g_invariant_module(c, g, &m, Some(&psi)), Ok(InvarianceVerdict::Valid));
        assert_eq!(check_g_invariant_module(c, g, &m, None), Ok(InvarianceVerdict::Unverifiable));
    }
}
