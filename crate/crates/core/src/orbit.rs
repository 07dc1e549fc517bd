//! Monoid actions on linear categories, the orbit categories `C/1G`, `C/2G` and `C/G`,
//! and the precovering checks.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::action::MonoidAction;
use crate::category::{CategoryError, Coordinates, LinCategory, LinFunctor, PathCategory};
use crate::field::Scalar;
use crate::linalg::{is_zero_vec, Matrix, Vector};
use crate::monoid::{FiniteMonoid, MonoidElement};

/// A finite monoid acting on a [`LinCategory`]; objects may be sent to zero.
#[derive(Clone, Debug)]
pub struct CatGAction {
    pub monoid: FiniteMonoid,
    obj: Vec<Vec<Option<usize>>>,
    maps: Vec<Vec<Option<Matrix>>>,
}

impl CatGAction {
    /// Extends generator data to all enumerated elements along their normal-form words.
    pub fn from_generators(
        cat: &LinCategory,
        monoid: FiniteMonoid,
        gen_obj: &[Vec<Option<usize>>],
        gen_maps: &[Vec<Option<Matrix>>],
    ) -> Self {
        let n = cat.num_objects();
        let k = cat.field;
        let mut obj = Vec::new();
        let mut maps = Vec::new();
        for el in &monoid.elements {
            let mut o: Vec<Option<usize>> = (0..n).map(Some).collect();
            let mut m: Vec<Option<Matrix>> = (0..n * n)
                .map(|xy| Some(Matrix::identity(k, cat.dim(xy / n, xy % n))))
                .collect();
            match el {
                MonoidElement::Zero => {
                    o = alloc::vec![None; n];
                    m = alloc::vec![None; n * n];
                }
                MonoidElement::Word(w) => {
                    for &g in w.iter().rev() {
                        let mut m2 = alloc::vec![None; n * n];
                        for x in 0..n {
                            for y in 0..n {
                                if let (Some(a), Some(b), Some(cur)) = (o[x], o[y], &m[x * n + y]) {
                                    if let Some(gm) = &gen_maps[g][a * n + b] {
                                        m2[x * n + y] = Some(gm.mul(cur));
                                    }
                                }
                            }
                        }
                        o = o.iter().map(|v| v.and_then(|v| gen_obj[g][v])).collect();
                        for x in 0..n {
                            for y in 0..n {
                                if o[x].is_none() || o[y].is_none() {
                                    m2[x * n + y] = None;
                                }
                            }
                        }
                        m = m2;
                    }
                }
            }
            obj.push(o);
            maps.push(m);
        }
        CatGAction { monoid, obj, maps }
    }

    /// The induced action on the path category of the algebra.
    pub fn from_monoid_action(pc: &PathCategory, act: &MonoidAction, monoid: FiniteMonoid) -> Self {
        let cat = &pc.cat;
        let n = cat.num_objects();
        let mut gen_obj = Vec::new();
        let mut gen_maps = Vec::new();
        for g in 0..act.num_generators() {
            let o: Vec<Option<usize>> = (0..n).map(|x| act.gen_vertex(g, x)).collect();
            let mut m = Vec::with_capacity(n * n);
            for x in 0..n {
                for y in 0..n {
                    m.push(match (o[x], o[y]) {
                        (Some(a), Some(b)) => {
                            let cols: Vec<Vector> = pc.paths[x * n + y]
                                .iter()
                                .map(|p| {
                                    let img = act.apply_path(&MonoidElement::generator(g), p);
                                    pc.coords(a, b, &img).expect("action is typed")
                                })
                                .collect();
                            Some(Matrix::from_cols(cat.field, cat.dim(a, b), &cols))
                        }
                        _ => None,
                    });
                }
            }
            gen_obj.push(o);
            gen_maps.push(m);
        }
        Self::from_generators(cat, monoid, &gen_obj, &gen_maps)
    }

    pub fn len(&self) -> usize {
        self.monoid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monoid.is_empty()
    }

    pub fn num_objects(&self) -> usize {
        self.obj.first().map_or(0, Vec::len)
    }

    pub fn obj(&self, a: usize, x: usize) -> Option<usize> {
        self.obj[a][x]
    }

    pub fn matrix(&self, a: usize, x: usize, y: usize) -> Option<&Matrix> {
        self.maps[a][x * self.num_objects() + y].as_ref()
    }

    /// `a(f)` for `f` in `(x, y)`; `None` when `ax` or `ay` is zero.
    pub fn act(&self, a: usize, x: usize, y: usize, f: &[Scalar]) -> Option<Vector> {
        self.matrix(a, x, y).map(|m| m.mul_vec(f))
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.monoid.mul(a, b)
    }

    pub fn identity(&self) -> usize {
        self.monoid.identity
    }

    pub fn is_group(&self) -> bool {
        self.monoid.is_group()
    }

    pub fn inv(&self, a: usize) -> usize {
        self.monoid.inverse(a).expect("group element")
    }

    pub fn name(&self, a: usize) -> String {
        self.monoid.name(a)
    }

    /// Free: `a x = x` only for the identity.
    pub fn is_free(&self) -> bool {
        (0..self.len()).all(|a| a == self.identity() || (0..self.num_objects()).all(|x| self.obj(a, x) != Some(x)))
    }

    /// Each element is a functor, the identity acts trivially and the action is multiplicative.
    pub fn verify(&self, cat: &LinCategory) -> Result<(), CategoryError> {
        let n = cat.num_objects();
        let e = self.identity();
        for x in 0..n {
            if self.obj(e, x) != Some(x) {
                return Err(CategoryError::Mismatch(format!("identity moves {}", cat.objects[x])));
            }
        }
        for a in 0..self.len() {
            for x in 0..n {
                let Some(ax) = self.obj(a, x) else { continue };
                if self.act(a, x, x, cat.identity(x)).as_ref() != Some(cat.identity(ax)) {
                    return Err(CategoryError::NotFunctorial(format!("{} on identity of {}", self.name(a), cat.objects[x])));
                }
                for y in 0..n {
                    let Some(ay) = self.obj(a, y) else { continue };
                    for z in 0..n {
                        let Some(az) = self.obj(a, z) else { continue };
                        for i in 0..cat.dim(y, z) {
                            let gi = self.act(a, y, z, &cat.basis_vec(y, z, i)).unwrap();
                            for j in 0..cat.dim(x, y) {
                                let fj = self.act(a, x, y, &cat.basis_vec(x, y, j)).unwrap();
                                let lhs = self.act(a, x, z, cat.compose_basis(x, y, z, i, j)).unwrap();
                                if lhs != cat.compose(ax, ay, az, &gi, &fj) {
                                    return Err(CategoryError::NotFunctorial(format!("{} on composition", self.name(a))));
                                }
                            }
                        }
                    }
                }
            }
        }
        for a in 0..self.len() {
            for b in 0..self.len() {
                let ab = self.mul(a, b);
                for x in 0..n {
                    let via = self.obj(b, x).and_then(|bx| self.obj(a, bx));
                    if via != self.obj(ab, x) {
                        return Err(CategoryError::Mismatch(format!("object action of {}", self.name(ab))));
                    }
                    for y in 0..n {
                        let (Some(bx), Some(by)) = (self.obj(b, x), self.obj(b, y)) else { continue };
                        if self.obj(ab, x).is_none() || self.obj(ab, y).is_none() {
                            continue;
                        }
                        for j in 0..cat.dim(x, y) {
                            let f = cat.basis_vec(x, y, j);
                            let two = self.act(a, bx, by, &self.act(b, x, y, &f).unwrap()).unwrap();
                            if two != self.act(ab, x, y, &f).unwrap() {
                                return Err(CategoryError::Mismatch(format!("morphism action of {}", self.name(ab))));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// `b*(a,x)` for the basis element `b` of `C(ax, y)`, matching the skew arrow names.
fn shift_label(b: &str, g: &CatGAction, a: usize, x: &str) -> String {
    if a == g.identity() {
        String::from(b)
    } else if b.starts_with("e_") {
        format!("({},{x})", g.name(a))
    } else {
        format!("{b}*({},{x})", g.name(a))
    }
}

/// Basis index `(element, i)` for `(C/1G)(x, y) = sum_a C(ax, y)`.
pub fn orbit1_basis(cat: &LinCategory, g: &CatGAction, x: usize, y: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..g.len() {
        if let Some(ax) = g.obj(a, x) {
            out.extend((0..cat.dim(ax, y)).map(|i| (a, i)));
        }
    }
    out
}

/// Basis index `(element, i)` for `(C/2G)(x, y) = sum_b C(x, by)`.
pub fn orbit2_basis(cat: &LinCategory, g: &CatGAction, x: usize, y: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for b in 0..g.len() {
        if let Some(by) = g.obj(b, y) {
            out.extend((0..cat.dim(x, by)).map(|i| (b, i)));
        }
    }
    out
}

/// `C/1G`: `g f = sum_{b a = m} g_b * b(f_a)`.
pub fn orbit1(cat: &LinCategory, g: &CatGAction) -> LinCategory {
    let n = cat.num_objects();
    let bases: Vec<Vec<(usize, usize)>> = (0..n * n).map(|xy| orbit1_basis(cat, g, xy / n, xy % n)).collect();
    let labels = bases
        .iter()
        .enumerate()
        .map(|(xy, bs)| {
            let (x, y) = (xy / n, xy % n);
            bs.iter()
                .map(|&(a, i)| shift_label(&cat.labels(g.obj(a, x).unwrap(), y)[i], g, a, &cat.objects[x]))
                .collect()
        })
        .collect();
    let ids = (0..n)
        .map(|x| {
            let bs = &bases[x * n + x];
            let mut v = crate::linalg::zero_vec(cat.field, bs.len());
            for (k, &(a, i)) in bs.iter().enumerate() {
                if a == g.identity() {
                    v[k] = cat.identity(x)[i].clone();
                }
            }
            v
        })
        .collect();
    LinCategory::build(
        cat.field,
        cat.objects.clone(),
        labels,
        |x, y, z, i, j| {
            let (a, fj) = bases[x * n + y][j];
            let (b, gi) = bases[y * n + z][i];
            let target = &bases[x * n + z];
            let mut out = crate::linalg::zero_vec(cat.field, target.len());
            let ax = g.obj(a, x).unwrap();
            let by = g.obj(b, y).unwrap();
            let ba = g.mul(b, a);
            let Some(bax) = g.obj(b, ax) else { return out };
            let bf = g.act(b, ax, y, &cat.basis_vec(ax, y, fj)).unwrap();
            let h = cat.compose(bax, by, z, &cat.basis_vec(by, z, gi), &bf);
            for (k, &(c, l)) in target.iter().enumerate() {
                if c == ba {
                    out[k] = h[l].clone();
                }
            }
            out
        },
        ids,
    )
}

/// `C/2G`: `g f = sum_{a b = m} a(g_b) * f_a`.
pub fn orbit2(cat: &LinCategory, g: &CatGAction) -> LinCategory {
    let n = cat.num_objects();
    let bases: Vec<Vec<(usize, usize)>> = (0..n * n).map(|xy| orbit2_basis(cat, g, xy / n, xy % n)).collect();
    let labels = bases
        .iter()
        .enumerate()
        .map(|(xy, bs)| {
            let (x, y) = (xy / n, xy % n);
            bs.iter()
                .map(|&(b, i)| {
                    let l = &cat.labels(x, g.obj(b, y).unwrap())[i];
                    if b == g.identity() {
                        l.clone()
                    } else if l.starts_with("e_") {
                        format!("[{}]", g.name(b))
                    } else {
                        format!("[{}]*{l}", g.name(b))
                    }
                })
                .collect()
        })
        .collect();
    let ids = (0..n)
        .map(|x| {
            let bs = &bases[x * n + x];
            let mut v = crate::linalg::zero_vec(cat.field, bs.len());
            for (k, &(b, i)) in bs.iter().enumerate() {
                if b == g.identity() {
                    v[k] = cat.identity(x)[i].clone();
                }
            }
            v
        })
        .collect();
    LinCategory::build(
        cat.field,
        cat.objects.clone(),
        labels,
        |x, y, z, i, j| {
            let (a, fj) = bases[x * n + y][j];
            let (b, gi) = bases[y * n + z][i];
            let target = &bases[x * n + z];
            let mut out = crate::linalg::zero_vec(cat.field, target.len());
            let ay = g.obj(a, y).unwrap();
            let bz = g.obj(b, z).unwrap();
            let ab = g.mul(a, b);
            let Some(abz) = g.obj(a, bz) else { return out };
            let ag = g.act(a, y, bz, &cat.basis_vec(y, bz, gi)).unwrap();
            let h = cat.compose(x, ay, abz, &ag, &cat.basis_vec(x, ay, fj));
            for (k, &(c, l)) in target.iter().enumerate() {
                if c == ab {
                    out[k] = h[l].clone();
                }
            }
            out
        },
        ids,
    )
}

/// Layout of `Pi'(x, y) = sum_{b, a} C(ax, by)` as one coordinate vector.
#[derive(Clone, Debug)]
pub struct BlockLayout {
    pub offsets: Vec<usize>,
    pub dims: Vec<usize>,
    pub total: usize,
    order: usize,
}

impl BlockLayout {
    fn new(cat: &LinCategory, g: &CatGAction, x: usize, y: usize) -> Self {
        let m = g.len();
        let mut offsets = Vec::with_capacity(m * m);
        let mut dims = Vec::with_capacity(m * m);
        let mut total = 0;
        for b in 0..m {
            for a in 0..m {
                let d = cat.dim(g.obj(a, x).unwrap(), g.obj(b, y).unwrap());
                offsets.push(total);
                dims.push(d);
                total += d;
            }
        }
        BlockLayout {
            offsets,
            dims,
            total,
            order: m,
        }
    }

    /// Entry `f_{b, a}` of a block vector.
    pub fn block<'v>(&self, v: &'v [Scalar], b: usize, a: usize) -> &'v [Scalar] {
        let i = b * self.order + a;
        &v[self.offsets[i]..self.offsets[i] + self.dims[i]]
    }

    fn set_block(&self, v: &mut [Scalar], b: usize, a: usize, blk: &[Scalar]) {
        let i = b * self.order + a;
        v[self.offsets[i]..self.offsets[i] + self.dims[i]].clone_from_slice(blk);
    }
}

/// `C/G` for a group action: invariant matrices `(f_{b,a})` with `f_{b,a}` in `C(ax, by)`.
#[derive(Clone, Debug)]
pub struct OrbitCategory {
    pub cat: LinCategory,
    pub layouts: Vec<BlockLayout>,
    /// Block vectors of the basis `P1(b)`, per object pair.
    pub matrices: Vec<Vec<Vector>>,
    /// Degree of each basis element, per object pair.
    pub degrees: Vec<Vec<usize>>,
    /// `(element, i)` with `b = C(ax, y)[i]` for each basis element.
    pub sources: Vec<Vec<(usize, usize)>>,
    coords: Vec<Coordinates>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum OrbitError {
    #[error("the acting monoid is not a group")]
    NotAGroup,
    #[error("invariant matrices at ({0}, {1}) are not spanned by the expected basis")]
    BasisMismatch(String, String),
}

impl OrbitCategory {
    pub fn new(c: &LinCategory, g: &CatGAction) -> Result<Self, OrbitError> {
        if !g.is_group() {
            return Err(OrbitError::NotAGroup);
        }
        let n = c.num_objects();
        let m = g.len();
        let k = c.field;
        let mut layouts = Vec::with_capacity(n * n);
        let mut matrices = Vec::with_capacity(n * n);
        let mut degrees = Vec::with_capacity(n * n);
        let mut sources = Vec::with_capacity(n * n);
        let mut coords = Vec::with_capacity(n * n);
        let mut labels = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let lay = BlockLayout::new(c, g, x, y);
                let invariant_dim = invariant_dimension(c, g, &lay, x, y);
                let src = orbit1_basis(c, g, x, y);
                let mut mats = Vec::with_capacity(src.len());
                for &(a, i) in &src {
                    let ax = g.obj(a, x).unwrap();
                    let b = c.basis_vec(ax, y, i);
                    let mut v = crate::linalg::zero_vec(k, lay.total);
                    for mu in 0..m {
                        let lam = g.mul(mu, a);
                        lay.set_block(&mut v, mu, lam, &g.act(mu, ax, y, &b).unwrap());
                    }
                    mats.push(v);
                }
                let co = Coordinates::new(k, lay.total, &mats);
                if co.len() != invariant_dim || !mats.iter().all(|v| is_invariant(c, g, &lay, x, y, v)) {
                    return Err(OrbitError::BasisMismatch(c.objects[x].clone(), c.objects[y].clone()));
                }
                labels.push(
                    src.iter()
                        .map(|&(a, i)| shift_label(&c.labels(g.obj(a, x).unwrap(), y)[i], g, a, &c.objects[x]))
                        .collect(),
                );
                degrees.push(src.iter().map(|&(a, _)| a).collect());
                sources.push(src);
                layouts.push(lay);
                matrices.push(mats);
                coords.push(co);
            }
        }
        let mult = |x: usize, y: usize, z: usize, gv: &[Scalar], fv: &[Scalar]| -> Vector {
            let (lf, lg, lh) = (&layouts[x * n + y], &layouts[y * n + z], &layouts[x * n + z]);
            let mut h = crate::linalg::zero_vec(k, lh.total);
            for b in 0..m {
                for a in 0..m {
                    let ax = g.obj(a, x).unwrap();
                    let bz = g.obj(b, z).unwrap();
                    let mut acc = c.zero(ax, bz);
                    for gm in 0..m {
                        let gy = g.obj(gm, y).unwrap();
                        let prod = c.compose(ax, gy, bz, lg.block(gv, b, gm), lf.block(fv, gm, a));
                        for (s, t) in acc.iter_mut().zip(&prod) {
                            *s += t;
                        }
                    }
                    lh.set_block(&mut h, b, a, &acc);
                }
            }
            h
        };
        let ids: Vec<Vector> = (0..n)
            .map(|x| {
                let lay = &layouts[x * n + x];
                let mut v = crate::linalg::zero_vec(k, lay.total);
                for a in 0..m {
                    let ax = g.obj(a, x).unwrap();
                    lay.set_block(&mut v, a, a, c.identity(ax));
                }
                coords[x * n + x].coords(&v).expect("identity is invariant")
            })
            .collect();
        let cat = LinCategory::build(
            k,
            c.objects.clone(),
            labels,
            |x, y, z, i, j| {
                let h = mult(x, y, z, &matrices[y * n + z][i], &matrices[x * n + y][j]);
                coords[x * n + z].coords(&h).expect("product of invariant matrices is invariant")
            },
            ids,
        );
        Ok(OrbitCategory {
            cat,
            layouts,
            matrices,
            degrees,
            sources,
            coords,
        })
    }

    pub fn layout(&self, x: usize, y: usize) -> &BlockLayout {
        &self.layouts[x * self.cat.num_objects() + y]
    }

    /// Block vector of a morphism given in basis coordinates.
    pub fn to_blocks(&self, x: usize, y: usize, v: &[Scalar]) -> Vector {
        let n = self.cat.num_objects();
        let lay = &self.layouts[x * n + y];
        let mut out = crate::linalg::zero_vec(self.cat.field, lay.total);
        for (c, mat) in v.iter().zip(&self.matrices[x * n + y]) {
            crate::linalg::add_scaled(&mut out, c, mat);
        }
        out
    }

    /// Basis coordinates of an invariant block vector.
    pub fn from_blocks(&self, x: usize, y: usize, blocks: &[Scalar]) -> Option<Vector> {
        self.coords[x * self.cat.num_objects() + y].coords(blocks)
    }

    /// The canonical functor `P: C -> C/G`, `P(f) = (delta_{a,b} a f)`.
    pub fn functor_p(&self, c: &LinCategory, g: &CatGAction) -> LinFunctor {
        LinFunctor::build(c, &self.cat, (0..c.num_objects()).collect(), |x, y, i| {
            let lay = self.layout(x, y);
            let f = c.basis_vec(x, y, i);
            let mut v = crate::linalg::zero_vec(c.field, lay.total);
            for a in 0..g.len() {
                lay.set_block(&mut v, a, a, &g.act(a, x, y, &f).unwrap());
            }
            self.from_blocks(x, y, &v).expect("P(f) is invariant")
        })
    }

    /// The adjuster `phi_{m,x} = (delta_{a, b m} id_{ax})` in `(C/G)(x, m x)`, as `[m][x]`.
    pub fn adjuster(&self, c: &LinCategory, g: &CatGAction) -> Vec<Vec<Vector>> {
        (0..g.len())
            .map(|mu| {
                (0..c.num_objects())
                    .map(|x| {
                        let mx = g.obj(mu, x).unwrap();
                        let lay = self.layout(x, mx);
                        let mut v = crate::linalg::zero_vec(c.field, lay.total);
                        for b in 0..g.len() {
                            let a = g.mul(b, mu);
                            lay.set_block(&mut v, b, a, c.identity(g.obj(a, x).unwrap()));
                        }
                        self.from_blocks(x, mx, &v).expect("adjuster is invariant")
                    })
                    .collect()
            })
            .collect()
    }

    /// `S1(f) = (f_{1,a})_a`, into `C/1G`.
    pub fn functor_s1(&self, c: &LinCategory, g: &CatGAction, o1: &LinCategory) -> LinFunctor {
        LinFunctor::build(&self.cat, o1, (0..c.num_objects()).collect(), |x, y, i| {
            let lay = self.layout(x, y);
            let blocks = &self.matrices[x * c.num_objects() + y][i];
            let mut v = Vec::new();
            for a in 0..g.len() {
                v.extend_from_slice(lay.block(blocks, g.identity(), a));
            }
            v
        })
    }

    /// `S2(f) = (f_{b,1})_b`, into `C/2G`.
    pub fn functor_s2(&self, c: &LinCategory, g: &CatGAction, o2: &LinCategory) -> LinFunctor {
        LinFunctor::build(&self.cat, o2, (0..c.num_objects()).collect(), |x, y, i| {
            let lay = self.layout(x, y);
            let blocks = &self.matrices[x * c.num_objects() + y][i];
            let mut v = Vec::new();
            for b in 0..g.len() {
                v.extend_from_slice(lay.block(blocks, b, g.identity()));
            }
            v
        })
    }

    /// `P2((f_b)_b)`: entry `(m, l)` is `l(f_{l^-1 m})`, into `C/G`.
    pub fn functor_p2(&self, c: &LinCategory, g: &CatGAction, o2: &LinCategory) -> LinFunctor {
        LinFunctor::build(o2, &self.cat, (0..c.num_objects()).collect(), |x, y, i| {
            let (beta, j) = orbit2_basis(c, g, x, y)[i];
            let by = g.obj(beta, y).unwrap();
            let f = c.basis_vec(x, by, j);
            let lay = self.layout(x, y);
            let mut v = crate::linalg::zero_vec(c.field, lay.total);
            for lam in 0..g.len() {
                let mu = g.mul(lam, beta);
                lay.set_block(&mut v, mu, lam, &g.act(lam, x, by, &f).unwrap());
            }
            self.from_blocks(x, y, &v).expect("image of P2 is invariant")
        })
    }
}

fn invariance_equations(c: &LinCategory, g: &CatGAction, lay: &BlockLayout, x: usize, y: usize) -> Matrix {
    let k = c.field;
    let m = g.len();
    let mut rows: Vec<Vector> = Vec::new();
    for gm in 0..m {
        for b in 0..m {
            for a in 0..m {
                let ax = g.obj(a, x).unwrap();
                let by = g.obj(b, y).unwrap();
                let (ga, gb) = (g.mul(gm, a), g.mul(gm, b));
                let mat = g.matrix(gm, ax, by).unwrap();
                let tgt = gb * m + ga;
                let src = b * m + a;
                for r in 0..lay.dims[tgt] {
                    let mut row = crate::linalg::zero_vec(k, lay.total);
                    row[lay.offsets[tgt] + r] = k.one();
                    for s in 0..lay.dims[src] {
                        let e = mat.get(r, s);
                        if !e.is_zero() {
                            row[lay.offsets[src] + s] -= e;
                        }
                    }
                    rows.push(row);
                }
            }
        }
    }
    Matrix::from_rows(k, lay.total, &rows)
}

fn invariant_dimension(c: &LinCategory, g: &CatGAction, lay: &BlockLayout, x: usize, y: usize) -> usize {
    if lay.total == 0 {
        return 0;
    }
    invariance_equations(c, g, lay, x, y).nullspace().len()
}

fn is_invariant(c: &LinCategory, g: &CatGAction, lay: &BlockLayout, x: usize, y: usize, v: &[Scalar]) -> bool {
    lay.total == 0 || is_zero_vec(&invariance_equations(c, g, lay, x, y).mul_vec(v))
}

/// Outcome of the precovering conditions for a functor with an invariance adjuster.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoverReport {
    pub natural: bool,
    pub invertible: bool,
    pub cocycle: bool,
    pub f1_bijective: bool,
    pub f2_bijective: bool,
    pub failures: Vec<String>,
}

impl CoverReport {
    pub fn is_precovering(&self) -> bool {
        self.natural && self.invertible && self.cocycle && self.f1_bijective && self.f2_bijective
    }
}

/// Checks that `(f, phi)` is a G-precovering `C -> D`; `phi[a][x]` lies in `D(Fx, F(ax))`.
pub fn check_precovering(c: &LinCategory, d: &LinCategory, g: &CatGAction, f: &LinFunctor, phi: &[Vec<Vector>]) -> CoverReport {
    let n = c.num_objects();
    let m = g.len();
    let fo = &f.objects;
    let mut r = CoverReport {
        natural: true,
        invertible: true,
        cocycle: true,
        f1_bijective: true,
        f2_bijective: true,
        failures: Vec::new(),
    };
    for a in 0..m {
        for x in 0..n {
            let ax = g.obj(a, x).unwrap();
            if !d.is_iso(fo[x], fo[ax], &phi[a][x]) {
                r.invertible = false;
                r.failures.push(format!("phi[{},{}] not invertible", g.name(a), c.objects[x]));
            }
            for y in 0..n {
                let ay = g.obj(a, y).unwrap();
                for i in 0..c.dim(x, y) {
                    let b = c.basis_vec(x, y, i);
                    let lhs = d.compose(fo[x], fo[y], fo[ay], &phi[a][y], &f.apply(x, y, &b));
                    let ab = g.act(a, x, y, &b).unwrap();
                    let rhs = d.compose(fo[x], fo[ax], fo[ay], &f.apply(ax, ay, &ab), &phi[a][x]);
                    if lhs != rhs {
                        r.natural = false;
                        r.failures.push(format!("phi[{}] not natural at {} -> {}", g.name(a), c.objects[x], c.objects[y]));
                    }
                }
            }
        }
    }
    for a in 0..m {
        for b in 0..m {
            for x in 0..n {
                let ax = g.obj(a, x).unwrap();
                let bax = g.obj(b, ax).unwrap();
                let two = d.compose(fo[x], fo[ax], fo[bax], &phi[b][ax], &phi[a][x]);
                if two != phi[g.mul(b, a)][x] {
                    r.cocycle = false;
                    r.failures.push(format!("cocycle fails for {}, {} at {}", g.name(b), g.name(a), c.objects[x]));
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let target = d.dim(fo[x], fo[y]);
            let mut cols1 = Vec::new();
            for (a, i) in orbit1_basis(c, g, x, y) {
                let ax = g.obj(a, x).unwrap();
                let fb = f.apply(ax, y, &c.basis_vec(ax, y, i));
                cols1.push(d.compose(fo[x], fo[ax], fo[y], &fb, &phi[a][x]));
            }
            let mut cols2 = Vec::new();
            for (b, i) in orbit2_basis(c, g, x, y) {
                let by = g.obj(b, y).unwrap();
                let fb = f.apply(x, by, &c.basis_vec(x, by, i));
                cols2.push(d.compose(fo[x], fo[by], fo[y], &phi[g.inv(b)][by], &fb));
            }
            for (cols, ok, tag) in [(&cols1, &mut r.f1_bijective, "F1"), (&cols2, &mut r.f2_bijective, "F2")] {
                let rank = if cols.is_empty() { 0 } else { Matrix::from_cols(c.field, target, cols).rank() };
                if cols.len() != target || rank != target {
                    *ok = false;
                    r.failures.push(format!("{tag} not bijective at ({}, {})", c.objects[x], c.objects[y]));
                }
            }
        }
    }
    r
}

/// Precovering plus density: every object of `d` is isomorphic to some `F x`.
pub fn check_covering(
    c: &LinCategory,
    d: &LinCategory,
    g: &CatGAction,
    f: &LinFunctor,
    phi: &[Vec<Vector>],
    seed: u64,
) -> (CoverReport, bool) {
    let rep = check_precovering(c, d, g, f, phi);
    let dense = (0..d.num_objects()).all(|y| {
        f.objects.iter().any(|&fx| {
            fx == y || matches!(
                crate::idempotents::iso_objects(d, fx, y, seed, false).verdict,
                crate::idempotents::IsoVerdict::Found(_)
            )
        })
    });
    (rep, dense)
}

/// Adjuster for functors that commute with the action on the nose.
pub fn identity_adjuster(d: &LinCategory, g: &CatGAction, f: &LinFunctor) -> Vec<Vec<Vector>> {
    (0..g.len())
        .map(|_| (0..f.objects.len()).map(|x| d.identity(f.objects[x]).clone()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::testing::pipeline;

    #[test]
    fn action_on_the_doubled_tree() {
        let p = pipeline(Field::Rationals);
        let c = &p.pc.cat;
        p.ga.verify(c).unwrap();
        assert!(p.ga.is_group());
        assert!(!p.ga.is_free());
        let g = (0..p.ga.len()).find(|&a| a != p.ga.identity()).unwrap();
        assert_eq!(p.ga.obj(g, 1), Some(2));
        assert_eq!(p.ga.obj(g, 0), Some(0));
        assert_eq!(p.ga.mul(g, g), p.ga.identity());
    }

    #[test]
    fn three_orbit_categories_agree() {
        let p = pipeline(Field::Prime(3));
        let c = &p.pc.cat;
        p.oc.cat.verify().unwrap();
        assert_eq!(p.oc.cat.total_dim(), 22);
        assert_eq!(p.oc.cat.dim(0, 0), 2);
        let o1 = orbit1(c, &p.ga);
        let o2 = orbit2(c, &p.ga);
        assert_eq!(o1.labels(0, 0), ["e_1", "(g,1)"]);
        assert_eq!(o2.labels(1, 2), ["[g]"]);
        let s1 = p.oc.functor_s1(c, &p.ga, &o1);
        let s2 = p.oc.functor_s2(c, &p.ga, &o2);
        s1.verify(&p.oc.cat, &o1).unwrap();
        s2.verify(&p.oc.cat, &o2).unwrap();
        assert!(s1.is_fully_faithful(&p.oc.cat, &o1));
        assert!(s2.is_fully_faithful(&p.oc.cat, &o2));
    }

    #[test]
    fn canonical_functor_is_a_covering() {
        let p = pipeline(Field::Rationals);
        let c = &p.pc.cat;
        let f = p.oc.functor_p(c, &p.ga);
        f.verify(c, &p.oc.cat).unwrap();
        let phi = p.oc.adjuster(c, &p.ga);
        for a in 0..p.ga.len() {
            for x in 0..c.num_objects() {
                assert!(p.oc.cat.is_iso(x, p.ga.obj(a, x).unwrap(), &phi[a][x]));
            }
        }
        let (rep, dense) = check_covering(c, &p.oc.cat, &p.ga, &f, &phi, 1);
        assert!(rep.is_precovering() && dense, "{:?}", rep.failures);
    }

    #[test]
    fn identity_functor_is_not_a_precovering() {
        let p = pipeline(Field::Rationals);
        let c = &p.pc.cat;
        let id = LinFunctor::build(c, c, (0..c.num_objects()).collect(), |x, y, i| c.basis_vec(x, y, i));
        let phi: Vec<Vec<Vector>> = (0..p.ga.len())
            .map(|a| (0..c.num_objects()).map(|x| c.zero(x, p.ga.obj(a, x).unwrap())).collect())
            .collect();
        let rep = check_precovering(c, c, &p.ga, &id, &phi);
        assert!(!rep.invertible && !rep.f1_bijective && !rep.is_precovering());
    }
}
