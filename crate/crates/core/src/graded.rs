//! Group gradings, smash products and the comparison functors between
//! orbit categories and smash products.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::category::{CategoryError, Coordinates, LinCategory, LinFunctor};
use crate::field::Scalar;
use crate::linalg::{is_zero_vec, zero_vec, Matrix, Vector};
use crate::monoid::FiniteMonoid;
use crate::orbit::{CatGAction, OrbitCategory};

/// A linear category with a homogeneous basis of every Hom space.
#[derive(Clone, Debug)]
pub struct GradedCategory {
    pub cat: LinCategory,
    pub group: FiniteMonoid,
    /// `(degree, vector)` per object pair.
    pub homogeneous: Vec<Vec<(usize, Vector)>>,
    /// Labels of the homogeneous basis.
    pub labels: Vec<Vec<String>>,
    coords: Vec<Coordinates>,
}

impl GradedCategory {
    pub fn new(cat: LinCategory, group: FiniteMonoid, homogeneous: Vec<Vec<(usize, Vector)>>, labels: Vec<Vec<String>>) -> Result<Self, CategoryError> {
        let n = cat.num_objects();
        let mut coords = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let vs: Vec<Vector> = homogeneous[x * n + y].iter().map(|(_, v)| v.clone()).collect();
                let co = Coordinates::new(cat.field, cat.dim(x, y), &vs);
                if co.len() != cat.dim(x, y) {
                    return Err(CategoryError::Mismatch(format!(
                        "homogeneous vectors do not span ({}, {})",
                        cat.objects[x], cat.objects[y]
                    )));
                }
                coords.push(co);
            }
        }
        Ok(GradedCategory {
            cat,
            group,
            homogeneous,
            labels,
            coords,
        })
    }

    fn idx(&self, x: usize, y: usize) -> usize {
        x * self.cat.num_objects() + y
    }

    /// Coordinates against the homogeneous basis.
    pub fn homogeneous_coords(&self, x: usize, y: usize, v: &[Scalar]) -> Vector {
        self.coords[self.idx(x, y)].coords(v).expect("homogeneous basis spans")
    }

    /// The degree-`a` component of `v`.
    pub fn component(&self, x: usize, y: usize, a: usize, v: &[Scalar]) -> Vector {
        let c = self.homogeneous_coords(x, y, v);
        let mut out = self.cat.zero(x, y);
        for (ci, (d, h)) in c.iter().zip(&self.homogeneous[self.idx(x, y)]) {
            if *d == a {
                crate::linalg::add_scaled(&mut out, ci, h);
            }
        }
        out
    }

    /// Degree of a nonzero homogeneous vector.
    pub fn degree_of(&self, x: usize, y: usize, v: &[Scalar]) -> Option<usize> {
        let c = self.homogeneous_coords(x, y, v);
        let mut deg = None;
        for (ci, (d, _)) in c.iter().zip(&self.homogeneous[self.idx(x, y)]) {
            if ci.is_zero() {
                continue;
            }
            match deg {
                None => deg = Some(*d),
                Some(e) if e != *d => return None,
                _ => {}
            }
        }
        deg
    }

    /// Multiplicativity: `C^b * C^a` lands in `C^{ba}`; identities have degree 1.
    pub fn verify(&self) -> Result<(), CategoryError> {
        let n = self.cat.num_objects();
        let one = self.group.identity;
        for x in 0..n {
            if self.degree_of(x, x, self.cat.identity(x)) != Some(one) {
                return Err(CategoryError::Mismatch(format!("identity of {} is not of degree 1", self.cat.objects[x])));
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for (a, f) in &self.homogeneous[self.idx(x, y)] {
                        for (b, g) in &self.homogeneous[self.idx(y, z)] {
                            let h = self.cat.compose(x, y, z, g, f);
                            if is_zero_vec(&h) {
                                continue;
                            }
                            if self.degree_of(x, z, &h) != Some(self.group.mul(*b, *a)) {
                                return Err(CategoryError::Mismatch(format!(
                                    "grading not multiplicative at {} -> {} -> {}",
                                    self.cat.objects[x], self.cat.objects[y], self.cat.objects[z]
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn full_subcategory(&self, objs: &[usize]) -> GradedCategory {
        let cat = self.cat.full_subcategory(objs);
        let mut hom = Vec::new();
        let mut labels = Vec::new();
        for &x in objs {
            for &y in objs {
                hom.push(self.homogeneous[self.idx(x, y)].clone());
                labels.push(self.labels[self.idx(x, y)].clone());
            }
        }
        GradedCategory::new(cat, self.group.clone(), hom, labels).expect("restriction of a grading")
    }
}

/// The grading of `C/G` with `(C/G)^a(x, y) = P1(C(ax, y))`.
pub fn grade_orbit(orbit: &OrbitCategory, g: &CatGAction) -> GradedCategory {
    let n = orbit.cat.num_objects();
    let mut hom = Vec::with_capacity(n * n);
    let mut labels = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let i = x * n + y;
            hom.push(
                orbit.degrees[i]
                    .iter()
                    .enumerate()
                    .map(|(j, &d)| (d, orbit.cat.basis_vec(x, y, j)))
                    .collect(),
            );
            labels.push(orbit.cat.labels(x, y).to_vec());
        }
    }
    GradedCategory::new(orbit.cat.clone(), g.monoid.clone(), hom, labels).expect("orbit basis is a basis")
}

/// Degree read off the block matrix: `f_{m,l} = 0` unless `m^-1 l = b`.
pub fn remark_degree(orbit: &OrbitCategory, g: &CatGAction, x: usize, y: usize, v: &[Scalar]) -> Option<usize> {
    let blocks = orbit.to_blocks(x, y, v);
    let lay = orbit.layout(x, y);
    let mut deg = None;
    for mu in 0..g.len() {
        for lam in 0..g.len() {
            if is_zero_vec(lay.block(&blocks, mu, lam)) {
                continue;
            }
            let d = g.mul(g.inv(mu), lam);
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
    }
    deg
}

/// The smash product `B#G` with objects `x^(a)` and its free G-action.
#[derive(Clone, Debug)]
pub struct SmashCategory {
    pub cat: LinCategory,
    /// `(x, a)` for each object.
    pub objects: Vec<(usize, usize)>,
    /// Indices into the homogeneous basis of `B(x, y)`, per object pair.
    pub basis: Vec<Vec<usize>>,
    pub action: CatGAction,
}

impl SmashCategory {
    pub fn object(&self, x: usize, a: usize, order: usize) -> usize {
        x * order + a
    }

    pub fn index_of(&self, x: usize, a: usize) -> usize {
        self.objects.iter().position(|&o| o == (x, a)).unwrap()
    }
}

pub fn smash(b: &GradedCategory) -> SmashCategory {
    let grp = &b.group;
    let m = grp.len();
    let nb = b.cat.num_objects();
    let objects: Vec<(usize, usize)> = (0..nb).flat_map(|x| (0..m).map(move |a| (x, a))).collect();
    let n = objects.len();
    let k = b.cat.field;
    let mut basis = Vec::with_capacity(n * n);
    let mut labels = Vec::with_capacity(n * n);
    for &(x, a) in &objects {
        for &(y, bb) in &objects {
            let want = grp.mul(grp.inverse(bb).unwrap(), a);
            let idx: Vec<usize> = b.homogeneous[x * nb + y]
                .iter()
                .enumerate()
                .filter(|(_, (d, _))| *d == want)
                .map(|(i, _)| i)
                .collect();
            labels.push(
                idx.iter()
                    .map(|&i| format!("{}^({})", b.labels[x * nb + y][i], grp.name(a)))
                    .collect(),
            );
            basis.push(idx);
        }
    }
    let names: Vec<String> = objects
        .iter()
        .map(|&(x, a)| format!("{}^({})", b.cat.objects[x], grp.name(a)))
        .collect();
    let ids = (0..n)
        .map(|o| {
            let (x, _) = objects[o];
            let hc = b.homogeneous_coords(x, x, b.cat.identity(x));
            basis[o * n + o].iter().map(|&i| hc[i].clone()).collect()
        })
        .collect();
    let cat = LinCategory::build(
        k,
        names,
        labels,
        |p, q, r, i, j| {
            let ((x, _), (y, _), (z, _)) = (objects[p], objects[q], objects[r]);
            let f = &b.homogeneous[x * nb + y][basis[p * n + q][j]].1;
            let g = &b.homogeneous[y * nb + z][basis[q * n + r][i]].1;
            let hc = b.homogeneous_coords(x, z, &b.cat.compose(x, y, z, g, f));
            basis[p * n + r].iter().map(|&l| hc[l].clone()).collect()
        },
        ids,
    );
    let gen_obj: Vec<Vec<Option<usize>>> = grp
        .generators
        .iter()
        .map(|&g| objects.iter().map(|&(x, a)| Some(x * m + grp.mul(g, a))).collect())
        .collect();
    let gen_maps: Vec<Vec<Option<Matrix>>> = grp
        .generators
        .iter()
        .map(|_| (0..n * n).map(|pq| Some(Matrix::identity(k, cat.dim(pq / n, pq % n)))).collect())
        .collect();
    let action = CatGAction::from_generators(&cat, grp.clone(), &gen_obj, &gen_maps);
    SmashCategory {
        cat,
        objects,
        basis,
        action,
    }
}

/// `Q: B#G -> B`, `x^(a) -> x`.
pub fn functor_q(b: &GradedCategory, s: &SmashCategory) -> LinFunctor {
    let nb = b.cat.num_objects();
    let n = s.objects.len();
    LinFunctor::build(&s.cat, &b.cat, s.objects.iter().map(|&(x, _)| x).collect(), |p, q, i| {
        let (x, y) = (s.objects[p].0, s.objects[q].0);
        b.homogeneous[x * nb + y][s.basis[p * n + q][i]].1.clone()
    })
}

/// `omega_B: B -> (B#G)/G`, `x -> P(x^(1))`, `f -> P1(f)`.
pub fn functor_omega(b: &GradedCategory, s: &SmashCategory, orbit: &OrbitCategory) -> LinFunctor {
    let nb = b.cat.num_objects();
    let n = s.objects.len();
    let one = b.group.identity;
    let objs: Vec<usize> = (0..nb).map(|x| s.index_of(x, one)).collect();
    LinFunctor::build(&b.cat, &orbit.cat, objs.clone(), |x, y, i| {
        let (px, py) = (objs[x], objs[y]);
        let f = b.cat.basis_vec(x, y, i);
        let hc = b.homogeneous_coords(x, y, &f);
        let mut out = zero_vec(b.cat.field, orbit.cat.dim(px, py));
        for (slot, &(a, j)) in orbit.sources[px * n + py].iter().enumerate() {
            // the j-th basis element of (B#G)(a x^(1), y^(1)) is a homogeneous vector of degree a
            let ax = s.action.obj(a, px).unwrap();
            let hidx = s.basis[ax * n + py][j];
            out[slot] = hc[hidx].clone();
        }
        out
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaReport {
    pub functor: bool,
    pub fully_faithful: bool,
    pub dense: bool,
    pub degree_preserving: bool,
}

impl OmegaReport {
    pub fn all(&self) -> bool {
        self.functor && self.fully_faithful && self.dense && self.degree_preserving
    }
}

/// Checks `omega_B`; density is witnessed by the adjuster isos `x^(a) -> x^(1)` of the orbit category.
pub fn check_omega(b: &GradedCategory, s: &SmashCategory, orbit: &OrbitCategory) -> OmegaReport {
    let w = functor_omega(b, s, orbit);
    let phi = orbit.adjuster(&s.cat, &s.action);
    let mut r = OmegaReport {
        functor: w.verify(&b.cat, &orbit.cat).is_ok(),
        fully_faithful: w.is_fully_faithful(&b.cat, &orbit.cat),
        dense: true,
        degree_preserving: true,
    };
    for p in 0..s.objects.len() {
        let hit = (0..s.action.len()).any(|mu| {
            let q = s.action.obj(mu, p).unwrap();
            w.objects.contains(&q) && orbit.cat.is_iso(p, q, &phi[mu][p])
        });
        r.dense &= hit;
    }
    let gr = grade_orbit(orbit, &s.action);
    let nb = b.cat.num_objects();
    for x in 0..nb {
        for y in 0..nb {
            for (d, v) in &b.homogeneous[x * nb + y] {
                let img = w.apply(x, y, v);
                if gr.degree_of(w.objects[x], w.objects[y], &img) != Some(*d) {
                    r.degree_preserving = false;
                }
            }
        }
    }
    r
}

/// `epsilon_C: C -> (C/G)#G`, `x -> x^(1)`, `f -> P1(f)`.
pub fn functor_epsilon(c: &LinCategory, orbit: &OrbitCategory, s: &SmashCategory, g: &CatGAction) -> LinFunctor {
    let n = c.num_objects();
    let ns = s.objects.len();
    let one = g.identity();
    let objs: Vec<usize> = (0..n).map(|x| s.index_of(x, one)).collect();
    LinFunctor::build(c, &s.cat, objs.clone(), |x, y, i| {
        let slot = orbit.sources[x * n + y].iter().position(|&(a, j)| a == one && j == i).unwrap();
        let (px, py) = (objs[x], objs[y]);
        let mut out = zero_vec(c.field, s.cat.dim(px, py));
        let pos = s.basis[px * ns + py].iter().position(|&h| h == slot).unwrap();
        out[pos] = c.field.one();
        out
    })
}

/// Embeds a homogeneous vector of `B(x, y)` of degree `b^-1 a` as a morphism `x^(a) -> y^(b)`.
pub fn smash_morphism(bg: &GradedCategory, s: &SmashCategory, p: usize, q: usize, v: &[Scalar]) -> Option<Vector> {
    let n = s.objects.len();
    let ((x, _), (y, _)) = (s.objects[p], s.objects[q]);
    let hc = bg.homogeneous_coords(x, y, v);
    let allowed = &s.basis[p * n + q];
    for (i, c) in hc.iter().enumerate() {
        if !c.is_zero() && !allowed.contains(&i) {
            return None;
        }
    }
    Some(allowed.iter().map(|&i| hc[i].clone()).collect())
}

/// Report for the density witnesses of `epsilon_C` and the equivariance adjuster.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EpsilonReport {
    pub functor: bool,
    pub fully_faithful: bool,
    pub witnesses: bool,
    pub natural: bool,
    pub coherent: bool,
    pub free: bool,
}

impl EpsilonReport {
    pub fn all(&self) -> bool {
        self.functor && self.fully_faithful && self.witnesses && self.natural && self.coherent && self.free
    }
}

/// Checks `epsilon_C` with witnesses `rho_{a,x} = phi_{a,x}: x^(a) -> (ax)^(1)`.
pub fn check_epsilon(c: &LinCategory, g: &CatGAction, orbit: &OrbitCategory, graded: &GradedCategory, s: &SmashCategory) -> EpsilonReport {
    let eps = functor_epsilon(c, orbit, s, g);
    let phi = orbit.adjuster(c, g);
    let n = c.num_objects();
    let m = g.len();
    let one = g.identity();
    let mut r = EpsilonReport {
        functor: eps.verify(c, &s.cat).is_ok(),
        fully_faithful: eps.is_fully_faithful(c, &s.cat),
        witnesses: true,
        natural: true,
        coherent: true,
        free: s.action.is_free(),
    };
    let rho = |a: usize, x: usize| -> Option<(usize, usize, Vector)> {
        let ax = g.obj(a, x).unwrap();
        let p = s.index_of(x, a);
        let q = s.index_of(ax, one);
        Some((p, q, smash_morphism(graded, s, p, q, &phi[a][x])?))
    };
    for a in 0..m {
        for x in 0..n {
            let ax = g.obj(a, x).unwrap();
            let Some((p, q, f)) = rho(a, x) else {
                r.witnesses = false;
                continue;
            };
            let ai = g.inv(a);
            let Some(back) = smash_morphism(graded, s, q, p, &phi[ai][ax]) else {
                r.witnesses = false;
                continue;
            };
            if s.cat.compose(p, q, p, &back, &f) != *s.cat.identity(p) || s.cat.compose(q, p, q, &f, &back) != *s.cat.identity(q) {
                r.witnesses = false;
            }
            // naturality against the action on (C/G)#G, which moves x^(1) to x^(a) and fixes morphisms
            for y in 0..n {
                let ay = g.obj(a, y).unwrap();
                let Some((py, qy, fy)) = rho(a, y) else { continue };
                for i in 0..c.dim(x, y) {
                    let b = c.basis_vec(x, y, i);
                    let e = eps.apply(x, y, &b);
                    let moved = s.action.act(a, eps.objects[x], eps.objects[y], &e).unwrap();
                    let lhs = s.cat.compose(p, py, qy, &fy, &moved);
                    let eab = eps.apply(ax, ay, &g.act(a, x, y, &b).unwrap());
                    let rhs = s.cat.compose(p, q, qy, &eab, &f);
                    if lhs != rhs {
                        r.natural = false;
                    }
                }
            }
        }
    }
    for a in 0..m {
        for b in 0..m {
            for x in 0..n {
                let ax = g.obj(a, x).unwrap();
                let (Some((p1, q1, f1)), Some((_, q2, f2)), Some((p3, q3, f3))) = (rho(a, x), rho(b, ax), rho(g.mul(b, a), x)) else {
                    r.coherent = false;
                    continue;
                };
                // b * rho_{a,x}: x^(ba) -> (ax)^(b), same vector
                let bp = s.action.obj(b, p1).unwrap();
                let bq = s.action.obj(b, q1).unwrap();
                let bf = s.action.act(b, p1, q1, &f1).unwrap();
                let lhs = s.cat.compose(bp, bq, q2, &f2, &bf);
                if bp != p3 || q2 != q3 || lhs != f3 {
                    r.coherent = false;
                }
            }
        }
    }
    r
}

/// Grading induced along a precovering `F: C -> B` from isomorphisms `nu_y: F(I_y) -> y`.
pub fn induced_grading(
    c: &LinCategory,
    b: &LinCategory,
    g: &CatGAction,
    f: &LinFunctor,
    phi: &[Vec<Vector>],
    lifts: &[(usize, Vector)],
) -> Result<GradedCategory, CategoryError> {
    let nb = b.num_objects();
    let mut hom = Vec::with_capacity(nb * nb);
    let mut labels = Vec::with_capacity(nb * nb);
    let inv: Vec<Vector> = (0..nb)
        .map(|y| {
            let (iy, nu) = &lifts[y];
            b.inverse_of(f.objects[*iy], y, nu)
                .ok_or_else(|| CategoryError::Mismatch(format!("lift of {} is not an isomorphism", b.objects[y])))
        })
        .collect::<Result<_, _>>()?;
    for x in 0..nb {
        for y in 0..nb {
            let (ix, nux_inv) = (lifts[x].0, &inv[x]);
            let (iy, nuy) = (lifts[y].0, &lifts[y].1);
            let mut hs = Vec::new();
            let mut ls = Vec::new();
            for a in 0..g.len() {
                let aix = g.obj(a, ix).unwrap();
                for i in 0..c.dim(aix, iy) {
                    let fb = f.apply(aix, iy, &c.basis_vec(aix, iy, i));
                    let t = b.compose(f.objects[ix], f.objects[aix], f.objects[iy], &fb, &phi[a][ix]);
                    let t = b.compose(f.objects[ix], f.objects[iy], y, nuy, &t);
                    let t = b.compose(x, f.objects[ix], y, &t, nux_inv);
                    hs.push((a, t));
                    ls.push(format!("{}|{}", c.labels(aix, iy)[i], g.name(a)));
                }
            }
            hom.push(hs);
            labels.push(ls);
        }
    }
    GradedCategory::new(b.clone(), g.monoid.clone(), hom, labels)
}
