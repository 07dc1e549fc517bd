//! Seeded random inputs: layered quivers with cyclic actions, graded path categories, modules.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::action::MonoidAction;
use crate::category::{LinCategory, PathCategory};
use crate::graded::GradedCategory;
use crate::field::{Field, Scalar};
use crate::linalg::{Matrix, Span, Vector};
use crate::modules::{pushdown, GradedModule, Module};
use crate::orbit::{CatGAction, OrbitCategory};
use crate::monoid::{FiniteMonoid, MonoidElement, MonoidPresentation};
use crate::presentation::AlgebraPresentation;
use crate::quiver::{Element, Quiver};

#[derive(Clone, Copy, Debug)]
pub struct RandomShape {
    pub levels: usize,
    /// Vertex orbits per level are drawn from `1..=max_per_level`.
    pub max_per_level: usize,
    pub max_vertices: usize,
    pub arrow_chance: f64,
    /// Chance that a vertex orbit is a fixed point.
    pub fixed_chance: f64,
    pub zero_relation_chance: f64,
}

impl Default for RandomShape {
    fn default() -> Self {
        RandomShape {
            levels: 3,
            max_per_level: 2,
            max_vertices: 8,
            arrow_chance: 0.5,
            fixed_chance: 0.3,
            zero_relation_chance: 0.3,
        }
    }
}

/// The cyclic group `<g | g^r = 1>`.
pub fn cyclic_group(r: usize) -> (MonoidPresentation, FiniteMonoid) {
    let m = MonoidPresentation::new(
        vec!["g".into()],
        vec![(MonoidElement::Word(vec![0; r]), MonoidElement::identity())],
        false,
    )
    .expect("valid presentation");
    let g = FiniteMonoid::from_presentation(&m, r + 2, r).expect("cyclic group");
    (m, g)
}

struct Layered {
    quiver: Quiver,
    levels: Vec<Vec<usize>>,
    /// Image of each vertex under the generator.
    shift: Vec<usize>,
}

fn layered_vertices(rng: &mut ChaCha8Rng, r: usize, shape: &RandomShape) -> Layered {
    let mut q = Quiver::new();
    let mut levels = Vec::new();
    let mut shift = Vec::new();
    for l in 0..shape.levels {
        let mut lv = Vec::new();
        for i in 0..rng.gen_range(1..=shape.max_per_level) {
            let size = if r == 1 || rng.gen_bool(shape.fixed_chance) { 1 } else { r };
            if q.num_vertices() + size > shape.max_vertices && !lv.is_empty() {
                break;
            }
            let first = q.num_vertices();
            for t in 0..size {
                let label = if size == 1 { format!("{l}{i}") } else { format!("{l}{i}{}", "'".repeat(t)) };
                let v = q.add_vertex(&label).unwrap();
                shift.push(first + (t + 1) % size);
                lv.push(v);
            }
        }
        levels.push(lv);
    }
    Layered { quiver: q, levels, shift }
}

fn orbit_of<T: Copy + Ord>(start: T, step: impl Fn(T) -> T) -> Vec<T> {
    let mut out = vec![start];
    let mut cur = step(start);
    while cur != start {
        out.push(cur);
        cur = step(cur);
    }
    out
}

/// A layered quiver with the cyclic group of order `r` rotating vertex and arrow orbits,
/// with orbit-closed zero relations of length 2.
pub fn random_cyclic_action(seed: u64, field: Field, r: usize, shape: RandomShape) -> (MonoidAction, FiniteMonoid) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let Layered { quiver: mut q, levels, shift } = layered_vertices(&mut rng, r, &shape);
    let mut arrow_shift: Vec<usize> = Vec::new();
    for l in 1..levels.len() {
        for &x in &levels[l - 1] {
            for &y in &levels[l] {
                let orb = orbit_of((x, y), |(a, b)| (shift[a], shift[b]));
                if orb.iter().any(|p| *p < (x, y)) || !rng.gen_bool(shape.arrow_chance) {
                    continue;
                }
                let first = q.num_arrows();
                for (t, &(a, b)) in orb.iter().enumerate() {
                    q.add_arrow(&format!("a{}", first + t), a, b).unwrap();
                    arrow_shift.push(first + (t + 1) % orb.len());
                }
            }
        }
    }
    let mut rels = Vec::new();
    for a in 0..q.num_arrows() {
        for b in 0..q.num_arrows() {
            if q.path_of(&[a, b]).is_none() {
                continue;
            }
            let orb = orbit_of((a, b), |(u, v)| (arrow_shift[u], arrow_shift[v]));
            if orb.iter().any(|p| *p < (a, b)) || !rng.gen_bool(shape.zero_relation_chance) {
                continue;
            }
            for &(u, v) in &orb {
                rels.push(Element::path(field, q.path_of(&[u, v]).unwrap()));
            }
        }
    }
    let maps = vec![(0..q.num_arrows()).map(|a| Element::path(field, q.arrow_path(arrow_shift[a]))).collect()];
    let alg = AlgebraPresentation::new(field, q, rels, 2 * shape.levels + 2).expect("monomial relations complete");
    let (m, g) = cyclic_group(r);
    let act = MonoidAction::new(alg, m, vec![shift.into_iter().map(Some).collect()], maps).expect("well-shaped action");
    (act, g)
}

/// A layered path category with monomial relations and random arrow degrees in `Z/r`.
pub fn random_graded(seed: u64, field: Field, r: usize, shape: RandomShape) -> GradedCategory {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let Layered { quiver: mut q, levels, .. } = layered_vertices(&mut rng, 1, &shape);
    for l in 1..levels.len() {
        for &x in &levels[l - 1] {
            for &y in &levels[l] {
                for _ in 0..2 {
                    if rng.gen_bool(shape.arrow_chance) {
                        let n = q.num_arrows();
                        q.add_arrow(&format!("a{n}"), x, y).unwrap();
                    }
                }
            }
        }
    }
    let mut rels = Vec::new();
    for a in 0..q.num_arrows() {
        for b in 0..q.num_arrows() {
            if let Some(p) = q.path_of(&[a, b]) {
                if rng.gen_bool(shape.zero_relation_chance) {
                    rels.push(Element::path(field, p));
                }
            }
        }
    }
    let (_, g) = cyclic_group(r);
    let gen = g.generators[0];
    let power = |e: usize| (0..e).fold(g.identity, |acc, _| g.mul(gen, acc));
    let degrees: Vec<usize> = (0..q.num_arrows()).map(|_| power(rng.gen_range(0..r))).collect();
    let alg = AlgebraPresentation::new(field, q, rels, 2 * shape.levels + 2).expect("monomial relations complete");
    let pc = PathCategory::new(&alg, 2 * shape.levels + 2).expect("finite path category");
    let n = pc.cat.num_objects();
    let mut hom = Vec::with_capacity(n * n);
    for xy in 0..n * n {
        let (x, y) = (xy / n, xy % n);
        hom.push(
            pc.paths[xy]
                .iter()
                .enumerate()
                .map(|(i, p)| (p.arrows.iter().fold(g.identity, |acc, &a| g.mul(degrees[a], acc)), pc.cat.basis_vec(x, y, i)))
                .collect(),
        );
    }
    let labels = (0..n * n).map(|xy| pc.cat.labels(xy / n, xy % n).to_vec()).collect();
    GradedCategory::new(pc.cat, g, hom, labels).expect("path basis is homogeneous")
}

pub fn random_scalar(rng: &mut ChaCha8Rng, k: Field) -> Scalar {
    k.int(rng.gen_range(-2i64..=2))
}

pub fn random_vector(rng: &mut ChaCha8Rng, k: Field, n: usize) -> Vector {
    (0..n).map(|_| random_scalar(rng, k)).collect()
}

/// The submodule of `m` generated by `gens` (`(object, vector)`), in a basis of its own.
pub fn submodule(c: &LinCategory, m: &Module, gens: &[(usize, Vector)]) -> Module {
    let n = c.num_objects();
    let k = c.field;
    let mut spans: Vec<Span> = (0..n).map(|x| Span::new(k, m.dims[x])).collect();
    let mut frontier: Vec<(usize, Vector)> = Vec::new();
    for (x, v) in gens {
        if spans[*x].insert(v) {
            frontier.push((*x, v.clone()));
        }
    }
    while let Some((y, v)) = frontier.pop() {
        for x in 0..n {
            for i in 0..c.dim(x, y) {
                let w = m.maps[x * n + y][i].mul_vec(&v);
                if spans[x].insert(&w) {
                    frontier.push((x, w));
                }
            }
        }
    }
    let dims: Vec<usize> = spans.iter().map(Span::rank).collect();
    let mut maps = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            maps.push(
                (0..c.dim(x, y))
                    .map(|i| {
                        let cols: Vec<Vector> = spans[y]
                            .basis()
                            .iter()
                            .map(|v| spans[x].coords(&m.maps[x * n + y][i].mul_vec(v)).expect("closed under the action"))
                            .collect();
                        Matrix::from_cols(k, dims[x], &cols)
                    })
                    .collect(),
            );
        }
    }
    Module { field: k, dims, maps }
}

/// A cyclic submodule of a random representable, or its sum with a second one.
pub fn random_module(c: &LinCategory, seed: u64) -> Module {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = c.num_objects();
    let mut parts = Vec::new();
    for _ in 0..rng.gen_range(1..=2) {
        let z = rng.gen_range(0..n);
        let p = Module::representable(c, z);
        let x = rng.gen_range(0..n);
        let v = random_vector(&mut rng, c.field, p.dims[x]);
        parts.push(submodule(c, &p, &[(x, v)]));
    }
    Module::direct_sum(c, &parts)
}

/// A random element of each Hom space, for sampling.
pub fn random_morphisms(c: &LinCategory, seed: u64) -> Vec<Vector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = c.num_objects();
    (0..n * n).map(|xy| random_vector(&mut rng, c.field, c.dim(xy / n, xy % n))).collect()
}

fn random_invertible(rng: &mut ChaCha8Rng, k: Field, n: usize) -> (Matrix, Matrix) {
    loop {
        let rows: Vec<Vector> = (0..n).map(|_| random_vector(rng, k, n)).collect();
        let t = Matrix::from_rows(k, n, &rows);
        if let Some(ti) = t.inverse() {
            return (t, ti);
        }
    }
}

/// The pushdown of a random module, transported along a random change of basis at every object,
/// so that the homogeneous components are no longer coordinate blocks.
pub fn random_graded_module(c: &LinCategory, g: &CatGAction, orbit: &OrbitCategory, seed: u64) -> GradedModule {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let base = pushdown(c, g, orbit, &random_module(c, seed));
    let k = c.field;
    let n = orbit.cat.num_objects();
    let ts: Vec<(Matrix, Matrix)> = base.module.dims.iter().map(|&d| random_invertible(&mut rng, k, d)).collect();
    let mut maps = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            maps.push(base.module.maps[x * n + y].iter().map(|m| ts[x].0.mul(m).mul(&ts[y].1)).collect());
        }
    }
    let components = base
        .components
        .iter()
        .zip(&ts)
        .map(|(cs, (t, _))| cs.iter().map(|vs| vs.iter().map(|v| t.mul_vec(v)).collect()).collect())
        .collect();
    GradedModule {
        module: Module { field: k, dims: base.module.dims.clone(), maps },
        components,
    }
}
