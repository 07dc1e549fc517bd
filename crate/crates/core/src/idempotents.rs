//! Split idempotent completion, isomorphism search, basic categories and
//! re-presentation of a finite category by a quiver with relations.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::category::{Coordinates, LinCategory};
use crate::field::{Field, Scalar};
use crate::linalg::{add_scaled, scale, unit_vec, Matrix, Span, Vector};
use crate::orbit::{orbit1, CatGAction};
use crate::presentation::AlgebraPresentation;
use crate::quiver::{Element, Path, Quiver};
use crate::rewrite::RewriteSystem;
use crate::skew::remove_redundant;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum IdempotentError {
    #[error("element at {0} is not idempotent")]
    NotIdempotent(String),
    #[error("minimal polynomial does not split into distinct linear factors: {0}")]
    NotSplit(String),
    #[error("radical computation needs characteristic 0")]
    NotCharZero,
    #[error("emitted presentation failed the round trip: {0}")]
    VerificationMismatch(String),
}

/// An object `(x, e)` of the split idempotent completion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SicObject {
    pub base: usize,
    pub idempotent: Vector,
    pub label: String,
}

#[derive(Clone, Debug)]
pub struct SicCategory {
    pub cat: LinCategory,
    pub objects: Vec<SicObject>,
    /// Basis of `Hom((x,e),(x',e'))` as vectors of `C(x, x')`.
    pub embed: Vec<Vec<Vector>>,
}

/// The full subcategory of `sic(C)` on `objects`.
pub fn sic(c: &LinCategory, objects: Vec<SicObject>) -> Result<SicCategory, IdempotentError> {
    for o in &objects {
        let x = o.base;
        if c.compose(x, x, x, &o.idempotent, &o.idempotent) != o.idempotent {
            return Err(IdempotentError::NotIdempotent(o.label.clone()));
        }
    }
    let n = objects.len();
    let mut embed = Vec::with_capacity(n * n);
    let mut coords = Vec::with_capacity(n * n);
    let mut labels = Vec::with_capacity(n * n);
    for p in &objects {
        for q in &objects {
            let (x, y) = (p.base, q.base);
            let mut span = Span::new(c.field, c.dim(x, y));
            let mut ls = Vec::new();
            for i in 0..c.dim(x, y) {
                let f = c.basis_vec(x, y, i);
                let img = c.compose(x, y, y, &q.idempotent, &c.compose(x, x, y, &f, &p.idempotent));
                if span.insert(&img) {
                    ls.push(if img == f {
                        c.labels(x, y)[i].clone()
                    } else {
                        c.fmt_morphism(x, y, &img)
                    });
                }
            }
            let basis = span.basis().to_vec();
            coords.push(Coordinates::new(c.field, c.dim(x, y), &basis));
            embed.push(basis);
            labels.push(ls);
        }
    }
    let ids = objects
        .iter()
        .enumerate()
        .map(|(i, o)| coords[i * n + i].coords(&o.idempotent).expect("e = e e e"))
        .collect();
    let cat = LinCategory::build(
        c.field,
        objects.iter().map(|o| o.label.clone()).collect(),
        labels,
        |p, q, r, i, j| {
            let f = &embed[p * n + q][j];
            let g = &embed[q * n + r][i];
            let h = c.compose(objects[p].base, objects[q].base, objects[r].base, g, f);
            coords[p * n + r].coords(&h).expect("composite stays in the corner")
        },
        ids,
    );
    Ok(SicCategory { cat, objects, embed })
}

/// Objects `(x, e_x)` for all `x`, with `x` replaced by the pieces in `splits`.
pub fn sic_objects(c: &LinCategory, splits: &[(usize, Vec<Vector>)]) -> Vec<SicObject> {
    let mut out = Vec::new();
    for x in 0..c.num_objects() {
        match splits.iter().find(|(y, _)| *y == x) {
            Some((_, es)) => {
                for (i, e) in es.iter().enumerate() {
                    out.push(SicObject {
                        base: x,
                        idempotent: e.clone(),
                        label: format!("({},e{})", c.objects[x], i + 1),
                    });
                }
            }
            None => out.push(SicObject {
                base: x,
                idempotent: c.identity(x).clone(),
                label: c.objects[x].clone(),
            }),
        }
    }
    out
}

/// Monic minimal polynomial of `a` in `End(x)`, low degree first, and the powers `a^0..a^(d-1)`.
pub fn minimal_polynomial(c: &LinCategory, x: usize, a: &[Scalar]) -> (Vec<Scalar>, Vec<Vector>) {
    let k = c.field;
    let mut span = Span::new(k, c.dim(x, x));
    let mut powers: Vec<Vector> = Vec::new();
    let mut cur = c.identity(x).clone();
    loop {
        if let Some(co) = span.coords(&cur) {
            let mut poly: Vec<Scalar> = co.iter().map(|v| -v).collect();
            poly.push(k.one());
            return (poly, powers);
        }
        span.insert(&cur);
        powers.push(cur.clone());
        cur = c.compose(x, x, x, a, &cur);
    }
}

fn rational_roots(poly: &[Scalar]) -> Vec<Scalar> {
    let k = Field::Rationals;
    let mut den = BigInt::one();
    for c in poly {
        den = den.lcm(&c.as_ratio().1);
    }
    let ints: Vec<BigInt> = poly.iter().map(|c| {
        let (n, d) = c.as_ratio();
        n * (&den / d)
    }).collect();
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let n = n.abs().to_u64().unwrap_or(0);
        (1..=n).filter(|d| n.is_multiple_of(*d)).map(BigInt::from).collect()
    };
    let eval = |r: &Scalar| -> Scalar {
        let mut acc = k.zero();
        for c in poly.iter().rev() {
            acc = &(&acc * r) + c;
        }
        acc
    };
    let mut roots = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if low > 0 {
        roots.push(k.zero());
    }
    let (a0, an) = (&ints[low], ints.last().unwrap());
    for p in divisors(a0) {
        for q in divisors(an) {
            for s in [1i64, -1] {
                let r = k.ratio(&(&p * BigInt::from(s)), &q).unwrap();
                if !roots.contains(&r) && eval(&r).is_zero() {
                    roots.push(r);
                }
            }
        }
    }
    roots
}

fn roots_of(k: Field, poly: &[Scalar]) -> Vec<Scalar> {
    match k.elements() {
        Some(all) => all
            .into_iter()
            .filter(|r| {
                let mut acc = k.zero();
                for c in poly.iter().rev() {
                    acc = &(&acc * r) + c;
                }
                acc.is_zero()
            })
            .collect(),
        None => rational_roots(poly),
    }
}

/// Splits `id_x` along the distinct roots of the minimal polynomial of the loop `a`.
pub fn crt_split(c: &LinCategory, x: usize, a: &[Scalar]) -> Result<Vec<Vector>, IdempotentError> {
    let k = c.field;
    let (poly, _) = minimal_polynomial(c, x, a);
    let deg = poly.len() - 1;
    let roots = roots_of(k, &poly);
    if roots.len() != deg {
        let shown: Vec<String> = poly.iter().map(|s| format!("{s}")).collect();
        return Err(IdempotentError::NotSplit(format!("coefficients [{}]", shown.join(", "))));
    }
    let id = c.identity(x).clone();
    let mut out = Vec::new();
    for (i, ri) in roots.iter().enumerate() {
        let mut e = id.clone();
        for (j, rj) in roots.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut shifted = a.to_vec();
            add_scaled(&mut shifted, &-rj, &id);
            let f = c.compose(x, x, x, &shifted, &e);
            e = scale(&(ri - rj).inv().unwrap(), &f);
        }
        out.push(e);
    }
    let mut sum = c.zero(x, x);
    for (i, e) in out.iter().enumerate() {
        for (j, f) in out.iter().enumerate() {
            let ef = c.compose(x, x, x, e, f);
            let want = if i == j { e.clone() } else { c.zero(x, x) };
            if ef != want {
                return Err(IdempotentError::NotIdempotent(format!("CRT piece {i}")));
            }
        }
        add_scaled(&mut sum, &k.one(), e);
    }
    if sum != id {
        return Err(IdempotentError::NotIdempotent(String::from("CRT pieces do not sum to the identity")));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoCertificate {
    pub forward: Vector,
    pub backward: Vector,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Confidence {
    Exact,
    Heuristic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    Found(IsoCertificate),
    NotFound(Confidence),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoResult {
    pub verdict: IsoVerdict,
}

/// Largest Hom size enumerated in exhaustive mode.
pub const EXHAUSTIVE_CAP: u64 = 1 << 16;

fn dims_match(c: &LinCategory, x: usize, y: usize) -> bool {
    let dxy = c.dim(x, y);
    if dxy == 0 || dxy != c.dim(y, x) || c.dim(x, x) != c.dim(y, y) {
        return false;
    }
    (0..c.num_objects()).all(|z| c.dim(z, x) == c.dim(z, y) && c.dim(x, z) == c.dim(y, z))
}

/// Searches for an isomorphism `x -> y`.
pub fn iso_objects(c: &LinCategory, x: usize, y: usize, seed: u64, exhaustive: bool) -> IsoResult {
    let found = |f: Vector, g: Vector| IsoResult {
        verdict: IsoVerdict::Found(IsoCertificate { forward: f, backward: g }),
    };
    if x == y {
        return found(c.identity(x).clone(), c.identity(x).clone());
    }
    if !dims_match(c, x, y) {
        return IsoResult {
            verdict: IsoVerdict::NotFound(Confidence::Exact),
        };
    }
    let d = c.dim(x, y);
    let try_f = |f: &Vector| c.inverse_of(x, y, f).map(|g| (f.clone(), g));
    for i in 0..d {
        if let Some((f, g)) = try_f(&c.basis_vec(x, y, i)) {
            return found(f, g);
        }
    }
    let k = c.field;
    if exhaustive {
        if let Field::Prime(p) = k {
            if p.checked_pow(d as u32).is_some_and(|s| s <= EXHAUSTIVE_CAP) {
                let mut digits = vec![0u64; d];
                loop {
                    let f: Vector = digits.iter().map(|&v| k.int(v as i64)).collect();
                    if let Some((f, g)) = try_f(&f) {
                        return found(f, g);
                    }
                    let mut i = 0;
                    while i < d && digits[i] == p - 1 {
                        digits[i] = 0;
                        i += 1;
                    }
                    if i == d {
                        break;
                    }
                    digits[i] += 1;
                }
                return IsoResult {
                    verdict: IsoVerdict::NotFound(Confidence::Exact),
                };
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((x as u64) << 32) ^ y as u64);
    for _ in 0..64 {
        let f: Vector = (0..d).map(|_| k.int(rng.gen_range(-3i64..=3))).collect();
        if let Some((f, g)) = try_f(&f) {
            return found(f, g);
        }
    }
    IsoResult {
        verdict: IsoVerdict::NotFound(Confidence::Heuristic),
    }
}

#[derive(Clone, Debug)]
pub struct BasicSelection {
    pub representatives: Vec<usize>,
    /// Index into `representatives` for each object.
    pub class_of: Vec<usize>,
    /// Isomorphism from each object to its representative.
    pub certificates: Vec<IsoCertificate>,
    pub warnings: Vec<String>,
    pub cat: LinCategory,
}

/// One representative per isomorphism class, first in input order.
pub fn basic(c: &LinCategory, seed: u64, exhaustive: bool) -> BasicSelection {
    let mut reps: Vec<usize> = Vec::new();
    let mut class_of = Vec::new();
    let mut certs = Vec::new();
    let mut warnings = Vec::new();
    for x in 0..c.num_objects() {
        let mut placed = false;
        for (ri, &r) in reps.iter().enumerate() {
            match iso_objects(c, x, r, seed, exhaustive).verdict {
                IsoVerdict::Found(cert) => {
                    class_of.push(ri);
                    certs.push(cert);
                    placed = true;
                    break;
                }
                IsoVerdict::NotFound(Confidence::Heuristic) => warnings.push(format!(
                    "{} vs {}: no isomorphism found (heuristic)",
                    c.objects[x], c.objects[r]
                )),
                IsoVerdict::NotFound(Confidence::Exact) => {}
            }
        }
        if !placed {
            class_of.push(reps.len());
            reps.push(x);
            certs.push(IsoCertificate {
                forward: c.identity(x).clone(),
                backward: c.identity(x).clone(),
            });
        }
    }
    let cat = c.full_subcategory(&reps);
    BasicSelection {
        representatives: reps,
        class_of,
        certificates: certs,
        warnings,
        cat,
    }
}

/// `bas(sic(C/1G))` over the supplied splits of objects of `C/1G`.
pub fn skew_category(
    c: &LinCategory,
    g: &CatGAction,
    splits: &[(usize, Vec<Vector>)],
    seed: u64,
    exhaustive: bool,
) -> Result<BasicSelection, IdempotentError> {
    let o1 = orbit1(c, g);
    let s = sic(&o1, sic_objects(&o1, splits))?;
    Ok(basic(&s.cat, seed, exhaustive))
}

/// Jacobson radical of each Hom space via the trace form `tr(L_{g f})`.
pub fn radical(c: &LinCategory) -> Result<Vec<Vec<Vector>>, IdempotentError> {
    let k = c.field;
    if k.characteristic() != 0 {
        return Err(IdempotentError::NotCharZero);
    }
    let n = c.num_objects();
    let trace = |x: usize, h: &[Scalar]| -> Scalar {
        let mut t = k.zero();
        for w in 0..n {
            for i in 0..c.dim(w, x) {
                let img = c.compose(w, x, x, h, &c.basis_vec(w, x, i));
                t += &img[i];
            }
        }
        t
    };
    let mut out = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let (dxy, dyx) = (c.dim(x, y), c.dim(y, x));
            if dxy == 0 {
                out.push(Vec::new());
                continue;
            }
            if dyx == 0 {
                out.push((0..dxy).map(|i| c.basis_vec(x, y, i)).collect());
                continue;
            }
            let mut m = Matrix::zeros(k, dyx, dxy);
            for i in 0..dyx {
                let g = c.basis_vec(y, x, i);
                for j in 0..dxy {
                    let gf = c.compose(x, y, x, &g, &c.basis_vec(x, y, j));
                    m.set(i, j, trace(x, &gf));
                }
            }
            out.push(m.nullspace());
        }
    }
    Ok(out)
}

/// Spans of the subcategory generated by identities and `gens` (`(x, y, vector)`).
pub fn generated(c: &LinCategory, gens: &[(usize, usize, Vector)]) -> Vec<Span> {
    let n = c.num_objects();
    let mut spans: Vec<Span> = (0..n * n).map(|xy| Span::new(c.field, c.dim(xy / n, xy % n))).collect();
    let mut frontier: Vec<(usize, usize, Vector)> = Vec::new();
    for x in 0..n {
        if spans[x * n + x].insert(c.identity(x)) {
            frontier.push((x, x, c.identity(x).clone()));
        }
    }
    while let Some((x, y, f)) = frontier.pop() {
        for (s, t, g) in gens {
            if *s == y {
                let h = c.compose(x, y, *t, g, &f);
                if spans[x * n + t].insert(&h) {
                    frontier.push((x, *t, h));
                }
            }
        }
    }
    spans
}

/// Quiver with relations together with the morphisms chosen for its arrows.
#[derive(Clone, Debug)]
pub struct Represented {
    pub presentation: AlgebraPresentation,
    pub arrow_images: Vec<Vector>,
    pub dims_match: bool,
}

fn spans_all(c: &LinCategory, spans: &[Span]) -> bool {
    let n = c.num_objects();
    (0..n * n).all(|xy| spans[xy].rank() == c.dim(xy / n, xy % n))
}

fn label_key(l: &str) -> (usize, String) {
    (l.len(), String::from(l))
}

/// Re-presents a finite category (characteristic 0) as a quiver with relations.
pub fn represent(c: &LinCategory, max_len: usize) -> Result<Represented, IdempotentError> {
    let k = c.field;
    let n = c.num_objects();
    let rad = radical(c)?;
    let rad_span: Vec<Span> = (0..n * n)
        .map(|xy| Span::from_vectors(k, c.dim(xy / n, xy % n), &rad[xy]))
        .collect();
    let mut gens: Vec<(usize, usize, Vector, String)> = Vec::new();
    // top generators: non-radical morphisms not produced by earlier ones modulo the radical
    let mut sorted: Vec<(usize, usize, usize)> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for i in 0..c.dim(x, y) {
                sorted.push((x, y, i));
            }
        }
    }
    sorted.sort_by_key(|&(x, y, i)| (label_key(&c.labels(x, y)[i]), x, y));
    for &(x, y, i) in &sorted {
        let f = c.basis_vec(x, y, i);
        if rad_span[x * n + y].contains(&f) {
            continue;
        }
        let plain: Vec<(usize, usize, Vector)> = gens.iter().map(|(a, b, v, _)| (*a, *b, v.clone())).collect();
        let gsp = generated(c, &plain);
        let mut mod_rad = gsp[x * n + y].clone();
        for r in &rad[x * n + y] {
            mod_rad.insert(r);
        }
        if !mod_rad.contains(&f) {
            gens.push((x, y, f, c.labels(x, y)[i].clone()));
        }
    }
    let top: Vec<(usize, usize, Vector)> = gens.iter().map(|(a, b, v, _)| (*a, *b, v.clone())).collect();
    // decomposable part of the radical: J^2 + T J + J T + T J T
    let mut dec: Vec<Span> = (0..n * n).map(|xy| Span::new(k, c.dim(xy / n, xy % n))).collect();
    for x in 0..n {
        for w in 0..n {
            for y in 0..n {
                for f in &rad[x * n + w] {
                    for g in &rad[w * n + y] {
                        dec[x * n + y].insert(&c.compose(x, w, y, g, f));
                    }
                }
            }
        }
    }
    for (s, t, tv) in &top {
        for x in 0..n {
            for f in rad[x * n + s].clone() {
                let h = c.compose(x, *s, *t, tv, &f);
                dec[x * n + t].insert(&h);
                for (s2, t2, tv2) in &top {
                    if s2 == t {
                        dec[x * n + t2].insert(&c.compose(x, *t, *t2, tv2, &h));
                    }
                }
            }
            for f in rad[t * n + x].clone() {
                dec[s * n + x].insert(&c.compose(*s, *t, x, &f, tv));
            }
        }
    }
    let mut rad_candidates: Vec<(usize, usize, Vector, String)> = Vec::new();
    for &(x, y, i) in &sorted {
        let f = c.basis_vec(x, y, i);
        if rad_span[x * n + y].contains(&f) {
            rad_candidates.push((x, y, f, c.labels(x, y)[i].clone()));
        }
    }
    for x in 0..n {
        for y in 0..n {
            for r in &rad[x * n + y] {
                rad_candidates.push((x, y, r.clone(), c.fmt_morphism(x, y, r)));
            }
        }
    }
    for (x, y, f, l) in &rad_candidates {
        let sp = &mut dec[x * n + y];
        if sp.insert(f) {
            gens.push((*x, *y, f.clone(), l.clone()));
        }
    }
    loop {
        let plain: Vec<(usize, usize, Vector)> = gens.iter().map(|(a, b, v, _)| (*a, *b, v.clone())).collect();
        let gsp = generated(c, &plain);
        if spans_all(c, &gsp) {
            break;
        }
        let extra = rad_candidates
            .iter()
            .chain(sorted.iter().map(|&(x, y, i)| (x, y, c.basis_vec(x, y, i), c.labels(x, y)[i].clone())).collect::<Vec<_>>().iter())
            .find(|(x, y, f, _)| !gsp[x * n + y].contains(f))
            .cloned();
        match extra {
            Some(e) => gens.push(e),
            None => break,
        }
    }
    let mut q = Quiver::new();
    for o in &c.objects {
        q.add_vertex(o).expect("object labels are distinct");
    }
    let mut used = Vec::new();
    for (x, y, _, l) in &gens {
        let plain = !l.is_empty() && l.chars().all(|ch| ch.is_alphanumeric() || "_'*[]()^,".contains(ch));
        let mut label = if plain { l.clone() } else { format!("u{}", used.len() + 1) };
        while used.contains(&label) {
            label.push('\'');
        }
        used.push(label.clone());
        q.add_arrow(&label, *x, *y).unwrap();
    }
    let images: Vec<Vector> = gens.iter().map(|(_, _, v, _)| v.clone()).collect();
    let eval = |p: &Path| -> Vector {
        let mut v = c.identity(p.source).clone();
        let mut at = p.source;
        for &a in &p.arrows {
            let ar = q.arrow(a);
            v = c.compose(p.source, at, ar.head, &images[a], &v);
            at = ar.head;
        }
        v
    };
    let bound = 2 * max_len + 4;
    let mut rels: Vec<Element> = Vec::new();
    let mut sys = RewriteSystem::complete_lenient(k, &rels, bound).unwrap();
    let total = c.total_dim();
    let next = |v: usize| -> Vec<(usize, usize)> {
        q.arrows().iter().enumerate().filter(|(_, a)| a.tail == v).map(|(i, a)| (i, a.head)).collect()
    };
    let mut finished = false;
    for len in 0..=max_len {
        for x in 0..n {
            for y in 0..n {
                loop {
                    let (paths, _) = sys.irreducible_paths(&[Path::trivial(x)], &next, len);
                    let ps: Vec<&Path> = paths.iter().filter(|p| p.target == y).collect();
                    if ps.is_empty() {
                        break;
                    }
                    let cols: Vec<Vector> = ps.iter().map(|p| eval(p)).collect();
                    let ker = if c.dim(x, y) == 0 {
                        (0..ps.len()).map(|i| unit_vec(k, ps.len(), i)).collect()
                    } else {
                        Matrix::from_cols(k, c.dim(x, y), &cols).nullspace()
                    };
                    let Some(kv) = ker.into_iter().next() else { break };
                    let mut r = Element::zero(k);
                    for (p, coef) in ps.iter().zip(&kv) {
                        r.add_term((*p).clone(), coef.clone());
                    }
                    let lead = r.leading().unwrap().1.clone();
                    rels.push(r.scale(&lead.inv().unwrap()));
                    sys = RewriteSystem::complete_lenient(k, &rels, bound).unwrap();
                }
            }
        }
        let (all, more) = sys.irreducible_paths(&(0..n).map(Path::trivial).collect::<Vec<_>>(), &next, max_len);
        if !more && all.len() == total {
            finished = true;
            break;
        }
    }
    let rels = remove_redundant(k, &rels, bound);
    let pres = AlgebraPresentation::new_lenient(k, q, rels, bound).map_err(|e| IdempotentError::VerificationMismatch(format!("{e}")))?;
    let dims_match = finished
        && match pres.basis(max_len) {
            Ok(b) => {
                let mut ok = b.len() == total;
                for x in 0..n {
                    for y in 0..n {
                        ok &= b.iter().filter(|p| p.source == x && p.target == y).count() == c.dim(x, y);
                    }
                }
                ok
            }
            Err(_) => false,
        };
    if !dims_match {
        return Err(IdempotentError::VerificationMismatch(String::from("Hom dimensions of the rebuilt algebra differ")));
    }
    Ok(Represented {
        presentation: pres,
        arrow_images: images,
        dims_match,
    })
}

/// Exhaustive search for a unit-preserving algebra isomorphism between two finite
/// one-object categories over a small prime field.
pub fn exhaustive_algebra_iso(a: &LinCategory, b: &LinCategory) -> Option<Matrix> {
    let k = a.field;
    let p = match k {
        Field::Prime(p) => p,
        Field::Rationals => return None,
    };
    let d = a.dim(0, 0);
    if d != b.dim(0, 0) || p.checked_pow((d * d) as u32).is_none_or(|s| s > 10_000_000) {
        return None;
    }
    let mut digits = vec![0u64; d * d];
    loop {
        let m = {
            let rows: Vec<Vector> = (0..d).map(|i| (0..d).map(|j| k.int(digits[i * d + j] as i64)).collect()).collect();
            Matrix::from_rows(k, d, &rows)
        };
        if m.mul_vec(a.identity(0)) == *b.identity(0) && m.rank() == d {
            let ok = (0..d).all(|i| {
                (0..d).all(|j| {
                    let lhs = m.mul_vec(a.compose_basis(0, 0, 0, i, j));
                    lhs == b.compose(0, 0, 0, &m.col(i), &m.col(j))
                })
            });
            if ok {
                return Some(m);
            }
        }
        let mut i = 0;
        while i < digits.len() && digits[i] == p - 1 {
            digits[i] = 0;
            i += 1;
        }
        if i == digits.len() {
            return None;
        }
        digits[i] += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::orbit1;
    use crate::testing::pipeline;

    fn loop_of(o1: &LinCategory) -> Vector {
        let i = o1.labels(0, 0).iter().position(|l| l == "(g,1)").unwrap();
        o1.basis_vec(0, 0, i)
    }

    #[test]
    fn the_group_loop_is_an_involution() {
        let p = pipeline(Field::Rationals);
        let o1 = orbit1(&p.pc.cat, &p.ga);
        let (poly, powers) = minimal_polynomial(&o1, 0, &loop_of(&o1));
        let k = Field::Rationals;
        assert_eq!(poly, vec![-k.one(), k.zero(), k.one()]);
        assert_eq!(powers.len(), 2);
        let es = crt_split(&o1, 0, &loop_of(&o1)).unwrap();
        assert_eq!(es.len(), 2);
    }

    #[test]
    fn no_split_in_characteristic_two() {
        // t^2 - 1 = (t - 1)^2 over GF(2)
        let p = pipeline(Field::Prime(2));
        let o1 = orbit1(&p.pc.cat, &p.ga);
        assert!(crt_split(&o1, 0, &loop_of(&o1)).is_err());
    }

    #[test]
    fn swapped_vertices_are_isomorphic() {
        let p = pipeline(Field::Prime(3));
        let o1 = orbit1(&p.pc.cat, &p.ga);
        assert!(matches!(iso_objects(&o1, 1, 2, 0, true).verdict, IsoVerdict::Found(_)));
        assert_eq!(iso_objects(&o1, 0, 1, 0, true).verdict, IsoVerdict::NotFound(Confidence::Exact));
        let b = basic(&o1, 0, true);
        assert_eq!(b.representatives, vec![0, 1, 3]);
        assert_eq!(b.class_of, vec![0, 1, 1, 2, 2]);
    }

    #[test]
    fn radical_and_presentation_of_the_basic_algebra() {
        let p = pipeline(Field::Rationals);
        let b = basic(&orbit1(&p.pc.cat, &p.ga), 0, false);
        let rad = radical(&b.cat).unwrap();
        // End(1) is k x k, so only the off-diagonal spaces are radical
        assert_eq!(rad.iter().map(Vec::len).sum::<usize>(), 5);
        let rep = represent(&b.cat, 8).unwrap();
        assert!(rep.dims_match);
        assert_eq!(rep.presentation.quiver.num_arrows(), 3);
        let gen = generated(&b.cat, &[]);
        let ranks: Vec<usize> = gen.iter().map(|s| s.rank()).collect();
        assert_eq!(ranks, vec![1, 0, 0, 0, 1, 0, 0, 0, 1]);
    }

    #[test]
    fn splitting_yields_four_vertices() {
        let p = pipeline(Field::Rationals);
        let o1 = orbit1(&p.pc.cat, &p.ga);
        let es = crt_split(&o1, 0, &loop_of(&o1)).unwrap();
        let sk = skew_category(&p.pc.cat, &p.ga, &[(0, es)], 0, false).unwrap();
        assert_eq!(sk.cat.num_objects(), 4);
        assert_eq!(sk.cat.total_dim(), p.oc.cat.total_dim() - 13);
        assert!(represent(&sk.cat, 8).unwrap().presentation.relations.is_empty());
    }

    #[test]
    fn exhaustive_search_separates_small_algebras() {
        let p = pipeline(Field::Prime(2));
        let o1 = orbit1(&p.pc.cat, &p.ga);
        let end = o1.full_subcategory(&[0]);
        assert!(exhaustive_algebra_iso(&end, &end).is_some());
        let local = o1.full_subcategory(&[3]);
        assert!(exhaustive_algebra_iso(&end, &local).is_none());
    }
}
