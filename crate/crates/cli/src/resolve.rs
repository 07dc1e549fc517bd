//! Turning a parsed document into core structures.

use orbitcat::action::{ActionError, MonoidAction};
use orbitcat::field::{Field, Scalar};
use orbitcat::monoid::{FiniteMonoid, MonoidElement, MonoidError, MonoidPresentation};
use orbitcat::presentation::{AlgebraPresentation, PresentationError};
use orbitcat::quiver::{Element, Path, Quiver};

use crate::syntax::{ActionClause, Atom, Document, Expr, FieldDecl, Word};

pub const DEFAULT_BOUND: usize = 10;
/// Largest monoid enumerated before it is treated as infinite.
pub const MONOID_CAP: usize = 512;

#[derive(Clone, Debug, thiserror::Error)]
pub enum ResolveError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate label `{0}`")]
    Duplicate(String),
    #[error("no field given; use `field Q`, `field GF(p)` or --field")]
    NoField,
    #[error("`{0}` is not prime")]
    NotPrime(u64),
    #[error("bad scalar `{0}`")]
    Scalar(String),
    #[error("`{0}` is not a sum of paths with common endpoints")]
    NotUniform(String),
    #[error("`{0}`: a bare scalar needs a single vertex to live at; write c*e_v")]
    LooseScalar(String),
    #[error("monoid: {0}")]
    Monoid(#[from] MonoidError),
    #[error("algebra: {0}")]
    Presentation(#[from] PresentationError),
    #[error("action: {0}")]
    Action(#[from] ActionError),
}

/// An element up to a multiple of the global identity `sum_v e_v`.
struct Value {
    paths: Element,
    constant: Scalar,
}

fn eval(q: &Quiver, k: Field, e: &Expr) -> Result<Value, ResolveError> {
    let mut acc = Value { paths: Element::zero(k), constant: k.zero() };
    for t in &e.terms {
        let c = match &t.coeff {
            None => k.one(),
            Some(c) => {
                let text = match &c.den {
                    Some(d) => format!("{}/{d}", c.num),
                    None => c.num.clone(),
                };
                k.parse(&text).map_err(|_| ResolveError::Scalar(text))?
            }
        };
        let c = if t.negative { -c } else { c };
        let mut v = Value { paths: Element::zero(k), constant: c };
        for f in &t.factors {
            let base = match &f.atom {
                Atom::Label(l) => Value { paths: label_element(q, k, l)?, constant: k.zero() },
                Atom::Group(g) => eval(q, k, g)?,
            };
            for _ in 0..f.power {
                v = mul(&v, &base);
            }
        }
        acc.paths = acc.paths.add(&v.paths);
        acc.constant += &v.constant;
    }
    Ok(acc)
}

fn label_element(q: &Quiver, k: Field, l: &str) -> Result<Element, ResolveError> {
    if let Some(a) = q.arrow_index(l) {
        return Ok(Element::path(k, q.arrow_path(a)));
    }
    if let Some(v) = l.strip_prefix("e_").and_then(|v| q.vertex_index(v)) {
        return Ok(Element::path(k, Path::trivial(v)));
    }
    Err(ResolveError::UnknownArrow(l.into()))
}

/// `(E1 + c1)(E2 + c2)`, read right to left.
fn mul(a: &Value, b: &Value) -> Value {
    Value {
        paths: a.paths.compose(&b.paths).add(&a.paths.scale(&b.constant)).add(&b.paths.scale(&a.constant)),
        constant: &a.constant * &b.constant,
    }
}

/// Resolves an expression over `q`; a leftover scalar sits at the one vertex all terms are loops at.
pub fn resolve_expr(q: &Quiver, k: Field, e: &Expr) -> Result<Element, ResolveError> {
    let v = eval(q, k, e)?;
    let shown = || e.to_string();
    if v.constant.is_zero() {
        return Ok(v.paths);
    }
    let at = if v.paths.is_zero() {
        (q.num_vertices() == 1).then_some(0)
    } else {
        match v.paths.endpoints() {
            Some((s, t)) if s == t => Some(s),
            _ => None,
        }
    };
    let at = at.ok_or_else(|| ResolveError::LooseScalar(shown()))?;
    Ok(v.paths.add(&Element::term(v.constant, Path::trivial(at))))
}

fn uniform(q: &Quiver, k: Field, e: &Expr) -> Result<Element, ResolveError> {
    let el = resolve_expr(q, k, e)?;
    if !el.is_zero() && el.endpoints().is_none() {
        return Err(ResolveError::NotUniform(e.to_string()));
    }
    Ok(el)
}

fn word(m: &[String], w: &Word) -> Result<MonoidElement, ResolveError> {
    match w {
        Word::One => Ok(MonoidElement::identity()),
        Word::Zero => Ok(MonoidElement::Zero),
        Word::Letters(ls) => {
            let mut out = Vec::new();
            for (g, p) in ls {
                let i = m.iter().position(|h| h == g).ok_or_else(|| ResolveError::UnknownGenerator(g.clone()))?;
                out.extend(std::iter::repeat_n(i, *p as usize));
            }
            Ok(MonoidElement::Word(out))
        }
    }
}

pub fn field_of(decl: FieldDecl) -> Result<Field, ResolveError> {
    match decl {
        FieldDecl::Rationals => Ok(Field::Rationals),
        FieldDecl::Prime(p) => Field::prime(p).map_err(|_| ResolveError::NotPrime(p)),
    }
}

#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub field: Option<FieldDecl>,
    pub bound: Option<usize>,
    pub seed: Option<u64>,
    pub substitutions: Vec<(String, Expr)>,
}

#[derive(Clone, Debug)]
pub struct Resolved {
    pub field: Field,
    pub action: MonoidAction,
    /// `Err` when the monoid is infinite or too large to enumerate.
    pub monoid: Result<FiniteMonoid, MonoidError>,
    pub bound: usize,
    pub seed: u64,
    pub substitutions: Vec<(String, Expr)>,
}

pub fn build_quiver(d: &Document) -> Result<Quiver, ResolveError> {
    let mut q = Quiver::new();
    for v in &d.vertices {
        q.add_vertex(v).map_err(|_| ResolveError::Duplicate(v.clone()))?;
    }
    for a in &d.arrows {
        let t = q.vertex_index(&a.tail).ok_or_else(|| ResolveError::UnknownVertex(a.tail.clone()))?;
        let h = q.vertex_index(&a.head).ok_or_else(|| ResolveError::UnknownVertex(a.head.clone()))?;
        q.add_arrow(&a.label, t, h).map_err(|_| ResolveError::Duplicate(a.label.clone()))?;
    }
    Ok(q)
}

pub fn resolve(d: &Document, o: &Overrides) -> Result<Resolved, ResolveError> {
    let field = field_of(o.field.or(d.field).ok_or(ResolveError::NoField)?)?;
    let bound = o.bound.or(d.options.bound).unwrap_or(DEFAULT_BOUND);
    let seed = o.seed.or(d.options.seed).unwrap_or(0);
    let q = build_quiver(d)?;
    let mut rels = Vec::new();
    for (l, r) in &d.relations {
        let e = uniform(&q, field, l)?.sub(&uniform(&q, field, r)?);
        if !e.is_zero() && e.endpoints().is_none() {
            return Err(ResolveError::NotUniform(format!("{l} = {r}")));
        }
        rels.push(e);
    }
    let alg = AlgebraPresentation::new(field, q.clone(), rels, bound)?;
    let gens = &d.monoid.gens;
    let mut mrels = Vec::new();
    for (l, r) in &d.monoid.rels {
        mrels.push((word(gens, l)?, word(gens, r)?));
    }
    let mp = MonoidPresentation::new(gens.clone(), mrels, d.monoid.zero)?;
    let mut vmaps: Vec<Vec<Option<usize>>> = gens.iter().map(|_| (0..q.num_vertices()).map(Some).collect()).collect();
    let mut amaps: Vec<Vec<Element>> = gens
        .iter()
        .map(|_| (0..q.num_arrows()).map(|a| Element::path(field, q.arrow_path(a))).collect())
        .collect();
    let gen_index = |g: &String| gens.iter().position(|h| h == g).ok_or_else(|| ResolveError::UnknownGenerator(g.clone()));
    for c in &d.action {
        match c {
            ActionClause::Vertices(g, items) => {
                let gi = gen_index(g)?;
                for (v, w) in items {
                    let vi = q.vertex_index(v).ok_or_else(|| ResolveError::UnknownVertex(v.clone()))?;
                    vmaps[gi][vi] = match w {
                        None => None,
                        Some(w) => Some(q.vertex_index(w).ok_or_else(|| ResolveError::UnknownVertex(w.clone()))?),
                    };
                }
            }
            ActionClause::Arrows(g, items) => {
                let gi = gen_index(g)?;
                for (a, e) in items {
                    let ai = q.arrow_index(a).ok_or_else(|| ResolveError::UnknownArrow(a.clone()))?;
                    amaps[gi][ai] = uniform(&q, field, e)?;
                }
            }
        }
    }
    // arrows at a vertex sent to 0 default to 0
    for (gi, vm) in vmaps.iter().enumerate() {
        for (ai, ar) in q.arrows().iter().enumerate() {
            if vm[ar.tail].is_none() || vm[ar.head].is_none() {
                amaps[gi][ai] = Element::zero(field);
            }
        }
    }
    let monoid = FiniteMonoid::from_presentation(&mp, 2 * bound + 4, MONOID_CAP);
    let action = MonoidAction::new(alg, mp, vmaps, amaps)?;
    action.validate(monoid.as_ref().ok())?;
    let mut substitutions = d.options.substitutions.clone();
    substitutions.extend(o.substitutions.iter().cloned());
    Ok(Resolved { field, action, monoid, bound, seed, substitutions })
}
