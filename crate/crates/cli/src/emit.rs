//! JSON and DOT emitters.

use std::fmt::Write as _;

use orbitcat::field::Field;
use orbitcat::monoid::{MonoidElement, MonoidPresentation};
use orbitcat::quiver::{Element, Path, Quiver};
use orbitcat::skew::{RelationFamily, SkewPresentation};
use serde::Serialize;

use crate::resolve::Resolved;

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FieldDto {
    Rationals,
    PrimeField { p: u64 },
}

impl From<Field> for FieldDto {
    fn from(k: Field) -> Self {
        match k {
            Field::Rationals => FieldDto::Rationals,
            Field::Prime(p) => FieldDto::PrimeField { p },
        }
    }
}

#[derive(Serialize)]
pub struct ArrowDto {
    pub label: String,
    pub tail: String,
    pub head: String,
}

#[derive(Serialize)]
pub struct QuiverDto {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDto>,
}

impl From<&Quiver> for QuiverDto {
    fn from(q: &Quiver) -> Self {
        QuiverDto {
            vertices: q.vertices().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| ArrowDto { label: a.label.clone(), tail: q.vertex(a.tail).into(), head: q.vertex(a.head).into() })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct PathDto {
    pub source: String,
    pub target: String,
    /// Traversal order, first arrow first.
    pub arrows: Vec<String>,
}

fn path_dto(q: &Quiver, p: &Path) -> PathDto {
    PathDto {
        source: q.vertex(p.source).into(),
        target: q.vertex(p.target).into(),
        arrows: p.arrows.iter().map(|&a| q.arrow(a).label.clone()).collect(),
    }
}

#[derive(Serialize)]
pub struct TermDto {
    pub path: PathDto,
    pub coeff: String,
}

#[derive(Serialize)]
pub struct ElementDto {
    pub text: String,
    pub terms: Vec<TermDto>,
}

fn element_dto(q: &Quiver, e: &Element) -> ElementDto {
    ElementDto {
        text: q.fmt_element(e),
        terms: e.terms().map(|(p, c)| TermDto { path: path_dto(q, p), coeff: c.to_string() }).collect(),
    }
}

#[derive(Serialize)]
pub struct AlgebraDto {
    pub field: FieldDto,
    pub quiver: QuiverDto,
    pub relations: Vec<ElementDto>,
}

#[derive(Serialize)]
pub struct MonoidDto {
    pub generators: Vec<String>,
    pub relations: Vec<[String; 2]>,
    pub has_zero: bool,
}

fn word(m: &MonoidPresentation, e: &MonoidElement) -> String {
    m.fmt(e)
}

#[derive(Serialize)]
pub struct GeneratorActionDto {
    pub generator: String,
    /// `None` for the zero object.
    pub vertices: Vec<(String, Option<String>)>,
    pub arrows: Vec<(String, ElementDto)>,
}

#[derive(Serialize)]
pub struct InputDto {
    pub algebra: AlgebraDto,
    pub monoid: MonoidDto,
    pub action: Vec<GeneratorActionDto>,
    pub monoid_order: Option<usize>,
    pub bound: usize,
    pub seed: u64,
}

#[derive(Serialize)]
pub struct TaggedRelationDto {
    pub family: &'static str,
    pub origin: Option<String>,
    pub lhs: ElementDto,
    pub rhs: ElementDto,
}

#[derive(Serialize)]
pub struct NewArrowDto {
    pub label: String,
    pub generator: String,
    pub vertex: String,
}

#[derive(Serialize)]
pub struct SkewDto {
    pub field: FieldDto,
    pub quiver: QuiverDto,
    pub relations: Vec<TaggedRelationDto>,
    pub new_arrows: Vec<NewArrowDto>,
    pub original_arrows: usize,
}

pub fn input_dto(r: &Resolved) -> InputDto {
    let a = &r.action.algebra;
    let q = &a.quiver;
    let m = &r.action.monoid;
    InputDto {
        algebra: AlgebraDto {
            field: r.field.into(),
            quiver: q.into(),
            relations: a.relations.iter().map(|e| element_dto(q, e)).collect(),
        },
        monoid: MonoidDto {
            generators: m.generators.clone(),
            relations: m.relations.iter().map(|(u, v)| [word(m, u), word(m, v)]).collect(),
            has_zero: m.has_zero,
        },
        action: m
            .generators
            .iter()
            .enumerate()
            .map(|(g, name)| GeneratorActionDto {
                generator: name.clone(),
                vertices: (0..q.num_vertices())
                    .map(|v| (q.vertex(v).to_string(), r.action.gen_vertex(g, v).map(|w| q.vertex(w).to_string())))
                    .collect(),
                arrows: q
                    .arrows()
                    .iter()
                    .enumerate()
                    .map(|(i, ar)| (ar.label.clone(), element_dto(q, &r.action.arrow_maps[g][i])))
                    .collect(),
            })
            .collect(),
        monoid_order: r.monoid.as_ref().ok().map(|g| g.len()),
        bound: r.bound,
        seed: r.seed,
    }
}

pub fn skew_dto(r: &Resolved, sp: &SkewPresentation) -> SkewDto {
    let q = &sp.quiver;
    let m = &r.action.monoid;
    let q0 = &r.action.algebra.quiver;
    SkewDto {
        field: r.field.into(),
        quiver: q.into(),
        relations: sp
            .relations
            .iter()
            .map(|t| TaggedRelationDto {
                family: match t.family {
                    RelationFamily::Original => "original",
                    RelationFamily::Commutation => "commutation",
                    RelationFamily::Monoid => "monoid",
                },
                origin: t.origin.map(|i| {
                    let (u, v) = &m.relations[i];
                    format!("{} = {}", m.fmt(u), m.fmt(v))
                }),
                lhs: element_dto(q, &t.lhs),
                rhs: element_dto(q, &t.rhs),
            })
            .collect(),
        new_arrows: sp
            .new_arrows
            .iter()
            .enumerate()
            .map(|(i, &(g, x))| NewArrowDto {
                label: q.arrow(sp.original_arrows + i).label.clone(),
                generator: m.generators[g].clone(),
                vertex: q0.vertex(x).into(),
            })
            .collect(),
        original_arrows: sp.original_arrows,
    }
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("DTOs serialize");
    s.push('\n');
    s
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Arrows from index `new_from` on are drawn dashed.
pub fn dot(q: &Quiver, name: &str, new_from: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", dot_id(name));
    for v in q.vertices() {
        let _ = writeln!(out, "  {};", dot_id(v));
    }
    for (i, a) in q.arrows().iter().enumerate() {
        let style = if i >= new_from { ", style=dashed" } else { "" };
        let _ = writeln!(out, "  {} -> {} [label={}{style}];", dot_id(q.vertex(a.tail)), dot_id(q.vertex(a.head)), dot_id(&a.label));
    }
    out.push_str("}\n");
    out
}
