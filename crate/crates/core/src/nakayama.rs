//! Self-injective algebras with radical cube zero and a prescribed Nakayama permutation.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::field::Field;
use crate::linalg::{Span, Vector};
use crate::presentation::{AlgebraPresentation, PresentationError};
use crate::quiver::{Element, Path, Quiver};

#[derive(Clone, Debug, thiserror::Error)]
pub enum NakayamaError {
    #[error("not a permutation of 1..{0}")]
    NotPermutation(usize),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

/// Cycles `x_{i1} -> x_{i2} = s(x_{i1}) -> ...`, 0-based, ordered by smallest element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub n: usize,
    pub cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn m(&self) -> usize {
        self.cycles.len()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }

    /// The permutation as an image table.
    pub fn images(&self) -> Vec<usize> {
        let mut s = vec![0; self.n];
        for c in &self.cycles {
            for (j, &x) in c.iter().enumerate() {
                s[x] = c[(j + 1) % c.len()];
            }
        }
        s
    }

    /// Position `(i, j)` of vertex `x`.
    pub fn position(&self, x: usize) -> (usize, usize) {
        for (i, c) in self.cycles.iter().enumerate() {
            if let Some(j) = c.iter().position(|&y| y == x) {
                return (i, j);
            }
        }
        unreachable!("cycles cover every vertex")
    }
}

impl core::fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for c in &self.cycles {
            let items: Vec<String> = c.iter().map(|x| format!("{}", x + 1)).collect();
            write!(f, "({})", items.join(" "))?;
        }
        Ok(())
    }
}

/// Decomposes `s` given as 0-based images `s[x]`.
pub fn decompose(s: &[usize]) -> Result<CycleDecomposition, NakayamaError> {
    let n = s.len();
    let mut seen = vec![false; n];
    for &y in s {
        if y >= n || seen[y] {
            return Err(NakayamaError::NotPermutation(n));
        }
        seen[y] = true;
    }
    let mut done = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if done[start] {
            continue;
        }
        let mut c = Vec::new();
        let mut x = start;
        while !done[x] {
            done[x] = true;
            c.push(x);
            x = s[x];
        }
        cycles.push(c);
    }
    Ok(CycleDecomposition { n, cycles })
}

/// Builds the permutation from 1-based cycles; unlisted points are fixed.
pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<CycleDecomposition, NakayamaError> {
    let mut s: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    for c in cycles {
        for (j, &x) in c.iter().enumerate() {
            if x == 0 || x > n || used[x - 1] {
                return Err(NakayamaError::NotPermutation(n));
            }
            used[x - 1] = true;
            s[x - 1] = c[(j + 1) % c.len()] - 1;
        }
    }
    decompose(&s)
}

#[derive(Clone, Debug)]
pub struct NakayamaOutput {
    pub cycles: CycleDecomposition,
    pub presentation: AlgebraPresentation,
    /// Set when the single-cycle substitute quiver is used.
    pub substitute: bool,
    /// Length-3 paths that the two relation families leave nonzero, added as zero relations.
    pub extra_zero_relations: Vec<Element>,
    pub notes: Vec<String>,
}

const BOUND: usize = 8;

/// The quiver with arrows `a_i_j_l: x_ij -> x_{i+1,l}` and `b_i_j_l: x_{i+1,l} -> x_ij` and its
/// relations: a length-2 path from `x` is zero unless it ends at `s(x)`, and all those that do are equal.
pub fn build_algebra(cycles: &CycleDecomposition, field: Field) -> Result<NakayamaOutput, NakayamaError> {
    let n = cycles.n;
    let s = cycles.images();
    let mut q = Quiver::new();
    for x in 0..n {
        q.add_vertex(&format!("{}", x + 1)).expect("distinct vertex labels");
    }
    let mut notes = Vec::new();
    let substitute = cycles.m() == 1 && n > 1;
    if substitute {
        for (j, &x) in cycles.cycles[0].iter().enumerate() {
            q.add_arrow(&format!("c_{}", j + 1), x, s[x]).unwrap();
        }
        notes.push(String::from(
            "single cycle: cyclic quiver with all paths of length 2 zero used in place of the arrowless quiver",
        ));
    } else {
        for i in 0..cycles.m().saturating_sub(1) {
            for (j, &x) in cycles.cycles[i].iter().enumerate() {
                for (l, &y) in cycles.cycles[i + 1].iter().enumerate() {
                    q.add_arrow(&format!("a_{}_{}_{}", i + 1, j + 1, l + 1), x, y).unwrap();
                    q.add_arrow(&format!("b_{}_{}_{}", i + 1, j + 1, l + 1), y, x).unwrap();
                }
            }
        }
    }
    let mut rels = Vec::new();
    for x in 0..n {
        let mut to_sx: Vec<Path> = Vec::new();
        for (a, ar) in q.arrows().iter().enumerate() {
            if ar.tail != x {
                continue;
            }
            for (b, br) in q.arrows().iter().enumerate() {
                if br.tail != ar.head {
                    continue;
                }
                let p = q.path_of(&[a, b]).unwrap();
                if br.head == s[x] && !substitute {
                    to_sx.push(p);
                } else {
                    rels.push(Element::path(field, p));
                }
            }
        }
        for p in to_sx.iter().skip(1) {
            rels.push(Element::path(field, to_sx[0].clone()).sub(&Element::path(field, p.clone())));
        }
    }
    let base = AlgebraPresentation::new(field, q.clone(), rels.clone(), BOUND)?;
    let mut extra = Vec::new();
    for p in length_three_paths(&q) {
        let e = base.reduce(&Element::path(field, p));
        if !e.is_zero() && !extra.contains(&e) {
            extra.push(e);
        }
    }
    if !extra.is_empty() {
        notes.push(format!("{} length-3 zero relations added", extra.len()));
        rels.extend(extra.iter().cloned());
    }
    let presentation = AlgebraPresentation::new(field, q, rels, BOUND)?;
    Ok(NakayamaOutput {
        cycles: cycles.clone(),
        presentation,
        substitute,
        extra_zero_relations: extra,
        notes,
    })
}

fn length_three_paths(q: &Quiver) -> Vec<Path> {
    let mut out = Vec::new();
    for a in 0..q.num_arrows() {
        for b in 0..q.num_arrows() {
            for c in 0..q.num_arrows() {
                if let Some(p) = q.path_of(&[a, b, c]) {
                    out.push(p);
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfInjectiveReport {
    pub rad_cube_zero: bool,
    pub socle_dims: Vec<usize>,
    /// Vertex of the simple socle of `P(x)`.
    pub permutation: Vec<Option<usize>>,
    pub self_injective: bool,
    /// Loewy layers of each `P(x) = A e_x` as vertex multisets.
    pub layers: Vec<Vec<Vec<usize>>>,
}

impl SelfInjectiveReport {
    pub fn fmt_projectives(&self, q: &Quiver) -> Vec<String> {
        self.layers
            .iter()
            .enumerate()
            .map(|(x, ls)| {
                let parts: Vec<String> = ls
                    .iter()
                    .map(|l| l.iter().map(|&v| q.vertex(v)).collect::<Vec<_>>().join(" "))
                    .collect();
                format!("P({}): {}", q.vertex(x), parts.join(" | "))
            })
            .collect()
    }
}

/// Projectives `P(x)` spanned by basis paths starting at `x`, acted on by left multiplication.
pub fn verify_selfinjective(a: &AlgebraPresentation, max_len: usize) -> Result<SelfInjectiveReport, NakayamaError> {
    let k = a.field;
    let q = &a.quiver;
    let n = q.num_vertices();
    let basis = a.basis(max_len)?;
    let rad_cube_zero = length_three_paths(q).into_iter().all(|p| a.reduce(&Element::path(k, p)).is_zero());
    let mut socle_dims = Vec::with_capacity(n);
    let mut permutation = Vec::with_capacity(n);
    let mut layers = Vec::with_capacity(n);
    for x in 0..n {
        let paths: Vec<&Path> = basis.iter().filter(|p| p.source == x).collect();
        let index: BTreeMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (*p, i)).collect();
        let d = paths.len();
        let coords = |e: &Element| -> Vector {
            let mut v = crate::linalg::zero_vec(k, d);
            for (p, c) in e.terms() {
                v[index[p]] = c.clone();
            }
            v
        };
        let to_element = |v: &[crate::field::Scalar]| -> Element {
            let mut e = Element::zero(k);
            for (p, c) in paths.iter().zip(v) {
                e.add_term((*p).clone(), c.clone());
            }
            e
        };
        let act = |arrow: usize, v: &[crate::field::Scalar]| -> Vector {
            coords(&a.reduce(&to_element(v).then(&a.arrow(arrow))))
        };
        // socle: common kernel of all arrows
        let mut rows: Vec<Vec<crate::field::Scalar>> = Vec::new();
        for ar in 0..q.num_arrows() {
            let cols: Vec<Vector> = (0..d).map(|i| act(ar, &crate::linalg::unit_vec(k, d, i))).collect();
            let m = crate::linalg::Matrix::from_cols(k, d, &cols);
            for r in 0..d {
                rows.push(m.row(r));
            }
        }
        let soc = if rows.is_empty() {
            (0..d).map(|i| crate::linalg::unit_vec(k, d, i)).collect()
        } else {
            crate::linalg::Matrix::from_rows(k, d, &rows).nullspace()
        };
        socle_dims.push(soc.len());
        let target = if soc.len() == 1 {
            let tg: Vec<usize> = paths.iter().zip(&soc[0]).filter(|(_, c)| !c.is_zero()).map(|(p, _)| p.target).collect();
            if tg.iter().all(|&t| t == tg[0]) {
                Some(tg[0])
            } else {
                None
            }
        } else {
            None
        };
        permutation.push(target);
        // Loewy layers rad^i P / rad^{i+1} P
        let mut filt: Vec<Span> = vec![Span::from_vectors(k, d, &(0..d).map(|i| crate::linalg::unit_vec(k, d, i)).collect::<Vec<_>>())];
        loop {
            let last = filt.last().unwrap();
            if last.rank() == 0 {
                break;
            }
            let mut next = Span::new(k, d);
            for v in last.basis().to_vec() {
                for ar in 0..q.num_arrows() {
                    next.insert(&act(ar, &v));
                }
            }
            filt.push(next);
        }
        let mut ls = Vec::new();
        for w in filt.windows(2) {
            let mut layer = Vec::new();
            for y in 0..n {
                let proj = |sp: &Span| -> usize {
                    let vs: Vec<Vector> = sp
                        .basis()
                        .iter()
                        .map(|v| paths.iter().zip(v).map(|(p, c)| if p.target == y { c.clone() } else { k.zero() }).collect())
                        .collect();
                    Span::from_vectors(k, d, &vs).rank()
                };
                for _ in 0..proj(&w[0]) - proj(&w[1]) {
                    layer.push(y);
                }
            }
            ls.push(layer);
        }
        layers.push(ls);
    }
    let mut hit = vec![false; n];
    let mut bijective = true;
    for t in permutation.iter() {
        match t {
            Some(t) if !hit[*t] => hit[*t] = true,
            _ => bijective = false,
        }
    }
    Ok(SelfInjectiveReport {
        rad_cube_zero,
        self_injective: bijective && socle_dims.iter().all(|&d| d == 1),
        socle_dims,
        permutation,
        layers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_permutation() {
        let c = from_cycles(4, &[vec![3, 4]]).unwrap();
        assert_eq!(c.lengths(), vec![1, 1, 2]);
        assert_eq!(format!("{c}"), "(1)(2)(3 4)");
        let out = build_algebra(&c, Field::Rationals).unwrap();
        assert_eq!(out.presentation.quiver.num_arrows(), 6);
        let r = verify_selfinjective(&out.presentation, 6).unwrap();
        assert!(r.rad_cube_zero && r.self_injective);
        assert_eq!(r.permutation, vec![Some(0), Some(1), Some(3), Some(2)]);
        let shown = r.fmt_projectives(&out.presentation.quiver);
        assert_eq!(shown[1], "P(2): 2 | 1 3 4 | 2");
        assert_eq!(shown[2], "P(3): 3 | 2 | 4");
    }

    #[test]
    fn single_point() {
        let c = decompose(&[0]).unwrap();
        let out = build_algebra(&c, Field::Rationals).unwrap();
        assert_eq!(out.presentation.dim(4).unwrap(), 1);
        let r = verify_selfinjective(&out.presentation, 4).unwrap();
        assert!(r.self_injective);
        assert_eq!(r.permutation, vec![Some(0)]);
    }

    #[test]
    fn rejects_non_permutation() {
        assert!(matches!(decompose(&[0, 0]), Err(NakayamaError::NotPermutation(2))));
    }
}
