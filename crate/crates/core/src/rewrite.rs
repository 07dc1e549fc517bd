//! Bounded completion of path-algebra relations into a rewriting system.
//!
//! Leading terms are taken in the length-first order on [`Path`]. Relations are not
//! required to be admissible: `y*y - y` or `x*x - e_1` are fine.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::field::Field;
use crate::quiver::{Element, Path};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lead: Path,
    pub tail: Element,
}

impl Rule {
    /// The monic relation `lead - tail`.
    pub fn element(&self) -> Element {
        Element::path(self.tail.field(), self.lead.clone()).sub(&self.tail)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Completion {
    Confluent,
    /// Overlaps longer than `bound` were left unresolved.
    Truncated { bound: usize },
}

#[derive(Clone, Debug, thiserror::Error)]
pub enum RewriteError {
    #[error("completion incomplete: overlaps longer than {bound} remain")]
    Incomplete { bound: usize, partial: Box<RewriteSystem> },
    #[error("reduction left the trusted range of a truncated system (bound {bound})")]
    BoundExceeded { bound: usize },
    #[error("relation {0} has a vertex idempotent as leading term")]
    Degenerate(String),
}

#[derive(Clone, Debug)]
pub struct RewriteSystem {
    field: Field,
    rules: Vec<Rule>,
    by_first: BTreeMap<usize, Vec<usize>>,
    status: Completion,
}

fn sub_path(w: &Path, from: usize, to: usize, src: usize, dst: usize) -> Path {
    Path {
        source: src,
        target: dst,
        arrows: w.arrows[from..to].to_vec(),
    }
}

impl RewriteSystem {
    pub fn empty(field: Field) -> Self {
        RewriteSystem {
            field,
            rules: Vec::new(),
            by_first: BTreeMap::new(),
            status: Completion::Confluent,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn status(&self) -> Completion {
        self.status
    }

    pub fn is_confluent(&self) -> bool {
        self.status == Completion::Confluent
    }

    fn reindex(&mut self) {
        self.by_first.clear();
        for (i, r) in self.rules.iter().enumerate() {
            self.by_first.entry(r.lead.arrows[0]).or_default().push(i);
        }
    }

    /// First rule occurrence in `w` as (rule index, start position).
    fn find(&self, w: &Path) -> Option<(usize, usize)> {
        for i in 0..w.arrows.len() {
            if let Some(cands) = self.by_first.get(&w.arrows[i]) {
                for &r in cands {
                    let u = &self.rules[r].lead.arrows;
                    if w.arrows.len() - i >= u.len() && w.arrows[i..i + u.len()] == u[..] {
                        return Some((r, i));
                    }
                }
            }
        }
        None
    }

    /// True when some rule lead ends exactly at the end of `w`.
    fn suffix_reducible(&self, w: &Path) -> bool {
        let n = w.arrows.len();
        self.rules.iter().any(|r| {
            let u = &r.lead.arrows;
            u.len() <= n && w.arrows[n - u.len()..] == u[..]
        })
    }

    pub fn is_irreducible(&self, w: &Path) -> bool {
        self.find(w).is_none()
    }

    fn rewrite_once(&self, w: &Path) -> Option<Element> {
        let (r, i) = self.find(w)?;
        let rule = &self.rules[r];
        let m = rule.lead.arrows.len();
        let pre = sub_path(w, 0, i, w.source, rule.lead.source);
        let post = sub_path(w, i + m, w.arrows.len(), rule.lead.target, w.target);
        Some(rule.tail.wrap(&pre, &post))
    }

    fn reduce_unchecked(&self, e: &Element) -> Element {
        let mut done = Element::zero(self.field);
        let mut todo = e.clone();
        while let Some((p, c)) = todo.leading().map(|(p, c)| (p.clone(), c.clone())) {
            todo.add_term(p.clone(), -&c);
            match self.rewrite_once(&p) {
                Some(t) => todo = todo.add(&t.scale(&c)),
                None => done.add_term(p, c),
            }
        }
        done
    }

    /// Normal form of `e`. On a truncated system paths longer than the bound are rejected.
    pub fn normal_form(&self, e: &Element) -> Result<Element, RewriteError> {
        if let Completion::Truncated { bound } = self.status {
            if e.max_len() > bound {
                return Err(RewriteError::BoundExceeded { bound });
            }
        }
        Ok(self.reduce_unchecked(e))
    }

    /// Normal form of `e`, trusting the system even beyond its bound.
    pub fn reduce(&self, e: &Element) -> Element {
        self.reduce_unchecked(e)
    }

    fn overlaps(&self, a: usize, b: usize, bound: usize, out: &mut Vec<Element>) -> bool {
        let ra = &self.rules[a];
        let rb = &self.rules[b];
        let u = &ra.lead.arrows;
        let v = &rb.lead.arrows;
        let mut skipped = false;
        for k in 1..u.len().min(v.len()) {
            if u[u.len() - k..] != v[..k] {
                continue;
            }
            if u.len() + v.len() - k > bound {
                skipped = true;
                continue;
            }
            let pre_len = u.len() - k;
            let w_arrows: Vec<usize> = u.iter().chain(&v[k..]).copied().collect();
            let w = Path {
                source: ra.lead.source,
                target: rb.lead.target,
                arrows: w_arrows,
            };
            let post = sub_path(&w, u.len(), w.arrows.len(), ra.lead.target, w.target);
            let pre = sub_path(&w, 0, pre_len, w.source, rb.lead.source);
            let s = ra.element().wrap(&Path::trivial(w.source), &post);
            let t = rb.element().wrap(&pre, &Path::trivial(w.target));
            out.push(s.sub(&t));
        }
        skipped
    }

    fn make_rule(&self, f: &Element) -> Result<Rule, RewriteError> {
        let (lead, c) = f.leading().map(|(p, c)| (p.clone(), c.clone())).unwrap();
        if lead.is_trivial() {
            return Err(RewriteError::Degenerate(alloc::format!("{f:?}")));
        }
        let monic = f.scale(&c.inv().unwrap());
        let tail = Element::path(self.field, lead.clone()).sub(&monic);
        Ok(Rule { lead, tail })
    }

    /// Completes `relations`, resolving overlaps up to total length `bound`.
    pub fn complete(field: Field, relations: &[Element], bound: usize) -> Result<Self, RewriteError> {
        let mut sys = RewriteSystem::empty(field);
        let mut queue: Vec<Element> = relations.iter().flat_map(|r| r.split_uniform()).collect();
        let mut truncated = false;
        loop {
            queue.retain(|e| !e.is_zero());
            if queue.is_empty() {
                break;
            }
            // smallest leading term first
            let (idx, _) = queue
                .iter()
                .enumerate()
                .min_by(|a, b| a.1.leading().unwrap().0.cmp(b.1.leading().unwrap().0))
                .unwrap();
            let f = queue.swap_remove(idx);
            let f = sys.reduce_unchecked(&f);
            if f.is_zero() {
                continue;
            }
            let rule = sys.make_rule(&f)?;
            let mut kept = Vec::new();
            for old in core::mem::take(&mut sys.rules) {
                let contains = old.lead.arrows.windows(rule.lead.arrows.len()).any(|w| w == &rule.lead.arrows[..]);
                if contains {
                    queue.push(old.element());
                } else {
                    kept.push(old);
                }
            }
            sys.rules = kept;
            sys.rules.push(rule);
            sys.reindex();
            let new = sys.rules.len() - 1;
            let mut pairs = Vec::new();
            for j in 0..sys.rules.len() {
                truncated |= sys.overlaps(new, j, bound, &mut pairs);
                if j != new {
                    truncated |= sys.overlaps(j, new, bound, &mut pairs);
                }
            }
            queue.extend(pairs);
        }
        for i in 0..sys.rules.len() {
            let t = sys.rules[i].tail.clone();
            sys.rules[i].tail = sys.reduce_unchecked(&t);
        }
        sys.rules.sort_by(|a, b| a.lead.cmp(&b.lead));
        sys.reindex();
        if truncated {
            sys.status = Completion::Truncated { bound };
            return Err(RewriteError::Incomplete {
                bound,
                partial: Box::new(sys),
            });
        }
        Ok(sys)
    }

    /// Like [`RewriteSystem::complete`] but keeps a truncated result.
    pub fn complete_lenient(field: Field, relations: &[Element], bound: usize) -> Result<Self, RewriteError> {
        match Self::complete(field, relations, bound) {
            Err(RewriteError::Incomplete { partial, .. }) => Ok(*partial),
            other => other,
        }
    }

    /// Re-checks every overlap of the final rules up to `bound`; true if all resolve.
    pub fn check_overlaps(&self, bound: usize) -> bool {
        let mut pairs = Vec::new();
        for i in 0..self.rules.len() {
            for j in 0..self.rules.len() {
                self.overlaps(i, j, bound, &mut pairs);
            }
        }
        pairs.iter().all(|s| self.reduce_unchecked(s).is_zero())
    }

    /// Irreducible paths by increasing length, starting from `starts`, up to length `max_len`.
    /// Returns the paths and whether some irreducible path of length `max_len` still extends.
    pub fn irreducible_paths(
        &self,
        starts: &[Path],
        next_arrows: &dyn Fn(usize) -> Vec<(usize, usize)>,
        max_len: usize,
    ) -> (Vec<Path>, bool) {
        let mut all: Vec<Path> = starts.to_vec();
        let mut layer: Vec<Path> = starts.to_vec();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for p in &layer {
                for (a, head) in next_arrows(p.target) {
                    let mut q = p.clone();
                    q.arrows.push(a);
                    q.target = head;
                    if !self.suffix_reducible(&q) {
                        next.push(q);
                    }
                }
            }
            all.extend(next.iter().cloned());
            layer = next;
            if layer.is_empty() {
                return (all, false);
            }
        }
        let extends = layer.iter().any(|p| {
            next_arrows(p.target).into_iter().any(|(a, head)| {
                let mut q = p.clone();
                q.arrows.push(a);
                q.target = head;
                !self.suffix_reducible(&q)
            })
        });
        (all, extends)
    }
}
