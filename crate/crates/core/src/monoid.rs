//! Finitely presented monoids, possibly with a zero, and their word problem.
//!
//! Words are written left to right in composition order: `[g2, g1]` is `g2*g1`,
//! acting by `g1` first.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

pub type Word = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonoidElement {
    Zero,
    Word(Word),
}

impl MonoidElement {
    pub fn identity() -> Self {
        MonoidElement::Word(Word::new())
    }

    pub fn generator(g: usize) -> Self {
        MonoidElement::Word(alloc::vec![g])
    }

    pub fn product(&self, o: &Self) -> Self {
        match (self, o) {
            (MonoidElement::Word(a), MonoidElement::Word(b)) => {
                let mut w = a.clone();
                w.extend_from_slice(b);
                MonoidElement::Word(w)
            }
            _ => MonoidElement::Zero,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MonoidError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("a relation uses 0 but the monoid has no zero")]
    ZeroNotAllowed,
    #[error("completion incomplete: rules longer than {0} needed")]
    Incomplete(usize),
    #[error("monoid has more than {0} elements")]
    TooLarge(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidPresentation {
    pub generators: Vec<String>,
    pub relations: Vec<(MonoidElement, MonoidElement)>,
    pub has_zero: bool,
}

impl MonoidPresentation {
    pub fn new(generators: Vec<String>, relations: Vec<(MonoidElement, MonoidElement)>, has_zero: bool) -> Result<Self, MonoidError> {
        for (u, v) in &relations {
            for w in [u, v] {
                match w {
                    MonoidElement::Zero if !has_zero => return Err(MonoidError::ZeroNotAllowed),
                    MonoidElement::Word(w) => {
                        if let Some(g) = w.iter().find(|&&g| g >= generators.len()) {
                            return Err(MonoidError::UnknownGenerator(alloc::format!("#{g}")));
                        }
                    }
                    _ => {}
                }
            }
        }
        Ok(MonoidPresentation {
            generators,
            relations,
            has_zero,
        })
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn fmt(&self, e: &MonoidElement) -> String {
        match e {
            MonoidElement::Zero => String::from("0"),
            MonoidElement::Word(w) if w.is_empty() => String::from("1"),
            MonoidElement::Word(w) => {
                let names: Vec<&str> = w.iter().map(|&g| self.generators[g].as_str()).collect();
                names.join("*")
            }
        }
    }
}

fn shortlex(a: &[usize], b: &[usize]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

fn find_sub(w: &[usize], u: &[usize]) -> Option<usize> {
    if u.len() > w.len() {
        return None;
    }
    (0..=w.len() - u.len()).find(|&i| w[i..i + u.len()] == *u)
}

/// Shortlex-oriented string rewriting; `None` right-hand sides mean zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StringRewriteSystem {
    pub rules: Vec<(Word, Option<Word>)>,
}

impl StringRewriteSystem {
    pub fn reduce(&self, e: &MonoidElement) -> MonoidElement {
        let MonoidElement::Word(w) = e else {
            return MonoidElement::Zero;
        };
        let mut w = w.clone();
        'outer: loop {
            for (l, r) in &self.rules {
                if let Some(i) = find_sub(&w, l) {
                    let Some(r) = r else {
                        return MonoidElement::Zero;
                    };
                    let mut n = w[..i].to_vec();
                    n.extend_from_slice(r);
                    n.extend_from_slice(&w[i + l.len()..]);
                    w = n;
                    continue 'outer;
                }
            }
            return MonoidElement::Word(w);
        }
    }

    fn orient(&self, a: MonoidElement, b: MonoidElement) -> Option<(Word, Option<Word>)> {
        let a = self.reduce(&a);
        let b = self.reduce(&b);
        match (a, b) {
            (MonoidElement::Zero, MonoidElement::Zero) => None,
            (MonoidElement::Word(w), MonoidElement::Zero) | (MonoidElement::Zero, MonoidElement::Word(w)) => Some((w, None)),
            (MonoidElement::Word(u), MonoidElement::Word(v)) => match shortlex(&u, &v) {
                Ordering::Equal => None,
                Ordering::Greater => Some((u, Some(v))),
                Ordering::Less => Some((v, Some(u))),
            },
        }
    }

    fn critical(&self, i: usize, j: usize, bound: usize, out: &mut Vec<(MonoidElement, MonoidElement)>) -> bool {
        let (u, ru) = &self.rules[i];
        let (v, rv) = &self.rules[j];
        let as_el = |w: &Option<Word>| match w {
            Some(w) => MonoidElement::Word(w.clone()),
            None => MonoidElement::Zero,
        };
        let mut skipped = false;
        for k in 1..u.len().min(v.len()) {
            if u[u.len() - k..] != v[..k] {
                continue;
            }
            if u.len() + v.len() - k > bound {
                skipped = true;
                continue;
            }
            let left = as_el(ru).product(&MonoidElement::Word(v[k..].to_vec()));
            let right = MonoidElement::Word(u[..u.len() - k].to_vec()).product(&as_el(rv));
            out.push((left, right));
        }
        skipped
    }

    /// Knuth-Bendix completion with overlaps limited to length `bound`.
    pub fn complete(m: &MonoidPresentation, bound: usize) -> Result<Self, MonoidError> {
        let mut sys = StringRewriteSystem { rules: Vec::new() };
        let mut queue: Vec<(MonoidElement, MonoidElement)> = m.relations.clone();
        while let Some((a, b)) = queue.pop() {
            let Some((l, r)) = sys.orient(a, b) else {
                continue;
            };
            let mut kept = Vec::new();
            for (ol, or) in core::mem::take(&mut sys.rules) {
                if find_sub(&ol, &l).is_some() {
                    queue.push((MonoidElement::Word(ol), or.map_or(MonoidElement::Zero, MonoidElement::Word)));
                } else {
                    kept.push((ol, or));
                }
            }
            sys.rules = kept;
            sys.rules.push((l, r));
            let n = sys.rules.len() - 1;
            for j in 0..sys.rules.len() {
                sys.critical(n, j, bound, &mut queue);
                if j != n {
                    sys.critical(j, n, bound, &mut queue);
                }
            }
        }
        for i in 0..sys.rules.len() {
            if let Some(r) = sys.rules[i].1.clone() {
                let others = StringRewriteSystem {
                    rules: sys.rules.clone(),
                };
                sys.rules[i].1 = match others.reduce(&MonoidElement::Word(r)) {
                    MonoidElement::Word(w) => Some(w),
                    MonoidElement::Zero => None,
                };
            }
        }
        sys.rules.sort_by(|a, b| shortlex(&a.0, &b.0));
        // overlaps skipped above may still resolve; test every one in the final system
        let mut pairs = Vec::new();
        for i in 0..sys.rules.len() {
            for j in 0..sys.rules.len() {
                sys.critical(i, j, usize::MAX, &mut pairs);
            }
        }
        if pairs.iter().any(|(a, b)| sys.reduce(a) != sys.reduce(b)) {
            return Err(MonoidError::Incomplete(bound));
        }
        Ok(sys)
    }
}

/// A finite monoid with its multiplication table; `table[a][b]` is `a*b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMonoid {
    pub presentation: MonoidPresentation,
    pub elements: Vec<MonoidElement>,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub zero: Option<usize>,
    pub generators: Vec<usize>,
}

impl FiniteMonoid {
    /// Enumerates normal forms breadth first, failing beyond `max` elements.
    pub fn enumerate(m: &MonoidPresentation, sys: &StringRewriteSystem, max: usize) -> Result<Self, MonoidError> {
        let mut index: BTreeMap<MonoidElement, usize> = BTreeMap::new();
        let mut elements = Vec::new();
        let mut push = |e: MonoidElement, elements: &mut Vec<MonoidElement>| -> Result<bool, MonoidError> {
            if index.contains_key(&e) {
                return Ok(false);
            }
            if elements.len() == max {
                return Err(MonoidError::TooLarge(max));
            }
            index.insert(e.clone(), elements.len());
            elements.push(e);
            Ok(true)
        };
        push(sys.reduce(&MonoidElement::identity()), &mut elements)?;
        let mut frontier = 0;
        while frontier < elements.len() {
            let e = elements[frontier].clone();
            frontier += 1;
            for g in 0..m.generators.len() {
                push(sys.reduce(&e.product(&MonoidElement::generator(g))), &mut elements)?;
            }
        }
        let pos = |e: &MonoidElement| elements.iter().position(|x| x == e).unwrap();
        let table: Vec<Vec<usize>> = elements
            .iter()
            .map(|a| elements.iter().map(|b| pos(&sys.reduce(&a.product(b)))).collect())
            .collect();
        let identity = pos(&sys.reduce(&MonoidElement::identity()));
        let zero = elements.iter().position(|e| *e == MonoidElement::Zero);
        let generators = (0..m.generators.len())
            .map(|g| pos(&sys.reduce(&MonoidElement::generator(g))))
            .collect();
        Ok(FiniteMonoid {
            presentation: m.clone(),
            elements,
            table,
            identity,
            zero,
            generators,
        })
    }

    /// Completes and enumerates in one go.
    pub fn from_presentation(m: &MonoidPresentation, bound: usize, max: usize) -> Result<Self, MonoidError> {
        let sys = StringRewriteSystem::complete(m, bound)?;
        Self::enumerate(m, &sys, max)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        (0..self.len()).find(|&b| self.mul(a, b) == self.identity && self.mul(b, a) == self.identity)
    }

    pub fn is_group(&self) -> bool {
        (0..self.len()).all(|a| self.inverse(a).is_some())
    }

    pub fn index_of(&self, e: &MonoidElement) -> Option<usize> {
        self.elements.iter().position(|x| x == e)
    }

    pub fn name(&self, a: usize) -> String {
        self.presentation.fmt(&self.elements[a])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn w(v: &[usize]) -> MonoidElement {
        MonoidElement::Word(v.to_vec())
    }

    #[test]
    fn symmetric_group_s3() {
        // s^2 = t^2 = 1, sts = tst
        let m = MonoidPresentation::new(
            vec!["s".into(), "t".into()],
            vec![(w(&[0, 0]), w(&[])), (w(&[1, 1]), w(&[])), (w(&[0, 1, 0]), w(&[1, 0, 1]))],
            false,
        )
        .unwrap();
        let g = FiniteMonoid::from_presentation(&m, 10, 100).unwrap();
        assert_eq!(g.len(), 6);
        assert!(g.is_group());
    }

    #[test]
    fn monoid_with_zero() {
        // a^3 = 0
        let m = MonoidPresentation::new(vec!["a".into()], vec![(w(&[0, 0, 0]), MonoidElement::Zero)], true).unwrap();
        let g = FiniteMonoid::from_presentation(&m, 8, 100).unwrap();
        assert_eq!(g.len(), 4);
        assert!(g.zero.is_some());
        assert!(!g.is_group());
    }

    #[test]
    fn idempotent_generator() {
        let m = MonoidPresentation::new(vec!["a".into()], vec![(w(&[0, 0]), w(&[0]))], false).unwrap();
        let g = FiniteMonoid::from_presentation(&m, 8, 10).unwrap();
        assert_eq!(g.len(), 2);
        let a = g.generators[0];
        assert_eq!(g.mul(a, a), a);
    }

    #[test]
    fn free_monoid_is_too_large() {
        let m = MonoidPresentation::new(vec!["a".into()], vec![], false).unwrap();
        assert_eq!(FiniteMonoid::from_presentation(&m, 8, 5), Err(MonoidError::TooLarge(5)));
    }
}
