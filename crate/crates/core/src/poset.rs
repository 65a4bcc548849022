//! Finite posets stored as bitmask rows, and the cone operators `L` and `U`.

use std::fmt;

use crate::error::{Error, Result};
use crate::set::{self, ElemSet, MAX_ELEMENTS};

/// Read access to a (not necessarily antisymmetric) relation `≤` on `0..size`.
///
/// All cone operators are provided methods so the same code serves validated
/// posets and the relations derived from abstract operator tables.
pub trait Order {
    fn size(&self) -> usize;
    /// `{y | x ≤ y}`
    fn up_set(&self, x: usize) -> ElemSet;
    /// `{y | y ≤ x}`
    fn down_set(&self, x: usize) -> ElemSet;

    fn carrier(&self) -> ElemSet {
        ElemSet::full(self.size())
    }

    fn leq(&self, x: usize, y: usize) -> bool {
        self.up_set(x).contains(y)
    }

    /// `L(A)`; the empty set has the whole carrier as lower cone.
    fn lower_cone(&self, a: ElemSet) -> ElemSet {
        a.iter().fold(self.carrier(), |acc, x| acc & self.down_set(x))
    }

    /// `U(A)`; the empty set has the whole carrier as upper cone.
    fn upper_cone(&self, a: ElemSet) -> ElemSet {
        a.iter().fold(self.carrier(), |acc, x| acc & self.up_set(x))
    }

    /// `Max A`
    fn maximal(&self, a: ElemSet) -> ElemSet {
        a.iter()
            .filter(|&x| (self.up_set(x) & a) == ElemSet::singleton(x))
            .collect()
    }

    /// `Min A`
    fn minimal(&self, a: ElemSet) -> ElemSet {
        a.iter()
            .filter(|&x| (self.down_set(x) & a) == ElemSet::singleton(x))
            .collect()
    }

    /// `A ≤ B`: every member of `A` is below every member of `B`.
    fn set_leq(&self, a: ElemSet, b: ElemSet) -> bool {
        a.iter().all(|x| b.is_subset(self.up_set(x)))
    }

    /// `Max L(A, B)`, the maximal common lower bounds of `A ∪ B`.
    fn max_l(&self, a: ElemSet, b: ElemSet) -> ElemSet {
        self.maximal(self.lower_cone(a | b))
    }

    /// `Min U(A, B)`, the minimal common upper bounds of `A ∪ B`.
    fn min_u(&self, a: ElemSet, b: ElemSet) -> ElemSet {
        self.minimal(self.upper_cone(a | b))
    }
}

/// A relation given by its up-rows; no order axioms are assumed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    up: Vec<ElemSet>,
    down: Vec<ElemSet>,
}

impl Relation {
    pub fn from_fn(n: usize, leq: impl Fn(usize, usize) -> bool) -> Self {
        assert!(n <= MAX_ELEMENTS);
        let up: Vec<ElemSet> = (0..n).map(|x| (0..n).filter(|&y| leq(x, y)).collect()).collect();
        Relation::from_up_rows(up)
    }

    pub fn from_up_rows(up: Vec<ElemSet>) -> Self {
        let n = up.len();
        let down = (0..n).map(|y| (0..n).filter(|&x| up[x].contains(y)).collect()).collect();
        Relation { up, down }
    }

    /// Returns the first violated order axiom, if any.
    pub fn order_violation(&self) -> Option<String> {
        let n = self.up.len();
        for x in 0..n {
            if !self.up[x].contains(x) {
                return Some(format!("not reflexive at {x}"));
            }
        }
        for x in 0..n {
            for y in self.up[x].iter() {
                if y != x && self.up[y].contains(x) {
                    return Some(format!("not antisymmetric at ({x}, {y})"));
                }
                if !self.up[y].is_subset(self.up[x]) {
                    return Some(format!("not transitive through {x} ≤ {y}"));
                }
            }
        }
        None
    }
}

impl Order for Relation {
    fn size(&self) -> usize {
        self.up.len()
    }
    fn up_set(&self, x: usize) -> ElemSet {
        self.up[x]
    }
    fn down_set(&self, x: usize) -> ElemSet {
        self.down[x]
    }
}

/// A finite partial order on named elements.
///
/// Immutable once built; `leq` is always a validated partial order.
/// Equality compares names and `leq` only, not the supplied covers.
#[derive(Clone)]
pub struct FinitePoset {
    names: Vec<String>,
    rel: Relation,
    covers: Vec<(usize, usize)>,
}

impl FinitePoset {
    /// Builds the reflexive-transitive closure of a cover list.
    pub fn from_covers<S: AsRef<str>>(names: &[S], covers: &[(S, S)]) -> Result<Self> {
        let names = check_names(names)?;
        let index = |s: &str| {
            names
                .iter()
                .position(|n| n == s)
                .ok_or_else(|| Error::UnknownName(s.to_string()))
        };
        let pairs = covers
            .iter()
            .map(|(a, b)| Ok((index(a.as_ref())?, index(b.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_cover_indices(names, pairs)
    }

    pub fn from_cover_indices(names: Vec<String>, covers: Vec<(usize, usize)>) -> Result<Self> {
        let n = names.len();
        if n > MAX_ELEMENTS {
            return Err(Error::TooManyElements(n));
        }
        let mut up: Vec<ElemSet> = (0..n).map(ElemSet::singleton).collect();
        for &(a, b) in &covers {
            assert!(a < n && b < n, "cover index out of range");
            up[a].insert(b);
        }
        // Warshall closure over bitmask rows.
        for k in 0..n {
            for i in 0..n {
                if up[i].contains(k) {
                    up[i] = up[i] | up[k];
                }
            }
        }
        for x in 0..n {
            for y in up[x].iter() {
                if y != x && up[y].contains(x) {
                    return Err(Error::CycleDetected(names[x].clone(), names[y].clone()));
                }
            }
        }
        Ok(FinitePoset {
            names,
            rel: Relation::from_up_rows(up),
            covers,
        })
    }

    /// Builds a poset from a full relation, recording its Hasse diagram as covers.
    pub fn from_relation(names: Vec<String>, rel: Relation) -> Result<Self> {
        if names.len() != rel.size() {
            return Err(Error::NotAnOrder("name count differs from relation size".into()));
        }
        let names = check_names(&names)?;
        if let Some(v) = rel.order_violation() {
            return Err(Error::NotAnOrder(v));
        }
        let covers = hasse(&rel);
        Ok(FinitePoset { names, rel, covers })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Looks up a set of elements by name; panics on unknown names.
    pub fn set(&self, names: &[&str]) -> ElemSet {
        names
            .iter()
            .map(|s| self.index_of(s).unwrap_or_else(|| panic!("unknown element `{s}`")))
            .collect()
    }

    pub fn elem(&self, name: &str) -> ElemSet {
        self.set(&[name])
    }

    /// The cover pairs as supplied at construction.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// The irredundant cover relation computed from `leq`.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        hasse(&self.rel)
    }

    pub fn relation(&self) -> &Relation {
        &self.rel
    }

    /// Global minimum and maximum, when both exist.
    pub fn bounds(&self) -> Option<(usize, usize)> {
        let all = self.carrier();
        let bottom = (0..self.len()).find(|&x| self.up_set(x) == all)?;
        let top = (0..self.len()).find(|&x| self.down_set(x) == all)?;
        Some((bottom, top))
    }

    /// The order dual, same names.
    pub fn dual(&self) -> FinitePoset {
        FinitePoset {
            names: self.names.clone(),
            rel: Relation::from_up_rows(self.rel.down.clone()),
            covers: self.covers.iter().map(|&(a, b)| (b, a)).collect(),
        }
    }

    /// True when both posets have the same names and the same `≤`.
    pub fn same_order(&self, other: &FinitePoset) -> bool {
        self.names == other.names && self.rel == other.rel
    }

    pub fn render(&self, s: ElemSet) -> String {
        set::braced(&self.names, s)
    }

    pub fn render_compact(&self, s: ElemSet) -> String {
        set::compact(&self.names, s)
    }
}

impl PartialEq for FinitePoset {
    fn eq(&self, other: &Self) -> bool {
        self.same_order(other)
    }
}

impl Eq for FinitePoset {}

impl Order for FinitePoset {
    fn size(&self) -> usize {
        self.names.len()
    }
    fn up_set(&self, x: usize) -> ElemSet {
        self.rel.up[x]
    }
    fn down_set(&self, x: usize) -> ElemSet {
        self.rel.down[x]
    }
}

impl fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .hasse()
            .iter()
            .map(|&(a, b)| format!("{}<{}", self.names[a], self.names[b]))
            .collect();
        write!(f, "FinitePoset[{}; {}]", self.names.join(" "), covers.join(" "))
    }
}

fn check_names<S: AsRef<str>>(names: &[S]) -> Result<Vec<String>> {
    if names.len() > MAX_ELEMENTS {
        return Err(Error::TooManyElements(names.len()));
    }
    let mut out: Vec<String> = Vec::with_capacity(names.len());
    for n in names {
        let n = n.as_ref();
        if out.iter().any(|m| m == n) {
            return Err(Error::DuplicateName(n.to_string()));
        }
        out.push(n.to_string());
    }
    Ok(out)
}

fn hasse(rel: &Relation) -> Vec<(usize, usize)> {
    let n = rel.size();
    let mut out = Vec::new();
    for x in 0..n {
        let above = rel.up_set(x) - ElemSet::singleton(x);
        for y in above.iter() {
            let between = above & (rel.down_set(y) - ElemSet::singleton(y));
            if between.is_empty() {
                out.push((x, y));
            }
        }
    }
    out
}

/// A poset with a bottom and a top element.
#[derive(Clone, PartialEq, Eq)]
pub struct BoundedPoset {
    base: FinitePoset,
    bottom: usize,
    top: usize,
}

impl BoundedPoset {
    pub fn new(base: FinitePoset) -> Result<Self> {
        let (bottom, top) = base.bounds().ok_or(Error::NotBounded)?;
        Ok(BoundedPoset { base, bottom, top })
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.base
    }

    pub fn into_poset(self) -> FinitePoset {
        self.base
    }
}

impl std::ops::Deref for BoundedPoset {
    type Target = FinitePoset;
    fn deref(&self) -> &FinitePoset {
        &self.base
    }
}

impl Order for BoundedPoset {
    fn size(&self) -> usize {
        self.base.size()
    }
    fn up_set(&self, x: usize) -> ElemSet {
        self.base.up_set(x)
    }
    fn down_set(&self, x: usize) -> ElemSet {
        self.base.down_set(x)
    }
}

impl fmt::Debug for BoundedPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.base.fmt(f)
    }
}
