//! Complemented posets: bounded posets with an antitone involution that
//! sends every element to a complement.

use std::fmt;

use crate::error::{Error, Result};
use crate::poset::{BoundedPoset, Order};
use crate::set::ElemSet;

#[derive(Clone, PartialEq, Eq)]
pub struct ComplementedPoset {
    base: BoundedPoset,
    comp: Vec<usize>,
}

impl ComplementedPoset {
    pub fn new(base: BoundedPoset, comp: Vec<usize>) -> Result<Self> {
        if let Some(problem) = complementation_problem(&base, &comp) {
            return Err(Error::InvalidComplement(problem));
        }
        Ok(ComplementedPoset { base, comp })
    }

    /// Builds the complementation from name pairs; each pair is applied both ways.
    pub fn from_pairs(base: BoundedPoset, pairs: &[(&str, &str)]) -> Result<Self> {
        let mut comp = vec![usize::MAX; base.len()];
        for &(a, b) in pairs {
            let ia = base.index_of(a).ok_or_else(|| Error::UnknownName(a.into()))?;
            let ib = base.index_of(b).ok_or_else(|| Error::UnknownName(b.into()))?;
            comp[ia] = ib;
            comp[ib] = ia;
        }
        if let Some(x) = comp.iter().position(|&c| c == usize::MAX) {
            return Err(Error::InvalidComplement(format!("no complement given for `{}`", base.name(x))));
        }
        Self::new(base, comp)
    }

    pub fn bounded(&self) -> &BoundedPoset {
        &self.base
    }

    /// `x′`
    pub fn comp(&self, x: usize) -> usize {
        self.comp[x]
    }

    pub fn complementation(&self) -> &[usize] {
        &self.comp
    }

    /// `A′ = {a′ | a ∈ A}`
    pub fn image(&self, a: ElemSet) -> ElemSet {
        a.map(|x| self.comp[x])
    }

    /// Same carrier, order, bounds and complementation.
    pub fn same_as(&self, other: &ComplementedPoset) -> bool {
        self.base.same_order(&other.base)
            && self.base.bottom() == other.base.bottom()
            && self.base.top() == other.base.top()
            && self.comp == other.comp
    }
}

impl std::ops::Deref for ComplementedPoset {
    type Target = BoundedPoset;
    fn deref(&self) -> &BoundedPoset {
        &self.base
    }
}

impl Order for ComplementedPoset {
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

impl fmt::Debug for ComplementedPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = (0..self.len())
            .filter(|&x| x <= self.comp[x])
            .map(|x| format!("{}~{}", self.name(x), self.name(self.comp[x])))
            .collect();
        write!(f, "{:?} with {}", self.base, pairs.join(" "))
    }
}

/// Boolean poset: a distributive complemented poset.
pub fn is_boolean(p: &ComplementedPoset) -> bool {
    crate::distributive::is_distributive(p)
}

/// `a` and `b` are complements: `L(a,b) = {0}` and `U(a,b) = {1}`.
pub fn are_complements(p: &BoundedPoset, a: usize, b: usize) -> bool {
    let pair = ElemSet::singleton(a).with(b);
    p.lower_cone(pair) == ElemSet::singleton(p.bottom()) && p.upper_cone(pair) == ElemSet::singleton(p.top())
}

fn complementation_problem(p: &BoundedPoset, comp: &[usize]) -> Option<String> {
    let n = p.len();
    if comp.len() != n {
        return Some(format!("map has {} entries for {n} elements", comp.len()));
    }
    if let Some(x) = (0..n).find(|&x| comp[x] >= n) {
        return Some(format!("image of `{}` is out of range", p.name(x)));
    }
    if let Some(x) = (0..n).find(|&x| comp[comp[x]] != x) {
        return Some(format!("not an involution at `{}`", p.name(x)));
    }
    for x in 0..n {
        for y in p.up_set(x).iter() {
            if !p.leq(comp[y], comp[x]) {
                return Some(format!("not antitone at `{}` ≤ `{}`", p.name(x), p.name(y)));
            }
        }
    }
    if let Some(x) = (0..n).find(|&x| !are_complements(p, x, comp[x])) {
        return Some(format!("`{}` is not a complement of `{}`", p.name(comp[x]), p.name(x)));
    }
    None
}

/// All complementations of `p`, in lexicographic order of the map.
pub fn find_complementations(p: &BoundedPoset) -> Vec<Vec<usize>> {
    let n = p.len();
    let candidates: Vec<ElemSet> = (0..n)
        .map(|x| (0..n).filter(|&y| are_complements(p, x, y)).collect())
        .collect();
    let mut out = Vec::new();
    let mut comp = vec![usize::MAX; n];
    extend_pairing(p, &candidates, &mut comp, &mut out);
    out.sort();
    out
}

fn extend_pairing(p: &BoundedPoset, candidates: &[ElemSet], comp: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let Some(x) = comp.iter().position(|&c| c == usize::MAX) else {
        if complementation_problem(p, comp).is_none() {
            out.push(comp.clone());
        }
        return;
    };
    for y in candidates[x].iter() {
        if comp[y] != usize::MAX {
            continue;
        }
        // Antitone check against the already paired elements.
        let consistent = (0..comp.len()).filter(|&u| comp[u] != usize::MAX).all(|u| {
            let v = comp[u];
            (!p.leq(x, u) || p.leq(v, y)) && (!p.leq(u, x) || p.leq(y, v))
                && (!p.leq(y, u) || p.leq(v, x)) && (!p.leq(u, y) || p.leq(x, v))
        });
        if !consistent {
            continue;
        }
        comp[x] = y;
        comp[y] = x;
        extend_pairing(p, candidates, comp, out);
        comp[x] = usize::MAX;
        comp[y] = usize::MAX;
    }
}
