//! The binary operators `Max L` and `Min U`, their non-associativity, and
//! the finite-poset facts about cones they rely on.

use crate::poset::Order;
use crate::report::{first_tuple, Witness};
use crate::set::ElemSet;

/// Which cone operator a scan refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeOp {
    MaxL,
    MinU,
}

impl ConeOp {
    pub fn apply<P: Order + ?Sized>(self, p: &P, a: ElemSet, b: ElemSet) -> ElemSet {
        match self {
            ConeOp::MaxL => p.max_l(a, b),
            ConeOp::MinU => p.min_u(a, b),
        }
    }
}

/// True when `Max L(x, y)` and `Min U(x, y)` are singletons for every pair,
/// i.e. the poset is a lattice.
pub fn meets_exist<P: Order + ?Sized>(p: &P) -> bool {
    let n = p.size();
    (0..n).all(|x| {
        (x..n).all(|y| {
            let (a, b) = (ElemSet::singleton(x), ElemSet::singleton(y));
            p.max_l(a, b).len() == 1 && p.min_u(a, b).len() == 1
        })
    })
}

/// Both bracketings of `op` on a triple: `op(op(x,y),z)` and `op(x,op(y,z))`.
pub fn bracketings<P: Order + ?Sized>(p: &P, op: ConeOp, x: usize, y: usize, z: usize) -> (ElemSet, ElemSet) {
    let s = ElemSet::singleton;
    let lhs = op.apply(p, op.apply(p, s(x), s(y)), s(z));
    let rhs = op.apply(p, s(x), op.apply(p, s(y), s(z)));
    (lhs, rhs)
}

/// The lexicographically first triple on which `op` is not associative.
pub fn associativity_witness<P: Order + ?Sized>(p: &P, op: ConeOp) -> Option<Witness> {
    first_tuple(p.size(), 3, |t| {
        let (lhs, rhs) = bracketings(p, op, t[0], t[1], t[2]);
        (lhs != rhs).then(|| Witness::new(&["x", "y", "z"], t, lhs, rhs))
    })
}

/// Checks the finite-poset cone lemma on every subset (and pairs of subsets
/// for the two equivalences). Returns a description of the first failure.
pub fn cone_lemma_violation<P: Order + ?Sized>(p: &P) -> Option<String> {
    let n = p.size();
    let subsets = || (0..1u64 << n).map(ElemSet::from_bits);
    for a in subsets() {
        let (min, max) = (p.minimal(a), p.maximal(a));
        for x in a.iter() {
            if !min.iter().any(|b| p.leq(b, x)) || !max.iter().any(|c| p.leq(x, c)) {
                return Some(format!("(i) fails for element {x} of {a:?}"));
            }
        }
        if p.lower_cone(min) != p.lower_cone(a) || p.upper_cone(max) != p.upper_cone(a) {
            return Some(format!("(iv) fails for {a:?}"));
        }
    }
    let lowers: Vec<(ElemSet, ElemSet)> = subsets()
        .map(|a| {
            let l = p.lower_cone(a);
            (l, p.maximal(l))
        })
        .collect();
    let uppers: Vec<(ElemSet, ElemSet)> = subsets()
        .map(|a| {
            let u = p.upper_cone(a);
            (u, p.minimal(u))
        })
        .collect();
    for i in 0..lowers.len() {
        for j in 0..i {
            if (lowers[i].0 == lowers[j].0) != (lowers[i].1 == lowers[j].1) {
                return Some(format!("(ii) fails for subsets {i:#b} and {j:#b}"));
            }
            if (uppers[i].0 == uppers[j].0) != (uppers[i].1 == uppers[j].1) {
                return Some(format!("(iii) fails for subsets {i:#b} and {j:#b}"));
            }
        }
    }
    None
}
