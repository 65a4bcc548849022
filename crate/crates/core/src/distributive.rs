//! Distributivity of posets, in the four equivalent cone formulations.

use crate::poset::Order;
use crate::report::{first_tuple, Witness};
use crate::sample::SubsetPolicy;
use crate::set::ElemSet;

fn s(x: usize) -> ElemSet {
    ElemSet::singleton(x)
}

/// Both sides of `L(U(x,y),A) = LU(L(x,A),L(y,A))`.
pub fn lower_sides<P: Order + ?Sized>(p: &P, x: usize, y: usize, a: ElemSet) -> (ElemSet, ElemSet) {
    let lhs = p.lower_cone(p.upper_cone(s(x) | s(y)) | a);
    let rhs = p.lower_cone(p.upper_cone(p.lower_cone(s(x) | a) | p.lower_cone(s(y) | a)));
    (lhs, rhs)
}

/// Both sides of `U(L(x,y),A) = UL(U(x,A),U(y,A))`.
pub fn upper_sides<P: Order + ?Sized>(p: &P, x: usize, y: usize, a: ElemSet) -> (ElemSet, ElemSet) {
    let lhs = p.upper_cone(p.lower_cone(s(x) | s(y)) | a);
    let rhs = p.upper_cone(p.lower_cone(p.upper_cone(s(x) | a) | p.upper_cone(s(y) | a)));
    (lhs, rhs)
}

/// First triple violating `L(U(x,y),z) = LU(L(x,z),L(y,z))`; `None` when
/// the poset is distributive.
pub fn distributivity_witness<P: Order + ?Sized>(p: &P) -> Option<Witness> {
    first_tuple(p.size(), 3, |t| {
        let (l, r) = lower_sides(p, t[0], t[1], s(t[2]));
        (l != r).then(|| Witness::new(&["x", "y", "z"], t, l, r))
    })
}

pub fn is_distributive<P: Order + ?Sized>(p: &P) -> bool {
    distributivity_witness(p).is_none()
}

/// Verdicts of the four formulations, in the order: element `L(U..)`,
/// element `U(L..)`, subset `L(U..)`, subset `U(L..)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistributivityConditions {
    pub verdicts: [bool; 4],
    /// Whether the subset conditions were checked on every subset.
    pub exhaustive: bool,
}

impl DistributivityConditions {
    pub fn agree(&self) -> bool {
        self.verdicts.iter().all(|&v| v == self.verdicts[0])
    }
}

pub fn distributivity_conditions<P: Order + ?Sized>(p: &P, policy: &SubsetPolicy) -> DistributivityConditions {
    let n = p.size();
    let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));
    let elementwise = |f: &dyn Fn(usize, usize, ElemSet) -> (ElemSet, ElemSet)| {
        pairs().all(|(x, y)| (0..n).all(|z| {
            let (l, r) = f(x, y, s(z));
            l == r
        }))
    };
    let lower = |x, y, a| lower_sides(p, x, y, a);
    let upper = |x, y, a| upper_sides(p, x, y, a);
    let exhaustive = policy.exhaustive(n);
    let subsets: Vec<ElemSet> = if exhaustive {
        (0..1u64 << n).map(ElemSet::from_bits).collect()
    } else {
        let mut sampler = policy.sampler(n);
        (0..policy.samples).map(|_| sampler.subset()).collect()
    };
    let subsetwise = |f: &dyn Fn(usize, usize, ElemSet) -> (ElemSet, ElemSet)| {
        subsets.iter().all(|&a| pairs().all(|(x, y)| {
            let (l, r) = f(x, y, a);
            l == r
        }))
    };
    DistributivityConditions {
        verdicts: [elementwise(&lower), elementwise(&upper), subsetwise(&lower), subsetwise(&upper)],
        exhaustive,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::poset::FinitePoset;

    #[test]
    fn figure2_is_not_distributive() {
        let p = fixtures::figure2().poset;
        let w = distributivity_witness(&p).unwrap();
        assert_eq!(w.args(), p.set(&["a", "b", "c"]).iter().collect::<Vec<_>>());
        assert_eq!(w.lhs, p.set(&["0", "c"]));
        assert_eq!(w.rhs, p.set(&["0"]));
    }

    #[test]
    fn figure3_and_chains_are_distributive() {
        assert!(is_distributive(&fixtures::figure3().poset));
        assert!(is_distributive(&fixtures::figure4().poset));
        let chain = FinitePoset::from_covers(&["x", "y", "z"], &[("x", "y"), ("y", "z")]).unwrap();
        assert!(is_distributive(&chain));
    }

    #[test]
    fn conditions_agree_on_fixtures() {
        let policy = SubsetPolicy::default();
        let c2 = distributivity_conditions(&fixtures::figure2().poset, &policy);
        assert_eq!(c2.verdicts, [false; 4]);
        assert!(c2.exhaustive);
        let c3 = distributivity_conditions(&fixtures::figure3().poset, &policy);
        assert_eq!(c3.verdicts, [true; 4]);
        let one = FinitePoset::from_covers::<&str>(&["x"], &[]).unwrap();
        assert_eq!(distributivity_conditions(&one, &policy).verdicts, [true; 4]);
    }

    #[test]
    fn sampled_mode_is_used_above_cap() {
        let c = distributivity_conditions(&fixtures::figure3().poset, &SubsetPolicy::with_cap(4));
        assert!(!c.exhaustive);
        assert!(c.agree());
    }
}
