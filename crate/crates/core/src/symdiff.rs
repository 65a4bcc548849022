//! Symmetric difference `A + B = Min U(Max L(A′,B), Max L(A,B′))` on
//! complemented posets, its identities, and the Boolean-poset laws around it.

use crate::complemented::ComplementedPoset;
use crate::error::{Error, Result};
use crate::poset::Order;
use crate::report::{check_axiom, first_tuple, AxiomReport, Law, Witness};
use crate::sample::SubsetPolicy;
use crate::set::ElemSet;
use crate::table::Table;

fn s(x: usize) -> ElemSet {
    ElemSet::singleton(x)
}

/// `A + B`; both arguments must be non-empty.
pub fn sym_diff(p: &ComplementedPoset, a: ElemSet, b: ElemSet) -> Result<ElemSet> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyArgument);
    }
    Ok(sd(p, a, b))
}

pub(crate) fn sd(p: &ComplementedPoset, a: ElemSet, b: ElemSet) -> ElemSet {
    p.min_u(p.max_l(p.image(a), b), p.max_l(a, p.image(b)))
}

/// `Min U(Max L(Min U(A,B), Min U(A′,B′)))`, the Boolean-poset form of `A + B`.
pub fn meet_of_joins(p: &ComplementedPoset, a: ElemSet, b: ElemSet) -> ElemSet {
    let joins = p.min_u(a, b) | p.min_u(p.image(a), p.image(b));
    p.min_u(p.maximal(p.lower_cone(joins)), ElemSet::EMPTY)
}

/// The full `x + y` table over element pairs.
pub fn sym_diff_table(p: &ComplementedPoset) -> Table {
    Table::from_fn(p.len(), |x, y| sd(p, s(x), s(y)))
}

/// The eight symmetric-difference identities, each over all element pairs.
pub fn check_sd_identities(p: &ComplementedPoset) -> AxiomReport {
    let n = p.len();
    let (zero, one) = (p.bottom(), p.top());
    let c = |x: usize| p.comp(x);
    let plus = |x: usize, y: usize| sd(p, s(x), s(y));
    let xy: &'static [&'static str] = &["x", "y"];
    let x_: &'static [&'static str] = &["x"];
    let verdicts = vec![
        check_axiom(n, "(1)", "x+x = 0", vec![Law::equation("", x_, |t| (plus(t[0], t[0]), s(zero)))]),
        check_axiom(n, "(2)", "x+y = y+x", vec![Law::equation("", xy, |t| (plus(t[0], t[1]), plus(t[1], t[0])))]),
        check_axiom(n, "(3)", "x+0 = x", vec![Law::equation("", x_, |t| (plus(t[0], zero), s(t[0])))]),
        check_axiom(n, "(4)", "x+1 = x'", vec![Law::equation("", x_, |t| (plus(t[0], one), s(c(t[0]))))]),
        check_axiom(n, "(5)", "(x+1)+1 = x", vec![Law::equation("", x_, |t| {
            (sd(p, plus(t[0], one), s(one)), s(t[0]))
        })]),
        check_axiom(n, "(6)", "x+x' = 1", vec![Law::equation("", x_, |t| (plus(t[0], c(t[0])), s(one)))]),
        check_axiom(n, "(7)", "x+y = x'+y'", vec![Law::equation("", xy, |t| {
            (plus(t[0], t[1]), plus(c(t[0]), c(t[1])))
        })]),
        check_axiom(n, "(8)", "x+y' = x'+y", vec![Law::equation("", xy, |t| {
            (plus(t[0], c(t[1])), plus(c(t[0]), t[1]))
        })]),
    ];
    AxiomReport {
        title: "symmetric difference identities".into(),
        names: p.names().to_vec(),
        verdicts,
    }
}

/// `((x+y)+z, x+(y+z))` with the outer `+` taken on subsets.
pub fn sd_bracketings(p: &ComplementedPoset, x: usize, y: usize, z: usize) -> (ElemSet, ElemSet) {
    (sd(p, sd(p, s(x), s(y)), s(z)), sd(p, s(x), sd(p, s(y), s(z))))
}

/// Lexicographically first triple on which `+` is not associative.
pub fn sd_associativity_witness(p: &ComplementedPoset) -> Option<Witness> {
    first_tuple(p.len(), 3, |t| {
        let (l, r) = sd_bracketings(p, t[0], t[1], t[2]);
        (l != r).then(|| Witness::new(&["x", "y", "z"], t, l, r))
    })
}

/// First pair violating `x+y = Min U(Max L(Min U(x,y), Min U(x′,y′)))`.
/// The identity holds in every Boolean poset.
pub fn meet_of_joins_witness(p: &ComplementedPoset) -> Option<Witness> {
    first_tuple(p.len(), 2, |t| {
        let (a, b) = (s(t[0]), s(t[1]));
        let (l, r) = (sd(p, a, b), meet_of_joins(p, a, b));
        (l != r).then(|| Witness::new(&["x", "y"], t, l, r))
    })
}

/// Outcome of the subset-level distributivity law
/// `U(L(A,B),C) = UL(U(A,C),U(B,C))` and, where it holds, of the subset form
/// of [`meet_of_joins`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongDistributivity {
    /// First failing triple of the hypothesis, `None` if it held.
    pub hypothesis: Option<Witness>,
    /// Checked only when the hypothesis held: first failing pair, if any.
    pub conclusion: Option<Option<Witness>>,
    pub exhaustive: bool,
}

impl StrongDistributivity {
    pub fn hypothesis_holds(&self) -> bool {
        self.hypothesis.is_none()
    }
}

fn subset_witness(vars: &[&'static str], sets: &[ElemSet], lhs: ElemSet, rhs: ElemSet) -> Witness {
    Witness {
        bindings: vars.iter().copied().zip(sets.iter().copied()).collect(),
        lhs,
        rhs,
        trace: Vec::new(),
    }
}

pub fn strong_subset_distributivity(p: &ComplementedPoset, policy: &SubsetPolicy) -> StrongDistributivity {
    let n = p.len();
    let exhaustive = policy.exhaustive(n);
    let abc = &["A", "B", "C"];
    let hypothesis = if exhaustive {
        let masks = 1usize << n;
        let lc: Vec<ElemSet> = (0..masks).map(|m| p.lower_cone(ElemSet::from_bits(m as u64))).collect();
        let uc: Vec<ElemSet> = (0..masks).map(|m| p.upper_cone(ElemSet::from_bits(m as u64))).collect();
        let at = |s: ElemSet| s.bits() as usize;
        let mut found = None;
        'scan: for a in 1..masks {
            for b in 1..masks {
                let lab = lc[a | b];
                for c in 1..masks {
                    let lhs = uc[at(lab) | c];
                    let rhs = uc[at(lc[at(uc[a | c] | uc[b | c])])];
                    if lhs != rhs {
                        let sets = [a, b, c].map(|m| ElemSet::from_bits(m as u64));
                        found = Some(subset_witness(abc, &sets, lhs, rhs));
                        break 'scan;
                    }
                }
            }
        }
        found
    } else {
        let mut sampler = policy.sampler(n);
        (0..policy.samples).find_map(|_| {
            let (a, b, c) = (sampler.nonempty(), sampler.nonempty(), sampler.nonempty());
            let lhs = p.upper_cone(p.lower_cone(a | b) | c);
            let rhs = p.upper_cone(p.lower_cone(p.upper_cone(a | c) | p.upper_cone(b | c)));
            (lhs != rhs).then(|| subset_witness(abc, &[a, b, c], lhs, rhs))
        })
    };
    let conclusion = hypothesis.is_none().then(|| {
        let check = |a: ElemSet, b: ElemSet| {
            let (l, r) = (sd(p, a, b), meet_of_joins(p, a, b));
            (l != r).then(|| subset_witness(&["A", "B"], &[a, b], l, r))
        };
        if exhaustive {
            let masks = 1u64 << n;
            (1..masks).find_map(|a| (1..masks).find_map(|b| check(ElemSet::from_bits(a), ElemSet::from_bits(b))))
        } else {
            let mut sampler = policy.sampler(n);
            (0..policy.samples).find_map(|_| {
                let (a, b) = (sampler.nonempty(), sampler.nonempty());
                check(a, b)
            })
        }
    });
    StrongDistributivity { hypothesis, conclusion, exhaustive }
}

/// First pair violating weak distributivity, read as
/// `Min U(Max L(x′,y′)) = Max L(x,y′) + y′`: juxtaposition is `Max L` and
/// `x+1` is replaced by `x′`.
pub fn weak_distributivity_witness(p: &ComplementedPoset) -> Option<Witness> {
    first_tuple(p.len(), 2, |t| {
        let (x, y) = (t[0], t[1]);
        let yc = s(p.comp(y));
        let lhs = p.min_u(p.max_l(s(p.comp(x)), yc), ElemSet::EMPTY);
        let rhs = sd(p, p.max_l(s(x), yc), yc);
        (lhs != rhs).then(|| Witness::new(&["x", "y"], t, lhs, rhs))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn fig(k: usize) -> ComplementedPoset {
        fixtures::figure(k).complemented().unwrap()
    }

    #[test]
    fn table_cells() {
        let p2 = fig(2);
        assert_eq!(sym_diff(&p2, p2.elem("a"), p2.elem("b")).unwrap(), p2.elem("d'"));
        let p3 = fig(3);
        assert_eq!(sym_diff(&p3, p3.elem("a"), p3.elem("b")).unwrap(), p3.set(&["c'", "d'"]));
        assert_eq!(sym_diff(&p3, p3.elem("a"), p3.elem("1")).unwrap(), p3.elem("a'"));
        let p4 = fig(4);
        assert_eq!(sym_diff(&p4, p4.elem("a"), p4.elem("b")).unwrap(), p4.elem("e"));
        for p in [p2, p3, p4] {
            for x in 0..p.len() {
                assert_eq!(sym_diff(&p, s(x), s(x)).unwrap(), s(p.bottom()));
            }
        }
    }

    #[test]
    fn empty_arguments_are_rejected() {
        let p = fig(2);
        assert_eq!(sym_diff(&p, ElemSet::EMPTY, p.elem("a")), Err(Error::EmptyArgument));
    }

    #[test]
    fn identities_hold_on_fixtures() {
        for k in [2, 3, 4] {
            let r = check_sd_identities(&fig(k));
            assert!(r.all_pass(), "{r}");
            assert_eq!(r.verdicts.len(), 8);
        }
    }

    #[test]
    fn figure4_non_associativity() {
        let p = fig(4);
        let idx = |n| p.index_of(n).unwrap();
        let (l, r) = sd_bracketings(&p, idx("a"), idx("b"), idx("c"));
        assert_eq!(l, p.elem("d'"));
        assert_eq!(r, p.set(&["a'", "d'"]));
        let w = sd_associativity_witness(&p).unwrap();
        assert_eq!(w.args(), vec![idx("a"), idx("a"), idx("c'")]);
        assert_eq!((w.lhs, w.rhs), (p.elem("c'"), p.set(&["a'", "c'"])));
    }

    #[test]
    fn figure3_associativity_golden() {
        let p = fig(3);
        let idx = |n| p.index_of(n).unwrap();
        let w = sd_associativity_witness(&p).unwrap();
        assert_eq!(w.args(), vec![idx("a"), idx("a"), idx("b'")]);
        assert_eq!((w.lhs, w.rhs), (p.elem("b'"), p.set(&["a'", "b'"])));
    }

    #[test]
    fn meet_of_joins_boundary() {
        assert!(meet_of_joins_witness(&fig(3)).is_none());
        assert!(meet_of_joins_witness(&fig(4)).is_none());
        let p = fig(2);
        let w = meet_of_joins_witness(&p).unwrap();
        assert_eq!(w.args(), vec![p.index_of("b").unwrap(), p.index_of("c").unwrap()]);
        assert_eq!(w.lhs, p.elem("0"));
        assert_eq!(w.rhs, p.set(&["a'", "d'"]));
    }

    #[test]
    fn weak_distributivity_goldens() {
        assert!(weak_distributivity_witness(&fig(3)).is_none());
        assert!(weak_distributivity_witness(&fig(4)).is_none());
        let p = fig(2);
        let w = weak_distributivity_witness(&p).unwrap();
        assert_eq!(w.args(), vec![p.index_of("b").unwrap(), p.index_of("c").unwrap()]);
    }

    #[test]
    fn figure3_singleton_structure() {
        let p = fig(3);
        let (zero, one) = (p.bottom(), p.top());
        for x in 0..p.len() {
            for y in 0..p.len() {
                let big = sd(&p, s(x), s(y)).len() > 1;
                let expected = ![zero, one].contains(&x) && ![zero, one].contains(&y) && x != y && y != p.comp(x);
                assert_eq!(big, expected, "{x} {y}");
            }
        }
        let p4 = fig(4);
        assert_eq!(sd(&p4, p4.elem("a"), p4.elem("b")).len(), 1);
    }

    #[test]
    fn strong_distributivity_on_fixtures() {
        let r3 = strong_subset_distributivity(&fig(3), &SubsetPolicy::with_cap(10));
        assert!(r3.exhaustive);
        assert!(!r3.hypothesis_holds());
        assert_eq!(r3.conclusion, None);
        let r2 = strong_subset_distributivity(&fig(2), &SubsetPolicy::with_cap(10));
        assert!(!r2.hypothesis_holds());
    }

    #[test]
    fn singleton_subsets_reduce_to_elements() {
        for k in [2, 3, 4] {
            let p = fig(k);
            for x in 0..p.len() {
                for y in 0..p.len() {
                    let (xc, yc) = (s(p.comp(x)), s(p.comp(y)));
                    let direct = p.min_u(p.max_l(p.min_u(s(x), s(y)), p.min_u(xc, yc)), ElemSet::EMPTY);
                    assert_eq!(meet_of_joins(&p, s(x), s(y)), direct);
                }
            }
        }
    }
}
