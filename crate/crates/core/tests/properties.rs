use proptest::prelude::*;

use posetalg::cones::{cone_lemma_violation, ConeOp};
use posetalg::operator::{lift_mismatch, roundtrip_poset};
use posetalg::symdiff::{check_sd_identities, sym_diff};
use posetalg::sheffer::sheffer_roundtrip;
use posetalg::{
    check_axioms, find_complementations, structure_from_poset, BoundedPoset, ComplementedPoset, ElemSet, FinitePoset,
    Order, PosetFile, StructureFile, SubsetPolicy,
};

/// A random labeled poset: a random DAG on `n` points under a random relabeling.
fn poset(max: usize) -> impl Strategy<Value = FinitePoset> {
    (1..=max)
        .prop_flat_map(|n| {
            let edges = proptest::collection::vec(proptest::bool::weighted(0.35), n * (n - 1) / 2);
            let perm = Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
            (Just(n), edges, perm)
        })
        .prop_map(|(n, edges, perm)| {
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            let covers = pairs.zip(edges).filter(|(_, e)| *e).map(|((i, j), _)| (perm[i], perm[j])).collect();
            let names = (0..n).map(|i| format!("p{i}")).collect();
            FinitePoset::from_cover_indices(names, covers).unwrap()
        })
}

/// A random poset with a new bottom and top added.
fn bounded(max_middle: usize) -> impl Strategy<Value = BoundedPoset> {
    poset(max_middle).prop_map(|p| {
        let n = p.len();
        let mut names = vec!["0".to_string()];
        names.extend(p.names().iter().cloned());
        names.push("1".into());
        let mut covers: Vec<(usize, usize)> = p.hasse().into_iter().map(|(a, b)| (a + 1, b + 1)).collect();
        covers.extend((1..=n).flat_map(|x| [(0, x), (x, n + 1)]));
        BoundedPoset::new(FinitePoset::from_cover_indices(names, covers).unwrap()).unwrap()
    })
}

fn subset(n: usize) -> impl Strategy<Value = ElemSet> {
    (0..1u64 << n).prop_map(ElemSet::from_bits)
}

fn with_subsets(max: usize) -> impl Strategy<Value = (FinitePoset, ElemSet, ElemSet)> {
    poset(max).prop_flat_map(|p| {
        let n = p.len();
        (Just(p), subset(n), subset(n))
    })
}

fn complemented(max_middle: usize) -> impl Strategy<Value = Option<ComplementedPoset>> {
    bounded(max_middle).prop_map(|b| {
        let comp = find_complementations(&b).into_iter().next()?;
        Some(ComplementedPoset::new(b, comp).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cones_are_intersections((p, a, _) in with_subsets(8)) {
        let lower = a.iter().fold(p.carrier(), |acc, x| acc & p.lower_cone(ElemSet::singleton(x)));
        let upper = a.iter().fold(p.carrier(), |acc, x| acc & p.upper_cone(ElemSet::singleton(x)));
        prop_assert_eq!(p.lower_cone(a), lower);
        prop_assert_eq!(p.upper_cone(a), upper);
        prop_assert!(p.set_leq(p.lower_cone(a), a));
    }

    #[test]
    fn cone_lemma_holds(p in poset(6)) {
        prop_assert_eq!(cone_lemma_violation(&p), None);
    }

    #[test]
    fn cone_operators_are_symmetric_and_idempotent((p, a, b) in with_subsets(8)) {
        prop_assert_eq!(p.max_l(a, b), p.max_l(b, a));
        prop_assert_eq!(p.min_u(a, b), p.min_u(b, a));
        for x in 0..p.len() {
            let s = ElemSet::singleton(x);
            prop_assert_eq!(p.max_l(s, s), s);
            prop_assert_eq!(p.min_u(s, s), s);
        }
    }

    #[test]
    fn dual_poset_swaps_operators((p, a, b) in with_subsets(8)) {
        let d = p.dual();
        prop_assert_eq!(ConeOp::MaxL.apply(&p, a, b), ConeOp::MinU.apply(&d, a, b));
    }

    #[test]
    fn infimum_when_it_exists(p in poset(8)) {
        for x in 0..p.len() {
            for y in 0..p.len() {
                let lower = p.down_set(x) & p.down_set(y);
                let inf = lower.iter().find(|&z| lower.iter().all(|w| p.leq(w, z)));
                let m = p.max_l(ElemSet::singleton(x), ElemSet::singleton(y));
                if let Some(z) = inf {
                    prop_assert_eq!(m, ElemSet::singleton(z));
                }
            }
        }
    }

    #[test]
    fn bounded_cones_are_nonempty(b in bounded(6), bits in any::<u64>()) {
        let a = ElemSet::from_bits(bits) & b.carrier();
        prop_assert!(!b.lower_cone(a).is_empty() && !b.upper_cone(a).is_empty());
        prop_assert!(!b.max_l(a, ElemSet::EMPTY).is_empty() && !b.min_u(a, ElemSet::EMPTY).is_empty());
    }

    #[test]
    fn absorption(b in bounded(6)) {
        let s = ElemSet::singleton;
        for x in 0..b.len() {
            for y in 0..b.len() {
                prop_assert_eq!(b.min_u(b.max_l(s(x), s(y)), s(y)), s(y));
                prop_assert_eq!(b.max_l(s(x), b.min_u(s(x), s(y))), s(x));
            }
        }
    }

    #[test]
    fn operator_structure_roundtrip(b in bounded(5)) {
        let st = structure_from_poset(&b).unwrap();
        let r = check_axioms(&st);
        prop_assert!(r.all_pass(), "{}", r);
        prop_assert!(roundtrip_poset(&b).unwrap());
        prop_assert_eq!(lift_mismatch(&st, &b, &SubsetPolicy::with_cap(6)), None);
    }

    #[test]
    fn poset_file_roundtrip(p in poset(9)) {
        let f = PosetFile::from_poset(p);
        let text = f.to_text();
        let back = PosetFile::parse(&text).unwrap();
        prop_assert_eq!(back.to_text(), text);
        prop_assert_eq!(back, f);
    }

    #[test]
    fn structure_file_roundtrip(b in bounded(5)) {
        let file = StructureFile::Operator(structure_from_poset(&b).unwrap());
        prop_assert_eq!(StructureFile::parse(&file.to_text()).unwrap(), file);
    }

    #[test]
    fn complemented_laws(c in complemented(6)) {
        if let Some(c) = c {
            let r = check_sd_identities(&c);
            prop_assert!(r.all_pass(), "{}", r);
            prop_assert!(sheffer_roundtrip(&c));
            let f = PosetFile::from_complemented(&c);
            prop_assert!(PosetFile::parse(&f.to_text()).unwrap().complemented().unwrap().same_as(&c));
            for x in 0..c.len() {
                for y in 0..c.len() {
                    let (a, b) = (ElemSet::singleton(x), ElemSet::singleton(y));
                    prop_assert_eq!(sym_diff(&c, a, b), sym_diff(&c, b, a));
                }
            }
        }
    }
}
