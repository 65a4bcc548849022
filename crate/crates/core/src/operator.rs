//! Operator structures `(P, ⊔, ⊓, 0, 1)` axiomatizing `Min U` and `Max L`,
//! the constructions between them and bounded posets, and round-trips.

use crate::error::{Error, Result};
use crate::poset::{BoundedPoset, FinitePoset, Order, Relation};
use crate::report::{check_axiom, AxiomReport, Law, Witness};
use crate::sample::SubsetPolicy;
use crate::set::ElemSet;
use crate::table::Table;

fn s(x: usize) -> ElemSet {
    ElemSet::singleton(x)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorStructure {
    pub names: Vec<String>,
    pub join: Table,
    pub meet: Table,
    pub zero: usize,
    pub one: usize,
}

impl OperatorStructure {
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// `x ⊑ y :⇔ x ⊔ y = y`
    pub fn join_relation(&self) -> Relation {
        Relation::from_fn(self.len(), |x, y| self.join.is(x, y, y))
    }

    /// `x ⊑ y :⇔ x ⊓ y = x`
    pub fn meet_relation(&self) -> Relation {
        Relation::from_fn(self.len(), |x, y| self.meet.is(x, y, x))
    }

    /// `A ⊔ B`. Singleton pairs read the table; otherwise the result is the
    /// set of `⊑`-minimal common upper bounds `z` (those with `a ⊔ z = z`
    /// for every `a ∈ A ∪ B`).
    pub fn lift_join(&self, a: ElemSet, b: ElemSet) -> Result<ElemSet> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::EmptyArgument);
        }
        Ok(self.join_sets(a, b))
    }

    /// `A ⊓ B`, dual to [`lift_join`](Self::lift_join).
    pub fn lift_meet(&self, a: ElemSet, b: ElemSet) -> Result<ElemSet> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::EmptyArgument);
        }
        Ok(self.meet_sets(a, b))
    }

    pub(crate) fn join_sets(&self, a: ElemSet, b: ElemSet) -> ElemSet {
        if let (Some(x), Some(y)) = (a.single(), b.single()) {
            return self.join.get(x, y);
        }
        let args = a | b;
        let n = self.len();
        let bounds: ElemSet = (0..n).filter(|&z| args.iter().all(|x| self.join.is(x, z, z))).collect();
        bounds
            .iter()
            .filter(|&z| !bounds.iter().any(|u| u != z && self.join.is(u, z, z)))
            .collect()
    }

    pub(crate) fn meet_sets(&self, a: ElemSet, b: ElemSet) -> ElemSet {
        if let (Some(x), Some(y)) = (a.single(), b.single()) {
            return self.meet.get(x, y);
        }
        let args = a | b;
        let n = self.len();
        let bounds: ElemSet = (0..n).filter(|&z| args.iter().all(|x| self.meet.is(z, x, z))).collect();
        bounds
            .iter()
            .filter(|&z| !bounds.iter().any(|u| u != z && self.meet.is(z, u, z)))
            .collect()
    }
}

/// `A(P) = (P, Min U, Max L, 0, 1)`.
pub fn structure_from_poset(p: &FinitePoset) -> Result<OperatorStructure> {
    let (zero, one) = p.bounds().ok_or(Error::NotBounded)?;
    let n = p.len();
    Ok(OperatorStructure {
        names: p.names().to_vec(),
        join: Table::from_fn(n, |x, y| p.min_u(s(x), s(y))),
        meet: Table::from_fn(n, |x, y| p.max_l(s(x), s(y))),
        zero,
        one,
    })
}

/// Checks axioms (i)–(vi) of an operator structure over all element tuples.
pub fn check_axioms(st: &OperatorStructure) -> AxiomReport {
    let n = st.len();
    let (zero, one) = (st.zero, st.one);
    let j = |x: usize, y: usize| st.join.get(x, y);
    let m = |x: usize, y: usize| st.meet.get(x, y);
    let js = |a, b| st.join_sets(a, b);
    let ms = |a, b| st.meet_sets(a, b);
    let x_: &'static [&'static str] = &["x"];
    let xy: &'static [&'static str] = &["x", "y"];
    let xyz: &'static [&'static str] = &["x", "y", "z"];

    let join_member = |x: usize, y: usize| -> ElemSet {
        let ub = |z: usize| st.join.is(x, z, z) && st.join.is(y, z, z);
        (0..n)
            .filter(|&z| ub(z) && (0..n).all(|u| !(ub(u) && st.meet.is(u, z, u)) || u == z))
            .collect()
    };
    let meet_member = |x: usize, y: usize| -> ElemSet {
        let lb = |z: usize| st.meet.is(z, x, z) && st.meet.is(z, y, z);
        (0..n)
            .filter(|&z| lb(z) && (0..n).all(|u| !(lb(u) && st.join.is(z, u, u)) || u == z))
            .collect()
    };

    let verdicts = vec![
        check_axiom(n, "(i)", "x ⊔ x = x, x ⊓ x = x", vec![
            Law::equation("x ⊔ x = x", x_, |t| (j(t[0], t[0]), s(t[0]))),
            Law::equation("x ⊓ x = x", x_, |t| (m(t[0], t[0]), s(t[0]))),
        ]),
        check_axiom(n, "(ii)", "x ⊔ y = y ⊔ x, x ⊓ y = y ⊓ x", vec![
            Law::equation("x ⊔ y = y ⊔ x", xy, |t| (j(t[0], t[1]), j(t[1], t[0]))),
            Law::equation("x ⊓ y = y ⊓ x", xy, |t| (m(t[0], t[1]), m(t[1], t[0]))),
        ]),
        check_axiom(n, "(iii)", "0 ⊔ x = x, x ⊓ 1 = x", vec![
            Law::equation("0 ⊔ x = x", x_, |t| (j(zero, t[0]), s(t[0]))),
            Law::equation("x ⊓ 1 = x", x_, |t| (m(t[0], one), s(t[0]))),
        ]),
        check_axiom(n, "(iv)", "x ⊔ ((x ⊔ y) ⊔ z) = 0 ⊔ ((x ⊔ y) ⊔ z), dually for ⊓", vec![
            Law::custom("x ⊔ ((x ⊔ y) ⊔ z) = 0 ⊔ ((x ⊔ y) ⊔ z)", xyz, |t| {
                let xy = j(t[0], t[1]);
                let inner = js(xy, s(t[2]));
                let (l, r) = (js(s(t[0]), inner), js(s(zero), inner));
                (l != r).then(|| {
                    Witness::new(xyz, t, l, r)
                        .with_trace(vec![("x ⊔ y".into(), xy), ("(x ⊔ y) ⊔ z".into(), inner)])
                })
            }),
            Law::custom("x ⊓ ((x ⊓ y) ⊓ z) = ((x ⊓ y) ⊓ z) ⊓ 1", xyz, |t| {
                let xy = m(t[0], t[1]);
                let inner = ms(xy, s(t[2]));
                let (l, r) = (ms(s(t[0]), inner), ms(inner, s(one)));
                (l != r).then(|| {
                    Witness::new(xyz, t, l, r)
                        .with_trace(vec![("x ⊓ y".into(), xy), ("(x ⊓ y) ⊓ z".into(), inner)])
                })
            }),
        ]),
        check_axiom(n, "(v)", "(x ⊓ y) ⊔ y = y, x ⊓ (x ⊔ y) = x", vec![
            Law::equation("(x ⊓ y) ⊔ y = y", xy, |t| (js(m(t[0], t[1]), s(t[1])), s(t[1]))),
            Law::equation("x ⊓ (x ⊔ y) = x", xy, |t| (ms(s(t[0]), j(t[0], t[1])), s(t[0]))),
        ]),
        check_axiom(n, "(vi)", "z ∈ x ⊔ y iff z is a ⊓-minimal common ⊔-bound; dually for ⊓", vec![
            Law::equation("join membership", xy, |t| (j(t[0], t[1]), join_member(t[0], t[1]))),
            Law::equation("meet membership", xy, |t| (m(t[0], t[1]), meet_member(t[0], t[1]))),
        ]),
    ];
    AxiomReport {
        title: "operator structure axioms".into(),
        names: st.names.clone(),
        verdicts,
    }
}

/// `P(A)`: the bounded poset with `x ≤ y :⇔ x ⊔ y = y`.
///
/// Also confirms that `x ≤ y ⇔ x ⊓ y = x`, `⊔ = Min U` and `⊓ = Max L` on
/// the derived order; a mismatch is reported as [`Error::ConsistencyFail`].
pub fn poset_from_structure(st: &OperatorStructure) -> Result<BoundedPoset> {
    let report = check_axioms(st);
    if let Some(msg) = report.failure_summary() {
        return Err(Error::AxiomsFail(msg));
    }
    let order = FinitePoset::from_relation(st.names.clone(), st.join_relation())
        .map_err(|e| Error::ConsistencyFail(e.to_string()))?;
    let n = st.len();
    let name = |x: usize| st.names[x].as_str();
    for x in 0..n {
        for y in 0..n {
            if order.leq(x, y) != st.meet.is(x, y, x) {
                return Err(Error::ConsistencyFail(format!(
                    "x ≤ y and x ⊓ y = x disagree at ({}, {})",
                    name(x),
                    name(y)
                )));
            }
            if st.join.get(x, y) != order.min_u(s(x), s(y)) {
                return Err(Error::ConsistencyFail(format!("⊔ ≠ Min U at ({}, {})", name(x), name(y))));
            }
            if st.meet.get(x, y) != order.max_l(s(x), s(y)) {
                return Err(Error::ConsistencyFail(format!("⊓ ≠ Max L at ({}, {})", name(x), name(y))));
            }
        }
    }
    let bounded = BoundedPoset::new(order).map_err(|e| Error::ConsistencyFail(e.to_string()))?;
    if (bounded.bottom(), bounded.top()) != (st.zero, st.one) {
        return Err(Error::ConsistencyFail("0 and 1 are not the bounds of the derived order".into()));
    }
    Ok(bounded)
}

/// `A(P(A))` has the same `⊔` and `⊓` tables as `A`.
pub fn roundtrip_structure(st: &OperatorStructure) -> Result<bool> {
    let p = poset_from_structure(st)?;
    let back = structure_from_poset(&p)?;
    Ok(back.join == st.join && back.meet == st.meet && (back.zero, back.one) == (st.zero, st.one))
}

/// `P(A(P)) = P` as labelled orders.
pub fn roundtrip_poset(p: &FinitePoset) -> Result<bool> {
    let st = structure_from_poset(p)?;
    Ok(poset_from_structure(&st)?.same_order(p))
}

/// First pair of non-empty subsets on which the lifted operators differ
/// from `Min U` and `Max L` of `p`.
pub fn lift_mismatch<P: Order + ?Sized>(
    st: &OperatorStructure,
    p: &P,
    policy: &SubsetPolicy,
) -> Option<(ElemSet, ElemSet)> {
    let n = st.len();
    let differs = |a: ElemSet, b: ElemSet| st.join_sets(a, b) != p.min_u(a, b) || st.meet_sets(a, b) != p.max_l(a, b);
    if policy.exhaustive(n) {
        let masks = 1u64 << n;
        (1..masks)
            .flat_map(|a| (1..masks).map(move |b| (ElemSet::from_bits(a), ElemSet::from_bits(b))))
            .find(|&(a, b)| differs(a, b))
    } else {
        let mut sampler = policy.sampler(n);
        (0..policy.samples)
            .map(|_| (sampler.nonempty(), sampler.nonempty()))
            .find(|&(a, b)| differs(a, b))
    }
}
