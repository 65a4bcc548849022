//! Sheffer structures `(P, |)`: a single operator generating the order,
//! the complementation and both cone operators of a complemented poset.

use crate::complemented::ComplementedPoset;
use crate::error::{Error, Result};
use crate::poset::{BoundedPoset, FinitePoset, Order, Relation};
use crate::report::{check_axiom, AxiomReport, Law, Witness};
use crate::set::ElemSet;
use crate::table::Table;

fn s(x: usize) -> ElemSet {
    ElemSet::singleton(x)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShefferStructure {
    pub names: Vec<String>,
    pub stroke: Table,
}

impl ShefferStructure {
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// `x′ = x|x`, when it is a single element.
    pub fn prime(&self, x: usize) -> Option<usize> {
        self.stroke.get(x, x).single()
    }

    /// `A′`, the image of `A` under `x ↦ x|x`.
    pub fn prime_set(&self, a: ElemSet) -> ElemSet {
        a.iter().fold(ElemSet::EMPTY, |acc, x| acc | self.stroke.get(x, x))
    }

    /// `x ⊑ y :⇔ x′|y′ = x`
    pub fn derived_relation(&self) -> Relation {
        Relation::from_fn(self.len(), |x, y| self.below(x, y))
    }

    fn below(&self, x: usize, y: usize) -> bool {
        match (self.prime(x), self.prime(y)) {
            (Some(xp), Some(yp)) => self.stroke.is(xp, yp, x),
            _ => false,
        }
    }

    /// `A|B`. Singleton pairs read the table; otherwise the result is the set
    /// of `⊑`-maximal `z` with `z′|a = z` for every `a ∈ A ∪ B`.
    pub fn lift(&self, a: ElemSet, b: ElemSet) -> Result<ElemSet> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::EmptyArgument);
        }
        Ok(self.stroke_sets(a, b))
    }

    pub(crate) fn stroke_sets(&self, a: ElemSet, b: ElemSet) -> ElemSet {
        if let (Some(x), Some(y)) = (a.single(), b.single()) {
            return self.stroke.get(x, y);
        }
        let args = a | b;
        let n = self.len();
        let lower: ElemSet = (0..n)
            .filter(|&z| match self.prime(z) {
                Some(zp) => args.iter().all(|x| self.stroke.is(zp, x, z)),
                None => false,
            })
            .collect();
        lower
            .iter()
            .filter(|&z| !lower.iter().any(|u| u != z && self.below(z, u)))
            .collect()
    }
}

/// `x|y := Max L(x′, y′)`.
pub fn sheffer_from_poset(p: &ComplementedPoset) -> ShefferStructure {
    ShefferStructure {
        names: p.names().to_vec(),
        stroke: Table::from_fn(p.len(), |x, y| p.max_l(s(p.comp(x)), s(p.comp(y)))),
    }
}

/// Checks Sheffer axioms (i)–(vii). Nested strokes are evaluated innermost
/// first, with `A′` the elementwise image and `A|B` the lift.
pub fn check_sheffer_axioms(st: &ShefferStructure) -> AxiomReport {
    let n = st.len();
    let t = |x: usize, y: usize| st.stroke.get(x, y);
    let ss = |a, b| st.stroke_sets(a, b);
    let pr = |a| st.prime_set(a);
    let x_: &'static [&'static str] = &["x"];
    let xy: &'static [&'static str] = &["x", "y"];
    let xyz: &'static [&'static str] = &["x", "y", "z"];
    // x|x′ as a set
    let x_xp = |x: usize| ss(s(x), pr(s(x)));

    let member = |x: usize, y: usize| -> ElemSet {
        let under = |z: usize| ss(pr(s(z)), s(x)) == s(z) && ss(pr(s(z)), s(y)) == s(z);
        (0..n)
            .filter(|&z| {
                under(z) && (0..n).all(|u| !(under(u) && ss(pr(s(z)), pr(s(u))) == s(z)) || u == z)
            })
            .collect()
    };

    let verdicts = vec![
        check_axiom(n, "(i)", "x|y = y|x", vec![Law::equation("", xy, |a| (t(a[0], a[1]), t(a[1], a[0])))]),
        check_axiom(n, "(ii)", "(x|x)|(x|x) = x", vec![Law::equation("", x_, |a| {
            let xp = t(a[0], a[0]);
            (ss(xp, xp), s(a[0]))
        })]),
        check_axiom(n, "(iii)", "(x|y)|(x|x) = x", vec![Law::equation("", xy, |a| {
            (ss(t(a[0], a[1]), t(a[0], a[0])), s(a[0]))
        })]),
        check_axiom(n, "(iv)", "(x′|(y′|z′)′)′|z′ = (x′|(y′|z′)′)′|(x|x′)", vec![Law::custom("", xyz, |a| {
            let (xp, zp) = (pr(s(a[0])), pr(s(a[2])));
            let yz = ss(pr(s(a[1])), zp);
            let inner = ss(xp, pr(yz));
            let lhs = ss(pr(inner), zp);
            let rhs = ss(pr(inner), x_xp(a[0]));
            (lhs != rhs).then(|| {
                Witness::new(xyz, a, lhs, rhs).with_trace(vec![
                    ("y′|z′".into(), yz),
                    ("x′|(y′|z′)′".into(), inner),
                    ("x|x′".into(), x_xp(a[0])),
                ])
            })
        })]),
        check_axiom(n, "(v)", "x|x′ ∈ P, x|x′ = y|y′", vec![
            Law::custom("x|x′ ∈ P", x_, |a| {
                let v = x_xp(a[0]);
                (v.len() != 1).then(|| Witness::new(x_, a, v, v))
            }),
            Law::equation("x|x′ = y|y′", xy, |a| (x_xp(a[0]), x_xp(a[1]))),
        ]),
        check_axiom(n, "(vi)", "(x|x′)′|x = x|x′", vec![Law::equation("", x_, |a| {
            let v = x_xp(a[0]);
            (ss(pr(v), s(a[0])), v)
        })]),
        check_axiom(n, "(vii)", "z ∈ x|y iff z′|x = z′|y = z and z is ⊑-maximal with this", vec![
            Law::equation("", xy, |a| (t(a[0], a[1]), member(a[0], a[1]))),
        ]),
    ];
    AxiomReport {
        title: "Sheffer structure axioms".into(),
        names: st.names.clone(),
        verdicts,
    }
}

/// Recovers the complemented poset: `x′ = x|x`, `x ≤ y :⇔ x′|y′ = x`,
/// `0 = x|x′`, `1 = 0′`. Also confirms `x|y = Max L(x′,y′)` and
/// `(x|y)′ = Min U(x,y)` on the result.
pub fn poset_from_sheffer(st: &ShefferStructure) -> Result<ComplementedPoset> {
    let report = check_sheffer_axioms(st);
    if let Some(msg) = report.failure_summary() {
        return Err(Error::AxiomsFail(msg));
    }
    let n = st.len();
    let inconsistent = |m: String| Error::ConsistencyFail(m);
    let comp: Vec<usize> = (0..n)
        .map(|x| st.prime(x).ok_or_else(|| inconsistent(format!("{}|{} is not an element", st.names[x], st.names[x]))))
        .collect::<Result<_>>()?;
    let order = FinitePoset::from_relation(st.names.clone(), st.derived_relation())
        .map_err(|e| inconsistent(e.to_string()))?;
    let bounded = BoundedPoset::new(order).map_err(|e| inconsistent(e.to_string()))?;
    let zero = st.stroke.get(0, comp[0]).single().ok_or_else(|| inconsistent("x|x′ is not an element".into()))?;
    if bounded.bottom() != zero || bounded.top() != comp[zero] {
        return Err(inconsistent("x|x′ and its complement are not the bounds".into()));
    }
    let p = ComplementedPoset::new(bounded, comp).map_err(|e| inconsistent(e.to_string()))?;
    for x in 0..n {
        for y in 0..n {
            let stroke = st.stroke.get(x, y);
            if stroke != p.max_l(s(p.comp(x)), s(p.comp(y))) {
                return Err(inconsistent(format!("x|y ≠ Max L(x′,y′) at ({}, {})", st.names[x], st.names[y])));
            }
            if p.image(stroke) != p.min_u(s(x), s(y)) {
                return Err(inconsistent(format!("(x|y)′ ≠ Min U(x,y) at ({}, {})", st.names[x], st.names[y])));
            }
        }
    }
    Ok(p)
}

/// The complemented poset recovered from its Sheffer structure is the original.
pub fn sheffer_roundtrip(p: &ComplementedPoset) -> bool {
    poset_from_sheffer(&sheffer_from_poset(p)).is_ok_and(|q| q.same_as(p))
}
