//! Duals of Boolean posets `(P, +, ·, 0, 1)`, the analogue of the unitary
//! Boolean ring of a Boolean algebra.

use crate::complemented::{is_boolean, ComplementedPoset};
use crate::distributive::distributivity_witness;
use crate::error::{Error, Result};
use crate::poset::{BoundedPoset, FinitePoset, Order, Relation};
use crate::report::{check_axiom, AxiomReport, Law, Verdict, Witness};
use crate::sample::SubsetPolicy;
use crate::set::ElemSet;
use crate::symdiff::sd;
use crate::table::Table;

fn s(x: usize) -> ElemSet {
    ElemSet::singleton(x)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualStructure {
    pub names: Vec<String>,
    pub plus: Table,
    pub times: Table,
    pub zero: usize,
    pub one: usize,
}

impl DualStructure {
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// `x ≤ y :⇔ x·y = x`
    pub fn derived_relation(&self) -> Relation {
        Relation::from_fn(self.len(), |x, y| self.times.is(x, y, x))
    }

    /// `A′`, the image of `A` under `x ↦ x+1`.
    pub fn prime_set(&self, a: ElemSet) -> ElemSet {
        a.iter().fold(ElemSet::EMPTY, |acc, x| acc | self.plus.get(x, self.one))
    }

    /// `A·B`. Singleton pairs read the table; otherwise the maximal common
    /// lower bounds of `A ∪ B` under the derived order.
    pub fn times_sets(&self, a: ElemSet, b: ElemSet) -> ElemSet {
        if let (Some(x), Some(y)) = (a.single(), b.single()) {
            return self.times.get(x, y);
        }
        self.times_lift(a | b)
    }

    fn times_lift(&self, args: ElemSet) -> ElemSet {
        let lower: ElemSet = (0..self.len())
            .filter(|&x| args.iter().all(|y| self.times.is(x, y, x)))
            .collect();
        lower
            .iter()
            .filter(|&x| !lower.iter().any(|z| z != x && self.times.is(x, z, x)))
            .collect()
    }

    /// `A+B`. Singleton pairs read the table; otherwise
    /// `Min U(Max L(A′,B), Max L(A,B′))` over the derived order.
    pub fn plus_sets(&self, a: ElemSet, b: ElemSet) -> ElemSet {
        if let (Some(x), Some(y)) = (a.single(), b.single()) {
            return self.plus.get(x, y);
        }
        let rel = self.derived_relation();
        rel.min_u(rel.max_l(self.prime_set(a), b), rel.max_l(a, self.prime_set(b)))
    }
}

/// `D(P)`: `a+b` is the symmetric difference and `a·b = Max L(a,b)`.
pub fn dual_from_boolean(p: &ComplementedPoset) -> Result<DualStructure> {
    if let Some(w) = distributivity_witness(p) {
        return Err(Error::NotBoolean(format!("not distributive {}", w.render(p.names()))));
    }
    Ok(DualStructure {
        names: p.names().to_vec(),
        plus: Table::from_fn(p.len(), |x, y| sd(p, s(x), s(y))),
        times: Table::from_fn(p.len(), |x, y| p.max_l(s(x), s(y))),
        zero: p.bottom(),
        one: p.top(),
    })
}

/// Checks axioms (i)–(v) over element tuples and the subset
/// characterization (vi) over pairs of subsets as set by `policy`.
pub fn check_dual_axioms(d: &DualStructure, policy: &SubsetPolicy) -> AxiomReport {
    let n = d.len();
    let (zero, one) = (d.zero, d.one);
    let t = |x: usize, y: usize| d.times.get(x, y);
    let ts = |a, b| d.times_sets(a, b);
    let ps = |a, b| d.plus_sets(a, b);
    let x_: &'static [&'static str] = &["x"];
    let xy: &'static [&'static str] = &["x", "y"];
    let xyz: &'static [&'static str] = &["x", "y", "z"];
    // x+1 as a set
    let inc = |x: usize| d.plus.get(x, one);

    let mut verdicts = vec![
        check_axiom(n, "(i)", "x·x = x, x·y = y·x, x·0 = 0, x·1 = x, (x·(y·z))·z = (x·(y·z))·1", vec![
            Law::equation("x·x = x", x_, |a| (t(a[0], a[0]), s(a[0]))),
            Law::equation("x·y = y·x", xy, |a| (t(a[0], a[1]), t(a[1], a[0]))),
            Law::equation("x·0 = 0", x_, |a| (t(a[0], zero), s(zero))),
            Law::equation("x·1 = x", x_, |a| (t(a[0], one), s(a[0]))),
            Law::custom("(x·(y·z))·z = (x·(y·z))·1", xyz, |a| {
                let inner = ts(s(a[0]), t(a[1], a[2]));
                let (l, r) = (ts(inner, s(a[2])), ts(inner, s(one)));
                (l != r).then(|| Witness::new(xyz, a, l, r).with_trace(vec![("x·(y·z)".into(), inner)]))
            }),
        ]),
        check_axiom(n, "(ii)", "(x+1)+1 = x", vec![Law::equation("", x_, |a| (ps(inc(a[0]), s(one)), s(a[0])))]),
        check_axiom(n, "(iii)", "x·y = x implies (x+1)·(y+1) = y+1", vec![Law::custom("", xy, |a| {
            if t(a[0], a[1]) != s(a[0]) {
                return None;
            }
            let (l, r) = (ts(inc(a[0]), inc(a[1])), inc(a[1]));
            (l != r).then(|| Witness::new(xy, a, l, r))
        })]),
        check_axiom(n, "(iv)", "x·(x+1) = 0", vec![Law::equation("", x_, |a| (ts(s(a[0]), inc(a[0])), s(zero)))]),
        check_axiom(n, "(v)", "((x+1)·(y+1)+1)·z = ((x·z+1)·(y·z+1)+1)·1", vec![Law::custom("", xyz, |a| {
            let (x, y, z) = (a[0], a[1], a[2]);
            let left_inner = ps(ts(inc(x), inc(y)), s(one));
            let lhs = ts(left_inner, s(z));
            let xz1 = ps(t(x, z), s(one));
            let yz1 = ps(t(y, z), s(one));
            let right_inner = ps(ts(xz1, yz1), s(one));
            let rhs = ts(right_inner, s(one));
            (lhs != rhs).then(|| {
                Witness::new(xyz, a, lhs, rhs).with_trace(vec![
                    ("(x+1)·(y+1)+1".into(), left_inner),
                    ("x·z+1".into(), xz1),
                    ("y·z+1".into(), yz1),
                    ("(x·z+1)·(y·z+1)+1".into(), right_inner),
                ])
            })
        })]),
    ];
    verdicts.push(check_membership(d, policy));
    AxiomReport {
        title: "Boolean-poset dual axioms".into(),
        names: d.names.clone(),
        verdicts,
    }
}

/// `x ∈ A·B` iff `x·y = x` for all `y ∈ A ∪ B` and no other such `z` has `x·z = x`.
fn membership_set(d: &DualStructure, args: ElemSet) -> ElemSet {
    let n = d.len();
    let lower = |x: usize| args.iter().all(|y| d.times.is(x, y, x));
    (0..n)
        .filter(|&x| lower(x) && (0..n).all(|z| !(d.times.is(x, z, x) && lower(z)) || z == x))
        .collect()
}

fn check_membership(d: &DualStructure, policy: &SubsetPolicy) -> Verdict {
    let n = d.len();
    let statement = "x ∈ A·B iff x is a maximal common ·-lower bound of A ∪ B";
    let witness = |a: ElemSet, b: ElemSet, lhs, rhs| Witness {
        bindings: vec![("A", a), ("B", b)],
        lhs,
        rhs,
        trace: Vec::new(),
    };
    let found = if policy.exhaustive(n) {
        let masks = 1u64 << n;
        let member: Vec<ElemSet> = (0..masks).map(|u| membership_set(d, ElemSet::from_bits(u))).collect();
        let lifted: Vec<ElemSet> = (0..masks).map(|u| d.times_lift(ElemSet::from_bits(u))).collect();
        let mut found = None;
        'scan: for a in 0..masks {
            for b in 0..masks {
                let (sa, sb) = (ElemSet::from_bits(a), ElemSet::from_bits(b));
                let u = (a | b) as usize;
                let product = match (sa.single(), sb.single()) {
                    (Some(x), Some(y)) => d.times.get(x, y),
                    _ => lifted[u],
                };
                if product != member[u] {
                    found = Some(witness(sa, sb, product, member[u]));
                    break 'scan;
                }
            }
        }
        found
    } else {
        let mut sampler = policy.sampler(n);
        let singles = (0..n).flat_map(|x| (0..n).map(move |y| (s(x), s(y))));
        let sampled: Vec<(ElemSet, ElemSet)> = (0..policy.samples).map(|_| (sampler.subset(), sampler.subset())).collect();
        singles.chain(sampled).find_map(|(a, b)| {
            let (l, r) = (d.times_sets(a, b), membership_set(d, a | b));
            (l != r).then(|| witness(a, b, l, r))
        })
    };
    Verdict { axiom: "(vi)", statement, failed_law: None, witness: found }
}

/// `B(D)`: `x ≤ y :⇔ x·y = x` and `x′ = x+1`; the result must be Boolean.
pub fn boolean_from_dual(d: &DualStructure, policy: &SubsetPolicy) -> Result<ComplementedPoset> {
    let report = check_dual_axioms(d, policy);
    if let Some(msg) = report.failure_summary() {
        return Err(Error::AxiomsFail(msg));
    }
    let inconsistent = Error::ConsistencyFail;
    let comp: Vec<usize> = (0..d.len())
        .map(|x| {
            d.plus
                .get(x, d.one)
                .single()
                .ok_or_else(|| inconsistent(format!("{}+1 is not an element", d.names[x])))
        })
        .collect::<Result<_>>()?;
    let order = FinitePoset::from_relation(d.names.clone(), d.derived_relation()).map_err(|e| inconsistent(e.to_string()))?;
    let bounded = BoundedPoset::new(order).map_err(|e| inconsistent(e.to_string()))?;
    if (bounded.bottom(), bounded.top()) != (d.zero, d.one) {
        return Err(inconsistent("0 and 1 are not the bounds of the derived order".into()));
    }
    let p = ComplementedPoset::new(bounded, comp).map_err(|e| inconsistent(e.to_string()))?;
    if !is_boolean(&p) {
        return Err(inconsistent("derived complemented poset is not distributive".into()));
    }
    Ok(p)
}

/// Result of `D(B(D))` against `D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualRoundtrip {
    /// The multiplicative reducts agree; this is the guaranteed part.
    pub times_equal: bool,
    /// The additive tables agree; measured, not guaranteed.
    pub plus_equal: bool,
}

pub fn dual_roundtrip(d: &DualStructure, policy: &SubsetPolicy) -> Result<DualRoundtrip> {
    let p = boolean_from_dual(d, policy)?;
    let back = dual_from_boolean(&p)?;
    Ok(DualRoundtrip {
        times_equal: back.times == d.times && (back.zero, back.one) == (d.zero, d.one),
        plus_equal: back.plus == d.plus,
    })
}

/// `B(D(P)) = P`.
pub fn boolean_roundtrip(p: &ComplementedPoset, policy: &SubsetPolicy) -> Result<bool> {
    let d = dual_from_boolean(p)?;
    Ok(boolean_from_dual(&d, policy)?.same_as(p))
}
