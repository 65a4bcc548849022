//! Verdict reports for axiom and identity checks.

use std::fmt;

use crate::set::{self, ElemSet};

/// The first violating instantiation of a law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Variable names paired with the element (or subset) they were bound to.
    pub bindings: Vec<(&'static str, ElemSet)>,
    pub lhs: ElemSet,
    pub rhs: ElemSet,
    /// Intermediate values of nested expressions, innermost first.
    pub trace: Vec<(String, ElemSet)>,
}

impl Witness {
    pub fn new(vars: &[&'static str], args: &[usize], lhs: ElemSet, rhs: ElemSet) -> Self {
        Witness {
            bindings: vars
                .iter()
                .zip(args)
                .map(|(&v, &a)| (v, ElemSet::singleton(a)))
                .collect(),
            lhs,
            rhs,
            trace: Vec::new(),
        }
    }

    pub fn with_trace(mut self, trace: Vec<(String, ElemSet)>) -> Self {
        self.trace = trace;
        self
    }

    /// Element arguments, for witnesses whose bindings are all singletons.
    pub fn args(&self) -> Vec<usize> {
        self.bindings.iter().filter_map(|(_, s)| s.single()).collect()
    }

    pub fn render(&self, names: &[String]) -> String {
        let binds: Vec<String> = self
            .bindings
            .iter()
            .map(|(v, s)| format!("{v}={}", set::braced(names, *s)))
            .collect();
        let mut out = format!(
            "at {}: lhs {}, rhs {}",
            binds.join(", "),
            set::braced(names, self.lhs),
            set::braced(names, self.rhs)
        );
        for (label, s) in &self.trace {
            out.push_str(&format!("; {label} = {}", set::braced(names, *s)));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    /// Axiom label such as `(iv)`.
    pub axiom: &'static str,
    pub statement: &'static str,
    /// Which law of the axiom failed, when it bundles several.
    pub failed_law: Option<&'static str>,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub title: String,
    pub names: Vec<String>,
    pub verdicts: Vec<Verdict>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(Verdict::holds)
    }

    pub fn verdict(&self, axiom: &str) -> &Verdict {
        self.verdicts
            .iter()
            .find(|v| v.axiom == axiom)
            .unwrap_or_else(|| panic!("no axiom {axiom} in report"))
    }

    pub fn holds(&self, axiom: &str) -> bool {
        self.verdict(axiom).holds()
    }

    pub fn first_failure(&self) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| !v.holds())
    }

    /// One-line summary of the first failure, for error messages.
    pub fn failure_summary(&self) -> Option<String> {
        self.first_failure().map(|v| {
            let w = v.witness.as_ref().expect("failed verdict has a witness");
            format!("{} {} {}", v.axiom, v.failed_law.unwrap_or(v.statement), w.render(&self.names))
        })
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        let label_w = self.verdicts.iter().map(|v| v.axiom.len()).max().unwrap_or(0);
        for v in &self.verdicts {
            let status = if v.holds() { "pass" } else { "FAIL" };
            writeln!(f, "  {:<label_w$}  {status}  {}", v.axiom, v.statement)?;
            if let Some(w) = &v.witness {
                if let Some(law) = v.failed_law {
                    writeln!(f, "  {:<label_w$}        law: {law}", "")?;
                }
                writeln!(f, "  {:<label_w$}        {}", "", w.render(&self.names))?;
            }
        }
        let passed = self.verdicts.iter().filter(|v| v.holds()).count();
        write!(f, "{passed}/{} pass", self.verdicts.len())
    }
}

/// Scans all `k`-tuples over `0..n` in lexicographic order and returns the
/// first value `check` produces.
pub(crate) fn first_tuple<T>(
    n: usize,
    k: usize,
    mut check: impl FnMut(&[usize]) -> Option<T>,
) -> Option<T> {
    if n == 0 {
        return None;
    }
    let mut t = vec![0; k];
    loop {
        if let Some(found) = check(&t) {
            return Some(found);
        }
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < n {
                break;
            }
            t[i] = 0;
        }
    }
}

/// One law of an axiom: variable names plus an evaluator returning both sides.
pub(crate) struct Law<'a> {
    pub name: &'static str,
    pub vars: &'static [&'static str],
    #[allow(clippy::type_complexity)]
    pub eval: Box<dyn Fn(&[usize]) -> Option<Witness> + 'a>,
}

impl<'a> Law<'a> {
    /// A law `lhs(args) = rhs(args)` compared as sets.
    pub fn equation(
        name: &'static str,
        vars: &'static [&'static str],
        sides: impl Fn(&[usize]) -> (ElemSet, ElemSet) + 'a,
    ) -> Self {
        Law {
            name,
            vars,
            eval: Box::new(move |args| {
                let (l, r) = sides(args);
                (l != r).then(|| Witness::new(vars, args, l, r))
            }),
        }
    }

    pub fn custom(
        name: &'static str,
        vars: &'static [&'static str],
        eval: impl Fn(&[usize]) -> Option<Witness> + 'a,
    ) -> Self {
        Law { name, vars, eval: Box::new(eval) }
    }
}

/// Checks every law of an axiom over all element tuples; the first failing
/// law's lexicographically first tuple is reported.
pub(crate) fn check_axiom(n: usize, axiom: &'static str, statement: &'static str, laws: Vec<Law<'_>>) -> Verdict {
    for law in &laws {
        if let Some(w) = first_tuple(n, law.vars.len(), |t| (law.eval)(t)) {
            return Verdict {
                axiom,
                statement,
                failed_law: (laws.len() > 1).then_some(law.name),
                witness: Some(w),
            };
        }
    }
    Verdict { axiom, statement, failed_law: None, witness: None }
}
