//! Exhaustive generation of small labeled posets and the theorem sweeps and
//! counterexample searches built on it.
//!
//! Element `k` is added to a poset on `0..k` by choosing a down-closed set
//! `D` of strict predecessors and an up-closed set `U` of strict successors
//! with every member of `D` below every member of `U`. Each labeled poset
//! arises from exactly one choice sequence, which doubles as the cursor.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complemented::{find_complementations, ComplementedPoset};
use crate::cones::{associativity_witness, cone_lemma_violation, meets_exist, ConeOp};
use crate::distributive::is_distributive;
use crate::dual::{boolean_roundtrip, check_dual_axioms, dual_from_boolean, dual_roundtrip};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::io::PosetFile;
use crate::operator::{check_axioms, poset_from_structure, roundtrip_poset, roundtrip_structure, structure_from_poset};
use crate::poset::{BoundedPoset, FinitePoset, Order, Relation};
use crate::sample::SubsetPolicy;
use crate::set::ElemSet;
use crate::sheffer::{check_sheffer_axioms, sheffer_from_poset, sheffer_roundtrip};
use crate::symdiff::{check_sd_identities, meet_of_joins_witness, sd_associativity_witness};

/// Largest size accepted by the exhaustive routines.
pub const MAX_EXHAUSTIVE: usize = 8;

/// Environment variable holding the worker count for sharded sweeps.
pub const THREADS_ENV: &str = "POSETALG_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Filter {
    All,
    /// Bottom is element `0` and top is element `n-1`.
    Bounded,
    Complemented,
    Boolean,
    Lattice,
}

impl Filter {
    pub const ALL: [Filter; 5] = [Filter::All, Filter::Bounded, Filter::Complemented, Filter::Boolean, Filter::Lattice];

    pub fn as_str(self) -> &'static str {
        match self {
            Filter::All => "all",
            Filter::Bounded => "bounded",
            Filter::Complemented => "complemented",
            Filter::Boolean => "boolean",
            Filter::Lattice => "lattice",
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Filter {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Filter::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| format!("unknown filter `{s}`"))
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_EXHAUSTIVE {
        return Err(Error::SizeTooLarge { n, max: MAX_EXHAUSTIVE });
    }
    Ok(())
}

/// Up-set rows of the strict order built so far.
type Rows = Vec<ElemSet>;

/// Ways of placing one more element above `D` and below `U`.
fn extensions(rows: &Rows) -> Vec<(ElemSet, ElemSet)> {
    let k = rows.len();
    let down_of = |x: usize| (0..k).filter(|&y| rows[y].contains(x)).collect::<ElemSet>();
    let downs: Vec<ElemSet> = (0..k).map(down_of).collect();
    let closed = |s: ElemSet, cone: &[ElemSet]| s.iter().all(|x| cone[x].is_subset(s));
    let subsets: Vec<ElemSet> = (0..1u64 << k).map(ElemSet::from_bits).collect();
    let down_sets: Vec<ElemSet> = subsets.iter().copied().filter(|&s| closed(s, &downs)).collect();
    let up_sets: Vec<ElemSet> = subsets.iter().copied().filter(|&s| closed(s, rows)).collect();
    let mut out = Vec::new();
    for &d in &down_sets {
        // Every element of `U` must lie strictly above all of `D`.
        let above_all = d.iter().fold(ElemSet::full(k), |acc, x| acc & rows[x]) - d;
        for &u in &up_sets {
            if u.is_subset(above_all) && (d & u).is_empty() {
                out.push((d, u));
            }
        }
    }
    out
}

fn extend(rows: &Rows, (d, u): (ElemSet, ElemSet)) -> Rows {
    let k = rows.len();
    let mut next: Rows = rows.iter().enumerate().map(|(x, &r)| if d.contains(x) { r.with(k) } else { r }).collect();
    next.push(u.with(k));
    next
}

/// Resumable position inside a stream: the choice index taken at each level.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cursor {
    pub path: Vec<usize>,
}

impl fmt::Display for Cursor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.path.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join("."))
    }
}

impl FromStr for Cursor {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s.is_empty() {
            return Ok(Cursor::default());
        }
        let path = s
            .split('.')
            .map(|p| p.parse().map_err(|_| format!("bad cursor component `{p}`")))
            .collect::<std::result::Result<_, _>>()?;
        Ok(Cursor { path })
    }
}

/// Rows before a choice, the options there, and the index of the next option.
type Level = (Rows, Vec<(ElemSet, ElemSet)>, usize);

/// Depth-first generator of labeled strict orders on `m` points.
#[derive(Clone, Debug)]
struct Generator {
    m: usize,
    stack: Vec<Level>,
    started: bool,
    done: bool,
}

impl Generator {
    fn new(m: usize) -> Self {
        Generator { m, stack: Vec::new(), started: false, done: false }
    }

    /// A generator that yields only the subtree below `prefix`.
    fn below(m: usize, prefix: &[usize]) -> (Self, Rows) {
        let mut rows = Rows::new();
        for &i in prefix {
            rows = extend(&rows, extensions(&rows)[i]);
        }
        (Generator::new(m), rows)
    }

    /// Path of the most recently yielded order.
    fn cursor(&self) -> Cursor {
        Cursor { path: self.stack.iter().map(|(_, _, i)| i - 1).collect() }
    }

    fn resume(m: usize, cursor: &Cursor) -> std::result::Result<Self, String> {
        if cursor.path.len() != m {
            return Err(format!("cursor has {} levels, expected {m}", cursor.path.len()));
        }
        let mut g = Generator::new(m);
        let mut rows = Rows::new();
        for &i in &cursor.path {
            let opts = extensions(&rows);
            let choice = *opts.get(i).ok_or_else(|| format!("cursor component {i} out of range"))?;
            let next = extend(&rows, choice);
            g.stack.push((rows, opts, i + 1));
            rows = next;
        }
        g.started = true;
        Ok(g)
    }

    /// Next order in the subtree rooted at `base`.
    fn next_from(&mut self, base: &Rows) -> Option<Rows> {
        if self.done {
            return None;
        }
        let depth = self.m - base.len();
        if !self.started {
            self.started = true;
            if depth == 0 {
                self.done = true;
                return Some(base.clone());
            }
            self.stack.push((base.clone(), extensions(base), 0));
        } else if depth == 0 {
            self.done = true;
            return None;
        }
        loop {
            let (rows, opts, i) = self.stack.last_mut()?;
            if *i == opts.len() {
                self.stack.pop();
                if self.stack.is_empty() {
                    self.done = true;
                    return None;
                }
                continue;
            }
            let next = extend(rows, opts[*i]);
            *i += 1;
            if self.stack.len() == depth {
                return Some(next);
            }
            let o = extensions(&next);
            self.stack.push((next, o, 0));
        }
    }
}

fn letter_names(m: usize) -> Vec<String> {
    (0..m).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

fn strict_to_poset(rows: &Rows, names: Vec<String>) -> FinitePoset {
    let up = rows.iter().enumerate().map(|(x, &r)| r.with(x)).collect();
    FinitePoset::from_relation(names, Relation::from_up_rows(up)).expect("generated relation is an order")
}

/// Wraps a strict order on `n-2` points between a new bottom `0` and top `1`.
fn bounded_from_middle(rows: &Rows, n: usize) -> BoundedPoset {
    if n == 1 {
        return BoundedPoset::new(strict_to_poset(&Rows::from([ElemSet::EMPTY]), vec!["0".into()])).unwrap();
    }
    let top = n - 1;
    let mut up: Vec<ElemSet> = Vec::with_capacity(n);
    up.push(ElemSet::full(n));
    for (x, &r) in rows.iter().enumerate() {
        up.push(r.map(|y| y + 1).with(x + 1).with(top));
    }
    up.push(ElemSet::singleton(top));
    let mut names = vec!["0".to_string()];
    names.extend(letter_names(n - 2));
    names.push("1".into());
    let p = FinitePoset::from_relation(names, Relation::from_up_rows(up)).expect("generated relation is an order");
    BoundedPoset::new(p).expect("generated poset is bounded")
}

/// One enumerated object.
#[derive(Clone, Debug)]
pub enum Instance {
    Poset(FinitePoset),
    Complemented(ComplementedPoset),
}

impl Instance {
    pub fn poset(&self) -> &FinitePoset {
        match self {
            Instance::Poset(p) => p,
            Instance::Complemented(c) => c.poset(),
        }
    }

    pub fn to_file(&self) -> PosetFile {
        match self {
            Instance::Poset(p) => PosetFile::from_poset(p.clone()),
            Instance::Complemented(c) => PosetFile::from_complemented(c),
        }
    }
}

/// Deterministic stream of labeled posets on `n` elements passing a filter.
///
/// Complemented and Boolean streams yield one item per (poset, complementation) pair.
#[derive(Clone, Debug)]
pub struct PosetStream {
    size: usize,
    filter: Filter,
    gen: Generator,
    base: Rows,
    pending: Vec<ComplementedPoset>,
    last: Option<Cursor>,
}

impl PosetStream {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn filter(&self) -> Filter {
        self.filter
    }

    /// Number of points the underlying generator places.
    fn free_points(n: usize, filter: Filter) -> usize {
        match filter {
            Filter::All => n,
            _ => n.saturating_sub(2),
        }
    }

    fn with_generator(n: usize, filter: Filter, gen: Generator, base: Rows) -> Self {
        PosetStream { size: n, filter, gen, base, pending: Vec::new(), last: None }
    }

    /// Cursor of the last poset produced by the generator. Complemented
    /// streams resume at the start of that poset's complementations.
    pub fn cursor(&self) -> Option<Cursor> {
        self.last.clone()
    }

    /// Continues after the poset identified by `cursor`.
    pub fn resume(n: usize, filter: Filter, cursor: &Cursor) -> Result<Self> {
        check_size(n)?;
        let m = Self::free_points(n, filter);
        let gen = Generator::resume(m, cursor).map_err(|msg| Error::Parse { line: 0, msg })?;
        let mut s = Self::with_generator(n, filter, gen, Rows::new());
        s.last = Some(cursor.clone());
        Ok(s)
    }

    fn next_rows(&mut self) -> Option<Rows> {
        let rows = self.gen.next_from(&self.base)?;
        self.last = Some(self.gen.cursor());
        Some(rows)
    }
}

impl Iterator for PosetStream {
    type Item = Instance;

    fn next(&mut self) -> Option<Instance> {
        if self.size == 0 {
            return None;
        }
        loop {
            if let Some(c) = self.pending.pop() {
                return Some(Instance::Complemented(c));
            }
            let rows = self.next_rows()?;
            match self.filter {
                Filter::All => return Some(Instance::Poset(strict_to_poset(&rows, letter_names(self.size)))),
                Filter::Bounded => return Some(Instance::Poset(bounded_from_middle(&rows, self.size).into_poset())),
                Filter::Lattice => {
                    let p = bounded_from_middle(&rows, self.size);
                    if meets_exist(&p) {
                        return Some(Instance::Poset(p.into_poset()));
                    }
                }
                Filter::Complemented | Filter::Boolean => {
                    let p = bounded_from_middle(&rows, self.size);
                    let mut found: Vec<ComplementedPoset> = find_complementations(&p)
                        .into_iter()
                        .map(|c| ComplementedPoset::new(p.clone(), c).expect("found complementation is valid"))
                        .filter(|c| self.filter == Filter::Complemented || is_distributive(c))
                        .collect();
                    found.reverse();
                    self.pending = found;
                }
            }
        }
    }
}

/// Streams all labeled posets on `n` elements passing `filter`.
pub fn enumerate_posets(n: usize, filter: Filter) -> Result<PosetStream> {
    check_size(n)?;
    let m = PosetStream::free_points(n, filter);
    Ok(PosetStream::with_generator(n, filter, Generator::new(m), Rows::new()))
}

/// Cursor prefixes splitting the stream into independent shards, in stream order.
fn shard_prefixes(m: usize) -> Vec<Vec<usize>> {
    let depth = m.min(3);
    let mut out = vec![(Vec::new(), Rows::new())];
    for _ in 0..depth {
        out = out
            .into_iter()
            .flat_map(|(path, rows)| {
                extensions(&rows)
                    .into_iter()
                    .enumerate()
                    .map(move |(i, choice)| {
                        let mut p = path.clone();
                        p.push(i);
                        (p, extend(&rows, choice))
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out.into_iter().map(|(p, _)| p).collect()
}

fn shard(n: usize, filter: Filter, prefix: &[usize]) -> PosetStream {
    let m = PosetStream::free_points(n, filter);
    let (mut gen, base) = Generator::below(m, prefix);
    // Cursors report full paths; the prefix is replayed separately.
    gen.stack.clear();
    let mut s = PosetStream::with_generator(n, filter, gen, base);
    s.last = None;
    s
}

/// Runs `f` on every shard of the stream, in parallel, returning results in stream order.
fn par_shards<T: Send>(n: usize, filter: Filter, f: impl Fn(PosetStream) -> T + Sync) -> Vec<T> {
    let m = PosetStream::free_points(n, filter);
    let prefixes = shard_prefixes(m);
    let run = || prefixes.par_iter().map(|p| f(shard(n, filter, p))).collect();
    match worker_count() {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map(|pool| pool.install(run))
            .unwrap_or_else(|_| run()),
        None => run(),
    }
}

fn worker_count() -> Option<usize> {
    std::env::var(THREADS_ENV).ok()?.parse().ok().filter(|&k| k > 0)
}

/// Counts reported for a size and filter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub size: usize,
    /// Items yielded by the stream.
    pub stream: u64,
    /// For filters that fix the bounds' labels, the count over all labelings
    /// of the bounds, `n(n-1)` times the stream count (`n ≥ 2`).
    pub all_labels: u64,
}

pub fn count(n: usize, filter: Filter) -> Result<Counts> {
    check_size(n)?;
    let stream: u64 = par_shards(n, filter, |s| s.count() as u64).into_iter().sum();
    let all_labels = match filter {
        Filter::All => stream,
        _ if n >= 2 => stream * (n * (n - 1)) as u64,
        _ => stream,
    };
    Ok(Counts { size: n, stream, all_labels })
}

/// Number of reflexive, antisymmetric, transitive relations on `n` labeled
/// points, by filtering every candidate relation. Feasible for `n ≤ 4`.
pub fn naive_count(n: usize) -> u64 {
    assert!(n <= 5, "naive recount is exponential in n²");
    let off: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|(x, y)| x != y).collect();
    let mut total = 0;
    for mask in 0u64..1 << off.len() {
        let mut leq = vec![vec![false; n]; n];
        for (i, &(x, y)) in off.iter().enumerate() {
            leq[x][y] = mask >> i & 1 == 1;
        }
        for (x, row) in leq.iter_mut().enumerate() {
            row[x] = true;
        }
        let antisymmetric = (0..n).all(|x| (0..n).all(|y| x == y || !(leq[x][y] && leq[y][x])));
        let transitive =
            (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| !(leq[x][y] && leq[y][z]) || leq[x][z])));
        if antisymmetric && transitive {
            total += 1;
        }
    }
    total
}

/// Unlabeled canonical key: the lexicographically least up-set matrix over
/// all relabelings.
pub fn canonical_key(p: &FinitePoset) -> Vec<u64> {
    let n = p.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<u64>> = None;
    permute(&mut perm, 0, &mut |perm| {
        // perm[new] = old
        let mut inverse = vec![0; n];
        for (new, &old) in perm.iter().enumerate() {
            inverse[old] = new;
        }
        let key: Vec<u64> = perm.iter().map(|&old| p.up_set(old).map(|y| inverse[y]).bits()).collect();
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    });
    best.unwrap_or_default()
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

/// Number of isomorphism classes among the stream's posets.
pub fn count_unlabeled(n: usize, filter: Filter) -> Result<usize> {
    let keys = enumerate_posets(n, filter)?.map(|i| canonical_key(i.poset()));
    Ok(keys.collect::<std::collections::BTreeSet<_>>().len())
}

/// Theorem tags accepted by [`exhaustive_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem {
    /// `A(P)` satisfies the operator-structure axioms.
    OperatorAxioms,
    /// `P(A(P))` is a bounded poset.
    OperatorPoset,
    /// `P(A(P)) = P` and `A(P(A)) = A`.
    RoundtripOperator,
    /// The finite cone lemma.
    ConeLemma,
    ShefferAxioms,
    ShefferRoundtrip,
    DualAxioms,
    /// `B(D(P)) = P` and equal multiplicative reducts of `D(B(D))`.
    DualRoundtrip,
    /// The eight symmetric-difference identities.
    SdIdentities,
    /// `x+y = Min U(Max L(Min U(x,y), Min U(x′,y′)))` on Boolean posets.
    MeetOfJoins,
}

impl Theorem {
    pub const ALL: [Theorem; 10] = [
        Theorem::OperatorAxioms,
        Theorem::OperatorPoset,
        Theorem::RoundtripOperator,
        Theorem::ConeLemma,
        Theorem::ShefferAxioms,
        Theorem::ShefferRoundtrip,
        Theorem::DualAxioms,
        Theorem::DualRoundtrip,
        Theorem::SdIdentities,
        Theorem::MeetOfJoins,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Theorem::OperatorAxioms => "operator-axioms",
            Theorem::OperatorPoset => "operator-poset",
            Theorem::RoundtripOperator => "roundtrip-operator",
            Theorem::ConeLemma => "cone-lemma",
            Theorem::ShefferAxioms => "sheffer-axioms",
            Theorem::ShefferRoundtrip => "sheffer-roundtrip",
            Theorem::DualAxioms => "dual-axioms",
            Theorem::DualRoundtrip => "dual-roundtrip",
            Theorem::SdIdentities => "sd-identities",
            Theorem::MeetOfJoins => "meet-of-joins",
        }
    }

    /// The instances the theorem quantifies over.
    pub fn scope(self) -> Filter {
        match self {
            Theorem::OperatorAxioms | Theorem::OperatorPoset | Theorem::RoundtripOperator | Theorem::ConeLemma => {
                Filter::Bounded
            }
            Theorem::ShefferAxioms | Theorem::ShefferRoundtrip | Theorem::SdIdentities => Filter::Complemented,
            Theorem::DualAxioms | Theorem::DualRoundtrip | Theorem::MeetOfJoins => Filter::Boolean,
        }
    }

    /// `None` when the theorem holds on the instance, else a description.
    pub fn violation(self, inst: &Instance) -> Option<String> {
        let policy = SubsetPolicy::default();
        let comp = || match inst {
            Instance::Complemented(c) => c,
            Instance::Poset(_) => unreachable!("scope yields complemented instances"),
        };
        let err = |e: Error| Some(e.to_string());
        let p = inst.poset();
        match self {
            Theorem::OperatorAxioms => match structure_from_poset(p) {
                Ok(st) => check_axioms(&st).failure_summary(),
                Err(e) => err(e),
            },
            Theorem::OperatorPoset => match structure_from_poset(p).and_then(|st| poset_from_structure(&st)) {
                Ok(_) => None,
                Err(e) => err(e),
            },
            Theorem::RoundtripOperator => {
                let st = match structure_from_poset(p) {
                    Ok(st) => st,
                    Err(e) => return err(e),
                };
                match (roundtrip_poset(p), roundtrip_structure(&st)) {
                    (Ok(true), Ok(true)) => None,
                    (Err(e), _) | (_, Err(e)) => err(e),
                    _ => Some("round-trip differs".into()),
                }
            }
            Theorem::ConeLemma => cone_lemma_violation(p),
            Theorem::ShefferAxioms => check_sheffer_axioms(&sheffer_from_poset(comp())).failure_summary(),
            Theorem::ShefferRoundtrip => (!sheffer_roundtrip(comp())).then(|| "round-trip differs".into()),
            Theorem::DualAxioms => match dual_from_boolean(comp()) {
                Ok(d) => check_dual_axioms(&d, &policy).failure_summary(),
                Err(e) => err(e),
            },
            Theorem::DualRoundtrip => {
                let c = comp();
                let d = match dual_from_boolean(c) {
                    Ok(d) => d,
                    Err(e) => return err(e),
                };
                match (boolean_roundtrip(c, &policy), dual_roundtrip(&d, &policy)) {
                    (Ok(true), Ok(rt)) if rt.times_equal => None,
                    (Err(e), _) | (_, Err(e)) => err(e),
                    _ => Some("round-trip differs".into()),
                }
            }
            Theorem::SdIdentities => check_sd_identities(comp()).failure_summary(),
            Theorem::MeetOfJoins => meet_of_joins_witness(comp()).map(|w| w.render(p.names())),
        }
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.tag() == s)
            .ok_or_else(|| format!("unknown theorem `{s}`"))
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug)]
pub struct SizeTally {
    pub size: usize,
    pub instances: u64,
    pub failures: u64,
}

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub theorem: Theorem,
    pub scope: Filter,
    pub per_size: Vec<SizeTally>,
    /// First failing instance in stream order, with a description.
    pub first_failure: Option<(PosetFile, String)>,
}

impl SweepReport {
    pub fn instances(&self) -> u64 {
        self.per_size.iter().map(|t| t.instances).sum()
    }

    pub fn failures(&self) -> u64 {
        self.per_size.iter().map(|t| t.failures).sum()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "theorem {} over {} instances", self.theorem, self.scope)?;
        for t in &self.per_size {
            writeln!(f, "  n={}: {} failures / {} instances", t.size, t.failures, t.instances)?;
        }
        if let Some((file, why)) = &self.first_failure {
            writeln!(f, "first failure: {why}")?;
            write!(f, "{}", file.to_text())?;
        }
        write!(f, "{} failures / {} instances", self.failures(), self.instances())
    }
}

/// Checks `theorem` on every instance in its scope with `1 ≤ n ≤ n_max`.
pub fn exhaustive_check(theorem: Theorem, n_max: usize) -> Result<SweepReport> {
    check_size(n_max)?;
    let scope = theorem.scope();
    let mut per_size = Vec::new();
    let mut first_failure = None;
    for n in 1..=n_max {
        let shards = par_shards(n, scope, |stream| {
            let mut tally = (0u64, 0u64, None);
            for inst in stream {
                tally.0 += 1;
                if let Some(why) = theorem.violation(&inst) {
                    tally.1 += 1;
                    tally.2.get_or_insert((inst.to_file(), why));
                }
            }
            tally
        });
        let mut tally = SizeTally { size: n, instances: 0, failures: 0 };
        for (count, fails, first) in shards {
            tally.instances += count;
            tally.failures += fails;
            if first_failure.is_none() {
                first_failure = first;
            }
        }
        per_size.push(tally);
    }
    Ok(SweepReport { theorem, scope, per_size, first_failure })
}

/// Properties searched by [`find_counterexample`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    MaxlAssociativity,
    MinuAssociativity,
    /// `Max L` associativity among lattices; no counterexample exists.
    MaxlAssociativityLattice,
    SdAssociativity,
    /// The meet-of-joins identity over all complemented posets.
    MeetOfJoinsOnComplemented,
}

impl Property {
    pub const ALL: [Property; 5] = [
        Property::MaxlAssociativity,
        Property::MinuAssociativity,
        Property::MaxlAssociativityLattice,
        Property::SdAssociativity,
        Property::MeetOfJoinsOnComplemented,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Property::MaxlAssociativity => "maxl-associativity",
            Property::MinuAssociativity => "minu-associativity",
            Property::MaxlAssociativityLattice => "maxl-associativity-lattice",
            Property::SdAssociativity => "sd-associativity",
            Property::MeetOfJoinsOnComplemented => "meet-of-joins-on-complemented",
        }
    }

    pub fn scope(self) -> Filter {
        match self {
            Property::MaxlAssociativity | Property::MinuAssociativity => Filter::All,
            Property::MaxlAssociativityLattice => Filter::Lattice,
            Property::SdAssociativity | Property::MeetOfJoinsOnComplemented => Filter::Complemented,
        }
    }

    /// Rendered witness when the instance violates the property.
    ///
    /// `Max L` is only searched on posets with a least element and `Min U`
    /// on posets with a greatest one, so that neither operator returns `∅`.
    pub fn witness(self, inst: &Instance) -> Option<String> {
        let p = inst.poset();
        let names = p.names();
        let has_bottom = p.minimal(p.carrier()).len() == 1;
        let has_top = p.maximal(p.carrier()).len() == 1;
        match (self, inst) {
            (Property::MaxlAssociativity, _) if !has_bottom => None,
            (Property::MinuAssociativity, _) if !has_top => None,
            (Property::MaxlAssociativity | Property::MaxlAssociativityLattice, _) => {
                associativity_witness(p, ConeOp::MaxL).map(|w| w.render(names))
            }
            (Property::MinuAssociativity, _) => associativity_witness(p, ConeOp::MinU).map(|w| w.render(names)),
            (Property::SdAssociativity, Instance::Complemented(c)) => {
                sd_associativity_witness(c).map(|w| w.render(names))
            }
            (Property::MeetOfJoinsOnComplemented, Instance::Complemented(c)) => {
                meet_of_joins_witness(c).map(|w| w.render(names))
            }
            _ => None,
        }
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Property::ALL
            .into_iter()
            .find(|p| p.tag() == s)
            .ok_or_else(|| format!("unknown property `{s}`"))
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug)]
pub struct Counterexample {
    pub property: Property,
    pub poset: PosetFile,
    pub witness: String,
    /// The search found nothing within the size bound and this is a bundled fixture.
    pub fallback: bool,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let origin = if self.fallback { " (bundled fixture; none found by search)" } else { "" };
        writeln!(
            f,
            "{} fails on a {}-element poset{origin}: {}",
            self.property,
            self.poset.poset.len(),
            self.witness
        )?;
        write!(f, "{}", self.poset.to_text())
    }
}

/// Smallest instance (by size, then stream order) violating `property`.
pub fn find_counterexample(property: Property, n_max: usize) -> Result<Option<Counterexample>> {
    check_size(n_max)?;
    for n in 1..=n_max {
        let found = par_shards(n, property.scope(), |stream| {
            stream.into_iter().find_map(|inst| property.witness(&inst).map(|w| (inst.to_file(), w)))
        });
        if let Some((poset, witness)) = found.into_iter().flatten().next() {
            return Ok(Some(Counterexample { property, poset, witness, fallback: false }));
        }
    }
    if property == Property::MeetOfJoinsOnComplemented {
        let fig2 = fixtures::figure2();
        let c = fig2.complemented()?;
        let inst = Instance::Complemented(c);
        if let Some(witness) = property.witness(&inst) {
            return Ok(Some(Counterexample { property, poset: fig2, witness, fallback: true }));
        }
    }
    Ok(None)
}
