//! Exit-gate checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use posetalg::cones::{bracketings, cone_lemma_violation, ConeOp};
use posetalg::distributive::lower_sides;
use posetalg::dual::{boolean_roundtrip, dual_roundtrip};
use posetalg::enumerate::{count, enumerate_posets, exhaustive_check, naive_count, Filter, Theorem};
use posetalg::operator::{roundtrip_poset, roundtrip_structure};
use posetalg::sheffer::sheffer_roundtrip;
use posetalg::symdiff::{check_sd_identities, meet_of_joins_witness, sd_bracketings, sym_diff};
use posetalg::{
    check_axioms, check_dual_axioms, check_sheffer_axioms, dual_from_boolean, fixtures, sheffer_from_poset,
    structure_from_poset, BoundedPoset, ComplementedPoset, ElemSet, FinitePoset, Order, Relation, SubsetPolicy,
};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn comp(k: usize) -> ComplementedPoset {
    fixtures::figure(k).complemented().unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took <= limit, || format!("took {took:?}, limit {limit:?}"))
}

fn c1_tables() -> Result<String, String> {
    let mut cells = Vec::new();
    for (fig, golden, n) in [("fig2", "fig2-sd.txt", 10), ("fig3", "fig3-sd.txt", 10), ("fig4", "fig4-sd.txt", 12)] {
        let start = Instant::now();
        let out = Command::new(env!("CARGO_BIN_EXE_posetalg"))
            .current_dir(root())
            .args(["table", &format!("fixtures/{fig}"), "--op", "sd", "--format", "golden"])
            .output()
            .map_err(|e| e.to_string())?;
        within(start, Duration::from_secs(1))?;
        ensure(out.status.success(), || format!("{fig}: exit {:?}", out.status.code()))?;
        let expected = std::fs::read(root().join("fixtures/golden").join(golden)).map_err(|e| e.to_string())?;
        ensure(out.stdout == expected, || format!("{fig} differs from {golden}"))?;
        let rows = expected.iter().filter(|&&b| b == b'\n').count() - 2;
        ensure(rows == n, || format!("{golden}: {rows} rows"))?;
        cells.push(format!("{}", n * n));
    }
    Ok(format!("cells {}", cells.join("/")))
}

fn c2_maxl() -> Result<String, String> {
    let p = fixtures::figure1().poset;
    let [c, d, e] = ["c", "d", "e"].map(|x| p.index_of(x).unwrap());
    let (lhs, rhs) = bracketings(&p, ConeOp::MaxL, c, d, e);
    ensure(lhs == p.elem("0") && rhs == p.elem("b"), || format!("got {} and {}", p.render(lhs), p.render(rhs)))?;
    Ok("{0} vs {b}".into())
}

fn c3_figure2() -> Result<String, String> {
    let p = fixtures::figure2().poset;
    let [a, b] = ["a", "b"].map(|x| p.index_of(x).unwrap());
    let (lhs, rhs) = lower_sides(&p, a, b, p.elem("c"));
    ensure(lhs == p.set(&["0", "c"]) && rhs == p.elem("0"), || format!("got {} and {}", p.render(lhs), p.render(rhs)))?;
    Ok("{0,c} vs {0}".into())
}

fn c4_meet_of_joins() -> Result<String, String> {
    for k in [3, 4] {
        ensure(meet_of_joins_witness(&comp(k)).is_none(), || format!("fails on fig{k}"))?;
    }
    let p = comp(2);
    let w = meet_of_joins_witness(&p).ok_or("holds on fig2")?;
    let [b, c] = ["b", "c"].map(|x| p.index_of(x).unwrap());
    ensure(w.args() == [b, c], || format!("witness {}", w.render(p.names())))?;
    ensure(w.lhs == p.elem("0") && w.rhs == p.set(&["a'", "d'"]), || w.render(p.names()))?;
    Ok("fig2 (b,c): {0} vs {a',d'}".into())
}

fn c5_sd_associativity() -> Result<String, String> {
    let p = comp(4);
    let [a, b, c] = ["a", "b", "c"].map(|x| p.index_of(x).unwrap());
    let (lhs, rhs) = sd_bracketings(&p, a, b, c);
    ensure(lhs == p.elem("d'") && rhs == p.set(&["a'", "d'"]), || format!("got {} and {}", p.render(lhs), p.render(rhs)))?;
    Ok("{d'} vs {a',d'}".into())
}

fn c6_identities() -> Result<String, String> {
    for k in [2, 3, 4] {
        let r = check_sd_identities(&comp(k));
        ensure(r.all_pass() && r.verdicts.len() == 8, || format!("fig{k}:\n{r}"))?;
    }
    Ok("8/8 on fig2, fig3, fig4".into())
}

fn c7_axioms() -> Result<String, String> {
    let policy = SubsetPolicy::default();
    for k in [2, 3, 4] {
        let p = comp(k);
        let op = check_axioms(&structure_from_poset(&p).map_err(|e| e.to_string())?);
        ensure(op.all_pass() && op.verdicts.len() == 6, || format!("fig{k}:\n{op}"))?;
        let sh = check_sheffer_axioms(&sheffer_from_poset(&p));
        ensure(sh.all_pass() && sh.verdicts.len() == 7, || format!("fig{k}:\n{sh}"))?;
    }
    for k in [3, 4] {
        let p = comp(k);
        ensure(policy.exhaustive(p.len()), || "subset check would be sampled".into())?;
        let d = check_dual_axioms(&dual_from_boolean(&p).map_err(|e| e.to_string())?, &policy);
        ensure(d.all_pass() && d.verdicts.len() == 6, || format!("fig{k}:\n{d}"))?;
    }
    Ok("operator 6/6, Sheffer 7/7, dual 6/6 (subset pairs exhaustive)".into())
}

fn c8_roundtrips() -> Result<String, String> {
    let policy = SubsetPolicy::default();
    let e = |e: posetalg::Error| e.to_string();
    for k in [2, 3, 4] {
        let p = comp(k);
        ensure(roundtrip_poset(&p).map_err(e)?, || format!("P(A(P)) on fig{k}"))?;
        ensure(roundtrip_structure(&structure_from_poset(&p).map_err(e)?).map_err(e)?, || format!("A(P(A)) on fig{k}"))?;
        ensure(sheffer_roundtrip(&p), || format!("Sheffer on fig{k}"))?;
    }
    for k in [3, 4] {
        let p = comp(k);
        ensure(boolean_roundtrip(&p, &policy).map_err(e)?, || format!("B(D(P)) on fig{k}"))?;
        let rt = dual_roundtrip(&dual_from_boolean(&p).map_err(e)?, &policy).map_err(e)?;
        ensure(rt.times_equal, || format!("D(B(D)) reducts on fig{k}"))?;
    }
    Ok("operator, Sheffer, dual".into())
}

fn c9_sweeps() -> Result<String, String> {
    // Every labeling of every bounded poset, not only those with fixed bound labels.
    let bounded_theorems = [Theorem::OperatorAxioms, Theorem::OperatorPoset, Theorem::RoundtripOperator, Theorem::ConeLemma];
    let mut labeled = 0;
    for n in 1..=5 {
        for inst in enumerate_posets(n, Filter::All).map_err(|e| e.to_string())? {
            if inst.poset().bounds().is_none() {
                continue;
            }
            labeled += 1;
            for t in bounded_theorems {
                if let Some(why) = t.violation(&inst) {
                    return Err(format!("{t}: {why}\n{}", inst.to_file().to_text()));
                }
            }
            ensure(cone_lemma_violation(inst.poset()).is_none(), || "cone-lemma".into())?;
        }
    }
    let mut pairs = 0;
    for t in [Theorem::ShefferRoundtrip, Theorem::DualRoundtrip] {
        let r = exhaustive_check(t, 8).map_err(|e| e.to_string())?;
        ensure(r.passed(), || r.to_string())?;
        pairs += r.instances();
    }
    Ok(format!("{labeled} labeled bounded posets, {pairs} complemented/Boolean instances, 0 violations"))
}

/// A lattice with an independent meet and join, plus an optional complement.
struct Lattice {
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    comp: Option<Vec<usize>>,
}

impl Lattice {
    fn len(&self) -> usize {
        self.meet.len()
    }

    fn poset(&self) -> FinitePoset {
        let n = self.len();
        let names = (0..n).map(|i| format!("e{i}")).collect();
        FinitePoset::from_relation(names, Relation::from_fn(n, |x, y| self.meet[x][y] == x)).unwrap()
    }
}

/// Intersection-closed family over a small ground set, ordered by inclusion.
fn closure_lattice(rng: &mut ChaCha8Rng) -> Lattice {
    loop {
        let ground = rng.gen_range(2..=5u32);
        let full = (1u32 << ground) - 1;
        let mut family = vec![full];
        for _ in 0..rng.gen_range(1..=6) {
            family.push(rng.gen_range(0..=full));
        }
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..family.len() {
                for j in 0..family.len() {
                    let m = family[i] & family[j];
                    if !family.contains(&m) {
                        family.push(m);
                        changed = true;
                    }
                }
            }
        }
        if family.len() > 16 {
            continue;
        }
        family.sort_unstable();
        family.dedup();
        family.shuffle(rng);
        let idx = |s: u32| family.iter().position(|&f| f == s).unwrap();
        let hull = |s: u32| family.iter().copied().filter(|&f| f & s == s).fold(full, |a, f| a & f);
        let n = family.len();
        let meet = (0..n).map(|x| (0..n).map(|y| idx(family[x] & family[y])).collect()).collect();
        let join = (0..n).map(|x| (0..n).map(|y| idx(hull(family[x] | family[y]))).collect()).collect();
        return Lattice { meet, join, comp: None };
    }
}

/// Horizontal sum of Boolean blocks, optionally times the 2-element chain.
fn complemented_lattice(rng: &mut ChaCha8Rng) -> Lattice {
    #[derive(Clone, Copy, PartialEq)]
    enum E {
        Bottom,
        Top,
        Mid(usize, u32),
    }
    let mut blocks: Vec<u32> = Vec::new();
    let mut mids = 0;
    loop {
        let k = rng.gen_range(2..=3u32);
        let m = (1usize << k) - 2;
        if mids + m + 2 > 16 || (!blocks.is_empty() && rng.gen_bool(0.4)) {
            break;
        }
        blocks.push(k);
        mids += m;
    }
    let mut elems = vec![E::Bottom, E::Top];
    for (b, &k) in blocks.iter().enumerate() {
        for s in 1..(1u32 << k) - 1 {
            elems.push(E::Mid(b, s));
        }
    }
    let full = |b: usize| (1u32 << blocks[b]) - 1;
    let meet_e = |x: E, y: E| match (x, y) {
        (E::Bottom, _) | (_, E::Bottom) => E::Bottom,
        (E::Top, z) | (z, E::Top) => z,
        (E::Mid(i, s), E::Mid(j, t)) if i == j && s & t != 0 => E::Mid(i, s & t),
        _ => E::Bottom,
    };
    let join_e = |x: E, y: E| match (x, y) {
        (E::Top, _) | (_, E::Top) => E::Top,
        (E::Bottom, z) | (z, E::Bottom) => z,
        (E::Mid(i, s), E::Mid(j, t)) if i == j && s | t != full(i) => E::Mid(i, s | t),
        _ => E::Top,
    };
    let comp_e = |x: E| match x {
        E::Bottom => E::Top,
        E::Top => E::Bottom,
        E::Mid(i, s) => E::Mid(i, full(i) & !s),
    };
    let product = elems.len() * 2 <= 16 && rng.gen_bool(0.5);
    let layers: &[bool] = if product { &[false, true] } else { &[false] };
    let mut all: Vec<(E, bool)> = layers.iter().flat_map(|&l| elems.iter().map(move |&e| (e, l))).collect();
    all.shuffle(rng);
    let idx = |v: (E, bool)| all.iter().position(|&w| w == v).unwrap();
    let n = all.len();
    let meet = (0..n).map(|x| (0..n).map(|y| idx((meet_e(all[x].0, all[y].0), all[x].1 && all[y].1))).collect()).collect();
    let join = (0..n).map(|x| (0..n).map(|y| idx((join_e(all[x].0, all[y].0), all[x].1 || all[y].1))).collect()).collect();
    let comp = (0..n).map(|x| idx((comp_e(all[x].0), product && !all[x].1))).collect();
    Lattice { meet, join, comp: Some(comp) }
}

fn check_cones(l: &Lattice, p: &FinitePoset) -> Result<(), String> {
    let s = ElemSet::singleton;
    for x in 0..l.len() {
        for y in 0..l.len() {
            ensure(p.max_l(s(x), s(y)) == s(l.meet[x][y]), || format!("max_l at ({x},{y})"))?;
            ensure(p.min_u(s(x), s(y)) == s(l.join[x][y]), || format!("min_u at ({x},{y})"))?;
        }
    }
    Ok(())
}

fn c10_oracle() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(posetalg::DEFAULT_SEED);
    let mut largest = 0;
    for _ in 0..50 {
        let l = closure_lattice(&mut rng);
        largest = largest.max(l.len());
        check_cones(&l, &l.poset())?;
    }
    let mut complemented = 0;
    for _ in 0..50 {
        let l = complemented_lattice(&mut rng);
        let p = l.poset();
        check_cones(&l, &p)?;
        let comp = l.comp.clone().unwrap();
        let c = ComplementedPoset::new(BoundedPoset::new(p).map_err(|e| e.to_string())?, comp.clone())
            .map_err(|e| e.to_string())?;
        for x in 0..l.len() {
            for y in 0..l.len() {
                let expected = l.join[l.meet[comp[x]][y]][l.meet[x][comp[y]]];
                let got = sym_diff(&c, ElemSet::singleton(x), ElemSet::singleton(y)).map_err(|e| e.to_string())?;
                ensure(got == ElemSet::singleton(expected), || format!("sym_diff at ({x},{y})"))?;
            }
        }
        complemented += 1;
        largest = largest.max(l.len());
    }
    Ok(format!("50 closure lattices, {complemented} complemented lattices, up to {largest} elements"))
}

fn c11_counts() -> Result<String, String> {
    let mut counts = Vec::new();
    for n in 1..=4 {
        let stream = count(n, Filter::All).map_err(|e| e.to_string())?.stream;
        let naive = naive_count(n);
        ensure(stream == naive, || format!("n={n}: stream {stream}, naive {naive}"))?;
        counts.push(stream.to_string());
    }
    Ok(format!("counts {}", counts.join(", ")))
}

type Criterion = (&'static str, fn() -> Result<String, String>, Duration);

fn main() {
    let secs = Duration::from_secs;
    let criteria: [Criterion; 11] = [
        ("table reproduction", c1_tables, secs(3)),
        ("Max L non-associativity", c2_maxl, secs(1)),
        ("non-distributivity", c3_figure2, secs(1)),
        ("meet-of-joins boundary", c4_meet_of_joins, secs(1)),
        ("symmetric difference non-associativity", c5_sd_associativity, secs(1)),
        ("identity suite", c6_identities, secs(1)),
        ("axiom suites", c7_axioms, secs(30)),
        ("round-trips", c8_roundtrips, secs(10)),
        ("exhaustive sweeps", c9_sweeps, secs(600)),
        ("oracle equivalence", c10_oracle, secs(30)),
        ("enumeration sanity", c11_counts, secs(10)),
    ];
    // Keep a failing criterion's panic message on our line instead of stderr noise.
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or(e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let took = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            if took > *limit {
                Err(format!("took {took:.2?}, limit {limit:?}"))
            } else {
                Ok(detail)
            }
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {name} ({took:.2?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} ({took:.2?}): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
